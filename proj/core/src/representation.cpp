// Copyright 2026 The symtest Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <cmath>

#include "symtest/groups.hpp"

namespace symtest {

namespace {

// State vectors may be larger than the dense-matrix cap.
constexpr long kMaxStateDim = 1L << 24;
constexpr double kTableUnitaryTol = 1e-9;
constexpr double kPhaseTol = 1e-8;
constexpr std::size_t kTableClosureLimit = 256;

void require_dense_ok(long dim, const std::string& what) {
  if (dim > kMaxDim) {
    throw ValidationError(what + ": dimension " + std::to_string(dim) + " exceeds cap " + std::to_string(kMaxDim));
  }
}

}  // namespace

PermutationRep::PermutationRep(FiniteGroup group, int local_dim) : group_(std::move(group)), d_(local_dim) {
  if (d_ < 1) throw ValidationError("permutation rep: local dimension must be positive");
  dim_ = 1;
  for (int j = 0; j < group_.degree(); ++j) {
    dim_ *= d_;
    if (dim_ > kMaxStateDim) throw ValidationError("permutation rep: total dimension too large");
  }
}

long PermutationRep::map_index(std::size_t i, long in) const {
  const Permutation& p = group_[i];
  int k = factors();
  // Digit j of `in` (factor j, most significant first) lands at position p[j].
  long out = 0;
  long rem = in;
  std::vector<int> digit(k);
  for (int j = k - 1; j >= 0; --j) {
    digit[j] = static_cast<int>(rem % d_);
    rem /= d_;
  }
  std::vector<int> od(k);
  for (int j = 0; j < k; ++j) od[p[j]] = digit[j];
  for (int j = 0; j < k; ++j) out = out * d_ + od[j];
  return out;
}

Vector PermutationRep::apply(std::size_t i, const Vector& v) const {
  if (v.size() != dim_) throw ValidationError("permutation rep: state dimension mismatch");
  Vector w(dim_);
  for (long in = 0; in < dim_; ++in) w(map_index(i, in)) = v(in);
  return w;
}

Matrix PermutationRep::conjugate(std::size_t i, const Matrix& rho) const {
  if (rho.rows() != dim_ || rho.cols() != dim_) throw ValidationError("permutation rep: operator dimension mismatch");
  std::vector<long> map(dim_);
  for (long in = 0; in < dim_; ++in) map[in] = map_index(i, in);
  Matrix out(dim_, dim_);
  for (long c = 0; c < dim_; ++c) {
    for (long r = 0; r < dim_; ++r) out(map[r], map[c]) = rho(r, c);
  }
  return out;
}

Matrix PermutationRep::matrix(std::size_t i) const {
  require_dense_ok(dim_, "permutation rep matrix");
  Matrix m = Matrix::Zero(dim_, dim_);
  for (long in = 0; in < dim_; ++in) m(map_index(i, in), in) = 1.0;
  return m;
}

UnitaryRepTable::UnitaryRepTable(std::string name, std::vector<Matrix> matrices, Dims dims,
                                 std::optional<std::vector<int>> cyclic_labels)
    : name_(std::move(name)), matrices_(std::move(matrices)), dims_(std::move(dims)), labels_(std::move(cyclic_labels)) {
  if (matrices_.empty()) throw ValidationError("rep " + name_ + ": empty table");
  long d = matrices_.front().rows();
  require_dense_ok(d, "rep " + name_);
  if (dims_.empty()) dims_ = {static_cast<int>(d)};
  if (product(dims_) != d) throw ValidationError("rep " + name_ + ": dims do not match matrix size");
  for (const auto& u : matrices_) {
    if (u.rows() != d || u.cols() != d) throw ValidationError("rep " + name_ + ": matrices of different sizes");
    require_unitary(u, "rep " + name_, kTableUnitaryTol);
  }
  std::size_t n = matrices_.size();
  // Locates the element equal to m up to a phase, preferring an exact match so
  // that tables listing both U and -U are not mistaken for projective ones.
  auto find = [&](const Matrix& m, cplx* phase) -> std::optional<std::size_t> {
    std::optional<std::size_t> hit;
    for (std::size_t c = 0; c < n; ++c) {
      cplx ov = matrices_[c].conjugate().cwiseProduct(m).sum() / static_cast<double>(d);
      if (std::abs(std::abs(ov) - 1.0) > kPhaseTol) continue;
      if ((m - ov * matrices_[c]).cwiseAbs().maxCoeff() > kPhaseTol * 10) continue;
      if (std::abs(ov - cplx(1.0)) < kPhaseTol) {
        *phase = ov;
        return c;
      }
      if (!hit) {
        hit = c;
        *phase = ov;
      }
    }
    return hit;
  };
  cplx ph;
  auto id = find(Matrix::Identity(d, d), &ph);
  if (!id) throw ValidationError("rep " + name_ + ": no element proportional to the identity");
  identity_ = *id;
  if (std::abs(ph - cplx(1.0)) > kPhaseTol) phases_trivial_ = false;
  if (n > kTableClosureLimit) {
    abelian_ = false;
    if (labels_) throw ValidationError("rep " + name_ + ": table too large to verify cyclic labels");
    return;
  }
  std::vector<std::size_t> mult(n * n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      auto c = find(matrices_[a] * matrices_[b], &ph);
      if (!c) throw ValidationError("rep " + name_ + ": table not closed under multiplication");
      mult[a * n + b] = *c;
      if (std::abs(ph - cplx(1.0)) > kPhaseTol) phases_trivial_ = false;
    }
  }
  for (std::size_t a = 0; a < n && abelian_; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      if (mult[a * n + b] != mult[b * n + a]) {
        abelian_ = false;
        break;
      }
    }
  }
  if (labels_) {
    const auto& lab = *labels_;
    if (lab.size() != n) throw ValidationError("rep " + name_ + ": cyclic label count mismatch");
    std::vector<bool> seen(n, false);
    for (int x : lab) {
      if (x < 0 || x >= static_cast<int>(n) || seen[x]) throw ValidationError("rep " + name_ + ": cyclic labels not a bijection");
      seen[x] = true;
    }
    std::vector<std::size_t> by_label(n);
    for (std::size_t a = 0; a < n; ++a) by_label[lab[a]] = a;
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        const Matrix& target = matrices_[by_label[(lab[a] + lab[b]) % n]];
        cplx ov = target.conjugate().cwiseProduct(matrices_[a] * matrices_[b]).sum() / static_cast<double>(d);
        if (std::abs(std::abs(ov) - 1.0) > kPhaseTol) {
          throw ValidationError("rep " + name_ + ": cyclic labels are not a homomorphism onto Z_" + std::to_string(n));
        }
      }
    }
  }
}

std::string Representation::name() const {
  if (auto p = permutation()) return p->group().name() + "@d" + std::to_string(p->local_dim());
  return table()->name();
}

std::size_t Representation::order() const {
  if (auto p = permutation()) return p->group().order();
  return table()->order();
}

long Representation::dim() const {
  if (auto p = permutation()) return p->dim();
  return table()->dim();
}

Dims Representation::dims() const {
  if (auto p = permutation()) return p->dims();
  return table()->dims();
}

bool Representation::phases_trivial() const {
  if (permutation()) return true;
  return table()->phases_trivial();
}

Matrix Representation::matrix(std::size_t i) const {
  if (auto p = permutation()) return p->matrix(i);
  return (*table())[i];
}

Vector Representation::apply(std::size_t i, const Vector& v) const {
  if (auto p = permutation()) return p->apply(i, v);
  if (v.size() != dim()) throw ValidationError("rep " + name() + ": state dimension mismatch");
  return (*table())[i] * v;
}

Matrix Representation::conjugate(std::size_t i, const Matrix& x) const {
  if (auto p = permutation()) return p->conjugate(i, x);
  if (x.rows() != dim() || x.cols() != dim()) throw ValidationError("rep " + name() + ": operator dimension mismatch");
  const Matrix& u = (*table())[i];
  return u * x * u.adjoint();
}

Matrix group_projector(const Representation& rep) {
  long d = rep.dim();
  require_dense_ok(d, "group_projector");
  Matrix pi = Matrix::Zero(d, d);
  double w = 1.0 / static_cast<double>(rep.order());
  if (auto p = rep.permutation()) {
    for (std::size_t i = 0; i < rep.order(); ++i) {
      for (long in = 0; in < d; ++in) pi(p->map_index(i, in), in) += w;
    }
    return pi;
  }
  for (const auto& u : rep.table()->matrices()) pi += u;
  return pi * w;
}

Matrix twirl(const Representation& rep, const Matrix& x) {
  if (x.rows() != rep.dim() || x.cols() != rep.dim()) {
    throw ValidationError("twirl: operator dimension " + std::to_string(x.rows()) + " does not match rep dimension " +
                          std::to_string(rep.dim()));
  }
  Matrix acc = Matrix::Zero(x.rows(), x.cols());
  for (std::size_t i = 0; i < rep.order(); ++i) acc += rep.conjugate(i, x);
  return acc / static_cast<double>(rep.order());
}

UnitaryRepTable to_table(const Representation& rep) {
  if (auto t = rep.table()) return *t;
  std::vector<Matrix> ms;
  for (std::size_t i = 0; i < rep.order(); ++i) ms.push_back(rep.matrix(i));
  return UnitaryRepTable(rep.name(), std::move(ms), rep.dims());
}

UnitaryRepTable conjugate_rep(const UnitaryRepTable& rep) {
  std::vector<Matrix> ms;
  for (const auto& u : rep.matrices()) ms.push_back(u.conjugate());
  return UnitaryRepTable(rep.name() + "*", std::move(ms), rep.dims(), rep.cyclic_labels());
}

UnitaryRepTable tensor_reps(const UnitaryRepTable& a, const UnitaryRepTable& b) {
  if (a.order() != b.order()) throw ValidationError("tensor_reps: group orders differ");
  std::vector<Matrix> ms;
  for (std::size_t i = 0; i < a.order(); ++i) ms.push_back(tensor(a[i], b[i]));
  Dims dims = a.dims();
  dims.insert(dims.end(), b.dims().begin(), b.dims().end());
  auto labels = a.cyclic_labels() ? a.cyclic_labels() : b.cyclic_labels();
  return UnitaryRepTable(a.name() + "(x)" + b.name(), std::move(ms), dims, labels);
}

UnitaryRepTable trivial_rep(std::size_t order, int d) {
  if (order < 1) throw ValidationError("trivial_rep: order must be >= 1");
  // A repeated identity is not a faithful table, so closure is checked only
  // on the distinct elements implicitly (every product is the identity).
  std::vector<Matrix> ms(order, Matrix::Identity(d, d));
  return UnitaryRepTable("id" + std::to_string(d), std::move(ms), {d});
}

UnitaryRepTable generated_table(std::string name, const std::vector<Matrix>& generators, Dims dims) {
  if (generators.empty()) throw ValidationError("generated_table: no generators");
  long d = generators.front().rows();
  require_dense_ok(d, "generated_table");
  // Breadth-first closure; elements equal up to a phase are merged and the
  // first representative found is kept.
  auto known = [&](const std::vector<Matrix>& els, const Matrix& m) {
    for (const auto& e : els) {
      cplx ov = e.conjugate().cwiseProduct(m).sum() / static_cast<double>(d);
      if (std::abs(std::abs(ov) - 1.0) < kPhaseTol && (m - ov * e).cwiseAbs().maxCoeff() < 10 * kPhaseTol) return true;
    }
    return false;
  };
  std::vector<Matrix> els = {Matrix::Identity(d, d)};
  for (std::size_t head = 0; head < els.size(); ++head) {
    for (const auto& g : generators) {
      if (g.rows() != d || g.cols() != d) throw ValidationError("generated_table: generators of different sizes");
      Matrix m = g * els[head];
      if (known(els, m)) continue;
      if (els.size() >= kMaxDim) throw ValidationError("generated_table: group exceeds 4096 elements");
      els.push_back(std::move(m));
    }
  }
  return UnitaryRepTable(std::move(name), std::move(els), std::move(dims));
}

}  // namespace symtest
