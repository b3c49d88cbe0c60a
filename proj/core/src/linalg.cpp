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

#include "symtest/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>

namespace symtest {

namespace {

std::string fmt(double x) {
  std::ostringstream os;
  os.precision(3);
  os << std::scientific << x;
  return os.str();
}

void require_finite(const Matrix& m, const std::string& what) {
  if (!m.allFinite()) throw ValidationError(what + ": non-finite entries");
}

void check_dims(const Dims& dims, long total, const std::string& what) {
  for (int d : dims) {
    if (d < 1) throw ValidationError(what + ": subsystem dimensions must be positive");
  }
  if (product(dims) != total) {
    throw ValidationError(what + ": dims product " + std::to_string(product(dims)) +
                          " does not match dimension " + std::to_string(total));
  }
}

// Splits every full index into (index over `sel`, index over the rest), each
// in row-major order of the listed factors.
struct Split {
  long sel_dim = 1;
  long rest_dim = 1;
  std::vector<long> sel;
  std::vector<long> rest;
};

Split split_indices(const Dims& dims, const std::vector<int>& sel_factors) {
  int n = static_cast<int>(dims.size());
  std::vector<bool> chosen(n, false);
  for (int f : sel_factors) {
    if (f < 0 || f >= n) throw ValidationError("factor index " + std::to_string(f) + " out of range");
    if (chosen[f]) throw ValidationError("factor index " + std::to_string(f) + " repeated");
    chosen[f] = true;
  }
  std::vector<int> rest_factors;
  for (int f = 0; f < n; ++f) {
    if (!chosen[f]) rest_factors.push_back(f);
  }
  Split s;
  for (int f : sel_factors) s.sel_dim *= dims[f];
  for (int f : rest_factors) s.rest_dim *= dims[f];
  long total = product(dims);
  s.sel.resize(total);
  s.rest.resize(total);
  std::vector<int> digit(n, 0);
  for (long idx = 0; idx < total; ++idx) {
    long a = 0;
    for (int f : sel_factors) a = a * dims[f] + digit[f];
    long b = 0;
    for (int f : rest_factors) b = b * dims[f] + digit[f];
    s.sel[idx] = a;
    s.rest[idx] = b;
    for (int f = n - 1; f >= 0; --f) {
      if (++digit[f] < dims[f]) break;
      digit[f] = 0;
    }
  }
  return s;
}

Matrix gaussian(int rows, int cols, std::mt19937_64& rng) {
  std::normal_distribution<double> nd(0.0, 1.0);
  Matrix g(rows, cols);
  for (int j = 0; j < cols; ++j) {
    for (int i = 0; i < rows; ++i) {
      double re = nd(rng);
      double im = nd(rng);
      g(i, j) = cplx(re, im) / std::sqrt(2.0);
    }
  }
  return g;
}

}  // namespace

long product(const Dims& dims) {
  long p = 1;
  for (int d : dims) p *= d;
  return p;
}

DensityMatrix::DensityMatrix(Matrix m, Dims dims) : dims_(std::move(dims)) {
  require_square(m, "density matrix");
  require_finite(m, "density matrix");
  check_dims(dims_, m.rows(), "density matrix");
  double herm = hermiticity_defect(m);
  if (herm > kStateTol) throw ValidationError("density matrix not Hermitian (defect " + fmt(herm) + ")");
  m_ = (m + m.adjoint()) / 2.0;
  double tr_err = std::abs(m_.trace() - cplx(1.0));
  if (tr_err > kStateTol) throw ValidationError("density matrix trace differs from 1 by " + fmt(tr_err));
  double lo = Eigen::SelfAdjointEigenSolver<Matrix>(m_, Eigen::EigenvaluesOnly).eigenvalues().minCoeff();
  if (lo < -kStateTol) throw ValidationError("density matrix has negative eigenvalue " + fmt(lo));
}

DensityMatrix::DensityMatrix(Matrix m) : DensityMatrix(m, Dims{static_cast<int>(m.rows())}) {}

double DensityMatrix::purity() const { return (m_ * m_).trace().real(); }

PureState::PureState(Vector v, Dims dims) : v_(std::move(v)), dims_(std::move(dims)) {
  if (v_.size() == 0) throw ValidationError("empty state vector");
  if (!v_.allFinite()) throw ValidationError("state vector: non-finite entries");
  check_dims(dims_, v_.size(), "state vector");
  double err = std::abs(v_.norm() - 1.0);
  if (err > kStateTol) throw ValidationError("state vector norm differs from 1 by " + fmt(err));
}

PureState::PureState(Vector v) : PureState(v, Dims{static_cast<int>(v.size())}) {}

DensityMatrix PureState::density() const {
  Matrix m = v_ * v_.adjoint();
  return DensityMatrix(m, dims_);
}

Matrix tensor(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (long i = 0; i < a.rows(); ++i) {
    for (long j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

Vector tensor(const Vector& a, const Vector& b) {
  Vector out(a.size() * b.size());
  for (long i = 0; i < a.size(); ++i) out.segment(i * b.size(), b.size()) = a(i) * b;
  return out;
}

Matrix tensor_all(std::span<const Matrix> factors) {
  Matrix out = Matrix::Identity(1, 1);
  for (const auto& f : factors) out = tensor(out, f);
  return out;
}

Matrix tensor_power(const Matrix& a, int k) {
  Matrix out = Matrix::Identity(1, 1);
  for (int i = 0; i < k; ++i) out = tensor(out, a);
  return out;
}

Vector tensor_power(const Vector& a, int k) {
  Vector out = Vector::Ones(1);
  for (int i = 0; i < k; ++i) out = tensor(out, a);
  return out;
}

Matrix partial_trace(const Matrix& m, const Dims& dims, const std::vector<int>& keep) {
  require_square(m, "partial_trace");
  check_dims(dims, m.rows(), "partial_trace");
  std::vector<int> kept = keep;
  std::sort(kept.begin(), kept.end());
  Split s = split_indices(dims, kept);
  // full[t * sel_dim + a] = full index with kept part a and traced part t.
  std::vector<long> full(m.rows());
  for (long idx = 0; idx < m.rows(); ++idx) full[s.rest[idx] * s.sel_dim + s.sel[idx]] = idx;
  Matrix out = Matrix::Zero(s.sel_dim, s.sel_dim);
  for (long t = 0; t < s.rest_dim; ++t) {
    const long* row = &full[t * s.sel_dim];
    for (long b = 0; b < s.sel_dim; ++b) {
      for (long a = 0; a < s.sel_dim; ++a) out(a, b) += m(row[a], row[b]);
    }
  }
  return out;
}

DensityMatrix partial_trace(const DensityMatrix& rho, const std::vector<int>& keep) {
  std::vector<int> kept = keep;
  std::sort(kept.begin(), kept.end());
  Dims d;
  for (int f : kept) {
    if (f < 0 || f >= static_cast<int>(rho.dims().size())) throw ValidationError("partial_trace: factor index out of range");
    d.push_back(rho.dims()[f]);
  }
  return DensityMatrix(partial_trace(rho.matrix(), rho.dims(), kept), d);
}

Matrix reduced_density(const Vector& v, const Dims& dims, const std::vector<int>& keep) {
  check_dims(dims, v.size(), "reduced_density");
  std::vector<int> kept = keep;
  std::sort(kept.begin(), kept.end());
  Split s = split_indices(dims, kept);
  Matrix psi(s.sel_dim, s.rest_dim);
  for (long idx = 0; idx < v.size(); ++idx) psi(s.sel[idx], s.rest[idx]) = v(idx);
  return psi * psi.adjoint();
}

Vector apply_on_factors(const Vector& v, const Dims& dims, const std::vector<int>& targets,
                        const Matrix& op) {
  check_dims(dims, v.size(), "apply_on_factors");
  Split s = split_indices(dims, targets);
  if (op.rows() != s.sel_dim || op.cols() != s.sel_dim) {
    throw ValidationError("apply_on_factors: operator dimension " + std::to_string(op.rows()) +
                          " does not match target dimension " + std::to_string(s.sel_dim));
  }
  Matrix psi(s.sel_dim, s.rest_dim);
  for (long idx = 0; idx < v.size(); ++idx) psi(s.sel[idx], s.rest[idx]) = v(idx);
  Matrix out = op * psi;
  Vector w(v.size());
  for (long idx = 0; idx < v.size(); ++idx) w(idx) = out(s.sel[idx], s.rest[idx]);
  return w;
}

Matrix embed_operator(const Matrix& op, const Dims& dims, const std::vector<int>& support) {
  check_dims(dims, product(dims), "embed_operator");
  Split s = split_indices(dims, support);
  if (op.rows() != s.sel_dim || op.cols() != s.sel_dim) {
    throw ValidationError("embed_operator: operator dimension " + std::to_string(op.rows()) +
                          " does not match support dimension " + std::to_string(s.sel_dim));
  }
  long total = product(dims);
  std::vector<long> full(total);
  for (long idx = 0; idx < total; ++idx) full[s.rest[idx] * s.sel_dim + s.sel[idx]] = idx;
  Matrix out = Matrix::Zero(total, total);
  for (long t = 0; t < s.rest_dim; ++t) {
    const long* blk = &full[t * s.sel_dim];
    for (long b = 0; b < s.sel_dim; ++b) {
      for (long a = 0; a < s.sel_dim; ++a) out(blk[a], blk[b]) = op(a, b);
    }
  }
  return out;
}

namespace {

std::vector<long> factor_permutation_map(const Dims& dims, const std::vector<int>& order) {
  int n = static_cast<int>(dims.size());
  if (static_cast<int>(order.size()) != n) throw ValidationError("permute_factors: order has wrong length");
  std::vector<bool> seen(n, false);
  for (int f : order) {
    if (f < 0 || f >= n || seen[f]) throw ValidationError("permute_factors: order is not a permutation");
    seen[f] = true;
  }
  long total = product(dims);
  std::vector<long> map(total);
  std::vector<int> digit(n, 0);
  for (long idx = 0; idx < total; ++idx) {
    long out = 0;
    for (int i = 0; i < n; ++i) out = out * dims[order[i]] + digit[order[i]];
    map[idx] = out;
    for (int f = n - 1; f >= 0; --f) {
      if (++digit[f] < dims[f]) break;
      digit[f] = 0;
    }
  }
  return map;
}

}  // namespace

Vector permute_factors(const Vector& v, const Dims& dims, const std::vector<int>& order) {
  check_dims(dims, v.size(), "permute_factors");
  auto map = factor_permutation_map(dims, order);
  Vector w(v.size());
  for (long i = 0; i < v.size(); ++i) w(map[i]) = v(i);
  return w;
}

Matrix permute_factors(const Matrix& m, const Dims& dims, const std::vector<int>& order) {
  require_square(m, "permute_factors");
  check_dims(dims, m.rows(), "permute_factors");
  auto map = factor_permutation_map(dims, order);
  Matrix w(m.rows(), m.cols());
  for (long c = 0; c < m.cols(); ++c) {
    for (long r = 0; r < m.rows(); ++r) w(map[r], map[c]) = m(r, c);
  }
  return w;
}

double hermiticity_defect(const Matrix& m) {
  if (m.rows() != m.cols()) return std::numeric_limits<double>::infinity();
  return (m - m.adjoint()).cwiseAbs().maxCoeff();
}

void require_square(const Matrix& m, const std::string& what) {
  if (m.rows() != m.cols() || m.rows() == 0) {
    throw ValidationError(what + ": expected a non-empty square matrix, got " + std::to_string(m.rows()) +
                          "x" + std::to_string(m.cols()));
  }
}

void require_hermitian(const Matrix& m, const std::string& what, double tol) {
  require_square(m, what);
  require_finite(m, what);
  double defect = hermiticity_defect(m);
  if (defect > tol) throw ValidationError(what + ": not Hermitian (defect " + fmt(defect) + ")");
}

double unitarity_defect(const Matrix& m) {
  if (m.rows() != m.cols()) return std::numeric_limits<double>::infinity();
  return (m.adjoint() * m - Matrix::Identity(m.rows(), m.cols())).cwiseAbs().maxCoeff();
}

void require_unitary(const Matrix& m, const std::string& what, double tol) {
  require_square(m, what);
  require_finite(m, what);
  double defect = unitarity_defect(m);
  if (defect > tol) throw ValidationError(what + ": not unitary (defect " + fmt(defect) + ")");
}

HermitianEigen eigh(const Matrix& m) {
  require_hermitian(m, "eigh");
  Matrix sym = (m + m.adjoint()) / 2.0;
  Eigen::SelfAdjointEigenSolver<Matrix> es(sym);
  if (es.info() != Eigen::Success) throw ConvergenceError("eigh: eigensolver failed");
  return {es.eigenvalues(), es.eigenvectors()};
}

Matrix expm_hermitian(const Matrix& h, double t) {
  HermitianEigen e = eigh(h);
  Vector phase(e.values.size());
  for (long i = 0; i < e.values.size(); ++i) phase(i) = std::exp(cplx(0.0, -e.values(i) * t));
  return e.vectors * phase.asDiagonal() * e.vectors.adjoint();
}

Matrix sqrtm_psd(const Matrix& m) {
  Eigen::SelfAdjointEigenSolver<Matrix> es((m + m.adjoint()) / 2.0);
  RealVector s = es.eigenvalues().cwiseMax(0.0).cwiseSqrt();
  return es.eigenvectors() * s.cast<cplx>().asDiagonal() * es.eigenvectors().adjoint();
}

double fidelity(const Matrix& rho, const Matrix& sigma) {
  if (rho.rows() != sigma.rows() || rho.cols() != sigma.cols()) {
    throw ValidationError("fidelity: dimension mismatch (" + std::to_string(rho.rows()) + " vs " +
                          std::to_string(sigma.rows()) + ")");
  }
  Matrix prod = sqrtm_psd(rho) * sqrtm_psd(sigma);
  double tn = Eigen::JacobiSVD<Matrix>(prod).singularValues().sum();
  return std::clamp(tn * tn, 0.0, 1.0);
}

double fidelity(const DensityMatrix& rho, const DensityMatrix& sigma) {
  return fidelity(rho.matrix(), sigma.matrix());
}

double schatten_norm(const Matrix& m, double p) {
  if (std::isnan(p) || p < 1.0) throw ValidationError("schatten_norm: p must be >= 1");
  RealVector s = Eigen::JacobiSVD<Matrix>(m).singularValues();
  if (std::isinf(p)) return s.size() ? s.maxCoeff() : 0.0;
  if (p == 1.0) return s.sum();
  if (p == 2.0) return m.norm();
  double acc = 0.0;
  for (long i = 0; i < s.size(); ++i) acc += std::pow(s(i), p);
  return std::pow(acc, 1.0 / p);
}

PureState purify(const DensityMatrix& rho) {
  Eigen::SelfAdjointEigenSolver<Matrix> es(rho.matrix());
  long d = rho.dim();
  Vector psi = Vector::Zero(d * d);
  // Largest eigenvalue pairs with reference ket |0>.
  for (long r = 0; r < d; ++r) {
    long col = d - 1 - r;
    double lam = std::max(es.eigenvalues()(col), 0.0);
    psi.segment(r * d, d) = std::sqrt(lam) * es.eigenvectors().col(col);
  }
  psi /= psi.norm();
  Dims dims{static_cast<int>(d)};
  dims.insert(dims.end(), rho.dims().begin(), rho.dims().end());
  return PureState(psi, dims);
}

DensityMatrix random_density(int d, int rank, std::uint64_t seed) {
  if (d < 1) throw ValidationError("random_density: d must be positive");
  if (rank < 1 || rank > d) throw ValidationError("random_density: rank must lie in 1..d");
  std::mt19937_64 rng(seed);
  Matrix g = gaussian(d, rank, rng);
  Matrix m = g * g.adjoint();
  m /= m.trace().real();
  m = (m + m.adjoint()) / 2.0;
  return DensityMatrix(m);
}

Matrix random_unitary(int d, std::uint64_t seed) {
  if (d < 1) throw ValidationError("random_unitary: d must be positive");
  std::mt19937_64 rng(seed);
  Matrix g = gaussian(d, d, rng);
  Eigen::HouseholderQR<Matrix> qr(g);
  Matrix q = qr.householderQ();
  Matrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int j = 0; j < d; ++j) {
    cplx rjj = r(j, j);
    double a = std::abs(rjj);
    q.col(j) *= a > 0 ? rjj / a : cplx(1.0);
  }
  return q;
}

Matrix random_hermitian(int d, std::uint64_t seed) {
  if (d < 1) throw ValidationError("random_hermitian: d must be positive");
  std::mt19937_64 rng(seed);
  Matrix g = gaussian(d, d, rng);
  return (g + g.adjoint()) / 2.0;
}

PureState random_pure_state(int d, std::uint64_t seed) {
  if (d < 1) throw ValidationError("random_pure_state: d must be positive");
  std::mt19937_64 rng(seed);
  Vector v = gaussian(d, 1, rng).col(0);
  return PureState(v / v.norm());
}

Matrix commutator(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols() || a.rows() != a.cols()) {
    throw ValidationError("commutator: dimension mismatch");
  }
  return a * b - b * a;
}

Matrix nested_commutator(const Matrix& h, const Matrix& u, int n) {
  if (n < 0) throw ValidationError("nested_commutator: n must be >= 0");
  if (h.rows() != u.rows() || h.cols() != u.cols() || h.rows() != h.cols()) {
    throw ValidationError("nested_commutator: dimension mismatch");
  }
  Matrix c = u;
  for (int i = 0; i < n; ++i) c = h * c - c * h;
  return c;
}

std::vector<double> trace_powers(const DensityMatrix& rho, int k) {
  RealVector ev = Eigen::SelfAdjointEigenSolver<Matrix>(rho.matrix(), Eigen::EigenvaluesOnly)
                      .eigenvalues()
                      .cwiseMax(0.0);
  std::vector<double> out(std::max(k, 0), 0.0);
  RealVector pw = ev;
  for (int j = 0; j < k; ++j) {
    out[j] = pw.sum();
    pw = pw.cwiseProduct(ev);
  }
  return out;
}

Vector gamma_vector(int d) {
  Vector v = Vector::Zero(static_cast<long>(d) * d);
  for (int i = 0; i < d; ++i) v(static_cast<long>(i) * d + i) = 1.0;
  return v;
}

Vector max_entangled(int d) { return gamma_vector(d) / std::sqrt(static_cast<double>(d)); }

Matrix pauli_i() { return Matrix::Identity(2, 2); }

Matrix pauli_x() {
  Matrix m(2, 2);
  m << 0, 1, 1, 0;
  return m;
}

Matrix pauli_y() {
  Matrix m(2, 2);
  m << 0, cplx(0, -1), cplx(0, 1), 0;
  return m;
}

Matrix pauli_z() {
  Matrix m(2, 2);
  m << 1, 0, 0, -1;
  return m;
}

Matrix hadamard() {
  Matrix m(2, 2);
  m << 1, 1, 1, -1;
  return m / std::sqrt(2.0);
}

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

}  // namespace symtest
