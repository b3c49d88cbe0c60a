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

#include "symtest/ham_symmetry.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <set>

namespace symtest {

namespace {

void require_same_space(long dim, const Representation& rep, const char* what) {
  if (dim != rep.dim()) {
    throw ValidationError(std::string(what) + ": Hamiltonian dimension " + std::to_string(dim) +
                          " does not match rep dimension " + std::to_string(rep.dim()));
  }
}

Matrix conj_matrix(const Representation& rep, std::size_t g) { return rep.matrix(g).conjugate(); }

// Tr[Pi^G Phi^t] with Phi^t = (I (x) W) Phi (I (x) W^dagger). The vector (I (x) W)|Phi>
// has coefficient matrix W^T / sqrt(d), and conj(U) (x) U maps X to conj(U) X conj(U)^dagger.
double choi_form(const Matrix& w, const Representation& rep) {
  long d = w.rows();
  Matrix x = w.transpose() / std::sqrt(static_cast<double>(d));
  double acc = 0.0;
  for (std::size_t g = 0; g < rep.order(); ++g) {
    Matrix moved;
    if (rep.is_permutation()) {
      moved = rep.conjugate(g, x);
    } else {
      Matrix ub = conj_matrix(rep, g);
      moved = ub * x * ub.adjoint();
    }
    acc += x.conjugate().cwiseProduct(moved).sum().real();
  }
  return acc / static_cast<double>(rep.order());
}

// (1/(d|G|)) sum_g Tr[U^dagger W^dagger U W].
double trace_form(const Matrix& w, const Representation& rep) {
  long d = w.rows();
  cplx acc = 0;
  for (std::size_t g = 0; g < rep.order(); ++g) {
    Matrix moved = rep.conjugate(g, w);  // U W U^dagger
    acc += w.conjugate().cwiseProduct(moved).sum();
  }
  return acc.real() / static_cast<double>(d * static_cast<long>(rep.order()));
}

double spectral_norm(const Matrix& m) { return schatten_norm(m, kSpectralNorm); }

double binomial(int n, int k) {
  double r = 1.0;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

Matrix pauli_from_char(char c) {
  switch (c) {
    case 'I': return pauli_i();
    case 'X': return pauli_x();
    case 'Y': return pauli_y();
    case 'Z': return pauli_z();
    default: throw ValidationError(std::string("pauli string: unknown letter '") + c + "'");
  }
}

}  // namespace

HamiltonianSpec HamiltonianSpec::from_dense(Matrix h, Dims dims) {
  require_hermitian(h, "hamiltonian", kTermHermitianTol);
  if (h.rows() > kMaxDim) throw ValidationError("hamiltonian: dimension exceeds cap");
  if (dims.empty()) dims = {static_cast<int>(h.rows())};
  if (product(dims) != h.rows()) throw ValidationError("hamiltonian: dims do not multiply to the matrix size");
  HamiltonianSpec s;
  s.dims_ = std::move(dims);
  s.dense_ = (h + h.adjoint()) / 2.0;
  return s;
}

HamiltonianSpec HamiltonianSpec::from_terms(std::vector<LocalTerm> terms, Dims dims) {
  if (terms.empty()) throw ValidationError("hamiltonian: no terms");
  if (dims.empty()) throw ValidationError("hamiltonian: dims required for local terms");
  long total = 1;
  for (int d : dims) {
    if (d < 1) throw ValidationError("hamiltonian: factor dimension must be positive");
    total *= d;
    if (total > kMaxDim) throw ValidationError("hamiltonian: dimension exceeds cap");
  }
  HamiltonianSpec s;
  s.dims_ = std::move(dims);
  s.dense_ = Matrix::Zero(total, total);
  int n = static_cast<int>(s.dims_.size());
  for (auto& term : terms) {
    std::set<int> seen;
    for (int f : term.support) {
      if (f < 0 || f >= n) throw ValidationError("hamiltonian: support index " + std::to_string(f) + " out of range");
      if (!seen.insert(f).second) throw ValidationError("hamiltonian: repeated support index");
    }
    require_hermitian(term.matrix, "hamiltonian term", kTermHermitianTol);
    term.matrix = (term.matrix + term.matrix.adjoint()) / 2.0;
    s.dense_ += embed_operator(term.matrix, s.dims_, term.support);
  }
  s.terms_ = std::move(terms);
  return s;
}

HamiltonianSpec HamiltonianSpec::from_pauli_strings(const std::string& expr, const std::vector<double>& coeffs) {
  std::vector<std::pair<double, std::string>> words;
  double sign = 1.0;
  std::string cur;
  auto flush = [&] {
    if (cur.empty()) throw ValidationError("pauli string: empty term in '" + expr + "'");
    words.emplace_back(sign, cur);
    cur.clear();
  };
  for (std::size_t i = 0; i < expr.size(); ++i) {
    char c = expr[i];
    if (c == ' ') continue;
    if (c == '+' || c == '-') {
      if (!cur.empty()) {
        flush();
      } else if (!words.empty()) {
        throw ValidationError("pauli string: malformed '" + expr + "'");
      }
      sign = (c == '-') ? -1.0 : 1.0;
      continue;
    }
    cur.push_back(c);
  }
  flush();
  if (!coeffs.empty() && coeffs.size() != words.size()) {
    throw ValidationError("pauli string: " + std::to_string(words.size()) + " terms but " +
                          std::to_string(coeffs.size()) + " coefficients");
  }
  std::size_t n = words.front().second.size();
  std::vector<LocalTerm> terms;
  for (std::size_t w = 0; w < words.size(); ++w) {
    const std::string& s = words[w].second;
    if (s.size() != n) throw ValidationError("pauli string: terms have different lengths");
    double c = words[w].first * (coeffs.empty() ? 1.0 : coeffs[w]);
    LocalTerm t;
    Matrix m = Matrix::Identity(1, 1);
    for (std::size_t q = 0; q < n; ++q) {
      Matrix p = pauli_from_char(s[q]);
      if (s[q] != 'I') {
        t.support.push_back(static_cast<int>(q));
        m = tensor(m, p);
      }
    }
    if (t.support.empty()) {
      t.support = {0};
      m = pauli_i();
    }
    t.matrix = c * m;
    terms.push_back(std::move(t));
  }
  return from_terms(std::move(terms), Dims(n, 2));
}

AcceptanceReport covariance_acceptance(const HamiltonianSpec& h, const Representation& rep, double t) {
  require_same_space(h.dim(), rep, "covariance_acceptance");
  Matrix w = expm_hermitian(h.dense(), t);
  AcceptanceReport r;
  r.simulated = choi_form(w, rep);
  r.closed_form = trace_form(w, rep);
  r.method = "choi|trace";
  r.meta["t"] = t;
  return r;
}

Matrix trotter_evolution(const HamiltonianSpec& h, double t, int r) {
  if (!h.has_terms()) throw ValidationError("trotter_evolution: needs the local-term form");
  if (r < 1) throw ValidationError("trotter_evolution: r must be >= 1");
  Matrix step = Matrix::Identity(h.dim(), h.dim());
  for (const auto& term : h.terms()) {
    step = embed_operator(expm_hermitian(term.matrix, t / r), h.dims(), term.support) * step;
  }
  Matrix out = step;
  for (int i = 1; i < r; ++i) out = step * out;
  return out;
}

double loglog_slope(const std::vector<double>& x, const std::vector<double>& y) {
  if (x.size() != y.size() || x.size() < 2) throw ValidationError("loglog_slope: need at least two points");
  double mx = 0, my = 0;
  std::size_t n = x.size();
  std::vector<double> lx(n), ly(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (x[i] <= 0 || y[i] <= 0) throw ValidationError("loglog_slope: values must be positive");
    lx[i] = std::log(x[i]);
    ly[i] = std::log(y[i]);
    mx += lx[i];
    my += ly[i];
  }
  mx /= n;
  my /= n;
  double sxy = 0, sxx = 0;
  for (std::size_t i = 0; i < n; ++i) {
    sxy += (lx[i] - mx) * (ly[i] - my);
    sxx += (lx[i] - mx) * (lx[i] - mx);
  }
  return sxy / sxx;
}

std::vector<double> commutator_coefficients(const Matrix& h, const Representation& rep, int n_max) {
  require_same_space(h.rows(), rep, "commutator_coefficients");
  if (n_max < 0) throw ValidationError("commutator_coefficients: order must be >= 0");
  double scale = static_cast<double>(h.rows()) * static_cast<double>(rep.order());
  std::vector<double> c(n_max + 1, 0.0);
  c[0] = 1.0;
  for (std::size_t g = 0; g < rep.order(); ++g) {
    Matrix x = rep.matrix(g);
    for (int n = 1; n <= n_max; ++n) {
      x = commutator(h, x);
      c[n] += x.squaredNorm() / scale;
    }
  }
  return c;
}

std::vector<double> twirl_series_coefficients(const Matrix& h, const Representation& rep, int n_max) {
  require_same_space(h.rows(), rep, "twirl_series_coefficients");
  if (n_max < 0) throw ValidationError("twirl_series_coefficients: order must be >= 0");
  long d = h.rows();
  std::vector<Matrix> pow(2 * n_max + 1);
  pow[0] = Matrix::Identity(d, d);
  for (int i = 1; i <= 2 * n_max; ++i) pow[i] = pow[i - 1] * h;
  std::vector<Matrix> tw(2 * n_max + 1);
  for (int i = 0; i <= 2 * n_max; ++i) tw[i] = twirl(rep, pow[i]);
  std::vector<double> c(n_max + 1, 0.0);
  c[0] = 1.0;
  for (int n = 1; n <= n_max; ++n) {
    double acc = 0.0;
    for (int m = 0; m <= n; ++m) {
      double w = binomial(2 * n, m) * (m == n ? 1.0 : 2.0) * ((m % 2) ? -1.0 : 1.0);
      acc += w * (tw[2 * n - m] * pow[m]).trace().real();
    }
    c[n] = acc / static_cast<double>(d);
  }
  return c;
}

SeriesReport commutator_series(const HamiltonianSpec& h, const Representation& rep, double t, int order) {
  if (order < 0) throw ValidationError("commutator_series: order must be >= 0");
  SeriesReport s;
  s.order = order;
  s.t = t;
  s.coefficients = commutator_coefficients(h.dense(), rep, order);
  s.exact = *covariance_acceptance(h, rep, t).closed_form;
  double factor = 1.0;  // (-1)^n t^{2n} / (2n)!
  double sum = 0.0;
  for (int n = 0; n <= order; ++n) {
    if (n > 0) factor *= -t * t / ((2.0 * n - 1.0) * (2.0 * n));
    sum += factor * s.coefficients[n];
    s.partial_sums.push_back(sum);
    s.residuals.push_back(std::abs(sum - s.exact));
  }
  return s;
}

FixedStateReport fixed_state_acceptance(const HamiltonianSpec& h, const Representation& rep, double t,
                                         const PureState& psi) {
  require_same_space(h.dim(), rep, "fixed_state_acceptance");
  if (psi.dim() != h.dim()) throw ValidationError("fixed_state_acceptance: state dimension mismatch");
  const Matrix& hm = h.dense();
  const Vector& v = psi.vector();
  FixedStateReport r;
  r.value = (twirl(rep, expm_hermitian(hm, t)) * v).squaredNorm();
  Matrix th = twirl(rep, hm);
  Matrix th2 = twirl(rep, hm * hm);
  r.bracket = v.dot((th2 - th * th) * v).real();
  r.second_order = 1.0 - t * t * r.bracket;
  return r;
}

MaxOverStatesReport max_over_states_acceptance(const HamiltonianSpec& h, const Representation& rep, double t) {
  require_same_space(h.dim(), rep, "max_over_states_acceptance");
  const Matrix& hm = h.dense();
  Matrix w = expm_hermitian(hm, t);
  double n = static_cast<double>(rep.order());
  double at = std::abs(t);
  MaxOverStatesReport r;
  double top = spectral_norm(twirl(rep, w));
  r.value = top * top;
  r.tau = spectral_norm(hm) * at;
  double comm_w = 0.0, comm_h = 0.0;
  std::vector<Matrix> us(rep.order());
  for (std::size_t g = 0; g < rep.order(); ++g) {
    us[g] = rep.matrix(g);
    comm_w += spectral_norm(commutator(us[g], w));
    comm_h += spectral_norm(commutator(us[g], hm));
  }
  r.bound_evolution = 1.0 - 2.0 * comm_w / n;
  if (r.tau < 1.0) r.bound_small_t = 1.0 - 2.0 * at * comm_h / n - 4.0 * r.tau * r.tau;

  // X_n = t^n/n! [(H)^n, U]; the sum stops once terms are negligible or the
  // bound is already trivial.
  double series = 0.0;
  std::vector<Matrix> x = us;
  int cutoff = static_cast<int>(2.0 * r.tau) + 10;
  for (int k = 1; k <= 400; ++k) {
    double term = 0.0;
    for (auto& m : x) {
      m = commutator(hm, m) * (at / k);
      term += spectral_norm(m);
    }
    term /= n;
    series += term;
    if (series >= 1.0) break;
    if (k > cutoff && term < 1e-17) break;
  }
  if (series >= 1.0) {
    r.bound_nested = 0.0;
    r.nested_clamped = true;
  } else {
    r.bound_nested = (1.0 - series) * (1.0 - series);
  }
  return r;
}

Dqc1Report dqc1_reduction_check(const Matrix& u) {
  require_unitary(u, "dqc1 unitary");
  long d = u.rows();
  if (2 * d > kMaxDim) throw ValidationError("dqc1: dimension exceeds cap");
  Matrix v = Matrix::Zero(2 * d, 2 * d);
  v.topRightCorner(d, d) = u;
  v.bottomLeftCorner(d, d) = u.adjoint();
  Dims dims = {2, static_cast<int>(d)};
  UnitaryRepTable rep("dqc1", {Matrix::Identity(2 * d, 2 * d), v}, dims);
  Matrix h2 = (std::numbers::pi / 2.0) * (pauli_i() - hadamard());
  HamiltonianSpec h = HamiltonianSpec::from_terms({{h2, {0}}}, dims);
  AcceptanceReport acc = covariance_acceptance(h, rep, 1.0);
  Dqc1Report r;
  r.lhs = acc.simulated;
  r.lhs_trace = *acc.closed_form;
  r.rhs = 0.25 + (u * u).trace().real() / (4.0 * static_cast<double>(d));
  return r;
}

AcceptanceReport dme_acceptance(const DensityMatrix& rho, const Representation& rep, double t) {
  require_same_space(rho.dim(), rep, "dme_acceptance");
  HamiltonianSpec h = HamiltonianSpec::from_dense(rho.matrix(), rho.dims());
  AcceptanceReport r = covariance_acceptance(h, rep, t);
  double comm = 0.0;
  for (std::size_t g = 0; g < rep.order(); ++g) comm += commutator(rep.matrix(g), rho.matrix()).squaredNorm();
  double d = static_cast<double>(rho.dim());
  double n = static_cast<double>(rep.order());
  r.meta["trace_form"] = *r.closed_form;
  r.closed_form = 1.0 - t * t * comm / (2.0 * d * n);
  r.method = "choi|expansion";
  r.meta["delta"] = std::pow(t, 4);
  if (t != 0.0) r.meta["copies"] = 1.0 / (t * t);
  return r;
}

OtocReport abelian_otoc(const HamiltonianSpec& h, const UnitaryRepTable& rep, double t) {
  if (!rep.is_abelian()) throw ValidationError("abelian_otoc: group is not Abelian");
  if (!rep.cyclic_labels()) throw ValidationError("abelian_otoc: rep has no cyclic labelling");
  if (h.dim() != rep.dim()) throw ValidationError("abelian_otoc: dimension mismatch");
  const auto& labels = *rep.cyclic_labels();
  std::size_t n = rep.order();
  double d = static_cast<double>(h.dim());
  Matrix w = expm_hermitian(h.dense(), t);
  OtocReport r;
  r.otoc.assign(n, cplx(0));
  for (std::size_t g = 0; g < n; ++g) {
    Matrix moved = rep[g] * w * rep[g].adjoint();
    r.otoc[labels[g]] = w.conjugate().cwiseProduct(moved).sum() / d;
  }
  const double two_pi = 2.0 * std::numbers::pi;
  r.probabilities.assign(n, 0.0);
  for (std::size_t k = 0; k < n; ++k) {
    cplx acc = 0;
    for (std::size_t l = 0; l < n; ++l) {
      acc += std::polar(1.0, two_pi * static_cast<double>((k * l) % n) / n) * r.otoc[l];
    }
    acc /= static_cast<double>(n);
    r.max_imaginary = std::max(r.max_imaginary, std::abs(acc.imag()));
    r.probabilities[k] = acc.real();
  }
  r.recovered.assign(n, cplx(0));
  for (std::size_t l = 0; l < n; ++l) {
    cplx acc = 0;
    for (std::size_t k = 0; k < n; ++k) {
      acc += std::polar(1.0, -two_pi * static_cast<double>((k * l) % n) / n) * r.probabilities[k];
    }
    r.recovered[l] = acc;
  }
  return r;
}

long hoeffding_samples(double epsilon, double delta) {
  if (!(epsilon > 0.0) || !(delta > 0.0 && delta < 1.0)) {
    throw ValidationError("hoeffding_samples: need epsilon > 0 and 0 < delta < 1");
  }
  return static_cast<long>(std::ceil(4.0 / (epsilon * epsilon) * std::log(4.0 / delta)));
}

OtocSample abelian_otoc_sample(const HamiltonianSpec& h, const UnitaryRepTable& rep, double t, double epsilon,
                               double delta, std::uint64_t seed) {
  OtocReport exact = abelian_otoc(h, rep, t);
  std::size_t n = exact.probabilities.size();
  std::vector<double> w(n);
  for (std::size_t k = 0; k < n; ++k) w[k] = std::max(0.0, exact.probabilities[k]);
  OtocSample s;
  s.samples = hoeffding_samples(epsilon, delta);
  std::mt19937_64 rng(seed);
  std::discrete_distribution<std::size_t> dist(w.begin(), w.end());
  std::vector<long> counts(n, 0);
  for (long i = 0; i < s.samples; ++i) ++counts[dist(rng)];
  const double two_pi = 2.0 * std::numbers::pi;
  s.frequencies.resize(n);
  for (std::size_t k = 0; k < n; ++k) s.frequencies[k] = static_cast<double>(counts[k]) / s.samples;
  s.estimates.assign(n, cplx(0));
  for (std::size_t l = 0; l < n; ++l) {
    for (std::size_t k = 0; k < n; ++k) {
      s.estimates[l] += std::polar(1.0, -two_pi * static_cast<double>((k * l) % n) / n) * s.frequencies[k];
    }
  }
  return s;
}

AcceptanceReport block_encoding_acceptance(const Matrix& h, const Representation& rep) {
  require_hermitian(h, "block_encoding", kTermHermitianTol);
  require_same_space(h.rows(), rep, "block_encoding_acceptance");
  double norm = spectral_norm(h);
  if (norm > 1.0 + 1e-10) {
    throw ValidationError("block_encoding: spectral norm " + std::to_string(norm) + " exceeds 1");
  }
  long d = h.rows();
  if (2 * d * d > 16 * kMaxDim) throw ValidationError("block_encoding: dimension exceeds cap");
  Matrix hs = (h + h.adjoint()) / 2.0;
  Matrix id = Matrix::Identity(d, d);
  Matrix s = sqrtm_psd(id - hs * hs);
  Matrix b(2 * d, 2 * d);
  b << hs, s, s, -hs;
  Dims dims = {2, static_cast<int>(d), static_cast<int>(d)};  // A, S, R
  Vector phi = max_entangled(static_cast<int>(d));
  Vector start = Vector::Zero(2 * d * d);
  start.head(d * d) = phi;
  Vector acc = Vector::Zero(d * d);
  for (std::size_t g = 0; g < rep.order(); ++g) {
    Matrix cu = Matrix::Identity(2 * d, 2 * d);
    cu.topLeftCorner(d, d) = rep.matrix(g);
    Vector v = apply_on_factors(start, dims, {0, 1}, cu);
    v = apply_on_factors(v, dims, {0, 1}, b);
    v = apply_on_factors(v, dims, {0, 1}, cu.adjoint());
    acc += v.head(d * d);
  }
  acc /= static_cast<double>(rep.order());
  cplx tr = 0;
  for (std::size_t g = 0; g < rep.order(); ++g) {
    Matrix moved = rep.conjugate(g, hs);  // U h U^dagger
    tr += hs.conjugate().cwiseProduct(moved).sum();
  }
  AcceptanceReport r;
  r.simulated = acc.squaredNorm();
  r.closed_form = tr.real() / (static_cast<double>(d) * static_cast<double>(rep.order()));
  r.method = "circuit|trace";
  return r;
}

HamiltonianSpec transverse_ising(int n) {
  if (n < 2) throw ValidationError("transverse_ising: need N >= 2");
  if (n > 12) throw ValidationError("transverse_ising: N exceeds dimension cap");
  Matrix zz = tensor(pauli_z(), pauli_z());
  std::vector<LocalTerm> terms;
  terms.push_back({zz, {n - 1, 0}});
  for (int i = 0; i + 1 < n; ++i) terms.push_back({zz, {i, i + 1}});
  for (int i = 0; i < n; ++i) terms.push_back({pauli_x(), {i}});
  return HamiltonianSpec::from_terms(std::move(terms), Dims(n, 2));
}

HamiltonianSpec nmr(double w1, double w2, double j) {
  double avg = 0.5 * (w1 + w2);
  double dw = w2 - w1;
  double pj = std::numbers::pi * j;
  Matrix h = Matrix::Zero(4, 4);
  h(0, 0) = -avg + pj / 2.0;
  h(1, 1) = (dw - pj) / 2.0;
  h(2, 2) = -(dw + pj) / 2.0;
  h(3, 3) = avg + pj / 2.0;
  // Local-term form of the same diagonal, for Trotterization.
  std::vector<LocalTerm> terms = {
      {-w1 / 2.0 * pauli_z(), {0}},
      {-w2 / 2.0 * pauli_z(), {1}},
      {pj / 2.0 * tensor(pauli_z(), pauli_z()), {0, 1}},
  };
  HamiltonianSpec s = HamiltonianSpec::from_terms(std::move(terms), {2, 2});
  if ((s.dense() - h).cwiseAbs().maxCoeff() > 1e-12) throw ValidationError("nmr: term form disagrees with diagonal");
  return s;
}

HamiltonianSpec heisenberg_xy(int n, double j) {
  if (n < 2) throw ValidationError("heisenberg_xy: need N >= 2");
  if (n > 12) throw ValidationError("heisenberg_xy: N exceeds dimension cap");
  Matrix xx = j * tensor(pauli_x(), pauli_x());
  Matrix yy = j * tensor(pauli_y(), pauli_y());
  std::vector<LocalTerm> terms;
  for (int i = 0; i + 1 < n; ++i) {
    terms.push_back({xx, {i, i + 1}});
    terms.push_back({yy, {i, i + 1}});
  }
  return HamiltonianSpec::from_terms(std::move(terms), Dims(n, 2));
}

}  // namespace symtest
