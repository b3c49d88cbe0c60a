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

#ifndef SYMTEST_HAM_SYMMETRY_HPP
#define SYMTEST_HAM_SYMMETRY_HPP

#include <complex>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "symtest/groups.hpp"
#include "symtest/linalg.hpp"
#include "symtest/state_symmetry.hpp"

namespace symtest {

inline constexpr double kTermHermitianTol = 1e-10;

struct LocalTerm {
  Matrix matrix;
  std::vector<int> support;
};

/// A Hamiltonian either as one dense matrix or as a sum of local terms.
class HamiltonianSpec {
 public:
  static HamiltonianSpec from_dense(Matrix h, Dims dims = {});
  static HamiltonianSpec from_terms(std::vector<LocalTerm> terms, Dims dims);
  /// "ZZ+XI+IX" with one coefficient per string. Leading '-' flips a sign.
  static HamiltonianSpec from_pauli_strings(const std::string& expr, const std::vector<double>& coeffs);

  bool has_terms() const { return !terms_.empty(); }
  const std::vector<LocalTerm>& terms() const { return terms_; }
  const Dims& dims() const { return dims_; }
  long dim() const { return dense_.rows(); }
  const Matrix& dense() const { return dense_; }

 private:
  HamiltonianSpec() = default;
  Dims dims_;
  std::vector<LocalTerm> terms_;
  Matrix dense_;
};

/// Acceptance of the covariance test for e^{-iHt}. `simulated` is the Choi
/// form Tr[Pi^G Phi^t], `closed_form` the trace form.
AcceptanceReport covariance_acceptance(const HamiltonianSpec& h, const Representation& rep, double t);

/// (prod_j e^{-i H_j t / r})^r on the full space; the first term acts first.
Matrix trotter_evolution(const HamiltonianSpec& h, double t, int r);

/// Least-squares slope of log(y) against log(x).
double loglog_slope(const std::vector<double>& x, const std::vector<double>& y);

struct SeriesReport {
  int order = 0;
  double t = 0.0;
  std::vector<double> coefficients;  // c_n, term n is (-1)^n t^{2n} c_n / (2n)!
  std::vector<double> partial_sums;  // s_0..s_N
  double exact = 0.0;
  std::vector<double> residuals;     // |s_n - exact|
};

/// c_n = (1/(d|G|)) sum_g ||[(H)^n, U(g)]||_2^2 for n = 0..n_max.
std::vector<double> commutator_coefficients(const Matrix& h, const Representation& rep, int n_max);

/// The same coefficients from the twirl form
/// (1/d) sum_m C(2n,m)(2 - delta_{mn})(-1)^m Tr[T(H^{2n-m}) H^m].
std::vector<double> twirl_series_coefficients(const Matrix& h, const Representation& rep, int n_max);

SeriesReport commutator_series(const HamiltonianSpec& h, const Representation& rep, double t, int order);

struct FixedStateReport {
  double value = 0.0;          // ||T(e^{-iHt})|psi>||^2
  double second_order = 0.0;   // 1 - t^2 bracket
  double bracket = 0.0;        // <T(H^2) - T(H)^2>_psi
};

FixedStateReport fixed_state_acceptance(const HamiltonianSpec& h, const Representation& rep, double t,
                                         const PureState& psi);

struct MaxOverStatesReport {
  double value = 0.0;                    // ||T(e^{-iHt})||_inf^2
  double tau = 0.0;                      // ||H||_inf t
  double bound_evolution = 0.0;          // 1 - (2/|G|) sum ||[U, e^{-iHt}]||
  std::optional<double> bound_small_t;   // only when tau < 1
  double bound_nested = 0.0;             // clamped to 0 once the series sum reaches 1
  bool nested_clamped = false;
};

MaxOverStatesReport max_over_states_acceptance(const HamiltonianSpec& h, const Representation& rep, double t);

struct Dqc1Report {
  double lhs = 0.0;        // Choi-form covariance acceptance
  double lhs_trace = 0.0;  // trace-form covariance acceptance
  double rhs = 0.0;        // 1/4 + Re Tr[U^2]/(4d)
};

/// Covariance test with G = {I, V}, V = |0><1| (x) U + |1><0| (x) U^dagger and
/// evolution under (pi/2)(I - Had) (x) I for unit time.
Dqc1Report dqc1_reduction_check(const Matrix& u);

/// Covariance acceptance for the exponentiation of a state used as a
/// Hamiltonian. `closed_form` holds the second-order expansion.
AcceptanceReport dme_acceptance(const DensityMatrix& rho, const Representation& rep, double t);

struct OtocReport {
  std::vector<double> probabilities;    // Pr[g~] indexed by label
  std::vector<cplx> otoc;               // (1/d) Tr[U^dag(h) e^{iHt} U(h) e^{-iHt}] by label
  std::vector<cplx> recovered;          // inverse Fourier transform of probabilities
  double max_imaginary = 0.0;           // largest |Im Pr| before it was dropped
};

/// Requires a rep table carrying cyclic labels.
OtocReport abelian_otoc(const HamiltonianSpec& h, const UnitaryRepTable& rep, double t);

struct OtocSample {
  long samples = 0;                 // N >= (4/eps^2) ln(4/delta)
  std::vector<double> frequencies;  // empirical Pr[g~]
  std::vector<cplx> estimates;      // empirical E[Y^h]
};

long hoeffding_samples(double epsilon, double delta);

OtocSample abelian_otoc_sample(const HamiltonianSpec& h, const UnitaryRepTable& rep, double t, double epsilon,
                               double delta, std::uint64_t seed);

/// (1/(d|G|)) sum_g Tr[U^dag(g) h U(g) h]; `simulated` runs the block-encoding
/// circuit, `closed_form` the trace formula.
AcceptanceReport block_encoding_acceptance(const Matrix& h, const Representation& rep);

HamiltonianSpec transverse_ising(int n);
/// Follows the displayed diagonal form with omega_avg and delta omega.
HamiltonianSpec nmr(double w1, double w2, double j);
HamiltonianSpec heisenberg_xy(int n, double j);

}  // namespace symtest

#endif  // SYMTEST_HAM_SYMMETRY_HPP
