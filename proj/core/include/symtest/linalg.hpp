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

#ifndef SYMTEST_LINALG_HPP
#define SYMTEST_LINALG_HPP

#include <complex>
#include <cstdint>
#include <limits>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace symtest {

using cplx = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;

/// Subsystem dimensions, outermost (most significant) factor first.
using Dims = std::vector<int>;

/// Largest Hilbert-space dimension any dense routine will touch.
inline constexpr long kMaxDim = 4096;

inline constexpr double kHermitianTol = 1e-8;
inline constexpr double kStateTol = 1e-10;

/// Input rejected: shape mismatch, non-Hermitian operator, oversize request, ...
class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An iterative optimizer stopped short of its tolerance.
class ConvergenceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

long product(const Dims& dims);

/// Mixed quantum state. Construction validates Hermiticity, unit trace and
/// positivity; the stored matrix is the Hermitian part of the input.
class DensityMatrix {
 public:
  DensityMatrix(Matrix m, Dims dims);
  explicit DensityMatrix(Matrix m);

  const Matrix& matrix() const { return m_; }
  const Dims& dims() const { return dims_; }
  long dim() const { return m_.rows(); }

  double purity() const;

 private:
  Matrix m_;
  Dims dims_;
};

/// Normalized state vector.
class PureState {
 public:
  PureState(Vector v, Dims dims);
  explicit PureState(Vector v);

  const Vector& vector() const { return v_; }
  const Dims& dims() const { return dims_; }
  long dim() const { return v_.size(); }

  DensityMatrix density() const;

 private:
  Vector v_;
  Dims dims_;
};

Matrix tensor(const Matrix& a, const Matrix& b);
Vector tensor(const Vector& a, const Vector& b);
Matrix tensor_all(std::span<const Matrix> factors);
Matrix tensor_power(const Matrix& a, int k);
Vector tensor_power(const Vector& a, int k);

/// Reduced operator on the factors listed in `keep` (kept in ascending order).
Matrix partial_trace(const Matrix& m, const Dims& dims, const std::vector<int>& keep);
DensityMatrix partial_trace(const DensityMatrix& rho, const std::vector<int>& keep);

/// Reduced density matrix of a pure state, computed without forming |v><v|.
Matrix reduced_density(const Vector& v, const Dims& dims, const std::vector<int>& keep);

/// Applies `op` to the factors `targets` (in that order) of a state vector.
Vector apply_on_factors(const Vector& v, const Dims& dims, const std::vector<int>& targets,
                        const Matrix& op);

/// Full-space operator acting as `op` on `support` and as identity elsewhere.
Matrix embed_operator(const Matrix& op, const Dims& dims, const std::vector<int>& support);

/// Reorders tensor factors: output factor i is input factor order[i].
Vector permute_factors(const Vector& v, const Dims& dims, const std::vector<int>& order);
Matrix permute_factors(const Matrix& m, const Dims& dims, const std::vector<int>& order);

double hermiticity_defect(const Matrix& m);
void require_hermitian(const Matrix& m, const std::string& what, double tol = kHermitianTol);
void require_square(const Matrix& m, const std::string& what);
void require_unitary(const Matrix& m, const std::string& what, double tol = 1e-10);
double unitarity_defect(const Matrix& m);

struct HermitianEigen {
  RealVector values;  // ascending
  Matrix vectors;     // columns
};

/// Eigendecomposition of (m + m^dagger)/2 after checking m is Hermitian.
HermitianEigen eigh(const Matrix& m);

/// e^{-i h t} via eigendecomposition.
Matrix expm_hermitian(const Matrix& h, double t);

/// Square root of a positive semidefinite matrix; eigenvalues below zero are clipped.
Matrix sqrtm_psd(const Matrix& m);

/// Uhlmann fidelity ||sqrt(rho) sqrt(sigma)||_1^2.
double fidelity(const DensityMatrix& rho, const DensityMatrix& sigma);
double fidelity(const Matrix& rho, const Matrix& sigma);

inline constexpr double kSpectralNorm = std::numeric_limits<double>::infinity();

/// Tr[|m|^p]^{1/p}; p = kSpectralNorm gives the largest singular value.
double schatten_norm(const Matrix& m, double p);

/// Pure state on reference (x) system whose reduction to the system is rho.
/// The reference has the same dimension as the system.
PureState purify(const DensityMatrix& rho);

DensityMatrix random_density(int d, int rank, std::uint64_t seed);
Matrix random_unitary(int d, std::uint64_t seed);
Matrix random_hermitian(int d, std::uint64_t seed);
PureState random_pure_state(int d, std::uint64_t seed);

Matrix commutator(const Matrix& a, const Matrix& b);

/// [(h)^n, u] = [h, [h, ... [h, u]]] with n nested brackets; n = 0 gives u.
Matrix nested_commutator(const Matrix& h, const Matrix& u, int n);

/// Tr[rho^j] for j = 1..k, from the eigenvalues of rho.
std::vector<double> trace_powers(const DensityMatrix& rho, int k);

/// Unnormalized maximally entangled vector sum_i |i>|i>.
Vector gamma_vector(int d);

/// Normalized maximally entangled vector.
Vector max_entangled(int d);

Matrix pauli_i();
Matrix pauli_x();
Matrix pauli_y();
Matrix pauli_z();
Matrix hadamard();

/// Stateless 64-bit mixer used to derive independent seeds.
std::uint64_t splitmix64(std::uint64_t x);

}  // namespace symtest

#endif  // SYMTEST_LINALG_HPP
