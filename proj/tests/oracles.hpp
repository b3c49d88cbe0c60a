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

// Reference implementations used only by the tests. They share no code with
// the library beyond the Eigen types: dense Kronecker products, explicit
// permutation matrices and Eigen's own matrix exponential.

#ifndef SYMTEST_TESTS_ORACLES_HPP
#define SYMTEST_TESTS_ORACLES_HPP

#include <Eigen/Dense>
#include <complex>
#include <numeric>
#include <unsupported/Eigen/MatrixFunctions>
#include <vector>

namespace oracle {

using cplx = std::complex<double>;
using Mat = Eigen::MatrixXcd;
using Vec = Eigen::VectorXcd;

inline Mat kron(const Mat& a, const Mat& b) {
  Mat out(a.rows() * b.rows(), a.cols() * b.cols());
  for (long i = 0; i < a.rows(); ++i) {
    for (long j = 0; j < a.cols(); ++j) out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  }
  return out;
}

inline Mat kron_power(const Mat& a, int k) {
  Mat out = Mat::Identity(1, 1);
  for (int i = 0; i < k; ++i) out = kron(out, a);
  return out;
}

/// Matrix moving tensor factor j (of k, each dimension d) to position perm[j].
inline Mat factor_permutation(const std::vector<int>& perm, int d) {
  int k = static_cast<int>(perm.size());
  long total = 1;
  for (int i = 0; i < k; ++i) total *= d;
  Mat w = Mat::Zero(total, total);
  std::vector<int> in(k), out(k);
  for (long c = 0; c < total; ++c) {
    long x = c;
    for (int f = k - 1; f >= 0; --f) {
      in[f] = static_cast<int>(x % d);
      x /= d;
    }
    for (int f = 0; f < k; ++f) out[perm[f]] = in[f];
    long r = 0;
    for (int f = 0; f < k; ++f) r = r * d + out[f];
    w(r, c) = 1.0;
  }
  return w;
}

/// e^{-iHt} through Eigen's general matrix exponential.
inline Mat evolve(const Mat& h, double t) { return (cplx(0, -t) * h).exp(); }

/// Normalised maximally entangled vector sum_i |ii> / sqrt(d).
inline Vec phi(long d) {
  Vec v = Vec::Zero(d * d);
  for (long i = 0; i < d; ++i) v(i * d + i) = 1.0 / std::sqrt(static_cast<double>(d));
  return v;
}

/// Tr[Pi^G Phi^t] with Pi^G = (1/|G|) sum conj(U) (x) U built densely.
inline double choi_acceptance(const Mat& h, const std::vector<Mat>& us, double t) {
  long d = h.rows();
  Mat w = evolve(h, t);
  Vec v = kron(Mat::Identity(d, d), w) * phi(d);
  Mat proj = Mat::Zero(d * d, d * d);
  for (const auto& u : us) proj += kron(u.conjugate(), u);
  proj /= static_cast<double>(us.size());
  return v.dot(proj * v).real();
}

/// Trace norm from the eigenvalues of a Hermitian matrix.
inline double trace_norm_hermitian(const Mat& m) {
  Eigen::SelfAdjointEigenSolver<Mat> es((m + m.adjoint()) / 2.0, Eigen::EigenvaluesOnly);
  return es.eigenvalues().cwiseAbs().sum();
}

/// Least-squares slope of log y against log x.
inline double slope(const std::vector<double>& x, const std::vector<double>& y) {
  double n = static_cast<double>(x.size());
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    double lx = std::log(x[i]), ly = std::log(y[i]);
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
  }
  return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

}  // namespace oracle

#endif  // SYMTEST_TESTS_ORACLES_HPP
