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

#include "symtest/state_symmetry.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

namespace symtest {

namespace {

constexpr double kClampTol = 1e-12;

std::vector<std::vector<long>> index_maps(const PermutationRep& p) {
  std::vector<std::vector<long>> maps(p.group().order(), std::vector<long>(p.dim()));
  for (std::size_t g = 0; g < p.group().order(); ++g) {
    for (long i = 0; i < p.dim(); ++i) maps[g][i] = p.map_index(g, i);
  }
  return maps;
}

double clamp_probability(double p) {
  if (p < kClampTol) return std::max(p, 0.0);
  if (p > 1.0 - kClampTol) return std::min(p, 1.0);
  return p;
}

}  // namespace

AcceptanceReport bose_acceptance(const DensityMatrix& rho, const Representation& rep) {
  if (rho.dim() != rep.dim()) {
    throw ValidationError("bose_acceptance: state dimension " + std::to_string(rho.dim()) +
                          " does not match rep dimension " + std::to_string(rep.dim()));
  }
  const Matrix& r = rho.matrix();
  std::size_t n = rep.order();
  long d = rep.dim();
  double formula = 0.0;
  double circuit = 0.0;
  if (auto p = rep.permutation()) {
    auto maps = index_maps(*p);
    std::vector<std::vector<long>> inv(n, std::vector<long>(d));
    for (std::size_t g = 0; g < n; ++g) {
      for (long i = 0; i < d; ++i) inv[g][maps[g][i]] = i;
    }
    // Tr[W rho] = sum_c rho(c, W(c)).
    for (std::size_t g = 0; g < n; ++g) {
      cplx acc = 0;
      for (long c = 0; c < d; ++c) acc += r(c, maps[g][c]);
      formula += acc.real();
    }
    // Block (g, h) of the controlled state is W_g rho W_h^dagger / |G|.
    for (std::size_t g = 0; g < n; ++g) {
      for (std::size_t h = 0; h < n; ++h) {
        cplx acc = 0;
        for (long i = 0; i < d; ++i) acc += r(inv[g][i], inv[h][i]);
        circuit += acc.real();
      }
    }
  } else {
    const auto& t = *rep.table();
    std::vector<Matrix> ur(n);
    for (std::size_t g = 0; g < n; ++g) {
      ur[g] = t[g] * r;
      formula += ur[g].trace().real();
    }
    for (std::size_t g = 0; g < n; ++g) {
      for (std::size_t h = 0; h < n; ++h) circuit += ur[g].cwiseProduct(t[h].conjugate()).sum().real();
    }
  }
  AcceptanceReport rep_out;
  rep_out.closed_form = formula / static_cast<double>(n);
  rep_out.simulated = circuit / static_cast<double>(n * n);
  rep_out.method = "circuit|projector";
  return rep_out;
}

AcceptanceReport bose_circuit_sample(const PureState& psi, const Representation& rep, long shots,
                                     std::uint64_t seed) {
  if (shots < 1) throw ValidationError("bose_circuit_sample: shots must be >= 1");
  long d = rep.dim();
  if (psi.dim() % d != 0) {
    throw ValidationError("bose_circuit_sample: rep dimension " + std::to_string(d) +
                          " does not divide state dimension " + std::to_string(psi.dim()));
  }
  long d_ref = psi.dim() / d;
  Vector proj = Vector::Zero(psi.dim());
  for (std::size_t g = 0; g < rep.order(); ++g) {
    for (long a = 0; a < d_ref; ++a) {
      proj.segment(a * d, d) += rep.apply(g, psi.vector().segment(a * d, d));
    }
  }
  proj /= static_cast<double>(rep.order());
  double p = clamp_probability(proj.squaredNorm());
  std::mt19937_64 rng(seed);
  std::binomial_distribution<long> bin(shots, p);
  long accepted = bin(rng);
  AcceptanceReport out;
  out.simulated = static_cast<double>(accepted) / static_cast<double>(shots);
  out.closed_form = p;
  out.shots = shots;
  out.seed = seed;
  out.method = "sampled|projector";
  out.meta["standard_error"] = std::sqrt(p * (1.0 - p) / static_cast<double>(shots));
  return out;
}

PurificationCheck symmetric_purification_check(const DensityMatrix& omega, const Representation& rep) {
  if (omega.dim() != rep.dim()) throw ValidationError("symmetric_purification_check: dimension mismatch");
  // (sqrt(omega) (x) I)|Gamma> stored as the d x d coefficient matrix sqrt(omega).
  Matrix psi = sqrtm_psd(omega.matrix());
  PurificationCheck out;
  for (std::size_t g = 0; g < rep.order(); ++g) {
    Matrix u = rep.matrix(g);
    // (A (x) B) acting on coefficient matrix X gives A X B^T.
    Matrix moved = u * psi * u.conjugate().transpose();
    out.defect = std::max(out.defect, (moved - psi).norm());
  }
  out.symmetric = out.defect <= 1e-8;
  return out;
}

double multipartite_bose_acceptance(const PureState& psi, const Dims& parties, int k) {
  if (k < 1) throw ValidationError("multipartite_bose_acceptance: k must be >= 1");
  if (parties.empty() || product(parties) != psi.dim()) {
    throw ValidationError("multipartite_bose_acceptance: party dimensions do not match the state");
  }
  long total = 1;
  for (int c = 0; c < k; ++c) {
    total *= psi.dim();
    if (total > kMaxDim) throw ValidationError("multipartite_bose_acceptance: k copies exceed dimension cap");
  }
  int m = static_cast<int>(parties.size());
  Dims dims;
  for (int c = 0; c < k; ++c) dims.insert(dims.end(), parties.begin(), parties.end());
  Vector v = tensor_power(psi.vector(), k);
  std::vector<int> perm(k);
  for (int i = 0; i < m; ++i) {
    Vector acc = Vector::Zero(v.size());
    std::iota(perm.begin(), perm.end(), 0);
    long count = 0;
    do {
      std::vector<int> order(dims.size());
      for (int c = 0; c < k; ++c) {
        for (int j = 0; j < m; ++j) order[c * m + j] = (j == i) ? perm[c] * m + i : c * m + j;
      }
      acc += permute_factors(v, dims, order);
      ++count;
    } while (std::next_permutation(perm.begin(), perm.end()));
    v = acc / static_cast<double>(count);
  }
  return std::clamp(v.squaredNorm(), 0.0, 1.0);
}

Matrix choi_state(const Matrix& w, int dim_a, int dim_b) {
  require_unitary(w, "channel dilation", 1e-9);
  long n = w.rows();
  if (dim_a < 1 || dim_b < 1 || n % dim_a != 0 || n % dim_b != 0) {
    throw ValidationError("choi_state: dilation dimension " + std::to_string(n) + " is not a multiple of A and B");
  }
  long e_in = n / dim_a;
  long e_out = n / dim_b;
  Matrix psi(dim_a, n);  // rows r, columns (b, e_out)
  for (long r = 0; r < dim_a; ++r) psi.row(r) = w.col(r * e_in).transpose() / std::sqrt(static_cast<double>(dim_a));
  Vector v(dim_a * n);
  for (long r = 0; r < dim_a; ++r) v.segment(r * n, n) = psi.row(r).transpose();
  return reduced_density(v, {dim_a, dim_b, static_cast<int>(e_out)}, {0, 1});
}

ChannelCovarianceReport channel_covariance_acceptance(const Matrix& w, int dim_a, int dim_b,
                                                      const UnitaryRepTable& in_rep,
                                                      const UnitaryRepTable& out_rep, const ProverConfig& cfg) {
  if (in_rep.dim() != dim_a || out_rep.dim() != dim_b) {
    throw ValidationError("channel_covariance_acceptance: rep dimensions do not match the channel");
  }
  if (in_rep.order() != out_rep.order()) {
    throw ValidationError("channel_covariance_acceptance: input and output reps list different groups");
  }
  Matrix choi = choi_state(w, dim_a, dim_b);
  UnitaryRepTable rep = tensor_reps(conjugate_rep(in_rep), out_rep);
  long n = w.rows();
  long e_in = n / dim_a;
  long e_out = n / dim_b;
  // Purification on E_out (x) (R B): psi(e, (r, b)).
  Matrix psi(e_out, static_cast<long>(dim_a) * dim_b);
  for (long r = 0; r < dim_a; ++r) {
    for (long b = 0; b < dim_b; ++b) {
      for (long e = 0; e < e_out; ++e) {
        psi(e, r * dim_b + b) = w(b * e_out + e, r * e_in) / std::sqrt(static_cast<double>(dim_a));
      }
    }
  }
  DensityMatrix rho(choi, {dim_a, dim_b});
  ChannelCovarianceReport out;
  OptimizationResult pr = prover_acceptance_pure(psi, rep, SymmetryMode::GSym, 1, cfg);
  OptimizationResult st = max_symmetric_fidelity(rho, rep, SymmetryMode::GSym, 1, cfg);
  out.prover = pr.value;
  out.state_side = st.value;
  out.bose = *bose_acceptance(rho, rep).closed_form;
  out.converged = pr.converged && st.converged;
  return out;
}

GentleReport gentle_measurement(const DensityMatrix& rho, const Matrix& projector) {
  if (projector.rows() != rho.dim() || projector.cols() != rho.dim()) {
    throw ValidationError("gentle_measurement: dimension mismatch");
  }
  GentleReport g;
  const Matrix& r = rho.matrix();
  g.acceptance = std::clamp((projector * r).trace().real(), 0.0, 1.0);
  g.epsilon = std::max(0.0, 1.0 - g.acceptance);
  g.disturbance = schatten_norm(r - projector * r * projector, 1.0);
  g.gentle_bound_holds = g.disturbance <= 2.0 * std::sqrt(g.epsilon) + 1e-9;
  g.reverse_bound_holds = g.acceptance >= 1.0 - g.disturbance - 1e-9;
  return g;
}

}  // namespace symtest
