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

// Both sides of the symmetry optimizations: the prover's unitary search and the
// verifier-free fidelity optimization over the symmetric state sets.

#include <cmath>
#include <cstdlib>
#include <functional>
#include <limits>
#include <thread>

#include "parallel.hpp"
#include "symtest/state_symmetry.hpp"

namespace symtest {

namespace {

constexpr double kArmijo = 1e-4;
constexpr int kMaxBacktracks = 40;
constexpr int kMaxRefines = 8;

std::uint64_t restart_seed(std::uint64_t seed, int r) {
  return splitmix64(seed ^ (0x5851f42d4c957f2dULL * static_cast<std::uint64_t>(r + 1)));
}

void check_config(const ProverConfig& cfg) {
  if (cfg.restarts < 1) throw ValidationError("prover config: restarts must be >= 1");
  if (cfg.max_iters < 1) throw ValidationError("prover config: max_iters must be >= 1");
  if (!(cfg.tolerance > 0)) throw ValidationError("prover config: tolerance must be positive");
  if (!(cfg.initial_step > 0)) throw ValidationError("prover config: initial step must be positive");
  if (cfg.ancilla_dim && *cfg.ancilla_dim < 1) throw ValidationError("prover config: ancilla_dim must be >= 1");
}

// Splits rep.dim() into (R, S) for the extension modes.
int system_dim(const Representation& rep, SymmetryMode mode, int ref_dim) {
  if (mode == SymmetryMode::GSym) return static_cast<int>(rep.dim());
  if (ref_dim < 1 || rep.dim() % ref_dim != 0) {
    throw ValidationError("reference dimension " + std::to_string(ref_dim) + " does not divide rep dimension " +
                          std::to_string(rep.dim()));
  }
  return static_cast<int>(rep.dim() / ref_dim);
}

OptimizationResult merge(std::vector<OptimizationResult>& runs) {
  OptimizationResult best;
  int bi = 0;
  for (int r = 0; r < static_cast<int>(runs.size()); ++r) {
    if (runs[r].value > runs[bi].value) bi = r;
  }
  best = runs[bi];
  best.best_restart = bi;
  best.restart_values.clear();
  for (const auto& run : runs) best.restart_values.push_back(run.value);
  return best;
}

// ---------------------------------------------------------------------------
// Prover side

struct ProverProblem {
  Matrix x_in;   // (dS' dE) x dS, purification with ancilla |0>
  Matrix q;      // Pi^dagger Pi on (out, S)
  long d_out = 1;
  long d_env = 1;  // E'
  long d_s = 1;
};

// Q applied to Phi, where Phi has rows (out, e') and columns s.
Matrix apply_q(const ProverProblem& p, const Matrix& phi) {
  long n_os = p.d_out * p.d_s;
  Matrix m(n_os, p.d_env);
  for (long o = 0; o < p.d_out; ++o) {
    for (long e = 0; e < p.d_env; ++e) {
      for (long s = 0; s < p.d_s; ++s) m(o * p.d_s + s, e) = phi(o * p.d_env + e, s);
    }
  }
  Matrix qm = p.q * m;
  Matrix out(phi.rows(), phi.cols());
  for (long o = 0; o < p.d_out; ++o) {
    for (long e = 0; e < p.d_env; ++e) {
      for (long s = 0; s < p.d_s; ++s) out(o * p.d_env + e, s) = qm(o * p.d_s + s, e);
    }
  }
  return out;
}

double prover_value(const ProverProblem& p, const Matrix& v, Matrix* phi_out = nullptr, Matrix* qphi_out = nullptr) {
  Matrix phi = v * p.x_in;
  Matrix qphi = apply_q(p, phi);
  double f = phi.conjugate().cwiseProduct(qphi).sum().real();
  if (phi_out) *phi_out = std::move(phi);
  if (qphi_out) *qphi_out = std::move(qphi);
  return f;
}

OptimizationResult prover_run(const ProverProblem& p, const Matrix& v0, const ProverConfig& cfg) {
  Matrix v = v0;
  Matrix phi, qphi;
  double f = prover_value(p, v, &phi, &qphi);
  double eta = cfg.initial_step;
  OptimizationResult res;
  res.converged = false;
  int it = 0;
  double last_change = std::numeric_limits<double>::infinity();
  for (; it < cfg.max_iters; ++it) {
    // Riemannian gradient on U(n): f(e^{i eta G} V) grows at rate ||G||_2^2.
    Matrix g = cplx(0, 1) * (phi * qphi.adjoint() - qphi * phi.adjoint());
    g = (g + g.adjoint()) / 2.0;
    double g2 = g.squaredNorm();
    if (g2 < 1e-24) {
      res.converged = true;
      last_change = 0.0;
      break;
    }
    bool accepted = false;
    Matrix v_new;
    double f_new = f;
    for (int bt = 0; bt < kMaxBacktracks; ++bt) {
      v_new = expm_hermitian(g, -eta) * v;
      f_new = prover_value(p, v_new);
      if (f_new >= f + kArmijo * eta * g2) {
        accepted = true;
        break;
      }
      eta *= 0.5;
    }
    if (!accepted) {
      res.converged = true;  // no ascent direction left at machine precision
      last_change = 0.0;
      break;
    }
    // An accepted step can still overshoot along a fast direction; keep
    // halving while that helps.
    for (int bt = 0; bt < kMaxRefines; ++bt) {
      Matrix v_half = expm_hermitian(g, -eta / 2) * v;
      double f_half = prover_value(p, v_half);
      if (f_half <= f_new) break;
      eta /= 2;
      v_new = std::move(v_half);
      f_new = f_half;
    }
    v = v_new;
    last_change = f_new - f;
    f = prover_value(p, v, &phi, &qphi);
    eta = std::min(eta * 2.0, 64.0);
    if (last_change < cfg.tolerance) {
      res.converged = true;
      ++it;
      break;
    }
  }
  res.value = std::clamp(f, 0.0, 1.0);
  res.iterations = it;
  res.gap = last_change;
  res.optimizer = v;
  return res;
}

// Pi on (out, S) for each mode, as a dense matrix.
Matrix mode_projector(const Representation& rep, SymmetryMode mode, int ref_dim, int d_s) {
  UnitaryRepTable u = to_table(rep);
  switch (mode) {
    case SymmetryMode::GSym: {
      // out = S-hat carrying conj(U); order (S-hat, S).
      return group_projector(tensor_reps(conjugate_rep(u), u));
    }
    case SymmetryMode::GBSE:
      return group_projector(u);  // out = R; order (R, S)
    case SymmetryMode::GSE: {
      // Pi on (R, S, R-hat S-hat) reordered to (R, R-hat S-hat, S).
      Matrix pi = group_projector(tensor_reps(u, conjugate_rep(u)));
      int x = ref_dim * d_s;
      return permute_factors(pi, {ref_dim, d_s, x}, {0, 2, 1});
    }
  }
  return {};
}

long output_dim(SymmetryMode mode, int d_s, int ref_dim) {
  switch (mode) {
    case SymmetryMode::GSym:
      return d_s;
    case SymmetryMode::GBSE:
      return ref_dim;
    case SymmetryMode::GSE:
      return static_cast<long>(ref_dim) * ref_dim * d_s;
  }
  return 1;
}

long min_env_out(SymmetryMode mode, int d_s, int ref_dim) {
  return mode == SymmetryMode::GBSE ? static_cast<long>(ref_dim) * d_s : 1;
}

// ---------------------------------------------------------------------------
// State side

constexpr int kCertifiedStalls = 50;

// sigma = L(A) / Tr[K A] with A = T T^dagger; K is L^dagger(I).
struct StateProblem {
  long dim_a = 1;
  std::function<Matrix(const Matrix&)> lmap;
  std::function<Matrix(const Matrix&)> ladj;
  Matrix k;
  bool bound_valid = true;
};

struct FidelityEval {
  double sqrt_f = 0.0;
  Matrix sigma;
  Matrix gamma;  // sqrt(rho) M^{-1/2} sqrt(rho)
};

FidelityEval eval_fidelity(const Matrix& sqrt_rho, const StateProblem& sp, const Matrix& t) {
  Matrix a = t * t.adjoint();
  double norm = sp.k.conjugate().cwiseProduct(a).sum().real();
  FidelityEval e;
  e.sigma = sp.lmap(a) / norm;
  Matrix m = sqrt_rho * e.sigma * sqrt_rho;
  Eigen::SelfAdjointEigenSolver<Matrix> es((m + m.adjoint()) / 2.0);
  RealVector ev = es.eigenvalues().cwiseMax(0.0);
  double top = ev.maxCoeff();
  RealVector inv(ev.size());
  for (long i = 0; i < ev.size(); ++i) inv(i) = ev(i) > 1e-14 * std::max(top, 1e-300) ? 1.0 / std::sqrt(ev(i)) : 0.0;
  e.sqrt_f = ev.cwiseSqrt().sum();
  e.gamma = sqrt_rho * es.eigenvectors() * inv.cast<cplx>().asDiagonal() * es.eigenvectors().adjoint() * sqrt_rho;
  return e;
}

OptimizationResult state_run(const Matrix& sqrt_rho, const StateProblem& sp, Matrix t, const ProverConfig& cfg) {
  t /= t.norm();
  FidelityEval cur = eval_fidelity(sqrt_rho, sp, t);
  double eta = 1.0;
  OptimizationResult res;
  int it = 0;
  double gap = std::numeric_limits<double>::infinity();
  int stalls = 0;
  for (; it < cfg.max_iters; ++it) {
    Matrix a = t * t.adjoint();
    double norm = sp.k.conjugate().cwiseProduct(a).sum().real();
    Matrix ladj_gamma = sp.ladj(cur.gamma);
    ladj_gamma = (ladj_gamma + ladj_gamma.adjoint()) / 2.0;
    if (sp.bound_valid) {
      // sqrt F is concave in sigma, so the linearization bounds the optimum.
      double lmax = Eigen::SelfAdjointEigenSolver<Matrix>(ladj_gamma, Eigen::EigenvaluesOnly).eigenvalues().maxCoeff();
      double upper = std::min(1.0, 0.5 * (cur.sqrt_f + lmax));
      gap = upper * upper - cur.sqrt_f * cur.sqrt_f;
      if (gap <= cfg.tolerance) {
        res.converged = true;
        break;
      }
    }
    Matrix gp = (ladj_gamma - cur.sqrt_f * sp.k) / norm;
    Matrix grad = gp * t;
    double g2 = grad.squaredNorm();
    if (g2 < 1e-26) {
      res.converged = !sp.bound_valid || gap < 1e-5;
      break;
    }
    bool accepted = false;
    Matrix t_new;
    FidelityEval next;
    for (int bt = 0; bt < kMaxBacktracks; ++bt) {
      t_new = t + eta * grad;
      t_new /= t_new.norm();
      next = eval_fidelity(sqrt_rho, sp, t_new);
      if (next.sqrt_f >= cur.sqrt_f + kArmijo * eta * g2) {
        accepted = true;
        break;
      }
      eta *= 0.5;
    }
    if (!accepted) {
      res.converged = !sp.bound_valid || gap < 1e-5 || stalls > 0;
      break;
    }
    for (int bt = 0; bt < kMaxRefines; ++bt) {
      Matrix t_half = t + (eta / 2) * grad;
      t_half /= t_half.norm();
      FidelityEval half = eval_fidelity(sqrt_rho, sp, t_half);
      if (half.sqrt_f <= next.sqrt_f) break;
      eta /= 2;
      t_new = std::move(t_half);
      next = std::move(half);
    }
    double change = next.sqrt_f * next.sqrt_f - cur.sqrt_f * cur.sqrt_f;
    t = t_new;
    cur = std::move(next);
    eta = std::min(eta * 2.0, 1e3);
    // Without a usable certificate, or when it closes slowly near a
    // rank-deficient optimum, fall back to the objective-change rule.
    stalls = change < cfg.tolerance ? stalls + 1 : 0;
    if (stalls >= (sp.bound_valid ? kCertifiedStalls : 3)) {
      res.converged = true;
      ++it;
      break;
    }
  }
  res.value = std::clamp(cur.sqrt_f * cur.sqrt_f, 0.0, 1.0);
  res.iterations = it;
  res.gap = sp.bound_valid ? gap : std::numeric_limits<double>::quiet_NaN();
  res.optimizer = cur.sigma;
  return res;
}

StateProblem make_state_problem(const Representation& rep, SymmetryMode mode, int ref_dim, int d_s) {
  StateProblem sp;
  sp.bound_valid = rep.phases_trivial();
  switch (mode) {
    case SymmetryMode::GSym: {
      sp.dim_a = d_s;
      sp.lmap = [rep](const Matrix& a) { return twirl(rep, a); };
      sp.ladj = sp.lmap;
      sp.k = Matrix::Identity(d_s, d_s);
      break;
    }
    case SymmetryMode::GBSE: {
      Matrix pi = group_projector(rep);
      long d = rep.dim();
      sp.dim_a = d;
      Dims dims{ref_dim, d_s};
      sp.lmap = [pi, dims](const Matrix& a) { return partial_trace(Matrix(pi * a * pi.adjoint()), dims, {1}); };
      sp.ladj = [pi, ref_dim](const Matrix& x) {
        Matrix ix = tensor(Matrix::Identity(ref_dim, ref_dim), x);
        return Matrix(pi.adjoint() * ix * pi);
      };
      sp.k = pi.adjoint() * pi;
      break;
    }
    case SymmetryMode::GSE: {
      sp.dim_a = rep.dim();
      Dims dims{ref_dim, d_s};
      sp.lmap = [rep, dims](const Matrix& a) { return partial_trace(twirl(rep, a), dims, {1}); };
      sp.ladj = [rep, ref_dim](const Matrix& x) {
        return twirl(rep, tensor(Matrix::Identity(ref_dim, ref_dim), x));
      };
      sp.k = Matrix::Identity(rep.dim(), rep.dim());
      break;
    }
  }
  return sp;
}

}  // namespace

std::string to_string(SymmetryMode m) {
  switch (m) {
    case SymmetryMode::GSym:
      return "gsym";
    case SymmetryMode::GBSE:
      return "gbse";
    case SymmetryMode::GSE:
      return "gse";
  }
  return "?";
}

int worker_threads() {
  int hw = static_cast<int>(std::thread::hardware_concurrency());
  if (hw < 1) hw = 1;
  if (const char* env = std::getenv("SYMTEST_THREADS")) {
    int cap = std::atoi(env);
    if (cap >= 1) return std::min(hw, cap);
  }
  return hw;
}

int default_ancilla_dim(int purifier_dim, int system_dim_, SymmetryMode mode, int ref_dim) {
  long d_out = output_dim(mode, system_dim_, ref_dim);
  long need = min_env_out(mode, system_dim_, ref_dim);
  for (long e = 1;; ++e) {
    long in = static_cast<long>(purifier_dim) * e;
    if (in % d_out == 0 && in / d_out >= need) return static_cast<int>(e);
  }
}

OptimizationResult prover_acceptance_pure(const Matrix& psi, const Representation& rep, SymmetryMode mode,
                                          int ref_dim, const ProverConfig& cfg) {
  check_config(cfg);
  if (mode == SymmetryMode::GSym) ref_dim = 1;
  int d_s = system_dim(rep, mode, ref_dim);
  if (psi.cols() != d_s) {
    throw ValidationError("prover: state has system dimension " + std::to_string(psi.cols()) + ", rep expects " +
                          std::to_string(d_s));
  }
  if (std::abs(psi.norm() - 1.0) > kStateTol) throw ValidationError("prover: purification is not normalized");
  int d_sp = static_cast<int>(psi.rows());
  int d_e = cfg.ancilla_dim ? *cfg.ancilla_dim : default_ancilla_dim(d_sp, d_s, mode, ref_dim);
  long d_out = output_dim(mode, d_s, ref_dim);
  long d_in = static_cast<long>(d_sp) * d_e;
  if (d_in % d_out != 0) {
    throw ValidationError("prover: ancilla dimension " + std::to_string(d_e) + " leaves no integral output register");
  }
  ProverProblem p;
  p.d_out = d_out;
  p.d_env = d_in / d_out;
  p.d_s = d_s;
  if (d_in * d_s > kMaxDim) throw ValidationError("prover: joint dimension exceeds cap");
  p.x_in = Matrix::Zero(d_in, d_s);
  for (int sp = 0; sp < d_sp; ++sp) p.x_in.row(static_cast<long>(sp) * d_e) = psi.row(sp);
  Matrix pi = mode_projector(rep, mode, ref_dim, d_s);
  p.q = pi.adjoint() * pi;

  std::vector<OptimizationResult> runs(cfg.restarts);
  detail::parallel_for(cfg.restarts, [&](int r) {
    runs[r] = prover_run(p, random_unitary(static_cast<int>(d_in), restart_seed(cfg.seed, r)), cfg);
  });
  OptimizationResult best = merge(runs);
  return best;
}

OptimizationResult prover_acceptance(const DensityMatrix& rho, const Representation& rep, SymmetryMode mode,
                                     int ref_dim, const ProverConfig& cfg) {
  PureState pur = purify(rho);
  long d = rho.dim();
  Matrix psi(d, d);
  for (long r = 0; r < d; ++r) psi.row(r) = pur.vector().segment(r * d, d).transpose();
  return prover_acceptance_pure(psi, rep, mode, ref_dim, cfg);
}

OptimizationResult max_symmetric_fidelity(const DensityMatrix& rho, const Representation& rep, SymmetryMode mode,
                                          int ref_dim, const ProverConfig& cfg) {
  check_config(cfg);
  if (mode == SymmetryMode::GSym) ref_dim = 1;
  int d_s = system_dim(rep, mode, ref_dim);
  if (rho.dim() != d_s) {
    throw ValidationError("max_symmetric_fidelity: state dimension " + std::to_string(rho.dim()) +
                          " does not match system dimension " + std::to_string(d_s));
  }
  StateProblem sp = make_state_problem(rep, mode, ref_dim, d_s);
  Matrix sqrt_rho = sqrtm_psd(rho.matrix());
  std::vector<OptimizationResult> runs(cfg.restarts);
  detail::parallel_for(cfg.restarts, [&](int r) {
    Matrix t0;
    if (r == 0) {
      t0 = Matrix::Identity(sp.dim_a, sp.dim_a);
    } else {
      DensityMatrix a0 = random_density(static_cast<int>(sp.dim_a), static_cast<int>(sp.dim_a), restart_seed(cfg.seed, r));
      t0 = sqrtm_psd(a0.matrix());
    }
    runs[r] = state_run(sqrt_rho, sp, t0, cfg);
  });
  return merge(runs);
}

UnitaryRepTable phase_rep(int d) {
  if (d < 1) throw ValidationError("phase_rep: d must be >= 1");
  std::vector<Matrix> ms;
  std::vector<int> labels;
  for (int z = 0; z < d; ++z) {
    Matrix m = Matrix::Zero(d, d);
    for (int j = 0; j < d; ++j) m(j, j) = std::polar(1.0, 2.0 * M_PI * z * j / d);
    ms.push_back(m);
    labels.push_back(z);
  }
  return UnitaryRepTable("phase:" + std::to_string(d), std::move(ms), {d}, labels);
}

OptimizationResult incoherence_acceptance(const DensityMatrix& rho, const ProverConfig& cfg) {
  return max_symmetric_fidelity(rho, phase_rep(static_cast<int>(rho.dim())), SymmetryMode::GSym, 1, cfg);
}

}  // namespace symtest
