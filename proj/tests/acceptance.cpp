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

// End-to-end acceptance checks. Prints one PASS/FAIL line per check and
// exits nonzero when any check fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numeric>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "symtest/groups.hpp"
#include "symtest/ham_symmetry.hpp"
#include "symtest/linalg.hpp"
#include "symtest/models.hpp"
#include "symtest/separability.hpp"
#include "symtest/state_symmetry.hpp"

using namespace symtest;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

std::string fmt(const char* f, double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, x);
  return buf;
}

// Oracle permutation groups on {0..k-1}, built without the library.
std::vector<std::vector<int>> oracle_group(char kind, int k) {
  std::vector<std::vector<int>> out;
  if (kind == 'S') {
    std::vector<int> p(k);
    std::iota(p.begin(), p.end(), 0);
    do out.push_back(p);
    while (std::next_permutation(p.begin(), p.end()));
    return out;
  }
  for (int s = 0; s < k; ++s) {
    std::vector<int> p(k);
    for (int j = 0; j < k; ++j) p[j] = (j + s) % k;
    out.push_back(p);
    if (kind == 'D') {
      for (int j = 0; j < k; ++j) p[j] = ((s - j) % k + k) % k;
      out.push_back(p);
    }
  }
  return out;
}

// Tr[W(pi) A] for a factor permutation W, read off column by column.
double oracle_perm_trace(const oracle::Mat& a, const std::vector<int>& perm, int d) {
  int k = static_cast<int>(perm.size());
  long total = a.rows();
  std::vector<int> in(k), out(k);
  double acc = 0;
  for (long c = 0; c < total; ++c) {
    long x = c;
    for (int f = k - 1; f >= 0; --f) {
      in[f] = static_cast<int>(x % d);
      x /= d;
    }
    for (int f = 0; f < k; ++f) out[perm[f]] = in[f];
    long r = 0;
    for (int f = 0; f < k; ++f) r = r * d + out[f];
    acc += a(c, r).real();
  }
  return acc;
}

Outcome cycle_index_matches_direct() {
  double worst = 0;
  int cases = 0;
  for (int d : {2, 3}) {
    for (int k = 2; k <= 6; ++k) {
      DensityMatrix rho = random_density(d, d, 100 + 10 * d + k);
      oracle::Mat rk = oracle::kron_power(rho.matrix(), k);
      for (char kind : {'S', 'C', 'D'}) {
        if (kind == 'D' && k < 3) continue;
        GroupKind gk = kind == 'S' ? GroupKind::Symmetric : kind == 'C' ? GroupKind::Cyclic : GroupKind::Dihedral;
        FiniteGroup g = make_group(gk, k);
        double lib = acceptance_group(rho, g).p;
        double direct = acceptance_direct(rho, g);
        auto els = oracle_group(kind, k);
        double ref = 0;
        for (const auto& p : els) ref += oracle_perm_trace(rk, p, d);
        ref /= static_cast<double>(els.size());
        worst = std::max({worst, std::abs(lib - direct), std::abs(lib - ref)});
        ++cases;
      }
    }
  }
  return {worst <= 1e-10, std::to_string(cases) + " cases, max diff " + fmt("%.2e", worst)};
}

Outcome symmetric_polynomial_coefficients() {
  // Coefficients listed from x1^k upward, as conventionally displayed.
  std::vector<std::vector<std::uint64_t>> expected = {{1, 1}, {1, 3, 2}, {1, 6, 3, 8, 6}};
  bool ok = true;
  std::ostringstream msg;
  for (int k = 2; k <= 4; ++k) {
    auto parts = partitions(k);
    std::vector<std::uint64_t> got;
    for (auto it = parts.rbegin(); it != parts.rend(); ++it) got.push_back(class_size(*it));
    std::uint64_t sum = std::accumulate(got.begin(), got.end(), std::uint64_t{0});
    ok = ok && got == expected[k - 2] && sum == factorial(k);
    msg << "k=" << k << ":";
    for (auto c : got) msg << ' ' << c;
    msg << "/" << factorial(k) << (k < 4 ? "; " : "");
  }
  // The polynomials evaluated on a state agree with the library value.
  DensityMatrix rho = random_density(3, 2, 7);
  auto tr = trace_powers(rho, 4);
  double x1 = tr[0], x2 = tr[1], x3 = tr[2], x4 = tr[3];
  double p2 = (x1 * x1 + x2) / 2;
  double p3 = (x1 * x1 * x1 + 3 * x2 * x1 + 2 * x3) / 6;
  double p4 = (std::pow(x1, 4) + 6 * x1 * x1 * x2 + 3 * x2 * x2 + 8 * x1 * x3 + 6 * x4) / 24;
  double err = std::max({std::abs(p2 - acceptance_sym(rho, 2).p), std::abs(p3 - acceptance_sym(rho, 3).p),
                         std::abs(p4 - acceptance_sym(rho, 4).p)});
  ok = ok && err <= 1e-12;
  msg << "; eval diff " << fmt("%.1e", err);
  return {ok, msg.str()};
}

Outcome strict_decrease() {
  bool ok = true;
  double min_gap = 1;
  DensityMatrix mixed(Matrix::Identity(2, 2) / 2.0);
  for (const DensityMatrix& rho : {w_reduced(3), mixed}) {
    double prev = acceptance_sym(rho, 1).p;
    for (int k = 2; k <= 10; ++k) {
      double p = acceptance_sym(rho, k).p;
      min_gap = std::min(min_gap, prev - p);
      ok = ok && prev - p > 1e-12;
      prev = p;
    }
  }
  double p10 = acceptance_sym(mixed, 10).p;
  double p10r = acceptance_recurrence(mixed, 10).p;
  // For I/2 the symmetric subspace has dimension k+1 out of 2^k.
  double exact = 11.0 / 1024.0;
  ok = ok && p10 < 0.05 && std::abs(p10 - p10r) <= 1e-12 && std::abs(p10 - exact) <= 1e-12;
  return {ok, "min gap " + fmt("%.3e", min_gap) + ", p10(I/2) " + fmt("%.6f", p10)};
}

Representation random_pauli_rep(int n, std::mt19937_64& rng) {
  const char* letters = "IXYZ";
  std::uniform_int_distribution<int> pick(0, 3), count(1, 2);
  int gens = count(rng);
  std::string spec = "pauli:";
  for (int g = 0; g < gens; ++g) {
    if (g) spec += ',';
    for (int q = 0; q < n; ++q) spec += letters[pick(rng)];
  }
  return rep_from_spec(spec, Dims(n, 2));
}

Outcome choi_matches_trace() {
  std::mt19937_64 rng(2024);
  std::uniform_real_distribution<double> tdist(0.0, 2.0);
  double worst = 0, worst_oracle = 0;
  for (int i = 0; i < 100; ++i) {
    int n = 1 + i % 2;
    Matrix h = random_hermitian(1 << n, 5000 + i);
    Representation rep = random_pauli_rep(n, rng);
    double t = tdist(rng);
    auto r = covariance_acceptance(HamiltonianSpec::from_dense(h, Dims(n, 2)), rep, t);
    std::vector<oracle::Mat> us;
    for (std::size_t g = 0; g < rep.order(); ++g) us.push_back(rep.matrix(g));
    double ref = oracle::choi_acceptance(h, us, t);
    worst = std::max(worst, std::abs(r.simulated - *r.closed_form));
    worst_oracle = std::max(worst_oracle, std::abs(r.simulated - ref));
  }
  return {worst <= 1e-10 && worst_oracle <= 1e-10,
          "max |choi-trace| " + fmt("%.2e", worst) + ", vs dense oracle " + fmt("%.2e", worst_oracle)};
}

Outcome series_order() {
  auto start = std::chrono::steady_clock::now();
  Matrix h = random_hermitian(4, 31);
  HamiltonianSpec spec = HamiltonianSpec::from_dense(h, {2, 2});
  Representation rep = rep_from_spec("sym:2", {2, 2});
  auto c = commutator_coefficients(h, rep, 6);
  bool ok = c[1] > 1e-6;  // asymmetric
  std::ostringstream msg;
  for (int n = 1; n <= 3; ++n) {
    // Window where the first omitted term dominates and stays above round-off.
    double t_hi = std::sqrt(0.05 * (2 * n + 3) * (2 * n + 4) * c[n + 1] / c[n + 2]);
    double t_lo = std::max(std::pow(1e-9 * std::tgamma(2 * n + 3) / c[n + 1], 1.0 / (2 * n + 2)), t_hi / 10);
    std::vector<double> ts, res;
    for (int i = 0; i < 12; ++i) {
      double t = t_lo * std::pow(t_hi / t_lo, i / 11.0);
      auto s = commutator_series(spec, rep, t, n);
      ts.push_back(t);
      res.push_back(s.residuals[n]);
    }
    double sl = oracle::slope(ts, res);
    ok = ok && std::abs(sl - (2 * n + 2)) <= 0.2;
    msg << "N=" << n << " slope " << fmt("%.3f", sl) << " on [" << fmt("%.2g", t_lo) << "," << fmt("%.2g", t_hi)
        << "]; ";
  }
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  ok = ok && secs < 10;
  msg << fmt("%.2f s", secs);
  return {ok, msg.str()};
}

Outcome dqc1_identity() {
  double worst = 0;
  for (int i = 0; i < 50; ++i) {
    int d = 1 + i % 8;
    Matrix u = random_unitary(d, 900 + i);
    auto r = dqc1_reduction_check(u);
    double rhs = 0.25 + (u * u).trace().real() / (4.0 * d);
    worst = std::max({worst, std::abs(r.lhs - rhs), std::abs(r.lhs_trace - rhs), std::abs(r.rhs - rhs)});
  }
  return {worst <= 1e-10, "max diff " + fmt("%.2e", worst)};
}

Outcome symmetric_fixtures() {
  struct Case {
    std::string ham, rep;
  };
  std::vector<Case> cases = {{"tim:3", "shift:3"}, {"tim:3", "xflip:3"}, {"xy:3", "xflip:3"},
                             {"xy:3", "yflip:3"},  {"xy:3", "zflip:3"},  {"nmr:1,2,0.5", "z2xz2-pauli"}};
  double worst = 0;
  for (const auto& c : cases) {
    NamedFixture f = fixture(c.ham);
    const HamiltonianSpec& h = f.hamiltonian();
    Representation rep = rep_from_spec(c.rep, h.dims());
    for (double t : {0.1, 0.5, 1.0}) {
      auto r = covariance_acceptance(h, rep, t);
      worst = std::max({worst, std::abs(1 - r.simulated), std::abs(1 - *r.closed_form)});
    }
  }
  NamedFixture nmr_f = fixture("nmr:1,2,0.5");
  const HamiltonianSpec& nmr_h = nmr_f.hamiltonian();
  double asym = covariance_acceptance(nmr_h, rep_from_spec("d3-cnot-swap", nmr_h.dims()), 0.5).simulated;
  bool ok = worst <= 1e-10 && asym < 1 - 1e-10;
  return {ok, "max |1-p| " + fmt("%.2e", worst) + ", NMR vs D3 at t=0.5: " + fmt("%.6f", asym)};
}

Outcome prover_matches_state() {
  auto start = std::chrono::steady_clock::now();
  std::vector<std::string> reps = {"sym:2", "zflip:2", "z2xz2-pauli", "d3-cnot-swap", "xflip:2"};
  double worst = 0;
  bool all_conv = true;
  ProverConfig cfg;
  cfg.restarts = 8;
  for (int i = 0; i < 20; ++i) {
    DensityMatrix rho(random_density(4, 1 + i % 4, 300 + i).matrix(), {2, 2});
    Representation rep = rep_from_spec(reps[i % reps.size()], {2, 2});
    cfg.seed = 11 + i;
    auto st = max_symmetric_fidelity(rho, rep, SymmetryMode::GSym, 1, cfg);
    auto pv = prover_acceptance(rho, rep, SymmetryMode::GSym, 1, cfg);
    worst = std::max(worst, std::abs(st.value - pv.value));
    all_conv = all_conv && st.converged && pv.converged;
  }
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  bool ok = worst <= 1e-3 && secs < 300;
  return {ok, "max |state-prover| " + fmt("%.2e", worst) + (all_conv ? "" : " (some runs unconverged)") + ", " +
                  fmt("%.1f s", secs)};
}

Outcome gentle_bounds() {
  int held = 0;
  for (int i = 0; i < 200; ++i) {
    int d = 2 + i % 5;
    DensityMatrix rho = random_density(d, 1 + i % d, 7000 + i);
    Matrix u = random_unitary(d, 8000 + i);
    int rank = 1 + (i / 5) % (d - 1);
    Matrix cols = u.leftCols(rank);
    Matrix proj = cols * cols.adjoint();
    auto r = gentle_measurement(rho, proj);
    double acc = (proj * rho.matrix()).trace().real();
    double eps = 1 - acc;
    double dist = oracle::trace_norm_hermitian(rho.matrix() - proj * rho.matrix() * proj);
    bool own = dist <= 2 * std::sqrt(std::max(eps, 0.0)) + 1e-10 && acc >= 1 - dist - 1e-10;
    bool lib = r.gentle_bound_holds && r.reverse_bound_holds && std::abs(r.disturbance - dist) <= 1e-9;
    held += own && lib;
  }
  return {held == 200, std::to_string(held) + "/200 instances satisfy both bounds"};
}

Outcome otoc_round_trip() {
  Matrix h = random_hermitian(4, 4242);
  HamiltonianSpec spec = HamiltonianSpec::from_dense(h);
  UnitaryRepTable table = phase_rep(4);
  double t = 0.7;
  auto r = abelian_otoc(spec, table, t);
  double sum = std::accumulate(r.probabilities.begin(), r.probabilities.end(), 0.0);
  double rt = 0, vs_oracle = 0;
  oracle::Mat w = oracle::evolve(h, t);
  const auto& labels = *table.cyclic_labels();
  for (std::size_t i = 0; i < table.order(); ++i) {
    const Matrix& u = table[i];
    cplx ref = (u.adjoint() * w.adjoint() * u * w).trace() / 4.0;
    vs_oracle = std::max(vs_oracle, std::abs(r.otoc[labels[i]] - ref));
  }
  for (std::size_t l = 0; l < r.otoc.size(); ++l) rt = std::max(rt, std::abs(r.otoc[l] - r.recovered[l]));
  bool ok = rt <= 1e-10 && vs_oracle <= 1e-10 && std::abs(sum - 1) <= 1e-12;
  return {ok, "round trip " + fmt("%.2e", rt) + ", vs oracle " + fmt("%.2e", vs_oracle) + ", |sum-1| " +
                  fmt("%.1e", std::abs(sum - 1))};
}

Outcome gate_counts() {
  bool ok = true;
  std::ostringstream msg;
  std::vector<long> sym = {1, 3, 6, 10};
  for (int k = 2; k <= 5; ++k) ok = ok && gate_count(GroupKind::Symmetric, k).cswap_count == sym[k - 2];
  long powers = gate_count(GroupKind::Cyclic, 5).controlled_powers;
  ok = ok && powers == 3;
  msg << "sym ok=" << ok << ", cyc k=5 powers " << powers << "; cyc/sym ratio on reduced W:";
  DensityMatrix rho = w_reduced(3);
  for (int k = 4; k <= 10; ++k) {
    double c = resources_to_rejection(rho, GroupKind::Cyclic, k).ratio;
    double s = resources_to_rejection(rho, GroupKind::Symmetric, k).ratio;
    bool lower = c < s;
    ok = ok && lower;
    msg << " k=" << k << (lower ? " " : " NOT ") << fmt("%.2f", c) << "<" << fmt("%.2f", s);
  }
  return {ok, msg.str()};
}

Outcome trotter_order() {
  HamiltonianSpec h = transverse_ising(4);
  double t = 1.0;
  Matrix exact = oracle::evolve(h.dense(), t);
  std::vector<double> rs, errs;
  for (int r : {4, 8, 16, 32, 64}) {
    rs.push_back(r);
    errs.push_back(schatten_norm(trotter_evolution(h, t, r) - exact, kSpectralNorm));
  }
  double sl = oracle::slope(rs, errs);
  return {std::abs(sl + 2) <= 0.1, "slope " + fmt("%.3f", sl) + " (errors " + fmt("%.2e", errs.front()) + " .. " +
                                       fmt("%.2e", errs.back()) + ")"};
}

}  // namespace

int main() {
  struct Check {
    const char* name;
    std::function<Outcome()> fn;
  };
  std::vector<Check> checks = {
      {"cycle_index_matches_direct", cycle_index_matches_direct},
      {"symmetric_polynomial_coefficients", symmetric_polynomial_coefficients},
      {"acceptance_strictly_decreases", strict_decrease},
      {"choi_form_matches_trace_form", choi_matches_trace},
      {"commutator_series_order", series_order},
      {"dqc1_identity", dqc1_identity},
      {"symmetric_hamiltonian_fixtures", symmetric_fixtures},
      {"prover_matches_state_optimizer", prover_matches_state},
      {"gentle_measurement_bounds", gentle_bounds},
      {"otoc_fourier_round_trip", otoc_round_trip},
      {"gate_counts_and_rejection_cost", gate_counts},
      {"trotter_error_order", trotter_order},
  };
  int failed = 0;
  for (std::size_t i = 0; i < checks.size(); ++i) {
    Outcome o;
    try {
      o = checks[i].fn();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    failed += !o.pass;
    std::printf("%s %2zu %-36s %s\n", o.pass ? "PASS" : "FAIL", i + 1, checks[i].name, o.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%d of %zu checks failed\n", failed, checks.size());
  return failed == 0 ? 0 : 1;
}
