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

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "symtest/models.hpp"

namespace symtest {
namespace {

Matrix dense_projector(const std::vector<std::vector<int>>& perms, int d) {
  Matrix p = Matrix::Zero(1, 1);
  for (const auto& pi : perms) {
    Matrix w = oracle::factor_permutation(pi, d);
    if (p.size() == 1) p = Matrix::Zero(w.rows(), w.cols());
    p += w;
  }
  return p / static_cast<double>(perms.size());
}

TEST(Bose, CircuitMatchesProjectorAndOracle) {
  DensityMatrix rho(random_density(8, 3, 1).matrix(), {2, 2, 2});
  Representation rep = PermutationRep(symmetric_group(3), 2);
  AcceptanceReport r = bose_acceptance(rho, rep);
  ASSERT_TRUE(r.closed_form.has_value());
  EXPECT_NEAR(r.simulated, *r.closed_form, 1e-12);
  Matrix pi = dense_projector({{0, 1, 2}, {1, 0, 2}, {0, 2, 1}, {2, 1, 0}, {1, 2, 0}, {2, 0, 1}}, 2);
  EXPECT_NEAR(r.simulated, (pi * rho.matrix()).trace().real(), 1e-12);
}

TEST(Bose, SymmetricAndAntisymmetricStates) {
  Representation swap = rep_from_spec("sym:2", {2, 2});
  EXPECT_NEAR(bose_acceptance(fixture("bell").density(), swap).simulated, 1.0, 1e-12);
  EXPECT_NEAR(bose_acceptance(fixture("singlet").density(), swap).simulated, 0.0, 1e-12);
}

TEST(Bose, SampledEstimateIsClose) {
  PureState psi = random_pure_state(4, 2);
  PureState s(psi.vector(), {2, 2});
  Representation swap = rep_from_spec("sym:2", {2, 2});
  double exact = bose_acceptance(s.density(), swap).simulated;
  AcceptanceReport r = bose_circuit_sample(s, swap, 20000, 5);
  EXPECT_EQ(r.shots, 20000);
  EXPECT_NEAR(r.simulated, exact, 5 * std::sqrt(0.25 / 20000));
  // Same seed, same estimate.
  EXPECT_EQ(bose_circuit_sample(s, swap, 20000, 5).simulated, r.simulated);
}

TEST(GSym, BasisStateUnderSwapHasHalfFidelity) {
  DensityMatrix rho = fixture("product:01").density();
  Representation swap = rep_from_spec("sym:2", rho.dims());
  ProverConfig cfg;
  auto st = max_symmetric_fidelity(rho, swap, SymmetryMode::GSym, 1, cfg);
  auto pv = prover_acceptance(rho, swap, SymmetryMode::GSym, 1, cfg);
  EXPECT_TRUE(st.converged);
  EXPECT_TRUE(pv.converged);
  EXPECT_NEAR(st.value, 0.5, 1e-5);
  EXPECT_NEAR(pv.value, 0.5, 1e-5);
}

TEST(GSym, InvariantStateAcceptsWithCertainty) {
  Representation rep = rep_from_spec("z2xz2-pauli", {2, 2});
  Matrix sym = twirl(rep, random_density(4, 4, 3).matrix());
  DensityMatrix rho(sym, {2, 2});
  ProverConfig cfg;
  EXPECT_NEAR(max_symmetric_fidelity(rho, rep, SymmetryMode::GSym, 1, cfg).value, 1.0, 1e-6);
  EXPECT_NEAR(prover_acceptance(rho, rep, SymmetryMode::GSym, 1, cfg).value, 1.0, 1e-6);
}

TEST(GSE, SwapExtensionAlwaysExists) {
  DensityMatrix rho = random_density(2, 2, 4);
  Representation swap = rep_from_spec("sym:2", {2, 2});
  ProverConfig cfg;
  auto st = max_symmetric_fidelity(rho, swap, SymmetryMode::GSE, 2, cfg);
  auto pv = prover_acceptance(rho, swap, SymmetryMode::GSE, 2, cfg);
  EXPECT_NEAR(st.value, 1.0, 1e-5);
  EXPECT_NEAR(pv.value, 1.0, 1e-5);
}

TEST(GBSE, ProverAndStateSidesAgree) {
  DensityMatrix rho = random_density(2, 2, 5);
  Representation rep = rep_from_spec("d3-cnot-swap", {2, 2});
  ProverConfig cfg;
  auto st = max_symmetric_fidelity(rho, rep, SymmetryMode::GBSE, 2, cfg);
  auto pv = prover_acceptance(rho, rep, SymmetryMode::GBSE, 2, cfg);
  EXPECT_NEAR(st.value, pv.value, 1e-3);
  EXPECT_LE(pv.value, 1.0 + 1e-12);
}

TEST(Prover, RejectsBadConfig) {
  DensityMatrix rho = random_density(2, 2, 6);
  Representation swap = rep_from_spec("sym:2", {2, 2});
  ProverConfig cfg;
  cfg.restarts = 0;
  EXPECT_THROW(prover_acceptance(rho, swap, SymmetryMode::GSE, 2, cfg), ValidationError);
  cfg.restarts = 2;
  EXPECT_THROW(prover_acceptance(rho, swap, SymmetryMode::GSE, 3, cfg), ValidationError);
}

TEST(Incoherence, DiagonalAndPlusStates) {
  ProverConfig cfg;
  EXPECT_NEAR(incoherence_acceptance(fixture("product:0").density(), cfg).value, 1.0, 1e-6);
  EXPECT_NEAR(incoherence_acceptance(fixture("product:+").density(), cfg).value, 0.5, 1e-5);
  UnitaryRepTable z = phase_rep(3);
  EXPECT_EQ(z.order(), 3u);
  EXPECT_TRUE(z.cyclic_labels().has_value());
}

TEST(Purification, TwirledStateHasSymmetricPurification) {
  Representation rep = rep_from_spec("cyc:3", {2, 2, 2});
  DensityMatrix omega(twirl(rep, random_density(8, 8, 7).matrix()), {2, 2, 2});
  PurificationCheck c = symmetric_purification_check(omega, rep);
  EXPECT_TRUE(c.symmetric);
  EXPECT_LT(c.defect, 1e-8);
  PurificationCheck bad = symmetric_purification_check(DensityMatrix(random_density(8, 8, 8).matrix(), {2, 2, 2}), rep);
  EXPECT_FALSE(bad.symmetric);
}

TEST(Multipartite, BellPairAcceptance) {
  // Tr[(Pi_A (x) Pi_B) psi^{(x)2}] = (1 + Tr rho_A^2) / 2 for pure psi.
  PureState bell = std::get<PureState>(fixture("bell").object);
  EXPECT_NEAR(multipartite_bose_acceptance(bell, {2, 2}, 2), 0.75, 1e-12);
  PureState prod(oracle::kron(Matrix(random_pure_state(2, 9).vector()), Matrix(random_pure_state(2, 10).vector())),
                 {2, 2});
  EXPECT_NEAR(multipartite_bose_acceptance(prod, {2, 2}, 3), 1.0, 1e-12);
}

TEST(Channel, IdentityChannelIsCovariant) {
  UnitaryRepTable rep = to_table(rep_from_spec("zflip:1", {2}));
  ProverConfig cfg;
  ChannelCovarianceReport r = channel_covariance_acceptance(Matrix::Identity(2, 2), 2, 2, rep, rep, cfg);
  EXPECT_NEAR(r.bose, 1.0, 1e-10);
  EXPECT_NEAR(r.state_side, 1.0, 1e-6);
  EXPECT_NEAR(r.prover, 1.0, 1e-6);
  Matrix choi = choi_state(Matrix::Identity(2, 2), 2, 2);
  Vector phi = max_entangled(2);
  EXPECT_LT((choi - phi * phi.adjoint()).norm(), 1e-12);
}

TEST(Gentle, IdentityProjectorLeavesStateAlone) {
  DensityMatrix rho = random_density(3, 3, 11);
  GentleReport g = gentle_measurement(rho, Matrix::Identity(3, 3));
  EXPECT_NEAR(g.acceptance, 1.0, 1e-12);
  EXPECT_NEAR(g.disturbance, 0.0, 1e-12);
  EXPECT_TRUE(g.gentle_bound_holds);
  EXPECT_TRUE(g.reverse_bound_holds);
}

TEST(Threads, AtLeastOneWorker) { EXPECT_GE(worker_threads(), 1); }

}  // namespace
}  // namespace symtest
