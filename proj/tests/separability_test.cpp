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


#include "symtest/separability.hpp"

#include <gtest/gtest.h>

#include <numeric>

#include "symtest/models.hpp"

namespace symtest {
namespace {

TEST(Partitions, CountsAndClassSizes) {
  std::vector<std::size_t> counts = {1, 2, 3, 5, 7, 11, 15, 22, 30, 42};
  for (int k = 1; k <= 10; ++k) {
    auto ps = partitions(k);
    EXPECT_EQ(ps.size(), counts[k - 1]);
    std::uint64_t total = 0;
    for (const auto& a : ps) total += class_size(a);
    EXPECT_EQ(total, factorial(k));
  }
  EXPECT_EQ(partitions(3).front(), (CycleType{0, 0, 1}));
  EXPECT_EQ(factorial(20), 2432902008176640000ull);
  EXPECT_THROW(factorial(kMaxPartitionK + 1), ValidationError);
  EXPECT_THROW(acceptance_sym(DensityMatrix(Matrix::Identity(2, 2) / 2.0), kMaxPartitionK + 1), ValidationError);
}

TEST(Acceptance, AllSymmetricMethodsAgree) {
  DensityMatrix rho = random_density(3, 2, 1);
  for (int k = 1; k <= 6; ++k) {
    double sym = acceptance_sym(rho, k).p;
    EXPECT_NEAR(acceptance_recurrence(rho, k).p, sym, 1e-12);
    EXPECT_NEAR(acceptance_bell(rho, k).p, sym, 1e-12);
    EXPECT_NEAR(acceptance_group(rho, symmetric_group(k)).p, sym, 1e-12);
    if (k <= 5) {
      EXPECT_NEAR(acceptance_direct(rho, symmetric_group(k)), sym, 1e-12);
    }
  }
}

TEST(Acceptance, PureStatesAlwaysPass) {
  DensityMatrix pure = random_pure_state(3, 2).density();
  for (GroupKind kind : {GroupKind::Symmetric, GroupKind::Cyclic, GroupKind::Dihedral}) {
    for (int k = 3; k <= 7; ++k) EXPECT_NEAR(acceptance_group(pure, make_group(kind, k)).p, 1.0, 1e-12);
  }
}

TEST(Acceptance, MaximallyMixedQubitCountsSymmetricSubspace) {
  DensityMatrix mixed(Matrix::Identity(2, 2) / 2.0);
  for (int k = 1; k <= 12; ++k) EXPECT_NEAR(acceptance_sym(mixed, k).p, (k + 1) / std::pow(2.0, k), 1e-14);
}

TEST(Acceptance, SubgroupsAcceptAtLeastAsOften) {
  DensityMatrix rho = w_reduced(3);
  for (int k = 3; k <= 8; ++k) {
    double s = acceptance_group(rho, symmetric_group(k)).p;
    double d = acceptance_group(rho, dihedral_group(k)).p;
    double c = acceptance_group(rho, cyclic_group(k)).p;
    EXPECT_LE(s, d + 1e-14);
    EXPECT_LE(d, c + 1e-14);
  }
}

TEST(CyclicPower, FormulaMatchesCycleIndexForPrimePowers) {
  DensityMatrix rho = random_density(2, 2, 3);
  for (auto [m, k] : std::vector<std::pair<int, int>>{{2, 1}, {2, 2}, {2, 3}, {3, 1}, {3, 2}, {4, 1}, {5, 1}}) {
    double want = acceptance_group(rho, cyclic_power(m, k)).p;
    EXPECT_NEAR(cyclic_power_formula(rho, m, k), want, 1e-12) << m << "^" << k;
  }
  // In Z_6^2 the formula miscounts the elements of order 6.
  EXPECT_GT(std::abs(cyclic_power_formula(rho, 6, 2) - acceptance_group(rho, cyclic_power(6, 2)).p), 1e-6);
}

TEST(GateCount, Constructions) {
  for (int k = 2; k <= 6; ++k) {
    ResourceCount s = gate_count(GroupKind::Symmetric, k);
    EXPECT_EQ(s.cswap_count, k * (k - 1) / 2);
  }
  ResourceCount c = gate_count(GroupKind::Cyclic, 5);
  EXPECT_EQ(c.controlled_powers, 3);
  EXPECT_EQ(c.cswap_count, 12);
  EXPECT_EQ(c.control_qubits, 3);
  EXPECT_NEAR(c.estimated_cswaps, 4 * std::log2(5.0), 1e-12);
  ResourceCount d = gate_count(GroupKind::Dihedral, 5);
  EXPECT_EQ(d.cswap_count, 2 * 12 + 2);
  EXPECT_EQ(d.control_qubits, 4);
  EXPECT_EQ(gate_count(GroupKind::Cyclic, 8).controlled_powers, 3);
}

TEST(GateCount, RejectionRatio) {
  DensityMatrix rho = w_reduced(3);
  RejectionRatio r = resources_to_rejection(rho, GroupKind::Symmetric, 4);
  EXPECT_NEAR(r.ratio, 6 / (1 - acceptance_sym(rho, 4).p), 1e-12);
  EXPECT_THROW(resources_to_rejection(random_pure_state(2, 4).density(), GroupKind::Cyclic, 4), ValidationError);
}

TEST(GroupKind, ParseAndPrint) {
  for (GroupKind kind : {GroupKind::Symmetric, GroupKind::Cyclic, GroupKind::Dihedral})
    EXPECT_EQ(parse_group_kind(to_string(kind)), kind);
  EXPECT_THROW(parse_group_kind("alt"), ValidationError);
}

}  // namespace
}  // namespace symtest
