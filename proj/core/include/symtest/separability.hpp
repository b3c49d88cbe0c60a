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

#ifndef SYMTEST_SEPARABILITY_HPP
#define SYMTEST_SEPARABILITY_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "symtest/groups.hpp"
#include "symtest/linalg.hpp"

namespace symtest {

/// Largest k for which k! fits the exact integer coefficient tables.
inline constexpr int kMaxPartitionK = 20;

struct SeparabilityResult {
  int k = 0;
  std::string group;
  double p = 0.0;
  std::string method;          // cycle-index, recurrence, bell or direct
  std::vector<double> traces;  // traces[j-1] = Tr[rho^j]
};

/// Partitions of k as multiplicity vectors: a[j-1] parts of size j.
/// Listed in lexicographic descent of the parts, starting from {k}.
std::vector<CycleType> partitions(int k);

/// k! / prod_j j^{a_j} a_j!, the number of elements of S_k with cycle type a.
std::uint64_t class_size(const CycleType& a);

std::uint64_t factorial(int k);

SeparabilityResult acceptance_sym(const DensityMatrix& rho, int k);
SeparabilityResult acceptance_recurrence(const DensityMatrix& rho, int k);
SeparabilityResult acceptance_bell(const DensityMatrix& rho, int k);

/// Cycle-index value Z(G)(Tr rho, ..., Tr rho^k).
SeparabilityResult acceptance_group(const DensityMatrix& rho, const FiniteGroup& g);

/// (1/|G|) sum_g Tr[W(g) rho^{(x)k}] contracted entry by entry; d^k <= 4096.
double acceptance_direct(const DensityMatrix& rho, const FiniteGroup& g);

/// (1/m^k) sum_{n | m} (n^k - (n - phi(n))^k) Tr[rho^n]^{m^k/n}, the closed form
/// stated for Z_m^k. It counts elements of order n correctly only when n is a
/// prime power, so it matches the cycle index for m a prime power.
double cyclic_power_formula(const DensityMatrix& rho, int m, int k);

enum class GroupKind { Symmetric, Cyclic, Dihedral };

std::string to_string(GroupKind kind);
GroupKind parse_group_kind(const std::string& s);
FiniteGroup make_group(GroupKind kind, int k);

struct ResourceCount {
  GroupKind kind = GroupKind::Symmetric;
  int k = 0;
  long cswap_count = 0;         // exact count for the construction
  long controlled_powers = 0;   // cyclic factors of the construction
  long control_qubits = 0;
  double estimated_cswaps = 0.0;  // (k-1)log2 k, k(k-1)/2 or 2k log2 k
  std::string depth_class;
};

ResourceCount gate_count(GroupKind kind, int k);

struct RejectionRatio {
  double p = 0.0;
  long cswaps = 0;
  double ratio = 0.0;        // cswaps / (1 - p)
  double estimated_ratio = 0.0;  // estimated_cswaps / (1 - p)
};

/// Throws ValidationError when 1 - p < 1e-12.
RejectionRatio resources_to_rejection(const DensityMatrix& rho, GroupKind kind, int k);

}  // namespace symtest

#endif  // SYMTEST_SEPARABILITY_HPP
