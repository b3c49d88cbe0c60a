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

#ifndef SYMTEST_MODELS_HPP
#define SYMTEST_MODELS_HPP

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "symtest/groups.hpp"
#include "symtest/ham_symmetry.hpp"
#include "symtest/linalg.hpp"

namespace symtest {

struct NamedFixture {
  std::string name;
  std::variant<PureState, DensityMatrix, HamiltonianSpec> object;
  std::string note;

  bool is_state() const { return !std::holds_alternative<HamiltonianSpec>(object); }
  /// Density matrix of a state fixture.
  DensityMatrix density() const;
  const HamiltonianSpec& hamiltonian() const;
};

/// States: bell, singlet, ghz:n, w:n, w:n-reduced, bell-reduced,
/// product:<labels> (labels from 0 1 + -), mixed:d, random:d[:rank].
/// Hamiltonians: tim:N, nmr:w1,w2,J, xy:N[:J].
/// `seed` feeds the random fixtures only.
NamedFixture fixture(const std::string& spec, std::uint64_t seed = 1);

PureState ghz_state(int n);
PureState w_state(int n);
/// Single-party marginal of the W state, diag((n-1)/n, 1/n).
DensityMatrix w_reduced(int n);

/// sym:k, cyc:k, dih:k, zpow:m^n, trivial:k.
FiniteGroup group_from_spec(const std::string& spec);

/// Representation on a space with the given factor dims. Accepts the group
/// specs above (acting by permuting factors; `sym` alone uses every factor),
/// and z2xz2-pauli, d3-cnot-swap, xflip:N, yflip:N, zflip:N, shift:N,
/// phase:d, pauli:<string>,<string>,... and trivial.
Representation rep_from_spec(const std::string& spec, const Dims& dims);

/// Tensor product of Pauli letters, with an optional leading sign.
Matrix pauli_string(const std::string& s);

}  // namespace symtest

#endif  // SYMTEST_MODELS_HPP
