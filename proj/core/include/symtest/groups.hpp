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

#ifndef SYMTEST_GROUPS_HPP
#define SYMTEST_GROUPS_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "symtest/linalg.hpp"

namespace symtest {

inline constexpr std::size_t kMaxGroupOrder = 1000000;

/// Bijection of {0..k-1} in one-line notation: j maps to image[j].
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<int> image);
  static Permutation identity(int k);

  int size() const { return static_cast<int>(image_.size()); }
  int operator[](int j) const { return image_[j]; }
  const std::vector<int>& image() const { return image_; }
  bool is_identity() const;

  auto operator<=>(const Permutation&) const = default;

 private:
  std::vector<int> image_;
};

/// (a o b)[j] = a[b[j]]; b acts first.
Permutation compose(const Permutation& a, const Permutation& b);
Permutation inverse(const Permutation& p);

/// a[j-1] counts the j-cycles; the vector has length k.
using CycleType = std::vector<int>;
CycleType cycle_type(const Permutation& p);

/// Permutation group given by its full element list.
class FiniteGroup {
 public:
  FiniteGroup(std::string name, std::vector<Permutation> elements);

  const std::string& name() const { return name_; }
  int degree() const { return degree_; }
  std::size_t order() const { return elements_.size(); }
  const std::vector<Permutation>& elements() const { return elements_; }
  const Permutation& operator[](std::size_t i) const { return elements_[i]; }
  std::size_t identity_index() const { return identity_; }
  std::optional<std::size_t> index_of(const Permutation& p) const;
  bool is_abelian() const;

 private:
  std::string name_;
  int degree_ = 0;
  std::vector<Permutation> elements_;
  std::map<std::vector<int>, std::size_t> index_;
  std::size_t identity_ = 0;
};

FiniteGroup trivial_group(int k);
FiniteGroup symmetric_group(int k);
FiniteGroup cyclic_group(int k);
FiniteGroup dihedral_group(int k);

/// Z_m^n in its left-regular action on the m^n tuples (base-m labels).
FiniteGroup cyclic_power(int m, int n);

/// Closure of a generating set.
FiniteGroup generated_group(std::string name, const std::vector<Permutation>& generators);

struct CycleIndexPolynomial {
  int degree = 0;
  std::uint64_t order = 0;
  std::map<CycleType, std::uint64_t> terms;
};

CycleIndexPolynomial cycle_index(const FiniteGroup& g);

/// (1/|G|) sum count * prod_j values[j-1]^{a_j}.
double eval_cycle_index(const CycleIndexPolynomial& z, const std::vector<double>& values);

/// Tensor-factor permutation representation of a group on (C^d)^{(x) k}.
/// Factor j is moved to position pi(j), so W(a)W(b) = W(a o b).
class PermutationRep {
 public:
  PermutationRep(FiniteGroup group, int local_dim);

  const FiniteGroup& group() const { return group_; }
  int local_dim() const { return d_; }
  int factors() const { return group_.degree(); }
  long dim() const { return dim_; }
  Dims dims() const { return Dims(factors(), d_); }

  /// Image of basis index `in` under element i.
  long map_index(std::size_t i, long in) const;
  Vector apply(std::size_t i, const Vector& v) const;
  /// W rho W^dagger.
  Matrix conjugate(std::size_t i, const Matrix& rho) const;
  Matrix matrix(std::size_t i) const;

 private:
  FiniteGroup group_;
  int d_;
  long dim_;
};

/// Explicit unitary per group element, possibly projective.
class UnitaryRepTable {
 public:
  /// Validates unitarity, shape and closure up to phase. `cyclic_labels`, when
  /// given, is an isomorphism onto Z_|G|: element i corresponds to labels[i].
  UnitaryRepTable(std::string name, std::vector<Matrix> matrices, Dims dims,
                  std::optional<std::vector<int>> cyclic_labels = std::nullopt);

  const std::string& name() const { return name_; }
  std::size_t order() const { return matrices_.size(); }
  long dim() const { return matrices_.front().rows(); }
  const Dims& dims() const { return dims_; }
  const Matrix& operator[](std::size_t i) const { return matrices_[i]; }
  const std::vector<Matrix>& matrices() const { return matrices_; }
  bool phases_trivial() const { return phases_trivial_; }
  bool is_abelian() const { return abelian_; }
  const std::optional<std::vector<int>>& cyclic_labels() const { return labels_; }
  std::size_t identity_index() const { return identity_; }

 private:
  std::string name_;
  std::vector<Matrix> matrices_;
  Dims dims_;
  std::optional<std::vector<int>> labels_;
  bool phases_trivial_ = true;
  bool abelian_ = true;
  std::size_t identity_ = 0;
};

/// Either kind of representation behind one interface.
class Representation {
 public:
  Representation(PermutationRep rep) : rep_(std::move(rep)) {}    // NOLINT
  Representation(UnitaryRepTable rep) : rep_(std::move(rep)) {}   // NOLINT

  std::string name() const;
  std::size_t order() const;
  long dim() const;
  Dims dims() const;
  bool phases_trivial() const;
  bool is_permutation() const { return std::holds_alternative<PermutationRep>(rep_); }
  const PermutationRep* permutation() const { return std::get_if<PermutationRep>(&rep_); }
  const UnitaryRepTable* table() const { return std::get_if<UnitaryRepTable>(&rep_); }

  Matrix matrix(std::size_t i) const;
  Vector apply(std::size_t i, const Vector& v) const;
  Matrix conjugate(std::size_t i, const Matrix& x) const;

 private:
  std::variant<PermutationRep, UnitaryRepTable> rep_;
};

/// (1/|G|) sum_g U(g). Dense; requires dim <= kMaxDim.
Matrix group_projector(const Representation& rep);

/// (1/|G|) sum_g U(g) X U(g)^dagger.
Matrix twirl(const Representation& rep, const Matrix& x);

/// Dense table of an arbitrary representation.
UnitaryRepTable to_table(const Representation& rep);

/// Elementwise complex conjugate rep g -> conj(U(g)).
UnitaryRepTable conjugate_rep(const UnitaryRepTable& rep);

/// g -> A(g) (x) B(g); both tables must list the same group in the same order.
UnitaryRepTable tensor_reps(const UnitaryRepTable& a, const UnitaryRepTable& b);

/// g -> identity on C^d for a group of the given order.
UnitaryRepTable trivial_rep(std::size_t order, int d);

/// Closure of the generators under multiplication, merging elements that
/// differ by a phase. The identity comes first.
UnitaryRepTable generated_table(std::string name, const std::vector<Matrix>& generators, Dims dims);

}  // namespace symtest

#endif  // SYMTEST_GROUPS_HPP
