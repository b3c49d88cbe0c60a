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


#include "symtest/linalg.hpp"

#include <gtest/gtest.h>

#include "oracles.hpp"

namespace symtest {
namespace {

constexpr double kTol = 1e-12;

TEST(Linalg, TensorMatchesKron) {
  Matrix a = random_unitary(2, 1), b = random_hermitian(3, 2);
  EXPECT_LT((tensor(a, b) - oracle::kron(a, b)).norm(), kTol);
  EXPECT_LT((tensor_power(a, 3) - oracle::kron_power(a, 3)).norm(), kTol);
  std::vector<Matrix> fs = {a, b, a};
  EXPECT_LT((tensor_all(fs) - oracle::kron(oracle::kron(a, b), a)).norm(), kTol);
}

TEST(Linalg, PartialTraceOfProduct) {
  DensityMatrix a = random_density(2, 2, 3), b = random_density(3, 3, 4);
  Matrix ab = oracle::kron(a.matrix(), b.matrix());
  EXPECT_LT((partial_trace(ab, {2, 3}, {0}) - a.matrix()).norm(), kTol);
  EXPECT_LT((partial_trace(ab, {2, 3}, {1}) - b.matrix()).norm(), kTol);
}

TEST(Linalg, ReducedDensityOfBellIsMixed) {
  Vector bell = max_entangled(2);
  EXPECT_LT((reduced_density(bell, {2, 2}, {1}) - Matrix::Identity(2, 2) / 2.0).norm(), kTol);
}

TEST(Linalg, EmbedOperatorHonorsSupportOrder) {
  Matrix a = random_hermitian(2, 5), b = random_hermitian(2, 6);
  Matrix id = Matrix::Identity(2, 2);
  // a on factor 2, b on factor 0.
  Matrix got = embed_operator(oracle::kron(a, b), {2, 2, 2}, {2, 0});
  Matrix want = oracle::kron(oracle::kron(b, id), a);
  EXPECT_LT((got - want).norm(), kTol);
}

TEST(Linalg, ApplyOnFactorsMatchesEmbed) {
  Vector v = random_pure_state(12, 7).vector();
  Matrix op = random_unitary(6, 8);
  Dims dims = {2, 3, 2};
  Vector got = apply_on_factors(v, dims, {1, 2}, op);
  EXPECT_LT((got - embed_operator(op, dims, {1, 2}) * v).norm(), kTol);
}

TEST(Linalg, PermuteFactorsMatchesPermutationMatrix) {
  Vector v = random_pure_state(8, 9).vector();
  // Output factor i is input factor order[i]; input factor j lands at inv[j].
  std::vector<int> order = {2, 0, 1};
  std::vector<int> dest(3);
  for (int i = 0; i < 3; ++i) dest[order[i]] = i;
  Vector want = oracle::factor_permutation(dest, 2) * v;
  EXPECT_LT((permute_factors(v, {2, 2, 2}, order) - want).norm(), kTol);
}

TEST(Linalg, ExpmMatchesEigenExponential) {
  Matrix h = random_hermitian(5, 10);
  EXPECT_LT((expm_hermitian(h, 0.37) - oracle::evolve(h, 0.37)).norm(), 1e-11);
}

TEST(Linalg, SqrtmSquaresBack) {
  Matrix rho = random_density(4, 2, 11).matrix();
  Matrix s = sqrtm_psd(rho);
  EXPECT_LT((s * s - rho).norm(), 1e-10);
}

TEST(Linalg, FidelityOfPureStatesIsOverlap) {
  PureState a = random_pure_state(3, 12), b = random_pure_state(3, 13);
  double overlap = std::norm(a.vector().dot(b.vector()));
  EXPECT_NEAR(fidelity(a.density(), b.density()), overlap, 1e-9);
  DensityMatrix r = random_density(3, 3, 14);
  EXPECT_NEAR(fidelity(r, r), 1.0, 1e-10);
}

TEST(Linalg, SchattenNorms) {
  Matrix m = random_hermitian(4, 15);
  EXPECT_NEAR(schatten_norm(m, 2), m.norm(), 1e-10);
  Eigen::JacobiSVD<Matrix> svd(m);
  EXPECT_NEAR(schatten_norm(m, kSpectralNorm), svd.singularValues()(0), 1e-10);
  EXPECT_NEAR(schatten_norm(m, 1), oracle::trace_norm_hermitian(m), 1e-10);
}

TEST(Linalg, RandomObjectsAreValidAndSeeded) {
  DensityMatrix r = random_density(4, 2, 16);
  EXPECT_NEAR(r.matrix().trace().real(), 1.0, 1e-12);
  EXPECT_GT(eigh(r.matrix()).values.minCoeff(), -1e-12);
  Matrix u = random_unitary(5, 17);
  EXPECT_LT(unitarity_defect(u), 1e-12);
  EXPECT_EQ((random_unitary(5, 17) - u).norm(), 0.0);
  EXPECT_GT((random_unitary(5, 18) - u).norm(), 1e-3);
}

TEST(Linalg, PurifyReducesToState) {
  DensityMatrix rho = random_density(3, 2, 19);
  PureState psi = purify(rho);
  EXPECT_LT((reduced_density(psi.vector(), {3, 3}, {1}) - rho.matrix()).norm(), 1e-10);
}

TEST(Linalg, TracePowers) {
  DensityMatrix rho = random_density(3, 3, 20);
  auto tr = trace_powers(rho, 3);
  Matrix m = rho.matrix();
  EXPECT_NEAR(tr[0], 1.0, 1e-12);
  EXPECT_NEAR(tr[1], (m * m).trace().real(), 1e-12);
  EXPECT_NEAR(tr[2], (m * m * m).trace().real(), 1e-12);
}

TEST(Linalg, NestedCommutator) {
  Matrix h = random_hermitian(3, 21), u = random_unitary(3, 22);
  EXPECT_LT((nested_commutator(h, u, 0) - u).norm(), kTol);
  Matrix c1 = h * u - u * h;
  EXPECT_LT((nested_commutator(h, u, 2) - (h * c1 - c1 * h)).norm(), 1e-12);
}

TEST(Linalg, ValidationRejectsBadInput) {
  Matrix bad = Matrix::Zero(2, 2);
  bad(0, 1) = 1.0;
  EXPECT_THROW(require_hermitian(bad, "m"), ValidationError);
  EXPECT_THROW(DensityMatrix(Matrix::Identity(2, 2)), ValidationError);
  EXPECT_THROW(require_unitary(bad, "u"), ValidationError);
}

}  // namespace
}  // namespace symtest
