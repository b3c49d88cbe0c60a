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

#include <algorithm>
#include <bit>
#include <cmath>
#include <numeric>

namespace symtest {

namespace {

void require_k(int k, const char* what) {
  if (k < 1) throw ValidationError(std::string(what) + ": k must be >= 1");
  if (k > kMaxPartitionK) throw ValidationError(std::string(what) + ": k exceeds " + std::to_string(kMaxPartitionK));
}

std::uint64_t ipow(std::uint64_t b, int e) {
  std::uint64_t r = 1;
  for (int i = 0; i < e; ++i) r *= b;
  return r;
}

int euler_phi(int n) {
  int r = 0;
  for (int i = 1; i <= n; ++i) r += (std::gcd(i, n) == 1);
  return r;
}

int floor_log2(int x) { return std::bit_width(static_cast<unsigned>(x)) - 1; }

int ceil_log2(int x) { return x <= 1 ? 0 : std::bit_width(static_cast<unsigned>(x - 1)); }

}  // namespace

std::uint64_t factorial(int k) {
  if (k < 0 || k > kMaxPartitionK) throw ValidationError("factorial: argument out of range");
  std::uint64_t f = 1;
  for (int i = 2; i <= k; ++i) f *= static_cast<std::uint64_t>(i);
  return f;
}

std::vector<CycleType> partitions(int k) {
  if (k < 1) throw ValidationError("partitions: k must be >= 1");
  std::vector<CycleType> out;
  std::vector<int> parts = {k};
  while (true) {
    CycleType a(k, 0);
    for (int p : parts) ++a[p - 1];
    out.push_back(std::move(a));
    // Next partition in descending order: drop trailing ones, split the last
    // part greater than one.
    int ones = 0;
    while (!parts.empty() && parts.back() == 1) {
      parts.pop_back();
      ++ones;
    }
    if (parts.empty()) break;
    int v = parts.back() - 1;
    parts.pop_back();
    int rem = ones + 1 + v;
    while (rem > 0) {
      int take = std::min(v, rem);
      parts.push_back(take);
      rem -= take;
    }
  }
  return out;
}

std::uint64_t class_size(const CycleType& a) {
  int k = 0;
  for (std::size_t j = 0; j < a.size(); ++j) k += static_cast<int>(j + 1) * a[j];
  std::uint64_t denom = 1;
  for (std::size_t j = 0; j < a.size(); ++j) {
    denom *= ipow(j + 1, a[j]) * factorial(a[j]);
  }
  return factorial(k) / denom;
}

SeparabilityResult acceptance_sym(const DensityMatrix& rho, int k) {
  require_k(k, "acceptance_sym");
  SeparabilityResult r{k, "sym:" + std::to_string(k), 0.0, "cycle-index", trace_powers(rho, k)};
  double kf = static_cast<double>(factorial(k));
  for (const auto& a : partitions(k)) {
    double term = static_cast<double>(class_size(a)) / kf;
    for (int j = 0; j < k; ++j) term *= std::pow(r.traces[j], a[j]);
    r.p += term;
  }
  r.p = std::clamp(r.p, 0.0, 1.0);
  return r;
}

SeparabilityResult acceptance_recurrence(const DensityMatrix& rho, int k) {
  require_k(k, "acceptance_recurrence");
  SeparabilityResult r{k, "sym:" + std::to_string(k), 0.0, "recurrence", trace_powers(rho, k)};
  std::vector<double> p(k + 1, 0.0);
  p[0] = 1.0;
  for (int n = 1; n <= k; ++n) {
    double acc = 0.0;
    for (int j = 1; j <= n; ++j) acc += r.traces[j - 1] * p[n - j];
    p[n] = acc / n;
  }
  r.p = std::clamp(p[k], 0.0, 1.0);
  return r;
}

SeparabilityResult acceptance_bell(const DensityMatrix& rho, int k) {
  require_k(k, "acceptance_bell");
  SeparabilityResult r{k, "sym:" + std::to_string(k), 0.0, "bell", trace_powers(rho, k)};
  // y_j = (j-1)! x_j, then B_{n+1} = sum_i C(n,i) B_{n-i} y_{i+1}.
  std::vector<double> y(k);
  for (int j = 1; j <= k; ++j) y[j - 1] = static_cast<double>(factorial(j - 1)) * r.traces[j - 1];
  std::vector<double> b(k + 1, 0.0);
  b[0] = 1.0;
  for (int n = 0; n < k; ++n) {
    double acc = 0.0;
    double c = 1.0;
    for (int i = 0; i <= n; ++i) {
      acc += c * b[n - i] * y[i];
      c = c * (n - i) / (i + 1);
    }
    b[n + 1] = acc;
  }
  r.p = std::clamp(b[k] / static_cast<double>(factorial(k)), 0.0, 1.0);
  return r;
}

SeparabilityResult acceptance_group(const DensityMatrix& rho, const FiniteGroup& g) {
  CycleIndexPolynomial z = cycle_index(g);
  SeparabilityResult r{g.degree(), g.name(), 0.0, "cycle-index", trace_powers(rho, g.degree())};
  r.p = std::clamp(eval_cycle_index(z, r.traces), 0.0, 1.0);
  return r;
}

double acceptance_direct(const DensityMatrix& rho, const FiniteGroup& g) {
  int k = g.degree();
  long d = rho.dim();
  long total = 1;
  for (int i = 0; i < k; ++i) {
    total *= d;
    if (total > kMaxDim) throw ValidationError("acceptance_direct: d^k exceeds " + std::to_string(kMaxDim));
  }
  const Matrix& m = rho.matrix();
  PermutationRep rep(g, static_cast<int>(d));
  double acc = 0.0;
  for (std::size_t e = 0; e < g.order(); ++e) {
    cplx tr = 0;
    for (long c = 0; c < total; ++c) {
      long img = rep.map_index(e, c);
      long a = c, b = img;
      cplx prod = 1.0;
      for (int f = k - 1; f >= 0; --f) {
        prod *= m(a % d, b % d);
        a /= d;
        b /= d;
      }
      tr += prod;
    }
    acc += tr.real();
  }
  return std::clamp(acc / static_cast<double>(g.order()), 0.0, 1.0);
}

double cyclic_power_formula(const DensityMatrix& rho, int m, int k) {
  if (m < 1 || k < 1) throw ValidationError("cyclic_power_formula: m and k must be >= 1");
  double mk = std::pow(static_cast<double>(m), k);
  std::vector<double> tr = trace_powers(rho, m);
  double acc = 0.0;
  for (int n = 1; n <= m; ++n) {
    if (m % n) continue;
    double count = std::pow(n, k) - std::pow(n - euler_phi(n), k);
    acc += count * std::pow(tr[n - 1], mk / n);
  }
  return acc / mk;
}

std::string to_string(GroupKind kind) {
  switch (kind) {
    case GroupKind::Symmetric: return "sym";
    case GroupKind::Cyclic: return "cyc";
    case GroupKind::Dihedral: return "dih";
  }
  return "?";
}

GroupKind parse_group_kind(const std::string& s) {
  if (s == "sym" || s == "symmetric") return GroupKind::Symmetric;
  if (s == "cyc" || s == "cyclic") return GroupKind::Cyclic;
  if (s == "dih" || s == "dihedral") return GroupKind::Dihedral;
  throw ValidationError("unknown group kind '" + s + "'");
}

FiniteGroup make_group(GroupKind kind, int k) {
  switch (kind) {
    case GroupKind::Symmetric: return symmetric_group(k);
    case GroupKind::Cyclic: return cyclic_group(k);
    case GroupKind::Dihedral: return dihedral_group(k);
  }
  throw ValidationError("make_group: bad kind");
}

ResourceCount gate_count(GroupKind kind, int k) {
  ResourceCount r;
  r.kind = kind;
  r.k = k;
  double lg = std::log2(static_cast<double>(k));
  auto cyclic = [](int n, ResourceCount& out) {
    // Controlled shifts by 2^j for j = 0..floor(log2(n-1)); a shift by s is
    // gcd(n, s) disjoint cycles, so it needs n - gcd(n, s) swaps.
    out.controlled_powers = floor_log2(n - 1) + 1;
    long sw = 0;
    for (long j = 0; j < out.controlled_powers; ++j) {
      long s = (1L << j) % n;
      sw += n - std::gcd(static_cast<long>(n), s);
    }
    out.cswap_count = sw;
    out.control_qubits = ceil_log2(n);
  };
  switch (kind) {
    case GroupKind::Symmetric:
      if (k < 2) throw ValidationError("gate_count: symmetric test needs k >= 2");
      r.cswap_count = static_cast<long>(k) * (k - 1) / 2;
      r.control_qubits = static_cast<long>(k) * (k - 1) / 2;
      r.estimated_cswaps = static_cast<double>(r.cswap_count);
      r.depth_class = "O(k^2) cswaps, O(k log k) control";
      break;
    case GroupKind::Cyclic:
      if (k < 2) throw ValidationError("gate_count: cyclic test needs k >= 2");
      cyclic(k, r);
      r.estimated_cswaps = (k - 1) * lg;
      r.depth_class = "O(k log k)";
      break;
    case GroupKind::Dihedral:
      if (k < 3) throw ValidationError("gate_count: dihedral test needs k >= 3");
      cyclic(k, r);
      r.cswap_count = 2 * r.cswap_count + (k - 1) / 2;
      r.control_qubits += 1;
      r.estimated_cswaps = 2.0 * k * lg;
      r.depth_class = "O(k log k)";
      break;
  }
  return r;
}

RejectionRatio resources_to_rejection(const DensityMatrix& rho, GroupKind kind, int k) {
  ResourceCount c = gate_count(kind, k);
  RejectionRatio r;
  r.p = kind == GroupKind::Symmetric ? acceptance_sym(rho, k).p : acceptance_group(rho, make_group(kind, k)).p;
  double reject = 1.0 - r.p;
  if (reject < 1e-12) {
    throw ValidationError("resources_to_rejection: acceptance is 1 within 1e-12, the ratio is undefined");
  }
  r.cswaps = c.cswap_count;
  r.ratio = static_cast<double>(c.cswap_count) / reject;
  r.estimated_ratio = c.estimated_cswaps / reject;
  return r;
}

}  // namespace symtest
