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

#include "symtest/groups.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <numeric>

namespace symtest {

namespace {

// Closure is verified exhaustively only for groups small enough that the
// |G|^2 products are cheap; larger groups come from trusted builders.
constexpr std::size_t kClosureCheckLimit = 2048;

std::uint64_t checked_pow(std::uint64_t base, int exp, std::uint64_t cap) {
  std::uint64_t r = 1;
  for (int i = 0; i < exp; ++i) {
    r *= base;
    if (r > cap) return cap + 1;
  }
  return r;
}

}  // namespace

Permutation::Permutation(std::vector<int> image) : image_(std::move(image)) {
  std::vector<bool> seen(image_.size(), false);
  for (int x : image_) {
    if (x < 0 || x >= static_cast<int>(image_.size()) || seen[x]) {
      throw ValidationError("permutation image is not a bijection");
    }
    seen[x] = true;
  }
}

Permutation Permutation::identity(int k) {
  std::vector<int> im(k);
  std::iota(im.begin(), im.end(), 0);
  return Permutation(std::move(im));
}

bool Permutation::is_identity() const {
  for (int j = 0; j < size(); ++j) {
    if (image_[j] != j) return false;
  }
  return true;
}

Permutation compose(const Permutation& a, const Permutation& b) {
  if (a.size() != b.size()) throw ValidationError("compose: permutations of different degree");
  std::vector<int> im(a.size());
  for (int j = 0; j < a.size(); ++j) im[j] = a[b[j]];
  return Permutation(std::move(im));
}

Permutation inverse(const Permutation& p) {
  std::vector<int> im(p.size());
  for (int j = 0; j < p.size(); ++j) im[p[j]] = j;
  return Permutation(std::move(im));
}

CycleType cycle_type(const Permutation& p) {
  int k = p.size();
  CycleType a(k, 0);
  std::vector<bool> seen(k, false);
  for (int s = 0; s < k; ++s) {
    if (seen[s]) continue;
    int len = 0;
    for (int j = s; !seen[j]; j = p[j]) {
      seen[j] = true;
      ++len;
    }
    ++a[len - 1];
  }
  return a;
}

FiniteGroup::FiniteGroup(std::string name, std::vector<Permutation> elements)
    : name_(std::move(name)), elements_(std::move(elements)) {
  if (elements_.empty()) throw ValidationError("group " + name_ + ": no elements");
  if (elements_.size() > kMaxGroupOrder) throw ValidationError("group " + name_ + ": order exceeds 10^6");
  degree_ = elements_.front().size();
  bool have_identity = false;
  for (std::size_t i = 0; i < elements_.size(); ++i) {
    const auto& p = elements_[i];
    if (p.size() != degree_) throw ValidationError("group " + name_ + ": mixed permutation degrees");
    if (!index_.emplace(p.image(), i).second) throw ValidationError("group " + name_ + ": repeated element");
    if (p.is_identity()) {
      identity_ = i;
      have_identity = true;
    }
  }
  if (!have_identity) throw ValidationError("group " + name_ + ": identity missing");
  if (elements_.size() <= kClosureCheckLimit) {
    for (const auto& a : elements_) {
      for (const auto& b : elements_) {
        if (!index_.contains(compose(a, b).image())) {
          throw ValidationError("group " + name_ + ": not closed under composition");
        }
      }
    }
  }
}

std::optional<std::size_t> FiniteGroup::index_of(const Permutation& p) const {
  auto it = index_.find(p.image());
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

bool FiniteGroup::is_abelian() const {
  for (const auto& a : elements_) {
    for (const auto& b : elements_) {
      if (compose(a, b) != compose(b, a)) return false;
    }
  }
  return true;
}

FiniteGroup trivial_group(int k) {
  if (k < 1) throw ValidationError("trivial_group: k must be >= 1");
  return FiniteGroup("trivial:" + std::to_string(k), {Permutation::identity(k)});
}

FiniteGroup symmetric_group(int k) {
  if (k < 1) throw ValidationError("symmetric_group: k must be >= 1");
  std::uint64_t fact = 1;
  for (int i = 2; i <= k; ++i) {
    fact *= i;
    if (fact > kMaxGroupOrder) throw ValidationError("symmetric_group: k! exceeds 10^6");
  }
  std::vector<Permutation> el;
  std::vector<int> im(k);
  std::iota(im.begin(), im.end(), 0);
  do {
    el.emplace_back(im);
  } while (std::next_permutation(im.begin(), im.end()));
  return FiniteGroup("sym:" + std::to_string(k), std::move(el));
}

FiniteGroup cyclic_group(int k) {
  if (k < 1) throw ValidationError("cyclic_group: k must be >= 1");
  if (static_cast<std::size_t>(k) > kMaxGroupOrder) throw ValidationError("cyclic_group: order exceeds 10^6");
  std::vector<Permutation> el;
  for (int a = 0; a < k; ++a) {
    std::vector<int> im(k);
    for (int j = 0; j < k; ++j) im[j] = (j + a) % k;
    el.emplace_back(std::move(im));
  }
  return FiniteGroup("cyc:" + std::to_string(k), std::move(el));
}

FiniteGroup dihedral_group(int k) {
  if (k < 3) throw ValidationError("dihedral_group: k must be >= 3");
  if (2 * static_cast<std::size_t>(k) > kMaxGroupOrder) throw ValidationError("dihedral_group: order exceeds 10^6");
  // r^a f^b with r: j -> j+1 and f: j -> -j (mod k).
  std::vector<Permutation> el;
  for (int b = 0; b < 2; ++b) {
    for (int a = 0; a < k; ++a) {
      std::vector<int> im(k);
      for (int j = 0; j < k; ++j) {
        int fj = b ? (k - j) % k : j;
        im[j] = (fj + a) % k;
      }
      el.emplace_back(std::move(im));
    }
  }
  return FiniteGroup("dih:" + std::to_string(k), std::move(el));
}

FiniteGroup cyclic_power(int m, int n) {
  if (m < 2) throw ValidationError("cyclic_power: m must be >= 2");
  if (n < 1) throw ValidationError("cyclic_power: n must be >= 1");
  std::uint64_t size = checked_pow(static_cast<std::uint64_t>(m), n, kMaxGroupOrder);
  if (size > kMaxGroupOrder) throw ValidationError("cyclic_power: m^n exceeds 10^6");
  int total = static_cast<int>(size);
  auto digits = [&](int x) {
    std::vector<int> d(n);
    for (int i = n - 1; i >= 0; --i) {
      d[i] = x % m;
      x /= m;
    }
    return d;
  };
  std::vector<std::vector<int>> label(total);
  for (int x = 0; x < total; ++x) label[x] = digits(x);
  std::vector<Permutation> el;
  el.reserve(total);
  for (int g = 0; g < total; ++g) {
    std::vector<int> im(total);
    for (int h = 0; h < total; ++h) {
      int y = 0;
      for (int i = 0; i < n; ++i) y = y * m + (label[g][i] + label[h][i]) % m;
      im[h] = y;
    }
    el.emplace_back(std::move(im));
  }
  return FiniteGroup("zpow:" + std::to_string(m) + "^" + std::to_string(n), std::move(el));
}

FiniteGroup generated_group(std::string name, const std::vector<Permutation>& generators) {
  if (generators.empty()) throw ValidationError("generated_group: no generators");
  int k = generators.front().size();
  std::map<std::vector<int>, bool> seen;
  std::vector<Permutation> el{Permutation::identity(k)};
  seen[el.front().image()] = true;
  std::deque<Permutation> frontier{el.front()};
  while (!frontier.empty()) {
    Permutation p = frontier.front();
    frontier.pop_front();
    for (const auto& g : generators) {
      Permutation q = compose(g, p);
      if (seen.emplace(q.image(), true).second) {
        if (el.size() >= kMaxGroupOrder) throw ValidationError("generated_group: order exceeds 10^6");
        el.push_back(q);
        frontier.push_back(q);
      }
    }
  }
  return FiniteGroup(std::move(name), std::move(el));
}

CycleIndexPolynomial cycle_index(const FiniteGroup& g) {
  CycleIndexPolynomial z;
  z.degree = g.degree();
  z.order = g.order();
  for (const auto& p : g.elements()) ++z.terms[cycle_type(p)];
  return z;
}

double eval_cycle_index(const CycleIndexPolynomial& z, const std::vector<double>& values) {
  if (static_cast<int>(values.size()) < z.degree) {
    throw ValidationError("eval_cycle_index: need " + std::to_string(z.degree) + " values, got " +
                          std::to_string(values.size()));
  }
  double acc = 0.0;
  for (const auto& [type, count] : z.terms) {
    double term = static_cast<double>(count);
    for (std::size_t j = 0; j < type.size(); ++j) {
      if (type[j]) term *= std::pow(values[j], type[j]);
    }
    acc += term;
  }
  return acc / static_cast<double>(z.order);
}

}  // namespace symtest
