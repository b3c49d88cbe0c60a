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

#include "symtest/models.hpp"

#include <charconv>
#include <cmath>

#include "symtest/state_symmetry.hpp"

namespace symtest {

namespace {

constexpr int kMaxQubits = 12;

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    std::size_t pos = s.find(sep, start);
    out.push_back(s.substr(start, pos - start));
    if (pos == std::string::npos) break;
    start = pos + 1;
  }
  return out;
}

int parse_int(const std::string& s, const std::string& ctx) {
  int v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) {
    throw ValidationError(ctx + ": expected an integer, got '" + s + "'");
  }
  return v;
}

double parse_double(const std::string& s, const std::string& ctx) {
  double v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size() || !std::isfinite(v)) {
    throw ValidationError(ctx + ": expected a number, got '" + s + "'");
  }
  return v;
}

// Splits "name:arg" into its two halves; arg is empty when absent.
std::pair<std::string, std::string> head_arg(const std::string& spec) {
  std::size_t c = spec.find(':');
  if (c == std::string::npos) return {spec, ""};
  return {spec.substr(0, c), spec.substr(c + 1)};
}

int qubit_count(const std::string& arg, const std::string& ctx, int lo = 1) {
  int n = parse_int(arg, ctx);
  if (n < lo) throw ValidationError(ctx + ": need at least " + std::to_string(lo) + " qubits");
  if (n > kMaxQubits) throw ValidationError(ctx + ": qubit count exceeds " + std::to_string(kMaxQubits));
  return n;
}

Vector single_qubit(char c) {
  Vector v(2);
  double s = 1.0 / std::sqrt(2.0);
  switch (c) {
    case '0': v << 1, 0; break;
    case '1': v << 0, 1; break;
    case '+': v << s, s; break;
    case '-': v << s, -s; break;
    default: throw ValidationError(std::string("product state: unknown label '") + c + "'");
  }
  return v;
}

void require_uniform(const Dims& dims, const std::string& ctx) {
  if (dims.empty()) throw ValidationError(ctx + ": no factors");
  for (int d : dims) {
    if (d != dims.front()) throw ValidationError(ctx + ": factors have different dimensions");
  }
}

void require_qubits(const Dims& dims, int n, const std::string& ctx) {
  if (dims != Dims(n, 2)) {
    throw ValidationError(ctx + ": needs " + std::to_string(n) + " qubits");
  }
}

UnitaryRepTable flip_rep(const std::string& name, const Matrix& p, int n) {
  Matrix all = tensor_power(p, n);
  long d = all.rows();
  return UnitaryRepTable(name, {Matrix::Identity(d, d), all}, Dims(n, 2), std::vector<int>{0, 1});
}

}  // namespace

DensityMatrix NamedFixture::density() const {
  if (auto p = std::get_if<PureState>(&object)) return p->density();
  if (auto r = std::get_if<DensityMatrix>(&object)) return *r;
  throw ValidationError("fixture " + name + " is a Hamiltonian, not a state");
}

const HamiltonianSpec& NamedFixture::hamiltonian() const {
  if (auto h = std::get_if<HamiltonianSpec>(&object)) return *h;
  throw ValidationError("fixture " + name + " is a state, not a Hamiltonian");
}

PureState ghz_state(int n) {
  if (n < 1 || n > kMaxQubits) throw ValidationError("ghz: qubit count out of range");
  long d = 1L << n;
  Vector v = Vector::Zero(d);
  v(0) = v(d - 1) = 1.0 / std::sqrt(2.0);
  return PureState(v, Dims(n, 2));
}

PureState w_state(int n) {
  if (n < 1 || n > kMaxQubits) throw ValidationError("w: qubit count out of range");
  long d = 1L << n;
  Vector v = Vector::Zero(d);
  for (int q = 0; q < n; ++q) v(1L << q) = 1.0 / std::sqrt(static_cast<double>(n));
  return PureState(v, Dims(n, 2));
}

DensityMatrix w_reduced(int n) {
  PureState w = w_state(n);
  return DensityMatrix(reduced_density(w.vector(), w.dims(), {0}), {2});
}

NamedFixture fixture(const std::string& spec, std::uint64_t seed) {
  auto [name, arg] = head_arg(spec);
  double s = 1.0 / std::sqrt(2.0);
  if (name == "bell" || name == "singlet" || name == "bell-reduced") {
    if (!arg.empty()) throw ValidationError(name + ": takes no parameters");
    Vector v = Vector::Zero(4);
    if (name == "singlet") {
      v(1) = s;
      v(2) = -s;
    } else {
      v(0) = v(3) = s;
    }
    PureState psi(v, {2, 2});
    if (name == "bell-reduced") {
      return {spec, DensityMatrix(reduced_density(v, {2, 2}, {1}), {2}), "marginal of a Bell pair"};
    }
    return {spec, psi, "maximally entangled qubit pair"};
  }
  if (name == "ghz") return {spec, ghz_state(qubit_count(arg, "ghz")), "GHZ state"};
  if (name == "w") {
    if (arg.size() > 8 && arg.substr(arg.size() - 8) == "-reduced") {
      int n = qubit_count(arg.substr(0, arg.size() - 8), "w", 2);
      return {spec, w_reduced(n), "single-party marginal of the W state"};
    }
    return {spec, w_state(qubit_count(arg, "w")), "W state"};
  }
  if (name == "product") {
    if (arg.empty()) throw ValidationError("product: needs labels such as product:0+");
    std::string labels;
    for (const auto& part : split(arg, ',')) labels += part;
    if (labels.empty() || static_cast<int>(labels.size()) > kMaxQubits) {
      throw ValidationError("product: label count out of range");
    }
    Vector v = single_qubit(labels[0]);
    for (std::size_t i = 1; i < labels.size(); ++i) v = tensor(v, single_qubit(labels[i]));
    return {spec, PureState(v, Dims(labels.size(), 2)), "product state"};
  }
  if (name == "mixed") {
    int d = parse_int(arg, "mixed");
    if (d < 1 || d > kMaxDim) throw ValidationError("mixed: dimension out of range");
    return {spec, DensityMatrix(Matrix::Identity(d, d) / static_cast<double>(d), {d}), "maximally mixed"};
  }
  if (name == "random") {
    auto parts = split(arg, ':');
    int d = parse_int(parts[0], "random");
    int rank = parts.size() > 1 ? parse_int(parts[1], "random") : d;
    if (parts.size() > 2) throw ValidationError("random: expected random:d[:rank]");
    return {spec, random_density(d, rank, seed), "random density matrix"};
  }
  if (name == "tim") return {spec, transverse_ising(qubit_count(arg, "tim", 2)), "transverse Ising, cyclic boundary"};
  if (name == "xy") {
    auto parts = split(arg, ':');
    if (parts.size() > 2) throw ValidationError("xy: expected xy:N[:J]");
    int n = qubit_count(parts[0], "xy", 2);
    double j = parts.size() > 1 ? parse_double(parts[1], "xy") : 1.0;
    return {spec, heisenberg_xy(n, j), "Heisenberg XY chain"};
  }
  if (name == "nmr") {
    auto parts = split(arg, ',');
    if (parts.size() != 3) throw ValidationError("nmr: expected nmr:w1,w2,J");
    return {spec, nmr(parse_double(parts[0], "nmr"), parse_double(parts[1], "nmr"), parse_double(parts[2], "nmr")),
            "weakly J-coupled NMR pair"};
  }
  throw ValidationError("unknown fixture '" + spec + "'");
}

FiniteGroup group_from_spec(const std::string& spec) {
  auto [name, arg] = head_arg(spec);
  if (arg.empty()) throw ValidationError("group '" + spec + "' needs a size, e.g. " + name + ":3");
  if (name == "zpow") {
    auto parts = split(arg, '^');
    if (parts.size() != 2) throw ValidationError("zpow: expected zpow:m^n");
    return cyclic_power(parse_int(parts[0], "zpow"), parse_int(parts[1], "zpow"));
  }
  int k = parse_int(arg, name);
  if (name == "sym") return symmetric_group(k);
  if (name == "cyc") return cyclic_group(k);
  if (name == "dih") return dihedral_group(k);
  if (name == "trivial") return trivial_group(k);
  throw ValidationError("unknown group '" + spec + "'");
}

Matrix pauli_string(const std::string& s) {
  std::string body = s;
  double sign = 1.0;
  if (!body.empty() && (body[0] == '-' || body[0] == '+')) {
    sign = body[0] == '-' ? -1.0 : 1.0;
    body = body.substr(1);
  }
  if (body.empty()) throw ValidationError("pauli string: empty");
  Matrix m = Matrix::Identity(1, 1);
  for (char c : body) {
    switch (c) {
      case 'I': m = tensor(m, pauli_i()); break;
      case 'X': m = tensor(m, pauli_x()); break;
      case 'Y': m = tensor(m, pauli_y()); break;
      case 'Z': m = tensor(m, pauli_z()); break;
      default: throw ValidationError(std::string("pauli string: unknown letter '") + c + "'");
    }
    if (m.rows() > kMaxDim) throw ValidationError("pauli string: too long");
  }
  return sign * m;
}

Representation rep_from_spec(const std::string& spec, const Dims& dims) {
  auto [name, arg] = head_arg(spec);
  int n = static_cast<int>(dims.size());
  if (name == "sym" || name == "cyc" || name == "dih" || name == "zpow") {
    require_uniform(dims, spec);
    FiniteGroup g = (name != "zpow" && arg.empty()) ? group_from_spec(name + ":" + std::to_string(n))
                                                   : group_from_spec(spec);
    if (g.degree() != n) {
      throw ValidationError("group " + spec + " acts on " + std::to_string(g.degree()) + " factors but the space has " +
                            std::to_string(n));
    }
    return PermutationRep(std::move(g), dims.front());
  }
  if (name == "trivial") return trivial_rep(1, static_cast<int>(product(dims)));
  if (name == "z2xz2-pauli") {
    require_qubits(dims, 2, spec);
    Matrix z = pauli_z(), id = pauli_i();
    return UnitaryRepTable("z2xz2-pauli", {tensor(id, id), tensor(z, id), tensor(id, z), tensor(z, z)}, {2, 2});
  }
  if (name == "d3-cnot-swap") {
    require_qubits(dims, 2, spec);
    Matrix cnot = Matrix::Zero(4, 4);
    cnot(0, 0) = cnot(1, 1) = cnot(2, 3) = cnot(3, 2) = 1.0;
    Matrix swap = Matrix::Zero(4, 4);
    swap(0, 0) = swap(1, 2) = swap(2, 1) = swap(3, 3) = 1.0;
    // r -> CNOT, f -> CNOT SWAP.
    return generated_table("d3-cnot-swap", {cnot, cnot * swap}, {2, 2});
  }
  if (name == "xflip" || name == "yflip" || name == "zflip") {
    int q = arg.empty() ? n : qubit_count(arg, name);
    require_qubits(dims, q, spec);
    Matrix p = name == "xflip" ? pauli_x() : name == "yflip" ? pauli_y() : pauli_z();
    return flip_rep(spec, p, q);
  }
  if (name == "shift") {
    int q = arg.empty() ? n : qubit_count(arg, name);
    require_uniform(dims, spec);
    if (q != n) throw ValidationError(spec + ": space has " + std::to_string(n) + " factors");
    if (product(dims) > 256) return PermutationRep(cyclic_group(q), dims.front());
    // Small spaces get a labelled table so the OTOC test can use them.
    UnitaryRepTable t = to_table(PermutationRep(cyclic_group(q), dims.front()));
    std::vector<int> labels(q);
    for (int a = 0; a < q; ++a) labels[a] = a;
    return UnitaryRepTable(spec, t.matrices(), dims, labels);
  }
  if (name == "phase") {
    int d = arg.empty() ? static_cast<int>(product(dims)) : parse_int(arg, "phase");
    if (d != product(dims)) throw ValidationError(spec + ": dimension does not match the space");
    UnitaryRepTable t = phase_rep(d);
    return UnitaryRepTable(t.name(), t.matrices(), dims, t.cyclic_labels());
  }
  if (name == "pauli") {
    std::vector<Matrix> gens;
    for (const auto& w : split(arg, ',')) gens.push_back(pauli_string(w));
    if (gens.front().rows() != product(dims)) throw ValidationError(spec + ": dimension does not match the space");
    return generated_table(spec, gens, dims);
  }
  throw ValidationError("unknown group or representation '" + spec + "'");
}

}  // namespace symtest
