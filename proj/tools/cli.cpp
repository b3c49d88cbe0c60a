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

#include "cli.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <optional>
#include <sstream>
#include <variant>

#include "CLI11.hpp"
#include "json.hpp"
#include "symtest/ham_symmetry.hpp"
#include "symtest/models.hpp"
#include "symtest/separability.hpp"
#include "symtest/state_symmetry.hpp"

namespace symtest::cli {

namespace {

using json = nlohmann::ordered_json;
using Cell = std::variant<double, long, std::string, bool>;

struct Row {
  std::vector<std::pair<std::string, Cell>> cells;
  Row& add(std::string key, Cell v) {
    cells.emplace_back(std::move(key), std::move(v));
    return *this;
  }
};

struct Report {
  std::string command;
  json config = json::object();
  std::vector<Row> rows;
  bool converged = true;
};

struct Options {
  std::string state, ham, coeffs, group, k, t, unitary, out;
  std::string format = "json";
  long shots = 0;
  std::uint64_t seed = 1;
  bool seed_given = false;
  bool hexfloat = false;
  int ref_dim = 0;
  int restarts = 8;
  double eps = 0.1;
  double delta = 0.05;
  bool sample = false;
};

std::string format_double(double v, bool hex) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), hex ? "%a" : "%.17g", v);
  return buf;
}

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

double to_double(const std::string& s, const std::string& ctx) {
  double v = 0;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || p != s.data() + s.size() || !std::isfinite(v)) {
    throw ValidationError(ctx + ": expected a number, got '" + s + "'");
  }
  return v;
}

int to_int(const std::string& s, const std::string& ctx) {
  int v = 0;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || p != s.data() + s.size()) {
    throw ValidationError(ctx + ": expected an integer, got '" + s + "'");
  }
  return v;
}

// ---- file inputs -------------------------------------------------------

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open '" + path + "'");
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw ValidationError("'" + path + "': " + e.what());
  }
}

cplx entry_from_json(const json& e) {
  if (e.is_number()) return {e.get<double>(), 0.0};
  if (e.is_string()) {
    // Hex-float strings as written by --hexfloat.
    const std::string s = e.get<std::string>();
    char* end = nullptr;
    double v = std::strtod(s.c_str(), &end);
    if (end != s.c_str() + s.size()) throw ValidationError("matrix entry: bad number '" + s + "'");
    return {v, 0.0};
  }
  if (e.is_array() && e.size() == 2) return {entry_from_json(e[0]).real(), entry_from_json(e[1]).real()};
  throw ValidationError("matrix entry must be a number or a [re, im] pair");
}

Matrix matrix_from_json(const json& j) {
  if (!j.is_array() || j.empty() || !j[0].is_array()) throw ValidationError("matrix must be a nested array");
  long rows = static_cast<long>(j.size());
  long cols = static_cast<long>(j[0].size());
  if (rows > kMaxDim || cols > kMaxDim) throw ValidationError("matrix exceeds dimension cap");
  Matrix m(rows, cols);
  for (long r = 0; r < rows; ++r) {
    if (!j[r].is_array() || static_cast<long>(j[r].size()) != cols) throw ValidationError("matrix rows differ in length");
    for (long c = 0; c < cols; ++c) m(r, c) = entry_from_json(j[r][c]);
  }
  return m;
}

Vector vector_from_json(const json& j) {
  if (!j.is_array() || j.empty()) throw ValidationError("vector must be a non-empty array");
  Vector v(static_cast<long>(j.size()));
  for (std::size_t i = 0; i < j.size(); ++i) v(static_cast<long>(i)) = entry_from_json(j[i]);
  return v;
}

Dims dims_from_json(const json& j, long total) {
  if (!j.contains("dims")) return {static_cast<int>(total)};
  return j["dims"].get<Dims>();
}

bool looks_like_file(const std::string& s) {
  return s.ends_with(".json") || std::filesystem::exists(s);
}

bool is_pauli_expr(const std::string& s) {
  return !s.empty() && s.find_first_not_of("IXYZ+- ") == std::string::npos;
}

// ---- input assembly ----------------------------------------------------

struct StateInput {
  DensityMatrix rho;
  std::optional<PureState> pure;
};

StateInput load_state(const Options& o) {
  if (o.state.empty()) throw ValidationError("--state is required");
  if (looks_like_file(o.state)) {
    json j = read_json_file(o.state);
    if (j.contains("vector")) {
      Vector v = vector_from_json(j["vector"]);
      PureState p(v, dims_from_json(j, v.size()));
      return {p.density(), p};
    }
    if (!j.contains("matrix")) throw ValidationError(o.state + ": expected a \"matrix\" or \"vector\" field");
    Matrix m = matrix_from_json(j["matrix"]);
    return {DensityMatrix(m, dims_from_json(j, m.rows())), std::nullopt};
  }
  NamedFixture f = fixture(o.state, o.seed);
  if (auto p = std::get_if<PureState>(&f.object)) return {p->density(), *p};
  return {f.density(), std::nullopt};
}

HamiltonianSpec load_ham(const Options& o) {
  if (o.ham.empty()) throw ValidationError("--ham is required");
  if (looks_like_file(o.ham)) {
    json j = read_json_file(o.ham);
    if (j.contains("dense")) {
      Matrix m = matrix_from_json(j["dense"]);
      return HamiltonianSpec::from_dense(m, dims_from_json(j, m.rows()));
    }
    if (!j.contains("terms") || !j.contains("dims")) {
      throw ValidationError(o.ham + ": expected \"dense\" or \"terms\" with \"dims\"");
    }
    std::vector<LocalTerm> terms;
    for (const auto& t : j["terms"]) terms.push_back({matrix_from_json(t.at("matrix")), t.at("support").get<std::vector<int>>()});
    return HamiltonianSpec::from_terms(std::move(terms), j["dims"].get<Dims>());
  }
  if (is_pauli_expr(o.ham)) {
    std::vector<double> c;
    if (!o.coeffs.empty()) {
      for (const auto& s : split(o.coeffs, ',')) c.push_back(to_double(s, "--coeffs"));
    }
    return HamiltonianSpec::from_pauli_strings(o.ham, c);
  }
  if (!o.coeffs.empty()) throw ValidationError("--coeffs only applies to Pauli-string Hamiltonians");
  return fixture(o.ham, o.seed).hamiltonian();
}

Representation load_rep(const std::string& spec, const Dims& dims) {
  if (spec.empty()) throw ValidationError("--group is required");
  if (spec.starts_with("table:")) {
    std::string path = spec.substr(6);
    json j = read_json_file(path);
    std::vector<Matrix> ms;
    for (const auto& m : j.at("matrices")) ms.push_back(matrix_from_json(m));
    if (ms.empty()) throw ValidationError(path + ": empty table");
    Dims d = j.contains("dims") ? j["dims"].get<Dims>() : dims;
    std::optional<std::vector<int>> labels;
    if (j.contains("labels")) labels = j["labels"].get<std::vector<int>>();
    std::string name = j.contains("name") ? j["name"].get<std::string>() : path;
    UnitaryRepTable t(name, std::move(ms), d, labels);
    if (t.dim() != product(dims)) throw ValidationError(path + ": rep dimension does not match the input");
    return t;
  }
  return rep_from_spec(spec, dims);
}

Matrix load_unitary(const Options& o) {
  const std::string& s = o.unitary;
  if (s.empty()) throw ValidationError("--unitary is required");
  if (s.starts_with("random:")) {
    int d = to_int(s.substr(7), "--unitary");
    if (d < 1 || d > kMaxDim / 2) throw ValidationError("--unitary: dimension out of range");
    return random_unitary(d, o.seed);
  }
  if (s.starts_with("identity:")) {
    int d = to_int(s.substr(9), "--unitary");
    if (d < 1 || d > kMaxDim / 2) throw ValidationError("--unitary: dimension out of range");
    return Matrix::Identity(d, d);
  }
  if (s == "t") {
    Matrix t = Matrix::Identity(2, 2);
    t(1, 1) = std::polar(1.0, std::acos(-1.0) / 4.0);
    return t;
  }
  if (looks_like_file(s)) {
    json j = read_json_file(s);
    return matrix_from_json(j.contains("matrix") ? j["matrix"] : j);
  }
  throw ValidationError("--unitary: expected random:d, identity:d, t or a JSON file");
}

std::vector<std::string> group_list(const std::string& s, char sep) {
  std::vector<std::string> out;
  for (auto& g : split(s, sep)) {
    if (g.empty()) throw ValidationError("--group: empty entry in '" + s + "'");
    out.push_back(g);
  }
  return out;
}

// Separability tests act on one party: multi-factor states are reduced to
// their last factor.
DensityMatrix single_party(const StateInput& in) {
  const Dims& dims = in.rho.dims();
  if (dims.size() <= 1) return in.rho;
  return partial_trace(in.rho, {static_cast<int>(dims.size()) - 1});
}

void require_seed_for_shots(const Options& o) {
  if (o.shots > 0 && !o.seed_given) throw ValidationError("--seed is required when --shots > 0");
  if (o.shots < 0) throw ValidationError("--shots must be >= 0");
}

void pair_cells(Row& r, const std::string& a_name, double a, const std::string& b_name, double b) {
  r.add(a_name, a).add(b_name, b).add("abs_diff", std::abs(a - b));
}

// ---- commands ----------------------------------------------------------

void cmd_bose(const Options& o, Report& rep) {
  require_seed_for_shots(o);
  StateInput in = load_state(o);
  Representation g = load_rep(o.group, in.rho.dims());
  AcceptanceReport a = bose_acceptance(in.rho, g);
  Row r;
  r.add("method", a.method);
  pair_cells(r, "circuit", a.simulated, "projector", *a.closed_form);
  rep.rows.push_back(std::move(r));
  if (o.shots > 0) {
    PureState psi = in.pure ? *in.pure : purify(in.rho);
    AcceptanceReport s = bose_circuit_sample(psi, g, o.shots, o.seed);
    Row rs;
    rs.add("method", s.method);
    pair_cells(rs, "sampled", s.simulated, "projector", *s.closed_form);
    rs.add("shots", s.shots).add("standard_error", s.meta.at("standard_error"));
    rep.rows.push_back(std::move(rs));
  }
}

void cmd_symmetry(const Options& o, Report& rep, SymmetryMode mode) {
  StateInput in = load_state(o);
  int ref = 1;
  Dims dims = in.rho.dims();
  if (mode != SymmetryMode::GSym) {
    if (o.ref_dim < 1) throw ValidationError("--ref-dim is required for " + to_string(mode));
    ref = o.ref_dim;
    dims.insert(dims.begin(), ref);
  }
  Representation g = load_rep(o.group, dims);
  ProverConfig cfg;
  cfg.restarts = o.restarts;
  cfg.seed = o.seed;
  OptimizationResult pr = prover_acceptance(in.rho, g, mode, ref, cfg);
  OptimizationResult st = max_symmetric_fidelity(in.rho, g, mode, ref, cfg);
  Row r;
  r.add("mode", to_string(mode)).add("method", std::string("prover|state"));
  pair_cells(r, "prover", pr.value, "state_side", st.value);
  r.add("certified_gap", st.gap).add("prover_converged", pr.converged).add("state_converged", st.converged);
  r.add("prover_restart", static_cast<long>(pr.best_restart)).add("state_restart", static_cast<long>(st.best_restart));
  rep.rows.push_back(std::move(r));
  rep.converged = pr.converged && st.converged;
}

void cmd_ham(const Options& o, Report& rep) {
  HamiltonianSpec h = load_ham(o);
  Representation g = load_rep(o.group, h.dims());
  for (double t : parse_t_grid(o.t.empty() ? "1" : o.t)) {
    AcceptanceReport a = covariance_acceptance(h, g, t);
    MaxOverStatesReport m = max_over_states_acceptance(h, g, t);
    Row r;
    r.add("t", t).add("method", a.method);
    pair_cells(r, "choi", a.simulated, "trace", *a.closed_form);
    r.add("max_over_states", m.value).add("bound_evolution", m.bound_evolution);
    if (m.bound_small_t) r.add("bound_small_t", *m.bound_small_t);
    r.add("bound_nested", m.bound_nested);
    rep.rows.push_back(std::move(r));
  }
}

void cmd_dqc1(const Options& o, Report& rep) {
  Matrix u = load_unitary(o);
  Dqc1Report d = dqc1_reduction_check(u);
  Row r;
  r.add("d", static_cast<long>(u.rows())).add("method", std::string("choi|closed-form"));
  r.add("lhs", d.lhs).add("lhs_trace", d.lhs_trace).add("rhs", d.rhs).add("abs_diff", std::abs(d.lhs - d.rhs));
  rep.rows.push_back(std::move(r));
}

void cmd_dme(const Options& o, Report& rep) {
  StateInput in = load_state(o);
  Representation g = load_rep(o.group, in.rho.dims());
  for (double t : parse_t_grid(o.t.empty() ? "0.01" : o.t)) {
    AcceptanceReport a = dme_acceptance(in.rho, g, t);
    Row r;
    r.add("t", t).add("method", a.method);
    pair_cells(r, "exact", a.simulated, "expansion", *a.closed_form);
    r.add("trace_form", a.meta.at("trace_form")).add("delta", a.meta.at("delta"));
    if (a.meta.count("copies")) r.add("copies", a.meta.at("copies"));
    rep.rows.push_back(std::move(r));
  }
}

void cmd_otoc(const Options& o, Report& rep) {
  HamiltonianSpec h = load_ham(o);
  Representation g = load_rep(o.group, h.dims());
  const UnitaryRepTable* table = g.table();
  if (!table) throw ValidationError("otoc: the group needs a labelled table (e.g. phase:d, shift:N, xflip:N)");
  for (double t : parse_t_grid(o.t.empty() ? "1" : o.t)) {
    OtocReport x = abelian_otoc(h, *table, t);
    std::optional<OtocSample> s;
    if (o.sample) s = abelian_otoc_sample(h, *table, t, o.eps, o.delta, o.seed);
    for (std::size_t l = 0; l < x.probabilities.size(); ++l) {
      Row r;
      r.add("t", t).add("label", static_cast<long>(l)).add("method", std::string("fourier|inverse"));
      r.add("pr", x.probabilities[l]);
      r.add("otoc_re", x.otoc[l].real()).add("otoc_im", x.otoc[l].imag());
      r.add("recovered_re", x.recovered[l].real()).add("recovered_im", x.recovered[l].imag());
      r.add("abs_diff", std::abs(x.otoc[l] - x.recovered[l]));
      if (s) {
        r.add("samples", s->samples).add("frequency", s->frequencies[l]);
        r.add("estimate_re", s->estimates[l].real()).add("estimate_im", s->estimates[l].imag());
      }
      rep.rows.push_back(std::move(r));
    }
  }
}

void cmd_blockenc(const Options& o, Report& rep) {
  HamiltonianSpec h = load_ham(o);
  Representation g = load_rep(o.group, h.dims());
  AcceptanceReport a = block_encoding_acceptance(h.dense(), g);
  Row r;
  r.add("method", a.method);
  pair_cells(r, "circuit", a.simulated, "trace", *a.closed_form);
  rep.rows.push_back(std::move(r));
}

void sep_rows(const DensityMatrix& rho, const std::string& kind_name, const std::vector<int>& ks, Report& rep) {
  GroupKind kind = parse_group_kind(kind_name);
  for (int k : ks) {
    if (kind == GroupKind::Dihedral && k < 3) continue;
    Row r;
    r.add("k", static_cast<long>(k)).add("group", to_string(kind));
    double p = 0.0;
    std::optional<double> direct;
    long total = 1;
    bool small = true;
    for (int i = 0; i < k && small; ++i) {
      total *= rho.dim();
      small = total <= kMaxDim;
    }
    if (kind == GroupKind::Symmetric) {
      p = acceptance_sym(rho, k).p;
      r.add("p", p).add("method", std::string("cycle-index"));
      double rec = acceptance_recurrence(rho, k).p;
      double bell = acceptance_bell(rho, k).p;
      r.add("p_recurrence", rec).add("p_bell", bell);
      if (small && k <= 7) direct = acceptance_direct(rho, symmetric_group(k));
      double diff = std::max(std::abs(p - rec), std::abs(p - bell));
      if (direct) diff = std::max(diff, std::abs(p - *direct));
      if (direct) r.add("p_direct", *direct);
      r.add("abs_diff", diff);
    } else {
      FiniteGroup g = make_group(kind, k);
      p = acceptance_group(rho, g).p;
      r.add("p", p).add("method", std::string("cycle-index"));
      if (small) {
        direct = acceptance_direct(rho, g);
        r.add("p_direct", *direct).add("abs_diff", std::abs(p - *direct));
      }
    }
    rep.rows.push_back(std::move(r));
  }
}

void cmd_sep(const Options& o, Report& rep) {
  DensityMatrix rho = single_party(load_state(o));
  std::string spec = o.group.empty() ? "sym" : o.group;
  if (spec.find(':') != std::string::npos) {
    FiniteGroup g = group_from_spec(spec);
    SeparabilityResult s = acceptance_group(rho, g);
    Row r;
    r.add("k", static_cast<long>(g.degree())).add("group", g.name()).add("p", s.p).add("method", s.method);
    long total = 1;
    bool small = true;
    for (int i = 0; i < g.degree() && small; ++i) {
      total *= rho.dim();
      small = total <= kMaxDim;
    }
    if (small) {
      double direct = acceptance_direct(rho, g);
      r.add("p_direct", direct).add("abs_diff", std::abs(s.p - direct));
    }
    rep.rows.push_back(std::move(r));
    return;
  }
  sep_rows(rho, spec, parse_k_grid(o.k.empty() ? "2..6" : o.k), rep);
}

void resource_rows(const DensityMatrix& rho, const std::vector<std::string>& kinds, const std::vector<int>& ks,
                   Report& rep, bool strict) {
  for (const auto& name : kinds) {
    GroupKind kind = parse_group_kind(name);
    for (int k : ks) {
      if (k < 2 || (kind == GroupKind::Dihedral && k < 3)) continue;
      ResourceCount c = gate_count(kind, k);
      double p = kind == GroupKind::Symmetric ? acceptance_sym(rho, k).p : acceptance_group(rho, make_group(kind, k)).p;
      Row r;
      r.add("k", static_cast<long>(k)).add("group", to_string(kind)).add("p", p).add("cswaps", c.cswap_count);
      if (1.0 - p >= 1e-12) {
        RejectionRatio rr = resources_to_rejection(rho, kind, k);
        r.add("ratio", rr.ratio).add("estimated_cswaps", c.estimated_cswaps).add("estimated_ratio", rr.estimated_ratio);
      } else if (strict) {
        resources_to_rejection(rho, kind, k);  // throws the defined error
      } else {
        r.add("ratio", std::string("")).add("estimated_cswaps", c.estimated_cswaps).add("estimated_ratio", std::string(""));
      }
      r.add("controlled_powers", c.controlled_powers).add("control_qubits", c.control_qubits);
      rep.rows.push_back(std::move(r));
    }
  }
}

void cmd_resources(const Options& o, Report& rep) {
  DensityMatrix rho = single_party(load_state(o));
  resource_rows(rho, group_list(o.group.empty() ? "sym,cyc,dih" : o.group, ','),
                parse_k_grid(o.k.empty() ? "2..8" : o.k), rep, true);
}

void cmd_sweep(const Options& o, Report& rep) {
  bool has_state = !o.state.empty();
  bool has_ham = !o.ham.empty();
  if (has_state == has_ham) throw ValidationError("sweep: give exactly one of --state or --ham");
  if (has_ham) {
    HamiltonianSpec h = load_ham(o);
    for (const auto& spec : group_list(o.group, ';')) {
      Representation g = load_rep(spec, h.dims());
      for (double t : parse_t_grid(o.t.empty() ? "0..2:21" : o.t)) {
        AcceptanceReport a = covariance_acceptance(h, g, t);
        Row r;
        r.add("t", t).add("group", spec).add("method", a.method);
        pair_cells(r, "choi", a.simulated, "trace", *a.closed_form);
        rep.rows.push_back(std::move(r));
      }
    }
    return;
  }
  DensityMatrix rho = single_party(load_state(o));
  resource_rows(rho, group_list(o.group.empty() ? "sym,cyc,dih" : o.group, ','),
                parse_k_grid(o.k.empty() ? "2..8" : o.k), rep, false);
}

// ---- output ------------------------------------------------------------

json cell_json(const Cell& c, bool hex) {
  return std::visit(
      [&](const auto& v) -> json {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, double>) {
          if (hex || !std::isfinite(v)) return format_double(v, true);
          return v;
        } else {
          return v;
        }
      },
      c);
}

std::string cell_csv(const Cell& c, bool hex) {
  return std::visit(
      [&](const auto& v) -> std::string {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, double>) {
          return format_double(v, hex);
        } else if constexpr (std::is_same_v<T, long>) {
          return std::to_string(v);
        } else if constexpr (std::is_same_v<T, bool>) {
          return v ? "true" : "false";
        } else {
          if (v.find_first_of(",\"\n") == std::string::npos) return v;
          std::string q = "\"";
          for (char ch : v) q += (ch == '"') ? std::string("\"\"") : std::string(1, ch);
          return q + "\"";
        }
      },
      c);
}

std::string render(const Report& rep, const Options& o) {
  if (o.format == "csv") {
    std::vector<std::string> header;
    for (const auto& r : rep.rows) {
      for (const auto& [k, v] : r.cells) {
        if (std::find(header.begin(), header.end(), k) == header.end()) header.push_back(k);
      }
    }
    std::ostringstream s;
    for (std::size_t i = 0; i < header.size(); ++i) s << (i ? "," : "") << header[i];
    s << "\n";
    for (const auto& r : rep.rows) {
      for (std::size_t i = 0; i < header.size(); ++i) {
        if (i) s << ",";
        for (const auto& [k, v] : r.cells) {
          if (k == header[i]) {
            s << cell_csv(v, o.hexfloat);
            break;
          }
        }
      }
      s << "\n";
    }
    return s.str();
  }
  json j;
  j["schema"] = 1;
  j["command"] = rep.command;
  j["config"] = rep.config;
  j["converged"] = rep.converged;
  json rows = json::array();
  for (const auto& r : rep.rows) {
    json row = json::object();
    for (const auto& [k, v] : r.cells) row[k] = cell_json(v, o.hexfloat);
    rows.push_back(std::move(row));
  }
  j["rows"] = std::move(rows);
  return j.dump(2) + "\n";
}

json config_json(const std::string& command, const Options& o) {
  json c = json::object();
  c["command"] = command;
  auto put = [&](const char* k, const std::string& v) {
    if (!v.empty()) c[k] = v;
  };
  put("state", o.state);
  put("ham", o.ham);
  put("coeffs", o.coeffs);
  put("group", o.group);
  put("k", o.k);
  put("t", o.t);
  put("unitary", o.unitary);
  c["seed"] = o.seed;
  if (o.shots) c["shots"] = o.shots;
  if (o.ref_dim) c["ref_dim"] = o.ref_dim;
  c["restarts"] = o.restarts;
  if (o.sample) {
    c["epsilon"] = o.eps;
    c["delta"] = o.delta;
  }
  c["format"] = o.format;
  c["hexfloat"] = o.hexfloat;
  return c;
}

}  // namespace

std::vector<double> parse_t_grid(const std::string& s) {
  std::size_t dots = s.find("..");
  if (dots == std::string::npos) return {to_double(s, "--t")};
  std::size_t colon = s.find(':', dots);
  if (colon == std::string::npos) throw ValidationError("--t: expected start..end:count");
  double a = to_double(s.substr(0, dots), "--t");
  double b = to_double(s.substr(dots + 2, colon - dots - 2), "--t");
  int n = to_int(s.substr(colon + 1), "--t");
  if (n < 1 || n > 100000) throw ValidationError("--t: count must be in 1..100000");
  std::vector<double> out(n);
  for (int i = 0; i < n; ++i) out[i] = n == 1 ? a : a + (b - a) * i / (n - 1);
  return out;
}

std::vector<int> parse_k_grid(const std::string& s) {
  std::size_t dots = s.find("..");
  if (dots == std::string::npos) return {to_int(s, "--k")};
  int a = to_int(s.substr(0, dots), "--k");
  int b = to_int(s.substr(dots + 2), "--k");
  if (a < 1 || b < a) throw ValidationError("--k: expected a..b with 1 <= a <= b");
  if (b > kMaxPartitionK) throw ValidationError("--k: upper end exceeds " + std::to_string(kMaxPartitionK));
  std::vector<int> out;
  for (int k = a; k <= b; ++k) out.push_back(k);
  return out;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Quantum symmetry tests: acceptance probabilities, cross-checks and plot data", "symtest"};
  app.require_subcommand(1);
  Options o;

  struct Cmd {
    const char* name;
    const char* help;
    std::function<void(const Options&, Report&)> fn;
  };
  std::vector<Cmd> cmds = {
      {"bose", "G-Bose symmetry test of a state", cmd_bose},
      {"gsym", "G-symmetry test (prover and state-side optima)",
       [](const Options& x, Report& r) { cmd_symmetry(x, r, SymmetryMode::GSym); }},
      {"gbse", "G-Bose symmetric extendibility test",
       [](const Options& x, Report& r) { cmd_symmetry(x, r, SymmetryMode::GBSE); }},
      {"gse", "G-symmetric extendibility test",
       [](const Options& x, Report& r) { cmd_symmetry(x, r, SymmetryMode::GSE); }},
      {"ham", "Hamiltonian covariance test over a t-grid", cmd_ham},
      {"dqc1", "DQC1 reduction identity", cmd_dqc1},
      {"dme", "Symmetry test of a state used as a Hamiltonian", cmd_dme},
      {"otoc", "Group-averaged OTOC distribution for an Abelian group", cmd_otoc},
      {"blockenc", "Block-encoding symmetry test", cmd_blockenc},
      {"sep", "Separability test acceptance over a k-grid", cmd_sep},
      {"resources", "Gate counts and resources-to-rejection", cmd_resources},
      {"sweep", "Figure data: t-sweep over groups, or k-sweep over group kinds", cmd_sweep},
  };
  std::map<std::string, CLI::App*> subs;
  std::vector<CLI::Option*> seed_opts;
  for (const auto& c : cmds) {
    CLI::App* s = app.add_subcommand(c.name, c.help);
    s->add_option("--state", o.state, "State fixture or JSON file");
    s->add_option("--ham", o.ham, "Hamiltonian fixture, Pauli expression or JSON file");
    s->add_option("--coeffs", o.coeffs, "Comma-separated coefficients for a Pauli expression");
    s->add_option("--group", o.group, "Group or representation spec");
    s->add_option("--k", o.k, "k-grid a..b");
    s->add_option("--t", o.t, "t-grid start..end:count");
    s->add_option("--unitary", o.unitary, "random:d, identity:d, t or a JSON file");
    s->add_option("--shots", o.shots, "Sampled shots (0 = exact)");
    seed_opts.push_back(s->add_option("--seed", o.seed, "Random seed"));
    s->add_option("--out", o.out, "Output path (default stdout)");
    s->add_option("--format", o.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
    s->add_flag("--hexfloat", o.hexfloat, "Write doubles as hex floats");
    s->add_option("--ref-dim", o.ref_dim, "Reference dimension for extendibility tests");
    s->add_option("--restarts", o.restarts, "Optimizer restarts")->check(CLI::Range(1, 1000));
    s->add_option("--eps", o.eps, "OTOC sample accuracy");
    s->add_option("--delta", o.delta, "OTOC sample failure probability");
    s->add_flag("--sample", o.sample, "Also draw OTOC samples");
    subs[c.name] = s;
  }

  std::vector<std::string> argv_store = {"symtest"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& a : argv_store) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      app.exit(e, out, err);
      return kExitOk;
    }
    err << "symtest: " << e.what() << "\n";
    return kExitInvalid;
  }
  for (auto* so : seed_opts) o.seed_given = o.seed_given || so->count() > 0;

  for (const auto& c : cmds) {
    if (!subs[c.name]->parsed()) continue;
    Report rep;
    rep.command = c.name;
    try {
      rep.config = config_json(c.name, o);
      c.fn(o, rep);
    } catch (const ValidationError& e) {
      err << "symtest " << c.name << ": " << e.what() << "\n";
      return kExitInvalid;
    } catch (const ConvergenceError& e) {
      err << "symtest " << c.name << ": " << e.what() << "\n";
      return kExitNoConvergence;
    } catch (const nlohmann::json::exception& e) {
      err << "symtest " << c.name << ": " << e.what() << "\n";
      return kExitInvalid;
    }
    std::string text = render(rep, o);
    if (o.out.empty()) {
      out << text;
    } else {
      std::ofstream f(o.out, std::ios::binary);
      if (!f) {
        err << "symtest: cannot write '" << o.out << "'\n";
        return kExitInvalid;
      }
      f << text;
    }
    if (!rep.converged) {
      err << "symtest " << c.name << ": optimizer did not converge\n";
      return kExitNoConvergence;
    }
    return kExitOk;
  }
  return kExitInvalid;
}

}  // namespace symtest::cli
