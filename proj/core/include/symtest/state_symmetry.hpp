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

#ifndef SYMTEST_STATE_SYMMETRY_HPP
#define SYMTEST_STATE_SYMMETRY_HPP

#include <cmath>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "symtest/groups.hpp"
#include "symtest/linalg.hpp"

namespace symtest {

/// One acceptance probability, optionally paired with a second evaluation.
struct AcceptanceReport {
  double simulated = 0.0;
  std::optional<double> closed_form;
  long shots = 0;  // 0 means exact
  std::uint64_t seed = 0;
  std::string method;
  std::map<std::string, double> meta;

  double abs_diff() const { return closed_form ? std::abs(simulated - *closed_form) : 0.0; }
};

enum class SymmetryMode { GSym, GBSE, GSE };

std::string to_string(SymmetryMode m);

struct ProverConfig {
  std::optional<int> ancilla_dim;  // defaults to the smallest workable size
  int restarts = 8;
  int max_iters = 4000;
  double initial_step = 0.5;
  double tolerance = 1e-7;
  std::uint64_t seed = 1;
};

struct OptimizationResult {
  double value = 0.0;
  bool converged = false;
  int iterations = 0;        // of the winning restart
  int best_restart = 0;
  double gap = 0.0;          // certified optimality gap (state side), or last step change
  std::vector<double> restart_values;
  Matrix optimizer;          // sigma for the state side, V for the prover
};

/// Tr[Pi rho] by the projector formula and by simulating the control-register
/// circuit; `simulated` holds the circuit value and `closed_form` the formula.
AcceptanceReport bose_acceptance(const DensityMatrix& rho, const Representation& rep);

/// Monte Carlo estimate of the acceptance of the control-register circuit on a pure input. The
/// representation acts on the trailing factor of `psi` (any leading factor is
/// a reference system).
AcceptanceReport bose_circuit_sample(const PureState& psi, const Representation& rep, long shots,
                                     std::uint64_t seed);

/// State-side optimum of F(rho, sigma) over the symmetric set selected by
/// `mode`. For GBSE/GSE the rep acts on R (x) S with dim R = ref_dim.
OptimizationResult max_symmetric_fidelity(const DensityMatrix& rho, const Representation& rep, SymmetryMode mode,
                                          int ref_dim, const ProverConfig& cfg);

/// Prover-side optimum max_V ||Pi (V (x) I)|psi>|0>||^2 with psi a purification of rho.
OptimizationResult prover_acceptance(const DensityMatrix& rho, const Representation& rep, SymmetryMode mode,
                                     int ref_dim, const ProverConfig& cfg);

/// Same as prover_acceptance, for a given pure state psi on S' (x) S stored as
/// the dS' x dS coefficient matrix.
OptimizationResult prover_acceptance_pure(const Matrix& psi, const Representation& rep, SymmetryMode mode,
                                          int ref_dim, const ProverConfig& cfg);

/// Smallest ancilla dimension that makes the prover's output registers fit.
int default_ancilla_dim(int purifier_dim, int system_dim, SymmetryMode mode, int ref_dim);

/// Phase group {Z^z} on C^d with Z = diag(omega^j).
UnitaryRepTable phase_rep(int d);

/// Maximum fidelity with an incoherent (diagonal) state.
OptimizationResult incoherence_acceptance(const DensityMatrix& rho, const ProverConfig& cfg);

struct PurificationCheck {
  bool symmetric = false;
  double defect = 0.0;
};

/// Builds (sqrt(omega) (x) I)|Gamma> and measures its invariance under U (x) conj(U).
PurificationCheck symmetric_purification_check(const DensityMatrix& omega, const Representation& rep);

/// Tr[(x)_i Pi^Sym_i psi^{(x)k}] with one symmetrizer per party over its k copies.
double multipartite_bose_acceptance(const PureState& psi, const Dims& parties, int k);

struct ChannelCovarianceReport {
  double prover = 0.0;       // G-symmetric prover optimum on the Choi purification
  double state_side = 0.0;   // state-side max fidelity of the Choi state
  double bose = 0.0;         // Tr[Pi Choi], never above the G-sym values
  bool converged = false;
};

/// Covariance test of the channel A -> B with unitary dilation W on
/// A (x) E_in = B (x) E_out. in_rep acts on A, out_rep on B.
ChannelCovarianceReport channel_covariance_acceptance(const Matrix& w, int dim_a, int dim_b,
                                                      const UnitaryRepTable& in_rep,
                                                      const UnitaryRepTable& out_rep, const ProverConfig& cfg);

/// Choi state of the channel rho -> Tr_Eout[W (rho (x) |0><0|) W^dagger] on R (x) B.
Matrix choi_state(const Matrix& w, int dim_a, int dim_b);

struct GentleReport {
  double epsilon = 0.0;          // 1 - Tr[Pi rho]
  double disturbance = 0.0;      // ||rho - Pi rho Pi||_1
  double acceptance = 0.0;       // Tr[Pi rho]
  bool gentle_bound_holds = false;   // disturbance <= 2 sqrt(epsilon)
  bool reverse_bound_holds = false;  // acceptance >= 1 - disturbance
};

GentleReport gentle_measurement(const DensityMatrix& rho, const Matrix& projector);

/// Worker count for restart batches; SYMTEST_THREADS caps it.
int worker_threads();

}  // namespace symtest

#endif  // SYMTEST_STATE_SYMMETRY_HPP
