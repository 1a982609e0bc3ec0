#pragma once

#include <optional>
#include <vector>

#include "gscon/instance.hpp"
#include "gscon/nets.hpp"

namespace gscon {

/// One claimed proof element for the pseudo-net protocol: the qubit pair and
/// the integer disk-grid coordinates of a d=4 matrix (16 entries, row-major).
struct PseudoProofElement {
  std::array<int, 2> qubits;
  std::vector<std::array<std::int64_t, 2>> coords;
};
using QcmaProof = std::vector<PseudoProofElement>;

struct QcmaSimResult {
  bool accepted = false;
  double epsilon = 0.0;                // Delta / (16 m L)
  double energy_threshold = 0.0;       // eta1 + epsilon
  double proximity_threshold = 0.0;    // eta3 + epsilon
  int rejected_at = -1;                // proof index failing the unitary check
  std::vector<double> step_energies;
  double final_distance = 0.0;
};

/// Pseudo-net protocol, simulated exactly: check each claimed element, round
/// to unitaries, then test every intermediate energy against eta1 + eps and
/// the final distance against eta3 + eps, eps = Delta/(16 m L). Phase
/// estimation and the swap test are replaced by exact expectation values.
QcmaSimResult qcma_verifier_sim(const GsconInstance& inst, const QcmaProof& proof);

/// Snaps an explicit 2-local witness to the instance's pseudo-net.
QcmaProof make_qcma_proof(const GsconInstance& inst, const WitnessSequence& w);

/// Branching control for the net searches. The single-qubit net at the
/// prescribed resolution is far too large to enumerate, so candidate moves
/// come from an explicit dictionary of net elements (every guess the
/// algorithm makes is still a genuine net element).
struct SearchOptions {
  std::optional<double> net_eps;       // override; default Delta/(8L(2(m-1)+1))
  std::vector<Matrix> move_dictionary; // snapped onto the net before use; empty = default dictionary
  std::uint64_t max_nodes = 20'000'000;
};

struct PspaceResult {
  bool accepted = false;
  double epsilon = 0.0;              // net resolution used
  double energy_threshold = 0.0;     // eta1 + Delta/3
  double proximity_threshold = 0.0;  // eta3 + Delta/4
  std::uint64_t nodes_visited = 0;
};

/// Depth-first realization of the nondeterministic per-qubit search: guess a
/// net element and a qubit, fold it into that qubit's cumulative operator,
/// re-snap the product onto the net, prune on the energy test, accept on the
/// proximity test. Memoized on (step, per-qubit net indices).
PspaceResult pspace_search(const GsconInstance& inst, const SearchOptions& opts = {});

/// Default move dictionary: identity, Paulis, Hadamard and a ladder of X/Y/Z
/// rotations.
std::vector<Matrix> default_move_dictionary();

struct BruteForceResult {
  bool accepted = false;
  double energy_budget = 0.0;    // eta1 + 4 eps m L
  double distance_budget = 0.0;  // eta3 + 2 eps m
  std::uint64_t nodes_visited = 0;
};

/// Independent oracle: plain enumeration over net-element sequences of length
/// up to m (no cumulative re-rounding), accepting when some sequence passes
/// the thresholds relaxed by the net error budget.
BruteForceResult brute_force_gscon(const GsconInstance& inst, const SearchOptions& opts = {});

/// Cumulative rounding drift along an honest 1-local witness: per step i the
/// spectral distance between the exact product and the algorithm's re-snapped
/// per-qubit operators, with its bound (2(i-1)+1) * eps.
struct DriftTrace {
  double epsilon = 0.0;
  std::vector<double> drift;
  std::vector<double> bound;
};
DriftTrace pspace_round_trace(const GsconInstance& inst, const WitnessSequence& w,
                              std::optional<double> net_eps = std::nullopt);

}  // namespace gscon
