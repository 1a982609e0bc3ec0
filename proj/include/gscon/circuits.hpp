#pragma once

#include <optional>
#include <vector>

#include "gscon/local_op.hpp"

namespace gscon {

/// Verification circuit acting on a proof register followed by an ancilla
/// register; gates are at most 2-local. Acceptance is the probability of
/// measuring |1> on the output qubit after the full circuit.
struct CircuitDescriptor {
  std::vector<LocalOperator> gates;
  int n_proof = 0;
  int n_ancilla = 0;
  int output_qubit = 0;

  int n_work() const { return n_proof + n_ancilla; }
  int gate_count() const { return static_cast<int>(gates.size()); }

  void validate() const;
};

/// Deferred-measurement transformer: prepends CNOTs copying each proof qubit
/// into a fresh ancilla, so the verifier is sound against non-classical
/// proofs. The copies sit after the original ancillas.
CircuitDescriptor with_proof_copy(const CircuitDescriptor& v_prime);

StateVector run_circuit(const CircuitDescriptor& circ, const StateVector& input);
double acceptance_probability(const CircuitDescriptor& circ, const StateVector& proof);

/// Uniform superposition over partial computations on proof x ancilla x unary
/// clock: sum_i V_i...V_1 |psi>|0...0> (x) |1^i 0^(L-i)> / sqrt(L+1).
StateVector history_state(const CircuitDescriptor& circ, const StateVector& proof);

/// Unary-clock circuit-to-Hamiltonian construction with input, clock,
/// propagation, and output penalty terms over proof (x) ancilla (x) clock.
struct KitaevHamiltonian {
  LocalHamiltonian ham;
  int n_clock;
  std::optional<double> alpha_bound;    // certified history-state energy bound
  std::optional<double> beta_estimate;  // measured smallest eigenvalue
};

KitaevHamiltonian kitaev_hamiltonian(const CircuitDescriptor& circ);

/// Same construction, with alpha_bound certified against the given test
/// proofs (measured history-state energy plus float slack) and beta_estimate
/// filled from a dense eigensolve when the system is small enough.
KitaevHamiltonian kitaev_hamiltonian(const CircuitDescriptor& circ,
                                     const std::vector<StateVector>& test_proofs,
                                     bool solve_beta = false);

/// Circuit of at most 2-local gates preparing history_state(circ, |x>) from
/// |x>|0...0>|0...0>. Clock-controlled gates are emitted 2-locally, which
/// requires every multi-qubit circuit gate to have classical-basis controls
/// at its time step; throws otherwise.
std::vector<LocalOperator> history_prep_circuit(const CircuitDescriptor& circ,
                                                const std::vector<bool>& x);

/// CNOT with `control` mapped to |1>-controlled X on `target`.
LocalOperator cnot(int control, int target);
/// Toffoli on (c1, c2) -> target.
LocalOperator toffoli(int c1, int c2, int target);

}  // namespace gscon
