#pragma once

#include <array>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "gscon/circuits.hpp"
#include "gscon/instance.hpp"
#include "gscon/korth.hpp"

namespace gscon {

/// 3-CNF formula; literals may repeat inside a clause (2-variable clauses are
/// padded by repetition).
struct Clause3 {
  std::array<int, 3> vars;      // 0-based variable indices
  std::array<bool, 3> negated;  // literal is NOT x_i
};

struct Cnf3 {
  int num_vars = 0;
  std::vector<Clause3> clauses;

  void validate() const;
  bool satisfies(const std::vector<bool>& assignment) const;
  std::vector<std::uint64_t> satisfying_assignments() const;  // as basis indices
};

Cnf3 parse_dimacs(const std::string& text);
std::vector<bool> parse_bitstring(const std::string& bits);
std::uint64_t bits_to_index(const std::vector<bool>& bits);

/// BFS over the satisfying-assignment hypercube (single-bit flips). Endpoints
/// must satisfy the formula. Returns the shortest path when connected.
struct StconnResult {
  bool connected = false;
  std::vector<std::vector<bool>> path;
};
StconnResult stconn_bfs(const Cnf3& cnf, const std::vector<bool>& x, const std::vector<bool>& y);

/// 3-CNF embedded as one rank-1 diagonal projector per clause, with the
/// exponential-length 1-local traversal parameters:
/// eta1 = eta3 = 0, eta2 = Delta = 2^-(2n+4), eta4 = 1/4, l = 1, m = 2^n.
GsconInstance stconn_to_gscon(const Cnf3& cnf, const std::vector<bool>& x, const std::vector<bool>& y);

/// Pauli-X steps for a bit-flip path, identity-padded to length m.
WitnessSequence stconn_witness(const Cnf3& cnf, const std::vector<std::vector<bool>>& path,
                               std::uint64_t m);

/// Reachable/unreachable split of the satisfying assignments from x.
struct StconnSplit {
  Subspace s;  // reachable from x
  Subspace t;  // remaining satisfying assignments
};
std::optional<StconnSplit> stconn_split(const Cnf3& cnf, const std::vector<bool>& x);

/// Entrywise check that the diagonal Hamiltonian dominates I - Pi_S - Pi_T:
/// zero energy exactly on S (+) T, at least 1 elsewhere.
bool h_dominates_p_check(const LocalHamiltonian& h, const Subspace& s, const Subspace& t);

/// The six 2-local pieces summing to I - |000><000| - |111><111| on the given
/// qubit triple.
std::vector<LocalOperator> go_projector_pieces(int g0, int g1, int g2);

/// Product construction H'_j (x) piece over (H' qubits) + 2 of the 3 GO
/// qubits; psi/phi all-zeros with GO at |000>/|111>;
/// eta1 = alpha, eta2 = beta/(16 m^2), eta3 = 0, eta4 = 1/4.
GsconInstance go_compose(const LocalHamiltonian& h_prime, double alpha, double beta,
                         std::uint64_t m);

/// The six-step traversal: X-prep of x, W, the two GO flips, W reversed and
/// daggered, X-unprep; identity-padded to exactly 2(n_p + |W| + 1).
WitnessSequence go_witness_sequence(const std::vector<bool>& x, const CircuitDescriptor& circ,
                                    const std::vector<LocalOperator>& w);

/// Verifier circuit -> full GO instance, with W built from the classical
/// proof and alpha/beta measured on the clock Hamiltonian.
struct GoInstance {
  GsconInstance instance;
  WitnessSequence honest_witness;
  int w_size = 0;
  double alpha = 0.0;
  double beta = 0.0;
};
GoInstance go_instance_from_circuit(const CircuitDescriptor& v_prime, const std::vector<bool>& x,
                                    bool solve_beta = false);

/// Oracle callbacks for succinctly described instances: term, start-state and
/// target-state generators over 2^n_exp qubits and 2^r_exp terms.
struct SuccinctOracles {
  int n_exp = 0;
  int r_exp = 0;
  std::function<Clause3(std::uint64_t)> clause_oracle;          // input 3-CNF
  std::function<LocalOperator(std::uint64_t)> ham_oracle;       // constraint generator
  std::function<Eigen::Vector2cd(std::uint64_t)> psi_oracle;
  std::function<Eigen::Vector2cd(std::uint64_t)> phi_oracle;
};

struct SuccinctGsconInstance {
  SuccinctOracles oracles;
  double eta1, eta2, eta3, eta4, delta;
  int l = 1;
  int k = 5;
  std::uint64_t m = 0;
  int go0() const { return 1 << oracles.n_exp; }
  int go1() const { return (1 << oracles.n_exp) + 1; }
};

/// Oracle 3-CNF from an explicit formula (clause index wraps modulo the
/// clause count so the oracle is total on [0, 2^r_exp)).
SuccinctOracles succinct_oracles_from_cnf(const Cnf3& cnf, int n_exp, int r_exp);

/// Wraps the clause oracle into constraint (clause penalty) (x) P on the two
/// GO qubits, P = I - |00><00| - |11><11|; eta2 = 1/(16 m^2), m = 2^(n+1)+2.
SuccinctGsconInstance oracle3sat_to_succinct(const SuccinctOracles& oracles);

/// Four-step witness from a satisfying assignment, identity-padded to m.
WitnessSequence succinct_witness(const SuccinctGsconInstance& inst, const std::vector<bool>& z);

/// Explicit expansion over 2^n_exp + 2 qubits (guard n_exp <= 3).
GsconInstance expand_succinct(const SuccinctGsconInstance& inst);

/// Diagonal clause penalty |z><z| on the clause's distinct variables; empty
/// for tautological clauses.
std::optional<LocalOperator> clause_penalty(const Clause3& clause);

}  // namespace gscon
