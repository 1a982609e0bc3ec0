#pragma once

#include <utility>
#include <vector>

#include "gscon/local_op.hpp"

namespace gscon {

/// Outcome of running a unitary sequence against the traversal bound
/// ((1-2*eps)/(2m))^2 on the worst-step overlap with P = I - Pi_S - Pi_T.
struct TraversalReport {
  int m = 0;
  double eps = 0.0;                 // ||w - U_m...U_1 v||_2
  std::vector<double> overlaps;     // <v_i|P|v_i> per step
  double max_overlap = 0.0;
  double bound = 0.0;               // ((1-2*eps)/(2m))^2
  bool lemma_applicable = false;    // eps < 1/2, m >= 1, subspaces k-orthogonal
  bool bound_satisfied = false;
};

/// Parameters of the staircase sequence |000> -> |111> with per-step overlap
/// at most Delta. beta is the per-iteration transfer amplitude, zeta the
/// cutoff offset; iteration stops once gamma1^2 <= 1/2 + zeta.
struct StaircaseParams {
  double delta;
  double beta;    // sqrt(delta)
  double zeta;    // 2*delta / (1 + 2*delta)
  double cutoff;  // 1/2 + zeta

  explicit StaircaseParams(double d);
};

/// Evolves v through the sequence and records overlaps with I - Pi_S - Pi_T.
/// `korth_verified` is the caller's statement that span(Pi_S) and span(Pi_T)
/// were checked k-orthogonal for the sequence's locality.
TraversalReport traversal_report(const StateVector& v, const StateVector& w,
                                 const std::vector<LocalOperator>& seq, const Projector& pi_s,
                                 const Projector& pi_t, bool korth_verified = true);

/// Deterministic unitary completion: maps each source vector to the given
/// basis vector, extends by Gram-Schmidt against the canonical basis in index
/// order, and assigns leftover targets in ascending index order.
Matrix complete_unitary(int dim, const std::vector<std::pair<Vector, int>>& action);

/// One amplitude-transfer iteration: U1 on qubits {0,1}, U2 on qubits {1,2},
/// and the updated amplitude f(gamma1) = sqrt((1-2*Delta)*gamma1^2 + Delta).
struct Step1Pair {
  LocalOperator u1;
  LocalOperator u2;
  double gamma1_next;
};
Step1Pair step1_pair(double gamma1, const StaircaseParams& params);

/// Amplitude update applied by one step-1 iteration.
double step1_f(double gamma1, const StaircaseParams& params);

/// Closing move: three unitaries (on {0,1}, {1,2}, {0,1}) taking
/// gamma1|000> + gamma2|111> to the equal superposition exactly. Requires
/// 1/2 < gamma1^2 <= 1/2 + 2*Delta/(1+2*Delta).
std::vector<LocalOperator> step2_finisher(double gamma1, const StaircaseParams& params);

/// Solves the step-2 amplitude equation for beta; the closed form is
/// beta^2 = (2*gamma1^2 - 1) / (3 - 2*gamma1^2).
double step2_beta(double gamma1);

/// |000> -> (|000>+|111>)/sqrt(2), overlap with P at most Delta throughout.
std::vector<LocalOperator> staircase_half(const StaircaseParams& params);

/// |000> -> |111>: the half staircase followed by its X^{x3}-conjugated
/// inverse in reverse order.
std::vector<LocalOperator> staircase_full(const StaircaseParams& params);

}  // namespace gscon
