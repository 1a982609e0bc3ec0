#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gscon/local_op.hpp"

namespace gscon {

/// Full traversal-problem tuple: Hamiltonian, energy/distance thresholds with
/// their gap Delta, unitary locality l, sequence length m, and the explicit
/// start/target states.
struct GsconInstance {
  LocalHamiltonian ham;
  int k;  // Hamiltonian locality
  double eta1, eta2, eta3, eta4, delta;
  int l;
  std::uint64_t m;
  StateVector psi;
  StateVector phi;

  GsconInstance(LocalHamiltonian h, int k_, double e1, double e2, double e3, double e4, double d,
                int l_, std::uint64_t m_, StateVector psi_, StateVector phi_);

  int n() const { return ham.n(); }
  int term_count() const { return ham.term_count(); }
};

/// Sequence of l-local unitaries; shorter than m means identity padding.
struct WitnessSequence {
  std::vector<LocalOperator> ops;

  void validate(int n, int l, std::uint64_t m) const;
};

enum class Verdict { YesValid, NoEvidence, Indeterminate };

struct VerifyReport {
  Verdict verdict = Verdict::Indeterminate;
  std::vector<double> per_step_energies;
  double final_distance = 0.0;
  std::optional<int> first_violation;  // first step with energy >= eta2
};

/// Exact intermediate-energy and final-distance checks: YesValid when every
/// energy stays at or below eta1 and the final distance is at most eta3;
/// NoEvidence when some energy reaches eta2 or the distance reaches eta4;
/// Indeterminate inside the promise gap.
VerifyReport verify_witness(const GsconInstance& inst, const WitnessSequence& w);

const char* verdict_name(Verdict v);
int verdict_exit_code(Verdict v);  // 0 yes / 2 no / 3 indeterminate

}  // namespace gscon
