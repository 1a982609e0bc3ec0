#include "gscon/instance.hpp"

#include <stdexcept>

namespace gscon {

GsconInstance::GsconInstance(LocalHamiltonian h, int k_, double e1, double e2, double e3, double e4,
                             double d, int l_, std::uint64_t m_, StateVector psi_, StateVector phi_)
    : ham(std::move(h)),
      k(k_),
      eta1(e1),
      eta2(e2),
      eta3(e3),
      eta4(e4),
      delta(d),
      l(l_),
      m(m_),
      psi(std::move(psi_)),
      phi(std::move(phi_)) {
  if (psi.n() != ham.n() || phi.n() != ham.n())
    throw std::invalid_argument("GsconInstance: state dimension mismatch");
  if (l < 1) throw std::invalid_argument("GsconInstance: l must be >= 1");
  if (k < ham.locality()) throw std::invalid_argument("GsconInstance: k below measured term locality");
  if (eta2 - eta1 < delta - 1e-15 || eta4 - eta3 < delta - 1e-15)
    throw std::invalid_argument("GsconInstance: threshold gaps below Delta");
  if (energy(ham, psi) > eta1 + 1e-10 || energy(ham, phi) > eta1 + 1e-10)
    throw std::invalid_argument("GsconInstance: psi/phi energy above eta1");
}

void WitnessSequence::validate(int n, int l, std::uint64_t m) const {
  if (ops.size() > m) throw std::invalid_argument("WitnessSequence: longer than m");
  for (const auto& op : ops) {
    check_qubits_in_range(op.qubits, n);
    if (op.arity() > l) throw std::invalid_argument("WitnessSequence: operator locality exceeds l");
    if (!op.is_unitary()) throw std::invalid_argument("WitnessSequence: operator not unitary");
  }
}

VerifyReport verify_witness(const GsconInstance& inst, const WitnessSequence& w) {
  w.validate(inst.n(), inst.l, inst.m);
  VerifyReport rep;
  StateVector cur = inst.psi;
  bool energy_ok = true, energy_violation = false;
  for (std::size_t i = 0; i < w.ops.size(); ++i) {
    cur = apply_local(cur, w.ops[i]);
    double e = energy(inst.ham, cur);
    rep.per_step_energies.push_back(e);
    if (e > inst.eta1) energy_ok = false;
    if (e >= inst.eta2 && !energy_violation) {
      energy_violation = true;
      rep.first_violation = static_cast<int>(i);
    }
  }
  rep.final_distance = cur.distance(inst.phi);

  bool yes = energy_ok && rep.final_distance <= inst.eta3;
  bool no = energy_violation || rep.final_distance >= inst.eta4;
  if (yes)
    rep.verdict = Verdict::YesValid;  // gaps make yes/no mutually exclusive
  else if (no)
    rep.verdict = Verdict::NoEvidence;
  else
    rep.verdict = Verdict::Indeterminate;
  return rep;
}

const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::YesValid:
      return "yes";
    case Verdict::NoEvidence:
      return "no";
    default:
      return "indeterminate";
  }
}

int verdict_exit_code(Verdict v) {
  switch (v) {
    case Verdict::YesValid:
      return 0;
    case Verdict::NoEvidence:
      return 2;
    default:
      return 3;
  }
}

}  // namespace gscon
