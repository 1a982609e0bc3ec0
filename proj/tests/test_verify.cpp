#include "doctest.h"
#include "gscon/instance.hpp"
#include "gscon/linalg.hpp"

using namespace gscon;

namespace {

GsconInstance one_qubit_flip(double eta2, double eta4, std::uint64_t m) {
  LocalHamiltonian zero(1, {LocalOperator({0}, Matrix::Zero(2, 2))});
  return GsconInstance(std::move(zero), 1, 0.0, eta2, 0.0, eta4, std::min(eta2, eta4), 1, m,
                       StateVector::from_bits("0"), StateVector::from_bits("1"));
}

}  // namespace

TEST_CASE("instance invariants") {
  Matrix p1 = Matrix::Zero(2, 2);
  p1(1, 1) = 1;
  LocalHamiltonian h(1, {LocalOperator({0}, p1)});

  // Gap below Delta.
  CHECK_THROWS(GsconInstance(h, 1, 0.0, 0.1, 0.0, 0.25, 0.2, 1, 1, StateVector::from_bits("0"),
                             StateVector::from_bits("0")));
  // psi energy above eta1.
  CHECK_THROWS(GsconInstance(h, 1, 0.0, 0.5, 0.0, 0.5, 0.1, 1, 1, StateVector::from_bits("1"),
                             StateVector::from_bits("0")));
  // k below the measured locality.
  LocalHamiltonian h2(2, {LocalOperator({0, 1}, Matrix::Identity(4, 4) * 0.5)});
  CHECK_THROWS(GsconInstance(h2, 1, 1.0, 1.5, 0.0, 0.5, 0.1, 1, 1, StateVector::from_bits("00"),
                             StateVector::from_bits("00")));
}

TEST_CASE("verify on the identity sequence") {
  Matrix p1 = Matrix::Zero(2, 2);
  p1(1, 1) = 1;
  LocalHamiltonian h(1, {LocalOperator({0}, p1)});
  GsconInstance inst(h, 1, 0.0, 0.5, 0.0, 0.5, 0.25, 1, 2, StateVector::from_bits("0"),
                     StateVector::from_bits("0"));
  WitnessSequence w;
  w.ops.push_back(LocalOperator::identity({0}));
  CHECK(verify_witness(inst, w).verdict == Verdict::YesValid);

  // Empty witness works the same way (full identity padding).
  CHECK(verify_witness(inst, WitnessSequence{}).verdict == Verdict::YesValid);
}

TEST_CASE("verify enforces locality and length") {
  GsconInstance inst = one_qubit_flip(0.5, 0.5, 1);
  WitnessSequence too_long;
  too_long.ops.push_back(LocalOperator::pauli_x(0));
  too_long.ops.push_back(LocalOperator::pauli_x(0));
  CHECK_THROWS(verify_witness(inst, too_long));

  GsconInstance inst2 = one_qubit_flip(0.5, 0.5, 3);
  CHECK_NOTHROW(verify_witness(inst2, WitnessSequence{{LocalOperator::pauli_x(0)}}));

  // 2-local op against l = 1.
  WitnessSequence wide;
  wide.ops.push_back(LocalOperator::identity({0, 1}));
  CHECK_THROWS(verify_witness(inst2, wide));
}

TEST_CASE("verdicts cover the promise gap") {
  // eta3 = 0, eta4 = 1/4: final state at distance ~0.1 is inside the gap.
  GsconInstance inst = one_qubit_flip(0.5, 0.25, 1);
  double theta = std::acos(0.995);  // small rotation away from |1>
  Matrix rot(2, 2);
  rot << std::cos(theta), -std::sin(theta), std::sin(theta), std::cos(theta);
  Matrix x(2, 2);
  x << 0, 1, 1, 0;
  WitnessSequence w;
  w.ops.push_back(LocalOperator({0}, x * rot));
  VerifyReport rep = verify_witness(inst, w);
  CHECK(rep.verdict == Verdict::Indeterminate);
  CHECK(rep.final_distance > 0.0);
  CHECK(rep.final_distance < 0.25);

  // The identity sequence is far from |1>: distance sqrt(2) >= eta4.
  VerifyReport far = verify_witness(inst, WitnessSequence{});
  CHECK(far.verdict == Verdict::NoEvidence);
  CHECK_FALSE(far.first_violation.has_value());
}

TEST_CASE("exact flip accepts") {
  GsconInstance inst = one_qubit_flip(0.5, 0.25, 1);
  WitnessSequence w;
  w.ops.push_back(LocalOperator::pauli_x(0));
  CHECK(verify_witness(inst, w).verdict == Verdict::YesValid);
  CHECK(verdict_exit_code(Verdict::YesValid) == 0);
  CHECK(verdict_exit_code(Verdict::NoEvidence) == 2);
  CHECK(verdict_exit_code(Verdict::Indeterminate) == 3);
}
