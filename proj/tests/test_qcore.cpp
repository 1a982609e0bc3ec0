#include <cmath>

#include "doctest.h"
#include "gscon/linalg.hpp"
#include "gscon/local_op.hpp"

using namespace gscon;

TEST_CASE("basis states and bit order") {
  StateVector s = StateVector::from_bits("100");
  CHECK(s.amps()[4] == Complex(1, 0));  // qubit 0 is the most significant bit
  CHECK(s.n() == 3);
  CHECK_THROWS(StateVector(2, Vector::Ones(4)));  // unnormalized
}

TEST_CASE("apply_local basics") {
  StateVector zeros = StateVector::from_bits("000");

  StateVector same = apply_local(zeros, LocalOperator::identity({1}));
  CHECK(same.distance(zeros) == doctest::Approx(0.0).epsilon(1e-12));

  StateVector flipped = apply_local(zeros, LocalOperator::pauli_x(0));
  CHECK(flipped.distance(StateVector::from_bits("100")) == doctest::Approx(0.0).epsilon(1e-12));

  StateVector plus = apply_local(StateVector::from_bits("0"), LocalOperator::hadamard(0));
  CHECK(plus.amps()[0].real() == doctest::Approx(1.0 / std::sqrt(2.0)));
  CHECK(plus.amps()[1].real() == doctest::Approx(1.0 / std::sqrt(2.0)));

  CHECK_THROWS(apply_local(zeros, LocalOperator::pauli_x(5)));
  Matrix bad(2, 2);
  bad << 1, 0, 0, 2;  // not unitary
  CHECK_THROWS(apply_local(zeros, LocalOperator({0}, bad)));
}

TEST_CASE("apply_local preserves norm on random unitaries") {
  Rng rng(7);
  for (int trial = 0; trial < 1000; ++trial) {
    int n = 2 + int(rng() % 3);
    StateVector s = haar_state(n, rng);
    int a = int(rng() % n), b = int((a + 1 + rng() % (n - 1)) % n);
    StateVector t = apply_local(s, LocalOperator({a, b}, haar_unitary(4, rng)));
    CHECK(std::abs(t.norm() - 1.0) <= 1e-12);
  }
}

TEST_CASE("energy examples") {
  Matrix p1 = Matrix::Zero(2, 2);
  p1(1, 1) = 1;
  LocalHamiltonian h(1, {LocalOperator({0}, p1)});
  CHECK(energy(h, StateVector::from_bits("0")) == doctest::Approx(0.0));
  CHECK(energy(h, StateVector::from_bits("1")) == doctest::Approx(1.0));

  // Single clause x1 v x2 v x3: the bad assignment 000 is penalized.
  Matrix m = Matrix::Zero(8, 8);
  m(0, 0) = 1;
  LocalHamiltonian clause(3, {LocalOperator({0, 1, 2}, m)});
  CHECK(energy(clause, StateVector::from_bits("000")) == doctest::Approx(1.0));
  CHECK(energy(clause, StateVector::from_bits("100")) == doctest::Approx(0.0));
}

TEST_CASE("partial_outer examples") {
  StateVector v00 = StateVector::from_bits("00");
  Matrix m = partial_outer(v00, v00, {0});
  CHECK(m(0, 0) == Complex(1, 0));
  CHECK(std::abs(m(1, 1)) == 0.0);

  StateVector v = StateVector::from_bits("000"), w = StateVector::from_bits("111");
  CHECK(partial_outer(v, w, {0, 1}).cwiseAbs().maxCoeff() == 0.0);

  Matrix ab = partial_outer(StateVector::from_bits("00"), StateVector::from_bits("10"), {0});
  CHECK(ab(0, 1) == Complex(1, 0));  // |0><1|
  CHECK(std::abs(ab(0, 0)) + std::abs(ab(1, 0)) + std::abs(ab(1, 1)) == 0.0);

  // Empty keep reduces to the plain inner product <w|v>.
  Matrix empty = partial_outer(v, v, {});
  CHECK(empty(0, 0) == Complex(1, 0));
}

TEST_CASE("matrix norms") {
  Matrix id = Matrix::Identity(2, 2);
  CHECK(trace_norm(id) == doctest::Approx(2.0));
  CHECK(spectral_norm(id) == doctest::Approx(1.0));
  CHECK(trace_norm(Matrix::Zero(3, 3)) == doctest::Approx(0.0));

  Matrix z(2, 2);
  z << 1, 0, 0, -1;
  CHECK(trace_norm(z) == doctest::Approx(2.0));
  CHECK(spectral_norm(z) == doctest::Approx(1.0));
  CHECK(max_entry_norm(z) == doctest::Approx(1.0));

  // Spectral norm is at most d times the max-entry norm.
  Rng rng(3);
  for (int t = 0; t < 200; ++t) {
    Matrix a(4, 4);
    std::normal_distribution<double> g;
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) a(i, j) = Complex(g(rng), g(rng));
    CHECK(spectral_norm(a) <= 4.0 * max_entry_norm(a) + 1e-12);
  }
}

TEST_CASE("trace-norm difference identity and bound (unit vectors)") {
  Rng rng(11);
  for (int t = 0; t < 1000; ++t) {
    int n = 1 + int(rng() % 3);
    StateVector v = haar_state(n, rng), w = haar_state(n, rng);
    Matrix diff = v.amps() * v.amps().adjoint() - w.amps() * w.amps().adjoint();
    double tn = trace_norm(diff);
    double ov = std::abs(v.inner(w));
    CHECK(tn == doctest::Approx(2.0 * std::sqrt(std::max(0.0, 1.0 - ov * ov))).epsilon(1e-9));
    CHECK(tn <= 2.0 * (v.amps() - w.amps()).norm() + 1e-9);
  }
}

TEST_CASE("frobenius outer-difference bound (unnormalized vectors)") {
  Rng rng(13);
  std::normal_distribution<double> g;
  for (int t = 0; t < 1000; ++t) {
    int d = 2 + int(rng() % 6);
    Vector v(d), w(d);
    for (int i = 0; i < d; ++i) {
      v[i] = Complex(g(rng), g(rng));
      w[i] = Complex(g(rng), g(rng));
    }
    double lhs = (v * v.adjoint() - w * w.adjoint()).norm();  // Frobenius
    CHECK(lhs <= (v.norm() + w.norm()) * (v - w).norm() + 1e-9);
  }
}

TEST_CASE("gentle measurement residual") {
  Matrix id = Matrix::Identity(2, 2);
  Matrix rho0 = Matrix::Zero(2, 2);
  rho0(0, 0) = 1;
  CHECK(gentle_measurement_residual(rho0, id) == doctest::Approx(0.0));
  CHECK(gentle_measurement_residual(rho0, rho0) == doctest::Approx(0.0));

  // rho = |+><+|, Lambda = |0><0|: residual sqrt(5)/2, within 2*sqrt(1/2).
  Matrix plus(2, 2);
  plus << 0.5, 0.5, 0.5, 0.5;
  double residual = gentle_measurement_residual(plus, rho0);
  CHECK(residual == doctest::Approx(std::sqrt(5.0) / 2.0).epsilon(1e-12));
  CHECK(residual <= 2.0 * std::sqrt(0.5) + 1e-12);

  Matrix bad = 2.0 * id;
  CHECK_THROWS(gentle_measurement_residual(plus, bad));
}

TEST_CASE("gentle measurement bound on random pairs") {
  Rng rng(17);
  for (int t = 0; t < 1000; ++t) {
    int d = 2 + int(rng() % 7);  // d <= 8
    Matrix rho = random_density(d, rng);
    Matrix lambda = random_measurement(d, rng);
    double eps = 1.0 - (lambda * rho).trace().real();
    double residual = gentle_measurement_residual(rho, lambda);
    CHECK(residual <= 2.0 * std::sqrt(std::max(0.0, eps)) + 1e-9);
  }
}

TEST_CASE("min_eigenvalue") {
  Matrix p1 = Matrix::Zero(2, 2);
  p1(1, 1) = 1;
  CHECK(min_eigenvalue(LocalHamiltonian(1, {LocalOperator({0}, p1)})) == doctest::Approx(0.0));
  CHECK(min_eigenvalue(LocalHamiltonian(2, {LocalOperator({0}, p1), LocalOperator({1}, p1)})) ==
        doctest::Approx(0.0));

  // (x) and (not x): both unit clauses on one variable, no satisfying value.
  Matrix p0 = Matrix::Zero(2, 2);
  p0(0, 0) = 1;
  LocalHamiltonian unsat(1, {LocalOperator({0}, p0), LocalOperator({0}, p1)});
  CHECK(min_eigenvalue(unsat) >= 1.0 - 1e-12);

  // Energy of any state dominates the smallest eigenvalue.
  Rng rng(23);
  for (int t = 0; t < 50; ++t) {
    Matrix h4 = haar_unitary(4, rng);
    Matrix herm = 0.5 * (h4 + h4.adjoint());
    herm /= std::max(1.0, spectral_norm(herm));
    LocalHamiltonian h(3, {LocalOperator({0, 2}, herm)});
    CHECK(energy(h, haar_state(3, rng)) >= min_eigenvalue(h) - 1e-8);
  }
}

TEST_CASE("hamiltonian invariants") {
  Matrix big = 2.0 * Matrix::Identity(2, 2);
  CHECK_THROWS(LocalHamiltonian(1, {LocalOperator({0}, big)}));  // norm > 1
  Matrix nonherm(2, 2);
  nonherm << 0, 1, 0, 0;
  CHECK_THROWS(LocalHamiltonian(1, {LocalOperator({0}, nonherm)}));
  CHECK_THROWS(LocalOperator({0, 0}, Matrix::Identity(4, 4)));  // duplicate qubit
}
