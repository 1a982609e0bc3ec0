#include "doctest.h"
#include "gscon/korth.hpp"
#include "gscon/local_op.hpp"

using namespace gscon;

namespace {

std::vector<Matrix> random_local_frame(int n, Rng& rng) {
  std::vector<Matrix> frame;
  for (int q = 0; q < n; ++q) frame.push_back(haar_unitary(2, rng));
  return frame;
}

// k-orthogonality is invariant under the same product unitary on both states.
StateVector rotate_with(const StateVector& s, const std::vector<Matrix>& frame) {
  StateVector out = s;
  for (int q = 0; q < s.n(); ++q) out = apply_local(out, LocalOperator({q}, frame[q]));
  return out;
}

Vector kron_vec(const Vector& a, const Vector& b) {
  Vector out(a.size() * b.size());
  for (Eigen::Index i = 0; i < a.size(); ++i)
    for (Eigen::Index j = 0; j < b.size(); ++j) out[i * b.size() + j] = a[i] * b[j];
  return out;
}

}  // namespace

TEST_CASE("k-orthogonality of basis pairs") {
  StateVector v = StateVector::from_bits("000"), w = StateVector::from_bits("111");
  CHECK(k_orth_states(v, w, 2));
  CHECK_FALSE(k_orth_states(v, w, 3));  // X(x)X(x)X maps one to the other
  CHECK_FALSE(k_orth_states(v, StateVector::from_bits("100"), 1));
  CHECK_THROWS(k_orth_states(v, w, 0));
  CHECK_THROWS(k_orth_states(v, w, 4));
}

TEST_CASE("density characterization agrees on the named cases") {
  StateVector v = StateVector::from_bits("000"), w = StateVector::from_bits("111");
  CHECK(k_orth_density(v, w, 2));

  Vector bell(4);
  bell << 1.0 / std::sqrt(2.0), 0, 0, 1.0 / std::sqrt(2.0);
  StateVector ghz2(2, bell);
  CHECK_FALSE(k_orth_density(StateVector::from_bits("00"), ghz2, 1));

  CHECK_FALSE(k_orth_density(v, v, 1));  // identity is k-local
  CHECK_FALSE(k_orth_states(v, v, 1));
}

TEST_CASE("characterizations agree on random pairs") {
  Rng rng(51);
  int checked = 0;
  for (int t = 0; t < 500; ++t) {
    int n = 2 + int(rng() % 3);  // n <= 4
    int k = 1 + int(rng() % 2);
    StateVector v = haar_state(n, rng), w = haar_state(n, rng);
    switch (t % 4) {
      case 0:
        break;  // generic pair
      case 1: {  // locally rotated k-orthogonal pair
        auto frame = random_local_frame(n, rng);
        v = rotate_with(StateVector::basis(n, 0), frame);
        w = rotate_with(StateVector::basis(n, (std::uint64_t(1) << n) - 1), frame);
        k = n - 1;
        break;
      }
      case 2: {  // orthogonal but not k-orthogonal
        v = StateVector::basis(n, 0);
        w = apply_local(v, LocalOperator::pauli_x(int(rng() % n)));
        break;
      }
      default: {  // identical product states
        v = rotate_with(StateVector::basis(n, 0), random_local_frame(n, rng));
        w = v;
        break;
      }
    }
    CHECK(k_orth_states(v, w, k) == k_orth_density(v, w, k));
    ++checked;
  }
  CHECK(checked == 500);
}

TEST_CASE("subspace k-orthogonality") {
  // Spans of |x>|000> and |x>|111> over 1+3 qubits are 2-orthogonal.
  Subspace s = Subspace::from_basis_indices(4, {0b0000, 0b1000});
  Subspace t = Subspace::from_basis_indices(4, {0b0111, 0b1111});
  CHECK(k_orth_subspaces(s, t, 2));

  Subspace self = Subspace::from_basis_indices(2, {0b00});
  CHECK_FALSE(k_orth_subspaces(self, self, 1));

  CHECK_THROWS(Subspace::from_basis_indices(2, {0, 0}));  // repeated basis vector
}

TEST_CASE("bruteforce oracle is consistent with the characterization") {
  Rng rng(53);
  StateVector v = StateVector::from_bits("000"), w = StateVector::from_bits("111");
  CHECK(k_orth_bruteforce(v, w, 2, 1000, 99) <= 1e-10);

  // X on qubit 0 reaches overlap 1.
  CHECK(k_orth_bruteforce(v, StateVector::from_bits("100"), 1, 100, 99) >= 0.9);

  // A global (k = n) unitary connects any two states.
  StateVector a = haar_state(2, rng), b = haar_state(2, rng);
  CHECK(k_orth_bruteforce(a, b, 2, 50, 99) >= 0.99);
}

TEST_CASE("monotonicity and tensor extension") {
  Rng rng(59);
  for (int t = 0; t < 40; ++t) {
    auto frame = random_local_frame(3, rng);
    StateVector v = rotate_with(StateVector::from_bits("000"), frame);
    StateVector w = rotate_with(StateVector::from_bits("111"), frame);
    CHECK(k_orth_states(v, w, 2));
    CHECK(k_orth_states(v, w, 1));  // k-orthogonal implies (k-1)-orthogonal
    CHECK(std::abs(v.inner(w)) <= 1e-10);

    // Tensor extensions stay k-orthogonal.
    StateVector ext_v(4, kron_vec(v.amps(), haar_state(1, rng).amps()));
    StateVector ext_w(4, kron_vec(w.amps(), haar_state(1, rng).amps()));
    CHECK(k_orth_states(ext_v, ext_w, 2));
  }
}

TEST_CASE("max_klocal_overlap matches the bruteforce probes") {
  Rng rng(61);
  for (int t = 0; t < 30; ++t) {
    int n = 2 + int(rng() % 2);
    StateVector v = haar_state(n, rng), w = haar_state(n, rng);
    double analytic = max_klocal_overlap(v, w, 1);
    double sampled = k_orth_bruteforce(v, w, 1, 300, 7);
    CHECK(sampled <= analytic + 1e-9);          // probes cannot beat the trace norm
    CHECK(sampled >= analytic - 1e-9);          // the SVD probe attains it
  }
}
