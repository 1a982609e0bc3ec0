#include "gscon/local_op.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace gscon {

namespace {

// Enumerates full indices for a qubit subset: `local` selects the subset bits
// (first listed qubit most significant), `rest` fills the complement.
struct IndexMap {
  int n;
  std::vector<int> sub_bits;   // bit position of each listed qubit
  std::vector<int> rest_bits;  // remaining bit positions, descending

  IndexMap(int n_, const std::vector<int>& qubits) : n(n_) {
    std::vector<bool> used(n, false);
    for (int q : qubits) {
      sub_bits.push_back(qubit_bit(n, q));
      used[qubit_bit(n, q)] = true;
    }
    for (int b = n - 1; b >= 0; --b)
      if (!used[b]) rest_bits.push_back(b);
  }

  std::int64_t index(std::int64_t local, std::int64_t rest) const {
    std::int64_t idx = 0;
    int j = static_cast<int>(sub_bits.size());
    for (int t = 0; t < j; ++t)
      idx |= ((local >> (j - 1 - t)) & 1) << sub_bits[t];
    int r = static_cast<int>(rest_bits.size());
    for (int t = 0; t < r; ++t)
      idx |= ((rest >> (r - 1 - t)) & 1) << rest_bits[t];
    return idx;
  }
};

}  // namespace

void check_qubits_in_range(const std::vector<int>& qubits, int n) {
  std::set<int> seen;
  for (int q : qubits) {
    if (q < 0 || q >= n) throw std::invalid_argument("qubit index out of range");
    if (!seen.insert(q).second) throw std::invalid_argument("duplicate qubit index");
  }
}

LocalOperator::LocalOperator(std::vector<int> qs, Matrix m) : qubits(std::move(qs)), matrix(std::move(m)) {
  std::set<int> seen;
  for (int q : qubits) {
    if (q < 0) throw std::invalid_argument("LocalOperator: negative qubit index");
    if (!seen.insert(q).second) throw std::invalid_argument("LocalOperator: duplicate qubit index");
  }
  auto d = std::int64_t(1) << qubits.size();
  if (matrix.rows() != d || matrix.cols() != d)
    throw std::invalid_argument("LocalOperator: matrix size does not match qubit count");
}

bool LocalOperator::is_unitary(double tol) const {
  Matrix g = matrix * matrix.adjoint() - Matrix::Identity(matrix.rows(), matrix.cols());
  return g.cwiseAbs().maxCoeff() <= tol;
}

bool LocalOperator::is_hermitian(double tol) const {
  Matrix g = matrix - matrix.adjoint();
  return g.cwiseAbs().maxCoeff() <= tol;
}

LocalOperator LocalOperator::identity(std::vector<int> qs) {
  auto d = std::int64_t(1) << qs.size();
  return LocalOperator(std::move(qs), Matrix::Identity(d, d));
}

LocalOperator LocalOperator::pauli_x(int q) {
  Matrix m(2, 2);
  m << 0, 1, 1, 0;
  return LocalOperator({q}, m);
}

LocalOperator LocalOperator::pauli_y(int q) {
  Matrix m(2, 2);
  m << 0, Complex(0, -1), Complex(0, 1), 0;
  return LocalOperator({q}, m);
}

LocalOperator LocalOperator::pauli_z(int q) {
  Matrix m(2, 2);
  m << 1, 0, 0, -1;
  return LocalOperator({q}, m);
}

LocalOperator LocalOperator::hadamard(int q) {
  const double s = 1.0 / std::sqrt(2.0);
  Matrix m(2, 2);
  m << s, s, s, -s;
  return LocalOperator({q}, m);
}

Projector::Projector(LocalOperator o) : op(std::move(o)) {
  if (!op.is_hermitian(kTol.hermiticity * 100)) throw std::invalid_argument("Projector: not Hermitian");
  Matrix g = op.matrix * op.matrix - op.matrix;
  if (g.cwiseAbs().maxCoeff() > kTol.idempotent) throw std::invalid_argument("Projector: not idempotent");
}

LocalHamiltonian::LocalHamiltonian(int n, std::vector<LocalOperator> terms) : n_(n), terms_(std::move(terms)) {
  if (n < 1) throw std::invalid_argument("LocalHamiltonian: bad qubit count");
  for (const auto& t : terms_) {
    check_qubits_in_range(t.qubits, n);
    if (!t.is_hermitian()) throw std::invalid_argument("LocalHamiltonian: term not Hermitian");
    Eigen::JacobiSVD<Matrix> svd(t.matrix);
    if (svd.singularValues()(0) > 1.0 + 1e-10)
      throw std::invalid_argument("LocalHamiltonian: term spectral norm exceeds 1");
    locality_ = std::max(locality_, t.arity());
  }
}

bool LocalHamiltonian::is_diagonal(double tol) const {
  for (const auto& t : terms_) {
    Matrix off = t.matrix;
    off.diagonal().setZero();
    if (off.cwiseAbs().maxCoeff() > tol) return false;
  }
  return true;
}

Vector apply_matrix(const Vector& amps, int n, const std::vector<int>& qubits, const Matrix& m) {
  IndexMap map(n, qubits);
  auto d = std::int64_t(1) << qubits.size();
  auto rest_count = std::int64_t(1) << (n - qubits.size());
  Vector out = amps;
  Vector block(d), res(d);
  for (std::int64_t rest = 0; rest < rest_count; ++rest) {
    for (std::int64_t a = 0; a < d; ++a) block[a] = amps[map.index(a, rest)];
    res.noalias() = m * block;
    for (std::int64_t a = 0; a < d; ++a) out[map.index(a, rest)] = res[a];
  }
  return out;
}

StateVector apply_local(const StateVector& state, const LocalOperator& op) {
  check_qubits_in_range(op.qubits, state.n());
  if (!op.is_unitary()) throw std::invalid_argument("apply_local: operator is not unitary");
  return StateVector(state.n(), apply_matrix(state.amps(), state.n(), op.qubits, op.matrix));
}

Complex expectation(const StateVector& state, const LocalOperator& op) {
  check_qubits_in_range(op.qubits, state.n());
  IndexMap map(state.n(), op.qubits);
  auto d = std::int64_t(1) << op.qubits.size();
  auto rest_count = std::int64_t(1) << (state.n() - op.qubits.size());
  const Vector& amps = state.amps();
  Complex acc = 0;
  Vector block(d);
  for (std::int64_t rest = 0; rest < rest_count; ++rest) {
    for (std::int64_t a = 0; a < d; ++a) block[a] = amps[map.index(a, rest)];
    acc += block.dot(op.matrix * block);
  }
  return acc;
}

double energy(const LocalHamiltonian& h, const StateVector& state) {
  if (h.n() != state.n()) throw std::invalid_argument("energy: dimension mismatch");
  Complex total = 0;
  for (const auto& t : h.terms()) total += expectation(state, t);
  if (std::abs(total.imag()) > 1e-10)
    throw std::runtime_error("energy: imaginary residue above tolerance");
  return total.real();
}

Matrix embed_term(int n, const LocalOperator& op) {
  check_qubits_in_range(op.qubits, n);
  if (n > 14) throw std::invalid_argument("embed_term: n exceeds dense guard (14)");
  IndexMap map(n, op.qubits);
  auto dim = std::int64_t(1) << n;
  auto d = std::int64_t(1) << op.qubits.size();
  auto rest_count = std::int64_t(1) << (n - op.qubits.size());
  Matrix out = Matrix::Zero(dim, dim);
  for (std::int64_t rest = 0; rest < rest_count; ++rest)
    for (std::int64_t a = 0; a < d; ++a)
      for (std::int64_t b = 0; b < d; ++b)
        out(map.index(a, rest), map.index(b, rest)) += op.matrix(a, b);
  return out;
}

Matrix embed_dense(const LocalHamiltonian& h) {
  if (h.n() > 14) throw std::invalid_argument("embed_dense: n exceeds dense guard (14)");
  auto dim = std::int64_t(1) << h.n();
  Matrix out = Matrix::Zero(dim, dim);
  for (const auto& t : h.terms()) out += embed_term(h.n(), t);
  return out;
}

double min_eigenvalue(const LocalHamiltonian& h) {
  if (h.n() > 14) throw std::invalid_argument("min_eigenvalue: n exceeds dense guard (14)");
  if (h.terms().empty()) return 0.0;
  if (h.is_diagonal()) {
    // Diagonal sums are cheap termwise; avoids the dense eigensolve.
    auto dim = std::int64_t(1) << h.n();
    Eigen::VectorXd diag = Eigen::VectorXd::Zero(dim);
    for (const auto& t : h.terms()) {
      IndexMap map(h.n(), t.qubits);
      auto d = std::int64_t(1) << t.qubits.size();
      auto rest_count = std::int64_t(1) << (h.n() - t.qubits.size());
      for (std::int64_t rest = 0; rest < rest_count; ++rest)
        for (std::int64_t a = 0; a < d; ++a)
          diag[map.index(a, rest)] += t.matrix(a, a).real();
    }
    return diag.minCoeff();
  }
  Eigen::SelfAdjointEigenSolver<Matrix> solver(embed_dense(h), Eigen::EigenvaluesOnly);
  return solver.eigenvalues().minCoeff();
}

}  // namespace gscon
