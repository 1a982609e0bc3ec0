#pragma once

#include <vector>

#include "gscon/state.hpp"

namespace gscon {

/// Operator on an ordered list of qubits. The first listed qubit is the most
/// significant bit of the local matrix index, matching ket-string order.
struct LocalOperator {
  std::vector<int> qubits;
  Matrix matrix;

  LocalOperator(std::vector<int> qs, Matrix m);

  int arity() const { return static_cast<int>(qubits.size()); }
  LocalOperator adjoint() const { return LocalOperator(qubits, matrix.adjoint()); }

  bool is_unitary(double tol = kTol.unitarity) const;
  bool is_hermitian(double tol = kTol.hermiticity) const;

  static LocalOperator identity(std::vector<int> qs);
  static LocalOperator pauli_x(int q);
  static LocalOperator pauli_y(int q);
  static LocalOperator pauli_z(int q);
  static LocalOperator hadamard(int q);
};

/// Hermitian projector (P^2 = P), validated at construction.
struct Projector {
  LocalOperator op;
  explicit Projector(LocalOperator o);
};

/// Sum of Hermitian terms, each of spectral norm at most 1.
class LocalHamiltonian {
 public:
  LocalHamiltonian(int n, std::vector<LocalOperator> terms);

  int n() const { return n_; }
  const std::vector<LocalOperator>& terms() const { return terms_; }
  int term_count() const { return static_cast<int>(terms_.size()); }
  int locality() const { return locality_; }
  bool is_diagonal(double tol = 1e-12) const;

 private:
  int n_;
  std::vector<LocalOperator> terms_;
  int locality_ = 0;
};

void check_qubits_in_range(const std::vector<int>& qubits, int n);

/// Applies a unitary local operator by bit-index gather/scatter; never
/// materializes the 2^n x 2^n matrix.
StateVector apply_local(const StateVector& state, const LocalOperator& op);

/// Same gather/scatter application without the unitarity requirement.
Vector apply_matrix(const Vector& amps, int n, const std::vector<int>& qubits, const Matrix& m);

/// <state| op |state> without materializing op |state>.
Complex expectation(const StateVector& state, const LocalOperator& op);

/// Sum of term expectations; the imaginary residue must stay below 1e-10.
double energy(const LocalHamiltonian& h, const StateVector& state);

/// Dense 2^n x 2^n embedding of the term sum. Guarded at n <= 14.
Matrix embed_dense(const LocalHamiltonian& h);
Matrix embed_term(int n, const LocalOperator& op);

/// Smallest eigenvalue of the embedded sum (dense solve, n <= 14).
double min_eigenvalue(const LocalHamiltonian& h);

}  // namespace gscon
