#pragma once

#include <vector>

#include "gscon/linalg.hpp"
#include "gscon/state.hpp"

namespace gscon {

/// Span of mutually orthonormal state vectors.
struct Subspace {
  int n;
  std::vector<StateVector> basis;

  Subspace(int n_, std::vector<StateVector> basis_);
  static Subspace from_basis_indices(int n, const std::vector<std::uint64_t>& indices);
};

/// Two states are k-orthogonal when no unitary on at most k qubits creates
/// overlap between them. Decided through partial traces of |v><w| over every
/// qubit subset of size at most k.
bool k_orth_states(const StateVector& v, const StateVector& w, int k, double tol = 1e-9);

/// Equivalent characterization through products of reduced density matrices
/// on the complement register.
bool k_orth_density(const StateVector& v, const StateVector& w, int k, double tol = 1e-9);

bool k_orth_subspaces(const Subspace& s, const Subspace& t, int k, double tol = 1e-9);

/// Max |<w|U|v>| over sampled Haar k-local unitaries plus deterministic
/// probes (Pauli strings and the SVD witness of each partial outer product).
/// Serves as an independent oracle for the partial-trace characterization.
double k_orth_bruteforce(const StateVector& v, const StateVector& w, int k, int trials, std::uint64_t seed);

/// Largest achievable single-step overlap: max over subsets of the trace norm
/// of the partial outer product (the SVD witness attains it).
double max_klocal_overlap(const StateVector& v, const StateVector& w, int k);

/// All qubit subsets of [0,n) of size between min_size and max_size.
std::vector<std::vector<int>> qubit_subsets(int n, int min_size, int max_size);

}  // namespace gscon
