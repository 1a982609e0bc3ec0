#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "gscon/state.hpp"

namespace gscon {

double trace_norm(const Matrix& m);     // Schatten-1
double spectral_norm(const Matrix& m);  // largest singular value
double max_entry_norm(const Matrix& m);

/// tr over the complement of `keep` of |v><w|, a 2^|keep| square matrix.
/// keep may be empty; the 1x1 result is then <w|v>.
Matrix partial_outer(const StateVector& v, const StateVector& w, const std::vector<int>& keep);

/// Reduced density matrix of v on `keep` (traces out the complement).
Matrix reduced_density(const StateVector& v, const std::vector<int>& keep);

/// ||rho - sqrt(Lambda) rho sqrt(Lambda)||_tr for a density matrix rho and a
/// measurement operator 0 <= Lambda <= I.
double gentle_measurement_residual(const Matrix& rho, const Matrix& lambda);

/// Hermitian square root / inverse square root via eigendecomposition.
Matrix herm_sqrt(const Matrix& a);
Matrix herm_inv_sqrt(const Matrix& a);

using Rng = std::mt19937_64;

/// Haar-distributed unitary (QR of a Ginibre matrix with phase fixing).
Matrix haar_unitary(int dim, Rng& rng);

/// Haar-random pure state on n qubits.
StateVector haar_state(int n, Rng& rng);

/// Random density matrix (normalized Ginibre GG^dag).
Matrix random_density(int dim, Rng& rng);

/// Random measurement operator with eigenvalues in [0, 1].
Matrix random_measurement(int dim, Rng& rng);

}  // namespace gscon
