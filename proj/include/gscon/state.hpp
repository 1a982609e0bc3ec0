#pragma once

#include <Eigen/Dense>
#include <complex>
#include <cstdint>
#include <string_view>

#include "gscon/tolerances.hpp"

namespace gscon {

using Complex = std::complex<double>;
using Vector = Eigen::VectorXcd;
using Matrix = Eigen::MatrixXcd;

/// Normalized amplitude vector over n qubits. Qubit 0 is the most significant
/// bit of the amplitude index, so basis("100") is the state with qubit 0 set.
class StateVector {
 public:
  StateVector(int n, Vector amps);

  static StateVector basis(int n, std::uint64_t index);
  static StateVector from_bits(std::string_view bits);

  int n() const { return n_; }
  std::int64_t dim() const { return std::int64_t(1) << n_; }
  const Vector& amps() const { return amps_; }

  Complex inner(const StateVector& other) const;  // <this|other>
  double distance(const StateVector& other) const;
  double norm() const { return amps_.norm(); }

 private:
  int n_;
  Vector amps_;
};

/// Index of qubit q inside an n-qubit amplitude index.
inline int qubit_bit(int n, int q) { return n - 1 - q; }

}  // namespace gscon
