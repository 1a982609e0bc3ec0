#include "gscon/state.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace gscon {

StateVector::StateVector(int n, Vector amps) : n_(n), amps_(std::move(amps)) {
  if (n < 1 || n > 30) throw std::invalid_argument("StateVector: qubit count out of range");
  if (amps_.size() != (std::int64_t(1) << n))
    throw std::invalid_argument("StateVector: amplitude vector has wrong length");
  double nrm = amps_.norm();
  if (std::abs(nrm - 1.0) > kTol.state_norm)
    throw std::invalid_argument("StateVector: not normalized, ||amps|| = " + std::to_string(nrm));
}

StateVector StateVector::basis(int n, std::uint64_t index) {
  if (n < 1 || index >= (std::uint64_t(1) << n))
    throw std::invalid_argument("StateVector::basis: index out of range");
  Vector v = Vector::Zero(std::int64_t(1) << n);
  v[static_cast<std::int64_t>(index)] = 1.0;
  return StateVector(n, std::move(v));
}

StateVector StateVector::from_bits(std::string_view bits) {
  if (bits.empty()) throw std::invalid_argument("StateVector::from_bits: empty string");
  std::uint64_t index = 0;
  for (char c : bits) {
    if (c != '0' && c != '1') throw std::invalid_argument("StateVector::from_bits: bad character");
    index = (index << 1) | std::uint64_t(c == '1');
  }
  return basis(static_cast<int>(bits.size()), index);
}

Complex StateVector::inner(const StateVector& other) const {
  if (other.n_ != n_) throw std::invalid_argument("StateVector::inner: dimension mismatch");
  return amps_.dot(other.amps_);  // Eigen's dot conjugates the left argument
}

double StateVector::distance(const StateVector& other) const {
  if (other.n_ != n_) throw std::invalid_argument("StateVector::distance: dimension mismatch");
  return (amps_ - other.amps_).norm();
}

}  // namespace gscon
