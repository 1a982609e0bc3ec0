#pragma once

#include <array>
#include <cstdint>

#include "gscon/state.hpp"

namespace gscon {

/// Grid coordinates (x, phi1, phi2, phi3) of a single-qubit net element.
struct NetIndex {
  std::array<std::int64_t, 4> coords{0, 0, 0, 0};
  bool operator==(const NetIndex&) const = default;
};

/// Discretization of 2x2 unitaries through the magnitude/phase parametrization
///   [ sqrt(x) e^{i phi1}      sqrt(1-x) e^{i phi2} ]
///   [ sqrt(1-x) e^{i phi3}    sqrt(x) e^{i phi4}   ],  phi4 = -phi1+phi2+phi3+pi.
/// Grid pitch delta = eps^2/64 guarantees spectral distance <= eps after
/// snapping. Elements are computed from indices; the net is never materialized.
class SingleQubitNet {
 public:
  explicit SingleQubitNet(double eps);

  double eps() const { return eps_; }
  double delta() const { return delta_; }
  std::int64_t x_size() const { return x_size_; }      // grid points in [0,1], endpoint included
  std::int64_t phi_size() const { return phi_size_; }  // grid points in [0,2pi), wrap-around
  /// Realized phase pitch 2pi/phi_size <= delta, so wrap-around stays on-grid.
  double phi_pitch() const { return phi_pitch_; }
  double log_cardinality() const;  // log10 of x_size * phi_size^3

  Matrix element(const NetIndex& idx) const;
  NetIndex snap(const Matrix& u) const;
  Matrix round_to_net(const Matrix& u) const { return element(snap(u)); }

  /// Parameter extraction without snapping; element_from_params of the result
  /// reproduces u exactly for unitary u (phases of zero entries resolved
  /// deterministically).
  std::array<double, 4> extract_params(const Matrix& u) const;
  static Matrix element_from_params(double x, double phi1, double phi2, double phi3);

 private:
  double eps_;
  double delta_;
  double phi_pitch_;
  std::int64_t x_size_;
  std::int64_t phi_size_;
  bool x_endpoint_appended_;
};

/// Entry-wise unit-disk grid over d x d matrices with explicit check (C) and
/// round (R) procedures. Contains non-unitary matrices by construction.
class PseudoNet {
 public:
  PseudoNet(int d, double eps);

  int d() const { return d_; }
  double eps() const { return eps_; }
  double delta_prime() const { return delta_prime_; }  // eps / (6 d (d+eps))
  double delta() const { return delta_; }              // delta_prime / sqrt(d)
  double check_threshold() const { return threshold_; }  // eps / (2 (d+eps))
  std::int64_t disk_grid_size() const;                   // per-entry grid cardinality
  double log_cardinality() const;                        // log10 of grid_size^(d^2)

  /// Accepts iff ||B - I|| <= eps/(2(d+eps)) for B = sum of column outer products.
  bool check(const Matrix& m) const;

  /// Maps an accepted element to the unitary with columns B^{-1/2} u_i.
  Matrix round(const Matrix& m) const;

  /// Entry-wise snap of a unitary to the disk grid; the result is accepted by
  /// check() and lies within eps of the input.
  Matrix snap(const Matrix& u) const;

  /// Integer grid coordinates (re, im) per entry, row-major; reconstruction
  /// applies the radial projection for points outside the disk.
  std::vector<std::array<std::int64_t, 2>> snap_coords(const Matrix& u) const;
  Matrix from_coords(const std::vector<std::array<std::int64_t, 2>>& coords) const;

 private:
  Complex snap_entry(Complex z) const;
  Complex grid_point(std::int64_t a, std::int64_t b) const;

  int d_;
  double eps_;
  double delta_prime_;
  double delta_;
  double threshold_;
};

}  // namespace gscon
