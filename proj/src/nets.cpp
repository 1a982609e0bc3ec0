#include "gscon/nets.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace gscon {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

// Nearest grid index with ties toward the lower coordinate.
std::int64_t half_down(double t) { return static_cast<std::int64_t>(std::ceil(t - 0.5)); }

double wrap_angle(double phi) {
  phi = std::fmod(phi, kTwoPi);
  if (phi < 0) phi += kTwoPi;
  return phi;
}

// Magnitudes at or below the float noise floor carry no usable phase.
constexpr double kZeroMagSq = 1e-26;

}  // namespace

SingleQubitNet::SingleQubitNet(double eps) : eps_(eps) {
  if (!(eps > 0.0) || eps > 1.0) throw std::invalid_argument("SingleQubitNet: eps must be in (0,1]");
  delta_ = eps * eps / 64.0;
  std::int64_t regular = static_cast<std::int64_t>(std::floor(1.0 / delta_)) + 1;
  x_endpoint_appended_ = (double(regular - 1) * delta_ < 1.0);
  x_size_ = regular + (x_endpoint_appended_ ? 1 : 0);
  phi_size_ = static_cast<std::int64_t>(std::ceil(kTwoPi / delta_));
  phi_pitch_ = kTwoPi / double(phi_size_);
}

double SingleQubitNet::log_cardinality() const {
  return std::log10(double(x_size_)) + 3.0 * std::log10(double(phi_size_));
}

Matrix SingleQubitNet::element_from_params(double x, double phi1, double phi2, double phi3) {
  double phi4 = -phi1 + phi2 + phi3 + std::numbers::pi;
  double a = std::sqrt(x), b = std::sqrt(1.0 - x);
  Matrix u(2, 2);
  u(0, 0) = a * Complex(std::cos(phi1), std::sin(phi1));
  u(0, 1) = b * Complex(std::cos(phi2), std::sin(phi2));
  u(1, 0) = b * Complex(std::cos(phi3), std::sin(phi3));
  u(1, 1) = a * Complex(std::cos(phi4), std::sin(phi4));
  return u;
}

Matrix SingleQubitNet::element(const NetIndex& idx) const {
  const auto& c = idx.coords;
  if (c[0] < 0 || c[0] >= x_size_) throw std::invalid_argument("SingleQubitNet: x index out of range");
  for (int i = 1; i < 4; ++i)
    if (c[i] < 0 || c[i] >= phi_size_) throw std::invalid_argument("SingleQubitNet: phi index out of range");
  double x = (x_endpoint_appended_ && c[0] == x_size_ - 1) ? 1.0 : double(c[0]) * delta_;
  return element_from_params(x, double(c[1]) * phi_pitch_, double(c[2]) * phi_pitch_,
                             double(c[3]) * phi_pitch_);
}

std::array<double, 4> SingleQubitNet::extract_params(const Matrix& u) const {
  double x = std::min(std::max(std::norm(u(0, 0)), 0.0), 1.0);
  double phi1, phi2, phi3;
  if (1.0 - x <= kZeroMagSq) {
    // Diagonal case: phi2 + phi3 is constrained through phi4; put the whole
    // sum on phi2 and zero the other free phase.
    x = 1.0;
    phi1 = wrap_angle(std::arg(u(0, 0)));
    phi3 = 0.0;
    phi2 = wrap_angle(std::arg(u(1, 1)) + phi1 - std::numbers::pi);
  } else if (x <= kZeroMagSq) {
    x = 0.0;
    phi1 = 0.0;
    phi2 = wrap_angle(std::arg(u(0, 1)));
    phi3 = wrap_angle(std::arg(u(1, 0)));
  } else {
    phi1 = wrap_angle(std::arg(u(0, 0)));
    phi2 = wrap_angle(std::arg(u(0, 1)));
    phi3 = wrap_angle(std::arg(u(1, 0)));
  }
  return {x, phi1, phi2, phi3};
}

NetIndex SingleQubitNet::snap(const Matrix& u) const {
  if (u.rows() != 2 || u.cols() != 2) throw std::invalid_argument("SingleQubitNet::snap: expected 2x2");
  Matrix g = u * u.adjoint() - Matrix::Identity(2, 2);
  if (g.cwiseAbs().maxCoeff() > kTol.unitarity)
    throw std::invalid_argument("SingleQubitNet::snap: input is not unitary");

  auto snap_phase = [&](double phi) {
    std::int64_t j = half_down(phi / phi_pitch_);
    if (j >= phi_size_) j -= phi_size_;  // wrap-around near 2pi
    if (j < 0) j = 0;
    return j;
  };

  auto [x, phi1, phi2, phi3] = extract_params(u);

  std::int64_t regular = x_size_ - (x_endpoint_appended_ ? 1 : 0);
  std::int64_t jx = std::min(std::max<std::int64_t>(half_down(x / delta_), 0), regular - 1);
  if (x_endpoint_appended_ && std::abs(x - 1.0) < std::abs(x - double(jx) * delta_)) jx = x_size_ - 1;
  double xval = (x_endpoint_appended_ && jx == x_size_ - 1) ? 1.0 : double(jx) * delta_;

  NetIndex idx;
  idx.coords[0] = jx;
  if (xval == 1.0) {
    // Diagonal grid point: only phi1 and the sum phi2 + phi3 matter, so use
    // the canonical encoding (phi2 carries the sum, phi3 = 0); otherwise the
    // snap of a snapped element could land on a different index.
    std::int64_t j1 = snap_phase(phi1);
    double target = wrap_angle(std::arg(u(1, 1)) + double(j1) * phi_pitch_ - std::numbers::pi);
    idx.coords[1] = j1;
    idx.coords[2] = snap_phase(target);
    idx.coords[3] = 0;
  } else if (xval == 0.0) {
    // Antidiagonal grid point: phi1 only enters through a zero entry.
    idx.coords[1] = 0;
    idx.coords[2] = snap_phase(wrap_angle(std::arg(u(0, 1))));
    idx.coords[3] = snap_phase(wrap_angle(std::arg(u(1, 0))));
  } else {
    idx.coords[1] = snap_phase(phi1);
    idx.coords[2] = snap_phase(phi2);
    idx.coords[3] = snap_phase(phi3);
  }
  return idx;
}

PseudoNet::PseudoNet(int d, double eps) : d_(d), eps_(eps) {
  if (d < 2) throw std::invalid_argument("PseudoNet: d must be >= 2");
  if (!(eps > 0.0) || !(eps < 1.0)) throw std::invalid_argument("PseudoNet: eps must be in (0,1)");
  delta_prime_ = eps / (6.0 * d * (d + eps));
  delta_ = delta_prime_ / std::sqrt(double(d));
  threshold_ = eps / (2.0 * (d + eps));
}

std::int64_t PseudoNet::disk_grid_size() const {
  auto half = static_cast<std::int64_t>(std::floor(1.0 / delta_));
  return (2 * half + 1) * (2 * half + 1);
}

double PseudoNet::log_cardinality() const {
  return double(d_) * double(d_) * std::log10(double(disk_grid_size()));
}

Complex PseudoNet::grid_point(std::int64_t a, std::int64_t b) const {
  Complex w(double(a) * delta_, double(b) * delta_);
  double mag = std::abs(w);
  if (mag > 1.0) w /= mag;  // radial projection onto the disk
  return w;
}

Complex PseudoNet::snap_entry(Complex z) const {
  return grid_point(half_down(z.real() / delta_), half_down(z.imag() / delta_));
}

bool PseudoNet::check(const Matrix& m) const {
  if (m.rows() != d_ || m.cols() != d_) throw std::invalid_argument("PseudoNet::check: wrong dimension");
  Matrix b = m * m.adjoint();  // sum of column outer products
  Eigen::JacobiSVD<Matrix> svd(b - Matrix::Identity(d_, d_));
  return svd.singularValues()(0) <= threshold_;
}

Matrix PseudoNet::round(const Matrix& m) const {
  if (!check(m)) throw std::invalid_argument("PseudoNet::round: input rejected by check");
  Matrix b = m * m.adjoint();
  Eigen::SelfAdjointEigenSolver<Matrix> es(b);
  Eigen::VectorXd ev = es.eigenvalues();
  // check() passing forces B invertible.
  Matrix inv_root = es.eigenvectors() * ev.cwiseSqrt().cwiseInverse().asDiagonal() * es.eigenvectors().adjoint();
  return inv_root * m;
}

Matrix PseudoNet::snap(const Matrix& u) const {
  if (u.rows() != d_ || u.cols() != d_) throw std::invalid_argument("PseudoNet::snap: wrong dimension");
  Matrix g = u * u.adjoint() - Matrix::Identity(d_, d_);
  if (g.cwiseAbs().maxCoeff() > kTol.unitarity)
    throw std::invalid_argument("PseudoNet::snap: input is not unitary");
  Matrix out(d_, d_);
  for (int i = 0; i < d_; ++i)
    for (int j = 0; j < d_; ++j) out(i, j) = snap_entry(u(i, j));
  return out;
}

std::vector<std::array<std::int64_t, 2>> PseudoNet::snap_coords(const Matrix& u) const {
  if (u.rows() != d_ || u.cols() != d_) throw std::invalid_argument("PseudoNet::snap_coords: wrong dimension");
  std::vector<std::array<std::int64_t, 2>> coords;
  coords.reserve(std::size_t(d_) * d_);
  for (int i = 0; i < d_; ++i)
    for (int j = 0; j < d_; ++j)
      coords.push_back({half_down(u(i, j).real() / delta_), half_down(u(i, j).imag() / delta_)});
  return coords;
}

Matrix PseudoNet::from_coords(const std::vector<std::array<std::int64_t, 2>>& coords) const {
  if (coords.size() != std::size_t(d_) * d_)
    throw std::invalid_argument("PseudoNet::from_coords: wrong coordinate count");
  auto bound = static_cast<std::int64_t>(std::floor(1.0 / delta_)) + 1;
  Matrix out(d_, d_);
  std::size_t k = 0;
  for (int i = 0; i < d_; ++i)
    for (int j = 0; j < d_; ++j, ++k) {
      if (std::abs(coords[k][0]) > bound || std::abs(coords[k][1]) > bound)
        throw std::invalid_argument("PseudoNet::from_coords: coordinate outside the unit-disk grid");
      out(i, j) = grid_point(coords[k][0], coords[k][1]);
    }
  return out;
}

}  // namespace gscon
