#include "gscon/linalg.hpp"

#include <algorithm>
#include <stdexcept>

#include "gscon/local_op.hpp"

namespace gscon {

namespace {

void require_square(const Matrix& m, const char* who) {
  if (m.rows() != m.cols()) throw std::invalid_argument(std::string(who) + ": matrix not square");
}

}  // namespace

double trace_norm(const Matrix& m) {
  require_square(m, "trace_norm");
  Eigen::JacobiSVD<Matrix> svd(m);
  return svd.singularValues().sum();
}

double spectral_norm(const Matrix& m) {
  require_square(m, "spectral_norm");
  if (m.rows() == 0) return 0.0;
  Eigen::JacobiSVD<Matrix> svd(m);
  return svd.singularValues()(0);
}

double max_entry_norm(const Matrix& m) {
  require_square(m, "max_entry_norm");
  return m.cwiseAbs().maxCoeff();
}

Matrix partial_outer(const StateVector& v, const StateVector& w, const std::vector<int>& keep) {
  if (v.n() != w.n()) throw std::invalid_argument("partial_outer: dimension mismatch");
  check_qubits_in_range(keep, v.n());
  int n = v.n();
  int j = static_cast<int>(keep.size());

  std::vector<int> sub_bits, rest_bits;
  std::vector<bool> used(n, false);
  for (int q : keep) {
    sub_bits.push_back(qubit_bit(n, q));
    used[qubit_bit(n, q)] = true;
  }
  for (int b = n - 1; b >= 0; --b)
    if (!used[b]) rest_bits.push_back(b);

  auto compose = [&](std::int64_t local, std::int64_t rest) {
    std::int64_t idx = 0;
    for (int t = 0; t < j; ++t) idx |= ((local >> (j - 1 - t)) & 1) << sub_bits[t];
    int r = static_cast<int>(rest_bits.size());
    for (int t = 0; t < r; ++t) idx |= ((rest >> (r - 1 - t)) & 1) << rest_bits[t];
    return idx;
  };

  auto d = std::int64_t(1) << j;
  auto rest_count = std::int64_t(1) << (n - j);
  Matrix out = Matrix::Zero(d, d);
  for (std::int64_t rest = 0; rest < rest_count; ++rest)
    for (std::int64_t a = 0; a < d; ++a) {
      Complex va = v.amps()[compose(a, rest)];
      if (va == Complex(0, 0)) continue;
      for (std::int64_t b = 0; b < d; ++b)
        out(a, b) += va * std::conj(w.amps()[compose(b, rest)]);
    }
  return out;
}

Matrix reduced_density(const StateVector& v, const std::vector<int>& keep) {
  return partial_outer(v, v, keep);
}

Matrix herm_sqrt(const Matrix& a) {
  require_square(a, "herm_sqrt");
  Eigen::SelfAdjointEigenSolver<Matrix> es(a);
  Eigen::VectorXd ev = es.eigenvalues().cwiseMax(0.0);
  return es.eigenvectors() * ev.cwiseSqrt().asDiagonal() * es.eigenvectors().adjoint();
}

Matrix herm_inv_sqrt(const Matrix& a) {
  require_square(a, "herm_inv_sqrt");
  Eigen::SelfAdjointEigenSolver<Matrix> es(a);
  Eigen::VectorXd ev = es.eigenvalues();
  if (ev.minCoeff() <= 0) throw std::invalid_argument("herm_inv_sqrt: matrix not positive definite");
  return es.eigenvectors() * ev.cwiseSqrt().cwiseInverse().asDiagonal() * es.eigenvectors().adjoint();
}

double gentle_measurement_residual(const Matrix& rho, const Matrix& lambda) {
  require_square(rho, "gentle_measurement_residual");
  if (rho.rows() != lambda.rows() || rho.cols() != lambda.cols())
    throw std::invalid_argument("gentle_measurement_residual: dimension mismatch");
  Eigen::SelfAdjointEigenSolver<Matrix> es(lambda);
  if (es.eigenvalues().minCoeff() < -1e-10 || es.eigenvalues().maxCoeff() > 1.0 + 1e-10)
    throw std::invalid_argument("gentle_measurement_residual: Lambda eigenvalues outside [0,1]");
  Matrix root = herm_sqrt(lambda);
  return trace_norm(rho - root * rho * root);
}

Matrix haar_unitary(int dim, Rng& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  Matrix g(dim, dim);
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j) g(i, j) = Complex(gauss(rng), gauss(rng));
  Eigen::HouseholderQR<Matrix> qr(g);
  Matrix q = qr.householderQ();
  Matrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  // Fix the phase ambiguity so the distribution is exactly Haar.
  for (int i = 0; i < dim; ++i) {
    Complex d = r(i, i);
    q.col(i) *= (d == Complex(0, 0)) ? 1.0 : d / std::abs(d);
  }
  return q;
}

StateVector haar_state(int n, Rng& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  Vector v(std::int64_t(1) << n);
  for (std::int64_t i = 0; i < v.size(); ++i) v[i] = Complex(gauss(rng), gauss(rng));
  v /= v.norm();
  return StateVector(n, std::move(v));
}

Matrix random_density(int dim, Rng& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  Matrix g(dim, dim);
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j) g(i, j) = Complex(gauss(rng), gauss(rng));
  Matrix rho = g * g.adjoint();
  return rho / rho.trace();
}

Matrix random_measurement(int dim, Rng& rng) {
  Matrix basis = haar_unitary(dim, rng);
  std::uniform_real_distribution<double> uni(0.0, 1.0);
  Eigen::VectorXd ev(dim);
  for (int i = 0; i < dim; ++i) ev[i] = uni(rng);
  return basis * ev.asDiagonal() * basis.adjoint();
}

}  // namespace gscon
