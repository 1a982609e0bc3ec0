#include "gscon/korth.hpp"

#include <algorithm>
#include <stdexcept>

#include "gscon/local_op.hpp"

namespace gscon {

Subspace::Subspace(int n_, std::vector<StateVector> basis_) : n(n_), basis(std::move(basis_)) {
  for (std::size_t i = 0; i < basis.size(); ++i) {
    if (basis[i].n() != n) throw std::invalid_argument("Subspace: dimension mismatch");
    for (std::size_t j = 0; j < i; ++j)
      if (std::abs(basis[i].inner(basis[j])) > 1e-10)
        throw std::invalid_argument("Subspace: basis not orthonormal");
  }
}

Subspace Subspace::from_basis_indices(int n, const std::vector<std::uint64_t>& indices) {
  std::vector<StateVector> basis;
  basis.reserve(indices.size());
  for (auto idx : indices) basis.push_back(StateVector::basis(n, idx));
  return Subspace(n, std::move(basis));
}

std::vector<std::vector<int>> qubit_subsets(int n, int min_size, int max_size) {
  std::vector<std::vector<int>> out;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    int pc = __builtin_popcount(mask);
    if (pc < min_size || pc > max_size) continue;
    std::vector<int> subset;
    for (int q = 0; q < n; ++q)
      if (mask & (1u << q)) subset.push_back(q);
    out.push_back(std::move(subset));
  }
  return out;
}

namespace {

void check_pair(const StateVector& v, const StateVector& w, int k) {
  if (v.n() != w.n()) throw std::invalid_argument("k_orth: dimension mismatch");
  if (k < 1 || k > v.n()) throw std::invalid_argument("k_orth: k out of range");
}

std::vector<int> complement(int n, const std::vector<int>& subset) {
  std::vector<int> out;
  std::vector<bool> in(n, false);
  for (int q : subset) in[q] = true;
  for (int q = 0; q < n; ++q)
    if (!in[q]) out.push_back(q);
  return out;
}

}  // namespace

bool k_orth_states(const StateVector& v, const StateVector& w, int k, double tol) {
  check_pair(v, w, k);
  for (const auto& keep : qubit_subsets(v.n(), 0, k))
    if (trace_norm(partial_outer(v, w, keep)) > tol) return false;
  return true;
}

bool k_orth_density(const StateVector& v, const StateVector& w, int k, double tol) {
  check_pair(v, w, k);
  for (const auto& traced : qubit_subsets(v.n(), 0, k)) {
    std::vector<int> keep = complement(v.n(), traced);
    Matrix rho = reduced_density(v, keep);
    Matrix sigma = reduced_density(w, keep);
    if (trace_norm(rho * sigma) > tol) return false;
  }
  return true;
}

bool k_orth_subspaces(const Subspace& s, const Subspace& t, int k, double tol) {
  if (s.n != t.n) throw std::invalid_argument("k_orth_subspaces: dimension mismatch");
  // Basis pairs suffice: the partial outer product is bilinear in (v, conj w).
  for (const auto& v : s.basis)
    for (const auto& w : t.basis)
      if (!k_orth_states(v, w, k, tol)) return false;
  return true;
}

double max_klocal_overlap(const StateVector& v, const StateVector& w, int k) {
  check_pair(v, w, k);
  double best = 0.0;
  for (const auto& keep : qubit_subsets(v.n(), 0, k))
    best = std::max(best, trace_norm(partial_outer(v, w, keep)));
  return best;
}

double k_orth_bruteforce(const StateVector& v, const StateVector& w, int k, int trials, std::uint64_t seed) {
  check_pair(v, w, k);
  if (trials < 1) throw std::invalid_argument("k_orth_bruteforce: trials must be >= 1");
  Rng rng(seed);
  double best = std::abs(w.inner(v));  // identity probe

  auto subsets = qubit_subsets(v.n(), 1, k);
  auto probe = [&](const std::vector<int>& qs, const Matrix& u) {
    StateVector uv = apply_local(v, LocalOperator(qs, u));
    best = std::max(best, std::abs(w.inner(uv)));
  };

  // Deterministic probes: Pauli strings on each subset, and the unitary built
  // from the SVD of the partial outer product, which attains its trace norm.
  const Matrix paulis[3] = {LocalOperator::pauli_x(0).matrix, LocalOperator::pauli_y(0).matrix,
                            LocalOperator::pauli_z(0).matrix};
  for (const auto& qs : subsets) {
    int j = static_cast<int>(qs.size());
    std::int64_t combos = 1;
    for (int t = 0; t < j; ++t) combos *= 4;
    for (std::int64_t c = 0; c < combos; ++c) {
      Matrix u = Matrix::Identity(1, 1);
      std::int64_t rest = c;
      for (int t = 0; t < j; ++t) {
        int which = rest % 4;
        rest /= 4;
        Matrix factor = (which == 0) ? Matrix::Identity(2, 2) : paulis[which - 1];
        Matrix next(u.rows() * 2, u.cols() * 2);
        next.block(0, 0, u.rows(), u.cols()) = factor(0, 0) * u;
        next.block(0, u.cols(), u.rows(), u.cols()) = factor(0, 1) * u;
        next.block(u.rows(), 0, u.rows(), u.cols()) = factor(1, 0) * u;
        next.block(u.rows(), u.cols(), u.rows(), u.cols()) = factor(1, 1) * u;
        u = next;
      }
      probe(qs, u);
    }
    Matrix m = partial_outer(v, w, qs);
    Eigen::JacobiSVD<Matrix> svd(m, Eigen::ComputeFullU | Eigen::ComputeFullV);
    // tr(U M) with U = V_svd U_svd^dag equals the trace norm of M.
    probe(qs, svd.matrixV() * svd.matrixU().adjoint());
  }

  std::uniform_int_distribution<std::size_t> pick(0, subsets.size() - 1);
  for (int t = 0; t < trials; ++t) {
    const auto& qs = subsets[pick(rng)];
    probe(qs, haar_unitary(1 << qs.size(), rng));
  }
  return best;
}

}  // namespace gscon
