#include "gscon/reductions.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <queue>
#include <sstream>
#include <stdexcept>

namespace gscon {

void Cnf3::validate() const {
  if (num_vars < 1) throw std::invalid_argument("Cnf3: no variables");
  if (clauses.empty()) throw std::invalid_argument("Cnf3: no clauses");
  for (const auto& c : clauses)
    for (int v : c.vars)
      if (v < 0 || v >= num_vars) throw std::invalid_argument("Cnf3: literal references bad variable");
}

bool Cnf3::satisfies(const std::vector<bool>& assignment) const {
  if (static_cast<int>(assignment.size()) != num_vars)
    throw std::invalid_argument("Cnf3::satisfies: assignment length mismatch");
  for (const auto& c : clauses) {
    bool ok = false;
    for (int i = 0; i < 3; ++i)
      if (assignment[c.vars[i]] != c.negated[i]) {
        ok = true;
        break;
      }
    if (!ok) return false;
  }
  return true;
}

std::vector<std::uint64_t> Cnf3::satisfying_assignments() const {
  validate();
  if (num_vars > 24) throw std::invalid_argument("Cnf3: too many variables to enumerate");
  std::vector<std::uint64_t> out;
  std::vector<bool> a(num_vars);
  for (std::uint64_t z = 0; z < (std::uint64_t(1) << num_vars); ++z) {
    for (int q = 0; q < num_vars; ++q) a[q] = (z >> (num_vars - 1 - q)) & 1;
    if (satisfies(a)) out.push_back(z);
  }
  return out;
}

Cnf3 parse_dimacs(const std::string& text) {
  std::istringstream in(text);
  Cnf3 cnf;
  int declared_clauses = -1;
  std::string line;
  std::vector<int> literals;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == 'c' || line[0] == '%') continue;
    std::istringstream ls(line);
    if (line[0] == 'p') {
      std::string p, fmt;
      ls >> p >> fmt >> cnf.num_vars >> declared_clauses;
      if (fmt != "cnf") throw std::invalid_argument("parse_dimacs: expected 'p cnf'");
      continue;
    }
    int lit;
    while (ls >> lit) {
      if (lit == 0) {
        if (literals.size() != 3)
          throw std::invalid_argument("parse_dimacs: clauses must have exactly 3 literals");
        Clause3 c;
        for (int i = 0; i < 3; ++i) {
          c.vars[i] = std::abs(literals[i]) - 1;
          c.negated[i] = literals[i] < 0;
        }
        cnf.clauses.push_back(c);
        literals.clear();
      } else {
        literals.push_back(lit);
      }
    }
  }
  if (!literals.empty()) throw std::invalid_argument("parse_dimacs: unterminated clause");
  if (cnf.num_vars <= 0) throw std::invalid_argument("parse_dimacs: missing problem line");
  if (declared_clauses >= 0 && declared_clauses != static_cast<int>(cnf.clauses.size()))
    throw std::invalid_argument("parse_dimacs: clause count mismatch");
  cnf.validate();
  return cnf;
}

std::vector<bool> parse_bitstring(const std::string& bits) {
  std::vector<bool> out;
  out.reserve(bits.size());
  for (char c : bits) {
    if (c != '0' && c != '1') throw std::invalid_argument("parse_bitstring: bad character");
    out.push_back(c == '1');
  }
  if (out.empty()) throw std::invalid_argument("parse_bitstring: empty");
  return out;
}

std::uint64_t bits_to_index(const std::vector<bool>& bits) {
  std::uint64_t idx = 0;
  for (bool b : bits) idx = (idx << 1) | std::uint64_t(b);
  return idx;
}

StconnResult stconn_bfs(const Cnf3& cnf, const std::vector<bool>& x, const std::vector<bool>& y) {
  cnf.validate();
  if (!cnf.satisfies(x) || !cnf.satisfies(y))
    throw std::invalid_argument("stconn_bfs: endpoints must satisfy the formula");
  int n = cnf.num_vars;
  std::uint64_t xs = bits_to_index(x), ys = bits_to_index(y);

  std::vector<std::uint64_t> sat = cnf.satisfying_assignments();
  std::vector<bool> is_sat(std::size_t(1) << n, false);
  for (auto z : sat) is_sat[z] = true;

  std::map<std::uint64_t, std::uint64_t> parent;
  std::queue<std::uint64_t> frontier;
  frontier.push(xs);
  parent[xs] = xs;
  while (!frontier.empty() && !parent.count(ys)) {
    std::uint64_t cur = frontier.front();
    frontier.pop();
    for (int q = 0; q < n; ++q) {
      std::uint64_t next = cur ^ (std::uint64_t(1) << (n - 1 - q));
      if (is_sat[next] && !parent.count(next)) {
        parent[next] = cur;
        frontier.push(next);
      }
    }
  }

  StconnResult res;
  if (!parent.count(ys)) return res;
  res.connected = true;
  std::vector<std::uint64_t> chain;
  for (std::uint64_t cur = ys;; cur = parent[cur]) {
    chain.push_back(cur);
    if (cur == xs) break;
  }
  std::reverse(chain.begin(), chain.end());
  for (auto z : chain) {
    std::vector<bool> a(n);
    for (int q = 0; q < n; ++q) a[q] = (z >> (n - 1 - q)) & 1;
    res.path.push_back(std::move(a));
  }
  return res;
}

std::optional<LocalOperator> clause_penalty(const Clause3& clause) {
  // Distinct variables of the clause, in ascending order; the penalized
  // assignment sets every literal false. Conflicting repeats (x and not-x)
  // make the clause a tautology.
  std::map<int, bool> bad_value;  // variable -> falsifying value
  for (int i = 0; i < 3; ++i) {
    bool value = clause.negated[i];  // literal false when var == negated[i]
    auto it = bad_value.find(clause.vars[i]);
    if (it == bad_value.end())
      bad_value[clause.vars[i]] = value;
    else if (it->second != value)
      return std::nullopt;
  }
  std::vector<int> qubits;
  std::uint64_t z = 0;
  for (const auto& [var, value] : bad_value) {
    qubits.push_back(var);
    z = (z << 1) | std::uint64_t(value);
  }
  auto d = std::int64_t(1) << qubits.size();
  Matrix m = Matrix::Zero(d, d);
  m(static_cast<std::int64_t>(z), static_cast<std::int64_t>(z)) = 1.0;
  return LocalOperator(std::move(qubits), std::move(m));
}

GsconInstance stconn_to_gscon(const Cnf3& cnf, const std::vector<bool>& x, const std::vector<bool>& y) {
  cnf.validate();
  if (!cnf.satisfies(x) || !cnf.satisfies(y))
    throw std::invalid_argument("stconn_to_gscon: endpoints must satisfy the formula");
  int n = cnf.num_vars;
  std::vector<LocalOperator> terms;
  for (const auto& c : cnf.clauses)
    if (auto t = clause_penalty(c)) terms.push_back(std::move(*t));
  LocalHamiltonian ham(n, std::move(terms));

  double eta2 = std::ldexp(1.0, -(2 * n + 4));  // 2^-(2n+4), exact
  return GsconInstance(std::move(ham), 3, 0.0, eta2, 0.0, 0.25, eta2, 1, std::uint64_t(1) << n,
                       StateVector::basis(n, bits_to_index(x)), StateVector::basis(n, bits_to_index(y)));
}

WitnessSequence stconn_witness(const Cnf3& cnf, const std::vector<std::vector<bool>>& path,
                               std::uint64_t m) {
  if (path.empty()) throw std::invalid_argument("stconn_witness: empty path");
  WitnessSequence w;
  for (std::size_t i = 1; i < path.size(); ++i) {
    int flipped = -1;
    for (int q = 0; q < cnf.num_vars; ++q)
      if (path[i][q] != path[i - 1][q]) {
        if (flipped >= 0) throw std::invalid_argument("stconn_witness: path step flips several bits");
        flipped = q;
      }
    if (flipped < 0) continue;  // repeated node
    w.ops.push_back(LocalOperator::pauli_x(flipped));
  }
  if (w.ops.size() > m) throw std::invalid_argument("stconn_witness: path longer than m");
  while (w.ops.size() < m) w.ops.push_back(LocalOperator::identity({0}));
  return w;
}

std::optional<StconnSplit> stconn_split(const Cnf3& cnf, const std::vector<bool>& x) {
  cnf.validate();
  if (!cnf.satisfies(x)) throw std::invalid_argument("stconn_split: x must satisfy the formula");
  int n = cnf.num_vars;
  auto sat = cnf.satisfying_assignments();
  std::vector<bool> is_sat(std::size_t(1) << n, false);
  for (auto z : sat) is_sat[z] = true;

  std::vector<bool> reach(std::size_t(1) << n, false);
  std::queue<std::uint64_t> frontier;
  frontier.push(bits_to_index(x));
  reach[bits_to_index(x)] = true;
  while (!frontier.empty()) {
    std::uint64_t cur = frontier.front();
    frontier.pop();
    for (int q = 0; q < n; ++q) {
      std::uint64_t next = cur ^ (std::uint64_t(1) << q);
      if (is_sat[next] && !reach[next]) {
        reach[next] = true;
        frontier.push(next);
      }
    }
  }
  std::vector<std::uint64_t> s_idx, t_idx;
  for (auto z : sat) (reach[z] ? s_idx : t_idx).push_back(z);
  if (t_idx.empty()) return std::nullopt;
  return StconnSplit{Subspace::from_basis_indices(n, s_idx), Subspace::from_basis_indices(n, t_idx)};
}

bool h_dominates_p_check(const LocalHamiltonian& h, const Subspace& s, const Subspace& t) {
  if (h.n() > 14) throw std::invalid_argument("h_dominates_p_check: n exceeds guard (14)");
  if (!h.is_diagonal()) throw std::invalid_argument("h_dominates_p_check: Hamiltonian not diagonal");
  auto in_span = [&](const Subspace& sub, std::vector<bool>& flags) {
    for (const auto& b : sub.basis) {
      int hits = 0;
      std::int64_t where = -1;
      for (std::int64_t i = 0; i < b.dim(); ++i)
        if (std::abs(b.amps()[i]) > 1e-12) {
          ++hits;
          where = i;
        }
      if (hits != 1) throw std::invalid_argument("h_dominates_p_check: subspace not basis-aligned");
      flags[static_cast<std::size_t>(where)] = true;
    }
  };
  auto dim = std::size_t(1) << h.n();
  std::vector<bool> in_st(dim, false);
  in_span(s, in_st);
  in_span(t, in_st);

  Eigen::VectorXd diag = embed_dense(h).diagonal().real();

  for (std::size_t z = 0; z < dim; ++z) {
    double hz = diag[static_cast<std::int64_t>(z)];
    double pz = in_st[z] ? 0.0 : 1.0;  // <z| I - Pi_S - Pi_T |z>
    if ((hz < 1e-12) != (pz < 1e-12)) return false;
    if (pz > 0.5 && hz < 1.0 - 1e-12) return false;
  }
  return true;
}

std::vector<LocalOperator> go_projector_pieces(int g0, int g1, int g2) {
  Matrix p01 = Matrix::Zero(4, 4), p10 = Matrix::Zero(4, 4);
  p01(1, 1) = 1;
  p10(2, 2) = 1;
  std::vector<LocalOperator> pieces;
  pieces.emplace_back(std::vector<int>{g0, g1}, 0.5 * p01);
  pieces.emplace_back(std::vector<int>{g0, g1}, 0.5 * p10);
  pieces.emplace_back(std::vector<int>{g1, g2}, 0.5 * p01);
  pieces.emplace_back(std::vector<int>{g1, g2}, 0.5 * p10);
  pieces.emplace_back(std::vector<int>{g0, g2}, 0.5 * p10);  // |1><1| (x) |0><0|
  pieces.emplace_back(std::vector<int>{g0, g2}, 0.5 * p01);  // |0><0| (x) |1><1|
  return pieces;
}

namespace {

Matrix kron2(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

}  // namespace

GsconInstance go_compose(const LocalHamiltonian& h_prime, double alpha, double beta,
                         std::uint64_t m) {
  int nh = h_prime.n();
  int n = nh + 3;
  auto pieces = go_projector_pieces(nh, nh + 1, nh + 2);

  std::vector<LocalOperator> terms;
  for (const auto& hterm : h_prime.terms())
    for (const auto& piece : pieces) {
      std::vector<int> qs = hterm.qubits;
      qs.insert(qs.end(), piece.qubits.begin(), piece.qubits.end());
      terms.emplace_back(std::move(qs), kron2(hterm.matrix, piece.matrix));
    }
  LocalHamiltonian ham(n, std::move(terms));
  int k = ham.locality();

  double eta1 = alpha;
  // For accepting toy verifiers the measured beta is ~0; the instance is then
  // a degenerate promise with eta2 = eta1 and Delta = 0.
  double eta2 = std::max(beta / (16.0 * double(m) * double(m)), eta1);
  double delta = std::min(eta2 - eta1, 0.25);

  StateVector psi = StateVector::basis(n, 0);
  StateVector phi = StateVector::basis(n, 0b111);  // GO qubits are the low bits
  return GsconInstance(std::move(ham), k, eta1, eta2, 0.0, 0.25, delta, 2, m, std::move(psi),
                       std::move(phi));
}

WitnessSequence go_witness_sequence(const std::vector<bool>& x, const CircuitDescriptor& circ,
                                    const std::vector<LocalOperator>& w) {
  int nh = circ.n_work() + circ.gate_count();
  std::uint64_t m = 2 * (std::uint64_t(x.size()) + w.size() + 1);
  WitnessSequence seq;

  for (std::size_t q = 0; q < x.size(); ++q)
    if (x[q]) seq.ops.push_back(LocalOperator::pauli_x(static_cast<int>(q)));
  seq.ops.insert(seq.ops.end(), w.begin(), w.end());

  Matrix xx = Matrix::Zero(4, 4);
  xx(0, 3) = xx(1, 2) = xx(2, 1) = xx(3, 0) = 1.0;
  seq.ops.emplace_back(std::vector<int>{nh, nh + 1}, xx);  // initiate checking
  seq.ops.push_back(LocalOperator::pauli_x(nh + 2));       // complete checking

  for (auto it = w.rbegin(); it != w.rend(); ++it) seq.ops.push_back(it->adjoint());
  for (std::size_t q = 0; q < x.size(); ++q)
    if (x[q]) seq.ops.push_back(LocalOperator::pauli_x(static_cast<int>(q)));

  if (seq.ops.size() > m) throw std::runtime_error("go_witness_sequence: sequence exceeds m");
  while (seq.ops.size() < m) seq.ops.push_back(LocalOperator::identity({0}));
  return seq;
}

GoInstance go_instance_from_circuit(const CircuitDescriptor& v_prime, const std::vector<bool>& x,
                                    bool solve_beta) {
  CircuitDescriptor circ = with_proof_copy(v_prime);
  Vector proof_amps = Vector::Zero(std::int64_t(1) << circ.n_proof);
  proof_amps[static_cast<std::int64_t>(bits_to_index(x))] = 1.0;
  StateVector proof(circ.n_proof, std::move(proof_amps));

  KitaevHamiltonian kh = kitaev_hamiltonian(circ, {proof}, solve_beta);
  auto w = history_prep_circuit(circ, x);

  GoInstance out{
      go_compose(kh.ham, *kh.alpha_bound, kh.beta_estimate.value_or(0.0),
                 2 * (std::uint64_t(circ.n_proof) + w.size() + 1)),
      WitnessSequence{}, static_cast<int>(w.size()), *kh.alpha_bound, kh.beta_estimate.value_or(0.0)};
  out.honest_witness = go_witness_sequence(x, circ, w);
  return out;
}

SuccinctOracles succinct_oracles_from_cnf(const Cnf3& cnf, int n_exp, int r_exp) {
  cnf.validate();
  if (cnf.num_vars != (1 << n_exp))
    throw std::invalid_argument("succinct_oracles_from_cnf: variable count must be 2^n_exp");
  auto clauses = cnf.clauses;
  SuccinctOracles o;
  o.n_exp = n_exp;
  o.r_exp = r_exp;
  o.clause_oracle = [clauses](std::uint64_t i) { return clauses[i % clauses.size()]; };
  o.psi_oracle = [](std::uint64_t) { return Eigen::Vector2cd(1.0, 0.0); };
  o.phi_oracle = [](std::uint64_t) { return Eigen::Vector2cd(1.0, 0.0); };
  return o;
}

SuccinctGsconInstance oracle3sat_to_succinct(const SuccinctOracles& oracles) {
  if (!oracles.clause_oracle) throw std::invalid_argument("oracle3sat_to_succinct: missing clause oracle");
  int n_vars = 1 << oracles.n_exp;
  int g0 = n_vars, g1 = n_vars + 1;

  SuccinctGsconInstance inst;
  inst.oracles = oracles;
  inst.m = 2 * std::uint64_t(n_vars) + 2;  // 2^(n_exp+1) + 2

  Matrix p = Matrix::Zero(4, 4);  // I - |00><00| - |11><11|
  p(1, 1) = p(2, 2) = 1.0;
  auto clause_fn = oracles.clause_oracle;
  inst.oracles.ham_oracle = [clause_fn, p, g0, g1](std::uint64_t i) {
    auto term = clause_penalty(clause_fn(i));
    if (!term) {
      // Tautological clause: emit the zero constraint on the GO qubits.
      return LocalOperator({g0, g1}, Matrix::Zero(4, 4));
    }
    std::vector<int> qs = term->qubits;
    qs.push_back(g0);
    qs.push_back(g1);
    return LocalOperator(std::move(qs), kron2(term->matrix, p));
  };
  inst.oracles.psi_oracle = [](std::uint64_t) { return Eigen::Vector2cd(1.0, 0.0); };
  inst.oracles.phi_oracle = [g0](std::uint64_t q) {
    return q >= std::uint64_t(g0) ? Eigen::Vector2cd(0.0, 1.0) : Eigen::Vector2cd(1.0, 0.0);
  };

  inst.eta1 = 0.0;
  inst.eta2 = 1.0 / (16.0 * double(inst.m) * double(inst.m));
  inst.eta3 = 0.0;
  inst.eta4 = 0.25;
  inst.delta = inst.eta2;
  inst.l = 1;
  inst.k = 5;
  return inst;
}

WitnessSequence succinct_witness(const SuccinctGsconInstance& inst, const std::vector<bool>& z) {
  int n_vars = 1 << inst.oracles.n_exp;
  if (static_cast<int>(z.size()) != n_vars)
    throw std::invalid_argument("succinct_witness: assignment length mismatch");
  WitnessSequence w;
  for (int q = 0; q < n_vars; ++q)
    if (z[q]) w.ops.push_back(LocalOperator::pauli_x(q));
  w.ops.push_back(LocalOperator::pauli_x(inst.go0()));  // initiate checking
  w.ops.push_back(LocalOperator::pauli_x(inst.go1()));  // complete checking
  for (int q = 0; q < n_vars; ++q)
    if (z[q]) w.ops.push_back(LocalOperator::pauli_x(q));
  while (w.ops.size() < inst.m) w.ops.push_back(LocalOperator::identity({0}));
  return w;
}

GsconInstance expand_succinct(const SuccinctGsconInstance& inst) {
  if (inst.oracles.n_exp > 3) throw std::invalid_argument("expand_succinct: n_exp exceeds guard (3)");
  int n_vars = 1 << inst.oracles.n_exp;
  int n = n_vars + 2;

  std::vector<LocalOperator> terms;
  for (std::uint64_t i = 0; i < (std::uint64_t(1) << inst.oracles.r_exp); ++i) {
    LocalOperator t = inst.oracles.ham_oracle(i);
    if (t.matrix.cwiseAbs().maxCoeff() < 1e-15) continue;
    terms.push_back(std::move(t));
  }
  LocalHamiltonian ham(n, std::move(terms));

  auto product_state = [&](const std::function<Eigen::Vector2cd(std::uint64_t)>& oracle) {
    Vector amps = Vector::Ones(1);
    for (int q = 0; q < n; ++q) {
      Eigen::Vector2cd s = oracle(std::uint64_t(q));
      Vector next(amps.size() * 2);
      for (Eigen::Index i = 0; i < amps.size(); ++i) {
        next[2 * i] = amps[i] * s[0];
        next[2 * i + 1] = amps[i] * s[1];
      }
      amps = std::move(next);
    }
    return StateVector(n, std::move(amps));
  };

  return GsconInstance(std::move(ham), inst.k, inst.eta1, inst.eta2, inst.eta3, inst.eta4,
                       inst.delta, inst.l, inst.m, product_state(inst.oracles.psi_oracle),
                       product_state(inst.oracles.phi_oracle));
}

}  // namespace gscon
