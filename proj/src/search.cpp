#include "gscon/search.hpp"

#include <cmath>
#include <functional>
#include <numbers>
#include <stdexcept>
#include <unordered_set>

#include "gscon/linalg.hpp"

namespace gscon {

namespace {

double qcma_epsilon(const GsconInstance& inst) {
  if (!(inst.delta > 0)) throw std::invalid_argument("qcma_verifier_sim: requires Delta > 0");
  if (inst.m == 0 || inst.term_count() == 0)
    throw std::invalid_argument("qcma_verifier_sim: requires m >= 1 and at least one term");
  return inst.delta / (16.0 * double(inst.m) * double(inst.term_count()));
}

double pspace_epsilon(const GsconInstance& inst) {
  if (!(inst.delta > 0)) throw std::invalid_argument("pspace_search: requires Delta > 0 (or explicit net eps)");
  if (inst.term_count() == 0) throw std::invalid_argument("pspace_search: requires at least one term");
  double steps = inst.m == 0 ? 1.0 : double(inst.m);
  return inst.delta / (8.0 * double(inst.term_count()) * (2.0 * (steps - 1.0) + 1.0));
}

}  // namespace

QcmaSimResult qcma_verifier_sim(const GsconInstance& inst, const QcmaProof& proof) {
  if (inst.l != 2) throw std::invalid_argument("qcma_verifier_sim: requires l = 2");
  if (proof.size() != inst.m) throw std::invalid_argument("qcma_verifier_sim: proof length must equal m");

  QcmaSimResult res;
  res.epsilon = qcma_epsilon(inst);
  res.energy_threshold = inst.eta1 + res.epsilon;
  res.proximity_threshold = inst.eta3 + res.epsilon;
  PseudoNet net(4, res.epsilon);

  // Unitary check, then rounding.
  std::vector<LocalOperator> rounded;
  rounded.reserve(proof.size());
  for (std::size_t i = 0; i < proof.size(); ++i) {
    Matrix claimed = net.from_coords(proof[i].coords);
    if (!net.check(claimed)) {
      res.rejected_at = static_cast<int>(i);
      return res;
    }
    rounded.emplace_back(std::vector<int>{proof[i].qubits[0], proof[i].qubits[1]}, net.round(claimed));
  }

  // Low-energy and target-proximity checks on the rounded sequence.
  StateVector cur = inst.psi;
  for (const auto& op : rounded) {
    cur = apply_local(cur, op);
    double e = energy(inst.ham, cur);
    res.step_energies.push_back(e);
    if (e > res.energy_threshold) return res;
  }
  res.final_distance = cur.distance(inst.phi);
  res.accepted = res.final_distance <= res.proximity_threshold;
  return res;
}

QcmaProof make_qcma_proof(const GsconInstance& inst, const WitnessSequence& w) {
  if (inst.n() < 2) throw std::invalid_argument("make_qcma_proof: needs at least 2 qubits");
  double eps = qcma_epsilon(inst);
  PseudoNet net(4, eps);
  QcmaProof proof;
  for (const auto& op : w.ops) {
    LocalOperator two = op;
    if (two.arity() == 1) {
      // Lift 1-local ops onto a pair so the d = 4 net applies.
      int other = two.qubits[0] == 0 ? 1 : 0;
      Matrix lifted = Matrix::Zero(4, 4);
      lifted.block(0, 0, 2, 2) = two.matrix;
      lifted.block(2, 2, 2, 2) = two.matrix;
      two = LocalOperator({other, two.qubits[0]}, lifted);
    }
    if (two.arity() != 2) throw std::invalid_argument("make_qcma_proof: witness ops must be <= 2-local");
    proof.push_back(PseudoProofElement{{two.qubits[0], two.qubits[1]}, net.snap_coords(two.matrix)});
  }
  while (proof.size() < inst.m)
    proof.push_back(PseudoProofElement{{0, 1}, net.snap_coords(Matrix::Identity(4, 4))});
  return proof;
}

std::vector<Matrix> default_move_dictionary() {
  std::vector<Matrix> moves;
  moves.push_back(Matrix::Identity(2, 2));
  Matrix x(2, 2), y(2, 2), z(2, 2), h(2, 2);
  x << 0, 1, 1, 0;
  y << 0, Complex(0, -1), Complex(0, 1), 0;
  z << 1, 0, 0, -1;
  double s = 1.0 / std::sqrt(2.0);
  h << s, s, s, -s;
  moves.push_back(x);
  moves.push_back(y);
  moves.push_back(z);
  moves.push_back(h);
  for (double theta : {std::numbers::pi / 8, std::numbers::pi / 4, std::numbers::pi / 2}) {
    double c = std::cos(theta / 2), sn = std::sin(theta / 2);
    Matrix rx(2, 2), ry(2, 2), rz(2, 2);
    rx << c, Complex(0, -sn), Complex(0, -sn), c;
    ry << c, -sn, sn, c;
    rz << Complex(c, -sn), 0, 0, Complex(c, sn);
    moves.push_back(rx);
    moves.push_back(ry);
    moves.push_back(rz);
  }
  return moves;
}

namespace {

struct ConfigHash {
  std::size_t operator()(const std::vector<std::int64_t>& cfg) const {
    std::size_t h = 1469598103934665603ull;
    for (auto v : cfg) {
      h ^= static_cast<std::size_t>(v) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    }
    return h;
  }
};

// Net-index dictionary shared by both searches: all moves snapped onto the net.
std::vector<NetIndex> snapped_dictionary(const SingleQubitNet& net, const SearchOptions& opts) {
  std::vector<Matrix> raw = opts.move_dictionary.empty() ? default_move_dictionary() : opts.move_dictionary;
  std::vector<NetIndex> out;
  out.reserve(raw.size());
  for (const auto& m : raw) out.push_back(net.snap(m));
  return out;
}

}  // namespace

PspaceResult pspace_search(const GsconInstance& inst, const SearchOptions& opts) {
  if (inst.l != 1) throw std::invalid_argument("pspace_search: requires l = 1");
  PspaceResult res;
  res.epsilon = opts.net_eps.value_or(pspace_epsilon(inst));
  res.energy_threshold = inst.eta1 + inst.delta / 3.0;
  res.proximity_threshold = inst.eta3 + inst.delta / 4.0;

  // Step 1: immediate accept when the endpoints already coincide.
  if (inst.psi.distance(inst.phi) <= inst.eta3) {
    res.accepted = true;
    return res;
  }
  if (inst.m == 0) return res;

  SingleQubitNet net(res.epsilon);
  std::vector<NetIndex> move_idx = snapped_dictionary(net, opts);
  std::vector<Matrix> moves;
  moves.reserve(move_idx.size());
  for (const auto& idx : move_idx) moves.push_back(net.element(idx));
  int n = inst.n();

  // Cumulative per-qubit operators, stored as net indices (4 coords each).
  std::vector<std::int64_t> cfg(std::size_t(n) * 4, -1);  // -1 marks identity
  std::vector<Matrix> cumulative(n, Matrix::Identity(2, 2));

  std::unordered_set<std::vector<std::int64_t>, ConfigHash> visited;

  std::uint64_t nodes = 0;
  bool aborted = false;

  // Depth-first over (qubit, move) choices; memoized on (step, config).
  auto state_of = [&](const std::vector<Matrix>& cum) {
    StateVector s = inst.psi;
    for (int q = 0; q < n; ++q)
      s = StateVector(n, apply_matrix(s.amps(), n, {q}, cum[q]));
    return s;
  };

  std::function<bool(int, std::vector<Matrix>&, std::vector<std::int64_t>&)> dfs =
      [&](int step, std::vector<Matrix>& cum, std::vector<std::int64_t>& config) -> bool {
    if (step == static_cast<int>(inst.m)) return false;
    std::vector<std::int64_t> key = config;
    key.push_back(step);
    if (!visited.insert(key).second) return false;
    for (int q = 0; q < n; ++q) {
      for (const auto& mv : moves) {
        if (++nodes > opts.max_nodes) {
          aborted = true;
          return false;
        }
        Matrix prev = cum[q];
        std::array<std::int64_t, 4> prev_cfg;
        for (int c = 0; c < 4; ++c) prev_cfg[c] = config[std::size_t(q) * 4 + c];

        NetIndex folded = net.snap(mv * prev);  // round(B V)
        cum[q] = net.element(folded);
        for (int c = 0; c < 4; ++c) config[std::size_t(q) * 4 + c] = folded.coords[c];

        StateVector s = state_of(cum);
        double e = energy(inst.ham, s);
        bool pruned = e >= res.energy_threshold;  // energy test exits the loop
        if (!pruned) {
          if (s.distance(inst.phi) <= res.proximity_threshold) return true;  // proximity test
          if (dfs(step + 1, cum, config)) return true;
        }
        cum[q] = prev;
        for (int c = 0; c < 4; ++c) config[std::size_t(q) * 4 + c] = prev_cfg[c];
        if (aborted) return false;
      }
    }
    return false;
  };

  res.accepted = dfs(0, cumulative, cfg);
  res.nodes_visited = nodes;
  if (aborted && !res.accepted) throw std::runtime_error("pspace_search: node guard exceeded");
  return res;
}

BruteForceResult brute_force_gscon(const GsconInstance& inst, const SearchOptions& opts) {
  if (inst.n() > 3 || inst.m > 6)
    throw std::invalid_argument("brute_force_gscon: instance above the tiny guard");
  BruteForceResult res;
  double eps = opts.net_eps.value_or(pspace_epsilon(inst));
  res.energy_budget = inst.eta1 + 4.0 * eps * double(inst.m) * double(inst.term_count());
  res.distance_budget = inst.eta3 + 2.0 * eps * double(inst.m);

  SingleQubitNet net(eps);
  std::vector<NetIndex> dict = snapped_dictionary(net, opts);
  std::vector<Matrix> moves;
  moves.reserve(dict.size());
  for (const auto& idx : dict) moves.push_back(net.element(idx));

  // Subsets of size <= l carrying the moves (1-local moves on every subset
  // choice; l > 1 lifts them qubit by qubit, which covers the 1-local case
  // this oracle is specified for).
  if (inst.l != 1) throw std::invalid_argument("brute_force_gscon: requires l = 1");

  std::uint64_t nodes = 0;
  if (inst.psi.distance(inst.phi) <= res.distance_budget) {
    res.accepted = true;
    return res;
  }

  std::function<bool(int, const StateVector&)> dfs = [&](int depth, const StateVector& cur) -> bool {
    if (depth == static_cast<int>(inst.m)) return false;
    for (int q = 0; q < inst.n(); ++q)
      for (const auto& mv : moves) {
        if (++nodes > opts.max_nodes) throw std::runtime_error("brute_force_gscon: node guard exceeded");
        StateVector next(inst.n(), apply_matrix(cur.amps(), inst.n(), {q}, mv));
        if (energy(inst.ham, next) > res.energy_budget) continue;
        if (next.distance(inst.phi) <= res.distance_budget) return true;
        if (dfs(depth + 1, next)) return true;
      }
    return false;
  };
  res.accepted = dfs(0, inst.psi);
  res.nodes_visited = nodes;
  return res;
}

DriftTrace pspace_round_trace(const GsconInstance& inst, const WitnessSequence& w,
                              std::optional<double> net_eps) {
  DriftTrace trace;
  trace.epsilon = net_eps.value_or(pspace_epsilon(inst));
  SingleQubitNet net(trace.epsilon);
  int n = inst.n();
  if (n > 8) throw std::invalid_argument("pspace_round_trace: n too large for exact norms");

  auto tensor_all = [&](const std::vector<Matrix>& per_qubit) {
    Matrix out = Matrix::Identity(1, 1);
    for (int q = 0; q < n; ++q) {  // qubit 0 ends up most significant
      const Matrix& b = per_qubit[q];
      Matrix next(out.rows() * 2, out.cols() * 2);
      for (Eigen::Index i = 0; i < out.rows(); ++i)
        for (Eigen::Index j = 0; j < out.cols(); ++j)
          next.block(i * 2, j * 2, 2, 2) = out(i, j) * b;
      out = std::move(next);
    }
    return out;
  };

  std::vector<Matrix> exact(n, Matrix::Identity(2, 2));
  std::vector<Matrix> rounded(n, Matrix::Identity(2, 2));
  for (std::size_t i = 0; i < w.ops.size(); ++i) {
    const auto& op = w.ops[i];
    if (op.arity() != 1) throw std::invalid_argument("pspace_round_trace: witness must be 1-local");
    int q = op.qubits[0];
    exact[q] = op.matrix * exact[q];
    Matrix guess = net.element(net.snap(op.matrix));  // B_i = round(U_i)
    rounded[q] = net.element(net.snap(guess * rounded[q]));

    trace.drift.push_back(spectral_norm(tensor_all(exact) - tensor_all(rounded)));
    trace.bound.push_back((2.0 * double(i) + 1.0) * trace.epsilon);
  }
  return trace;
}

}  // namespace gscon
