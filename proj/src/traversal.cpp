#include "gscon/traversal.hpp"

#include <cmath>
#include <stdexcept>

namespace gscon {

StaircaseParams::StaircaseParams(double d) : delta(d) {
  if (!(d > 0.0) || !(d < 0.5)) throw std::invalid_argument("StaircaseParams: Delta must be in (0, 1/2)");
  beta = std::sqrt(d);
  zeta = 2.0 * d / (1.0 + 2.0 * d);
  cutoff = 0.5 + zeta;
}

TraversalReport traversal_report(const StateVector& v, const StateVector& w,
                                 const std::vector<LocalOperator>& seq, const Projector& pi_s,
                                 const Projector& pi_t, bool korth_verified) {
  if (v.n() != w.n()) throw std::invalid_argument("traversal_report: dimension mismatch");
  // The two projectors must be orthogonal to each other.
  Matrix ps = embed_term(v.n(), pi_s.op);
  Matrix pt = embed_term(v.n(), pi_t.op);
  if ((ps * pt).cwiseAbs().maxCoeff() > 1e-9)
    throw std::invalid_argument("traversal_report: Pi_S and Pi_T are not orthogonal");

  TraversalReport rep;
  rep.m = static_cast<int>(seq.size());
  StateVector cur = v;
  rep.overlaps.reserve(seq.size());
  for (const auto& op : seq) {
    cur = apply_local(cur, op);
    double overlap =
        1.0 - expectation(cur, pi_s.op).real() - expectation(cur, pi_t.op).real();
    rep.overlaps.push_back(overlap);
    rep.max_overlap = std::max(rep.max_overlap, overlap);
  }
  rep.eps = cur.distance(w);
  if (rep.m > 0) {
    double base = (1.0 - 2.0 * rep.eps) / (2.0 * rep.m);
    rep.bound = base * base;
  }
  rep.lemma_applicable = korth_verified && rep.m >= 1 && rep.eps < 0.5;
  rep.bound_satisfied = !rep.lemma_applicable || rep.max_overlap >= rep.bound - 1e-12;
  return rep;
}

Matrix complete_unitary(int dim, const std::vector<std::pair<Vector, int>>& action) {
  if (action.empty() || static_cast<int>(action.size()) > dim)
    throw std::invalid_argument("complete_unitary: bad action size");

  std::vector<Vector> sources;
  std::vector<int> targets;
  std::vector<bool> target_used(dim, false);
  for (const auto& [src, tgt] : action) {
    if (src.size() != dim) throw std::invalid_argument("complete_unitary: source dimension mismatch");
    if (tgt < 0 || tgt >= dim || target_used[tgt])
      throw std::invalid_argument("complete_unitary: bad or repeated target index");
    double nrm = src.norm();
    if (nrm < 1e-12) throw std::invalid_argument("complete_unitary: zero source vector");
    Vector s = src / nrm;
    for (const auto& prev : sources)
      if (std::abs(prev.dot(s)) > 1e-8)
        throw std::invalid_argument("complete_unitary: sources are not orthogonal");
    sources.push_back(std::move(s));
    targets.push_back(tgt);
    target_used[tgt] = true;
  }

  // Extend sources against the canonical basis in index order.
  for (int j = 0; j < dim && static_cast<int>(sources.size()) < dim; ++j) {
    Vector r = Vector::Zero(dim);
    r[j] = 1.0;
    for (const auto& s : sources) r -= s.dot(r) * s;
    double nrm = r.norm();
    if (nrm > 1e-6) sources.push_back(r / nrm);
  }
  if (static_cast<int>(sources.size()) != dim)
    throw std::runtime_error("complete_unitary: completion failed");
  for (int t = 0; t < dim; ++t)
    if (!target_used[t] && targets.size() < sources.size()) {
      targets.push_back(t);
      target_used[t] = true;
    }

  Matrix u = Matrix::Zero(dim, dim);
  for (std::size_t t = 0; t < sources.size(); ++t) {
    Vector e = Vector::Zero(dim);
    e[targets[t]] = 1.0;
    u += e * sources[t].adjoint();
  }
  return u;
}

double step1_f(double gamma1, const StaircaseParams& params) {
  return std::sqrt((1.0 - 2.0 * params.delta) * gamma1 * gamma1 + params.delta);
}

Step1Pair step1_pair(double gamma1, const StaircaseParams& params) {
  double g1sq = gamma1 * gamma1;
  if (!(gamma1 > 0.0) || !(g1sq > 0.5) || gamma1 > 1.0 + 1e-12)
    throw std::invalid_argument("step1_pair: gamma1 out of range");
  gamma1 = std::min(gamma1, 1.0);
  double gamma2 = std::sqrt(std::max(0.0, 1.0 - gamma1 * gamma1));
  double alpha = std::sqrt(1.0 - params.delta);
  double beta = params.beta;

  // U1 on qubits {0,1}: |00> -> alpha|00> + beta|11>, |11> -> beta|00> - alpha|11>.
  Matrix m1 = Matrix::Identity(4, 4);
  m1(0, 0) = alpha;
  m1(3, 0) = beta;
  m1(0, 3) = beta;
  m1(3, 3) = -alpha;
  LocalOperator u1({0, 1}, m1);

  // U2 on qubits {1,2}: sends the two support vectors to |00> and |11>.
  Vector s1 = Vector::Zero(4), s2 = Vector::Zero(4);
  s1[0] = gamma1 * alpha;
  s1[1] = gamma2 * beta;
  s2[2] = gamma1 * beta;
  s2[3] = -gamma2 * alpha;
  LocalOperator u2({1, 2}, complete_unitary(4, {{s1, 0}, {s2, 3}}));

  return Step1Pair{std::move(u1), std::move(u2), step1_f(gamma1, params)};
}

double step2_beta(double gamma1) {
  double g1sq = gamma1 * gamma1;
  double b2 = (2.0 * g1sq - 1.0) / (3.0 - 2.0 * g1sq);
  return std::sqrt(std::max(0.0, b2));
}

std::vector<LocalOperator> step2_finisher(double gamma1, const StaircaseParams& params) {
  double g1sq = gamma1 * gamma1;
  if (!(g1sq > 0.5 - 1e-12) || g1sq > params.cutoff + 1e-12)
    throw std::invalid_argument("step2_finisher: gamma1 outside the admissible window");

  double beta = step2_beta(gamma1);
  double alpha = std::sqrt(1.0 - beta * beta);
  double d2 = std::sqrt((1.0 + beta * beta) / 2.0);

  // Forward direction (equal superposition -> gamma state): A on {0,1},
  // B on {1,2}, C on {0,1}. The sequence returned is C^dag, B^dag, A^dag.
  Vector e0 = Vector::Zero(4), e1 = Vector::Zero(4), e2 = Vector::Zero(4), e3 = Vector::Zero(4);
  e0[0] = 1;
  e1[1] = 1;
  e2[2] = 1;
  e3[3] = 1;

  // A: |00> -> |00>, |11> -> beta|01> + alpha|11>; build A^dag directly.
  Matrix a_dag = complete_unitary(4, {{e0, 0}, {beta * e1 + alpha * e3, 3}});

  // B is a reflection on the {|00>,|11>} block, so B^dag = B.
  double c = 1.0 / (std::sqrt(2.0) * d2);
  Matrix b = complete_unitary(4, {{c * e0 + beta * c * e3, 0}, {beta * c * e0 - c * e3, 3}, {e1, 1}, {e2, 2}});

  // C: normalized(d2|00> + (alpha*beta/(2 d2))|10>) -> |00>, |11> -> -|11>.
  Vector w_vec = d2 * e0 + (alpha * beta / (2.0 * d2)) * e2;
  Matrix c_mat = complete_unitary(4, {{w_vec, 0}, {-e3, 3}});

  std::vector<LocalOperator> seq;
  seq.emplace_back(std::vector<int>{0, 1}, c_mat.adjoint());
  seq.emplace_back(std::vector<int>{1, 2}, b.adjoint());
  seq.emplace_back(std::vector<int>{0, 1}, a_dag);
  return seq;
}

std::vector<LocalOperator> staircase_half(const StaircaseParams& params) {
  std::vector<LocalOperator> seq;
  double gamma1 = 1.0;
  while (gamma1 * gamma1 > params.cutoff) {
    Step1Pair pair = step1_pair(gamma1, params);
    seq.push_back(std::move(pair.u1));
    seq.push_back(std::move(pair.u2));
    gamma1 = pair.gamma1_next;
  }
  auto finisher = step2_finisher(gamma1, params);
  seq.insert(seq.end(), std::make_move_iterator(finisher.begin()), std::make_move_iterator(finisher.end()));
  return seq;
}

std::vector<LocalOperator> staircase_full(const StaircaseParams& params) {
  std::vector<LocalOperator> seq = staircase_half(params);
  // Conjugating each half element by X on its qubit pair gives the map
  // |111> -> (|000>+|111>)/sqrt(2); its reversed inverses finish the climb.
  // P is invariant under X^{x3}, so the overlap bound carries over.
  Matrix xx = Matrix::Zero(4, 4);
  xx(0, 3) = xx(1, 2) = xx(2, 1) = xx(3, 0) = 1.0;
  std::vector<LocalOperator> second;
  second.reserve(seq.size());
  for (auto it = seq.rbegin(); it != seq.rend(); ++it)
    second.emplace_back(it->qubits, (xx * it->matrix * xx).adjoint());
  seq.insert(seq.end(), std::make_move_iterator(second.begin()), std::make_move_iterator(second.end()));
  return seq;
}

}  // namespace gscon
