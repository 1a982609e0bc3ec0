#include "gscon/circuits.hpp"

#include <cmath>
#include <stdexcept>

namespace gscon {

namespace {

Matrix proj0() {
  Matrix p = Matrix::Zero(2, 2);
  p(0, 0) = 1;
  return p;
}

Matrix proj1() {
  Matrix p = Matrix::Zero(2, 2);
  p(1, 1) = 1;
  return p;
}

Matrix kron(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

Matrix basis_proj(int dim, int a, int b) {  // |a><b|
  Matrix m = Matrix::Zero(dim, dim);
  m(a, b) = 1;
  return m;
}

}  // namespace

void CircuitDescriptor::validate() const {
  if (n_proof < 0 || n_ancilla < 0 || n_work() < 1)
    throw std::invalid_argument("CircuitDescriptor: bad register sizes");
  if (output_qubit < 0 || output_qubit >= n_work())
    throw std::invalid_argument("CircuitDescriptor: output qubit out of range");
  for (const auto& g : gates) {
    check_qubits_in_range(g.qubits, n_work());
    if (g.arity() > 2) throw std::invalid_argument("CircuitDescriptor: gate acts on more than 2 qubits");
    if (!g.is_unitary()) throw std::invalid_argument("CircuitDescriptor: gate not unitary");
  }
}

LocalOperator cnot(int control, int target) {
  Matrix m = Matrix::Identity(4, 4);
  m(2, 2) = m(3, 3) = 0;
  m(2, 3) = m(3, 2) = 1;
  return LocalOperator({control, target}, m);
}

LocalOperator toffoli(int c1, int c2, int target) {
  Matrix m = Matrix::Identity(8, 8);
  m(6, 6) = m(7, 7) = 0;
  m(6, 7) = m(7, 6) = 1;
  return LocalOperator({c1, c2, target}, m);
}

CircuitDescriptor with_proof_copy(const CircuitDescriptor& v_prime) {
  v_prime.validate();
  CircuitDescriptor v;
  v.n_proof = v_prime.n_proof;
  v.n_ancilla = v_prime.n_ancilla + v_prime.n_proof;
  v.output_qubit = v_prime.output_qubit;
  int copy_base = v_prime.n_proof + v_prime.n_ancilla;
  for (int i = 0; i < v_prime.n_proof; ++i) v.gates.push_back(cnot(i, copy_base + i));
  v.gates.insert(v.gates.end(), v_prime.gates.begin(), v_prime.gates.end());
  return v;
}

StateVector run_circuit(const CircuitDescriptor& circ, const StateVector& input) {
  if (input.n() != circ.n_work()) throw std::invalid_argument("run_circuit: dimension mismatch");
  StateVector cur = input;
  for (const auto& g : circ.gates) cur = apply_local(cur, g);
  return cur;
}

double acceptance_probability(const CircuitDescriptor& circ, const StateVector& proof) {
  if (proof.n() != circ.n_proof) throw std::invalid_argument("acceptance_probability: proof size mismatch");
  Vector full = Vector::Zero(std::int64_t(1) << circ.n_work());
  for (std::int64_t p = 0; p < proof.dim(); ++p)
    full[p << circ.n_ancilla] = proof.amps()[p];
  StateVector out = run_circuit(circ, StateVector(circ.n_work(), std::move(full)));
  int bit = qubit_bit(circ.n_work(), circ.output_qubit);
  double acc = 0;
  for (std::int64_t i = 0; i < out.dim(); ++i)
    if ((i >> bit) & 1) acc += std::norm(out.amps()[i]);
  return acc;
}

StateVector history_state(const CircuitDescriptor& circ, const StateVector& proof) {
  circ.validate();
  int nl = circ.gate_count();
  if (nl < 1) throw std::invalid_argument("history_state: circuit must have at least one gate");
  if (proof.n() != circ.n_proof) throw std::invalid_argument("history_state: proof size mismatch");
  int n_work = circ.n_work();
  int n_total = n_work + nl;
  if (n_total > 24) throw std::invalid_argument("history_state: system too large");

  Vector work = Vector::Zero(std::int64_t(1) << n_work);
  for (std::int64_t p = 0; p < proof.dim(); ++p)
    work[p << circ.n_ancilla] = proof.amps()[p];

  auto unary = [&](int i) {  // clock qubits occupy the low bits
    std::int64_t idx = 0;
    for (int t = 1; t <= i; ++t) idx |= std::int64_t(1) << (nl - t);
    return idx;
  };

  Vector full = Vector::Zero(std::int64_t(1) << n_total);
  double amp = 1.0 / std::sqrt(double(nl + 1));
  for (int i = 0; i <= nl; ++i) {
    if (i > 0) work = apply_matrix(work, n_work, circ.gates[i - 1].qubits, circ.gates[i - 1].matrix);
    std::int64_t clock = unary(i);
    for (std::int64_t wi = 0; wi < work.size(); ++wi)
      full[(wi << nl) | clock] = amp * work[wi];
  }
  return StateVector(n_total, std::move(full));
}

KitaevHamiltonian kitaev_hamiltonian(const CircuitDescriptor& circ) {
  circ.validate();
  int nl = circ.gate_count();
  if (nl < 1) throw std::invalid_argument("kitaev_hamiltonian: circuit must have at least one gate");
  int n_work = circ.n_work();
  int n_total = n_work + nl;
  int clock = n_work;  // clock qubit t (1-based) is global qubit clock + t - 1

  std::vector<LocalOperator> terms;

  // Input: ancillas must be |0> at time zero (clock qubit 1 still |0>).
  for (int a = circ.n_proof; a < n_work; ++a)
    terms.emplace_back(std::vector<int>{a, clock}, kron(proj1(), proj0()));

  // Clock: forbid 0 followed by 1 in the unary string.
  for (int t = 1; t < nl; ++t)
    terms.emplace_back(std::vector<int>{clock + t - 1, clock + t},
                       kron(proj0(), proj1()));

  // Propagation: (1/2)(I (x) D - V_t (x) A - V_t^dag (x) A^dag) per time step.
  for (int t = 1; t <= nl; ++t) {
    const auto& gate = circ.gates[t - 1];
    std::vector<int> clock_qubits;
    Matrix diag, adv;
    if (nl == 1) {
      clock_qubits = {clock};
      diag = Matrix::Identity(2, 2);
      adv = basis_proj(2, 1, 0);
    } else if (t == 1) {
      clock_qubits = {clock, clock + 1};
      diag = basis_proj(4, 0, 0) + basis_proj(4, 2, 2);
      adv = basis_proj(4, 2, 0);
    } else if (t == nl) {
      clock_qubits = {clock + t - 2, clock + t - 1};
      diag = basis_proj(4, 2, 2) + basis_proj(4, 3, 3);
      adv = basis_proj(4, 3, 2);
    } else {
      clock_qubits = {clock + t - 2, clock + t - 1, clock + t};
      diag = basis_proj(8, 4, 4) + basis_proj(8, 6, 6);
      adv = basis_proj(8, 6, 4);
    }
    auto d = std::int64_t(1) << gate.qubits.size();
    Matrix sys_id = Matrix::Identity(d, d);
    Matrix m = 0.5 * (kron(sys_id, diag) - kron(gate.matrix, adv) - kron(gate.matrix.adjoint(), adv.adjoint()));
    std::vector<int> qs = gate.qubits;
    qs.insert(qs.end(), clock_qubits.begin(), clock_qubits.end());
    terms.emplace_back(std::move(qs), std::move(m));
  }

  // Output: penalize |0> on the output qubit at the final time.
  terms.emplace_back(std::vector<int>{circ.output_qubit, clock + nl - 1}, kron(proj0(), proj1()));

  return KitaevHamiltonian{LocalHamiltonian(n_total, std::move(terms)), nl, std::nullopt, std::nullopt};
}

KitaevHamiltonian kitaev_hamiltonian(const CircuitDescriptor& circ,
                                     const std::vector<StateVector>& test_proofs, bool solve_beta) {
  KitaevHamiltonian kh = kitaev_hamiltonian(circ);
  double worst = 0.0;
  for (const auto& proof : test_proofs)
    worst = std::max(worst, energy(kh.ham, history_state(circ, proof)));
  kh.alpha_bound = worst + 1e-12;
  if (solve_beta && kh.ham.n() <= 14) kh.beta_estimate = min_eigenvalue(kh.ham);
  return kh;
}

std::vector<LocalOperator> history_prep_circuit(const CircuitDescriptor& circ,
                                                const std::vector<bool>& x) {
  circ.validate();
  int nl = circ.gate_count();
  if (nl < 1) throw std::invalid_argument("history_prep_circuit: circuit must have at least one gate");
  if (static_cast<int>(x.size()) != circ.n_proof)
    throw std::invalid_argument("history_prep_circuit: proof length mismatch");
  int n_work = circ.n_work();
  int clock = n_work;

  std::vector<LocalOperator> w;

  // Clock ladder: uniform amplitudes over the unary time states.
  for (int t = 1; t <= nl; ++t) {
    double theta = std::acos(1.0 / std::sqrt(double(nl + 2 - t)));
    Matrix rot(2, 2);
    rot << std::cos(theta), -std::sin(theta), std::sin(theta), std::cos(theta);
    if (t == 1) {
      w.emplace_back(std::vector<int>{clock}, rot);
    } else {
      Matrix gate = Matrix::Identity(4, 4);
      gate.block(2, 2, 2, 2) = rot;
      w.emplace_back(std::vector<int>{clock + t - 2, clock + t - 1}, gate);
    }
  }

  // Classical-basis tracker used to resolve multi-qubit gate controls.
  std::vector<std::optional<bool>> val(n_work, false);
  for (int q = 0; q < circ.n_proof; ++q) val[q] = x[q];

  auto track_single = [&](int q, const Matrix& u) {
    if (!val[q].has_value()) return;
    Vector col = u.col(*val[q] ? 1 : 0);
    if (std::abs(col[0]) > 1.0 - 1e-12)
      val[q] = false;
    else if (std::abs(col[1]) > 1.0 - 1e-12)
      val[q] = true;
    else
      val[q] = std::nullopt;
  };

  for (int t = 1; t <= nl; ++t) {
    const auto& gate = circ.gates[t - 1];
    if (gate.arity() == 1) {
      Matrix ctrl = Matrix::Identity(4, 4);
      ctrl.block(2, 2, 2, 2) = gate.matrix;
      w.emplace_back(std::vector<int>{clock + t - 1, gate.qubits[0]}, ctrl);
      track_single(gate.qubits[0], gate.matrix);
      continue;
    }
    // Two-qubit gate: must be a controlled 1-qubit gate whose control is in a
    // known basis state at this time step.
    const Matrix& m = gate.matrix;
    auto block = [&](int r, int c) { return m.block(2 * r, 2 * c, 2, 2); };
    bool ctrl_first = block(0, 1).cwiseAbs().maxCoeff() < 1e-12 &&
                      block(1, 0).cwiseAbs().maxCoeff() < 1e-12 &&
                      (Matrix(block(0, 0)) - Matrix::Identity(2, 2)).cwiseAbs().maxCoeff() < 1e-12;
    // Control on the second qubit: entries factor as I (x) |0><0| + W (x) |1><1|.
    Matrix w00(2, 2), w11(2, 2);
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) {
        w00(i, j) = m(2 * i, 2 * j);
        w11(i, j) = m(2 * i + 1, 2 * j + 1);
      }
    bool ctrl_second = true;
    for (int i = 0; i < 4 && ctrl_second; ++i)
      for (int j = 0; j < 4; ++j)
        if ((i % 2) != (j % 2) && std::abs(m(i, j)) > 1e-12) {
          ctrl_second = false;
          break;
        }
    ctrl_second = ctrl_second && (w00 - Matrix::Identity(2, 2)).cwiseAbs().maxCoeff() < 1e-12;

    int control, target;
    Matrix applied;
    if (ctrl_first) {
      control = gate.qubits[0];
      target = gate.qubits[1];
      applied = block(1, 1);
    } else if (ctrl_second) {
      control = gate.qubits[1];
      target = gate.qubits[0];
      applied = w11;
    } else {
      throw std::invalid_argument("history_prep_circuit: gate is not a controlled 1-qubit gate");
    }
    if (!val[control].has_value())
      throw std::invalid_argument("history_prep_circuit: control qubit not in a classical basis state");
    if (*val[control]) {
      Matrix ctrl = Matrix::Identity(4, 4);
      ctrl.block(2, 2, 2, 2) = applied;
      w.emplace_back(std::vector<int>{clock + t - 1, target}, ctrl);
      track_single(target, applied);
    }
    // Control value 0: the gate acts as identity on every reachable branch.
  }
  return w;
}

}  // namespace gscon
