// Writes the toy instance fixture suite consumed by the acceptance run:
// twenty small l = 1 instances with analytically settled accept/reject
// status, as JSON files plus a manifest.
#include <filesystem>
#include <fstream>
#include <iostream>
#include <numbers>

#include "gscon/json_io.hpp"
#include "gscon/reductions.hpp"

using namespace gscon;

namespace {

struct Fixture {
  std::string name;
  std::string expect;  // "accept" or "reject"
  GsconInstance inst;
};

LocalHamiltonian zero_ham(int n) {
  return LocalHamiltonian(n, {LocalOperator({0}, Matrix::Zero(2, 2))});
}

LocalHamiltonian diag_penalties(int n, const std::vector<std::uint64_t>& penalized) {
  std::vector<LocalOperator> terms;
  std::vector<int> all(n);
  for (int q = 0; q < n; ++q) all[q] = q;
  for (auto z : penalized) {
    Matrix m = Matrix::Zero(std::int64_t(1) << n, std::int64_t(1) << n);
    m(static_cast<std::int64_t>(z), static_cast<std::int64_t>(z)) = 1;
    terms.emplace_back(all, std::move(m));
  }
  return LocalHamiltonian(n, std::move(terms));
}

Matrix rx(double theta) {
  Matrix m(2, 2);
  double c = std::cos(theta / 2), s = std::sin(theta / 2);
  m << c, Complex(0, -s), Complex(0, -s), c;
  return m;
}

StateVector rotated_basis(int n, std::uint64_t index, int qubit, double theta) {
  return apply_local(StateVector::basis(n, index), LocalOperator({qubit}, rx(theta)));
}

}  // namespace

int main(int argc, char** argv) {
  std::filesystem::path dir = argc > 1 ? argv[1] : "tests/fixtures";
  std::filesystem::create_directories(dir);

  StateVector q0 = StateVector::from_bits("0"), q1 = StateVector::from_bits("1");
  StateVector b00 = StateVector::from_bits("00"), b01 = StateVector::from_bits("01");
  StateVector b11 = StateVector::from_bits("11");

  Cnf3 single;  // (x1 v x2 v x2): satisfying assignments 01, 10, 11
  single.num_vars = 2;
  single.clauses.push_back(Clause3{{0, 1, 1}, {false, false, false}});

  Cnf3 pair = single;  // adds (not x1 v not x1 v not x2): 11 drops out
  pair.clauses.push_back(Clause3{{0, 0, 1}, {true, true, true}});

  std::vector<Fixture> fixtures;
  auto add = [&](std::string name, std::string expect, GsconInstance inst) {
    fixtures.push_back(Fixture{std::move(name), std::move(expect), std::move(inst)});
  };

  // 1-2: endpoints coincide.
  add("same_h0", "accept", GsconInstance(zero_ham(1), 1, 0, 0.5, 0, 0.5, 0.4, 1, 1, q0, q0));
  {
    Matrix p1 = Matrix::Zero(2, 2);
    p1(1, 1) = 1;
    add("same_penalized", "accept",
        GsconInstance(LocalHamiltonian(1, {LocalOperator({0}, p1)}), 1, 0, 0.5, 0, 0.5, 0.4, 1, 2,
                      q0, q0));
  }

  // 3-4: single flip, with and without budget.
  add("flip_h0_m1", "accept", GsconInstance(zero_ham(1), 1, 0, 0.5, 0, 0.5, 0.4, 1, 1, q0, q1));
  add("flip_h0_m0", "reject", GsconInstance(zero_ham(1), 1, 0, 0.5, 0, 0.5, 0.4, 1, 0, q0, q1));

  // 5: penalty on an untouched qubit.
  {
    Matrix p1 = Matrix::Zero(2, 2);
    p1(1, 1) = 1;
    add("spectator_penalty", "accept",
        GsconInstance(LocalHamiltonian(2, {LocalOperator({0}, p1)}), 1, 0, 0.5, 0, 0.5, 0.4, 1, 1,
                      b00, b01));
  }

  // 6: the 2-qubit 1-local wall (eta2 = (1/(4m))^2 at m = 3).
  add("hamming_wall", "reject",
      GsconInstance(diag_penalties(2, {1, 2}), 2, 0, 1.0 / 144, 0, 0.25, 1.0 / 144, 1, 3, b00, b11));

  // 7-10: reconfiguration instances over two variables.
  add("stconn_connected", "accept",
      stconn_to_gscon(single, parse_bitstring("10"), parse_bitstring("01")));
  add("stconn_disconnected", "reject",
      stconn_to_gscon(pair, parse_bitstring("10"), parse_bitstring("01")));
  add("stconn_one_flip", "accept",
      stconn_to_gscon(single, parse_bitstring("11"), parse_bitstring("10")));
  add("stconn_same", "accept",
      stconn_to_gscon(single, parse_bitstring("10"), parse_bitstring("10")));

  // 11: wide proximity window.
  add("loose_target", "accept",
      GsconInstance(zero_ham(1), 1, 0, 0.2, 0.5, 1.0, 0.2, 1, 1, q0, q1));

  // 12: rotated single-qubit target, reachable exactly from the move set.
  add("rotated_target", "accept",
      GsconInstance(zero_ham(1), 1, 0, 0.5, 0.05, 0.5, 0.3, 1, 1, q0,
                    rotated_basis(1, 0, 0, std::numbers::pi / 4)));

  // 13-14: two flips against the length budget.
  add("two_flips_m1", "reject", GsconInstance(zero_ham(2), 1, 0, 0.5, 0, 0.25, 0.25, 1, 1, b00, b11));
  add("two_flips_m2", "accept", GsconInstance(zero_ham(2), 1, 0, 0.5, 0, 0.25, 0.25, 1, 2, b00, b11));

  // 15-17: corner penalties.
  {
    Matrix p11 = Matrix::Zero(4, 4);
    p11(3, 3) = 1;
    add("free_corner", "accept",
        GsconInstance(LocalHamiltonian(2, {LocalOperator({0, 1}, p11)}), 2, 0, 0.5, 0, 0.25, 0.25,
                      1, 2, b00, b01));
  }
  add("blocked_corner_open_route", "accept",
      GsconInstance(diag_penalties(2, {1}), 2, 0, 0.5, 0, 0.25, 0.25, 1, 2, b00, b11));
  add("blocked_both_routes", "reject",
      GsconInstance(diag_penalties(2, {1, 2}), 2, 0, 1.0 / 64, 0, 0.25, 1.0 / 64, 1, 2, b00, b11));

  // 18-19: three qubits.
  add("three_qubit_walk", "accept",
      GsconInstance(diag_penalties(3, {7}), 3, 0, 0.5, 0, 0.25, 0.25, 1, 2,
                    StateVector::from_bits("000"), StateVector::from_bits("011")));
  add("three_qubit_wall", "reject",
      GsconInstance(diag_penalties(3, {1, 2, 3, 4, 5, 6}), 3, 0, 1.0 / 144, 0, 0.25, 1.0 / 144, 1,
                    3, StateVector::from_bits("000"), StateVector::from_bits("111")));

  // 20: rotated target on one qubit of a two-qubit system.
  {
    Matrix p1 = Matrix::Zero(2, 2);
    p1(1, 1) = 1;
    add("rotated_target_2q", "accept",
        GsconInstance(LocalHamiltonian(2, {LocalOperator({0}, p1)}), 1, 0, 0.5, 0.05, 0.5, 0.3, 1,
                      1, b00, rotated_basis(2, 0, 1, std::numbers::pi / 4)));
  }

  std::string manifest = "[\n";
  for (std::size_t i = 0; i < fixtures.size(); ++i) {
    const auto& f = fixtures[i];
    std::ofstream out(dir / (f.name + ".json"));
    out << instance_to_json(f.inst) << "\n";
    manifest += "  {\"file\": \"" + f.name + ".json\", \"expect\": \"" + f.expect + "\"}";
    manifest += (i + 1 < fixtures.size()) ? ",\n" : "\n";
  }
  manifest += "]\n";
  std::ofstream mf(dir / "manifest.json");
  mf << manifest;

  std::cout << "wrote " << fixtures.size() << " fixtures to " << dir << "\n";
  return 0;
}
