#include "gscon/json_io.hpp"

#include <charconv>
#include <stdexcept>

#include "json.hpp"

namespace gscon {

using nlohmann::json;

std::string dtos(double v) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof(buf), v);
  if (res.ec != std::errc()) throw std::runtime_error("dtos: conversion failed");
  return std::string(buf, res.ptr);
}

double stod_exact(const std::string& s) {
  double v = 0;
  auto res = std::from_chars(s.data(), s.data() + s.size(), v);
  if (res.ec != std::errc() || res.ptr != s.data() + s.size())
    throw std::invalid_argument("stod_exact: bad decimal string '" + s + "'");
  return v;
}

namespace {

json complex_to_json(const Complex& c) { return json::array({dtos(c.real()), dtos(c.imag())}); }

Complex complex_from_json(const json& j) {
  if (!j.is_array() || j.size() != 2) throw std::invalid_argument("complex: expected [re, im]");
  return Complex(stod_exact(j[0].get<std::string>()), stod_exact(j[1].get<std::string>()));
}

json matrix_to_json(const Matrix& m) {
  json rows = json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(complex_to_json(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

Matrix matrix_from_json(const json& j) {
  if (!j.is_array() || j.empty()) throw std::invalid_argument("matrix: expected array of rows");
  auto rows = static_cast<Eigen::Index>(j.size());
  auto cols = static_cast<Eigen::Index>(j[0].size());
  Matrix m(rows, cols);
  for (Eigen::Index i = 0; i < rows; ++i) {
    if (static_cast<Eigen::Index>(j[i].size()) != cols)
      throw std::invalid_argument("matrix: ragged rows");
    for (Eigen::Index c = 0; c < cols; ++c) m(i, c) = complex_from_json(j[i][c]);
  }
  return m;
}

json amps_to_json(const Vector& v) {
  json out = json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(complex_to_json(v[i]));
  return out;
}

Vector amps_from_json(const json& j) {
  Vector v(static_cast<Eigen::Index>(j.size()));
  for (Eigen::Index i = 0; i < v.size(); ++i) v[i] = complex_from_json(j[i]);
  return v;
}

json op_to_json(const LocalOperator& op) {
  return json{{"qubits", op.qubits}, {"matrix", matrix_to_json(op.matrix)}};
}

LocalOperator op_from_json(const json& j) {
  std::vector<int> qubits = j.at("qubits").get<std::vector<int>>();
  if (j.contains("netIndex")) {
    auto raw = j.at("netIndex").get<std::vector<std::int64_t>>();
    if (raw.size() != 4) throw std::invalid_argument("op: netIndex needs 4 coordinates");
    if (qubits.size() != 1) throw std::invalid_argument("op: netIndex ops are single-qubit");
    SingleQubitNet net(stod_exact(j.at("eps").get<std::string>()));
    NetIndex idx;
    for (int i = 0; i < 4; ++i) idx.coords[i] = raw[i];
    return LocalOperator(qubits, net.element(idx));
  }
  return LocalOperator(qubits, matrix_from_json(j.at("matrix")));
}

}  // namespace

std::string instance_to_json(const GsconInstance& inst) {
  json terms = json::array();
  for (const auto& t : inst.ham.terms()) terms.push_back(op_to_json(t));
  json j{{"n", inst.n()},
         {"k", inst.k},
         {"l", inst.l},
         {"m", inst.m},
         {"eta1", dtos(inst.eta1)},
         {"eta2", dtos(inst.eta2)},
         {"eta3", dtos(inst.eta3)},
         {"eta4", dtos(inst.eta4)},
         {"delta", dtos(inst.delta)},
         {"terms", std::move(terms)},
         {"psi", amps_to_json(inst.psi.amps())},
         {"phi", amps_to_json(inst.phi.amps())}};
  return j.dump(2);
}

GsconInstance instance_from_json(const std::string& text) {
  json j = json::parse(text);
  int n = j.at("n").get<int>();
  std::vector<LocalOperator> terms;
  for (const auto& t : j.at("terms")) terms.push_back(op_from_json(t));
  return GsconInstance(LocalHamiltonian(n, std::move(terms)), j.at("k").get<int>(),
                       stod_exact(j.at("eta1").get<std::string>()),
                       stod_exact(j.at("eta2").get<std::string>()),
                       stod_exact(j.at("eta3").get<std::string>()),
                       stod_exact(j.at("eta4").get<std::string>()),
                       stod_exact(j.at("delta").get<std::string>()), j.at("l").get<int>(),
                       j.at("m").get<std::uint64_t>(),
                       StateVector(n, amps_from_json(j.at("psi"))),
                       StateVector(n, amps_from_json(j.at("phi"))));
}

std::string witness_to_json(const WitnessSequence& w) {
  json j = json::array();
  for (const auto& op : w.ops) j.push_back(op_to_json(op));
  return j.dump(2);
}

WitnessSequence witness_from_json(const std::string& text) {
  json j = json::parse(text);
  if (!j.is_array()) throw std::invalid_argument("witness: expected an array of ops");
  WitnessSequence w;
  for (const auto& o : j) w.ops.push_back(op_from_json(o));
  return w;
}

std::string state_to_json(const StateVector& s) {
  json j{{"n", s.n()}, {"amps", amps_to_json(s.amps())}};
  return j.dump(2);
}

StateVector state_from_json(const std::string& text) {
  json j = json::parse(text);
  return StateVector(j.at("n").get<int>(), amps_from_json(j.at("amps")));
}

std::string qcma_proof_to_json(const QcmaProof& proof) {
  json j = json::array();
  for (const auto& el : proof) {
    json coords = json::array();
    for (const auto& c : el.coords) coords.push_back(json::array({c[0], c[1]}));
    j.push_back(json{{"qubits", json::array({el.qubits[0], el.qubits[1]})}, {"coords", std::move(coords)}});
  }
  return j.dump(2);
}

QcmaProof qcma_proof_from_json(const std::string& text) {
  json j = json::parse(text);
  if (!j.is_array()) throw std::invalid_argument("qcma proof: expected an array");
  QcmaProof proof;
  for (const auto& el : j) {
    PseudoProofElement p;
    auto qs = el.at("qubits").get<std::vector<int>>();
    if (qs.size() != 2) throw std::invalid_argument("qcma proof: elements act on qubit pairs");
    p.qubits = {qs[0], qs[1]};
    for (const auto& c : el.at("coords")) {
      if (!c.is_array() || c.size() != 2) throw std::invalid_argument("qcma proof: bad coordinate");
      p.coords.push_back({c[0].get<std::int64_t>(), c[1].get<std::int64_t>()});
    }
    proof.push_back(std::move(p));
  }
  return proof;
}

std::string verify_report_to_json(const VerifyReport& rep) {
  json energies = json::array();
  for (double e : rep.per_step_energies) energies.push_back(dtos(e));
  json j{{"verdict", verdict_name(rep.verdict)},
         {"perStepEnergies", std::move(energies)},
         {"finalDistance", dtos(rep.final_distance)}};
  if (rep.first_violation) j["firstViolation"] = *rep.first_violation;
  return j.dump(2);
}

std::string qcma_result_to_json(const QcmaSimResult& res) {
  json energies = json::array();
  for (double e : res.step_energies) energies.push_back(dtos(e));
  json j{{"accepted", res.accepted},
         {"epsilon", dtos(res.epsilon)},
         {"energyThreshold", dtos(res.energy_threshold)},
         {"proximityThreshold", dtos(res.proximity_threshold)},
         {"stepEnergies", std::move(energies)},
         {"finalDistance", dtos(res.final_distance)}};
  if (res.rejected_at >= 0) j["rejectedAt"] = res.rejected_at;
  return j.dump(2);
}

std::string pspace_result_to_json(const PspaceResult& res) {
  json j{{"accepted", res.accepted},
         {"epsilon", dtos(res.epsilon)},
         {"energyThreshold", dtos(res.energy_threshold)},
         {"proximityThreshold", dtos(res.proximity_threshold)},
         {"nodesVisited", res.nodes_visited}};
  return j.dump(2);
}

std::string traversal_report_to_json(const TraversalReport& rep) {
  json overlaps = json::array();
  for (double o : rep.overlaps) overlaps.push_back(dtos(o));
  json j{{"m", rep.m},
         {"eps", dtos(rep.eps)},
         {"overlaps", std::move(overlaps)},
         {"maxOverlap", dtos(rep.max_overlap)},
         {"bound", dtos(rep.bound)},
         {"lemmaApplicable", rep.lemma_applicable},
         {"boundSatisfied", rep.bound_satisfied}};
  return j.dump(2);
}

std::string staircase_row_json(double delta, int m, double max_overlap, double final_distance) {
  json j{{"delta", dtos(delta)},
         {"m", m},
         {"max_overlap", dtos(max_overlap)},
         {"final_distance", dtos(final_distance)}};
  return j.dump(2);
}

}  // namespace gscon
