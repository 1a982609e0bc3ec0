// Command-line front end. Talks to the library exclusively through the C API
// in gscon.h; exit codes are 0 yes/accept, 1 usage or I/O error,
// 2 no/reject, 3 indeterminate.
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "gscon.h"

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text << "\n";
    return;
  }
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << text << "\n";
}

struct OwnedString {
  char* ptr = nullptr;
  ~OwnedString() { gscon_string_free(ptr); }
  std::string str() const { return ptr ? std::string(ptr) : std::string(); }
};

[[noreturn]] void fail(const std::string& msg) {
  std::cerr << "error: " << msg << "\n";
  std::exit(1);
}

void require_ok(int rc) {
  if (rc != GSCON_OK) fail(gscon_last_error());
}

// Extracts the value of a top-level key from a flat JSON row; good enough for
// assembling CSV from the library's row objects.
std::string json_field(const std::string& row, const std::string& key) {
  auto pos = row.find("\"" + key + "\"");
  if (pos == std::string::npos) fail("missing field " + key);
  pos = row.find(':', pos);
  auto end = row.find_first_of(",}", pos);
  std::string value = row.substr(pos + 1, end - pos - 1);
  while (!value.empty() && (value.front() == ' ' || value.front() == '"' || value.front() == '\n'))
    value.erase(value.begin());
  while (!value.empty() && (value.back() == ' ' || value.back() == '"' || value.back() == '\n'))
    value.pop_back();
  return value;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"ground-state connectivity toolkit"};
  app.require_subcommand(1);

  // staircase
  auto* stair = app.add_subcommand("staircase", "low-overlap |000> -> |111> sequences");
  std::vector<double> deltas;
  std::string stair_out, seq_out, format = "csv";
  stair->add_option("--delta", deltas, "overlap budget(s), each in (0, 1/2)")->required();
  stair->add_option("--out", stair_out, "output path (default stdout)");
  stair->add_option("--seq-out", seq_out, "write the last sequence as witness JSON");
  stair->add_option("--format", format, "csv or json")->check(CLI::IsMember({"csv", "json"}));

  // reduce-stconn
  auto* reduce = app.add_subcommand("reduce-stconn", "3-CNF reconfiguration to traversal instance");
  std::string cnf_path, x_bits, y_bits, inst_out, wit_out;
  reduce->add_option("--cnf", cnf_path, "DIMACS file")->required();
  reduce->add_option("--x", x_bits, "start assignment bits")->required();
  reduce->add_option("--y", y_bits, "target assignment bits")->required();
  reduce->add_option("--out", inst_out, "instance JSON path (default stdout)");
  reduce->add_option("--emit-witness", wit_out, "witness JSON path (when connected)");

  // verify
  auto* verify = app.add_subcommand("verify", "check a witness against an instance");
  std::string v_inst, v_wit, v_report;
  verify->add_option("--instance", v_inst)->required();
  verify->add_option("--witness", v_wit)->required();
  verify->add_option("--report", v_report, "report JSON path (default stdout)");

  // qcma-sim
  auto* qcma = app.add_subcommand("qcma-sim", "pseudo-net proof protocol, simulated exactly");
  std::string q_inst, q_proof, q_report, q_wit;
  qcma->add_option("--instance", q_inst)->required();
  qcma->add_option("--proof", q_proof, "pseudo-net proof JSON");
  qcma->add_option("--from-witness", q_wit, "snap an explicit witness into a proof first");
  qcma->add_option("--report", q_report, "report JSON path (default stdout)");

  // pspace-search
  auto* pspace = app.add_subcommand("pspace-search", "single-qubit net search");
  std::string p_inst, p_report;
  double p_eps = 0.0;
  std::uint64_t p_nodes = 0;
  pspace->add_option("--instance", p_inst)->required();
  pspace->add_option("--net-eps", p_eps, "net resolution override (default from instance)");
  pspace->add_option("--max-nodes", p_nodes, "search node budget");
  pspace->add_option("--report", p_report, "report JSON path (default stdout)");

  // korth
  auto* korth = app.add_subcommand("korth", "k-orthogonality of two states");
  std::string k_psi, k_phi;
  int k_val = 1;
  double k_tol = 1e-9;
  korth->add_option("--psi", k_psi, "state JSON")->required();
  korth->add_option("--phi", k_phi, "state JSON")->required();
  korth->add_option("-k,--k", k_val)->required();
  korth->add_option("--tol", k_tol);

  // net-test
  auto* nettest = app.add_subcommand("net-test", "single-qubit net coverage check");
  double n_eps = 0.1;
  int n_samples = 1000;
  std::uint64_t n_seed = 1;
  std::string n_report;
  nettest->add_option("--eps", n_eps)->required();
  nettest->add_option("--samples", n_samples);
  nettest->add_option("--seed", n_seed);
  nettest->add_option("--report", n_report, "report JSON path (default stdout)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (stair->parsed()) {
      std::ostringstream csv;
      csv << "delta,m,max_overlap,final_distance";
      std::ostringstream rows_json;
      rows_json << "[";
      for (std::size_t i = 0; i < deltas.size(); ++i) {
        OwnedString row, seq;
        require_ok(gscon_staircase(deltas[i], &row.ptr,
                                   (!seq_out.empty() && i + 1 == deltas.size()) ? &seq.ptr : nullptr));
        csv << "\n"
            << json_field(row.str(), "delta") << "," << json_field(row.str(), "m") << ","
            << json_field(row.str(), "max_overlap") << "," << json_field(row.str(), "final_distance");
        rows_json << (i ? ",\n" : "\n") << row.str();
        if (seq.ptr) write_output(seq_out, seq.str());
      }
      rows_json << "\n]";
      write_output(stair_out, format == "csv" ? csv.str() : rows_json.str());
      return 0;
    }

    if (reduce->parsed()) {
      int connected = 0;
      OwnedString inst_json, wit_json;
      require_ok(gscon_reduce_stconn(read_file(cnf_path).c_str(), x_bits.c_str(), y_bits.c_str(),
                                     wit_out.empty() ? 0 : 1, &connected, &inst_json.ptr,
                                     &wit_json.ptr));
      write_output(inst_out, inst_json.str());
      if (connected && wit_json.ptr && !wit_out.empty()) write_output(wit_out, wit_json.str());
      return connected ? 0 : 2;
    }

    if (verify->parsed()) {
      gscon_instance* inst = nullptr;
      gscon_witness* wit = nullptr;
      require_ok(gscon_instance_from_json(read_file(v_inst).c_str(), &inst));
      require_ok(gscon_witness_from_json(read_file(v_wit).c_str(), &wit));
      int verdict = 0;
      OwnedString report;
      int rc = gscon_verify(inst, wit, &verdict, &report.ptr);
      gscon_witness_free(wit);
      gscon_instance_free(inst);
      require_ok(rc);
      write_output(v_report, report.str());
      return verdict;
    }

    if (qcma->parsed()) {
      gscon_instance* inst = nullptr;
      require_ok(gscon_instance_from_json(read_file(q_inst).c_str(), &inst));
      std::string proof_text;
      if (!q_wit.empty()) {
        gscon_witness* wit = nullptr;
        require_ok(gscon_witness_from_json(read_file(q_wit).c_str(), &wit));
        OwnedString proof;
        int rc = gscon_qcma_make_proof(inst, wit, &proof.ptr);
        gscon_witness_free(wit);
        if (rc != GSCON_OK) {
          gscon_instance_free(inst);
          fail(gscon_last_error());
        }
        proof_text = proof.str();
      } else if (!q_proof.empty()) {
        proof_text = read_file(q_proof);
      } else {
        gscon_instance_free(inst);
        fail("qcma-sim needs --proof or --from-witness");
      }
      int verdict = 0;
      OwnedString report;
      int rc = gscon_qcma_sim(inst, proof_text.c_str(), &verdict, &report.ptr);
      gscon_instance_free(inst);
      require_ok(rc);
      write_output(q_report, report.str());
      return verdict;
    }

    if (pspace->parsed()) {
      gscon_instance* inst = nullptr;
      require_ok(gscon_instance_from_json(read_file(p_inst).c_str(), &inst));
      int verdict = 0;
      OwnedString report;
      int rc = gscon_pspace_search(inst, p_eps, p_nodes, &verdict, &report.ptr);
      gscon_instance_free(inst);
      require_ok(rc);
      write_output(p_report, report.str());
      return verdict;
    }

    if (korth->parsed()) {
      int is_korth = 0;
      require_ok(gscon_korth_states(read_file(k_psi).c_str(), read_file(k_phi).c_str(), k_val,
                                    k_tol, &is_korth));
      std::cout << (is_korth ? "k-orthogonal" : "not k-orthogonal") << "\n";
      return is_korth ? 0 : 2;
    }

    if (nettest->parsed()) {
      int all_ok = 0;
      OwnedString report;
      require_ok(gscon_net_test(n_eps, n_samples, n_seed, &all_ok, &report.ptr));
      write_output(n_report, report.str());
      return all_ok ? 0 : 2;
    }
  } catch (const std::exception& e) {
    fail(e.what());
  }
  return 1;
}
