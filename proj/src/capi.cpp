#include "gscon.h"

#include <cstring>
#include <string>

#include "gscon/json_io.hpp"
#include "gscon/korth.hpp"
#include "gscon/linalg.hpp"
#include "gscon/reductions.hpp"
#include "gscon/traversal.hpp"

#include "json.hpp"

namespace {

thread_local std::string g_last_error;

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

template <typename Fn>
int guarded(Fn&& fn) {
  try {
    fn();
    return GSCON_OK;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return GSCON_ERR;
  } catch (...) {
    g_last_error = "unknown error";
    return GSCON_ERR;
  }
}

}  // namespace

struct gscon_instance {
  gscon::GsconInstance value;
};

struct gscon_witness {
  gscon::WitnessSequence value;
};

extern "C" {

const char* gscon_last_error(void) { return g_last_error.c_str(); }

void gscon_string_free(char* s) { std::free(s); }

int gscon_instance_from_json(const char* json_text, gscon_instance** out) {
  return guarded([&] {
    if (!json_text || !out) throw std::invalid_argument("null argument");
    *out = new gscon_instance{gscon::instance_from_json(json_text)};
  });
}

int gscon_instance_to_json(const gscon_instance* inst, char** json_out) {
  return guarded([&] {
    if (!inst || !json_out) throw std::invalid_argument("null argument");
    *json_out = dup_string(gscon::instance_to_json(inst->value));
  });
}

void gscon_instance_free(gscon_instance* inst) { delete inst; }

int gscon_witness_from_json(const char* json_text, gscon_witness** out) {
  return guarded([&] {
    if (!json_text || !out) throw std::invalid_argument("null argument");
    *out = new gscon_witness{gscon::witness_from_json(json_text)};
  });
}

int gscon_witness_to_json(const gscon_witness* w, char** json_out) {
  return guarded([&] {
    if (!w || !json_out) throw std::invalid_argument("null argument");
    *json_out = dup_string(gscon::witness_to_json(w->value));
  });
}

void gscon_witness_free(gscon_witness* w) { delete w; }

int gscon_verify(const gscon_instance* inst, const gscon_witness* w, int* verdict,
                 char** report_json) {
  return guarded([&] {
    if (!inst || !w || !verdict) throw std::invalid_argument("null argument");
    gscon::VerifyReport rep = gscon::verify_witness(inst->value, w->value);
    *verdict = gscon::verdict_exit_code(rep.verdict);
    if (report_json) *report_json = dup_string(gscon::verify_report_to_json(rep));
  });
}

int gscon_qcma_sim(const gscon_instance* inst, const char* proof_json, int* verdict,
                   char** report_json) {
  return guarded([&] {
    if (!inst || !proof_json || !verdict) throw std::invalid_argument("null argument");
    gscon::QcmaSimResult res =
        gscon::qcma_verifier_sim(inst->value, gscon::qcma_proof_from_json(proof_json));
    *verdict = res.accepted ? GSCON_VERDICT_YES : GSCON_VERDICT_NO;
    if (report_json) *report_json = dup_string(gscon::qcma_result_to_json(res));
  });
}

int gscon_qcma_make_proof(const gscon_instance* inst, const gscon_witness* w, char** proof_json) {
  return guarded([&] {
    if (!inst || !w || !proof_json) throw std::invalid_argument("null argument");
    *proof_json = dup_string(gscon::qcma_proof_to_json(gscon::make_qcma_proof(inst->value, w->value)));
  });
}

int gscon_pspace_search(const gscon_instance* inst, double net_eps, uint64_t max_nodes,
                        int* verdict, char** report_json) {
  return guarded([&] {
    if (!inst || !verdict) throw std::invalid_argument("null argument");
    gscon::SearchOptions opts;
    if (net_eps > 0) opts.net_eps = net_eps;
    if (max_nodes > 0) opts.max_nodes = max_nodes;
    gscon::PspaceResult res = gscon::pspace_search(inst->value, opts);
    *verdict = res.accepted ? GSCON_VERDICT_YES : GSCON_VERDICT_NO;
    if (report_json) *report_json = dup_string(gscon::pspace_result_to_json(res));
  });
}

int gscon_reduce_stconn(const char* dimacs_text, const char* x_bits, const char* y_bits,
                        int emit_witness, int* connected, char** instance_json,
                        char** witness_json) {
  return guarded([&] {
    if (!dimacs_text || !x_bits || !y_bits || !connected) throw std::invalid_argument("null argument");
    gscon::Cnf3 cnf = gscon::parse_dimacs(dimacs_text);
    auto x = gscon::parse_bitstring(x_bits);
    auto y = gscon::parse_bitstring(y_bits);
    gscon::GsconInstance inst = gscon::stconn_to_gscon(cnf, x, y);
    if (instance_json) *instance_json = dup_string(gscon::instance_to_json(inst));
    gscon::StconnResult bfs = gscon::stconn_bfs(cnf, x, y);
    *connected = bfs.connected ? 1 : 0;
    if (witness_json) *witness_json = nullptr;
    if (bfs.connected && emit_witness && witness_json) {
      gscon::WitnessSequence w = gscon::stconn_witness(cnf, bfs.path, inst.m);
      *witness_json = dup_string(gscon::witness_to_json(w));
    }
  });
}

int gscon_staircase(double delta, char** row_json, char** sequence_json) {
  return guarded([&] {
    if (!row_json) throw std::invalid_argument("null argument");
    gscon::StaircaseParams params(delta);
    auto seq = gscon::staircase_full(params);

    gscon::Matrix p000 = gscon::Matrix::Zero(8, 8), p111 = gscon::Matrix::Zero(8, 8);
    p000(0, 0) = 1;
    p111(7, 7) = 1;
    gscon::Projector pi_s(gscon::LocalOperator({0, 1, 2}, p000));
    gscon::Projector pi_t(gscon::LocalOperator({0, 1, 2}, p111));
    auto rep = gscon::traversal_report(gscon::StateVector::from_bits("000"),
                                       gscon::StateVector::from_bits("111"), seq, pi_s, pi_t);
    *row_json = dup_string(
        gscon::staircase_row_json(delta, rep.m, rep.max_overlap, rep.eps));
    if (sequence_json) {
      gscon::WitnessSequence w;
      w.ops = std::move(seq);
      *sequence_json = dup_string(gscon::witness_to_json(w));
    }
  });
}

int gscon_korth_states(const char* psi_json, const char* phi_json, int k, double tol,
                       int* is_korth) {
  return guarded([&] {
    if (!psi_json || !phi_json || !is_korth) throw std::invalid_argument("null argument");
    gscon::StateVector psi = gscon::state_from_json(psi_json);
    gscon::StateVector phi = gscon::state_from_json(phi_json);
    *is_korth = gscon::k_orth_states(psi, phi, k, tol > 0 ? tol : 1e-9) ? 1 : 0;
  });
}

int gscon_net_test(double eps, int samples, uint64_t seed, int* all_ok, char** report_json) {
  return guarded([&] {
    if (!all_ok) throw std::invalid_argument("null argument");
    if (samples < 1) throw std::invalid_argument("samples must be >= 1");
    gscon::SingleQubitNet net(eps);
    gscon::Rng rng(seed);
    double max_dist = 0.0;
    bool roundtrip_ok = true;
    for (int i = 0; i < samples; ++i) {
      gscon::Matrix u = gscon::haar_unitary(2, rng);
      gscon::NetIndex idx = net.snap(u);
      gscon::Matrix el = net.element(idx);
      max_dist = std::max(max_dist, gscon::spectral_norm(u - el));
      if (!(net.snap(el) == idx)) roundtrip_ok = false;
    }
    *all_ok = (max_dist <= eps && roundtrip_ok) ? 1 : 0;
    if (report_json) {
      nlohmann::json j{{"eps", gscon::dtos(eps)},
                       {"samples", samples},
                       {"maxDistance", gscon::dtos(max_dist)},
                       {"withinEps", max_dist <= eps},
                       {"roundtripExact", roundtrip_ok}};
      *report_json = dup_string(j.dump(2));
    }
  });
}

}  // extern "C"
