#pragma once

#include <string>

#include "gscon/instance.hpp"
#include "gscon/search.hpp"
#include "gscon/traversal.hpp"

namespace gscon {

/// Shortest decimal string that parses back to exactly the same double.
/// Every floating value in the JSON schemas travels as such a string, so
/// round trips are byte-stable.
std::string dtos(double v);
double stod_exact(const std::string& s);

std::string instance_to_json(const GsconInstance& inst);
GsconInstance instance_from_json(const std::string& text);

std::string witness_to_json(const WitnessSequence& w);
/// Accepts both explicit-matrix ops and net-index ops ({qubits, netIndex, eps}).
WitnessSequence witness_from_json(const std::string& text);

std::string state_to_json(const StateVector& s);
StateVector state_from_json(const std::string& text);

std::string qcma_proof_to_json(const QcmaProof& proof);
QcmaProof qcma_proof_from_json(const std::string& text);

std::string verify_report_to_json(const VerifyReport& rep);
std::string qcma_result_to_json(const QcmaSimResult& res);
std::string pspace_result_to_json(const PspaceResult& res);
std::string traversal_report_to_json(const TraversalReport& rep);

/// Sweep row for the staircase command (delta, m, max_overlap, final_distance).
std::string staircase_row_json(double delta, int m, double max_overlap, double final_distance);

}  // namespace gscon
