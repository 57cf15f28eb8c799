#pragma once

#include <string>
#include <vector>

#include "newtonian/serialize.hpp"

namespace newtonian {

enum class ClaimStatus { verified, refuted_at_desk_scale, claim_only };

std::string to_string(ClaimStatus status);

// Outcome of checking one claim of the framework against computation.
// `witnesses` carries counterexamples for refuted claims and representative
// confirmations otherwise.
struct ClaimResult {
  std::string claim_id;
  std::string reference;
  ClaimStatus status = ClaimStatus::verified;
  json witnesses = json::array();
};

// Runs every claim check at desk scale with fixed seeds; deterministic.
std::vector<ClaimResult> run_verification();

// Schema: [{claim_id, paper_ref, status, witnesses}, ...]
json ledger_json(const std::vector<ClaimResult>& results);

bool has_disagreement(const std::vector<ClaimResult>& results);

}  // namespace newtonian
