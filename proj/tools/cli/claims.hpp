#pragma once

#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "cli/options.hpp"

namespace tribo::cli {

enum class ClaimStatus { kPass, kFail, kSkipped };

std::string to_string(ClaimStatus status);

struct ClaimOutcome {
  bool pass = false;
  nlohmann::json observed;
  nlohmann::json expected;
};

struct Claim {
  std::string id;
  std::string description;
  std::function<ClaimOutcome(const GlobalOptions&)> run;
};

struct ClaimResult {
  std::string id;
  std::string description;
  ClaimStatus status = ClaimStatus::kFail;
  nlohmann::json observed;
  nlohmann::json expected;
  double runtime_ms = 0;
  std::string note;  // exception text for failed or skipped claims
};

struct VerificationReport {
  std::string suite;
  std::vector<ClaimResult> claims;

  bool all_passed() const;
  nlohmann::json to_json() const;
};

// Registered claims, in a fixed order.
const std::vector<Claim>& registered_claims();

// Runs one claim; saturation and buffer-limit errors mark it skipped, any
// other exception marks it failed.
ClaimResult run_claim(const Claim& claim, const GlobalOptions& opts);

// Throws UsageError for an unknown suite name. Prints one line per claim to diag.
VerificationReport run_suite(const std::string& suite, const GlobalOptions& opts, std::ostream& diag);

}  // namespace tribo::cli
