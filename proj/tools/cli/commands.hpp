#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>

#include "cli/options.hpp"

namespace tribo::cli {

// Each command writes its data (CSV or text) to `data` and human-readable
// summaries or progress to `diag`, and returns the process exit code.
// Invalid arguments throw UsageError.

int cmd_generate(const GlobalOptions& opts, const std::string& word_spec, std::int64_t length, std::ostream& data,
                 std::ostream& diag);

int cmd_rho(const GlobalOptions& opts, const std::string& word_spec, std::int64_t n_from, std::int64_t n_to,
            std::ostream& data, std::ostream& diag);

int cmd_balance(const GlobalOptions& opts, const std::string& word_spec, std::int64_t max_len, std::ostream& data,
                std::ostream& diag);

// Smallest-length imbalance witness for one letter within the first scan_len symbols.
int cmd_witness(const GlobalOptions& opts, const std::string& word_spec, std::int64_t letter, std::int64_t target_diff,
                std::int64_t max_len, std::int64_t scan_len, std::ostream& data, std::ostream& diag);

int cmd_discrepancy(const GlobalOptions& opts, std::int64_t letter, std::int64_t n_max, std::ostream& data,
                    std::ostream& diag);

int cmd_zeckendorf(const GlobalOptions& opts, std::int64_t n, std::ostream& data, std::ostream& diag);

int cmd_constants(const GlobalOptions& opts, std::ostream& data, std::ostream& diag);

int cmd_special(const GlobalOptions& opts, std::int64_t n_from, std::int64_t n_to, std::ostream& data,
                std::ostream& diag);

int cmd_verify(const GlobalOptions& opts, const std::string& suite, std::ostream& data, std::ostream& diag);

// Runs fn, mapping library exceptions onto exit codes and printing the
// message to diag.
template <typename Fn>
int run_guarded(std::ostream& diag, Fn&& fn);

}  // namespace tribo::cli

#include "cli/run_guarded.inl"
