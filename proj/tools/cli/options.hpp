#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

#include "tribo/factor_scan.hpp"
#include "tribo/word.hpp"

namespace tribo::cli {

// Process exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitClaimFailure = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitSaturation = 3;

// Flags shared by every subcommand.
struct GlobalOptions {
  std::optional<std::string> out_path;
  std::optional<std::string> json_path;
  unsigned threads = 0;
  std::uint64_t seed = 0;
  std::size_t max_buffer = WordBuffer::kDefaultMaxLength;
  std::optional<std::size_t> scan_cap;

  SaturationRule saturation_rule() const {
    SaturationRule rule;
    rule.scan_cap = scan_cap;
    return rule;
  }
};

// Thrown for malformed arguments; maps to exit code 2.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// `tribonacci` or `mbonacci:<m>`.
Morphism parse_word_spec(const std::string& spec);

// 12 significant digits.
std::string format_real(double value);

}  // namespace tribo::cli
