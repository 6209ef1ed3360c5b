#include "cli/commands.hpp"

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <fstream>
#include <ostream>

#include <json.hpp>

#include "cli/claims.hpp"
#include "tribo/abelian.hpp"
#include "tribo/numeration.hpp"
#include "tribo/parallel.hpp"
#include "tribo/spectral.hpp"
#include "tribo/special_factors.hpp"

namespace tribo::cli {
namespace {

std::size_t require_positive(std::int64_t value, const char* what) {
  if (value < 1) throw UsageError(std::string(what) + " must be >= 1");
  return static_cast<std::size_t>(value);
}

std::size_t require_non_negative(std::int64_t value, const char* what) {
  if (value < 0) throw UsageError(std::string(what) + " must be >= 0");
  return static_cast<std::size_t>(value);
}

void write_json(const GlobalOptions& opts, const nlohmann::json& doc) {
  if (!opts.json_path) return;
  std::ofstream out(*opts.json_path, std::ios::binary);
  if (!out) throw UsageError("cannot open " + *opts.json_path + " for writing");
  out << doc.dump(2) << "\n";
}

}  // namespace

Morphism parse_word_spec(const std::string& spec) {
  if (spec == "tribonacci") return tribonacci_morphism();
  constexpr std::string_view kPrefix = "mbonacci:";
  if (spec.rfind(kPrefix, 0) == 0) {
    const std::string digits = spec.substr(kPrefix.size());
    int m = 0;
    const auto [end, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), m);
    if (ec != std::errc{} || end != digits.data() + digits.size() || m < 2 ||
        m > static_cast<int>(kMaxAlphabetSize)) {
      throw UsageError("bad word spec '" + spec + "': m must be an integer in [2, 256]");
    }
    return mbonacci_morphism(m);
  }
  throw UsageError("bad word spec '" + spec + "' (expected tribonacci or mbonacci:<m>)");
}

std::string format_real(double value) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", value);
  return buf;
}

int cmd_generate(const GlobalOptions& opts, const std::string& word_spec, std::int64_t length, std::ostream& data,
                 std::ostream&) {
  const Morphism morphism = parse_word_spec(word_spec);
  const std::size_t len = require_positive(length, "length");
  const WordBuffer buffer = fixed_point_prefix(morphism, 0, len, opts.max_buffer);
  data << format_word(buffer.slice_view(0, len)) << "\n";
  return kExitOk;
}

int cmd_rho(const GlobalOptions& opts, const std::string& word_spec, std::int64_t n_from, std::int64_t n_to,
            std::ostream& data, std::ostream& diag) {
  const Morphism morphism = parse_word_spec(word_spec);
  const std::size_t from = require_positive(n_from, "n_from");
  const std::size_t to = require_positive(n_to, "n_to");
  if (from > to) throw UsageError("n_from must not exceed n_to");
  WordBuffer buffer(morphism, 0, opts.max_buffer);
  diag << "computing rho(n) for n = " << from << ".." << to << "\n";
  const auto rho = abelian_complexity_range(buffer, from, to, opts.saturation_rule(), opts.threads);
  data << "n,rho\n";
  for (std::size_t i = 0; i < rho.size(); ++i) data << from + i << "," << rho[i] << "\n";
  return kExitOk;
}

int cmd_balance(const GlobalOptions& opts, const std::string& word_spec, std::int64_t max_len, std::ostream& data,
                std::ostream& diag) {
  const Morphism morphism = parse_word_spec(word_spec);
  const std::size_t max_n = require_positive(max_len, "max_len");
  WordBuffer buffer(morphism, 0, opts.max_buffer);
  diag << "computing balance profile for n = 1.." << max_n << "\n";
  const auto rows = balance_profile(buffer, max_n, opts.saturation_rule(), opts.threads);
  data << balance_profile_csv(rows, morphism.alphabet_size());

  std::int64_t global = 0;
  std::size_t at = 0;
  for (const auto& row : rows) {
    if (row.overall() > global) {
      global = row.overall();
      at = row.n;
    }
  }
  const auto& last = rows.back().max_imbalance;
  diag << "global maximum imbalance: " << global << " (first reached at n = " << at << ")\n";
  diag << "per-letter imbalance at n = " << max_n << ":";
  for (std::size_t a = 0; a < last.size(); ++a) diag << " " << a << "=" << last[a];
  diag << "\n";

  nlohmann::json summary{{"word", word_spec}, {"max_len", max_n}, {"global_max", global}, {"first_reached_at", at}};
  summary["per_letter_at_max_len"] = last;
  write_json(opts, summary);
  return kExitOk;
}

int cmd_witness(const GlobalOptions& opts, const std::string& word_spec, std::int64_t letter, std::int64_t target_diff,
                std::int64_t max_len, std::int64_t scan_len, std::ostream& data, std::ostream& diag) {
  const Morphism morphism = parse_word_spec(word_spec);
  if (letter < 0 || letter >= static_cast<std::int64_t>(morphism.alphabet_size())) {
    throw UsageError("letter out of range for " + word_spec);
  }
  const std::size_t len_cap = require_positive(max_len, "max_len");
  const std::size_t scan = require_positive(scan_len, "scan_len");
  if (target_diff < 1) throw UsageError("target_diff must be >= 1");
  const WordBuffer buffer = fixed_point_prefix(morphism, 0, scan, opts.max_buffer);
  const auto witness =
      imbalance_witness_search(buffer, static_cast<Symbol>(letter), target_diff, len_cap, scan);
  if (!witness) {
    diag << "no window pair with imbalance >= " << target_diff << " up to length " << len_cap << "\n";
    return kExitClaimFailure;
  }
  data << BalanceWitness::csv_header() << "\n" << witness->csv_row() << "\n";
  diag << "imbalance " << witness->diff << " at length " << witness->length << "\n";
  return kExitOk;
}

int cmd_discrepancy(const GlobalOptions& opts, std::int64_t letter, std::int64_t n_max, std::ostream& data,
                    std::ostream& diag) {
  if (letter < 0 || letter > 2) throw UsageError("letter must be 0, 1 or 2");
  const std::size_t upto = require_non_negative(n_max, "n_max");
  const auto a = static_cast<std::size_t>(letter);
  const SpectralData sd = compute_spectral_data();
  const WordBuffer buffer = tribonacci_buffer(upto + 1, opts.max_buffer);

  data << "N,discrepancy\n";
  double lo = 0, hi = 0;
  for (std::size_t n = 0; n <= upto; ++n) {
    const double d = discrepancy_direct(buffer, n, a, sd);
    lo = std::min(lo, d);
    hi = std::max(hi, d);
    data << n << "," << format_real(d) << "\n";
  }
  const LetterBoundSpec& spec = tribonacci_bound_specs()[a];
  const bool inside = lo > spec.lower && hi < spec.upper;
  diag << "letter " << a << ": min " << format_real(lo) << ", max " << format_real(hi) << ", interval ("
       << format_real(spec.lower) << ", " << format_real(spec.upper) << ") "
       << (inside ? "contains" : "does NOT contain") << " the observed range\n";
  write_json(opts, {{"letter", a},
                    {"n_max", upto},
                    {"min", lo},
                    {"max", hi},
                    {"interval", {spec.lower, spec.upper}},
                    {"contained", inside}});
  return kExitOk;
}

int cmd_zeckendorf(const GlobalOptions&, std::int64_t n, std::ostream& data, std::ostream&) {
  const std::size_t value = require_non_negative(n, "N");
  data << zeckendorf_encode(value).to_string() << "\n";
  return kExitOk;
}

int cmd_constants(const GlobalOptions&, std::ostream& data, std::ostream&) {
  const SpectralData sd = compute_spectral_data();
  data << "beta=" << format_real(sd.beta) << "\n";
  data << "abs_alpha=" << format_real(sd.abs_alpha()) << "\n";
  data << "abs_a_alpha=" << format_real(sd.abs_a_alpha()) << "\n";
  for (std::size_t i = 0; i < 3; ++i) {
    data << "factor_i" << i << "=" << format_real(sd.factor_magnitude(i)) << "\n";
  }
  return kExitOk;
}

int cmd_special(const GlobalOptions& opts, std::int64_t n_from, std::int64_t n_to, std::ostream& data,
                std::ostream& diag) {
  const std::size_t from = require_positive(n_from, "n_from");
  const std::size_t to = require_positive(n_to, "n_to");
  if (from > to) throw UsageError("n_from must not exceed n_to");
  const SaturationRule rule = opts.saturation_rule();
  WordBuffer buffer = tribonacci_buffer(1, opts.max_buffer);
  buffer.grow_to(std::min(analyzer_buffer_length(to, rule), buffer.max_length()));
  const SpecialFactorAnalyzer analyzer(buffer, rule);

  diag << "analyzing right special factors for n = " << from << ".." << to << "\n";
  std::vector<std::string> rows(to - from + 1);
  parallel_for(rows.size(), opts.threads, [&](std::size_t i) {
    const std::size_t n = from + i;
    const SpecialFactorRecord record = analyzer.right_special_factor(n - 1);
    rows[i] = special_csv_row(record, analyzer.parikh_set(n).rho());
  });
  data << special_csv_header() << "\n";
  for (const auto& row : rows) data << row << "\n";
  return kExitOk;
}

int cmd_verify(const GlobalOptions& opts, const std::string& suite, std::ostream& data, std::ostream& diag) {
  const VerificationReport report = run_suite(suite, opts, diag);
  const nlohmann::json doc = report.to_json();
  write_json(opts, doc);
  for (const auto& c : report.claims) data << to_string(c.status) << " " << c.id << "\n";
  diag << (report.all_passed() ? "all claims passed" : "some claims did not pass") << "\n";
  return report.all_passed() ? kExitOk : kExitClaimFailure;
}

}  // namespace tribo::cli
