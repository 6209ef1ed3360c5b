#include "tribo/abelian.hpp"

#include <algorithm>
#include <limits>
#include <set>

#include "tribo/error.hpp"
#include "tribo/parallel.hpp"

namespace tribo {
namespace {

// Grows as far as the scan could reach, but never past the buffer maximum:
// running out of buffer surfaces as a SaturationFailure from the scan.
void grow_for_scan(WordBuffer& buffer, std::size_t n, const SaturationRule& rule) {
  buffer.grow_to(std::min(rule.buffer_length_for(n), buffer.max_length()));
}

BalanceRow balance_row(const FactorScanner& scanner, std::size_t n, const SaturationRule& rule) {
  const FactorScan scan = scanner.scan(n, rule);
  const WordBuffer& buffer = scanner.buffer();
  BalanceRow row;
  row.n = n;
  row.rho = scanner.parikh_set(scan).rho();
  row.max_imbalance.assign(buffer.alphabet_size(), 0);
  for (std::size_t letter = 0; letter < buffer.alphabet_size(); ++letter) {
    std::int64_t lo = std::numeric_limits<std::int64_t>::max();
    std::int64_t hi = std::numeric_limits<std::int64_t>::min();
    for (std::size_t pos : scan.first_positions) {
      const auto c = buffer.window_count(static_cast<Symbol>(letter), pos, n);
      lo = std::min(lo, c);
      hi = std::max(hi, c);
    }
    row.max_imbalance[letter] = scan.first_positions.empty() ? 0 : hi - lo;
  }
  return row;
}

}  // namespace

ParikhSet parikh_set(WordBuffer& buffer, std::size_t n, const SaturationRule& rule) {
  if (n < 1) {
    throw InvalidInput("factor length must be >= 1");
  }
  grow_for_scan(buffer, n, rule);
  const FactorScanner scanner(buffer);
  return scanner.parikh_set(n, rule);
}

std::size_t abelian_complexity(WordBuffer& buffer, std::size_t n, const SaturationRule& rule) {
  return parikh_set(buffer, n, rule).rho();
}

std::vector<std::size_t> abelian_complexity_range(WordBuffer& buffer, std::size_t from, std::size_t to,
                                                  const SaturationRule& rule, unsigned threads) {
  if (from < 1 || to < from) {
    throw InvalidInput("length range must satisfy 1 <= from <= to");
  }
  grow_for_scan(buffer, to, rule);
  const FactorScanner scanner(buffer);
  std::vector<std::size_t> rho(to - from + 1, 0);
  parallel_for(rho.size(), threads, [&](std::size_t i) { rho[i] = scanner.parikh_set(from + i, rule).rho(); });
  return rho;
}

std::int64_t BalanceRow::overall() const {
  return max_imbalance.empty() ? 0 : *std::max_element(max_imbalance.begin(), max_imbalance.end());
}

std::vector<BalanceRow> balance_profile(WordBuffer& buffer, std::size_t max_len, const SaturationRule& rule,
                                        unsigned threads) {
  if (max_len < 1) {
    throw InvalidInput("profile length must be >= 1");
  }
  grow_for_scan(buffer, max_len, rule);
  const FactorScanner scanner(buffer);
  std::vector<BalanceRow> rows(max_len);
  parallel_for(max_len, threads, [&](std::size_t i) { rows[i] = balance_row(scanner, i + 1, rule); });
  return rows;
}

std::string balance_profile_csv(const std::vector<BalanceRow>& rows, std::size_t alphabet_size) {
  std::string out = "n,rho";
  for (std::size_t a = 0; a < alphabet_size; ++a) {
    out += ",max_imbalance_" + std::to_string(a);
  }
  out += "\n";
  for (const auto& row : rows) {
    out += std::to_string(row.n) + "," + std::to_string(row.rho);
    for (auto v : row.max_imbalance) {
      out += "," + std::to_string(v);
    }
    out += "\n";
  }
  return out;
}

std::string BalanceWitness::csv_header() { return "letter,length,pos_u,pos_v,count_u,count_v"; }

std::string BalanceWitness::csv_row() const {
  return std::to_string(letter) + "," + std::to_string(length) + "," + std::to_string(pos_u) + "," +
         std::to_string(pos_v) + "," + std::to_string(count_u) + "," + std::to_string(count_v);
}

BalanceWitness verify_witness(const WordBuffer& buffer, Symbol letter, std::size_t pos_u, std::size_t pos_v,
                              std::size_t len) {
  if (letter >= buffer.alphabet_size()) {
    throw InvalidInput("letter outside alphabet");
  }
  BalanceWitness w;
  w.letter = letter;
  w.length = len;
  w.pos_u = pos_u;
  w.pos_v = pos_v;
  w.count_u = window_parikh(buffer, pos_u, len)[letter];
  w.count_v = window_parikh(buffer, pos_v, len)[letter];
  w.diff = w.count_u > w.count_v ? w.count_u - w.count_v : w.count_v - w.count_u;
  return w;
}

std::optional<BalanceWitness> imbalance_witness_search(const WordBuffer& buffer, Symbol letter,
                                                       std::int64_t target_diff, std::size_t max_len,
                                                       std::size_t scan_len) {
  if (letter >= buffer.alphabet_size()) {
    throw InvalidInput("letter outside alphabet");
  }
  if (scan_len > buffer.size()) {
    throw RangeError("scan length " + std::to_string(scan_len) + " exceeds buffer length " +
                     std::to_string(buffer.size()));
  }
  for (std::size_t n = 1; n <= std::min(max_len, scan_len); ++n) {
    std::int64_t lo = std::numeric_limits<std::int64_t>::max();
    std::int64_t hi = std::numeric_limits<std::int64_t>::min();
    std::size_t lo_pos = 0, hi_pos = 0;
    for (std::size_t p = 0; p + n <= scan_len; ++p) {
      const auto c = buffer.window_count(letter, p, n);
      if (c < lo) {
        lo = c;
        lo_pos = p;
      }
      if (c > hi) {
        hi = c;
        hi_pos = p;
      }
    }
    if (hi - lo >= target_diff) {
      return BalanceWitness{letter, n, hi_pos, lo_pos, hi, lo, hi - lo};
    }
  }
  return std::nullopt;
}

bool coordinate_interval_check(const ParikhSet& set) {
  if (set.vectors.empty()) {
    return true;
  }
  for (std::size_t i = 0; i < set.vectors.front().size(); ++i) {
    std::set<std::int64_t> values;
    for (const auto& v : set.vectors) {
      values.insert(v[i]);
    }
    const auto span = *values.rbegin() - *values.begin() + 1;
    if (span != static_cast<std::int64_t>(values.size())) {
      return false;
    }
  }
  return true;
}

bool prefix_balance_check(WordBuffer& buffer, std::size_t n, const SaturationRule& rule) {
  if (n < 1) {
    throw InvalidInput("factor length must be >= 1");
  }
  grow_for_scan(buffer, n, rule);
  const FactorScanner scanner(buffer);
  const FactorScan scan = scanner.scan(n, rule);
  for (std::size_t letter = 0; letter < buffer.alphabet_size(); ++letter) {
    const auto prefix = buffer.window_count(static_cast<Symbol>(letter), 0, n);
    for (std::size_t pos : scan.first_positions) {
      const auto c = buffer.window_count(static_cast<Symbol>(letter), pos, n);
      if (c > prefix + 1 || c < prefix - 1) {
        return false;
      }
    }
  }
  return true;
}

std::string to_string(DesubstitutionForm form) {
  switch (form) {
    case DesubstitutionForm::kPlain:
      return "PLAIN";
    case DesubstitutionForm::kDrop0:
      return "DROP0";
    case DesubstitutionForm::kAppend0:
      return "APPEND0";
    case DesubstitutionForm::kDrop0Append0:
      return "DROP0_APPEND0";
  }
  return "?";
}

namespace {

// Cuts U into tau-blocks without checking that the preimage is a factor.
// Returns nullopt when some 1 or 2 is not preceded by 0, or a symbol is > 2.
std::optional<Desubstitution> parse_blocks(WordView factor) {
  Word word;
  word.reserve(factor.size() + 1);
  const bool drop0 = !factor.empty() && (factor.front() == 1 || factor.front() == 2);
  if (drop0) {
    word.push_back(0);
  }
  word.insert(word.end(), factor.begin(), factor.end());

  Desubstitution d;
  bool append0 = false;
  std::size_t i = 0;
  while (i < word.size()) {
    if (word[i] != 0) {
      return std::nullopt;
    }
    if (i + 1 == word.size()) {
      append0 = true;
      break;
    }
    const Symbol next = word[i + 1];
    if (next == 1) {
      d.u.push_back(0);
      i += 2;
    } else if (next == 2) {
      d.u.push_back(1);
      i += 2;
    } else if (next == 0) {
      d.u.push_back(2);
      i += 1;
    } else {
      return std::nullopt;
    }
  }
  if (drop0 && append0) {
    d.form = DesubstitutionForm::kDrop0Append0;
    d.delta = 0;
  } else if (drop0) {
    d.form = DesubstitutionForm::kDrop0;
    d.delta = -1;
  } else if (append0) {
    d.form = DesubstitutionForm::kAppend0;
    d.delta = 1;
  } else {
    d.form = DesubstitutionForm::kPlain;
    d.delta = 0;
  }
  return d;
}

bool is_short_tribonacci_factor(WordView w) {
  static const std::set<Word> kShort = {{}, {0}, {1}, {2}, {0, 0}, {0, 1}, {0, 2}, {1, 0}, {2, 0}};
  return kShort.contains(Word(w.begin(), w.end()));
}

}  // namespace

bool is_tribonacci_factor(WordView word) {
  Word current(word.begin(), word.end());
  while (current.size() >= 3) {
    auto d = parse_blocks(current);
    if (!d) {
      return false;
    }
    current = std::move(d->u);
  }
  return is_short_tribonacci_factor(current);
}

Desubstitution desubstitute(WordView factor) {
  if (factor.empty()) {
    throw InvalidInput("desubstitution needs a non-empty factor");
  }
  auto d = parse_blocks(factor);
  if (!d || !is_tribonacci_factor(d->u)) {
    throw NotAFactor("'" + format_word(factor) + "' is not a factor of the Tribonacci word");
  }
  return std::move(*d);
}

Word reconstruct(const Desubstitution& d) {
  Word out = tribonacci_morphism().apply(d.u);
  const bool drop0 = d.form == DesubstitutionForm::kDrop0 || d.form == DesubstitutionForm::kDrop0Append0;
  const bool append0 = d.form == DesubstitutionForm::kAppend0 || d.form == DesubstitutionForm::kDrop0Append0;
  if (drop0) {
    if (out.empty() || out.front() != 0) {
      throw InvalidInput("cannot drop a leading 0 from tau(u)");
    }
    out.erase(out.begin());
  }
  if (append0) {
    out.push_back(0);
  }
  return out;
}

}  // namespace tribo
