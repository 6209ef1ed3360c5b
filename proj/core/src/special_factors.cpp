#include "tribo/special_factors.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <unordered_map>

#include "tribo/error.hpp"
#include "tribo/numeration.hpp"
#include "tribo/parallel.hpp"

namespace tribo {
namespace {

void require_tribonacci_alphabet(const WordBuffer& buffer) {
  if (buffer.alphabet_size() != 3) {
    throw InvalidInput("special-factor analysis is defined for the three-letter Tribonacci word");
  }
}

// Groups factor occurrences by the window (pos + offset, len), comparing
// fingerprints first and symbols on every fingerprint hit. Returns, for
// each input position, the index of its group.
std::vector<std::size_t> group_by_window(const FactorScanner& scanner, const std::vector<std::size_t>& positions,
                                         std::size_t offset, std::size_t len, std::size_t& group_count) {
  std::unordered_map<Fingerprint, std::vector<std::size_t>, FingerprintHash> by_fp;
  std::vector<std::size_t> group_pos;  // representative window start of each group
  std::vector<std::size_t> group_of(positions.size());
  for (std::size_t i = 0; i < positions.size(); ++i) {
    const std::size_t start = positions[i] + offset;
    auto& candidates = by_fp[scanner.hasher().window(start, len)];
    std::size_t found = std::numeric_limits<std::size_t>::max();
    for (std::size_t g : candidates) {
      if (scanner.windows_equal(group_pos[g], start, len)) {
        found = g;
        break;
      }
    }
    if (found == std::numeric_limits<std::size_t>::max()) {
      found = group_pos.size();
      group_pos.push_back(start);
      candidates.push_back(found);
    }
    group_of[i] = found;
  }
  group_count = group_pos.size();
  return group_of;
}

std::vector<std::uint64_t> closed_form_values(std::size_t max_value, std::uint64_t minus) {
  std::vector<std::uint64_t> out;
  const auto& t = tribonacci_table();
  for (std::size_t m = 0; m + 2 < t.size(); ++m) {
    const std::uint64_t value = (t[m] + t[m + 2] - minus) / 2;
    if (value > max_value) break;
    out.push_back(value);
  }
  return out;
}

}  // namespace

bool EquivalenceRow::agree() const {
  return one_balanced == rho_is_3 && rho_is_3 == misses_b_set && misses_b_set == bispecial &&
         bispecial == closed_form;
}

std::vector<std::size_t> bispecial_lengths(std::size_t max_len) {
  std::vector<std::size_t> out;
  for (auto v : closed_form_values(max_len, 3)) out.push_back(static_cast<std::size_t>(v));
  return out;
}

bool rho3_closed_form(std::size_t n) {
  if (n < 1) {
    throw InvalidInput("n must be >= 1");
  }
  if (n == 1) return true;
  const auto values = closed_form_values(n, 1);
  return std::find(values.begin(), values.end(), n) != values.end();
}

CentralSet central_from(const SpecialFactorRecord& r) {
  CentralSet c;
  c.n = r.length + 1;
  for (std::size_t a = 0; a < 3; ++a) {
    c.vectors[a] = r.parikh;
    c.vectors[a][a] += 1;
  }
  return c;
}

BSet b_set_from(const SpecialFactorRecord& r) {
  BSet b;
  b.n = r.length + 1;
  for (std::size_t a = 0; a < 3; ++a) {
    // +1 everywhere except -1 at coordinate a.
    b.vectors[a] = r.parikh;
    for (std::size_t c = 0; c < 3; ++c) {
      b.vectors[a][c] += (c == a) ? -1 : 1;
    }
  }
  return b;
}

GeometryResult twelve_vector_geometry(const ParikhSet& psi, const CentralSet& central) {
  GeometryResult g;
  g.n = central.n;
  g.rho = psi.rho();

  // Offsets d with d_0 + d_1 + d_2 = 1 and max-norm distance <= 2 to every
  // unit vector, i.e. d in [-1, 2]^3.
  const ParikhVector& base_plus = central.vectors[0];
  ParikhVector base = base_plus;
  base[0] -= 1;
  for (std::int64_t a = -1; a <= 2; ++a) {
    for (std::int64_t b = -1; b <= 2; ++b) {
      const std::int64_t c = 1 - a - b;
      if (c < -1 || c > 2) continue;
      ParikhVector v = base + ParikhVector{a, b, c};
      bool close = true;
      for (const auto& u : central.vectors) close = close && max_norm_distance(u, v) <= 2;
      if (close) g.neighborhood.push_back(v);
    }
  }
  if (g.neighborhood.size() != 12) {
    throw InvariantViolation("neighborhood of Central(" + std::to_string(g.n) + ") has " +
                             std::to_string(g.neighborhood.size()) + " vectors, expected 12");
  }

  const std::size_t k = g.neighborhood.size();
  std::vector<std::uint32_t> adjacency(k, 0);
  for (std::size_t a = 0; a < k; ++a) {
    for (std::size_t b = 0; b < k; ++b) {
      if (a != b && max_norm_distance(g.neighborhood[a], g.neighborhood[b]) <= 2) adjacency[a] |= 1u << b;
    }
  }
  std::vector<std::uint32_t> admissible;
  for (std::uint32_t mask = 1; mask < (1u << k); ++mask) {
    bool ok = true;
    for (std::size_t a = 0; a < k && ok; ++a) {
      if (mask & (1u << a)) ok = ((mask & ~(1u << a)) & ~adjacency[a]) == 0;
    }
    if (ok) admissible.push_back(mask);
  }
  std::vector<std::uint32_t> maximal;
  for (auto mask : admissible) {
    bool is_max = true;
    for (std::size_t a = 0; a < k && is_max; ++a) {
      if (!(mask & (1u << a)) && (adjacency[a] & mask) == mask) is_max = false;
    }
    if (is_max) maximal.push_back(mask);
  }
  std::sort(maximal.begin(), maximal.end(), [](std::uint32_t x, std::uint32_t y) {
    return std::popcount(x) != std::popcount(y) ? std::popcount(x) > std::popcount(y) : x < y;
  });
  std::size_t sevens = 0, sixes = 0;
  for (auto mask : maximal) {
    const int size = std::popcount(mask);
    sevens += size == 7;
    sixes += size == 6;
  }
  if (sevens != 3 || sixes != 4 || maximal.size() != 7) {
    throw InvariantViolation("maximal pairwise-close subsets around Central(" + std::to_string(g.n) +
                             ") are not three of size 7 and four of size 6");
  }

  std::uint32_t psi_mask = 0;
  for (const auto& v : psi.vectors) {
    auto it = std::find(g.neighborhood.begin(), g.neighborhood.end(), v);
    if (it == g.neighborhood.end()) {
      throw InvariantViolation("Parikh vector " + v.to_string() + " of length " + std::to_string(g.n) +
                               " lies outside the neighborhood of Central(n)");
    }
    psi_mask |= 1u << static_cast<std::size_t>(it - g.neighborhood.begin());
  }
  std::uint32_t central_b_mask = 0;
  for (std::size_t a = 0; a < k; ++a) {
    const ParikhVector d = g.neighborhood[a] - base;
    if (d.max_norm() == 1) central_b_mask |= 1u << a;
  }
  for (std::size_t s = 0; s < maximal.size(); ++s) {
    if (maximal[s] == central_b_mask) g.central_b_set = s;
    std::vector<std::size_t> members;
    for (std::size_t a = 0; a < k; ++a) {
      if (maximal[s] & (1u << a)) members.push_back(a);
    }
    g.maximal_sets.push_back(std::move(members));
    if ((maximal[s] & psi_mask) == psi_mask) {
      g.containing.push_back(s);
      if (maximal[s] == psi_mask) g.fills_containing_set = true;
    }
  }
  if (g.containing.empty()) {
    throw InvariantViolation("Psi(" + std::to_string(g.n) + ") is not inside any maximal pairwise-close subset");
  }
  return g;
}

SpecialFactorAnalyzer::SpecialFactorAnalyzer(const WordBuffer& buffer, SaturationRule rule)
    : buffer_(buffer), rule_(rule), scanner_(buffer) {
  require_tribonacci_alphabet(buffer);
}

ParikhSet SpecialFactorAnalyzer::parikh_set(std::size_t n) const { return scanner_.parikh_set(n, rule_); }

SpecialFactorRecord SpecialFactorAnalyzer::right_special_factor(std::size_t len) const {
  const FactorScan scan = scanner_.scan(len + 1, rule_);
  const auto& positions = scan.first_positions;

  std::size_t prefix_groups = 0;
  const auto by_prefix = group_by_window(scanner_, positions, 0, len, prefix_groups);
  std::vector<std::size_t> extensions(prefix_groups, 0);
  std::vector<std::size_t> sample(prefix_groups, 0);
  for (std::size_t i = 0; i < positions.size(); ++i) {
    ++extensions[by_prefix[i]];
    sample[by_prefix[i]] = positions[i];
  }
  std::size_t special = std::numeric_limits<std::size_t>::max();
  std::size_t special_count = 0;
  for (std::size_t g = 0; g < prefix_groups; ++g) {
    if (extensions[g] >= 2) {
      ++special_count;
      special = g;
    }
  }
  if (special_count != 1 || extensions[special] != buffer_.alphabet_size()) {
    throw InvariantViolation("length " + std::to_string(len) + ": expected exactly one right special factor with " +
                             std::to_string(buffer_.alphabet_size()) + " extensions, found " +
                             std::to_string(special_count));
  }

  SpecialFactorRecord r;
  r.length = len;
  r.position = sample[special];
  r.word = buffer_.slice(r.position, len);
  r.parikh = window_parikh(buffer_, r.position, len);
  r.right_extensions = extensions[special];

  // Left extensions: length-(len+1) factors whose last len symbols are r.
  for (std::size_t pos : positions) {
    if (scanner_.windows_equal(pos + 1, r.position, len)) ++r.left_extensions;
  }
  r.is_bispecial = r.left_extensions >= 2;
  return r;
}

CentralSet SpecialFactorAnalyzer::central_set(std::size_t n) const {
  if (n < 1) throw InvalidInput("n must be >= 1");
  const CentralSet c = central_from(right_special_factor(n - 1));
  const ParikhSet psi = parikh_set(n);
  for (const auto& v : c.vectors) {
    if (!psi.contains(v)) {
      throw InvariantViolation("Central(" + std::to_string(n) + ") vector " + v.to_string() +
                               " is not the Parikh vector of any factor");
    }
  }
  return c;
}

BSet SpecialFactorAnalyzer::b_set(std::size_t n) const {
  if (n < 1) throw InvalidInput("n must be >= 1");
  return b_set_from(right_special_factor(n - 1));
}

std::size_t SpecialFactorAnalyzer::phi(std::size_t n) const {
  if (n < 1) throw InvalidInput("n must be >= 1");
  const SpecialFactorRecord r = right_special_factor(n - 1);
  Word image = buffer_.morphism().apply(r.word);
  image.push_back(0);
  const std::size_t value = image.size() + 1;
  const auto closed = static_cast<std::size_t>(static_cast<std::int64_t>(n) + r.parikh[0] + r.parikh[1] + 1);
  if (value != closed) {
    throw InvariantViolation("phi(" + std::to_string(n) + ") = " + std::to_string(value) + " but n+i+j+1 = " +
                             std::to_string(closed));
  }
  return value;
}

GeometryResult SpecialFactorAnalyzer::geometry(std::size_t n) const {
  return twelve_vector_geometry(parikh_set(n), central_set(n));
}

EquivalenceRow SpecialFactorAnalyzer::equivalence_row(std::size_t n) const {
  if (n < 1) throw InvalidInput("n must be >= 1");
  EquivalenceRow row;
  row.n = n;
  const FactorScan scan = scanner_.scan(n, rule_);
  const ParikhSet psi = scanner_.parikh_set(scan);
  row.rho = psi.rho();
  row.rho_is_3 = row.rho == 3;

  row.one_balanced = true;
  for (std::size_t letter = 0; letter < 3; ++letter) {
    std::int64_t lo = std::numeric_limits<std::int64_t>::max();
    std::int64_t hi = std::numeric_limits<std::int64_t>::min();
    for (std::size_t pos : scan.first_positions) {
      const auto c = buffer_.window_count(static_cast<Symbol>(letter), pos, n);
      lo = std::min(lo, c);
      hi = std::max(hi, c);
    }
    row.one_balanced = row.one_balanced && hi - lo <= 1;
  }

  const SpecialFactorRecord r = right_special_factor(n - 1);
  const BSet b = b_set_from(r);
  row.misses_b_set = std::none_of(b.vectors.begin(), b.vectors.end(), [&](const auto& v) { return psi.contains(v); });
  row.bispecial = r.is_bispecial;
  row.closed_form = rho3_closed_form(n);
  return row;
}

std::size_t analyzer_buffer_length(std::size_t max_n, const SaturationRule& rule) {
  // Right special factors of length n - 1 scan factors of length n.
  return rule.buffer_length_for(max_n + 1);
}

namespace {

SpecialFactorAnalyzer grown_analyzer(WordBuffer& buffer, std::size_t max_n, const SaturationRule& rule) {
  buffer.grow_to(std::min(analyzer_buffer_length(max_n, rule), buffer.max_length()));
  return SpecialFactorAnalyzer(buffer, rule);
}

}  // namespace

SpecialFactorRecord right_special_factor(WordBuffer& buffer, std::size_t len, const SaturationRule& rule) {
  return grown_analyzer(buffer, len + 1, rule).right_special_factor(len);
}

CentralSet central_set(WordBuffer& buffer, std::size_t n, const SaturationRule& rule) {
  return grown_analyzer(buffer, n, rule).central_set(n);
}

BSet b_set(WordBuffer& buffer, std::size_t n, const SaturationRule& rule) {
  return grown_analyzer(buffer, n, rule).b_set(n);
}

std::size_t phi(WordBuffer& buffer, std::size_t n, const SaturationRule& rule) {
  return grown_analyzer(buffer, n, rule).phi(n);
}

GeometryResult twelve_vector_geometry(WordBuffer& buffer, std::size_t n, const SaturationRule& rule) {
  return grown_analyzer(buffer, n, rule).geometry(n);
}

std::vector<EquivalenceRow> verify_equivalences(WordBuffer& buffer, std::size_t n_max, const SaturationRule& rule,
                                                unsigned threads) {
  const SpecialFactorAnalyzer analyzer = grown_analyzer(buffer, n_max, rule);
  std::vector<EquivalenceRow> rows(n_max);
  parallel_for(n_max, threads, [&](std::size_t i) { rows[i] = analyzer.equivalence_row(i + 1); });
  for (const auto& row : rows) {
    if (!row.agree()) {
      throw VerificationFailure("n = " + std::to_string(row.n) + ": conditions disagree (1-balanced=" +
                                std::to_string(row.one_balanced) + ", rho=3=" + std::to_string(row.rho_is_3) +
                                ", misses B(n)=" + std::to_string(row.misses_b_set) +
                                ", bispecial=" + std::to_string(row.bispecial) +
                                ", closed form=" + std::to_string(row.closed_form) + ")");
    }
  }
  return rows;
}

std::string special_csv_header() { return "n,right_special_word,i,j,k,bispecial,rho,rho3_closed_form"; }

std::string special_csv_row(const SpecialFactorRecord& r, std::size_t rho) {
  const std::size_t n = r.length + 1;
  return std::to_string(n) + "," + format_word(r.word) + "," + std::to_string(r.parikh[0]) + "," +
         std::to_string(r.parikh[1]) + "," + std::to_string(r.parikh[2]) + "," + (r.is_bispecial ? "1" : "0") +
         "," + std::to_string(rho) + "," + (rho3_closed_form(n) ? "1" : "0");
}

}  // namespace tribo
