#include "tribo/factor_scan.hpp"

#include <algorithm>
#include <cstring>
#include <limits>
#include <unordered_map>

namespace tribo {
namespace {

constexpr std::uint64_t kMod = (std::uint64_t{1} << 61) - 1;
constexpr std::uint64_t kBaseLo = 1'000'003;
constexpr std::uint64_t kBaseHi = 0x1f3a5c7e9b2d4f61ULL % kMod;

__extension__ typedef unsigned __int128 u128;

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b) {
  const u128 product = static_cast<u128>(a) * b;
  std::uint64_t folded = static_cast<std::uint64_t>(product & kMod) + static_cast<std::uint64_t>(product >> 61);
  if (folded >= kMod) folded -= kMod;
  return folded;
}

std::uint64_t add_mod(std::uint64_t a, std::uint64_t b) {
  std::uint64_t s = a + b;
  if (s >= kMod) s -= kMod;
  return s;
}

std::uint64_t sub_mod(std::uint64_t a, std::uint64_t b) { return a >= b ? a - b : a + kMod - b; }

constexpr std::uint32_t kNoEntry = std::numeric_limits<std::uint32_t>::max();

}  // namespace

PrefixHasher::PrefixHasher(WordView symbols)
    : prefix_lo_(symbols.size() + 1, 0),
      prefix_hi_(symbols.size() + 1, 0),
      pow_lo_(symbols.size() + 1, 1),
      pow_hi_(symbols.size() + 1, 1) {
  for (std::size_t i = 0; i < symbols.size(); ++i) {
    // Offset by one so that the zero symbol still contributes.
    const std::uint64_t s = std::uint64_t{symbols[i]} + 1;
    prefix_lo_[i + 1] = add_mod(mul_mod(prefix_lo_[i], kBaseLo), s);
    prefix_hi_[i + 1] = add_mod(mul_mod(prefix_hi_[i], kBaseHi), s);
    pow_lo_[i + 1] = mul_mod(pow_lo_[i], kBaseLo);
    pow_hi_[i + 1] = mul_mod(pow_hi_[i], kBaseHi);
  }
}

Fingerprint PrefixHasher::window(std::size_t start, std::size_t len) const {
  const std::size_t end = start + len;
  return {sub_mod(prefix_lo_[end], mul_mod(prefix_lo_[start], pow_lo_[len])),
          sub_mod(prefix_hi_[end], mul_mod(prefix_hi_[start], pow_hi_[len]))};
}

bool ParikhSet::contains(const ParikhVector& v) const {
  return std::binary_search(vectors.begin(), vectors.end(), v);
}

FactorScanner::FactorScanner(const WordBuffer& buffer) : buffer_(buffer), hasher_(buffer.view()) {}

bool FactorScanner::windows_equal(std::size_t a, std::size_t b, std::size_t len) const {
  const auto* data = buffer_.view().data();
  return a == b || std::memcmp(data + a, data + b, len) == 0;
}

FactorScan FactorScanner::scan(std::size_t n, const SaturationRule& rule) const {
  FactorScan result;
  result.n = n;
  const std::size_t size = buffer_.size();
  const std::size_t cap = rule.cap_for(n);
  const std::size_t available = size >= n ? size - n + 1 : 0;
  const bool certify = rule.mode == SaturationRule::Mode::kCertified;
  const std::size_t target = rule.target_for(n, buffer_.alphabet_size());

  if (!certify && available < cap) {
    throw RangeError("fixed scan of " + std::to_string(cap) + " windows of length " + std::to_string(n) +
                     " needs a buffer of " + std::to_string(cap + n - 1) + " symbols");
  }
  const std::size_t limit = std::min(cap, available);
  const auto* data = buffer_.view().data();

  // rep[p] = index into first_positions of the factor occurring at p.
  std::vector<std::uint32_t> rep;
  rep.reserve(std::min<std::size_t>(limit, 1u << 20));
  // Fingerprint -> first entry; entries sharing a fingerprint are chained.
  std::unordered_map<Fingerprint, std::uint32_t, FingerprintHash> heads;
  std::vector<std::uint32_t> chain;
  if (certify) {
    heads.reserve(target + 1);
    chain.reserve(target + 1);
    result.first_positions.reserve(target + 1);
  }

  // A scanned position q < p - 1 whose window equals the window at p - 1.
  std::size_t echo = std::numeric_limits<std::size_t>::max();
  constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();

  std::size_t p = 0;
  bool done = certify && result.factor_count() >= target;
  for (; p < limit && !done; ++p) {
    // Window p equals window echo+1 iff their last symbols agree.
    if (n > 0 && echo != kNone && data[p + n - 1] == data[echo + n]) {
      rep.push_back(rep[echo + 1]);
      echo = echo + 1;
      continue;
    }
    const Fingerprint fp = hasher_.window(p, n);
    auto it = heads.find(fp);
    std::uint32_t found = kNoEntry;
    if (it != heads.end()) {
      for (std::uint32_t e = it->second; e != kNoEntry; e = chain[e]) {
        if (windows_equal(result.first_positions[e], p, n)) {
          found = e;
          break;
        }
      }
    }
    if (found != kNoEntry) {
      rep.push_back(found);
      echo = result.first_positions[found];
      continue;
    }
    const auto index = static_cast<std::uint32_t>(result.first_positions.size());
    result.first_positions.push_back(p);
    chain.push_back(it != heads.end() ? it->second : kNoEntry);
    heads[fp] = index;
    rep.push_back(index);
    echo = kNone;
    if (certify && result.factor_count() >= target) {
      done = true;
    }
  }
  result.positions_scanned = p;
  result.certified = certify && done;

  if (certify && !done) {
    const bool cap_hit = limit == cap;
    throw SaturationFailure(
        "length " + std::to_string(n) + ": found " + std::to_string(result.factor_count()) + " of " +
            std::to_string(target) + " factors before " +
            (cap_hit ? "the scan cap of " + std::to_string(cap) + " positions"
                     : "the end of the buffer (" + std::to_string(size) + " symbols)"),
        parikh_set(result));
  }
  return result;
}

ParikhSet FactorScanner::parikh_set(const FactorScan& scan) const {
  ParikhSet set;
  set.n = scan.n;
  set.factor_count = scan.factor_count();
  set.certified = scan.certified;

  // Flat counts, deduplicated before any ParikhVector is built.
  const std::size_t m = buffer_.alphabet_size();
  const std::size_t count = scan.first_positions.size();
  std::vector<std::int64_t> flat(count * m);
  for (std::size_t f = 0; f < count; ++f) {
    for (std::size_t letter = 0; letter < m; ++letter) {
      flat[f * m + letter] = buffer_.window_count(static_cast<Symbol>(letter), scan.first_positions[f], scan.n);
    }
  }
  auto row = [&](std::size_t f) { return flat.begin() + static_cast<std::ptrdiff_t>(f * m); };
  auto same = [&](std::size_t a, std::size_t b) { return std::equal(row(a), row(a) + static_cast<std::ptrdiff_t>(m), row(b)); };
  auto less = [&](std::size_t a, std::size_t b) {
    return std::lexicographical_compare(row(a), row(a) + static_cast<std::ptrdiff_t>(m), row(b),
                                        row(b) + static_cast<std::ptrdiff_t>(m));
  };
  // Abelian complexity is usually tiny: linear dedup, sorting only if the
  // distinct set grows.
  constexpr std::size_t kLinearLimit = 32;
  std::vector<std::size_t> order;
  bool small = true;
  for (std::size_t f = 0; f < count && small; ++f) {
    if (std::none_of(order.begin(), order.end(), [&](std::size_t u) { return same(u, f); })) {
      order.push_back(f);
      small = order.size() <= kLinearLimit;
    }
  }
  if (!small) {
    order.resize(count);
    for (std::size_t f = 0; f < count; ++f) order[f] = f;
    std::sort(order.begin(), order.end(), less);
    order.erase(std::unique(order.begin(), order.end(), same), order.end());
  } else {
    std::sort(order.begin(), order.end(), less);
  }
  set.vectors.reserve(order.size());
  for (std::size_t f : order) {
    set.vectors.emplace_back(std::vector<std::int64_t>(row(f), row(f) + static_cast<std::ptrdiff_t>(m)));
  }
  return set;
}

}  // namespace tribo
