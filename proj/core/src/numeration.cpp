#include "tribo/numeration.hpp"

#include <algorithm>
#include <limits>

#include "tribo/error.hpp"

namespace tribo {

const std::vector<std::uint64_t>& tribonacci_table() {
  static const std::vector<std::uint64_t> table = [] {
    std::vector<std::uint64_t> t{1, 2, 4};
    constexpr auto kMax = std::numeric_limits<std::uint64_t>::max();
    for (;;) {
      const auto n = t.size();
      const std::uint64_t a = t[n - 1], b = t[n - 2], c = t[n - 3];
      if (a > kMax - b || a + b > kMax - c) break;
      t.push_back(a + b + c);
    }
    return t;
  }();
  return table;
}

std::size_t max_tribonacci_index() { return tribonacci_table().size() - 1; }

std::uint64_t tribonacci_number(std::size_t k) {
  const auto& table = tribonacci_table();
  if (k >= table.size()) {
    throw OverflowError("T_" + std::to_string(k) + " does not fit in 64 bits");
  }
  return table[k];
}

std::string ZeckendorfRep::to_string() const {
  std::string text;
  text.reserve(digits.size());
  for (auto d : digits) {
    text.push_back(static_cast<char>('0' + d));
  }
  return text;
}

ZeckendorfRep ZeckendorfRep::parse(std::string_view text) {
  ZeckendorfRep rep;
  for (char c : text) {
    if (c != '0' && c != '1') {
      throw InvalidRepresentation(std::string("digit must be 0 or 1, got '") + c + "'");
    }
    rep.digits.push_back(static_cast<std::uint8_t>(c - '0'));
  }
  return rep;
}

bool is_valid_rep(std::span<const std::uint8_t> digits) {
  for (std::size_t k = 0; k < digits.size(); ++k) {
    if (digits[k] > 1) return false;
    if (k >= 2 && digits[k] == 1 && digits[k - 1] == 1 && digits[k - 2] == 1) return false;
  }
  return true;
}

ZeckendorfRep zeckendorf_encode(std::uint64_t n) {
  ZeckendorfRep rep;
  if (n == 0) {
    return rep;
  }
  const auto& table = tribonacci_table();
  // Largest k with T_k <= n.
  std::size_t top = static_cast<std::size_t>(std::upper_bound(table.begin(), table.end(), n) - table.begin()) - 1;
  rep.digits.assign(top + 1, 0);
  std::uint64_t rest = n;
  for (std::size_t k = top + 1; k-- > 0;) {
    if (table[k] <= rest) {
      rep.digits[k] = 1;
      rest -= table[k];
    }
  }
  return rep;
}

std::uint64_t zeckendorf_decode(const ZeckendorfRep& rep) {
  if (!is_valid_rep(rep.digits)) {
    throw InvalidRepresentation("'" + rep.to_string() + "' is not a valid Tribonacci representation");
  }
  std::uint64_t n = 0;
  for (std::size_t k = 0; k < rep.digits.size(); ++k) {
    if (rep.digits[k] == 0) continue;
    const auto t = tribonacci_number(k);
    if (n > std::numeric_limits<std::uint64_t>::max() - t) {
      throw OverflowError("representation value exceeds 64 bits");
    }
    n += t;
  }
  return n;
}

}  // namespace tribo
