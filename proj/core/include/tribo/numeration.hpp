#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace tribo {

// T_0 = 1, T_1 = 2, T_2 = 4, T_k = T_{k-1} + T_{k-2} + T_{k-3}; T_k = |tau^k(0)|.
// Throws OverflowError once T_k no longer fits in 64 bits.
std::uint64_t tribonacci_number(std::size_t k);

// Largest k with T_k representable in 64 bits.
std::size_t max_tribonacci_index();

// Every T_k that fits in 64 bits, computed once.
const std::vector<std::uint64_t>& tribonacci_table();

// Digits p_0, p_1, ... (least significant first) of N = sum p_k T_k with
// no three consecutive ones. N = 0 is the empty string.
struct ZeckendorfRep {
  std::vector<std::uint8_t> digits;

  bool operator==(const ZeckendorfRep&) const = default;

  // CLI text form: "011" for 6.
  std::string to_string() const;
  // Accepts any 0/1 string; the no-three-ones rule is enforced by decoding.
  static ZeckendorfRep parse(std::string_view text);
};

bool is_valid_rep(std::span<const std::uint8_t> digits);

// Greedy: repeatedly subtract the largest T_k not exceeding the remainder.
ZeckendorfRep zeckendorf_encode(std::uint64_t n);

// Throws InvalidRepresentation for digits outside {0,1} or a run of three
// ones; OverflowError if the value exceeds 64 bits. Trailing zeros are
// accepted.
std::uint64_t zeckendorf_decode(const ZeckendorfRep& rep);

}  // namespace tribo
