#include <doctest.h>

#include <map>

#include "support/oracles.hpp"
#include "tribo/error.hpp"
#include "tribo/numeration.hpp"

using namespace tribo;

namespace {
ZeckendorfRep rep(std::vector<std::uint8_t> digits) { return ZeckendorfRep{std::move(digits)}; }
}  // namespace

TEST_CASE("tribonacci_number") {
  CHECK(tribonacci_number(0) == 1);
  CHECK(tribonacci_number(4) == 13);
  CHECK(tribonacci_number(5) == 24);
  const auto oracle_values = oracle::tribonacci_numbers(40);
  for (std::size_t k = 0; k < 40; ++k) CHECK(tribonacci_number(k) == oracle_values[k]);
  CHECK_THROWS_AS(tribonacci_number(max_tribonacci_index() + 1), OverflowError);
  CHECK(tribonacci_table().size() == max_tribonacci_index() + 1);
}

TEST_CASE("zeckendorf_encode examples") {
  CHECK(zeckendorf_encode(0).digits.empty());
  CHECK(zeckendorf_encode(1) == rep({1}));
  CHECK(zeckendorf_encode(6) == rep({0, 1, 1}));
  CHECK(zeckendorf_encode(7) == rep({0, 0, 0, 1}));
  CHECK(zeckendorf_encode(6).to_string() == "011");
}

TEST_CASE("zeckendorf_decode examples") {
  CHECK(zeckendorf_decode(rep({1})) == 1);
  CHECK(zeckendorf_decode(rep({0, 1, 1})) == 6);
  CHECK(zeckendorf_decode(rep({1, 1, 0, 1})) == 10);
  CHECK(zeckendorf_decode(rep({})) == 0);
  CHECK(zeckendorf_decode(rep({1, 0, 0})) == 1);  // trailing zeros are harmless
  CHECK_THROWS_AS(zeckendorf_decode(rep({1, 1, 1})), InvalidRepresentation);
  CHECK_THROWS_AS(zeckendorf_decode(rep({2})), InvalidRepresentation);
  std::vector<std::uint8_t> too_long(max_tribonacci_index() + 1, 0);
  too_long.push_back(1);
  CHECK_THROWS_AS(zeckendorf_decode(ZeckendorfRep{too_long}), OverflowError);
}

TEST_CASE("is_valid_rep") {
  CHECK_FALSE(is_valid_rep(std::vector<std::uint8_t>{1, 1, 1}));
  CHECK(is_valid_rep(std::vector<std::uint8_t>{}));
  CHECK(is_valid_rep(std::vector<std::uint8_t>{1, 1, 0, 1, 1}));
  CHECK_FALSE(is_valid_rep(std::vector<std::uint8_t>{0, 2}));
}

TEST_CASE("ZeckendorfRep::parse") {
  CHECK(ZeckendorfRep::parse("011") == rep({0, 1, 1}));
  CHECK_FALSE(is_valid_rep(ZeckendorfRep::parse("0111").digits));
  CHECK_THROWS_AS(zeckendorf_decode(ZeckendorfRep::parse("0111")), InvalidRepresentation);
  CHECK_THROWS_AS(ZeckendorfRep::parse("01x"), InvalidRepresentation);
}

TEST_CASE("property: round trip and validity up to 10^6") {
  for (std::uint64_t n = 0; n <= 1'000'000; ++n) {
    const ZeckendorfRep r = zeckendorf_encode(n);
    REQUIRE(is_valid_rep(r.digits));
    REQUIRE((r.digits.empty() || r.digits.back() == 1));
    REQUIRE(zeckendorf_decode(r) == n);
  }
}

TEST_CASE("property: representations are unique up to 10^4") {
  // T_14 = 5768 <= 10^4 < T_15, so 15 digits reach every N <= 10^4.
  const auto t = oracle::tribonacci_numbers(15);
  std::map<std::uint64_t, std::vector<std::uint32_t>> reps;
  for (std::uint32_t mask = 0; mask < (1u << 15); ++mask) {
    bool valid = true;
    std::uint64_t value = 0;
    for (int k = 0; k < 15; ++k) {
      if (k >= 2 && ((mask >> (k - 2)) & 7u) == 7u) valid = false;
      if ((mask >> k) & 1u) value += t[static_cast<std::size_t>(k)];
    }
    if (valid && value <= 10'000) reps[value].push_back(mask);
  }
  REQUIRE(reps.size() == 10'001);
  for (const auto& [value, masks] : reps) {
    REQUIRE(masks.size() == 1);
    const ZeckendorfRep r = zeckendorf_encode(value);
    std::uint32_t mask = 0;
    for (std::size_t k = 0; k < r.digits.size(); ++k) mask |= static_cast<std::uint32_t>(r.digits[k]) << k;
    REQUIRE(mask == masks.front());
  }
}
