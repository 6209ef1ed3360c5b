#include <doctest.h>

#include "support/oracles.hpp"
#include "tribo/abelian.hpp"
#include "tribo/error.hpp"
#include "tribo/numeration.hpp"
#include "tribo/special_factors.hpp"

using namespace tribo;

namespace {

constexpr std::size_t kMaxN = 2000;

struct Fixture {
  WordBuffer buffer;
  SpecialFactorAnalyzer analyzer;
  Fixture() : buffer(make()), analyzer(buffer) {}
  static WordBuffer make() {
    WordBuffer b = tribonacci_buffer(1);
    b.grow_to(analyzer_buffer_length(kMaxN));
    return b;
  }
};

const Fixture& fx() {
  static const Fixture f;
  return f;
}

const std::string& text() {
  static const std::string w = oracle::tribonacci_prefix(60'000);
  return w;
}

// Right special factors of length len found by counting extensions directly.
std::vector<std::pair<std::string, std::size_t>> brute_right_special(std::size_t len) {
  std::map<std::string, std::set<char>> right;
  for (const auto& f : oracle::distinct_factors(text(), len + 1)) right[f.substr(0, len)].insert(f.back());
  std::vector<std::pair<std::string, std::size_t>> out;
  for (const auto& [u, ext] : right) {
    if (ext.size() >= 2) out.emplace_back(u, ext.size());
  }
  return out;
}

bool brute_left_special(const std::string& u) {
  std::set<char> left;
  for (const auto& f : oracle::distinct_factors(text(), u.size() + 1)) {
    if (f.substr(1) == u) left.insert(f.front());
  }
  return left.size() >= 2;
}

bool intersects(const ParikhSet& psi, const BSet& b) {
  for (const auto& v : b.vectors) {
    if (psi.contains(v)) return true;
  }
  return false;
}

}  // namespace

TEST_CASE("right special factor examples") {
  const auto& a = fx().analyzer;
  const SpecialFactorRecord r0 = a.right_special_factor(0);
  CHECK(r0.word.empty());
  CHECK(r0.parikh == ParikhVector{0, 0, 0});
  CHECK(r0.is_bispecial);
  const SpecialFactorRecord r1 = a.right_special_factor(1);
  CHECK(format_word(r1.word) == "0");
  CHECK(r1.is_bispecial);
  const SpecialFactorRecord r3 = a.right_special_factor(3);
  CHECK(format_word(r3.word) == "010");
  CHECK(r3.is_bispecial);
  CHECK(r3.right_extensions == 3);
}

TEST_CASE("right special factor matches a brute-force oracle") {
  for (std::size_t len = 0; len <= 150; ++len) {
    const auto brute = brute_right_special(len);
    REQUIRE(brute.size() == 1);  // uniqueness
    REQUIRE(brute.front().second == 3);
    const SpecialFactorRecord r = fx().analyzer.right_special_factor(len);
    REQUIRE(format_word(r.word) == brute.front().first);
    REQUIRE(r.is_bispecial == brute_left_special(brute.front().first));
    if (r.is_bispecial) {
      REQUIRE(oracle::is_palindrome(brute.front().first));
      REQUIRE(text().substr(0, len) == brute.front().first);
    }
  }
}

TEST_CASE("bispecial lengths") {
  CHECK(bispecial_lengths(30) == std::vector<std::size_t>{1, 3, 7, 14, 27});
  CHECK(bispecial_lengths(0).empty());
  for (auto len : bispecial_lengths(2000)) CHECK(oracle::is_palindrome(text().substr(0, len)));
  // Cross-check against the analyzer's bispecial flags.
  std::vector<std::size_t> flagged;
  for (std::size_t len = 1; len <= kMaxN - 1; ++len) {
    if (fx().analyzer.right_special_factor(len).is_bispecial) flagged.push_back(len);
  }
  CHECK(flagged == bispecial_lengths(kMaxN - 1));
}

TEST_CASE("central and B sets") {
  const CentralSet c1 = fx().analyzer.central_set(1);
  CHECK(c1.vectors[0] == ParikhVector{1, 0, 0});
  CHECK(c1.vectors[1] == ParikhVector{0, 1, 0});
  CHECK(c1.vectors[2] == ParikhVector{0, 0, 1});
  const BSet b1 = fx().analyzer.b_set(1);
  CHECK(b1.vectors[0] == ParikhVector{-1, 1, 1});
  CHECK(b1.vectors[1] == ParikhVector{1, -1, 1});
  CHECK(b1.vectors[2] == ParikhVector{1, 1, -1});
  CHECK_FALSE(intersects(fx().analyzer.parikh_set(4), fx().analyzer.b_set(4)));
}

TEST_CASE("property: Central(n) is realized and rho(n) = 3 iff Psi misses B(n)") {
  for (std::size_t n = 1; n <= kMaxN; ++n) {
    const ParikhSet psi = fx().analyzer.parikh_set(n);
    const CentralSet c = fx().analyzer.central_set(n);  // throws if not contained
    for (const auto& v : c.vectors) REQUIRE(psi.contains(v));
    REQUIRE((psi.rho() == 3) == !intersects(psi, fx().analyzer.b_set(n)));
  }
}

TEST_CASE("rho3_closed_form") {
  CHECK(rho3_closed_form(1));
  CHECK(rho3_closed_form(2));
  CHECK_FALSE(rho3_closed_form(30));
  CHECK_THROWS_AS(rho3_closed_form(0), InvalidInput);
  std::vector<std::size_t> hits;
  for (std::size_t n = 1; n <= 30; ++n) {
    if (rho3_closed_form(n)) hits.push_back(n);
  }
  CHECK(hits == std::vector<std::size_t>{1, 2, 4, 8, 15, 28});
  // Closed form evaluated independently.
  const auto t = oracle::tribonacci_numbers(12);
  for (std::size_t m = 0; m + 2 < t.size(); ++m) CHECK(rho3_closed_form((t[m] + t[m + 2] - 1) / 2));
}

TEST_CASE("phi") {
  CHECK(fx().analyzer.phi(1) == 2);
  CHECK(fx().analyzer.phi(2) == 4);
  for (std::size_t n = 1; n <= 300; ++n) {
    const std::string r = format_word(fx().analyzer.right_special_factor(n - 1).word);
    CHECK(fx().analyzer.phi(n) == oracle::tau(r).size() + 2);
  }
}

TEST_CASE("property: phi preserves rho = 3 and B(n) propagation") {
  for (std::size_t n = 1; n <= 500; ++n) {
    const std::size_t m = fx().analyzer.phi(n);
    REQUIRE(m <= kMaxN);
    const bool hits_n = intersects(fx().analyzer.parikh_set(n), fx().analyzer.b_set(n));
    const bool hits_m = intersects(fx().analyzer.parikh_set(m), fx().analyzer.b_set(m));
    if (hits_n) REQUIRE(hits_m);
    if (fx().analyzer.parikh_set(n).rho() == 3) REQUIRE(fx().analyzer.parikh_set(m).rho() == 3);
  }
}

TEST_CASE("property: a factor with excess zeros forces rho > 3") {
  // If some factor of length <= n has first coordinate >= i + 2, then rho(n) > 3.
  const WordBuffer& b = fx().buffer;
  const FactorScanner& scanner = fx().analyzer.scanner();
  std::vector<std::int64_t> max_zeros(501, 0);  // max |v|_0 over factors of length exactly L
  for (std::size_t len = 1; len <= 500; ++len) {
    const FactorScan scan = scanner.scan(len);
    for (auto p : scan.first_positions) max_zeros[len] = std::max(max_zeros[len], window_parikh(b, p, len)[0]);
  }
  int triggered = 0;
  for (std::size_t n = 1; n <= 500; ++n) {
    const std::int64_t i = fx().analyzer.right_special_factor(n - 1).parikh[0];
    bool premise = false;
    for (std::size_t len = 1; len <= n && !premise; ++len) premise = max_zeros[len] >= i + 2;
    if (premise) {
      ++triggered;
      REQUIRE(fx().analyzer.parikh_set(n).rho() > 3);
    }
  }
  CHECK(triggered > 0);
}

TEST_CASE("twelve-vector geometry") {
  const GeometryResult g = fx().analyzer.geometry(1);
  CHECK(g.neighborhood.size() == 12);
  std::vector<std::size_t> sizes;
  for (const auto& s : g.maximal_sets) sizes.push_back(s.size());
  CHECK(sizes == std::vector<std::size_t>{7, 7, 7, 6, 6, 6, 6});
  CHECK(g.maximal_sets[g.central_b_set].size() == 6);

  WordBuffer b = tribonacci_buffer(1);
  const GeometryResult g7 = twelve_vector_geometry(b, 3914);
  CHECK(g7.rho == 7);
  CHECK(g7.fills_containing_set);
}

TEST_CASE("property: Psi(n) sits in a hexagon or outward triangle for n <= 2000") {
  for (std::size_t n = 1; n <= kMaxN; ++n) {
    const GeometryResult g = fx().analyzer.geometry(n);
    REQUIRE(g.rho <= 7);
    bool in_named_set = false;
    for (auto s : g.containing) in_named_set = in_named_set || s != g.central_b_set;
    REQUIRE(in_named_set);
  }
}

TEST_CASE("verify_equivalences") {
  WordBuffer b = tribonacci_buffer(1);
  const auto rows = verify_equivalences(b, 200);
  REQUIRE(rows.size() == 200);
  std::vector<std::size_t> agree_true;
  for (const auto& r : rows) {
    CHECK(r.agree());
    if (r.rho_is_3 && r.n <= 30) agree_true.push_back(r.n);
  }
  CHECK(agree_true == std::vector<std::size_t>{1, 2, 4, 8, 15, 28});
  CHECK(rows[14].bispecial);  // n = 15, length 14
}

TEST_CASE("special CSV") {
  CHECK(special_csv_header() == "n,right_special_word,i,j,k,bispecial,rho,rho3_closed_form");
  const SpecialFactorRecord r = fx().analyzer.right_special_factor(3);
  CHECK(special_csv_row(r, 3) == "4,010,2,1,0,1,3,1");
}

TEST_CASE("analyzer requires a ternary alphabet") {
  const WordBuffer b = fixed_point_prefix(mbonacci_morphism(4), 0, 100);
  CHECK_THROWS_AS(SpecialFactorAnalyzer(b, SaturationRule{}), InvalidInput);
}
