#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

#include "tribo/word.hpp"

namespace tribo {

// Per-letter occurrence counts. Entries are signed so that formula-built
// vectors (B(n) near the origin) can hold negative coordinates.
class ParikhVector {
 public:
  ParikhVector() = default;
  explicit ParikhVector(std::size_t alphabet_size) : counts_(alphabet_size, 0) {}
  ParikhVector(std::initializer_list<std::int64_t> counts) : counts_(counts) {}
  explicit ParikhVector(std::vector<std::int64_t> counts) : counts_(std::move(counts)) {}

  std::size_t size() const { return counts_.size(); }
  std::int64_t operator[](std::size_t letter) const { return counts_[letter]; }
  std::int64_t& operator[](std::size_t letter) { return counts_[letter]; }
  const std::vector<std::int64_t>& counts() const { return counts_; }

  std::int64_t total() const;

  ParikhVector operator+(const ParikhVector& other) const;
  ParikhVector operator-(const ParikhVector& other) const;

  // max_i |x_i|
  std::int64_t max_norm() const;

  std::string to_string() const;

  auto operator<=>(const ParikhVector&) const = default;
  bool operator==(const ParikhVector&) const = default;

 private:
  std::vector<std::int64_t> counts_;
};

// Distance ||a - b|| in the max norm.
std::int64_t max_norm_distance(const ParikhVector& a, const ParikhVector& b);

// Exact letter counts of w over an alphabet of size m.
ParikhVector parikh(WordView w, std::size_t alphabet_size);

// Parikh vector of buffer[start, start + len) from prefix sums.
ParikhVector window_parikh(const WordBuffer& buffer, std::size_t start, std::size_t len);

}  // namespace tribo
