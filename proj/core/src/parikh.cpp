#include "tribo/parikh.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>

#include "tribo/error.hpp"

namespace tribo {

std::int64_t ParikhVector::total() const {
  return std::accumulate(counts_.begin(), counts_.end(), std::int64_t{0});
}

ParikhVector ParikhVector::operator+(const ParikhVector& other) const {
  if (size() != other.size()) {
    throw InvalidInput("Parikh vectors over different alphabets");
  }
  ParikhVector out(*this);
  for (std::size_t i = 0; i < size(); ++i) {
    out.counts_[i] += other.counts_[i];
  }
  return out;
}

ParikhVector ParikhVector::operator-(const ParikhVector& other) const {
  if (size() != other.size()) {
    throw InvalidInput("Parikh vectors over different alphabets");
  }
  ParikhVector out(*this);
  for (std::size_t i = 0; i < size(); ++i) {
    out.counts_[i] -= other.counts_[i];
  }
  return out;
}

std::int64_t ParikhVector::max_norm() const {
  std::int64_t best = 0;
  for (auto c : counts_) {
    best = std::max(best, std::abs(c));
  }
  return best;
}

std::string ParikhVector::to_string() const {
  std::string out = "(";
  for (std::size_t i = 0; i < counts_.size(); ++i) {
    if (i > 0) out += ",";
    out += std::to_string(counts_[i]);
  }
  return out + ")";
}

std::int64_t max_norm_distance(const ParikhVector& a, const ParikhVector& b) {
  return (a - b).max_norm();
}

ParikhVector parikh(WordView w, std::size_t alphabet_size) {
  ParikhVector v(alphabet_size);
  for (Symbol s : w) {
    if (s >= alphabet_size) {
      throw InvalidInput("symbol " + std::to_string(s) + " outside alphabet of size " +
                         std::to_string(alphabet_size));
    }
    ++v[s];
  }
  return v;
}

ParikhVector window_parikh(const WordBuffer& buffer, std::size_t start, std::size_t len) {
  if (start > buffer.size() || len > buffer.size() - start) {
    throw RangeError("window [" + std::to_string(start) + ", +" + std::to_string(len) +
                     ") outside buffer of length " + std::to_string(buffer.size()));
  }
  ParikhVector v(buffer.alphabet_size());
  for (std::size_t letter = 0; letter < buffer.alphabet_size(); ++letter) {
    v[letter] = buffer.window_count(static_cast<Symbol>(letter), start, len);
  }
  return v;
}

}  // namespace tribo
