#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace tribo {

// One letter of an alphabet {0, ..., m-1}; alphabets larger than 256 are rejected.
using Symbol = std::uint8_t;
using Word = std::vector<Symbol>;
using WordView = std::span<const Symbol>;

inline constexpr std::size_t kMaxAlphabetSize = 256;

// Text form: one ASCII digit per symbol, no separators ("0102010").
// Only usable for alphabets of size <= 10.
Word parse_word(std::string_view text);
std::string format_word(WordView word);

// Square matrix of non-negative counts; entry (i, j) = |image(j)|_i.
class IncidenceMatrix {
 public:
  explicit IncidenceMatrix(std::size_t size);

  std::size_t size() const { return size_; }
  std::int64_t at(std::size_t row, std::size_t col) const { return entries_[row * size_ + col]; }
  std::int64_t& at(std::size_t row, std::size_t col) { return entries_[row * size_ + col]; }

  // M * x for a column vector x of length size().
  std::vector<std::int64_t> apply(std::span<const std::int64_t> x) const;

  bool operator==(const IncidenceMatrix&) const = default;

 private:
  std::size_t size_;
  std::vector<std::int64_t> entries_;
};

class Morphism {
 public:
  // images[j] is the image of letter j; the alphabet size is images.size().
  explicit Morphism(std::vector<Word> images);

  std::size_t alphabet_size() const { return images_.size(); }
  const Word& image(Symbol letter) const;
  const std::vector<Word>& images() const { return images_; }

  Word apply(WordView word) const;
  void apply_into(WordView word, Word& out) const;

  // The image of seed begins with seed and has length >= 2.
  bool prolongable(Symbol seed) const;

  IncidenceMatrix incidence_matrix() const;

 private:
  std::vector<Word> images_;
};

// 0 -> 01, 1 -> 02, 2 -> 0.
Morphism tribonacci_morphism();

// tau_m(i) = 0 (i+1) for i < m-1, tau_m(m-1) = 0. Requires m >= 2.
Morphism mbonacci_morphism(int m);

// Append-only prefix of the fixed point of a prolongable morphism, with
// per-letter prefix counts at every position.
//
// Single writer / multiple readers: grow_to() must not run concurrently with
// any reader. Everything else is const and safe to share.
class WordBuffer {
 public:
  static constexpr std::size_t kDefaultMaxLength = std::size_t{1} << 27;

  WordBuffer(Morphism morphism, Symbol seed, std::size_t max_length = kDefaultMaxLength);

  // Ensures size() >= min_len. Throws ConfigError if min_len > max_length().
  void grow_to(std::size_t min_len);

  std::size_t size() const { return symbols_.size(); }
  std::size_t max_length() const { return max_length_; }
  std::size_t alphabet_size() const { return morphism_.alphabet_size(); }
  const Morphism& morphism() const { return morphism_; }
  Symbol seed() const { return seed_; }

  Symbol operator[](std::size_t pos) const { return symbols_[pos]; }
  WordView view() const { return symbols_; }

  // Factor of length len at position start. Throws RangeError when the
  // window leaves the buffer.
  WordView slice_view(std::size_t start, std::size_t len) const;
  Word slice(std::size_t start, std::size_t len) const;

  // Occurrences of letter among the first n symbols.
  std::int64_t prefix_count(Symbol letter, std::size_t n) const;

  // Occurrences of letter in the window [start, start + len); no range check.
  std::int64_t window_count(Symbol letter, std::size_t start, std::size_t len) const {
    const auto* counts = prefix_counts_[letter].data();
    return static_cast<std::int64_t>(counts[start + len]) - static_cast<std::int64_t>(counts[start]);
  }

 private:
  void rebuild_counts(std::size_t from);

  Morphism morphism_;
  Symbol seed_;
  std::size_t max_length_;
  Word symbols_;
  // prefix_counts_[letter][N] = |first N symbols|_letter
  std::vector<std::vector<std::uint32_t>> prefix_counts_;
};

// Buffer holding at least min_len symbols of the fixed point of morphism
// starting with seed.
WordBuffer fixed_point_prefix(const Morphism& morphism, Symbol seed, std::size_t min_len,
                              std::size_t max_length = WordBuffer::kDefaultMaxLength);

WordBuffer tribonacci_buffer(std::size_t min_len,
                             std::size_t max_length = WordBuffer::kDefaultMaxLength);

}  // namespace tribo
