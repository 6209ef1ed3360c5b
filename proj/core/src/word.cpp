#include "tribo/word.hpp"

#include <algorithm>
#include <limits>

#include "tribo/error.hpp"

namespace tribo {

Word parse_word(std::string_view text) {
  Word word;
  word.reserve(text.size());
  for (char c : text) {
    if (c < '0' || c > '9') {
      throw InvalidInput(std::string("not a digit in word text: '") + c + "'");
    }
    word.push_back(static_cast<Symbol>(c - '0'));
  }
  return word;
}

std::string format_word(WordView word) {
  std::string text;
  text.reserve(word.size());
  for (Symbol s : word) {
    if (s > 9) {
      throw InvalidInput("symbol " + std::to_string(s) + " has no single-digit text form");
    }
    text.push_back(static_cast<char>('0' + s));
  }
  return text;
}

IncidenceMatrix::IncidenceMatrix(std::size_t size) : size_(size), entries_(size * size, 0) {}

std::vector<std::int64_t> IncidenceMatrix::apply(std::span<const std::int64_t> x) const {
  if (x.size() != size_) {
    throw InvalidInput("vector length does not match matrix size");
  }
  std::vector<std::int64_t> y(size_, 0);
  for (std::size_t i = 0; i < size_; ++i) {
    for (std::size_t j = 0; j < size_; ++j) {
      y[i] += at(i, j) * x[j];
    }
  }
  return y;
}

Morphism::Morphism(std::vector<Word> images) : images_(std::move(images)) {
  if (images_.empty() || images_.size() > kMaxAlphabetSize) {
    throw InvalidInput("alphabet size must be in [1, 256], got " + std::to_string(images_.size()));
  }
  for (const auto& image : images_) {
    for (Symbol s : image) {
      if (s >= images_.size()) {
        throw InvalidInput("image symbol " + std::to_string(s) + " outside alphabet of size " +
                           std::to_string(images_.size()));
      }
    }
  }
}

const Word& Morphism::image(Symbol letter) const {
  if (letter >= images_.size()) {
    throw InvalidInput("symbol " + std::to_string(letter) + " outside alphabet");
  }
  return images_[letter];
}

void Morphism::apply_into(WordView word, Word& out) const {
  for (Symbol s : word) {
    const Word& img = image(s);
    out.insert(out.end(), img.begin(), img.end());
  }
}

Word Morphism::apply(WordView word) const {
  Word out;
  apply_into(word, out);
  return out;
}

bool Morphism::prolongable(Symbol seed) const {
  if (seed >= images_.size()) {
    return false;
  }
  const Word& img = images_[seed];
  return img.size() >= 2 && img.front() == seed;
}

IncidenceMatrix Morphism::incidence_matrix() const {
  IncidenceMatrix m(images_.size());
  for (std::size_t j = 0; j < images_.size(); ++j) {
    for (Symbol s : images_[j]) {
      ++m.at(s, j);
    }
  }
  return m;
}

Morphism tribonacci_morphism() { return mbonacci_morphism(3); }

Morphism mbonacci_morphism(int m) {
  if (m < 2 || static_cast<std::size_t>(m) > kMaxAlphabetSize) {
    throw InvalidInput("m-bonacci needs 2 <= m <= 256, got " + std::to_string(m));
  }
  std::vector<Word> images;
  images.reserve(m);
  for (int i = 0; i + 1 < m; ++i) {
    images.push_back({0, static_cast<Symbol>(i + 1)});
  }
  images.push_back({0});
  return Morphism(std::move(images));
}

WordBuffer::WordBuffer(Morphism morphism, Symbol seed, std::size_t max_length)
    : morphism_(std::move(morphism)), seed_(seed), max_length_(max_length) {
  if (!morphism_.prolongable(seed_)) {
    throw ConfigError("morphism is not prolongable at seed " + std::to_string(seed_));
  }
  if (max_length_ == 0 || max_length_ > std::numeric_limits<std::uint32_t>::max()) {
    throw ConfigError("maximum buffer length must be in [1, 2^32)");
  }
  symbols_.push_back(seed_);
  prefix_counts_.assign(morphism_.alphabet_size(), std::vector<std::uint32_t>{0});
  rebuild_counts(0);
}

void WordBuffer::grow_to(std::size_t min_len) {
  if (min_len <= symbols_.size()) {
    return;
  }
  if (min_len > max_length_) {
    throw ConfigError("requested " + std::to_string(min_len) + " symbols exceeds buffer maximum " +
                      std::to_string(max_length_));
  }
  // Geometric growth keeps repeated small requests amortized.
  const std::size_t target = std::min(max_length_, std::max(min_len, 2 * symbols_.size()));
  const std::size_t old_size = symbols_.size();
  Word next;
  while (symbols_.size() < target) {
    next.clear();
    next.reserve(symbols_.size() * 2);
    morphism_.apply_into(symbols_, next);
    if (next.size() <= symbols_.size()) {
      throw ConfigError("fixed point is finite: morphism does not grow the seed word");
    }
    symbols_.swap(next);
  }
  symbols_.resize(target);
  rebuild_counts(old_size);
}

void WordBuffer::rebuild_counts(std::size_t from) {
  const std::size_t n = symbols_.size();
  for (auto& counts : prefix_counts_) {
    counts.resize(n + 1);
  }
  for (std::size_t pos = from; pos < n; ++pos) {
    for (std::size_t letter = 0; letter < prefix_counts_.size(); ++letter) {
      prefix_counts_[letter][pos + 1] = prefix_counts_[letter][pos] + (symbols_[pos] == letter ? 1 : 0);
    }
  }
}

WordView WordBuffer::slice_view(std::size_t start, std::size_t len) const {
  if (start > symbols_.size() || len > symbols_.size() - start) {
    throw RangeError("window [" + std::to_string(start) + ", +" + std::to_string(len) +
                     ") outside buffer of length " + std::to_string(symbols_.size()));
  }
  return WordView(symbols_).subspan(start, len);
}

Word WordBuffer::slice(std::size_t start, std::size_t len) const {
  auto view = slice_view(start, len);
  return Word(view.begin(), view.end());
}

std::int64_t WordBuffer::prefix_count(Symbol letter, std::size_t n) const {
  if (letter >= prefix_counts_.size()) {
    throw InvalidInput("symbol " + std::to_string(letter) + " outside alphabet");
  }
  if (n > symbols_.size()) {
    throw RangeError("prefix length " + std::to_string(n) + " exceeds buffer length " +
                     std::to_string(symbols_.size()));
  }
  return prefix_counts_[letter][n];
}

WordBuffer fixed_point_prefix(const Morphism& morphism, Symbol seed, std::size_t min_len,
                              std::size_t max_length) {
  if (min_len < 1) {
    throw InvalidInput("fixed point prefix length must be >= 1");
  }
  WordBuffer buffer(morphism, seed, max_length);
  buffer.grow_to(min_len);
  return buffer;
}

WordBuffer tribonacci_buffer(std::size_t min_len, std::size_t max_length) {
  return fixed_point_prefix(tribonacci_morphism(), 0, min_len, max_length);
}

}  // namespace tribo
