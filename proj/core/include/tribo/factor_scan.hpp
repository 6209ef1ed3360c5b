#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "tribo/error.hpp"
#include "tribo/parikh.hpp"
#include "tribo/word.hpp"

namespace tribo {

// 128-bit window fingerprint: two independent polynomial hashes mod 2^61 - 1.
struct Fingerprint {
  std::uint64_t lo = 0;
  std::uint64_t hi = 0;
  bool operator==(const Fingerprint&) const = default;
};

struct FingerprintHash {
  std::size_t operator()(const Fingerprint& f) const noexcept {
    return static_cast<std::size_t>(f.lo ^ (f.hi * 0x9e3779b97f4a7c15ULL));
  }
};

// Prefix hashes over a fixed symbol sequence; any window's fingerprint in O(1).
class PrefixHasher {
 public:
  explicit PrefixHasher(WordView symbols);

  std::size_t size() const { return prefix_lo_.size() - 1; }
  Fingerprint window(std::size_t start, std::size_t len) const;

 private:
  std::vector<std::uint64_t> prefix_lo_, prefix_hi_;
  std::vector<std::uint64_t> pow_lo_, pow_hi_;
};

// When to stop scanning windows of a given length.
//
// kCertified stops as soon as the number of distinct factors reaches the
// target ((m-1)n + 1 by default, the complexity of an Arnoux-Rauzy word); the
// result is then known to contain every factor. Reaching the cap first is a
// SaturationFailure. kFixedScan examines exactly cap windows and never
// certifies completeness.
struct SaturationRule {
  enum class Mode { kCertified, kFixedScan };

  Mode mode = Mode::kCertified;
  std::optional<std::size_t> target;
  std::optional<std::size_t> scan_cap;

  static std::size_t default_cap(std::size_t n) { return 64 * n + 4096; }

  std::size_t cap_for(std::size_t n) const { return scan_cap ? *scan_cap : default_cap(n); }
  std::size_t target_for(std::size_t n, std::size_t alphabet_size) const {
    return target ? *target : (alphabet_size - 1) * n + 1;
  }
  // Buffer length needed so that cap_for(n) windows of length n fit.
  std::size_t buffer_length_for(std::size_t n) const { return cap_for(n) + n; }

  static SaturationRule certified() { return {}; }
  static SaturationRule fixed_scan(std::size_t positions) {
    return {Mode::kFixedScan, std::nullopt, positions};
  }
};

// Distinct factors of one length, each represented by its first occurrence.
struct FactorScan {
  std::size_t n = 0;
  std::vector<std::size_t> first_positions;  // in order of discovery
  std::size_t positions_scanned = 0;
  bool certified = false;

  std::size_t factor_count() const { return first_positions.size(); }
};

// Psi_w(n): the Parikh vectors of the length-n factors found by a scan.
struct ParikhSet {
  std::size_t n = 0;
  std::vector<ParikhVector> vectors;  // sorted, unique
  std::size_t factor_count = 0;
  bool certified = false;

  std::size_t rho() const { return vectors.size(); }
  bool contains(const ParikhVector& v) const;
};

class SaturationFailure : public Error {
 public:
  SaturationFailure(const std::string& what, ParikhSet partial)
      : Error(what), partial_(std::move(partial)) {}
  const ParikhSet& partial() const { return partial_; }

 private:
  ParikhSet partial_;
};

// Counts distinct factors exactly. Fingerprint hits are confirmed by symbol
// comparison; a window that extends an already-confirmed match is confirmed
// by comparing its last symbol only.
//
// Holds a reference to the buffer, which must not grow while the scanner
// lives. All methods are const and may run concurrently.
class FactorScanner {
 public:
  explicit FactorScanner(const WordBuffer& buffer);

  const WordBuffer& buffer() const { return buffer_; }
  const PrefixHasher& hasher() const { return hasher_; }

  FactorScan scan(std::size_t n, const SaturationRule& rule = {}) const;

  ParikhSet parikh_set(const FactorScan& scan) const;
  ParikhSet parikh_set(std::size_t n, const SaturationRule& rule = {}) const {
    return parikh_set(scan(n, rule));
  }

  bool windows_equal(std::size_t a, std::size_t b, std::size_t len) const;

 private:
  const WordBuffer& buffer_;
  PrefixHasher hasher_;
};

}  // namespace tribo
