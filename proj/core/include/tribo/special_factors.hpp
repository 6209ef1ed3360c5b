#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "tribo/factor_scan.hpp"
#include "tribo/parikh.hpp"
#include "tribo/word.hpp"

namespace tribo {

// The unique right special factor of a given length, found by counting
// right extensions over a certified factor scan.
struct SpecialFactorRecord {
  std::size_t length = 0;
  std::size_t position = 0;  // an occurrence in the buffer
  Word word;
  ParikhVector parikh;  // (i, j, k)
  std::size_t right_extensions = 0;
  std::size_t left_extensions = 0;
  bool is_bispecial = false;
};

// Central(n) = {(i+1,j,k), (i,j+1,k), (i,j,k+1)} for (i,j,k) = Psi(r), r the
// right special factor of length n - 1.
struct CentralSet {
  std::size_t n = 0;
  std::array<ParikhVector, 3> vectors;
};

// B(n) = {(i-1,j+1,k+1), (i+1,j-1,k+1), (i+1,j+1,k-1)}; entries may be negative.
struct BSet {
  std::size_t n = 0;
  std::array<ParikhVector, 3> vectors;
};

// The twelve lattice vectors within max-norm distance 2 of every member of
// Central(n), their maximal subsets of pairwise distance <= 2, and which of
// those subsets contain Psi(n). Exhaustive search finds seven such subsets:
// three hexagons of 7, three outward triangles of 6, and the inward triangle
// Central(n) u B(n), also of 6.
struct GeometryResult {
  std::size_t n = 0;
  std::vector<ParikhVector> neighborhood;
  std::vector<std::vector<std::size_t>> maximal_sets;  // indices into neighborhood, largest first
  std::vector<std::size_t> containing;                 // indices into maximal_sets
  std::size_t central_b_set = 0;                       // index of Central(n) u B(n) in maximal_sets
  std::size_t rho = 0;
  bool fills_containing_set = false;  // Psi(n) equals one of the maximal sets
};

// The five conditions that characterize rho(n) = 3, evaluated independently.
struct EquivalenceRow {
  std::size_t n = 0;
  bool one_balanced = false;     // (1) every letter imbalance at length n is <= 1
  bool rho_is_3 = false;         // (2)
  bool misses_b_set = false;     // (3) Psi(n) and B(n) are disjoint
  bool bispecial = false;        // (4) the right special factor of length n-1 is bispecial
  bool closed_form = false;      // (5)
  std::size_t rho = 0;

  bool agree() const;
};

// Lengths (T_m + T_{m+2} - 3) / 2 <= max_len, m >= 0: 1, 3, 7, 14, 27, ...
std::vector<std::size_t> bispecial_lengths(std::size_t max_len);

// n = 1 or n = (T_m + T_{m+2} - 1) / 2 for some m >= 0.
bool rho3_closed_form(std::size_t n);

// The neighborhood of Central(n) with its maximal pairwise-close subsets;
// throws InvariantViolation if the structure is not 3 sets of 7 and 4 of 6,
// or if psi is not inside one of them.
GeometryResult twelve_vector_geometry(const ParikhSet& psi, const CentralSet& central);

CentralSet central_from(const SpecialFactorRecord& right_special);
BSet b_set_from(const SpecialFactorRecord& right_special);

// Special-factor queries on a Tribonacci buffer that has been grown in
// advance; const and safe to call concurrently.
class SpecialFactorAnalyzer {
 public:
  SpecialFactorAnalyzer(const WordBuffer& buffer, SaturationRule rule = {});

  const FactorScanner& scanner() const { return scanner_; }
  const SaturationRule& rule() const { return rule_; }

  ParikhSet parikh_set(std::size_t n) const;
  SpecialFactorRecord right_special_factor(std::size_t len) const;

  // Also checks Central(n) is contained in Psi(n).
  CentralSet central_set(std::size_t n) const;
  BSet b_set(std::size_t n) const;

  // |tau(r) 0| + 1 for r the right special factor of length n - 1; checked
  // against n + i + j + 1.
  std::size_t phi(std::size_t n) const;

  GeometryResult geometry(std::size_t n) const;
  EquivalenceRow equivalence_row(std::size_t n) const;

 private:
  const WordBuffer& buffer_;
  SaturationRule rule_;
  FactorScanner scanner_;
};

// Buffer length that lets an analyzer answer queries up to length max_n.
std::size_t analyzer_buffer_length(std::size_t max_n, const SaturationRule& rule = {});

// Convenience wrappers that grow the buffer themselves.
SpecialFactorRecord right_special_factor(WordBuffer& buffer, std::size_t len, const SaturationRule& rule = {});
CentralSet central_set(WordBuffer& buffer, std::size_t n, const SaturationRule& rule = {});
BSet b_set(WordBuffer& buffer, std::size_t n, const SaturationRule& rule = {});
std::size_t phi(WordBuffer& buffer, std::size_t n, const SaturationRule& rule = {});
GeometryResult twelve_vector_geometry(WordBuffer& buffer, std::size_t n, const SaturationRule& rule = {});

// Evaluates the five conditions for every n in [1, n_max]; throws
// VerificationFailure naming n and the disagreeing conditions.
std::vector<EquivalenceRow> verify_equivalences(WordBuffer& buffer, std::size_t n_max,
                                                const SaturationRule& rule = {}, unsigned threads = 0);

// `n,right_special_word,i,j,k,bispecial,rho,rho3_closed_form`
std::string special_csv_header();
std::string special_csv_row(const SpecialFactorRecord& record, std::size_t rho);

}  // namespace tribo
