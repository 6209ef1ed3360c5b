#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "tribo/factor_scan.hpp"
#include "tribo/parikh.hpp"
#include "tribo/word.hpp"

namespace tribo {

// Psi(n) for the fixed point held in buffer. Grows the buffer to fit the
// scan cap; throws SaturationFailure carrying the partial set.
ParikhSet parikh_set(WordBuffer& buffer, std::size_t n, const SaturationRule& rule = {});

// rho(n) = |Psi(n)|.
std::size_t abelian_complexity(WordBuffer& buffer, std::size_t n, const SaturationRule& rule = {});

// rho(n) for every n in [from, to], computed on `threads` workers.
std::vector<std::size_t> abelian_complexity_range(WordBuffer& buffer, std::size_t from, std::size_t to,
                                                  const SaturationRule& rule = {}, unsigned threads = 0);

// For one length: rho and, per letter, max - min of the letter count over
// all length-n factors (the largest pairwise imbalance).
struct BalanceRow {
  std::size_t n = 0;
  std::size_t rho = 0;
  std::vector<std::int64_t> max_imbalance;  // one entry per letter

  std::int64_t overall() const;
};

std::vector<BalanceRow> balance_profile(WordBuffer& buffer, std::size_t max_len,
                                        const SaturationRule& rule = {}, unsigned threads = 0);

// CSV with header `n,rho,max_imbalance_0,...`.
std::string balance_profile_csv(const std::vector<BalanceRow>& rows, std::size_t alphabet_size);

// Two equal-length windows compared on one letter.
struct BalanceWitness {
  Symbol letter = 0;
  std::size_t length = 0;
  std::size_t pos_u = 0;
  std::size_t pos_v = 0;
  std::int64_t count_u = 0;
  std::int64_t count_v = 0;
  std::int64_t diff = 0;  // |count_u - count_v|

  // `letter,length,pos_u,pos_v,count_u,count_v`
  static std::string csv_header();
  std::string csv_row() const;
};

BalanceWitness verify_witness(const WordBuffer& buffer, Symbol letter, std::size_t pos_u, std::size_t pos_v,
                              std::size_t len);

// Smallest length n <= max_len having two windows inside the first scan_len
// symbols whose letter counts differ by at least target_diff. pos_u holds
// the larger count.
std::optional<BalanceWitness> imbalance_witness_search(const WordBuffer& buffer, Symbol letter,
                                                       std::int64_t target_diff, std::size_t max_len,
                                                       std::size_t scan_len);

// For every coordinate, the values taken over the set form an integer interval.
bool coordinate_interval_check(const ParikhSet& set);

// Every length-n factor is within 1 of the length-n prefix on every letter.
bool prefix_balance_check(WordBuffer& buffer, std::size_t n, const SaturationRule& rule = {});

// --- Tribonacci desubstitution ---------------------------------------------

// How U relates to tau(u): U = tau(u), 0^-1 tau(u), tau(u) 0, or 0^-1 tau(u) 0.
enum class DesubstitutionForm { kPlain, kDrop0, kAppend0, kDrop0Append0 };

std::string to_string(DesubstitutionForm form);

struct Desubstitution {
  Word u;
  DesubstitutionForm form = DesubstitutionForm::kPlain;
  int delta = 0;  // Psi(U) = (|u| + delta, |u|_0, |u|_1)
};

// Decomposes a non-empty Tribonacci factor. Throws NotAFactor for words
// that are not factors of the Tribonacci word.
Desubstitution desubstitute(WordView factor);

// Inverse of desubstitute.
Word reconstruct(const Desubstitution& d);

// Exact membership in the factor language of the Tribonacci word, by
// repeated desubstitution.
bool is_tribonacci_factor(WordView word);

}  // namespace tribo
