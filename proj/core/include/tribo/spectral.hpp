#pragma once

#include <array>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

#include "tribo/word.hpp"

namespace tribo {

using Complex = std::complex<double>;

// Eigendata of the Tribonacci incidence matrix
//
//   M = [[1,1,1],[1,0,0],[0,1,0]],  char. polynomial x^3 - x^2 - x - 1,
//
// with the dominant root beta, the complex root alpha (positive imaginary
// part), eigenvectors normalized to coordinate sum 1, and the coefficients
// of e_1 = a_beta v_beta + a_alpha v_alpha + conj(a_alpha) conj(v_alpha).
struct SpectralData {
  double beta = 0;
  Complex alpha;
  std::array<double, 3> v_beta{};    // (beta^-1, beta^-2, beta^-3)
  std::array<Complex, 3> v_alpha{};  // (alpha^-1, alpha^-2, alpha^-3)
  double a_beta = 0;
  Complex a_alpha;

  double abs_alpha() const { return std::abs(alpha); }
  double abs_a_alpha() const { return std::abs(a_alpha); }

  // Freq(i) = beta^-(i+1) = <v_beta, e_i>.
  double letter_frequency(std::size_t letter) const;

  // alpha^-(i+1) - beta^-(i+1) = <v_alpha - v_beta, e_i>.
  Complex letter_factor(std::size_t letter) const;

  // |alpha^-(i+1) - beta^-(i+1)|
  double factor_magnitude(std::size_t letter) const { return std::abs(letter_factor(letter)); }

  // 2 Re(a_alpha (alpha^-(i+1) - beta^-(i+1)) alpha^k): the contribution of
  // digit p_k = 1 to the discrepancy of letter i.
  double digit_term(std::size_t letter, std::size_t k) const;
};

// Newton iteration from 2.0 until |f(beta)| < tolerance (at most 100 steps),
// alpha from the deflated quadratic x^2 + (beta-1)x + (beta^2-beta-1).
// Throws NumericError if Newton does not converge.
SpectralData compute_spectral_data(double tolerance = 1e-14);

double letter_frequency(const SpectralData& sd, std::size_t letter);

// |u_0 ... u_{N-1}|_i - N Freq(i), counted from the buffer.
double discrepancy_direct(const WordBuffer& buffer, std::size_t n, std::size_t letter, const SpectralData& sd);

// The same quantity from the Tribonacci representation of N:
//   sum_k 2 p_k Re(a_alpha (alpha^-(i+1) - beta^-(i+1)) alpha^k).
double discrepancy_spectral(std::uint64_t n, std::size_t letter, const SpectralData& sd);

struct HeadExtremes {
  double sl_min = 0;
  double sl_max = 0;
};

// Extremes of the head sum S_L over digits p_0..p_K. Unconstrained: each
// digit picks its own sign (sum of negative / positive terms). Constrained:
// digit strings obey the no-three-ones rule.
HeadExtremes head_extremes(const SpectralData& sd, std::size_t letter, std::size_t head_cutoff,
                           bool constrained);

// Bound on |S_R| over digits k > K:
//   2 |a_alpha| |alpha^-(i+1) - beta^-(i+1)| |alpha|^(K+1) / (1 - |alpha|).
double tail_cap(const SpectralData& sd, std::size_t letter, std::size_t head_cutoff);

// Largest integer strictly below 2(B - A). Throws InvalidInput unless A < B.
std::int64_t balance_bound_from_interval(double lower, double upper);

struct DiscrepancyInterval {
  std::size_t letter = 0;
  double lower = 0;
  double upper = 0;
};

struct BoundDerivation {
  std::size_t letter = 0;
  std::size_t head_cutoff = 0;
  HeadExtremes unconstrained;
  HeadExtremes constrained;
  double sr_cap = 0;
  DiscrepancyInterval interval;       // [sl_min - sr_cap, sl_max + sr_cap], unconstrained head
  DiscrepancyInterval target;         // interval the derivation must land in
  std::int64_t balance_bound = 0;
};

// Target per-letter intervals and head cutoffs: letter 0 with K = 7 in
// (-0.6, 0.9), letter 1 with K = 10 in (-0.775, 0.725), letter 2 with
// K = 13 in (-0.88, 0.62).
struct LetterBoundSpec {
  std::size_t letter;
  std::size_t head_cutoff;
  double lower;
  double upper;
};
const std::array<LetterBoundSpec, 3>& tribonacci_bound_specs();

// Builds the three derivations and checks each interval lies inside its
// target; throws VerificationFailure naming the letter otherwise.
std::vector<BoundDerivation> derive_balance_proof(const SpectralData& sd);

}  // namespace tribo
