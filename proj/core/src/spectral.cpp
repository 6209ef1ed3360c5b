#include "tribo/spectral.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <limits>

#include "tribo/error.hpp"
#include "tribo/numeration.hpp"

namespace tribo {

double SpectralData::letter_frequency(std::size_t letter) const {
  if (letter > 2) {
    throw InvalidInput("Tribonacci letters are 0, 1, 2");
  }
  return v_beta[letter];
}

Complex SpectralData::letter_factor(std::size_t letter) const {
  if (letter > 2) {
    throw InvalidInput("Tribonacci letters are 0, 1, 2");
  }
  return v_alpha[letter] - v_beta[letter];
}

double SpectralData::digit_term(std::size_t letter, std::size_t k) const {
  return 2.0 * (a_alpha * letter_factor(letter) * std::pow(alpha, static_cast<double>(k))).real();
}

SpectralData compute_spectral_data(double tolerance) {
  if (!(tolerance > 0)) {
    throw InvalidInput("tolerance must be positive");
  }
  auto f = [](double x) { return ((x - 1) * x - 1) * x - 1; };
  auto df = [](double x) { return (3 * x - 2) * x - 1; };

  double beta = 2.0;
  bool converged = false;
  for (int iter = 0; iter < 100; ++iter) {
    if (std::abs(f(beta)) < tolerance) {
      converged = true;
      break;
    }
    beta -= f(beta) / df(beta);
  }
  if (!converged) {
    throw NumericError("Newton iteration for beta did not reach residual " + std::to_string(tolerance));
  }

  SpectralData sd;
  sd.beta = beta;
  // x^3 - x^2 - x - 1 = (x - beta)(x^2 + (beta - 1) x + (beta^2 - beta - 1))
  const double b = beta - 1;
  const double c = beta * beta - beta - 1;
  const double disc = b * b - 4 * c;
  if (disc >= 0) {
    throw NumericError("deflated quadratic has real roots");
  }
  sd.alpha = Complex(-b / 2, std::sqrt(-disc) / 2);

  for (std::size_t i = 0; i < 3; ++i) {
    sd.v_beta[i] = std::pow(beta, -static_cast<double>(i + 1));
    sd.v_alpha[i] = std::pow(sd.alpha, -static_cast<double>(i + 1));
  }

  Eigen::Matrix3cd basis;
  for (int i = 0; i < 3; ++i) {
    basis(i, 0) = sd.v_beta[i];
    basis(i, 1) = sd.v_alpha[i];
    basis(i, 2) = std::conj(sd.v_alpha[i]);
  }
  const Eigen::Vector3cd e1(1.0, 0.0, 0.0);
  const Eigen::Vector3cd coeffs = basis.fullPivLu().solve(e1);
  sd.a_beta = coeffs(0).real();
  sd.a_alpha = coeffs(1);
  if (!std::isfinite(sd.a_beta) || !std::isfinite(sd.a_alpha.real()) || !std::isfinite(sd.a_alpha.imag())) {
    throw NumericError("eigenvector coefficient system is singular");
  }
  return sd;
}

double letter_frequency(const SpectralData& sd, std::size_t letter) { return sd.letter_frequency(letter); }

double discrepancy_direct(const WordBuffer& buffer, std::size_t n, std::size_t letter, const SpectralData& sd) {
  const auto count = buffer.prefix_count(static_cast<Symbol>(letter), n);
  return static_cast<double>(count) - static_cast<double>(n) * sd.letter_frequency(letter);
}

double discrepancy_spectral(std::uint64_t n, std::size_t letter, const SpectralData& sd) {
  const ZeckendorfRep rep = zeckendorf_encode(n);
  const Complex factor = sd.a_alpha * sd.letter_factor(letter);
  Complex sum = 0;
  Complex power = 1;
  for (auto digit : rep.digits) {
    if (digit) sum += power;
    power *= sd.alpha;
  }
  return 2.0 * (factor * sum).real();
}

HeadExtremes head_extremes(const SpectralData& sd, std::size_t letter, std::size_t head_cutoff,
                           bool constrained) {
  std::vector<double> terms(head_cutoff + 1);
  for (std::size_t k = 0; k <= head_cutoff; ++k) {
    terms[k] = sd.digit_term(letter, k);
  }
  HeadExtremes out;
  if (!constrained) {
    for (double t : terms) {
      (t > 0 ? out.sl_max : out.sl_min) += t;
    }
    return out;
  }
  // Extremes over digit strings with no three consecutive ones; the state
  // is the length of the trailing run of ones (0, 1 or 2).
  constexpr double kInf = std::numeric_limits<double>::infinity();
  std::array<double, 3> lo{0, kInf, kInf};
  std::array<double, 3> hi{0, -kInf, -kInf};
  for (double t : terms) {
    std::array<double, 3> next_lo{kInf, kInf, kInf};
    std::array<double, 3> next_hi{-kInf, -kInf, -kInf};
    for (int run = 0; run < 3; ++run) {
      if (lo[run] == kInf) continue;
      next_lo[0] = std::min(next_lo[0], lo[run]);
      next_hi[0] = std::max(next_hi[0], hi[run]);
      if (run < 2) {
        next_lo[run + 1] = std::min(next_lo[run + 1], lo[run] + t);
        next_hi[run + 1] = std::max(next_hi[run + 1], hi[run] + t);
      }
    }
    lo = next_lo;
    hi = next_hi;
  }
  out.sl_min = *std::min_element(lo.begin(), lo.end());
  out.sl_max = *std::max_element(hi.begin(), hi.end());
  return out;
}

double tail_cap(const SpectralData& sd, std::size_t letter, std::size_t head_cutoff) {
  const double r = sd.abs_alpha();
  return 2.0 * sd.abs_a_alpha() * sd.factor_magnitude(letter) * std::pow(r, static_cast<double>(head_cutoff + 1)) /
         (1.0 - r);
}

std::int64_t balance_bound_from_interval(double lower, double upper) {
  if (!(lower < upper)) {
    throw InvalidInput("interval needs lower < upper");
  }
  const double width = 2.0 * (upper - lower);
  const double floor = std::floor(width);
  // Count differences are integers strictly below 2(B - A).
  const auto bound = static_cast<std::int64_t>(floor);
  return floor == width ? bound - 1 : bound;
}

const std::array<LetterBoundSpec, 3>& tribonacci_bound_specs() {
  static const std::array<LetterBoundSpec, 3> specs{{
      {0, 7, -0.6, 0.9},
      {1, 10, -0.775, 0.725},
      {2, 13, -0.88, 0.62},
  }};
  return specs;
}

std::vector<BoundDerivation> derive_balance_proof(const SpectralData& sd) {
  std::vector<BoundDerivation> out;
  for (const auto& spec : tribonacci_bound_specs()) {
    BoundDerivation d;
    d.letter = spec.letter;
    d.head_cutoff = spec.head_cutoff;
    d.unconstrained = head_extremes(sd, spec.letter, spec.head_cutoff, false);
    d.constrained = head_extremes(sd, spec.letter, spec.head_cutoff, true);
    d.sr_cap = tail_cap(sd, spec.letter, spec.head_cutoff);
    d.interval = {spec.letter, d.unconstrained.sl_min - d.sr_cap, d.unconstrained.sl_max + d.sr_cap};
    d.target = {spec.letter, spec.lower, spec.upper};
    if (!(d.interval.lower > spec.lower && d.interval.upper < spec.upper)) {
      throw VerificationFailure("letter " + std::to_string(spec.letter) + ": derived interval [" +
                                std::to_string(d.interval.lower) + ", " + std::to_string(d.interval.upper) +
                                "] is not inside (" + std::to_string(spec.lower) + ", " +
                                std::to_string(spec.upper) + ")");
    }
    d.balance_bound = balance_bound_from_interval(d.interval.lower, d.interval.upper);
    out.push_back(d);
  }
  return out;
}

}  // namespace tribo
