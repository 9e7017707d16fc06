#pragma once

// Exact Artin-Mazur zeta expansions from fixed-point counts, the logarithmic
// derivative, and linear-recurrence (rationality) detection.

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "amzeta/fixed_points.hpp"

namespace amzeta {

/// c_0..c_K of exp(Σ a_n t^n / n).
struct ZetaSeries {
  std::vector<mpq_class> coeffs;
  std::vector<mpz_class> counts;  // a_1..a_K the series was built from

  std::size_t order() const noexcept { return coeffs.empty() ? 0 : coeffs.size() - 1; }
};

/// Uses counts[0..K-1] as a_1..a_K. Throws InvalidArgument if fewer than K.
ZetaSeries zeta_from_counts(std::span<const mpz_class> counts, std::size_t order);
/// Requires entries for n = 1..K in `seq`.
ZetaSeries zeta_from_counts(const FixSeq& seq, std::size_t order);

/// Coefficients s_0..s_{K-1} of ζ'/ζ; s_j reproduces a_{j+1}.
std::vector<mpq_class> log_derivative(const ZetaSeries& z);

/// s_n = Σ_{i=1}^{order} coeffs[i-1]·s_{n-i} for every n ≥ order in the window.
struct LinearRecurrence {
  std::vector<mpq_class> coeffs;

  std::size_t order() const noexcept { return coeffs.size(); }
  std::string to_string() const;
};

/// Minimal-order recurrence valid on the whole window (Berlekamp-Massey over
/// Q), or nullopt when every order ≤ max_order fails. Requires
/// seq.size() ≥ 2·max_order.
std::optional<LinearRecurrence> detect_linear_recurrence(std::span<const mpq_class> seq,
                                                         std::size_t max_order);
std::optional<LinearRecurrence> detect_linear_recurrence(std::span<const mpz_class> seq,
                                                         std::size_t max_order);

/// Polynomials in t with rational coefficients, low degree first.
using QPoly = std::vector<mpq_class>;

std::string qpoly_to_string(const QPoly& p, char var = 't');

/// numerator / denominator, coprime, denominator(0) = 1.
struct RationalFn {
  QPoly numerator;
  QPoly denominator;

  /// Power-series coefficients of degree 0..terms-1.
  std::vector<mpq_class> expand(std::size_t terms) const;
  /// "num(t) / den(t)".
  std::string to_string() const;

  friend bool operator==(const RationalFn&, const RationalFn&) = default;
};

struct RationalForms {
  RationalFn generating;             // Σ a_n t^{n-1}
  std::optional<RationalFn> zeta;    // when a_n = e·Σ α_i^n for an integer e
};

/// Generating function of a_1, a_2, ... from a recurrence and its initial
/// terms (initial[0] = a_1, at least `rec.order()` of them). Extra initial
/// terms must satisfy the recurrence, otherwise InvalidArgument.
RationalForms recurrence_to_rational(const LinearRecurrence& rec,
                                     std::span<const mpq_class> initial);

}  // namespace amzeta
