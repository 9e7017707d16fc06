#pragma once

// Exact integer number theory on arbitrary-precision integers: p-adic
// valuations, multiplicative orders, linear congruences, prime search,
// Kummer borrow counting and lifting-the-exponent valuations.

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace amzeta::nt {

/// v_p(n) with the standard sign convention v_p(p) = 1. Zero has infinite
/// valuation, represented by an empty `value`.
struct Valuation {
  std::optional<std::uint64_t> value;

  bool infinite() const noexcept { return !value.has_value(); }
  /// Throws InvalidArgument when infinite.
  std::uint64_t finite() const;

  friend bool operator==(const Valuation&, const Valuation&) = default;
};

/// Residue class x ≡ residue (mod modulus), modulus ≥ 1, 0 ≤ residue < modulus.
struct ResidueClass {
  mpz_class residue;
  mpz_class modulus;

  /// Smallest member strictly greater than `bound`.
  mpz_class first_above(const mpz_class& bound) const;
  bool contains(const mpz_class& x) const;
};

struct PrimePower {
  mpz_class prime;
  unsigned exponent;
};

// -- primality & factoring -------------------------------------------------

/// Deterministic Miller-Rabin below 3.3e24; 64 seeded rounds above.
bool is_prime(const mpz_class& n);

/// Trial division followed by Brent-Pollard rho. Factors sorted by prime.
std::vector<PrimePower> factor(const mpz_class& n);

// -- valuations ------------------------------------------------------------

Valuation vp(const mpz_class& p, const mpz_class& n);

/// n / p^{v_p(n)} for nonzero n.
mpz_class strip_p(const mpz_class& p, const mpz_class& n);

/// v_p(C(n, l)) as the number of borrows when subtracting l from n in base p.
std::uint64_t kummer_vp_binomial(const mpz_class& p, const mpz_class& n,
                                 const mpz_class& l);

/// Smallest l ≥ 1 such that p does not divide C(n, l). Equals p^{v_p(n)}.
mpz_class least_nonvanishing_binomial(const mpz_class& p, const mpz_class& n);

/// For p = 2 (m odd): v_2(m^{2n} - 1) = v_2(n) + v_2(m^2 - 1).
/// For odd p (p ∤ m): v_p(m^{(p-1)n} - 1) = v_p(n) + v_p(m^{p-1} - 1).
std::uint64_t lte_valuation(const mpz_class& p, const mpz_class& m,
                            const mpz_class& n);

// -- modular arithmetic ----------------------------------------------------

/// Nonnegative representative of a mod n.
mpz_class mod(const mpz_class& a, const mpz_class& n);
mpz_class powmod(const mpz_class& base, const mpz_class& exp, const mpz_class& n);
/// Throws InvalidArgument when gcd(a, n) != 1.
mpz_class invmod(const mpz_class& a, const mpz_class& n);

/// Carmichael function λ(n) for n ≥ 1.
mpz_class carmichael(const mpz_class& n);

/// Least k ≥ 1 with a^k ≡ 1 (mod n).
mpz_class mult_order(const mpz_class& a, const mpz_class& n);

/// All solutions of a·x ≡ b (mod M), or nullopt when gcd(a, M) ∤ b.
std::optional<ResidueClass> solve_congruence(const mpz_class& a, const mpz_class& b,
                                             const mpz_class& M);

inline constexpr std::uint64_t kDefaultPrimeSearchCap = 10'000'000;

/// Smallest prime q > lower_bound with q ≡ residue (mod modulus). Throws
/// SearchExhausted after `max_steps` candidates.
mpz_class find_prime(const mpz_class& residue, const mpz_class& modulus,
                     const mpz_class& lower_bound,
                     std::uint64_t max_steps = kDefaultPrimeSearchCap);

/// Möbius function μ(n) for n ≥ 1.
int moebius(std::uint64_t n);

/// Positive divisors of n in increasing order.
std::vector<std::uint64_t> divisors(std::uint64_t n);

/// Decimal rendering.
std::string to_string(const mpz_class& n);

}  // namespace amzeta::nt
