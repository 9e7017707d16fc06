#pragma once

// Dense univariate polynomials over F_{p^m}, with composition/iteration and
// distinct-root counting over the algebraic closure via the characteristic-p
// squarefree part.

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "amzeta/finite_field.hpp"

namespace amzeta {

inline constexpr std::size_t kDefaultDegreeCap = 200'000;

class Poly {
 public:
  /// The zero polynomial over `field`.
  explicit Poly(const FieldDesc& field) : field_(&field) {}
  /// Coefficients low degree first; trailing zeros are stripped.
  Poly(const FieldDesc& field, std::vector<FieldElem> coeffs);

  static Poly constant(const FieldElem& c);
  /// c·x^e.
  static Poly monomial(const FieldElem& c, std::size_t e);
  /// The identity map x.
  static Poly x(const FieldDesc& field);

  const FieldDesc& field() const noexcept { return *field_; }
  bool is_zero() const noexcept { return c_.empty(); }
  /// -1 for the zero polynomial.
  std::ptrdiff_t degree() const noexcept { return static_cast<std::ptrdiff_t>(c_.size()) - 1; }
  std::span<const FieldElem> coeffs() const noexcept { return c_; }
  /// Zero beyond the degree.
  FieldElem coeff(std::size_t i) const;
  const FieldElem& leading() const;
  std::size_t nonzero_terms() const;

  Poly derivative() const;
  /// Scaled to leading coefficient 1; zero stays zero.
  Poly monic() const;
  FieldElem operator()(const FieldElem& x) const;

  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator*(const Poly& o) const;
  Poly operator*(const FieldElem& c) const;
  Poly& operator+=(const Poly& o) { return *this = *this + o; }
  Poly& operator-=(const Poly& o) { return *this = *this - o; }
  Poly& operator*=(const Poly& o) { return *this = *this * o; }

  bool operator==(const Poly& o) const noexcept {
    return field_ == o.field_ && c_ == o.c_;
  }

  /// High degree first, e.g. "x^9 + 2*x^3 + x"; "0" for zero.
  std::string to_string() const;

 private:
  void normalize();
  void require_same_field(const Poly& o) const;

  const FieldDesc* field_;
  std::vector<FieldElem> c_;
};

struct DivRem {
  Poly quotient;
  Poly remainder;
};

/// Throws DivisionByZero when `b` is zero.
DivRem divrem(const Poly& a, const Poly& b);
/// Monic gcd; gcd(0, 0) = 0.
Poly gcd(const Poly& a, const Poly& b);

/// f(g(x)) by Horner's rule.
Poly compose(const Poly& f, const Poly& g);

/// The n-fold composite f∘...∘f. Throws ResourceLimit when (deg f)^n exceeds
/// `degree_cap`; the exception carries the required degree.
Poly iterate(const Poly& f, std::uint64_t n, std::size_t degree_cap = kDefaultDegreeCap);

/// Σ taps[k]·x^{p^{km}} over F_{p^m}.
struct AdditiveForm {
  const FieldDesc* field;
  std::vector<FieldElem> taps;

  std::uint32_t p() const noexcept { return field->characteristic(); }
  unsigned m() const noexcept { return field->degree(); }
  /// Throws ResourceLimit when p^{km} of the top tap exceeds `degree_cap`.
  Poly to_poly(std::size_t degree_cap = kDefaultDegreeCap) const;
};

/// C(n, k) mod p via Lucas' theorem.
std::uint32_t binomial_mod_p(std::uint64_t n, std::uint64_t k, std::uint32_t p);

/// n-th iterate of x^{p^m} + a·x over F_{p^m} in additive form, with
/// taps[k] = C(n, k)·a^{n-k}. Requires a ≠ 0 and n ≥ 1.
AdditiveForm additive_iterate(const FieldElem& a, std::uint64_t n);

/// Monic product of the distinct irreducible factors of g. Throws
/// InvalidArgument for the zero polynomial.
Poly squarefree_part(const Poly& g);

/// Number of distinct roots of g in the algebraic closure.
std::uint64_t distinct_root_count(const Poly& g);

/// Parses an element: a residue "c" or "[c0,c1,...]" (low degree first).
FieldElem parse_element(std::string_view text, const FieldDesc& field);

/// Parses terms `c*x^e` joined by '+' (or '-'); whitespace is ignored.
Poly parse_poly(std::string_view text, const FieldDesc& field);

}  // namespace amzeta
