#pragma once

// Arithmetic in F_{p^m} = F_p[t] / (modulus), with the modulus chosen as the
// lexicographically smallest monic irreducible of degree m.

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace amzeta {

class FieldElem;

inline constexpr unsigned kMaxExtensionDegree = 8;

/// An immutable description of F_{p^m}. Instances are interned per (p, m), so
/// two elements belong to the same field iff their descriptors are the same
/// object.
class FieldDesc {
 public:
  /// Looks up or builds F_{p^m}. Requires p prime, 1 <= m <= kMaxExtensionDegree
  /// and p < 2^31.
  static const FieldDesc& get(std::uint32_t p, unsigned m);

  FieldDesc(const FieldDesc&) = delete;
  FieldDesc& operator=(const FieldDesc&) = delete;

  std::uint32_t characteristic() const noexcept { return p_; }
  unsigned degree() const noexcept { return m_; }
  /// Monic modulus, low degree first, length m + 1.
  const std::vector<std::uint32_t>& modulus() const noexcept { return modulus_; }
  /// p^m.
  const mpz_class& order() const noexcept { return order_; }
  /// p^m as a machine integer; throws ResourceLimit if it does not fit.
  std::uint64_t size() const;

  FieldElem zero() const;
  FieldElem one() const;
  /// Image of an integer in the prime subfield.
  FieldElem from_int(std::int64_t c) const;
  /// Residues must lie in [0, p); missing high coefficients are zero.
  FieldElem from_coeffs(std::span<const std::uint32_t> residues) const;
  /// The class of t.
  FieldElem generator() const;
  /// Inverse of FieldElem::index(): base-p digits of `index`.
  FieldElem element(std::uint64_t index) const;
  /// All p^m elements in index order (bounded by 10^7).
  std::vector<FieldElem> elements() const;

  /// Modulus rendered as a polynomial in t, e.g. "t^2 + 1".
  std::string modulus_string() const;

 private:
  FieldDesc(std::uint32_t p, unsigned m, std::vector<std::uint32_t> modulus);
  friend class FieldRegistry;

  std::uint32_t p_;
  unsigned m_;
  std::vector<std::uint32_t> modulus_;
  mpz_class order_;
};

/// True iff the monic polynomial `f` (low degree first) over F_p is irreducible.
bool is_irreducible_mod_p(std::span<const std::uint32_t> f, std::uint32_t p);

class FieldElem {
 public:
  using Residues = std::array<std::uint32_t, kMaxExtensionDegree>;

  const FieldDesc& field() const noexcept { return *field_; }
  std::span<const std::uint32_t> coeffs() const noexcept {
    return {c_.data(), field_->degree()};
  }

  bool is_zero() const noexcept;
  bool is_one() const noexcept;

  FieldElem operator+(const FieldElem& o) const;
  FieldElem operator-(const FieldElem& o) const;
  FieldElem operator-() const;
  FieldElem operator*(const FieldElem& o) const;
  /// Throws DivisionByZero on a zero divisor.
  FieldElem operator/(const FieldElem& o) const;
  FieldElem& operator+=(const FieldElem& o) { return *this = *this + o; }
  FieldElem& operator-=(const FieldElem& o) { return *this = *this - o; }
  FieldElem& operator*=(const FieldElem& o) { return *this = *this * o; }

  /// Throws DivisionByZero for zero.
  FieldElem inv() const;
  FieldElem pow(std::uint64_t e) const;
  /// Negative exponents invert first.
  FieldElem pow(const mpz_class& e) const;
  /// x^{p^k}; negative k applies the inverse Frobenius |k| times.
  FieldElem frobenius(std::int64_t k) const;

  /// Coefficients read as base-p digits, low first.
  std::uint64_t index() const;

  /// "[c0,c1,...]" in extensions, the bare residue in a prime field.
  std::string to_string() const;

  bool operator==(const FieldElem& o) const noexcept {
    return field_ == o.field_ && c_ == o.c_;
  }

 private:
  friend class FieldDesc;
  FieldElem(const FieldDesc* f, const Residues& c) : field_(f), c_(c) {}

  void require_same_field(const FieldElem& o) const;

  const FieldDesc* field_;
  Residues c_{};
};

}  // namespace amzeta
