#pragma once

// Fixed-point counts a_n = #Fix(f^n) over the algebraic closure, both by the
// squarefree-degree oracle and by the closed forms for the structured map
// families, plus exact-period counts and finite-field cycle censuses.

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "amzeta/finite_field.hpp"
#include "amzeta/polynomial.hpp"

namespace amzeta {

enum class MapKind { power, additive, pth_power_coeff, general };

std::string to_string(MapKind kind);

/// A polynomial self-map of the affine line in one of four recognized forms.
class MapSpec {
 public:
  /// x^m over F_p, m ≥ 2.
  static MapSpec power(std::uint32_t p, std::uint64_t m);
  /// x^{p^m} + a·x over F_{p^m} where a's field is F_{p^m}; a ≠ 0.
  static MapSpec additive(const FieldElem& a);
  /// f ∈ F_q[x^p] with deg f ≥ 2.
  static MapSpec pth_power_coeff(Poly f);
  /// Any f with deg f ≥ 2.
  static MapSpec general(Poly f);

  MapKind kind() const noexcept { return kind_; }
  const FieldDesc& field() const noexcept { return poly_.field(); }
  const Poly& poly() const noexcept { return poly_; }
  std::uint64_t degree() const noexcept { return static_cast<std::uint64_t>(poly_.degree()); }
  /// Exponent of a power map.
  std::uint64_t exponent() const;
  /// Linear coefficient of an additive map.
  const FieldElem& additive_coeff() const;
  /// Every exponent with a nonzero coefficient is divisible by p.
  bool in_pth_power_ring() const;
  /// False for additive maps in characteristic 2, which the additive
  /// closed form does not cover.
  bool within_theorem_scope() const;

  std::string describe() const;

 private:
  MapSpec(MapKind kind, Poly poly) : kind_(kind), poly_(std::move(poly)) {}

  MapKind kind_;
  Poly poly_;
  std::uint64_t exponent_ = 0;
  std::optional<FieldElem> coeff_;
};

enum class CountMethod { oracle, closed_form, both_agree };

std::string to_string(CountMethod method);

struct FixEntry {
  std::uint64_t n;
  mpz_class value;
  CountMethod method;
};

/// a_n values with provenance, ordered by n.
struct FixSeq {
  MapSpec map;
  std::vector<FixEntry> entries;

  const FixEntry* find(std::uint64_t n) const;
};

/// Which routes to run when assembling a FixSeq.
enum class MethodRequest { oracle, closed, both };

/// Distinct roots of f^n(x) - x. Throws ResourceLimit past `degree_cap`.
std::uint64_t count_oracle(const MapSpec& f, std::uint64_t n,
                           std::size_t degree_cap = kDefaultDegreeCap);

/// 1 + (m^n - 1) / p^{v_p(m^n - 1)} for p ∤ m.
mpz_class count_power_map(std::uint32_t p, std::uint64_t m, std::uint64_t n);

/// (deg f)^n for f ∈ F̄_p[x^p].
mpz_class count_pth_power_family(const MapSpec& f, std::uint64_t n);

/// p^{(n - p^{v_p(n)})·m} for odd p and (p^m - 1) | n.
mpz_class count_additive(std::uint32_t p, unsigned m, std::uint64_t n);

/// The applicable closed form at n, if any.
std::optional<mpz_class> count_closed_form(const MapSpec& f, std::uint64_t n);

/// Assembles a_n for each n in `ns` (returned sorted by n).
FixSeq compute_fix_seq(const MapSpec& f, std::span<const std::uint64_t> ns,
                       MethodRequest method = MethodRequest::both,
                       std::size_t degree_cap = kDefaultDegreeCap);

struct PeriodCount {
  std::uint64_t n;
  mpz_class count;  // points of exact period n

  friend bool operator==(const PeriodCount&, const PeriodCount&) = default;
};

/// Möbius inversion b_n = Σ_{k|n} μ(n/k)·a_k for every n in `seq`. Throws
/// InvalidArgument when a divisor's entry is missing.
std::vector<PeriodCount> exact_period_counts(const FixSeq& seq);
/// Same, over a_1..a_K given as counts[0..K-1].
std::vector<PeriodCount> exact_period_counts(std::span<const mpz_class> counts);

struct CycleCensus {
  std::uint32_t p;
  unsigned k;
  std::uint64_t points;
  std::map<std::uint64_t, std::uint64_t> cycle_lengths;  // length -> number of cycles
  std::uint64_t tails;       // points not on a cycle
  std::uint64_t components;  // one cycle per component
  std::uint64_t periodic_points() const;
};

inline constexpr std::uint64_t kCensusBound = 10'000'000;

/// Functional graph of f on F_{p^k}. f must be defined over F_p or F_{p^k}.
CycleCensus cycle_census(const Poly& f, std::uint32_t p, unsigned k);

}  // namespace amzeta
