#pragma once

// Finite-scale reproductions of the reductions behind the transcendence
// results for x^m and x^{p^m} + a·x: reduced count sequences, their
// automaton realizations, and explicit pairs (n, n + a·k) that break any
// candidate eventual period k of the fiber sequences.
//
// Nothing here proves transcendence; each report states the checked range.

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "amzeta/automata.hpp"
#include "amzeta/finite_field.hpp"
#include "amzeta/polynomial.hpp"

namespace amzeta {

struct IdentityCheck {
  std::string name;
  std::uint64_t checked = 0;
  std::uint64_t verified = 0;

  bool holds() const noexcept { return checked == verified; }
};

/// Indices n < n + a·k whose fiber memberships differ.
struct Counterexample {
  mpz_class k;
  mpz_class n;
  mpz_class a;
  mpz_class n_plus_ak;
  std::uint64_t v_left;   // valuation driving membership at n
  std::uint64_t v_right;  // ... and at n + a·k
  bool in_fiber_left;
  bool in_fiber_right;
};

struct WitnessReport {
  std::string scenario;  // thm1_case1 | thm1_case2 | thm2
  std::vector<std::pair<std::string, std::string>> params;
  std::uint64_t range = 0;
  std::vector<IdentityCheck> identities;
  std::vector<Counterexample> counterexamples;

  bool all_hold() const;
  const IdentityCheck* identity(const std::string& name) const;
};

// -- x^m over F̄_2, m odd ----------------------------------------------------

struct Case1Params {
  mpz_class m;
  mpz_class q;      // odd prime dividing m
  mpz_class r;      // 2^{-1} mod q
  mpz_class ord_r;  // multiplicative order of r mod q, > 1
};

Case1Params case1_setup(std::uint64_t m, std::uint64_t q);

/// Checks, for 1 ≤ n ≤ range, a_{2n} ≡ 1 - r^{v_2(m^{2n}-1)} and
/// b_n := -(a_{2n} - 1) ≡ r^{v_2(n) + v_2(m^2-1)} (mod q), the fiber
/// structure of b_n and its v_2-mod-ord_r automaton; oracle counts are
/// compared wherever m^{2n} ≤ degree_cap.
WitnessReport case1_sequence(std::uint64_t m, std::uint64_t q, std::uint64_t range,
                             std::size_t degree_cap = kDefaultDegreeCap);

/// n = k·2^s > bound and a = 2^s, so v_2(n + a·k) = v_2(n) + 1 and
/// b_n ≠ b_{n+ak}.
Counterexample counterexample_case1(const Case1Params& params, const mpz_class& k,
                                    const mpz_class& bound = 0);

// -- x^m over F̄_p, p odd ----------------------------------------------------

struct Case2Params {
  mpz_class p;
  mpz_class m;
  mpz_class q;      // least prime > m^{p-1} with q ≡ 2 (mod p)
  mpz_class r;      // p^{-1} mod q
  mpz_class ord_r;  // > 1
};

Case2Params case2_setup(std::uint64_t p, std::uint64_t m);

/// y_n = 1 iff v_p((q-1)n + 1) ≡ 0 (mod ord_r), by direct valuation.
bool case2_in_fiber(const Case2Params& params, const mpz_class& n);

/// The same membership decided by streaming (n)_p through the transducer
/// n ↦ (q-1)n + 1 into the product of the "≡ 1 mod q-1" recognizer and the
/// v_p-mod-ord_r automaton.
class Case2Recognizer {
 public:
  explicit Case2Recognizer(const Case2Params& params);
  bool contains(const mpz_class& n) const;
  const Dfao& automaton() const noexcept { return product_; }

 private:
  AffineTransducer transducer_;
  Dfao product_;
};

/// Reduction identities for a_{(p-1)((q-1)n+1)} mod q over 1 ≤ n ≤ range,
/// plus agreement of the two membership tests over 1 ≤ n ≤ membership_range.
WitnessReport case2_sequence(const Case2Params& params, std::uint64_t range,
                             std::uint64_t membership_range);

/// Solves (q-1)n ≡ -1 + p^{dN} and (q-1)aM ≡ p^{(d-1)N}(p-1) modulo p^{dN+2}
/// for k = M·p^N, d = ord_r, returning the least n > bound and least a > 0.
Counterexample counterexample_case2(const Case2Params& params, const mpz_class& k,
                                    const mpz_class& bound = 0);

// -- x^{p^m} + a·x over F̄_p, p odd ----------------------------------------

struct Thm2Params {
  mpz_class p;
  unsigned m;
  mpz_class q;       // least prime > p^{mp} with q ≡ 2 (mod p^m)
  mpz_class r;       // p^{-1} mod q
  mpz_class ord_rm;  // order of r^m mod q, > p
  mpz_class ord_p;   // order of p mod ord_rm, > 1
};

Thm2Params thm2_setup(std::uint64_t p, unsigned m);

/// c_n := a_{(p^m-1)n}·r^{(p^m-1)nm} ≡ (r^m)^{p^{v_p(n)}} (mod q) for
/// 1 ≤ n ≤ range, with a_{(p^m-1)n} from the closed form and, where
/// p^{(p^m-1)nm} ≤ degree_cap, from the oracle for the map x^{p^m} + a·x.
WitnessReport thm2_sequence(const FieldElem& a, std::uint64_t range,
                            std::size_t degree_cap = kDefaultDegreeCap);

/// Solves n ≡ p^{dN} and aM ≡ p^{(d-1)N}(p-1) modulo p^{dN+2} for
/// k = M·p^N, d = ord_p.
Counterexample counterexample_thm2(const Thm2Params& params, const mpz_class& k,
                                   const mpz_class& bound = 0);

/// Appends counterexamples for k = 1..max_period to a report built from the
/// matching parameters.
void add_counterexamples(WitnessReport& report, const Case1Params& params,
                         std::uint64_t max_period, const mpz_class& bound = 0);
void add_counterexamples(WitnessReport& report, const Case2Params& params,
                         std::uint64_t max_period, const mpz_class& bound = 0);
void add_counterexamples(WitnessReport& report, const Thm2Params& params,
                         std::uint64_t max_period, const mpz_class& bound = 0);

std::string witness_to_json(const WitnessReport& report);

}  // namespace amzeta
