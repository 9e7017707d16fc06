#pragma once

// Deterministic finite automata with output (DFAOs) over base-k digits, read
// least-significant digit first, plus the affine digit transducer and
// eventual-periodicity detection on finite prefixes.

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace amzeta {

/// A DFAO output; products concatenate component outputs.
using Symbol = std::vector<std::int64_t>;

/// Base-k digits of n ≥ 0, least significant first; empty for 0.
std::vector<unsigned> digits_lsd(const mpz_class& n, unsigned base);
mpz_class from_digits_lsd(std::span<const unsigned> digits, unsigned base);

class Dfao {
 public:
  using State = std::uint32_t;

  /// `transitions` is a dense states × base table (row-major). Throws
  /// InvalidArgument if the table is not total or indices are out of range.
  Dfao(unsigned base, std::vector<State> transitions, State initial, std::vector<Symbol> outputs,
       bool defined_at_zero = true);

  unsigned base() const noexcept { return base_; }
  std::size_t states() const noexcept { return outputs_.size(); }
  State initial() const noexcept { return initial_; }
  State next(State s, unsigned digit) const { return transitions_[s * base_ + digit]; }
  const Symbol& output(State s) const { return outputs_.at(s); }
  const std::vector<State>& transitions() const noexcept { return transitions_; }
  const std::vector<Symbol>& outputs() const noexcept { return outputs_; }
  /// False for automata whose output at n = 0 is meaningless (valuations).
  bool defined_at_zero() const noexcept { return defined_at_zero_; }

  State walk(State from, std::span<const unsigned> digits) const;
  /// Output after reading the canonical digits of n. Throws InvalidArgument
  /// for n < 0, or n = 0 when !defined_at_zero().
  const Symbol& run(const mpz_class& n) const;
  /// Output after reading `digits` from the initial state.
  const Symbol& run_digits(std::span<const unsigned> digits) const;

  friend bool operator==(const Dfao&, const Dfao&) = default;

 private:
  unsigned base_;
  std::vector<State> transitions_;
  State initial_;
  std::vector<Symbol> outputs_;
  bool defined_at_zero_;
};

/// Output on n ≥ 1 is outputs[v_p(n) mod d]: states q_0..q_{d-1} cycle on
/// digit 0 and any nonzero digit moves q_i to the absorbing state r_i.
/// An empty `outputs` means outputs[i] = i.
Dfao build_vp_mod_dfao(unsigned p, unsigned d, std::span<const std::int64_t> outputs = {});

/// Output {1} iff (n mod M) ∈ targets, else {0}. States are pairs
/// (partial residue, base^i mod M), pruned to reachable.
Dfao build_congruence_dfao(unsigned base, std::uint64_t modulus,
                           std::span<const std::uint64_t> targets);

/// Single-state automaton emitting `value`.
Dfao constant_dfao(unsigned base, Symbol value);

using Combiner = std::function<Symbol(const Symbol&, const Symbol&)>;

/// Reachable product automaton; the default combiner concatenates outputs.
Dfao dfao_product(const Dfao& a, const Dfao& b, const Combiner& combine = {});

/// Automaton whose output at n is a.run(stride·n + offset), tracking the
/// carry of the affine map while reading n.
Dfao dfao_subsequence(const Dfao& a, std::uint64_t stride, std::uint64_t offset);

/// Streams the base-p digits of multiplier·n + offset while reading those of n.
class AffineTransducer {
 public:
  AffineTransducer(unsigned base, std::uint64_t multiplier, std::uint64_t offset);

  struct Step {
    unsigned digit;
    std::uint64_t carry;
  };

  unsigned base() const noexcept { return base_; }
  std::uint64_t multiplier() const noexcept { return multiplier_; }
  std::uint64_t offset() const noexcept { return offset_; }
  std::uint64_t initial_carry() const noexcept { return offset_; }
  /// One input digit in, one output digit out.
  Step step(std::uint64_t carry, unsigned digit) const;
  /// Digits left to emit once the input ends.
  std::vector<unsigned> flush(std::uint64_t carry) const;

  /// Output digits for the given input digits (LSD first).
  std::vector<unsigned> apply_digits(std::span<const unsigned> digits) const;

  struct Output {
    std::vector<unsigned> digits;
    mpz_class value;
  };
  Output apply(const mpz_class& n) const;

 private:
  unsigned base_;
  std::uint64_t multiplier_;
  std::uint64_t offset_;
};

struct EventualPeriod {
  std::size_t preperiod;
  std::size_t period;

  friend bool operator==(const EventualPeriod&, const EventualPeriod&) = default;
};

/// Least preperiod ≤ max_preperiod, then least period ≤ max_period, such that
/// seq[i] = seq[i + period] for all i ≥ preperiod in the prefix. Requires
/// seq.size() ≥ max_preperiod + 2·max_period.
std::optional<EventualPeriod> detect_eventual_period(std::span<const std::int64_t> seq,
                                                     std::size_t max_preperiod,
                                                     std::size_t max_period);

/// {"alphabet","states","initial","transitions","outputs","defined_at_zero"}.
std::string dfao_to_json(const Dfao& a);
Dfao dfao_from_json(std::string_view text);

}  // namespace amzeta
