#include "amzeta/automata.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <set>

#include "amzeta/errors.hpp"

namespace amzeta {

namespace {

void require_base(unsigned base) {
  if (base < 2) throw InvalidArgument("digit base must be >= 2");
}

// Breadth-first construction over an arbitrary hashable product state.
template <typename Key, typename Next, typename Out>
Dfao explore(unsigned base, const Key& start, Next next, Out output, bool defined_at_zero) {
  std::map<Key, Dfao::State> index;
  std::vector<Key> order;
  std::queue<Key> pending;
  index.emplace(start, 0);
  order.push_back(start);
  pending.push(start);
  std::vector<Dfao::State> transitions;
  while (!pending.empty()) {
    const Key key = pending.front();
    pending.pop();
    for (unsigned d = 0; d < base; ++d) {
      const Key to = next(key, d);
      auto [it, inserted] = index.emplace(to, static_cast<Dfao::State>(order.size()));
      if (inserted) {
        order.push_back(to);
        pending.push(to);
      }
    }
  }
  transitions.resize(order.size() * base);
  std::vector<Symbol> outputs;
  outputs.reserve(order.size());
  for (std::size_t s = 0; s < order.size(); ++s) {
    for (unsigned d = 0; d < base; ++d) transitions[s * base + d] = index.at(next(order[s], d));
    outputs.push_back(output(order[s]));
  }
  return Dfao(base, std::move(transitions), 0, std::move(outputs), defined_at_zero);
}

}  // namespace

std::vector<unsigned> digits_lsd(const mpz_class& n, unsigned base) {
  require_base(base);
  if (n < 0) throw InvalidArgument("digits_lsd: negative input");
  std::vector<unsigned> out;
  mpz_class rest = n;
  while (rest > 0) {
    out.push_back(static_cast<unsigned>(mpz_fdiv_q_ui(rest.get_mpz_t(), rest.get_mpz_t(), base)));
  }
  return out;
}

mpz_class from_digits_lsd(std::span<const unsigned> digits, unsigned base) {
  mpz_class v = 0;
  for (std::size_t i = digits.size(); i-- > 0;) v = v * base + digits[i];
  return v;
}

Dfao::Dfao(unsigned base, std::vector<State> transitions, State initial,
           std::vector<Symbol> outputs, bool defined_at_zero)
    : base_(base),
      transitions_(std::move(transitions)),
      initial_(initial),
      outputs_(std::move(outputs)),
      defined_at_zero_(defined_at_zero) {
  require_base(base_);
  if (outputs_.empty()) throw InvalidArgument("DFAO needs at least one state");
  if (transitions_.size() != outputs_.size() * base_) {
    throw InvalidArgument("DFAO transition table must have states x alphabet entries");
  }
  if (initial_ >= outputs_.size()) throw InvalidArgument("DFAO initial state out of range");
  for (State s : transitions_)
    if (s >= outputs_.size()) throw InvalidArgument("DFAO transition target out of range");
}

Dfao::State Dfao::walk(State from, std::span<const unsigned> digits) const {
  State s = from;
  for (unsigned d : digits) {
    if (d >= base_) throw InvalidArgument("digit out of range for the DFAO alphabet");
    s = next(s, d);
  }
  return s;
}

const Symbol& Dfao::run(const mpz_class& n) const {
  if (n < 0) throw InvalidArgument("DFAO input must be non-negative");
  if (n == 0 && !defined_at_zero_) {
    throw InvalidArgument("this automaton is undefined at n = 0");
  }
  return run_digits(digits_lsd(n, base_));
}

const Symbol& Dfao::run_digits(std::span<const unsigned> digits) const {
  return outputs_[walk(initial_, digits)];
}

Dfao build_vp_mod_dfao(unsigned p, unsigned d, std::span<const std::int64_t> outputs) {
  require_base(p);
  if (d < 1) throw InvalidArgument("build_vp_mod_dfao: need d >= 1");
  if (!outputs.empty() && outputs.size() != d) {
    throw InvalidArgument("build_vp_mod_dfao: need exactly d outputs");
  }
  // states 0..d-1 are q_i, d..2d-1 are r_i
  std::vector<Dfao::State> transitions(2 * d * p);
  std::vector<Symbol> out(2 * d);
  for (unsigned i = 0; i < d; ++i) {
    const std::int64_t value = outputs.empty() ? i : outputs[i];
    out[i] = out[d + i] = Symbol{value};
    transitions[i * p + 0] = (i + 1) % d;
    for (unsigned digit = 1; digit < p; ++digit) transitions[i * p + digit] = d + i;
    for (unsigned digit = 0; digit < p; ++digit) transitions[(d + i) * p + digit] = d + i;
  }
  return Dfao(p, std::move(transitions), 0, std::move(out), false);
}

Dfao build_congruence_dfao(unsigned base, std::uint64_t modulus,
                           std::span<const std::uint64_t> targets) {
  require_base(base);
  if (modulus < 1) throw InvalidArgument("build_congruence_dfao: need modulus >= 1");
  std::set<std::uint64_t> accept;
  for (std::uint64_t t : targets) accept.insert(t % modulus);
  using Key = std::pair<std::uint64_t, std::uint64_t>;  // (residue, weight)
  const auto M = static_cast<unsigned __int128>(modulus);
  return explore(
      base, Key{0, 1 % modulus},
      [&](const Key& k, unsigned d) {
        const auto r = static_cast<std::uint64_t>((k.first + d * static_cast<unsigned __int128>(k.second)) % M);
        const auto w = static_cast<std::uint64_t>(static_cast<unsigned __int128>(k.second) * base % M);
        return Key{r, w};
      },
      [&](const Key& k) { return Symbol{accept.count(k.first) ? 1 : 0}; }, true);
}

Dfao constant_dfao(unsigned base, Symbol value) {
  require_base(base);
  return Dfao(base, std::vector<Dfao::State>(base, 0), 0, {std::move(value)}, true);
}

Dfao dfao_product(const Dfao& a, const Dfao& b, const Combiner& combine) {
  if (a.base() != b.base()) throw InvalidArgument("dfao_product: alphabet mismatch");
  using Key = std::pair<Dfao::State, Dfao::State>;
  auto merge = [&](const Key& k) {
    if (combine) return combine(a.output(k.first), b.output(k.second));
    Symbol s = a.output(k.first);
    const Symbol& t = b.output(k.second);
    s.insert(s.end(), t.begin(), t.end());
    return s;
  };
  return explore(
      a.base(), Key{a.initial(), b.initial()},
      [&](const Key& k, unsigned d) { return Key{a.next(k.first, d), b.next(k.second, d)}; },
      merge, a.defined_at_zero() && b.defined_at_zero());
}

Dfao dfao_subsequence(const Dfao& a, std::uint64_t stride, std::uint64_t offset) {
  if (stride < 1) throw InvalidArgument("dfao_subsequence: stride must be >= 1");
  const AffineTransducer t(a.base(), stride, offset);
  using Key = std::pair<Dfao::State, std::uint64_t>;  // (state of a, pending carry)
  return explore(
      a.base(), Key{a.initial(), t.initial_carry()},
      [&](const Key& k, unsigned d) {
        const auto step = t.step(k.second, d);
        return Key{a.next(k.first, step.digit), step.carry};
      },
      [&](const Key& k) {
        const auto tail = t.flush(k.second);
        return a.output(a.walk(k.first, tail));
      },
      offset != 0 || a.defined_at_zero());
}

AffineTransducer::AffineTransducer(unsigned base, std::uint64_t multiplier, std::uint64_t offset)
    : base_(base), multiplier_(multiplier), offset_(offset) {
  require_base(base);
  if (multiplier < 1) throw InvalidArgument("transducer multiplier must be >= 1");
}

AffineTransducer::Step AffineTransducer::step(std::uint64_t carry, unsigned digit) const {
  const unsigned __int128 v = static_cast<unsigned __int128>(multiplier_) * digit + carry;
  return {static_cast<unsigned>(v % base_), static_cast<std::uint64_t>(v / base_)};
}

std::vector<unsigned> AffineTransducer::flush(std::uint64_t carry) const {
  std::vector<unsigned> out;
  while (carry > 0) {
    out.push_back(static_cast<unsigned>(carry % base_));
    carry /= base_;
  }
  return out;
}

std::vector<unsigned> AffineTransducer::apply_digits(std::span<const unsigned> digits) const {
  std::vector<unsigned> out;
  out.reserve(digits.size() + 4);
  std::uint64_t carry = offset_;
  for (unsigned d : digits) {
    if (d >= base_) throw InvalidArgument("transducer input digit out of range");
    const Step s = step(carry, d);
    out.push_back(s.digit);
    carry = s.carry;
  }
  const auto tail = flush(carry);
  out.insert(out.end(), tail.begin(), tail.end());
  return out;
}

AffineTransducer::Output AffineTransducer::apply(const mpz_class& n) const {
  Output out;
  out.digits = apply_digits(digits_lsd(n, base_));
  out.value = from_digits_lsd(out.digits, base_);
  return out;
}

std::optional<EventualPeriod> detect_eventual_period(std::span<const std::int64_t> seq,
                                                     std::size_t max_preperiod,
                                                     std::size_t max_period) {
  if (max_period < 1) throw InvalidArgument("detect_eventual_period: max_period must be >= 1");
  if (seq.size() < max_preperiod + 2 * max_period) {
    throw InvalidArgument("detect_eventual_period: prefix of " + std::to_string(seq.size()) +
                          " terms is shorter than P + 2K = " +
                          std::to_string(max_preperiod + 2 * max_period));
  }
  std::optional<EventualPeriod> best;
  for (std::size_t t = 1; t <= max_period; ++t) {
    // least s with seq[i] == seq[i + t] for all i >= s
    std::size_t s = 0;
    for (std::size_t i = seq.size() - t; i-- > 0;) {
      if (seq[i] != seq[i + t]) {
        s = i + 1;
        break;
      }
    }
    if (s > max_preperiod) continue;
    if (!best || s < best->preperiod) best = EventualPeriod{s, t};
  }
  return best;
}

}  // namespace amzeta
