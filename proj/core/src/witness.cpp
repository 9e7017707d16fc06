#include "amzeta/witness.hpp"

#include <map>
#include <stdexcept>

#include "amzeta/errors.hpp"
#include "amzeta/fixed_points.hpp"
#include "amzeta/numtheory.hpp"

namespace amzeta {

namespace {

mpz_class ui(std::uint64_t v) { return mpz_class(static_cast<unsigned long>(v)); }

mpz_class pow(const mpz_class& base, std::uint64_t e) {
  mpz_class r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), static_cast<unsigned long>(e));
  return r;
}

std::uint64_t val(const mpz_class& p, const mpz_class& n) { return nt::vp(p, n).finite(); }

// Tallies one identity; the report owns the storage.
class Tally {
 public:
  explicit Tally(WitnessReport& report) : report_(report) {}

  void record(const std::string& name, bool ok) {
    auto it = slots_.find(name);
    if (it == slots_.end()) {
      it = slots_.emplace(name, report_.identities.size()).first;
      report_.identities.push_back({name, 0, 0});
    }
    IdentityCheck& check = report_.identities[it->second];
    ++check.checked;
    if (ok) ++check.verified;
  }

 private:
  WitnessReport& report_;
  std::map<std::string, std::size_t> slots_;
};

// Records whether `value` is the same for every n sharing `key`.
class FiberCheck {
 public:
  bool consistent(std::uint64_t key, const mpz_class& value) {
    auto [it, inserted] = seen_.emplace(key, value);
    return inserted || it->second == value;
  }

 private:
  std::map<std::uint64_t, mpz_class> seen_;
};

void require(bool ok, const std::string& what) {
  if (!ok) throw std::logic_error("witness self-check failed: " + what);
}

// k = M·p^N with p ∤ M
std::pair<mpz_class, std::uint64_t> split_period(const mpz_class& p, const mpz_class& k) {
  if (k < 1) throw InvalidArgument("candidate period must be >= 1");
  const std::uint64_t N = val(p, k);
  return {k / pow(p, N), N};
}

}  // namespace

bool WitnessReport::all_hold() const {
  for (const auto& id : identities)
    if (!id.holds()) return false;
  for (const auto& ce : counterexamples)
    if (ce.in_fiber_left == ce.in_fiber_right) return false;
  return true;
}

const IdentityCheck* WitnessReport::identity(const std::string& name) const {
  for (const auto& id : identities)
    if (id.name == name) return &id;
  return nullptr;
}

// ---------------------------------------------------------------------------

Case1Params case1_setup(std::uint64_t m, std::uint64_t q) {
  if (m < 3 || m % 2 == 0) throw InvalidArgument("case 1 needs an odd m >= 3");
  if (q == 2 || !nt::is_prime(ui(q))) throw InvalidArgument("case 1 needs an odd prime q");
  if (m % q != 0) throw InvalidArgument("case 1 needs q to divide m");
  Case1Params params{ui(m), ui(q), nt::invmod(2, ui(q)), 0};
  params.ord_r = nt::mult_order(params.r, params.q);
  require(params.ord_r > 1, "order of 1/2 mod q exceeds 1");
  return params;
}

WitnessReport case1_sequence(std::uint64_t m, std::uint64_t q, std::uint64_t range,
                             std::size_t degree_cap) {
  const Case1Params params = case1_setup(m, q);
  const mpz_class two = 2;
  const std::uint64_t v2_tail = val(two, params.m * params.m - 1);

  WitnessReport report;
  report.scenario = "thm1_case1";
  report.range = range;
  report.params = {{"p", "2"},
                   {"m", params.m.get_str()},
                   {"q", params.q.get_str()},
                   {"r", params.r.get_str()},
                   {"ord_r", params.ord_r.get_str()},
                   {"v2(m^2-1)", std::to_string(v2_tail)}};

  const std::uint64_t ord = params.ord_r.get_ui();
  std::vector<std::int64_t> outputs;
  for (std::uint64_t i = 0; i < ord; ++i) {
    outputs.push_back(nt::powmod(params.r, ui(i + v2_tail), params.q).get_si());
  }
  const Dfao automaton = build_vp_mod_dfao(2, static_cast<unsigned>(ord), outputs);
  const MapSpec map = MapSpec::power(2, m);

  Tally tally(report);
  FiberCheck fiber;
  for (std::uint64_t n = 1; n <= range; ++n) {
    const mpz_class a2n = count_power_map(2, m, 2 * n);
    const mpz_class shifted = pow(params.m, 2 * n) - 1;
    const std::uint64_t v = val(two, shifted);

    if (shifted + 1 <= degree_cap) {
      tally.record("a_2n oracle = closed form", ui(count_oracle(map, 2 * n, degree_cap)) == a2n);
    }
    tally.record("a_2n = 1 - r^v2(m^2n-1) mod q",
                 nt::mod(a2n, params.q) == nt::mod(1 - nt::powmod(params.r, ui(v), params.q), params.q));
    tally.record("v2(m^2n-1) = v2(n) + v2(m^2-1)", v == nt::lte_valuation(2, params.m, ui(n)));

    const mpz_class b = nt::mod(-(a2n - 1), params.q);
    const std::uint64_t v2n = val(two, ui(n));
    tally.record("b_n = r^(v2(n)+v2(m^2-1)) mod q",
                 b == nt::powmod(params.r, ui(v2n + v2_tail), params.q));
    tally.record("b_n depends only on v2(n) mod ord_r", fiber.consistent(v2n % ord, b));
    tally.record("b_n = v2-mod-ord_r automaton", mpz_class(automaton.run(ui(n)).at(0)) == b);
  }
  return report;
}

Counterexample counterexample_case1(const Case1Params& params, const mpz_class& k,
                                    const mpz_class& bound) {
  if (k < 1) throw InvalidArgument("candidate period must be >= 1");
  const mpz_class two = 2;
  mpz_class scale = 1;
  while (k * scale <= bound) scale *= 2;
  Counterexample ce;
  ce.k = k;
  ce.n = k * scale;
  ce.a = scale;
  ce.n_plus_ak = ce.n + ce.a * k;
  ce.v_left = val(two, ce.n);
  ce.v_right = val(two, ce.n_plus_ak);
  const std::uint64_t v2_tail = val(two, params.m * params.m - 1);
  const mpz_class b_left = nt::powmod(params.r, ui(ce.v_left + v2_tail), params.q);
  const mpz_class b_right = nt::powmod(params.r, ui(ce.v_right + v2_tail), params.q);
  require(ce.v_right == ce.v_left + 1, "v2 increments by one");
  ce.in_fiber_left = true;
  ce.in_fiber_right = b_right == b_left;
  require(!ce.in_fiber_right, "b_n differs across the pair");
  return ce;
}

// ---------------------------------------------------------------------------

Case2Params case2_setup(std::uint64_t p, std::uint64_t m) {
  if (p == 2 || !nt::is_prime(ui(p))) throw InvalidArgument("case 2 needs an odd prime p");
  if (m < 2) throw InvalidArgument("case 2 needs m >= 2");
  if (m % p == 0) throw InvalidArgument("case 2 needs p not dividing m");
  Case2Params params;
  params.p = ui(p);
  params.m = ui(m);
  params.q = nt::find_prime(2, params.p, pow(params.m, p - 1));
  params.r = nt::invmod(params.p, params.q);
  params.ord_r = nt::mult_order(params.r, params.q);
  require(params.ord_r > 1, "order of 1/p mod q exceeds 1");
  return params;
}

bool case2_in_fiber(const Case2Params& params, const mpz_class& n) {
  const std::uint64_t v = val(params.p, (params.q - 1) * n + 1);
  return nt::mod(ui(v), params.ord_r) == 0;
}

namespace {

Dfao case2_product(const Case2Params& params) {
  const unsigned p = static_cast<unsigned>(params.p.get_ui());
  const std::uint64_t target = 1;
  const Dfao congruence = build_congruence_dfao(p, mpz_class(params.q - 1).get_ui(), {&target, 1});
  std::vector<std::int64_t> outputs(params.ord_r.get_ui(), 0);
  outputs[0] = 1;
  const Dfao valuation = build_vp_mod_dfao(p, static_cast<unsigned>(outputs.size()), outputs);
  return dfao_product(congruence, valuation);
}

}  // namespace

Case2Recognizer::Case2Recognizer(const Case2Params& params)
    : transducer_(static_cast<unsigned>(params.p.get_ui()), mpz_class(params.q - 1).get_ui(), 1),
      product_(case2_product(params)) {}

bool Case2Recognizer::contains(const mpz_class& n) const {
  const auto digits = transducer_.apply_digits(digits_lsd(n, transducer_.base()));
  const Symbol& out = product_.run_digits(digits);
  return out.at(0) == 1 && out.at(1) == 1;
}

WitnessReport case2_sequence(const Case2Params& params, std::uint64_t range,
                             std::uint64_t membership_range) {
  const std::uint64_t p = params.p.get_ui();
  const mpz_class tail = pow(params.m, p - 1) - 1;  // m^{p-1} - 1, invertible mod q
  const std::uint64_t vp_tail = val(params.p, tail);
  const mpz_class tail_inv = nt::invmod(tail, params.q);

  WitnessReport report;
  report.scenario = "thm1_case2";
  report.range = range;
  report.params = {{"p", params.p.get_str()},
                   {"m", params.m.get_str()},
                   {"q", params.q.get_str()},
                   {"r", params.r.get_str()},
                   {"ord_r", params.ord_r.get_str()},
                   {"vp(m^(p-1)-1)", std::to_string(vp_tail)},
                   {"membership_range", std::to_string(membership_range)}};

  Tally tally(report);
  for (std::uint64_t n = 1; n <= range; ++n) {
    const mpz_class inner = (params.q - 1) * n + 1;
    const std::uint64_t e = (p - 1) * inner.get_ui();
    const mpz_class a = count_power_map(static_cast<std::uint32_t>(p), params.m.get_ui(), e);
    const std::uint64_t v = val(params.p, pow(params.m, e) - 1);
    tally.record("a = 1 + (m^(p-1)-1) r^vp(m^e-1) mod q",
                 nt::mod(a, params.q) ==
                     nt::mod(1 + tail * nt::powmod(params.r, ui(v), params.q), params.q));
    tally.record("vp(m^e-1) = vp((q-1)n+1) + vp(m^(p-1)-1)",
                 v == nt::lte_valuation(params.p, params.m, inner));
    const mpz_class b = nt::mod((a - 1) * tail_inv, params.q);
    tally.record("b_n = r^(vp((q-1)n+1)+vp(m^(p-1)-1)) mod q",
                 b == nt::powmod(params.r, ui(val(params.p, inner) + vp_tail), params.q));
  }
  const Case2Recognizer recognizer(params);
  for (std::uint64_t n = 1; n <= membership_range; ++n) {
    tally.record("Y membership: automaton = direct valuation",
                 recognizer.contains(ui(n)) == case2_in_fiber(params, ui(n)));
  }
  return report;
}

Counterexample counterexample_case2(const Case2Params& params, const mpz_class& k,
                                    const mpz_class& bound) {
  const auto [M, N] = split_period(params.p, k);
  const std::uint64_t d = params.ord_r.get_ui();
  const mpz_class modulus = pow(params.p, d * N + 2);
  const mpz_class qm1 = params.q - 1;

  const mpz_class rhs_n = pow(params.p, d * N) - 1;
  const auto n_class = nt::solve_congruence(qm1, rhs_n, modulus);
  const mpz_class rhs_a = pow(params.p, (d - 1) * N) * (params.p - 1);
  const auto a_class = nt::solve_congruence(qm1 * M, rhs_a, modulus);
  require(n_class && a_class, "congruences are solvable");

  Counterexample ce;
  ce.k = k;
  ce.n = n_class->first_above(bound < 0 ? mpz_class(0) : bound);
  ce.a = a_class->first_above(0);
  ce.n_plus_ak = ce.n + ce.a * k;
  require(nt::mod(qm1 * ce.n - rhs_n, modulus) == 0, "n satisfies its congruence");
  require(nt::mod(qm1 * ce.a * M - rhs_a, modulus) == 0, "a satisfies its congruence");
  ce.v_left = val(params.p, qm1 * ce.n + 1);
  ce.v_right = val(params.p, qm1 * ce.n_plus_ak + 1);
  require(ce.v_left == d * N, "vp((q-1)n+1) = dN");
  require(ce.v_right == d * N + 1, "vp((q-1)(n+ak)+1) = dN+1");
  ce.in_fiber_left = case2_in_fiber(params, ce.n);
  ce.in_fiber_right = case2_in_fiber(params, ce.n_plus_ak);
  require(ce.in_fiber_left && !ce.in_fiber_right, "pair splits Y");
  return ce;
}

// ---------------------------------------------------------------------------

Thm2Params thm2_setup(std::uint64_t p, unsigned m) {
  if (p == 2 || !nt::is_prime(ui(p))) throw InvalidArgument("theorem 2 needs an odd prime p");
  if (m < 1) throw InvalidArgument("theorem 2 needs m >= 1");
  Thm2Params params;
  params.p = ui(p);
  params.m = m;
  const mpz_class pm = pow(params.p, m);
  params.q = nt::find_prime(2, pm, pow(params.p, m * p));
  params.r = nt::invmod(params.p, params.q);
  const mpz_class rm = nt::powmod(params.r, m, params.q);
  params.ord_rm = nt::mult_order(rm, params.q);
  params.ord_p = nt::mult_order(params.p, params.ord_rm);
  require(params.ord_rm > params.p, "o(r^m, q) > p");
  require(params.ord_p > 1, "o(p, o(r^m, q)) > 1");
  return params;
}

WitnessReport thm2_sequence(const FieldElem& a, std::uint64_t range, std::size_t degree_cap) {
  const FieldDesc& field = a.field();
  const std::uint32_t p = field.characteristic();
  const unsigned m = field.degree();
  const Thm2Params params = thm2_setup(p, m);
  const mpz_class rm = nt::powmod(params.r, m, params.q);
  const std::uint64_t period = field.order().get_ui() - 1;  // p^m - 1
  const std::uint64_t ord_p = params.ord_p.get_ui();

  WitnessReport report;
  report.scenario = "thm2";
  report.range = range;
  report.params = {{"p", params.p.get_str()},
                   {"m", std::to_string(m)},
                   {"a", a.to_string()},
                   {"q", params.q.get_str()},
                   {"r", params.r.get_str()},
                   {"r^m", rm.get_str()},
                   {"ord_rm", params.ord_rm.get_str()},
                   {"ord_p", params.ord_p.get_str()}};

  std::vector<std::int64_t> outputs;
  for (std::uint64_t i = 0; i < ord_p; ++i) {
    outputs.push_back(nt::powmod(rm, pow(params.p, i), params.q).get_si());
  }
  const Dfao automaton = build_vp_mod_dfao(p, static_cast<unsigned>(ord_p), outputs);
  const MapSpec map = MapSpec::additive(a);

  Tally tally(report);
  FiberCheck fiber;
  for (std::uint64_t n = 1; n <= range; ++n) {
    const std::uint64_t idx = period * n;
    const mpz_class count = count_additive(p, m, idx);
    mpz_class degree;
    mpz_ui_pow_ui(degree.get_mpz_t(), p, idx * m);
    if (degree <= degree_cap) {
      tally.record("a_(p^m-1)n oracle = closed form", ui(count_oracle(map, idx, degree_cap)) == count);
    }
    // scan for the first l with C(idx, l) not divisible by p
    mpz_class least = 1;
    while (nt::kummer_vp_binomial(params.p, ui(idx), least) != 0) ++least;
    tally.record("least l with p not dividing C(n,l) = p^vp(n)",
                 least == nt::least_nonvanishing_binomial(params.p, ui(idx)));

    const mpz_class c = nt::mod(count * nt::powmod(params.r, ui(idx * m), params.q), params.q);
    const std::uint64_t v = val(params.p, ui(n));
    tally.record("c_n = (r^m)^(p^vp(n)) mod q", c == nt::powmod(rm, pow(params.p, v), params.q));
    tally.record("c_n depends only on vp(n) mod ord_p", fiber.consistent(v % ord_p, c));
    tally.record("c_n = vp-mod-ord_p automaton", mpz_class(automaton.run(ui(n)).at(0)) == c);
  }
  return report;
}

Counterexample counterexample_thm2(const Thm2Params& params, const mpz_class& k,
                                   const mpz_class& bound) {
  const auto [M, N] = split_period(params.p, k);
  const std::uint64_t d = params.ord_p.get_ui();
  const mpz_class modulus = pow(params.p, d * N + 2);
  const mpz_class rhs_n = pow(params.p, d * N);
  const mpz_class rhs_a = pow(params.p, (d - 1) * N) * (params.p - 1);
  const auto n_class = nt::solve_congruence(1, rhs_n, modulus);
  const auto a_class = nt::solve_congruence(M, rhs_a, modulus);
  require(n_class && a_class, "congruences are solvable");

  Counterexample ce;
  ce.k = k;
  ce.n = n_class->first_above(bound < 0 ? mpz_class(0) : bound);
  ce.a = a_class->first_above(0);
  ce.n_plus_ak = ce.n + ce.a * k;
  require(nt::mod(ce.n - rhs_n, modulus) == 0, "n satisfies its congruence");
  require(nt::mod(ce.a * M - rhs_a, modulus) == 0, "a satisfies its congruence");
  ce.v_left = val(params.p, ce.n);
  ce.v_right = val(params.p, ce.n_plus_ak);
  require(ce.v_left == d * N, "vp(n) = dN");
  require(ce.v_right == d * N + 1, "vp(n+ak) = dN+1");
  ce.in_fiber_left = ce.v_left % d == 0;
  ce.in_fiber_right = ce.v_right % d == 0;
  require(ce.in_fiber_left && !ce.in_fiber_right, "pair splits Y");
  return ce;
}

void add_counterexamples(WitnessReport& report, const Case1Params& params,
                         std::uint64_t max_period, const mpz_class& bound) {
  for (std::uint64_t k = 1; k <= max_period; ++k)
    report.counterexamples.push_back(counterexample_case1(params, ui(k), bound));
}

void add_counterexamples(WitnessReport& report, const Case2Params& params,
                         std::uint64_t max_period, const mpz_class& bound) {
  for (std::uint64_t k = 1; k <= max_period; ++k)
    report.counterexamples.push_back(counterexample_case2(params, ui(k), bound));
}

void add_counterexamples(WitnessReport& report, const Thm2Params& params,
                         std::uint64_t max_period, const mpz_class& bound) {
  for (std::uint64_t k = 1; k <= max_period; ++k)
    report.counterexamples.push_back(counterexample_thm2(params, ui(k), bound));
}

}  // namespace amzeta
