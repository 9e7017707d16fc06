#include "amzeta/fixed_points.hpp"

#include <algorithm>
#include <stdexcept>

#include "amzeta/errors.hpp"
#include "amzeta/numtheory.hpp"

namespace amzeta {

namespace {

mpz_class ui(std::uint64_t v) { return mpz_class(static_cast<unsigned long>(v)); }

mpz_class pow_ui(std::uint64_t base, std::uint64_t e) {
  mpz_class r;
  mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(base), static_cast<unsigned long>(e));
  return r;
}

void require_degree_two(const Poly& f) {
  if (f.degree() < 2) {
    throw InvalidArgument("map must have degree >= 2, got " + std::to_string(f.degree()));
  }
}

}  // namespace

std::string to_string(MapKind kind) {
  switch (kind) {
    case MapKind::power: return "power";
    case MapKind::additive: return "additive";
    case MapKind::pth_power_coeff: return "pthpow";
    case MapKind::general: return "general";
  }
  return "unknown";
}

std::string to_string(CountMethod method) {
  switch (method) {
    case CountMethod::oracle: return "oracle";
    case CountMethod::closed_form: return "closed_form";
    case CountMethod::both_agree: return "both-agree";
  }
  return "unknown";
}

MapSpec MapSpec::power(std::uint32_t p, std::uint64_t m) {
  if (m < 2) throw InvalidArgument("power map exponent must be >= 2");
  if (m > kDefaultDegreeCap) throw InvalidArgument("power map exponent too large");
  const FieldDesc& f = FieldDesc::get(p, 1);
  MapSpec spec(MapKind::power, Poly::monomial(f.one(), static_cast<std::size_t>(m)));
  spec.exponent_ = m;
  return spec;
}

MapSpec MapSpec::additive(const FieldElem& a) {
  if (a.is_zero()) throw InvalidArgument("additive map needs a nonzero coefficient");
  const FieldDesc& f = a.field();
  if (!f.order().fits_ulong_p() || f.order() > kDefaultDegreeCap) {
    throw InvalidArgument("additive map degree p^m too large");
  }
  Poly poly = Poly::monomial(f.one(), static_cast<std::size_t>(f.order().get_ui())) +
              Poly::monomial(a, 1);
  MapSpec spec(MapKind::additive, std::move(poly));
  spec.coeff_ = a;
  return spec;
}

MapSpec MapSpec::pth_power_coeff(Poly f) {
  require_degree_two(f);
  MapSpec spec(MapKind::pth_power_coeff, std::move(f));
  if (!spec.in_pth_power_ring()) {
    throw InvalidArgument("pthpow map has an exponent not divisible by p");
  }
  return spec;
}

MapSpec MapSpec::general(Poly f) {
  require_degree_two(f);
  return MapSpec(MapKind::general, std::move(f));
}

std::uint64_t MapSpec::exponent() const {
  if (kind_ != MapKind::power) throw InvalidArgument("not a power map");
  return exponent_;
}

const FieldElem& MapSpec::additive_coeff() const {
  if (kind_ != MapKind::additive) throw InvalidArgument("not an additive map");
  return *coeff_;
}

bool MapSpec::in_pth_power_ring() const {
  const std::uint32_t p = field().characteristic();
  const auto c = poly_.coeffs();
  for (std::size_t i = 0; i < c.size(); ++i)
    if (!c[i].is_zero() && i % p != 0) return false;
  return true;
}

bool MapSpec::within_theorem_scope() const {
  return kind_ != MapKind::additive || field().characteristic() != 2;
}

std::string MapSpec::describe() const {
  const FieldDesc& f = field();
  std::string where = "F_" + std::to_string(f.characteristic());
  if (f.degree() > 1) where += "^" + std::to_string(f.degree());
  return to_string(kind_) + " map " + poly_.to_string() + " over " + where;
}

const FixEntry* FixSeq::find(std::uint64_t n) const {
  auto it = std::lower_bound(entries.begin(), entries.end(), n,
                             [](const FixEntry& e, std::uint64_t v) { return e.n < v; });
  return it != entries.end() && it->n == n ? &*it : nullptr;
}

std::uint64_t count_oracle(const MapSpec& f, std::uint64_t n, std::size_t degree_cap) {
  const Poly fn = iterate(f.poly(), n, degree_cap);
  return distinct_root_count(fn - Poly::x(f.field()));
}

mpz_class count_power_map(std::uint32_t p, std::uint64_t m, std::uint64_t n) {
  if (m < 2) throw InvalidArgument("count_power_map: need m >= 2");
  if (n < 1) throw InvalidArgument("count_power_map: need n >= 1");
  if (m % p == 0) {
    throw InvalidArgument("count_power_map: p divides m (use the p-th power family)");
  }
  const mpz_class shifted = pow_ui(m, n) - 1;
  return 1 + nt::strip_p(ui(p), shifted);
}

mpz_class count_pth_power_family(const MapSpec& f, std::uint64_t n) {
  if (!f.in_pth_power_ring()) {
    throw InvalidArgument("count_pth_power_family: map is not in F[x^p]");
  }
  if (n < 1) throw InvalidArgument("count_pth_power_family: need n >= 1");
  return pow_ui(f.degree(), n);
}

mpz_class count_additive(std::uint32_t p, unsigned m, std::uint64_t n) {
  if (p == 2 || !nt::is_prime(ui(p))) {
    throw InvalidArgument("count_additive: p must be an odd prime");
  }
  if (m < 1 || n < 1) throw InvalidArgument("count_additive: need m, n >= 1");
  const mpz_class period = pow_ui(p, m) - 1;
  if (ui(n) % period != 0) {
    throw InvalidArgument("count_additive: p^m - 1 = " + period.get_str() +
                          " does not divide n = " + std::to_string(n));
  }
  const mpz_class l = nt::least_nonvanishing_binomial(ui(p), ui(n));  // p^{v_p(n)}
  const mpz_class e = (ui(n) - l) * m;
  return pow_ui(p, e.get_ui());
}

std::optional<mpz_class> count_closed_form(const MapSpec& f, std::uint64_t n) {
  if (f.in_pth_power_ring()) return count_pth_power_family(f, n);
  switch (f.kind()) {
    case MapKind::power:
      return count_power_map(f.field().characteristic(), f.exponent(), n);
    case MapKind::additive: {
      const FieldDesc& field = f.field();
      if (field.characteristic() == 2) return std::nullopt;
      const mpz_class period = field.order() - 1;
      if (ui(n) % period != 0) return std::nullopt;
      return count_additive(field.characteristic(), field.degree(), n);
    }
    default:
      return std::nullopt;
  }
}

FixSeq compute_fix_seq(const MapSpec& f, std::span<const std::uint64_t> ns,
                       MethodRequest method, std::size_t degree_cap) {
  std::vector<std::uint64_t> sorted(ns.begin(), ns.end());
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());

  FixSeq seq{f, {}};
  for (std::uint64_t n : sorted) {
    if (n < 1) throw InvalidArgument("fixed-point counts are indexed from n = 1");
    std::optional<mpz_class> closed;
    if (method != MethodRequest::oracle) {
      closed = count_closed_form(f, n);
      if (!closed && method == MethodRequest::closed) {
        throw InvalidArgument("no closed form for " + f.describe() + " at n = " +
                              std::to_string(n));
      }
    }
    if (method == MethodRequest::closed) {
      seq.entries.push_back({n, *closed, CountMethod::closed_form});
      continue;
    }
    std::optional<mpz_class> oracle;
    try {
      oracle = ui(count_oracle(f, n, degree_cap));
    } catch (const ResourceLimit&) {
      if (method == MethodRequest::oracle || !closed) throw;
    }
    if (oracle && closed) {
      if (*oracle != *closed) {
        throw std::logic_error("oracle and closed form disagree at n = " + std::to_string(n) +
                               ": " + oracle->get_str() + " vs " + closed->get_str());
      }
      seq.entries.push_back({n, *oracle, CountMethod::both_agree});
    } else if (oracle) {
      seq.entries.push_back({n, *oracle, CountMethod::oracle});
    } else {
      seq.entries.push_back({n, *closed, CountMethod::closed_form});
    }
  }
  return seq;
}

std::vector<PeriodCount> exact_period_counts(const FixSeq& seq) {
  std::vector<PeriodCount> out;
  out.reserve(seq.entries.size());
  for (const auto& entry : seq.entries) {
    mpz_class b = 0;
    for (std::uint64_t k : nt::divisors(entry.n)) {
      const FixEntry* ak = seq.find(k);
      if (!ak) {
        throw InvalidArgument("exact_period_counts: a_" + std::to_string(k) +
                              " missing (divisor of " + std::to_string(entry.n) + ")");
      }
      b += nt::moebius(entry.n / k) * ak->value;
    }
    out.push_back({entry.n, b});
  }
  return out;
}

std::vector<PeriodCount> exact_period_counts(std::span<const mpz_class> counts) {
  std::vector<PeriodCount> out;
  out.reserve(counts.size());
  for (std::uint64_t n = 1; n <= counts.size(); ++n) {
    mpz_class b = 0;
    for (std::uint64_t k : nt::divisors(n)) b += nt::moebius(n / k) * counts[k - 1];
    out.push_back({n, b});
  }
  return out;
}

std::uint64_t CycleCensus::periodic_points() const { return points - tails; }

CycleCensus cycle_census(const Poly& f, std::uint32_t p, unsigned k) {
  if (f.field().characteristic() != p) {
    throw InvalidArgument("cycle_census: map characteristic differs from p");
  }
  const FieldDesc& target = FieldDesc::get(p, k);
  if (target.order() > kCensusBound) {
    throw ResourceLimit("cycle_census: p^k exceeds " + std::to_string(kCensusBound),
                        target.order().get_str());
  }
  Poly g = f;
  if (&f.field() != &target) {
    if (f.field().degree() != 1) {
      throw InvalidArgument("cycle_census: map must be defined over F_p or F_p^k");
    }
    std::vector<FieldElem> lifted;
    for (const auto& c : f.coeffs()) lifted.push_back(target.from_int(c.coeffs()[0]));
    g = Poly(target, std::move(lifted));
  }

  const std::uint64_t n = target.size();
  std::vector<std::uint32_t> next(n);
  for (std::uint64_t i = 0; i < n; ++i) {
    next[i] = static_cast<std::uint32_t>(g(target.element(i)).index());
  }

  CycleCensus census{p, k, n, {}, 0, 0};
  // walk[i]: 0 unvisited, otherwise id of the walk that first reached i
  std::vector<std::uint32_t> walk(n, 0);
  std::vector<std::uint32_t> depth(n, 0);
  std::vector<bool> on_cycle(n, false);
  std::uint32_t walk_id = 0;
  for (std::uint64_t start = 0; start < n; ++start) {
    if (walk[start] != 0) continue;
    ++walk_id;
    std::uint64_t x = start;
    std::uint32_t steps = 0;
    while (walk[x] == 0) {
      walk[x] = walk_id;
      depth[x] = steps++;
      x = next[x];
    }
    if (walk[x] == walk_id) {  // closed a new cycle
      const std::uint64_t length = steps - depth[x];
      ++census.cycle_lengths[length];
      ++census.components;
      std::uint64_t y = x;
      do {
        on_cycle[y] = true;
        y = next[y];
      } while (y != x);
    }
  }
  census.tails = static_cast<std::uint64_t>(std::count(on_cycle.begin(), on_cycle.end(), false));
  return census;
}

}  // namespace amzeta
