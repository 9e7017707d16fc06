#include "amzeta/numtheory.hpp"

#include <algorithm>
#include <array>
#include <map>

#include "amzeta/errors.hpp"

namespace amzeta::nt {

namespace {

void require_prime(const mpz_class& p, const char* who) {
  if (!is_prime(p)) {
    throw InvalidArgument(std::string(who) + ": " + to_string(p) + " is not prime");
  }
}

// n = d·2^s with d odd, n > 2 odd.
bool miller_rabin_round(const mpz_class& n, const mpz_class& witness, const mpz_class& d,
                        unsigned long s) {
  mpz_class a = mod(witness, n);
  if (a == 0) return true;
  mpz_class x;
  mpz_powm(x.get_mpz_t(), a.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
  const mpz_class n_minus_1 = n - 1;
  if (x == 1 || x == n_minus_1) return true;
  for (unsigned long i = 1; i < s; ++i) {
    x = (x * x) % n;
    if (x == n_minus_1) return true;
    if (x == 1) return false;
  }
  return false;
}

constexpr std::array<unsigned, 13> kWitnessPrimes = {2,  3,  5,  7,  11, 13, 17,
                                                     19, 23, 29, 31, 37, 41};

mpz_class pollard_brent(const mpz_class& n) {
  if (n % 2 == 0) return 2;
  for (unsigned long c = 1;; ++c) {
    auto step = [&](const mpz_class& v) -> mpz_class { return (v * v + c) % n; };
    mpz_class y = 2, x, ys, q = 1, g = 1;
    unsigned long r = 1;
    constexpr unsigned long kBatch = 128;
    do {
      x = y;
      for (unsigned long i = 0; i < r; ++i) y = step(y);
      unsigned long k = 0;
      while (k < r && g == 1) {
        ys = y;
        for (unsigned long i = 0; i < std::min(kBatch, r - k); ++i) {
          y = step(y);
          mpz_class diff = x - y;
          q = (q * abs(diff)) % n;
        }
        mpz_gcd(g.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
        k += kBatch;
      }
      r *= 2;
    } while (g == 1);
    if (g == n) {
      do {
        ys = step(ys);
        mpz_class diff = x - ys;
        mpz_class ad = abs(diff);
        mpz_gcd(g.get_mpz_t(), ad.get_mpz_t(), n.get_mpz_t());
      } while (g == 1);
    }
    if (g != n) return g;
  }
}

void factor_into(const mpz_class& n, std::map<mpz_class, unsigned>& out) {
  if (n == 1) return;
  if (is_prime(n)) {
    ++out[n];
    return;
  }
  mpz_class d = pollard_brent(n);
  factor_into(d, out);
  factor_into(n / d, out);
}

}  // namespace

std::uint64_t Valuation::finite() const {
  if (!value) throw InvalidArgument("valuation of zero is infinite");
  return *value;
}

mpz_class ResidueClass::first_above(const mpz_class& bound) const {
  // smallest x > bound with x ≡ residue
  mpz_class x = bound + 1;
  mpz_class delta = mod(residue - x, modulus);
  return x + delta;
}

bool ResidueClass::contains(const mpz_class& x) const {
  return mod(x - residue, modulus) == 0;
}

std::string to_string(const mpz_class& n) { return n.get_str(10); }

mpz_class mod(const mpz_class& a, const mpz_class& n) {
  mpz_class r;
  mpz_mod(r.get_mpz_t(), a.get_mpz_t(), n.get_mpz_t());
  return r;
}

mpz_class powmod(const mpz_class& base, const mpz_class& exp, const mpz_class& n) {
  if (n < 1) throw InvalidArgument("powmod: modulus must be positive");
  if (exp < 0) return powmod(invmod(base, n), -exp, n);
  mpz_class r;
  mpz_class b = mod(base, n);
  mpz_powm(r.get_mpz_t(), b.get_mpz_t(), exp.get_mpz_t(), n.get_mpz_t());
  return r;
}

mpz_class invmod(const mpz_class& a, const mpz_class& n) {
  mpz_class r;
  mpz_class am = mod(a, n);
  if (n == 1) return 0;
  if (mpz_invert(r.get_mpz_t(), am.get_mpz_t(), n.get_mpz_t()) == 0) {
    throw InvalidArgument("invmod: " + to_string(a) + " is not invertible mod " +
                          to_string(n));
  }
  return r;
}

bool is_prime(const mpz_class& n) {
  if (n < 2) return false;
  for (unsigned p : kWitnessPrimes) {
    if (n == p) return true;
    if (n % p == 0) return false;
  }
  mpz_class d = n - 1;
  unsigned long s = mpz_scan1(d.get_mpz_t(), 0);
  d >>= s;

  static const mpz_class kDeterministicBound("3317044064679887385961981");
  if (n < kDeterministicBound) {
    return std::all_of(kWitnessPrimes.begin(), kWitnessPrimes.end(),
                       [&](unsigned a) { return miller_rabin_round(n, a, d, s); });
  }
  gmp_randclass rng(gmp_randinit_mt);
  rng.seed(0x5eed);
  const mpz_class span = n - 3;
  for (int round = 0; round < 64; ++round) {
    mpz_class a = rng.get_z_range(span) + 2;
    if (!miller_rabin_round(n, a, d, s)) return false;
  }
  return true;
}

std::vector<PrimePower> factor(const mpz_class& n_in) {
  if (n_in == 0) throw InvalidArgument("factor: zero has no factorization");
  mpz_class n = abs(n_in);
  std::map<mpz_class, unsigned> found;
  for (unsigned long p = 2; p < 10000 && p * p <= n; p += (p == 2 ? 1 : 2)) {
    while (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
      ++found[mpz_class(p)];
      n /= p;
    }
  }
  factor_into(n, found);
  std::vector<PrimePower> out;
  out.reserve(found.size());
  for (const auto& [p, e] : found) out.push_back({p, e});
  return out;
}

Valuation vp(const mpz_class& p, const mpz_class& n) {
  require_prime(p, "vp");
  if (n == 0) return {};
  mpz_class rest = abs(n);
  std::uint64_t v = 0;
  if (p == 2) {
    return {mpz_scan1(rest.get_mpz_t(), 0)};
  }
  v = mpz_remove(rest.get_mpz_t(), rest.get_mpz_t(), p.get_mpz_t());
  return {v};
}

mpz_class strip_p(const mpz_class& p, const mpz_class& n) {
  if (n == 0) throw InvalidArgument("strip_p: zero");
  mpz_class rest = n;
  mpz_remove(rest.get_mpz_t(), rest.get_mpz_t(), p.get_mpz_t());
  return rest;
}

std::uint64_t kummer_vp_binomial(const mpz_class& p, const mpz_class& n,
                                 const mpz_class& l) {
  require_prime(p, "kummer_vp_binomial");
  if (l < 0 || l > n) {
    throw InvalidArgument("kummer_vp_binomial: need 0 <= l <= n");
  }
  mpz_class a = n, b = l;
  int borrow = 0;
  std::uint64_t borrows = 0;
  while (a > 0 || b > 0) {
    mpz_class da = a % p;
    mpz_class db = b % p + borrow;
    if (da < db) {
      borrow = 1;
      ++borrows;
    } else {
      borrow = 0;
    }
    a /= p;
    b /= p;
  }
  return borrows;
}

mpz_class least_nonvanishing_binomial(const mpz_class& p, const mpz_class& n) {
  if (n < 1) throw InvalidArgument("least_nonvanishing_binomial: need n >= 1");
  mpz_class l;
  mpz_pow_ui(l.get_mpz_t(), p.get_mpz_t(), vp(p, n).finite());
  return l;
}

std::uint64_t lte_valuation(const mpz_class& p, const mpz_class& m, const mpz_class& n) {
  require_prime(p, "lte_valuation");
  if (m % p == 0) throw InvalidArgument("lte_valuation: p divides m");
  if (n < 1) throw InvalidArgument("lte_valuation: need n >= 1");
  mpz_class base;
  if (p == 2) {
    base = m * m - 1;
  } else {
    mpz_pow_ui(base.get_mpz_t(), m.get_mpz_t(), p.get_ui() - 1);
    base -= 1;
  }
  const Valuation tail = vp(p, base);
  if (tail.infinite()) throw InvalidArgument("lte_valuation: m^k - 1 vanishes");
  return vp(p, n).finite() + *tail.value;
}

mpz_class carmichael(const mpz_class& n) {
  if (n < 1) throw InvalidArgument("carmichael: need n >= 1");
  mpz_class lambda = 1;
  for (const auto& [p, e] : factor(n)) {
    mpz_class part;
    if (p == 2 && e >= 3) {
      mpz_ui_pow_ui(part.get_mpz_t(), 2, e - 2);
    } else {
      mpz_pow_ui(part.get_mpz_t(), p.get_mpz_t(), e - 1);
      part *= p - 1;
    }
    mpz_lcm(lambda.get_mpz_t(), lambda.get_mpz_t(), part.get_mpz_t());
  }
  return lambda;
}

mpz_class mult_order(const mpz_class& a, const mpz_class& n) {
  if (n < 1) throw InvalidArgument("mult_order: need n >= 1");
  mpz_class g;
  mpz_class am = mod(a, n);
  mpz_gcd(g.get_mpz_t(), am.get_mpz_t(), n.get_mpz_t());
  if (n == 1) return 1;
  if (g != 1) {
    throw InvalidArgument("mult_order: gcd(" + to_string(a) + ", " + to_string(n) +
                          ") != 1");
  }
  mpz_class order = carmichael(n);
  for (const auto& [q, e] : factor(order)) {
    for (unsigned i = 0; i < e; ++i) {
      mpz_class candidate = order / q;
      if (powmod(am, candidate, n) != 1) break;
      order = candidate;
    }
  }
  return order;
}

std::optional<ResidueClass> solve_congruence(const mpz_class& a, const mpz_class& b,
                                             const mpz_class& M) {
  if (M < 1) throw InvalidArgument("solve_congruence: need M >= 1");
  const mpz_class am = mod(a, M), bm = mod(b, M);
  mpz_class g;
  mpz_gcd(g.get_mpz_t(), am.get_mpz_t(), M.get_mpz_t());
  if (g == 0) g = M;  // a ≡ 0
  if (bm % g != 0) return std::nullopt;
  const mpz_class reduced = M / g;
  if (reduced == 1) return ResidueClass{0, 1};
  const mpz_class x0 = mod((bm / g) * invmod(am / g, reduced), reduced);
  return ResidueClass{x0, reduced};
}

mpz_class find_prime(const mpz_class& residue, const mpz_class& modulus,
                     const mpz_class& lower_bound, std::uint64_t max_steps) {
  if (modulus < 1) throw InvalidArgument("find_prime: modulus must be positive");
  mpz_class g;
  mpz_class rm = mod(residue, modulus);
  mpz_gcd(g.get_mpz_t(), rm.get_mpz_t(), modulus.get_mpz_t());
  if (g != 1 && modulus != 1) {
    throw InvalidArgument("find_prime: residue and modulus are not coprime");
  }
  mpz_class q = ResidueClass{rm, modulus}.first_above(lower_bound);
  for (std::uint64_t step = 0; step < max_steps; ++step, q += modulus) {
    if (is_prime(q)) return q;
  }
  throw SearchExhausted("find_prime: no prime found within " + std::to_string(max_steps) +
                        " candidates");
}

int moebius(std::uint64_t n) {
  if (n == 0) throw InvalidArgument("moebius: need n >= 1");
  int mu = 1;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      n /= p;
      if (n % p == 0) return 0;
      mu = -mu;
    }
  }
  if (n > 1) mu = -mu;
  return mu;
}

std::vector<std::uint64_t> divisors(std::uint64_t n) {
  if (n == 0) throw InvalidArgument("divisors: need n >= 1");
  std::vector<std::uint64_t> small, large;
  for (std::uint64_t d = 1; d * d <= n; ++d) {
    if (n % d == 0) {
      small.push_back(d);
      if (d != n / d) large.push_back(n / d);
    }
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

}  // namespace amzeta::nt
