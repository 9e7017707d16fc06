#include <set>

#include <gtest/gtest.h>

#include "amzeta/errors.hpp"
#include "amzeta/finite_field.hpp"

using amzeta::FieldDesc;
using amzeta::FieldElem;

namespace {

std::vector<std::uint32_t> modulus(std::uint32_t p, unsigned m) {
  return FieldDesc::get(p, m).modulus();
}

// Brute-force irreducibility: no monic factor of degree 1..m/2 divides f.
// Division is plain long division over F_p.
bool divides(const std::vector<std::uint32_t>& g, std::vector<std::uint32_t> f, std::uint32_t p) {
  const std::size_t dg = g.size() - 1;
  for (std::size_t i = f.size(); i-- > dg;) {
    const std::uint64_t c = f[i];
    if (c == 0) continue;
    for (std::size_t j = 0; j <= dg; ++j) {
      f[i - dg + j] = static_cast<std::uint32_t>((f[i - dg + j] + (p - c) * g[j]) % p);
    }
  }
  for (std::size_t i = 0; i < dg; ++i) {
    if (f[i] != 0) return false;
  }
  return true;
}

bool irreducible_by_trial(const std::vector<std::uint32_t>& f, std::uint32_t p) {
  const std::size_t m = f.size() - 1;
  for (std::size_t d = 1; d <= m / 2; ++d) {
    std::uint64_t count = 1;
    for (std::size_t i = 0; i < d; ++i) count *= p;
    for (std::uint64_t idx = 0; idx < count; ++idx) {
      std::vector<std::uint32_t> g(d + 1, 0);
      std::uint64_t t = idx;
      for (std::size_t i = 0; i < d; ++i, t /= p) g[i] = static_cast<std::uint32_t>(t % p);
      g[d] = 1;
      if (divides(g, f, p)) return false;
    }
  }
  return true;
}

}  // namespace

TEST(FieldConstruct, Examples) {
  EXPECT_EQ(modulus(3, 2), (std::vector<std::uint32_t>{1, 0, 1}));
  EXPECT_EQ(modulus(2, 1), (std::vector<std::uint32_t>{0, 1}));
  EXPECT_EQ(modulus(2, 2), (std::vector<std::uint32_t>{1, 1, 1}));
  EXPECT_EQ(FieldDesc::get(3, 2).modulus_string(), "t^2 + 1");
  EXPECT_EQ(&FieldDesc::get(5, 3), &FieldDesc::get(5, 3));
  EXPECT_THROW(FieldDesc::get(4, 1), amzeta::InvalidArgument);
  EXPECT_THROW(FieldDesc::get(3, 0), amzeta::InvalidArgument);
}

TEST(FieldConstruct, ModulusIsSmallestIrreducible) {
  for (std::uint32_t p : {2u, 3u, 5u}) {
    for (unsigned m = 2; m <= (p == 2 ? 8u : 4u); ++m) {
      const auto f = modulus(p, m);
      ASSERT_TRUE(irreducible_by_trial(f, p)) << p << "^" << m;
      // Every monic candidate that sorts lower (c0 compared first, so c0 is
      // the most significant key) is reducible.
      std::uint64_t idx = 0;
      for (unsigned i = 0; i < m; ++i) idx = idx * p + f[i];
      for (std::uint64_t j = 0; j < idx; ++j) {
        std::vector<std::uint32_t> g(m + 1, 0);
        std::uint64_t t = j;
        for (unsigned i = m; i-- > 0; t /= p) g[i] = static_cast<std::uint32_t>(t % p);
        g[m] = 1;
        ASSERT_FALSE(irreducible_by_trial(g, p)) << p << "^" << m << " candidate " << j;
      }
    }
  }
}

TEST(FieldConstruct, IrreducibilityTestMatchesTrialDivision) {
  for (std::uint32_t p : {2u, 3u}) {
    for (unsigned m = 1; m <= 5; ++m) {
      std::uint64_t count = 1;
      for (unsigned i = 0; i < m; ++i) count *= p;
      for (std::uint64_t j = 0; j < count; ++j) {
        std::vector<std::uint32_t> g(m + 1, 0);
        std::uint64_t t = j;
        for (unsigned i = 0; i < m; ++i, t /= p) g[i] = static_cast<std::uint32_t>(t % p);
        g[m] = 1;
        ASSERT_EQ(amzeta::is_irreducible_mod_p(g, p), irreducible_by_trial(g, p));
      }
    }
  }
}

TEST(FieldArith, Examples) {
  const auto& f9 = FieldDesc::get(3, 2);
  const FieldElem t = f9.generator();
  EXPECT_EQ(t * t, f9.from_int(2));
  EXPECT_EQ(t.frobenius(1), f9.from_int(2) * t);
  EXPECT_EQ(t.to_string(), "[0,1]");
  EXPECT_EQ(FieldDesc::get(7, 1).from_int(-1).to_string(), "6");
  EXPECT_THROW(f9.zero().inv(), amzeta::DivisionByZero);
  EXPECT_THROW(f9.one() / f9.zero(), amzeta::DivisionByZero);
  EXPECT_THROW(t + FieldDesc::get(3, 3).one(), amzeta::InvalidArgument);
}

TEST(FieldArith, AxiomsExhaustive) {
  for (auto [p, m] : {std::pair{2u, 2u}, {2u, 3u}, {3u, 2u}, {5u, 2u}, {7u, 1u}}) {
    const auto& F = FieldDesc::get(p, m);
    const auto xs = F.elements();
    ASSERT_EQ(xs.size(), F.size());
    std::set<std::uint64_t> seen;
    for (const auto& x : xs) seen.insert(x.index());
    EXPECT_EQ(seen.size(), xs.size());
    const std::uint64_t q = F.size();
    for (const auto& x : xs) {
      EXPECT_EQ(x + F.zero(), x);
      EXPECT_EQ(x * F.one(), x);
      EXPECT_TRUE((x - x).is_zero());
      if (x.is_zero()) continue;
      EXPECT_TRUE((x * x.inv()).is_one());
      EXPECT_TRUE(x.pow(q - 1).is_one());
      EXPECT_EQ(x.pow(mpz_class(-1)), x.inv());
      for (const auto& y : xs) {
        for (const auto& z : xs) {
          ASSERT_EQ(x * (y + z), x * y + x * z);
          ASSERT_EQ((x * y) * z, x * (y * z));
        }
      }
    }
  }
}

TEST(FieldArith, MultiplicativeGroupIsCyclic) {
  for (auto [p, m] : {std::pair{2u, 4u}, {3u, 3u}, {5u, 2u}, {2u, 8u}, {7u, 2u}}) {
    const auto& F = FieldDesc::get(p, m);
    const std::uint64_t units = F.size() - 1;
    bool found = false;
    for (const auto& g : F.elements()) {
      if (g.is_zero()) continue;
      // g generates iff its powers hit 1 first at exponent |F*|.
      std::set<std::uint64_t> powers;
      FieldElem x = g;
      for (std::uint64_t k = 0; k < units; ++k, x *= g) powers.insert(x.index());
      if (powers.size() == units) {
        found = true;
        break;
      }
    }
    EXPECT_TRUE(found) << p << "^" << m;
  }
}

TEST(Frobenius, IsAutomorphismExhaustive) {
  for (auto [p, m] : {std::pair{2u, 2u}, {2u, 3u}, {3u, 2u}, {5u, 2u}}) {
    const auto& F = FieldDesc::get(p, m);
    const auto xs = F.elements();
    for (const auto& x : xs) {
      EXPECT_EQ(x.frobenius(1), x.pow(p));
      EXPECT_EQ(x.frobenius(static_cast<std::int64_t>(m)), x);
      EXPECT_EQ(x.frobenius(-1).frobenius(1), x);
      EXPECT_EQ(x.frobenius(1).frobenius(-1), x);
      for (const auto& y : xs) {
        ASSERT_EQ((x + y).frobenius(1), x.frobenius(1) + y.frobenius(1));
        ASSERT_EQ((x * y).frobenius(1), x.frobenius(1) * y.frobenius(1));
      }
    }
  }
}

TEST(FieldElemIndex, RoundTrips) {
  const auto& F = FieldDesc::get(3, 3);
  for (std::uint64_t i = 0; i < F.size(); ++i) EXPECT_EQ(F.element(i).index(), i);
  const std::uint32_t c[] = {2, 0, 1};
  EXPECT_EQ(F.from_coeffs(c).to_string(), "[2,0,1]");
  const std::uint32_t bad[] = {3};
  EXPECT_THROW(F.from_coeffs(bad), amzeta::InvalidArgument);
}
