#include <random>
#include <set>

#include <gtest/gtest.h>

#include "amzeta/automata.hpp"
#include "amzeta/errors.hpp"
#include "oracles.hpp"

using amzeta::Dfao;
using amzeta::Symbol;

namespace {

mpz_class Z(unsigned long n) { return mpz_class(n); }

std::int64_t first(const Symbol& s) { return s.at(0); }

}  // namespace

TEST(Digits, RoundTrip) {
  EXPECT_TRUE(amzeta::digits_lsd(0, 3).empty());
  EXPECT_EQ(amzeta::digits_lsd(17, 3), (std::vector<unsigned>{2, 2, 1}));
  for (unsigned long n = 0; n < 2000; ++n) {
    for (unsigned b : {2u, 3u, 7u, 10u}) {
      ASSERT_EQ(amzeta::from_digits_lsd(amzeta::digits_lsd(n, b), b), n);
    }
  }
}

TEST(DfaoRun, Examples) {
  const Dfao v2 = amzeta::build_vp_mod_dfao(2, 2);
  EXPECT_EQ(first(v2.run(4)), 0);
  EXPECT_EQ(first(v2.run(2)), 1);
  EXPECT_EQ(first(v2.run(1)), 0);
  EXPECT_THROW(v2.run(0), amzeta::InvalidArgument);
  EXPECT_THROW(v2.run(-3), amzeta::InvalidArgument);

  const Dfao c = amzeta::constant_dfao(3, {7});
  EXPECT_EQ(c.run(0), Symbol{7});
  EXPECT_EQ(c.run(0), c.output(c.initial()));

  EXPECT_THROW(Dfao(2, {0, 1}, 0, {{0}}), amzeta::InvalidArgument);
  EXPECT_THROW(Dfao(2, {0, 0}, 1, {{0}}), amzeta::InvalidArgument);
}

TEST(VpModDfao, Structure) {
  const std::int64_t outs[] = {10, 11, 12, 13};
  const Dfao a = amzeta::build_vp_mod_dfao(3, 4, outs);
  EXPECT_EQ(a.states(), 8u);
  EXPECT_EQ(a.run(9), Symbol{12});
  EXPECT_FALSE(a.defined_at_zero());
  // q_i cycles on 0, nonzero digits move q_i to r_i which absorbs.
  for (Dfao::State i = 0; i < 4; ++i) {
    EXPECT_EQ(a.next(i, 0), (i + 1) % 4);
    for (unsigned d = 1; d < 3; ++d) EXPECT_EQ(a.next(i, d), 4 + i);
    for (unsigned d = 0; d < 3; ++d) EXPECT_EQ(a.next(4 + i, d), 4 + i);
    EXPECT_EQ(a.output(4 + i), Symbol{outs[i]});
  }
}

TEST(VpModDfao, MatchesValuationGrid) {
  for (auto [p, d] : {std::pair{2u, 2u}, {2u, 4u}, {3u, 4u}, {5u, 3u}, {7u, 2u}, {3u, 1u}}) {
    const Dfao a = amzeta::build_vp_mod_dfao(p, d);
    mpz_class limit;
    mpz_ui_pow_ui(limit.get_mpz_t(), p, p == 7 ? 6 : 10);
    const unsigned long lim = std::min<unsigned long>(limit.get_ui(), 200'000);
    for (unsigned long n = 1; n < lim; ++n) {
      ASSERT_EQ(first(a.run(Z(n))), static_cast<std::int64_t>(oracle::vp(p, n) % d))
          << p << " " << d << " " << n;
    }
  }
}

TEST(CongruenceDfao, Examples) {
  const std::uint64_t one[] = {1};
  EXPECT_EQ(amzeta::build_congruence_dfao(3, 4, one).run(5), Symbol{1});
  const std::uint64_t zero[] = {0};
  const Dfao c3 = amzeta::build_congruence_dfao(2, 3, zero);
  EXPECT_EQ(c3.run(6), Symbol{1});
  EXPECT_EQ(c3.run(7), Symbol{0});
  EXPECT_EQ(c3.run(0), Symbol{1});
  const std::uint64_t all[] = {0, 1, 2, 3, 4};
  const Dfao every = amzeta::build_congruence_dfao(3, 5, all);
  for (unsigned long n = 0; n < 500; ++n) ASSERT_EQ(every.run(Z(n)), Symbol{1});
}

TEST(CongruenceDfao, MatchesResidues) {
  for (auto [b, M] : {std::pair{2u, 3u}, {3u, 4u}, {3u, 28u}, {10u, 7u}, {5u, 6u}, {2u, 12u}}) {
    const std::uint64_t targets[] = {1 % M, 2 % M};
    const Dfao a = amzeta::build_congruence_dfao(b, M, targets);
    for (unsigned long n = 0; n < 100'000; ++n) {
      const bool want = n % M == 1 % M || n % M == 2 % M;
      ASSERT_EQ(a.run(Z(n)), Symbol{want ? 1 : 0}) << b << " " << M << " " << n;
    }
  }
}

TEST(Product, Examples) {
  const Dfao v2 = amzeta::build_vp_mod_dfao(2, 2);
  const std::uint64_t zero[] = {0};
  const Dfao c3 = amzeta::build_congruence_dfao(2, 3, zero);
  const Dfao prod = amzeta::dfao_product(v2, c3);
  EXPECT_EQ(prod.run(6), (Symbol{1, 1}));
  EXPECT_FALSE(prod.defined_at_zero());

  const Dfao with_const = amzeta::dfao_product(v2, amzeta::constant_dfao(2, {9}));
  for (unsigned long n = 1; n < 300; ++n) {
    ASSERT_EQ(with_const.run(Z(n)), (Symbol{first(v2.run(Z(n))), 9}));
  }
  EXPECT_THROW(amzeta::dfao_product(v2, amzeta::constant_dfao(3, {0})), amzeta::InvalidArgument);

  const Dfao summed = amzeta::dfao_product(
      v2, c3, [](const Symbol& a, const Symbol& b) { return Symbol{a[0] + 10 * b[0]}; });
  EXPECT_EQ(summed.run(6), Symbol{11});
}

TEST(Product, ExhaustivePrefix) {
  const Dfao v2 = amzeta::build_vp_mod_dfao(2, 4);
  const std::uint64_t t[] = {0, 4};
  const Dfao c = amzeta::build_congruence_dfao(2, 7, t);
  const Dfao prod = amzeta::dfao_product(v2, c);
  for (unsigned long n = 1; n < (1u << 12); ++n) {
    Symbol want = v2.run(Z(n));
    const Symbol& right = c.run(Z(n));
    want.insert(want.end(), right.begin(), right.end());
    ASSERT_EQ(prod.run(Z(n)), want) << n;
  }
}

TEST(Subsequence, Examples) {
  const Dfao v2 = amzeta::build_vp_mod_dfao(2, 2);
  const Dfao odd = amzeta::dfao_subsequence(v2, 2, 1);
  const Dfao even = amzeta::dfao_subsequence(v2, 2, 0);
  const Dfao four = amzeta::dfao_subsequence(v2, 4, 2);
  for (unsigned long n = 0; n < 1024; ++n) {
    ASSERT_EQ(first(odd.run(Z(n))), 0);
    ASSERT_EQ(first(four.run(Z(n))), 1);
    if (n > 0) ASSERT_EQ(first(even.run(Z(n))), static_cast<std::int64_t>((oracle::vp(2, n) + 1) % 2));
  }
  // stride·0 + 0 = 0 is outside a valuation automaton's domain.
  EXPECT_THROW(even.run(0), amzeta::InvalidArgument);
}

TEST(Subsequence, MatchesDirectRunGrid) {
  const std::uint64_t t[] = {2};
  const std::vector<Dfao> bases{amzeta::build_vp_mod_dfao(2, 2), amzeta::build_vp_mod_dfao(2, 3),
                                amzeta::build_congruence_dfao(2, 5, t)};
  for (const auto& a : bases) {
    for (auto [stride, offset] : {std::pair{1ul, 0ul}, {2ul, 1ul}, {3ul, 1ul}, {5ul, 7ul},
                                  {12ul, 4ul}, {7ul, 0ul}, {1ul, 9ul}}) {
      const Dfao s = amzeta::dfao_subsequence(a, stride, offset);
      for (unsigned long n = 0; n < (1u << 12); ++n) {
        const unsigned long target = stride * n + offset;
        if (target == 0 && !a.defined_at_zero()) continue;
        ASSERT_EQ(s.run(Z(n)), a.run(Z(target))) << stride << "n+" << offset << " n=" << n;
      }
    }
  }
}

TEST(Transducer, Examples) {
  const amzeta::AffineTransducer t(3, 4, 1);
  const auto out = t.apply(4);
  EXPECT_EQ(out.value, 17);
  EXPECT_EQ(out.digits, (std::vector<unsigned>{2, 2, 1}));
  EXPECT_EQ(t.apply(0).value, 1);
  EXPECT_EQ(t.apply(0).digits, (std::vector<unsigned>{1}));
}

TEST(Transducer, ValueAndInjectivity) {
  for (auto [p, q] : {std::pair{3u, 5u}, {3u, 29u}, {2u, 3u}, {5u, 7u}}) {
    const amzeta::AffineTransducer t(p, q - 1, 1);
    std::set<std::vector<unsigned>> images;
    for (unsigned long n = 0; n < 100'000; ++n) {
      const auto out = t.apply(Z(n));
      ASSERT_EQ(out.value, Z((q - 1) * n + 1));
      ASSERT_EQ(out.digits, amzeta::digits_lsd(out.value, p));
      ASSERT_TRUE(images.insert(out.digits).second) << "collision at " << n;
    }
  }
}

TEST(EventualPeriod, Examples) {
  std::vector<std::int64_t> alt;
  for (int i = 0; i < 40; ++i) alt.push_back(i % 2);
  EXPECT_EQ(amzeta::detect_eventual_period(alt, 4, 8), (amzeta::EventualPeriod{0, 2}));
  alt.insert(alt.begin(), 3);
  EXPECT_EQ(amzeta::detect_eventual_period(alt, 4, 8), (amzeta::EventualPeriod{1, 2}));

  const Dfao v2 = amzeta::build_vp_mod_dfao(2, 2);
  std::vector<std::int64_t> seq;
  for (unsigned long n = 1; n <= 1024; ++n) seq.push_back(first(v2.run(Z(n))));
  EXPECT_FALSE(amzeta::detect_eventual_period(seq, 256, 64));
  EXPECT_THROW(amzeta::detect_eventual_period(seq, 1000, 64), amzeta::InvalidArgument);
}

TEST(EventualPeriod, FindsPlantedStructure) {
  std::mt19937_64 rng(53);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t s = rng() % 20, t = 1 + rng() % 12;
    std::vector<std::int64_t> cycle(t);
    for (auto& c : cycle) c = static_cast<std::int64_t>(rng() % 3);
    std::vector<std::int64_t> seq;
    for (std::size_t i = 0; i < s; ++i) seq.push_back(static_cast<std::int64_t>(rng() % 3));
    for (std::size_t i = 0; seq.size() < 20 + 2 * 12 + 8; ++i) seq.push_back(cycle[i % t]);
    const auto got = amzeta::detect_eventual_period(seq, 20, 12);
    ASSERT_TRUE(got);
    ASSERT_LE(got->preperiod, s);
    ASSERT_LE(got->period, t);
    ASSERT_EQ(t % got->period, 0u);  // a minimal period divides any period
    for (std::size_t i = got->preperiod; i + got->period < seq.size(); ++i) {
      ASSERT_EQ(seq[i], seq[i + got->period]);
    }
  }
}

TEST(DfaoJson, RoundTrip) {
  const std::uint64_t t[] = {1};
  const Dfao a = amzeta::dfao_product(amzeta::build_vp_mod_dfao(3, 4),
                                      amzeta::build_congruence_dfao(3, 4, t));
  const std::string text = amzeta::dfao_to_json(a);
  EXPECT_EQ(text.rfind("{\"schema_version\":1,\"alphabet\":3,", 0), 0u);
  EXPECT_EQ(amzeta::dfao_from_json(text), a);
  EXPECT_THROW(amzeta::dfao_from_json("{\"alphabet\":2}"), amzeta::InvalidArgument);
  EXPECT_THROW(amzeta::dfao_from_json("not json"), amzeta::InvalidArgument);
}
