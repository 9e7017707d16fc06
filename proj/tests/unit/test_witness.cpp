#include <gtest/gtest.h>

#include "amzeta/errors.hpp"
#include "amzeta/numtheory.hpp"
#include "amzeta/witness.hpp"
#include "oracles.hpp"

namespace nt = amzeta::nt;

namespace {

mpz_class pow_ui(unsigned long b, unsigned long e) {
  mpz_class r;
  mpz_ui_pow_ui(r.get_mpz_t(), b, e);
  return r;
}

void expect_all_hold(const amzeta::WitnessReport& r) {
  EXPECT_FALSE(r.identities.empty());
  for (const auto& id : r.identities) {
    EXPECT_GT(id.checked, 0u) << id.name;
    EXPECT_TRUE(id.holds()) << id.name << ": " << id.verified << "/" << id.checked;
  }
}

}  // namespace

TEST(Case1, Setup) {
  const auto c = amzeta::case1_setup(3, 3);
  EXPECT_EQ(c.r, 2);
  EXPECT_EQ(c.ord_r, 2);
  const auto c15 = amzeta::case1_setup(15, 5);
  EXPECT_EQ(c15.r, 3);
  EXPECT_EQ(c15.ord_r, 4);
  EXPECT_THROW(amzeta::case1_setup(9, 5), amzeta::InvalidArgument);
  EXPECT_THROW(amzeta::case1_setup(6, 3), amzeta::InvalidArgument);
  EXPECT_THROW(amzeta::case1_setup(9, 9), amzeta::InvalidArgument);
}

TEST(Case1, FirstTermsByHand) {
  // m = q = 3: a_2 = 1 + (9 - 1)/2^3 = 2, and 2^3 mod 3 = 2.
  const mpz_class a2 = 1 + (pow_ui(3, 2) - 1) / pow_ui(2, oracle::vp(2, pow_ui(3, 2) - 1));
  EXPECT_EQ(a2, 2);
  EXPECT_EQ(nt::mod(-(a2 - 1), 3), 2);
  EXPECT_EQ(nt::powmod(2, 0 + 3, 3), 2);
  // b_1 = b_4 since v_2(1) and v_2(4) agree mod 2.
  EXPECT_EQ(nt::powmod(2, oracle::vp(2, 1) + 3, 3), nt::powmod(2, oracle::vp(2, 4) + 3, 3));
}

TEST(Case1, SequenceIdentities) {
  for (auto [m, q] : {std::pair{3ul, 3ul}, {9ul, 3ul}, {15ul, 5ul}, {5ul, 5ul}}) {
    const auto r = amzeta::case1_sequence(m, q, 64);
    EXPECT_EQ(r.scenario, "thm1_case1");
    EXPECT_EQ(r.range, 64u);
    expect_all_hold(r);
    ASSERT_NE(r.identity("a_2n oracle = closed form"), nullptr);
  }
}

TEST(Case1, Counterexamples) {
  const auto params = amzeta::case1_setup(3, 3);
  for (unsigned long k = 1; k <= 64; ++k) {
    const auto ce = amzeta::counterexample_case1(params, k, 100);
    ASSERT_GT(ce.n, 100);
    ASSERT_EQ(ce.n_plus_ak, ce.n + ce.a * k);
    ASSERT_EQ(oracle::vp(2, ce.n_plus_ak), oracle::vp(2, ce.n) + 1);
    const mpz_class shift = 3;  // v_2(m^2 - 1)
    ASSERT_NE(nt::powmod(params.r, oracle::vp(2, ce.n) + shift, params.q),
              nt::powmod(params.r, oracle::vp(2, ce.n_plus_ak) + shift, params.q));
  }
}

TEST(Case2, Setup) {
  const auto c = amzeta::case2_setup(3, 2);
  EXPECT_EQ(c.q, 5);
  EXPECT_EQ(c.r, 2);
  EXPECT_EQ(c.ord_r, 4);
  EXPECT_TRUE(amzeta::case2_in_fiber(c, 9));
  EXPECT_EQ(oracle::vp(3, 57), 1u);
  EXPECT_FALSE(amzeta::case2_in_fiber(c, 14));
  EXPECT_THROW(amzeta::case2_setup(2, 3), amzeta::InvalidArgument);
  EXPECT_THROW(amzeta::case2_setup(3, 6), amzeta::InvalidArgument);

  for (auto [p, m] : {std::pair{3ul, 2ul}, {5ul, 2ul}, {3ul, 4ul}, {7ul, 3ul}}) {
    const auto s = amzeta::case2_setup(p, m);
    EXPECT_TRUE(nt::is_prime(s.q));
    EXPECT_GT(s.q, pow_ui(m, p - 1));
    EXPECT_EQ(nt::mod(s.q, p), 2);
    EXPECT_EQ(nt::mod(s.r * p, s.q), 1);
    EXPECT_EQ(s.ord_r, oracle::order_by_powers(s.r.get_ui(), s.q.get_ui()));
    EXPECT_GT(s.ord_r, 1);
  }
}

TEST(Case2, RecognizerMatchesValuation) {
  for (auto [p, m] : {std::pair{3ul, 2ul}, {5ul, 2ul}, {3ul, 4ul}}) {
    const auto params = amzeta::case2_setup(p, m);
    const amzeta::Case2Recognizer rec(params);
    for (unsigned long n = 1; n <= 10'000; ++n) {
      const mpz_class e = (params.q - 1) * n + 1;
      const bool direct = oracle::vp(p, e) % params.ord_r.get_ui() == 0;
      ASSERT_EQ(rec.contains(n), direct) << p << " " << m << " n=" << n;
    }
  }
}

TEST(Case2, SequenceIdentities) {
  const auto params = amzeta::case2_setup(3, 2);
  const auto r = amzeta::case2_sequence(params, 64, 2000);
  EXPECT_EQ(r.scenario, "thm1_case2");
  expect_all_hold(r);
  expect_all_hold(amzeta::case2_sequence(amzeta::case2_setup(5, 3), 32, 500));
}

TEST(Case2, CounterexampleExamples) {
  const auto params = amzeta::case2_setup(3, 2);
  auto ce = amzeta::counterexample_case2(params, 1);
  EXPECT_EQ(ce.n, 9);
  EXPECT_EQ(ce.a, 5);
  EXPECT_EQ(ce.v_left, 0u);
  EXPECT_EQ(ce.v_right, 1u);
  ce = amzeta::counterexample_case2(params, 3);
  EXPECT_EQ(oracle::vp(3, (params.q - 1) * ce.n + 1), 4u);
  EXPECT_EQ(oracle::vp(3, (params.q - 1) * ce.n_plus_ak + 1), 5u);
}

TEST(Case2, CounterexamplesSplitFiber) {
  for (auto [p, m] : {std::pair{3ul, 2ul}, {5ul, 2ul}}) {
    const auto params = amzeta::case2_setup(p, m);
    const unsigned long d = params.ord_r.get_ui();
    for (unsigned long k = 1; k <= 64; ++k) {
      const auto ce = amzeta::counterexample_case2(params, k, 50);
      ASSERT_GT(ce.n, 50);
      ASSERT_GT(ce.a, 0);
      ASSERT_EQ(ce.n_plus_ak, ce.n + ce.a * k);
      const std::uint64_t N = oracle::vp(p, k);
      ASSERT_EQ(oracle::vp(p, (params.q - 1) * ce.n + 1), d * N);
      ASSERT_EQ(oracle::vp(p, (params.q - 1) * ce.n_plus_ak + 1), d * N + 1);
      ASSERT_TRUE(amzeta::case2_in_fiber(params, ce.n));
      ASSERT_FALSE(amzeta::case2_in_fiber(params, ce.n_plus_ak));
    }
  }
}

TEST(Thm2, Setup) {
  const auto t = amzeta::thm2_setup(3, 1);
  EXPECT_EQ(t.q, 29);
  EXPECT_EQ(t.r, 10);
  EXPECT_EQ(t.ord_rm, 28);
  EXPECT_EQ(t.ord_p, 6);
  EXPECT_EQ(oracle::order_by_powers(10, 29), 28u);
  EXPECT_EQ(oracle::order_by_powers(3, 28), 6u);
  EXPECT_THROW(amzeta::thm2_setup(2, 1), amzeta::InvalidArgument);

  const auto t2 = amzeta::thm2_setup(3, 2);
  EXPECT_GT(t2.q, pow_ui(3, 6));
  EXPECT_EQ(nt::mod(t2.q, 9), 2);
  EXPECT_GT(t2.ord_rm, 3);
  EXPECT_GT(t2.ord_p, 1);
}

TEST(Thm2, FirstTermsByHand) {
  // c_n = a_{2n}·10^{2n} mod 29 with a_{2n} = 3^{2n - 3^{v_3(2n)}}.
  auto c = [](unsigned long n) {
    const mpz_class a = pow_ui(3, 2 * n - pow_ui(3, oracle::vp(3, 2 * n)).get_ui());
    return nt::mod(a * nt::powmod(10, 2 * n, 29), 29);
  };
  EXPECT_EQ(c(1), 10);
  EXPECT_EQ(c(3), 14);
  EXPECT_EQ(nt::powmod(10, 3, 29), 14);
}

TEST(Thm2, SequenceIdentities) {
  const auto& F3 = amzeta::FieldDesc::get(3, 1);
  for (const auto& a : {F3.one(), F3.from_int(2)}) {
    const auto r = amzeta::thm2_sequence(a, 64);
    EXPECT_EQ(r.scenario, "thm2");
    expect_all_hold(r);
    // The oracle reaches a_{2n} for 3^{2n} <= cap, i.e. n <= 5.
    EXPECT_EQ(r.identity("a_(p^m-1)n oracle = closed form")->checked, 5u);
  }
  const auto& F9 = amzeta::FieldDesc::get(3, 2);
  expect_all_hold(amzeta::thm2_sequence(F9.generator(), 20));
  expect_all_hold(amzeta::thm2_sequence(amzeta::FieldDesc::get(5, 1).from_int(3), 20));
  EXPECT_THROW(amzeta::thm2_sequence(F3.zero(), 4), amzeta::InvalidArgument);
}

TEST(Thm2, Counterexamples) {
  const auto params = amzeta::thm2_setup(3, 1);
  auto ce = amzeta::counterexample_thm2(params, 1);
  EXPECT_EQ(ce.n, 1);
  EXPECT_EQ(ce.a, 2);
  EXPECT_EQ(ce.v_left, 0u);
  EXPECT_EQ(ce.v_right, 1u);
  ce = amzeta::counterexample_thm2(params, 3);
  EXPECT_EQ(oracle::vp(3, ce.n), 6u);
  EXPECT_EQ(oracle::vp(3, ce.n_plus_ak), 7u);
  for (unsigned long k = 1; k <= 64; ++k) {
    ce = amzeta::counterexample_thm2(params, k, 10);
    const std::uint64_t N = oracle::vp(3, k);
    ASSERT_GT(ce.n, 10);
    ASSERT_EQ(ce.n_plus_ak, ce.n + ce.a * k);
    ASSERT_EQ(oracle::vp(3, ce.n), 6 * N);
    ASSERT_EQ(oracle::vp(3, ce.n_plus_ak), 6 * N + 1);
  }
}

TEST(WitnessJson, Shape) {
  auto r = amzeta::case2_sequence(amzeta::case2_setup(3, 2), 8, 100);
  amzeta::add_counterexamples(r, amzeta::case2_setup(3, 2), 2);
  ASSERT_EQ(r.counterexamples.size(), 2u);
  const std::string j = amzeta::witness_to_json(r);
  EXPECT_EQ(j.rfind("{\"schema_version\":1,\"scenario\":\"thm1_case2\",\"params\":{", 0), 0u);
  EXPECT_NE(j.find("\"counterexamples\":[{\"k\":\"1\",\"n\":\"9\",\"a\":\"5\",\"v_left\":0,\"v_right\":1}"),
            std::string::npos);
  EXPECT_NE(j.find("\"verified_count\":8"), std::string::npos);
}
