#include <gtest/gtest.h>

#include "oracle.hpp"
#include "pskz/truncexp.hpp"

using namespace pskz;

TEST(TruncExp, DegreeBound) {
  EXPECT_EQ(degree_bound(RingParams::make(3, 1)), 3u);
  EXPECT_EQ(degree_bound(RingParams::make(3, 2)), 5u);
  EXPECT_EQ(degree_bound(RingParams::make(5, 1)), 2u);
  EXPECT_EQ(degree_bound(RingParams::make(7, 2)), 3u);
  EXPECT_EQ(degree_bound(RingParams::make(3, 1, 2, 1)), 1u);     // [2/3] + 1
  EXPECT_EQ(degree_bound(RingParams::make(3, 2, 2, 1)), 2u);     // [4/3] + 1
  EXPECT_EQ(degree_bound(RingParams::make(5, 1, 3, 2)), 1u);     // [8/10] + 1
  EXPECT_EQ(degree_bound(RingParams::make(5, 3, 1, 3)), 37u);    // [36/1] + 1
}

TEST(TruncExp, Tables) {
  ResidueRing r31(RingParams::make(3, 1));
  EXPECT_EQ(exp_coefficients(r31), (std::vector<std::uint64_t>{1, 0, 0, 0}));
  ResidueRing r32(RingParams::make(3, 2));
  const auto t = exp_coefficients(r32);
  ASSERT_EQ(t.size(), 6u);
  EXPECT_EQ(t[0], 1u);
  EXPECT_EQ(t[1], 3u);
  EXPECT_THROW(exp_coefficient(r32, 6), std::out_of_range);
}

// Past d(r,s) every p^{kr}/k! vanishes mod p^s, so the truncation is the full
// exponential mod p^s.
TEST(TruncExp, TailVanishes) {
  for (auto [p, s, rn, rd] : {std::tuple{3, 1, 1, 1}, {3, 3, 1, 1}, {5, 2, 1, 1}, {7, 2, 2, 1}, {5, 1, 3, 2},
                              {3, 2, 3, 2}, {5, 2, 1, 3}}) {
    const auto rp = RingParams::make(p, s, rn, rd);
    const auto d = degree_bound(rp);
    for (unsigned k = static_cast<unsigned>(d) + 1; k <= d + 30; ++k)
      for (auto digit : oracle::exp_coefficient(p, s, rn, rd, k)) EXPECT_EQ(digit, 0) << to_string(rp) << " k=" << k;
  }
}

template <class Ring>
void check_congruences(const RingParams& rp) {
  auto R = std::make_shared<const Ring>(rp);
  using Q = MultiPoly<Ring>;
  const auto lambda = Q::variable(R, "lambda"), t = Q::variable(R, "t"), u = Q::variable(R, "u"),
             v = Q::variable(R, "v");
  const auto pr = Q::constant(R, {}, R->p_to_r());
  const auto e = trunc_exp_poly(lambda * t);
  EXPECT_EQ(derivative(e, "t"), pr * lambda * e) << to_string(rp);
  EXPECT_EQ(derivative(e, "lambda"), pr * t * e) << to_string(rp);
  EXPECT_EQ(trunc_exp_poly(lambda * (u + v)), trunc_exp_poly(lambda * u) * trunc_exp_poly(lambda * v))
      << to_string(rp);
}

TEST(TruncExp, Congruences) {
  for (auto [p, s] : {std::pair{3, 1}, {3, 2}, {3, 3}, {5, 1}, {5, 2}, {7, 1}, {7, 2}}) {
    check_congruences<ResidueRing>(RingParams::make(p, s));
    check_congruences<ResidueRing>(RingParams::make(p, s, 2, 1));
    check_congruences<RamifiedRing>(RingParams::make(p, s, 3, 2));
  }
  check_congruences<RamifiedRing>(RingParams::make(5, 2, 1, 3));
  check_congruences<RamifiedRing>(RingParams::make(7, 2, 1, 4));
}

TEST(TruncExp, PolynomialMatchesOracle) {
  auto R = std::make_shared<const ResidueRing>(RingParams::make(5, 2));
  const std::vector<std::string> vars{"lambda", "t"};
  const auto x = oracle::mul(oracle::variable(25, vars, "lambda"), oracle::variable(25, vars, "t"));
  const auto want = oracle::trunc_exp(5, 2, 1, 3, vars, x);
  EXPECT_TRUE(oracle::equals(want, trunc_exp_poly(MultiPoly<ResidueRing>::variable(R, "lambda") *
                                                  MultiPoly<ResidueRing>::variable(R, "t"))));
}
