#include <gtest/gtest.h>

#include <random>
#include <vector>

#include "nsg/intervals.hpp"
#include "nsg/semigroup.hpp"
#include "oracles.hpp"

using nsg::Int;
using nsg::NumericalSemigroup;

namespace {

const NumericalSemigroup& example_19() {
  static const auto s = NumericalSemigroup::from_generators({19, 21, 23, 25, 27, 28});
  return s;
}

}  // namespace

TEST(QRho, Examples) {
  EXPECT_EQ(nsg::q_rho(example_19()), (nsg::QRho{4, 11}));
  EXPECT_EQ(nsg::q_rho(NumericalSemigroup::from_generators({3, 5, 7})), (nsg::QRho{2, 1}));
  EXPECT_EQ(nsg::q_rho(NumericalSemigroup::naturals()), (nsg::QRho{0, 0}));
  EXPECT_EQ(nsg::q_rho(NumericalSemigroup::from_generators({13, 15, 17, 19, 21, 27})), (nsg::QRho{4, 1}));
  EXPECT_EQ(nsg::q_rho(NumericalSemigroup::from_generators({22, 23, 25, 27, 29, 31, 33})), (nsg::QRho{3, 0}));
}

TEST(WorkedExample, Invariants) {
  const auto& s = example_19();
  EXPECT_EQ(s.frobenius(), 64);
  EXPECT_EQ(s.conductor(), 65);
  EXPECT_EQ(s.sporadic_count(), 26);
  EXPECT_EQ(s.genus(), 39);
  EXPECT_EQ(nsg::wilf_surplus(s), 91);
  EXPECT_EQ(nsg::wilf_sum(s), 91);
  const auto ap = nsg::apery_set(s, 19);
  EXPECT_EQ(nsg::floor_defect(s, ap, 18, 1, 14), 0);
  EXPECT_GE(ap[18], ap[1] + ap[14]);
}

TEST(Intervals, ThreeFiveSeven) {
  const auto s = NumericalSemigroup::from_generators({3, 5, 7});
  EXPECT_EQ(nsg::interval_counts(s), (std::vector<Int>{1, 1}));
  EXPECT_EQ(nsg::eta_direct(s), (std::vector<Int>{2, 0}));
  EXPECT_EQ(nsg::eta_apery(s), (std::vector<Int>{2, 0}));
  EXPECT_EQ(nsg::wilf_surplus(s), 1);
  EXPECT_EQ(nsg::wilf_sum(s), 1);
  EXPECT_EQ(nsg::floor_defect(s, 2, 1, 1), -2);
}

TEST(Intervals, TwoThree) {
  const auto s = NumericalSemigroup::from_generators({2, 3});
  EXPECT_EQ(nsg::interval_counts(s), std::vector<Int>{1});
  EXPECT_EQ(nsg::eta_direct(s), std::vector<Int>{1});
  EXPECT_EQ(nsg::wilf_surplus(s), 0);
  EXPECT_EQ(nsg::wilf_sum(s), 0);
}

TEST(Intervals, Naturals) {
  const auto s = NumericalSemigroup::naturals();
  EXPECT_TRUE(nsg::interval_counts(s).empty());
  EXPECT_TRUE(nsg::eta_direct(s).empty());
  EXPECT_TRUE(nsg::eta_apery(s).empty());
  EXPECT_EQ(nsg::wilf_surplus(s), 0);
  EXPECT_EQ(nsg::wilf_sum(s), 0);
}

TEST(FloorDefect, RejectsBadIndices) {
  const auto s = NumericalSemigroup::from_generators({3, 5, 7});
  for (auto [i, j, k] : {std::tuple{3, 1, 1}, {-1, 0, 0}, {0, 0, 5}}) {
    try {
      (void)nsg::floor_defect(s, i, j, k);
      ADD_FAILURE();
    } catch (const nsg::Error& e) {
      EXPECT_EQ(e.code(), nsg::Errc::IndexOutOfRange);
    }
  }
}

TEST(ShiftedFloor, NegativeNumerators) {
  EXPECT_EQ(nsg::shifted_floor(-1, 0, 3), -1);
  EXPECT_EQ(nsg::shifted_floor(0, 2, 3), 0);
  EXPECT_EQ(nsg::shifted_floor(7, 2, 3), 3);
}

// n_k by brute count, eta both ways, and both Wilf forms on random input.
TEST(IntervalProperties, RandomGenerators) {
  std::mt19937_64 rng(777);
  for (int iter = 0; iter < 300; ++iter) {
    const auto gens = oracle::random_generators(rng, 25, 5);
    const auto s = NumericalSemigroup::from_generators(gens);
    const auto b = oracle::brute(gens, 25 * 25 + 64);
    SCOPED_TRACE(nsg::detail::join(gens));
    const Int m = b.m;
    const Int c = b.f + 1;
    const Int q = (c + m - 1) / m;
    const Int rho = q * m - c;
    ASSERT_EQ(nsg::q_rho(s), (nsg::QRho{q, rho}));
    std::vector<Int> nk;
    for (Int k = 0; k < q; ++k) {
      Int cnt = 0;
      for (Int x = std::max<Int>(0, k * m - rho); x < (k + 1) * m - rho; ++x) cnt += b.in(x) ? 1 : 0;
      nk.push_back(cnt);
    }
    ASSERT_EQ(nsg::interval_counts(s), nk);
    const auto eta = nsg::eta_direct(s);
    ASSERT_EQ(eta, nsg::eta_apery(s));
    Int sum_eta = 0, sum_jeta = 0;
    for (std::size_t j = 0; j < eta.size(); ++j) {
      sum_eta += eta[j];
      sum_jeta += static_cast<Int>(j + 1) * eta[j];
    }
    if (q >= 1) {
      EXPECT_EQ(sum_eta, q);
      EXPECT_EQ(sum_jeta, b.n);
    }
    EXPECT_EQ(nsg::wilf_surplus(s), static_cast<Int>(b.min_gens.size()) * b.n - c);
    EXPECT_EQ(nsg::wilf_sum(s), nsg::wilf_surplus(s));
  }
}
