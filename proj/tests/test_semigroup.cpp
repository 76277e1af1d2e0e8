#include <gtest/gtest.h>

#include <random>
#include <vector>

#include "nsg/semigroup.hpp"
#include "oracles.hpp"

using nsg::Errc;
using nsg::Int;
using nsg::NumericalSemigroup;

namespace {

Errc error_of(auto&& fn) {
  try {
    fn();
  } catch (const nsg::Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "expected nsg::Error";
  return Errc::InvalidArgument;
}

}  // namespace

TEST(FromGenerators, MultiplicityAndEmbeddingDimension) {
  const auto s = NumericalSemigroup::from_generators({19, 21, 23, 25, 27, 28});
  EXPECT_EQ(s.multiplicity(), 19);
  EXPECT_EQ(s.embedding_dimension(), 6);
}

TEST(FromGenerators, Naturals) {
  const auto s = NumericalSemigroup::from_generators({1});
  EXPECT_TRUE(s.is_naturals());
  EXPECT_EQ(s.multiplicity(), 1);
  EXPECT_EQ(s.frobenius(), -1);
  EXPECT_EQ(s.conductor(), 0);
  EXPECT_EQ(s.genus(), 0);
  EXPECT_EQ(s.sporadic_count(), 0);
  EXPECT_EQ(s.minimal_generators(), std::vector<Int>{1});
  EXPECT_EQ(s, NumericalSemigroup::naturals());
}

TEST(FromGenerators, ThreeFiveSeven) {
  const auto s = NumericalSemigroup::from_generators({3, 5, 7});
  const auto b = oracle::brute({3, 5, 7}, 20);
  EXPECT_EQ(s.multiplicity(), 3);
  EXPECT_EQ(s.frobenius(), 4);
  EXPECT_EQ(s.genus(), 3);
  EXPECT_EQ(s.embedding_dimension(), 3);
  EXPECT_EQ(b.f, 4);
  EXPECT_EQ(b.genus, 3);
  EXPECT_EQ(s.minimal_generators(), b.min_gens);
}

TEST(FromGenerators, RedundantGeneratorsAreDropped) {
  const auto s = NumericalSemigroup::from_generators({6, 3, 5, 3, 10, 7});
  EXPECT_EQ(s.minimal_generators(), (std::vector<Int>{3, 5, 7}));
  EXPECT_EQ(s, NumericalSemigroup::from_generators({3, 5, 7}));
}

TEST(FromGenerators, Errors) {
  EXPECT_EQ(error_of([] { (void)NumericalSemigroup::from_generators({4, 6}); }), Errc::NonCoprime);
  EXPECT_EQ(error_of([] { (void)NumericalSemigroup::from_generators(std::vector<Int>{}); }), Errc::EmptyGenerators);
  EXPECT_EQ(error_of([] { (void)NumericalSemigroup::from_generators({0, 3}); }), Errc::ZeroGenerator);
  EXPECT_EQ(error_of([] { (void)NumericalSemigroup::from_generators({-2, 3}); }), Errc::ZeroGenerator);
  EXPECT_EQ(error_of([] { (void)NumericalSemigroup::from_generators({3, (Int{1} << 20) + 1}); }),
            Errc::GeneratorTooLarge);
}

TEST(FromGenerators, NonCoprimeMessageNamesTheDivisor) {
  try {
    (void)NumericalSemigroup::from_generators({4, 6});
    FAIL();
  } catch (const nsg::Error& e) {
    EXPECT_NE(std::string(e.what()).find("common divisor 2"), std::string::npos);
  }
}

TEST(Contains, Basics) {
  const auto s = NumericalSemigroup::from_generators({3, 5, 7});
  EXPECT_FALSE(nsg::contains(s, 4));
  EXPECT_TRUE(nsg::contains(s, 8));
  EXPECT_TRUE(nsg::contains(s, 0));
  EXPECT_FALSE(nsg::contains(s, -3));
  EXPECT_TRUE(nsg::contains(s, 1000000));
  EXPECT_TRUE(nsg::contains(NumericalSemigroup::naturals(), 0));
}

TEST(AperySet, NineteenGenerators) {
  const auto s = NumericalSemigroup::from_generators({19, 21, 23, 25, 27, 28});
  const auto ap = nsg::apery_set(s, 19);
  ASSERT_EQ(ap.size(), 19u);
  EXPECT_EQ(ap[1], 21);
  EXPECT_EQ(ap[14], 56);
  EXPECT_EQ(ap[18], 83);
}

TEST(AperySet, SmallCases) {
  const auto n = NumericalSemigroup::naturals();
  EXPECT_EQ(nsg::apery_set(n, 1).sorted_w, std::vector<Int>{0});
  const auto s = NumericalSemigroup::from_generators({3, 5, 7});
  const auto ap = nsg::apery_set(s, 3);
  EXPECT_EQ(ap.sorted_w, (std::vector<Int>{0, 5, 7}));
  EXPECT_EQ(ap.min_ap, (std::vector<Int>{0, 5, 7}));
  EXPECT_EQ(ap.max_ap, (std::vector<Int>{5, 7}));
}

TEST(AperySet, NonMultiplicityElementLeavesMinMaxEmpty) {
  const auto s = NumericalSemigroup::from_generators({3, 5, 7});
  const auto ap = nsg::apery_set(s, 5);
  EXPECT_EQ(ap.sorted_w, (std::vector<Int>{0, 3, 6, 7, 9}));
  EXPECT_TRUE(ap.min_ap.empty());
  EXPECT_TRUE(ap.max_ap.empty());
}

TEST(AperySet, RejectsNonElements) {
  const auto s = NumericalSemigroup::from_generators({3, 5, 7});
  EXPECT_EQ(error_of([&] { (void)nsg::apery_set(s, 4); }), Errc::NotAnElement);
  EXPECT_EQ(error_of([&] { (void)nsg::apery_set(s, 0); }), Errc::NotAnElement);
}

TEST(PseudoFrobenius, Examples) {
  EXPECT_EQ(nsg::pseudo_frobenius(NumericalSemigroup::from_generators({3, 5, 7})), (std::vector<Int>{2, 4}));
  EXPECT_EQ(nsg::pseudo_frobenius(NumericalSemigroup::from_generators({2, 3})), std::vector<Int>{1});
  EXPECT_EQ(nsg::pseudo_frobenius(NumericalSemigroup::from_generators({3, 4, 5})), (std::vector<Int>{1, 2}));
  EXPECT_EQ(nsg::type(NumericalSemigroup::from_generators({3, 5, 7})), 2);
  EXPECT_EQ(error_of([] { (void)nsg::pseudo_frobenius(NumericalSemigroup::naturals()); }), Errc::FullSemigroup);
}

TEST(Sylvester, Values) {
  EXPECT_EQ(nsg::sylvester_frobenius(2, 3), 1);
  EXPECT_EQ(nsg::sylvester_frobenius(3, 5), 7);
  EXPECT_EQ(nsg::sylvester_frobenius(19, 21), 359);
  EXPECT_EQ(NumericalSemigroup::from_generators({19, 21}).frobenius(), 359);
  EXPECT_EQ(oracle::brute({19, 21}, 500).f, 359);
  EXPECT_EQ(error_of([] { (void)nsg::sylvester_frobenius(4, 6); }), Errc::NonCoprime);
}

TEST(Sylvester, AgreesWithSieveForAllCoprimePairsUpTo40) {
  for (Int a = 2; a <= 40; ++a)
    for (Int b = a + 1; b <= 40; ++b) {
      if (std::gcd(a, b) != 1) continue;
      EXPECT_EQ(NumericalSemigroup::from_generators({a, b}).frobenius(), nsg::sylvester_frobenius(a, b))
          << a << "," << b;
    }
}

TEST(FromGaps, BuildsAndRejects) {
  const std::vector<Int> gaps{1, 2, 4};
  EXPECT_EQ(NumericalSemigroup::from_gaps(gaps), NumericalSemigroup::from_generators({3, 5, 7}));
  const std::vector<Int> bad{1, 2, 6};  // 3 + 3 = 6
  EXPECT_EQ(error_of([&] { (void)NumericalSemigroup::from_gaps(bad); }), Errc::NotASemigroup);
  EXPECT_TRUE(NumericalSemigroup::from_gaps(std::vector<Int>{}).is_naturals());
}

TEST(SemigroupProperties, RandomGeneratorsMatchBruteForce) {
  std::mt19937_64 rng(20240613);
  for (int iter = 0; iter < 300; ++iter) {
    const auto gens = oracle::random_generators(rng, 30, 5);
    const auto s = NumericalSemigroup::from_generators(gens);
    const Int bound = 30 * 30 + 64;
    const auto b = oracle::brute(gens, bound);
    SCOPED_TRACE(nsg::detail::join(gens));
    ASSERT_EQ(s.frobenius(), b.f);
    ASSERT_EQ(s.multiplicity(), b.m);
    ASSERT_EQ(s.genus(), b.genus);
    ASSERT_EQ(s.sporadic_count(), b.n);
    ASSERT_EQ(s.minimal_generators(), b.min_gens);
    ASSERT_EQ(static_cast<Int>(s.membership().size()), s.frobenius() + s.multiplicity() + 1);
    for (Int x = -2; x < s.frobenius() + 2 * s.multiplicity(); ++x) ASSERT_EQ(s.contains(x), b.in(x)) << x;

    const auto ap = nsg::apery_set(s, s.multiplicity());
    EXPECT_EQ(ap.sorted_w, b.apery);
    EXPECT_EQ(static_cast<Int>(ap.min_ap.size()), s.embedding_dimension());
    std::vector<Int> shifted;
    for (Int w : ap.max_ap) shifted.push_back(w - s.multiplicity());
    if (!s.is_naturals()) {
      EXPECT_EQ(shifted, nsg::pseudo_frobenius(s));
    }

    // Canonicalisation is idempotent.
    EXPECT_EQ(NumericalSemigroup::from_generators(s.minimal_generators()), s);
  }
}
