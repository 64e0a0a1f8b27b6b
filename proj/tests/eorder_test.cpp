#include "criteria.hpp"
#include "fixtures.hpp"

#include <gtest/gtest.h>

namespace eres::testing {
namespace {

TEST(EOrder, GeneratorExamples) {
  VarSpace vs(3, {});
  const Binomial f = bin(vs, {1, 1, 0}, {0, 0, 2}, 3);
  EXPECT_EQ(eord_generator(f, Stratum{0, 1, 2}), Rational(2));
  EXPECT_EQ(eord_generator(f, Stratum{}), Rational(0));
  EXPECT_EQ(eord_generator(f, Stratum{0}), Rational(0));
  EXPECT_EQ(eord_generator(f, Stratum{0, 2}), Rational(1));

  VarSpace mixed(2, {1});
  const Binomial h = normalize_binomial(mixed, {2, 0}, {2, 3}, Coefficient::one(0), Coefficient::from_int(0, 4));
  EXPECT_EQ(h.kind(), Kind::Hyperbolic);
  EXPECT_EQ(eord_generator(h, Stratum{0}), Rational(2));

  const Binomial cusp = bin(VarSpace(2, {}), {2, 0}, {0, 3}, 1).with_weight(Rational(1, 2));
  EXPECT_EQ(eord_generator(cusp, Stratum{0, 1}), Rational(1));
}

TEST(EOrder, IdealIsTheMinimumOverGenerators) {
  VarSpace vs(3, {});
  const BinomialIdeal J{{bin(vs, {1, 1, 0}, {0, 0, 2}, 2), mono(vs, {3, 0, 0})}};
  EXPECT_EQ(eord_ideal(J, Stratum{0, 1, 2}), Rational(2));
  EXPECT_EQ(eord_ideal(BinomialIdeal{{mono(vs, {2, 0, 0})}}, Stratum{0}), Rational(2));
  EXPECT_THROW(eord_ideal(BinomialIdeal{}, Stratum{0}), DomainError);

  VarSpace units(1, {0});
  const BinomialIdeal unit{{normalize_binomial(units, {0}, {2}, Coefficient::one(0), Coefficient::from_int(0, 3))}};
  EXPECT_EQ(etop(unit, units).theta_max, Rational(0));
  EXPECT_EQ(etop(unit, units).strata, std::vector<Stratum>{Stratum{}});
}

TEST(ESing, MinimalStrataReachingControl) {
  VarSpace vs(3, {});
  EXPECT_EQ(esing(BinomialIdeal{{bin(vs, {1, 1, 0}, {0, 0, 2}, 1)}}, 2, vs), std::vector<Stratum>{(Stratum{0, 1, 2})});
  EXPECT_EQ(esing(BinomialIdeal{{mono(vs, {2, 0, 0})}}, 2, vs), std::vector<Stratum>{Stratum{0}});
  EXPECT_TRUE(esing(BinomialIdeal{{bin(vs, {1, 0, 0}, {0, 1, 0}, 1)}}, 2, vs).empty());
  EXPECT_THROW(esing(BinomialIdeal{{mono(vs, {1, 0, 0})}}, 0, vs), DomainError);
}

TEST(ETop, MaximumAndItsStrata) {
  VarSpace two(2, {}), three(3, {});
  const TopLocus cusp = etop(BinomialIdeal{{bin(two, {2, 0}, {0, 3})}}, two);
  EXPECT_EQ(cusp.theta_max, Rational(2));
  EXPECT_EQ(cusp.strata, std::vector<Stratum>{(Stratum{0, 1})});
  const TopLocus cone = etop(BinomialIdeal{{bin(three, {1, 1, 0}, {0, 0, 2})}}, three);
  EXPECT_EQ(cone.theta_max, Rational(2));
  EXPECT_EQ(cone.strata, std::vector<Stratum>{(Stratum{0, 1, 2})});
}

TEST(Equimultiple, ContainsEverySupersetOfTheTopStratum) {
  VarSpace vs(2, {});
  const Binomial f = bin(vs, {2, 0}, {0, 3});
  EXPECT_EQ(equimultiple_locus(f, Stratum{0, 1}, vs), std::vector<Stratum>{(Stratum{0, 1})});
  const auto zero = equimultiple_locus(f, Stratum{}, vs);
  EXPECT_EQ(zero, (std::vector<Stratum>{Stratum{}, Stratum{0}, Stratum{1}}));
}

TEST(EquimultipleProperty, LocusMeetsTheLeadSupport) {
  Sampler s(31);
  for (int k = 0; k < 300; ++k) {
    const VarSpace vs = s.space(4, false);
    const Binomial f = s.generator(vs, s.characteristic());
    if (f.kind() != Kind::Proper) continue;
    Stratum full;
    for (int i : vs.x_indices()) full = full.with(i);
    const Rational top = eord_generator(f, full);
    for (const auto& t : equimultiple_locus(f, full, vs)) {
      EXPECT_EQ(eord_generator(f, t), top);
      bool meets = false;
      for (int i : t.indices()) meets = meets || f.lhs()[static_cast<std::size_t>(i)] > 0 || f.common()[static_cast<std::size_t>(i)] > 0;
      EXPECT_TRUE(meets) << f.to_string() << " at " << t.to_string();
    }
  }
}

TEST(EOrderProperty, OracleEquivalence) {
  const Verdict v = oracle_equivalence(1000, 4);
  EXPECT_TRUE(v.pass) << v.detail;
}

TEST(EOrderProperty, Monotonicity) {
  const Verdict v = monotonicity(200, 5);
  EXPECT_TRUE(v.pass) << v.detail;
}

}  // namespace
}  // namespace eres::testing
