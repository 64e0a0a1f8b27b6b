#include "fixtures.hpp"
#include "sampler.hpp"

#include "eres/oracle.hpp"

#include <gtest/gtest.h>

namespace eres::testing {
namespace {

TEST(Chart, RecordsSubstitutionHistory) {
  const Chart root = Chart::root(VarSpace(3, {}));
  const Chart once = blow_up_chart(root, {2, 0}, 0);
  ASSERT_EQ(once.history.size(), 1U);
  EXPECT_EQ(once.history[0].center, (std::vector<int>{0, 2}));
  EXPECT_EQ(once.history[0].to_string(), "x3 -> x1*x3");
  const Chart twice = blow_up_chart(once, {0, 1}, 1);
  EXPECT_EQ(twice.stage(), 2);
  EXPECT_EQ(twice.history[1].to_string(), "x1 -> x2*x1");
  EXPECT_THROW(blow_up_chart(root, {0, 1}, 2), DomainError);
  EXPECT_THROW(blow_up_chart(Chart::root(VarSpace(2, {1})), {0, 1}, 0), DomainError);
}

TEST(Transform, CuspCharts) {
  VarSpace vs(2, {});
  const Binomial f = bin(vs, {2, 0}, {0, 3}, 7);
  const Binomial x2 = transform_generator(vs, f, {0, 1}, 1, TransformMode::weak(2));
  EXPECT_EQ(x2, bin(vs, {2, 0}, {0, 1}, 7));
  const Binomial x1 = transform_generator(vs, f, {0, 1}, 0, TransformMode::weak(2));
  EXPECT_EQ(x1.kind(), Kind::Hyperbolic);
  EXPECT_EQ(x1.to_string(), "(1 - 7/1*x1*x2^3)");
  EXPECT_EQ(transform_generator(vs, f, {0, 1}, 1, TransformMode::controlled(2, 2)), x2);
}

TEST(Transform, ControlledMonomial) {
  VarSpace vs(2, {});
  const Binomial g = transform_generator(vs, mono(vs, {2, 3}), {0, 1}, 0, TransformMode::controlled(4, 5));
  EXPECT_EQ(g, mono(vs, {1, 3}));
  EXPECT_THROW(transform_generator(vs, mono(vs, {1, 0}), {0, 1}, 0, TransformMode::controlled(2, 1)), InvariantError);
}

TEST(Pullback, AddsCenterMultiplicitiesOnTheExceptionalVariable) {
  const Divisor d = pullback(Divisor{{0, 2}, {1, Rational(1, 2)}, {2, 1}}, {0, 1}, 1);
  EXPECT_EQ(d.at(1), Rational(5, 2));
  EXPECT_EQ(d.at(0), Rational(2));
  EXPECT_EQ(d.at(2), Rational(1));
}

DivisorState empty_state(int n) {
  return {std::vector<Divisor>(static_cast<std::size_t>(n) + 1), std::vector<std::vector<HEntry>>(static_cast<std::size_t>(n) + 1)};
}

LevelOrders orders(int n, std::initializer_list<std::tuple<int, Rational, Rational>> per_level) {
  LevelOrders o;
  o.theta.assign(static_cast<std::size_t>(n) + 1, std::nullopt);
  o.c_next.assign(static_cast<std::size_t>(n) + 1, std::nullopt);
  for (const auto& [lvl, theta, c] : per_level) {
    o.theta[static_cast<std::size_t>(lvl)] = theta;
    o.c_next[static_cast<std::size_t>(lvl)] = c;
  }
  return o;
}

TEST(TransformDivisors, FirstBlowUpWithThetaEqualToControl) {
  const DivisorState out = transform_divisors(empty_state(2), {{0, 1}, 1, 1}, 3, orders(2, {{2, 2, 2}}));
  EXPECT_TRUE(out.D[2].empty());
  ASSERT_EQ(out.H[2].size(), 1U);
  EXPECT_EQ(out.H[2][0], (HEntry{1, 1}));
}

TEST(TransformDivisors, ConstantLevelGainsThetaMinusControl) {
  DivisorState in = empty_state(2);
  in.H[2] = {{0, 1}};
  const DivisorState out = transform_divisors(in, {{0, 1}, 1, 2}, 1, orders(2, {{2, 2, 2}, {1, 3, 2}}));
  EXPECT_EQ(out.D[1], (Divisor{{1, 1}}));
  EXPECT_EQ(out.H[2], (std::vector<HEntry>{{0, 1}}));
  EXPECT_TRUE(out.H[1].empty());
}

TEST(TransformDivisors, DropResetsLowerLevels) {
  DivisorState in = empty_state(3);
  in.D[2] = Divisor{{0, 1}};
  in.H[3] = {{2, 1}};
  in.H[2] = {{0, 1}};
  const DivisorState out = transform_divisors(in, {{0, 1}, 1, 2}, 4, orders(3, {{3, 2, 2}, {2, 1, 2}}));
  EXPECT_TRUE(out.D[2].empty());
  EXPECT_TRUE(out.D[1].empty());
  EXPECT_EQ(out.H[3], (std::vector<HEntry>{{0, 1}, {1, 2}, {2, 1}}));
  EXPECT_TRUE(out.H[2].empty());
}

// Substitutes the chart map into a brute-force expansion and divides by the exceptional power.
DensePolynomial substituted(const VarSpace& vs, const Binomial& f, const std::vector<int>& center, int j, long drop) {
  DensePolynomial out;
  const DensePolynomial poly = expand(vs, f);
  for (const auto& [e, c] : poly.terms()) {
    ExponentVector moved = e;
    long total = 0;
    for (int i : center) total += e[static_cast<std::size_t>(i)];
    moved[static_cast<std::size_t>(j)] = total - drop;
    out.add(moved, c);
  }
  return out;
}

// got == lambda * y^shift * want for a nonzero constant and a monomial in the invertible variables.
bool equal_up_to_unit(const VarSpace& vs, const DensePolynomial& got, const DensePolynomial& want) {
  if (got.terms().size() != want.terms().size() || want.empty()) return false;
  const auto& [e0, c0] = *want.terms().begin();
  for (const auto& [g0, d0] : got.terms()) {
    ExponentVector shift(e0.size());
    bool unit = true;
    for (std::size_t i = 0; i < shift.size(); ++i) {
      shift[i] = g0[i] - e0[i];
      if (shift[i] != 0 && !vs.invertible(static_cast<int>(i))) unit = false;
    }
    if (!unit) continue;
    const Coefficient ratio = d0 / c0;
    bool all = true;
    for (const auto& [e, c] : want.terms()) {
      ExponentVector moved = e;
      for (std::size_t i = 0; i < moved.size(); ++i) moved[i] += shift[i];
      const auto it = got.terms().find(moved);
      if (it == got.terms().end() || it->second != c * ratio) all = false;
    }
    if (all) return true;
  }
  return false;
}

TEST(TransformProperty, WeakTransformMatchesSubstitutionOracle) {
  Sampler s(61);
  int checked = 0;
  while (checked < 300) {
    const VarSpace vs = s.space(4, true);
    const Binomial f = s.generator(vs, s.characteristic(), 3);
    const auto xs = vs.x_indices();
    if (xs.size() < 2) continue;
    std::vector<int> center;
    for (int i : xs)
      if (s.coin(2)) center.push_back(i);
    if (center.size() < 2) continue;
    const int j = center[static_cast<std::size_t>(s.uniform(0, static_cast<int>(center.size()) - 1))];
    const Rational theta = eord_generator(f, Stratum::of(center));
    if (!is_integral(theta)) continue;
    ++checked;
    const Binomial g = transform_generator(vs, f, center, j, TransformMode::weak(theta));
    const DensePolynomial want = substituted(vs, f, center, j, theta.numerator());
    const DensePolynomial got = expand(vs, g);
    EXPECT_TRUE(equal_up_to_unit(vs, got, want)) << f.to_string() << " -> " << g.to_string();
  }
}

TEST(TransformProperty, WeakTransformNeverRaisesTopOrder) {
  Sampler s(62);
  for (int k = 0; k < 300; ++k) {
    const VarSpace vs = s.space(4, true);
    const BinomialIdeal P = s.ideal(vs, s.characteristic());
    const TopLocus top = etop(P, vs);
    if (top.theta_max == 0) continue;
    for (const auto& z : top.strata)
      for (int j : z.indices()) {
        const BinomialIdeal weak = weak_transform(vs, P, z.indices(), j);
        EXPECT_LE(etop(weak, vs).theta_max, top.theta_max);
      }
  }
}

}  // namespace
}  // namespace eres::testing
