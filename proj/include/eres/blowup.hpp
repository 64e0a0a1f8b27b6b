#pragma once

#include "eres/eorder.hpp"

#include <optional>
#include <set>

namespace eres {

struct BlowUpRecord {
  std::vector<int> center;
  int chart_var = 0;
  int stage = 0;

  int exceptional_index() const { return chart_var; }
};

inline void check_center(const VarSpace& vs, const std::vector<int>& center, int j) {
  if (center.empty()) throw DomainError("empty center");
  for (int i : center) {
    if (i < 0 || i >= vs.size()) throw DomainError("center index out of range");
    if (vs.invertible(i)) throw DomainError("non-combinatorial center");
  }
  if (std::find(center.begin(), center.end(), j) == center.end()) throw DomainError("chart variable outside center");
}

inline Chart blow_up_chart(const Chart& chart, const std::vector<int>& center, int j) {
  check_center(chart.space, center, j);
  Chart child = chart;
  std::vector<int> sorted = center;
  std::sort(sorted.begin(), sorted.end());
  child.history.push_back({sorted, j, chart.stage() + 1});
  return child;
}

struct TransformMode {
  enum class Type { Total, Weak, Controlled };
  Type type = Type::Total;
  Rational theta = 0;
  Rational control = 0;

  static TransformMode total() { return {}; }
  static TransformMode weak(const Rational& theta) { return {Type::Weak, theta, 0}; }
  static TransformMode controlled(const Rational& control, const Rational& theta) {
    return {Type::Controlled, theta, control};
  }
};

inline Binomial transform_generator(const VarSpace& vs, const Binomial& f, const std::vector<int>& center, int j,
                                    const TransformMode& mode) {
  check_center(vs, center, j);
  const auto J = static_cast<std::size_t>(j);
  auto common = f.common();
  ExponentVector lhs = f.lhs(), rhs = f.rhs();
  Rational sc = 0;
  long sl = 0, sr = 0;
  for (int i : center) {
    const auto I = static_cast<std::size_t>(i);
    sc += common[I];
    sl += lhs[I];
    sr += rhs[I];
  }
  common[J] = sc;
  lhs[J] = sl;
  rhs[J] = sr;
  Binomial out = f.kind() == Kind::Monomial
                     ? Binomial::monomial(std::move(common), 1)
                     : Binomial::assemble(vs, std::move(common), {Coefficient::one(f.coeff().characteristic()), lhs},
                                          {f.coeff(), rhs}, f.weight());
  if (mode.type == TransformMode::Type::Total) return out;
  const Rational drop = (mode.type == TransformMode::Type::Weak ? mode.theta : mode.control) / out.weight();
  auto reduced = out.common();
  reduced[J] -= drop;
  if (reduced[J] < 0) throw InvariantError("illegal transform");
  return out.with_common(std::move(reduced));
}

inline BinomialIdeal transform_ideal(const VarSpace& vs, const BinomialIdeal& J, const std::vector<int>& center, int j,
                                     const TransformMode& mode) {
  BinomialIdeal out;
  for (const auto& f : J.generators) out.generators.push_back(transform_generator(vs, f, center, j, mode));
  return out;
}

// Weak transform of an ideal: the total transform divided by the order along the center.
inline BinomialIdeal weak_transform(const VarSpace& vs, const BinomialIdeal& P, const std::vector<int>& center, int j) {
  const Rational theta = eord_ideal(P, Stratum::of(center));
  return transform_ideal(vs, P, center, j, TransformMode::weak(theta));
}

inline BinomialIdeal controlled_transform(const VarSpace& vs, const BinomialIdeal& P, const std::vector<int>& center,
                                          int j, const Rational& control) {
  const Rational theta = eord_ideal(P, Stratum::of(center));
  return transform_ideal(vs, P, center, j, TransformMode::controlled(control, theta));
}

inline Divisor pullback(const Divisor& D, const std::vector<int>& center, int j) {
  Divisor out = D;
  Rational s = 0;
  for (int i : center) s += D.at(i);
  out.set(j, s);
  return out;
}

struct DivisorState {
  std::vector<Divisor> D;               // per level 1..n
  std::vector<std::vector<HEntry>> H;   // per level 1..n
};

// Level data of the parent at its maximal point; absent entries mean the level did not carry a divisor.
struct LevelOrders {
  std::vector<std::optional<Rational>> theta;   // per level 1..n
  std::vector<std::optional<Rational>> c_next;  // per level 1..n
};

// constant_from: smallest level k such that the maximal components n..k agree before and after; n+1 if none.
inline DivisorState transform_divisors(const DivisorState& in, const BlowUpRecord& rec, int constant_from,
                                       const LevelOrders& orders) {
  const int n = static_cast<int>(in.D.size()) - 1;
  DivisorState out;
  out.D.assign(static_cast<std::size_t>(n) + 1, {});
  out.H.assign(static_cast<std::size_t>(n) + 1, {});
  const int y = rec.exceptional_index();
  for (int lvl = n; lvl >= 1; --lvl) {
    const auto L = static_cast<std::size_t>(lvl);
    if (lvl >= constant_from - 1 && orders.theta[L] && orders.c_next[L]) {
      Divisor d = pullback(in.D[L], rec.center, rec.chart_var);
      d.add(y, *orders.theta[L] - *orders.c_next[L]);
      out.D[L] = d;
    }
  }
  auto strict = [&](const std::vector<HEntry>& hs) {
    std::vector<HEntry> kept;
    for (const auto& h : hs)
      if (h.index != y) kept.push_back(h);
    return kept;
  };
  std::set<int> assigned;
  for (int lvl = n; lvl >= 1; --lvl) {
    const auto L = static_cast<std::size_t>(lvl);
    std::vector<HEntry> level;
    if (lvl >= constant_from) {
      level = strict(in.H[L]);
    } else {
      std::map<int, HEntry> pool;
      pool[y] = {y, rec.stage};
      for (int k = 1; k <= n; ++k)
        for (const auto& h : strict(in.H[static_cast<std::size_t>(k)])) pool.emplace(h.index, h);
      for (const auto& [idx, h] : pool)
        if (!assigned.count(idx)) level.push_back(h);
    }
    std::sort(level.begin(), level.end());
    for (const auto& h : level) assigned.insert(h.index);
    out.H[L] = level;
  }
  return out;
}

}  // namespace eres
