#pragma once

#include "eres/core.hpp"

#include <algorithm>
#include <vector>

namespace eres {

struct StratumValue {
  Stratum stratum;
  Rational value;
};

inline long degree_on(const ExponentVector& e, const Stratum& s) {
  long out = 0;
  s.for_each([&](int i) { out += e[static_cast<std::size_t>(i)]; });
  return out;
}

inline Rational degree_on(const std::vector<Rational>& e, const Stratum& s) {
  Rational out = 0;
  s.for_each([&](int i) { out += e[static_cast<std::size_t>(i)]; });
  return out;
}

inline Rational eord_generator(const Binomial& f, const Stratum& lambda) {
  Rational body = 0;
  if (f.kind() == Kind::Proper) body = std::min(degree_on(f.lhs(), lambda), degree_on(f.rhs(), lambda));
  return f.weight() * (degree_on(f.common(), lambda) + body);
}

inline Rational eord_ideal(const BinomialIdeal& J, const Stratum& lambda) {
  if (J.empty()) throw DomainError("empty ideal");
  Rational best = eord_generator(J.generators.front(), lambda);
  for (const auto& f : J.generators) best = std::min(best, eord_generator(f, lambda));
  return best;
}

// Every stratum of the chart, in canonical order.
inline std::vector<Stratum> all_strata(const VarSpace& vs) {
  std::vector<int> xs = vs.x_indices();
  std::vector<Stratum> out;
  const std::uint64_t count = 1ULL << xs.size();
  out.reserve(count);
  for (std::uint64_t m = 0; m < count; ++m) {
    std::vector<int> pick;
    for (std::size_t k = 0; k < xs.size(); ++k)
      if (m & (1ULL << k)) pick.push_back(xs[k]);
    out.push_back(Stratum::of(pick));
  }
  std::sort(out.begin(), out.end());
  return out;
}

inline std::vector<Stratum> minimal_strata(std::vector<Stratum> strata) {
  std::sort(strata.begin(), strata.end());
  std::vector<Stratum> out;
  for (const auto& s : strata) {
    bool dominated = std::any_of(out.begin(), out.end(), [&](const Stratum& m) { return m.subset_of(s); });
    if (!dominated) out.push_back(s);
  }
  return out;
}

inline std::vector<Stratum> esing(const BinomialIdeal& J, const Rational& c, const VarSpace& vs) {
  if (c <= 0) throw DomainError("control must be positive");
  std::vector<Stratum> hits;
  for (const auto& s : all_strata(vs))
    if (eord_ideal(J, s) >= c) hits.push_back(s);
  return minimal_strata(std::move(hits));
}

// Every stratum (not only the minimal ones) where the E-order reaches c.
inline std::vector<Stratum> esing_all(const BinomialIdeal& J, const Rational& c, const VarSpace& vs) {
  std::vector<Stratum> hits;
  for (const auto& s : all_strata(vs))
    if (eord_ideal(J, s) >= c) hits.push_back(s);
  return hits;
}

struct TopLocus {
  Rational theta_max;
  std::vector<Stratum> strata;
};

inline TopLocus etop(const BinomialIdeal& J, const VarSpace& vs) {
  auto strata = all_strata(vs);
  Rational best = 0;
  for (const auto& s : strata) best = std::max(best, eord_ideal(J, s));
  std::vector<Stratum> hits;
  for (const auto& s : strata)
    if (eord_ideal(J, s) == best) hits.push_back(s);
  return {best, minimal_strata(std::move(hits))};
}

inline std::vector<Stratum> equimultiple_locus(const Binomial& f, const Stratum& lambda0, const VarSpace& vs) {
  const Rational target = eord_generator(f, lambda0);
  std::vector<Stratum> out;
  for (const auto& s : all_strata(vs))
    if (eord_generator(f, s) == target) out.push_back(s);
  return out;
}

}  // namespace eres
