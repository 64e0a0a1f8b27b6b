#pragma once

#include "eres/core.hpp"

#include <compare>
#include <vector>

namespace eres {

struct GammaValue {
  long neg_size = 0;       // minus the size of the smallest subset reaching the control
  Rational ratio = 0;      // largest subset sum over the control among those subsets
  std::vector<int> tuple;  // winning subset, indices in decreasing order

  bool operator==(const GammaValue&) const = default;
  std::strong_ordering operator<=>(const GammaValue& o) const {
    if (neg_size != o.neg_size) return neg_size <=> o.neg_size;
    if (ratio != o.ratio) return ratio < o.ratio ? std::strong_ordering::less : std::strong_ordering::greater;
    return tuple <=> o.tuple;
  }
};

struct GammaResult {
  GammaValue value;
  std::vector<int> center;
};

inline GammaResult gamma_invariant(const Divisor& M, const Rational& c, const Stratum& lambda) {
  std::vector<int> support;
  for (const auto& [i, m] : M.entries())
    if (lambda.contains(i)) support.push_back(i);
  if (M.degree(lambda) < c || c <= 0) throw InvariantError("not E-singular");

  const std::size_t k = support.size();
  for (std::size_t p = 1; p <= k; ++p) {
    bool found = false;
    GammaValue best;
    for (std::uint64_t mask = 0; mask < (1ULL << k); ++mask) {
      if (static_cast<std::size_t>(std::popcount(mask)) != p) continue;
      Rational sum = 0;
      std::vector<int> pick;
      for (std::size_t b = 0; b < k; ++b)
        if (mask & (1ULL << b)) {
          sum += M.at(support[b]);
          pick.push_back(support[b]);
        }
      if (sum < c) continue;
      std::sort(pick.rbegin(), pick.rend());
      GammaValue cand{-static_cast<long>(p), sum / c, pick};
      if (!found || best < cand) best = cand;
      found = true;
    }
    if (found) {
      std::vector<int> center(best.tuple.rbegin(), best.tuple.rend());
      return {best, center};
    }
  }
  throw InvariantError("not E-singular");
}

inline std::string to_string(const GammaValue& g) {
  std::string t = "(";
  for (std::size_t i = 0; i < g.tuple.size(); ++i) t += (i ? "," : "") + std::to_string(g.tuple[i] + 1);
  t += ")";
  return "(" + std::to_string(g.neg_size) + ", " + eres::to_string(g.ratio) + ", " + t + ")";
}

}  // namespace eres
