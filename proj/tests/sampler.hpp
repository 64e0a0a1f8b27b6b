#pragma once

#include "eres/eres.hpp"

#include <algorithm>
#include <random>

namespace eres::testing {

// Seeded source of random binomial problems in the size range the sweeps use.
class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : rng_(seed) {}

  int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }
  bool coin(int one_in) { return uniform(1, one_in) == 1; }

  unsigned characteristic() {
    static constexpr unsigned kChars[] = {0, 2, 3, 5};
    return kChars[uniform(0, 3)];
  }

  VarSpace space(int max_vars, bool with_units) {
    const int n = uniform(1, max_vars);
    std::vector<int> units;
    if (with_units)
      for (int i = 1; i < n; ++i)
        if (coin(4)) units.push_back(i);
    return VarSpace(n, units);
  }

  ExponentVector exponents(const VarSpace& vs, int max_exp) {
    ExponentVector e(static_cast<std::size_t>(vs.size()));
    for (auto& v : e) v = uniform(0, max_exp);
    return e;
  }

  Coefficient nonzero(unsigned p) {
    for (;;) {
      Coefficient c = Coefficient::from_int(p, uniform(1, 6));
      if (!c.is_zero()) return c;
    }
  }

  // Monomial with probability 1/4; never the zero polynomial.
  Binomial generator(const VarSpace& vs, unsigned p, int max_exp = 4) {
    for (;;) {
      ExponentVector plus = exponents(vs, max_exp), minus = exponents(vs, max_exp);
      Coefficient minus_coeff = coin(4) ? Coefficient::zero(p) : nonzero(p);
      try {
        return normalize_binomial(vs, plus, minus, Coefficient::one(p), minus_coeff);
      } catch (const DomainError&) {
      }
    }
  }

  BinomialIdeal ideal(const VarSpace& vs, unsigned p, int max_gens = 3, int max_exp = 4) {
    BinomialIdeal J;
    const int g = uniform(1, max_gens);
    for (int k = 0; k < g; ++k) J.generators.push_back(generator(vs, p, max_exp));
    return J;
  }

  Stratum stratum(const VarSpace& vs) {
    const auto xs = vs.x_indices();
    for (;;) {
      Stratum s;
      for (int i : xs)
        if (coin(2)) s = s.with(i);
      if (!s.empty()) return s;
    }
  }

  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

}  // namespace eres::testing
