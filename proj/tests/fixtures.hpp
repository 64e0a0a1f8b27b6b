#pragma once

#include "eres/eres.hpp"

namespace eres::testing {

// plus - b * minus over characteristic p; b = 0 gives the monomial x^plus.
inline Binomial bin(const VarSpace& vs, const ExponentVector& plus, const ExponentVector& minus, long b = 1,
                    unsigned p = 0) {
  return normalize_binomial(vs, plus, minus, Coefficient::one(p), Coefficient::from_int(p, b));
}

inline Binomial mono(const VarSpace& vs, const ExponentVector& e, unsigned p = 0) {
  return bin(vs, e, ExponentVector(e.size(), 0), 0, p);
}

inline std::vector<Rational> rationals(std::initializer_list<Rational> v) { return v; }

inline std::vector<std::string> texts(const BinomialIdeal& J) {
  std::vector<std::string> out;
  for (const auto& f : canonical(J).generators) out.push_back(f.to_string());
  return out;
}

}  // namespace eres::testing
