#pragma once

#include "eres/core.hpp"

#include <map>

namespace eres {

// Brute-force expansions used to cross-check the exponent arithmetic.
class DensePolynomial {
 public:
  void add(const ExponentVector& e, const Coefficient& c) {
    auto it = terms_.find(e);
    if (it == terms_.end()) {
      if (!c.is_zero()) terms_.emplace(e, c);
      return;
    }
    it->second = it->second + c;
    if (it->second.is_zero()) terms_.erase(it);
  }
  const std::map<ExponentVector, Coefficient>& terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }

 private:
  std::map<ExponentVector, Coefficient> terms_;
};

namespace oracle_detail {

inline ExponentVector integral_common(const Binomial& f, long bound) {
  ExponentVector out;
  for (const auto& v : f.common()) {
    if (!is_integral(v) || v > bound) throw DomainError("oracle out of range");
    out.push_back(static_cast<long>(v.numerator()));
  }
  return out;
}

// Two raw terms with y exponents kept symbolic: x^common * (x^lhs - coeff * x^rhs).
inline std::vector<std::pair<ExponentVector, Coefficient>> raw_terms(const Binomial& f, long bound) {
  const ExponentVector base = integral_common(f, bound);
  const unsigned p = f.coeff().characteristic();
  std::vector<std::pair<ExponentVector, Coefficient>> out;
  if (f.kind() == Kind::Monomial) {
    out.emplace_back(base, Coefficient::one(p));
    return out;
  }
  ExponentVector a = base, b = base;
  for (std::size_t i = 0; i < a.size(); ++i) {
    a[i] += f.lhs()[i];
    b[i] += f.rhs()[i];
    if (std::abs(a[i]) > bound || std::abs(b[i]) > bound) throw DomainError("oracle out of range");
  }
  out.emplace_back(a, Coefficient::one(p));
  out.emplace_back(b, -f.coeff());
  return out;
}

}  // namespace oracle_detail

// Term-by-term expansion; invertible variables stay symbolic with exponents of either sign.
inline DensePolynomial expand(const VarSpace& vs, const Binomial& f, long bound = 64) {
  if (f.size() != vs.size()) throw DomainError("exponent vector length mismatch");
  DensePolynomial out;
  for (const auto& [e, c] : oracle_detail::raw_terms(f, bound)) out.add(e, c);
  return out;
}

inline Rational ord_at_stratum_oracle(const VarSpace& vs, const Binomial& f, const Stratum& lambda, long bound = 64) {
  const DensePolynomial poly = expand(vs, f, bound);
  std::optional<long> best;
  for (const auto& [e, c] : poly.terms()) {
    long d = 0;
    for (int i : lambda.indices()) d += e[static_cast<std::size_t>(i)];
    best = best ? std::min(*best, d) : d;
  }
  return f.weight() * Rational(*best);
}

inline bool eord_membership_oracle(const VarSpace& vs, const BinomialIdeal& J, const Stratum& lambda, long m,
                                   long bound = 64) {
  for (const auto& f : J.generators) {
    const DensePolynomial poly = expand(vs, f, bound);
    for (const auto& [e, c] : poly.terms()) {
      long d = 0;
      for (int i : lambda.indices()) d += e[static_cast<std::size_t>(i)];
      if (f.weight() * d < m) return false;
    }
  }
  return true;
}

struct TaylorTerm {
  long power = 0;
  Binomial coefficient;
};

// Taylor coefficients of f in x_j, highest power first.
inline std::vector<TaylorTerm> taylor_coeff_oracle(const VarSpace& vs, const Binomial& f, int j, long bound = 64) {
  const auto raw = oracle_detail::raw_terms(f, bound);
  const auto J = static_cast<std::size_t>(j);
  const unsigned p = f.coeff().characteristic();
  std::map<long, std::vector<std::pair<ExponentVector, Coefficient>>> groups;
  for (auto [e, c] : raw) {
    long k = e[J];
    e[J] = 0;
    groups[k].emplace_back(e, c);
  }
  std::vector<TaylorTerm> out;
  const std::vector<Rational> zero(static_cast<std::size_t>(vs.size()), Rational(0));
  const ExponentVector none(static_cast<std::size_t>(vs.size()), 0);
  for (auto it = groups.rbegin(); it != groups.rend(); ++it) {
    const auto& terms = it->second;
    Binomial coeff = terms.size() == 1
                         ? Binomial::assemble(vs, zero, {terms[0].second, terms[0].first}, {Coefficient::zero(p), none},
                                              f.weight())
                         : Binomial::assemble(vs, zero, {terms[0].second, terms[0].first},
                                              {-terms[1].second, terms[1].first}, f.weight());
    out.push_back({it->first, coeff});
  }
  return out;
}

}  // namespace eres
