#pragma once

#include "eres/eorder.hpp"

#include <set>
#include <variant>

namespace eres {

struct Factorization {
  Divisor M;
  BinomialIdeal I;
};

inline Factorization factor_monomial_part(const BinomialIdeal& J, const Divisor& D) {
  Factorization out{D, {}};
  for (const auto& f : J.generators) {
    auto common = f.common();
    for (const auto& [i, m] : D.entries()) {
      auto& slot = common[static_cast<std::size_t>(i)];
      slot -= m / f.weight();
      if (slot < 0) throw InvariantError("bookkeeping violation");
    }
    out.I.generators.push_back(f.with_common(std::move(common)));
  }
  return out;
}

inline BinomialIdeal companion(const BinomialIdeal& I, const Divisor& M, const Rational& theta,
                               const Rational& c_next) {
  if (theta <= 0) throw InvariantError("monomial case misrouted");
  if (theta >= c_next) return I;
  BinomialIdeal P = I;
  std::vector<Rational> exps(I.generators.empty() ? 0 : I.generators.front().common().size(), Rational(0));
  for (const auto& [i, m] : M.entries()) {
    if (static_cast<std::size_t>(i) >= exps.size()) exps.resize(static_cast<std::size_t>(i) + 1, Rational(0));
    exps[static_cast<std::size_t>(i)] = m;
  }
  P.generators.push_back(Binomial::monomial(std::move(exps), theta / (c_next - theta)));
  return P;
}

// Hyperbolic generators enter the descent through their monomial factor only.
inline Binomial monomialize(const Binomial& f) {
  if (f.kind() != Kind::Hyperbolic) return f;
  return Binomial::monomial(f.common(), f.weight());
}

inline BinomialIdeal monomialize(const BinomialIdeal& J) {
  BinomialIdeal out;
  for (const auto& f : J.generators) out.generators.push_back(monomialize(f));
  return out;
}

// Drops monomial generators that are multiples of another monomial generator; the E-order never sees them.
inline BinomialIdeal without_redundant_monomials(const BinomialIdeal& J) {
  BinomialIdeal sorted = canonical(J);
  auto divides = [](const Binomial& a, const Binomial& b) {
    for (std::size_t i = 0; i < a.common().size(); ++i)
      if (a.weight() * a.common()[i] > b.weight() * b.common()[i]) return false;
    return true;
  };
  BinomialIdeal out;
  for (std::size_t k = 0; k < sorted.generators.size(); ++k) {
    const Binomial& f = sorted.generators[k];
    bool redundant = false;
    if (f.kind() == Kind::Monomial)
      for (std::size_t m = 0; m < sorted.generators.size() && !redundant; ++m) {
        const Binomial& g = sorted.generators[m];
        redundant = m != k && g.kind() == Kind::Monomial && divides(g, f) && !(divides(f, g) && m > k);
      }
    if (!redundant) out.generators.push_back(f);
  }
  return out;
}

inline bool is_bold_regular(const BinomialIdeal& P, const VarSpace& vs) {
  if (P.generators.size() != 1) return false;
  const Binomial& f = P.generators.front();
  if (f.kind() == Kind::Proper) return false;
  if (f.kind() == Kind::Hyperbolic)
    for (int i = 0; i < vs.size(); ++i)
      if (!vs.invertible(i) && f.rhs()[static_cast<std::size_t>(i)] != 0) return false;
  int support = 0;
  for (const auto& v : f.common())
    if (v != 0) ++support;
  return support == 1;
}

// Coordinates whose hyperplane has maximal contact with f at the given stratum.
inline std::vector<int> contact_candidates(const Binomial& f, const Stratum& lambda) {
  std::set<int> out;
  for (int i : lambda.indices())
    if (f.common()[static_cast<std::size_t>(i)] > 0) out.insert(i);
  if (f.kind() == Kind::Proper) {
    long a = degree_on(f.lhs(), lambda), b = degree_on(f.rhs(), lambda);
    for (int i : lambda.indices()) {
      if (a > 0 && a <= b && f.lhs()[static_cast<std::size_t>(i)] > 0) out.insert(i);
      if (b > 0 && b <= a && f.rhs()[static_cast<std::size_t>(i)] > 0) out.insert(i);
    }
  }
  return {out.begin(), out.end()};
}

inline std::vector<int> contact_candidates(const BinomialIdeal& P, const Stratum& lambda) {
  const Rational top = eord_ideal(P, lambda);
  std::set<int> out;
  if (top <= 0) return {};
  for (const auto& f : P.generators)
    if (eord_generator(f, lambda) == top)
      for (int i : contact_candidates(monomialize(f), lambda)) out.insert(i);
  return {out.begin(), out.end()};
}

inline int select_max_contact(const BinomialIdeal& P, const std::set<int>& permissible, const Stratum& lambda) {
  auto candidates = contact_candidates(P, lambda);
  if (candidates.empty()) throw InvariantError("no maximal contact");
  for (int i : candidates)
    if (permissible.count(i)) return i;
  return candidates.front();
}

namespace detail {

inline std::vector<Rational> shifted(const VarSpace& vs, const std::vector<Rational>& common,
                                    const ExponentVector& extra, int drop) {
  std::vector<Rational> out = common;
  for (int i = 0; i < vs.size(); ++i)
    if (!vs.invertible(i)) out[static_cast<std::size_t>(i)] += extra[static_cast<std::size_t>(i)];
  out[static_cast<std::size_t>(drop)] = 0;
  return out;
}

}  // namespace detail

// Coefficient ideal with respect to the hyperplane x_j = 0; an empty result is the zero ideal.
inline BinomialIdeal ecoeff(const VarSpace& vs, const BinomialIdeal& P, const Rational& c, int j) {
  if (c <= 0) throw DomainError("critical value must be positive");
  BinomialIdeal out;
  const auto J = static_cast<std::size_t>(j);
  for (const auto& raw : P.generators) {
    const Binomial f = monomialize(raw);
    const Rational w = f.weight();
    if (f.kind() == Kind::Monomial) {
      Rational a = w * f.common()[J];
      if (a == 0)
        out.generators.push_back(f);
      else if (a < c)
        out.generators.push_back(Binomial::monomial(
            detail::shifted(vs, f.common(), ExponentVector(f.common().size(), 0), j), w * c / (c - a)));
      continue;
    }
    Rational a = w * (f.common()[J] + f.lhs()[J]);
    Rational b = w * (f.common()[J] + f.rhs()[J]);
    if (a == 0 && b == 0) {
      out.generators.push_back(f);
    } else if (a == b) {
      if (a < c) {
        auto common = f.common();
        common[J] = 0;
        out.generators.push_back(f.with_common(std::move(common)).with_weight(w * c / (c - a)));
      }
    } else {
      const ExponentVector& lx = f.lhs();
      const ExponentVector& rx = f.rhs();
      if (a < c) out.generators.push_back(Binomial::monomial(detail::shifted(vs, f.common(), lx, j), w * c / (c - a)));
      if (b < c) out.generators.push_back(Binomial::monomial(detail::shifted(vs, f.common(), rx, j), w * c / (c - b)));
    }
  }
  return out;
}

struct UnitIdeal {
  bool operator==(const UnitIdeal&) const = default;
};
using Junior = std::variant<UnitIdeal, BinomialIdeal>;

inline bool is_unit(const Junior& j) { return std::holds_alternative<UnitIdeal>(j); }

inline Junior junior(const VarSpace& vs, const BinomialIdeal& P, const Rational& c, int j) {
  BinomialIdeal E = ecoeff(vs, P, c, j);
  if (E.empty()) return UnitIdeal{};
  return E;
}

inline Junior junior(const VarSpace& vs, const Junior& P, const Rational& c, int j) {
  if (is_unit(P)) return UnitIdeal{};
  return junior(vs, std::get<BinomialIdeal>(P), c, j);
}

}  // namespace eres
