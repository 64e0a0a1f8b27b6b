#pragma once

#include "eres/numeric.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace eres {

using ExponentVector = std::vector<long>;

// Variables 0..n-1; the invertible ones play the role of torus coordinates.
class VarSpace {
 public:
  VarSpace() = default;
  VarSpace(int n, const std::vector<int>& invertible) : n_(n) {
    if (n < 1 || n > 62) throw DomainError("number of variables must lie in 1..62");
    for (int i : invertible) {
      if (i < 0 || i >= n) throw DomainError("invertible index out of range");
      invertible_ |= bit(i);
    }
  }

  int size() const { return n_; }
  bool invertible(int i) const { return (invertible_ & bit(i)) != 0; }
  std::uint64_t x_mask() const { return (n_ == 64 ? ~0ULL : ((1ULL << n_) - 1)) & ~invertible_; }
  std::uint64_t y_mask() const { return invertible_; }
  std::vector<int> x_indices() const {
    std::vector<int> out;
    for (int i = 0; i < n_; ++i)
      if (!invertible(i)) out.push_back(i);
    return out;
  }
  bool operator==(const VarSpace&) const = default;

  static std::uint64_t bit(int i) { return 1ULL << i; }

 private:
  int n_ = 0;
  std::uint64_t invertible_ = 0;
};

// Set of non-invertible indices; stands for the stratum where exactly those coordinates vanish.
class Stratum {
 public:
  Stratum() = default;
  explicit Stratum(std::uint64_t mask) : mask_(mask) {}
  Stratum(std::initializer_list<int> idx) {
    for (int i : idx) mask_ |= VarSpace::bit(i);
  }
  static Stratum of(const std::vector<int>& idx) {
    Stratum s;
    for (int i : idx) s.mask_ |= VarSpace::bit(i);
    return s;
  }

  std::uint64_t mask() const { return mask_; }
  bool contains(int i) const { return (mask_ & VarSpace::bit(i)) != 0; }
  bool empty() const { return mask_ == 0; }
  int size() const { return std::popcount(mask_); }
  bool subset_of(const Stratum& o) const { return (mask_ & ~o.mask_) == 0; }
  Stratum with(int i) const { return Stratum(mask_ | VarSpace::bit(i)); }
  Stratum without(int i) const { return Stratum(mask_ & ~VarSpace::bit(i)); }
  std::vector<int> indices() const {
    std::vector<int> out;
    for_each([&](int i) { out.push_back(i); });
    return out;
  }
  template <class Fn>
  void for_each(Fn&& fn) const {
    for (std::uint64_t m = mask_; m; m &= m - 1) fn(std::countr_zero(m));
  }

  bool operator==(const Stratum&) const = default;
  // Canonical listing order: smaller strata first, then lexicographic on indices.
  bool operator<(const Stratum& o) const {
    if (size() != o.size()) return size() < o.size();
    const std::uint64_t diff = mask_ ^ o.mask_;
    return diff != 0 && (mask_ & diff & (~diff + 1)) != 0;
  }

  std::string to_string() const {
    std::string out = "{";
    bool first = true;
    for (int i : indices()) {
      if (!first) out += ",";
      out += std::to_string(i + 1);
      first = false;
    }
    return out + "}";
  }

 private:
  std::uint64_t mask_ = 0;
};

// Normal-crossing divisor: variable index -> multiplicity. Zero entries are never stored.
class Divisor {
 public:
  Divisor() = default;
  Divisor(std::initializer_list<std::pair<const int, Rational>> init) {
    for (const auto& [i, m] : init) set(i, m);
  }

  Rational at(int i) const {
    auto it = mult_.find(i);
    return it == mult_.end() ? Rational(0) : it->second;
  }
  void set(int i, const Rational& m) {
    if (m < 0) throw InvariantError("negative divisor multiplicity");
    if (m == 0)
      mult_.erase(i);
    else
      mult_[i] = m;
  }
  void add(int i, const Rational& m) { set(i, at(i) + m); }
  bool empty() const { return mult_.empty(); }
  const std::map<int, Rational>& entries() const { return mult_; }
  Rational degree(const Stratum& s) const {
    Rational out = 0;
    for (const auto& [i, m] : mult_)
      if (s.contains(i)) out += m;
    return out;
  }
  bool operator==(const Divisor&) const = default;

  std::string to_string() const {
    std::string out;
    for (const auto& [i, m] : mult_) {
      if (!out.empty()) out += "*";
      out += "x" + std::to_string(i + 1);
      if (m != 1) out += "^(" + eres::to_string(m) + ")";
    }
    return out.empty() ? "1" : out;
  }

 private:
  std::map<int, Rational> mult_;
};

enum class Kind { Proper, Monomial, Hyperbolic };

inline const char* kind_name(Kind k) {
  switch (k) {
    case Kind::Proper: return "proper";
    case Kind::Monomial: return "monomial";
    case Kind::Hyperbolic: return "hyperbolic";
  }
  return "?";
}

// One generator in normal form, read as (x^common * (x^lhs - coeff * x^rhs))^weight.
//   Proper:     lhs = alpha on x plus gamma on y, rhs = beta, 0 < |alpha| <= |beta|
//   Hyperbolic: lhs = 0, rhs = delta (any y entries, non-negative x entries), coeff = mu
//   Monomial:   lhs = rhs = 0, coeff = 0, weight folded into common
class Binomial {
 public:
  struct Term {
    Coefficient coeff;
    ExponentVector exponent;
  };

  Kind kind() const { return kind_; }
  const std::vector<Rational>& common() const { return common_; }
  const ExponentVector& lhs() const { return lhs_; }
  const ExponentVector& rhs() const { return rhs_; }
  const Coefficient& coeff() const { return coeff_; }
  const Rational& weight() const { return weight_; }
  int size() const { return static_cast<int>(common_.size()); }

  // Assembles x^common * (t1 - t2) raised to weight and brings it to normal form.
  static Binomial assemble(const VarSpace& vs, std::vector<Rational> common, Term t1, Term t2,
                           Rational weight);

  static Binomial monomial(std::vector<Rational> common, const Rational& weight = 1) {
    Binomial b;
    b.kind_ = Kind::Monomial;
    for (auto& v : common) v *= weight;
    b.common_ = std::move(common);
    b.lhs_.assign(b.common_.size(), 0);
    b.rhs_.assign(b.common_.size(), 0);
    b.weight_ = 1;
    return b;
  }

  Binomial with_common(std::vector<Rational> common) const {
    Binomial b = *this;
    b.common_ = std::move(common);
    return b;
  }
  Binomial with_weight(const Rational& w) const {
    if (kind_ == Kind::Monomial) return monomial(common_, w);
    Binomial b = *this;
    b.weight_ = w;
    return b;
  }
  Binomial with_coeff(const Coefficient& c) const {
    Binomial b = *this;
    b.coeff_ = c;
    return b;
  }

  bool operator==(const Binomial&) const = default;

  // Total order used for canonical generator sets.
  bool operator<(const Binomial& o) const {
    if (kind_ != o.kind_) return kind_ < o.kind_;
    if (common_ != o.common_) return common_ < o.common_;
    if (lhs_ != o.lhs_) return lhs_ < o.lhs_;
    if (rhs_ != o.rhs_) return rhs_ < o.rhs_;
    if (!(coeff_ == o.coeff_)) return coeff_ < o.coeff_;
    return weight_ < o.weight_;
  }

  std::string to_string() const;

 private:
  Kind kind_ = Kind::Monomial;
  std::vector<Rational> common_;
  ExponentVector lhs_;
  ExponentVector rhs_;
  Coefficient coeff_;
  Rational weight_ = 1;
};

struct BinomialIdeal {
  std::vector<Binomial> generators;

  bool empty() const { return generators.empty(); }
  bool operator==(const BinomialIdeal&) const = default;
};

// Sorted, duplicate-free copy of the generators.
inline BinomialIdeal canonical(BinomialIdeal ideal) {
  auto& g = ideal.generators;
  std::sort(g.begin(), g.end());
  g.erase(std::unique(g.begin(), g.end()), g.end());
  return ideal;
}

inline bool lex_less(const ExponentVector& a, const ExponentVector& b) { return a < b; }

inline Binomial Binomial::assemble(const VarSpace& vs, std::vector<Rational> common, Term t1, Term t2,
                                   Rational weight) {
  const int n = vs.size();
  if (static_cast<int>(common.size()) != n || static_cast<int>(t1.exponent.size()) != n ||
      static_cast<int>(t2.exponent.size()) != n)
    throw DomainError("exponent vector length mismatch");
  if (weight <= 0) throw DomainError("weight must be positive");
  for (int i = 0; i < n; ++i) {
    if (vs.invertible(i)) {
      if (common[i] != 0) throw DomainError("common factor on an invertible variable");
    } else if (t1.exponent[i] < 0 || t2.exponent[i] < 0 || common[i] < 0) {
      throw DomainError("negative exponent on a non-invertible variable");
    }
  }
  auto x_part = [&](const ExponentVector& e) {
    ExponentVector out(n, 0);
    for (int i = 0; i < n; ++i)
      if (!vs.invertible(i)) out[i] = e[i];
    return out;
  };
  auto y_part = [&](const ExponentVector& e) {
    ExponentVector out(n, 0);
    for (int i = 0; i < n; ++i)
      if (vs.invertible(i)) out[i] = e[i];
    return out;
  };
  auto absorb = [&](const ExponentVector& e) {
    for (int i = 0; i < n; ++i)
      if (!vs.invertible(i)) common[i] += e[i];
  };

  if (t1.coeff.is_zero() && t2.coeff.is_zero()) throw DomainError("zero generator");
  if (t1.coeff.is_zero() || t2.coeff.is_zero()) {
    absorb(t1.coeff.is_zero() ? t2.exponent : t1.exponent);
    return monomial(std::move(common), weight);
  }
  if (t1.exponent == t2.exponent) {
    if (t1.coeff == t2.coeff) throw DomainError("zero generator");
    absorb(t1.exponent);
    return monomial(std::move(common), weight);
  }

  ExponentVector x1 = x_part(t1.exponent), x2 = x_part(t2.exponent);
  ExponentVector y1 = y_part(t1.exponent), y2 = y_part(t2.exponent);
  for (int i = 0; i < n; ++i) {
    long shared = std::min(x1[i], x2[i]);
    common[i] += shared;
    x1[i] -= shared;
    x2[i] -= shared;
  }
  long d1 = std::accumulate(x1.begin(), x1.end(), 0L);
  long d2 = std::accumulate(x2.begin(), x2.end(), 0L);
  bool first_leads = d1 < d2 || (d1 == d2 && lex_less(x1, x2));
  if (d1 == d2 && x1 == x2) first_leads = true;
  const ExponentVector& xa = first_leads ? x1 : x2;
  const ExponentVector& xb = first_leads ? x2 : x1;
  const ExponentVector& ya = first_leads ? y1 : y2;
  const ExponentVector& yb = first_leads ? y2 : y1;
  const Coefficient& ca = first_leads ? t1.coeff : t2.coeff;
  const Coefficient& cb = first_leads ? t2.coeff : t1.coeff;

  Binomial b;
  b.common_ = std::move(common);
  b.weight_ = weight;
  b.coeff_ = cb / ca;
  b.lhs_.assign(n, 0);
  b.rhs_.assign(n, 0);
  long da = first_leads ? d1 : d2;
  if (da == 0) {
    b.kind_ = Kind::Hyperbolic;
    for (int i = 0; i < n; ++i) b.rhs_[i] = xb[i] + yb[i] - ya[i];
    return b;
  }
  b.kind_ = Kind::Proper;
  for (int i = 0; i < n; ++i) {
    b.lhs_[i] = xa[i] + ya[i] - yb[i];
    b.rhs_[i] = xb[i];
  }
  return b;
}

// Normal form of plus_coeff * x^plus - minus_coeff * x^minus.
inline Binomial normalize_binomial(const VarSpace& vs, const ExponentVector& plus,
                                   const ExponentVector& minus, const Coefficient& plus_coeff,
                                   const Coefficient& minus_coeff) {
  std::vector<Rational> common(static_cast<std::size_t>(vs.size()), Rational(0));
  return Binomial::assemble(vs, std::move(common), {plus_coeff, plus}, {minus_coeff, minus}, 1);
}

// Re-derives the normal form from the stored pieces; a fixed point for normalized input.
inline Binomial renormalize(const VarSpace& vs, const Binomial& f) {
  unsigned p = f.coeff().characteristic();
  if (f.kind() == Kind::Monomial) return Binomial::monomial(f.common(), f.weight());
  return Binomial::assemble(vs, f.common(), {Coefficient::one(p), f.lhs()}, {f.coeff(), f.rhs()},
                            f.weight());
}

inline std::string Binomial::to_string() const {
  auto mono = [](const ExponentVector& e) {
    std::string out;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (!out.empty()) out += "*";
      out += "x" + std::to_string(i + 1);
      if (e[i] != 1) out += "^" + std::to_string(e[i]);
    }
    return out.empty() ? std::string("1") : out;
  };
  std::string head;
  for (std::size_t i = 0; i < common_.size(); ++i) {
    if (common_[i] == 0) continue;
    if (!head.empty()) head += "*";
    head += "x" + std::to_string(i + 1);
    if (common_[i] != 1) head += "^(" + eres::to_string(common_[i]) + ")";
  }
  std::string body;
  if (kind_ == Kind::Monomial) return head.empty() ? "1" : head;
  body = "(" + mono(lhs_) + " - " + coeff_.to_string() + "*" + mono(rhs_) + ")";
  std::string out = head.empty() ? body : head + "*" + body;
  if (weight_ != 1) out = "[" + out + "]^(" + eres::to_string(weight_) + ")";
  return out;
}

struct HEntry {
  int index = 0;
  int birth_stage = 0;
  bool operator==(const HEntry&) const = default;
  bool operator<(const HEntry& o) const { return index < o.index; }
};

struct Substitution {
  std::vector<int> center;
  int chart_var = 0;
  int stage = 0;
  bool operator==(const Substitution&) const = default;

  std::string to_string() const {
    std::string out;
    for (int i : center) {
      if (i == chart_var) continue;
      if (!out.empty()) out += ", ";
      out += "x" + std::to_string(i + 1) + " -> x" + std::to_string(chart_var + 1) + "*x" +
             std::to_string(i + 1);
    }
    return out.empty() ? "identity" : out;
  }
};

// One affine chart. Levels of D and H are indexed by dimension 1..n (slot 0 unused).
struct Chart {
  VarSpace space;
  std::vector<std::vector<HEntry>> H;
  std::vector<Divisor> D;
  std::vector<Substitution> history;

  static Chart root(const VarSpace& vs) {
    Chart c;
    c.space = vs;
    c.H.assign(static_cast<std::size_t>(vs.size()) + 1, {});
    c.D.assign(static_cast<std::size_t>(vs.size()) + 1, {});
    return c;
  }
  int dim() const { return space.size(); }
  int stage() const { return static_cast<int>(history.size()); }

  void validate(const Stratum& s) const {
    if ((s.mask() & ~space.x_mask()) != 0) throw DomainError("stratum contains an invertible index");
  }
};

}  // namespace eres
