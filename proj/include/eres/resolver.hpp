#pragma once

#include "eres/blowup.hpp"
#include "eres/gamma.hpp"
#include "eres/mobile.hpp"

#include <chrono>
#include <compare>
#include <deque>
#include <optional>
#include <set>

namespace eres {

class TComponent {
 public:
  enum class Tag { Gamma, Rat, Inf };

  static TComponent inf() { return TComponent(Tag::Inf, 0, {}); }
  static TComponent rat(const Rational& q) {
    if (q <= 0) throw InvariantError("rational component must be positive");
    return TComponent(Tag::Rat, q, {});
  }
  static TComponent gamma(const GammaValue& g) { return TComponent(Tag::Gamma, 0, g); }

  Tag tag() const { return tag_; }
  const Rational& value() const { return q_; }
  const GammaValue& gamma_value() const { return g_; }

  bool operator==(const TComponent&) const = default;
  std::strong_ordering operator<=>(const TComponent& o) const {
    if (tag_ != o.tag_) return tag_ <=> o.tag_;
    if (tag_ == Tag::Rat) {
      if (q_ == o.q_) return std::strong_ordering::equal;
      return q_ < o.q_ ? std::strong_ordering::less : std::strong_ordering::greater;
    }
    if (tag_ == Tag::Gamma) return g_ <=> o.g_;
    return std::strong_ordering::equal;
  }

  std::string to_string() const {
    switch (tag_) {
      case Tag::Inf: return "INF";
      case Tag::Rat: return "RAT " + eres::to_string(q_);
      case Tag::Gamma: return "GAMMA " + eres::to_string(g_);
    }
    return "?";
  }

 private:
  TComponent(Tag t, Rational q, GammaValue g) : tag_(t), q_(std::move(q)), g_(std::move(g)) {}
  Tag tag_;
  Rational q_;
  GammaValue g_;
};

struct TValue {
  std::vector<TComponent> components;

  bool operator==(const TValue&) const = default;
  std::strong_ordering operator<=>(const TValue& o) const {
    return std::lexicographical_compare_three_way(components.begin(), components.end(), o.components.begin(),
                                                  o.components.end());
  }
  // Component of dimension level (n..1).
  const TComponent& at_level(int level) const {
    return components[components.size() - static_cast<std::size_t>(level)];
  }
  std::string to_string() const {
    std::string out = "(";
    for (std::size_t i = 0; i < components.size(); ++i) out += (i ? ", " : "") + components[i].to_string();
    return out + ")";
  }
};

// Per-dimension snapshot of the descent at one stratum.
struct DimensionState {
  int level = 0;
  BinomialIdeal J;
  Divisor M;
  BinomialIdeal I;
  BinomialIdeal P;
  Rational c_next;
  Rational theta;
  std::optional<int> contact_var;
  Junior junior = UnitIdeal{};
  bool inherited = false;
  TComponent component = TComponent::inf();
};

// Level data handed from a parent's maximal point to a child chart.
struct Inheritance {
  std::vector<std::optional<Divisor>> D;  // per level 1..n
  std::vector<std::optional<int>> contact;
  std::optional<TValue> reference;
};

struct BBOE {
  Chart chart;
  BinomialIdeal J;
  Rational c = 1;
  Inheritance inherit;
  std::vector<int> k0;  // per level 1..n

  int dim() const { return chart.dim(); }
  int stage() const { return chart.stage(); }

  // The monomial factor common to all generators seeds the top-dimensional divisor unless disabled.
  static BBOE root(const VarSpace& vs, BinomialIdeal J, const Rational& c, bool factor_common_monomial = true) {
    if (c < 1) throw DomainError("control must be ≥ 1");
    if (J.empty()) throw DomainError("empty ideal");
    BBOE b;
    b.chart = Chart::root(vs);
    const int n = vs.size();
    b.inherit.D.assign(static_cast<std::size_t>(n) + 1, std::nullopt);
    b.inherit.contact.assign(static_cast<std::size_t>(n) + 1, std::nullopt);
    b.k0.assign(static_cast<std::size_t>(n) + 1, 0);
    Divisor top;
    if (factor_common_monomial) {
      for (int i : vs.x_indices()) {
        Rational m = -1;
        for (const auto& f : J.generators) {
          Rational v = f.weight() * f.common()[static_cast<std::size_t>(i)];
          m = (m < 0) ? v : std::min(m, v);
        }
        if (m > 0) top.set(i, m);
      }
    }
    b.inherit.D[static_cast<std::size_t>(n)] = top;
    b.chart.D[static_cast<std::size_t>(n)] = top;
    b.J = std::move(J);
    b.c = c;
    return b;
  }
};

struct Descent {
  Stratum stratum;
  TValue t;
  std::vector<DimensionState> levels;  // from level n downwards
  std::vector<int> center;
};

inline Descent t_value(const BBOE& b, const Stratum& lambda) {
  const VarSpace& vs = b.chart.space;
  b.chart.validate(lambda);
  if (eord_ideal(b.J, lambda) < b.c) throw DomainError("not E-singular here");
  const int n = b.dim();
  Descent out;
  out.stratum = lambda;
  BinomialIdeal current = b.J;
  Rational c_next = b.c;
  std::set<int> contacts;
  bool prefix_ok = true;
  bool closed = false;
  for (int level = n; level >= 1 && !closed; --level) {
    const auto L = static_cast<std::size_t>(level);
    DimensionState st;
    st.level = level;
    st.J = current;
    st.c_next = c_next;
    st.inherited = prefix_ok && b.inherit.D.size() > L && b.inherit.D[L].has_value();
    const Divisor D = st.inherited ? *b.inherit.D[L] : Divisor{};
    Factorization fac = factor_monomial_part(current, D);
    st.M = fac.M;
    st.I = fac.I;
    st.theta = eord_ideal(fac.I, lambda);
    if (st.theta == 0) {
      GammaResult g = gamma_invariant(fac.M, c_next, lambda);
      st.component = TComponent::gamma(g.value);
      for (int i : g.center) contacts.insert(i);
      out.levels.push_back(std::move(st));
      closed = true;
      break;
    }
    st.component = TComponent::rat(st.theta / c_next);
    st.P = companion(fac.I, fac.M, st.theta, c_next);
    const Rational c_here = eord_ideal(st.P, lambda);
    std::set<int> permissible;
    if (st.inherited && b.inherit.contact.size() > L && b.inherit.contact[L]) permissible.insert(*b.inherit.contact[L]);
    const int j = select_max_contact(st.P, permissible, lambda);
    st.contact_var = j;
    contacts.insert(j);
    st.junior = junior(vs, st.P, c_here, j);
    if (b.inherit.reference) prefix_ok = prefix_ok && b.inherit.reference->at_level(level) == st.component;
    else prefix_ok = false;
    const bool unit = is_unit(st.junior);
    if (!unit) current = std::get<BinomialIdeal>(st.junior);
    c_next = c_here;
    out.levels.push_back(std::move(st));
    if (unit) closed = true;
  }
  for (const auto& st : out.levels) out.t.components.push_back(st.component);
  while (static_cast<int>(out.t.components.size()) < n) out.t.components.push_back(TComponent::inf());
  out.center.assign(contacts.begin(), contacts.end());
  return out;
}

struct EMax {
  TValue t;
  std::vector<int> center;
  Descent descent;
  std::vector<Stratum> minimal_strata;
};

inline EMax emax_center(const BBOE& b) {
  const auto strata = esing_all(b.J, b.c, b.chart.space);
  if (strata.empty()) throw DomainError("already resolved");
  std::optional<Descent> best;
  for (const auto& s : strata) {
    Descent d = t_value(b, s);
    if (!best || best->t < d.t || (best->t == d.t && d.stratum.subset_of(best->stratum) && !(d.stratum == best->stratum)))
      best = std::move(d);
  }
  EMax out;
  out.t = best->t;
  out.center = best->center;
  out.descent = std::move(*best);
  out.minimal_strata = minimal_strata(strata);
  return out;
}

enum class CheckLevel { None, Fast, Full };
enum class Traversal { Dfs, Bfs };
enum class Status { Resolved, AssertionFailed, BudgetExhausted };

inline const char* status_name(Status s) {
  switch (s) {
    case Status::Resolved: return "resolved";
    case Status::AssertionFailed: return "assertion_failed";
    case Status::BudgetExhausted: return "budget_exhausted";
  }
  return "?";
}

struct ResolveOptions {
  long max_steps = 10000;
  CheckLevel check = CheckLevel::Fast;
  Traversal traversal = Traversal::Dfs;
};

struct TreeNode {
  int id = 0;
  int parent = -1;
  int depth = 0;
  std::string label = "root";
  std::optional<BlowUpRecord> edge;
  BBOE state;
  std::vector<Stratum> minimal_strata;
  std::optional<TValue> max_t;
  std::vector<int> center;
  std::optional<Descent> descent;
  std::vector<int> children;
};

struct ResolutionTree {
  std::vector<TreeNode> nodes;
  long blowups = 0;
  Status status = Status::Resolved;
  std::string diagnostic;

  int depth() const {
    int d = 0;
    for (const auto& n : nodes) d = std::max(d, n.depth);
    return d;
  }
  std::vector<int> leaves() const {
    std::vector<int> out;
    for (const auto& n : nodes)
      if (n.children.empty()) out.push_back(n.id);
    return out;
  }
};

namespace detail {

inline BinomialIdeal comparable(const BinomialIdeal& J) { return without_redundant_monomials(monomialize(J)); }

inline Inheritance inherit_from(const Descent& d, const std::vector<int>& center, int j, int n) {
  Inheritance h;
  h.D.assign(static_cast<std::size_t>(n) + 1, std::nullopt);
  h.contact.assign(static_cast<std::size_t>(n) + 1, std::nullopt);
  h.reference = d.t;
  const Stratum cs = Stratum::of(center);
  for (const auto& st : d.levels) {
    const auto L = static_cast<std::size_t>(st.level);
    Rational theta = st.component.tag() == TComponent::Tag::Gamma ? Rational(0) : eord_ideal(st.I, cs);
    Divisor next = pullback(st.M, center, j);
    Rational shifted = next.at(j) + theta - st.c_next;
    if (shifted < 0) throw InvariantError("center outside the singular locus of level " + std::to_string(st.level));
    next.set(j, shifted);
    h.D[L] = next;
    h.contact[L] = st.contact_var;
  }
  return h;
}

inline LevelOrders orders_from(const Descent& d, const std::vector<int>& center, int n) {
  LevelOrders o;
  o.theta.assign(static_cast<std::size_t>(n) + 1, std::nullopt);
  o.c_next.assign(static_cast<std::size_t>(n) + 1, std::nullopt);
  const Stratum cs = Stratum::of(center);
  for (const auto& st : d.levels) {
    const auto L = static_cast<std::size_t>(st.level);
    o.theta[L] = st.component.tag() == TComponent::Tag::Gamma ? Rational(0) : eord_ideal(st.I, cs);
    o.c_next[L] = st.c_next;
  }
  return o;
}

inline DivisorState used_divisors(const Descent& d, const Chart& chart) {
  DivisorState s;
  const int n = chart.dim();
  s.D.assign(static_cast<std::size_t>(n) + 1, {});
  s.H = chart.H;
  for (const auto& st : d.levels) s.D[static_cast<std::size_t>(st.level)] = st.M;
  return s;
}

}  // namespace detail

// Drives the blow-up tree until every leaf has empty E-singular locus.
inline ResolutionTree resolve(const BBOE& root, const ResolveOptions& opt = {}) {
  if (opt.max_steps < 1) throw DomainError("max_steps must be ≥ 1");
  ResolutionTree tree;
  const int n = root.dim();
  const VarSpace& vs = root.chart.space;
  TreeNode first;
  first.state = root;
  tree.nodes.push_back(std::move(first));
  std::deque<int> work{0};
  long steps = 0;

  auto fail = [&](const std::string& why) {
    tree.status = Status::AssertionFailed;
    tree.diagnostic = why;
  };

  while (!work.empty() && tree.status == Status::Resolved) {
    int id;
    if (opt.traversal == Traversal::Dfs) {
      id = work.back();
      work.pop_back();
    } else {
      id = work.front();
      work.pop_front();
    }
    try {
      TreeNode& node = tree.nodes[static_cast<std::size_t>(id)];
      node.minimal_strata = esing(node.state.J, node.state.c, vs);
      std::optional<EMax> em;
      if (!node.minimal_strata.empty()) em = emax_center(node.state);

      if (node.parent >= 0) {
        const TreeNode& par = tree.nodes[static_cast<std::size_t>(node.parent)];
        const BlowUpRecord& rec = *node.edge;
        int agree = 0;
        if (em)
          while (agree < n && em->t.components[static_cast<std::size_t>(agree)] ==
                                  par.max_t->components[static_cast<std::size_t>(agree)])
            ++agree;
        const int constant_from = n - agree + 1;
        DivisorState ds = transform_divisors(detail::used_divisors(*par.descent, par.state.chart), rec, constant_from,
                                             detail::orders_from(*par.descent, par.center, n));
        node.state.chart.D = ds.D;
        node.state.chart.H = ds.H;
        for (int lvl = 1; lvl <= n; ++lvl)
          node.state.k0[static_cast<std::size_t>(lvl)] =
              lvl >= constant_from ? par.state.k0[static_cast<std::size_t>(lvl)] : node.state.stage();
        if (opt.check != CheckLevel::None && em && !(em->t < *par.max_t))
          throw InvariantError("no strict descent on edge " + std::to_string(par.id) + "->" + std::to_string(id) + ": " +
                               par.max_t->to_string() + " then " + em->t.to_string());
        if (opt.check == CheckLevel::Full && em) {
          for (const auto& pst : par.descent->levels) {
            if (pst.level < constant_from || is_unit(pst.junior)) continue;
            const DimensionState* cst = nullptr;
            for (const auto& s : em->descent.levels)
              if (s.level == pst.level) cst = &s;
            if (!cst || is_unit(cst->junior)) throw InvariantError("junior vanished on a constant edge");
            BinomialIdeal expect = controlled_transform(vs, std::get<BinomialIdeal>(pst.junior), rec.center,
                                                        rec.chart_var, eord_ideal(pst.P, par.descent->stratum));
            if (!(detail::comparable(expect) == detail::comparable(std::get<BinomialIdeal>(cst->junior))))
              throw InvariantError("junior commutation fails at level " + std::to_string(pst.level) + " on edge " +
                                   std::to_string(par.id) + "->" + std::to_string(id));
          }
        }
      }

      if (!em) continue;
      node.max_t = em->t;
      node.center = em->center;
      node.descent = em->descent;
      if (opt.check != CheckLevel::None && eord_ideal(node.state.J, Stratum::of(node.center)) < node.state.c)
        throw InvariantError("center outside the E-singular locus at node " + std::to_string(id));
      const std::vector<int> center = node.center;
      const BBOE parent_state = node.state;
      const Descent parent_descent = *node.descent;
      const int parent_depth = node.depth;
      const std::string parent_label = node.parent < 0 ? std::string() : node.label + ".";
      if (steps >= opt.max_steps) {
        tree.status = Status::BudgetExhausted;
        tree.diagnostic = "step budget of " + std::to_string(opt.max_steps) + " exhausted";
        break;
      }
      ++steps;
      ++tree.blowups;
      std::vector<int> kids;
      for (int j : center) {
        TreeNode child;
        child.id = static_cast<int>(tree.nodes.size());
        child.parent = id;
        child.depth = parent_depth + 1;
        child.label = parent_label + std::to_string(j + 1);
        child.edge = BlowUpRecord{center, j, parent_state.stage() + 1};
        child.state.chart = blow_up_chart(parent_state.chart, center, j);
        child.state.J = controlled_transform(vs, parent_state.J, center, j, parent_state.c);
        child.state.c = parent_state.c;
        child.state.inherit = detail::inherit_from(parent_descent, center, j, n);
        child.state.k0 = parent_state.k0;
        kids.push_back(child.id);
        tree.nodes.push_back(std::move(child));
      }
      tree.nodes[static_cast<std::size_t>(id)].children = kids;
      if (opt.traversal == Traversal::Dfs)
        work.insert(work.end(), kids.rbegin(), kids.rend());
      else
        work.insert(work.end(), kids.begin(), kids.end());
    } catch (const InvariantError& e) {
      fail(e.what());
    }
  }
  return tree;
}

}  // namespace eres
