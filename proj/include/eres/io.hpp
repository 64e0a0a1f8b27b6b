#pragma once

#include "eres/resolver.hpp"

#include <json.hpp>

#include <fstream>
#include <sstream>

namespace eres {

inline constexpr const char* kProblemSchema = "eres.problem/1";
inline constexpr const char* kTraceSchema = "eres.trace/1";

// Malformed problem or trace file; the message carries a line/column or a JSON pointer.
struct InputError : DomainError {
  using DomainError::DomainError;
};

struct Problem {
  unsigned characteristic = 0;
  VarSpace space;
  BinomialIdeal J;
  Rational control = 1;
  ResolveOptions options;
};

namespace io_detail {

using nlohmann::json;
using nlohmann::ordered_json;

inline std::string line_column(const std::string& text, std::size_t byte) {
  std::size_t line = 1, col = 1;
  for (std::size_t i = 0; i + 1 < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return "line " + std::to_string(line) + ", column " + std::to_string(col);
}

[[noreturn]] inline void fail_at(const std::string& pointer, const std::string& what) {
  throw InputError("at " + (pointer.empty() ? std::string("/") : pointer) + ": " + what);
}

inline const json& field(const json& obj, const std::string& ptr, const char* key) {
  if (!obj.is_object()) fail_at(ptr, "expected an object");
  auto it = obj.find(key);
  if (it == obj.end()) fail_at(ptr, std::string("missing field '") + key + "'");
  return *it;
}

inline long integer(const json& v, const std::string& ptr) {
  if (!v.is_number_integer()) fail_at(ptr, "expected an integer");
  return v.get<long>();
}

inline Rational rational(const json& v, const std::string& ptr) {
  if (v.is_number_integer()) return Rational(v.get<long>());
  if (!v.is_string()) fail_at(ptr, "expected an integer or a \"num/den\" string");
  try {
    return parse_rational(v.get<std::string>());
  } catch (const DomainError& e) {
    fail_at(ptr, e.what());
  }
}

inline BigRational big_rational(const json& v, const std::string& ptr) {
  if (v.is_number_integer()) return BigRational(v.get<long>());
  if (!v.is_string()) fail_at(ptr, "expected an integer or a \"num/den\" string");
  try {
    return parse_big_rational(v.get<std::string>());
  } catch (const DomainError& e) {
    fail_at(ptr, e.what());
  }
}

inline ExponentVector exponents(const json& v, const std::string& ptr, int n) {
  if (!v.is_array()) fail_at(ptr, "expected an exponent list");
  if (static_cast<int>(v.size()) != n)
    fail_at(ptr, "exponent list has length " + std::to_string(v.size()) + ", expected " + std::to_string(n));
  ExponentVector out;
  for (std::size_t i = 0; i < v.size(); ++i) out.push_back(integer(v[i], ptr + "/" + std::to_string(i)));
  return out;
}

inline json parse_json(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    std::string what = e.what();
    if (auto pos = what.find("syntax error"); pos != std::string::npos) what = what.substr(pos);
    throw InputError(line_column(text, e.byte) + ": " + what);
  }
}

inline std::string ratio(const Rational& q) { return to_string(q); }

inline ordered_json exponent_json(const ExponentVector& e) { return ordered_json(e); }

inline ordered_json rational_list(const std::vector<Rational>& v) {
  ordered_json out = ordered_json::array();
  for (const auto& q : v) out.push_back(ratio(q));
  return out;
}

inline ordered_json index_list(const std::vector<int>& v) {
  ordered_json out = ordered_json::array();
  for (int i : v) out.push_back(i + 1);
  return out;
}

inline ordered_json stratum_json(const Stratum& s) { return index_list(s.indices()); }

inline ordered_json divisor_json(const Divisor& d) {
  ordered_json out = ordered_json::object();
  for (const auto& [i, m] : d.entries()) out["x" + std::to_string(i + 1)] = ratio(m);
  return out;
}

}  // namespace io_detail

inline Problem parse_problem(const std::string& text) {
  using namespace io_detail;
  const json doc = parse_json(text);
  if (!doc.is_object()) fail_at("", "expected an object");
  if (auto it = doc.find("schema"); it != doc.end() && *it != kProblemSchema)
    fail_at("/schema", std::string("unsupported schema, expected ") + kProblemSchema);
  Problem p;
  const long ch = integer(field(doc, "", "characteristic"), "/characteristic");
  if (ch < 0 || (ch != 0 && !is_prime(static_cast<unsigned>(ch)))) fail_at("/characteristic", "must be 0 or a prime");
  p.characteristic = static_cast<unsigned>(ch);
  const long n = integer(field(doc, "", "num_vars"), "/num_vars");
  if (n < 1 || n > 62) fail_at("/num_vars", "must lie in 1..62");
  std::vector<int> invertible;
  if (auto it = doc.find("invertible"); it != doc.end()) {
    if (!it->is_array()) fail_at("/invertible", "expected an index list");
    for (std::size_t k = 0; k < it->size(); ++k) {
      const std::string ptr = "/invertible/" + std::to_string(k);
      const long i = integer((*it)[k], ptr);
      if (i < 1 || i > n) fail_at(ptr, "index out of range 1.." + std::to_string(n));
      invertible.push_back(static_cast<int>(i - 1));
    }
  }
  p.space = VarSpace(static_cast<int>(n), invertible);

  const json& gens = field(doc, "", "generators");
  if (!gens.is_array() || gens.empty()) fail_at("/generators", "expected a non-empty list");
  for (std::size_t k = 0; k < gens.size(); ++k) {
    const std::string ptr = "/generators/" + std::to_string(k);
    const json& g = gens[k];
    const ExponentVector plus = exponents(field(g, ptr, "plus"), ptr + "/plus", static_cast<int>(n));
    const ExponentVector minus = g.contains("minus") ? exponents(g["minus"], ptr + "/minus", static_cast<int>(n))
                                                     : ExponentVector(static_cast<std::size_t>(n), 0);
    for (std::size_t i = 0; i < plus.size(); ++i) {
      if (plus[i] < 0) fail_at(ptr + "/plus/" + std::to_string(i), "negative exponent");
      if (minus[i] < 0) fail_at(ptr + "/minus/" + std::to_string(i), "negative exponent");
    }
    try {
      const Coefficient a = Coefficient::from_rational(
          p.characteristic, g.contains("plus_coeff") ? big_rational(g["plus_coeff"], ptr + "/plus_coeff") : 1);
      const Coefficient b = Coefficient::from_rational(
          p.characteristic, g.contains("minus_coeff") ? big_rational(g["minus_coeff"], ptr + "/minus_coeff") : 0);
      p.J.generators.push_back(normalize_binomial(p.space, plus, minus, a, b));
    } catch (const InputError&) {
      throw;
    } catch (const DomainError& e) {
      fail_at(ptr, e.what());
    }
  }

  const json& control = field(doc, "", "control");
  if (!control.is_number_integer()) fail_at("/control", "expected an integer");
  if (control.get<long>() < 1) fail_at("/control", "control must be ≥ 1");
  p.control = Rational(control.get<long>());

  if (auto it = doc.find("options"); it != doc.end()) {
    const json& opt = *it;
    if (!opt.is_object()) fail_at("/options", "expected an object");
    if (opt.contains("max_steps")) {
      p.options.max_steps = integer(opt["max_steps"], "/options/max_steps");
      if (p.options.max_steps < 1) fail_at("/options/max_steps", "must be ≥ 1");
    }
    if (opt.contains("check_level")) {
      const std::string v = opt["check_level"].is_string() ? opt["check_level"].get<std::string>() : "";
      if (v == "none") p.options.check = CheckLevel::None;
      else if (v == "fast") p.options.check = CheckLevel::Fast;
      else if (v == "full") p.options.check = CheckLevel::Full;
      else fail_at("/options/check_level", "expected one of none, fast, full");
    }
    if (opt.contains("traversal")) {
      const std::string v = opt["traversal"].is_string() ? opt["traversal"].get<std::string>() : "";
      if (v == "dfs") p.options.traversal = Traversal::Dfs;
      else if (v == "bfs") p.options.traversal = Traversal::Bfs;
      else fail_at("/options/traversal", "expected dfs or bfs");
    }
  }
  return p;
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

inline Problem load_problem(const std::string& path) {
  try {
    return parse_problem(read_file(path));
  } catch (const InputError& e) {
    throw InputError(path + ": " + e.what());
  }
}

inline const char* check_name(CheckLevel c) {
  switch (c) {
    case CheckLevel::None: return "none";
    case CheckLevel::Fast: return "fast";
    case CheckLevel::Full: return "full";
  }
  return "?";
}

inline nlohmann::ordered_json generator_json(const Binomial& f) {
  using namespace io_detail;
  ordered_json g;
  g["kind"] = kind_name(f.kind());
  g["text"] = f.to_string();
  g["common"] = rational_list(f.common());
  g["lhs"] = exponent_json(f.lhs());
  g["rhs"] = exponent_json(f.rhs());
  g["coeff"] = f.coeff().to_string();
  g["weight"] = ratio(f.weight());
  return g;
}

inline Binomial generator_from_json(const VarSpace& vs, unsigned characteristic, const nlohmann::json& g,
                                    const std::string& ptr) {
  using namespace io_detail;
  const int n = vs.size();
  const json& common_v = field(g, ptr, "common");
  if (!common_v.is_array() || static_cast<int>(common_v.size()) != n) fail_at(ptr + "/common", "bad length");
  std::vector<Rational> common;
  for (std::size_t i = 0; i < common_v.size(); ++i)
    common.push_back(rational(common_v[i], ptr + "/common/" + std::to_string(i)));
  const json& kind_v = field(g, ptr, "kind");
  if (!kind_v.is_string()) fail_at(ptr + "/kind", "expected a string");
  const std::string kind = kind_v.get<std::string>();
  const Rational weight = rational(field(g, ptr, "weight"), ptr + "/weight");
  if (kind == "monomial") return Binomial::monomial(std::move(common), weight);
  if (kind != "proper" && kind != "hyperbolic") fail_at(ptr + "/kind", "unknown kind '" + kind + "'");
  const Coefficient coeff =
      Coefficient::from_rational(characteristic, big_rational(field(g, ptr, "coeff"), ptr + "/coeff"));
  return Binomial::assemble(vs, std::move(common),
                            {Coefficient::one(characteristic), exponents(field(g, ptr, "lhs"), ptr + "/lhs", n)},
                            {coeff, exponents(field(g, ptr, "rhs"), ptr + "/rhs", n)}, weight);
}

inline nlohmann::ordered_json component_json(const TComponent& c) {
  using namespace io_detail;
  ordered_json out;
  switch (c.tag()) {
    case TComponent::Tag::Inf: out["tag"] = "INF"; break;
    case TComponent::Tag::Rat:
      out["tag"] = "RAT";
      out["value"] = ratio(c.value());
      break;
    case TComponent::Tag::Gamma:
      out["tag"] = "GAMMA";
      out["neg_size"] = c.gamma_value().neg_size;
      out["ratio"] = ratio(c.gamma_value().ratio);
      out["tuple"] = index_list(c.gamma_value().tuple);
      break;
  }
  return out;
}

inline TComponent component_from_json(const nlohmann::json& v, const std::string& ptr) {
  using namespace io_detail;
  const json& tag = field(v, ptr, "tag");
  if (tag == "INF") return TComponent::inf();
  if (tag == "RAT") return TComponent::rat(rational(field(v, ptr, "value"), ptr + "/value"));
  if (tag != "GAMMA") fail_at(ptr + "/tag", "expected INF, RAT or GAMMA");
  GammaValue g;
  g.neg_size = integer(field(v, ptr, "neg_size"), ptr + "/neg_size");
  g.ratio = rational(field(v, ptr, "ratio"), ptr + "/ratio");
  const json& tuple = field(v, ptr, "tuple");
  if (!tuple.is_array()) fail_at(ptr + "/tuple", "expected an index list");
  for (std::size_t i = 0; i < tuple.size(); ++i)
    g.tuple.push_back(static_cast<int>(integer(tuple[i], ptr + "/tuple/" + std::to_string(i))) - 1);
  return TComponent::gamma(g);
}

inline nlohmann::ordered_json tvalue_json(const TValue& t) {
  nlohmann::ordered_json out = nlohmann::ordered_json::array();
  for (const auto& c : t.components) out.push_back(component_json(c));
  return out;
}

inline nlohmann::ordered_json problem_json(const Problem& p) {
  using namespace io_detail;
  ordered_json out;
  out["schema"] = kProblemSchema;
  out["characteristic"] = p.characteristic;
  out["num_vars"] = p.space.size();
  std::vector<int> inv;
  for (int i = 0; i < p.space.size(); ++i)
    if (p.space.invertible(i)) inv.push_back(i);
  out["invertible"] = index_list(inv);
  out["control"] = ratio(p.control);
  out["generators"] = ordered_json::array();
  for (const auto& f : p.J.generators) out["generators"].push_back(generator_json(f));
  out["options"] = {{"max_steps", p.options.max_steps},
                    {"check_level", check_name(p.options.check)},
                    {"traversal", p.options.traversal == Traversal::Dfs ? "dfs" : "bfs"}};
  return out;
}

inline nlohmann::ordered_json trace_json(const Problem& p, const ResolutionTree& tree) {
  using namespace io_detail;
  ordered_json out;
  out["schema"] = kTraceSchema;
  out["problem"] = problem_json(p);
  out["status"] = status_name(tree.status);
  out["diagnostic"] = tree.diagnostic;
  out["summary"] = {{"nodes", tree.nodes.size()}, {"depth", tree.depth()}, {"blowups", tree.blowups}};
  out["nodes"] = ordered_json::array();
  const int n = p.space.size();
  for (const auto& node : tree.nodes) {
    ordered_json r;
    r["id"] = node.id;
    r["parent"] = node.parent < 0 ? ordered_json(nullptr) : ordered_json(node.parent);
    r["label"] = node.label;
    r["depth"] = node.depth;
    if (node.edge) {
      r["substitution"] = {{"center", index_list(node.edge->center)},
                           {"chart_var", node.edge->chart_var + 1},
                           {"stage", node.edge->stage},
                           {"text", Substitution{node.edge->center, node.edge->chart_var, node.edge->stage}.to_string()}};
    } else {
      r["substitution"] = nullptr;
    }
    r["generators"] = ordered_json::array();
    for (const auto& f : node.state.J.generators) r["generators"].push_back(generator_json(f));
    ordered_json dims = ordered_json::array();
    for (int lvl = n; lvl >= 1; --lvl) {
      const auto L = static_cast<std::size_t>(lvl);
      ordered_json h = ordered_json::array();
      for (const auto& e : node.state.chart.H[L]) h.push_back({{"index", e.index + 1}, {"birth_stage", e.birth_stage}});
      dims.push_back({{"dimension", lvl}, {"D", divisor_json(node.state.chart.D[L])}, {"H", h}});
    }
    r["dimensions"] = dims;
    ordered_json strata = ordered_json::array();
    for (const auto& s : node.minimal_strata) strata.push_back(stratum_json(s));
    r["minimal_esing_strata"] = strata;
    r["max_t"] = node.max_t ? tvalue_json(*node.max_t) : ordered_json(nullptr);
    r["center"] = node.max_t ? index_list(node.center) : ordered_json(nullptr);
    r["children"] = node.children;
    out["nodes"].push_back(r);
  }
  return out;
}

inline std::string dot(const ResolutionTree& tree) {
  std::ostringstream out;
  out << "digraph resolution {\n  node [shape=box, fontname=\"monospace\"];\n";
  for (const auto& node : tree.nodes) {
    std::string label = node.label + "\\n" + (node.max_t ? node.max_t->to_string() : std::string("resolved"));
    out << "  n" << node.id << " [label=\"" << label << "\"" << (node.children.empty() ? ", style=rounded" : "")
        << "];\n";
  }
  for (const auto& node : tree.nodes)
    if (node.parent >= 0)
      out << "  n" << node.parent << " -> n" << node.id << " [label=\"x" << node.edge->chart_var + 1 << "\"];\n";
  out << "}\n";
  return out.str();
}

struct TraceVerdict {
  bool ok = true;
  std::vector<std::string> problems;
};

namespace io_detail {

inline TraceVerdict verify_trace_document(const std::string& text);

}  // namespace io_detail

// Re-reads a trace and re-derives every edge: transforms, descent of the recorded maxima,
// leaf soundness, and agreement with a fresh run under full checking.
inline TraceVerdict verify_trace(const std::string& text) {
  try {
    return io_detail::verify_trace_document(text);
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("malformed trace: ") + e.what());
  }
}

inline TraceVerdict io_detail::verify_trace_document(const std::string& text) {
  TraceVerdict verdict;
  auto flag = [&](std::string what) {
    verdict.ok = false;
    verdict.problems.push_back(std::move(what));
  };
  const json doc = parse_json(text);
  if (!doc.is_object() || doc.value("schema", "") != kTraceSchema) fail_at("/schema", "not a trace file");
  const json& pj = field(doc, "", "problem");
  Problem p;
  p.characteristic = static_cast<unsigned>(integer(field(pj, "/problem", "characteristic"), "/problem/characteristic"));
  std::vector<int> inv;
  for (const auto& i : field(pj, "/problem", "invertible")) inv.push_back(static_cast<int>(i.get<long>()) - 1);
  p.space = VarSpace(static_cast<int>(integer(field(pj, "/problem", "num_vars"), "/problem/num_vars")), inv);
  p.control = rational(field(pj, "/problem", "control"), "/problem/control");
  const json& gens = field(pj, "/problem", "generators");
  for (std::size_t k = 0; k < gens.size(); ++k)
    p.J.generators.push_back(
        generator_from_json(p.space, p.characteristic, gens[k], "/problem/generators/" + std::to_string(k)));
  const json& opt = field(pj, "/problem", "options");
  p.options.max_steps = opt.value("max_steps", 10000L);
  p.options.traversal = opt.value("traversal", "dfs") == "bfs" ? Traversal::Bfs : Traversal::Dfs;

  const json& nodes = field(doc, "", "nodes");
  std::vector<BinomialIdeal> ideals;
  std::vector<std::optional<TValue>> maxima;
  for (std::size_t k = 0; k < nodes.size(); ++k) {
    const std::string ptr = "/nodes/" + std::to_string(k);
    BinomialIdeal J;
    const json& g = field(nodes[k], ptr, "generators");
    for (std::size_t m = 0; m < g.size(); ++m)
      J.generators.push_back(
          generator_from_json(p.space, p.characteristic, g[m], ptr + "/generators/" + std::to_string(m)));
    ideals.push_back(std::move(J));
    const json& mt = field(nodes[k], ptr, "max_t");
    if (mt.is_null()) {
      maxima.emplace_back();
    } else {
      TValue t;
      for (std::size_t m = 0; m < mt.size(); ++m)
        t.components.push_back(component_from_json(mt[m], ptr + "/max_t/" + std::to_string(m)));
      maxima.push_back(t);
    }
  }
  for (std::size_t k = 0; k < nodes.size(); ++k) {
    const json& node = nodes[k];
    const std::string where = "node " + std::to_string(k);
    if (!maxima[k] && !esing(ideals[k], p.control, p.space).empty()) flag(where + ": leaf is still E-singular");
    if (maxima[k]) {
      std::vector<int> center;
      for (const auto& i : node["center"]) center.push_back(static_cast<int>(i.get<long>()) - 1);
      if (eord_ideal(ideals[k], Stratum::of(center)) < p.control) flag(where + ": center outside the E-singular locus");
    }
    if (node["parent"].is_null()) continue;
    const auto parent = node["parent"].get<std::size_t>();
    const json& sub = node["substitution"];
    std::vector<int> center;
    for (const auto& i : sub["center"]) center.push_back(static_cast<int>(i.get<long>()) - 1);
    const int j = static_cast<int>(sub["chart_var"].get<long>()) - 1;
    const BinomialIdeal expect = controlled_transform(p.space, ideals[parent], center, j, p.control);
    if (!(canonical(expect) == canonical(ideals[k]))) flag(where + ": generators differ from the controlled transform");
    if (maxima[k] && maxima[parent] && !(*maxima[k] < *maxima[parent]))
      flag(where + ": no strict descent from node " + std::to_string(parent));
  }
  Problem rerun = p;
  rerun.options.check = CheckLevel::Full;
  const ResolutionTree tree = resolve(BBOE::root(p.space, p.J, p.control), rerun.options);
  if (tree.status != Status::Resolved && doc.value("status", "") == "resolved")
    flag("fresh run under full checking ends with " + std::string(status_name(tree.status)) + ": " + tree.diagnostic);
  ordered_json fresh = trace_json(p, tree);
  ordered_json recorded = ordered_json::parse(text);
  fresh["problem"]["options"] = recorded["problem"]["options"];
  if (tree.status == Status::Resolved && fresh["nodes"] != recorded["nodes"]) flag("fresh run produces a different tree");
  return verdict;
}

}  // namespace eres
