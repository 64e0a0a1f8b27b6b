#include "eres/io.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <cstdio>
#include <iostream>

namespace {

enum Exit { kResolved = 0, kBadInput = 1, kAssertion = 2, kBudget = 3 };

void write_file(const std::string& path, const std::string& body) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw eres::InputError("cannot write '" + path + "'");
  out << body;
}

int run_resolve(const std::string& input, const std::string& trace_path, const std::string& dot_path,
                std::optional<long> max_steps, const std::string& check, const std::string& traversal) {
  eres::Problem problem = eres::load_problem(input);
  if (max_steps) {
    if (*max_steps < 1) throw eres::InputError("--max-steps must be ≥ 1");
    problem.options.max_steps = *max_steps;
  }
  if (!check.empty())
    problem.options.check = check == "none" ? eres::CheckLevel::None
                            : check == "full" ? eres::CheckLevel::Full
                                              : eres::CheckLevel::Fast;
  if (!traversal.empty())
    problem.options.traversal = traversal == "bfs" ? eres::Traversal::Bfs : eres::Traversal::Dfs;

  const auto start = std::chrono::steady_clock::now();
  const eres::ResolutionTree tree =
      eres::resolve(eres::BBOE::root(problem.space, problem.J, problem.control), problem.options);
  const double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

  write_file(trace_path, eres::trace_json(problem, tree).dump(2) + "\n");
  if (!dot_path.empty()) write_file(dot_path, eres::dot(tree));

  char seconds[32];
  std::snprintf(seconds, sizeof seconds, "%.3f", elapsed);
  std::cout << "nodes=" << tree.nodes.size() << " depth=" << tree.depth() << " blowups=" << tree.blowups
            << " elapsed=" << seconds << "s status=" << eres::status_name(tree.status) << "\n";
  if (!tree.diagnostic.empty()) std::cerr << "diagnostic: " << tree.diagnostic << "\n";
  switch (tree.status) {
    case eres::Status::Resolved: return kResolved;
    case eres::Status::AssertionFailed: return kAssertion;
    case eres::Status::BudgetExhausted: return kBudget;
  }
  return kAssertion;
}

int run_verify(const std::string& trace_path) {
  const eres::TraceVerdict verdict = eres::verify_trace(eres::read_file(trace_path));
  for (const auto& p : verdict.problems) std::cerr << p << "\n";
  std::cout << (verdict.ok ? "trace verified" : "trace rejected") << "\n";
  return verdict.ok ? kResolved : kAssertion;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"E-resolution of binomial ideals"};
  app.require_subcommand(1);

  std::string input, trace_path, dot_path, check, traversal;
  std::optional<long> max_steps;
  CLI::App* resolve = app.add_subcommand("resolve", "Resolve a problem file and write its trace");
  resolve->add_option("--input", input, "Problem file (JSON)")->required();
  resolve->add_option("--trace", trace_path, "Trace output (JSON)")->required();
  resolve->add_option("--dot", dot_path, "Tree diagram output (DOT)");
  resolve->add_option("--max-steps", max_steps, "Blow-up budget");
  resolve->add_option("--check", check, "Edge checks")->check(CLI::IsMember({"none", "fast", "full"}));
  resolve->add_option("--traversal", traversal, "Chart order")->check(CLI::IsMember({"dfs", "bfs"}));

  std::string verify_path;
  CLI::App* verify = app.add_subcommand("verify", "Re-check every edge of an emitted trace");
  verify->add_option("--trace", verify_path, "Trace file (JSON)")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : kBadInput;
  }

  try {
    if (*resolve) return run_resolve(input, trace_path, dot_path, max_steps, check, traversal);
    return run_verify(verify_path);
  } catch (const eres::DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kBadInput;
  } catch (const eres::InvariantError& e) {
    std::cerr << "assertion failed: " << e.what() << "\n";
    return kAssertion;
  }
}
