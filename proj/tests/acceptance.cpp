#include "criteria.hpp"

#include <chrono>
#include <cstdio>
#include <functional>

namespace {

using eres::testing::Verdict;

struct Criterion {
  int number;
  const char* name;
  double limit_seconds;
  std::function<Verdict()> run;
};

}  // namespace

int main() {
  namespace t = eres::testing;
  const Criterion criteria[] = {
      {1, "golden trace A", 1.0, t::golden_a},
      {2, "golden trace B", 0.0, t::golden_b},
      {3, "termination and descent sweep", 60.0, [] { return t::termination_sweep(500, 1); }},
      {4, "oracle equivalence", 0.0, [] { return t::oracle_equivalence(1000, 4); }},
      {5, "monotonicity", 0.0, [] { return t::monotonicity(200, 5); }},
      {6, "commutation", 0.0, [] { return t::commutation(200, 6); }},
      {7, "top locus transfer", 0.0, [] { return t::etop_transfer(200, 7); }},
      {8, "equivariance", 0.0, [] { return t::equivariance(100, 8); }},
      {9, "characteristic-p smoke", 0.0, [] { return t::char_p_smoke(); }},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Verdict v;
    try {
      v = c.run();
    } catch (const std::exception& e) {
      v.fail(std::string("exception: ") + e.what());
    }
    const double took = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.limit_seconds > 0 && took >= c.limit_seconds)
      v.fail("took " + std::to_string(took) + " s, limit " + std::to_string(c.limit_seconds) + " s");
    std::printf("%s criterion %d (%s) %.3fs%s%s\n", v.pass ? "PASS" : "FAIL", c.number, c.name, took,
                v.pass ? "" : ": ", v.detail.c_str());
    std::fflush(stdout);
    if (!v.pass) ++failed;
  }
  return failed == 0 ? 0 : 1;
}
