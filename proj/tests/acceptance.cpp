// End-to-end checks over the verification sweeps, with wall-clock budgets.
// Prints one line per criterion and exits with the number of failures.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "dq/compositions.hpp"
#include "dq/verify.hpp"

namespace {

using dq::Report;
using dq::SweepBounds;
using dq::Status;

// Independent enumeration of S(r,s): walk all vectors with entry sum r by
// plain recursion, no weighted-sum pruning, then filter.  Slow on purpose.
void all_count_vectors(std::vector<int>& b, std::size_t pos, int left,
                       std::vector<std::vector<int>>& out) {
  if (pos + 1 == b.size()) {
    b[pos] = left;
    out.push_back(b);
    return;
  }
  for (int v = 0; v <= left; ++v) {
    b[pos] = v;
    all_count_vectors(b, pos + 1, left - v, out);
  }
}

std::vector<std::vector<int>> brute_force_S(int r, int s) {
  std::vector<int> b(s + 1, 0);
  std::vector<std::vector<int>> raw, keep;
  all_count_vectors(b, 0, r, raw);
  for (const auto& v : raw) {
    long long weighted = 0;
    for (int p = 0; p <= s; ++p) weighted += static_cast<long long>(p) * v[p];
    if (weighted == s) keep.push_back(v);
  }
  return keep;
}

bool enumerator_matches_brute_force() {
  for (int r = 0; r <= 8; ++r)
    for (int s = 0; s <= 8; ++s)
      if (dq::enumerate_S(r, s).elements != brute_force_S(r, s)) return false;
  return true;
}

struct Criterion {
  std::string label;
  double budget_seconds = 0;  // 0 means no budget
  std::function<bool(const SweepBounds&)> run;
};

}  // namespace

int main() {
  SweepBounds bounds;
  std::vector<Criterion> criteria{
      {"composition calculus: split, rearrangement, cardinality, brute force", 10.0,
       [](const SweepBounds& b) {
         if (!enumerator_matches_brute_force()) return false;
         return dq::sweep_composition_calculus(b).status == Status::Pass;
       }},
      {"root pairings scale and add over decompositions", 5.0,
       [](const SweepBounds& b) { return dq::sweep_root_pairings(b).status == Status::Pass; }},
      {"type A recursion solves to irreducible characters", 60.0,
       [](const SweepBounds& b) { return dq::sweep_type_a_qsystem(b).status == Status::Pass; }},
      {"mass identity balances in type A", 30.0,
       [](const SweepBounds& b) { return dq::sweep_dimension_identity(b).status == Status::Pass; }},
      {"rank-one level-1 dimensions double per box", 0,
       [](const SweepBounds& b) { return dq::sweep_sl2_demazure(b).status == Status::Pass; }},
      {"dimension is multiplicative on the factorizable cone", 0,
       [](const SweepBounds& b) { return dq::sweep_multiplicativity(b).status == Status::Pass; }},
      {"rank-one fusion suite up to size 12", 120.0,
       [](const SweepBounds& b) { return dq::sweep_sl2_suite(b).status == Status::Pass; }},
      {"canonical tuples validate and classify", 0,
       [](const SweepBounds& b) { return dq::sweep_xi_shapes(b).status == Status::Pass; }},
  };

  int failures = 0;
  for (std::size_t n = 0; n < criteria.size(); ++n) {
    const auto& c = criteria[n];
    auto start = std::chrono::steady_clock::now();
    bool ok = false;
    std::string error;
    try {
      ok = c.run(bounds);
    } catch (const std::exception& e) {
      error = e.what();
    }
    double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    bool in_budget = c.budget_seconds == 0 || elapsed < c.budget_seconds;
    bool pass = ok && in_budget;
    if (!pass) ++failures;
    std::printf("[%s] %zu: %s (%.2fs%s)%s%s\n", pass ? "PASS" : "FAIL", n + 1, c.label.c_str(),
                elapsed, in_budget ? "" : ", over budget", error.empty() ? "" : " error: ",
                error.c_str());
  }
  return failures;
}
