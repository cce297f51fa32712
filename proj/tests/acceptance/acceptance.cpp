// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any
// failure.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "sumdiff/bounds.hpp"
#include "sumdiff/enumerate.hpp"
#include "sumdiff/families.hpp"
#include "sumdiff/graph_algorithms.hpp"
#include "sumdiff/scan.hpp"
#include "sumdiff/serialize.hpp"
#include "sumdiff/solvers.hpp"
#include "sumdiff/sumsets.hpp"

using namespace sumdiff;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::int64_t half_up(std::int64_t x) { return (x + 1) / 2; }

// Exact sum index of the two-triangle chain, pinned after the first run.
constexpr std::int64_t kTwoTriangleSumIndex = 4;

struct Outcome {
  bool pass;
  std::string detail;
};

int failures = 0;

void criterion(int id, const char* name, const std::function<Outcome()>& body) {
  const auto t0 = Clock::now();
  Outcome o{false, ""};
  try {
    o = body();
  } catch (const std::exception& e) {
    o = {false, std::string("exception: ") + e.what()};
  }
  if (!o.pass) ++failures;
  std::printf("%s [%2d] %-28s %s (%.2fs)\n", o.pass ? "PASS" : "FAIL", id, name, o.detail.c_str(),
              seconds_since(t0));
  std::fflush(stdout);
}

Outcome prism_exactness() {
  std::ostringstream detail;
  bool ok = true;
  for (int n = 3; n <= 5; ++n) {
    const auto t0 = Clock::now();
    const auto r = sum_index(prism(n).graph);
    const double s = seconds_since(t0);
    ok = ok && r.value == 5 && r.exhaustive_within_range && s <= 60.0;
    detail << "sm(P" << n << ")=" << r.value << " in " << s << "s; ";
  }
  return {ok, detail.str()};
}

Outcome subdivided_complete_exactness() {
  std::ostringstream detail;
  bool ok = true;
  const auto t0 = Clock::now();
  for (int n = 4; n <= 5; ++n) {
    const Graph g = subdivided_complete(n).graph;
    const auto df = difference_index(g);
    const auto sm = sum_index(g);
    ok = ok && df.value == n - 1 && sm.value == 2 * n - 4;
    detail << "n=" << n << ": df=" << df.value << " sm=" << sm.value << "; ";
  }
  ok = ok && seconds_since(t0) <= 120.0;
  return {ok, detail.str()};
}

Outcome conj42_counterexample() {
  const Graph g = subdivided_complete(4).graph;
  const auto sm = sum_index(g).value;
  const auto df = difference_index(g).value;
  std::ostringstream detail;
  detail << "df=" << df << " sm=" << sm << " df-ceil(sm/2)=" << df - half_up(sm);
  return {df - half_up(sm) == 1, detail.str()};
}

Outcome kk_certificates() {
  std::ostringstream detail;
  bool ok = true;
  for (auto [n, k] : {std::pair{5, 2}, std::pair{9, 3}}) {
    const auto inst = subdivided_complete_kk(n, k);
    const auto v = verify_certificate(inst.certificates.at(0));
    ok = ok && v.pass && v.observed == 2 * n - 2 * k - 1;
    detail << "(" << n << "," << k << ") cert=" << v.observed << "; ";
  }
  const auto exact = sum_index(subdivided_complete_kk(5, 2).graph).value;
  detail << "sm(5,2)=" << exact;
  return {ok && exact == 5, detail.str()};
}

Outcome chained_cycles() {
  bool ok = true;
  int checked = 0;
  for (int k = 1; k <= 6; ++k) {
    for (int s = 1; 2 * s * k + 1 <= 13; ++s) {
      ok = ok && difference_index(chained_odd_cycles(k, s).graph).value == 2;
      ++checked;
    }
  }
  const Graph two = chained_odd_cycles(1, 2).graph;
  const auto sm = sum_index(two).value;
  const auto bound = static_cast<std::int64_t>(std::ceil(odd_cycle_bound(two, 1)));
  std::ostringstream detail;
  detail << checked << " instances df=2; sm(k=1,s=2)=" << sm << " >= " << bound;
  return {ok && bound == 4 && sm >= bound && sm == kTwoTriangleSumIndex, detail.str()};
}

Outcome gnk_certificate() {
  const int n = 6, k = 4;
  const auto inst = gnk(n, k);
  const auto v = verify_certificate(inst.certificates.at(0));
  bool degrees_ok = true;
  for (Vertex w = n; w < n + k; ++w) degrees_ok = degrees_ok && inst.graph.degree(w) == n;
  for (Vertex x = n + k; x < n + k + 3; ++x) degrees_ok = degrees_ok && inst.graph.degree(x) == n - k + 2;
  std::ostringstream detail;
  detail << "order=" << inst.graph.order() << " cert=" << v.observed
         << " degrees " << (degrees_ok ? "match" : "differ");
  return {v.pass && v.observed == 10 && inst.graph.order() == 13 && degrees_ok, detail.str()};
}

Outcome soundness_sweep() {
  const auto t0 = Clock::now();
  const auto graphs = enumerate_connected_up_to(6);
  std::size_t bound_violations = 0, bipartite_violations = 0, order_violations = 0;
  for (const Graph& g : graphs) {
    const auto sm = sum_index(g).value;
    const auto df = difference_index(g).value;
    const auto report = bound_report(g, 3);
    if (report.best_sm_lower > sm || report.sum_degree_bound > sm) ++bound_violations;
    if (report.best_df_lower > df || report.diff_degree_bound > df || report.min_degree_bound > df) {
      ++bound_violations;
    }
    for (const auto& [k, entry] : report.odd_cycle_bounds) {
      if (entry.cycles > 0 && entry.bound > static_cast<double>(sm) + 1e-9) ++bound_violations;
    }
    if (is_bipartite(g).bipartite && df < half_up(sm)) ++bipartite_violations;
    if (df > sm) ++order_violations;
  }
  const double s = seconds_since(t0);
  std::ostringstream detail;
  detail << graphs.size() << " graphs; bound=" << bound_violations << " bipartite=" << bipartite_violations
         << " df>sm=" << order_violations;
  return {graphs.size() == 143 && bound_violations == 0 && bipartite_violations == 0 &&
              order_violations == 0 && s <= 1800.0,
          detail.str()};
}

Outcome exclusive_dominance() {
  std::size_t compared = 0, violations = 0, skipped = 0;
  for (const Graph& g : enumerate_connected_up_to(5)) {
    if (g.order() < 2) continue;
    const auto eps = exclusive_sum_number(g);
    if (!eps.found || !eps.bound.exhaustive_within_range) {
      ++skipped;
      continue;
    }
    ++compared;
    if (sum_index(g).value > eps.bound.value) ++violations;
  }
  std::vector<Edge> e;
  for (int i = 0; i < 4; ++i) {
    for (int j = i + 1; j < 4; ++j) e.emplace_back(i, j);
  }
  const Graph k4(4, e);
  const auto eps4 = exclusive_sum_number(k4).bound.value;
  const auto sm4 = sum_index(k4).value;
  std::ostringstream detail;
  detail << compared << " compared, " << skipped << " skipped, " << violations
         << " violations; eps(K4)=" << eps4 << " sm(K4)=" << sm4;
  return {violations == 0 && compared > 0 && eps4 == sm4, detail.str()};
}

Outcome stanchescu_suite() {
  const auto t0 = Clock::now();
  const auto run = stanchescu_property_run(10000, 7, 30, 8);
  const double s = seconds_since(t0);
  std::ostringstream detail;
  detail << run.trials << " trials, " << run.hypothesis_true << " hypothesis-true, " << run.violations
         << " violations";
  return {run.trials == 10000 && run.violations == 0 && s <= 10.0, detail.str()};
}

Outcome determinism() {
  const auto graphs = enumerate_connected_up_to(5);
  const ScanChecks checks{true, true, true};
  const auto a = scan_report_to_json(scan_conjectures(graphs, {}, checks, 1)).dump(2);
  const auto b = scan_report_to_json(scan_conjectures(graphs, {}, checks, 8)).dump(2);
  std::ostringstream detail;
  detail << a.size() << " bytes, " << (a == b ? "identical" : "different");
  return {a == b, detail.str()};
}

}  // namespace

int main() {
  criterion(1, "prism exactness", prism_exactness);
  criterion(2, "subdivided complete", subdivided_complete_exactness);
  criterion(3, "conj 4.2 counterexample", conj42_counterexample);
  criterion(4, "K^(k,k) certificates", kk_certificates);
  criterion(5, "chained odd cycles", chained_cycles);
  criterion(6, "G(6,4) certificate", gnk_certificate);
  criterion(7, "soundness sweep n<=6", soundness_sweep);
  criterion(8, "exclusive dominance", exclusive_dominance);
  criterion(9, "stability property suite", stanchescu_suite);
  criterion(10, "scan determinism", determinism);
  std::printf("%d of 10 criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
