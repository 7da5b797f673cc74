// Acceptance suite: end-to-end checks of the library against its worked
// examples and bulk randomized properties. Prints one pass/fail line per
// criterion; exits nonzero if any fails.

#include "qtoric/birational.hpp"
#include "qtoric/charts.hpp"

#include "testutil.hpp"

#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

using namespace qtoric;
using namespace qtoric::testutil;

namespace {

struct Failure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void require(bool cond, const std::string& what) {
  if (!cond) {
    throw Failure(what);
  }
}

int failures = 0;

void criterion(int number, const std::string& name, double budget_seconds,
               const std::function<void()>& body) {
  const auto start = std::chrono::steady_clock::now();
  std::string error;
  try {
    body();
  } catch (const std::exception& e) {
    error = e.what();
  }
  const double elapsed =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (error.empty() && budget_seconds > 0 && elapsed > budget_seconds) {
    std::ostringstream ss;
    ss << "exceeded time budget: " << elapsed << "s > " << budget_seconds << "s";
    error = ss.str();
  }
  if (error.empty()) {
    std::printf("PASS  %d. %s  (%.2fs)\n", number, name.c_str(), elapsed);
  } else {
    std::printf("FAIL  %d. %s  (%.2fs): %s\n", number, name.c_str(), elapsed, error.c_str());
    ++failures;
  }
}

const CRBettiTable kManifoldTable{{0, 1}, {2, 5}, {4, 1}};

void check_seven_gon_deletion(std::size_t edge, const QuasitoricModel& expected) {
  const QuasitoricModel x = model_x();
  const BlowdownSite site = blowdown_site(x, edge);
  require(site.smooth_side == SmoothSide::first, "smooth side should be first");
  require(site.k == 1 && site.m == 2, "(k,m) should be (1,2)");
  require(is_crepant(site), "site should be crepant");
  const QuasitoricModel contracted = blowdown(x, site);
  require(contracted == expected, "deletion result differs from the expected 6-gon");
  const McKayReport report = mckay_check(x, contracted);
  require(report.equal, "Chen-Ruan tables should agree");
  require(report.table_x == kManifoldTable, "table of the 7-gon should be {0:1,2:5,4:1}");
  require(report.table_y == kManifoldTable, "table of the 6-gon should be {0:1,2:5,4:1}");
  require(report.total_diff == 0, "total dimensions should agree");
}

void criterion_1() { check_seven_gon_deletion(1, model_y()); }

void criterion_2() { check_seven_gon_deletion(2, model_z()); }

void criterion_3() {
  require(todd_genus(model_x()) == 2, "7-gon Todd genus should be 2");
  require(todd_genus(triangle()) == 1, "triangle Todd genus should be 1");
  require(todd_genus(square()) == 1, "square Todd genus should be 1");
  // brute-force oracle at an explicit direction
  require(oracle_todd(triangle(), 10, 1) == 1, "oracle disagrees on the triangle");
  require(oracle_todd(square(), 10, 1) == 1, "oracle disagrees on the square");
  require(oracle_todd(model_x(), 10, 1) == 2, "oracle disagrees on the 7-gon");
  // invariance across generic directions
  std::mt19937_64 rng(303);
  for (const QuasitoricModel& m : {model_x(), triangle(), square()}) {
    const Int reference = todd_genus(m);
    int checked = 0;
    while (checked < 25) {
      const long nx = long(rng() % 2000001) - 1000000;
      const long ny = long(rng() % 2000001) - 1000000;
      try {
        require(todd_genus_with_direction(m, {nx, ny}) == reference,
                "Todd genus changed with the direction");
        require(oracle_todd(m, nx, ny) == reference, "oracle disagrees at a random direction");
        ++checked;
      } catch (const GenericityFailure&) {
        continue;
      }
    }
  }
}

void criterion_4() {
  std::mt19937_64 rng(404);
  for (int it = 0; it < 1000; ++it) {
    const QuasitoricModel m = random_po_model(rng, 3, 8, 9);
    Int sector_sum = 0;
    for (const Vertex& v : vertices(m)) {
      const LocalGroup group = local_group(v);
      const auto expected = oracle_grid(v.first, v.second);
      require(group.order == abs(v.det), "group order should equal |det|");
      require(Int(group.elements.size()) == group.order, "element count should equal the order");
      require(group.elements.size() == expected.size(), "grid oracle count mismatch");
      for (std::size_t i = 0; i < expected.size(); ++i) {
        require(group.elements[i].a1 == Rational(expected[i].first, group.order) &&
                    group.elements[i].a2 == Rational(expected[i].second, group.order),
                "grid oracle element mismatch");
      }
      sector_sum += group.order - 1;
    }
    require(total_dimension(cr_betti(m)) == Int(m.size()) + sector_sum,
            "total Chen-Ruan dimension should be m + sum(|G_v| - 1)");
  }
}

void criterion_5() {
  std::mt19937_64 rng(505);
  const std::pair<long, long> crepant_shapes[] = {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {11, 12}};
  int checked = 0;
  while (checked < 500) {
    const auto [k, mm] = crepant_shapes[rng() % std::size(crepant_shapes)];
    const QuasitoricModel m = random_model_with_site(rng, k, mm, 4 + rng() % 4);
    const BlowdownSite site = blowdown_site(m, 1);
    require(is_crepant(site), "planted site should be crepant");
    const McKayReport report = mckay_check(m, blowdown(m, site));
    require(report.equal, "crepant deletion should preserve the table degree-by-degree");
    ++checked;
  }
  const std::pair<long, long> bent_shapes[] = {{1, 3}, {1, 4}, {2, 5}, {3, 5}, {1, 1}, {5, 7}};
  checked = 0;
  while (checked < 500) {
    const auto [k, mm] = bent_shapes[rng() % std::size(bent_shapes)];
    const QuasitoricModel m = random_model_with_site(rng, k, mm, 4 + rng() % 4);
    const BlowdownSite site = blowdown_site(m, 1);
    require(!is_crepant(site), "planted site should not be crepant");
    const QuasitoricModel contracted = blowdown(m, site);
    const Int change = total_dimension(cr_betti(contracted)) - total_dimension(cr_betti(m));
    require(change == site.m - (site.k + 1),
            "non-crepant deletion should move the total dimension by m - (k+1)");
    ++checked;
  }
}

void criterion_6() {
  for (long n = 1; n <= 12; ++n) {
    const QuasitoricModel start = a_chain_model(n);
    require(singularity_type(vertices(start)[0]) == SingularityType{n + 1, n},
            "seed vertex should have type (n+1, n)");
    const CRBettiTable table = cr_betti(start);

    QuasitoricModel current = start;
    std::size_t idx = 0;
    long steps = 0;
    while (det2(current.edges[idx], current.edges[(idx + 1) % current.size()]) != 1) {
      const BlowupResult step = blowup(current, idx, SmoothSide::first);
      const BlowdownSite site = blowdown_site(step.model, idx + 1);
      require(is_crepant(site), "every insertion along the chain should be crepant");
      require(blowdown(step.model, site) == current,
              "deleting the inserted edge should restore the previous list");
      require(cr_betti(step.model) == table, "table should be invariant along the chain");
      current = step.model;
      idx += 1;
      steps += 1;
      require(steps <= n, "chain should stop after n insertions");
    }
    require(steps == n, "chain should take exactly n insertions");
    const ResolutionResult direct = resolve_vertex(start, 0);
    require(direct.model == current && long(direct.inserted.size()) == n,
            "resolve_vertex should walk the same chain");
    for (const Vertex& v : vertices(current)) {
      require(v.det == 1, "final model should be a manifold");
    }
  }
}

void criterion_7() {
  const double tolerance = 1e-9;
  for (const auto& [k, m] : {std::pair{1, 2}, {2, 3}, {1, 3}, {2, 5}}) {
    charts::LocalModelParams params;
    params.k = k;
    params.m = m;
    for (const charts::OrbitPoint& pt : charts::sample_points(params, 1000, 2026)) {
      const auto blowdown_report = charts::verify_blowdown_identities(params, pt);
      require(blowdown_report.pass(tolerance), "blowdown identity residual above tolerance");
      const auto transition_report =
          charts::verify_general_transition(0, 1, -k, m, pt, params.s, params.t);
      require(transition_report.pass(tolerance), "transition residual above tolerance");
    }
  }
  for (int m = 1; m <= 12; ++m) {
    for (int k = 1; k <= m; ++k) {
      require((charts::discrepancy_exponent(k, m) == 0) == (k + 1 == m),
              "discrepancy exponent should vanish exactly when k+1 == m");
    }
  }
}

void criterion_8() {
  const QuasitoricModel m4 = model_m4();
  const BlowdownSite site = blowdown_site(m4, 1);
  require(site.k == 1 && site.m == 3, "(k,m) should be (1,3)");
  require(!is_crepant(site), "site should not be crepant");
  const QuasitoricModel m4p = blowdown(m4, site);
  const McKayReport report = mckay_check(m4, m4p);
  require(!report.equal, "tables should differ");
  require(report.table_x == CRBettiTable{{0, 1}, {2, 2}, {4, 1}}, "4-gon table mismatch");
  require(report.table_y == CRBettiTable{{0, 1},
                                         {Rational(4, 3), 1},
                                         {2, 1},
                                         {Rational(8, 3), 1},
                                         {4, 1}},
          "triangle table should gain sectors at degrees 4/3 and 8/3");
  require(report.degreewise_diff.at(Rational(4, 3)) == -1 &&
              report.degreewise_diff.at(Rational(8, 3)) == -1,
          "degreewise differences at 4/3 and 8/3 should be -1");
  require(report.total_diff == -1, "total difference should be -1");
}

}  // namespace

int main() {
  criterion(1, "7-gon -> 6-gon deletion at edge 1 (crepant, tables agree)", 1.0, criterion_1);
  criterion(2, "7-gon -> 6-gon deletion at edge 2 (crepant, tables agree)", 1.0, criterion_2);
  criterion(3, "Todd genus: 7-gon = 2, triangle/square = 1, direction-independent", 0, criterion_3);
  criterion(4, "grid oracle on 1000 random models; total dimension bookkeeping", 30.0, criterion_4);
  criterion(5, "crepant deletions preserve tables; non-crepant move totals by m-(k+1)", 0,
            criterion_5);
  criterion(6, "A_n chains: n crepant insertions, invariant tables, exact round trips", 0,
            criterion_6);
  criterion(7, "chart identities below 1e-9 on 1000 seeded points per parameter set", 10.0,
            criterion_7);
  criterion(8, "negative control: non-crepant 4-gon deletion changes the table", 0, criterion_8);
  if (failures != 0) {
    std::printf("%d criterion(s) failed\n", failures);
    return 1;
  }
  std::printf("all acceptance criteria passed\n");
  return 0;
}
