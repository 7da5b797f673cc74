#include "qtoric/cohomology.hpp"

#include "testutil.hpp"

#include <doctest.h>

#include <random>

using namespace qtoric;
using namespace qtoric::testutil;

TEST_SUITE("cohomology") {

TEST_CASE("singular Betti tables") {
  CHECK(singular_betti(triangle()) == BettiTable{{0, 1}, {2, 1}, {4, 1}});
  CHECK(singular_betti(model_x()) == BettiTable{{0, 1}, {2, 5}, {4, 1}});
  CHECK(singular_betti(model_y()) == BettiTable{{0, 1}, {2, 4}, {4, 1}});
}

TEST_CASE("Chen-Ruan tables of the worked models") {
  const CRBettiTable manifold{{0, 1}, {2, 5}, {4, 1}};
  CHECK(cr_betti(model_x()) == manifold);
  CHECK(cr_betti(model_y()) == manifold);  // 4 + one age-1 sector at degree 2
  CHECK(cr_betti(model_z()) == manifold);
  CHECK(cr_betti(model_t()) ==
        CRBettiTable{{0, 1}, {Rational(4, 3), 1}, {2, 1}, {Rational(8, 3), 1}, {4, 1}});
  CHECK(cr_betti(model_m4()) == CRBettiTable{{0, 1}, {2, 2}, {4, 1}});
}

TEST_CASE("Todd genus of the worked models") {
  CHECK(todd_genus(triangle()) == 1);
  CHECK(todd_genus(square()) == 1);
  CHECK(todd_genus(model_x()) == 2);
  CHECK(todd_genus_with_direction(triangle(), {10, 1}) == 1);
  CHECK(todd_genus_with_direction(square(), {10, 1}) == 1);
}

TEST_CASE("Todd genus guards") {
  CHECK_THROWS_AS(todd_genus(model_y()), NotAManifoldError);  // det-2 vertex
  CHECK_THROWS_AS(todd_genus_with_direction(triangle(), {1, 0}), GenericityFailure);
  CHECK_THROWS_AS(todd_genus(make_model({{1, 0}, {0, -1}, {-1, 0}, {0, 1}})), NotAManifoldError);
}

TEST_CASE("Todd genus does not depend on the direction") {
  std::mt19937_64 rng(41);
  for (int it = 0; it < 20; ++it) {
    const QuasitoricModel m = [&rng] {
      for (;;) {
        QuasitoricModel candidate = random_po_model(rng, 3, 8);
        bool manifold = true;
        for (const Vertex& v : vertices(candidate)) {
          manifold = manifold && v.det == 1;
        }
        if (manifold) {
          return candidate;
        }
      }
    }();
    const Int reference = todd_genus(m);
    int checked = 0;
    while (checked < 25) {
      const LatticeVector nu{random_in(rng, -1000000, 1000000), random_in(rng, -1000000, 1000000)};
      try {
        CHECK(todd_genus_with_direction(m, nu) == reference);
        ++checked;
      } catch (const GenericityFailure&) {
        continue;
      }
    }
  }
}

TEST_CASE("dimension bookkeeping on random models") {
  std::mt19937_64 rng(42);
  for (int it = 0; it < 150; ++it) {
    const QuasitoricModel m = random_po_model(rng, 3, 8);
    CHECK(total_dimension(singular_betti(m)) == Int(m.size()));

    Int sectors = 0;
    bool all_sl = true;
    for (const Vertex& v : vertices(m)) {
      sectors += Int(oracle_grid(v.first, v.second).size()) - 1;
      all_sl = all_sl && is_SL(v);
    }
    const CRBettiTable table = cr_betti(m);
    CHECK(total_dimension(table) == Int(m.size()) + sectors);

    // ages live strictly inside (0,2): degrees 0 and 4 never gain sectors
    CHECK(table.at(0) == 1);
    CHECK(table.at(4) == 1);
    CHECK(table.at(2) >= Int(m.size()) - 2);

    // non-integer degrees appear exactly when some vertex is not SL
    bool has_fractional = false;
    for (const auto& [degree, dim] : table) {
      has_fractional = has_fractional || !is_integer(degree);
    }
    CHECK(has_fractional == !all_sl);
  }
}

TEST_CASE("tables are rotation invariant") {
  std::mt19937_64 rng(43);
  for (int it = 0; it < 80; ++it) {
    const QuasitoricModel m = random_po_model(rng, 3, 8);
    const QuasitoricModel r = rotated(m, rng() % m.size());
    CHECK(singular_betti(m) == singular_betti(r));
    CHECK(cr_betti(m) == cr_betti(r));
  }
  const QuasitoricModel x = model_x();
  for (std::size_t shift = 0; shift < x.size(); ++shift) {
    CHECK(todd_genus(x) == todd_genus(rotated(x, shift)));
  }
}

}  // TEST_SUITE
