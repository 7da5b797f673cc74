#include "qtoric/cohomology.hpp"

#include <array>

namespace qtoric {

BettiTable singular_betti(const QuasitoricModel& model) {
  require_valid(model);
  return {{0, 1}, {2, Int(model.size()) - 2}, {4, 1}};
}

CRBettiTable cr_betti(const QuasitoricModel& model) {
  CRBettiTable table;
  for (const auto& [degree, dim] : singular_betti(model)) {
    table[Rational(degree)] = dim;
  }
  for (const TwistedSector& sector : twisted_sectors(model)) {
    table[2 * sector.element.age] += 1;
  }
  return table;
}

Int total_dimension(const BettiTable& table) {
  Int total = 0;
  for (const auto& [degree, dim] : table) {
    total += dim;
  }
  return total;
}

Int total_dimension(const CRBettiTable& table) {
  Int total = 0;
  for (const auto& [degree, dim] : table) {
    total += dim;
  }
  return total;
}

namespace {

// Dual basis of a unimodular clockwise pair: mu_a pairs to 1 with edge a of
// the vertex and to 0 with the other.
std::array<LatticeVector, 2> dual_basis(const Vertex& v) {
  return {LatticeVector{v.second.y, -v.second.x}, LatticeVector{-v.first.y, v.first.x}};
}

Int pairing(const LatticeVector& mu, const LatticeVector& nu) {
  return mu.x * nu.x + mu.y * nu.y;
}

}  // namespace

Int todd_genus_with_direction(const QuasitoricModel& model, const LatticeVector& nu) {
  require_valid(model);
  Int count = 0;
  for (const Vertex& v : vertices(model)) {
    if (v.det != 1) {
      throw NotAManifoldError("todd_genus: vertex " + std::to_string(v.index) +
                              " has determinant " + to_string(v.det) + ", expected 1");
    }
    bool all_positive = true;
    for (const LatticeVector& mu : dual_basis(v)) {
      const Int p = pairing(mu, nu);
      if (p == 0) {
        throw GenericityFailure("todd_genus: direction " + to_string(nu) +
                                " pairs to zero at vertex " + std::to_string(v.index));
      }
      all_positive = all_positive && p > 0;
    }
    if (all_positive) {
      ++count;
    }
  }
  return count;
}

Int todd_genus(const QuasitoricModel& model) {
  require_valid(model);
  Int bound = 0;
  for (const Vertex& v : vertices(model)) {
    if (v.det != 1) {
      throw NotAManifoldError("todd_genus: vertex " + std::to_string(v.index) +
                              " has determinant " + to_string(v.det) + ", expected 1");
    }
    for (const LatticeVector& mu : dual_basis(v)) {
      bound = max(bound, max(abs(mu.x), abs(mu.y)));
    }
  }
  for (Int b = bound + 1;; ++b) {
    try {
      return todd_genus_with_direction(model, {b, 1});
    } catch (const GenericityFailure&) {
      // (B, 1) with B above every dual coefficient cannot pair to zero, but
      // the retry keeps the failure from ever escaping.
      continue;
    }
  }
}

}  // namespace qtoric
