#include "qtoric/localgroup.hpp"

#include <cassert>

namespace qtoric {

namespace {

Int mod(const Int& a, const Int& d) { return a - d * floor_div(a, d); }

}  // namespace

LocalGroup local_group(const Vertex& vertex) {
  const Int d = abs(vertex.det);
  if (d == 0) {
    throw DomainError("local_group: vertex " + to_string(vertex.first) + ", " +
                      to_string(vertex.second) + " has dependent vectors");
  }
  // (i/d)*first + (j/d)*second is integral iff i*first + j*second == 0 mod d
  // componentwise; reducing the vectors once keeps the grid arithmetic small.
  const Int fx = mod(vertex.first.x, d), fy = mod(vertex.first.y, d);
  const Int sx = mod(vertex.second.x, d), sy = mod(vertex.second.y, d);
  LocalGroup group;
  group.vertex = vertex;
  group.order = d;
  for (Int i = 0; i < d; ++i) {
    for (Int j = 0; j < d; ++j) {
      if (mod(i * fx + j * sx, d) != 0 || mod(i * fy + j * sy, d) != 0) {
        continue;
      }
      LocalGroupElement g;
      g.a1 = Rational(i, d);
      g.a2 = Rational(j, d);
      g.weight1 = g.a2;  // a2 rotates the first coordinate
      g.weight2 = g.a1;
      g.age = g.a1 + g.a2;
      group.elements.push_back(std::move(g));
    }
  }
  assert(Int(group.elements.size()) == d);
  return group;
}

bool is_SL(const Vertex& vertex) {
  const LocalGroup group = local_group(vertex);
  for (const LocalGroupElement& g : group.elements) {
    if (!is_integer(g.age)) {
      return false;
    }
  }
  return true;
}

SingularityType singularity_type(const Vertex& vertex) {
  const LocalGroup group = local_group(vertex);
  if (group.order == 1) {
    return {1, 0};
  }
  const Rational generator_weight(1, group.order);
  for (const LocalGroupElement& g : group.elements) {
    if (g.weight1 == generator_weight) {
      const Rational q = g.weight2 * group.order;
      assert(is_integer(q));
      return {group.order, numerator(q)};
    }
  }
  // Unreachable: with primitive vectors each residue j/d occurs exactly once.
  throw DomainError("singularity_type: no generator found");
}

std::vector<TwistedSector> twisted_sectors(const QuasitoricModel& model) {
  require_valid(model);
  std::vector<TwistedSector> sectors;
  for (const Vertex& v : vertices(model)) {
    for (const LocalGroupElement& g : local_group(v).elements) {
      if (!g.is_identity()) {
        sectors.push_back({v.index, g});
      }
    }
  }
  return sectors;
}

}  // namespace qtoric
