#pragma once

#include "qtoric/model.hpp"

#include <cstddef>
#include <vector>

namespace qtoric {

// One element g = a1*first + a2*second of the local group at a vertex,
// with the rotation weights of its action on the chart.
//
// Note the swap: a2 rotates the first chart coordinate and a1 the second.
// Getting this backwards breaks singularity_type (the SL test is symmetric
// and would not notice).
struct LocalGroupElement {
  Rational a1;       // canonical representative in [0,1)
  Rational a2;       // canonical representative in [0,1)
  Rational weight1;  // frac(a2)
  Rational weight2;  // frac(a1)
  Rational age;      // weight1 + weight2; in (0,2) for nontrivial elements

  bool is_identity() const { return a1 == 0 && a2 == 0; }
};

struct LocalGroup {
  Vertex vertex;
  Int order;  // |det2(first, second)|
  std::vector<LocalGroupElement> elements;  // sorted by (a1, a2); identity first
};

// Cyclic quotient normal form 1/d (1, q): the generator rotating the first
// coordinate by 1/d rotates the second by q/d.
struct SingularityType {
  Int d;
  Int q;

  friend bool operator==(const SingularityType&, const SingularityType&) = default;
};

// Enumerates all d^2 candidate coefficient pairs (i/d, j/d) and keeps those
// with a1*first + a2*second integral; exactly d survive. The exhaustive grid
// is deliberate: it doubles as the independent oracle for everything built
// on top of it.
LocalGroup local_group(const Vertex& vertex);

// True iff a1 + a2 is an integer for every element; equivalently every
// nontrivial element has age exactly 1.
bool is_SL(const Vertex& vertex);

SingularityType singularity_type(const Vertex& vertex);

struct TwistedSector {
  std::size_t vertex_index;
  LocalGroupElement element;  // nontrivial
};

// All (vertex, nontrivial element) pairs, ordered by vertex index then by
// lexicographic (a1, a2).
std::vector<TwistedSector> twisted_sectors(const QuasitoricModel& model);

}  // namespace qtoric
