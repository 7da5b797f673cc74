#pragma once

#include "qtoric/lattice.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace qtoric {

// The combinatorial model: a cyclic list of characteristic vectors, one per
// polygon edge, stored in clockwise order. No polygon geometry is kept; two
// models are equal iff their edge lists are.
//
// The stored order *is* the clockwise order. Reversing the list flips the
// orientation and is a different model.
struct QuasitoricModel {
  std::vector<LatticeVector> edges;

  std::size_t size() const { return edges.size(); }

  friend bool operator==(const QuasitoricModel&, const QuasitoricModel&) = default;
};

// Vertex i sits between edges i and i+1 (mod m).
struct Vertex {
  std::size_t index = 0;
  LatticeVector first;
  LatticeVector second;
  Int det;  // det2(first, second)
};

Vertex make_vertex(LatticeVector first, LatticeVector second, std::size_t index = 0);

struct ValidationFinding {
  enum class Kind { too_few_edges, non_primitive_edge, dependent_adjacent_pair };
  Kind kind;
  std::size_t index = 0;  // edge index (non_primitive_edge) or vertex index; meaningless for too_few_edges
  std::string detail;
};

struct ValidationReport {
  bool valid = false;
  bool positively_omnioriented = false;
  std::vector<ValidationFinding> failures;
};

struct ValidationError : Error {
  ValidationReport report;
  explicit ValidationError(ValidationReport r);
};

// Checks edge count, primitivity and cyclic adjacent independence; findings
// are reported, never thrown. positively_omnioriented holds when every
// adjacent pair has positive determinant under the clockwise listing.
ValidationReport validate(const QuasitoricModel& model);

// The m vertices in index order. Expects a valid model.
std::vector<Vertex> vertices(const QuasitoricModel& model);

// Structural parse of {"edges": [[x,y], ...]}; throws ParseError only.
// Unknown object keys are ignored so enriched CLI outputs stay readable.
// Entries may be JSON integers or decimal strings (for values beyond 64 bits).
QuasitoricModel model_from_json_text(const std::string& text);

// model_from_json_text + validate; throws ValidationError when invalid.
QuasitoricModel parse_model(const std::string& text);

// Canonical bytes: {"edges":[[x,y],...]} with minimal whitespace, stored
// order, entries as JSON integers when they fit in 64 bits, else strings.
std::string serialize_model(const QuasitoricModel& model);

void require_valid(const QuasitoricModel& model);                   // throws ValidationError
void require_positively_omnioriented(const QuasitoricModel& model); // throws ValidationError

}  // namespace qtoric
