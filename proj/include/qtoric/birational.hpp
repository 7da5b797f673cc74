#pragma once

#include "qtoric/cohomology.hpp"

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace qtoric {

enum class SmoothSide { first, second };

const char* to_string(SmoothSide side);

// An admissible edge deletion. lambda2 = edges[edge_index]; lambda1 precedes
// and lambda3 follows it clockwise. One endpoint of the edge must be a smooth
// vertex:
//   smooth_side == first:  det2(lambda1,lambda2) == 1, k = det2(lambda2,lambda3)
//   smooth_side == second: det2(lambda2,lambda3) == 1, k = det2(lambda1,lambda2)
// and in both cases m = det2(lambda1,lambda3) with 0 < k <= m. The deleted
// sphere contracts to a vertex with local group of order m.
struct BlowdownSite {
  std::size_t edge_index = 0;
  LatticeVector lambda1;
  LatticeVector lambda2;
  LatticeVector lambda3;
  SmoothSide smooth_side = SmoothSide::first;
  Int k;
  Int m;
};

struct NotAdmissibleError : Error {
  enum class Reason { no_smooth_endpoint, neighbors_dependent, inequality_fails };
  Reason reason;
  NotAdmissibleError(Reason r, const std::string& msg);
};

const char* to_string(NotAdmissibleError::Reason reason);

// Builds the site for deleting the given edge, preferring smooth_side ==
// first when both endpoints qualify. Requires a valid, positively
// omnioriented model with at least 4 edges.
BlowdownSite blowdown_site(const QuasitoricModel& model, std::size_t edge_index);

// Deletes the site's edge. Admissibility was checked at site construction;
// the result is valid and positively omnioriented.
QuasitoricModel blowdown(const QuasitoricModel& model, const BlowdownSite& site);

// k + 1 == m; equivalently det2(l1,l3) == det2(l1,l2) + det2(l2,l3). A
// crepant deletion preserves the canonical sheaf, and with it the whole
// Chen-Ruan Betti table (mckay_check verifies the latter directly).
bool is_crepant(const BlowdownSite& site);

struct BlowupResult {
  QuasitoricModel model;
  LatticeVector inserted;
};

// Inserts a new edge vector between edges vertex_index and vertex_index+1.
// For side == first the insertion is unimodular against lambda1 and its
// determinant against lambda3 lands in [1, m]; both conditions pin it
// uniquely. Mirrored for side == second. Deleting the created site restores
// the input exactly.
BlowupResult blowup(const QuasitoricModel& model, std::size_t vertex_index, SmoothSide side);

// The insertion (side first preferred, then second) whose site satisfies
// k + 1 == m, if either does. Present exactly when the vertex has
// singularity type (m, m-1) with m > 1.
std::optional<BlowupResult> crepant_blowup(const QuasitoricModel& model, std::size_t vertex_index);

struct ResolutionResult {
  QuasitoricModel model;
  std::vector<LatticeVector> inserted;  // in insertion order
};

// Repeats side-first blowups at the singular vertex descended from
// vertex_index until its determinant is 1. Terminates: each step replaces
// determinant m > 1 by (1, k) with k <= m-1.
ResolutionResult resolve_vertex(const QuasitoricModel& model, std::size_t vertex_index);

struct McKayReport {
  CRBettiTable table_x;
  CRBettiTable table_y;
  bool equal = false;
  std::map<Rational, Int> degreewise_diff;  // dim_x - dim_y, nonzero entries only
  Int total_diff;                           // total dim_x - total dim_y
};

// Degree-by-degree comparison of the two Chen-Ruan tables.
McKayReport mckay_check(const QuasitoricModel& model_x, const QuasitoricModel& model_y);

}  // namespace qtoric
