#pragma once

#include "qtoric/localgroup.hpp"

#include <map>

namespace qtoric {

// degree -> dimension; absent degrees are zero.
using BettiTable = std::map<Int, Int>;

// Exact rational degree -> dimension. Keys are lowest-terms rationals, so
// table keys are canonical and non-integer degrees appear exactly when the
// model has a vertex whose group is not inside SL(2,C).
using CRBettiTable = std::map<Rational, Int>;

// {0:1, 2:m-2, 4:1} for an m-edge model.
BettiTable singular_betti(const QuasitoricModel& model);

// Singular table plus one generator per twisted sector (v, g) at exact
// degree 2*age(g).
CRBettiTable cr_betti(const QuasitoricModel& model);

Int total_dimension(const BettiTable& table);
Int total_dimension(const CRBettiTable& table);

// Index count against a fixed direction nu: a vertex counts when both dual
// basis vectors of its edge pair have positive pairing with nu. Requires a
// manifold model (all vertex determinants 1); throws GenericityFailure when
// nu pairs to zero with some dual vector.
Int todd_genus_with_direction(const QuasitoricModel& model, const LatticeVector& nu);

// Same count with nu = (B, 1), B = 1 + max |dual coefficient|, retrying
// B+1, B+2, ... if a pairing degenerates (it cannot, but the retry keeps
// GenericityFailure from ever surfacing). Throws NotAManifoldError when some
// vertex determinant is not 1.
Int todd_genus(const QuasitoricModel& model);

}  // namespace qtoric
