#pragma once

#include "catkit/bisimplicial_set.hpp"
#include "catkit/lifting.hpp"

namespace catkit {

struct HomotopyResult {
  Verdict verdict;
  /// H : K x E[1] -> X, restricting to f at 0 and g at 1.
  std::optional<SimplicialMap> homotopy;
};

/// Searches an E[1]-homotopy from f to g, constant on the image of `rel`
/// when given. E[1] is truncated at the common bound, so Fails is relative
/// to that bound.
HomotopyResult e1_homotopy(const SimplicialMap& f, const SimplicialMap& g, const std::optional<SimplicialMap>& rel,
                           Budget& budget);
Verdict e1_homotopic(const SimplicialMap& f, const SimplicialMap& g, const std::optional<SimplicialMap>& rel,
                     Budget& budget);

struct RelativeFiller {
  Verdict verdict;
  /// w : B -> X with w o left = top.
  std::optional<SimplicialMap> filler;
  /// From right o w to bottom, relative to A.
  std::optional<SimplicialMap> homotopy;
};

/// Given left : A -> B, right f : X -> Y, top u, bottom v with f u = v left,
/// looks for w extending u and a homotopy f w ~ v rel A.
RelativeFiller find_relative_filler(const LiftingSquare& sq, Budget& budget);

/// Levelwise sets of compatible tuples of vertical faces (n >= 1), a
/// simplicial set in the horizontal direction, and the matching map from the
/// n-th row.
struct MatchingRow {
  SSetPtr object;
  SimplicialMap map;
};
MatchingRow matching_row(const TruncatedBisimplicialSet& W, int n);

/// (a) each row-to-matching map is an inner isofibration up to the bound;
/// (b) each face and degeneracy operator between rows has an E[1]-homotopy
/// inverse found within the budget. Each check gets its own budget of
/// `budget_per_check` candidates; (b) never Fails, only Unknown.
CheckReport css_frame_check(const TruncatedBisimplicialSet& W, std::uint64_t budget_per_check = kDefaultBudget);

/// Simplices all of whose edges extend along {0,1} -> E[1]. Edges whose
/// search runs out of budget are left out and counted in `undecided`.
struct CoreApproximation {
  SubObject core;
  std::size_t undecided = 0;
};
CoreApproximation core_approximation(const SSetPtr& K, Budget& budget);

}  // namespace catkit
