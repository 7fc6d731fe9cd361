#pragma once

#include <functional>

#include "catkit/simplicial_set.hpp"

namespace catkit {

struct MapSearchOptions {
  /// Per level and source simplex, a required image or kNone. May be empty.
  std::vector<std::vector<int>> fixed;
  /// Extra admissibility test on (level, source simplex, image).
  std::function<bool(int level, int x, int y)> filter;
};

struct MapSearchOutcome {
  SearchStatus status = SearchStatus::Complete;
  std::size_t visited = 0;
  /// Name of the deepest source simplex at which every candidate failed.
  std::string obstruction;
};

/// Visits simplicial maps B -> X in canonical order. Cells of B are assigned
/// vertex by vertex, each simplex as soon as its faces are known; degenerate
/// simplices are forced by the degeneracy maps.
MapSearchOutcome enumerate_maps(const SSetPtr& B, const SSetPtr& X, const MapSearchOptions& options, Budget& budget,
                                const std::function<bool(const SimplicialMap&)>& visit);
std::vector<SimplicialMap> all_maps(const SSetPtr& B, const SSetPtr& X, const MapSearchOptions& options = {},
                                    std::size_t cap = 20'000);
std::size_t count_maps(const SSetPtr& B, const SSetPtr& X, const MapSearchOptions& options = {});

/// left : A -> B, right : X -> Y, top : A -> X, bottom : B -> Y.
struct LiftingSquare {
  SimplicialMap left;
  SimplicialMap right;
  SimplicialMap top;
  SimplicialMap bottom;
};

std::optional<std::string> square_violation(const LiftingSquare& sq);
/// Options fixing h∘left = top and filtering right∘h = bottom.
MapSearchOptions lift_options(const LiftingSquare& sq);

struct LiftResult {
  Verdict verdict;
  std::optional<SimplicialMap> filler;
};

/// First filler in canonical order; Fails names the obstructing simplex.
LiftResult find_lift(const LiftingSquare& sq, Budget& budget);
LiftResult find_lift(const LiftingSquare& sq);
std::size_t count_lifts(const LiftingSquare& sq);

/// Right lifting against inner horns Λ[m,i] ⊂ Δ[m], 2 <= m <= d.
Verdict is_inner_fibration_upto(const SimplicialMap& p, int d, Budget& budget);
/// Inner fibration plus lifting against {0} ⊂ E[1] (E[1] truncated at the bound).
Verdict is_isofibration_upto(const SimplicialMap& p, int d, Budget& budget);
Verdict is_quasicategory_upto(const SSetPtr& K, int d, Budget& budget);

struct HornFillerCount {
  int m = 0;
  int i = 0;
  std::size_t horns = 0;          // maps Λ[m,i] -> K
  std::size_t min_fillers = 0;
  std::size_t max_fillers = 0;
};
/// Filler counts over every inner horn in K up to dimension d.
std::vector<HornFillerCount> inner_horn_filler_counts(const SSetPtr& K, int d);

}  // namespace catkit
