#pragma once

#include <functional>

#include "catkit/category.hpp"

namespace catkit {

struct FunctorSearchOptions {
  /// Per source object, a required image or kNone.
  std::vector<Obj> fixed_objects;
  /// Per source morphism, a required image or kNone.
  std::vector<Mor> fixed_morphisms;
  std::function<bool(Obj source_object, Obj image)> object_filter;
  std::function<bool(Mor source_morphism, Mor image)> morphism_filter;
};

/// Visits every functor S -> T satisfying the options, in canonical order
/// (objects by index, each followed by the morphisms it completes). The
/// visitor returns false to stop. Every candidate image tried costs one unit
/// of budget.
SearchStatus enumerate_functors(const CatPtr& S, const CatPtr& T, const FunctorSearchOptions& options,
                                Budget& budget, const std::function<bool(const Functor&)>& visit);

/// All functors, throwing EnumerationLimitExceeded past `cap`.
std::vector<Functor> all_functors(const CatPtr& S, const CatPtr& T, const FunctorSearchOptions& options = {},
                                  std::size_t cap = 20'000);

std::size_t count_functors(const CatPtr& S, const CatPtr& T, const FunctorSearchOptions& options = {});

}  // namespace catkit
