#pragma once

#include "catkit/algorithms.hpp"

namespace catkit {

/// A diagram is a functor from a finite shape into a finite category.
using Diagram = Functor;

struct Cocone {
  Obj apex = kNone;
  std::vector<Mor> legs;  // one per shape object
};

/// Legs commute with every morphism of the shape.
bool is_cocone(const Diagram& X, const Cocone& c);
bool is_cone(const Diagram& X, const Cocone& c);

/// Every cocone over X, in canonical order (apex, then legs).
std::vector<Cocone> all_cocones(const Diagram& X);

/// The morphism u with u∘colim.legs[i] == other.legs[i] for all i, when it
/// exists uniquely.
std::optional<Mor> factor_cocone(const Diagram& X, const Cocone& colim, const Cocone& other);

/// A universal cocone, or nullopt when the target lacks this colimit. Thin
/// targets take a join-style fast path.
std::optional<Cocone> find_colimit(const Diagram& X);
/// Same, throwing NoColimit.
Cocone colimit(const Diagram& X);
/// Slow reference path by exhaustive cocone enumeration.
std::optional<Cocone> find_colimit_exhaustive(const Diagram& X);

/// A universal cone (legs point from the apex into the diagram).
std::optional<Cocone> find_limit(const Diagram& X);
Cocone limit(const Diagram& X);

struct KanExtension {
  Diagram extension;              // J -> C
  std::vector<Mor> unit;          // X_i -> Lan(F(i)), per object of I
  std::vector<Cocone> colimits;   // the colimit used at each j, over F↓j
};

/// Pointwise left Kan extension of X : I -> C along F : I -> J. Throws
/// NoColimit naming the object of J where a colimit is missing.
KanExtension pointwise_lan(const Functor& F, const Diagram& X);

}  // namespace catkit
