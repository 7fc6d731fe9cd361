#pragma once

#include "catkit/reedy.hpp"

namespace catkit {

enum class DiagramVariant { Levelwise, Reedy };

/// Homotopical diagrams J -> C as a presentation: weak equivalences are
/// levelwise, cofibrations levelwise or Reedy. Object k is objects[k],
/// morphism m is morphisms[m].
struct DiagramCategory {
  CofibrationPresentation presentation;
  MarkedDirectCategory shape;
  DiagramVariant variant = DiagramVariant::Levelwise;
  std::vector<Diagram> objects;
  std::vector<NaturalTransformation> morphisms;

  std::optional<Obj> find(const Diagram& X) const;
  std::optional<Mor> find(const NaturalTransformation& t) const;
};

/// Homotopical diagrams in canonical functor order, optionally only the Reedy
/// cofibrant ones. Throws EnumerationLimitExceeded past `cap`.
std::vector<Diagram> homotopical_diagrams(const MarkedDirectCategory& J, const CofibrationPresentation& C,
                                          bool reedy_cofibrant, std::size_t cap = 20'000);

/// Throws EnumerationLimitExceeded when objects or morphisms exceed `cap`.
DiagramCategory diagram_cofcat(const CofibrationPresentation& C, const MarkedDirectCategory& J,
                               DiagramVariant variant, std::size_t cap = 20'000);

/// Natural transformations X -> Y in canonical order (components by shape
/// object, each by target hom order).
std::vector<NaturalTransformation> transformations(const Diagram& X, const Diagram& Y, std::size_t cap = 20'000);

/// Admissible component c : X(a) -> Y(a).
using ComponentFilter = std::function<bool(Obj a, Mor c)>;
/// First transformation whose components pass `filter`; each candidate
/// component costs one unit of budget.
std::optional<NaturalTransformation> find_transformation(const Diagram& X, const Diagram& Y,
                                                         const ComponentFilter& filter, Budget& budget);

/// The inclusion of Reedy cofibrant diagrams into all homotopical diagrams.
Functor diagram_inclusion(const DiagramCategory& reedy, const DiagramCategory& levelwise);

/// Precomposition with f : I -> J, from diagrams on J to diagrams on I.
/// Throws UnknownObject when a restricted diagram is not an object of DI.
Functor restriction(const Functor& f, const DiagramCategory& DJ, const DiagramCategory& DI);

/// "[a,b,c]" from the object values of a diagram.
std::string diagram_name(const Diagram& X);

}  // namespace catkit
