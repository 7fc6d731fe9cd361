#pragma once

#include "catkit/category.hpp"

namespace catkit {

/// A category together with a functor into another one (inclusion,
/// projection, canonical functor).
struct CategoryOver {
  CatPtr category;
  Functor functor;
};

/// Full subcategory on `objects`, in the given order. Names are kept.
CategoryOver full_subcategory(const CatPtr& C, const std::vector<Obj>& objects);
/// Subcategory containing exactly the marked morphisms (all objects).
CategoryOver wide_subcategory(const Marking& m);
CatPtr opposite(const CatPtr& C);
/// Objects "(a,b)", morphisms "(f,g)"; also returns both projections.
struct ProductCategory {
  CatPtr category;
  Functor first;
  Functor second;
};
ProductCategory product(const CatPtr& A, const CatPtr& B);
/// The discrete category with no objects.
CatPtr empty_category();
CatPtr terminal_category();

/// Slice C↓j: objects are morphisms into j, named after them. The functor is
/// the projection to domains.
CategoryOver slice_category(const CatPtr& C, Obj j);
/// Slice minus the identity of j. Requires C to be direct under `degree`.
CategoryOver latching_category(const CatPtr& C, const DegreeFunction& degree, Obj j);
/// Coslice j↓C minus the identity of j (the matching category of an inverse part).
CategoryOver matching_category(const CatPtr& C, const DegreeFunction& degree, Obj j);
/// Comma F↓j: objects (i, u : F(i) -> j); functor to the source of F.
CategoryOver comma_over(const Functor& F, Obj j);
/// Comma j↓F: objects (i, u : j -> F(i)).
CategoryOver comma_under(const Functor& F, Obj j);

Verdict is_sieve(const Functor& F);
Verdict is_cosieve(const Functor& F);
/// Nonempty connected b↓F for every object b of the target.
Verdict is_cofinal(const Functor& F);
/// Number of connected components of a finite category.
std::size_t connected_components(const FiniteCategory& C);

struct DegreeResult {
  Verdict verdict;
  DegreeFunction degree;
};
/// Longest-path degrees; Fails with a cycle witness when C is not direct.
DegreeResult assign_degrees(const CatPtr& C);
/// Non-identity morphisms strictly raise `degree`.
Verdict check_direct(const FiniteCategory& C, const DegreeFunction& degree);

/// Least wide marking containing `seed`, closed under composition and 2-out-of-6.
Marking two_out_of_six_closure(const CatPtr& C, const std::vector<Mor>& seed);
/// First composable triple violating 2-out-of-6, if any.
std::optional<std::string> two_out_of_six_violation(const Marking& m);

/// Faces direct, degeneracies inverse, unique degeneracy-then-face factorization.
Verdict check_reedy_structure(const ReedyStructure& R);
/// Faces to faces with a sieve on face parts, degeneracies to degeneracies with
/// a cosieve on degeneracy parts.
Verdict is_bisieve(const Functor& F, const ReedyStructure& source, const ReedyStructure& target);

/// The face operator / degeneracy operator pair of a morphism in a Reedy category.
std::optional<std::pair<Mor, Mor>> reedy_factorization(const ReedyStructure& R, Mor f);

}  // namespace catkit
