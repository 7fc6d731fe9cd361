#pragma once

#include "catkit/diagram_cofcat.hpp"
#include "catkit/direct.hpp"

namespace catkit {

/// The Reedy structure on I created by an inclusion I -> J.
ReedyStructure restricted_structure(const Functor& incl, const ReedyStructure& J);

// Extension to a Reedy cofibrant replacement ---------------------------------

struct ReedyExtension {
  Verdict verdict;
  std::optional<Diagram> replacement;               // agrees with X on I
  std::optional<NaturalTransformation> comparison;  // replacement -> X, identity on I
};

/// Bounded search for a homotopical Reedy cofibrant X' with X'|I = X|I and a
/// levelwise weak equivalence X' -> X restricting to identities on I.
/// Throws PreconditionViolated unless `sieve` is a sieve and X|I is Reedy
/// cofibrant.
ReedyExtension extend_reedy(const Diagram& X, const Functor& sieve, const MarkedDirectCategory& J,
                            const CofibrationPresentation& C, Budget& budget);

// Reedy lifting against sieves ------------------------------------------------

/// The square  I --top--> C
///             |          | P
///             J -bottom-> D
struct ReedyLiftingProblem {
  Functor sieve;
  MarkedDirectCategory J;
  Functor P;
  CofibrationPresentation C;
  Diagram top;
  Diagram bottom;
};

struct ReedyLift {
  Verdict verdict;
  std::optional<Diagram> diagonal;
};

/// First homotopical Reedy cofibrant Z : J -> C with Z|I = top and PZ =
/// bottom in canonical functor order.
ReedyLift reedy_lifting(const ReedyLiftingProblem& problem, Budget& budget);

// Extension of factorizations along bisieves ---------------------------------

/// X|I -first-> middle -second-> Y|I.
struct PartialFactorization {
  Diagram middle;
  NaturalTransformation first;
  NaturalTransformation second;
};

struct BisieveLift {
  std::optional<PartialFactorization> factorization;
  /// "functor", "middle Reedy cofibrant", "left leg weak equivalence",
  /// "right leg Reedy fibration", "restriction".
  CheckReport report;
};

/// Extends a factorization of f|I to all of J, one object at a time in order
/// of degree: the corner from the latching pushout to the matching pullback
/// is factored with M's acyclic-cofibration/fibration table. Throws
/// PreconditionViolated, NoColimit or FactorizationMissing.
BisieveLift bisieve_lift(const ModelPresentation& M, const ReedyShape& J, const Functor& incl,
                         const NaturalTransformation& f, const PartialFactorization& given);

/// The certification step of bisieve_lift on its own.
CheckReport certify_factorization(const ModelPresentation& M, const ReedyShape& J, const NaturalTransformation& f,
                                  const PartialFactorization& h);

// Exactness criterion ---------------------------------------------------------

/// For an object i of I, the morphisms into f(i) (objects of its latching
/// category) making up K.
using LatchingCandidate = std::function<std::vector<Mor>(Obj i)>;

struct CriterionStep {
  Obj i = kNone;
  CategoryOver source_latching;  // of I at i
  CategoryOver K;                // full in the latching category of J at f(i)
  std::optional<Functor> into_K;
  Verdict cofinal;
  Verdict sieve;
};

struct CriterionResult {
  Verdict verdict;
  std::vector<CriterionStep> steps;
};

/// Checks, for each i, that the latching category of i maps into K
/// cofinally and that K sits in the latching category of f(i) as a sieve.
CriterionResult exactness_criterion_check(const Functor& f, const DegreeFunction& source_degree,
                                          const DegreeFunction& target_degree, const LatchingCandidate& K);

struct CriterionInstance {
  std::string name;
  Functor f;
  DegreeFunction source_degree;
  DegreeFunction target_degree;
  LatchingCandidate candidate;
};

/// max^{-1}{p} -> Sd P with K the chains B below some C ⊊ A with max C = p.
CriterionInstance max_fiber_instance(const Poset& P, int p);
/// D([k] x [m]) -> D[k] x D[m] (both factors truncated at deg_bound, the
/// source at deg_bound as well) with K the pairs A x B, A ∪ B ≠ [l].
CriterionInstance product_instance(int k, int m, int deg_bound);

/// Underlying value list of an object of D of a thin category.
std::vector<Obj> d_values(const ElementCategory& E, Obj x);

}  // namespace catkit
