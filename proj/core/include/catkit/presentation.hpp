#pragma once

#include "catkit/colimits.hpp"
#include "catkit/text_format.hpp"

namespace catkit {

/// A finite category with cofibrations, weak equivalences and a chosen
/// initial object.
struct CofibrationPresentation {
  CatPtr category;
  Marking cof;
  Marking we;
  Obj initial = kNone;
  std::string provenance;
};

/// f = second ∘ first.
struct Factorization {
  Mor first = kNone;
  Mor second = kNone;
};

using FactorizationTable = std::vector<std::optional<Factorization>>;

/// A cofibration presentation with fibrations, a terminal object and chosen
/// factorizations. `acyclic_cof_fib` factors f as an acyclic cofibration
/// followed by a fibration, `cof_acyclic_fib` as a cofibration followed by an
/// acyclic fibration.
struct ModelPresentation {
  CofibrationPresentation base;
  Marking fib;
  Obj terminal = kNone;
  FactorizationTable acyclic_cof_fib;
  FactorizationTable cof_acyclic_fib;

  const CatPtr& category() const { return base.category; }
};

// Pushouts and pullbacks ------------------------------------------------------

/// The span B <-f- A -g-> C (objects a, b, c) or the cospan B -f-> D <-g- C
/// (objects d, b, c) as a diagram in C.
Diagram span_diagram(const CatPtr& C, Mor f, Mor g);
Diagram cospan_diagram(const CatPtr& C, Mor f, Mor g);
/// The morphism u into the apex of a universal cone with lim.legs[i]∘u ==
/// other.legs[i], when unique.
std::optional<Mor> factor_cone(const Diagram& X, const Cocone& lim, const Cocone& other);

/// Pushout of B <-f- A -g-> C. Legs are indexed A, B, C.
std::optional<Cocone> pushout(const CatPtr& C, Mor f, Mor g);
/// Pullback of B -f-> D <-g- C. Legs (from the apex) are indexed D, B, C.
std::optional<Cocone> pullback(const CatPtr& C, Mor f, Mor g);
/// An object with exactly one morphism to (from) every object.
std::optional<Obj> find_initial(const FiniteCategory& C);
std::optional<Obj> find_terminal(const FiniteCategory& C);
bool is_initial(const FiniteCategory& C, Obj a);
bool is_terminal(const FiniteCategory& C, Obj a);

/// Sends every marked morphism of the source to a marked morphism.
bool is_homotopical(const Functor& F, const Marking& source_we, const Marking& target_we);

// Axioms ---------------------------------------------------------------------

/// One entry per axiom: "markings", "2-out-of-6", "isomorphisms",
/// "pushouts", "initial", "factorization".
CheckReport check_cofibration_axioms(const CofibrationPresentation& P);
/// The cofibration axioms followed by "fibrations", "pullbacks", "terminal",
/// "factorization tables", "lifting" and "closedness".
CheckReport check_model_axioms(const ModelPresentation& M);

/// First commutative square (l, r, u, v) without a diagonal, as text.
std::optional<std::string> lifting_violation(const FiniteCategory& C, Mor l, Mor r);

enum class WeMode { Identities, All };

/// cof = all morphisms; initial = bottom. Throws NotALattice.
CofibrationPresentation lattice_cofcat(const Poset& L, WeMode mode);
/// For we = identities: fib = all, for we = all: fib = identities. Tables are
/// the trivial factorizations through f itself.
ModelPresentation lattice_model(const Poset& L, WeMode mode);

/// Fills absent table entries with the first valid factorization in
/// canonical order. Returns the number of entries still missing.
std::size_t fill_factorizations(ModelPresentation& M);

struct ProductPresentation {
  CofibrationPresentation presentation;
  Functor first;
  Functor second;
};
/// Componentwise markings; initial object (0, 0).
ProductPresentation product_presentation(const CofibrationPresentation& P, const CofibrationPresentation& Q);

// Text -----------------------------------------------------------------------

// Presentation files extend the category format:
//   cof:  we:  fib:         marking sections (names, `all`, `identities`)
//   initial:  terminal:     one object name; found automatically if absent
//   factor:                 acof f = p * i    (i acyclic cofibration, p fibration)
//                           afib f = p * i    (i cofibration, p acyclic fibration)
//                           auto              (fill the rest by search)
CofibrationPresentation presentation_from_document(const TextDocument& doc);
CofibrationPresentation parse_presentation(std::string_view text);
ModelPresentation model_from_document(const TextDocument& doc);
ModelPresentation parse_model(std::string_view text);
std::string format_presentation(const CofibrationPresentation& P);
std::string format_model(const ModelPresentation& M);

// Functors between presentations --------------------------------------------

/// "cofibrations", "acyclic cofibrations", "pushouts", "initial".
CheckReport exactness_report(const Functor& F, const CofibrationPresentation& P, const CofibrationPresentation& Q);
Verdict is_exact(const Functor& F, const CofibrationPresentation& P, const CofibrationPresentation& Q);

struct ApproximationResult {
  Verdict app1;
  Verdict app2;
};
/// App1: F reflects weak equivalences. App2: every f : FA -> Y sits in a
/// square FA -Fi-> FB -~-> Z <-~- Y.
ApproximationResult approximation_check(const Functor& F, const CofibrationPresentation& P,
                                        const CofibrationPresentation& Q, Budget& budget);
ApproximationResult approximation_check(const Functor& F, const CofibrationPresentation& P,
                                        const CofibrationPresentation& Q, std::uint64_t budget = kDefaultBudget);

/// "isofibration", "factorization lift", "square lift".
CheckReport is_fibration_of_cofcats(const Functor& F, const CofibrationPresentation& P,
                                    const CofibrationPresentation& Q, std::uint64_t budget = kDefaultBudget);

}  // namespace catkit
