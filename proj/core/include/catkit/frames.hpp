#pragma once

#include "catkit/bisimplicial_set.hpp"
#include "catkit/dbar.hpp"
#include "catkit/diagram_cofcat.hpp"

namespace catkit {

/// Nf C (or Mnf M) truncated: level m holds the diagrams on the m-th shape,
/// the simplex with index x being cells[m][x].
struct TruncatedFramesComplex {
  SSetPtr complex;
  std::vector<std::vector<Diagram>> cells;
  std::string source;
  int dim_bound = 0;
  int deg_bound = 0;  // for Mnf: s bound
  int t_bound = 0;    // Mnf only
};

/// D of a functor between thin categories, ([k], phi) |-> ([k], F phi).
Functor d_of_thin_functor(const Functor& F, const DCategory& A, const DCategory& B);

/// D[m] with the marking created by p, m <= dim_bound.
std::vector<DCategory> simplex_shapes(int dim_bound, int deg_bound);

/// Homotopical Reedy cofibrant diagrams D[m] -> C, degree <= deg_bound.
/// Throws EnumerationLimitExceeded past `cap` cells per level.
TruncatedFramesComplex nf_truncated(const CofibrationPresentation& C, int m_max, int deg_bound,
                                    std::size_t cap = 20'000);

/// The induced simplicial map Nf C -> Nf D of an exact functor.
SimplicialMap nf_of_functor(const Functor& F, const TruncatedFramesComplex& NC, const TruncatedFramesComplex& ND);

/// [m] x [n] with the marking (identity, anything); the hat is on [n].
MarkedCategory grid_shape(int m, int n);

/// Cells (m, n): homotopical Reedy cofibrant diagrams D([m] x [n^]) -> C.
struct BoldFrames {
  BiSSetPtr object;
  std::vector<std::vector<std::vector<Diagram>>> cells;  // [m][n]
  int deg_bound = 0;
};
BoldFrames bold_nf(const CofibrationPresentation& C, int m_max, int n_max, int deg_bound, std::size_t cap = 20'000);
/// Row 0 of bold Nf -> Nf, through D[m] ≅ D([m] x [0]). Throws BoundMismatch.
SimplicialMap bold_row_zero(const BoldFrames& B, const TruncatedFramesComplex& N);

/// Cells (m, n): homotopical functors [m] x [n^] -> C.
struct ClassificationDiagram {
  BiSSetPtr object;
  std::vector<std::vector<std::vector<Functor>>> cells;
  std::string source;
};
ClassificationDiagram classification_diagram(const MarkedCategory& C, int m_max, int n_max, std::size_t cap = 20'000);

/// Homotopical diagrams on the two-sided shape of [m] (s <= s_bound,
/// t <= t_bound) that are Reedy cofibrant and Reedy fibrant.
TruncatedFramesComplex mnf(const ModelPresentation& M, int m_max, int s_bound, int t_bound, std::size_t cap = 20'000);

struct FramesComparison {
  SimplicialMap map;
  /// Fails when some restriction is missing from the target.
  Verdict verdict;
};
/// Precomposition with i : D[m] -> D̄[m]. The target must be Nf of the
/// cofibrant part with deg_bound equal to the s bound; throws BoundMismatch.
FramesComparison istar_comparison(const TruncatedFramesComplex& mnf, const TruncatedFramesComplex& nf);

struct ElementsBijection {
  Verdict verdict;
  std::size_t simplicial_maps = 0;
  std::size_t diagrams = 0;
  /// For each diagram, the index of its simplicial map in canonical order.
  std::vector<std::size_t> assignment;
};
/// Simplicial maps K -> Nf C against homotopical Reedy cofibrant diagrams
/// DK -> C, related by restriction along the elements of K.
ElementsBijection elements_bijection_check(const SSetPtr& K, const CofibrationPresentation& C, int deg_bound,
                                    std::size_t cap = 20'000);

/// The functor D[m] -> DK of the m-simplex x of K.
Functor simplex_functor(const DCategory& Dm, const ElementCategory& DK, int m, int x);

}  // namespace catkit
