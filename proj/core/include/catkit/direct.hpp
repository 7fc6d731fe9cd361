#pragma once

#include "catkit/algorithms.hpp"
#include "catkit/simplicial_set.hpp"

namespace catkit {

/// A category of simplices: objects are simplices of some K up to a degree
/// bound, a morphism x -> y is an injective operator delta with y.delta = x.
/// Objects carry their simplex and degree; morphisms their operator.
struct ElementCategory {
  MarkedDirectCategory direct;
  SSetPtr simplices;                  // K, the source of the objects
  std::vector<int> simplex;           // object -> simplex index at its degree
  std::vector<std::vector<int>> op;   // morphism -> operator values
  std::vector<std::vector<Obj>> by_level;  // level k simplex -> object

  const CatPtr& category() const { return direct.category; }
  Obj object_of(int level, int x) const { return by_level[level][x]; }
  /// The morphism with operator `delta` into `target`.
  Mor morphism(const std::vector<int>& delta, Obj target) const;
};

/// DJ with the marking created by p, which sends ([k], phi) to phi(k).
struct DCategory {
  ElementCategory elements;  // over N J
  Functor p;
};

/// D of a marked category truncated at `deg_bound`. For thin J objects are
/// named by their value lists, e.g. "(0,1,1)"; otherwise by nerve names.
DCategory d_of_category(const MarkedCategory& J, int deg_bound);

/// Which morphisms count as induced by degenerate 1-simplices.
enum class DegenerateSeed {
  /// delta : x -> y whose edge of y from vertex delta(k) to its last vertex
  /// is degenerate.
  LastEdge,
  /// Only the two morphisms from each vertex v into s0 v.
  VertexEdge,
};

/// D of a simplicial set; the marking is the 2-out-of-6 closure of the seed.
/// Morphisms are named "[delta]>target".
ElementCategory d_of_sset(const SSetPtr& K, int deg_bound, DegenerateSeed seed = DegenerateSeed::LastEdge);

/// The functor DK -> DL induced by f : K -> L.
Functor d_of_map(const SimplicialMap& f, const ElementCategory& DK, const ElementCategory& DL);
/// The functor D[m] -> D[n] induced by a monotone theta : [m] -> [n].
Functor d_of_monotone(const std::vector<int>& theta, const DCategory& Dm, const DCategory& Dn);

/// Sd P: nonempty chains under inclusion, a full subcategory of DP. The
/// marking is created by max.
struct Subdivision {
  MarkedDirectCategory direct;
  Functor max;
  Functor inclusion;  // into d.elements.category()
  DCategory d;        // DP with minimal marking, truncated at the height of P
};
Subdivision sd_poset(const Poset& P);

/// D(boundary of Delta[n]) with every morphism marked.
MarkedDirectCategory d_hat_boundary(int n, int deg_bound);

/// The simplicial map N C -> N D of a functor.
SimplicialMap nerve_of_functor(const Functor& F, const SSetPtr& NC, const SSetPtr& ND);
/// N[n] -> Delta[n], matching chains with vertex lists.
SimplicialMap nerve_to_simplex(const SSetPtr& Nn, const SSetPtr& simplex);

}  // namespace catkit
