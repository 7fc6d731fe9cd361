#pragma once

#include "catkit/direct.hpp"

namespace catkit {

/// An object x : [s] x [t] -> J of the two-sided category, stored row-major:
/// values[a * (t + 1) + b] = x(a, b).
struct Grid {
  int s = 0;
  int t = 0;
  std::vector<Obj> values;
  Obj at(int a, int b) const { return values[static_cast<std::size_t>(a) * (t + 1) + b]; }
};

/// Morphism (phi : [s] -> [s'], psi : [t'] -> [t]) from x to x' with
/// x(id, psi) = x'(phi, id).
struct GridMorphism {
  std::vector<int> phi;
  std::vector<int> psi;
};

/// Two-sided category on functors [s] x [t] -> J, s <= s_max, t <= t_max.
/// Faces are the morphisms with psi = id, degeneracies those with phi = id;
/// the degree of x is s + t. Weak equivalences are created by evaluation at
/// (s, 0). J must be thin.
struct DbarCategory {
  CatPtr category;
  Marking we;
  ReedyStructure reedy;
  Functor evaluation;
  int s_max = 0;
  int t_max = 0;
  std::vector<Grid> grids;
  std::vector<GridMorphism> ops;

  std::optional<Obj> find(const Grid& x) const;
  std::optional<Mor> find(const GridMorphism& op, Obj source, Obj target) const;
};

DbarCategory dbar(const MarkedCategory& J, int s_max, int t_max);
/// "(0,1|1,1)": rows are a, entries within a row are b.
std::string grid_name(const FiniteCategory& J, const Grid& x);

/// Restriction of a two-sided category to some of its objects.
struct DbarSub {
  DbarCategory sub;
  Functor inclusion;
};
DbarSub dbar_full_subcategory(const DbarCategory& D, const std::vector<Obj>& objects);
/// The full subcategory on non-surjective functors into [m], and its inclusion.
DbarSub dbar_boundary(int m, int s_max, int t_max);
/// Two-sided category of [m] with identities marked.
DbarCategory dbar_simplex(int m, int s_max, int t_max);

/// The functor induced by a monotone theta : [m] -> [n] between dbar_simplex
/// categories.
Functor dbar_of_monotone(const std::vector<int>& theta, const DbarCategory& Dm, const DbarCategory& Dn);

/// Functors i, q, s and transformations kappa : s -> iq, lambda : s -> id.
/// q and s are recorded as object and morphism assignments (kNone where the
/// assignment does not exist) so that failures of the stated equations can be
/// reported instead of thrown. s is defined on objects with t < t_max.
struct IqsSystem {
  DCategory d;
  DbarCategory dbar;
  Functor i;
  std::vector<Obj> q_objects;
  std::vector<Mor> q_morphisms;
  std::vector<Obj> s_objects;
  std::vector<Mor> s_morphisms;
  std::vector<Mor> kappa;   // per object in the domain of s
  std::vector<Mor> lambda;
  CheckReport report;
};

IqsSystem iqs_system(const MarkedCategory& J, int s_max, int t_max);

}  // namespace catkit
