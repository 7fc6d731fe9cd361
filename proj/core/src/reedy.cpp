#include <algorithm>

#include "catkit/reedy.hpp"

namespace catkit {
namespace {

CategoryOver empty_over(const CatPtr& C) { return {empty_category(), Functor{empty_category(), C, {}, {}}}; }

bool has_nonidentity(const FiniteCategory& C, const Marking& m, std::span<const Mor> ms) {
  for (Mor f : ms) {
    if (m.contains(f) && !C.is_identity(f)) return true;
  }
  return false;
}

// Morphisms of C standing behind the objects of a latching/matching category
// built on the wide subcategory W (objects are named after W's morphisms).
std::vector<Mor> underlying(const CategoryOver& lat, const CategoryOver& W) {
  std::vector<Mor> out;
  for (std::size_t k = 0; k < lat.category->num_objects(); ++k) {
    out.push_back(W.functor.map(W.category->morphism_named(lat.category->object_name(static_cast<Obj>(k)))));
  }
  return out;
}

std::string obj_name(const ReedyShape& R, Obj j) { return R.category()->object_name(j); }

}  // namespace

ReedyShape::ReedyShape(ReedyStructure R) : R_(std::move(R)) {
  const CatPtr& C = R_.category;
  const std::size_t n = C->num_objects();
  latching_.resize(n);
  latching_maps_.resize(n);
  matching_.resize(n);
  matching_maps_.resize(n);
  std::optional<CategoryOver> faces, degens;
  for (std::size_t a = 0; a < n; ++a) {
    const Obj j = static_cast<Obj>(a);
    if (has_nonidentity(*C, R_.faces, C->in(j))) {
      if (!faces) faces = wide_subcategory(R_.faces);
      auto lat = latching_category(faces->category, R_.degree, j);
      latching_maps_[a] = underlying(lat, *faces);
      latching_[a] = {lat.category, compose(faces->functor, lat.functor)};
    } else {
      latching_[a] = empty_over(C);
    }
    if (has_nonidentity(*C, R_.degeneracies, C->out(j))) {
      if (!degens) degens = wide_subcategory(R_.degeneracies);
      auto mat = matching_category(degens->category, R_.degree, j);
      matching_maps_[a] = underlying(mat, *degens);
      matching_[a] = {mat.category, compose(degens->functor, mat.functor)};
    } else {
      matching_[a] = empty_over(C);
    }
    order_.push_back(j);
  }
  std::stable_sort(order_.begin(), order_.end(), [&](Obj x, Obj y) { return R_.degree[x] < R_.degree[y]; });
}

ReedyShape ReedyShape::direct(const CatPtr& C, const DegreeFunction& degree) {
  return ReedyShape(ReedyStructure{C, Marking::all(C), Marking::identities(C), degree});
}

LatchingObject latching_object(const Diagram& X, const ReedyShape& R, Obj j) {
  const auto& lat = R.latching(j);
  const Diagram D = compose(X, lat.functor);
  auto colim = find_colimit(D);
  if (!colim) throw Error(ErrorKind::NoColimit, "latching object at " + obj_name(R, j));
  Cocone to_j{X(j), {}};
  for (Mor u : R.latching_maps(j)) to_j.legs.push_back(X.map(u));
  auto map = factor_cocone(D, *colim, to_j);
  if (!map) throw Error(ErrorKind::NoColimit, "latching morphism at " + obj_name(R, j) + " is not unique");
  return {*colim, *map};
}

MatchingObject matching_object(const Diagram& X, const ReedyShape& R, Obj j) {
  const auto& mat = R.matching(j);
  const Diagram D = compose(X, mat.functor);
  auto lim = find_limit(D);
  if (!lim) throw Error(ErrorKind::NoColimit, "matching object at " + obj_name(R, j) + " (no limit)");
  Cocone from_j{X(j), {}};
  for (Mor u : R.matching_maps(j)) from_j.legs.push_back(X.map(u));
  auto map = factor_cone(D, *lim, from_j);
  if (!map) throw Error(ErrorKind::NoColimit, "matching morphism at " + obj_name(R, j) + " is not unique");
  return {*lim, *map};
}

Verdict is_reedy_cofibrant(const Diagram& X, const ReedyShape& R, const Marking& cof) {
  for (Obj j : R.by_degree()) {
    try {
      auto L = latching_object(X, R, j);
      if (!cof.contains(L.map)) {
        return Fails("latching morphism " + X.target->morphism_name(L.map) + " at " + obj_name(R, j) +
                     " is not a cofibration");
      }
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::NoColimit) throw;
      return Fails("NoColimit: " + e.detail());
    }
  }
  return Holds();
}

Verdict is_reedy_fibrant(const Diagram& X, const ReedyShape& R, const Marking& fib) {
  for (Obj j : R.by_degree()) {
    try {
      auto M = matching_object(X, R, j);
      if (!fib.contains(M.map)) {
        return Fails("matching morphism " + X.target->morphism_name(M.map) + " at " + obj_name(R, j) +
                     " is not a fibration");
      }
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::NoColimit) throw;
      return Fails("NoColimit: " + e.detail());
    }
  }
  return Holds();
}

LatchingCorner latching_corner(const NaturalTransformation& f, const ReedyShape& R, Obj j) {
  const Diagram& X = f.source;
  const Diagram& Y = f.target;
  const CatPtr& Cp = X.target;
  const auto& C = *Cp;
  LatchingCorner out;
  out.lx = latching_object(X, R, j);
  out.ly = latching_object(Y, R, j);
  const auto& lat = R.latching(j);
  const Diagram DX = compose(X, lat.functor);
  Cocone via{out.ly.colimit.apex, {}};
  for (std::size_t k = 0; k < lat.category->num_objects(); ++k) {
    via.legs.push_back(C.compose(out.ly.colimit.legs[k], f.components[lat.functor(static_cast<Obj>(k))]));
  }
  auto induced = factor_cocone(DX, out.lx.colimit, via);
  if (!induced) throw Error(ErrorKind::NoColimit, "induced latching map at " + obj_name(R, j));
  out.induced = *induced;
  auto po = pushout(Cp, out.lx.map, out.induced);
  if (!po) throw Error(ErrorKind::NoColimit, "latching pushout at " + obj_name(R, j));
  out.pushout = *po;
  const Mor fj = f.components[j];
  Cocone to_y{Y(j), {C.compose(fj, out.lx.map), fj, out.ly.map}};
  auto corner = factor_cocone(span_diagram(Cp, out.lx.map, out.induced), out.pushout, to_y);
  if (!corner) throw Error(ErrorKind::NoColimit, "pushout corner at " + obj_name(R, j));
  out.corner = *corner;
  return out;
}

MatchingCorner matching_corner(const NaturalTransformation& f, const ReedyShape& R, Obj j) {
  const Diagram& X = f.source;
  const Diagram& Y = f.target;
  const CatPtr& Cp = X.target;
  const auto& C = *Cp;
  MatchingCorner out;
  out.mx = matching_object(X, R, j);
  out.my = matching_object(Y, R, j);
  const auto& mat = R.matching(j);
  const Diagram DY = compose(Y, mat.functor);
  Cocone via{out.mx.limit.apex, {}};
  for (std::size_t k = 0; k < mat.category->num_objects(); ++k) {
    via.legs.push_back(C.compose(f.components[mat.functor(static_cast<Obj>(k))], out.mx.limit.legs[k]));
  }
  auto induced = factor_cone(DY, out.my.limit, via);
  if (!induced) throw Error(ErrorKind::NoColimit, "induced matching map at " + obj_name(R, j));
  out.induced = *induced;
  auto pb = pullback(Cp, out.my.map, out.induced);
  if (!pb) throw Error(ErrorKind::NoColimit, "matching pullback at " + obj_name(R, j));
  out.pullback = *pb;
  const Mor fj = f.components[j];
  Cocone from_x{X(j), {C.compose(out.my.map, fj), fj, out.mx.map}};
  auto corner = factor_cone(cospan_diagram(Cp, out.my.map, out.induced), out.pullback, from_x);
  if (!corner) throw Error(ErrorKind::NoColimit, "pullback corner at " + obj_name(R, j));
  out.corner = *corner;
  return out;
}

Verdict is_reedy_cofibration(const NaturalTransformation& f, const ReedyShape& R, const Marking& cof) {
  for (Obj j : R.by_degree()) {
    try {
      auto c = latching_corner(f, R, j);
      if (!cof.contains(c.corner)) {
        return Fails("pushout corner " + f.source.target->morphism_name(c.corner) + " at " + obj_name(R, j) +
                     " is not a cofibration");
      }
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::NoColimit) throw;
      return Fails("NoColimit: " + e.detail());
    }
  }
  return Holds();
}

Verdict is_reedy_fibration(const NaturalTransformation& f, const ReedyShape& R, const Marking& fib) {
  for (Obj j : R.by_degree()) {
    try {
      auto c = matching_corner(f, R, j);
      if (!fib.contains(c.corner)) {
        return Fails("pullback corner " + f.source.target->morphism_name(c.corner) + " at " + obj_name(R, j) +
                     " is not a fibration");
      }
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::NoColimit) throw;
      return Fails("NoColimit: " + e.detail());
    }
  }
  return Holds();
}

NaturalTransformation identity_transformation(const Diagram& X) {
  NaturalTransformation t{X, X, {}};
  for (Obj a : X.on_objects) t.components.push_back(X.target->identity(a));
  return t;
}

NaturalTransformation vertical_compose(const NaturalTransformation& g, const NaturalTransformation& f) {
  NaturalTransformation t{f.source, g.target, {}};
  for (std::size_t a = 0; a < f.components.size(); ++a) {
    t.components.push_back(f.source.target->compose(g.components[a], f.components[a]));
  }
  return t;
}

bool is_levelwise(const NaturalTransformation& f, const Marking& m) {
  return std::all_of(f.components.begin(), f.components.end(), [&](Mor c) { return m.contains(c); });
}

NaturalTransformation make_transformation(const Diagram& X, const Diagram& Y, std::vector<Mor> components) {
  NaturalTransformation t{X, Y, std::move(components)};
  if (t.components.size() != X.source->num_objects()) {
    throw Error(ErrorKind::PreconditionViolated, "one component per shape object required");
  }
  if (auto v = naturality_violation(t)) throw Error(ErrorKind::PreconditionViolated, *v);
  return t;
}

}  // namespace catkit
