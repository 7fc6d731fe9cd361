#include <map>

#include "catkit/colimits.hpp"

namespace catkit {
namespace {

// Cocones in C (dual = false) or cones in C read as cocones in C^op (dual = true).
struct Side {
  const FiniteCategory& C;
  bool dual;

  std::span<const Mor> hom(Obj a, Obj b) const { return dual ? C.hom(b, a) : C.hom(a, b); }
  Mor compose(Mor g, Mor f) const { return dual ? C.compose(f, g) : C.compose(g, f); }
};

bool legs_commute(const Diagram& X, const Side& side, const std::vector<Mor>& legs, std::size_t upto) {
  const auto& S = *X.source;
  for (std::size_t k = 0; k < S.num_morphisms(); ++k) {
    const Mor m = static_cast<Mor>(k);
    if (S.is_identity(m)) continue;
    const Obj from = side.dual ? S.target(m) : S.source(m);
    const Obj to = side.dual ? S.source(m) : S.target(m);
    if (static_cast<std::size_t>(std::max(from, to)) >= upto) continue;
    if (side.compose(legs[to], X.map(m)) != legs[from]) return false;
  }
  return true;
}

void cocones_at(const Diagram& X, const Side& side, Obj apex, std::vector<Mor>& legs, std::size_t i,
                std::vector<Cocone>& out) {
  const auto& S = *X.source;
  if (i == S.num_objects()) {
    out.push_back({apex, legs});
    return;
  }
  for (Mor u : side.hom(X(static_cast<Obj>(i)), apex)) {
    legs[i] = u;
    if (legs_commute(X, side, legs, i + 1)) cocones_at(X, side, apex, legs, i + 1, out);
  }
  legs[i] = kNone;
}

std::vector<Cocone> cocones(const Diagram& X, const Side& side) {
  std::vector<Cocone> out;
  std::vector<Mor> legs(X.source->num_objects(), kNone);
  for (std::size_t c = 0; c < side.C.num_objects(); ++c) cocones_at(X, side, static_cast<Obj>(c), legs, 0, out);
  return out;
}

std::optional<Mor> factor(const Diagram& X, const Side& side, const Cocone& colim, const Cocone& other) {
  std::optional<Mor> found;
  for (Mor u : side.hom(colim.apex, other.apex)) {
    bool ok = true;
    for (std::size_t i = 0; i < X.source->num_objects() && ok; ++i) {
      ok = side.compose(u, colim.legs[i]) == other.legs[i];
    }
    if (!ok) continue;
    if (found) return std::nullopt;
    found = u;
  }
  return found;
}

std::optional<Cocone> exhaustive(const Diagram& X, const Side& side) {
  const auto all = cocones(X, side);
  for (const auto& c : all) {
    bool universal = true;
    for (const auto& d : all) {
      if (!factor(X, side, c, d)) {
        universal = false;
        break;
      }
    }
    if (universal) return c;
  }
  return std::nullopt;
}

std::optional<Cocone> thin_fast(const Diagram& X, const Side& side) {
  const auto& S = *X.source;
  std::vector<Obj> bounds;
  for (std::size_t c = 0; c < side.C.num_objects(); ++c) {
    bool ok = true;
    for (std::size_t i = 0; i < S.num_objects() && ok; ++i) ok = !side.hom(X(static_cast<Obj>(i)), static_cast<Obj>(c)).empty();
    if (ok) bounds.push_back(static_cast<Obj>(c));
  }
  for (Obj c : bounds) {
    bool least = true;
    for (Obj d : bounds) {
      if (side.hom(c, d).empty()) {
        least = false;
        break;
      }
    }
    if (!least) continue;
    Cocone out{c, {}};
    for (std::size_t i = 0; i < S.num_objects(); ++i) out.legs.push_back(side.hom(X(static_cast<Obj>(i)), c)[0]);
    return out;
  }
  return std::nullopt;
}

std::optional<Cocone> universal(const Diagram& X, bool dual) {
  Side side{*X.target, dual};
  if (X.target->is_thin()) return thin_fast(X, side);
  return exhaustive(X, side);
}

}  // namespace

bool is_cocone(const Diagram& X, const Cocone& c) {
  Side side{*X.target, false};
  for (std::size_t i = 0; i < c.legs.size(); ++i) {
    const Mor u = c.legs[i];
    if (X.target->source(u) != X(static_cast<Obj>(i)) || X.target->target(u) != c.apex) return false;
  }
  return c.legs.size() == X.source->num_objects() && legs_commute(X, side, c.legs, c.legs.size());
}

bool is_cone(const Diagram& X, const Cocone& c) {
  Side side{*X.target, true};
  for (std::size_t i = 0; i < c.legs.size(); ++i) {
    const Mor u = c.legs[i];
    if (X.target->target(u) != X(static_cast<Obj>(i)) || X.target->source(u) != c.apex) return false;
  }
  return c.legs.size() == X.source->num_objects() && legs_commute(X, side, c.legs, c.legs.size());
}

std::vector<Cocone> all_cocones(const Diagram& X) { return cocones(X, Side{*X.target, false}); }

std::optional<Mor> factor_cocone(const Diagram& X, const Cocone& colim, const Cocone& other) {
  return factor(X, Side{*X.target, false}, colim, other);
}

std::optional<Cocone> find_colimit(const Diagram& X) { return universal(X, false); }

std::optional<Cocone> find_colimit_exhaustive(const Diagram& X) { return exhaustive(X, Side{*X.target, false}); }

Cocone colimit(const Diagram& X) {
  if (auto c = find_colimit(X)) return *c;
  throw Error(ErrorKind::NoColimit, "diagram over " + std::to_string(X.source->num_objects()) + " objects");
}

std::optional<Cocone> find_limit(const Diagram& X) { return universal(X, true); }

Cocone limit(const Diagram& X) {
  if (auto c = find_limit(X)) return *c;
  throw Error(ErrorKind::NoColimit, "no limit of a diagram over " + std::to_string(X.source->num_objects()) + " objects");
}

KanExtension pointwise_lan(const Functor& F, const Diagram& X) {
  const auto& I = *F.source;
  const auto& J = *F.target;
  const auto& C = *X.target;
  if (X.source != F.source && category_difference(I, *X.source)) {
    throw Error(ErrorKind::PreconditionViolated, "diagram and functor have different sources");
  }
  KanExtension out;
  out.extension = Functor{F.target, X.target, std::vector<Obj>(J.num_objects(), kNone),
                          std::vector<Mor>(J.num_morphisms(), kNone)};
  std::vector<CategoryOver> commas;
  std::vector<std::map<std::pair<Obj, Mor>, std::size_t>> position(J.num_objects());
  for (std::size_t j = 0; j < J.num_objects(); ++j) {
    auto cm = comma_over(F, static_cast<Obj>(j));
    std::size_t x = 0;
    for (std::size_t i = 0; i < I.num_objects(); ++i) {
      for (Mor u : J.hom(F(static_cast<Obj>(i)), static_cast<Obj>(j))) position[j][{static_cast<Obj>(i), u}] = x++;
    }
    Diagram restricted{cm.category, X.target, {}, {}};
    for (Obj i : cm.functor.on_objects) restricted.on_objects.push_back(X(i));
    for (Mor k : cm.functor.on_morphisms) restricted.on_morphisms.push_back(X.map(k));
    auto colim = find_colimit(restricted);
    if (!colim) throw Error(ErrorKind::NoColimit, "left Kan extension at " + J.object_name(static_cast<Obj>(j)));
    out.extension.on_objects[j] = colim->apex;
    out.colimits.push_back(*colim);
    commas.push_back({cm.category, restricted});
  }
  for (std::size_t vi = 0; vi < J.num_morphisms(); ++vi) {
    const Mor v = static_cast<Mor>(vi);
    const Obj j = J.source(v), j2 = J.target(v);
    Cocone pushed{out.colimits[j2].apex, {}};
    for (std::size_t i = 0; i < I.num_objects(); ++i) {
      for (Mor u : J.hom(F(static_cast<Obj>(i)), j)) {
        pushed.legs.push_back(out.colimits[j2].legs[position[j2].at({static_cast<Obj>(i), J.compose(v, u)})]);
      }
    }
    auto u = factor(commas[j].functor, Side{C, false}, out.colimits[j], pushed);
    if (!u) throw Error(ErrorKind::NoColimit, "no induced morphism for " + J.morphism_name(v));
    out.extension.on_morphisms[vi] = *u;
  }
  for (std::size_t i = 0; i < I.num_objects(); ++i) {
    const Obj j = F(static_cast<Obj>(i));
    out.unit.push_back(out.colimits[j].legs[position[j].at({static_cast<Obj>(i), J.identity(j)})]);
  }
  return out;
}

}  // namespace catkit
