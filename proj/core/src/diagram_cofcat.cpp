#include <map>

#include "catkit/diagram_cofcat.hpp"
#include "catkit/functor_search.hpp"

namespace catkit {
namespace {

using Key = std::pair<std::vector<Obj>, std::vector<Mor>>;

Key key_of(const Diagram& X) { return {X.on_objects, X.on_morphisms}; }

// Assigns components object by object, checking naturality on every
// morphism as soon as both of its ends have a component.
bool components_at(const Diagram& X, const Diagram& Y, std::size_t a, std::vector<Mor>& comp,
                   const ComponentFilter& filter, Budget* budget,
                   const std::function<bool(const NaturalTransformation&)>& visit) {
  const auto& S = *X.source;
  const auto& C = *X.target;
  if (a == S.num_objects()) return visit({X, Y, comp});
  const Obj A = static_cast<Obj>(a);
  for (Mor c : C.hom(X(A), Y(A))) {
    if (budget && !budget->spend()) return false;
    if (filter && !filter(A, c)) continue;
    comp[a] = c;
    bool ok = true;
    for (std::size_t m = 0; m < S.num_morphisms() && ok; ++m) {
      const Mor u = static_cast<Mor>(m);
      const Obj s = S.source(u), t = S.target(u);
      if (std::max(s, t) != A) continue;
      ok = C.compose(comp[t], X.map(u)) == C.compose(Y.map(u), comp[s]);
    }
    if (ok && !components_at(X, Y, a + 1, comp, filter, budget, visit)) return false;
  }
  comp[a] = kNone;
  return true;
}

}  // namespace

std::string diagram_name(const Diagram& X) {
  std::string s = "[";
  for (std::size_t a = 0; a < X.on_objects.size(); ++a) s += (a ? "," : "") + X.target->object_name(X.on_objects[a]);
  return s + "]";
}

std::optional<Obj> DiagramCategory::find(const Diagram& X) const {
  for (std::size_t k = 0; k < objects.size(); ++k) {
    if (objects[k].on_objects == X.on_objects && objects[k].on_morphisms == X.on_morphisms) return static_cast<Obj>(k);
  }
  return std::nullopt;
}

std::optional<Mor> DiagramCategory::find(const NaturalTransformation& t) const {
  auto s = find(t.source), g = find(t.target);
  if (!s || !g) return std::nullopt;
  for (Mor m : presentation.category->hom(*s, *g)) {
    if (morphisms[m].components == t.components) return m;
  }
  return std::nullopt;
}

std::vector<Diagram> homotopical_diagrams(const MarkedDirectCategory& J, const CofibrationPresentation& C,
                                          bool reedy_cofibrant, std::size_t cap) {
  FunctorSearchOptions opts;
  opts.morphism_filter = [&](Mor m, Mor image) { return !J.we.contains(m) || C.we.contains(image); };
  std::vector<Diagram> out;
  std::optional<ReedyShape> R;
  if (reedy_cofibrant) R.emplace(ReedyShape::direct(J.category, J.degree));
  for (auto& X : all_functors(J.category, C.category, opts, cap)) {
    if (R && !is_reedy_cofibrant(X, *R, C.cof).holds()) continue;
    out.push_back(std::move(X));
  }
  return out;
}

std::vector<NaturalTransformation> transformations(const Diagram& X, const Diagram& Y, std::size_t cap) {
  std::vector<NaturalTransformation> out;
  std::vector<Mor> comp(X.source->num_objects(), kNone);
  components_at(X, Y, 0, comp, {}, nullptr, [&](const NaturalTransformation& t) {
    if (out.size() >= cap) throw Error(ErrorKind::EnumerationLimitExceeded, "more than " + std::to_string(cap) + " transformations");
    out.push_back(t);
    return true;
  });
  return out;
}

std::optional<NaturalTransformation> find_transformation(const Diagram& X, const Diagram& Y,
                                                         const ComponentFilter& filter, Budget& budget) {
  std::optional<NaturalTransformation> found;
  std::vector<Mor> comp(X.source->num_objects(), kNone);
  components_at(X, Y, 0, comp, filter, &budget, [&](const NaturalTransformation& t) {
    found = t;
    return false;
  });
  return found;
}

DiagramCategory diagram_cofcat(const CofibrationPresentation& C, const MarkedDirectCategory& J,
                               DiagramVariant variant, std::size_t cap) {
  DiagramCategory D;
  D.shape = J;
  D.variant = variant;
  D.objects = homotopical_diagrams(J, C, variant == DiagramVariant::Reedy, cap);
  const bool thin = C.category->is_thin();
  CategoryBuilder b;
  std::map<Key, Obj> index;
  for (std::size_t k = 0; k < D.objects.size(); ++k) {
    std::string n = diagram_name(D.objects[k]);
    if (!thin) n += "#" + std::to_string(k);
    b.add_object(n);
    index[key_of(D.objects[k])] = static_cast<Obj>(k);
  }
  std::map<std::tuple<Obj, Obj, std::vector<Mor>>, Mor> mors;
  for (std::size_t x = 0; x < D.objects.size(); ++x) {
    for (std::size_t y = 0; y < D.objects.size(); ++y) {
      auto ts = transformations(D.objects[x], D.objects[y], cap);
      for (std::size_t k = 0; k < ts.size(); ++k) {
        if (D.morphisms.size() >= cap) {
          throw Error(ErrorKind::EnumerationLimitExceeded, "more than " + std::to_string(cap) + " diagram morphisms");
        }
        std::string n = diagram_name(D.objects[x]) + ">" + diagram_name(D.objects[y]);
        if (!thin) n = "t" + std::to_string(x) + "." + std::to_string(y) + "." + std::to_string(k);
        const Mor m = b.add_morphism(n, static_cast<Obj>(x), static_cast<Obj>(y));
        if (x == y && ts[k].components == identity_transformation(D.objects[x]).components) {
          b.set_identity(static_cast<Obj>(x), m);
        }
        mors[{static_cast<Obj>(x), static_cast<Obj>(y), ts[k].components}] = m;
        D.morphisms.push_back(std::move(ts[k]));
      }
    }
  }
  auto cat = b.build(
      [&](Mor g, Mor f) {
        auto t = vertical_compose(D.morphisms[g], D.morphisms[f]);
        return mors.at({b.morphism(f).source, b.morphism(g).target, t.components});
      },
      false);
  auto& P = D.presentation;
  P.category = cat;
  std::vector<char> we(cat->num_morphisms()), cof(cat->num_morphisms());
  std::optional<ReedyShape> R;
  if (variant == DiagramVariant::Reedy) R.emplace(ReedyShape::direct(J.category, J.degree));
  for (std::size_t m = 0; m < we.size(); ++m) {
    we[m] = is_levelwise(D.morphisms[m], C.we);
    cof[m] = R ? is_reedy_cofibration(D.morphisms[m], *R, C.cof).holds() : is_levelwise(D.morphisms[m], C.cof);
  }
  P.we = Marking(cat, we);
  P.cof = Marking(cat, cof);
  Diagram constant{J.category, C.category, std::vector<Obj>(J.category->num_objects(), C.initial), {}};
  for (std::size_t m = 0; m < J.category->num_morphisms(); ++m) constant.on_morphisms.push_back(C.category->identity(C.initial));
  if (auto i = index.find(key_of(constant)); i != index.end()) P.initial = i->second;
  P.provenance = std::string(variant == DiagramVariant::Reedy ? "Reedy" : "levelwise") + " diagrams in (" +
                 C.provenance + ")";
  return D;
}

Functor diagram_inclusion(const DiagramCategory& reedy, const DiagramCategory& levelwise) {
  std::vector<Obj> objs;
  std::vector<Mor> mors;
  for (const auto& X : reedy.objects) {
    auto k = levelwise.find(X);
    if (!k) throw Error(ErrorKind::UnknownObject, diagram_name(X));
    objs.push_back(*k);
  }
  for (const auto& t : reedy.morphisms) {
    auto m = levelwise.find(t);
    if (!m) throw Error(ErrorKind::UnknownMorphism, "transformation " + diagram_name(t.source) + " -> " + diagram_name(t.target));
    mors.push_back(*m);
  }
  return make_functor(reedy.presentation.category, levelwise.presentation.category, std::move(objs), std::move(mors));
}

Functor restriction(const Functor& f, const DiagramCategory& DJ, const DiagramCategory& DI) {
  std::vector<Obj> objs;
  std::vector<Mor> mors;
  for (const auto& X : DJ.objects) {
    auto k = DI.find(compose(X, f));
    if (!k) throw Error(ErrorKind::UnknownObject, "restriction of " + diagram_name(X));
    objs.push_back(*k);
  }
  for (const auto& t : DJ.morphisms) {
    NaturalTransformation r{compose(t.source, f), compose(t.target, f), {}};
    for (Obj a : f.on_objects) r.components.push_back(t.components[a]);
    auto m = DI.find(r);
    if (!m) throw Error(ErrorKind::UnknownMorphism, "restriction of a transformation out of " + diagram_name(t.source));
    mors.push_back(*m);
  }
  return make_functor(DJ.presentation.category, DI.presentation.category, std::move(objs), std::move(mors));
}

}  // namespace catkit
