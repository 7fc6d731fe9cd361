#include <map>

#include "catkit/direct.hpp"
#include "catkit/monotone.hpp"

namespace catkit {
namespace {

std::string bracket(const std::vector<int>& v) {
  std::string s = "[";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + "]";
}

ElementCategory build_elements(const SSetPtr& K, int deg_bound, const std::function<std::string(int, int)>& namer) {
  if (deg_bound < 0) throw Error(ErrorKind::BadIndex, "negative degree bound");
  if (deg_bound > K->bound()) {
    throw Error(ErrorKind::BoundMismatch, "degree bound " + std::to_string(deg_bound) + " above the dimension bound " +
                                              std::to_string(K->bound()));
  }
  ElementCategory E;
  E.simplices = K;
  CategoryBuilder b;
  std::vector<std::string> names;
  E.by_level.resize(deg_bound + 1);
  for (int k = 0; k <= deg_bound; ++k) {
    for (int x = 0; x < static_cast<int>(K->size(k)); ++x) {
      names.push_back(namer(k, x));
      E.by_level[k].push_back(b.add_object(names.back()));
      E.simplex.push_back(x);
      E.direct.degree.push_back(k);
    }
  }
  std::map<std::pair<Obj, std::vector<int>>, Mor> index;
  for (int top = 0; top <= deg_bound; ++top) {
    for (int y = 0; y < static_cast<int>(K->size(top)); ++y) {
      const Obj target = E.by_level[top][y];
      for (int k = 0; k <= top; ++k) {
        for (auto& delta : injective_monotone_maps(k, top)) {
          const Obj source = E.by_level[k][K->apply(top, y, delta)];
          const Mor f = b.add_morphism(bracket(delta) + ">" + names[target], source, target);
          if (k == top) b.set_identity(target, f);
          index[{target, delta}] = f;
          E.op.push_back(std::move(delta));
        }
      }
    }
  }
  auto cat = b.build(
      [&](Mor g, Mor f) {
        // f : x -> y with operator delta, g : y -> z with operator eps.
        return index.at({b.morphism(g).target, compose_values(E.op[g], E.op[f])});
      },
      false);
  E.direct.category = cat;
  E.direct.we = Marking::identities(cat);
  return E;
}

std::string value_list_name(const TruncatedSimplicialSet& N, int k, int x) {
  std::string s = "(";
  const auto vs = N.vertices(k, x);
  for (std::size_t i = 0; i < vs.size(); ++i) s += (i ? "," : "") + N.name(0, vs[i]);
  return s + ")";
}

}  // namespace

Mor ElementCategory::morphism(const std::vector<int>& delta, Obj target) const {
  auto name = bracket(delta) + ">" + category()->object_name(target);
  auto f = category()->find_morphism(name);
  if (!f) throw Error(ErrorKind::UnknownMorphism, name);
  return *f;
}

ElementCategory d_of_sset(const SSetPtr& K, int deg_bound, DegenerateSeed kind) {
  auto E = build_elements(K, deg_bound, [&](int k, int x) { return K->name(k, x); });
  std::vector<Mor> seed;
  if (kind == DegenerateSeed::LastEdge && K->bound() >= 1) {
    const auto& C = *E.category();
    for (std::size_t f = 0; f < C.num_morphisms(); ++f) {
      const Obj y = C.target(static_cast<Mor>(f));
      const int top = E.direct.degree[y];
      const int a = E.op[f].back();
      if (a == top || K->is_degenerate(1, K->apply(top, E.simplex[y], {a, top}))) seed.push_back(static_cast<Mor>(f));
    }
  } else if (kind == DegenerateSeed::VertexEdge && deg_bound >= 1) {
    for (int v = 0; v < static_cast<int>(K->size(0)); ++v) {
      const Obj e = E.object_of(1, K->degeneracy(0, 0, v));
      seed.push_back(E.morphism({0}, e));
      seed.push_back(E.morphism({1}, e));
    }
  }
  E.direct.we = two_out_of_six_closure(E.category(), seed);
  return E;
}

DCategory d_of_category(const MarkedCategory& J, int deg_bound) {
  const FiniteCategory& C = *J.category;
  auto N = nerve(J.category, deg_bound);
  DCategory D;
  if (C.is_thin()) {
    D.elements = build_elements(N, deg_bound, [&](int k, int x) { return value_list_name(*N, k, x); });
  } else {
    D.elements = build_elements(N, deg_bound, [&](int k, int x) { return N->name(k, x); });
  }
  const CatPtr& DJ = D.elements.category();
  std::vector<Obj> objects(DJ->num_objects());
  std::vector<Mor> morphisms(DJ->num_morphisms());
  for (std::size_t a = 0; a < objects.size(); ++a) {
    const int k = D.elements.direct.degree[a];
    objects[a] = N->vertices(k, D.elements.simplex[a]).back();
  }
  for (std::size_t f = 0; f < morphisms.size(); ++f) {
    const Obj y = DJ->target(static_cast<Mor>(f));
    const int top = D.elements.direct.degree[y];
    const auto& delta = D.elements.op[f];
    const auto chain = nerve_chain(C, *N, top, D.elements.simplex[y]);
    Mor m = C.identity(chain.objects[delta.back()]);
    for (int i = delta.back(); i < top; ++i) m = C.compose(chain.steps[i], m);
    morphisms[f] = m;
  }
  D.p = make_functor(DJ, J.category, std::move(objects), std::move(morphisms));
  D.elements.direct.we = Marking::created_by(D.p, J.we);
  return D;
}

Functor d_of_map(const SimplicialMap& f, const ElementCategory& DK, const ElementCategory& DL) {
  const CatPtr& S = DK.category();
  std::vector<Obj> objects(S->num_objects());
  std::vector<Mor> morphisms(S->num_morphisms());
  for (std::size_t a = 0; a < objects.size(); ++a) {
    const int k = DK.direct.degree[a];
    if (k >= static_cast<int>(DL.by_level.size())) throw Error(ErrorKind::BoundMismatch, "target degree bound too small");
    objects[a] = DL.object_of(k, f(k, DK.simplex[a]));
  }
  for (std::size_t m = 0; m < morphisms.size(); ++m) {
    morphisms[m] = DL.morphism(DK.op[m], objects[S->target(static_cast<Mor>(m))]);
  }
  return make_functor(S, DL.category(), std::move(objects), std::move(morphisms));
}

Functor d_of_monotone(const std::vector<int>& theta, const DCategory& Dm, const DCategory& Dn) {
  const auto& Nm = *Dm.elements.simplices;
  const auto& Nn = *Dn.elements.simplices;
  SimplicialMap f{Dm.elements.simplices, Dn.elements.simplices, {}};
  for (int k = 0; k <= Nm.bound() && k <= Nn.bound(); ++k) {
    std::vector<int> lv;
    for (int x = 0; x < static_cast<int>(Nm.size(k)); ++x) {
      std::vector<int> values;
      for (int v : Nm.vertices(k, x)) values.push_back(theta.at(std::stoi(Nm.name(0, v))));
      // Chains in a poset are determined by their vertices.
      std::string name = "(";
      for (std::size_t i = 0; i < values.size(); ++i) name += (i ? "," : "") + std::to_string(values[i]);
      name += ")";
      auto obj = Dn.elements.category()->find_object(name);
      if (!obj) throw Error(ErrorKind::UnknownObject, name);
      lv.push_back(Dn.elements.simplex[*obj]);
    }
    f.levels.push_back(std::move(lv));
  }
  return d_of_map(f, Dm.elements, Dn.elements);
}

Subdivision sd_poset(const Poset& P) {
  Subdivision S;
  const CatPtr C = P.to_category();
  S.d = d_of_category(minimal_marking(C), P.height());
  const auto& E = S.d.elements;
  std::vector<Obj> chains;
  for (std::size_t a = 0; a < E.category()->num_objects(); ++a) {
    if (!E.simplices->is_degenerate(E.direct.degree[a], E.simplex[a])) chains.push_back(static_cast<Obj>(a));
  }
  auto sub = full_subcategory(E.category(), chains);
  S.inclusion = sub.functor;
  S.max = compose(S.d.p, S.inclusion);
  S.direct.category = sub.category;
  S.direct.we = Marking::created_by(S.max, Marking::identities(C));
  for (Obj a : chains) S.direct.degree.push_back(E.direct.degree[a]);
  return S;
}

MarkedDirectCategory d_hat_boundary(int n, int deg_bound) {
  auto K = standard_cells(CellKind::Boundary, n, deg_bound);
  auto E = d_of_sset(K, deg_bound);
  E.direct.we = Marking::all(E.category());
  return E.direct;
}

SimplicialMap nerve_of_functor(const Functor& F, const SSetPtr& NC, const SSetPtr& ND) {
  const FiniteCategory& C = *F.source;
  const FiniteCategory& D = *F.target;
  SimplicialMap out{NC, ND, {}};
  for (int k = 0; k <= NC->bound(); ++k) {
    std::vector<int> lv;
    for (int x = 0; x < static_cast<int>(NC->size(k)); ++x) {
      std::string name;
      if (k == 0) {
        name = D.object_name(F(C.object(NC->name(0, x))));
      } else {
        const auto chain = nerve_chain(C, *NC, k, x);
        for (int i = 0; i < k; ++i) name += (i ? ";" : "") + D.morphism_name(F.map(chain.steps[i]));
      }
      auto y = ND->find(k, name);
      if (!y) throw Error(ErrorKind::UnknownMorphism, "no simplex '" + name + "' in the target nerve");
      lv.push_back(*y);
    }
    out.levels.push_back(std::move(lv));
  }
  return out;
}

SimplicialMap nerve_to_simplex(const SSetPtr& Nn, const SSetPtr& simplex) {
  SimplicialMap out{Nn, simplex, {}};
  for (int k = 0; k <= Nn->bound(); ++k) {
    std::vector<int> lv;
    for (int x = 0; x < static_cast<int>(Nn->size(k)); ++x) {
      std::vector<int> values;
      for (int v : Nn->vertices(k, x)) values.push_back(std::stoi(Nn->name(0, v)));
      lv.push_back(*simplex->find(k, format_values(values)));
    }
    out.levels.push_back(std::move(lv));
  }
  return out;
}

}  // namespace catkit
