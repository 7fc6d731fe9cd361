#include <unordered_map>

#include "catkit/dbar.hpp"
#include "catkit/monotone.hpp"

namespace catkit {
namespace {

std::string bracket(const std::vector<int>& v) {
  std::string s = "[";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + "]";
}

std::string op_name(const GridMorphism& op, const std::string& source, const std::string& target) {
  return bracket(op.phi) + ";" + bracket(op.psi) + ":" + source + ">" + target;
}

bool leq(const FiniteCategory& J, Obj a, Obj b) { return !J.hom(a, b).empty(); }

void grids_of_shape(const FiniteCategory& J, int s, int t, std::vector<Grid>& out) {
  Grid g{s, t, std::vector<Obj>(static_cast<std::size_t>(s + 1) * (t + 1), kNone)};
  const int cells = (s + 1) * (t + 1);
  std::function<void(int)> fill = [&](int c) {
    if (c == cells) {
      out.push_back(g);
      return;
    }
    const int a = c / (t + 1), b = c % (t + 1);
    for (Obj v = 0; v < static_cast<Obj>(J.num_objects()); ++v) {
      if (a > 0 && !leq(J, g.at(a - 1, b), v)) continue;
      if (b > 0 && !leq(J, g.at(a, b - 1), v)) continue;
      g.values[c] = v;
      fill(c + 1);
    }
    g.values[c] = kNone;
  };
  fill(0);
}

bool compatible(const Grid& x, const Grid& y, const GridMorphism& op) {
  for (int a = 0; a <= x.s; ++a) {
    for (int b = 0; b <= y.t; ++b) {
      if (x.at(a, op.psi[b]) != y.at(op.phi[a], b)) return false;
    }
  }
  return true;
}

std::string grid_key(const Grid& x) {
  std::string k = std::to_string(x.s) + "x" + std::to_string(x.t);
  for (Obj v : x.values) k += "," + std::to_string(v);
  return k;
}

}  // namespace

std::string grid_name(const FiniteCategory& J, const Grid& x) {
  std::string out = "(";
  for (int a = 0; a <= x.s; ++a) {
    if (a) out += "|";
    for (int b = 0; b <= x.t; ++b) out += (b ? "," : "") + J.object_name(x.at(a, b));
  }
  return out + ")";
}

std::optional<Obj> DbarCategory::find(const Grid& x) const {
  for (std::size_t a = 0; a < grids.size(); ++a) {
    if (grids[a].s == x.s && grids[a].t == x.t && grids[a].values == x.values) return static_cast<Obj>(a);
  }
  return std::nullopt;
}

std::optional<Mor> DbarCategory::find(const GridMorphism& op, Obj source, Obj target) const {
  for (Mor f : category->hom(source, target)) {
    if (ops[f].phi == op.phi && ops[f].psi == op.psi) return f;
  }
  return std::nullopt;
}

DbarCategory dbar(const MarkedCategory& J, int s_max, int t_max) {
  const FiniteCategory& C = *J.category;
  if (!C.is_thin()) throw Error(ErrorKind::NotThin, "two-sided categories are built for thin categories only");
  if (s_max < 0 || t_max < 0) throw Error(ErrorKind::BadIndex, "negative bound");
  DbarCategory D;
  D.s_max = s_max;
  D.t_max = t_max;
  CategoryBuilder b;
  std::vector<std::vector<std::vector<Obj>>> by_shape(s_max + 1, std::vector<std::vector<Obj>>(t_max + 1));
  std::vector<std::string> names;
  for (int s = 0; s <= s_max; ++s) {
    for (int t = 0; t <= t_max; ++t) {
      std::vector<Grid> gs;
      grids_of_shape(C, s, t, gs);
      for (auto& g : gs) {
        names.push_back(grid_name(C, g));
        const Obj o = b.add_object(names.back());
        by_shape[s][t].push_back(o);
        D.reedy.degree.push_back(s + t);
        D.grids.push_back(std::move(g));
      }
    }
  }
  std::unordered_map<std::string, Mor> index;
  for (Obj y = 0; y < static_cast<Obj>(D.grids.size()); ++y) {
    const Grid& gy = D.grids[y];
    for (int s = 0; s <= gy.s; ++s) {
      for (int t = gy.t; t <= t_max; ++t) {
        const auto phis = injective_monotone_maps(s, gy.s);
        const auto psis = injective_monotone_maps(gy.t, t);
        for (Obj x : by_shape[s][t]) {
          for (const auto& phi : phis) {
            for (const auto& psi : psis) {
              GridMorphism op{phi, psi};
              if (!compatible(D.grids[x], gy, op)) continue;
              auto name = op_name(op, names[x], names[y]);
              const Mor f = b.add_morphism(name, x, y);
              if (x == y) b.set_identity(x, f);
              index[name] = f;
              D.ops.push_back(std::move(op));
            }
          }
        }
      }
    }
  }
  D.category = b.build(
      [&](Mor g, Mor f) {
        const auto& bf = b.morphism(f);
        const auto& bg = b.morphism(g);
        GridMorphism op{compose_values(D.ops[g].phi, D.ops[f].phi), compose_values(D.ops[f].psi, D.ops[g].psi)};
        return index.at(op_name(op, names[bf.source], names[bg.target]));
      },
      false);
  const CatPtr& cat = D.category;
  std::vector<Obj> eval_objects;
  for (const auto& g : D.grids) eval_objects.push_back(g.at(g.s, 0));
  std::vector<Mor> eval_morphisms;
  for (std::size_t f = 0; f < cat->num_morphisms(); ++f) {
    const Obj a = eval_objects[cat->source(static_cast<Mor>(f))];
    const Obj c = eval_objects[cat->target(static_cast<Mor>(f))];
    eval_morphisms.push_back(C.hom(a, c).front());
  }
  D.evaluation = make_functor(cat, J.category, std::move(eval_objects), std::move(eval_morphisms));
  D.we = Marking::created_by(D.evaluation, J.we);
  std::vector<char> faces(cat->num_morphisms()), degens(cat->num_morphisms());
  for (std::size_t f = 0; f < cat->num_morphisms(); ++f) {
    faces[f] = D.ops[f].psi == identity_values(static_cast<int>(D.ops[f].psi.size()) - 1) &&
               D.grids[cat->source(static_cast<Mor>(f))].t == static_cast<int>(D.ops[f].psi.size()) - 1;
    degens[f] = D.ops[f].phi == identity_values(static_cast<int>(D.ops[f].phi.size()) - 1) &&
                D.grids[cat->target(static_cast<Mor>(f))].s == static_cast<int>(D.ops[f].phi.size()) - 1;
  }
  D.reedy.category = cat;
  D.reedy.faces = Marking(cat, std::move(faces));
  D.reedy.degeneracies = Marking(cat, std::move(degens));
  return D;
}

DbarSub dbar_full_subcategory(const DbarCategory& D, const std::vector<Obj>& objects) {
  auto sub = full_subcategory(D.category, objects);
  DbarSub out;
  out.inclusion = sub.functor;
  DbarCategory& S = out.sub;
  S.category = sub.category;
  S.s_max = D.s_max;
  S.t_max = D.t_max;
  S.we = Marking::created_by(sub.functor, D.we);
  S.reedy.category = sub.category;
  S.reedy.faces = Marking::created_by(sub.functor, D.reedy.faces);
  S.reedy.degeneracies = Marking::created_by(sub.functor, D.reedy.degeneracies);
  for (Obj a : objects) {
    S.reedy.degree.push_back(D.reedy.degree[a]);
    S.grids.push_back(D.grids[a]);
  }
  for (std::size_t f = 0; f < sub.category->num_morphisms(); ++f) S.ops.push_back(D.ops[sub.functor.map(static_cast<Mor>(f))]);
  S.evaluation = compose(D.evaluation, sub.functor);
  return out;
}

DbarCategory dbar_simplex(int m, int s_max, int t_max) {
  return dbar(minimal_marking(Poset::chain(m).to_category()), s_max, t_max);
}

DbarSub dbar_boundary(int m, int s_max, int t_max) {
  auto D = dbar_simplex(m, s_max, t_max);
  std::vector<Obj> keep;
  for (std::size_t a = 0; a < D.grids.size(); ++a) {
    std::vector<char> hit(m + 1, 0);
    for (Obj v : D.grids[a].values) hit[v] = 1;
    if (std::count(hit.begin(), hit.end(), 1) < m + 1) keep.push_back(static_cast<Obj>(a));
  }
  return dbar_full_subcategory(D, keep);
}

Functor dbar_of_monotone(const std::vector<int>& theta, const DbarCategory& Dm, const DbarCategory& Dn) {
  std::unordered_map<std::string, Obj> index;
  for (std::size_t a = 0; a < Dn.grids.size(); ++a) index[grid_key(Dn.grids[a])] = static_cast<Obj>(a);
  std::vector<Obj> objects;
  for (const auto& g : Dm.grids) {
    Grid h = g;
    for (auto& v : h.values) v = theta.at(v);
    auto it = index.find(grid_key(h));
    if (it == index.end()) throw Error(ErrorKind::BoundMismatch, "image grid outside the target bounds");
    objects.push_back(it->second);
  }
  std::vector<Mor> morphisms;
  for (std::size_t f = 0; f < Dm.ops.size(); ++f) {
    const Mor m = static_cast<Mor>(f);
    morphisms.push_back(*Dn.find(Dm.ops[f], objects[Dm.category->source(m)], objects[Dm.category->target(m)]));
  }
  return make_functor(Dm.category, Dn.category, std::move(objects), std::move(morphisms));
}

IqsSystem iqs_system(const MarkedCategory& J, int s_max, int t_max) {
  if (t_max < 1) throw Error(ErrorKind::BadIndex, "s raises t, so t_max must be at least 1");
  IqsSystem sys;
  sys.d = d_of_category(J, s_max);
  sys.dbar = dbar(J, s_max, t_max);
  const FiniteCategory& C = *J.category;
  const auto& DJ = *sys.d.elements.category();
  const auto& E = sys.d.elements;
  const DbarCategory& B = sys.dbar;
  const FiniteCategory& BC = *B.category;
  std::unordered_map<std::string, Obj> grid_index;
  for (std::size_t a = 0; a < B.grids.size(); ++a) grid_index[grid_key(B.grids[a])] = static_cast<Obj>(a);
  auto grid_obj = [&](const Grid& g) -> Obj {
    auto it = grid_index.find(grid_key(g));
    return it == grid_index.end() ? kNone : it->second;
  };
  auto d_values = [&](Obj x) {
    std::vector<Obj> v;
    const int k = E.direct.degree[x];
    for (int u : E.simplices->vertices(k, E.simplex[x])) v.push_back(u);
    return v;
  };
  auto d_object = [&](const std::vector<Obj>& values) -> Obj {
    std::string name = "(";
    for (std::size_t i = 0; i < values.size(); ++i) name += (i ? "," : "") + C.object_name(values[i]);
    auto o = DJ.find_object(name + ")");
    return o ? *o : kNone;
  };

  // i
  std::vector<Obj> i_obj;
  for (std::size_t x = 0; x < DJ.num_objects(); ++x) {
    auto v = d_values(static_cast<Obj>(x));
    i_obj.push_back(grid_obj(Grid{static_cast<int>(v.size()) - 1, 0, v}));
  }
  std::vector<Mor> i_mor;
  for (std::size_t f = 0; f < DJ.num_morphisms(); ++f) {
    const Mor m = static_cast<Mor>(f);
    auto g = B.find(GridMorphism{E.op[f], {0}}, i_obj[DJ.source(m)], i_obj[DJ.target(m)]);
    if (!g) throw Error(ErrorKind::PreconditionViolated, "i has no image for " + DJ.morphism_name(m));
    i_mor.push_back(*g);
  }
  sys.i = make_functor(sys.d.elements.category(), B.category, i_obj, i_mor);

  // q
  for (const auto& g : B.grids) {
    std::vector<Obj> v;
    for (int a = 0; a <= g.s; ++a) v.push_back(g.at(a, 0));
    sys.q_objects.push_back(d_object(v));
  }
  for (std::size_t f = 0; f < BC.num_morphisms(); ++f) {
    const Mor m = static_cast<Mor>(f);
    const Obj qx = sys.q_objects[BC.source(m)], qy = sys.q_objects[BC.target(m)];
    Mor image = kNone;
    if (qx != kNone && qy != kNone) {
      for (Mor h : DJ.hom(qx, qy)) {
        if (E.op[h] == B.ops[f].phi) image = h;
      }
    }
    sys.q_morphisms.push_back(image);
  }

  // s, kappa, lambda
  sys.s_objects.assign(B.grids.size(), kNone);
  sys.kappa.assign(B.grids.size(), kNone);
  sys.lambda.assign(B.grids.size(), kNone);
  for (std::size_t a = 0; a < B.grids.size(); ++a) {
    const Grid& g = B.grids[a];
    if (g.t >= t_max) continue;
    Grid h{g.s, g.t + 1, {}};
    for (int r = 0; r <= g.s; ++r) {
      for (int c = 0; c <= g.t + 1; ++c) h.values.push_back(g.at(r, std::max(c - 1, 0)));
    }
    const Obj sx = grid_obj(h);
    sys.s_objects[a] = sx;
    if (sx == kNone) continue;
    const Obj qx = sys.q_objects[a];
    if (qx != kNone) {
      if (auto k = B.find(GridMorphism{identity_values(g.s), {0}}, sx, sys.i(qx))) sys.kappa[a] = *k;
    }
    std::vector<int> delta0;
    for (int c = 0; c <= g.t; ++c) delta0.push_back(c + 1);
    if (auto l = B.find(GridMorphism{identity_values(g.s), delta0}, sx, static_cast<Obj>(a))) sys.lambda[a] = *l;
  }
  sys.s_morphisms.assign(BC.num_morphisms(), kNone);
  for (std::size_t f = 0; f < BC.num_morphisms(); ++f) {
    const Mor m = static_cast<Mor>(f);
    const Obj sx = sys.s_objects[BC.source(m)], sy = sys.s_objects[BC.target(m)];
    if (sx == kNone || sy == kNone) continue;
    std::vector<int> psi{0};
    for (int v : B.ops[f].psi) psi.push_back(v + 1);
    if (auto h = B.find(GridMorphism{B.ops[f].phi, psi}, sx, sy)) sys.s_morphisms[f] = *h;
  }

  auto& report = sys.report;
  auto first_failure = [](const std::vector<std::string>& bad) {
    return bad.empty() ? Holds() : Fails(bad.front() + (bad.size() > 1 ? " (and " + std::to_string(bad.size() - 1) + " more)" : ""));
  };
  {
    std::vector<std::string> bad;
    for (std::size_t x = 0; x < DJ.num_objects(); ++x) {
      if (sys.q_objects[sys.i(static_cast<Obj>(x))] != static_cast<Obj>(x)) bad.push_back("object " + DJ.object_name(static_cast<Obj>(x)));
    }
    for (std::size_t f = 0; f < DJ.num_morphisms(); ++f) {
      if (sys.q_morphisms[sys.i.map(static_cast<Mor>(f))] != static_cast<Mor>(f)) bad.push_back("morphism " + DJ.morphism_name(static_cast<Mor>(f)));
    }
    report.push_back({"qi = id", first_failure(bad)});
  }
  auto functor_check = [&](const std::vector<Obj>& obj, const std::vector<Mor>& mor, const FiniteCategory& T, bool domain_only) {
    std::vector<std::string> bad;
    for (std::size_t f = 0; f < BC.num_morphisms(); ++f) {
      const Mor m = static_cast<Mor>(f);
      if (domain_only && (obj[BC.source(m)] == kNone || obj[BC.target(m)] == kNone)) continue;
      if (mor[f] == kNone) bad.push_back("no image for " + BC.morphism_name(m));
    }
    for (std::size_t h = 0; h < BC.num_morphisms() && bad.empty(); ++h) {
      if (mor[h] == kNone) continue;
      for (auto [g, f] : BC.factorizations(static_cast<Mor>(h))) {
        if (mor[g] == kNone || mor[f] == kNone) continue;
        if (T.compose(mor[g], mor[f]) != mor[h]) bad.push_back("composition fails at " + BC.morphism_name(static_cast<Mor>(h)));
      }
    }
    return first_failure(bad);
  };
  report.push_back({"q is a functor", functor_check(sys.q_objects, sys.q_morphisms, DJ, false)});
  report.push_back({"s is a functor", functor_check(sys.s_objects, sys.s_morphisms, BC, true)});
  {
    std::vector<std::string> bad;
    for (std::size_t x = 0; x < DJ.num_objects(); ++x) {
      const Obj ix = sys.i(static_cast<Obj>(x));
      if (sys.s_objects[ix] != ix) bad.push_back("object " + DJ.object_name(static_cast<Obj>(x)));
    }
    report.push_back({"si = i", first_failure(bad)});
  }
  auto component_checks = [&](const std::string& label, const std::vector<Mor>& eta, bool to_iq) {
    std::vector<std::string> missing, unmarked, natural, on_i;
    for (std::size_t a = 0; a < B.grids.size(); ++a) {
      if (sys.s_objects[a] == kNone) continue;
      const Mor c = eta[a];
      if (c == kNone) {
        missing.push_back(BC.object_name(static_cast<Obj>(a)));
        continue;
      }
      if (!B.we.contains(c) || !B.reedy.degeneracies.contains(c)) unmarked.push_back(BC.morphism_name(c));
    }
    for (std::size_t f = 0; f < BC.num_morphisms(); ++f) {
      const Mor m = static_cast<Mor>(f);
      const Obj x = BC.source(m), y = BC.target(m);
      if (sys.s_morphisms[f] == kNone || eta[x] == kNone || eta[y] == kNone) continue;
      Mor right = m;
      if (to_iq) {
        if (sys.q_morphisms[f] == kNone) continue;
        right = sys.i.map(sys.q_morphisms[f]);
      }
      if (BC.compose(eta[y], sys.s_morphisms[f]) != BC.compose(right, eta[x])) natural.push_back(BC.morphism_name(m));
    }
    for (std::size_t x = 0; x < DJ.num_objects(); ++x) {
      const Obj ix = sys.i(static_cast<Obj>(x));
      if (sys.s_objects[ix] == kNone) continue;
      if (eta[ix] != BC.identity(ix)) {
        on_i.push_back(eta[ix] == kNone ? "no component at " + BC.object_name(ix) : BC.morphism_name(eta[ix]));
      }
    }
    report.push_back({label + " components exist", first_failure(missing)});
    report.push_back({label + " components are marked degeneracy operators", first_failure(unmarked)});
    report.push_back({label + " is natural", first_failure(natural)});
    report.push_back({label + "i = id", first_failure(on_i)});
  };
  component_checks("kappa", sys.kappa, true);
  component_checks("lambda", sys.lambda, false);
  return sys;
}

}  // namespace catkit
