#include <algorithm>
#include <map>
#include <numeric>
#include <queue>

#include "catkit/algorithms.hpp"

namespace catkit {
namespace {

struct UnionFind {
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) { parent[find(a)] = find(b); }
  std::vector<std::size_t> parent;
};

// Sieve test relative to markings on both sides; `dual` swaps the closure direction.
Verdict sieve_check(const Functor& F, const Marking* src, const Marking* tgt, bool dual) {
  const auto& S = *F.source;
  const auto& T = *F.target;
  auto in_src = [&](Mor f) { return !src || src->contains(f); };
  auto in_tgt = [&](Mor f) { return !tgt || tgt->contains(f); };
  std::vector<Obj> preimage(T.num_objects(), kNone);
  for (std::size_t a = 0; a < S.num_objects(); ++a) {
    const Obj x = F(static_cast<Obj>(a));
    if (preimage[x] != kNone) {
      return Fails("not injective on objects: " + S.object_name(preimage[x]) + " and " +
                   S.object_name(static_cast<Obj>(a)) + " both map to " + T.object_name(x));
    }
    preimage[x] = static_cast<Obj>(a);
  }
  for (std::size_t f = 0; f < S.num_morphisms(); ++f) {
    if (in_src(static_cast<Mor>(f)) && !in_tgt(F.map(static_cast<Mor>(f)))) {
      return Fails("marked morphism " + S.morphism_name(static_cast<Mor>(f)) + " leaves the target marking");
    }
  }
  for (std::size_t a = 0; a < S.num_objects(); ++a) {
    for (std::size_t b = 0; b < S.num_objects(); ++b) {
      std::vector<Mor> images;
      for (Mor f : S.hom(static_cast<Obj>(a), static_cast<Obj>(b))) {
        if (in_src(f)) images.push_back(F.map(f));
      }
      std::sort(images.begin(), images.end());
      if (std::adjacent_find(images.begin(), images.end()) != images.end()) {
        return Fails("not faithful between " + S.object_name(static_cast<Obj>(a)) + " and " +
                     S.object_name(static_cast<Obj>(b)));
      }
      for (Mor t : T.hom(F(static_cast<Obj>(a)), F(static_cast<Obj>(b)))) {
        if (in_tgt(t) && !std::binary_search(images.begin(), images.end(), t)) {
          return Fails("not full: " + T.morphism_name(t) + " has no preimage");
        }
      }
    }
  }
  for (std::size_t t = 0; t < T.num_morphisms(); ++t) {
    if (!in_tgt(static_cast<Mor>(t))) continue;
    const Obj anchor = dual ? T.source(static_cast<Mor>(t)) : T.target(static_cast<Mor>(t));
    const Obj other = dual ? T.target(static_cast<Mor>(t)) : T.source(static_cast<Mor>(t));
    if (preimage[anchor] != kNone && preimage[other] == kNone) {
      return Fails(T.morphism_name(static_cast<Mor>(t)));
    }
  }
  return Holds();
}

}  // namespace

CategoryOver full_subcategory(const CatPtr& C, const std::vector<Obj>& objects) {
  CategoryBuilder b;
  std::vector<Obj> local(C->num_objects(), kNone);
  for (Obj a : objects) local[a] = b.add_object(C->object_name(a));
  std::vector<Mor> local_mor(C->num_morphisms(), kNone);
  std::vector<Mor> back;
  for (std::size_t f = 0; f < C->num_morphisms(); ++f) {
    const Obj s = local[C->source(static_cast<Mor>(f))], t = local[C->target(static_cast<Mor>(f))];
    if (s == kNone || t == kNone) continue;
    local_mor[f] = b.add_morphism(C->morphism_name(static_cast<Mor>(f)), s, t);
    back.push_back(static_cast<Mor>(f));
  }
  for (Obj a : objects) b.set_identity(local[a], local_mor[C->identity(a)]);
  auto sub = b.build([&](Mor g, Mor f) { return local_mor[C->compose(back[g], back[f])]; }, false);
  return {sub, Functor{sub, C, objects, back}};
}

CategoryOver wide_subcategory(const Marking& m) {
  const CatPtr& C = m.category();
  CategoryBuilder b;
  std::vector<Obj> objs(C->num_objects());
  for (std::size_t a = 0; a < C->num_objects(); ++a) objs[a] = b.add_object(C->object_name(static_cast<Obj>(a)));
  std::vector<Mor> local(C->num_morphisms(), kNone);
  std::vector<Mor> back;
  for (std::size_t f = 0; f < C->num_morphisms(); ++f) {
    if (!m.contains(static_cast<Mor>(f))) continue;
    local[f] = b.add_morphism(C->morphism_name(static_cast<Mor>(f)), C->source(static_cast<Mor>(f)),
                              C->target(static_cast<Mor>(f)));
    back.push_back(static_cast<Mor>(f));
  }
  for (std::size_t a = 0; a < C->num_objects(); ++a) {
    const Mor id = local[C->identity(static_cast<Obj>(a))];
    if (id == kNone) throw Error(ErrorKind::PreconditionViolated, "marking is not wide");
    b.set_identity(static_cast<Obj>(a), id);
  }
  auto sub = b.build(
      [&](Mor g, Mor f) {
        const Mor h = local[C->compose(back[g], back[f])];
        if (h == kNone) throw Error(ErrorKind::PreconditionViolated, "marking is not closed under composition");
        return h;
      },
      false);
  return {sub, Functor{sub, C, objs, back}};
}

CatPtr opposite(const CatPtr& C) {
  CategoryBuilder b;
  for (std::size_t a = 0; a < C->num_objects(); ++a) b.add_object(C->object_name(static_cast<Obj>(a)));
  for (std::size_t f = 0; f < C->num_morphisms(); ++f) {
    b.add_morphism(C->morphism_name(static_cast<Mor>(f)), C->target(static_cast<Mor>(f)),
                   C->source(static_cast<Mor>(f)));
  }
  for (std::size_t a = 0; a < C->num_objects(); ++a) b.set_identity(static_cast<Obj>(a), C->identity(static_cast<Obj>(a)));
  return b.build([&](Mor g, Mor f) { return C->compose(f, g); }, false);
}

ProductCategory product(const CatPtr& A, const CatPtr& B) {
  CategoryBuilder b;
  const std::size_t na = A->num_objects(), nb = B->num_objects();
  const std::size_t ma = A->num_morphisms(), mb = B->num_morphisms();
  for (std::size_t x = 0; x < na; ++x) {
    for (std::size_t y = 0; y < nb; ++y) {
      b.add_object("(" + A->object_name(static_cast<Obj>(x)) + "," + B->object_name(static_cast<Obj>(y)) + ")");
    }
  }
  for (std::size_t f = 0; f < ma; ++f) {
    for (std::size_t g = 0; g < mb; ++g) {
      b.add_morphism("(" + A->morphism_name(static_cast<Mor>(f)) + "," + B->morphism_name(static_cast<Mor>(g)) + ")",
                     static_cast<Obj>(A->source(static_cast<Mor>(f)) * nb + B->source(static_cast<Mor>(g))),
                     static_cast<Obj>(A->target(static_cast<Mor>(f)) * nb + B->target(static_cast<Mor>(g))));
    }
  }
  for (std::size_t x = 0; x < na; ++x) {
    for (std::size_t y = 0; y < nb; ++y) {
      b.set_identity(static_cast<Obj>(x * nb + y),
                     static_cast<Mor>(A->identity(static_cast<Obj>(x)) * mb + B->identity(static_cast<Obj>(y))));
    }
  }
  auto P = b.build(
      [&](Mor g, Mor f) {
        return static_cast<Mor>(A->compose(g / static_cast<Mor>(mb), f / static_cast<Mor>(mb)) * mb +
                                B->compose(g % static_cast<Mor>(mb), f % static_cast<Mor>(mb)));
      },
      false);
  Functor p1{P, A, {}, {}}, p2{P, B, {}, {}};
  for (std::size_t o = 0; o < na * nb; ++o) {
    p1.on_objects.push_back(static_cast<Obj>(o / nb));
    p2.on_objects.push_back(static_cast<Obj>(o % nb));
  }
  for (std::size_t f = 0; f < ma * mb; ++f) {
    p1.on_morphisms.push_back(static_cast<Mor>(f / mb));
    p2.on_morphisms.push_back(static_cast<Mor>(f % mb));
  }
  return {P, p1, p2};
}

CatPtr empty_category() { return CategoryBuilder().build(); }

CatPtr terminal_category() {
  CategoryBuilder b;
  b.add_identity(b.add_object("*"), "id");
  return b.build();
}

CategoryOver slice_category(const CatPtr& C, Obj j) {
  if (j < 0 || j >= static_cast<Obj>(C->num_objects())) throw Error(ErrorKind::UnknownObject, std::to_string(j));
  CategoryBuilder b;
  std::vector<Mor> objs;  // slice object -> morphism of C
  std::vector<Obj> slice_of(C->num_morphisms(), kNone);
  for (Mor f : C->in(j)) {
    slice_of[f] = b.add_object(C->morphism_name(f));
    objs.push_back(f);
  }
  std::vector<Mor> under;  // slice morphism -> morphism of C
  std::map<std::pair<Mor, Obj>, Mor> index;
  for (std::size_t x = 0; x < objs.size(); ++x) {
    for (std::size_t y = 0; y < objs.size(); ++y) {
      const Mor f = objs[x], g = objs[y];
      for (Mor u : C->hom(C->source(f), C->source(g))) {
        if (C->compose(g, u) != f) continue;
        const Mor m = b.add_morphism(C->morphism_name(u) + ">" + C->morphism_name(g), static_cast<Obj>(x),
                                     static_cast<Obj>(y));
        under.push_back(u);
        index[{u, static_cast<Obj>(y)}] = m;
        if (u == C->identity(C->source(f))) b.set_identity(static_cast<Obj>(x), m);
      }
    }
  }
  auto S = b.build(
      [&](Mor g, Mor f) { return index.at({C->compose(under[g], under[f]), b.morphism(g).target}); }, false);
  Functor proj{S, C, {}, under};
  for (Mor f : objs) proj.on_objects.push_back(C->source(f));
  return {S, proj};
}

CategoryOver latching_category(const CatPtr& C, const DegreeFunction& degree, Obj j) {
  if (auto v = check_direct(*C, degree); !v.holds()) throw Error(ErrorKind::NotDirect, v.witness);
  auto slice = slice_category(C, j);
  std::vector<Obj> keep;
  const auto into = C->in(j);
  for (std::size_t x = 0; x < into.size(); ++x) {
    if (into[x] != C->identity(j)) keep.push_back(static_cast<Obj>(x));
  }
  auto sub = full_subcategory(slice.category, keep);
  return {sub.category, compose(slice.functor, sub.functor)};
}

CategoryOver matching_category(const CatPtr& C, const DegreeFunction& degree, Obj j) {
  // Coslice j↓C is the opposite of the slice of C^op at j. C is inverse
  // under `degree`, so C^op is direct under the same degree.
  auto op = opposite(C);
  auto slice = latching_category(op, degree, j);
  auto M = opposite(slice.category);
  Functor F{M, C, slice.functor.on_objects, slice.functor.on_morphisms};
  return {M, F};
}

namespace {

CategoryOver comma(const Functor& F, Obj j, bool over) {
  const auto& S = *F.source;
  const auto& T = *F.target;
  CategoryBuilder b;
  std::vector<std::pair<Obj, Mor>> objs;
  for (std::size_t i = 0; i < S.num_objects(); ++i) {
    auto homs = over ? T.hom(F(static_cast<Obj>(i)), j) : T.hom(j, F(static_cast<Obj>(i)));
    for (Mor u : homs) {
      b.add_object("(" + S.object_name(static_cast<Obj>(i)) + "," + T.morphism_name(u) + ")");
      objs.emplace_back(static_cast<Obj>(i), u);
    }
  }
  std::vector<Mor> under;
  std::map<std::pair<Mor, Obj>, Mor> index;
  for (std::size_t x = 0; x < objs.size(); ++x) {
    for (std::size_t y = 0; y < objs.size(); ++y) {
      const auto [i, u] = objs[x];
      const auto [i2, u2] = objs[y];
      for (Mor k : S.hom(i, i2)) {
        const bool ok = over ? T.compose(u2, F.map(k)) == u : T.compose(F.map(k), u) == u2;
        if (!ok) continue;
        const Mor m = b.add_morphism(S.morphism_name(k) + ">(" + S.object_name(i2) + "," + T.morphism_name(u2) + ")",
                                     static_cast<Obj>(x), static_cast<Obj>(y));
        under.push_back(k);
        index[{k, static_cast<Obj>(y)}] = m;
        if (x == y && k == S.identity(i)) b.set_identity(static_cast<Obj>(x), m);
      }
    }
  }
  auto Cm = b.build([&](Mor g, Mor f) { return index.at({S.compose(under[g], under[f]), b.morphism(g).target}); },
                    false);
  Functor proj{Cm, F.source, {}, under};
  for (auto [i, u] : objs) proj.on_objects.push_back(i);
  return {Cm, proj};
}

}  // namespace

CategoryOver comma_over(const Functor& F, Obj j) { return comma(F, j, true); }
CategoryOver comma_under(const Functor& F, Obj j) { return comma(F, j, false); }

Verdict is_sieve(const Functor& F) { return sieve_check(F, nullptr, nullptr, false); }
Verdict is_cosieve(const Functor& F) { return sieve_check(F, nullptr, nullptr, true); }

std::size_t connected_components(const FiniteCategory& C) {
  UnionFind uf(C.num_objects());
  for (std::size_t f = 0; f < C.num_morphisms(); ++f) {
    uf.unite(static_cast<std::size_t>(C.source(static_cast<Mor>(f))), static_cast<std::size_t>(C.target(static_cast<Mor>(f))));
  }
  std::size_t n = 0;
  for (std::size_t a = 0; a < C.num_objects(); ++a) n += uf.find(a) == a;
  return n;
}

Verdict is_cofinal(const Functor& F) {
  const auto& S = *F.source;
  const auto& T = *F.target;
  for (std::size_t b = 0; b < T.num_objects(); ++b) {
    // Objects of b↓F are pairs (i, u : b -> F(i)); indexed through a flat list.
    std::vector<std::pair<Obj, Mor>> objs;
    std::map<std::pair<Obj, Mor>, std::size_t> at;
    for (std::size_t i = 0; i < S.num_objects(); ++i) {
      for (Mor u : T.hom(static_cast<Obj>(b), F(static_cast<Obj>(i)))) {
        at[{static_cast<Obj>(i), u}] = objs.size();
        objs.emplace_back(static_cast<Obj>(i), u);
      }
    }
    if (objs.empty()) return Fails("empty comma category under " + T.object_name(static_cast<Obj>(b)));
    UnionFind uf(objs.size());
    for (std::size_t x = 0; x < objs.size(); ++x) {
      const auto [i, u] = objs[x];
      for (Mor k : S.out(i)) uf.unite(x, at.at({S.target(k), T.compose(F.map(k), u)}));
    }
    for (std::size_t x = 1; x < objs.size(); ++x) {
      if (uf.find(x) != uf.find(0)) {
        return Fails("disconnected comma category under " + T.object_name(static_cast<Obj>(b)));
      }
    }
  }
  return Holds();
}

Verdict check_direct(const FiniteCategory& C, const DegreeFunction& degree) {
  if (degree.size() != C.num_objects()) return Fails("degree function has the wrong size");
  for (std::size_t f = 0; f < C.num_morphisms(); ++f) {
    const Mor m = static_cast<Mor>(f);
    if (!C.is_identity(m) && degree[C.target(m)] <= degree[C.source(m)]) return Fails(C.morphism_name(m));
  }
  return Holds();
}

DegreeResult assign_degrees(const CatPtr& C) {
  const std::size_t n = C->num_objects();
  std::vector<int> indeg(n, 0);
  for (std::size_t f = 0; f < C->num_morphisms(); ++f) {
    const Mor m = static_cast<Mor>(f);
    if (C->is_identity(m)) continue;
    if (C->source(m) == C->target(m)) return {Fails("non-identity endomorphism " + C->morphism_name(m)), {}};
    ++indeg[C->target(m)];
  }
  DegreeFunction deg(n, 0);
  std::queue<Obj> ready;
  for (std::size_t a = 0; a < n; ++a) {
    if (indeg[a] == 0) ready.push(static_cast<Obj>(a));
  }
  std::size_t done = 0;
  while (!ready.empty()) {
    const Obj a = ready.front();
    ready.pop();
    ++done;
    for (Mor f : C->out(a)) {
      if (C->is_identity(f)) continue;
      const Obj b = C->target(f);
      deg[b] = std::max(deg[b], deg[a] + 1);
      if (--indeg[b] == 0) ready.push(b);
    }
  }
  if (done != n) {
    for (std::size_t a = 0; a < n; ++a) {
      if (indeg[a] > 0) return {Fails("cycle through " + C->object_name(static_cast<Obj>(a))), {}};
    }
  }
  return {Holds(), deg};
}

Marking two_out_of_six_closure(const CatPtr& C, const std::vector<Mor>& seed) {
  Marking m = Marking::identities(C);
  for (Mor f : seed) m.insert(f);
  bool changed = true;
  while (changed) {
    changed = false;
    auto mark = [&](Mor f) {
      if (!m.contains(f)) {
        m.insert(f);
        changed = true;
      }
    };
    for (std::size_t gi = 0; gi < C->num_morphisms(); ++gi) {
      const Mor g = static_cast<Mor>(gi);
      for (Mor f : C->in(C->source(g))) {
        const Mor gf = C->compose(g, f);
        if (m.contains(g) && m.contains(f)) mark(gf);
        if (!m.contains(gf)) continue;
        for (Mor h : C->out(C->target(g))) {
          if (!m.contains(C->compose(h, g))) continue;
          mark(f);
          mark(g);
          mark(h);
          mark(C->compose(h, gf));
        }
      }
    }
  }
  return m;
}

std::optional<std::string> two_out_of_six_violation(const Marking& m) {
  const auto& C = *m.category();
  for (std::size_t gi = 0; gi < C.num_morphisms(); ++gi) {
    const Mor g = static_cast<Mor>(gi);
    for (Mor f : C.in(C.source(g))) {
      if (!m.contains(C.compose(g, f))) continue;
      for (Mor h : C.out(C.target(g))) {
        if (!m.contains(C.compose(h, g))) continue;
        for (Mor x : {f, g, h, C.compose(h, C.compose(g, f))}) {
          if (!m.contains(x)) {
            return "(" + C.morphism_name(h) + ", " + C.morphism_name(g) + ", " + C.morphism_name(f) +
                   ") leaves " + C.morphism_name(x) + " unmarked";
          }
        }
      }
    }
  }
  return std::nullopt;
}

std::optional<std::pair<Mor, Mor>> reedy_factorization(const ReedyStructure& R, Mor f) {
  std::optional<std::pair<Mor, Mor>> found;
  for (auto [g, h] : R.category->factorizations(f)) {
    if (R.faces.contains(g) && R.degeneracies.contains(h)) {
      if (found) return std::nullopt;
      found = std::make_pair(g, h);
    }
  }
  return found;
}

Verdict check_reedy_structure(const ReedyStructure& R) {
  const auto& C = *R.category;
  if (R.degree.size() != C.num_objects()) return Fails("degree function has the wrong size");
  for (const Marking* m : {&R.faces, &R.degeneracies}) {
    if (!m->is_wide()) return Fails("operator marking is not wide");
    if (auto v = m->composition_violation()) return Fails("operator marking not closed under " + *v);
  }
  for (std::size_t fi = 0; fi < C.num_morphisms(); ++fi) {
    const Mor f = static_cast<Mor>(fi);
    if (C.is_identity(f)) continue;
    const int ds = R.degree[C.source(f)], dt = R.degree[C.target(f)];
    if (R.faces.contains(f) && dt <= ds) return Fails("face operator " + C.morphism_name(f) + " does not raise degree");
    if (R.degeneracies.contains(f) && dt >= ds) {
      return Fails("degeneracy operator " + C.morphism_name(f) + " does not lower degree");
    }
  }
  for (std::size_t fi = 0; fi < C.num_morphisms(); ++fi) {
    const Mor f = static_cast<Mor>(fi);
    int count = 0;
    for (auto [g, h] : C.factorizations(f)) count += R.faces.contains(g) && R.degeneracies.contains(h);
    if (count != 1) {
      return Fails(C.morphism_name(f) + " has " + std::to_string(count) + " degeneracy-then-face factorizations");
    }
  }
  return Holds();
}

Verdict is_bisieve(const Functor& F, const ReedyStructure& source, const ReedyStructure& target) {
  if (auto v = sieve_check(F, &source.faces, &target.faces, false); !v.holds()) {
    return Fails("face part: " + v.witness);
  }
  if (auto v = sieve_check(F, &source.degeneracies, &target.degeneracies, true); !v.holds()) {
    return Fails("degeneracy part: " + v.witness);
  }
  return Holds();
}

}  // namespace catkit
