#include <algorithm>
#include <map>
#include <set>

#include "catkit/constructive.hpp"
#include "catkit/functor_search.hpp"

namespace catkit {
namespace {

DegreeFunction pull_degree(const Functor& incl, const DegreeFunction& degree) {
  DegreeFunction out;
  for (Obj a : incl.on_objects) out.push_back(degree[a]);
  return out;
}

Functor partial_functor(const CatPtr& S, const CatPtr& T) {
  return Functor{S, T, std::vector<Obj>(S->num_objects(), kNone), std::vector<Mor>(S->num_morphisms(), kNone)};
}

// Values of an inclusion on objects and morphisms, as a search seed.
FunctorSearchOptions fixed_along(const Functor& incl, const Diagram& values) {
  FunctorSearchOptions opts;
  opts.fixed_objects.assign(incl.target->num_objects(), kNone);
  opts.fixed_morphisms.assign(incl.target->num_morphisms(), kNone);
  for (std::size_t i = 0; i < incl.on_objects.size(); ++i) opts.fixed_objects[incl.on_objects[i]] = values.on_objects[i];
  for (std::size_t h = 0; h < incl.on_morphisms.size(); ++h) {
    opts.fixed_morphisms[incl.on_morphisms[h]] = values.on_morphisms[h];
  }
  return opts;
}

std::vector<char> image_objects(const Functor& incl) {
  std::vector<char> in(incl.target->num_objects());
  for (Obj a : incl.on_objects) in[a] = 1;
  return in;
}

NaturalTransformation restrict_along(const NaturalTransformation& t, const Functor& incl) {
  NaturalTransformation r{compose(t.source, incl), compose(t.target, incl), {}};
  for (Obj a : incl.on_objects) r.components.push_back(t.components[a]);
  return r;
}

Mor checked(std::optional<Mor> m, const std::string& what) {
  if (!m) throw Error(ErrorKind::NoColimit, what);
  return *m;
}

}  // namespace

ReedyStructure restricted_structure(const Functor& incl, const ReedyStructure& J) {
  return ReedyStructure{incl.source, Marking::created_by(incl, J.faces), Marking::created_by(incl, J.degeneracies),
                        pull_degree(incl, J.degree)};
}

// ---------------------------------------------------------------------------

ReedyExtension extend_reedy(const Diagram& X, const Functor& sieve, const MarkedDirectCategory& J,
                            const CofibrationPresentation& C, Budget& budget) {
  if (auto v = is_sieve(sieve); !v.holds()) throw Error(ErrorKind::PreconditionViolated, "not a sieve: " + v.witness);
  const auto RI = ReedyShape::direct(sieve.source, pull_degree(sieve, J.degree));
  const auto RJ = ReedyShape::direct(J.category, J.degree);
  if (auto v = is_reedy_cofibrant(compose(X, sieve), RI, C.cof); !v.holds()) {
    throw Error(ErrorKind::PreconditionViolated, "restriction to the sieve is not Reedy cofibrant: " + v.witness);
  }
  if (is_reedy_cofibrant(X, RJ, C.cof).holds()) return {Holds("already Reedy cofibrant"), X, identity_transformation(X)};

  auto opts = fixed_along(sieve, compose(X, sieve));
  opts.morphism_filter = [&](Mor m, Mor image) { return !J.we.contains(m) || C.we.contains(image); };
  const auto in_I = image_objects(sieve);
  ReedyExtension out;
  std::size_t candidates = 0;
  enumerate_functors(J.category, C.category, opts, budget, [&](const Functor& Z) {
    if (!is_reedy_cofibrant(Z, RJ, C.cof).holds()) return true;
    ++candidates;
    auto t = find_transformation(Z, X,
                                 [&](Obj a, Mor c) {
                                   return in_I[a] ? c == C.category->identity(X(a)) : C.we.contains(c);
                                 },
                                 budget);
    if (!t) return !budget.exhausted();
    out.replacement = Z;
    out.comparison = std::move(t);
    return false;
  });
  if (out.replacement) {
    out.verdict = Holds();
  } else if (budget.exhausted()) {
    out.verdict = Unknown("budget exhausted after " + std::to_string(candidates) + " Reedy cofibrant candidates");
  } else {
    out.verdict = Fails("none of " + std::to_string(candidates) +
                        " homotopical Reedy cofibrant extensions maps to X by a weak equivalence fixing I");
  }
  return out;
}

// ---------------------------------------------------------------------------

ReedyLift reedy_lifting(const ReedyLiftingProblem& q, Budget& budget) {
  if (auto v = is_sieve(q.sieve); !v.holds()) throw Error(ErrorKind::PreconditionViolated, "not a sieve: " + v.witness);
  if (!same_functor(compose(q.P, q.top), compose(q.bottom, q.sieve))) {
    throw Error(ErrorKind::PreconditionViolated, "the square does not commute");
  }
  const auto RI = ReedyShape::direct(q.sieve.source, pull_degree(q.sieve, q.J.degree));
  const auto RJ = ReedyShape::direct(q.J.category, q.J.degree);
  if (auto v = is_reedy_cofibrant(q.top, RI, q.C.cof); !v.holds()) {
    throw Error(ErrorKind::PreconditionViolated, "top is not Reedy cofibrant: " + v.witness);
  }
  auto opts = fixed_along(q.sieve, q.top);
  opts.object_filter = [&](Obj a, Obj image) { return q.P(image) == q.bottom(a); };
  opts.morphism_filter = [&](Mor m, Mor image) {
    return q.P.map(image) == q.bottom.map(m) && (!q.J.we.contains(m) || q.C.we.contains(image));
  };
  ReedyLift out;
  std::size_t candidates = 0;
  std::string first_obstruction;
  const auto status = enumerate_functors(q.J.category, q.C.category, opts, budget, [&](const Functor& Z) {
    ++candidates;
    auto v = is_reedy_cofibrant(Z, RJ, q.C.cof);
    if (!v.holds()) {
      if (first_obstruction.empty()) first_obstruction = v.witness;
      return true;
    }
    out.diagonal = Z;
    return false;
  });
  if (out.diagonal) {
    out.verdict = Holds();
  } else if (status == SearchStatus::BudgetExhausted) {
    out.verdict = Unknown("budget exhausted after " + std::to_string(candidates) + " diagonal candidates");
  } else if (candidates == 0) {
    out.verdict = Fails("no homotopical functor fills the square");
  } else {
    out.verdict = Fails("no Reedy cofibrant diagonal among " + std::to_string(candidates) + " candidates; first: " +
                        first_obstruction);
  }
  return out;
}

// ---------------------------------------------------------------------------

CheckReport certify_factorization(const ModelPresentation& M, const ReedyShape& J, const NaturalTransformation& f,
                                  const PartialFactorization& h) {
  CheckReport report;
  std::vector<std::string> problems;
  if (auto v = functor_violation(h.middle)) problems.push_back("middle: " + *v);
  if (problems.empty()) {
    if (auto v = naturality_violation(h.first)) problems.push_back("left leg: " + *v);
    if (auto v = naturality_violation(h.second)) problems.push_back("right leg: " + *v);
    if (vertical_compose(h.second, h.first).components != f.components) problems.push_back("legs do not compose to f");
  }
  report.push_back({"functor", problems.empty() ? Holds() : Fails(problems.front())});
  if (!problems.empty()) {
    for (const char* n : {"middle Reedy cofibrant", "left leg weak equivalence", "right leg Reedy fibration"}) {
      report.push_back({n, Fails("not a factorization")});
    }
    return report;
  }
  report.push_back({"middle Reedy cofibrant", is_reedy_cofibrant(h.middle, J, M.base.cof)});
  Verdict we = Holds();
  for (std::size_t a = 0; a < h.first.components.size(); ++a) {
    if (!M.base.we.contains(h.first.components[a])) {
      we = Fails("component at " + J.category()->object_name(static_cast<Obj>(a)) + " is not a weak equivalence");
      break;
    }
  }
  report.push_back({"left leg weak equivalence", we});
  report.push_back({"right leg Reedy fibration", is_reedy_fibration(h.second, J, M.fib)});
  return report;
}

BisieveLift bisieve_lift(const ModelPresentation& M, const ReedyShape& J, const Functor& incl,
                         const NaturalTransformation& f, const PartialFactorization& given) {
  const CatPtr& Cp = M.category();
  const auto& C = *Cp;
  const auto& S = *J.category();
  const Diagram& X = f.source;
  const Diagram& Y = f.target;

  // Preconditions.
  const ReedyShape RI(restricted_structure(incl, J.structure()));
  if (auto v = is_bisieve(incl, RI.structure(), J.structure()); !v.holds()) {
    throw Error(ErrorKind::PreconditionViolated, "not a bisieve: " + v.witness);
  }
  if (auto v = is_reedy_cofibrant(X, J, M.base.cof); !v.holds()) {
    throw Error(ErrorKind::PreconditionViolated, "source is not Reedy cofibrant: " + v.witness);
  }
  const auto fI = restrict_along(f, incl);
  auto pre = certify_factorization(M, RI, fI, given);
  for (const auto& c : pre) {
    if (!c.verdict.holds()) {
      throw Error(ErrorKind::PreconditionViolated, "given factorization on I, " + c.name + ": " + c.verdict.witness);
    }
  }
  if (given.first.source.on_objects != fI.source.on_objects || given.second.target.on_objects != fI.target.on_objects) {
    throw Error(ErrorKind::PreconditionViolated, "given factorization is not one of f restricted to I");
  }

  Functor Z = partial_functor(J.category(), Cp);
  std::vector<Mor> w(S.num_objects(), kNone), p(S.num_objects(), kNone);
  for (std::size_t i = 0; i < incl.on_objects.size(); ++i) {
    const Obj j = incl.on_objects[i];
    Z.on_objects[j] = given.middle.on_objects[i];
    w[j] = given.first.components[i];
    p[j] = given.second.components[i];
  }
  for (std::size_t h = 0; h < incl.on_morphisms.size(); ++h) Z.on_morphisms[incl.on_morphisms[h]] = given.middle.on_morphisms[h];

  for (Obj j : J.by_degree()) {
    if (Z.on_objects[j] != kNone) continue;
    const std::string at = " at " + S.object_name(j);
    const auto& lat = J.latching(j);
    const auto& lmaps = J.latching_maps(j);
    const auto& mat = J.matching(j);
    const auto& mmaps = J.matching_maps(j);

    // Left: X_j ⊔_{L_j X} L_j Z.
    const Diagram DZ = compose(Z, lat.functor);
    const Diagram DX = compose(X, lat.functor);
    auto LZ = find_colimit(DZ);
    if (!LZ) throw Error(ErrorKind::NoColimit, "latching object of the middle" + at);
    const auto LX = latching_object(X, J, j);
    Cocone via{LZ->apex, {}};
    for (std::size_t k = 0; k < lmaps.size(); ++k) via.legs.push_back(C.compose(LZ->legs[k], w[lat.functor(static_cast<Obj>(k))]));
    const Mor iota = checked(factor_cocone(DX, LX.colimit, via), "induced latching map" + at);
    auto P = pushout(Cp, LX.map, iota);
    if (!P) throw Error(ErrorKind::NoColimit, "latching pushout" + at);

    // Right: Y_j ×_{M_j Y} M_j Z.
    const Diagram DZm = compose(Z, mat.functor);
    const Diagram DYm = compose(Y, mat.functor);
    auto MZ = find_limit(DZm);
    if (!MZ) throw Error(ErrorKind::NoColimit, "matching object of the middle" + at + " (no limit)");
    const auto MY = matching_object(Y, J, j);
    Cocone down{MZ->apex, {}};
    for (std::size_t k = 0; k < mmaps.size(); ++k) down.legs.push_back(C.compose(p[mat.functor(static_cast<Obj>(k))], MZ->legs[k]));
    const Mor pi = checked(factor_cone(DYm, MY.limit, down), "induced matching map" + at);
    auto Q = pullback(Cp, MY.map, pi);
    if (!Q) throw Error(ErrorKind::NoColimit, "matching pullback" + at + " (no limit)");

    // The corner P -> Q.
    const Obj Xj = X(j), Yj = Y(j);
    const Mor fj = f.components[j];
    Cocone lz_to_y{Yj, {}};
    for (std::size_t k = 0; k < lmaps.size(); ++k) {
      lz_to_y.legs.push_back(C.compose(Y.map(lmaps[k]), p[lat.functor(static_cast<Obj>(k))]));
    }
    const Mor zy = checked(factor_cocone(DZ, *LZ, lz_to_y), "latching object of the middle over Y" + at);
    const Diagram span = span_diagram(Cp, LX.map, iota);
    const Mor to_y = checked(factor_cocone(span, *P, Cocone{Yj, {C.compose(fj, LX.map), fj, zy}}), "pushout to Y" + at);
    Cocone x_to_m{Xj, {}};
    for (std::size_t k = 0; k < mmaps.size(); ++k) {
      x_to_m.legs.push_back(C.compose(w[mat.functor(static_cast<Obj>(k))], X.map(mmaps[k])));
    }
    const Mor xm = checked(factor_cone(DZm, *MZ, x_to_m), "X into the matching object of the middle" + at);
    Cocone lz_to_m{LZ->apex, {}};
    for (std::size_t l = 0; l < mmaps.size(); ++l) {
      const Obj b = mat.functor(static_cast<Obj>(l));
      Cocone legs{Z(b), {}};
      for (std::size_t k = 0; k < lmaps.size(); ++k) legs.legs.push_back(Z.map(S.compose(mmaps[l], lmaps[k])));
      lz_to_m.legs.push_back(checked(factor_cocone(DZ, *LZ, legs), "latching to matching" + at));
    }
    const Mor lm = checked(factor_cone(DZm, *MZ, lz_to_m), "latching to matching" + at);
    const Mor to_m = checked(factor_cocone(span, *P, Cocone{MZ->apex, {C.compose(xm, LX.map), xm, lm}}),
                             "pushout to the matching object" + at);
    const Mor corner = checked(factor_cone(cospan_diagram(Cp, MY.map, pi), *Q,
                                           Cocone{P->apex, {C.compose(MY.map, to_y), to_y, to_m}}),
                               "corner map" + at);

    const auto& fac = M.acyclic_cof_fib[corner];
    if (!fac) throw Error(ErrorKind::FactorizationMissing, "no acyclic cofibration/fibration factorization of " + C.morphism_name(corner));
    const Obj Zj = C.target(fac->first);
    Z.on_objects[j] = Zj;
    w[j] = C.compose(fac->first, P->legs[1]);
    p[j] = C.compose(Q->legs[1], fac->second);
    const Mor latch = C.compose(fac->first, P->legs[2]);
    const Mor match = C.compose(Q->legs[2], fac->second);

    auto value = [&](Mor m) -> Mor {
      if (S.is_identity(m)) return C.identity(Z(S.source(m)));
      if (S.target(m) == j) {
        auto k = std::find(lmaps.begin(), lmaps.end(), m);
        if (k != lmaps.end()) return C.compose(latch, LZ->legs[k - lmaps.begin()]);
      }
      if (S.source(m) == j) {
        auto l = std::find(mmaps.begin(), mmaps.end(), m);
        if (l != mmaps.end()) return C.compose(MZ->legs[l - mmaps.begin()], match);
      }
      return Z.map(m);
    };
    for (std::size_t mi = 0; mi < S.num_morphisms(); ++mi) {
      const Mor g = static_cast<Mor>(mi);
      const Obj s = S.source(g), t = S.target(g);
      if (s != j && t != j) continue;
      if (Z(s) == kNone || Z(t) == kNone) continue;
      auto fd = reedy_factorization(J.structure(), g);
      if (!fd) throw Error(ErrorKind::PreconditionViolated, "no unique Reedy factorization of " + S.morphism_name(g));
      const Mor a = value(fd->second), b = value(fd->first);
      if (a == kNone || b == kNone) throw Error(ErrorKind::PreconditionViolated, "undetermined value on " + S.morphism_name(g));
      Z.on_morphisms[g] = C.compose(b, a);
    }
  }

  BisieveLift out;
  PartialFactorization h{Z, NaturalTransformation{X, Z, w}, NaturalTransformation{Z, Y, p}};
  out.report = certify_factorization(M, J, f, h);
  bool agrees = Z.on_objects.size() == S.num_objects();
  if (agrees) {
    agrees = compose(Z, incl).on_morphisms == given.middle.on_morphisms &&
             restrict_along(h.first, incl).components == given.first.components &&
             restrict_along(h.second, incl).components == given.second.components;
  }
  out.report.push_back({"restriction", agrees ? Holds() : Fails("the extension does not restrict to the given factorization")});
  out.factorization = std::move(h);
  return out;
}

// ---------------------------------------------------------------------------

CriterionResult exactness_criterion_check(const Functor& f, const DegreeFunction& source_degree,
                                          const DegreeFunction& target_degree, const LatchingCandidate& candidate) {
  const auto& I = *f.source;
  const auto& J = *f.target;
  CriterionResult out;
  std::vector<Verdict> parts;
  for (std::size_t ii = 0; ii < I.num_objects(); ++ii) {
    const Obj i = static_cast<Obj>(ii);
    CriterionStep step;
    step.i = i;
    step.source_latching = latching_category(f.source, source_degree, i);
    auto LJ = latching_category(f.target, target_degree, f(i));
    const auto& L = *LJ.category;
    std::vector<Obj> keep;
    std::string bad;
    for (Mor u : candidate(i)) {
      auto x = L.find_object(J.morphism_name(u));
      if (!x || J.target(u) != f(i)) {
        bad = J.morphism_name(u) + " is not in the latching category of " + J.object_name(f(i));
        break;
      }
      keep.push_back(*x);
    }
    std::sort(keep.begin(), keep.end());
    keep.erase(std::unique(keep.begin(), keep.end()), keep.end());
    auto K = full_subcategory(LJ.category, keep);
    step.K = {K.category, compose(LJ.functor, K.functor)};
    const std::string at = " at " + I.object_name(i);
    if (!bad.empty()) {
      step.cofinal = step.sieve = Fails(bad);
    } else {
      step.sieve = is_sieve(K.functor);
      // The canonical functor from the latching category of i into K.
      const auto& LI = *step.source_latching.category;
      Functor g{step.source_latching.category, K.category, {}, {}};
      for (std::size_t x = 0; x < LI.num_objects() && bad.empty(); ++x) {
        const Mor u = I.morphism_named(LI.object_name(static_cast<Obj>(x)));
        const Mor fu = f.map(u);
        if (J.is_identity(fu)) {
          bad = "degree collapse: " + I.morphism_name(u) + " goes to an identity";
          break;
        }
        auto y = K.category->find_object(J.morphism_name(fu));
        if (!y) bad = J.morphism_name(fu) + " (image of " + I.morphism_name(u) + ") is not in K";
        else g.on_objects.push_back(*y);
      }
      for (std::size_t m = 0; m < LI.num_morphisms() && bad.empty(); ++m) {
        const Mor lm = static_cast<Mor>(m);
        const Mor v = step.source_latching.functor.map(lm);
        const Mor u2 = I.morphism_named(LI.object_name(LI.target(lm)));
        auto y = K.category->find_morphism(J.morphism_name(f.map(v)) + ">" + J.morphism_name(f.map(u2)));
        if (!y) bad = "no image for " + LI.morphism_name(lm);
        else g.on_morphisms.push_back(*y);
      }
      if (!bad.empty()) {
        step.cofinal = Fails(bad);
      } else {
        step.into_K = g;
        step.cofinal = is_cofinal(g);
      }
    }
    if (!step.cofinal.holds()) parts.push_back(Fails("cofinality" + at + ": " + step.cofinal.witness));
    if (!step.sieve.holds()) parts.push_back(Fails("sieve" + at + ": " + step.sieve.witness));
    out.steps.push_back(std::move(step));
  }
  out.verdict = conjoin(parts);
  return out;
}

std::vector<Obj> d_values(const ElementCategory& E, Obj x) {
  const int k = E.direct.degree[x];
  const auto& N = *E.simplices;
  if (k == 0) return {static_cast<Obj>(E.simplex[x])};
  std::vector<Obj> out;
  for (int v : N.vertices(k, E.simplex[x])) out.push_back(static_cast<Obj>(v));
  return out;
}

CriterionInstance max_fiber_instance(const Poset& P, int p) {
  auto S = std::make_shared<Subdivision>(sd_poset(P));
  const CatPtr& Sd = S->direct.category;
  std::vector<Obj> fiber;
  for (std::size_t a = 0; a < Sd->num_objects(); ++a) {
    if (S->max(static_cast<Obj>(a)) == p) fiber.push_back(static_cast<Obj>(a));
  }
  auto F = full_subcategory(Sd, fiber);
  CriterionInstance out;
  out.name = "max^-1{" + P.element(p) + "} -> Sd P";
  out.f = F.functor;
  out.source_degree = pull_degree(F.functor, S->direct.degree);
  out.target_degree = S->direct.degree;
  out.candidate = [S, f = F.functor, p](Obj i) {
    const auto& C = *S->direct.category;
    const Obj A = f(i);
    std::vector<Mor> K;
    for (Mor u : C.in(A)) {
      if (C.is_identity(u)) continue;
      const Obj B = C.source(u);
      for (std::size_t c = 0; c < C.num_objects(); ++c) {
        const Obj Cc = static_cast<Obj>(c);
        if (Cc == A || S->max(Cc) != p) continue;
        if (!C.hom(B, Cc).empty() && !C.hom(Cc, A).empty()) {
          K.push_back(u);
          break;
        }
      }
    }
    return K;
  };
  return out;
}

CriterionInstance product_instance(int k, int m, int deg_bound) {
  const Poset Pk = Poset::chain(k), Pm = Poset::chain(m);
  const Poset Pkm = Poset::product(Pk, Pm);
  auto Dkm = std::make_shared<DCategory>(d_of_category(minimal_marking(Pkm.to_category()), deg_bound));
  auto Dk = std::make_shared<DCategory>(d_of_category(minimal_marking(Pk.to_category()), deg_bound));
  auto Dm = std::make_shared<DCategory>(d_of_category(minimal_marking(Pm.to_category()), deg_bound));
  const auto prod = product(Dk->elements.category(), Dm->elements.category());
  const auto& E = Dkm->elements;
  const auto& T = *prod.category;
  auto value_name = [](const std::vector<Obj>& vs, const FiniteCategory& base) {
    std::string s = "(";
    for (std::size_t a = 0; a < vs.size(); ++a) s += (a ? "," : "") + base.object_name(vs[a]);
    return s + ")";
  };
  Functor f{E.category(), prod.category, {}, {}};
  std::vector<Obj> first_of(E.category()->num_objects()), second_of(E.category()->num_objects());
  const CatPtr baseK = Pk.to_category(), baseM = Pm.to_category();
  for (std::size_t x = 0; x < E.category()->num_objects(); ++x) {
    std::vector<Obj> a, b;
    for (Obj v : d_values(E, static_cast<Obj>(x))) {
      a.push_back(v / static_cast<Obj>(Pm.size()));
      b.push_back(v % static_cast<Obj>(Pm.size()));
    }
    first_of[x] = Dk->elements.category()->object(value_name(a, *baseK));
    second_of[x] = Dm->elements.category()->object(value_name(b, *baseM));
    f.on_objects.push_back(T.object("(" + Dk->elements.category()->object_name(first_of[x]) + "," +
                                    Dm->elements.category()->object_name(second_of[x]) + ")"));
  }
  for (std::size_t u = 0; u < E.category()->num_morphisms(); ++u) {
    const Obj t = E.category()->target(static_cast<Mor>(u));
    const Mor ma = Dk->elements.morphism(E.op[u], first_of[t]);
    const Mor mb = Dm->elements.morphism(E.op[u], second_of[t]);
    f.on_morphisms.push_back(T.morphism_named("(" + Dk->elements.category()->morphism_name(ma) + "," +
                                              Dm->elements.category()->morphism_name(mb) + ")"));
  }
  if (auto v = functor_violation(f)) throw Error(ErrorKind::NotAFunctor, *v);
  CriterionInstance out;
  out.name = "D([" + std::to_string(k) + "]x[" + std::to_string(m) + "]) -> D[" + std::to_string(k) + "]xD[" +
             std::to_string(m) + "]";
  out.f = f;
  out.source_degree = E.direct.degree;
  for (std::size_t x = 0; x < T.num_objects(); ++x) {
    out.target_degree.push_back(Dk->elements.direct.degree[prod.first(static_cast<Obj>(x))] +
                                Dm->elements.direct.degree[prod.second(static_cast<Obj>(x))]);
  }
  out.candidate = [Dk, Dm, prod, f](Obj i) {
    const auto& T = *prod.category;
    const Obj target = f(i);
    const int l = Dk->elements.direct.degree[prod.first(target)];
    std::vector<Mor> K;
    for (Mor u : T.in(target)) {
      if (T.is_identity(u)) continue;
      std::set<int> used;
      for (int v : Dk->elements.op[prod.first.map(u)]) used.insert(v);
      for (int v : Dm->elements.op[prod.second.map(u)]) used.insert(v);
      if (static_cast<int>(used.size()) != l + 1) K.push_back(u);
    }
    return K;
  };
  return out;
}

}  // namespace catkit
