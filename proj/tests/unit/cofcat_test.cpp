#include <gtest/gtest.h>

#include <map>
#include <numeric>

#include "catkit/constructive.hpp"
#include "catkit/diagram_cofcat.hpp"
#include "catkit/direct.hpp"
#include "catkit/functor_search.hpp"
#include "catkit/presentation.hpp"
#include "catkit/reedy.hpp"
#include "catkit/text_format.hpp"

using namespace catkit;

namespace {

std::map<std::string, Verdict> by_name(const CheckReport& r) {
  std::map<std::string, Verdict> out;
  for (const auto& c : r) out[c.name] = c.verdict;
  return out;
}

bool all_hold(const CheckReport& r) {
  for (const auto& c : r) {
    if (!c.verdict.holds()) return false;
  }
  return true;
}

Marking marking_of(const CatPtr& C, const std::vector<std::string>& names) {
  std::vector<char> sel(C->num_morphisms(), 0);
  for (std::size_t a = 0; a < C->num_objects(); ++a) sel[C->identity(static_cast<Obj>(a))] = 1;
  for (const auto& n : names) sel[C->morphism_named(n)] = 1;
  return Marking(C, sel);
}

Diagram on_values(const CatPtr& J, const CatPtr& C, const std::vector<std::string>& values) {
  std::vector<Obj> objs;
  for (const auto& v : values) objs.push_back(C->object(v));
  return functor_from_object_map(J, C, objs);
}

CofibrationPresentation from_corpus(const std::string& name) {
  return parse_presentation(read_file(std::string(CATKIT_TEST_CORPUS) + "/" + name));
}

int value(const FiniteCategory& C, Obj a) { return std::stoi(C.object_name(a)); }

}  // namespace

TEST(CofibrationAxioms, Examples) {
  auto L = lattice_cofcat(Poset::divisors(12), WeMode::Identities);
  EXPECT_TRUE(all_hold(check_cofibration_axioms(L)));

  auto one = L;
  one.we = marking_of(L.category, {"1<=2"});
  auto r = by_name(check_cofibration_axioms(one));
  EXPECT_TRUE(r.at("pushouts").fails()) << r.at("pushouts").witness;

  auto stiff = L;
  stiff.cof = Marking::identities(L.category);
  EXPECT_TRUE(by_name(check_cofibration_axioms(stiff)).at("factorization").fails());
}

TEST(CofibrationAxioms, PushoutsOfCofibrationsAreCofibrations) {
  // independent pass with joins read off divisor names
  for (const auto& P : {lattice_cofcat(Poset::divisors(12), WeMode::Identities), from_corpus("lattice12.cat"),
                        parse_model(read_file(std::string(CATKIT_TEST_CORPUS) + "/model12_ids.model")).base}) {
    const auto& C = *P.category;
    for (std::size_t f = 0; f < C.num_morphisms(); ++f) {
      if (!P.cof.contains(static_cast<Mor>(f))) continue;
      for (Mor g : C.out(C.source(static_cast<Mor>(f)))) {
        const int b = value(C, C.target(static_cast<Mor>(f)));
        const int c = value(C, C.target(g));
        const int join = std::lcm(b, c);
        auto po = pushout(P.category, static_cast<Mor>(f), g);
        ASSERT_TRUE(po.has_value());
        EXPECT_EQ(value(C, po->apex), join);
        const auto leg = C.hom(C.target(g), po->apex);
        ASSERT_EQ(leg.size(), 1u);
        EXPECT_TRUE(P.cof.contains(leg[0]));
      }
    }
  }
}

TEST(LatticeCofcat, Examples) {
  EXPECT_TRUE(all_hold(check_cofibration_axioms(lattice_cofcat(Poset::divisors(6), WeMode::Identities))));
  EXPECT_TRUE(all_hold(check_cofibration_axioms(lattice_cofcat(Poset::chain(2), WeMode::All))));
  auto V = Poset::from_relation({"0", "a", "b"}, {{"0", "a"}, {"0", "b"}});
  try {
    lattice_cofcat(V, WeMode::Identities);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotALattice);
  }
}

TEST(Latching, Examples) {
  auto L = lattice_cofcat(Poset::divisors(6), WeMode::Identities);
  auto S = sd_poset(Poset::chain(1));
  const auto& J = S.direct.category;
  ReedyShape R = ReedyShape::direct(J, S.direct.degree);
  const Obj v0 = J->object("(0)");
  const Obj top = J->object("(0,1)");

  auto X = on_values(J, L.category, {"2", "2", "2"});
  auto l0 = latching_object(X, R, v0);
  EXPECT_EQ(l0.colimit.apex, L.initial);
  auto lt = latching_object(X, R, top);
  EXPECT_EQ(L.category->object_name(lt.colimit.apex), "2");

  std::vector<std::string> vals(3);
  vals[v0] = "2";
  vals[J->object("(1)")] = "3";
  vals[top] = "6";
  auto span = on_values(J, L.category, vals);
  EXPECT_EQ(L.category->object_name(latching_object(span, R, top).colimit.apex), "6");
}

TEST(ReedyCofibrancy, Examples) {
  auto L = lattice_cofcat(Poset::divisors(6), WeMode::Identities);
  auto S = sd_poset(Poset::chain(1));
  ReedyShape R = ReedyShape::direct(S.direct.category, S.direct.degree);
  for (const auto& X : all_functors(S.direct.category, L.category)) {
    EXPECT_TRUE(is_reedy_cofibrant(X, R, L.cof).holds());
    EXPECT_TRUE(is_reedy_cofibration(identity_transformation(X), R, L.cof).holds());
  }
  // cof = identities: the nonconstant diagram has a non-identity latching map
  const auto& J = S.direct.category;
  std::vector<std::string> vals(3);
  vals[J->object("(0)")] = "1";
  vals[J->object("(1)")] = "2";
  vals[J->object("(0,1)")] = "2";
  auto X = on_values(J, L.category, vals);
  auto v = is_reedy_cofibrant(X, R, Marking::identities(L.category));
  EXPECT_TRUE(v.fails());
  EXPECT_NE(v.witness.find("(1)"), std::string::npos) << v.witness;
}

TEST(DiagramCofcat, CountsAgainstBruteForce) {
  auto L = lattice_cofcat(Poset::divisors(6), WeMode::Identities);
  auto S = sd_poset(Poset::chain(1));
  auto D = diagram_cofcat(L, S.direct, DiagramVariant::Levelwise);
  // X(0) | X(0,1) = X(1): the marked edge (1) -> (0,1) goes to an identity
  std::size_t brute = 0;
  const std::vector<int> divs = {1, 2, 3, 6};
  for (int a : divs) {
    for (int c : divs) brute += c % a == 0;
  }
  EXPECT_EQ(D.objects.size(), brute);

  auto T = diagram_cofcat(L, MarkedDirectCategory{terminal_category(), Marking::all(terminal_category()), {0}},
                          DiagramVariant::Reedy);
  EXPECT_EQ(T.presentation.category->num_objects(), L.category->num_objects());
  EXPECT_EQ(T.presentation.category->num_morphisms(), L.category->num_morphisms());
}

TEST(DiagramCofcat, HomotopicalMeansMarkedToIdentities) {
  auto L = lattice_cofcat(Poset::divisors(6), WeMode::Identities);
  for (int m = 0; m <= 1; ++m) {
    auto D = d_of_category(minimal_marking(Poset::chain(m).to_category()), 2);
    const auto& J = D.elements.direct;
    for (const auto& F : all_functors(J.category, L.category)) {
      bool to_ids = true;
      for (std::size_t f = 0; f < J.category->num_morphisms(); ++f) {
        if (J.we.contains(static_cast<Mor>(f)) && !L.category->is_identity(F.map(static_cast<Mor>(f)))) to_ids = false;
      }
      EXPECT_EQ(is_homotopical(F, J.we, L.we), to_ids);
    }
  }
}

TEST(Exactness, Examples) {
  auto P = lattice_cofcat(Poset::divisors(6), WeMode::Identities);
  auto Q = lattice_cofcat(Poset::chain(2), WeMode::Identities);
  EXPECT_TRUE(is_exact(identity_functor(P.category), P, P).holds());
  // 1,2,3,6 -> 0,1,1,1 keeps joins; 1,2,3,6 -> 0,1,1,2 does not (2 v 3 = 6)
  auto good = on_values(P.category, Q.category, {"0", "1", "1", "1"});
  EXPECT_TRUE(is_exact(good, P, Q).holds());
  auto bad = on_values(P.category, Q.category, {"0", "1", "1", "2"});
  auto r = by_name(exactness_report(bad, P, Q));
  EXPECT_TRUE(r.at("pushouts").fails());
  EXPECT_TRUE(r.at("cofibrations").holds());
}

TEST(Approximation, Examples) {
  auto P = lattice_cofcat(Poset::divisors(6), WeMode::Identities);
  auto a = approximation_check(identity_functor(P.category), P, P);
  EXPECT_TRUE(a.app1.holds());
  EXPECT_TRUE(a.app2.holds());
  auto pt = lattice_cofcat(Poset::chain(0), WeMode::Identities);
  auto Q = lattice_cofcat(Poset::chain(1), WeMode::Identities);
  auto F = on_values(pt.category, Q.category, {"0"});
  ASSERT_TRUE(is_exact(F, pt, Q).holds());
  auto b = approximation_check(F, pt, Q);
  EXPECT_TRUE(b.app1.holds());
  EXPECT_TRUE(b.app2.fails());
}

TEST(Approximation, ReedyIntoLevelwise) {
  auto L = lattice_cofcat(Poset::divisors(6), WeMode::Identities);
  auto S = sd_poset(Poset::chain(1));
  auto reedy = diagram_cofcat(L, S.direct, DiagramVariant::Reedy);
  auto lev = diagram_cofcat(L, S.direct, DiagramVariant::Levelwise);
  auto F = diagram_inclusion(reedy, lev);
  auto a = approximation_check(F, reedy.presentation, lev.presentation);
  EXPECT_TRUE(a.app1.holds());
  EXPECT_TRUE(a.app2.holds());
}

TEST(Fibration, Examples) {
  auto A = lattice_cofcat(Poset::chain(1), WeMode::Identities);
  EXPECT_TRUE(all_hold(is_fibration_of_cofcats(identity_functor(A.category), A, A)));
  auto B = lattice_cofcat(Poset::divisors(6), WeMode::All);
  auto P = product_presentation(A, B);
  EXPECT_TRUE(all_hold(is_fibration_of_cofcats(P.first, P.presentation, A)));
  EXPECT_TRUE(all_hold(is_fibration_of_cofcats(P.second, P.presentation, B)));
}

TEST(Fibration, MissingIsoLiftFails) {
  // the point mapping into the walking isomorphism's vertex 0: 0 ~ 1 lifts to nothing
  auto pt = lattice_cofcat(Poset::chain(0), WeMode::All);
  CategoryTable t;
  t.objects = {"a", "b"};
  t.morphisms = {{"1a", "a", "a"}, {"1b", "b", "b"}, {"u", "a", "b"}, {"v", "b", "a"}};
  t.identities = {{"a", "1a"}, {"b", "1b"}};
  t.composites = {{"v", "u", "1a"}, {"u", "v", "1b"}};
  CofibrationPresentation E{build_category(t), {}, {}, 0, "iso"};
  E.cof = Marking::all(E.category);
  E.we = Marking::all(E.category);
  auto F = functor_from_object_map(pt.category, E.category, {0});
  EXPECT_TRUE(by_name(is_fibration_of_cofcats(F, pt, E)).at("isofibration").fails());
}

TEST(ExtendReedy, AlreadyCofibrantComesBackUnchanged) {
  auto L = lattice_cofcat(Poset::divisors(6), WeMode::Identities);
  auto S = sd_poset(Poset::chain(1));
  const auto& J = S.direct.category;
  auto I = full_subcategory(J, {J->object("(0)"), J->object("(1)")});
  ASSERT_TRUE(is_sieve(I.functor).holds());
  for (const auto& X : homotopical_diagrams(S.direct, L, false)) {
    Budget b;
    auto e = extend_reedy(X, I.functor, S.direct, L, b);
    ASSERT_TRUE(e.verdict.holds());
    EXPECT_TRUE(same_functor(*e.replacement, X));
    for (std::size_t a = 0; a < I.category->num_objects(); ++a) {
      const Obj j = I.functor(static_cast<Obj>(a));
      EXPECT_TRUE(L.category->is_identity(e.comparison->components[j]));
    }
  }
}

TEST(ReedyLifting, EmptySieveIntoPoint) {
  auto L = lattice_cofcat(Poset::divisors(6), WeMode::Identities);
  MarkedDirectCategory pt{terminal_category(), Marking::all(terminal_category()), {0}};
  auto empty = empty_category();
  Functor sieve = make_functor(empty, pt.category, {}, {});
  for (std::size_t y = 0; y < L.category->num_objects(); ++y) {
    ReedyLiftingProblem p{sieve,
                          pt,
                          identity_functor(L.category),
                          L,
                          make_functor(empty, L.category, {}, {}),
                          functor_from_object_map(pt.category, L.category, {static_cast<Obj>(y)})};
    Budget b;
    auto r = reedy_lifting(p, b);
    ASSERT_TRUE(r.verdict.holds()) << r.verdict.witness;
    EXPECT_EQ((*r.diagonal)(0), static_cast<Obj>(y));
  }
}

TEST(BisieveLift, WholeShapeIsReturnedUnchanged) {
  auto M = parse_model(read_file(std::string(CATKIT_TEST_CORPUS) + "/model12_ids.model"));
  auto S = sd_poset(Poset::chain(1));
  const auto& J = S.direct.category;
  ReedyShape R = ReedyShape::direct(J, S.direct.degree);
  auto X = on_values(J, M.category(), {"1", "2", "2"});
  auto Y = on_values(J, M.category(), {"3", "6", "6"});
  ASSERT_TRUE(is_homotopical(X, S.direct.we, M.base.we));
  std::vector<Mor> comps;
  for (std::size_t a = 0; a < J->num_objects(); ++a) {
    comps.push_back(M.category()->hom(X(static_cast<Obj>(a)), Y(static_cast<Obj>(a)))[0]);
  }
  auto f = make_transformation(X, Y, comps);
  PartialFactorization given{X, identity_transformation(X), f};
  auto res = bisieve_lift(M, R, identity_functor(J), f, given);
  EXPECT_TRUE(all_hold(res.report));
  ASSERT_TRUE(res.factorization);
  EXPECT_TRUE(same_functor(res.factorization->middle, X));
  EXPECT_EQ(res.factorization->second.components, f.components);
}

TEST(BisieveLift, RejectsNonCofibrantSource) {
  auto M = lattice_model(Poset::chain(1), WeMode::Identities);
  M.base.cof = Marking::identities(M.category());
  auto S = sd_poset(Poset::chain(1));
  const auto& J = S.direct.category;
  ReedyShape R = ReedyShape::direct(J, S.direct.degree);
  std::vector<std::string> vals(3);
  vals[J->object("(0)")] = "0";
  vals[J->object("(1)")] = "1";
  vals[J->object("(0,1)")] = "1";
  auto X = on_values(J, M.category(), vals);
  auto f = identity_transformation(X);
  PartialFactorization given{X, f, f};
  try {
    bisieve_lift(M, R, identity_functor(J), f, given);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::PreconditionViolated);
  }
}

// Reedy cofibrations on [1]x[1] against their curried form [1] -> C^[1]_R,
// every morphism of every pair of diagrams.
TEST(Leibniz, CurriedReedyCofibrations) {
  auto C = Poset::chain(2).to_category();
  auto I = Poset::chain(1).to_category();
  const DegreeFunction dI = {0, 1};
  ReedyShape RI = ReedyShape::direct(I, dI);
  auto IJ = product(I, I);
  DegreeFunction dIJ;
  for (std::size_t a = 0; a < IJ.category->num_objects(); ++a) {
    dIJ.push_back(IJ.first(static_cast<Obj>(a)) + IJ.second(static_cast<Obj>(a)));
  }
  ReedyShape RIJ = ReedyShape::direct(IJ.category, dIJ);
  auto cell = [&](int i, int j) {
    return IJ.category->object("(" + std::to_string(i) + "," + std::to_string(j) + ")");
  };

  for (const auto& cof_names : std::vector<std::vector<std::string>>{{}, {"0<=1"}, {"1<=2"}, {"0<=1", "0<=2", "1<=2"}}) {
    auto cof = marking_of(C, cof_names);
    CofibrationPresentation P{C, cof, Marking::identities(C), 0, "chain"};
    MarkedDirectCategory Jd{I, Marking::identities(I), dI};
    auto DJ = diagram_cofcat(P, Jd, DiagramVariant::Levelwise);
    const auto& DC = DJ.presentation.category;
    std::vector<char> rcof(DC->num_morphisms(), 0);
    for (std::size_t m = 0; m < DC->num_morphisms(); ++m) {
      rcof[m] = is_reedy_cofibration(DJ.morphisms[m], RI, cof).holds();
    }
    Marking reedy_cof(DC, rcof);

    auto row = [&](const Diagram& X, int i) {
      return functor_from_object_map(I, C, {X(cell(i, 0)), X(cell(i, 1))});
    };
    auto curry = [&](const Diagram& X) {
      return functor_from_object_map(I, DC, {*DJ.find(row(X, 0)), *DJ.find(row(X, 1))});
    };

    const auto diagrams = all_functors(IJ.category, C);
    int compared = 0;
    for (const auto& X : diagrams) {
      for (const auto& Y : diagrams) {
        for (const auto& f : transformations(X, Y)) {
          const bool flat = is_reedy_cofibration(f, RIJ, cof).holds();
          auto Xc = curry(X), Yc = curry(Y);
          std::vector<Mor> comps;
          for (int i = 0; i <= 1; ++i) {
            auto fi = make_transformation(row(X, i), row(Y, i), {f.components[cell(i, 0)], f.components[cell(i, 1)]});
            comps.push_back(*DJ.find(fi));
          }
          const bool curried = is_reedy_cofibration(make_transformation(Xc, Yc, comps), RI, reedy_cof).holds();
          EXPECT_EQ(flat, curried) << cof_names.size() << " " << diagram_name(X) << " -> " << diagram_name(Y);
          ++compared;
        }
      }
    }
    EXPECT_GT(compared, 0);
  }
}
