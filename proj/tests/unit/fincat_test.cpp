#include <gtest/gtest.h>

#include <set>

#include "catkit/colimits.hpp"
#include "catkit/constructive.hpp"
#include "catkit/dbar.hpp"
#include "catkit/presentation.hpp"
#include "catkit/direct.hpp"
#include "catkit/functor_search.hpp"
#include "catkit/monotone.hpp"
#include "catkit/text_format.hpp"
#include "test_util.hpp"

using namespace catkit;

namespace {

CategoryTable chain2_table() {
  CategoryTable t;
  t.objects = {"0", "1", "2"};
  t.morphisms = {{"1_0", "0", "0"}, {"1_1", "1", "1"}, {"1_2", "2", "2"},
                 {"a", "0", "1"},     {"b", "1", "2"},     {"ba", "0", "2"}};
  t.identities = {{"0", "1_0"}, {"1", "1_1"}, {"2", "1_2"}};
  t.composites = {{"b", "a", "ba"}};
  return t;
}

ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no error";
  return ErrorKind::BadIndex;
}

}  // namespace

TEST(BuildCategory, ChainTableGivesSixMorphisms) {
  auto C = build_category(chain2_table());
  EXPECT_EQ(C->num_objects(), 3u);
  EXPECT_EQ(C->num_morphisms(), 6u);
  EXPECT_EQ(C->compose(C->morphism_named("b"), C->morphism_named("a")), C->morphism_named("ba"));
}

TEST(BuildCategory, NonAssociativeTableIsRejected) {
  // one object, e with e*e = f, f*e = e: then (f*e)*e = e*e = f but f*(e*e) = f*f
  CategoryTable t;
  t.objects = {"x"};
  t.morphisms = {{"1", "x", "x"}, {"e", "x", "x"}, {"f", "x", "x"}};
  t.identities = {{"x", "1"}};
  t.composites = {{"e", "e", "f"}, {"f", "e", "e"}, {"e", "f", "e"}, {"f", "f", "e"}};
  EXPECT_EQ(kind_of([&] { build_category(t); }), ErrorKind::AssociativityViolation);
}

TEST(BuildCategory, MissingCompositeAndBadTyping) {
  auto t = chain2_table();
  t.composites.clear();
  EXPECT_EQ(kind_of([&] { build_category(t); }), ErrorKind::MissingComposite);
  auto u = chain2_table();
  u.composites = {{"a", "b", "ba"}};
  EXPECT_EQ(kind_of([&] { build_category(u); }), ErrorKind::IllTypedComposite);
}

TEST(BuildCategory, DivisorLatticeOfSix) {
  auto C = Poset::divisors(6).to_category();
  EXPECT_EQ(C->num_objects(), 4u);
  int pairs = 0;
  for (int a : {1, 2, 3, 6}) {
    for (int b : {1, 2, 3, 6}) pairs += b % a == 0;
  }
  EXPECT_EQ(C->num_morphisms(), static_cast<std::size_t>(pairs));
}

TEST(Slice, Examples) {
  auto C2 = Poset::chain(2).to_category();
  EXPECT_EQ(slice_category(C2, 2).category->num_objects(), 3u);
  EXPECT_EQ(slice_category(C2, 0).category->num_objects(), 1u);
  auto S = sd_poset(Poset::chain(2));
  EXPECT_EQ(slice_category(S.direct.category, S.direct.category->object("(0,1,2)")).category->num_objects(), 7u);
}

TEST(Latching, Examples) {
  auto S1 = sd_poset(Poset::chain(1));
  auto L = latching_category(S1.direct.category, S1.direct.degree, S1.direct.category->object("(0,1)"));
  EXPECT_EQ(L.category->num_objects(), 2u);
  EXPECT_EQ(L.category->num_morphisms(), 2u);
  auto D = d_of_category(minimal_marking(Poset::chain(1).to_category()), 2);
  const auto& E = D.elements;
  EXPECT_EQ(latching_category(E.category(), E.direct.degree, E.category()->object("(0)")).category->num_objects(), 0u);
  auto S2 = sd_poset(Poset::chain(2));
  EXPECT_EQ(latching_category(S2.direct.category, S2.direct.degree, S2.direct.category->object("(0,1,2)"))
                .category->num_objects(),
            6u);
}

TEST(Latching, IsSliceMinusOneObjectOnFixtures) {
  for (const auto& J : testutil::direct_fixtures()) {
    for (std::size_t j = 0; j < J.category->num_objects(); ++j) {
      auto L = latching_category(J.category, J.degree, static_cast<Obj>(j));
      auto S = slice_category(J.category, static_cast<Obj>(j));
      EXPECT_EQ(L.category->num_objects() + 1, S.category->num_objects());
    }
  }
}

TEST(Sieves, Examples) {
  auto C1 = Poset::chain(1).to_category();
  auto top = full_subcategory(C1, {1});
  auto bottom = full_subcategory(C1, {0});
  auto v = is_sieve(top.functor);
  EXPECT_TRUE(v.fails());
  EXPECT_NE(v.witness.find("0<=1"), std::string::npos) << v.witness;
  EXPECT_TRUE(is_sieve(identity_functor(C1)).holds());
  EXPECT_TRUE(is_cosieve(top.functor).holds());
  EXPECT_TRUE(is_cosieve(bottom.functor).fails());
  EXPECT_TRUE(is_cosieve(identity_functor(C1)).holds());

  auto K = standard_cells(CellKind::Boundary, 2, 2);
  auto Dl = standard_cells(CellKind::Simplex, 2, 2);
  auto DK = d_of_sset(K, 2), DD = d_of_sset(Dl, 2);
  EXPECT_TRUE(is_sieve(d_of_map(standard_inclusion(K, Dl), DK, DD)).holds());
}

TEST(Cofinal, Examples) {
  auto C1 = Poset::chain(1).to_category();
  EXPECT_TRUE(is_cofinal(full_subcategory(C1, {0}).functor).fails());
  EXPECT_TRUE(is_cofinal(full_subcategory(C1, {1}).functor).holds());
  EXPECT_TRUE(is_cofinal(identity_functor(C1)).holds());
}

TEST(Cofinal, PreservesColimitApexes) {
  // over lattice-valued diagrams, cofinal restrictions have the same colimit
  auto L = Poset::divisors(12).to_category();
  auto S = sd_poset(Poset::chain(1));
  const CatPtr& J = S.direct.category;
  for (const auto& objs : std::vector<std::vector<Obj>>{{2}, {0, 2}, {0, 1, 2}, {0}, {0, 1}}) {
    auto F = full_subcategory(J, objs);
    const bool cofinal = is_cofinal(F.functor).holds();
    for (const auto& X : all_functors(J, L)) {
      auto a = colimit(X), b = colimit(compose(X, F.functor));
      if (cofinal) EXPECT_EQ(a.apex, b.apex);
    }
  }
}

TEST(Degrees, Examples) {
  auto d = assign_degrees(Poset::chain(2).to_category());
  ASSERT_TRUE(d.verdict.holds());
  EXPECT_EQ(d.degree, (DegreeFunction{0, 1, 2}));
  CategoryTable t;
  t.objects = {"x"};
  t.morphisms = {{"1", "x", "x"}, {"e", "x", "x"}};
  t.identities = {{"x", "1"}};
  t.composites = {{"e", "e", "e"}};
  EXPECT_TRUE(assign_degrees(build_category(t)).verdict.fails());
  auto D = d_of_category(minimal_marking(Poset::chain(1).to_category()), 2);
  auto dd = assign_degrees(D.elements.category());
  ASSERT_TRUE(dd.verdict.holds());
  for (std::size_t x = 0; x < dd.degree.size(); ++x) {
    EXPECT_EQ(dd.degree[x], static_cast<int>(d_values(D.elements, static_cast<Obj>(x)).size()) - 1);
  }
}

TEST(Degrees, StrictlyIncreaseAlongMorphisms) {
  for (const auto& J : testutil::direct_fixtures()) {
    auto d = assign_degrees(J.category);
    ASSERT_TRUE(d.verdict.holds());
    for (std::size_t m = 0; m < J.category->num_morphisms(); ++m) {
      if (J.category->is_identity(static_cast<Mor>(m))) continue;
      EXPECT_LT(d.degree[J.category->source(static_cast<Mor>(m))], d.degree[J.category->target(static_cast<Mor>(m))]);
    }
  }
}

TEST(Closure, Examples) {
  auto C1 = Poset::chain(1).to_category();
  EXPECT_EQ(two_out_of_six_closure(C1, {}), Marking::identities(C1));
  EXPECT_EQ(two_out_of_six_closure(C1, {0, 1, 2}), Marking::all(C1));
}

TEST(Closure, IdempotentAndMonotone) {
  auto C = Poset::divisors(12).to_category();
  const std::size_t n = C->num_morphisms();
  for (unsigned mask = 0; mask < 256; mask += 7) {
    std::vector<Mor> seed, bigger;
    for (std::size_t m = 0; m < n; ++m) {
      if (mask & (1u << (m % 8))) seed.push_back(static_cast<Mor>(m));
      if ((mask | 3u) & (1u << (m % 8))) bigger.push_back(static_cast<Mor>(m));
    }
    auto a = two_out_of_six_closure(C, seed);
    std::vector<Mor> marked;
    for (std::size_t m = 0; m < n; ++m) {
      if (a.contains(static_cast<Mor>(m))) marked.push_back(static_cast<Mor>(m));
    }
    EXPECT_EQ(two_out_of_six_closure(C, marked), a);
    auto b = two_out_of_six_closure(C, bigger);
    for (std::size_t m = 0; m < n; ++m) {
      if (a.contains(static_cast<Mor>(m))) EXPECT_TRUE(b.contains(static_cast<Mor>(m)));
    }
  }
}

TEST(Colimits, Examples) {
  auto L = Poset::divisors(6).to_category();
  auto po = pushout(L, L->morphism_named("1<=2"), L->morphism_named("1<=3"));
  ASSERT_TRUE(po);
  EXPECT_EQ(L->object_name(po->apex), "6");
  Diagram empty{empty_category(), L, {}, {}};
  EXPECT_EQ(L->object_name(colimit(empty).apex), "1");
  auto S = sd_poset(Poset::chain(2));
  auto B = latching_category(S.direct.category, S.direct.degree, S.direct.category->object("(0,1,2)"));
  auto X = functor_from_object_map(B.category, L, std::vector<Obj>(B.category->num_objects(), L->object("3")));
  EXPECT_EQ(L->object_name(colimit(X).apex), "3");
}

TEST(Colimits, FactorEveryCoconeUniquely) {
  auto L = Poset::divisors(12).to_category();
  auto S = sd_poset(Poset::chain(1));
  int checked = 0;
  for (const auto& X : all_functors(S.direct.category, L)) {
    auto c = find_colimit(X);
    ASSERT_TRUE(c);
    for (const auto& other : all_cocones(X)) {
      EXPECT_TRUE(factor_cocone(X, *c, other).has_value());
      ++checked;
    }
    if (checked > 400) break;
  }
  // the exhaustive path agrees with the join shortcut
  for (const auto& X : all_functors(S.direct.category, L)) EXPECT_EQ(find_colimit(X)->apex, find_colimit_exhaustive(X)->apex);
}

TEST(Lan, Examples) {
  auto L = Poset::divisors(12).to_category();
  auto S1 = sd_poset(Poset::chain(1));
  auto X = functor_from_object_map(S1.direct.category, L, std::vector<Obj>(3, L->object("4")));
  auto lan = pointwise_lan(S1.max, X);
  EXPECT_EQ(lan.extension.on_objects, std::vector<Obj>(2, L->object("4")));
  auto id = pointwise_lan(identity_functor(S1.direct.category), X);
  EXPECT_TRUE(same_functor(id.extension, X));
  // at p, the colimit over max^-1{p}
  auto S2 = sd_poset(Poset::chain(2));
  int k = 0;
  for (const auto& Y : all_functors(S2.direct.category, L)) {
    if (k++ % 97) continue;
    auto ext = pointwise_lan(S2.max, Y);
    for (int p = 0; p <= 2; ++p) {
      std::vector<Obj> fiber;
      for (std::size_t a = 0; a < S2.direct.category->num_objects(); ++a) {
        if (S2.max(static_cast<Obj>(a)) == p) fiber.push_back(static_cast<Obj>(a));
      }
      auto F = full_subcategory(S2.direct.category, fiber);
      EXPECT_EQ(ext.extension(p), colimit(compose(Y, F.functor)).apex);
    }
  }
}

TEST(Reedy, Examples) {
  auto C1 = Poset::chain(1).to_category();
  ReedyStructure ok{C1, Marking::all(C1), Marking::identities(C1), {0, 1}};
  EXPECT_TRUE(check_reedy_structure(ok).holds());
  ReedyStructure bad{C1, Marking::identities(C1), Marking::all(C1), {0, 1}};
  EXPECT_TRUE(check_reedy_structure(bad).fails());
  auto D = dbar(minimal_marking(C1), 1, 1);
  EXPECT_TRUE(check_reedy_structure(D.reedy).holds());
}

TEST(Reedy, BisieveExamples) {
  auto B = dbar_boundary(1, 1, 1);
  auto full = dbar_simplex(1, 1, 1);
  EXPECT_TRUE(is_bisieve(B.inclusion, B.sub.reedy, full.reedy).holds());
  EXPECT_TRUE(is_bisieve(identity_functor(full.category), full.reedy, full.reedy).holds());
  // keep a degenerate grid but drop one of its degeneracy targets
  std::vector<Obj> keep;
  Obj dropped = kNone;
  for (std::size_t x = 0; x < full.category->num_objects(); ++x) {
    const auto& g = full.grids[x];
    if (dropped == kNone && g.t == 1 && g.s == 0) {
      dropped = static_cast<Obj>(x);
      continue;
    }
    keep.push_back(static_cast<Obj>(x));
  }
  auto sub = dbar_full_subcategory(full, keep);
  EXPECT_TRUE(is_bisieve(sub.inclusion, sub.sub.reedy, full.reedy).fails());
}

TEST(FunctorSearch, MonotoneMapCountsMatchBinomials) {
  for (int k = 0; k <= 3; ++k) {
    for (int m = 0; m <= 3; ++m) {
      EXPECT_EQ(count_functors(Poset::chain(k).to_category(), Poset::chain(m).to_category()),
                static_cast<std::size_t>(binomial(k + m + 1, k + 1)));
    }
  }
}

TEST(Text, RoundTripAndErrors) {
  auto C = Poset::divisors(6).to_category();
  auto D = parse_category(format_category(*C));
  EXPECT_FALSE(category_difference(*C, *D).has_value());
  try {
    parse_category("objects:\n  a b\nmorphisms:\n  f: a -> \n");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::ParseError);
    EXPECT_NE(e.detail().find("line 4"), std::string::npos) << e.detail();
  }
  try {
    parse_category("objects:\n  a b\nmorphisms:\n  f: a -> c\n");
    FAIL();
  } catch (const Error& e) {
    EXPECT_NE(e.detail().find("c"), std::string::npos) << e.detail();
  }
}

TEST(Poset, NonLatticeDetected) {
  auto P = Poset::from_relation({"a", "b"}, {});
  EXPECT_FALSE(P.is_lattice());
  EXPECT_TRUE(Poset::divisors(12).is_lattice());
}
