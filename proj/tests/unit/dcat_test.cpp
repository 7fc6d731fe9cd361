#include <gtest/gtest.h>

#include <map>
#include <set>

#include "catkit/dbar.hpp"
#include "catkit/ex.hpp"
#include "catkit/functor_search.hpp"
#include "catkit/lifting.hpp"
#include "catkit/monotone.hpp"
#include "test_util.hpp"

using namespace catkit;

namespace {

std::map<int, int> per_degree(const MarkedDirectCategory& D) {
  std::map<int, int> out;
  for (int d : D.degree) ++out[d];
  return out;
}

std::set<std::string> object_names(const FiniteCategory& C) {
  std::set<std::string> out;
  for (std::size_t x = 0; x < C.num_objects(); ++x) out.insert(C.object_name(static_cast<Obj>(x)));
  return out;
}

std::size_t non_identities(const FiniteCategory& C) { return C.num_morphisms() - C.num_objects(); }

}  // namespace

TEST(DOfCategory, Examples) {
  auto D1 = d_of_category(minimal_marking(Poset::chain(1).to_category()), 2);
  EXPECT_EQ(per_degree(D1.elements.direct), (std::map<int, int>{{0, 2}, {1, 3}, {2, 4}}));
  auto D0 = d_of_category(minimal_marking(Poset::chain(0).to_category()), 2);
  EXPECT_EQ(per_degree(D0.elements.direct), (std::map<int, int>{{0, 1}, {1, 1}, {2, 1}}));
  EXPECT_EQ(D0.elements.direct.we.count(), D0.elements.category()->num_morphisms());
  auto D2 = d_of_category(minimal_marking(Poset::chain(2).to_category()), 1);
  EXPECT_EQ(per_degree(D2.elements.direct), (std::map<int, int>{{0, 3}, {1, 6}}));
}

TEST(DOfCategory, MarkingIsCreatedByP) {
  for (int m = 0; m <= 2; ++m) {
    auto J = minimal_marking(Poset::chain(m).to_category());
    auto D = d_of_category(J, 2);
    const auto& C = *D.elements.category();
    for (std::size_t f = 0; f < C.num_morphisms(); ++f) {
      EXPECT_EQ(D.elements.direct.we.contains(static_cast<Mor>(f)), J.we.contains(D.p.map(static_cast<Mor>(f))));
    }
    // p-created markings are already closed
    EXPECT_EQ(two_out_of_six_closure(D.elements.category(), [&] {
                std::vector<Mor> seed;
                for (std::size_t f = 0; f < C.num_morphisms(); ++f) {
                  if (D.elements.direct.we.contains(static_cast<Mor>(f))) seed.push_back(static_cast<Mor>(f));
                }
                return seed;
              }()),
              D.elements.direct.we);
  }
}

TEST(Sd, Examples) {
  auto S1 = sd_poset(Poset::chain(1));
  EXPECT_EQ(S1.direct.category->num_objects(), 3u);
  EXPECT_EQ(non_identities(*S1.direct.category), 2u);
  auto S2 = sd_poset(Poset::chain(2));
  EXPECT_EQ(S2.direct.category->num_objects(), 7u);
  EXPECT_EQ(non_identities(*S2.direct.category), 12u);
  auto S0 = sd_poset(Poset::chain(0));
  EXPECT_EQ(S0.direct.category->num_objects(), 1u);
  EXPECT_EQ(S0.direct.category->num_morphisms(), 1u);
}

TEST(Sd, MaxAndInclusionCreateTheSameMarking) {
  for (const auto& P : {Poset::chain(1), Poset::chain(2), Poset::divisors(6)}) {
    auto S = sd_poset(P);
    auto by_max = Marking::created_by(S.max, Marking::identities(S.max.target));
    auto by_inc = Marking::created_by(S.inclusion, S.d.elements.direct.we);
    EXPECT_EQ(by_max, S.direct.we);
    EXPECT_EQ(by_inc, S.direct.we);
    for (std::size_t x = 0; x < S.direct.category->num_objects(); ++x) {
      // degree = chain length - 1, read off the name "(a,b,...)"
      const auto& name = S.direct.category->object_name(static_cast<Obj>(x));
      EXPECT_EQ(S.direct.degree[x], static_cast<int>(std::count(name.begin(), name.end(), ',')));
    }
  }
}

TEST(DOfSset, Examples) {
  for (int m = 0; m <= 2; ++m) {
    for (int bound = 0; bound <= 3; ++bound) {
      auto A = d_of_sset(standard_cells(CellKind::Simplex, m, bound), bound);
      auto B = d_of_category(minimal_marking(Poset::chain(m).to_category()), bound);
      const auto& CA = *A.category();
      const auto& CB = *B.elements.category();
      ASSERT_EQ(object_names(CA), object_names(CB)) << m << " " << bound;
      ASSERT_EQ(CA.num_morphisms(), CB.num_morphisms());
      for (std::size_t f = 0; f < CA.num_morphisms(); ++f) {
        const Mor g = CB.morphism_named(CA.morphism_name(static_cast<Mor>(f)));
        EXPECT_EQ(CA.object_name(CA.source(static_cast<Mor>(f))), CB.object_name(CB.source(g)));
        EXPECT_EQ(A.direct.we.contains(static_cast<Mor>(f)), B.elements.direct.we.contains(g))
            << CA.morphism_name(static_cast<Mor>(f));
      }
    }
  }
  auto Bd = d_of_sset(standard_cells(CellKind::Boundary, 2, 2), 2);
  for (std::size_t x = 0; x < Bd.category()->num_objects(); ++x) {
    const auto& n = Bd.category()->object_name(static_cast<Obj>(x));
    EXPECT_FALSE(n.find('0') != std::string::npos && n.find('1') != std::string::npos && n.find('2') != std::string::npos)
        << n;
  }
  auto P = d_of_sset(standard_cells(CellKind::Simplex, 0, 1), 1);
  EXPECT_EQ(P.direct.we.count(), P.category()->num_morphisms());
}

TEST(DOfSset, VertexEdgeSeedLeavesDegreeTwoUnmarked) {
  auto V = d_of_sset(standard_cells(CellKind::Simplex, 0, 2), 2, DegenerateSeed::VertexEdge);
  const auto& C = *V.category();
  const Obj v = C.object("(0)");
  const Obj top = C.object("(0,0,0)");
  for (Mor f : C.hom(v, top)) EXPECT_FALSE(V.direct.we.contains(f));
  auto L = d_of_sset(standard_cells(CellKind::Simplex, 0, 2), 2);
  EXPECT_EQ(L.direct.we.count(), L.category()->num_morphisms());
}

TEST(Hat, Examples) {
  auto H = hat(Poset::chain(1).to_category());
  EXPECT_EQ(H.we.count(), H.category->num_morphisms());
  auto B1 = d_hat_boundary(1, 1);
  EXPECT_EQ(per_degree(B1)[0], 2);
  EXPECT_EQ(B1.we.count(), B1.category->num_morphisms());
  auto B2 = d_hat_boundary(2, 2);
  EXPECT_EQ(B2.we.count(), B2.category->num_morphisms());
  EXPECT_EQ(B2.category->num_morphisms(), d_of_sset(standard_cells(CellKind::Boundary, 2, 2), 2).category()->num_morphisms());
}

TEST(Dbar, Examples) {
  auto D0 = dbar(minimal_marking(Poset::chain(0).to_category()), 1, 1);
  EXPECT_EQ(D0.category->num_objects(), 4u);
  auto D1 = dbar(minimal_marking(Poset::chain(1).to_category()), 1, 0);
  EXPECT_EQ(D1.category->num_objects(), 5u);
  for (int m = 0; m <= 2; ++m) {
    auto D = dbar_simplex(m, 1, 1);
    EXPECT_TRUE(check_reedy_structure(D.reedy).holds()) << m;
  }
}

TEST(Dbar, Boundary) {
  EXPECT_EQ(dbar_boundary(0, 1, 1).sub.category->num_objects(), 0u);
  auto B = dbar_boundary(1, 1, 1);
  // independent count: grids [s]x[t] -> [1] that miss a value are constant
  EXPECT_EQ(B.sub.category->num_objects(), 2u * 4u);
  for (const auto& g : B.sub.grids) {
    std::set<Obj> vals(g.values.begin(), g.values.end());
    EXPECT_EQ(vals.size(), 1u);
  }
  auto full = dbar_simplex(1, 1, 1);
  EXPECT_TRUE(is_bisieve(B.inclusion, B.sub.reedy, full.reedy).holds());
}

TEST(Dbar, MarkingCreatedByEvaluation) {
  auto D = dbar_simplex(1, 1, 1);
  auto created = Marking::created_by(D.evaluation, Marking::identities(D.evaluation.target));
  EXPECT_EQ(created, D.we);
}

TEST(Iqs, StatedEquationsThatHold) {
  auto sys = iqs_system(minimal_marking(Poset::chain(1).to_category()), 1, 1);
  std::map<std::string, Verdict> by_name;
  for (const auto& c : sys.report) by_name[c.name] = c.verdict;
  ASSERT_FALSE(by_name.empty());
  bool saw_qi = false;
  for (const auto& [name, v] : by_name) {
    if (name.find("qi") != std::string::npos) {
      saw_qi = true;
      EXPECT_TRUE(v.holds()) << name << ": " << v.witness;
    }
  }
  EXPECT_TRUE(saw_qi);
  for (Mor k : sys.kappa) {
    if (k != kNone) EXPECT_TRUE(sys.dbar.we.contains(k));
  }
  for (Mor l : sys.lambda) {
    if (l != kNone) EXPECT_TRUE(sys.dbar.we.contains(l));
  }
}

TEST(Ex, Examples) {
  auto E = ex_functor(standard_cells(CellKind::Simplex, 0, 2), 2, 1);
  for (int k = 0; k <= E.ex->bound(); ++k) EXPECT_EQ(E.ex->size(k), 1u);
  EXPECT_FALSE(simplicial_map_violation(E.unit));
  // level 0 is maps from N(D<=1[0]), i.e. a vertex pair joined by two edges
  auto K = nerve(Poset::chain(1).to_category(), 2);
  auto X = ex_functor(K, 1, 1);
  EXPECT_EQ(X.ex->size(0), count_maps(X.nerves[0], K));
  EXPECT_EQ(X.ex->size(1), count_maps(X.nerves[1], K));
}

TEST(Ex, AdjunctionCountForInterval) {
  // maps D[1] -> [1] against maps Delta[1] -> Ex N[1] at matched bounds
  auto J = Poset::chain(1).to_category();
  auto K = nerve(J, 2);
  auto X = ex_functor(K, 1, 1);
  auto D = d_of_category(minimal_marking(Poset::chain(1).to_category()), 1);
  const auto functors = count_functors(D.elements.category(), J);
  EXPECT_EQ(count_maps(standard_cells(CellKind::Simplex, 1, 1), truncate(X.ex, 1)), functors);
}

TEST(DOfMonotone, FunctorialAndOverP) {
  const int bound = 2;
  std::vector<DCategory> D;
  for (int m = 0; m <= 2; ++m) D.push_back(d_of_category(minimal_marking(Poset::chain(m).to_category()), bound));
  for (int m = 0; m <= 2; ++m) {
    for (int n = 0; n <= 2; ++n) {
      for (const auto& theta : monotone_maps(m, n)) {
        auto F = d_of_monotone(theta, D[m], D[n]);
        EXPECT_FALSE(functor_violation(F));
        const auto& C = *D[m].elements.category();
        for (std::size_t x = 0; x < C.num_objects(); ++x) {
          const Obj y = F(static_cast<Obj>(x));
          EXPECT_EQ(D[n].elements.direct.degree[y], D[m].elements.direct.degree[x]);
          EXPECT_EQ(D[n].p(y), theta[D[m].p(static_cast<Obj>(x))]);
        }
        for (int l = 0; l <= 2; ++l) {
          for (const auto& eta : monotone_maps(l, m)) {
            std::vector<int> comp;
            for (int v : eta) comp.push_back(theta[v]);
            auto G = d_of_monotone(eta, D[l], D[m]);
            auto H = d_of_monotone(comp, D[l], D[n]);
            EXPECT_TRUE(same_functor(compose(F, G), H));
          }
        }
      }
    }
  }
}

TEST(DirectFixtures, AreDirectAndClosed) {
  for (const auto& D : testutil::direct_fixtures()) {
    EXPECT_TRUE(check_direct(*D.category, D.degree).holds());
    EXPECT_FALSE(two_out_of_six_violation(D.we));
    EXPECT_TRUE(D.we.is_wide());
  }
}
