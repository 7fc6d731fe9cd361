#include <gtest/gtest.h>

#include <set>

#include "catkit/frames.hpp"
#include "catkit/functor_search.hpp"
#include "catkit/lifting.hpp"
#include "catkit/monotone.hpp"
#include "catkit/presentation.hpp"

using namespace catkit;

namespace {

CofibrationPresentation lattice6() { return lattice_cofcat(Poset::divisors(6), WeMode::Identities); }
CofibrationPresentation point_presentation() { return lattice_cofcat(Poset::chain(0), WeMode::Identities); }

// Monotone maps from the product order [m] x [n] into divisors of 6, by brute force.
std::size_t monotone_grid_count(int m, int n) {
  const std::vector<int> divs = {1, 2, 3, 6};
  const int cells = (m + 1) * (n + 1);
  std::vector<int> v(cells, 0);
  std::size_t count = 0;
  std::function<void(int)> go = [&](int k) {
    if (k == cells) {
      for (int a = 0; a <= m; ++a) {
        for (int b = 0; b <= n; ++b) {
          const int x = divs[v[a * (n + 1) + b]];
          if (a < m && divs[v[(a + 1) * (n + 1) + b]] % x != 0) return;
          if (b < n && divs[v[a * (n + 1) + b + 1]] % x != 0) return;
        }
      }
      ++count;
      return;
    }
    for (int i = 0; i < 4; ++i) {
      v[k] = i;
      go(k + 1);
    }
  };
  go(0);
  return count;
}

}  // namespace

TEST(Nf, Examples) {
  auto L = lattice6();
  auto N = nf_truncated(L, 2, 2);
  ASSERT_EQ(N.complex->size(0), L.category->num_objects());
  for (const auto& X : N.cells[0]) {
    std::set<Obj> vals(X.on_objects.begin(), X.on_objects.end());
    EXPECT_EQ(vals.size(), 1u);
  }
  auto P = nf_truncated(point_presentation(), 2, 2);
  for (int k = 0; k <= 2; ++k) EXPECT_EQ(P.complex->size(k), 1u);
  Budget b;
  EXPECT_TRUE(is_quasicategory_upto(N.complex, 2, b).holds());
  EXPECT_FALSE(simplicial_identity_violation(*N.complex));
}

TEST(Nf, FunctorialInExactFunctors) {
  auto P = lattice6();
  auto Q = lattice_cofcat(Poset::chain(2), WeMode::Identities);
  auto F = functor_from_object_map(P.category, Q.category,
                                   {Q.category->object("0"), Q.category->object("1"), Q.category->object("1"),
                                    Q.category->object("1")});
  ASSERT_TRUE(is_exact(F, P, Q).holds());
  auto NP = nf_truncated(P, 2, 2);
  auto NQ = nf_truncated(Q, 2, 2);
  auto NF = nf_of_functor(F, NP, NQ);
  EXPECT_FALSE(simplicial_map_violation(NF));
  auto id = nf_of_functor(identity_functor(P.category), NP, NP);
  EXPECT_EQ(id.levels, identity_map(NP.complex).levels);
  // payloads: the image of X is F o X
  for (int m = 0; m <= 2; ++m) {
    for (std::size_t x = 0; x < NP.cells[m].size(); ++x) {
      EXPECT_TRUE(same_functor(NQ.cells[m][NF(m, static_cast<int>(x))], compose(F, NP.cells[m][x])));
    }
  }
}

TEST(BoldNf, Examples) {
  auto L = lattice6();
  auto N = nf_truncated(L, 1, 2);
  auto B = bold_nf(L, 1, 1, 2);
  auto r0 = bold_row_zero(B, N);
  EXPECT_FALSE(simplicial_map_violation(r0));
  EXPECT_TRUE(is_levelwise_bijective(r0));
  for (int m = 0; m <= 1; ++m) {
    EXPECT_EQ(B.object->size(m, 1), B.object->size(m, 0));
    // s0 in the n direction is injective, and sizes agree, so bijective
    std::set<int> image;
    for (std::size_t x = 0; x < B.object->size(m, 0); ++x) image.insert(B.object->vdegeneracy(m, 0, 0, static_cast<int>(x)));
    EXPECT_EQ(image.size(), B.object->size(m, 1));
  }
  auto T = bold_nf(point_presentation(), 1, 1, 2);
  for (int m = 0; m <= 1; ++m) {
    for (int n = 0; n <= 1; ++n) EXPECT_EQ(T.object->size(m, n), 1u);
  }
}

TEST(BoldNf, RowZeroMismatchedBoundsRejected) {
  auto L = lattice6();
  try {
    bold_row_zero(bold_nf(L, 1, 0, 1), nf_truncated(L, 1, 2));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::BoundMismatch);
  }
}

TEST(Classification, Examples) {
  auto C = minimal_marking(Poset::chain(1).to_category());
  auto D = classification_diagram(C, 2, 2);
  for (int m = 0; m <= 2; ++m) {
    for (int n = 0; n <= 2; ++n) EXPECT_EQ(D.object->size(m, n), static_cast<std::size_t>(m + 2));
  }
  auto P = classification_diagram(minimal_marking(terminal_category()), 2, 2);
  for (int m = 0; m <= 2; ++m) {
    for (int n = 0; n <= 2; ++n) EXPECT_EQ(P.object->size(m, n), 1u);
  }
}

TEST(Classification, AllMarkedCountsMonotoneGrids) {
  // with every map a weak equivalence the cells are all functors [m] x [n] -> C
  auto D = classification_diagram(hat(Poset::divisors(6).to_category()), 1, 1);
  for (int m = 0; m <= 1; ++m) {
    for (int n = 0; n <= 1; ++n) EXPECT_EQ(D.object->size(m, n), monotone_grid_count(m, n)) << m << " " << n;
  }
}

TEST(Classification, ConstantAlongN) {
  for (const auto& C : {minimal_marking(Poset::chain(1).to_category()), minimal_marking(Poset::divisors(6).to_category())}) {
    auto D = classification_diagram(C, 1, 2);
    for (int m = 0; m <= 1; ++m) {
      for (int n = 1; n <= 2; ++n) {
        ASSERT_EQ(D.object->size(m, n), D.object->size(m, 0));
        std::set<int> image;
        for (std::size_t x = 0; x < D.object->size(m, n); ++x) image.insert(D.object->vface(m, n, 0, static_cast<int>(x)));
        EXPECT_EQ(image.size(), D.object->size(m, n - 1));
      }
    }
  }
}

TEST(Mnf, Examples) {
  auto M = lattice_model(Poset::divisors(6), WeMode::Identities);
  auto F = mnf(M, 1, 1, 1);
  // both Reedy conditions are vacuous: count homotopical functors directly
  for (int m = 0; m <= 1; ++m) {
    auto shape = dbar_simplex(m, 1, 1);
    std::size_t homotopical = 0;
    Budget b(1'000'000'000);
    enumerate_functors(shape.category, M.category(), {}, b, [&](const Functor& X) {
      homotopical += is_homotopical(X, shape.we, M.base.we);
      return true;
    });
    EXPECT_EQ(F.complex->size(m), homotopical) << m;
  }
  auto T = mnf(lattice_model(Poset::chain(0), WeMode::Identities), 1, 1, 1);
  for (int m = 0; m <= 1; ++m) EXPECT_EQ(T.complex->size(m), 1u);
}

TEST(Istar, Examples) {
  auto pt = lattice_model(Poset::chain(0), WeMode::Identities);
  auto c = istar_comparison(mnf(pt, 1, 1, 1), nf_truncated(pt.base, 1, 1));
  EXPECT_TRUE(c.verdict.holds());
  EXPECT_TRUE(is_levelwise_bijective(c.map));

  auto M = lattice_model(Poset::divisors(6), WeMode::Identities);
  auto MN = mnf(M, 1, 1, 1);
  auto N = nf_truncated(M.base, 1, 1);
  auto r = istar_comparison(MN, N);
  ASSERT_TRUE(r.verdict.holds()) << r.verdict.witness;
  EXPECT_FALSE(simplicial_map_violation(r.map));
  std::set<int> image(r.map.levels[0].begin(), r.map.levels[0].end());
  EXPECT_EQ(image.size(), N.complex->size(0));
  EXPECT_EQ(r.map.levels[0].size(), image.size());
}

TEST(Istar, MismatchedBoundsRejected) {
  auto M = lattice_model(Poset::chain(1), WeMode::Identities);
  try {
    istar_comparison(mnf(M, 1, 1, 1), nf_truncated(M.base, 1, 2));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::BoundMismatch);
  }
}

TEST(ElementsBijection, Examples) {
  auto L = lattice6();
  auto p = elements_bijection_check(standard_cells(CellKind::Simplex, 0, 1), L, 1);
  EXPECT_TRUE(p.verdict.holds());
  EXPECT_EQ(p.simplicial_maps, L.category->num_objects());
  EXPECT_EQ(p.diagrams, L.category->num_objects());

  auto b = elements_bijection_check(standard_cells(CellKind::Boundary, 1, 1), L, 1);
  EXPECT_TRUE(b.verdict.holds());
  EXPECT_EQ(b.simplicial_maps, L.category->num_objects() * L.category->num_objects());

  auto s = elements_bijection_check(standard_cells(CellKind::Simplex, 1, 1), L, 1);
  EXPECT_TRUE(s.verdict.holds()) << s.verdict.witness;
  EXPECT_EQ(s.simplicial_maps, s.diagrams);
  std::set<std::size_t> hit(s.assignment.begin(), s.assignment.end());
  EXPECT_EQ(hit.size(), s.assignment.size());
}
