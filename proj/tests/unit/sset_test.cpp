#include <gtest/gtest.h>

#include "catkit/direct.hpp"
#include "catkit/homotopy.hpp"
#include "catkit/lifting.hpp"
#include "catkit/sset_text.hpp"

using namespace catkit;

namespace {

std::vector<std::size_t> sizes(const TruncatedSimplicialSet& K) {
  std::vector<std::size_t> out;
  for (int k = 0; k <= K.bound(); ++k) out.push_back(K.size(k));
  return out;
}

// Slow path: every levelwise assignment, filtered by the simplicial identities
// and the square. Only for tiny inputs.
std::size_t brute_force_lifts(const LiftingSquare& sq) {
  const auto& B = sq.left.target;
  const auto& X = sq.right.source;
  std::vector<std::pair<int, int>> cells;
  for (int k = 0; k <= B->bound(); ++k) {
    for (std::size_t x = 0; x < B->size(k); ++x) cells.push_back({k, static_cast<int>(x)});
  }
  SimplicialMap h{B, X, std::vector<std::vector<int>>(B->bound() + 1)};
  for (int k = 0; k <= B->bound(); ++k) h.levels[k].assign(B->size(k), 0);
  std::size_t found = 0;
  std::function<void(std::size_t)> go = [&](std::size_t a) {
    if (a == cells.size()) {
      if (simplicial_map_violation(h)) return;
      for (int k = 0; k <= B->bound(); ++k) {
        for (std::size_t x = 0; x < sq.left.source->size(k); ++x) {
          if (h(k, sq.left(k, static_cast<int>(x))) != sq.top(k, static_cast<int>(x))) return;
        }
        for (std::size_t x = 0; x < B->size(k); ++x) {
          if (sq.right(k, h(k, static_cast<int>(x))) != sq.bottom(k, static_cast<int>(x))) return;
        }
      }
      ++found;
      return;
    }
    auto [k, x] = cells[a];
    for (std::size_t y = 0; y < X->size(k); ++y) {
      h.levels[k][x] = static_cast<int>(y);
      go(a + 1);
    }
  };
  go(0);
  return found;
}

}  // namespace

TEST(StandardCells, Examples) {
  EXPECT_EQ(sizes(*standard_cells(CellKind::Simplex, 1, 2)), (std::vector<std::size_t>{2, 3, 4}));
  auto H = standard_cells(CellKind::Horn, 2, 2, 1);
  EXPECT_EQ(H->count_nondegenerate(0), 3u);
  EXPECT_EQ(H->count_nondegenerate(1), 2u);
  EXPECT_EQ(H->count_nondegenerate(2), 0u);
  auto E = standard_cells(CellKind::E1, 0, 3);
  for (int k = 1; k <= 3; ++k) EXPECT_EQ(E->count_nondegenerate(k), 2u);
  for (auto kind : {CellKind::Simplex, CellKind::Boundary, CellKind::Spine}) {
    for (int m = 0; m <= 3; ++m) EXPECT_FALSE(simplicial_identity_violation(*standard_cells(kind, m, 3)));
  }
}

TEST(Nerve, Examples) {
  EXPECT_EQ(sizes(*nerve(Poset::chain(1).to_category(), 2)), (std::vector<std::size_t>{2, 3, 4}));
  EXPECT_EQ(sizes(*nerve(terminal_category(), 3)), (std::vector<std::size_t>{1, 1, 1, 1}));
  EXPECT_EQ(nerve(Poset::chain(2).to_category(), 3)->size(2), 10u);
}

TEST(Nerve, IsomorphicToStandardSimplex) {
  for (int m = 0; m <= 3; ++m) {
    for (int d = 0; d <= 4; ++d) {
      auto N = nerve(Poset::chain(m).to_category(), d);
      auto S = standard_cells(CellKind::Simplex, m, d);
      auto f = nerve_to_simplex(N, S);
      EXPECT_FALSE(simplicial_map_violation(f));
      EXPECT_TRUE(is_levelwise_bijective(f)) << m << " " << d;
    }
  }
}

TEST(Product, Examples) {
  auto K = standard_cells(CellKind::Boundary, 2, 2);
  auto P = product(point(2), K);
  EXPECT_EQ(sizes(*P), sizes(*K));
  auto D1 = standard_cells(CellKind::Simplex, 1, 2);
  EXPECT_EQ(product(D1, D1)->size(1), 9u);
  auto W = constant_bisimplicial(K, 2);
  for (int n = 0; n <= 2; ++n) EXPECT_EQ(sizes(*row(*W, n)), sizes(*K));
}

TEST(Lifting, Examples) {
  auto N2 = nerve(Poset::chain(2).to_category(), 2);
  auto H = standard_cells(CellKind::Horn, 2, 2, 1);
  auto S = standard_cells(CellKind::Simplex, 2, 2);
  auto inc = standard_inclusion(H, S);
  auto pt = point(2);
  for (const auto& top : all_maps(H, N2)) {
    LiftingSquare sq{inc, to_point(N2, pt), top, to_point(S, pt)};
    EXPECT_TRUE(find_lift(sq).verdict.holds());
    EXPECT_EQ(count_lifts(sq), 1u);
  }
  // outer horn into N[1] with the spine edge 0 -> 1 has no filler
  auto N1 = nerve(Poset::chain(1).to_category(), 2);
  auto H0 = standard_cells(CellKind::Horn, 2, 2, 0);
  auto inc0 = standard_inclusion(H0, S);
  int refuted = 0;
  for (const auto& top : all_maps(H0, N1)) {
    LiftingSquare sq{inc0, to_point(N1, pt), top, to_point(S, pt)};
    auto r = find_lift(sq);
    if (r.verdict.fails()) {
      ++refuted;
      EXPECT_FALSE(r.verdict.witness.empty());
    }
  }
  EXPECT_GT(refuted, 0);
  // identity inclusion
  LiftingSquare id{identity_map(S), to_point(S, pt), identity_map(S), to_point(S, pt)};
  EXPECT_TRUE(find_lift(id).verdict.holds());
}

TEST(Lifting, CompleteAgainstSlowPath) {
  auto pt = point(1);
  auto H = standard_cells(CellKind::Boundary, 1, 1);
  auto S = standard_cells(CellKind::Simplex, 1, 1);
  auto inc = standard_inclusion(H, S);
  for (auto target : {nerve(Poset::chain(1).to_category(), 1), standard_cells(CellKind::Boundary, 2, 1),
                      standard_cells(CellKind::E1, 0, 1)}) {
    for (const auto& top : all_maps(H, target)) {
      LiftingSquare sq{inc, to_point(target, pt), top, to_point(S, pt)};
      const std::size_t slow = brute_force_lifts(sq);
      EXPECT_EQ(find_lift(sq).verdict.holds(), slow > 0);
      EXPECT_EQ(count_lifts(sq), slow);
    }
  }
}

TEST(Quasicategories, Examples) {
  Budget b;
  EXPECT_TRUE(is_quasicategory_upto(nerve(Poset::chain(2).to_category(), 3), 3, b).holds());
  Budget b2;
  auto v = is_quasicategory_upto(standard_cells(CellKind::Horn, 2, 2, 1), 2, b2);
  EXPECT_TRUE(v.fails());
  EXPECT_NE(v.witness.find("(0,2)"), std::string::npos) << v.witness;
  auto N1 = nerve(Poset::chain(1).to_category(), 3);
  Budget b3;
  EXPECT_TRUE(is_inner_fibration_upto(to_point(N1, point(3)), 3, b3).holds());
  Budget none(0);
  EXPECT_TRUE(is_quasicategory_upto(nerve(Poset::chain(2).to_category(), 3), 3, none).unknown());
}

TEST(Quasicategories, NerveFillersAreUnique) {
  for (int m = 1; m <= 2; ++m) {
    for (const auto& c : inner_horn_filler_counts(nerve(Poset::chain(m).to_category(), 3), 3)) {
      EXPECT_EQ(c.min_fillers, 1u);
      EXPECT_EQ(c.max_fillers, 1u);
    }
  }
}

TEST(Homotopy, Examples) {
  auto N1 = nerve(Poset::chain(1).to_category(), 2);
  auto pt = point(2);
  auto v0 = yoneda_map(standard_cells(CellKind::Simplex, 0, 2), N1, 0);
  auto v1 = yoneda_map(standard_cells(CellKind::Simplex, 0, 2), N1, 1);
  Budget b;
  EXPECT_TRUE(e1_homotopic(v0, v0, std::nullopt, b).holds());
  Budget b2;
  EXPECT_TRUE(e1_homotopic(v0, v1, std::nullopt, b2).fails());
  // the walking isomorphism: its two vertices are homotopic both ways
  auto E = standard_cells(CellKind::E1, 0, 2);
  auto e0 = yoneda_map(standard_cells(CellKind::Simplex, 0, 2), E, 0);
  auto e1 = yoneda_map(standard_cells(CellKind::Simplex, 0, 2), E, 1);
  Budget b3, b4;
  EXPECT_TRUE(e1_homotopic(e0, e1, std::nullopt, b3).holds());
  EXPECT_TRUE(e1_homotopic(e1, e0, std::nullopt, b4).holds());
  (void)pt;
}

TEST(Homotopy, RelativeFillerThroughAnIsomorphism) {
  auto S = standard_cells(CellKind::Simplex, 1, 2);
  auto B = standard_cells(CellKind::Boundary, 1, 2);
  auto inc = standard_inclusion(B, S);
  auto f = identity_map(S);
  LiftingSquare sq{inc, f, inc, identity_map(S)};
  Budget b;
  auto r = find_relative_filler(sq, b);
  ASSERT_TRUE(r.verdict.holds());
  EXPECT_EQ(r.filler->levels, identity_map(S).levels);
  // empty source, nonempty target: nothing to map into
  auto empty = empty_sset(1);
  auto pt = point(1);
  auto none = standard_inclusion(standard_cells(CellKind::Boundary, 0, 1), standard_cells(CellKind::Simplex, 0, 1));
  LiftingSquare sq2{none, to_point(empty, pt), SimplicialMap{none.source, empty, {{}, {}}}, to_point(none.target, pt)};
  Budget b2;
  EXPECT_TRUE(find_relative_filler(sq2, b2).verdict.fails());
}

TEST(CssFrames, ConstantAtNerveHolds) {
  auto W = constant_bisimplicial(nerve(Poset::chain(1).to_category(), 2), 2);
  for (const auto& c : css_frame_check(*W)) EXPECT_TRUE(c.verdict.holds()) << c.name << ": " << c.verdict.witness;
}

TEST(Text, SimplicialRoundTrip) {
  for (auto K : {standard_cells(CellKind::Boundary, 2, 3), nerve(Poset::divisors(6).to_category(), 2)}) {
    auto L = parse_sset(format_sset(*K));
    ASSERT_EQ(sizes(*L), sizes(*K));
    for (int k = 1; k <= K->bound(); ++k) {
      for (std::size_t x = 0; x < K->size(k); ++x) {
        for (int i = 0; i <= k; ++i) EXPECT_EQ(L->face(k, i, static_cast<int>(x)), K->face(k, i, static_cast<int>(x)));
      }
    }
  }
  auto W = external_product(standard_cells(CellKind::Simplex, 1, 1), standard_cells(CellKind::Simplex, 1, 1));
  auto V = parse_bisset(format_bisset(*W));
  EXPECT_EQ(V->size(1, 1), W->size(1, 1));
}

TEST(Text, BrokenFaceTableNamesTheCell) {
  const char* text =
      "bound:\n  1\nsimplices:\n  0: a b\n  1: e\nfaces:\n  1 e = a zz\n";
  try {
    parse_sset(text);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::ParseError);
    EXPECT_NE(e.detail().find("zz"), std::string::npos) << e.detail();
  }
}
