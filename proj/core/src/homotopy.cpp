#include <map>

#include "catkit/homotopy.hpp"
#include "catkit/monotone.hpp"

namespace catkit {
namespace {

int constant_cell(const TruncatedSimplicialSet& E, int k, int value) {
  return *E.find(k, format_values(std::vector<int>(k + 1, value)));
}

bool same_endpoints(const SimplicialMap& f, const SimplicialMap& g) {
  if (f.source->bound() != g.source->bound() || f.target->bound() != g.target->bound()) return false;
  for (int k = 0; k <= f.source->bound(); ++k) {
    if (f.source->size(k) != g.source->size(k) || f.target->size(k) != g.target->size(k)) return false;
  }
  return true;
}

}  // namespace

HomotopyResult e1_homotopy(const SimplicialMap& f, const SimplicialMap& g, const std::optional<SimplicialMap>& rel,
                           Budget& budget) {
  if (!same_endpoints(f, g)) throw Error(ErrorKind::PreconditionViolated, "homotopy between maps with different endpoints");
  const SSetPtr& K = f.source;
  const int d = K->bound();
  auto E = standard_cells(CellKind::E1, 0, d);
  auto P = product(K, E);
  MapSearchOptions opts;
  opts.fixed.resize(d + 1);
  for (int k = 0; k <= d; ++k) {
    const int ne = static_cast<int>(E->size(k));
    const int c0 = constant_cell(*E, k, 0), c1 = constant_cell(*E, k, 1);
    opts.fixed[k].assign(P->size(k), kNone);
    for (int x = 0; x < static_cast<int>(K->size(k)); ++x) {
      opts.fixed[k][x * ne + c0] = f(k, x);
      opts.fixed[k][x * ne + c1] = g(k, x);
    }
    if (!rel) continue;
    for (int x : rel->levels[k]) {
      if (f(k, x) != g(k, x)) {
        return {Fails("maps differ on the fixed part at " + K->name(k, x)), std::nullopt};
      }
      for (int e = 0; e < ne; ++e) opts.fixed[k][x * ne + e] = f(k, x);
    }
  }
  HomotopyResult out;
  auto r = enumerate_maps(P, f.target, opts, budget, [&](const SimplicialMap& H) {
    out.homotopy = H;
    return false;
  });
  if (out.homotopy) {
    out.verdict = Holds();
  } else if (r.status == SearchStatus::BudgetExhausted) {
    out.verdict = Unknown("budget exhausted while searching for a homotopy");
  } else {
    out.verdict = Fails("no E[1]-homotopy up to dimension " + std::to_string(d) +
                        (r.obstruction.empty() ? std::string() : "; obstruction at " + r.obstruction));
  }
  return out;
}

Verdict e1_homotopic(const SimplicialMap& f, const SimplicialMap& g, const std::optional<SimplicialMap>& rel,
                     Budget& budget) {
  return e1_homotopy(f, g, rel, budget).verdict;
}

RelativeFiller find_relative_filler(const LiftingSquare& sq, Budget& budget) {
  if (!is_levelwise_injective(sq.left)) {
    throw Error(ErrorKind::PreconditionViolated, "left map of a lifting square must be levelwise injective");
  }
  if (auto v = square_violation(sq)) throw Error(ErrorKind::PreconditionViolated, *v);
  const auto& B = *sq.left.target;
  MapSearchOptions opts;
  opts.fixed.resize(B.bound() + 1);
  for (int k = 0; k <= B.bound(); ++k) {
    opts.fixed[k].assign(B.size(k), kNone);
    for (std::size_t a = 0; a < sq.left.levels[k].size(); ++a) opts.fixed[k][sq.left.levels[k][a]] = sq.top.levels[k][a];
  }
  RelativeFiller out;
  bool unknown = false;
  auto r = enumerate_maps(sq.left.target, sq.right.source, opts, budget, [&](const SimplicialMap& w) {
    auto H = e1_homotopy(compose(sq.right, w), sq.bottom, sq.left, budget);
    if (H.verdict.holds()) {
      out.filler = w;
      out.homotopy = H.homotopy;
      return false;
    }
    if (H.verdict.unknown()) unknown = true;
    return !budget.exhausted();
  });
  if (out.filler) {
    out.verdict = Holds();
  } else if (unknown || r.status == SearchStatus::BudgetExhausted) {
    out.verdict = Unknown("budget exhausted while searching for a relative filler");
  } else if (r.visited == 0) {
    out.verdict = Fails("no extension of the top map" + (r.obstruction.empty() ? std::string() : "; obstruction at " + r.obstruction));
  } else {
    out.verdict = Fails("no extension is homotopic to the bottom map relative to the source");
  }
  return out;
}

MatchingRow matching_row(const TruncatedBisimplicialSet& W, int n) {
  const int d = W.bound_m();
  auto rown = row(W, n);
  if (n == 0) {
    auto pt = point(d);
    return {pt, to_point(rown, pt)};
  }
  if (n > W.bound_n()) throw Error(ErrorKind::BadIndex, "row index above the vertical bound");
  SimplicialSetBuilder b(d);
  b.set_provenance("M" + std::to_string(n) + "(" + W.provenance() + ")");
  std::vector<std::map<std::vector<int>, int>> index(d + 1);
  std::vector<std::vector<std::vector<int>>> tuples(d + 1);
  for (int m = 0; m <= d; ++m) {
    const int cells = static_cast<int>(W.size(m, n - 1));
    std::vector<int> t;
    std::function<void()> extend = [&]() {
      const int j = static_cast<int>(t.size());
      if (j == n + 1) {
        std::string name = "[";
        for (int a = 0; a <= n; ++a) name += (a ? "|" : "") + W.name(m, n - 1, t[a]);
        index[m][t] = b.add_simplex(m, name + "]");
        tuples[m].push_back(t);
        return;
      }
      for (int y = 0; y < cells; ++y) {
        bool ok = true;
        for (int i = 0; i < j && ok && n >= 2; ++i) ok = W.vface(m, n - 1, i, y) == W.vface(m, n - 1, j - 1, t[i]);
        if (!ok) continue;
        t.push_back(y);
        extend();
        t.pop_back();
      }
    };
    extend();
  }
  for (int m = 0; m <= d; ++m) {
    for (std::size_t x = 0; x < tuples[m].size(); ++x) {
      const auto& t = tuples[m][x];
      for (int i = 0; m > 0 && i <= m; ++i) {
        std::vector<int> u;
        for (int y : t) u.push_back(W.hface(m, n - 1, i, y));
        b.set_face(m, i, static_cast<int>(x), index[m - 1].at(u));
      }
      for (int j = 0; m < d && j <= m; ++j) {
        std::vector<int> u;
        for (int y : t) u.push_back(W.hdegeneracy(m, n - 1, j, y));
        b.set_degeneracy(m, j, static_cast<int>(x), index[m + 1].at(u));
      }
    }
  }
  auto M = b.build();
  SimplicialMap p{rown, M, {}};
  for (int m = 0; m <= d; ++m) {
    std::vector<int> lv;
    for (int x = 0; x < static_cast<int>(W.size(m, n)); ++x) {
      std::vector<int> u;
      for (int i = 0; i <= n; ++i) u.push_back(W.vface(m, n, i, x));
      lv.push_back(index[m].at(u));
    }
    p.levels.push_back(std::move(lv));
  }
  return {M, p};
}

namespace {

Verdict homotopy_inverse(const SimplicialMap& t, Budget& budget) {
  if (is_levelwise_bijective(t)) return Holds("bijective");
  const auto id_from = identity_map(t.source);
  const auto id_to = identity_map(t.target);
  bool found = false;
  enumerate_maps(t.target, t.source, {}, budget, [&](const SimplicialMap& g) {
    if (e1_homotopic(compose(g, t), id_from, std::nullopt, budget).holds() &&
        e1_homotopic(compose(t, g), id_to, std::nullopt, budget).holds()) {
      found = true;
      return false;
    }
    return !budget.exhausted();
  });
  if (found) return Holds();
  return Unknown(budget.exhausted() ? "budget exhausted before a homotopy inverse was found"
                                    : "no homotopy inverse certificate up to the bound");
}

}  // namespace

CheckReport css_frame_check(const TruncatedBisimplicialSet& W, std::uint64_t budget_per_check) {
  CheckReport report;
  const int d = W.bound_m();
  for (int n = 0; n <= W.bound_n(); ++n) {
    Budget budget(budget_per_check);
    auto M = matching_row(W, n);
    report.push_back({"(a) matching map at n=" + std::to_string(n), is_isofibration_upto(M.map, d, budget)});
  }
  std::vector<SSetPtr> rows;
  for (int n = 0; n <= W.bound_n(); ++n) rows.push_back(row(W, n));
  for (int n = 0; n <= W.bound_n(); ++n) {
    for (int i = 0; n > 0 && i <= n; ++i) {
      Budget budget(budget_per_check);
      auto t = row_operator(W, n, coface(n, i), rows[n], rows[n - 1]);
      report.push_back({"(b) d" + std::to_string(i) + " from row " + std::to_string(n), homotopy_inverse(t, budget)});
    }
    for (int j = 0; n < W.bound_n() && j <= n; ++j) {
      Budget budget(budget_per_check);
      auto t = row_operator(W, n, codegeneracy(n, j), rows[n], rows[n + 1]);
      report.push_back({"(b) s" + std::to_string(j) + " from row " + std::to_string(n), homotopy_inverse(t, budget)});
    }
  }
  return report;
}

CoreApproximation core_approximation(const SSetPtr& K, Budget& budget) {
  CoreApproximation out;
  const int d = K->bound();
  std::vector<char> invertible(d >= 1 ? K->size(1) : 0, 0);
  if (d >= 1) {
    auto E = standard_cells(CellKind::E1, 0, d);
    const int edge = *E->find(1, "(0,1)");
    for (int e = 0; e < static_cast<int>(K->size(1)); ++e) {
      if (K->is_degenerate(1, e)) {
        invertible[e] = 1;
        continue;
      }
      MapSearchOptions opts;
      opts.fixed.resize(d + 1);
      opts.fixed[1].assign(E->size(1), kNone);
      opts.fixed[1][edge] = e;
      bool found = false;
      auto r = enumerate_maps(E, K, opts, budget, [&](const SimplicialMap&) {
        found = true;
        return false;
      });
      invertible[e] = found;
      if (!found && r.status == SearchStatus::BudgetExhausted) ++out.undecided;
    }
  }
  out.core = sub_object(K, [&](int level, int x) {
    if (level == 0) return true;
    const int top = level;
    for (int a = 0; a < top; ++a) {
      for (int b = a + 1; b <= top; ++b) {
        if (!invertible[K->apply(level, x, {a, b})]) return false;
      }
    }
    return true;
  });
  return out;
}

}  // namespace catkit
