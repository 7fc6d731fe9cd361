#include <algorithm>
#include <deque>
#include <limits>
#include <unordered_map>

#include "catkit/lifting.hpp"
#include "catkit/monotone.hpp"

namespace catkit {
namespace {

struct Cell {
  int level;
  int x;
  int root_face = -1;  // j with x = s_j(d_j x) for degenerate cells
};

class MapSearch {
 public:
  MapSearch(const SSetPtr& B, const SSetPtr& X, const MapSearchOptions& opt, Budget& budget,
            const std::function<bool(const SimplicialMap&)>& visit)
      : B_(*B), X_(*X), opt_(opt), budget_(budget), visit_(visit) {
    if (B->bound() != X->bound()) {
      throw Error(ErrorKind::BoundMismatch, "maps between bounds " + std::to_string(B->bound()) + " and " +
                                                std::to_string(X->bound()));
    }
    h_.source = B;
    h_.target = X;
    for (int k = 0; k <= B_.bound(); ++k) h_.levels.emplace_back(B_.size(k), kNone);
    plan();
    index_targets();
  }

  MapSearchOutcome run() {
    go(0);
    MapSearchOutcome out;
    out.visited = visited_;
    out.status = stopped_ ? SearchStatus::Stopped
                          : (budget_.exhausted() ? SearchStatus::BudgetExhausted : SearchStatus::Complete);
    if (deepest_ >= 0 && deepest_ < static_cast<int>(order_.size())) {
      const Cell& c = order_[deepest_];
      out.obstruction = B_.name(c.level, c.x) + " (dimension " + std::to_string(c.level) + ")";
    }
    return out;
  }

 private:
  void plan() {
    const int d = B_.bound();
    std::vector<std::vector<char>> scheduled(d + 1);
    std::vector<std::vector<int>> missing(d + 1);
    // waiting[k][y]: simplices at level k+1 having y as a face, plus degenerate
    // simplices whose root is y.
    std::vector<std::vector<std::vector<std::pair<int, int>>>> waiting(d + 1);
    for (int k = 0; k <= d; ++k) {
      scheduled[k].assign(B_.size(k), 0);
      missing[k].assign(B_.size(k), 0);
      waiting[k].assign(B_.size(k), {});
    }
    for (int k = 1; k <= d; ++k) {
      for (int x = 0; x < static_cast<int>(B_.size(k)); ++x) {
        if (B_.is_degenerate(k, x)) {
          int j = 0;
          while (B_.degeneracy(k - 1, j, B_.face(k, j, x)) != x) ++j;
          missing[k][x] = 1;
          waiting[k - 1][B_.face(k, j, x)].emplace_back(k, x);
        } else {
          std::vector<int> faces;
          for (int i = 0; i <= k; ++i) faces.push_back(B_.face(k, i, x));
          std::sort(faces.begin(), faces.end());
          faces.erase(std::unique(faces.begin(), faces.end()), faces.end());
          missing[k][x] = static_cast<int>(faces.size());
          for (int y : faces) waiting[k - 1][y].emplace_back(k, x);
        }
      }
    }
    std::deque<std::pair<int, int>> ready;
    auto schedule = [&](int k, int x) {
      scheduled[k][x] = 1;
      Cell c{k, x, -1};
      if (k > 0 && B_.is_degenerate(k, x)) {
        int j = 0;
        while (B_.degeneracy(k - 1, j, B_.face(k, j, x)) != x) ++j;
        c.root_face = j;
      }
      order_.push_back(c);
      for (auto [k2, x2] : waiting[k][x]) {
        if (--missing[k2][x2] == 0) ready.emplace_back(k2, x2);
      }
    };
    for (int v = 0; v < static_cast<int>(B_.size(0)); ++v) {
      schedule(0, v);
      while (!ready.empty()) {
        auto [k, x] = ready.front();
        ready.pop_front();
        if (!scheduled[k][x]) schedule(k, x);
      }
    }
  }

  void index_targets() {
    by_last_face_.resize(X_.bound() + 1);
    for (int k = 1; k <= X_.bound(); ++k) {
      for (int x = 0; x < static_cast<int>(X_.size(k)); ++x) by_last_face_[k][X_.face(k, k, x)].push_back(x);
    }
  }

  bool admissible(const Cell& c, int y) const {
    if (!opt_.fixed.empty() && !opt_.fixed[c.level].empty()) {
      const int want = opt_.fixed[c.level][c.x];
      if (want != kNone && want != y) return false;
    }
    return !opt_.filter || opt_.filter(c.level, c.x, y);
  }

  void go(std::size_t s) {
    if (stopped_ || budget_.exhausted()) return;
    if (s == order_.size()) {
      ++visited_;
      if (!visit_(h_)) stopped_ = true;
      return;
    }
    const Cell& c = order_[s];
    bool any = false;
    auto attempt = [&](int y) {
      if (!budget_.spend()) return;
      if (!admissible(c, y)) return;
      any = true;
      h_.levels[c.level][c.x] = y;
      go(s + 1);
      h_.levels[c.level][c.x] = kNone;
    };
    if (c.root_face >= 0) {
      const int root = B_.face(c.level, c.root_face, c.x);
      attempt(X_.degeneracy(c.level - 1, c.root_face, h_.levels[c.level - 1][root]));
    } else if (c.level == 0) {
      const int fixed = opt_.fixed.empty() || opt_.fixed[0].empty() ? kNone : opt_.fixed[0][c.x];
      if (fixed != kNone) {
        attempt(fixed);
      } else {
        for (int y = 0; y < static_cast<int>(X_.size(0)) && !stopped_ && !budget_.exhausted(); ++y) attempt(y);
      }
    } else {
      const int k = c.level;
      const int last = h_.levels[k - 1][B_.face(k, k, c.x)];
      auto it = by_last_face_[k].find(last);
      if (it != by_last_face_[k].end()) {
        for (int y : it->second) {
          if (stopped_ || budget_.exhausted()) break;
          bool faces_ok = true;
          for (int i = 0; i < k && faces_ok; ++i) faces_ok = X_.face(k, i, y) == h_.levels[k - 1][B_.face(k, i, c.x)];
          if (faces_ok) attempt(y);
        }
      }
    }
    if (!any && static_cast<int>(s) > deepest_) deepest_ = static_cast<int>(s);
  }

  const TruncatedSimplicialSet& B_;
  const TruncatedSimplicialSet& X_;
  const MapSearchOptions& opt_;
  Budget& budget_;
  const std::function<bool(const SimplicialMap&)>& visit_;
  SimplicialMap h_;
  std::vector<Cell> order_;
  std::vector<std::unordered_map<int, std::vector<int>>> by_last_face_;
  std::size_t visited_ = 0;
  int deepest_ = -1;
  bool stopped_ = false;
};

SSetPtr at_bound(CellKind kind, int m, int bound, int i = 0) { return standard_cells(kind, m, bound, i); }

}  // namespace

MapSearchOutcome enumerate_maps(const SSetPtr& B, const SSetPtr& X, const MapSearchOptions& options, Budget& budget,
                                const std::function<bool(const SimplicialMap&)>& visit) {
  return MapSearch(B, X, options, budget, visit).run();
}

std::vector<SimplicialMap> all_maps(const SSetPtr& B, const SSetPtr& X, const MapSearchOptions& options,
                                    std::size_t cap) {
  std::vector<SimplicialMap> out;
  Budget budget(std::numeric_limits<std::uint64_t>::max());
  enumerate_maps(B, X, options, budget, [&](const SimplicialMap& h) {
    if (out.size() >= cap) {
      throw Error(ErrorKind::EnumerationLimitExceeded, "more than " + std::to_string(cap) + " simplicial maps");
    }
    out.push_back(h);
    return true;
  });
  return out;
}

std::size_t count_maps(const SSetPtr& B, const SSetPtr& X, const MapSearchOptions& options) {
  Budget budget(std::numeric_limits<std::uint64_t>::max());
  return enumerate_maps(B, X, options, budget, [](const SimplicialMap&) { return true; }).visited;
}

std::optional<std::string> square_violation(const LiftingSquare& sq) {
  for (const SimplicialMap* f : {&sq.left, &sq.right, &sq.top, &sq.bottom}) {
    if (auto v = simplicial_map_violation(*f)) return *v;
  }
  const auto a = compose(sq.right, sq.top);
  const auto b = compose(sq.bottom, sq.left);
  if (a.levels != b.levels) return std::string("square does not commute");
  return std::nullopt;
}

MapSearchOptions lift_options(const LiftingSquare& sq) {
  MapSearchOptions o;
  const auto& B = *sq.left.target;
  o.fixed.resize(B.bound() + 1);
  for (int k = 0; k <= B.bound(); ++k) {
    o.fixed[k].assign(B.size(k), kNone);
    for (std::size_t a = 0; a < sq.left.levels[k].size(); ++a) o.fixed[k][sq.left.levels[k][a]] = sq.top.levels[k][a];
  }
  const SimplicialMap right = sq.right;
  const SimplicialMap bottom = sq.bottom;
  o.filter = [right, bottom](int level, int x, int y) { return right(level, y) == bottom(level, x); };
  return o;
}

LiftResult find_lift(const LiftingSquare& sq, Budget& budget) {
  if (!is_levelwise_injective(sq.left)) {
    throw Error(ErrorKind::PreconditionViolated, "left map of a lifting square must be levelwise injective");
  }
  LiftResult out;
  auto opts = lift_options(sq);
  auto r = enumerate_maps(sq.left.target, sq.right.source, opts, budget, [&](const SimplicialMap& h) {
    out.filler = h;
    return false;
  });
  if (out.filler) {
    out.verdict = Holds();
  } else if (r.status == SearchStatus::BudgetExhausted) {
    out.verdict = Unknown("budget exhausted while searching for a filler");
  } else {
    out.verdict = Fails("no filler; obstruction at " + (r.obstruction.empty() ? std::string("(empty)") : r.obstruction));
  }
  return out;
}

LiftResult find_lift(const LiftingSquare& sq) {
  Budget budget(kDefaultBudget);
  return find_lift(sq, budget);
}

std::size_t count_lifts(const LiftingSquare& sq) { return count_maps(sq.left.target, sq.right.source, lift_options(sq)); }

namespace {

Verdict lift_against(const SimplicialMap& p, const SSetPtr& A, const SSetPtr& B, const SimplicialMap& inc,
                     const std::string& label, Budget& budget) {
  const SSetPtr& X = p.source;
  const SSetPtr& Y = p.target;
  Verdict result = Holds();
  bool unknown = false;
  enumerate_maps(A, X, {}, budget, [&](const SimplicialMap& top) {
    // Bottom maps extend p∘top along the inclusion.
    const auto ptop = compose(p, top);
    MapSearchOptions bo;
    bo.fixed.resize(B->bound() + 1);
    for (int k = 0; k <= B->bound(); ++k) {
      bo.fixed[k].assign(B->size(k), kNone);
      for (std::size_t a = 0; a < inc.levels[k].size(); ++a) bo.fixed[k][inc.levels[k][a]] = ptop.levels[k][a];
    }
    auto r = enumerate_maps(B, Y, bo, budget, [&](const SimplicialMap& bottom) {
      LiftingSquare sq{inc, p, top, bottom};
      auto lift = find_lift(sq, budget);
      if (lift.verdict.fails()) {
        result = Fails(label + ": " + lift.verdict.witness);
        return false;
      }
      if (lift.verdict.unknown()) unknown = true;
      return true;
    });
    if (r.status == SearchStatus::BudgetExhausted) unknown = true;
    return !result.fails() && !budget.exhausted();
  });
  if (result.fails()) return result;
  if (unknown || budget.exhausted()) return Unknown(label + ": budget exhausted");
  return Holds();
}

}  // namespace

Verdict is_inner_fibration_upto(const SimplicialMap& p, int d, Budget& budget) {
  const int bound = p.source->bound();
  if (d > bound) throw Error(ErrorKind::BoundMismatch, "check dimension exceeds the truncation bound");
  std::vector<Verdict> parts;
  for (int m = 2; m <= d; ++m) {
    auto simplex = at_bound(CellKind::Simplex, m, bound);
    for (int i = 1; i < m; ++i) {
      auto horn = at_bound(CellKind::Horn, m, bound, i);
      auto v = lift_against(p, horn, simplex, standard_inclusion(horn, simplex),
                            "horn (" + std::to_string(m) + "," + std::to_string(i) + ")", budget);
      if (v.fails()) return v;
      parts.push_back(v);
    }
  }
  return conjoin(parts);
}

Verdict is_isofibration_upto(const SimplicialMap& p, int d, Budget& budget) {
  auto inner = is_inner_fibration_upto(p, d, budget);
  if (inner.fails()) return inner;
  const int bound = p.source->bound();
  auto e1 = at_bound(CellKind::E1, 0, bound);
  auto vertex = point(bound);
  SimplicialMap inc{vertex, e1, {}};
  for (int k = 0; k <= bound; ++k) inc.levels.push_back(std::vector<int>{*e1->find(k, format_values(std::vector<int>(k + 1, 0)))});
  auto iso = lift_against(p, vertex, e1, inc, "E[1] endpoint", budget);
  return conjoin({inner, iso});
}

Verdict is_quasicategory_upto(const SSetPtr& K, int d, Budget& budget) {
  auto pt = point(K->bound());
  return is_inner_fibration_upto(to_point(K, pt), d, budget);
}

std::vector<HornFillerCount> inner_horn_filler_counts(const SSetPtr& K, int d) {
  std::vector<HornFillerCount> out;
  const int bound = K->bound();
  for (int m = 2; m <= d; ++m) {
    auto simplex = at_bound(CellKind::Simplex, m, bound);
    for (int i = 1; i < m; ++i) {
      auto horn = at_bound(CellKind::Horn, m, bound, i);
      auto inc = standard_inclusion(horn, simplex);
      HornFillerCount c{m, i, 0, std::numeric_limits<std::size_t>::max(), 0};
      for (const auto& top : all_maps(horn, K, {}, 1'000'000)) {
        MapSearchOptions o;
        o.fixed.resize(bound + 1);
        for (int k = 0; k <= bound; ++k) {
          o.fixed[k].assign(simplex->size(k), kNone);
          for (std::size_t a = 0; a < inc.levels[k].size(); ++a) o.fixed[k][inc.levels[k][a]] = top.levels[k][a];
        }
        const std::size_t n = count_maps(simplex, K, o);
        ++c.horns;
        c.min_fillers = std::min(c.min_fillers, n);
        c.max_fillers = std::max(c.max_fillers, n);
      }
      if (c.horns == 0) c.min_fillers = 0;
      out.push_back(c);
    }
  }
  return out;
}

}  // namespace catkit
