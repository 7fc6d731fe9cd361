#include "catkit/functor_search.hpp"

#include <algorithm>
#include <array>
#include <limits>

namespace catkit {
namespace {

struct Slot {
  bool is_object = true;
  int index = 0;
  // Composition triples (g, f, h) with g∘f = h that become fully assigned here.
  std::vector<std::array<Mor, 3>> checks;
};

class Search {
 public:
  Search(const CatPtr& S, const CatPtr& T, const FunctorSearchOptions& o, Budget& b,
         const std::function<bool(const Functor&)>& visit)
      : S_(*S), T_(*T), opt_(o), budget_(b), visit_(visit) {
    F_.source = S;
    F_.target = T;
    F_.on_objects.assign(S_.num_objects(), kNone);
    F_.on_morphisms.assign(S_.num_morphisms(), kNone);
    plan();
  }

  SearchStatus run() {
    go(0);
    if (stopped_) return SearchStatus::Stopped;
    if (budget_.exhausted()) return SearchStatus::BudgetExhausted;
    return SearchStatus::Complete;
  }

 private:
  void plan() {
    const std::size_t n = S_.num_objects();
    std::vector<int> slot_of_morphism(S_.num_morphisms(), -1);
    for (std::size_t a = 0; a < n; ++a) {
      slots_.push_back({true, static_cast<int>(a), {}});
      slot_of_morphism[S_.identity(static_cast<Obj>(a))] = static_cast<int>(slots_.size() - 1);
      for (std::size_t f = 0; f < S_.num_morphisms(); ++f) {
        const Mor m = static_cast<Mor>(f);
        if (S_.is_identity(m)) continue;
        if (std::max(S_.source(m), S_.target(m)) != static_cast<Obj>(a)) continue;
        slots_.push_back({false, m, {}});
        slot_of_morphism[m] = static_cast<int>(slots_.size() - 1);
      }
    }
    for (std::size_t h = 0; h < S_.num_morphisms(); ++h) {
      for (auto [g, f] : S_.factorizations(static_cast<Mor>(h))) {
        if (S_.is_identity(g) || S_.is_identity(f)) continue;
        const int last = std::max({slot_of_morphism[g], slot_of_morphism[f], slot_of_morphism[h]});
        slots_[last].checks.push_back({g, f, static_cast<Mor>(h)});
      }
    }
  }

  bool checks_pass(const Slot& s) const {
    for (const auto& [g, f, h] : s.checks) {
      if (T_.compose(F_.on_morphisms[g], F_.on_morphisms[f]) != F_.on_morphisms[h]) return false;
    }
    return true;
  }

  void go(std::size_t k) {
    if (stopped_ || budget_.exhausted()) return;
    if (k == slots_.size()) {
      if (!visit_(F_)) stopped_ = true;
      return;
    }
    const Slot& s = slots_[k];
    if (s.is_object) {
      const Obj a = s.index;
      const Mor ida = S_.identity(a);
      auto attempt = [&](Obj x) {
        if (!budget_.spend()) return;
        if (opt_.object_filter && !opt_.object_filter(a, x)) return;
        const Mor idx = T_.identity(x);
        if (!opt_.fixed_morphisms.empty() && opt_.fixed_morphisms[ida] != kNone && opt_.fixed_morphisms[ida] != idx) {
          return;
        }
        if (opt_.morphism_filter && !opt_.morphism_filter(ida, idx)) return;
        F_.on_objects[a] = x;
        F_.on_morphisms[ida] = idx;
        if (checks_pass(s)) go(k + 1);
        F_.on_objects[a] = kNone;
        F_.on_morphisms[ida] = kNone;
      };
      if (!opt_.fixed_objects.empty() && opt_.fixed_objects[a] != kNone) {
        attempt(opt_.fixed_objects[a]);
      } else {
        for (std::size_t x = 0; x < T_.num_objects() && !stopped_ && !budget_.exhausted(); ++x) {
          attempt(static_cast<Obj>(x));
        }
      }
      return;
    }
    const Mor f = s.index;
    auto attempt = [&](Mor y) {
      if (!budget_.spend()) return;
      if (opt_.morphism_filter && !opt_.morphism_filter(f, y)) return;
      F_.on_morphisms[f] = y;
      if (checks_pass(s)) go(k + 1);
      F_.on_morphisms[f] = kNone;
    };
    const Obj x = F_.on_objects[S_.source(f)], y = F_.on_objects[S_.target(f)];
    if (!opt_.fixed_morphisms.empty() && opt_.fixed_morphisms[f] != kNone) {
      const Mor want = opt_.fixed_morphisms[f];
      if (T_.source(want) == x && T_.target(want) == y) attempt(want);
      return;
    }
    for (Mor cand : T_.hom(x, y)) {
      if (stopped_ || budget_.exhausted()) break;
      attempt(cand);
    }
  }

  const FiniteCategory& S_;
  const FiniteCategory& T_;
  const FunctorSearchOptions& opt_;
  Budget& budget_;
  const std::function<bool(const Functor&)>& visit_;
  Functor F_;
  std::vector<Slot> slots_;
  bool stopped_ = false;
};

}  // namespace

SearchStatus enumerate_functors(const CatPtr& S, const CatPtr& T, const FunctorSearchOptions& options,
                                Budget& budget, const std::function<bool(const Functor&)>& visit) {
  return Search(S, T, options, budget, visit).run();
}

std::vector<Functor> all_functors(const CatPtr& S, const CatPtr& T, const FunctorSearchOptions& options,
                                  std::size_t cap) {
  std::vector<Functor> out;
  Budget budget(std::numeric_limits<std::uint64_t>::max());
  enumerate_functors(S, T, options, budget, [&](const Functor& F) {
    if (out.size() >= cap) {
      throw Error(ErrorKind::EnumerationLimitExceeded,
                  "more than " + std::to_string(cap) + " functors from a category with " +
                      std::to_string(S->num_objects()) + " objects");
    }
    out.push_back(F);
    return true;
  });
  return out;
}

std::size_t count_functors(const CatPtr& S, const CatPtr& T, const FunctorSearchOptions& options) {
  std::size_t n = 0;
  Budget budget(std::numeric_limits<std::uint64_t>::max());
  enumerate_functors(S, T, options, budget, [&](const Functor&) {
    ++n;
    return true;
  });
  return n;
}

}  // namespace catkit
