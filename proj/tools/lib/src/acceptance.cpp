#include "catkit_tools/acceptance.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <chrono>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <sstream>

#include "catkit/constructive.hpp"
#include "catkit/ex.hpp"
#include "catkit/frames.hpp"
#include "catkit/functor_search.hpp"
#include "catkit/lifting.hpp"
#include "catkit_tools/fixtures.hpp"

namespace catkit::tools {
namespace {

// Oracles below work from names and brute-force enumeration only; they do not
// call the constructions they check.

std::vector<std::string> split_values(const std::string& name) {
  std::vector<std::string> out;
  if (name.size() < 2 || name.front() != '(' || name.back() != ')') return out;
  std::string cur;
  for (std::size_t a = 1; a + 1 < name.size(); ++a) {
    if (name[a] == ',') {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += name[a];
    }
  }
  out.push_back(cur);
  return out;
}

std::vector<int> int_values(const std::string& name) {
  std::vector<int> out;
  for (const auto& s : split_values(name)) out.push_back(std::stoi(s));
  return out;
}

// Every "[...]" group of a morphism name, in order.
std::vector<std::vector<int>> bracket_groups(const std::string& name) {
  std::vector<std::vector<int>> out;
  for (std::size_t a = name.find('['); a != std::string::npos; a = name.find('[', a + 1)) {
    const std::size_t b = name.find(']', a);
    std::vector<int> vs;
    std::stringstream in(name.substr(a + 1, b - a - 1));
    for (std::string t; std::getline(in, t, ',');) vs.push_back(std::stoi(t));
    out.push_back(vs);
  }
  return out;
}

// Morphism names "[delta]>target" of D of a chain.
struct DMorphism {
  std::vector<int> delta;
  std::vector<int> target;
};
DMorphism parse_d_morphism(const std::string& name) {
  const auto gt = name.find('>');
  return {bracket_groups(name.substr(0, gt))[0], int_values(name.substr(gt + 1))};
}

long long choose(int n, int r) {
  long long c = 1;
  for (int a = 1; a <= r; ++a) c = c * (n - r + a) / a;
  return c;
}

std::set<std::vector<int>> monotone_oracle(int k, int m) {
  std::set<std::vector<int>> out;
  std::vector<int> v(k + 1, 0);
  while (true) {
    if (std::is_sorted(v.begin(), v.end())) out.insert(v);
    int a = k;
    while (a >= 0 && v[a] == m) v[a--] = 0;
    if (a < 0) break;
    ++v[a];
  }
  return out;
}

// Nonempty subsets of {0..n}, as sorted vectors.
std::vector<std::vector<int>> subsets(int n) {
  std::vector<std::vector<int>> out;
  for (unsigned mask = 1; mask < (1u << (n + 1)); ++mask) {
    std::vector<int> s;
    for (int a = 0; a <= n; ++a) {
      if (mask & (1u << a)) s.push_back(a);
    }
    out.push_back(s);
  }
  return out;
}

std::vector<int> image(const std::vector<int>& v) {
  std::set<int> s(v.begin(), v.end());
  return {s.begin(), s.end()};
}

bool subset_of(const std::vector<int>& a, const std::vector<int>& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

std::string show(const std::vector<int>& v) {
  std::string s = "{";
  for (std::size_t a = 0; a < v.size(); ++a) s += (a ? "," : "") + std::to_string(v[a]);
  return s + "}";
}

Verdict check(bool ok, const std::string& witness) { return ok ? Holds() : Fails(witness); }

CatPtr chain_cat(int m) { return Poset::chain(m).to_category(); }

struct Ctx {
  const AcceptanceConfig& config;
  std::vector<Fixture> fixtures;
  std::vector<Verdict> parts;
  std::vector<Count> counts;
  void require(bool ok, const std::string& witness) { parts.push_back(check(ok, witness)); }
  void add(Verdict v, const std::string& where) {
    if (!v.holds()) v.witness = where + ": " + v.witness;
    parts.push_back(std::move(v));
  }
  void count(std::string name, long long v) { counts.push_back({std::move(name), v}); }
  const Fixture& fixture(const std::string& name) const { return find_fixture(fixtures, name); }
};

// 1 ---------------------------------------------------------------------------
void d_object_counts(Ctx& ctx) {
  for (int m = 0; m <= 2; ++m) {
    auto D = d_of_category(minimal_marking(chain_cat(m)), 3);
    const auto& E = D.elements;
    std::map<int, std::set<std::vector<int>>> got;
    std::map<int, long long> sizes;
    for (std::size_t x = 0; x < E.category()->num_objects(); ++x) {
      const int k = E.direct.degree[x];
      got[k].insert(int_values(E.category()->object_name(static_cast<Obj>(x))));
      ++sizes[k];
    }
    for (int k = 0; k <= 3; ++k) {
      const auto oracle = monotone_oracle(k, m);
      const long long closed = choose(k + m + 1, m);
      const std::string at = "D[" + std::to_string(m) + "] degree " + std::to_string(k);
      ctx.require(got[k] == oracle && sizes[k] == static_cast<long long>(oracle.size()) && sizes[k] == closed,
                  at + ": " + std::to_string(sizes[k]) + " objects, brute force " + std::to_string(oracle.size()) +
                      ", binomial " + std::to_string(closed));
      ctx.count(at, sizes[k]);
    }
  }
}

// 2 ---------------------------------------------------------------------------
std::vector<std::pair<std::string, Poset>> fixture_posets() {
  return {{"[1]", Poset::chain(1)}, {"[2]", Poset::chain(2)}, {"divisors of 6", Poset::divisors(6)}};
}

std::vector<int> chain_indices(const Poset& P, const std::string& name) {
  std::vector<int> out;
  for (const auto& e : split_values(name)) out.push_back(P.index(e));
  std::sort(out.begin(), out.end());
  return out;
}

void sd_shapes(Ctx& ctx) {
  for (const auto& [label, P] : fixture_posets()) {
    auto S = sd_poset(P);
    const auto& C = *S.direct.category;
    const int n = static_cast<int>(P.size()) - 1;
    std::set<std::vector<int>> oracle;
    for (const auto& s : subsets(n)) {
      bool chain = true;
      for (int a : s) {
        for (int b : s) chain = chain && (P.leq(a, b) || P.leq(b, a));
      }
      if (chain) oracle.insert(s);
    }
    std::vector<std::vector<int>> got;
    for (std::size_t x = 0; x < C.num_objects(); ++x) got.push_back(chain_indices(P, C.object_name(static_cast<Obj>(x))));
    ctx.require(std::set<std::vector<int>>(got.begin(), got.end()) == oracle && got.size() == oracle.size(),
                "Sd " + label + ": objects are not the nonempty chains");
    bool order = true;
    for (std::size_t x = 0; x < got.size(); ++x) {
      for (std::size_t y = 0; y < got.size(); ++y) {
        const std::size_t h = C.hom(static_cast<Obj>(x), static_cast<Obj>(y)).size();
        if (h != (subset_of(got[x], got[y]) ? 1u : 0u)) order = false;
      }
    }
    ctx.require(order, "Sd " + label + ": morphisms are not the inclusions");
    const long long nonid = static_cast<long long>(C.num_morphisms() - C.num_objects());
    ctx.count("Sd " + label + " objects", static_cast<long long>(C.num_objects()));
    ctx.count("Sd " + label + " non-identity morphisms", nonid);
    if (label == "[2]") {
      ctx.require(C.num_objects() == 7 && nonid == 12, "Sd[2] has " + std::to_string(C.num_objects()) + " objects and " +
                                                           std::to_string(nonid) + " non-identity morphisms");
    }
  }
}

// 3 ---------------------------------------------------------------------------
void sieves(Ctx& ctx) {
  for (int m = 0; m <= 3; ++m) {
    auto K = standard_cells(CellKind::Boundary, m, 3);
    auto Dm = standard_cells(CellKind::Simplex, m, 3);
    auto DK = d_of_sset(K, 3), DD = d_of_sset(Dm, 3);
    auto F = d_of_map(standard_inclusion(K, Dm), DK, DD);
    const std::string at = "D(boundary " + std::to_string(m) + ")";
    ctx.add(is_sieve(F), at);
    const auto& T = *DD.category();
    std::set<Obj> img(F.on_objects.begin(), F.on_objects.end());
    bool ok = true;
    for (std::size_t y = 0; y < T.num_objects(); ++y) {
      const bool surjective = static_cast<int>(image(int_values(T.object_name(static_cast<Obj>(y)))).size()) == m + 1;
      if (img.count(static_cast<Obj>(y)) == surjective) ok = false;
    }
    for (std::size_t u = 0; u < T.num_morphisms(); ++u) {
      if (img.count(T.target(static_cast<Mor>(u))) && !img.count(T.source(static_cast<Mor>(u)))) ok = false;
    }
    ctx.require(ok, at + ": image is not the downward closed set of non-surjective simplices");
    ctx.count(at + " objects", static_cast<long long>(img.size()));
  }
  for (int m = 0; m <= 2; ++m) {
    auto B = dbar_boundary(m, 2, 2);
    auto full = dbar_simplex(m, 2, 2);
    ctx.add(is_bisieve(B.inclusion, B.sub.reedy, full.reedy), "two-sided boundary " + std::to_string(m));
    ctx.count("two-sided boundary " + std::to_string(m) + " objects",
              static_cast<long long>(B.sub.category->num_objects()));
  }
}

// 4 ---------------------------------------------------------------------------
void latching_forms(Ctx& ctx) {
  {
    auto S = sd_poset(Poset::chain(2));
    const CatPtr& C = S.direct.category;
    auto chain = [&](Obj x) { return int_values(C->object_name(x)); };
    for (std::size_t a = 0; a < C->num_objects(); ++a) {
      auto L = latching_category(C, S.direct.degree, static_cast<Obj>(a));
      std::set<std::vector<int>> got, want;
      for (std::size_t o = 0; o < L.category->num_objects(); ++o) got.insert(chain(L.functor(static_cast<Obj>(o))));
      const auto A = chain(static_cast<Obj>(a));
      for (const auto& B : subsets(2)) {
        if (subset_of(B, A) && B != A) want.insert(B);
      }
      ctx.require(got == want && got.size() == L.category->num_objects(), "Sd[2] latching at " + show(A));
    }
    for (int p = 0; p <= 2; ++p) {
      std::vector<Obj> fiber;
      for (std::size_t x = 0; x < C->num_objects(); ++x) {
        if (chain(static_cast<Obj>(x)).back() == p) fiber.push_back(static_cast<Obj>(x));
      }
      auto F = full_subcategory(C, fiber);
      DegreeFunction deg;
      for (Obj x : fiber) deg.push_back(S.direct.degree[x]);
      for (std::size_t a = 0; a < fiber.size(); ++a) {
        auto L = latching_category(F.category, deg, static_cast<Obj>(a));
        std::set<std::vector<int>> got, want;
        for (std::size_t o = 0; o < L.category->num_objects(); ++o) {
          got.insert(chain(F.functor(L.functor(static_cast<Obj>(o)))));
        }
        const auto A = chain(fiber[a]);
        for (const auto& B : subsets(2)) {
          if (subset_of(B, A) && B != A && B.back() == p) want.insert(B);
        }
        ctx.require(got == want && got.size() == L.category->num_objects(),
                    "max fiber " + std::to_string(p) + " latching at " + show(A));
        ctx.count("max fiber " + std::to_string(p) + " latching at " + show(A), static_cast<long long>(got.size()));
      }
    }
  }
  for (int k = 0; k <= 1; ++k) {
    for (int m = 0; m <= 1; ++m) {
      const std::string tag = "[" + std::to_string(k) + "]x[" + std::to_string(m) + "]";
      auto Dkm = d_of_category(minimal_marking(Poset::product(Poset::chain(k), Poset::chain(m)).to_category()), 2);
      const CatPtr& E = Dkm.elements.category();
      for (std::size_t x = 0; x < E->num_objects(); ++x) {
        const int l = Dkm.elements.direct.degree[x];
        auto L = latching_category(E, Dkm.elements.direct.degree, static_cast<Obj>(x));
        std::multiset<std::vector<int>> got, want;
        for (std::size_t o = 0; o < L.category->num_objects(); ++o) {
          got.insert(image(bracket_groups(L.category->object_name(static_cast<Obj>(o)))[0]));
        }
        for (const auto& A : subsets(l)) {
          if (static_cast<int>(A.size()) != l + 1) want.insert(A);
        }
        ctx.require(got == want, "D(" + tag + ") latching at " + E->object_name(static_cast<Obj>(x)));
      }
      auto Dk = d_of_category(minimal_marking(chain_cat(k)), 2);
      auto Dm = d_of_category(minimal_marking(chain_cat(m)), 2);
      auto T = product(Dk.elements.category(), Dm.elements.category());
      DegreeFunction deg;
      for (std::size_t x = 0; x < T.category->num_objects(); ++x) {
        deg.push_back(Dk.elements.direct.degree[T.first(static_cast<Obj>(x))] +
                      Dm.elements.direct.degree[T.second(static_cast<Obj>(x))]);
      }
      for (std::size_t x = 0; x < T.category->num_objects(); ++x) {
        const int l1 = Dk.elements.direct.degree[T.first(static_cast<Obj>(x))];
        const int l2 = Dm.elements.direct.degree[T.second(static_cast<Obj>(x))];
        auto L = latching_category(T.category, deg, static_cast<Obj>(x));
        std::multiset<std::pair<std::vector<int>, std::vector<int>>> got, want;
        for (std::size_t o = 0; o < L.category->num_objects(); ++o) {
          auto g = bracket_groups(L.category->object_name(static_cast<Obj>(o)));
          got.insert({image(g[0]), image(g[1])});
        }
        for (const auto& A : subsets(l1)) {
          for (const auto& B : subsets(l2)) {
            if (static_cast<int>(A.size()) != l1 + 1 || static_cast<int>(B.size()) != l2 + 1) want.insert({A, B});
          }
        }
        ctx.require(got == want, "D[" + std::to_string(k) + "]xD[" + std::to_string(m) + "] latching at " +
                                     T.category->object_name(static_cast<Obj>(x)));
      }
      ctx.count("D(" + tag + ") objects", static_cast<long long>(E->num_objects()));
    }
  }
}

// 5 ---------------------------------------------------------------------------
void run_criterion_instance(Ctx& ctx, const CriterionInstance& inst, const LatchingCandidate& oracle) {
  bool same = true;
  for (std::size_t i = 0; i < inst.f.source->num_objects(); ++i) {
    auto a = oracle(static_cast<Obj>(i)), b = inst.candidate(static_cast<Obj>(i));
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    if (a != b) same = false;
  }
  ctx.require(same, inst.name + ": library L-sets differ from the proof formula");
  auto r = exactness_criterion_check(inst.f, inst.source_degree, inst.target_degree, oracle);
  ctx.add(r.verdict, inst.name);
  std::size_t good = 0;
  for (const auto& s : r.steps) good += s.cofinal.holds() && s.sieve.holds();
  ctx.require(good == inst.f.source->num_objects() && r.steps.size() == good,
              inst.name + ": " + std::to_string(good) + " of " + std::to_string(inst.f.source->num_objects()) +
                  " steps cofinal and sieve");
  ctx.count(inst.name + " steps", static_cast<long long>(good));
}

void cofinality(Ctx& ctx) {
  for (int p = 0; p <= 2; ++p) {
    auto inst = max_fiber_instance(Poset::chain(2), p);
    const CatPtr T = inst.f.target;
    const Functor f = inst.f;
    LatchingCandidate oracle = [T, f, p](Obj i) {
      const auto A = int_values(T->object_name(f(i)));
      std::vector<Mor> K;
      for (Mor u : T->in(f(i))) {
        if (T->is_identity(u)) continue;
        const auto B = int_values(T->object_name(T->source(u)));
        bool some = false;
        for (const auto& Cc : subsets(2)) {
          some = some || (subset_of(B, Cc) && subset_of(Cc, A) && Cc != A && Cc.back() == p);
        }
        if (some) K.push_back(u);
      }
      return K;
    };
    run_criterion_instance(ctx, inst, oracle);
  }
  for (int d = 1; d <= 2; ++d) {
    auto inst = product_instance(1, 1, d);
    const CatPtr T = inst.f.target;
    const Functor f = inst.f;
    const DegreeFunction deg = inst.source_degree;
    LatchingCandidate oracle = [T, f, deg](Obj i) {
      std::vector<Mor> K;
      for (Mor u : T->in(f(i))) {
        if (T->is_identity(u)) continue;
        auto g = bracket_groups(T->morphism_name(u));
        std::set<int> used(g[0].begin(), g[0].end());
        used.insert(g[1].begin(), g[1].end());
        if (static_cast<int>(used.size()) != deg[i] + 1) K.push_back(u);
      }
      return K;
    };
    inst.name += " degree <= " + std::to_string(d);
    run_criterion_instance(ctx, inst, oracle);
  }
}

// 6 ---------------------------------------------------------------------------
void markings(Ctx& ctx) {
  for (int m = 0; m <= 2; ++m) {
    auto DS = d_of_sset(standard_cells(CellKind::Simplex, m, 3), 3);
    auto DC = d_of_category(minimal_marking(chain_cat(m)), 3);
    auto a = DS.direct.we.names(), b = DC.elements.direct.we.names();
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    ctx.require(a == b, "D[" + std::to_string(m) + "]: closure and p-created markings differ");
    const auto& C = *DC.elements.category();
    bool ok = true;
    for (std::size_t u = 0; u < C.num_morphisms(); ++u) {
      auto d = parse_d_morphism(C.morphism_name(static_cast<Mor>(u)));
      const bool same_last = d.target[d.delta.back()] == d.target.back();
      if (same_last != DC.elements.direct.we.contains(static_cast<Mor>(u))) ok = false;
    }
    ctx.require(ok, "D[" + std::to_string(m) + "]: marking is not 'same last vertex'");
    ctx.count("D[" + std::to_string(m) + "] marked", static_cast<long long>(b.size()));
  }
  for (const auto& [label, P] : fixture_posets()) {
    auto S = sd_poset(P);
    auto created = Marking::created_by(S.inclusion, S.d.elements.direct.we);
    ctx.require(created == S.direct.we, "Sd " + label + ": max-created and inclusion-created markings differ");
    const auto& C = *S.direct.category;
    auto top = [&](Obj x) {
      auto c = chain_indices(P, C.object_name(x));
      int t = c[0];
      for (int e : c) {
        if (P.leq(t, e)) t = e;
      }
      return t;
    };
    bool ok = true;
    for (std::size_t u = 0; u < C.num_morphisms(); ++u) {
      const bool same = top(C.source(static_cast<Mor>(u))) == top(C.target(static_cast<Mor>(u)));
      if (same != S.direct.we.contains(static_cast<Mor>(u))) ok = false;
    }
    ctx.require(ok, "Sd " + label + ": marking is not 'same maximum'");
  }
}

// 7 ---------------------------------------------------------------------------
void axioms(Ctx& ctx) {
  auto L = load_presentation(ctx.fixture("lattice12.cat").path);
  ctx.require(!category_difference(*L.category, *Poset::divisors(12).to_category()),
              "lattice12.cat is not the divisor lattice of 12");
  for (const auto& P : {L, lattice_cofcat(Poset::divisors(12), WeMode::Identities)}) {
    for (const auto& c : check_cofibration_axioms(P)) ctx.add(c.verdict, P.provenance + " " + c.name);
  }
  for (const auto& f : ctx.fixtures) {
    if (f.expect_fail.empty()) continue;
    ctx.add(verify_fixture(f).verdict, f.name);
    ctx.count(f.name + " fails " + f.expect_fail, 1);
  }
}

// 8 ---------------------------------------------------------------------------
void lan_oracle(Ctx& ctx) {
  auto S = sd_poset(Poset::chain(2));
  auto L = lattice_cofcat(Poset::divisors(12), WeMode::Identities);
  const auto& LC = *L.category;
  ReedyShape R = ReedyShape::direct(S.direct.category, S.direct.degree);
  std::vector<Diagram> all;
  for (auto& X : all_functors(S.direct.category, L.category, {}, 100'000)) {
    if (is_reedy_cofibrant(X, R, L.cof).holds()) all.push_back(std::move(X));
  }
  ctx.count("Reedy cofibrant diagrams Sd[2] -> divisors of 12", static_cast<long long>(all.size()));
  const auto divs = std::vector<int>{1, 2, 3, 4, 6, 12};
  const auto& J = *S.direct.category;
  for (int k = 0; k < 10; ++k) {
    const auto& X = all[static_cast<std::size_t>(k) * all.size() / 10];
    auto lan = pointwise_lan(S.max, X);
    // admissible G : [2] -> L with X(A) | G(max A), then the least one
    std::vector<std::array<int, 3>> adm;
    for (int g0 : divs) {
      for (int g1 : divs) {
        for (int g2 : divs) {
          if (g1 % g0 || g2 % g1) continue;
          const std::array<int, 3> G{g0, g1, g2};
          bool ok = true;
          for (std::size_t a = 0; a < J.num_objects(); ++a) {
            const int top = int_values(J.object_name(static_cast<Obj>(a))).back();
            ok = ok && G[top] % std::stoi(LC.object_name(X(static_cast<Obj>(a)))) == 0;
          }
          if (ok) adm.push_back(G);
        }
      }
    }
    std::optional<std::array<int, 3>> least;
    for (const auto& G : adm) {
      bool below_all = true;
      for (const auto& H : adm) below_all = below_all && H[0] % G[0] == 0 && H[1] % G[1] == 0 && H[2] % G[2] == 0;
      if (below_all) least = G;
    }
    bool ok = least.has_value();
    for (int p = 0; p <= 2 && ok; ++p) ok = std::stoi(LC.object_name(lan.extension(p))) == (*least)[p];
    ctx.require(ok, "Lan of " + diagram_name(X) + " differs from the universal property");
  }
}

// 9 ---------------------------------------------------------------------------
void adjunction(Ctx& ctx) {
  const int bound = 2, deg = 1;
  for (const auto& [kname, K] :
       std::vector<std::pair<std::string, SSetPtr>>{{"Delta[1]", standard_cells(CellKind::Simplex, 1, bound)},
                                                    {"boundary of Delta[2]", standard_cells(CellKind::Boundary, 2, bound)}}) {
    for (int j = 1; j <= 2; ++j) {
      const std::string at = kname + ", J = [" + std::to_string(j) + "]";
      auto Jc = chain_cat(j);
      auto NJ = nerve(Jc, bound);
      auto ex = ex_functor(NJ, bound, deg);
      auto DK = d_of_sset(K, deg);
      auto functors = all_functors(DK.category(), Jc);
      auto maps = all_maps(K, ex.ex, {}, 100'000);
      std::vector<std::map<std::vector<std::vector<int>>, int>> index(bound + 1);
      for (int n = 0; n <= bound; ++n) {
        for (std::size_t e = 0; e < ex.elements[n].size(); ++e) index[n][ex.elements[n][e].levels] = static_cast<int>(e);
      }
      std::map<std::vector<std::vector<int>>, std::size_t> map_index;
      for (std::size_t a = 0; a < maps.size(); ++a) map_index[maps[a].levels] = a;
      std::set<std::size_t> hit;
      bool ok = true;
      for (const auto& F : functors) {
        SimplicialMap g{K, ex.ex, std::vector<std::vector<int>>(bound + 1)};
        for (int n = 0; n <= bound && ok; ++n) {
          for (std::size_t x = 0; x < K->size(n); ++x) {
            auto y = simplex_functor(ex.shapes[n], DK, n, static_cast<int>(x));
            auto e = nerve_of_functor(compose(F, y), ex.nerves[n], NJ);
            auto it = index[n].find(e.levels);
            if (it == index[n].end()) {
              ok = false;
              break;
            }
            g.levels[n].push_back(it->second);
          }
        }
        if (!ok || simplicial_map_violation(g)) {
          ok = false;
          break;
        }
        auto it = map_index.find(g.levels);
        if (it == map_index.end() || !hit.insert(it->second).second) {
          ok = false;
          break;
        }
      }
      ctx.require(ok && hit.size() == maps.size() && functors.size() == maps.size(),
                  at + ": " + std::to_string(maps.size()) + " maps, " + std::to_string(functors.size()) + " functors");
      ctx.count(at + " maps", static_cast<long long>(maps.size()));
      ctx.count(at + " functors", static_cast<long long>(functors.size()));
    }
  }
}

// 10 --------------------------------------------------------------------------
void quasicategories(Ctx& ctx) {
  auto N = nerve(chain_cat(2), 3);
  Budget b(ctx.config.budget);
  ctx.add(is_quasicategory_upto(N, 3, b), "N[2]");
  for (const auto& c : inner_horn_filler_counts(N, 3)) {
    const std::string at = "N[2] horn (" + std::to_string(c.m) + "," + std::to_string(c.i) + ")";
    ctx.require(c.horns > 0 && c.min_fillers == 1 && c.max_fillers == 1,
                at + ": fillers between " + std::to_string(c.min_fillers) + " and " + std::to_string(c.max_fillers));
    ctx.count(at + " horns", static_cast<long long>(c.horns));
  }
  Budget b2(ctx.config.budget);
  auto v = is_quasicategory_upto(standard_cells(CellKind::Horn, 2, 2, 1), 2, b2);
  if (v.unknown()) {
    ctx.parts.push_back(v);
  } else {
    ctx.require(v.fails() && v.witness.find("(0,2)") != std::string::npos,
                "horn (2,1) should fail at its missing edge (0,2), got " + std::string(to_string(v.outcome)) + " " +
                    v.witness);
  }
}

// 11 --------------------------------------------------------------------------
void frames_on_lattices(Ctx& ctx) {
  auto L6 = load_presentation(ctx.fixture("lattice6.cat").path);
  auto N = nf_truncated(L6, 2, 2);
  std::set<std::string> values;
  bool constant = true;
  for (const auto& X : N.cells[0]) {
    for (Obj v : X.on_objects) constant = constant && v == X.on_objects[0];
    values.insert(L6.category->object_name(X.on_objects[0]));
  }
  const std::set<std::string> elements{"1", "2", "3", "6"};
  ctx.require(constant && values == elements && N.cells[0].size() == 4,
              "Nf vertices: " + std::to_string(N.cells[0].size()) + " not in bijection with the lattice");
  for (int m = 0; m <= 2; ++m) ctx.count("Nf level " + std::to_string(m), static_cast<long long>(N.cells[m].size()));
  Budget b(ctx.config.budget);
  ctx.add(is_quasicategory_upto(N.complex, 2, b), "Nf inner horns");
  auto B = bold_nf(L6, 2, 1, 2);
  auto r0 = bold_row_zero(B, N);
  auto viol = simplicial_map_violation(r0);
  ctx.require(!viol && is_levelwise_bijective(r0), "bold Nf row 0: " + viol.value_or("not bijective"));
  auto cd = classification_diagram(minimal_marking(chain_cat(1)), 3, 3);
  for (int m = 0; m <= 3; ++m) {
    for (int n = 0; n <= 3; ++n) {
      ctx.require(cd.object->size(m, n) == static_cast<std::size_t>(m + 2),
                  "classification cell (" + std::to_string(m) + "," + std::to_string(n) + ") has " +
                      std::to_string(cd.object->size(m, n)));
    }
    ctx.count("classification column " + std::to_string(m), static_cast<long long>(cd.object->size(m, 0)));
  }
}

// 12 --------------------------------------------------------------------------
void dbar_system(Ctx& ctx) {
  for (int m = 0; m <= 2; ++m) {
    auto sys = iqs_system(minimal_marking(chain_cat(m)), 2, 2);
    const std::string at = "[" + std::to_string(m) + "]";
    ctx.add(check_reedy_structure(sys.dbar.reedy), at + " Reedy structure");
    for (const auto& c : sys.report) ctx.add(c.verdict, at + " " + c.name);
    ctx.count(at + " two-sided objects", static_cast<long long>(sys.dbar.category->num_objects()));
  }
}

// 13 --------------------------------------------------------------------------
void maps_vs_diagrams(Ctx& ctx) {
  for (const char* name : {"lattice6.cat", "chain2.cat"}) {
    auto C = load_presentation(ctx.fixture(name).path);
    for (const auto& [kname, K] : std::vector<std::pair<std::string, SSetPtr>>{
             {"boundary of Delta[1]", standard_cells(CellKind::Boundary, 1, 1)},
             {"Delta[1]", standard_cells(CellKind::Simplex, 1, 1)}}) {
      const std::string at = kname + " against " + name;
      auto r = elements_bijection_check(K, C, 1);
      ctx.add(r.verdict, at);
      auto a = r.assignment;
      std::sort(a.begin(), a.end());
      bool bij = r.simplicial_maps == r.diagrams && a.size() == r.diagrams;
      for (std::size_t k = 0; k < a.size() && bij; ++k) bij = a[k] == k;
      ctx.require(bij, at + ": assignment is not a bijection");
      ctx.count(at + " maps", static_cast<long long>(r.simplicial_maps));
    }
  }
}

// 14 --------------------------------------------------------------------------
void bisieve(Ctx& ctx) {
  const auto start = std::chrono::steady_clock::now();
  for (const char* file : {"model12_ids.model", "model12_all.model"}) {
    auto M = load_model(ctx.fixture(file).path);
    const bool we_all = M.base.we.count() == M.category()->num_morphisms();
    auto S = sd_poset(Poset::chain(1));
    const CatPtr& J = S.direct.category;
    ReedyShape R = ReedyShape::direct(J, S.direct.degree);
    std::vector<Obj> deg0;
    for (std::size_t a = 0; a < J->num_objects(); ++a) {
      if (S.direct.degree[a] == 0) deg0.push_back(static_cast<Obj>(a));
    }
    auto I = full_subcategory(J, deg0);
    const auto& L = *M.category();
    std::vector<Obj> xo, yo;
    for (std::size_t a = 0; a < J->num_objects(); ++a) {
      const auto n = J->object_name(static_cast<Obj>(a));
      xo.push_back(L.object(n == "(0)" ? "1" : "2"));
      yo.push_back(L.object(n == "(0)" ? "2" : n == "(1)" ? "4" : "12"));
    }
    auto X = functor_from_object_map(J, M.category(), xo);
    auto Y = functor_from_object_map(J, M.category(), yo);
    std::vector<Mor> fc;
    for (std::size_t a = 0; a < xo.size(); ++a) fc.push_back(L.hom(xo[a], yo[a])[0]);
    auto f = make_transformation(X, Y, fc);
    auto XI = compose(X, I.functor), YI = compose(Y, I.functor);
    std::vector<Mor> fi;
    for (Obj a : I.functor.on_objects) fi.push_back(fc[a]);
    PartialFactorization given;
    if (we_all) {
      given = {YI, make_transformation(XI, YI, fi), identity_transformation(YI)};
    } else {
      given = {XI, identity_transformation(XI), make_transformation(XI, YI, fi)};
    }
    auto res = bisieve_lift(M, R, I.functor, f, given);
    for (const auto& c : res.report) ctx.add(c.verdict, std::string(file) + " " + c.name);
    if (!res.factorization) {
      ctx.require(false, std::string(file) + ": no factorization");
      continue;
    }
    // independent re-verification on divisor values
    const auto& Z = res.factorization->middle;
    auto v = [&](Obj o) { return std::stoi(L.object_name(o)); };
    bool functor = true, left = true, right = true, cofibrant = true, restricts = true;
    for (std::size_t u = 0; u < J->num_morphisms(); ++u) {
      functor = functor && v(Z(J->target(static_cast<Mor>(u)))) % v(Z(J->source(static_cast<Mor>(u)))) == 0;
    }
    for (std::size_t a = 0; a < J->num_objects(); ++a) {
      const int x = v(xo[a]), z = v(Z(static_cast<Obj>(a))), y = v(yo[a]);
      left = left && z % x == 0 && (we_all || z == x);
      // matching categories of a direct shape are empty: the corner is Z -> Y
      right = right && y % z == 0 && (!we_all || z == y);
      int lcm = 1;
      for (Mor u : J->in(static_cast<Obj>(a))) {
        if (J->is_identity(u)) continue;
        lcm = std::lcm(lcm, v(Z(J->source(u))));
      }
      cofibrant = cofibrant && z % lcm == 0;
    }
    for (std::size_t a = 0; a < deg0.size(); ++a) restricts = restricts && Z(deg0[a]) == given.middle(static_cast<Obj>(a));
    ctx.require(functor, std::string(file) + ": middle is not monotone");
    ctx.require(cofibrant, std::string(file) + ": latching maps of the middle do not exist");
    ctx.require(left, std::string(file) + ": left leg is not a weak equivalence");
    ctx.require(right, std::string(file) + ": right leg is not a Reedy fibration");
    ctx.require(restricts, std::string(file) + ": extension does not restrict to the given factorization");
    ctx.count(std::string(file) + " middle " + diagram_name(Z), 1);
  }
  const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  ctx.require(s < 60, "bisieve lift took " + std::to_string(s) + " s");
}

// 15 --------------------------------------------------------------------------
void determinism(Ctx& ctx) {
  AcceptanceConfig c = ctx.config;
  c.criteria.clear();
  for (int k = 1; k < kCriteria; ++k) c.criteria.insert(k);
  const auto a = to_json(corpus_report(c));
  const auto b = to_json(corpus_report(c));
  ctx.require(a == b, "two runs differ");
  ctx.count("report bytes", static_cast<long long>(a.size()));
}

const std::vector<std::pair<std::string, std::function<void(Ctx&)>>>& table() {
  static const std::vector<std::pair<std::string, std::function<void(Ctx&)>>> t = {
      {"D-object counts", d_object_counts},
      {"Sd shapes", sd_shapes},
      {"sieve suite", sieves},
      {"latching closed forms", latching_forms},
      {"cofinality suite", cofinality},
      {"marking agreement", markings},
      {"axiom checker", axioms},
      {"Lan oracle", lan_oracle},
      {"adjunction count", adjunction},
      {"quasicategory checks", quasicategories},
      {"frames on lattices", frames_on_lattices},
      {"two-sided i/q/s system", dbar_system},
      {"simplicial maps vs diagrams bijection", maps_vs_diagrams},
      {"bisieve lift", bisieve},
      {"determinism", determinism},
  };
  return t;
}

}  // namespace

std::string criterion_title(int id) {
  if (id < 1 || id > kCriteria) throw Error(ErrorKind::BadIndex, "criterion " + std::to_string(id));
  return table()[id - 1].first;
}

CriterionOutcome run_criterion(int id, const AcceptanceConfig& config) {
  CriterionOutcome out{id, criterion_title(id), Holds(), {}};
  Ctx ctx{config, list_fixtures(config.corpus_dir), {}, {}};
  try {
    table()[id - 1].second(ctx);
    out.verdict = conjoin(ctx.parts);
  } catch (const Error& e) {
    out.verdict = Fails(std::string(to_string(e.kind())) + ": " + e.detail());
  } catch (const std::exception& e) {
    out.verdict = Fails(e.what());
  }
  out.counts = std::move(ctx.counts);
  return out;
}

std::vector<CriterionOutcome> run_acceptance(const AcceptanceConfig& config) {
  std::vector<CriterionOutcome> out;
  for (int k = 1; k <= kCriteria; ++k) {
    if (config.criteria.empty() || config.criteria.count(k)) out.push_back(run_criterion(k, config));
  }
  return out;
}

Report corpus_report(const AcceptanceConfig& config) {
  Report r;
  r.command = "corpus-verify";
  r.provenance.push_back("budget " + std::to_string(config.budget));
  if (config.fixtures) {
    for (const auto& f : list_fixtures(config.corpus_dir)) r.checks.push_back(verify_fixture(f));
  }
  for (auto& c : run_acceptance(config)) {
    const std::string name = "criterion " + std::to_string(c.id) + " " + c.title;
    r.checks.push_back({name, c.verdict});
    for (auto& n : c.counts) r.counts.push_back({name + ": " + n.name, n.value});
  }
  return r;
}

std::set<int> parse_criteria(const std::string& text) {
  auto bad = [&](const std::string& part) {
    return Error(ErrorKind::ParseError, "criteria list '" + text + "': bad item '" + part + "'");
  };
  auto number = [&](const std::string& s, const std::string& part) {
    int v = 0;
    auto [end, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (s.empty() || ec != std::errc() || end != s.data() + s.size()) throw bad(part);
    return v;
  };
  std::set<int> out;
  std::stringstream in(text);
  for (std::string part; std::getline(in, part, ',');) {
    const auto dash = part.find('-');
    const int a = number(part.substr(0, dash), part);
    const int b = dash == std::string::npos ? a : number(part.substr(dash + 1), part);
    if (a < 1 || b > kCriteria || a > b) throw bad(part);
    for (int k = a; k <= b; ++k) out.insert(k);
  }
  if (out.empty() || text.back() == ',') throw bad(text);
  return out;
}

}  // namespace catkit::tools
