#include "catkit/category.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

namespace catkit {
namespace {

std::uint64_t pair_key(int a, int b) {
  return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(a)) << 32) |
         static_cast<std::uint32_t>(b);
}

const std::vector<Mor> kEmptyHom;

}  // namespace

// --- FiniteCategory --------------------------------------------------------

Mor FiniteCategory::compose(Mor g, Mor f) const {
  const Obj b = target(f);
  if (source(g) != b) {
    throw Error(ErrorKind::IllTypedComposite,
                morphism_name(g) + " o " + morphism_name(f) + " is not composable");
  }
  const std::size_t width = out_[b].size();
  return table_[table_offset_[b] + static_cast<std::size_t>(in_pos_[f]) * width +
                static_cast<std::size_t>(out_pos_[g])];
}

std::span<const Mor> FiniteCategory::hom(Obj a, Obj b) const {
  auto it = hom_.find(pair_key(a, b));
  if (it == hom_.end()) return kEmptyHom;
  return it->second;
}

std::optional<Obj> FiniteCategory::find_object(std::string_view name) const {
  auto it = object_index_.find(std::string(name));
  if (it == object_index_.end()) return std::nullopt;
  return it->second;
}

std::optional<Mor> FiniteCategory::find_morphism(std::string_view name) const {
  auto it = morphism_index_.find(std::string(name));
  if (it == morphism_index_.end()) return std::nullopt;
  return it->second;
}

Obj FiniteCategory::object(std::string_view name) const {
  if (auto o = find_object(name)) return *o;
  throw Error(ErrorKind::UnknownObject, std::string(name));
}

Mor FiniteCategory::morphism_named(std::string_view name) const {
  if (auto f = find_morphism(name)) return *f;
  throw Error(ErrorKind::UnknownMorphism, std::string(name));
}

bool FiniteCategory::is_isomorphism(Mor f) const {
  for (Mor g : hom(target(f), source(f))) {
    if (compose(g, f) == identity(source(f)) && compose(f, g) == identity(target(f))) return true;
  }
  return false;
}

// --- CategoryBuilder -------------------------------------------------------

Obj CategoryBuilder::add_object(std::string name) {
  objects_.push_back(std::move(name));
  identities_.push_back(kNone);
  return static_cast<Obj>(objects_.size() - 1);
}

Mor CategoryBuilder::add_morphism(std::string name, Obj source, Obj target) {
  morphisms_.push_back({std::move(name), source, target});
  return static_cast<Mor>(morphisms_.size() - 1);
}

Mor CategoryBuilder::add_identity(Obj a, std::string name) {
  Mor f = add_morphism(std::move(name), a, a);
  identities_[a] = f;
  return f;
}

void CategoryBuilder::set_identity(Obj a, Mor f) { identities_[a] = f; }

void CategoryBuilder::set_composite(Mor g, Mor f, Mor h) { composites_[pair_key(g, f)] = h; }

CatPtr CategoryBuilder::build(const ComposeFn& compose, bool validate) {
  auto C = std::make_shared<FiniteCategory>();
  const std::size_t n = objects_.size();
  const std::size_t m = morphisms_.size();

  for (std::size_t a = 0; a < n; ++a) {
    if (!C->object_index_.emplace(objects_[a], static_cast<Obj>(a)).second) {
      throw Error(ErrorKind::UnknownObject, "duplicate object name '" + objects_[a] + "'");
    }
  }
  for (std::size_t f = 0; f < m; ++f) {
    const auto& r = morphisms_[f];
    if (r.source < 0 || r.source >= static_cast<Obj>(n) || r.target < 0 || r.target >= static_cast<Obj>(n)) {
      throw Error(ErrorKind::UnknownObject, "morphism '" + r.name + "' has an unknown endpoint");
    }
    if (!C->morphism_index_.emplace(r.name, static_cast<Mor>(f)).second) {
      throw Error(ErrorKind::UnknownMorphism, "duplicate morphism name '" + r.name + "'");
    }
  }
  for (std::size_t a = 0; a < n; ++a) {
    const Mor id = identities_[a];
    if (id == kNone) throw Error(ErrorKind::MissingIdentity, "object '" + objects_[a] + "' has no identity");
    if (morphisms_[id].source != static_cast<Obj>(a) || morphisms_[id].target != static_cast<Obj>(a)) {
      throw Error(ErrorKind::MissingIdentity,
                  "identity '" + morphisms_[id].name + "' of '" + objects_[a] + "' is not an endomorphism");
    }
  }

  C->object_names_ = objects_;
  C->morphisms_ = morphisms_;
  C->identities_ = identities_;
  C->out_.assign(n, {});
  C->in_.assign(n, {});
  C->in_pos_.assign(m, 0);
  C->out_pos_.assign(m, 0);
  for (std::size_t f = 0; f < m; ++f) {
    const auto& r = morphisms_[f];
    C->out_pos_[f] = static_cast<int>(C->out_[r.source].size());
    C->out_[r.source].push_back(static_cast<Mor>(f));
    C->in_pos_[f] = static_cast<int>(C->in_[r.target].size());
    C->in_[r.target].push_back(static_cast<Mor>(f));
    auto& h = C->hom_[pair_key(r.source, r.target)];
    h.push_back(static_cast<Mor>(f));
    if (h.size() > 1) C->thin_ = false;
  }
  C->table_offset_.assign(n, 0);
  std::size_t total = 0;
  for (std::size_t b = 0; b < n; ++b) {
    C->table_offset_[b] = total;
    total += C->in_[b].size() * C->out_[b].size();
  }
  C->table_.assign(total, kNone);

  auto name = [&](Mor f) { return morphisms_[f].name; };
  for (std::size_t b = 0; b < n; ++b) {
    for (Mor f : C->in_[b]) {
      for (Mor g : C->out_[b]) {
        Mor h = kNone;
        if (compose) {
          h = compose(g, f);
        } else if (auto it = composites_.find(pair_key(g, f)); it != composites_.end()) {
          h = it->second;
        } else if (f == identities_[b]) {
          h = g;
        } else if (g == identities_[b]) {
          h = f;
        }
        if (h == kNone || h < 0 || h >= static_cast<Mor>(m)) {
          throw Error(ErrorKind::MissingComposite, name(g) + " o " + name(f));
        }
        if (morphisms_[h].source != morphisms_[f].source || morphisms_[h].target != morphisms_[g].target) {
          throw Error(ErrorKind::IllTypedComposite, name(g) + " o " + name(f) + " = " + name(h));
        }
        C->table_[C->table_offset_[b] + static_cast<std::size_t>(C->in_pos_[f]) * C->out_[b].size() +
                  static_cast<std::size_t>(C->out_pos_[g])] = h;
      }
    }
  }

  C->factorizations_.assign(m, {});
  for (std::size_t b = 0; b < n; ++b) {
    for (Mor f : C->in_[b]) {
      for (Mor g : C->out_[b]) C->factorizations_[C->compose(g, f)].emplace_back(g, f);
    }
  }

  if (validate) {
    for (std::size_t f = 0; f < m; ++f) {
      const auto& r = morphisms_[f];
      if (C->compose(static_cast<Mor>(f), identities_[r.source]) != static_cast<Mor>(f) ||
          C->compose(identities_[r.target], static_cast<Mor>(f)) != static_cast<Mor>(f)) {
        throw Error(ErrorKind::MissingIdentity, "identities are not units for '" + r.name + "'");
      }
    }
    // (h∘g)∘f == h∘(g∘f) for every composable triple.
    for (std::size_t g = 0; g < m; ++g) {
      const auto& rg = morphisms_[g];
      for (Mor f : C->in_[rg.source]) {
        const Mor gf = C->compose(static_cast<Mor>(g), f);
        for (Mor h : C->out_[rg.target]) {
          if (C->compose(C->compose(h, static_cast<Mor>(g)), f) != C->compose(h, gf)) {
            throw Error(ErrorKind::AssociativityViolation,
                        name(h) + " o " + name(static_cast<Mor>(g)) + " o " + name(f));
          }
        }
      }
    }
  }
  return C;
}

CatPtr build_category(const CategoryTable& table) {
  CategoryBuilder b;
  std::unordered_map<std::string, Obj> obj;
  for (const auto& o : table.objects) obj[o] = b.add_object(o);
  auto lookup_obj = [&](const std::string& o) {
    auto it = obj.find(o);
    if (it == obj.end()) throw Error(ErrorKind::UnknownObject, o);
    return it->second;
  };
  std::unordered_map<std::string, Mor> mor;
  for (const auto& r : table.morphisms) {
    if (mor.count(r.name)) throw Error(ErrorKind::UnknownMorphism, "duplicate morphism name '" + r.name + "'");
    mor[r.name] = b.add_morphism(r.name, lookup_obj(r.source), lookup_obj(r.target));
  }
  auto lookup_mor = [&](const std::string& f) {
    auto it = mor.find(f);
    if (it == mor.end()) throw Error(ErrorKind::UnknownMorphism, f);
    return it->second;
  };
  for (const auto& [o, f] : table.identities) b.set_identity(lookup_obj(o), lookup_mor(f));
  for (const auto& c : table.composites) {
    const Mor g = lookup_mor(c.g), f = lookup_mor(c.f);
    if (b.morphism(f).target != b.morphism(g).source) {
      throw Error(ErrorKind::IllTypedComposite, c.g + " o " + c.f + " is not composable");
    }
    b.set_composite(g, f, lookup_mor(c.h));
  }
  return b.build();
}

// --- Functors ---------------------------------------------------------------

std::optional<std::string> functor_violation(const Functor& F) {
  const auto& S = *F.source;
  const auto& T = *F.target;
  if (F.on_objects.size() != S.num_objects() || F.on_morphisms.size() != S.num_morphisms()) {
    return "assignment sizes do not match the source category";
  }
  for (std::size_t a = 0; a < S.num_objects(); ++a) {
    if (F.on_objects[a] < 0 || F.on_objects[a] >= static_cast<Obj>(T.num_objects())) {
      return "object '" + S.object_name(static_cast<Obj>(a)) + "' is unassigned";
    }
  }
  for (std::size_t f = 0; f < S.num_morphisms(); ++f) {
    const Mor g = F.on_morphisms[f];
    if (g < 0 || g >= static_cast<Mor>(T.num_morphisms())) {
      return "morphism '" + S.morphism_name(static_cast<Mor>(f)) + "' is unassigned";
    }
    if (T.source(g) != F(S.source(static_cast<Mor>(f))) || T.target(g) != F(S.target(static_cast<Mor>(f)))) {
      return "morphism '" + S.morphism_name(static_cast<Mor>(f)) + "' is sent to a morphism with wrong endpoints";
    }
  }
  for (std::size_t a = 0; a < S.num_objects(); ++a) {
    if (F.map(S.identity(static_cast<Obj>(a))) != T.identity(F(static_cast<Obj>(a)))) {
      return "identity of '" + S.object_name(static_cast<Obj>(a)) + "' is not preserved";
    }
  }
  for (std::size_t h = 0; h < S.num_morphisms(); ++h) {
    for (auto [g, f] : S.factorizations(static_cast<Mor>(h))) {
      if (T.compose(F.map(g), F.map(f)) != F.map(static_cast<Mor>(h))) {
        return "composite " + S.morphism_name(g) + " o " + S.morphism_name(f) + " is not preserved";
      }
    }
  }
  return std::nullopt;
}

Functor make_functor(CatPtr source, CatPtr target, std::vector<Obj> objects, std::vector<Mor> morphisms) {
  Functor F{std::move(source), std::move(target), std::move(objects), std::move(morphisms)};
  if (auto v = functor_violation(F)) throw Error(ErrorKind::NotAFunctor, *v);
  return F;
}

Functor functor_from_object_map(CatPtr source, CatPtr target, const std::vector<Obj>& objects) {
  if (!target->is_thin()) throw Error(ErrorKind::NotThin, "functor_from_object_map needs a thin target");
  std::vector<Mor> mors(source->num_morphisms(), kNone);
  for (std::size_t f = 0; f < source->num_morphisms(); ++f) {
    auto h = target->hom(objects[source->source(static_cast<Mor>(f))], objects[source->target(static_cast<Mor>(f))]);
    if (h.empty()) {
      throw Error(ErrorKind::NotAFunctor, "no morphism for '" + source->morphism_name(static_cast<Mor>(f)) + "'");
    }
    mors[f] = h[0];
  }
  return make_functor(std::move(source), std::move(target), objects, std::move(mors));
}

Functor identity_functor(CatPtr C) {
  std::vector<Obj> o(C->num_objects());
  std::iota(o.begin(), o.end(), 0);
  std::vector<Mor> f(C->num_morphisms());
  std::iota(f.begin(), f.end(), 0);
  return Functor{C, C, std::move(o), std::move(f)};
}

Functor compose(const Functor& G, const Functor& F) {
  if (F.target != G.source && category_difference(*F.target, *G.source)) {
    throw Error(ErrorKind::NotAFunctor, "functors are not composable");
  }
  Functor H{F.source, G.target, {}, {}};
  H.on_objects.reserve(F.on_objects.size());
  for (Obj a : F.on_objects) H.on_objects.push_back(G(a));
  H.on_morphisms.reserve(F.on_morphisms.size());
  for (Mor f : F.on_morphisms) H.on_morphisms.push_back(G.map(f));
  return H;
}

bool same_functor(const Functor& F, const Functor& G) {
  return F.on_objects == G.on_objects && F.on_morphisms == G.on_morphisms;
}

std::optional<std::string> naturality_violation(const NaturalTransformation& eta) {
  const auto& S = *eta.source.source;
  const auto& T = *eta.source.target;
  if (eta.components.size() != S.num_objects()) return "wrong number of components";
  for (std::size_t a = 0; a < S.num_objects(); ++a) {
    const Mor c = eta.components[a];
    if (T.source(c) != eta.source(static_cast<Obj>(a)) || T.target(c) != eta.target(static_cast<Obj>(a))) {
      return "component at '" + S.object_name(static_cast<Obj>(a)) + "' has wrong endpoints";
    }
  }
  for (std::size_t f = 0; f < S.num_morphisms(); ++f) {
    const Obj a = S.source(static_cast<Mor>(f)), b = S.target(static_cast<Mor>(f));
    if (T.compose(eta.components[b], eta.source.map(static_cast<Mor>(f))) !=
        T.compose(eta.target.map(static_cast<Mor>(f)), eta.components[a])) {
      return "naturality square of '" + S.morphism_name(static_cast<Mor>(f)) + "' does not commute";
    }
  }
  return std::nullopt;
}

// --- Marking ----------------------------------------------------------------

Marking::Marking(CatPtr category, std::vector<char> selected)
    : category_(std::move(category)), selected_(std::move(selected)) {
  if (selected_.size() != category_->num_morphisms()) {
    throw Error(ErrorKind::PreconditionViolated, "marking size does not match its category");
  }
}

Marking Marking::identities(CatPtr category) {
  std::vector<char> s(category->num_morphisms(), 0);
  for (std::size_t a = 0; a < category->num_objects(); ++a) s[category->identity(static_cast<Obj>(a))] = 1;
  return Marking(std::move(category), std::move(s));
}

Marking Marking::all(CatPtr category) {
  std::vector<char> s(category->num_morphisms(), 1);
  return Marking(std::move(category), std::move(s));
}

Marking Marking::from_names(CatPtr category, const std::vector<std::string>& names) {
  Marking m = identities(category);
  for (const auto& n : names) m.insert(category->morphism_named(n));
  return m;
}

Marking Marking::created_by(const Functor& F, const Marking& target_marking) {
  std::vector<char> s(F.source->num_morphisms(), 0);
  for (std::size_t f = 0; f < s.size(); ++f) s[f] = target_marking.contains(F.map(static_cast<Mor>(f))) ? 1 : 0;
  return Marking(F.source, std::move(s));
}

std::size_t Marking::count() const {
  return static_cast<std::size_t>(std::count(selected_.begin(), selected_.end(), 1));
}

std::vector<std::string> Marking::names() const {
  std::vector<std::string> out;
  for (std::size_t f = 0; f < selected_.size(); ++f) {
    if (selected_[f]) out.push_back(category_->morphism_name(static_cast<Mor>(f)));
  }
  return out;
}

bool Marking::is_wide() const {
  for (std::size_t a = 0; a < category_->num_objects(); ++a) {
    if (!contains(category_->identity(static_cast<Obj>(a)))) return false;
  }
  return true;
}

std::optional<std::string> Marking::composition_violation() const {
  const auto& C = *category_;
  for (std::size_t h = 0; h < C.num_morphisms(); ++h) {
    if (contains(static_cast<Mor>(h))) continue;
    for (auto [g, f] : C.factorizations(static_cast<Mor>(h))) {
      if (contains(g) && contains(f)) return C.morphism_name(g) + " o " + C.morphism_name(f);
    }
  }
  return std::nullopt;
}

Marking intersect(const Marking& a, const Marking& b) {
  std::vector<char> s(a.selected().size());
  for (std::size_t f = 0; f < s.size(); ++f) s[f] = a.selected()[f] && b.selected()[f];
  return Marking(a.category(), std::move(s));
}

MarkedCategory minimal_marking(CatPtr C) { return {C, Marking::identities(C)}; }
MarkedCategory hat(CatPtr C) { return {C, Marking::all(C)}; }

ReedyStructure direct_reedy_structure(const MarkedDirectCategory& J) {
  return {J.category, Marking::all(J.category), Marking::identities(J.category), J.degree};
}

// --- Poset ------------------------------------------------------------------

Poset::Poset(std::vector<std::string> elements, std::vector<std::vector<char>> leq)
    : elements_(std::move(elements)), leq_(std::move(leq)) {
  const std::size_t n = elements_.size();
  if (leq_.size() != n) throw Error(ErrorKind::PreconditionViolated, "order relation has wrong size");
  for (std::size_t a = 0; a < n; ++a) {
    if (!leq_[a][a]) throw Error(ErrorKind::PreconditionViolated, "order is not reflexive at " + elements_[a]);
    for (std::size_t b = 0; b < n; ++b) {
      if (a != b && leq_[a][b] && leq_[b][a]) {
        throw Error(ErrorKind::PreconditionViolated, "order is not antisymmetric at " + elements_[a]);
      }
      for (std::size_t c = 0; c < n; ++c) {
        if (leq_[a][b] && leq_[b][c] && !leq_[a][c]) {
          throw Error(ErrorKind::PreconditionViolated, "order is not transitive at " + elements_[a]);
        }
      }
    }
  }
}

Poset Poset::chain(int n) {
  std::vector<std::string> e;
  std::vector<std::vector<char>> r(n + 1, std::vector<char>(n + 1, 0));
  for (int a = 0; a <= n; ++a) {
    e.push_back(std::to_string(a));
    for (int b = a; b <= n; ++b) r[a][b] = 1;
  }
  return Poset(std::move(e), std::move(r));
}

Poset Poset::divisors(int n) {
  std::vector<int> d;
  for (int k = 1; k <= n; ++k) {
    if (n % k == 0) d.push_back(k);
  }
  std::vector<std::string> e;
  std::vector<std::vector<char>> r(d.size(), std::vector<char>(d.size(), 0));
  for (std::size_t a = 0; a < d.size(); ++a) {
    e.push_back(std::to_string(d[a]));
    for (std::size_t b = 0; b < d.size(); ++b) r[a][b] = (d[b] % d[a] == 0);
  }
  return Poset(std::move(e), std::move(r));
}

Poset Poset::product(const Poset& a, const Poset& b) {
  std::vector<std::string> e;
  const std::size_t n = a.size() * b.size();
  std::vector<std::vector<char>> r(n, std::vector<char>(n, 0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) e.push_back(a.element(static_cast<int>(i)) + b.element(static_cast<int>(j)));
  }
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      r[x][y] = a.leq(static_cast<int>(x / b.size()), static_cast<int>(y / b.size())) &&
                b.leq(static_cast<int>(x % b.size()), static_cast<int>(y % b.size()));
    }
  }
  return Poset(std::move(e), std::move(r));
}

Poset Poset::from_relation(std::vector<std::string> elements,
                           const std::vector<std::pair<std::string, std::string>>& covers) {
  const std::size_t n = elements.size();
  std::vector<std::vector<char>> r(n, std::vector<char>(n, 0));
  auto idx = [&](const std::string& s) {
    auto it = std::find(elements.begin(), elements.end(), s);
    if (it == elements.end()) throw Error(ErrorKind::UnknownObject, s);
    return static_cast<std::size_t>(it - elements.begin());
  };
  for (std::size_t a = 0; a < n; ++a) r[a][a] = 1;
  for (const auto& [a, b] : covers) r[idx(a)][idx(b)] = 1;
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        if (r[a][k] && r[k][b]) r[a][b] = 1;
      }
    }
  }
  return Poset(std::move(elements), std::move(r));
}

int Poset::index(std::string_view name) const {
  for (std::size_t i = 0; i < elements_.size(); ++i) {
    if (elements_[i] == name) return static_cast<int>(i);
  }
  throw Error(ErrorKind::UnknownObject, std::string(name));
}

std::optional<int> Poset::join(int a, int b) const {
  for (int c = 0; c < static_cast<int>(size()); ++c) {
    if (!leq(a, c) || !leq(b, c)) continue;
    bool least = true;
    for (int d = 0; d < static_cast<int>(size()) && least; ++d) {
      if (leq(a, d) && leq(b, d) && !leq(c, d)) least = false;
    }
    if (least) return c;
  }
  return std::nullopt;
}

std::optional<int> Poset::meet(int a, int b) const {
  for (int c = 0; c < static_cast<int>(size()); ++c) {
    if (!leq(c, a) || !leq(c, b)) continue;
    bool greatest = true;
    for (int d = 0; d < static_cast<int>(size()) && greatest; ++d) {
      if (leq(d, a) && leq(d, b) && !leq(d, c)) greatest = false;
    }
    if (greatest) return c;
  }
  return std::nullopt;
}

bool Poset::is_lattice() const {
  if (size() == 0) return false;
  for (int a = 0; a < static_cast<int>(size()); ++a) {
    for (int b = 0; b < static_cast<int>(size()); ++b) {
      if (!join(a, b) || !meet(a, b)) return false;
    }
  }
  return true;
}

int Poset::height() const {
  const int n = static_cast<int>(size());
  // Longest chain ending at each element, processing in a linear extension.
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::vector<int> below(n, 0);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) below[a] += leq(b, a);
  }
  std::sort(order.begin(), order.end(), [&](int x, int y) { return below[x] < below[y]; });
  std::vector<int> len(n, 0);
  int best = 0;
  for (int a : order) {
    for (int b : order) {
      if (b != a && leq(b, a)) len[a] = std::max(len[a], len[b] + 1);
    }
    best = std::max(best, len[a]);
  }
  return best;
}

CatPtr Poset::to_category() const {
  CategoryBuilder b;
  const int n = static_cast<int>(size());
  for (int a = 0; a < n; ++a) b.add_object(elements_[a]);
  std::vector<std::vector<Mor>> mor(n, std::vector<Mor>(n, kNone));
  for (int a = 0; a < n; ++a) {
    for (int c = 0; c < n; ++c) {
      if (!leq(a, c)) continue;
      mor[a][c] = b.add_morphism(elements_[a] + "<=" + elements_[c], a, c);
      if (a == c) b.set_identity(a, mor[a][c]);
    }
  }
  return b.build([&](Mor g, Mor f) { return mor[b.morphism(f).source][b.morphism(g).target]; }, false);
}

Poset poset_of(const FiniteCategory& C) {
  if (!C.is_thin()) throw Error(ErrorKind::NotThin, "category has parallel morphisms");
  const std::size_t n = C.num_objects();
  std::vector<std::string> e;
  std::vector<std::vector<char>> r(n, std::vector<char>(n, 0));
  for (std::size_t a = 0; a < n; ++a) {
    e.push_back(C.object_name(static_cast<Obj>(a)));
    for (std::size_t b = 0; b < n; ++b) r[a][b] = !C.hom(static_cast<Obj>(a), static_cast<Obj>(b)).empty();
  }
  return Poset(std::move(e), std::move(r));
}

std::optional<std::string> category_difference(const FiniteCategory& a, const FiniteCategory& b) {
  if (a.num_objects() != b.num_objects()) {
    return "object counts differ: " + std::to_string(a.num_objects()) + " vs " + std::to_string(b.num_objects());
  }
  if (a.num_morphisms() != b.num_morphisms()) {
    return "morphism counts differ: " + std::to_string(a.num_morphisms()) + " vs " +
           std::to_string(b.num_morphisms());
  }
  for (std::size_t o = 0; o < a.num_objects(); ++o) {
    if (!b.find_object(a.object_name(static_cast<Obj>(o)))) return "object '" + a.object_name(static_cast<Obj>(o)) + "' missing";
  }
  std::vector<Mor> to_b(a.num_morphisms());
  for (std::size_t f = 0; f < a.num_morphisms(); ++f) {
    const auto& r = a.morphism(static_cast<Mor>(f));
    auto g = b.find_morphism(r.name);
    if (!g) return "morphism '" + r.name + "' missing";
    if (b.object_name(b.source(*g)) != a.object_name(r.source) || b.object_name(b.target(*g)) != a.object_name(r.target)) {
      return "morphism '" + r.name + "' has different endpoints";
    }
    to_b[f] = *g;
  }
  for (std::size_t h = 0; h < a.num_morphisms(); ++h) {
    for (auto [g, f] : a.factorizations(static_cast<Mor>(h))) {
      if (b.compose(to_b[g], to_b[f]) != to_b[h]) {
        return "composite " + a.morphism_name(g) + " o " + a.morphism_name(f) + " differs";
      }
    }
  }
  return std::nullopt;
}

}  // namespace catkit
