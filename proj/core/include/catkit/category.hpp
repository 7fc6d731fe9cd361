#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "catkit/error.hpp"
#include "catkit/verdict.hpp"

namespace catkit {

using Obj = int;
using Mor = int;
inline constexpr int kNone = -1;

struct MorphismRecord {
  std::string name;
  Obj source = kNone;
  Obj target = kNone;
};

/// A finite category given by its full composition table.
///
/// Objects and morphisms are dense indices in construction order; every
/// enumeration over them follows that order. Instances are immutable once
/// built and are shared through `CatPtr`.
class FiniteCategory {
 public:
  std::size_t num_objects() const { return object_names_.size(); }
  std::size_t num_morphisms() const { return morphisms_.size(); }

  const std::string& object_name(Obj a) const { return object_names_[a]; }
  const std::string& morphism_name(Mor f) const { return morphisms_[f].name; }
  const MorphismRecord& morphism(Mor f) const { return morphisms_[f]; }
  Obj source(Mor f) const { return morphisms_[f].source; }
  Obj target(Mor f) const { return morphisms_[f].target; }
  Mor identity(Obj a) const { return identities_[a]; }
  bool is_identity(Mor f) const { return identities_[source(f)] == f; }

  /// g∘f. Throws IllTypedComposite when target(f) != source(g).
  Mor compose(Mor g, Mor f) const;

  std::span<const Mor> hom(Obj a, Obj b) const;
  std::span<const Mor> out(Obj a) const { return out_[a]; }
  std::span<const Mor> in(Obj b) const { return in_[b]; }

  /// Pairs (g, f) with g∘f == h, including identity splittings.
  std::span<const std::pair<Mor, Mor>> factorizations(Mor h) const { return factorizations_[h]; }

  std::optional<Obj> find_object(std::string_view name) const;
  std::optional<Mor> find_morphism(std::string_view name) const;
  Obj object(std::string_view name) const;
  Mor morphism_named(std::string_view name) const;

  /// At most one morphism between any ordered pair of objects.
  bool is_thin() const { return thin_; }
  bool is_isomorphism(Mor f) const;

 private:
  friend class CategoryBuilder;

  std::vector<std::string> object_names_;
  std::vector<MorphismRecord> morphisms_;
  std::vector<Mor> identities_;
  std::vector<std::vector<Mor>> out_;
  std::vector<std::vector<Mor>> in_;
  std::vector<int> in_pos_;
  std::vector<int> out_pos_;
  std::vector<std::size_t> table_offset_;
  std::vector<Mor> table_;
  std::unordered_map<std::uint64_t, std::vector<Mor>> hom_;
  std::vector<std::vector<std::pair<Mor, Mor>>> factorizations_;
  std::unordered_map<std::string, Obj> object_index_;
  std::unordered_map<std::string, Mor> morphism_index_;
  bool thin_ = true;
};

using CatPtr = std::shared_ptr<const FiniteCategory>;

/// Assembles a FiniteCategory and validates it eagerly.
class CategoryBuilder {
 public:
  using ComposeFn = std::function<Mor(Mor g, Mor f)>;

  Obj add_object(std::string name);
  Mor add_morphism(std::string name, Obj source, Obj target);
  /// Adds a morphism and registers it as the identity of `a`.
  Mor add_identity(Obj a, std::string name);
  void set_identity(Obj a, Mor f);
  void set_composite(Mor g, Mor f, Mor h);

  std::size_t num_objects() const { return objects_.size(); }
  std::size_t num_morphisms() const { return morphisms_.size(); }
  const MorphismRecord& morphism(Mor f) const { return morphisms_[f]; }

  /// Builds the category. With `compose` the table is filled by calling it on
  /// every composable pair; otherwise the composites set explicitly are used.
  /// `validate` controls the associativity/unit sweep.
  CatPtr build(const ComposeFn& compose = {}, bool validate = true);

 private:
  std::vector<std::string> objects_;
  std::vector<MorphismRecord> morphisms_;
  std::vector<Mor> identities_;
  std::unordered_map<std::uint64_t, Mor> composites_;
};

/// Raw declarative description of a category, as read from text.
struct CategoryTable {
  std::vector<std::string> objects;
  struct MorphismRow {
    std::string name, source, target;
  };
  std::vector<MorphismRow> morphisms;
  std::vector<std::pair<std::string, std::string>> identities;  // object, morphism
  struct CompositeRow {
    std::string g, f, h;  // g∘f = h
  };
  std::vector<CompositeRow> composites;
};

/// Validates and builds a category from a raw table. Composites with an
/// identity factor may be omitted.
CatPtr build_category(const CategoryTable& table);

// ---------------------------------------------------------------------------

/// A functor between finite categories, stored as explicit object and
/// morphism assignments.
struct Functor {
  CatPtr source;
  CatPtr target;
  std::vector<Obj> on_objects;
  std::vector<Mor> on_morphisms;

  Obj operator()(Obj a) const { return on_objects[a]; }
  Mor map(Mor f) const { return on_morphisms[f]; }
};

/// Returns a description of the first violated functor law, if any.
std::optional<std::string> functor_violation(const Functor& F);
/// Validating constructor; throws NotAFunctor.
Functor make_functor(CatPtr source, CatPtr target, std::vector<Obj> objects, std::vector<Mor> morphisms);
/// For thin targets a functor is determined by its object map.
Functor functor_from_object_map(CatPtr source, CatPtr target, const std::vector<Obj>& objects);
Functor identity_functor(CatPtr C);
/// G∘F.
Functor compose(const Functor& G, const Functor& F);
bool same_functor(const Functor& F, const Functor& G);

struct NaturalTransformation {
  Functor source;
  Functor target;
  std::vector<Mor> components;
};

std::optional<std::string> naturality_violation(const NaturalTransformation& eta);

/// A selection of morphisms (weak equivalences, cofibrations, face operators,...).
class Marking {
 public:
  Marking() = default;
  Marking(CatPtr category, std::vector<char> selected);

  static Marking identities(CatPtr category);
  static Marking all(CatPtr category);
  static Marking from_names(CatPtr category, const std::vector<std::string>& names);
  /// Morphisms sent into `target_marking` by F.
  static Marking created_by(const Functor& F, const Marking& target_marking);

  const CatPtr& category() const { return category_; }
  bool contains(Mor f) const { return selected_[f] != 0; }
  void insert(Mor f) { selected_[f] = 1; }
  std::size_t count() const;
  const std::vector<char>& selected() const { return selected_; }
  std::vector<std::string> names() const;

  bool is_wide() const;
  std::optional<std::string> composition_violation() const;
  bool is_subcategory() const { return is_wide() && !composition_violation(); }

  friend bool operator==(const Marking& a, const Marking& b) { return a.selected_ == b.selected_; }

 private:
  CatPtr category_;
  std::vector<char> selected_;
};

Marking intersect(const Marking& a, const Marking& b);

struct MarkedCategory {
  CatPtr category;
  Marking we;
};

MarkedCategory minimal_marking(CatPtr C);
/// All morphisms marked ("hat").
MarkedCategory hat(CatPtr C);

using DegreeFunction = std::vector<int>;

struct MarkedDirectCategory {
  CatPtr category;
  Marking we;
  DegreeFunction degree;
};

struct ReedyStructure {
  CatPtr category;
  Marking faces;
  Marking degeneracies;
  DegreeFunction degree;
};

/// Faces = all morphisms, degeneracies = identities.
ReedyStructure direct_reedy_structure(const MarkedDirectCategory& J);

// ---------------------------------------------------------------------------

/// Finite partial order on named elements.
class Poset {
 public:
  Poset(std::vector<std::string> elements, std::vector<std::vector<char>> leq);

  static Poset chain(int n);  // [n] = {0 < 1 < ... < n}
  static Poset divisors(int n);
  static Poset product(const Poset& a, const Poset& b);
  static Poset from_relation(std::vector<std::string> elements,
                             const std::vector<std::pair<std::string, std::string>>& covers);

  std::size_t size() const { return elements_.size(); }
  const std::string& element(int i) const { return elements_[i]; }
  const std::vector<std::string>& elements() const { return elements_; }
  bool leq(int a, int b) const { return leq_[a][b] != 0; }
  int index(std::string_view name) const;

  std::optional<int> join(int a, int b) const;
  std::optional<int> meet(int a, int b) const;
  bool is_lattice() const;
  /// Length of the longest strict chain minus one.
  int height() const;

  /// The induced thin category. Object i is element i; morphisms are named
  /// "a<=b".
  CatPtr to_category() const;

 private:
  std::vector<std::string> elements_;
  std::vector<std::vector<char>> leq_;
};

/// Reads a thin category as a poset (objects in the same order).
Poset poset_of(const FiniteCategory& C);

/// Categories with equal object and morphism names, incidence and composition.
std::optional<std::string> category_difference(const FiniteCategory& a, const FiniteCategory& b);

}  // namespace catkit
