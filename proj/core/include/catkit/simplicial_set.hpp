#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "catkit/category.hpp"

namespace catkit {

/// A simplicial set truncated at dimension `bound`: explicit simplices in
/// levels 0..bound with all face maps and every degeneracy landing at or
/// below the bound. Simplices are dense indices per level.
class TruncatedSimplicialSet {
 public:
  int bound() const { return static_cast<int>(names_.size()) - 1; }
  std::size_t size(int level) const { return names_[level].size(); }
  const std::string& name(int level, int x) const { return names_[level][x]; }
  std::optional<int> find(int level, const std::string& name) const;

  /// d_i : level -> level - 1.
  int face(int level, int i, int x) const { return faces_[level][static_cast<std::size_t>(x) * (level + 1) + i]; }
  /// s_j : level -> level + 1, defined for level < bound.
  int degeneracy(int level, int j, int x) const {
    return degens_[level][static_cast<std::size_t>(x) * (level + 1) + j];
  }
  bool is_degenerate(int level, int x) const { return degenerate_[level][x] != 0; }
  std::size_t count_nondegenerate(int level) const;

  /// Action of a monotone map theta : [k] -> [level] (values theta[0..k]).
  int apply(int level, int x, const std::vector<int>& theta) const;
  /// Vertices of a simplex, in order.
  std::vector<int> vertices(int level, int x) const;

  /// Text identifying the object, e.g. "Delta[2]<=3"; carried through copies.
  const std::string& provenance() const { return provenance_; }

 private:
  friend class SimplicialSetBuilder;
  std::vector<std::vector<std::string>> names_;
  std::vector<std::vector<int>> faces_;
  std::vector<std::vector<int>> degens_;
  std::vector<std::vector<char>> degenerate_;
  std::vector<std::unordered_map<std::string, int>> index_;
  std::string provenance_;
};

using SSetPtr = std::shared_ptr<const TruncatedSimplicialSet>;

class SimplicialSetBuilder {
 public:
  explicit SimplicialSetBuilder(int bound);
  int add_simplex(int level, std::string name);
  void set_face(int level, int i, int x, int y);
  void set_degeneracy(int level, int j, int x, int y);
  void set_provenance(std::string p) { provenance_ = std::move(p); }
  std::size_t size(int level) const { return names_[level].size(); }
  /// Validates totality and every simplicial identity within the bound;
  /// throws SimplicialIdentity naming the offending simplex.
  SSetPtr build(bool validate = true);

 private:
  int bound_;
  std::vector<std::vector<std::string>> names_;
  std::vector<std::vector<int>> faces_;
  std::vector<std::vector<int>> degens_;
  std::string provenance_;
};

/// First violated simplicial identity, if any.
std::optional<std::string> simplicial_identity_violation(const TruncatedSimplicialSet& K);

/// A levelwise map commuting with faces and degeneracies.
struct SimplicialMap {
  SSetPtr source;
  SSetPtr target;
  std::vector<std::vector<int>> levels;

  int operator()(int level, int x) const { return levels[level][x]; }
};

std::optional<std::string> simplicial_map_violation(const SimplicialMap& f);
SimplicialMap identity_map(const SSetPtr& K);
/// g∘f.
SimplicialMap compose(const SimplicialMap& g, const SimplicialMap& f);
bool is_levelwise_injective(const SimplicialMap& f);
bool is_levelwise_bijective(const SimplicialMap& f);
/// The inverse of a levelwise bijective map.
SimplicialMap inverse(const SimplicialMap& f);

enum class CellKind { Simplex, Boundary, Horn, Spine, E1 };

/// Standard cells truncated at `bound`. Simplices are named by vertex lists
/// such as "(0,1,1)". Horn index is only used for CellKind::Horn.
SSetPtr standard_cells(CellKind kind, int m, int bound, int horn_index = 0);
/// Inclusion of a sub-object of Delta[m] (boundary, horn, spine) into Delta[m].
SimplicialMap standard_inclusion(const SSetPtr& sub, const SSetPtr& simplex);
/// Map Delta[m] -> K classifying an m-simplex x (requires m <= bound of K).
SimplicialMap yoneda_map(const SSetPtr& simplex, const SSetPtr& K, int x);

/// N C truncated at `bound`. Vertices are object names; k-simplices are
/// chains "f1;f2;...;fk".
SSetPtr nerve(const CatPtr& C, int bound);
/// The functor [k] -> C of a simplex of nerve(C): objects then morphisms i->i+1.
struct NerveChain {
  std::vector<Obj> objects;
  std::vector<Mor> steps;
};
NerveChain nerve_chain(const FiniteCategory& C, const TruncatedSimplicialSet& N, int level, int x);

/// Levelwise product, simplices "(x,y)". Throws BoundMismatch.
SSetPtr product(const SSetPtr& K, const SSetPtr& L);
struct ProductProjections {
  SimplicialMap first;
  SimplicialMap second;
};
ProductProjections projections(const SSetPtr& KxL, const SSetPtr& K, const SSetPtr& L);
/// Restriction to a lower bound.
SSetPtr truncate(const SSetPtr& K, int bound);
/// The terminal simplicial set Delta[0] at a bound.
SSetPtr point(int bound);
/// The empty simplicial set at a bound.
SSetPtr empty_sset(int bound);
/// The unique map into Delta[0].
SimplicialMap to_point(const SSetPtr& K, const SSetPtr& pt);

/// The sub-object of all simplices whose vertex sets satisfy `keep` (must be
/// closed under faces and degeneracies), with its inclusion.
struct SubObject {
  SSetPtr object;
  SimplicialMap inclusion;
};
SubObject sub_object(const SSetPtr& K, const std::function<bool(int level, int x)>& keep);

}  // namespace catkit
