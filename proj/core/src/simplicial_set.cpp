#include <algorithm>
#include <map>

#include "catkit/simplicial_set.hpp"

namespace catkit {

std::optional<int> TruncatedSimplicialSet::find(int level, const std::string& name) const {
  if (level < 0 || level > bound()) return std::nullopt;
  auto it = index_[level].find(name);
  if (it == index_[level].end()) return std::nullopt;
  return it->second;
}

std::size_t TruncatedSimplicialSet::count_nondegenerate(int level) const {
  return static_cast<std::size_t>(std::count(degenerate_[level].begin(), degenerate_[level].end(), 0));
}

int TruncatedSimplicialSet::apply(int level, int x, const std::vector<int>& theta) const {
  const int k = static_cast<int>(theta.size()) - 1;
  if (k > bound()) throw Error(ErrorKind::BoundMismatch, "operator lands above the bound " + std::to_string(bound()));
  std::vector<char> hit(level + 1, 0);
  for (int v : theta) {
    if (v < 0 || v > level) throw Error(ErrorKind::BadIndex, "operator value out of range");
    hit[v] = 1;
  }
  int cur = level;
  for (int i = level; i >= 0; --i) {
    if (!hit[i]) {
      x = face(cur, i, x);
      --cur;
    }
  }
  for (int j = 0; j < k; ++j) {
    if (theta[j] == theta[j + 1]) {
      x = degeneracy(cur, j, x);
      ++cur;
    }
  }
  return x;
}

std::vector<int> TruncatedSimplicialSet::vertices(int level, int x) const {
  std::vector<int> out;
  for (int v = 0; v <= level; ++v) out.push_back(apply(level, x, {v}));
  return out;
}

SimplicialSetBuilder::SimplicialSetBuilder(int bound) : bound_(bound) {
  if (bound < 0) throw Error(ErrorKind::BadIndex, "negative dimension bound");
  names_.resize(bound + 1);
  faces_.resize(bound + 1);
  degens_.resize(bound + 1);
}

int SimplicialSetBuilder::add_simplex(int level, std::string name) {
  if (level < 0 || level > bound_) throw Error(ErrorKind::BadIndex, "level " + std::to_string(level) + " out of bound");
  names_[level].push_back(std::move(name));
  faces_[level].resize(names_[level].size() * (level + 1), kNone);
  degens_[level].resize(names_[level].size() * (level + 1), kNone);
  return static_cast<int>(names_[level].size() - 1);
}

void SimplicialSetBuilder::set_face(int level, int i, int x, int y) {
  faces_[level][static_cast<std::size_t>(x) * (level + 1) + i] = y;
}

void SimplicialSetBuilder::set_degeneracy(int level, int j, int x, int y) {
  degens_[level][static_cast<std::size_t>(x) * (level + 1) + j] = y;
}

SSetPtr SimplicialSetBuilder::build(bool validate) {
  auto K = std::make_shared<TruncatedSimplicialSet>();
  K->names_ = names_;
  K->faces_ = faces_;
  K->degens_ = degens_;
  K->provenance_ = provenance_;
  K->index_.resize(bound_ + 1);
  K->degenerate_.resize(bound_ + 1);
  for (int k = 0; k <= bound_; ++k) {
    if (k == bound_) K->degens_[k].clear();
    for (std::size_t x = 0; x < names_[k].size(); ++x) {
      if (!K->index_[k].emplace(names_[k][x], static_cast<int>(x)).second) {
        throw Error(ErrorKind::SimplicialIdentity, "duplicate simplex name '" + names_[k][x] + "'");
      }
      for (int i = 0; i <= k; ++i) {
        const int y = K->faces_[k][x * (k + 1) + i];
        if (k > 0 && (y < 0 || y >= static_cast<int>(names_[k - 1].size()))) {
          throw Error(ErrorKind::SimplicialIdentity, "face d" + std::to_string(i) + " of '" + names_[k][x] + "' is missing");
        }
        if (k < bound_) {
          const int z = K->degens_[k][x * (k + 1) + i];
          if (z < 0 || z >= static_cast<int>(names_[k + 1].size())) {
            throw Error(ErrorKind::SimplicialIdentity,
                        "degeneracy s" + std::to_string(i) + " of '" + names_[k][x] + "' is missing");
          }
        }
      }
    }
  }
  for (int k = 0; k <= bound_; ++k) {
    K->degenerate_[k].assign(names_[k].size(), 0);
    if (k == 0) continue;
    for (std::size_t x = 0; x < names_[k].size(); ++x) {
      for (int j = 0; j < k; ++j) {
        if (K->degeneracy(k - 1, j, K->face(k, j, static_cast<int>(x))) == static_cast<int>(x)) {
          K->degenerate_[k][x] = 1;
          break;
        }
      }
    }
  }
  if (validate) {
    if (auto v = simplicial_identity_violation(*K)) throw Error(ErrorKind::SimplicialIdentity, *v);
  }
  return K;
}

std::optional<std::string> simplicial_identity_violation(const TruncatedSimplicialSet& K) {
  const int d = K.bound();
  for (int k = 0; k <= d; ++k) {
    for (int x = 0; x < static_cast<int>(K.size(k)); ++x) {
      const std::string& nm = K.name(k, x);
      if (k >= 2) {
        for (int j = 1; j <= k; ++j) {
          for (int i = 0; i < j; ++i) {
            if (K.face(k - 1, i, K.face(k, j, x)) != K.face(k - 1, j - 1, K.face(k, i, x))) {
              return "d" + std::to_string(i) + "d" + std::to_string(j) + " at '" + nm + "'";
            }
          }
        }
      }
      if (k < d) {
        for (int j = 0; j <= k; ++j) {
          const int sx = K.degeneracy(k, j, x);
          for (int i = 0; i <= k + 1; ++i) {
            const int lhs = K.face(k + 1, i, sx);
            int rhs;
            if (i == j || i == j + 1) {
              rhs = x;
            } else if (i < j) {
              rhs = K.degeneracy(k - 1, j - 1, K.face(k, i, x));
            } else {
              rhs = K.degeneracy(k - 1, j, K.face(k, i - 1, x));
            }
            if (lhs != rhs) return "d" + std::to_string(i) + "s" + std::to_string(j) + " at '" + nm + "'";
          }
        }
      }
      if (k + 1 < d) {
        for (int j = 0; j <= k; ++j) {
          for (int i = 0; i <= j; ++i) {
            if (K.degeneracy(k + 1, i, K.degeneracy(k, j, x)) != K.degeneracy(k + 1, j + 1, K.degeneracy(k, i, x))) {
              return "s" + std::to_string(i) + "s" + std::to_string(j) + " at '" + nm + "'";
            }
          }
        }
      }
    }
  }
  return std::nullopt;
}

std::optional<std::string> simplicial_map_violation(const SimplicialMap& f) {
  const auto& K = *f.source;
  const auto& L = *f.target;
  if (K.bound() != L.bound()) return "bounds differ";
  if (static_cast<int>(f.levels.size()) != K.bound() + 1) return "wrong number of levels";
  for (int k = 0; k <= K.bound(); ++k) {
    if (f.levels[k].size() != K.size(k)) return "level " + std::to_string(k) + " has the wrong size";
    for (int x = 0; x < static_cast<int>(K.size(k)); ++x) {
      const int y = f(k, x);
      if (y < 0 || y >= static_cast<int>(L.size(k))) return "'" + K.name(k, x) + "' is unassigned";
      for (int i = 0; k > 0 && i <= k; ++i) {
        if (L.face(k, i, y) != f(k - 1, K.face(k, i, x))) {
          return "d" + std::to_string(i) + " not preserved at '" + K.name(k, x) + "'";
        }
      }
      for (int j = 0; k < K.bound() && j <= k; ++j) {
        if (L.degeneracy(k, j, y) != f(k + 1, K.degeneracy(k, j, x))) {
          return "s" + std::to_string(j) + " not preserved at '" + K.name(k, x) + "'";
        }
      }
    }
  }
  return std::nullopt;
}

SimplicialMap identity_map(const SSetPtr& K) {
  SimplicialMap f{K, K, {}};
  for (int k = 0; k <= K->bound(); ++k) {
    std::vector<int> lv(K->size(k));
    for (std::size_t x = 0; x < lv.size(); ++x) lv[x] = static_cast<int>(x);
    f.levels.push_back(std::move(lv));
  }
  return f;
}

SimplicialMap compose(const SimplicialMap& g, const SimplicialMap& f) {
  SimplicialMap h{f.source, g.target, {}};
  for (std::size_t k = 0; k < f.levels.size(); ++k) {
    std::vector<int> lv;
    lv.reserve(f.levels[k].size());
    for (int y : f.levels[k]) lv.push_back(g(static_cast<int>(k), y));
    h.levels.push_back(std::move(lv));
  }
  return h;
}

bool is_levelwise_injective(const SimplicialMap& f) {
  for (std::size_t k = 0; k < f.levels.size(); ++k) {
    std::vector<char> seen(f.target->size(static_cast<int>(k)), 0);
    for (int y : f.levels[k]) {
      if (seen[y]) return false;
      seen[y] = 1;
    }
  }
  return true;
}

bool is_levelwise_bijective(const SimplicialMap& f) {
  if (!is_levelwise_injective(f)) return false;
  for (std::size_t k = 0; k < f.levels.size(); ++k) {
    if (f.levels[k].size() != f.target->size(static_cast<int>(k))) return false;
  }
  return true;
}

SimplicialMap inverse(const SimplicialMap& f) {
  if (!is_levelwise_bijective(f)) throw Error(ErrorKind::PreconditionViolated, "map is not invertible");
  SimplicialMap g{f.target, f.source, {}};
  for (const auto& lv : f.levels) {
    std::vector<int> inv(lv.size());
    for (std::size_t x = 0; x < lv.size(); ++x) inv[lv[x]] = static_cast<int>(x);
    g.levels.push_back(std::move(inv));
  }
  return g;
}

SSetPtr nerve(const CatPtr& C, int bound) {
  SimplicialSetBuilder b(bound);
  b.set_provenance("N(" + std::to_string(C->num_objects()) + " objects)<=" + std::to_string(bound));
  std::vector<std::vector<std::vector<Mor>>> chains(bound + 1);
  std::vector<std::map<std::vector<Mor>, int>> index(bound + 1);
  for (std::size_t a = 0; a < C->num_objects(); ++a) {
    chains[0].push_back({C->identity(static_cast<Obj>(a))});
    index[0][chains[0].back()] = b.add_simplex(0, C->object_name(static_cast<Obj>(a)));
  }
  for (int k = 1; k <= bound; ++k) {
    for (const auto& prev : chains[k - 1]) {
      const Obj last = C->target(prev.back());
      for (Mor f : C->out(last)) {
        std::vector<Mor> ch = k == 1 ? std::vector<Mor>{} : prev;
        ch.push_back(f);
        std::string nm;
        for (std::size_t i = 0; i < ch.size(); ++i) nm += (i ? ";" : "") + C->morphism_name(ch[i]);
        index[k][ch] = b.add_simplex(k, nm);
        chains[k].push_back(std::move(ch));
      }
    }
  }
  auto vertex_key = [&](Obj a) { return std::vector<Mor>{C->identity(a)}; };
  for (int k = 0; k <= bound; ++k) {
    for (std::size_t x = 0; x < chains[k].size(); ++x) {
      const auto& ch = chains[k][x];
      std::vector<Obj> obj;
      if (k == 0) {
        obj.push_back(C->source(ch[0]));
      } else {
        obj.push_back(C->source(ch[0]));
        for (Mor f : ch) obj.push_back(C->target(f));
      }
      if (k >= 1) {
        for (int i = 0; i <= k; ++i) {
          std::vector<Mor> face;
          if (k == 1) {
            face = vertex_key(obj[i == 0 ? 1 : 0]);
          } else if (i == 0) {
            face.assign(ch.begin() + 1, ch.end());
          } else if (i == k) {
            face.assign(ch.begin(), ch.end() - 1);
          } else {
            face.assign(ch.begin(), ch.begin() + (i - 1));
            face.push_back(C->compose(ch[i], ch[i - 1]));
            face.insert(face.end(), ch.begin() + i + 1, ch.end());
          }
          b.set_face(k, i, static_cast<int>(x), index[k - 1].at(face));
        }
      }
      if (k < bound) {
        for (int j = 0; j <= k; ++j) {
          std::vector<Mor> deg = k == 0 ? std::vector<Mor>{} : ch;
          deg.insert(deg.begin() + j, C->identity(obj[j]));
          b.set_degeneracy(k, j, static_cast<int>(x), index[k + 1].at(deg));
        }
      }
    }
  }
  return b.build();
}

NerveChain nerve_chain(const FiniteCategory& C, const TruncatedSimplicialSet& N, int level, int x) {
  NerveChain out;
  for (int v : N.vertices(level, x)) out.objects.push_back(C.object(N.name(0, v)));
  for (int i = 0; i < level; ++i) {
    const int e = N.apply(level, x, {i, i + 1});
    auto f = C.find_morphism(N.name(1, e));
    if (!f) throw Error(ErrorKind::UnknownMorphism, N.name(1, e));
    out.steps.push_back(*f);
  }
  return out;
}

SSetPtr product(const SSetPtr& K, const SSetPtr& L) {
  if (K->bound() != L->bound()) {
    throw Error(ErrorKind::BoundMismatch, "product of bounds " + std::to_string(K->bound()) + " and " +
                                              std::to_string(L->bound()));
  }
  const int d = K->bound();
  SimplicialSetBuilder b(d);
  b.set_provenance("(" + K->provenance() + ")x(" + L->provenance() + ")");
  for (int k = 0; k <= d; ++k) {
    for (std::size_t x = 0; x < K->size(k); ++x) {
      for (std::size_t y = 0; y < L->size(k); ++y) {
        b.add_simplex(k, "(" + K->name(k, static_cast<int>(x)) + "," + L->name(k, static_cast<int>(y)) + ")");
      }
    }
  }
  for (int k = 0; k <= d; ++k) {
    const int nl = static_cast<int>(L->size(k));
    for (int x = 0; x < static_cast<int>(K->size(k)); ++x) {
      for (int y = 0; y < nl; ++y) {
        const int p = x * nl + y;
        for (int i = 0; k > 0 && i <= k; ++i) {
          b.set_face(k, i, p, K->face(k, i, x) * static_cast<int>(L->size(k - 1)) + L->face(k, i, y));
        }
        for (int j = 0; k < d && j <= k; ++j) {
          b.set_degeneracy(k, j, p, K->degeneracy(k, j, x) * static_cast<int>(L->size(k + 1)) + L->degeneracy(k, j, y));
        }
      }
    }
  }
  return b.build();
}

ProductProjections projections(const SSetPtr& KxL, const SSetPtr& K, const SSetPtr& L) {
  ProductProjections out{{KxL, K, {}}, {KxL, L, {}}};
  for (int k = 0; k <= KxL->bound(); ++k) {
    const int nl = static_cast<int>(L->size(k));
    std::vector<int> a, c;
    for (int p = 0; p < static_cast<int>(KxL->size(k)); ++p) {
      a.push_back(p / nl);
      c.push_back(p % nl);
    }
    out.first.levels.push_back(std::move(a));
    out.second.levels.push_back(std::move(c));
  }
  return out;
}

SSetPtr truncate(const SSetPtr& K, int bound) {
  if (bound > K->bound()) throw Error(ErrorKind::BoundMismatch, "cannot raise a truncation bound");
  SimplicialSetBuilder b(bound);
  b.set_provenance(K->provenance() + "<=" + std::to_string(bound));
  for (int k = 0; k <= bound; ++k) {
    for (std::size_t x = 0; x < K->size(k); ++x) b.add_simplex(k, K->name(k, static_cast<int>(x)));
  }
  for (int k = 0; k <= bound; ++k) {
    for (int x = 0; x < static_cast<int>(K->size(k)); ++x) {
      for (int i = 0; k > 0 && i <= k; ++i) b.set_face(k, i, x, K->face(k, i, x));
      for (int j = 0; k < bound && j <= k; ++j) b.set_degeneracy(k, j, x, K->degeneracy(k, j, x));
    }
  }
  return b.build();
}

SSetPtr point(int bound) { return standard_cells(CellKind::Simplex, 0, bound); }

SSetPtr empty_sset(int bound) {
  SimplicialSetBuilder b(bound);
  b.set_provenance("empty<=" + std::to_string(bound));
  return b.build();
}

SimplicialMap to_point(const SSetPtr& K, const SSetPtr& pt) {
  SimplicialMap f{K, pt, {}};
  for (int k = 0; k <= K->bound(); ++k) f.levels.emplace_back(K->size(k), 0);
  return f;
}

SubObject sub_object(const SSetPtr& K, const std::function<bool(int level, int x)>& keep) {
  const int d = K->bound();
  SimplicialSetBuilder b(d);
  b.set_provenance("sub(" + K->provenance() + ")");
  std::vector<std::vector<int>> local(d + 1);
  SimplicialMap inc{nullptr, K, std::vector<std::vector<int>>(d + 1)};
  for (int k = 0; k <= d; ++k) {
    local[k].assign(K->size(k), kNone);
    for (int x = 0; x < static_cast<int>(K->size(k)); ++x) {
      if (!keep(k, x)) continue;
      local[k][x] = b.add_simplex(k, K->name(k, x));
      inc.levels[k].push_back(x);
    }
  }
  for (int k = 0; k <= d; ++k) {
    for (std::size_t n = 0; n < inc.levels[k].size(); ++n) {
      const int x = inc.levels[k][n];
      for (int i = 0; k > 0 && i <= k; ++i) {
        const int y = local[k - 1][K->face(k, i, x)];
        if (y == kNone) throw Error(ErrorKind::PreconditionViolated, "sub-object not closed under faces");
        b.set_face(k, i, static_cast<int>(n), y);
      }
      for (int j = 0; k < d && j <= k; ++j) {
        const int y = local[k + 1][K->degeneracy(k, j, x)];
        if (y == kNone) throw Error(ErrorKind::PreconditionViolated, "sub-object not closed under degeneracies");
        b.set_degeneracy(k, j, static_cast<int>(n), y);
      }
    }
  }
  inc.source = b.build();
  return {inc.source, inc};
}

}  // namespace catkit
