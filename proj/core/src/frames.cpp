#include <map>

#include "catkit/constructive.hpp"
#include "catkit/frames.hpp"
#include "catkit/functor_search.hpp"
#include "catkit/lifting.hpp"

namespace catkit {
namespace {

using Key = std::pair<std::vector<Obj>, std::vector<Mor>>;

Key key_of(const Functor& X) { return {X.on_objects, X.on_morphisms}; }

// X∘F without the composability sweep; F's target and X's source are built
// by the same deterministic construction.
Functor precompose(const Functor& X, const Functor& F) {
  Functor H{F.source, X.target, {}, {}};
  for (Obj a : F.on_objects) H.on_objects.push_back(X(a));
  for (Mor f : F.on_morphisms) H.on_morphisms.push_back(X.map(f));
  return H;
}

std::vector<int> coface(int m, int i) {  // [m-1] -> [m] skipping i
  std::vector<int> t;
  for (int a = 0; a <= m; ++a) {
    if (a != i) t.push_back(a);
  }
  return t;
}

std::vector<int> codegeneracy(int m, int j) {  // [m+1] -> [m] hitting j twice
  std::vector<int> t;
  for (int a = 0; a <= m + 1; ++a) t.push_back(a <= j ? a : a - 1);
  return t;
}

std::string cell_name(const Functor& X, std::size_t k) {
  std::string n = diagram_name(X);
  if (!X.target->is_thin()) n += "#" + std::to_string(k);
  return n;
}

struct Levels {
  std::vector<std::map<Key, int>> index;

  int find(int level, const Functor& X, const std::string& what) const {
    auto it = index[level].find(key_of(X));
    if (it == index[level].end()) {
      throw Error(ErrorKind::UnknownObject, what + " of a level-" + std::to_string(level + 1) + " cell is missing: " +
                                                diagram_name(X));
    }
    return it->second;
  }
};

// Functor [a] x [b] -> [a'] x [b'] from maps on both factors.
Functor grid_map(const std::vector<int>& first, const std::vector<int>& second, int n2, const CatPtr& source,
                 const CatPtr& target) {
  std::vector<Obj> objs;
  for (std::size_t a = 0; a < first.size(); ++a) {
    for (std::size_t b = 0; b < second.size(); ++b) objs.push_back(first[a] * (n2 + 1) + second[b]);
  }
  return functor_from_object_map(source, target, objs);
}

std::vector<int> identity_map(int n) {
  std::vector<int> t;
  for (int a = 0; a <= n; ++a) t.push_back(a);
  return t;
}

}  // namespace

Functor d_of_thin_functor(const Functor& F, const DCategory& A, const DCategory& B) {
  const auto& EA = A.elements;
  const auto& EB = B.elements;
  const FiniteCategory& base = *F.target;
  Functor out{EA.category(), EB.category(), {}, {}};
  for (std::size_t x = 0; x < EA.category()->num_objects(); ++x) {
    std::string name = "(";
    bool first = true;
    for (Obj v : d_values(EA, static_cast<Obj>(x))) {
      name += (first ? "" : ",") + base.object_name(F(v));
      first = false;
    }
    name += ")";
    auto o = EB.category()->find_object(name);
    if (!o) throw Error(ErrorKind::UnknownObject, name);
    out.on_objects.push_back(*o);
  }
  for (std::size_t u = 0; u < EA.category()->num_morphisms(); ++u) {
    out.on_morphisms.push_back(EB.morphism(EA.op[u], out.on_objects[EA.category()->target(static_cast<Mor>(u))]));
  }
  return out;
}

std::vector<DCategory> simplex_shapes(int dim_bound, int deg_bound) {
  std::vector<DCategory> out;
  for (int m = 0; m <= dim_bound; ++m) out.push_back(d_of_category(minimal_marking(Poset::chain(m).to_category()), deg_bound));
  return out;
}

TruncatedFramesComplex nf_truncated(const CofibrationPresentation& C, int m_max, int deg_bound, std::size_t cap) {
  if (m_max < 0 || deg_bound < 0) throw Error(ErrorKind::BadIndex, "bounds must be non-negative");
  const auto shapes = simplex_shapes(m_max, deg_bound);
  TruncatedFramesComplex out;
  out.source = C.provenance;
  out.dim_bound = m_max;
  out.deg_bound = deg_bound;
  Levels lv;
  SimplicialSetBuilder b(m_max);
  b.set_provenance("Nf(" + C.provenance + ") dim<=" + std::to_string(m_max) + " deg<=" + std::to_string(deg_bound));
  for (int m = 0; m <= m_max; ++m) {
    out.cells.push_back(homotopical_diagrams(shapes[m].elements.direct, C, true, cap));
    lv.index.emplace_back();
    for (std::size_t k = 0; k < out.cells[m].size(); ++k) {
      lv.index[m][key_of(out.cells[m][k])] = b.add_simplex(m, cell_name(out.cells[m][k], k));
    }
  }
  for (int m = 0; m <= m_max; ++m) {
    for (int i = 0; m > 0 && i <= m; ++i) {
      const Functor F = d_of_monotone(coface(m, i), shapes[m - 1], shapes[m]);
      for (std::size_t x = 0; x < out.cells[m].size(); ++x) {
        b.set_face(m, i, static_cast<int>(x), lv.find(m - 1, precompose(out.cells[m][x], F), "face"));
      }
    }
    for (int j = 0; m < m_max && j <= m; ++j) {
      const Functor F = d_of_monotone(codegeneracy(m, j), shapes[m + 1], shapes[m]);
      for (std::size_t x = 0; x < out.cells[m].size(); ++x) {
        b.set_degeneracy(m, j, static_cast<int>(x), lv.find(m + 1, precompose(out.cells[m][x], F), "degeneracy"));
      }
    }
  }
  out.complex = b.build();
  return out;
}

SimplicialMap nf_of_functor(const Functor& F, const TruncatedFramesComplex& NC, const TruncatedFramesComplex& ND) {
  if (NC.dim_bound != ND.dim_bound || NC.deg_bound != ND.deg_bound) {
    throw Error(ErrorKind::BoundMismatch, "frames complexes truncated differently");
  }
  SimplicialMap out{NC.complex, ND.complex, {}};
  for (int m = 0; m <= NC.dim_bound; ++m) {
    std::map<Key, int> index;
    for (std::size_t k = 0; k < ND.cells[m].size(); ++k) index[key_of(ND.cells[m][k])] = static_cast<int>(k);
    std::vector<int> level;
    for (const auto& X : NC.cells[m]) {
      const Functor Y = compose(F, X);
      auto it = index.find(key_of(Y));
      if (it == index.end()) throw Error(ErrorKind::UnknownObject, "image of " + diagram_name(X) + " is not a frame");
      level.push_back(it->second);
    }
    out.levels.push_back(std::move(level));
  }
  return out;
}

MarkedCategory grid_shape(int m, int n) {
  const Poset P = Poset::product(Poset::chain(m), Poset::chain(n));
  const CatPtr C = P.to_category();
  std::vector<char> sel(C->num_morphisms());
  for (std::size_t f = 0; f < sel.size(); ++f) {
    sel[f] = C->source(static_cast<Mor>(f)) / (n + 1) == C->target(static_cast<Mor>(f)) / (n + 1);
  }
  return {C, Marking(C, sel)};
}

BoldFrames bold_nf(const CofibrationPresentation& C, int m_max, int n_max, int deg_bound, std::size_t cap) {
  if (m_max < 0 || n_max < 0 || deg_bound < 0) throw Error(ErrorKind::BadIndex, "bounds must be non-negative");
  BoldFrames out;
  out.deg_bound = deg_bound;
  std::vector<std::vector<MarkedCategory>> grids(m_max + 1);
  std::vector<std::vector<DCategory>> shapes(m_max + 1);
  std::vector<std::vector<std::map<Key, int>>> index(m_max + 1);
  BisimplicialSetBuilder b(m_max, n_max);
  b.set_provenance("bold Nf(" + C.provenance + ") dims<=" + std::to_string(m_max) + "," + std::to_string(n_max) +
                   " deg<=" + std::to_string(deg_bound));
  out.cells.assign(m_max + 1, std::vector<std::vector<Diagram>>(n_max + 1));
  for (int m = 0; m <= m_max; ++m) {
    index[m].resize(n_max + 1);
    for (int n = 0; n <= n_max; ++n) {
      grids[m].push_back(grid_shape(m, n));
      shapes[m].push_back(d_of_category(grids[m][n], deg_bound));
      out.cells[m][n] = homotopical_diagrams(shapes[m][n].elements.direct, C, true, cap);
      for (std::size_t k = 0; k < out.cells[m][n].size(); ++k) {
        index[m][n][key_of(out.cells[m][n][k])] = b.add_cell(m, n, cell_name(out.cells[m][n][k], k));
      }
    }
  }
  auto lookup = [&](int m, int n, const Functor& X) {
    auto it = index[m][n].find(key_of(X));
    if (it == index[m][n].end()) throw Error(ErrorKind::UnknownObject, "operator image is not a frame: " + diagram_name(X));
    return it->second;
  };
  // Precomposition along theta x psi : [m2] x [n2] -> [m] x [n].
  auto induced = [&](int m2, int n2, int m, int n, const std::vector<int>& theta, const std::vector<int>& psi) {
    const Functor base = grid_map(theta, psi, n, grids[m2][n2].category, grids[m][n].category);
    return d_of_thin_functor(base, shapes[m2][n2], shapes[m][n]);
  };
  for (int m = 0; m <= m_max; ++m) {
    for (int n = 0; n <= n_max; ++n) {
      const auto& cells = out.cells[m][n];
      for (int i = 0; m > 0 && i <= m; ++i) {
        const Functor F = induced(m - 1, n, m, n, coface(m, i), identity_map(n));
        for (std::size_t x = 0; x < cells.size(); ++x) b.set_hface(m, n, i, x, lookup(m - 1, n, precompose(cells[x], F)));
      }
      for (int j = 0; m < m_max && j <= m; ++j) {
        const Functor F = induced(m + 1, n, m, n, codegeneracy(m, j), identity_map(n));
        for (std::size_t x = 0; x < cells.size(); ++x) b.set_hdegeneracy(m, n, j, x, lookup(m + 1, n, precompose(cells[x], F)));
      }
      for (int i = 0; n > 0 && i <= n; ++i) {
        const Functor F = induced(m, n - 1, m, n, identity_map(m), coface(n, i));
        for (std::size_t x = 0; x < cells.size(); ++x) b.set_vface(m, n, i, x, lookup(m, n - 1, precompose(cells[x], F)));
      }
      for (int j = 0; n < n_max && j <= n; ++j) {
        const Functor F = induced(m, n + 1, m, n, identity_map(m), codegeneracy(n, j));
        for (std::size_t x = 0; x < cells.size(); ++x) b.set_vdegeneracy(m, n, j, x, lookup(m, n + 1, precompose(cells[x], F)));
      }
    }
  }
  out.object = b.build();
  return out;
}

SimplicialMap bold_row_zero(const BoldFrames& B, const TruncatedFramesComplex& N) {
  if (B.deg_bound != N.deg_bound || B.object->bound_m() != N.dim_bound) {
    throw Error(ErrorKind::BoundMismatch, "bold frames and frames truncated differently");
  }
  const auto shapes = simplex_shapes(N.dim_bound, N.deg_bound);
  SimplicialMap out{row(*B.object, 0), N.complex, {}};
  for (int m = 0; m <= N.dim_bound; ++m) {
    const auto G = grid_shape(m, 0);
    const DCategory Dg = d_of_category(G, N.deg_bound);
    const Functor iso = d_of_thin_functor(functor_from_object_map(shapes[m].p.target, G.category, identity_map(m)),
                                          shapes[m], Dg);
    std::map<Key, int> index;
    for (std::size_t k = 0; k < N.cells[m].size(); ++k) index[key_of(N.cells[m][k])] = static_cast<int>(k);
    std::vector<int> level;
    for (const auto& X : B.cells[m][0]) {
      auto it = index.find(key_of(precompose(X, iso)));
      level.push_back(it == index.end() ? kNone : it->second);
    }
    out.levels.push_back(std::move(level));
  }
  return out;
}

ClassificationDiagram classification_diagram(const MarkedCategory& C, int m_max, int n_max, std::size_t cap) {
  if (auto v = two_out_of_six_violation(C.we)) throw Error(ErrorKind::PreconditionViolated, "marking not 2-out-of-6 closed: " + *v);
  ClassificationDiagram out;
  out.source = std::to_string(C.category->num_objects()) + " objects, " + std::to_string(C.we.count()) + " marked";
  std::vector<std::vector<MarkedCategory>> grids(m_max + 1);
  std::vector<std::vector<std::map<Key, int>>> index(m_max + 1);
  BisimplicialSetBuilder b(m_max, n_max);
  b.set_provenance("N(" + out.source + ") dims<=" + std::to_string(m_max) + "," + std::to_string(n_max));
  out.cells.assign(m_max + 1, std::vector<std::vector<Functor>>(n_max + 1));
  for (int m = 0; m <= m_max; ++m) {
    index[m].resize(n_max + 1);
    for (int n = 0; n <= n_max; ++n) {
      grids[m].push_back(grid_shape(m, n));
      const auto& G = grids[m][n];
      FunctorSearchOptions opts;
      opts.morphism_filter = [&](Mor f, Mor image) { return !G.we.contains(f) || C.we.contains(image); };
      out.cells[m][n] = all_functors(G.category, C.category, opts, cap);
      for (std::size_t k = 0; k < out.cells[m][n].size(); ++k) {
        index[m][n][key_of(out.cells[m][n][k])] = b.add_cell(m, n, cell_name(out.cells[m][n][k], k));
      }
    }
  }
  auto lookup = [&](int m, int n, const Functor& X) {
    auto it = index[m][n].find(key_of(X));
    if (it == index[m][n].end()) throw Error(ErrorKind::UnknownObject, "operator image is not homotopical: " + diagram_name(X));
    return it->second;
  };
  auto induced = [&](int m2, int n2, int m, int n, const std::vector<int>& theta, const std::vector<int>& psi) {
    return grid_map(theta, psi, n, grids[m2][n2].category, grids[m][n].category);
  };
  for (int m = 0; m <= m_max; ++m) {
    for (int n = 0; n <= n_max; ++n) {
      const auto& cells = out.cells[m][n];
      for (int i = 0; m > 0 && i <= m; ++i) {
        const Functor F = induced(m - 1, n, m, n, coface(m, i), identity_map(n));
        for (std::size_t x = 0; x < cells.size(); ++x) b.set_hface(m, n, i, x, lookup(m - 1, n, precompose(cells[x], F)));
      }
      for (int j = 0; m < m_max && j <= m; ++j) {
        const Functor F = induced(m + 1, n, m, n, codegeneracy(m, j), identity_map(n));
        for (std::size_t x = 0; x < cells.size(); ++x) b.set_hdegeneracy(m, n, j, x, lookup(m + 1, n, precompose(cells[x], F)));
      }
      for (int i = 0; n > 0 && i <= n; ++i) {
        const Functor F = induced(m, n - 1, m, n, identity_map(m), coface(n, i));
        for (std::size_t x = 0; x < cells.size(); ++x) b.set_vface(m, n, i, x, lookup(m, n - 1, precompose(cells[x], F)));
      }
      for (int j = 0; n < n_max && j <= n; ++j) {
        const Functor F = induced(m, n + 1, m, n, identity_map(m), codegeneracy(n, j));
        for (std::size_t x = 0; x < cells.size(); ++x) b.set_vdegeneracy(m, n, j, x, lookup(m, n + 1, precompose(cells[x], F)));
      }
    }
  }
  out.object = b.build();
  return out;
}

TruncatedFramesComplex mnf(const ModelPresentation& M, int m_max, int s_bound, int t_bound, std::size_t cap) {
  if (m_max < 0 || s_bound < 0 || t_bound < 0) throw Error(ErrorKind::BadIndex, "bounds must be non-negative");
  std::vector<DbarCategory> shapes;
  for (int m = 0; m <= m_max; ++m) shapes.push_back(dbar_simplex(m, s_bound, t_bound));
  TruncatedFramesComplex out;
  out.source = M.base.provenance;
  out.dim_bound = m_max;
  out.deg_bound = s_bound;
  out.t_bound = t_bound;
  Levels lv;
  SimplicialSetBuilder b(m_max);
  b.set_provenance("Mnf(" + M.base.provenance + ") dim<=" + std::to_string(m_max) + " s<=" + std::to_string(s_bound) +
                   " t<=" + std::to_string(t_bound));
  for (int m = 0; m <= m_max; ++m) {
    const auto& D = shapes[m];
    const ReedyShape R(D.reedy);
    std::vector<Diagram> cells;
    for (auto& X : homotopical_diagrams(MarkedDirectCategory{D.category, D.we, D.reedy.degree}, M.base, false, cap)) {
      if (is_reedy_cofibrant(X, R, M.base.cof).holds() && is_reedy_fibrant(X, R, M.fib).holds()) cells.push_back(std::move(X));
    }
    out.cells.push_back(std::move(cells));
    lv.index.emplace_back();
    for (std::size_t k = 0; k < out.cells[m].size(); ++k) {
      lv.index[m][key_of(out.cells[m][k])] = b.add_simplex(m, cell_name(out.cells[m][k], k));
    }
  }
  for (int m = 0; m <= m_max; ++m) {
    for (int i = 0; m > 0 && i <= m; ++i) {
      const Functor F = dbar_of_monotone(coface(m, i), shapes[m - 1], shapes[m]);
      for (std::size_t x = 0; x < out.cells[m].size(); ++x) {
        b.set_face(m, i, static_cast<int>(x), lv.find(m - 1, precompose(out.cells[m][x], F), "face"));
      }
    }
    for (int j = 0; m < m_max && j <= m; ++j) {
      const Functor F = dbar_of_monotone(codegeneracy(m, j), shapes[m + 1], shapes[m]);
      for (std::size_t x = 0; x < out.cells[m].size(); ++x) {
        b.set_degeneracy(m, j, static_cast<int>(x), lv.find(m + 1, precompose(out.cells[m][x], F), "degeneracy"));
      }
    }
  }
  out.complex = b.build();
  return out;
}

FramesComparison istar_comparison(const TruncatedFramesComplex& mnf_complex, const TruncatedFramesComplex& nf) {
  if (mnf_complex.dim_bound != nf.dim_bound || mnf_complex.deg_bound != nf.deg_bound) {
    throw Error(ErrorKind::BoundMismatch, "i* needs matching dimension bounds and deg bound = s bound");
  }
  if (mnf_complex.t_bound < 1) throw Error(ErrorKind::BoundMismatch, "i* needs t bound >= 1");
  FramesComparison out{SimplicialMap{mnf_complex.complex, nf.complex, {}}, Holds()};
  for (int m = 0; m <= nf.dim_bound; ++m) {
    const auto sys = iqs_system(minimal_marking(Poset::chain(m).to_category()), mnf_complex.deg_bound, mnf_complex.t_bound);
    std::map<Key, int> index;
    for (std::size_t k = 0; k < nf.cells[m].size(); ++k) index[key_of(nf.cells[m][k])] = static_cast<int>(k);
    std::vector<int> level;
    for (const auto& X : mnf_complex.cells[m]) {
      auto it = index.find(key_of(precompose(X, sys.i)));
      if (it == index.end()) {
        if (out.verdict.holds()) out.verdict = Fails("restriction of " + diagram_name(X) + " is not a frame");
        level.push_back(kNone);
      } else {
        level.push_back(it->second);
      }
    }
    out.map.levels.push_back(std::move(level));
  }
  if (out.verdict.holds()) {
    if (auto v = simplicial_map_violation(out.map)) out.verdict = Fails("not simplicial: " + *v);
  }
  return out;
}

Functor simplex_functor(const DCategory& Dm, const ElementCategory& DK, int m, int x) {
  const auto& E = Dm.elements;
  const auto& K = *DK.simplices;
  Functor out{E.category(), DK.category(), {}, {}};
  for (std::size_t o = 0; o < E.category()->num_objects(); ++o) {
    const int k = E.direct.degree[o];
    const int y = K.apply(m, x, d_values(E, static_cast<Obj>(o)));
    out.on_objects.push_back(DK.object_of(k, y));
  }
  for (std::size_t u = 0; u < E.category()->num_morphisms(); ++u) {
    out.on_morphisms.push_back(DK.morphism(E.op[u], out.on_objects[E.category()->target(static_cast<Mor>(u))]));
  }
  return out;
}

ElementsBijection elements_bijection_check(const SSetPtr& K, const CofibrationPresentation& C, int deg_bound, std::size_t cap) {
  if (deg_bound > K->bound()) throw Error(ErrorKind::BoundMismatch, "degree bound above the bound of K");
  ElementsBijection out;
  const auto N = nf_truncated(C, K->bound(), deg_bound, cap);
  const auto maps = all_maps(K, N.complex, {}, cap);
  out.simplicial_maps = maps.size();
  std::map<std::vector<std::vector<int>>, std::size_t> map_index;
  for (std::size_t k = 0; k < maps.size(); ++k) map_index[maps[k].levels] = k;

  const ElementCategory DK = d_of_sset(K, deg_bound);
  const auto diagrams = homotopical_diagrams(DK.direct, C, true, cap);
  out.diagrams = diagrams.size();
  const auto shapes = simplex_shapes(K->bound(), deg_bound);
  std::vector<std::vector<Functor>> yoneda(K->bound() + 1);
  std::vector<std::map<Key, int>> cell_index(K->bound() + 1);
  for (int m = 0; m <= K->bound(); ++m) {
    for (int x = 0; x < static_cast<int>(K->size(m)); ++x) yoneda[m].push_back(simplex_functor(shapes[m], DK, m, x));
    for (std::size_t k = 0; k < N.cells[m].size(); ++k) cell_index[m][key_of(N.cells[m][k])] = static_cast<int>(k);
  }
  std::vector<char> hit(maps.size());
  for (std::size_t d = 0; d < diagrams.size(); ++d) {
    std::vector<std::vector<int>> levels;
    for (int m = 0; m <= K->bound(); ++m) {
      std::vector<int> lv;
      for (const auto& y : yoneda[m]) {
        auto it = cell_index[m].find(key_of(precompose(diagrams[d], y)));
        if (it == cell_index[m].end()) {
          out.verdict = Fails("diagram " + diagram_name(diagrams[d]) + " restricts to a non-frame at level " + std::to_string(m));
          return out;
        }
        lv.push_back(it->second);
      }
      levels.push_back(std::move(lv));
    }
    auto it = map_index.find(levels);
    if (it == map_index.end()) {
      out.verdict = Fails("diagram " + diagram_name(diagrams[d]) + " does not give a simplicial map");
      return out;
    }
    if (hit[it->second]) {
      out.verdict = Fails("two diagrams give simplicial map " + std::to_string(it->second));
      return out;
    }
    hit[it->second] = 1;
    out.assignment.push_back(it->second);
  }
  if (out.diagrams != out.simplicial_maps) {
    out.verdict = Fails(std::to_string(out.simplicial_maps) + " simplicial maps but " + std::to_string(out.diagrams) +
                        " diagrams");
  } else {
    out.verdict = Holds(std::to_string(out.diagrams) + " on both sides");
  }
  return out;
}

}  // namespace catkit
