#include <map>

#include "catkit/ex.hpp"
#include "catkit/lifting.hpp"
#include "catkit/monotone.hpp"

namespace catkit {

ExResult ex_functor(const SSetPtr& K, int n_max, int deg_bound, std::size_t cap) {
  if (n_max > K->bound()) {
    throw Error(ErrorKind::BoundMismatch, "Ex level " + std::to_string(n_max) + " above the bound of K");
  }
  if (deg_bound < 0) throw Error(ErrorKind::BadIndex, "negative degree bound");
  ExResult R;
  R.deg_bound = deg_bound;
  const int d = K->bound();
  for (int n = 0; n <= n_max; ++n) {
    R.shapes.push_back(d_of_category(minimal_marking(Poset::chain(n).to_category()), deg_bound));
    R.nerves.push_back(nerve(R.shapes.back().elements.category(), d));
    R.elements.push_back(all_maps(R.nerves.back(), K, {}, cap));
  }
  std::vector<std::map<std::vector<std::vector<int>>, int>> index(n_max + 1);
  SimplicialSetBuilder b(n_max);
  b.set_provenance("Ex(" + K->provenance() + ") deg<=" + std::to_string(deg_bound));
  for (int n = 0; n <= n_max; ++n) {
    for (std::size_t e = 0; e < R.elements[n].size(); ++e) {
      index[n][R.elements[n][e].levels] = b.add_simplex(n, "e" + std::to_string(n) + "." + std::to_string(e));
    }
  }
  auto act = [&](int n, int k, const std::vector<int>& theta) {
    // theta : [k] -> [n] sends a map on N D[n] to one on N D[k].
    auto Nt = nerve_of_functor(d_of_monotone(theta, R.shapes[k], R.shapes[n]), R.nerves[k], R.nerves[n]);
    std::vector<int> out;
    for (const auto& g : R.elements[n]) out.push_back(index[k].at(compose(g, Nt).levels));
    return out;
  };
  for (int n = 1; n <= n_max; ++n) {
    for (int i = 0; i <= n; ++i) {
      auto lv = act(n, n - 1, coface(n, i));
      for (std::size_t e = 0; e < lv.size(); ++e) b.set_face(n, i, static_cast<int>(e), lv[e]);
    }
  }
  for (int n = 0; n < n_max; ++n) {
    for (int j = 0; j <= n; ++j) {
      auto lv = act(n, n + 1, codegeneracy(n, j));
      for (std::size_t e = 0; e < lv.size(); ++e) b.set_degeneracy(n, j, static_cast<int>(e), lv[e]);
    }
  }
  R.ex = b.build();

  auto Kt = truncate(K, n_max);
  R.unit = SimplicialMap{Kt, R.ex, {}};
  for (int n = 0; n <= n_max; ++n) {
    const CatPtr chain = Poset::chain(n).to_category();
    auto Nn = nerve(chain, d);
    auto simplex = standard_cells(CellKind::Simplex, n, d);
    auto through = compose(nerve_to_simplex(Nn, simplex), nerve_of_functor(R.shapes[n].p, R.nerves[n], Nn));
    std::vector<int> lv;
    for (int x = 0; x < static_cast<int>(K->size(n)); ++x) {
      lv.push_back(index[n].at(compose(yoneda_map(simplex, K, x), through).levels));
    }
    R.unit.levels.push_back(std::move(lv));
  }
  return R;
}

}  // namespace catkit
