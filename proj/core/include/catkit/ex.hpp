#pragma once

#include "catkit/direct.hpp"

namespace catkit {

/// Ex K truncated at n_max: (Ex K)_n is the set of maps N(D[n]) -> K, with
/// D[n] truncated at `deg_bound` and its nerve at the bound of K. Operators
/// act by precomposition with the nerves of the induced functors.
struct ExResult {
  SSetPtr ex;
  /// K truncated at n_max -> Ex K, through N p : N D[n] -> N[n].
  SimplicialMap unit;
  std::vector<DCategory> shapes;   // D[n], n <= n_max
  std::vector<SSetPtr> nerves;     // N D[n]
  std::vector<std::vector<SimplicialMap>> elements;  // (Ex K)_n
  int deg_bound = 0;
};

ExResult ex_functor(const SSetPtr& K, int n_max, int deg_bound, std::size_t cap = 20'000);

}  // namespace catkit
