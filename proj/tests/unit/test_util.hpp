#pragma once

#include <vector>

#include "catkit/direct.hpp"

namespace testutil {

// Direct categories used by the quantified properties.
inline std::vector<catkit::MarkedDirectCategory> direct_fixtures() {
  using namespace catkit;
  std::vector<MarkedDirectCategory> out;
  out.push_back(sd_poset(Poset::chain(1)).direct);
  out.push_back(sd_poset(Poset::chain(2)).direct);
  out.push_back(sd_poset(Poset::divisors(6)).direct);
  out.push_back(d_of_category(minimal_marking(Poset::chain(1).to_category()), 2).elements.direct);
  out.push_back(d_of_category(minimal_marking(Poset::chain(2).to_category()), 2).elements.direct);
  out.push_back(d_of_sset(standard_cells(CellKind::Boundary, 2, 2), 2).direct);
  out.push_back(d_hat_boundary(2, 2));
  return out;
}

}  // namespace testutil
