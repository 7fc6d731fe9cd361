#pragma once

#include "catkit/bisimplicial_set.hpp"
#include "catkit/text_format.hpp"

namespace catkit {

// Simplicial sets:
//
//   provenance:         free text, one line
//   bound:              d
//   simplices:          k: x y z ...      (names within a level)
//   faces:              k x = d0x d1x ... (names at level k-1)
//   degeneracies:       k x = s0x s1x ... (names at level k+1, k < d)
//
// Bisimplicial sets use `bounds: dm dn`, `cells: m n: ...` and the four
// tables hfaces, hdegeneracies, vfaces, vdegeneracies keyed by `m n x = ...`.

SSetPtr sset_from_document(const TextDocument& doc);
SSetPtr parse_sset(std::string_view text);
std::string format_sset(const TruncatedSimplicialSet& K);

BiSSetPtr bisset_from_document(const TextDocument& doc);
BiSSetPtr parse_bisset(std::string_view text);
std::string format_bisset(const TruncatedBisimplicialSet& W);

}  // namespace catkit
