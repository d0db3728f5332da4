//
// Project discokit
// SPDX-License-Identifier: Apache-2.0
//

#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace disco {

// One row of the element table. The supported set is exactly
// {H, B, C, N, O, F, P, S, Cl, Br, I}; anything else is rejected by the
// SMILES parser.
struct Element {
  std::string_view symbol;
  double atomic_weight;  // daltons
  // Allowed total valences in ascending order; implicit hydrogens fill up
  // to the smallest entry that covers the bond-order sum.
  std::vector<int> default_valences;
  bool organic_subset;
  bool aromatic_capable;  // lowercase form permitted in SMILES
};

// Stable index into the element table.
enum class Elem : std::uint8_t { H, B, C, N, O, F, P, S, Cl, Br, I };

const Element &element(Elem e);

// Longest-match lookup of an element symbol at the front of `text`.
// Returns true and sets `out`/`consumed` on success. `aromatic` requests
// the lowercase single-letter forms (b, c, n, o, p, s).
bool match_element(std::string_view text, bool aromatic, Elem &out,
                   std::size_t &consumed);

// Exact symbol lookup ("C", "Cl", ...), case sensitive.
bool find_element(std::string_view symbol, Elem &out);

}  // namespace disco
