//
// Project discokit
// SPDX-License-Identifier: Apache-2.0
//

#include <algorithm>
#include <string>
#include <tuple>
#include <vector>

#include "discokit/smiles.hpp"
#include "smiles_internal.hpp"

namespace disco {

namespace {

// Canonical ranking by iterative partition refinement with full
// backtracking over symmetric cells: isomorphic inputs reach the same
// minimal string because refinement and cell choice depend only on the
// graph, never on atom numbering.
class Canonicalizer {
public:
  explicit Canonicalizer(const Molecule &mol) : mol_(mol) {}

  std::string run() {
    std::vector<int> ranks = initial_ranks();
    refine(ranks);
    std::string best;
    descend(ranks, best);
    return best;
  }

private:
  static constexpr int kEmitBudget = 4096;

  std::vector<int> initial_ranks() const {
    const int n = mol_.atom_count();
    using Key = std::tuple<int, bool, int, int, int, int>;
    std::vector<Key> keys(n);
    for (int i = 0; i < n; ++i) {
      const Atom &a = mol_.atoms()[i];
      keys[i] = {static_cast<int>(a.elem),
                 a.aromatic,
                 a.formal_charge,
                 a.explicit_h.value_or(-1),
                 a.isotope.value_or(0),
                 mol_.degree(i)};
    }
    return ranks_from_keys(keys);
  }

  template <typename Key>
  std::vector<int> ranks_from_keys(const std::vector<Key> &keys) const {
    std::vector<Key> sorted(keys);
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    std::vector<int> ranks(keys.size());
    for (std::size_t i = 0; i < keys.size(); ++i) {
      ranks[i] = static_cast<int>(
          std::lower_bound(sorted.begin(), sorted.end(), keys[i]) -
          sorted.begin());
    }
    return ranks;
  }

  void refine(std::vector<int> &ranks) const {
    const int n = mol_.atom_count();
    while (true) {
      using Key = std::pair<int, std::vector<std::pair<int, int>>>;
      std::vector<Key> keys(n);
      for (int i = 0; i < n; ++i) {
        std::vector<std::pair<int, int>> nbrs;
        for (int bi : mol_.incident_bonds(i)) {
          const Bond &b = mol_.bonds()[bi];
          nbrs.push_back({static_cast<int>(b.order), ranks[b.other(i)]});
        }
        std::sort(nbrs.begin(), nbrs.end());
        keys[i] = {ranks[i], std::move(nbrs)};
      }
      std::vector<int> next = ranks_from_keys(keys);
      if (next == ranks) {
        return;
      }
      ranks = std::move(next);
    }
  }

  bool discrete(const std::vector<int> &ranks) const {
    std::vector<int> sorted(ranks);
    std::sort(sorted.begin(), sorted.end());
    return std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
  }

  void descend(std::vector<int> ranks, std::string &best) {
    if (discrete(ranks)) {
      ++emitted_;
      std::string candidate = emit_smiles_with_ranks(mol_, ranks);
      if (best.empty() || candidate < best) {
        best = candidate;
      }
      return;
    }
    // Smallest ambiguous cell by rank value.
    int cell_rank = -1;
    for (int r : ranks) {
      int count = static_cast<int>(std::count(ranks.begin(), ranks.end(), r));
      if (count > 1 && (cell_rank < 0 || r < cell_rank)) {
        cell_rank = r;
      }
    }
    for (std::size_t i = 0; i < ranks.size(); ++i) {
      if (ranks[i] != cell_rank) {
        continue;
      }
      // Individualize atom i: it keeps cell_rank, everything at or above
      // shifts up by one.
      std::vector<int> next(ranks);
      for (std::size_t j = 0; j < next.size(); ++j) {
        if (next[j] > cell_rank || (next[j] == cell_rank && j != i)) {
          ++next[j];
        }
      }
      refine(next);
      descend(std::move(next), best);
      if (emitted_ >= kEmitBudget) {
        return;  // pathological symmetry; first candidates only
      }
    }
  }

  const Molecule &mol_;
  int emitted_ = 0;
};

}  // namespace

std::string canonical_smiles(const Molecule &mol) {
  return Canonicalizer(mol).run();
}

}  // namespace disco
