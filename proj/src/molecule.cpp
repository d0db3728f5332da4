//
// Project discokit
// SPDX-License-Identifier: Apache-2.0
//

#include "discokit/molecule.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <functional>
#include <set>

#include "discokit/smiles.hpp"

namespace disco {

namespace {

// Valence contribution of one bond at an atom. Aromatic bonds count 1.5
// except at O and S, whose aromatic participation is sigma-only (furan,
// thiophene): counting 1.5 there would assign bogus hydrogens or reject
// the molecule outright.
double valence_contrib(BondOrder order, Elem e) {
  if (order == BondOrder::Aromatic && (e == Elem::O || e == Elem::S)) {
    return 1.0;
  }
  return bond_order_value(order);
}

[[noreturn]] void valence_violation(int atom_index) {
  throw SmilesError(SmilesError::Kind::ValenceViolation, atom_index,
                    "valence violation at atom " + std::to_string(atom_index));
}

// Marks non-bridge bonds via DFS low-points.
void flag_ring_bonds(std::vector<Bond> &bonds,
                     const std::vector<std::vector<int>> &adjacency) {
  const int n = static_cast<int>(adjacency.size());
  std::vector<int> disc(n, -1);
  std::vector<int> low(n, 0);
  int timer = 0;

  std::function<void(int, int)> dfs = [&](int v, int parent_bond) {
    disc[v] = low[v] = timer++;
    for (int bi : adjacency[v]) {
      if (bi == parent_bond) {
        continue;
      }
      int u = bonds[bi].other(v);
      if (disc[u] < 0) {
        dfs(u, bi);
        low[v] = std::min(low[v], low[u]);
        if (low[u] <= disc[v]) {
          bonds[bi].in_ring = true;
        }
      } else {
        low[v] = std::min(low[v], disc[u]);
        bonds[bi].in_ring = true;  // back edge
      }
    }
  };

  for (int v = 0; v < n; ++v) {
    if (disc[v] < 0) {
      dfs(v, -1);
    }
  }
}

}  // namespace

std::vector<int> adjusted_valences(Elem e, int charge) {
  std::vector<int> out;
  for (int v : element(e).default_valences) {
    int adj;
    if (e == Elem::C) {
      adj = v - std::abs(charge);
    } else if (e == Elem::B) {
      adj = v - charge;  // borate anion gains a bond
    } else {
      adj = v + charge;
    }
    if (adj >= 0) {
      out.push_back(adj);
    }
  }
  return out;
}

int Molecule::bond_between(int a, int b) const {
  for (int bi : adjacency_[a]) {
    if (bonds_[bi].other(a) == b) {
      return bi;
    }
  }
  return -1;
}

int Molecule::valence_sum(int atom) const {
  double sum = 0.0;
  for (int bi : adjacency_[atom]) {
    sum += valence_contrib(bonds_[bi].order, atoms_[atom].elem);
  }
  return static_cast<int>(std::floor(sum + 1e-9));
}

Molecule Molecule::from_graph(std::vector<Atom> atoms,
                              std::vector<Bond> bonds) {
  Molecule mol;
  const int n = static_cast<int>(atoms.size());
  if (n == 0) {
    throw SmilesError(SmilesError::Kind::EmptyInput, 0, "no atoms");
  }

  int heavy = 0;
  for (const Atom &a : atoms) {
    if (a.elem != Elem::H) {
      ++heavy;
    }
  }
  if (heavy > kMaxHeavyAtoms) {
    throw SmilesError(SmilesError::Kind::TooManyAtoms, heavy,
                      "more than " + std::to_string(kMaxHeavyAtoms) +
                          " heavy atoms");
  }

  for (int i = 0; i < n; ++i) {
    const Atom &a = atoms[i];
    if (a.aromatic && !element(a.elem).aromatic_capable) {
      valence_violation(i);
    }
    // Charge and isotope only arise from bracket expressions, which always
    // fix the hydrogen count.
    if ((a.formal_charge != 0 || a.isotope.has_value()) &&
        !a.explicit_h.has_value()) {
      valence_violation(i);
    }
  }

  std::vector<std::vector<int>> adjacency(n);
  std::set<std::pair<int, int>> seen;
  for (std::size_t bi = 0; bi < bonds.size(); ++bi) {
    Bond &b = bonds[bi];
    if (b.a == b.b || b.a < 0 || b.b < 0 || b.a >= n || b.b >= n) {
      throw SmilesError(SmilesError::Kind::Syntax, static_cast<int>(bi),
                        "bad bond endpoints");
    }
    auto key = std::minmax(b.a, b.b);
    if (!seen.insert(key).second) {
      throw SmilesError(SmilesError::Kind::Syntax, static_cast<int>(bi),
                        "duplicate bond");
    }
    if (b.order == BondOrder::Aromatic &&
        (!atoms[b.a].aromatic || !atoms[b.b].aromatic)) {
      valence_violation(b.a);
    }
    b.in_ring = false;
    adjacency[b.a].push_back(static_cast<int>(bi));
    adjacency[b.b].push_back(static_cast<int>(bi));
  }

  // Connectivity.
  std::vector<bool> visited(n, false);
  std::vector<int> stack{0};
  visited[0] = true;
  int reached = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int bi : adjacency[v]) {
      int u = bonds[bi].other(v);
      if (!visited[u]) {
        visited[u] = true;
        ++reached;
        stack.push_back(u);
      }
    }
  }
  if (reached != n) {
    throw SmilesError(SmilesError::Kind::MultipleFragments, 0,
                      "disconnected graph");
  }

  // Valence check and implicit hydrogens.
  for (int i = 0; i < n; ++i) {
    Atom &a = atoms[i];
    double pi_sum = 0.0;
    double sigma_sum = 0.0;
    for (int bi : adjacency[i]) {
      pi_sum += valence_contrib(bonds[bi].order, a.elem);
      sigma_sum += bonds[bi].order == BondOrder::Aromatic
                       ? 1.0
                       : bond_order_value(bonds[bi].order);
    }
    int floored = static_cast<int>(std::floor(pi_sum + 1e-9));
    const std::vector<int> allowed = adjusted_valences(a.elem, a.formal_charge);
    if (a.explicit_h.has_value()) {
      if (*a.explicit_h < 0) {
        valence_violation(i);
      }
      int total = floored + *a.explicit_h;
      int total_sigma =
          static_cast<int>(std::floor(sigma_sum + 1e-9)) + *a.explicit_h;
      // Aromatic bracket atoms are accepted under either electron-count
      // reading: pyrrole [nH] is sigma-only, pyridinium [nH+] holds a pi
      // bond.
      bool ok = std::find(allowed.begin(), allowed.end(), total) !=
                    allowed.end() ||
                std::find(allowed.begin(), allowed.end(), total_sigma) !=
                    allowed.end();
      if (!ok) {
        valence_violation(i);
      }
      a.implicit_h = 0;
    } else {
      if (a.formal_charge != 0) {
        valence_violation(i);
      }
      int chosen = -1;
      for (int v : allowed) {
        if (v >= floored) {
          chosen = v;
          break;
        }
      }
      if (chosen < 0) {
        valence_violation(i);
      }
      a.implicit_h = chosen - floored;
    }
  }

  flag_ring_bonds(bonds, adjacency);

  mol.atoms_ = std::move(atoms);
  mol.bonds_ = std::move(bonds);
  mol.adjacency_ = std::move(adjacency);
  return mol;
}

}  // namespace disco
