//
// Project discokit
// SPDX-License-Identifier: Apache-2.0
//

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <string>
#include <vector>

#include "discokit/smiles.hpp"

namespace disco {

namespace {

std::string atom_token(const Atom &a) {
  std::string sym(element(a.elem).symbol);
  if (a.aromatic) {
    sym[0] = static_cast<char>(sym[0] - 'A' + 'a');
  }
  if (!a.explicit_h.has_value()) {
    return sym;
  }
  // Bracket-origin atoms keep their full decoration so the output
  // re-parses to the same attributes.
  std::string out = "[";
  if (a.isotope.has_value()) {
    out += std::to_string(*a.isotope);
  }
  out += sym;
  if (*a.explicit_h == 1) {
    out += "H";
  } else if (*a.explicit_h > 1) {
    out += "H" + std::to_string(*a.explicit_h);
  }
  if (a.formal_charge != 0) {
    out += a.formal_charge > 0 ? '+' : '-';
    int magnitude = std::abs(a.formal_charge);
    if (magnitude > 1) {
      out += std::to_string(magnitude);
    }
  }
  out += "]";
  return out;
}

// Bond symbol on the path into `bond`; empty when the default parse
// resolution reproduces it.
std::string bond_token(const Molecule &mol, const Bond &bond) {
  const bool both_aromatic =
      mol.atoms()[bond.a].aromatic && mol.atoms()[bond.b].aromatic;
  switch (bond.order) {
  case BondOrder::Single:
    return both_aromatic ? "-" : "";
  case BondOrder::Double:
    return "=";
  case BondOrder::Triple:
    return "#";
  case BondOrder::Aromatic:
    return both_aromatic ? "" : ":";
  }
  return "";
}

std::string closure_token(int digit) {
  if (digit < 10) {
    return std::to_string(digit);
  }
  return "%" + std::to_string(digit);
}

// Emits a SMILES string traversing the graph in rank order: the start
// atom has the lowest rank and neighbors are visited lowest-rank first.
class Emitter {
public:
  Emitter(const Molecule &mol, const std::vector<int> &ranks)
      : mol_(mol), ranks_(ranks) {}

  std::string emit() {
    const int n = mol_.atom_count();
    visited_.assign(n, false);
    tree_children_.assign(n, {});
    ring_bonds_at_.assign(n, {});

    int start = 0;
    for (int i = 1; i < n; ++i) {
      if (order_key(i) < order_key(start)) {
        start = i;
      }
    }
    build_tree(start, -1);

    std::string out;
    write_atom(start, out);
    return out;
  }

private:
  std::pair<int, int> order_key(int atom) const {
    return {ranks_[atom], atom};
  }

  void build_tree(int v, int parent_bond) {
    visited_[v] = true;
    std::vector<int> nbrs(mol_.incident_bonds(v));
    std::sort(nbrs.begin(), nbrs.end(), [&](int x, int y) {
      return order_key(mol_.bonds()[x].other(v)) <
             order_key(mol_.bonds()[y].other(v));
    });
    for (int bi : nbrs) {
      if (bi == parent_bond) {
        continue;
      }
      int u = mol_.bonds()[bi].other(v);
      if (visited_[u]) {
        if (closed_.insert(bi).second) {
          ring_bonds_at_[v].push_back(bi);
          ring_bonds_at_[u].push_back(bi);
        }
      } else {
        tree_children_[v].push_back(bi);
        build_tree(u, bi);
      }
    }
  }

  void write_atom(int v, std::string &out) {
    out += atom_token(mol_.atoms()[v]);
    for (int bi : ring_bonds_at_[v]) {
      auto it = open_digits_.find(bi);
      if (it == open_digits_.end()) {
        int digit = allocate_digit();
        open_digits_[bi] = digit;
        out += bond_token(mol_, mol_.bonds()[bi]);
        out += closure_token(digit);
      } else {
        out += closure_token(it->second);
        free_digits_.insert(it->second);
        open_digits_.erase(it);
      }
    }
    const auto &children = tree_children_[v];
    for (std::size_t i = 0; i < children.size(); ++i) {
      int bi = children[i];
      int u = mol_.bonds()[bi].other(v);
      const bool last = i + 1 == children.size();
      if (!last) {
        out += "(";
      }
      out += bond_token(mol_, mol_.bonds()[bi]);
      write_atom(u, out);
      if (!last) {
        out += ")";
      }
    }
  }

  int allocate_digit() {
    if (!free_digits_.empty()) {
      int d = *free_digits_.begin();
      free_digits_.erase(free_digits_.begin());
      return d;
    }
    return next_digit_++;
  }

  const Molecule &mol_;
  const std::vector<int> &ranks_;
  std::vector<bool> visited_;
  std::vector<std::vector<int>> tree_children_;
  std::vector<std::vector<int>> ring_bonds_at_;
  std::set<int> closed_;
  std::map<int, int> open_digits_;  // bond index -> digit
  std::set<int> free_digits_;
  int next_digit_ = 1;
};

}  // namespace

std::string emit_smiles_with_ranks(const Molecule &mol,
                                   const std::vector<int> &ranks) {
  Emitter emitter(mol, ranks);
  return emitter.emit();
}

std::string write_smiles(const Molecule &mol) {
  std::vector<int> ranks(mol.atom_count());
  std::iota(ranks.begin(), ranks.end(), 0);
  return emit_smiles_with_ranks(mol, ranks);
}

}  // namespace disco
