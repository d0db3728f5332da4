//
// Project discokit
// SPDX-License-Identifier: Apache-2.0
//

#include "discokit/fingerprint.hpp"

#include <algorithm>
#include <bit>
#include <queue>
#include <string>

namespace disco {

namespace {

std::uint64_t fnv1a(const std::string &s) {
  std::uint64_t hash = 14695981039346656037ULL;
  for (unsigned char c : s) {
    hash ^= c;
    hash *= 1099511628211ULL;
  }
  return hash;
}

char bond_code(BondOrder o) {
  switch (o) {
  case BondOrder::Single:
    return '-';
  case BondOrder::Double:
    return '=';
  case BondOrder::Triple:
    return '#';
  case BondOrder::Aromatic:
    return ':';
  }
  return '?';
}

std::string atom_code(const Atom &a) {
  std::string code(element(a.elem).symbol);
  if (a.aromatic) {
    code[0] = static_cast<char>(code[0] - 'A' + 'a');
  }
  if (a.formal_charge != 0) {
    code += a.formal_charge > 0 ? '+' : '-';
    code += std::to_string(std::abs(a.formal_charge));
  }
  return code;
}

// Depth-bounded tree unfolding with sorted branches; no immediate
// backtracking. A pure function of the rooted environment, so the result
// is invariant under atom renumbering.
std::string environment_string(const Molecule &mol, int atom, int depth,
                               int from) {
  std::string code = atom_code(mol.atoms()[atom]);
  if (depth == 0) {
    return code;
  }
  std::vector<std::string> branches;
  for (int bi : mol.incident_bonds(atom)) {
    const Bond &b = mol.bonds()[bi];
    const int u = b.other(atom);
    if (u == from) {
      continue;
    }
    branches.push_back(bond_code(b.order) +
                       environment_string(mol, u, depth - 1, atom));
  }
  if (branches.empty()) {
    return code;
  }
  std::sort(branches.begin(), branches.end());
  code += "(";
  for (const std::string &branch : branches) {
    code += branch;
  }
  code += ")";
  return code;
}

// Bonds inside the radius-r ball around `atom` (sorted indices); used to
// detect when growing the radius adds nothing new.
std::vector<int> ball_bonds(const Molecule &mol,
                            const std::vector<int> &dist, int radius) {
  std::vector<int> bonds;
  for (int bi = 0; bi < mol.bond_count(); ++bi) {
    const Bond &b = mol.bonds()[bi];
    if (std::min(dist[b.a], dist[b.b]) < radius) {
      bonds.push_back(bi);
    }
  }
  return bonds;
}

}  // namespace

Fingerprint Fingerprint::zeros(int width, int radius) {
  Fingerprint fp;
  fp.width = width;
  fp.radius = radius;
  fp.words.assign(static_cast<std::size_t>(width + 63) / 64, 0);
  return fp;
}

void Fingerprint::set_bit(int b) {
  words[static_cast<std::size_t>(b) / 64] |= 1ULL << (b % 64);
}

bool Fingerprint::bit(int i) const {
  return (words[static_cast<std::size_t>(i) / 64] >> (i % 64)) & 1ULL;
}

int Fingerprint::popcount() const {
  int total = 0;
  for (std::uint64_t w : words) {
    total += std::popcount(w);
  }
  return total;
}

Fingerprint morgan_fingerprint(const Molecule &mol, int radius, int width) {
  if (radius < 0) {
    throw ChemError("PARAM", "fingerprint radius must be >= 0");
  }
  if (width <= 0 || (width & (width - 1)) != 0) {
    throw ChemError("PARAM", "fingerprint width must be a power of two");
  }
  Fingerprint fp = Fingerprint::zeros(width, radius);

  std::vector<int> dist(mol.atom_count());
  for (int atom = 0; atom < mol.atom_count(); ++atom) {
    // BFS distances up to the radius.
    std::fill(dist.begin(), dist.end(), radius + 1);
    std::queue<int> queue;
    dist[atom] = 0;
    queue.push(atom);
    while (!queue.empty()) {
      int v = queue.front();
      queue.pop();
      if (dist[v] >= radius) {
        continue;
      }
      for (int bi : mol.incident_bonds(v)) {
        int u = mol.bonds()[bi].other(v);
        if (dist[u] > dist[v] + 1) {
          dist[u] = dist[v] + 1;
          queue.push(u);
        }
      }
    }

    std::vector<int> prev_ball;
    for (int r = 0; r <= radius; ++r) {
      std::vector<int> ball = ball_bonds(mol, dist, r);
      if (r > 0 && ball == prev_ball) {
        break;  // environment stopped growing
      }
      fp.set_bit(static_cast<int>(
          fnv1a(environment_string(mol, atom, r, -1)) &
          static_cast<std::uint64_t>(width - 1)));
      prev_ball = std::move(ball);
    }
  }
  return fp;
}

double tanimoto(const Fingerprint &a, const Fingerprint &b) {
  if (a.width != b.width || a.radius != b.radius) {
    throw ChemError("INCOMPARABLE_FINGERPRINTS",
                    "fingerprint width/radius mismatch");
  }
  int inter = 0;
  int uni = 0;
  for (std::size_t i = 0; i < a.words.size(); ++i) {
    inter += std::popcount(a.words[i] & b.words[i]);
    uni += std::popcount(a.words[i] | b.words[i]);
  }
  if (uni == 0) {
    return 1.0;
  }
  return static_cast<double>(inter) / uni;
}

}  // namespace disco
