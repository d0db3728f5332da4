//
// Project discokit
// SPDX-License-Identifier: Apache-2.0
//

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "discokit/element.hpp"
#include "discokit/errors.hpp"

namespace disco {

enum class BondOrder : std::uint8_t { Single, Double, Triple, Aromatic };

// Contribution of a bond to the valence sum. Aromatic bonds count 1.5;
// the per-atom sum is floored before the valence-table lookup.
inline double bond_order_value(BondOrder o) {
  switch (o) {
  case BondOrder::Single:
    return 1.0;
  case BondOrder::Double:
    return 2.0;
  case BondOrder::Triple:
    return 3.0;
  case BondOrder::Aromatic:
    return 1.5;
  }
  return 0.0;
}

struct Atom {
  Elem elem = Elem::C;
  bool aromatic = false;
  int formal_charge = 0;
  // Set only when the atom came from a bracket expression; implicit-H
  // assignment is skipped for such atoms.
  std::optional<int> explicit_h;
  std::optional<int> isotope;  // parsed, ignored downstream
  // Hydrogens implied by the valence table (0 for bracket atoms).
  int implicit_h = 0;

  int total_h() const { return implicit_h + explicit_h.value_or(0); }
  bool from_bracket() const {
    return explicit_h.has_value() || formal_charge != 0 ||
           isotope.has_value();
  }
};

struct Bond {
  int a = 0;
  int b = 0;
  BondOrder order = BondOrder::Single;
  bool in_ring = false;

  int other(int idx) const { return idx == a ? b : a; }
};

class ChemError : public Error {
public:
  using Error::Error;
};

// Attributed connected molecular graph. Immutable after construction; all
// member functions are const and safe to call concurrently.
class Molecule {
public:
  static constexpr int kMaxHeavyAtoms = 256;

  // Validates invariants, assigns implicit hydrogens and ring flags.
  // Atoms with explicit_h set keep their hydrogen count (bracket origin);
  // all others get implicit hydrogens from the valence table. Throws
  // SmilesError (see smiles.hpp) on violations.
  static Molecule from_graph(std::vector<Atom> atoms, std::vector<Bond> bonds);

  const std::vector<Atom> &atoms() const { return atoms_; }
  const std::vector<Bond> &bonds() const { return bonds_; }
  int atom_count() const { return static_cast<int>(atoms_.size()); }
  int bond_count() const { return static_cast<int>(bonds_.size()); }

  // Indices of bonds incident to `atom`.
  const std::vector<int> &incident_bonds(int atom) const {
    return adjacency_[atom];
  }
  int degree(int atom) const {
    return static_cast<int>(adjacency_[atom].size());
  }
  // Bond between the two atoms, or -1.
  int bond_between(int a, int b) const;

  // Floored bond-order sum at `atom` (aromatic bonds count 1.5).
  int valence_sum(int atom) const;

private:
  Molecule() = default;

  std::vector<Atom> atoms_;
  std::vector<Bond> bonds_;
  std::vector<std::vector<int>> adjacency_;
};

// Allowed valences of `e` adjusted for formal charge: B and C lose
// capacity with charge, the electron-rich elements shift by +charge.
std::vector<int> adjusted_valences(Elem e, int charge);

}  // namespace disco
