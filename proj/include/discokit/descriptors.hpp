//
// Project discokit
// SPDX-License-Identifier: Apache-2.0
//

#pragma once

#include <string>
#include <vector>

#include "discokit/molecule.hpp"

namespace disco {

// Sum of heavy-atom weights plus implicit and explicit hydrogens, daltons.
double molecular_weight(const Molecule &mol);

// Acyclic single bonds with both endpoints of degree >= 2, excluding
// amide C-N bonds (carbon double-bonded to an oxygen).
int count_rotatable_bonds(const Molecule &mol);

// Aromatic heavy atoms / heavy atoms; 0 for hydrogen-only graphs.
double aromatic_proportion(const Molecule &mol);

// Additive atom-contribution logP table. Rows match on element,
// aromaticity and simple neighborhood predicates; first match wins.
// Hydrogen contributions come from the elem=H row.
class ClogpTable {
public:
  struct Row {
    std::string type_id;
    Elem elem;
    int aromatic = -1;     // -1 wildcard
    int has_double = -1;   // atom participates in a double bond
    int double_to_o = -1;  // atom has a double bond to oxygen
    int min_h = -1;        // total hydrogens >= min_h
    double contribution = 0.0;
  };

  // The table shipped with the toolkit (version v1); identical content is
  // written to data/clogp_v1.tsv.
  static const ClogpTable &builtin();
  static ClogpTable parse(const std::string &tsv_text);
  static ClogpTable load(const std::string &path);

  // Throws ChemError("UNTYPED_ATOM") when no row matches.
  double atom_contribution(const Molecule &mol, int atom) const;
  double hydrogen_contribution() const;

  const std::vector<Row> &rows() const { return rows_; }

private:
  std::vector<Row> rows_;
};

double crippen_logp(const Molecule &mol);
double crippen_logp(const Molecule &mol, const ClogpTable &table);

}  // namespace disco
