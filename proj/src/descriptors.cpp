//
// Project discokit
// SPDX-License-Identifier: Apache-2.0
//

#include "discokit/descriptors.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace disco {

namespace {

constexpr const char *kBuiltinClogpTsv =
    "# discokit cLogP atom contributions, version v1\n"
    "# type_id\tmatch-spec\tcontribution\n"
    "C_AROM\telem=C,arom=1\t0.2940\n"
    "C_CARBONYL\telem=C,dbl2o=1\t-0.2000\n"
    "C_ALIPH\telem=C\t0.1441\n"
    "N_AROM\telem=N,arom=1\t-0.5000\n"
    "N_AMINE\telem=N\t-1.0190\n"
    "O_AROM\telem=O,arom=1\t0.0335\n"
    "O_CARBONYL\telem=O,hasdbl=1\t-0.2500\n"
    "O_HYDROXYL\telem=O,minh=1\t-1.1500\n"
    "O_ETHER\telem=O\t-0.4700\n"
    "F_HALO\telem=F\t0.4202\n"
    "CL_HALO\telem=Cl\t0.6895\n"
    "BR_HALO\telem=Br\t0.8456\n"
    "I_HALO\telem=I\t0.8857\n"
    "S_ANY\telem=S\t0.6482\n"
    "P_ANY\telem=P\t0.8612\n"
    "H_ATOM\telem=H\t0.1230\n";

bool atom_has_double(const Molecule &mol, int atom) {
  for (int bi : mol.incident_bonds(atom)) {
    if (mol.bonds()[bi].order == BondOrder::Double) {
      return true;
    }
  }
  return false;
}

bool atom_double_to_o(const Molecule &mol, int atom) {
  for (int bi : mol.incident_bonds(atom)) {
    const Bond &b = mol.bonds()[bi];
    if (b.order == BondOrder::Double &&
        mol.atoms()[b.other(atom)].elem == Elem::O) {
      return true;
    }
  }
  return false;
}

}  // namespace

double molecular_weight(const Molecule &mol) {
  const double h_weight = element(Elem::H).atomic_weight;
  double total = 0.0;
  for (int i = 0; i < mol.atom_count(); ++i) {
    const Atom &a = mol.atoms()[i];
    total += element(a.elem).atomic_weight;
    total += h_weight * a.total_h();
  }
  return total;
}

int count_rotatable_bonds(const Molecule &mol) {
  int count = 0;
  for (const Bond &b : mol.bonds()) {
    if (b.in_ring || b.order != BondOrder::Single) {
      continue;
    }
    if (mol.degree(b.a) < 2 || mol.degree(b.b) < 2) {
      continue;
    }
    const Atom &atom_a = mol.atoms()[b.a];
    const Atom &atom_b = mol.atoms()[b.b];
    const bool amide =
        (atom_a.elem == Elem::C && atom_b.elem == Elem::N &&
         atom_double_to_o(mol, b.a)) ||
        (atom_b.elem == Elem::C && atom_a.elem == Elem::N &&
         atom_double_to_o(mol, b.b));
    if (!amide) {
      ++count;
    }
  }
  return count;
}

double aromatic_proportion(const Molecule &mol) {
  int heavy = 0;
  int aromatic = 0;
  for (const Atom &a : mol.atoms()) {
    if (a.elem == Elem::H) {
      continue;
    }
    ++heavy;
    if (a.aromatic) {
      ++aromatic;
    }
  }
  if (heavy == 0) {
    return 0.0;
  }
  return static_cast<double>(aromatic) / heavy;
}

const ClogpTable &ClogpTable::builtin() {
  static const ClogpTable table = parse(kBuiltinClogpTsv);
  return table;
}

ClogpTable ClogpTable::parse(const std::string &tsv_text) {
  ClogpTable table;
  std::istringstream in(tsv_text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty() || line[0] == '#') {
      continue;
    }
    std::istringstream fields(line);
    Row row;
    std::string match_spec;
    std::string contribution;
    if (!std::getline(fields, row.type_id, '\t') ||
        !std::getline(fields, match_spec, '\t') ||
        !std::getline(fields, contribution)) {
      throw ChemError("CLOGP_TABLE", "malformed table row at line " +
                                         std::to_string(lineno));
    }
    row.contribution = std::stod(contribution);

    std::istringstream preds(match_spec);
    std::string pred;
    bool has_elem = false;
    while (std::getline(preds, pred, ',')) {
      auto eq = pred.find('=');
      if (eq == std::string::npos) {
        throw ChemError("CLOGP_TABLE", "bad predicate '" + pred + "'");
      }
      const std::string key = pred.substr(0, eq);
      const std::string value = pred.substr(eq + 1);
      if (key == "elem") {
        if (!find_element(value, row.elem)) {
          throw ChemError("CLOGP_TABLE", "unknown element '" + value + "'");
        }
        has_elem = true;
      } else if (key == "arom") {
        row.aromatic = std::stoi(value);
      } else if (key == "hasdbl") {
        row.has_double = std::stoi(value);
      } else if (key == "dbl2o") {
        row.double_to_o = std::stoi(value);
      } else if (key == "minh") {
        row.min_h = std::stoi(value);
      } else {
        throw ChemError("CLOGP_TABLE", "unknown predicate '" + key + "'");
      }
    }
    if (!has_elem) {
      throw ChemError("CLOGP_TABLE",
                      "row '" + row.type_id + "' lacks elem predicate");
    }
    table.rows_.push_back(row);
  }
  return table;
}

ClogpTable ClogpTable::load(const std::string &path) {
  std::ifstream in(path);
  if (!in) {
    throw ChemError("CLOGP_TABLE", "cannot open " + path);
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse(buf.str());
}

double ClogpTable::atom_contribution(const Molecule &mol, int atom) const {
  const Atom &a = mol.atoms()[atom];
  for (const Row &row : rows_) {
    if (row.elem != a.elem) {
      continue;
    }
    if (row.aromatic >= 0 && (row.aromatic == 1) != a.aromatic) {
      continue;
    }
    if (row.has_double >= 0 &&
        (row.has_double == 1) != atom_has_double(mol, atom)) {
      continue;
    }
    if (row.double_to_o >= 0 &&
        (row.double_to_o == 1) != atom_double_to_o(mol, atom)) {
      continue;
    }
    if (row.min_h >= 0 && a.total_h() < row.min_h) {
      continue;
    }
    return row.contribution;
  }
  throw ChemError("UNTYPED_ATOM", "no cLogP atom type for atom " +
                                      std::to_string(atom) + " (" +
                                      std::string(element(a.elem).symbol) +
                                      ")");
}

double ClogpTable::hydrogen_contribution() const {
  for (const Row &row : rows_) {
    if (row.elem == Elem::H) {
      return row.contribution;
    }
  }
  throw ChemError("UNTYPED_ATOM", "table has no hydrogen row");
}

double crippen_logp(const Molecule &mol) {
  return crippen_logp(mol, ClogpTable::builtin());
}

double crippen_logp(const Molecule &mol, const ClogpTable &table) {
  double total = 0.0;
  const double per_h = table.hydrogen_contribution();
  for (int i = 0; i < mol.atom_count(); ++i) {
    if (mol.atoms()[i].elem == Elem::H) {
      total += per_h;
    } else {
      total += table.atom_contribution(mol, i);
    }
    total += per_h * mol.atoms()[i].total_h();
  }
  return total;
}

}  // namespace disco
