#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>
#include <string>
#include <vector>

#include "chem_test_utils.hpp"
#include "discokit/descriptors.hpp"
#include "discokit/fingerprint.hpp"
#include "discokit/smiles.hpp"

using namespace disco;
using Kind = SmilesError::Kind;

namespace {

Kind parse_failure(const std::string &smiles) {
  try {
    parse_smiles(smiles);
  } catch (const SmilesError &e) {
    return e.kind();
  }
  FAIL("expected parse failure for ", smiles);
  return Kind::Syntax;
}

}  // namespace

TEST_CASE("ethanol parses to the expected graph") {
  Molecule mol = parse_smiles("CCO");
  REQUIRE(mol.atom_count() == 3);
  REQUIRE(mol.bond_count() == 2);
  for (const Bond &b : mol.bonds()) {
    CHECK(b.order == BondOrder::Single);
    CHECK_FALSE(b.in_ring);
  }
  // Hand application of the valence table: C(1 bond)->3H, C(2)->2H, O(1)->1H.
  CHECK(mol.atoms()[0].implicit_h == 3);
  CHECK(mol.atoms()[1].implicit_h == 2);
  CHECK(mol.atoms()[2].implicit_h == 1);
}

TEST_CASE("parser error taxonomy") {
  CHECK(parse_failure("") == Kind::EmptyInput);
  CHECK(parse_failure("   ") == Kind::EmptyInput);
  CHECK(parse_failure("C1CC") == Kind::UnclosedRing);
  CHECK(parse_failure("C(C") == Kind::UnbalancedParenthesis);
  CHECK(parse_failure("CC)") == Kind::UnbalancedParenthesis);
  CHECK(parse_failure("CC.CC") == Kind::MultipleFragments);
  CHECK(parse_failure("CXe") == Kind::UnknownElement);
  CHECK(parse_failure("C=C=C(=C)=C") == Kind::ValenceViolation);
  CHECK(parse_failure("O=C=O=C") == Kind::ValenceViolation);

  try {
    parse_smiles("C1CC2C1");  // digit 2 never closes
  } catch (const SmilesError &e) {
    CHECK(e.kind() == Kind::UnclosedRing);
    CHECK(e.detail() == 2);
  }
}

TEST_CASE("benzene is aromatic and cyclic") {
  Molecule mol = parse_smiles("c1ccccc1");
  REQUIRE(mol.atom_count() == 6);
  REQUIRE(mol.bond_count() == 6);
  for (const Atom &a : mol.atoms()) {
    CHECK(a.aromatic);
    CHECK(a.implicit_h == 1);
  }
  for (const Bond &b : mol.bonds()) {
    CHECK(b.order == BondOrder::Aromatic);
    CHECK(b.in_ring);
  }
}

TEST_CASE("bracket atoms carry charge, isotope and explicit hydrogens") {
  Molecule mol = parse_smiles("[13CH3][NH3+]");
  CHECK(mol.atoms()[0].isotope == 13);
  CHECK(mol.atoms()[0].explicit_h == 3);
  CHECK(mol.atoms()[1].formal_charge == 1);
  CHECK(mol.atoms()[1].explicit_h == 3);
  CHECK(mol.atoms()[1].implicit_h == 0);

  // Stereo markers parse and are discarded.
  CHECK(parse_smiles("C/C=C/C").atom_count() == 4);
  CHECK(parse_smiles("[C@@H](C)(N)O").atom_count() == 4);

  // Common heteroaromatics must survive validation.
  CHECK(parse_smiles("c1cc[nH]c1").atom_count() == 5);   // pyrrole
  CHECK(parse_smiles("c1ccoc1").atom_count() == 5);      // furan
  CHECK(parse_smiles("c1ccsc1").atoms()[3].elem == Elem::S);
  CHECK(parse_smiles("c1ccsc1").atoms()[3].implicit_h == 0);
  CHECK(parse_smiles("c1cc[nH+]cc1").atom_count() == 6);  // pyridinium
}

TEST_CASE("ring perception flags exactly the cycle bonds") {
  Molecule ring = parse_smiles("C1CC1");
  for (const Bond &b : ring.bonds()) {
    CHECK(b.in_ring);
  }
  Molecule chain = parse_smiles("CCO");
  for (const Bond &b : chain.bonds()) {
    CHECK_FALSE(b.in_ring);
  }
  Molecule tail = parse_smiles("C1CC1C");
  int ring_bonds = 0;
  for (const Bond &b : tail.bonds()) {
    ring_bonds += b.in_ring ? 1 : 0;
  }
  CHECK(ring_bonds == 3);
  CHECK(tail.bond_count() == 4);
}

TEST_CASE("write_smiles round trips") {
  CHECK(write_smiles(parse_smiles("C")) == "C");

  for (const std::string &s :
       {"CCO", "C1CC1", "c1ccccc1", "CC(=O)NC", "C#N", "[NH4+]",
        "c1ccc2ccccc2c1", "CC(C)Cc1ccc(cc1)C(C)C(=O)O", "FC(F)(F)Br",
        "C%12CCCCC%12", "[O-]C(=O)c1ccccc1", "C/C=C/C", "c1cc[nH]c1"}) {
    CAPTURE(s);
    Molecule first = parse_smiles(s);
    Molecule second = parse_smiles(write_smiles(first));
    CHECK(testutil::isomorphic(first, second));
  }

  Molecule cyclopropane = parse_smiles(write_smiles(parse_smiles("C1CC1")));
  CHECK(cyclopropane.atom_count() == 3);
  CHECK(cyclopropane.bond_count() == 3);
}

TEST_CASE("canonical smiles is invariant under atom reordering") {
  CHECK(canonical_smiles("OCC") == canonical_smiles("CCO"));
  CHECK(canonical_smiles("C") == canonical_smiles("C"));
  CHECK(canonical_smiles("C(F)(Cl)Br") == canonical_smiles("ClC(Br)F"));

  std::mt19937_64 rng(12345);
  for (const std::string &s :
       {"c1ccccc1", "CC(C)Cc1ccc(cc1)C(C)C(=O)O", "C1CC1C", "CC(=O)NC",
        "c1cc[nH]c1", "[O-]C(=O)C", "N#Cc1ccccc1O"}) {
    CAPTURE(s);
    Molecule mol = parse_smiles(s);
    const std::string reference = canonical_smiles(mol);
    for (int trial = 0; trial < 20; ++trial) {
      auto perm = testutil::random_permutation(mol.atom_count(), rng);
      CHECK(canonical_smiles(testutil::permuted(mol, perm)) == reference);
    }
  }
}

TEST_CASE("molecular weight oracles") {
  CHECK(molecular_weight(parse_smiles("C")) ==
        doctest::Approx(16.043).epsilon(1e-4));  // 12.011 + 4*1.008
  CHECK(molecular_weight(parse_smiles("CCO")) ==
        doctest::Approx(46.069).epsilon(1e-4));  // 2*12.011 + 15.999 + 6*1.008
  CHECK(molecular_weight(parse_smiles("[13CH4]")) ==
        doctest::Approx(16.043).epsilon(1e-4));  // isotopes ignored downstream
}

TEST_CASE("rotatable bond count") {
  CHECK(count_rotatable_bonds(parse_smiles("CCO")) == 0);
  CHECK(count_rotatable_bonds(parse_smiles("CCCC")) == 1);
  CHECK(count_rotatable_bonds(parse_smiles("c1ccccc1")) == 0);
  // Amide C-N is excluded; the C-C into the carbonyl is not.
  CHECK(count_rotatable_bonds(parse_smiles("CCC(=O)NC")) == 1);
  CHECK(count_rotatable_bonds(parse_smiles("CC(C)Cc1ccc(cc1)C(C)C(=O)O")) ==
        4);
}

TEST_CASE("aromatic proportion") {
  CHECK(aromatic_proportion(parse_smiles("c1ccccc1")) == 1.0);
  CHECK(aromatic_proportion(parse_smiles("CCO")) == 0.0);
  CHECK(aromatic_proportion(parse_smiles("Cc1ccccc1")) ==
        doctest::Approx(6.0 / 7.0));
}

TEST_CASE("clogp hand sums over the shipped table") {
  // Rows: C_ALIPH 0.1441, C_AROM 0.2940, H 0.1230.
  CHECK(crippen_logp(parse_smiles("C")) ==
        doctest::Approx(0.1441 + 4 * 0.1230).epsilon(1e-12));
  CHECK(crippen_logp(parse_smiles("CC")) ==
        doctest::Approx(2 * 0.1441 + 6 * 0.1230).epsilon(1e-12));
  CHECK(crippen_logp(parse_smiles("c1ccccc1")) ==
        doctest::Approx(6 * 0.2940 + 6 * 0.1230).epsilon(1e-12));
  // Ethanol: 2 aliphatic C + hydroxyl O + 6 H.
  CHECK(crippen_logp(parse_smiles("CCO")) ==
        doctest::Approx(2 * 0.1441 - 1.1500 + 6 * 0.1230).epsilon(1e-12));

  // No boron row: the gap must surface, not default silently.
  CHECK_THROWS_WITH_AS(crippen_logp(parse_smiles("B")),
                       doctest::Contains("no cLogP atom type"), ChemError);
}

TEST_CASE("clogp table file matches the builtin constant") {
  ClogpTable shipped = ClogpTable::load(std::string(DISCO_DATA_DIR) +
                                        "/clogp_v1.tsv");
  REQUIRE(shipped.rows().size() == ClogpTable::builtin().rows().size());
  for (std::size_t i = 0; i < shipped.rows().size(); ++i) {
    CHECK(shipped.rows()[i].type_id == ClogpTable::builtin().rows()[i].type_id);
    CHECK(shipped.rows()[i].contribution ==
          ClogpTable::builtin().rows()[i].contribution);
  }
}

TEST_CASE("morgan fingerprint environments") {
  Fingerprint lone = morgan_fingerprint(parse_smiles("C"), 2, 2048);
  CHECK(lone.popcount() == 1);  // r>0 adds nothing on a single atom

  CHECK(morgan_fingerprint(parse_smiles("CCO")) ==
        morgan_fingerprint(parse_smiles("OCC")));
  CHECK(morgan_fingerprint(parse_smiles("CCO")) ==
        morgan_fingerprint(parse_smiles("CCO")));

  std::mt19937_64 rng(99);
  Molecule mol = parse_smiles("CC(C)Cc1ccc(cc1)C(C)C(=O)O");
  Fingerprint reference = morgan_fingerprint(mol);
  for (int trial = 0; trial < 10; ++trial) {
    auto perm = testutil::random_permutation(mol.atom_count(), rng);
    CHECK(morgan_fingerprint(testutil::permuted(mol, perm)) == reference);
  }

  CHECK_THROWS_AS(morgan_fingerprint(mol, 2, 1000), ChemError);  // not 2^k
}

TEST_CASE("tanimoto set arithmetic") {
  Fingerprint f = morgan_fingerprint(parse_smiles("CCO"));
  CHECK(tanimoto(f, f) == 1.0);

  Fingerprint a = Fingerprint::zeros(64, 2);
  Fingerprint b = Fingerprint::zeros(64, 2);
  a.set_bit(1);
  a.set_bit(2);
  a.set_bit(3);
  b.set_bit(2);
  b.set_bit(3);
  b.set_bit(4);
  CHECK(tanimoto(a, b) == 0.5);  // |{2,3}| / |{1,2,3,4}|

  Fingerprint c = Fingerprint::zeros(64, 2);
  Fingerprint d = Fingerprint::zeros(64, 2);
  c.set_bit(0);
  d.set_bit(63);
  CHECK(tanimoto(c, d) == 0.0);

  Fingerprint e1 = Fingerprint::zeros(64, 2);
  Fingerprint e2 = Fingerprint::zeros(64, 2);
  CHECK(tanimoto(e1, e2) == 1.0);  // both empty

  Fingerprint wide = Fingerprint::zeros(128, 2);
  CHECK_THROWS_AS(tanimoto(a, wide), ChemError);
  Fingerprint deeper = Fingerprint::zeros(64, 3);
  CHECK_THROWS_AS(tanimoto(a, deeper), ChemError);
}

TEST_CASE("tanimoto bounds and symmetry over random vectors") {
  std::mt19937_64 rng(2024);
  for (int i = 0; i < 1000; ++i) {
    Fingerprint a = Fingerprint::zeros(256, 2);
    Fingerprint b = Fingerprint::zeros(256, 2);
    int na = static_cast<int>(rng() % 40);
    int nb = static_cast<int>(rng() % 40);
    for (int k = 0; k < na; ++k) {
      a.set_bit(static_cast<int>(rng() % 256));
    }
    for (int k = 0; k < nb; ++k) {
      b.set_bit(static_cast<int>(rng() % 256));
    }
    double ab = tanimoto(a, b);
    CHECK(ab >= 0.0);
    CHECK(ab <= 1.0);
    CHECK(ab == tanimoto(b, a));
    CHECK(tanimoto(a, a) == 1.0);
  }
}

TEST_CASE("valence conservation for parsed molecules") {
  for (const std::string &s :
       {"CCO", "c1ccccc1", "CC(=O)O", "C#N", "CS(=O)(=O)C", "FP(F)F",
        "c1cc[nH]c1", "[NH4+]", "C[N+](C)(C)C"}) {
    CAPTURE(s);
    Molecule mol = parse_smiles(s);
    for (int i = 0; i < mol.atom_count(); ++i) {
      const Atom &a = mol.atoms()[i];
      int total = mol.valence_sum(i) + a.total_h();
      auto allowed = adjusted_valences(a.elem, a.formal_charge);
      bool found = false;
      for (int v : allowed) {
        // Aromatic bracket atoms may sit at the sigma count instead.
        if (total == v || (a.aromatic && total <= v)) {
          found = true;
        }
      }
      CHECK(found);
    }
  }
}

TEST_CASE("molecule size cap") {
  std::string big(300, 'C');
  CHECK(parse_failure(big) == Kind::TooManyAtoms);
}
