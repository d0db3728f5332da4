//
// Project discokit
// SPDX-License-Identifier: Apache-2.0
//

#pragma once

#include <string>
#include <string_view>

#include "discokit/errors.hpp"
#include "discokit/molecule.hpp"

namespace disco {

class SmilesError : public Error {
public:
  enum class Kind {
    EmptyInput,
    UnknownElement,
    UnclosedRing,
    UnbalancedParenthesis,
    ValenceViolation,
    MultipleFragments,
    TooManyAtoms,
    Syntax,
  };

  SmilesError(Kind kind, int detail, const std::string &what)
      : Error("PARSE", what), kind_(kind), detail_(detail) {}

  Kind kind() const noexcept { return kind_; }
  // Byte position for lexical errors, ring digit for UnclosedRing, atom
  // index for ValenceViolation.
  int detail() const noexcept { return detail_; }

private:
  Kind kind_;
  int detail_;
};

// Grammar: organic-subset and bracket atoms, bonds `- = # :`, branches,
// ring closures 1-9 and %nn. Stereo markers (/ \ @) are parsed and
// discarded; dots are rejected (MultipleFragments).
Molecule parse_smiles(std::string_view text);

// Plain writer: output re-parses to a graph isomorphic to the input.
std::string write_smiles(const Molecule &mol);

// Deterministic spelling, invariant under atom reordering: isomorphic
// molecules yield byte-identical strings.
std::string canonical_smiles(const Molecule &mol);

inline std::string canonical_smiles(std::string_view smiles) {
  return canonical_smiles(parse_smiles(smiles));
}

}  // namespace disco
