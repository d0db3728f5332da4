//
// Project discokit
// SPDX-License-Identifier: Apache-2.0
//

#pragma once

#include <string>
#include <vector>

#include "discokit/molecule.hpp"

namespace disco {

std::string emit_smiles_with_ranks(const Molecule &mol,
                                   const std::vector<int> &ranks);

}  // namespace disco
