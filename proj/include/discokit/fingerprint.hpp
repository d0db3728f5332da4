//
// Project discokit
// SPDX-License-Identifier: Apache-2.0
//

#pragma once

#include <cstdint>
#include <vector>

#include "discokit/molecule.hpp"

namespace disco {

// Hashed circular-environment bit vector. Two fingerprints are comparable
// only when width and radius match.
struct Fingerprint {
  int width = 0;
  int radius = 0;
  std::vector<std::uint64_t> words;

  static Fingerprint zeros(int width, int radius);
  void set_bit(int bit);
  bool bit(int i) const;
  int popcount() const;

  bool operator==(const Fingerprint &other) const = default;
};

inline constexpr int kDefaultFpRadius = 2;
inline constexpr int kDefaultFpWidth = 2048;

// One bit per distinct atom environment for r = 0..radius; environments
// are canonical strings (element, aromaticity, charge, sorted neighbor
// branches with bond orders) hashed with FNV-1a. Order-invariant.
Fingerprint morgan_fingerprint(const Molecule &mol,
                               int radius = kDefaultFpRadius,
                               int width = kDefaultFpWidth);

// Intersection over union of set bits; 1.0 when both are empty.
double tanimoto(const Fingerprint &a, const Fingerprint &b);

}  // namespace disco
