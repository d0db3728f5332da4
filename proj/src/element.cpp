//
// Project discokit
// SPDX-License-Identifier: Apache-2.0
//

#include "discokit/element.hpp"

#include <array>

namespace disco {

namespace {

const std::array<Element, 11> kTable = {{
    {"H", 1.008, {1}, false, false},
    {"B", 10.811, {3}, true, true},
    {"C", 12.011, {4}, true, true},
    {"N", 14.007, {3, 5}, true, true},
    {"O", 15.999, {2}, true, true},
    {"F", 18.998, {1}, true, false},
    {"P", 30.974, {3, 5}, true, true},
    {"S", 32.06, {2, 4, 6}, true, true},
    {"Cl", 35.453, {1}, true, false},
    {"Br", 79.904, {1}, true, false},
    {"I", 126.904, {1}, true, false},
}};

}  // namespace

const Element &element(Elem e) {
  return kTable[static_cast<std::size_t>(e)];
}

bool match_element(std::string_view text, bool aromatic, Elem &out,
                   std::size_t &consumed) {
  if (text.empty()) {
    return false;
  }
  if (aromatic) {
    for (std::size_t i = 0; i < kTable.size(); ++i) {
      const Element &el = kTable[i];
      if (!el.aromatic_capable) {
        continue;
      }
      char lower = static_cast<char>(el.symbol[0] - 'A' + 'a');
      if (text[0] == lower) {
        out = static_cast<Elem>(i);
        consumed = 1;
        return true;
      }
    }
    return false;
  }
  // Two-letter symbols take precedence (Cl, Br).
  for (std::size_t i = 0; i < kTable.size(); ++i) {
    const std::string_view sym = kTable[i].symbol;
    if (sym.size() == 2 && text.substr(0, 2) == sym) {
      out = static_cast<Elem>(i);
      consumed = 2;
      return true;
    }
  }
  for (std::size_t i = 0; i < kTable.size(); ++i) {
    const std::string_view sym = kTable[i].symbol;
    if (sym.size() == 1 && text[0] == sym[0]) {
      out = static_cast<Elem>(i);
      consumed = 1;
      return true;
    }
  }
  return false;
}

bool find_element(std::string_view symbol, Elem &out) {
  for (std::size_t i = 0; i < kTable.size(); ++i) {
    if (kTable[i].symbol == symbol) {
      out = static_cast<Elem>(i);
      return true;
    }
  }
  return false;
}

}  // namespace disco
