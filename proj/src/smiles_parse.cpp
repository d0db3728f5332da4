//
// Project discokit
// SPDX-License-Identifier: Apache-2.0
//

#include <cctype>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "discokit/smiles.hpp"

namespace disco {

namespace {

using Kind = SmilesError::Kind;

[[noreturn]] void fail(Kind kind, int detail, const std::string &msg) {
  throw SmilesError(kind, detail, msg);
}

struct RingOpening {
  int atom;
  std::optional<BondOrder> order;
  int position;
};

class Parser {
public:
  explicit Parser(std::string_view text) : text_(text) {}

  Molecule run() {
    while (!text_.empty() && std::isspace(static_cast<unsigned char>(
                                 text_.back()))) {
      text_.remove_suffix(1);
    }
    if (text_.empty()) {
      fail(Kind::EmptyInput, 0, "empty SMILES");
    }
    while (pos_ < text_.size()) {
      step();
    }
    finish();
    return Molecule::from_graph(std::move(atoms_), std::move(bonds_));
  }

private:
  char peek() const { return text_[pos_]; }
  bool done() const { return pos_ >= text_.size(); }

  void step() {
    const char c = peek();
    const int here = static_cast<int>(pos_);
    switch (c) {
    case '-':
    case '/':
    case '\\':
      set_pending(BondOrder::Single, here);
      ++pos_;
      return;
    case '=':
      set_pending(BondOrder::Double, here);
      ++pos_;
      return;
    case '#':
      set_pending(BondOrder::Triple, here);
      ++pos_;
      return;
    case ':':
      set_pending(BondOrder::Aromatic, here);
      ++pos_;
      return;
    case '(':
      if (prev_ < 0) {
        fail(Kind::UnbalancedParenthesis, here, "branch before any atom");
      }
      if (pending_.has_value()) {
        fail(Kind::Syntax, here, "bond symbol before '('");
      }
      branch_stack_.push_back({prev_, here});
      ++pos_;
      return;
    case ')':
      if (branch_stack_.empty()) {
        fail(Kind::UnbalancedParenthesis, here, "unmatched ')'");
      }
      if (pending_.has_value()) {
        fail(Kind::Syntax, here, "dangling bond symbol before ')'");
      }
      prev_ = branch_stack_.back().first;
      branch_stack_.pop_back();
      ++pos_;
      return;
    case '.':
      fail(Kind::MultipleFragments, here, "dot fragment separator");
    case '%': {
      if (pos_ + 2 >= text_.size() ||
          !std::isdigit(static_cast<unsigned char>(text_[pos_ + 1])) ||
          !std::isdigit(static_cast<unsigned char>(text_[pos_ + 2]))) {
        fail(Kind::Syntax, here, "'%' needs two digits");
      }
      int number = (text_[pos_ + 1] - '0') * 10 + (text_[pos_ + 2] - '0');
      pos_ += 3;
      ring_closure(number, here);
      return;
    }
    default:
      break;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      ++pos_;
      ring_closure(c - '0', here);
      return;
    }
    if (c == '[') {
      add_atom(bracket_atom(), here);
      return;
    }
    Elem elem;
    std::size_t consumed = 0;
    if (match_element(text_.substr(pos_), false, elem, consumed) &&
        element(elem).organic_subset) {
      pos_ += consumed;
      Atom atom;
      atom.elem = elem;
      add_atom(atom, here);
      return;
    }
    if (match_element(text_.substr(pos_), true, elem, consumed)) {
      pos_ += consumed;
      Atom atom;
      atom.elem = elem;
      atom.aromatic = true;
      add_atom(atom, here);
      return;
    }
    fail(Kind::UnknownElement, here,
         std::string("unexpected character '") + c + "' at position " +
             std::to_string(here));
  }

  Atom bracket_atom() {
    const int open = static_cast<int>(pos_);
    ++pos_;  // '['
    Atom atom;
    atom.explicit_h = 0;

    // isotope
    int isotope = 0;
    bool has_isotope = false;
    while (!done() && std::isdigit(static_cast<unsigned char>(peek()))) {
      has_isotope = true;
      isotope = isotope * 10 + (peek() - '0');
      ++pos_;
    }
    if (has_isotope) {
      if (isotope <= 0) {
        fail(Kind::Syntax, open, "isotope must be positive");
      }
      atom.isotope = isotope;
    }

    if (done()) {
      fail(Kind::Syntax, open, "unterminated bracket atom");
    }
    Elem elem;
    std::size_t consumed = 0;
    if (match_element(text_.substr(pos_), false, elem, consumed)) {
      atom.elem = elem;
    } else if (match_element(text_.substr(pos_), true, elem, consumed)) {
      atom.elem = elem;
      atom.aromatic = true;
    } else {
      fail(Kind::UnknownElement, static_cast<int>(pos_),
           "unknown element in bracket");
    }
    pos_ += consumed;

    // chirality, discarded
    while (!done() && peek() == '@') {
      ++pos_;
    }

    if (!done() && peek() == 'H') {
      ++pos_;
      int count = 1;
      if (!done() && std::isdigit(static_cast<unsigned char>(peek()))) {
        count = 0;
        while (!done() && std::isdigit(static_cast<unsigned char>(peek()))) {
          count = count * 10 + (peek() - '0');
          ++pos_;
        }
      }
      atom.explicit_h = count;
    }

    if (!done() && (peek() == '+' || peek() == '-')) {
      const char sign_char = peek();
      const int sign = sign_char == '+' ? 1 : -1;
      ++pos_;
      int magnitude = 1;
      if (!done() && std::isdigit(static_cast<unsigned char>(peek()))) {
        magnitude = 0;
        while (!done() && std::isdigit(static_cast<unsigned char>(peek()))) {
          magnitude = magnitude * 10 + (peek() - '0');
          ++pos_;
        }
      } else {
        while (!done() && peek() == sign_char) {
          ++magnitude;
          ++pos_;
        }
      }
      atom.formal_charge = sign * magnitude;
    }

    if (!done() && peek() == ':') {
      ++pos_;  // atom class, discarded
      while (!done() && std::isdigit(static_cast<unsigned char>(peek()))) {
        ++pos_;
      }
    }

    if (done() || peek() != ']') {
      fail(Kind::Syntax, open, "unterminated bracket atom");
    }
    ++pos_;
    return atom;
  }

  void set_pending(BondOrder order, int position) {
    if (prev_ < 0) {
      fail(Kind::Syntax, position, "bond symbol before any atom");
    }
    if (pending_.has_value()) {
      fail(Kind::Syntax, position, "two consecutive bond symbols");
    }
    pending_ = order;
  }

  void add_atom(const Atom &atom, int position) {
    (void)position;
    const int idx = static_cast<int>(atoms_.size());
    atoms_.push_back(atom);
    if (prev_ >= 0) {
      bonds_.push_back({prev_, idx, resolve_order(prev_, idx), false});
    } else if (pending_.has_value()) {
      fail(Kind::Syntax, position, "bond symbol before first atom");
    }
    pending_.reset();
    prev_ = idx;
  }

  BondOrder resolve_order(int a, int b) const {
    if (pending_.has_value()) {
      return *pending_;
    }
    return atoms_[a].aromatic && atoms_[b].aromatic ? BondOrder::Aromatic
                                                    : BondOrder::Single;
  }

  void ring_closure(int number, int position) {
    if (prev_ < 0) {
      fail(Kind::Syntax, position, "ring closure before any atom");
    }
    auto it = open_rings_.find(number);
    if (it == open_rings_.end()) {
      open_rings_[number] = {prev_, pending_, position};
      pending_.reset();
      return;
    }
    const RingOpening opening = it->second;
    open_rings_.erase(it);
    if (opening.atom == prev_) {
      fail(Kind::Syntax, position, "ring closure to the same atom");
    }
    std::optional<BondOrder> order = opening.order;
    if (pending_.has_value()) {
      if (order.has_value() && *order != *pending_) {
        fail(Kind::Syntax, position, "conflicting ring-closure bond orders");
      }
      order = pending_;
    }
    pending_.reset();
    BondOrder resolved =
        order.has_value()
            ? *order
            : (atoms_[opening.atom].aromatic && atoms_[prev_].aromatic
                   ? BondOrder::Aromatic
                   : BondOrder::Single);
    bonds_.push_back({opening.atom, prev_, resolved, false});
  }

  void finish() {
    if (!branch_stack_.empty()) {
      fail(Kind::UnbalancedParenthesis, branch_stack_.back().second,
           "unclosed '('");
    }
    if (!open_rings_.empty()) {
      fail(Kind::UnclosedRing, open_rings_.begin()->first,
           "unclosed ring bond " +
               std::to_string(open_rings_.begin()->first));
    }
    if (pending_.has_value()) {
      fail(Kind::Syntax, static_cast<int>(text_.size()),
           "dangling bond symbol");
    }
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::vector<Atom> atoms_;
  std::vector<Bond> bonds_;
  std::vector<std::pair<int, int>> branch_stack_;  // (atom, '(' position)
  std::map<int, RingOpening> open_rings_;
  std::optional<BondOrder> pending_;
  int prev_ = -1;
};

}  // namespace

Molecule parse_smiles(std::string_view text) {
  return Parser(text).run();
}

}  // namespace disco
