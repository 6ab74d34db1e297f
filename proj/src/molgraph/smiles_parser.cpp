//
// mgbench - molecular generation benchmark toolkit
// SPDX-License-Identifier: Apache-2.0
//

#include <cctype>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "mgbench/molgraph/aromaticity.h"
#include "mgbench/molgraph/element.h"
#include "mgbench/molgraph/smiles.h"

namespace mgb {

SmilesError::SmilesError(SmilesErrorKind kind, std::size_t position,
                         const std::string &what)
    : std::runtime_error(what + " (at position " + std::to_string(position) + ")"),
      kind_(kind), position_(position) { }

namespace {

struct PendingBond {
  BondOrder order;
  std::size_t position;
};

struct OpenRing {
  int atom;
  std::optional<BondOrder> order;
  std::size_t position;
};

class SmilesParser {
public:
  explicit SmilesParser(std::string_view text): text_(text) { }

  Molecule parse() {
    while (pos_ < text_.size()) {
      const char c = text_[pos_];
      switch (c) {
      case '(':
        if (prev_ < 0)
          fail(SmilesErrorKind::kSyntax, "branch without a preceding atom");
        if (bond_)
          fail(SmilesErrorKind::kSyntax, "bond symbol before branch");
        branches_.push_back(prev_);
        ++pos_;
        break;
      case ')':
        if (branches_.empty())
          fail(SmilesErrorKind::kSyntax, "unbalanced ')'");
        if (bond_)
          fail(SmilesErrorKind::kSyntax, "bond symbol before ')'");
        prev_ = branches_.back();
        branches_.pop_back();
        ++pos_;
        break;
      case '.':
        if (bond_)
          fail(SmilesErrorKind::kSyntax, "bond symbol before '.'");
        if (!branches_.empty())
          fail(SmilesErrorKind::kSyntax, "'.' inside a branch");
        prev_ = -1;
        ++pos_;
        break;
      case '-':
      case '=':
      case '#':
      case ':':
        if (bond_)
          fail(SmilesErrorKind::kSyntax, "consecutive bond symbols");
        if (prev_ < 0)
          fail(SmilesErrorKind::kSyntax, "bond symbol without a preceding atom");
        bond_ = PendingBond{bond_from_char(c), pos_};
        ++pos_;
        break;
      case '/':
      case '\\':
        fail(SmilesErrorKind::kStereo,
             "directional bond found; strip stereo annotations first");
        break;
      case '%':
        ring_closure(parse_percent_digits());
        break;
      case '[':
        add_atom(parse_bracket_atom());
        break;
      default:
        if (std::isdigit(static_cast<unsigned char>(c))) {
          ++pos_;
          ring_closure(c - '0');
        } else {
          add_atom(parse_organic_atom());
        }
      }
    }

    if (bond_)
      fail_at(bond_->position, SmilesErrorKind::kSyntax, "dangling bond symbol");
    if (!branches_.empty())
      fail(SmilesErrorKind::kSyntax, "unclosed branch");
    if (!rings_.empty()) {
      const auto &[digit, open] = *rings_.begin();
      fail_at(open.position, SmilesErrorKind::kUnclosedRing,
              "unclosed ring bond " + std::to_string(digit));
    }
    if (mol_.empty())
      fail(SmilesErrorKind::kEmpty, "no atoms");

    finish();
    return std::move(mol_);
  }

private:
  [[noreturn]] void fail(SmilesErrorKind kind, const std::string &what) const {
    fail_at(pos_, kind, what);
  }

  [[noreturn]] void fail_at(std::size_t at, SmilesErrorKind kind,
                            const std::string &what) const {
    throw SmilesError(kind, at, what);
  }

  static BondOrder bond_from_char(char c) {
    switch (c) {
    case '=':
      return BondOrder::kDouble;
    case '#':
      return BondOrder::kTriple;
    case ':':
      return BondOrder::kAromatic;
    default:
      return BondOrder::kSingle;
    }
  }

  int parse_percent_digits() {
    if (pos_ + 2 >= text_.size())
      fail(SmilesErrorKind::kSyntax, "'%' must be followed by two digits");
    const char d1 = text_[pos_ + 1];
    const char d2 = text_[pos_ + 2];
    if (!std::isdigit(static_cast<unsigned char>(d1)) ||
        !std::isdigit(static_cast<unsigned char>(d2)))
      fail(SmilesErrorKind::kSyntax, "'%' must be followed by two digits");
    pos_ += 3;
    return (d1 - '0') * 10 + (d2 - '0');
  }

  void ring_closure(int digit) {
    if (prev_ < 0)
      fail(SmilesErrorKind::kSyntax, "ring bond without a preceding atom");
    auto it = rings_.find(digit);
    if (it == rings_.end()) {
      std::optional<BondOrder> order;
      if (bond_)
        order = bond_->order;
      rings_.emplace(digit, OpenRing{prev_, order, pos_ - 1});
      bond_.reset();
      return;
    }
    const OpenRing open = it->second;
    rings_.erase(it);
    std::optional<BondOrder> order = open.order;
    if (bond_) {
      if (order && *order != bond_->order)
        fail(SmilesErrorKind::kSyntax, "conflicting ring bond orders");
      order = bond_->order;
    }
    bond_.reset();
    if (open.atom == prev_)
      fail(SmilesErrorKind::kSyntax, "ring bond to itself");
    if (mol_.find_bond(open.atom, prev_) >= 0)
      fail(SmilesErrorKind::kSyntax, "ring bond duplicates an existing bond");
    mol_.add_bond(open.atom, prev_, order.value_or(default_order(open.atom, prev_)));
  }

  BondOrder default_order(int a, int b) const {
    return mol_.atom(a).aromatic && mol_.atom(b).aromatic ? BondOrder::kAromatic
                                                          : BondOrder::kSingle;
  }

  void add_atom(const Atom &atom) {
    const int idx = mol_.add_atom(atom);
    positions_.push_back(atom_start_);
    bracket_.push_back(atom.explicit_h.has_value());
    if (prev_ >= 0) {
      const BondOrder order = bond_ ? bond_->order : default_order(prev_, idx);
      mol_.add_bond(prev_, idx, order);
    }
    bond_.reset();
    prev_ = idx;
  }

  Atom parse_organic_atom() {
    atom_start_ = pos_;
    const char c = text_[pos_];
    const char next = pos_ + 1 < text_.size() ? text_[pos_ + 1] : '\0';
    Atom atom;
    switch (c) {
    case 'B':
      atom.element = next == 'r' ? 35 : 5;
      break;
    case 'C':
      atom.element = next == 'l' ? 17 : 6;
      break;
    case 'N':
      atom.element = 7;
      break;
    case 'O':
      atom.element = 8;
      break;
    case 'P':
      atom.element = 15;
      break;
    case 'S':
      atom.element = 16;
      break;
    case 'F':
      atom.element = 9;
      break;
    case 'I':
      atom.element = 53;
      break;
    case 'b':
      atom.element = 5;
      atom.aromatic = true;
      break;
    case 'c':
      atom.element = 6;
      atom.aromatic = true;
      break;
    case 'n':
      atom.element = 7;
      atom.aromatic = true;
      break;
    case 'o':
      atom.element = 8;
      atom.aromatic = true;
      break;
    case 'p':
      atom.element = 15;
      atom.aromatic = true;
      break;
    case 's':
      atom.element = 16;
      atom.aromatic = true;
      break;
    case '*':
      fail(SmilesErrorKind::kUnsupportedElement, "wildcard atom '*' is not supported");
    default:
      if (std::isalpha(static_cast<unsigned char>(c)))
        fail(SmilesErrorKind::kUnsupportedElement,
             std::string("element '") + c + "' must be written in brackets");
      fail(SmilesErrorKind::kSyntax, std::string("unexpected character '") + c + "'");
    }
    pos_ += (atom.element == 35 || atom.element == 17) ? 2 : 1;
    return atom;
  }

  Atom parse_bracket_atom() {
    atom_start_ = pos_;
    ++pos_;  // '['
    auto peek = [&]() { return pos_ < text_.size() ? text_[pos_] : '\0'; };

    if (std::isdigit(static_cast<unsigned char>(peek())))
      fail(SmilesErrorKind::kIsotope, "isotopes are not supported");

    Atom atom;
    const char c = peek();
    if (c == '*')
      fail(SmilesErrorKind::kUnsupportedElement, "wildcard atom '*' is not supported");
    if (std::islower(static_cast<unsigned char>(c))) {
      std::string sym(1, static_cast<char>(std::toupper(c)));
      const char c2 = pos_ + 1 < text_.size() ? text_[pos_ + 1] : '\0';
      if ((c == 's' && c2 == 'e') || (c == 'a' && c2 == 's') || (c == 't' && c2 == 'e')) {
        sym += c2;
      }
      const ElementInfo *info = find_element(sym);
      if (info == nullptr || !can_be_aromatic(info->atomic_number))
        fail(SmilesErrorKind::kUnsupportedElement, "unknown aromatic symbol '" + sym + "'");
      atom.element = info->atomic_number;
      atom.aromatic = true;
      pos_ += sym.size();
    } else if (std::isupper(static_cast<unsigned char>(c))) {
      const ElementInfo *info = nullptr;
      const char c2 = pos_ + 1 < text_.size() ? text_[pos_ + 1] : '\0';
      if (std::islower(static_cast<unsigned char>(c2))) {
        info = find_element(text_.substr(pos_, 2));
        if (info != nullptr)
          pos_ += 2;
      }
      if (info == nullptr) {
        info = find_element(text_.substr(pos_, 1));
        if (info == nullptr)
          fail(SmilesErrorKind::kUnsupportedElement,
               "unsupported element '" + std::string(text_.substr(pos_, 1)) + "'");
        ++pos_;
      }
      atom.element = info->atomic_number;
    } else {
      fail(SmilesErrorKind::kSyntax, "expected element symbol in bracket atom");
    }

    if (peek() == '@')
      fail(SmilesErrorKind::kStereo, "chirality found; strip stereo annotations first");

    int hcount = 0;
    if (peek() == 'H') {
      ++pos_;
      hcount = 1;
      if (std::isdigit(static_cast<unsigned char>(peek()))) {
        hcount = peek() - '0';
        ++pos_;
      }
    }

    if (peek() == '+' || peek() == '-') {
      const char sign = peek();
      ++pos_;
      int magnitude = 1;
      if (std::isdigit(static_cast<unsigned char>(peek()))) {
        magnitude = 0;
        while (std::isdigit(static_cast<unsigned char>(peek()))) {
          magnitude = magnitude * 10 + (peek() - '0');
          ++pos_;
        }
      } else {
        while (peek() == sign) {
          ++magnitude;
          ++pos_;
        }
      }
      if (magnitude > 15)
        fail(SmilesErrorKind::kSyntax, "formal charge out of range");
      atom.formal_charge = sign == '+' ? magnitude : -magnitude;
    }

    if (peek() == ':') {
      // Atom-map class; accepted and discarded.
      ++pos_;
      if (!std::isdigit(static_cast<unsigned char>(peek())))
        fail(SmilesErrorKind::kSyntax, "atom class must be numeric");
      while (std::isdigit(static_cast<unsigned char>(peek())))
        ++pos_;
    }

    if (peek() != ']')
      fail(SmilesErrorKind::kSyntax, "expected ']'");
    ++pos_;

    atom.explicit_h = hcount;
    atom.total_h = hcount;
    return atom;
  }

  void finish() {
    mol_.update_ring_info();

    // An implicit bond between two aromatic atoms is aromatic only when it
    // closes a ring (biphenyl's inter-ring bond is single).
    for (int b = 0; b < mol_.num_bonds(); ++b) {
      Bond &bond = mol_.bond(b);
      if (bond.order == BondOrder::kAromatic && !bond.in_ring)
        bond.order = BondOrder::kSingle;
    }

    for (int i = 0; i < mol_.num_atoms(); ++i) {
      Atom &atom = mol_.atom(i);
      if (atom.aromatic && !atom.in_ring)
        fail_at(positions_[i], SmilesErrorKind::kAromaticity,
                "aromatic atom outside a ring");
      if (bracket_[i])
        continue;
      auto h = implied_hydrogens(mol_, i);
      if (!h)
        fail_at(positions_[i], SmilesErrorKind::kValence,
                "valence violation on " + std::string(find_element(atom.element)->symbol));
      atom.total_h = *h;
    }

    aromatize_kekule_rings(mol_);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t atom_start_ = 0;
  Molecule mol_;
  std::vector<std::size_t> positions_;
  std::vector<bool> bracket_;
  int prev_ = -1;
  std::optional<PendingBond> bond_;
  std::vector<int> branches_;
  std::map<int, OpenRing> rings_;
};

}  // namespace

Molecule parse_smiles(std::string_view text, const ParseOptions &opts) {
  if (text.empty())
    throw SmilesError(SmilesErrorKind::kEmpty, 0, "empty SMILES");
  if (opts.max_length > 0 && text.size() > opts.max_length)
    throw SmilesError(SmilesErrorKind::kLength, opts.max_length,
                      "SMILES longer than " + std::to_string(opts.max_length) +
                          " characters");
  return SmilesParser(text).parse();
}

}  // namespace mgb
