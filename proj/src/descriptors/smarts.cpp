//
// mgbench - molecular generation benchmark toolkit
// SPDX-License-Identifier: Apache-2.0
//
// Recursive-descent SMARTS compiler and a backtracking subgraph matcher.
// Query atoms are matched in parse order; every atom after the first of its
// component is reached through the bond that introduced it, so candidates
// come from the neighbor list of an already mapped atom.

#include "mgbench/descriptors/smarts.h"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <map>
#include <optional>
#include <set>

#include "mgbench/molgraph/element.h"

namespace mgb {

SmartsError::SmartsError(std::size_t position, const std::string &what)
    : std::runtime_error(what + " at position " + std::to_string(position)),
      position_(position) {}

namespace smarts_detail {

enum class Op : std::uint8_t { kPrim, kNot, kAnd, kOr };

enum class AtomPrim : std::uint8_t {
  kAny,
  kElement,
  kAromatic,
  kAliphatic,
  kTotalH,
  kDegree,
  kTotalDegree,
  kValence,
  kRingCount,
  kInRing,
  kRingSize,
  kRingBonds,
  kCharge,
  kIsotope,
  kRecursive,
};

struct AtomExpr {
  Op op = Op::kPrim;
  AtomPrim prim = AtomPrim::kAny;
  int value = 0;
  // For kElement: -1 either form, 0 aliphatic only, 1 aromatic only.
  int aromatic = -1;
  std::vector<AtomExpr> kids;
  std::shared_ptr<const Pattern> recursive;
};

enum class BondPrim : std::uint8_t { kSingle, kDouble, kTriple, kAromatic, kAny, kRing, kDefault };

struct BondExpr {
  Op op = Op::kPrim;
  BondPrim prim = BondPrim::kDefault;
  std::vector<BondExpr> kids;
};

struct QueryBond {
  int a;
  int b;
  BondExpr expr;
};

struct Pattern {
  std::vector<AtomExpr> atoms;
  std::vector<QueryBond> bonds;
  // Bond that first reached each atom; -1 for component roots.
  std::vector<int> anchor_bond;
  // Further bonds (ring closures) to atoms parsed earlier.
  std::vector<std::vector<int>> back_bonds;
};

}  // namespace smarts_detail

namespace {

using namespace smarts_detail;

template <typename Expr>
Expr combine(Op op, Expr lhs, Expr rhs) {
  if (lhs.op == op) {
    lhs.kids.push_back(std::move(rhs));
    return lhs;
  }
  Expr e;
  e.op = op;
  e.kids.push_back(std::move(lhs));
  e.kids.push_back(std::move(rhs));
  return e;
}

bool is_bond_char(char c) {
  return c == '-' || c == '=' || c == '#' || c == ':' || c == '~' || c == '@' || c == '!' ||
         c == '/' || c == '\\';
}

class Parser {
public:
  Parser(std::string_view text, std::size_t offset): text_(text), offset_(offset) {}

  std::shared_ptr<Pattern> parse() {
    auto p = std::make_shared<Pattern>();
    int prev = -1;
    std::vector<int> branches;
    std::optional<BondExpr> pending;
    std::map<int, std::pair<int, std::optional<BondExpr>>> open_rings;

    auto add_bond = [&](int a, int b, BondExpr expr) {
      p->bonds.push_back({a, b, std::move(expr)});
      return static_cast<int>(p->bonds.size()) - 1;
    };

    while (pos_ < text_.size()) {
      const char c = text_[pos_];
      if (c == '(') {
        if (prev < 0)
          fail("branch without a preceding atom");
        branches.push_back(prev);
        ++pos_;
      } else if (c == ')') {
        if (branches.empty() || pending)
          fail("unbalanced ')'");
        prev = branches.back();
        branches.pop_back();
        ++pos_;
      } else if (c == '.') {
        if (pending || !branches.empty())
          fail("unexpected '.'");
        prev = -1;
        ++pos_;
      } else if (is_bond_char(c)) {
        if (pending || prev < 0)
          fail("unexpected bond");
        pending = parse_bond_low();
      } else if (std::isdigit(static_cast<unsigned char>(c)) || c == '%') {
        if (prev < 0)
          fail("ring closure without a preceding atom");
        const int label = parse_ring_label();
        auto it = open_rings.find(label);
        if (it == open_rings.end()) {
          open_rings.emplace(label, std::make_pair(prev, pending));
        } else {
          const int other = it->second.first;
          if (other == prev)
            fail("ring closure to the same atom");
          BondExpr expr = pending ? *pending : it->second.second.value_or(BondExpr{});
          const int b = add_bond(other, prev, std::move(expr));
          p->back_bonds[prev].push_back(b);
          open_rings.erase(it);
        }
        pending.reset();
      } else {
        AtomExpr atom = parse_atom();
        const int idx = static_cast<int>(p->atoms.size());
        p->atoms.push_back(std::move(atom));
        p->back_bonds.emplace_back();
        if (prev >= 0) {
          p->anchor_bond.push_back(add_bond(prev, idx, pending.value_or(BondExpr{})));
        } else {
          if (pending)
            fail("bond without a preceding atom");
          p->anchor_bond.push_back(-1);
        }
        pending.reset();
        prev = idx;
      }
    }
    if (pending)
      fail("dangling bond");
    if (!branches.empty())
      fail("unclosed branch");
    if (!open_rings.empty())
      fail("unclosed ring");
    if (p->atoms.empty())
      fail("empty pattern");
    return p;
  }

private:
  [[noreturn]] void fail(const std::string &what) const {
    throw SmartsError(offset_ + pos_, what);
  }

  char peek(std::size_t ahead = 0) const {
    return pos_ + ahead < text_.size() ? text_[pos_ + ahead] : '\0';
  }

  std::optional<int> read_number() {
    if (!std::isdigit(static_cast<unsigned char>(peek())))
      return std::nullopt;
    int v = 0;
    while (std::isdigit(static_cast<unsigned char>(peek())))
      v = v * 10 + (text_[pos_++] - '0');
    return v;
  }

  int parse_ring_label() {
    if (peek() == '%') {
      ++pos_;
      if (!std::isdigit(static_cast<unsigned char>(peek())) ||
          !std::isdigit(static_cast<unsigned char>(peek(1))))
        fail("expected two digits after '%'");
      const int v = (peek() - '0') * 10 + (peek(1) - '0');
      pos_ += 2;
      return v;
    }
    return text_[pos_++] - '0';
  }

  static AtomExpr prim(AtomPrim kind, int value = 0) {
    AtomExpr e;
    e.prim = kind;
    e.value = value;
    return e;
  }

  static AtomExpr element(int z, int aromatic) {
    AtomExpr e = prim(AtomPrim::kElement, z);
    e.aromatic = aromatic;
    return e;
  }

  AtomExpr parse_atom() {
    const char c = peek();
    if (c == '[') {
      ++pos_;
      bracket_start_ = pos_;
      AtomExpr e = parse_atom_low();
      if (peek() != ']')
        fail("expected ']'");
      ++pos_;
      return e;
    }
    if (c == '*') {
      ++pos_;
      return prim(AtomPrim::kAny);
    }
    if (c == 'a') {
      ++pos_;
      return prim(AtomPrim::kAromatic);
    }
    if (c == 'A') {
      ++pos_;
      return prim(AtomPrim::kAliphatic);
    }
    if (c == 'C' && peek(1) == 'l') {
      pos_ += 2;
      return element(17, 0);
    }
    if (c == 'B' && peek(1) == 'r') {
      pos_ += 2;
      return element(35, 0);
    }
    static constexpr std::string_view kAliphatic = "BCNOSPFI";
    static constexpr std::string_view kAromatic = "bcnosp";
    if (kAliphatic.find(c) != std::string_view::npos) {
      ++pos_;
      return element(find_element(std::string_view(&c, 1))->atomic_number, 0);
    }
    if (kAromatic.find(c) != std::string_view::npos) {
      ++pos_;
      const char up = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
      return element(find_element(std::string_view(&up, 1))->atomic_number, 1);
    }
    fail(std::string("unexpected character '") + c + "'");
  }

  AtomExpr parse_atom_low() {
    AtomExpr e = parse_atom_or();
    while (peek() == ';') {
      ++pos_;
      e = combine(Op::kAnd, std::move(e), parse_atom_or());
    }
    return e;
  }

  AtomExpr parse_atom_or() {
    AtomExpr e = parse_atom_and();
    while (peek() == ',') {
      ++pos_;
      e = combine(Op::kOr, std::move(e), parse_atom_and());
    }
    return e;
  }

  AtomExpr parse_atom_and() {
    AtomExpr e = parse_atom_unary();
    while (true) {
      const char c = peek();
      if (c == '&') {
        ++pos_;
      } else if (c == '\0' || c == ']' || c == ';' || c == ',') {
        break;
      }
      e = combine(Op::kAnd, std::move(e), parse_atom_unary());
    }
    return e;
  }

  AtomExpr parse_atom_unary() {
    if (peek() == '!') {
      ++pos_;
      AtomExpr e;
      e.op = Op::kNot;
      e.kids.push_back(parse_atom_unary());
      return e;
    }
    return parse_atom_primitive();
  }

  // Two-letter element symbol starting at the cursor, if any.
  const ElementInfo *two_letter_element() const {
    const char a = peek();
    const char b = peek(1);
    if (!std::isupper(static_cast<unsigned char>(a)) || !std::islower(static_cast<unsigned char>(b)))
      return nullptr;
    const char sym[2] = {a, b};
    return find_element(std::string_view(sym, 2));
  }

  AtomExpr parse_atom_primitive() {
    const std::size_t start = pos_;
    const char c = peek();
    switch (c) {
    case '*':
      ++pos_;
      return prim(AtomPrim::kAny);
    case '#': {
      ++pos_;
      auto z = read_number();
      if (!z)
        fail("expected atomic number after '#'");
      return element(*z, -1);
    }
    case '$': {
      ++pos_;
      if (peek() != '(')
        fail("expected '(' after '$'");
      const std::size_t open = pos_;
      int depth = 0;
      std::size_t close = open;
      for (; close < text_.size(); ++close) {
        if (text_[close] == '(')
          ++depth;
        else if (text_[close] == ')' && --depth == 0)
          break;
      }
      if (close >= text_.size())
        fail("unclosed recursive SMARTS");
      Parser inner(text_.substr(open + 1, close - open - 1), offset_ + open + 1);
      AtomExpr e = prim(AtomPrim::kRecursive);
      e.recursive = inner.parse();
      pos_ = close + 1;
      return e;
    }
    case '+':
    case '-': {
      const int sign = c == '+' ? 1 : -1;
      ++pos_;
      if (auto n = read_number())
        return prim(AtomPrim::kCharge, sign * *n);
      int mag = 1;
      while (peek() == c) {
        ++mag;
        ++pos_;
      }
      return prim(AtomPrim::kCharge, sign * mag);
    }
    case '@':
      // Chirality is not perceived; it places no constraint.
      while (peek() == '@')
        ++pos_;
      return prim(AtomPrim::kAny);
    case ':':
      ++pos_;
      if (!read_number())
        fail("expected atom map number");
      return prim(AtomPrim::kAny);
    default:
      break;
    }

    if (std::isdigit(static_cast<unsigned char>(c))) {
      read_number();
      return prim(AtomPrim::kIsotope);
    }

    if (c == 'H') {
      if (start == bracket_start_ && (peek(1) == ']' || peek(1) == '+' || peek(1) == '-')) {
        ++pos_;
        return element(1, -1);
      }
      if (const ElementInfo *el = two_letter_element()) {
        pos_ += 2;
        return element(el->atomic_number, 0);
      }
      ++pos_;
      return prim(AtomPrim::kTotalH, read_number().value_or(1));
    }

    if (c == 'D' || c == 'X' || c == 'R') {
      if (const ElementInfo *el = two_letter_element()) {
        pos_ += 2;
        return element(el->atomic_number, 0);
      }
      ++pos_;
      auto n = read_number();
      if (c == 'D')
        return prim(AtomPrim::kDegree, n.value_or(1));
      if (c == 'X')
        return prim(AtomPrim::kTotalDegree, n.value_or(1));
      return n ? prim(AtomPrim::kRingCount, *n) : prim(AtomPrim::kInRing);
    }

    if (c == 'A') {
      if (const ElementInfo *el = two_letter_element()) {
        pos_ += 2;
        return element(el->atomic_number, 0);
      }
      ++pos_;
      return prim(AtomPrim::kAliphatic);
    }

    if (std::isupper(static_cast<unsigned char>(c))) {
      if (const ElementInfo *el = two_letter_element()) {
        pos_ += 2;
        return element(el->atomic_number, 0);
      }
      if (const ElementInfo *el = find_element(std::string_view(&text_[pos_], 1))) {
        ++pos_;
        return element(el->atomic_number, 0);
      }
      fail(std::string("unknown element '") + c + "'");
    }

    // Lowercase: aromatic elements first (se, as), then primitives.
    if (c == 's' && peek(1) == 'e') {
      pos_ += 2;
      return element(34, 1);
    }
    if (c == 'a' && peek(1) == 's') {
      pos_ += 2;
      return element(33, 1);
    }
    switch (c) {
    case 'a':
      ++pos_;
      return prim(AtomPrim::kAromatic);
    case 'v':
      ++pos_;
      return prim(AtomPrim::kValence, read_number().value_or(1));
    case 'r': {
      ++pos_;
      auto n = read_number();
      return n ? prim(AtomPrim::kRingSize, *n) : prim(AtomPrim::kInRing);
    }
    case 'x': {
      ++pos_;
      return prim(AtomPrim::kRingBonds, read_number().value_or(-1));
    }
    case 'b':
    case 'c':
    case 'n':
    case 'o':
    case 'p':
    case 's': {
      ++pos_;
      const char up = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
      return element(find_element(std::string_view(&up, 1))->atomic_number, 1);
    }
    default:
      break;
    }
    fail(std::string("unexpected '") + c + "' in atom expression");
  }

  BondExpr parse_bond_low() {
    BondExpr e = parse_bond_or();
    while (peek() == ';') {
      ++pos_;
      e = combine(Op::kAnd, std::move(e), parse_bond_or());
    }
    return e;
  }

  BondExpr parse_bond_or() {
    BondExpr e = parse_bond_and();
    while (peek() == ',') {
      ++pos_;
      e = combine(Op::kOr, std::move(e), parse_bond_and());
    }
    return e;
  }

  BondExpr parse_bond_and() {
    BondExpr e = parse_bond_unary();
    while (true) {
      if (peek() == '&')
        ++pos_;
      else if (!is_bond_char(peek()))
        break;
      e = combine(Op::kAnd, std::move(e), parse_bond_unary());
    }
    return e;
  }

  BondExpr parse_bond_unary() {
    if (peek() == '!') {
      ++pos_;
      BondExpr e;
      e.op = Op::kNot;
      e.kids.push_back(parse_bond_unary());
      return e;
    }
    BondExpr e;
    switch (peek()) {
    case '-':
    case '/':
    case '\\':
      e.prim = BondPrim::kSingle;
      break;
    case '=':
      e.prim = BondPrim::kDouble;
      break;
    case '#':
      e.prim = BondPrim::kTriple;
      break;
    case ':':
      e.prim = BondPrim::kAromatic;
      break;
    case '~':
      e.prim = BondPrim::kAny;
      break;
    case '@':
      e.prim = BondPrim::kRing;
      break;
    default:
      fail("expected bond primitive");
    }
    ++pos_;
    return e;
  }

  std::string_view text_;
  std::size_t offset_;
  std::size_t pos_ = 0;
  std::size_t bracket_start_ = std::string_view::npos;
};

}  // namespace

SmartsPattern::SmartsPattern(std::string_view text)
    : text_(text), pattern_(Parser(text, 0).parse()) {}

int SmartsPattern::num_atoms() const {
  return static_cast<int>(pattern_->atoms.size());
}

SmartsTarget::SmartsTarget(const Molecule &mol): mol_(mol), props_(mol.num_atoms()) {
  for (int a = 0; a < mol.num_atoms(); ++a) {
    AtomProps &p = props_[a];
    p.total_h = mol.atom(a).total_h;
    p.ring_bonds = 0;
    for (const Neighbor &nb : mol.neighbors(a)) {
      if (mol.atom(nb.atom).element == 1)
        ++p.total_h;
      if (mol.bond(nb.bond).in_ring)
        ++p.ring_bonds;
    }
    p.degree = mol.degree(a);
    p.total_degree = p.degree + mol.atom(a).total_h;
    p.valence = total_valence(mol, a);
  }
}

class SmartsMatcher {
public:
  SmartsMatcher(const Pattern &pattern, const SmartsTarget &target, const MatchOptions &opts,
                int fixed_root)
      : p_(pattern), t_(target), mol_(target.mol_), opts_(opts), fixed_root_(fixed_root),
        map_(pattern.atoms.size(), -1), used_(target.mol_.num_atoms(), false) {}

  static const Pattern &compiled(const SmartsPattern &p) { return *p.pattern_; }

  std::vector<std::vector<int>> run() {
    extend(0);
    return std::move(results_);
  }

  static bool match_atom_expr(const AtomExpr &e, const SmartsTarget &t, int a) {
    switch (e.op) {
    case Op::kNot:
      return !match_atom_expr(e.kids[0], t, a);
    case Op::kAnd:
      for (const AtomExpr &k : e.kids) {
        if (!match_atom_expr(k, t, a))
          return false;
      }
      return true;
    case Op::kOr:
      for (const AtomExpr &k : e.kids) {
        if (match_atom_expr(k, t, a))
          return true;
      }
      return false;
    case Op::kPrim:
      break;
    }
    const Atom &atom = t.mol_.atom(a);
    const SmartsTarget::AtomProps &p = t.props_[a];
    switch (e.prim) {
    case AtomPrim::kAny:
      return true;
    case AtomPrim::kElement:
      return atom.element == e.value && (e.aromatic < 0 || atom.aromatic == (e.aromatic == 1));
    case AtomPrim::kAromatic:
      return atom.aromatic;
    case AtomPrim::kAliphatic:
      return !atom.aromatic;
    case AtomPrim::kTotalH:
      return p.total_h == e.value;
    case AtomPrim::kDegree:
      return p.degree == e.value;
    case AtomPrim::kTotalDegree:
      return p.total_degree == e.value;
    case AtomPrim::kValence:
      return p.valence == e.value;
    case AtomPrim::kRingCount:
      return t.mol_.ring_membership(a) == e.value;
    case AtomPrim::kInRing:
      return atom.in_ring;
    case AtomPrim::kRingSize:
      return t.mol_.smallest_ring_size(a) == e.value;
    case AtomPrim::kRingBonds:
      return e.value < 0 ? p.ring_bonds > 0 : p.ring_bonds == e.value;
    case AtomPrim::kCharge:
      return atom.formal_charge == e.value;
    case AtomPrim::kIsotope:
      return false;
    case AtomPrim::kRecursive:
      return match_recursive(*e.recursive, t, a);
    }
    return false;
  }

private:
  static bool match_recursive(const Pattern &sub, const SmartsTarget &t, int a) {
    auto &cache = t.recursive_cache_[&sub];
    if (cache.empty())
      cache.assign(t.mol_.num_atoms(), -1);
    if (cache[a] < 0) {
      MatchOptions opts{false, 1};
      cache[a] = SmartsMatcher(sub, t, opts, a).run().empty() ? 0 : 1;
    }
    return cache[a] == 1;
  }

  bool match_bond_expr(const BondExpr &e, int b) const {
    switch (e.op) {
    case Op::kNot:
      return !match_bond_expr(e.kids[0], b);
    case Op::kAnd:
      for (const BondExpr &k : e.kids) {
        if (!match_bond_expr(k, b))
          return false;
      }
      return true;
    case Op::kOr:
      for (const BondExpr &k : e.kids) {
        if (match_bond_expr(k, b))
          return true;
      }
      return false;
    case Op::kPrim:
      break;
    }
    const Bond &bond = mol_.bond(b);
    switch (e.prim) {
    case BondPrim::kSingle:
      return bond.order == BondOrder::kSingle;
    case BondPrim::kDouble:
      return bond.order == BondOrder::kDouble;
    case BondPrim::kTriple:
      return bond.order == BondOrder::kTriple;
    case BondPrim::kAromatic:
      return bond.order == BondOrder::kAromatic;
    case BondPrim::kAny:
      return true;
    case BondPrim::kRing:
      return bond.in_ring;
    case BondPrim::kDefault:
      return bond.order == BondOrder::kSingle || bond.order == BondOrder::kAromatic;
    }
    return false;
  }

  bool try_atom(int qi, int a) {
    if (used_[a] || !match_atom_expr(p_.atoms[qi], t_, a))
      return false;
    for (int qb : p_.back_bonds[qi]) {
      const QueryBond &bond = p_.bonds[qb];
      const int other = map_[bond.a == qi ? bond.b : bond.a];
      const int b = mol_.find_bond(a, other);
      if (b < 0 || !match_bond_expr(bond.expr, b))
        return false;
    }
    return true;
  }

  // Returns true once enough matches have been collected.
  bool descend(int qi, int a) {
    map_[qi] = a;
    used_[a] = true;
    const bool done = extend(qi + 1);
    used_[a] = false;
    map_[qi] = -1;
    return done;
  }

  bool extend(int qi) {
    if (qi == static_cast<int>(p_.atoms.size()))
      return record();
    const int anchor = p_.anchor_bond[qi];
    if (anchor >= 0) {
      const QueryBond &bond = p_.bonds[anchor];
      const int from = map_[bond.a == qi ? bond.b : bond.a];
      for (const Neighbor &nb : mol_.neighbors(from)) {
        if (!match_bond_expr(bond.expr, nb.bond) || !try_atom(qi, nb.atom))
          continue;
        if (descend(qi, nb.atom))
          return true;
      }
      return false;
    }
    if (qi == 0 && fixed_root_ >= 0)
      return try_atom(qi, fixed_root_) && descend(qi, fixed_root_);
    for (int a = 0; a < mol_.num_atoms(); ++a) {
      if (try_atom(qi, a) && descend(qi, a))
        return true;
    }
    return false;
  }

  bool record() {
    if (opts_.unique) {
      std::vector<int> key = map_;
      std::sort(key.begin(), key.end());
      if (!seen_.insert(std::move(key)).second)
        return false;
    }
    results_.push_back(map_);
    return opts_.max_matches != 0 && results_.size() >= opts_.max_matches;
  }

  const Pattern &p_;
  const SmartsTarget &t_;
  const Molecule &mol_;
  MatchOptions opts_;
  int fixed_root_;
  std::vector<int> map_;
  std::vector<bool> used_;
  std::set<std::vector<int>> seen_;
  std::vector<std::vector<int>> results_;
};

std::vector<std::vector<int>> find_matches(const SmartsPattern &pattern,
                                           const SmartsTarget &target,
                                           const MatchOptions &opts) {
  return SmartsMatcher(SmartsMatcher::compiled(pattern), target, opts, -1).run();
}

bool has_match(const SmartsPattern &pattern, const SmartsTarget &target) {
  return !find_matches(pattern, target, MatchOptions{false, 1}).empty();
}

int count_matches(const SmartsPattern &pattern, const SmartsTarget &target) {
  return static_cast<int>(find_matches(pattern, target).size());
}

std::vector<SmartsPattern> load_smarts_file(const std::string &path) {
  std::ifstream in(path);
  if (!in)
    throw std::runtime_error("cannot read SMARTS file " + path);
  std::vector<SmartsPattern> out;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    while (!line.empty() && std::isspace(static_cast<unsigned char>(line.back())))
      line.pop_back();
    const auto first = line.find_first_not_of(" \t");
    if (first == std::string::npos || line[first] == '#')
      continue;
    const auto end = line.find_first_of(" \t", first);
    const std::string text = line.substr(first, end == std::string::npos ? end : end - first);
    try {
      out.emplace_back(text);
    } catch (const SmartsError &e) {
      throw std::runtime_error(path + ":" + std::to_string(lineno) + ": " + e.what());
    }
  }
  return out;
}

}  // namespace mgb
