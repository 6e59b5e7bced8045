//
// Copyright 2026 moltok contributors
// SPDX-License-Identifier: Apache-2.0
//

#include "moltok/smiles.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>
#include <vector>

#include "moltok/elements.hpp"
#include "moltok/errors.hpp"

namespace moltok {

namespace {

struct PendingBond {
  bool has_symbol = false;
  BondOrder order = BondOrder::Single;
  int direction = 0;  // +1 for '/', -1 for '\', relative to written order
};

struct RingOpen {
  int atom = -1;
  PendingBond pending;
  std::size_t written_slot = 0;  // placeholder position in the written list
  std::size_t text_pos = 0;
};

// Direction mark resolved onto a finished bond: dir(from_atom -> other).
struct DirMark {
  int bond = -1;
  int from_atom = -1;
  int dir = 0;
};

class Parser {
public:
  Parser(std::string_view text, Diagnostics* diag, const ParseOptions& options)
      : text_(text), diag_(diag), options_(options) {}

  MolGraph run();

private:
  [[noreturn]] void fail(const std::string& message, std::size_t pos) const {
    std::ostringstream os;
    os << "SMILES syntax error at position " << pos << ": " << message;
    throw SyntaxError(os.str());
  }

  bool eof() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }
  char take() { return text_[pos_++]; }

  void parse_atom_token();
  void parse_bracket_atom();
  void parse_ring_closure(int digit_value, std::size_t digit_pos);
  void finish_atom(Atom atom, bool organic_origin, int bracket_h,
                   Chirality parsed_chirality);
  int make_bond(int from, int to, const PendingBond& pending, std::size_t pos);
  void resolve_implicit_hydrogens();
  void resolve_chirality();
  void resolve_double_bond_stereo();

  std::string_view text_;
  Diagnostics* diag_;
  ParseOptions options_;
  std::size_t pos_ = 0;

  MolGraph mol_;
  int prev_ = -1;
  PendingBond pending_;
  std::vector<std::pair<int, int>> branch_stack_;  // (saved prev, atom count)
  std::map<int, RingOpen> open_rings_;
  std::vector<DirMark> dir_marks_;

  // Per-atom bookkeeping for chirality written-order resolution.
  std::vector<std::vector<int>> written_;  // neighbor ids in written order
  std::vector<char> had_prev_;
  std::vector<char> organic_origin_;
  std::vector<int> bracket_h_;
  std::vector<Chirality> parsed_chirality_;
};

int Parser::make_bond(int from, int to, const PendingBond& pending,
                      std::size_t pos) {
  BondOrder order;
  if (pending.has_symbol) {
    order = pending.order;
  } else {
    order = (mol_.atom(from).aromatic && mol_.atom(to).aromatic)
                ? BondOrder::Aromatic
                : BondOrder::Single;
  }
  if (pending.direction != 0 && order != BondOrder::Single)
    fail("directional mark on a non-single bond", pos);
  int idx;
  try {
    idx = mol_.add_bond(from, to, order);
  } catch (const InvalidArgumentError& e) {
    fail(e.what(), pos);
  }
  if (pending.direction != 0)
    dir_marks_.push_back({idx, from, pending.direction});
  return idx;
}

void Parser::finish_atom(Atom atom, bool organic_origin, int bracket_h,
                         Chirality parsed_chirality) {
  int idx = mol_.add_atom(std::move(atom));
  written_.emplace_back();
  had_prev_.push_back(prev_ != -1);
  organic_origin_.push_back(organic_origin);
  bracket_h_.push_back(bracket_h);
  parsed_chirality_.push_back(parsed_chirality);

  if (prev_ != -1) {
    make_bond(prev_, idx, pending_, pos_);
    written_[static_cast<std::size_t>(prev_)].push_back(idx);
    written_[static_cast<std::size_t>(idx)].push_back(prev_);
  }
  pending_ = PendingBond{};
  prev_ = idx;
}

void Parser::parse_bracket_atom() {
  std::size_t start = pos_;
  take();  // '['
  Atom atom;
  int isotope = 0;
  bool has_isotope = false;
  while (!eof() && std::isdigit(static_cast<unsigned char>(peek()))) {
    has_isotope = true;
    isotope = isotope * 10 + (take() - '0');
    if (isotope > 999)
      fail("isotope out of range", start);
  }
  if (eof())
    fail("unterminated bracket atom", start);

  // element symbol: uppercase+optional lowercase, aromatic lowercase, or '*'
  std::string symbol;
  bool aromatic = false;
  char c = peek();
  if (c == '*') {
    take();
    symbol = "*";
  } else if (std::isupper(static_cast<unsigned char>(c))) {
    symbol += take();
    if (!eof() && std::islower(static_cast<unsigned char>(peek()))) {
      std::string two = symbol + peek();
      if (atomic_number(two) > 0) {
        symbol = two;
        take();
      }
    }
    if (atomic_number(symbol) <= 0)
      fail("unknown element '" + symbol + "'", start);
  } else if (std::islower(static_cast<unsigned char>(c))) {
    symbol += static_cast<char>(std::toupper(static_cast<unsigned char>(take())));
    if (!aromatic_symbol_allowed(symbol))
      fail("'" + std::string(1, c) + "' cannot be aromatic", start);
    aromatic = true;
  } else {
    fail("expected element symbol in bracket", pos_);
  }
  if (symbol == "*" && !options_.allow_placeholders)
    fail("wildcard atoms are not supported", start);

  atom.element = symbol;
  atom.aromatic = aromatic;
  atom.isotope = has_isotope ? isotope : 0;

  Chirality chirality = Chirality::None;
  if (!eof() && peek() == '@') {
    take();
    if (!eof() && peek() == '@') {
      take();
      chirality = Chirality::CW;
    } else {
      chirality = Chirality::CCW;
    }
  }

  int hcount = 0;
  if (!eof() && peek() == 'H') {
    take();
    if (!eof() && std::isdigit(static_cast<unsigned char>(peek()))) {
      hcount = 0;
      while (!eof() && std::isdigit(static_cast<unsigned char>(peek())))
        hcount = hcount * 10 + (take() - '0');
    } else {
      hcount = 1;
    }
  }
  atom.hydrogens = hcount;

  if (!eof() && (peek() == '+' || peek() == '-')) {
    char sign_char = take();
    int sign = sign_char == '+' ? 1 : -1;
    int magnitude = 1;
    if (!eof() && std::isdigit(static_cast<unsigned char>(peek()))) {
      magnitude = 0;
      while (!eof() && std::isdigit(static_cast<unsigned char>(peek())))
        magnitude = magnitude * 10 + (take() - '0');
    } else {
      while (!eof() && peek() == sign_char) {
        take();
        ++magnitude;
      }
    }
    atom.formal_charge = sign * magnitude;
  }

  if (!eof() && peek() == ':') {
    if (!options_.allow_placeholders)
      fail("atom maps are not supported", pos_);
    take();
    if (eof() || !std::isdigit(static_cast<unsigned char>(peek())))
      fail("expected digits after ':'", pos_);
    int map = 0;
    while (!eof() && std::isdigit(static_cast<unsigned char>(peek())))
      map = map * 10 + (take() - '0');
    atom.map = map;
  }

  if (eof() || take() != ']')
    fail("unterminated bracket atom", start);

  finish_atom(std::move(atom), /*organic_origin=*/false, hcount, chirality);
}

void Parser::parse_atom_token() {
  std::size_t start = pos_;
  char c = peek();
  if (c == '[') {
    parse_bracket_atom();
    return;
  }
  Atom atom;
  if (std::isupper(static_cast<unsigned char>(c))) {
    std::string symbol(1, take());
    // two-letter organic-subset symbols: Cl, Br
    if (!eof() && ((symbol == "C" && peek() == 'l') || (symbol == "B" && peek() == 'r')))
      symbol += take();
    if (!in_organic_subset(symbol))
      fail("atom '" + symbol + "' must be written in brackets", start);
    atom.element = symbol;
  } else {
    std::string symbol(1, static_cast<char>(std::toupper(static_cast<unsigned char>(take()))));
    if (!aromatic_symbol_allowed(symbol) || !in_organic_subset(symbol))
      fail(std::string("unknown symbol '") + c + "'", start);
    atom.element = symbol;
    atom.aromatic = true;
  }
  finish_atom(std::move(atom), /*organic_origin=*/true, 0, Chirality::None);
}

void Parser::parse_ring_closure(int number, std::size_t digit_pos) {
  if (prev_ == -1)
    fail("ring closure before any atom", digit_pos);
  auto it = open_rings_.find(number);
  if (it == open_rings_.end()) {
    RingOpen open;
    open.atom = prev_;
    open.pending = pending_;
    open.written_slot = written_[static_cast<std::size_t>(prev_)].size();
    open.text_pos = digit_pos;
    written_[static_cast<std::size_t>(prev_)].push_back(-1);
    open_rings_.emplace(number, open);
    pending_ = PendingBond{};
    return;
  }

  RingOpen open = it->second;
  open_rings_.erase(it);
  if (open.atom == prev_)
    fail("ring closure to the same atom", digit_pos);

  PendingBond merged;
  if (open.pending.has_symbol && pending_.has_symbol &&
      open.pending.order != pending_.order)
    fail("conflicting bond orders on ring closure", digit_pos);
  merged = open.pending.has_symbol ? open.pending : pending_;
  // Direction marks: a mark at the opening site reads dir(open->close);
  // one at the closing site reads dir(close->open).
  int dir_open_to_close = 0;
  if (open.pending.direction != 0)
    dir_open_to_close = open.pending.direction;
  if (pending_.direction != 0) {
    int implied = -pending_.direction;
    if (dir_open_to_close != 0 && implied != dir_open_to_close)
      fail("conflicting directional marks on ring closure", digit_pos);
    dir_open_to_close = implied;
  }
  merged.direction = dir_open_to_close;

  int bond = make_bond(open.atom, prev_, merged, digit_pos);
  (void)bond;
  written_[static_cast<std::size_t>(open.atom)][open.written_slot] = prev_;
  written_[static_cast<std::size_t>(prev_)].push_back(open.atom);
  pending_ = PendingBond{};
}

void Parser::resolve_implicit_hydrogens() {
  for (int i = 0; i < mol_.atom_count(); ++i) {
    if (!organic_origin_[static_cast<std::size_t>(i)])
      continue;
    int h = mol_.organic_subset_hydrogens(i);
    mol_.atom(i).hydrogens = h < 0 ? 0 : h;
  }
}

void Parser::resolve_chirality() {
  for (int i = 0; i < mol_.atom_count(); ++i) {
    Chirality parsed = parsed_chirality_[static_cast<std::size_t>(i)];
    if (parsed == Chirality::None)
      continue;
    if (!mol_.chirality_supported(i)) {
      warn(diag_, WarningKind::DroppedChirality,
           "chirality dropped on atom " + std::to_string(i) +
               ": not a tetrahedral center");
      continue;
    }
    std::vector<int> written = written_[static_cast<std::size_t>(i)];
    if (mol_.degree(i) == 3) {
      // The implicit H (or lone pair) sits where it was written: right
      // after the preceding atom, or first if the atom opened the string.
      std::size_t at = had_prev_[static_cast<std::size_t>(i)] ? 1 : 0;
      written.insert(written.begin() + static_cast<std::ptrdiff_t>(at),
                     kImplicitNeighbor);
    }
    std::vector<int> storage = mol_.stereo_reference_list(i);
    if (written.size() != storage.size() || written.size() != 4) {
      warn(diag_, WarningKind::DroppedChirality,
           "chirality dropped on atom " + std::to_string(i) +
               ": unsupported neighbor arrangement");
      continue;
    }
    mol_.atom(i).chirality =
        permutation_is_odd(written, storage) ? flipped(parsed) : parsed;
  }
}

void Parser::resolve_double_bond_stereo() {
  // dir(atom -> neighbor) per directional mark
  auto directions_at = [&](int atom, int partner) {
    std::vector<std::pair<int, int>> out;  // (neighbor, dir atom->neighbor)
    for (const DirMark& m : dir_marks_) {
      const Bond& b = mol_.bond(m.bond);
      if (b.a != atom && b.b != atom)
        continue;
      int other = b.other(atom);
      if (other == partner)
        continue;
      int dir = (m.from_atom == atom) ? m.dir : -m.dir;
      out.emplace_back(other, dir);
    }
    std::sort(out.begin(), out.end());
    return out;
  };

  for (int i = 0; i < mol_.bond_count(); ++i) {
    Bond& bond = mol_.bond(i);
    if (bond.order != BondOrder::Double)
      continue;
    auto side_a = directions_at(bond.a, bond.b);
    auto side_b = directions_at(bond.b, bond.a);
    if (side_a.empty() || side_b.empty()) {
      if (!side_a.empty() || !side_b.empty())
        warn(diag_, WarningKind::DroppedStereo,
             "directional mark on only one side of bond " + std::to_string(i));
      continue;
    }
    for (const auto& side : {side_a, side_b}) {
      if (side.size() == 2 && side[0].second == side[1].second)
        throw SyntaxError("conflicting directional marks around a double bond");
    }
    bond.stereo = (side_a[0].second == side_b[0].second) ? BondStereo::Z
                                                         : BondStereo::E;
    bond.stereo_ref_a = side_a[0].first;
    bond.stereo_ref_b = side_b[0].first;
  }
}

MolGraph Parser::run() {
  while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
    ++pos_;
  std::size_t end = text_.size();
  while (end > pos_ && std::isspace(static_cast<unsigned char>(text_[end - 1])))
    --end;
  text_ = text_.substr(0, end);
  if (pos_ >= text_.size())
    throw SyntaxError("empty SMILES input");

  while (!eof()) {
    char c = peek();
    if (c == '.') {
      throw MultiComponentError(
          "multi-component SMILES ('.') is not supported");
    } else if (c == '(') {
      take();
      if (prev_ == -1)
        fail("branch before any atom", pos_ - 1);
      branch_stack_.emplace_back(prev_, mol_.atom_count());
    } else if (c == ')') {
      take();
      if (branch_stack_.empty())
        fail("unbalanced ')'", pos_ - 1);
      if (pending_.has_symbol || pending_.direction != 0)
        fail("dangling bond before ')'", pos_ - 1);
      if (mol_.atom_count() == branch_stack_.back().second)
        fail("empty branch", pos_ - 1);
      prev_ = branch_stack_.back().first;
      branch_stack_.pop_back();
    } else if (c == '-' || c == '=' || c == '#' || c == ':' || c == '/' ||
               c == '\\') {
      if (pending_.has_symbol || pending_.direction != 0)
        fail("two bond symbols in a row", pos_);
      take();
      pending_.has_symbol = true;
      switch (c) {
        case '-': pending_.order = BondOrder::Single; break;
        case '=': pending_.order = BondOrder::Double; break;
        case '#': pending_.order = BondOrder::Triple; break;
        case ':': pending_.order = BondOrder::Aromatic; break;
        case '/':
          pending_.order = BondOrder::Single;
          pending_.direction = 1;
          break;
        case '\\':
          pending_.order = BondOrder::Single;
          pending_.direction = -1;
          break;
      }
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t at = pos_;
      parse_ring_closure(take() - '0', at);
    } else if (c == '%') {
      std::size_t at = pos_;
      take();
      if (pos_ + 1 >= text_.size() + 0 ||
          eof() || !std::isdigit(static_cast<unsigned char>(text_[pos_])) ||
          pos_ + 1 >= text_.size() ||
          !std::isdigit(static_cast<unsigned char>(text_[pos_ + 1])))
        fail("'%' must be followed by two digits", at);
      int number = (take() - '0') * 10;
      number += take() - '0';
      parse_ring_closure(number, at);
    } else if (c == '[' || std::isalpha(static_cast<unsigned char>(c)) ||
               c == '*') {
      if (c == '*')
        fail("wildcard atoms are not supported", pos_);
      parse_atom_token();
    } else {
      fail(std::string("unknown symbol '") + c + "'", pos_);
    }
  }

  if (!branch_stack_.empty())
    throw SyntaxError("unbalanced '(': branch never closed");
  if (!open_rings_.empty()) {
    std::ostringstream os;
    os << "dangling ring closure " << open_rings_.begin()->first;
    throw SyntaxError(os.str());
  }
  if (pending_.has_symbol || pending_.direction != 0)
    throw SyntaxError("dangling bond at end of input");
  if (mol_.empty())
    throw SyntaxError("no atoms in SMILES input");

  resolve_implicit_hydrogens();
  resolve_chirality();
  resolve_double_bond_stereo();
  mol_.report_valence_issues(diag_);
  return mol_;
}

}  // namespace

MolGraph parse_smiles(std::string_view text, Diagnostics* diag,
                      const ParseOptions& options) {
  Parser parser(text, diag, options);
  return parser.run();
}

}  // namespace moltok
