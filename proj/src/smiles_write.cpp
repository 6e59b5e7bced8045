//
// Copyright 2026 moltok contributors
// SPDX-License-Identifier: Apache-2.0
//

#include <algorithm>
#include <map>
#include <optional>
#include <queue>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "moltok/canonical.hpp"
#include "moltok/elements.hpp"
#include "moltok/errors.hpp"
#include "moltok/mol_graph.hpp"

namespace moltok {

namespace {

struct Closure {
  int open_atom = -1;   // endpoint written first
  int close_atom = -1;
  int bond = -1;
  int digit = -1;
};

// Orientation constraint solver for directional single bonds. A variable
// per bond holds dir(bond.a -> bond.b) in {+1,-1}; stereo double bonds
// relate the variables of their two reference single bonds. Weighted
// union-find over {+1,-1}; every component root is pinned to +1, which
// makes the assignment deterministic given the constraint order.
class DirectionSolver {
public:
  // Requires value(x) * value(y) == product. Returns false when this
  // contradicts earlier constraints.
  bool relate(int x, int y, int product) {
    auto [rx, sx] = find(x);
    auto [ry, sy] = find(y);
    if (rx == ry)
      return sx * sy == product;
    parent_[ry] = rx;
    rel_[ry] = product * sx * sy;
    return true;
  }

  int component(int x) { return find(x).first; }
  int sign_to_root(int x) { return find(x).second; }

private:
  // (component root, sign of x relative to the root)
  std::pair<int, int> find(int x) {
    if (!parent_.count(x)) {
      parent_[x] = x;
      rel_[x] = 1;
    }
    if (parent_[x] == x)
      return {x, 1};
    auto [root, sign] = find(parent_[x]);
    parent_[x] = root;
    rel_[x] *= sign;
    return {root, rel_[x]};
  }

  std::map<int, int> parent_;
  std::map<int, int> rel_;  // sign relative to parent
};

struct StereoPlan {
  BondStereo label = BondStereo::None;
  int ref_a = -1;
  int ref_b = -1;
};

class Writer {
public:
  Writer(const MolGraph& mol, const std::vector<int>& ranks, Diagnostics* diag)
      : mol_(mol), ranks_(ranks), diag_(diag) {}

  std::string run();

private:
  void build_tree();
  void assign_digits();
  void plan_stereo();
  void emit();
  void emit_atom_block(int u);
  std::string atom_token(int u) const;
  std::string bond_text(int bond, int written_first) const;
  std::vector<int> written_order(int u) const;

  const MolGraph& mol_;
  const std::vector<int>& ranks_;
  Diagnostics* diag_;

  int root_ = -1;
  std::vector<int> parent_, parent_bond_, preorder_;
  std::vector<int> order_;  // atoms in preorder
  std::vector<std::vector<int>> children_;
  std::vector<Closure> closures_;
  std::vector<std::vector<int>> closings_at_, openings_at_;  // closure ids per atom
  std::map<int, StereoPlan> stereo_plans_;    // by bond index
  std::map<int, int> bond_direction_;         // bond -> dir(a->b)
  std::string out_;
};

void Writer::build_tree() {
  int n = mol_.atom_count();
  parent_.assign(static_cast<std::size_t>(n), -1);
  parent_bond_.assign(static_cast<std::size_t>(n), -1);
  preorder_.assign(static_cast<std::size_t>(n), -1);
  children_.assign(static_cast<std::size_t>(n), {});
  closings_at_.assign(static_cast<std::size_t>(n), {});
  openings_at_.assign(static_cast<std::size_t>(n), {});

  for (int i = 0; i < n; ++i)
    if (ranks_[static_cast<std::size_t>(i)] == 0)
      root_ = i;
  if (root_ == -1)
    throw InvalidArgumentError("ranks are not a permutation");

  // adjacency sorted by rank for deterministic traversal
  auto sorted_neighbors = [&](int u) {
    std::vector<std::pair<int, int>> adj = mol_.neighbors(u);
    std::sort(adj.begin(), adj.end(), [&](const auto& x, const auto& y) {
      return ranks_[static_cast<std::size_t>(x.first)] <
             ranks_[static_cast<std::size_t>(y.first)];
    });
    return adj;
  };

  std::set<int> closure_bonds;
  struct Frame {
    int atom;
    std::vector<std::pair<int, int>> adj;
    std::size_t next = 0;
  };
  std::vector<Frame> stack;
  int counter = 0;
  preorder_[static_cast<std::size_t>(root_)] = counter++;
  order_.push_back(root_);
  stack.push_back({root_, sorted_neighbors(root_)});
  while (!stack.empty()) {
    Frame& f = stack.back();
    if (f.next >= f.adj.size()) {
      stack.pop_back();
      continue;
    }
    auto [v, bond] = f.adj[f.next++];
    if (bond == parent_bond_[static_cast<std::size_t>(f.atom)])
      continue;
    if (preorder_[static_cast<std::size_t>(v)] == -1) {
      parent_[static_cast<std::size_t>(v)] = f.atom;
      parent_bond_[static_cast<std::size_t>(v)] = bond;
      preorder_[static_cast<std::size_t>(v)] = counter++;
      order_.push_back(v);
      children_[static_cast<std::size_t>(f.atom)].push_back(v);
      stack.push_back({v, sorted_neighbors(v)});
    } else if (closure_bonds.insert(bond).second) {
      Closure c;
      c.bond = bond;
      int u = f.atom;
      if (preorder_[static_cast<std::size_t>(v)] < preorder_[static_cast<std::size_t>(u)]) {
        c.open_atom = v;
        c.close_atom = u;
      } else {
        c.open_atom = u;
        c.close_atom = v;
      }
      closures_.push_back(c);
    }
  }
  if (static_cast<int>(order_.size()) != n)
    throw InvalidArgumentError("molecule graph is not connected");
}

void Writer::assign_digits() {
  // Stable ordering in rank space before simulating digit lifetimes.
  std::vector<int> ids(closures_.size());
  for (std::size_t i = 0; i < ids.size(); ++i)
    ids[i] = static_cast<int>(i);
  std::sort(ids.begin(), ids.end(), [&](int x, int y) {
    const Closure& a = closures_[static_cast<std::size_t>(x)];
    const Closure& b = closures_[static_cast<std::size_t>(y)];
    int pa = preorder_[static_cast<std::size_t>(a.open_atom)];
    int pb = preorder_[static_cast<std::size_t>(b.open_atom)];
    if (pa != pb)
      return pa < pb;
    return preorder_[static_cast<std::size_t>(a.close_atom)] <
           preorder_[static_cast<std::size_t>(b.close_atom)];
  });
  for (int id : ids) {
    const Closure& c = closures_[static_cast<std::size_t>(id)];
    openings_at_[static_cast<std::size_t>(c.open_atom)].push_back(id);
    closings_at_[static_cast<std::size_t>(c.close_atom)].push_back(id);
  }

  std::priority_queue<int, std::vector<int>, std::greater<int>> free_digits;
  for (int d = 1; d <= 99; ++d)
    free_digits.push(d);
  for (int u : order_) {
    for (int id : closings_at_[static_cast<std::size_t>(u)])
      free_digits.push(closures_[static_cast<std::size_t>(id)].digit);
    for (int id : openings_at_[static_cast<std::size_t>(u)]) {
      if (free_digits.empty())
        throw InvalidArgumentError("more than 99 concurrent ring closures");
      closures_[static_cast<std::size_t>(id)].digit = free_digits.top();
      free_digits.pop();
    }
  }
}

void Writer::plan_stereo() {
  // Normalize each stereo double bond to reference neighbors of minimal
  // rank reachable through plain single bonds; flipping a reference
  // flips the side relation.
  std::vector<int> stereo_bonds;
  for (int i = 0; i < mol_.bond_count(); ++i)
    if (mol_.bond(i).stereo != BondStereo::None)
      stereo_bonds.push_back(i);
  std::sort(stereo_bonds.begin(), stereo_bonds.end(), [&](int x, int y) {
    const Bond& a = mol_.bond(x);
    const Bond& b = mol_.bond(y);
    auto key = [&](const Bond& bd) {
      int ra = ranks_[static_cast<std::size_t>(bd.a)];
      int rb = ranks_[static_cast<std::size_t>(bd.b)];
      return std::make_pair(std::min(ra, rb), std::max(ra, rb));
    };
    return key(a) < key(b);
  });

  DirectionSolver solver;
  // Every directional mark adjacent to a stereo double bond constrains
  // that bond, so all marks meeting at such an endpoint must alternate.
  std::map<int, std::vector<int>> marks_at;  // atom -> marked bond indices
  std::set<int> stereo_endpoints;
  auto dir_sign = [&](int bond_idx, int from) {
    return mol_.bond(bond_idx).a == from ? 1 : -1;
  };

  for (int bi : stereo_bonds) {
    const Bond& bond = mol_.bond(bi);
    auto pick_ref = [&](int endpoint, int partner, int stored)
        -> std::optional<std::pair<int, bool>> {
      int best = -1;
      bool stored_ok = false;
      for (const auto& [nbr, nbr_bond] : mol_.neighbors(endpoint)) {
        if (nbr == partner || mol_.bond(nbr_bond).order != BondOrder::Single)
          continue;
        if (nbr == stored)
          stored_ok = true;
        if (best == -1 || ranks_[static_cast<std::size_t>(nbr)] <
                              ranks_[static_cast<std::size_t>(best)])
          best = nbr;
      }
      if (best == -1 || !stored_ok)
        return std::nullopt;
      return std::make_pair(best, best != stored);
    };

    auto ra = pick_ref(bond.a, bond.b, bond.stereo_ref_a);
    auto rb = pick_ref(bond.b, bond.a, bond.stereo_ref_b);
    if (!ra || !rb) {
      warn(diag_, WarningKind::DroppedStereo,
           "double-bond stereo dropped: no single-bonded substituent");
      continue;
    }
    BondStereo label = bond.stereo;
    if (ra->second)
      label = flipped(label);
    if (rb->second)
      label = flipped(label);

    int bond_a_ref = mol_.bond_between(bond.a, ra->first);
    int bond_b_ref = mol_.bond_between(bond.b, rb->first);
    // dir(a->x) = value(bond_ax) * sign, sign +1 when a is the bond's
    // first endpoint
    int sign_a = dir_sign(bond_a_ref, bond.a);
    int sign_b = dir_sign(bond_b_ref, bond.b);

    DirectionSolver saved = solver;
    // Z: dir(a->x) == dir(b->y)
    bool ok = solver.relate(bond_a_ref, bond_b_ref,
                            (label == BondStereo::Z ? 1 : -1) * sign_a * sign_b);
    // two marks meeting at one atom of a stereo bond point opposite ways
    auto oppose_existing = [&](int atom, int new_bond) {
      for (int m : marks_at[atom]) {
        if (m == new_bond || !ok)
          continue;
        ok = solver.relate(new_bond, m,
                           -dir_sign(new_bond, atom) * dir_sign(m, atom));
      }
    };
    oppose_existing(bond.a, bond_a_ref);
    oppose_existing(bond.b, bond_b_ref);
    if (stereo_endpoints.count(ra->first))
      oppose_existing(ra->first, bond_a_ref);
    if (stereo_endpoints.count(rb->first))
      oppose_existing(rb->first, bond_b_ref);
    if (!ok) {
      solver = saved;
      warn(diag_, WarningKind::DroppedStereo,
           "double-bond stereo dropped: conflicting directional constraints");
      continue;
    }
    for (int nb : {bond_a_ref, bond_b_ref}) {
      const Bond& marked = mol_.bond(nb);
      for (int endpoint : {marked.a, marked.b}) {
        auto& list = marks_at[endpoint];
        if (std::find(list.begin(), list.end(), nb) == list.end())
          list.push_back(nb);
      }
    }
    stereo_endpoints.insert(bond.a);
    stereo_endpoints.insert(bond.b);
    StereoPlan plan;
    plan.label = label;
    plan.ref_a = ra->first;
    plan.ref_b = rb->first;
    stereo_plans_[bi] = plan;
  }
  // Assign orientations per constraint component, seeded in rank space
  // so isomorphic graphs emit identical marks: the component's bond with
  // the smallest rank pair points "up" from its lower-rank endpoint.
  std::map<int, std::vector<int>> marked_by_component;
  for (const auto& [bi, plan] : stereo_plans_) {
    const Bond& bond = mol_.bond(bi);
    int bond_a_ref = mol_.bond_between(bond.a, plan.ref_a);
    int bond_b_ref = mol_.bond_between(bond.b, plan.ref_b);
    marked_by_component[solver.component(bond_a_ref)].push_back(bond_a_ref);
    marked_by_component[solver.component(bond_b_ref)].push_back(bond_b_ref);
  }
  auto rank_key = [&](int bond_idx) {
    int ra = ranks_[static_cast<std::size_t>(mol_.bond(bond_idx).a)];
    int rb = ranks_[static_cast<std::size_t>(mol_.bond(bond_idx).b)];
    return std::make_pair(std::min(ra, rb), std::max(ra, rb));
  };
  for (auto& [root, members] : marked_by_component) {
    (void)root;
    int seed = *std::min_element(
        members.begin(), members.end(),
        [&](int x, int y) { return rank_key(x) < rank_key(y); });
    const Bond& sb = mol_.bond(seed);
    int seed_dir = ranks_[static_cast<std::size_t>(sb.a)] <
                           ranks_[static_cast<std::size_t>(sb.b)]
                       ? 1
                       : -1;
    int factor = seed_dir * solver.sign_to_root(seed);
    for (int b : members)
      bond_direction_[b] = factor * solver.sign_to_root(b);
  }
}

// Neighbors of u in the order the output text presents them; mirrors the
// parser's written-order accounting for chirality.
std::vector<int> Writer::written_order(int u) const {
  std::vector<int> written;
  if (parent_[static_cast<std::size_t>(u)] != -1)
    written.push_back(parent_[static_cast<std::size_t>(u)]);
  if (mol_.degree(u) == 3)
    written.insert(written.begin() + (written.empty() ? 0 : 1),
                   kImplicitNeighbor);
  for (int id : closings_at_[static_cast<std::size_t>(u)])
    written.push_back(closures_[static_cast<std::size_t>(id)].open_atom);
  for (int id : openings_at_[static_cast<std::size_t>(u)])
    written.push_back(closures_[static_cast<std::size_t>(id)].close_atom);
  for (int child : children_[static_cast<std::size_t>(u)])
    written.push_back(child);
  return written;
}

std::string Writer::atom_token(int u) const {
  const Atom& a = mol_.atom(u);
  bool emit_chirality = false;
  Chirality symbol = Chirality::None;
  if (a.chirality != Chirality::None) {
    if (mol_.chirality_supported(u)) {
      emit_chirality = true;
      symbol = a.chirality;
      std::vector<int> written = written_order(u);
      std::vector<int> storage = mol_.stereo_reference_list(u);
      if (permutation_is_odd(storage, written))
        symbol = flipped(symbol);
    } else {
      warn(diag_, WarningKind::DroppedChirality,
           "chirality dropped on write: atom is not a tetrahedral center");
    }
  }

  std::string element = a.element;
  if (a.aromatic)
    std::transform(element.begin(), element.end(), element.begin(),
                   [](unsigned char ch) { return std::tolower(ch); });

  bool bracket = a.is_placeholder() || a.map >= 0 || a.isotope != 0 ||
                 a.formal_charge != 0 || emit_chirality ||
                 !in_organic_subset(a.element) ||
                 (a.aromatic && !aromatic_symbol_allowed(a.element)) ||
                 mol_.organic_subset_hydrogens(u) != a.hydrogens;
  if (!bracket)
    return element;

  std::ostringstream os;
  os << '[';
  if (a.isotope != 0)
    os << a.isotope;
  os << element;
  if (emit_chirality)
    os << (symbol == Chirality::CCW ? "@" : "@@");
  if (a.hydrogens > 0) {
    os << 'H';
    if (a.hydrogens > 1)
      os << a.hydrogens;
  }
  if (a.formal_charge != 0) {
    os << (a.formal_charge > 0 ? '+' : '-');
    int magnitude = std::abs(a.formal_charge);
    if (magnitude > 1)
      os << magnitude;
  }
  if (a.map >= 0)
    os << ':' << a.map;
  os << ']';
  return os.str();
}

// Bond text as written with `written_first` preceding the partner.
std::string Writer::bond_text(int bond_idx, int written_first) const {
  const Bond& b = mol_.bond(bond_idx);
  auto dir_it = bond_direction_.find(bond_idx);
  switch (b.order) {
    case BondOrder::Single: {
      if (dir_it != bond_direction_.end()) {
        int dir = dir_it->second;  // dir(a->b)
        if (written_first != b.a)
          dir = -dir;
        return dir > 0 ? "/" : "\\";
      }
      if (mol_.atom(b.a).aromatic && mol_.atom(b.b).aromatic)
        return "-";
      return "";
    }
    case BondOrder::Double:
      return "=";
    case BondOrder::Triple:
      return "#";
    case BondOrder::Aromatic:
      if (mol_.atom(b.a).aromatic && mol_.atom(b.b).aromatic)
        return "";
      return ":";
  }
  return "";
}

void Writer::emit_atom_block(int u) {
  out_ += atom_token(u);
  for (int id : closings_at_[static_cast<std::size_t>(u)]) {
    const Closure& c = closures_[static_cast<std::size_t>(id)];
    if (c.digit > 9)
      out_ += '%';
    out_ += std::to_string(c.digit);
  }
  for (int id : openings_at_[static_cast<std::size_t>(u)]) {
    const Closure& c = closures_[static_cast<std::size_t>(id)];
    out_ += bond_text(c.bond, c.open_atom);
    if (c.digit > 9)
      out_ += '%';
    out_ += std::to_string(c.digit);
  }
}

void Writer::emit() {
  struct Frame {
    int atom;
    std::size_t next_child = 0;
    bool wrapped = false;
  };
  std::vector<Frame> stack;
  emit_atom_block(root_);
  stack.push_back({root_, 0, false});
  while (!stack.empty()) {
    Frame& f = stack.back();
    const std::vector<int>& kids = children_[static_cast<std::size_t>(f.atom)];
    if (f.next_child >= kids.size()) {
      if (f.wrapped)
        out_ += ')';
      stack.pop_back();
      continue;
    }
    int child = kids[f.next_child];
    bool wrap = f.next_child + 1 < kids.size();
    ++f.next_child;
    if (wrap)
      out_ += '(';
    out_ += bond_text(parent_bond_[static_cast<std::size_t>(child)], f.atom);
    emit_atom_block(child);
    stack.push_back({child, 0, wrap});
  }
}

std::string Writer::run() {
  if (mol_.empty())
    throw InvalidArgumentError("cannot write an empty molecule");
  if (static_cast<int>(ranks_.size()) != mol_.atom_count())
    throw InvalidArgumentError("rank vector size mismatch");
  build_tree();
  assign_digits();
  plan_stereo();
  emit();
  return out_;
}

}  // namespace

std::string write_smiles_with_ranks(const MolGraph& mol,
                                    const std::vector<int>& ranks,
                                    Diagnostics* diag) {
  Writer writer(mol, ranks, diag);
  return writer.run();
}

}  // namespace moltok
