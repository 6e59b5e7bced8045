//
// Copyright 2026 moltok contributors
// SPDX-License-Identifier: Apache-2.0
//

#include "moltok/mol_graph.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <queue>
#include <sstream>

#include "moltok/elements.hpp"
#include "moltok/errors.hpp"

namespace moltok {

double bond_order_value(BondOrder order) {
  switch (order) {
    case BondOrder::Single: return 1.0;
    case BondOrder::Double: return 2.0;
    case BondOrder::Triple: return 3.0;
    case BondOrder::Aromatic: return 1.5;
  }
  return 1.0;
}

char bond_symbol(BondOrder order) {
  switch (order) {
    case BondOrder::Single: return '-';
    case BondOrder::Double: return '=';
    case BondOrder::Triple: return '#';
    case BondOrder::Aromatic: return ':';
  }
  return '-';
}

Chirality flipped(Chirality c) {
  if (c == Chirality::CCW) return Chirality::CW;
  if (c == Chirality::CW) return Chirality::CCW;
  return c;
}

BondStereo flipped(BondStereo s) {
  if (s == BondStereo::E) return BondStereo::Z;
  if (s == BondStereo::Z) return BondStereo::E;
  return s;
}

int MolGraph::add_atom(Atom atom) {
  atoms_.push_back(std::move(atom));
  adjacency_.emplace_back();
  return atom_count() - 1;
}

int MolGraph::add_bond(int a, int b, BondOrder order) {
  if (a < 0 || b < 0 || a >= atom_count() || b >= atom_count())
    throw InvalidArgumentError("bond endpoint out of range");
  if (a == b)
    throw InvalidArgumentError("self bond on atom " + std::to_string(a));
  if (bond_between(a, b) != -1)
    throw InvalidArgumentError("duplicate bond " + std::to_string(a) + "-" +
                               std::to_string(b));
  Bond bond;
  bond.a = a;
  bond.b = b;
  bond.order = order;
  bonds_.push_back(bond);
  int idx = bond_count() - 1;
  adjacency_[static_cast<std::size_t>(a)].emplace_back(b, idx);
  adjacency_[static_cast<std::size_t>(b)].emplace_back(a, idx);
  return idx;
}

int MolGraph::bond_between(int a, int b) const {
  if (a < 0 || a >= atom_count())
    return -1;
  for (const auto& [nbr, bond_idx] : adjacency_[static_cast<std::size_t>(a)])
    if (nbr == b)
      return bond_idx;
  return -1;
}

bool MolGraph::connected() const {
  if (atoms_.empty())
    return true;
  std::vector<char> seen(atoms_.size(), 0);
  std::queue<int> todo;
  todo.push(0);
  seen[0] = 1;
  int n = 1;
  while (!todo.empty()) {
    int u = todo.front();
    todo.pop();
    for (const auto& [v, bond_idx] : neighbors(u)) {
      (void)bond_idx;
      if (!seen[static_cast<std::size_t>(v)]) {
        seen[static_cast<std::size_t>(v)] = 1;
        ++n;
        todo.push(v);
      }
    }
  }
  return n == atom_count();
}

void MolGraph::validate(Diagnostics* diag) const {
  for (int i = 0; i < atom_count(); ++i) {
    const Atom& a = atom(i);
    if (!a.is_placeholder() && !is_valid_element(a.element))
      throw InvalidArgumentError("unknown element '" + a.element + "'");
    if (a.hydrogens < 0)
      throw InvalidArgumentError("negative hydrogen count on atom " +
                                 std::to_string(i));
    if (a.is_placeholder() && a.map < 0)
      throw InvalidArgumentError("placeholder atom without slot number");
  }
  for (int i = 0; i < bond_count(); ++i) {
    const Bond& b = bond(i);
    if (b.a < 0 || b.b < 0 || b.a >= atom_count() || b.b >= atom_count() ||
        b.a == b.b)
      throw InvalidArgumentError("bond " + std::to_string(i) +
                                 " has invalid endpoints");
    if (b.stereo != BondStereo::None) {
      if (b.order != BondOrder::Double)
        throw InvalidArgumentError("stereo on non-double bond " +
                                   std::to_string(i));
      if (bond_between(b.a, b.stereo_ref_a) == -1 ||
          bond_between(b.b, b.stereo_ref_b) == -1)
        throw InvalidArgumentError("stereo reference is not a neighbor on bond " +
                                   std::to_string(i));
    }
  }
  // duplicate pairs are rejected by add_bond; re-check for graphs built
  // through permuted()/deserialization paths
  for (int i = 0; i < atom_count(); ++i) {
    std::vector<int> nbrs;
    for (const auto& [v, bond_idx] : neighbors(i)) {
      (void)bond_idx;
      nbrs.push_back(v);
    }
    std::sort(nbrs.begin(), nbrs.end());
    if (std::adjacent_find(nbrs.begin(), nbrs.end()) != nbrs.end())
      throw InvalidArgumentError("parallel bonds at atom " + std::to_string(i));
  }
  if (!connected())
    throw InvalidArgumentError("molecule graph is not connected");
  report_valence_issues(diag);
}

void MolGraph::report_valence_issues(Diagnostics* diag) const {
  if (diag == nullptr)
    return;
  for (int i = 0; i < atom_count(); ++i) {
    const Atom& a = atom(i);
    if (a.is_placeholder())
      continue;
    const std::vector<int>& valences = standard_valences(a.element);
    if (valences.empty())
      continue;
    double sum = 0;
    for (const auto& [nbr, bond_idx] : neighbors(i)) {
      (void)nbr;
      sum += bond_order_value(bond(bond_idx).order);
    }
    int total = static_cast<int>(std::ceil(sum - 1e-9)) + a.hydrogens;
    int allowance = valences.back() + std::abs(a.formal_charge);
    if (total > allowance) {
      std::ostringstream msg;
      msg << "atom " << i << " (" << a.element << ") has valence " << total
          << " above standard maximum " << allowance;
      diag->warn(WarningKind::Valence, msg.str());
    }
  }
}

std::vector<int> MolGraph::stereo_reference_list(int atom_idx) const {
  std::vector<int> refs;
  const auto& adj = adjacency_[static_cast<std::size_t>(atom_idx)];
  if (adj.size() == 3)
    refs.push_back(kImplicitNeighbor);
  std::vector<int> nbrs;
  for (const auto& [v, bond_idx] : adj) {
    (void)bond_idx;
    nbrs.push_back(v);
  }
  std::sort(nbrs.begin(), nbrs.end());
  refs.insert(refs.end(), nbrs.begin(), nbrs.end());
  return refs;
}

bool MolGraph::chirality_supported(int atom_idx) const {
  int deg = degree(atom_idx);
  if (deg == 4)
    return atom(atom_idx).hydrogens == 0;
  if (deg == 3)
    return atom(atom_idx).hydrogens <= 1;
  return false;
}

int MolGraph::organic_subset_hydrogens(int atom_idx) const {
  const Atom& a = atom(atom_idx);
  if (!in_organic_subset(a.element))
    return -1;
  if (a.aromatic && !aromatic_symbol_allowed(a.element))
    return -1;
  const std::vector<int>& valences = standard_valences(a.element);
  double sum = 0;
  for (const auto& [nbr, bond_idx] : neighbors(atom_idx)) {
    (void)nbr;
    sum += bond_order_value(bond(bond_idx).order);
  }
  int used = static_cast<int>(std::ceil(sum - 1e-9));
  // aromatic atoms never climb to a higher valence state: thiophene
  // sulfur gets 0 hydrogens, not the 1 that valence-4 sulfur would allow
  if (a.aromatic)
    return std::max(0, valences.front() - used);
  for (int v : valences)
    if (used <= v)
      return v - used;
  return 0;
}

bool permutation_is_odd(const std::vector<int>& from, const std::vector<int>& to) {
  if (from.size() != to.size())
    throw InvalidArgumentError("permutation parity on lists of unequal length");
  // position of each `from` element inside `to`
  std::vector<int> perm(from.size());
  for (std::size_t i = 0; i < from.size(); ++i) {
    auto it = std::find(to.begin(), to.end(), from[i]);
    if (it == to.end())
      throw InvalidArgumentError("permutation parity on mismatched lists");
    perm[i] = static_cast<int>(it - to.begin());
  }
  bool odd = false;
  std::vector<char> seen(perm.size(), 0);
  for (std::size_t i = 0; i < perm.size(); ++i) {
    if (seen[i])
      continue;
    int len = 0;
    int j = static_cast<int>(i);
    while (!seen[static_cast<std::size_t>(j)]) {
      seen[static_cast<std::size_t>(j)] = 1;
      j = perm[static_cast<std::size_t>(j)];
      ++len;
    }
    if (len % 2 == 0)
      odd = !odd;
  }
  return odd;
}

MolGraph MolGraph::permuted(const std::vector<int>& new_index_of) const {
  if (static_cast<int>(new_index_of.size()) != atom_count())
    throw InvalidArgumentError("permutation size mismatch");
  std::vector<int> inverse(new_index_of.size(), -1);
  for (int old = 0; old < atom_count(); ++old) {
    int idx = new_index_of[static_cast<std::size_t>(old)];
    if (idx < 0 || idx >= atom_count() || inverse[static_cast<std::size_t>(idx)] != -1)
      throw InvalidArgumentError("not a permutation");
    inverse[static_cast<std::size_t>(idx)] = old;
  }

  MolGraph out;
  for (int i = 0; i < atom_count(); ++i)
    out.add_atom(atom(inverse[static_cast<std::size_t>(i)]));
  for (const Bond& b : bonds_) {
    int idx = out.add_bond(new_index_of[static_cast<std::size_t>(b.a)],
                           new_index_of[static_cast<std::size_t>(b.b)], b.order);
    Bond& nb = out.bond(idx);
    nb.stereo = b.stereo;
    if (b.stereo != BondStereo::None) {
      nb.stereo_ref_a = new_index_of[static_cast<std::size_t>(b.stereo_ref_a)];
      nb.stereo_ref_b = new_index_of[static_cast<std::size_t>(b.stereo_ref_b)];
    }
  }
  // Tetrahedral parity is stored against the sorted neighbor list, whose
  // order changes under relabeling.
  for (int old = 0; old < atom_count(); ++old) {
    if (atom(old).chirality == Chirality::None)
      continue;
    int ni = new_index_of[static_cast<std::size_t>(old)];
    std::vector<int> old_refs = stereo_reference_list(old);
    std::vector<int> mapped;
    mapped.reserve(old_refs.size());
    for (int r : old_refs)
      mapped.push_back(r == kImplicitNeighbor
                           ? kImplicitNeighbor
                           : new_index_of[static_cast<std::size_t>(r)]);
    std::vector<int> new_refs = out.stereo_reference_list(ni);
    if (permutation_is_odd(mapped, new_refs))
      out.atom(ni).chirality = flipped(out.atom(ni).chirality);
  }
  return out;
}

}  // namespace moltok
