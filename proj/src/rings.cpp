//
// Copyright 2026 moltok contributors
// SPDX-License-Identifier: Apache-2.0
//

#include "moltok/rings.hpp"

#include <algorithm>

namespace moltok {

namespace {

// Iterative lowlink bridge search (recursion-free for deep chains).
struct Frame {
  int atom;
  int parent_bond;
  std::size_t next;
};

}  // namespace

RingPerception perceive_rings(const MolGraph& mol) {
  int n = mol.atom_count();
  int m = mol.bond_count();
  RingPerception out;
  out.bond_in_ring.assign(static_cast<std::size_t>(m), 0);
  out.atom_in_ring.assign(static_cast<std::size_t>(n), 0);

  std::vector<int> disc(static_cast<std::size_t>(n), -1);
  std::vector<int> low(static_cast<std::size_t>(n), 0);
  std::vector<char> is_bridge(static_cast<std::size_t>(m), 0);
  int timer = 0;

  std::vector<Frame> stack;
  for (int root = 0; root < n; ++root) {
    if (disc[static_cast<std::size_t>(root)] != -1)
      continue;
    stack.push_back({root, -1, 0});
    disc[static_cast<std::size_t>(root)] = low[static_cast<std::size_t>(root)] = timer++;
    while (!stack.empty()) {
      Frame& f = stack.back();
      const auto& adj = mol.neighbors(f.atom);
      if (f.next < adj.size()) {
        auto [v, bond_idx] = adj[f.next++];
        if (bond_idx == f.parent_bond)
          continue;
        if (disc[static_cast<std::size_t>(v)] == -1) {
          disc[static_cast<std::size_t>(v)] = low[static_cast<std::size_t>(v)] = timer++;
          stack.push_back({v, bond_idx, 0});
        } else {
          low[static_cast<std::size_t>(f.atom)] =
              std::min(low[static_cast<std::size_t>(f.atom)],
                       disc[static_cast<std::size_t>(v)]);
        }
      } else {
        stack.pop_back();
        if (!stack.empty()) {
          Frame& p = stack.back();
          low[static_cast<std::size_t>(p.atom)] =
              std::min(low[static_cast<std::size_t>(p.atom)],
                       low[static_cast<std::size_t>(f.atom)]);
          if (low[static_cast<std::size_t>(f.atom)] >
              disc[static_cast<std::size_t>(p.atom)])
            is_bridge[static_cast<std::size_t>(f.parent_bond)] = 1;
        }
      }
    }
  }

  for (int i = 0; i < m; ++i) {
    if (is_bridge[static_cast<std::size_t>(i)])
      continue;
    out.bond_in_ring[static_cast<std::size_t>(i)] = 1;
    out.ring_bonds.push_back(i);
    out.atom_in_ring[static_cast<std::size_t>(mol.bond(i).a)] = 1;
    out.atom_in_ring[static_cast<std::size_t>(mol.bond(i).b)] = 1;
  }
  for (int i = 0; i < n; ++i)
    if (out.atom_in_ring[static_cast<std::size_t>(i)])
      out.ring_atoms.push_back(i);
  return out;
}

}  // namespace moltok
