//
// Copyright 2026 moltok contributors
// SPDX-License-Identifier: Apache-2.0
//

#ifndef MOLTOK_RINGS_HPP
#define MOLTOK_RINGS_HPP

#include <vector>

#include "moltok/mol_graph.hpp"

namespace moltok {

struct RingPerception {
  std::vector<int> ring_bonds;  // sorted bond indices lying on some cycle
  std::vector<int> ring_atoms;  // sorted endpoints of ring bonds
  std::vector<char> bond_in_ring;
  std::vector<char> atom_in_ring;
};

// Cycle membership by bridge finding: a bond is a ring bond iff it is not
// a bridge, i.e. removing it leaves its endpoints connected.
RingPerception perceive_rings(const MolGraph& mol);

}  // namespace moltok

#endif  // MOLTOK_RINGS_HPP
