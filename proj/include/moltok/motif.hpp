//
// Copyright 2026 moltok contributors
// SPDX-License-Identifier: Apache-2.0
//

#ifndef MOLTOK_MOTIF_HPP
#define MOLTOK_MOTIF_HPP

#include <string>
#include <vector>

#include "moltok/diagnostics.hpp"
#include "moltok/mol_graph.hpp"

namespace moltok {

// A connected fragment plus its ordered attachment slots. Slots are
// embedded in the fragment graph as "*" placeholder atoms whose map
// field holds the slot number. Slot 0 binds to the parent motif when the
// motif is not the first token of a sequence; remaining slots bind
// children in ascending order.
struct Motif {
  MolGraph graph;
  bool height_zero = false;  // true for the tree root

  int slot_count() const;
  int atom_count() const;  // real atoms only

  // Placeholder atom index per slot, indexed by slot number.
  std::vector<int> slot_atoms() const;
  // (anchor atom index inside graph, cut-bond order) per slot.
  std::vector<std::pair<int, BondOrder>> attachment_slots() const;
};

struct MotifTreeEdge {
  int parent = -1;
  int parent_slot = -1;  // index into the parent's slot list
  int child = -1;
  BondOrder order = BondOrder::Single;
};

struct MotifTree {
  std::vector<Motif> nodes;  // nodes[0] is the root, DFS preorder
  std::vector<MotifTreeEdge> edges;
  int root = 0;
  std::vector<std::vector<int>> children;  // ordered child node ids
};

enum class TraversalOrder { DFS, BFS };

struct TokenSequence {
  std::vector<Motif> tokens;
  TraversalOrder order = TraversalOrder::DFS;
};

// Splits a molecule at its single non-ring bonds. Motifs are the
// connected components spanned by ring bonds and non-single bonds;
// every untouched atom becomes a singleton motif. The root is the motif
// containing the atom of canonical rank 0; children at each motif are
// ordered by the canonical rank of their attachment atom inside the
// parent, ties broken by the child's subtree token string.
MotifTree fragment(const MolGraph& mol, Diagnostics* diag = nullptr);

// Enumerates motifs in DFS or BFS order from the root; children are
// visited in slot order, so the token list alone determines the tree.
TokenSequence linearize(const MotifTree& tree, TraversalOrder order);

TokenSequence tokenize(const MolGraph& mol, TraversalOrder order,
                       Diagnostics* diag = nullptr);

// Rebuilds a molecule from any token sequence. The first token's slots
// all accept children; every later token joins its slot 0 to the next
// open slot of the active motif. Slots still open at the end are closed
// with hydrogens; tokens left over once no slot is open are dropped with
// a warning. The result is always a valid molecule. Throws
// EmptySequenceError on an empty sequence; nothing else.
MolGraph detokenize(const TokenSequence& seq, Diagnostics* diag = nullptr);

// Canonical self-contained encoding of a motif: the canonical SMILES of
// its fragment graph with slots rendered as [*:n] atoms. Equal keys iff
// the motifs are isomorphic including slot numbering and slot bond
// orders.
std::string canonical_motif_key(const Motif& motif);

// Inverse of canonical_motif_key. Throws FormatError when the key is not
// a well-formed motif encoding.
Motif motif_from_key(const std::string& key);

// Text form: canonical keys joined by single spaces.
std::string sequence_to_line(const TokenSequence& seq);
TokenSequence sequence_from_line(const std::string& line,
                                 TraversalOrder order);

}  // namespace moltok

#endif  // MOLTOK_MOTIF_HPP
