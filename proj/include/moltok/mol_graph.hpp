//
// Copyright 2026 moltok contributors
// SPDX-License-Identifier: Apache-2.0
//

#ifndef MOLTOK_MOL_GRAPH_HPP
#define MOLTOK_MOL_GRAPH_HPP

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "moltok/diagnostics.hpp"

namespace moltok {

// Tetrahedral parity. The handedness is read against the atom's stereo
// reference list (see MolGraph::stereo_reference_list): looking from the
// first entry toward the center, CCW means the remaining entries appear
// counterclockwise. `@` parses to CCW, `@@` to CW.
enum class Chirality : std::uint8_t { None, CCW, CW };

enum class BondOrder : std::uint8_t { Single, Double, Triple, Aromatic };

// Double-bond configuration relative to the bond's stored reference
// neighbors: Z means stereo_ref_a and stereo_ref_b lie on the same side
// of the double bond, E means opposite sides.
enum class BondStereo : std::uint8_t { None, E, Z };

// Sentinel used in stereo reference lists for the implicit first
// substituent (a bound hydrogen, or the lone pair of a 3-coordinate
// chiral center). Never a valid atom index.
constexpr int kImplicitNeighbor = -2;

struct Atom {
  std::string element;
  int formal_charge = 0;
  int isotope = 0;  // mass number, 0 = unspecified
  int hydrogens = 0;  // attached hydrogen count (implicit H are counts, not nodes)
  bool aromatic = false;
  Chirality chirality = Chirality::None;
  // Attachment-slot number for "*" placeholder atoms inside motif
  // subgraphs; -1 everywhere else.
  int map = -1;

  bool is_placeholder() const { return element == "*"; }
};

struct Bond {
  int a = -1;
  int b = -1;
  BondOrder order = BondOrder::Single;
  BondStereo stereo = BondStereo::None;
  int stereo_ref_a = -1;  // neighbor of a; valid atom index when stereo != None
  int stereo_ref_b = -1;  // neighbor of b

  int other(int atom) const { return atom == a ? b : a; }
};

double bond_order_value(BondOrder order);  // single 1, double 2, triple 3, aromatic 1.5
char bond_symbol(BondOrder order);         // '-', '=', '#', ':'

// Attributed molecular graph. Atoms and bonds are stored in insertion
// order; adjacency lists are kept consistent by add_bond. Values are
// immutable in spirit: all toolkit operations take const references and
// build fresh graphs instead of mutating shared state.
class MolGraph {
public:
  int add_atom(Atom atom);
  // Throws InvalidArgumentError on self loops, out-of-range indices or
  // duplicate atom pairs. Returns the new bond index.
  int add_bond(int a, int b, BondOrder order);

  int atom_count() const { return static_cast<int>(atoms_.size()); }
  int bond_count() const { return static_cast<int>(bonds_.size()); }
  bool empty() const { return atoms_.empty(); }

  const Atom& atom(int i) const { return atoms_[static_cast<std::size_t>(i)]; }
  Atom& atom(int i) { return atoms_[static_cast<std::size_t>(i)]; }
  const Bond& bond(int i) const { return bonds_[static_cast<std::size_t>(i)]; }
  Bond& bond(int i) { return bonds_[static_cast<std::size_t>(i)]; }
  const std::vector<Atom>& atoms() const { return atoms_; }
  const std::vector<Bond>& bonds() const { return bonds_; }

  // (neighbor atom index, bond index) pairs in bond insertion order.
  const std::vector<std::pair<int, int>>& neighbors(int atom) const {
    return adjacency_[static_cast<std::size_t>(atom)];
  }
  int degree(int atom) const {
    return static_cast<int>(adjacency_[static_cast<std::size_t>(atom)].size());
  }
  // Bond index between two atoms, or -1.
  int bond_between(int a, int b) const;

  bool connected() const;

  // Structural checks (index ranges, simple graph, stereo reference
  // sanity, element validity, connectivity). Throws InvalidArgumentError
  // on violations; valence excesses are reported to diag only.
  void validate(Diagnostics* diag = nullptr) const;

  // Reports atoms whose bond order sum plus hydrogen count exceeds every
  // standard valence for the element (adjusted by |charge|).
  void report_valence_issues(Diagnostics* diag) const;

  // Rebuilds the graph with atom i renamed to new_index_of[i]
  // (a permutation). Tetrahedral parities are re-normalized so the
  // relabeled graph describes the same stereochemistry.
  MolGraph permuted(const std::vector<int>& new_index_of) const;

  // Ordered substituent list against which Chirality is interpreted:
  // kImplicitNeighbor first when the atom has exactly 3 explicit
  // neighbors, then neighbor indices ascending.
  std::vector<int> stereo_reference_list(int atom) const;

  // True when a tetrahedral parity is representable: 4 explicit
  // neighbors, or 3 explicit neighbors (the implicit H / lone pair
  // occupies the remaining site).
  bool chirality_supported(int atom) const;

  // Number of hydrogens the SMILES organic-subset rule would assign from
  // standard valences given this atom's current bonds. -1 when the atom
  // cannot be written in organic-subset form at all.
  int organic_subset_hydrogens(int atom) const;

private:
  std::vector<Atom> atoms_;
  std::vector<Bond> bonds_;
  std::vector<std::vector<std::pair<int, int>>> adjacency_;
};

// Parity (false = even) of the permutation taking list `from` to list
// `to`; both must hold the same distinct elements.
bool permutation_is_odd(const std::vector<int>& from, const std::vector<int>& to);

// Flips CCW <-> CW.
Chirality flipped(Chirality c);
BondStereo flipped(BondStereo s);

}  // namespace moltok

#endif  // MOLTOK_MOL_GRAPH_HPP
