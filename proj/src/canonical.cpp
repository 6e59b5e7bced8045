//
// Copyright 2026 moltok contributors
// SPDX-License-Identifier: Apache-2.0
//

#include "moltok/canonical.hpp"

#include <algorithm>
#include <optional>
#include <set>
#include <vector>

#include "moltok/elements.hpp"
#include "moltok/errors.hpp"

namespace moltok {

namespace {

using Key = std::vector<long long>;

int bond_code(BondOrder order) {
  switch (order) {
    case BondOrder::Single: return 1;
    case BondOrder::Double: return 2;
    case BondOrder::Triple: return 3;
    case BondOrder::Aromatic: return 4;
  }
  return 0;
}

// Relabeling-invariant atom attributes. Parity VALUES are deliberately
// excluded: they are stored relative to atom numbering and only become
// comparable once a canonical order exists (the writer normalizes
// them). Their PRESENCE is labeling-independent and sharpens the
// partition.
Key initial_key(const MolGraph& mol, int atom_idx) {
  const Atom& a = mol.atom(atom_idx);
  return {atomic_number(a.element),
          a.formal_charge,
          a.isotope,
          a.hydrogens,
          a.aromatic ? 1 : 0,
          a.map,
          mol.degree(atom_idx),
          a.chirality != Chirality::None ? 1 : 0};
}

std::vector<int> densify(const std::vector<Key>& keys) {
  std::vector<Key> sorted = keys;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  std::vector<int> ranks(keys.size());
  for (std::size_t i = 0; i < keys.size(); ++i)
    ranks[i] = static_cast<int>(
        std::lower_bound(sorted.begin(), sorted.end(), keys[i]) -
        sorted.begin());
  return ranks;
}

int cell_count(const std::vector<int>& ranks) {
  return ranks.empty() ? 0 : *std::max_element(ranks.begin(), ranks.end()) + 1;
}

Key neighborhood_key(const MolGraph& mol, const std::vector<int>& ranks,
                     int atom_idx) {
  Key key{ranks[static_cast<std::size_t>(atom_idx)]};
  std::vector<std::pair<int, int>> pairs;
  for (const auto& [nbr, bond_idx] : mol.neighbors(atom_idx)) {
    const Bond& b = mol.bond(bond_idx);
    pairs.emplace_back(2 * bond_code(b.order) +
                           (b.stereo != BondStereo::None ? 1 : 0),
                       ranks[static_cast<std::size_t>(nbr)]);
  }
  std::sort(pairs.begin(), pairs.end());
  for (const auto& [code, rank] : pairs) {
    key.push_back(code);
    key.push_back(rank);
  }
  return key;
}

// Iterative neighborhood refinement to a stable partition. Cells only
// ever split, so the loop terminates within atom_count rounds.
std::vector<int> refine(const MolGraph& mol, std::vector<int> ranks) {
  int cells = cell_count(ranks);
  for (;;) {
    std::vector<Key> keys(static_cast<std::size_t>(mol.atom_count()));
    for (int i = 0; i < mol.atom_count(); ++i)
      keys[static_cast<std::size_t>(i)] = neighborhood_key(mol, ranks, i);
    std::vector<int> next = densify(keys);
    int next_cells = cell_count(next);
    ranks = std::move(next);
    if (next_cells == cells)
      return ranks;
    cells = next_cells;
  }
}

// Identity of a stable partition that does not depend on atom numbering;
// used to explore only one branch per equivalent individualization.
Key partition_signature(const MolGraph& mol, const std::vector<int>& ranks) {
  int cells = cell_count(ranks);
  std::vector<int> representative(static_cast<std::size_t>(cells), -1);
  std::vector<int> size(static_cast<std::size_t>(cells), 0);
  for (int i = 0; i < mol.atom_count(); ++i) {
    int r = ranks[static_cast<std::size_t>(i)];
    ++size[static_cast<std::size_t>(r)];
    if (representative[static_cast<std::size_t>(r)] == -1)
      representative[static_cast<std::size_t>(r)] = i;
  }
  Key sig;
  for (int r = 0; r < cells; ++r) {
    int rep = representative[static_cast<std::size_t>(r)];
    sig.push_back(size[static_cast<std::size_t>(r)]);
    Key init = initial_key(mol, rep);
    sig.insert(sig.end(), init.begin(), init.end());
    Key nbh = neighborhood_key(mol, ranks, rep);
    sig.push_back(static_cast<long long>(nbh.size()));
    sig.insert(sig.end(), nbh.begin(), nbh.end());
  }
  return sig;
}

class Search {
public:
  explicit Search(const MolGraph& mol) : mol_(mol) {
    // Branch dedupe compares refinement signatures, which are blind to
    // parity values; with stereo present, signature-equal branches can
    // still differ stereochemically, so all of them are explored.
    for (const Atom& a : mol.atoms())
      if (a.chirality != Chirality::None)
        prune_equivalent_branches_ = false;
    for (const Bond& b : mol.bonds())
      if (b.stereo != BondStereo::None)
        prune_equivalent_branches_ = false;
  }

  CanonicalResult run() {
    std::vector<Key> keys(static_cast<std::size_t>(mol_.atom_count()));
    for (int i = 0; i < mol_.atom_count(); ++i)
      keys[static_cast<std::size_t>(i)] = initial_key(mol_, i);
    descend(refine(mol_, densify(keys)));
    return {*best_smiles_, best_ranks_};
  }

private:
  void descend(const std::vector<int>& ranks) {
    int cells = cell_count(ranks);
    if (cells == mol_.atom_count()) {
      std::string smiles = write_smiles_with_ranks(mol_, ranks, nullptr);
      if (!best_smiles_ || smiles < *best_smiles_) {
        best_smiles_ = std::move(smiles);
        best_ranks_ = ranks;
      }
      return;
    }
    // first cell with more than one member
    std::vector<int> counts(static_cast<std::size_t>(cells), 0);
    for (int r : ranks)
      ++counts[static_cast<std::size_t>(r)];
    int target = 0;
    while (counts[static_cast<std::size_t>(target)] < 2)
      ++target;

    std::set<Key> seen;
    for (int atom = 0; atom < mol_.atom_count(); ++atom) {
      if (ranks[static_cast<std::size_t>(atom)] != target)
        continue;
      std::vector<Key> keys(static_cast<std::size_t>(mol_.atom_count()));
      for (int i = 0; i < mol_.atom_count(); ++i)
        keys[static_cast<std::size_t>(i)] = {
            2LL * ranks[static_cast<std::size_t>(i)] + (i == atom ? 0 : 1)};
      std::vector<int> refined = refine(mol_, densify(keys));
      if (!prune_equivalent_branches_ ||
          seen.insert(partition_signature(mol_, refined)).second)
        descend(refined);
    }
  }

  const MolGraph& mol_;
  bool prune_equivalent_branches_ = true;
  std::optional<std::string> best_smiles_;
  std::vector<int> best_ranks_;
};

}  // namespace

// Parities are only meaningful when the substituent positions they
// order are well-defined and distinguishable: a planar aromatic atom has
// no tetrahedral handedness, an sp2-like double bond has at most two
// substituents per side, and an automorphism swapping two equivalent
// neighbors would flip the emitted symbol. Annotations failing these
// tests are erased against the stable refinement partition, which is
// itself relabeling-invariant, so e.g. [C@](C)(C)(C)C and C(C)(C)(C)C
// are the same molecule. Erasing one parity can render another
// degenerate (its presence was the only thing telling two branches
// apart), so the scan repeats until nothing changes.
MolGraph normalize_stereo(const MolGraph& mol) {
  MolGraph out = mol;
  bool changed = true;
  while (changed) {
    changed = false;
    std::vector<Key> keys(static_cast<std::size_t>(out.atom_count()));
    for (int i = 0; i < out.atom_count(); ++i)
      keys[static_cast<std::size_t>(i)] = initial_key(out, i);
    std::vector<int> stable = refine(out, densify(keys));

    for (int i = 0; i < out.atom_count(); ++i) {
      if (out.atom(i).chirality == Chirality::None)
        continue;
      if (out.atom(i).aromatic || !out.chirality_supported(i)) {
        out.atom(i).chirality = Chirality::None;
        changed = true;
        continue;
      }
      std::vector<int> cells;
      for (const auto& [nbr, bond_idx] : out.neighbors(i)) {
        (void)bond_idx;
        cells.push_back(stable[static_cast<std::size_t>(nbr)]);
      }
      std::sort(cells.begin(), cells.end());
      if (std::adjacent_find(cells.begin(), cells.end()) != cells.end()) {
        out.atom(i).chirality = Chirality::None;
        changed = true;
      }
    }
    for (int b = 0; b < out.bond_count(); ++b) {
      Bond& bond = out.bond(b);
      if (bond.stereo == BondStereo::None)
        continue;
      auto side_bad = [&](int endpoint, int partner) {
        if (out.degree(endpoint) > 3)
          return true;  // more than two substituent positions
        std::vector<int> cells;
        for (const auto& [nbr, bond_idx] : out.neighbors(endpoint)) {
          (void)bond_idx;
          if (nbr != partner)
            cells.push_back(stable[static_cast<std::size_t>(nbr)]);
        }
        std::sort(cells.begin(), cells.end());
        return std::adjacent_find(cells.begin(), cells.end()) != cells.end();
      };
      if (side_bad(bond.a, bond.b) || side_bad(bond.b, bond.a)) {
        bond.stereo = BondStereo::None;
        bond.stereo_ref_a = -1;
        bond.stereo_ref_b = -1;
        changed = true;
      }
    }
  }
  return out;
}

CanonicalResult canonicalize(const MolGraph& mol) {
  if (mol.empty())
    throw InvalidArgumentError("cannot canonicalize an empty molecule");
  MolGraph normalized = normalize_stereo(mol);
  return Search(normalized).run();
}

std::string canonical_form(const MolGraph& mol) {
  return canonicalize(mol).smiles;
}

std::string write_smiles(const MolGraph& mol, Diagnostics* diag) {
  if (mol.empty())
    throw InvalidArgumentError("cannot write an empty molecule");
  MolGraph normalized = normalize_stereo(mol);
  CanonicalResult res = Search(normalized).run();
  if (diag != nullptr) {
    // Re-run the writer with the winning labeling so stereo warnings
    // reach the caller (the search pass discards them).
    return write_smiles_with_ranks(normalized, res.ranks, diag);
  }
  return res.smiles;
}

std::vector<int> canonical_ranks(const MolGraph& mol) {
  return canonicalize(mol).ranks;
}

bool molecules_equal(const MolGraph& a, const MolGraph& b) {
  return canonical_form(a) == canonical_form(b);
}

}  // namespace moltok
