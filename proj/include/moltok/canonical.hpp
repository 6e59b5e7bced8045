//
// Copyright 2026 moltok contributors
// SPDX-License-Identifier: Apache-2.0
//

#ifndef MOLTOK_CANONICAL_HPP
#define MOLTOK_CANONICAL_HPP

#include <string>
#include <vector>

#include "moltok/diagnostics.hpp"
#include "moltok/mol_graph.hpp"

namespace moltok {

struct CanonicalResult {
  std::string smiles;
  std::vector<int> ranks;  // per-atom canonical rank, a permutation of 0..n-1
};

// Erases stereo annotations without a defined meaning, returning a
// copy: tetrahedral parity off 3/4-coordinate centers, double-bond
// stereo on endpoints carrying more than two substituents, and parities
// whose swap-equivalent substituents are indistinguishable under
// neighborhood refinement (e.g. [C@](C)(C)(C)C, where any claimed
// handedness denotes the same molecule). Canonicalization and
// fragmentation apply this internally.
MolGraph normalize_stereo(const MolGraph& mol);

// Canonical labeling by iterative neighborhood refinement with full
// backtracking over tied cells; the canonical string is the
// lexicographically smallest SMILES over all explored labelings. Two
// graphs receive the same string iff they are isomorphic as attributed
// graphs (element, charge, isotope, H count, aromaticity, bond order,
// stereo after normalize_stereo).
CanonicalResult canonicalize(const MolGraph& mol);

std::string canonical_form(const MolGraph& mol);
std::vector<int> canonical_ranks(const MolGraph& mol);

bool molecules_equal(const MolGraph& a, const MolGraph& b);

// Canonical SMILES output. The result reparses (via parse_smiles) to a
// molecule equal to the input; stereo that cannot be expressed (e.g. an
// E/Z bond whose substituents were reduced to hydrogens) is dropped with
// a warning.
std::string write_smiles(const MolGraph& mol, Diagnostics* diag = nullptr);

// Deterministic SMILES for a caller-supplied labeling (ranks must be a
// permutation of 0..n-1). canonicalize() evaluates candidate labelings
// through this writer.
std::string write_smiles_with_ranks(const MolGraph& mol,
                                    const std::vector<int>& ranks,
                                    Diagnostics* diag = nullptr);

}  // namespace moltok

#endif  // MOLTOK_CANONICAL_HPP
