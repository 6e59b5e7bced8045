//
// Copyright 2026 moltok contributors
// SPDX-License-Identifier: Apache-2.0
//

#ifndef MOLTOK_SMILES_HPP
#define MOLTOK_SMILES_HPP

#include <string>
#include <string_view>

#include "moltok/diagnostics.hpp"
#include "moltok/mol_graph.hpp"

namespace moltok {

struct ParseOptions {
  // Accept `[*:n]` attachment placeholders and atom maps. Used by the
  // motif key codec; public corpus parsing leaves this off.
  bool allow_placeholders = false;
};

// Parses a single-molecule SMILES string.
//
// Supported: organic-subset atoms, aromatic lowercase atoms, bracket
// atoms (isotope, chirality @/@@, H count, charge), branches, ring
// closures (digits and %nn), bond symbols - = # :, and the directional
// slash marks mapped to E/Z labels on the adjacent double bond.
//
// Throws SyntaxError on malformed input and MultiComponentError when a
// `.` separator is present. Valence problems are reported to diag, never
// rejected.
MolGraph parse_smiles(std::string_view text, Diagnostics* diag = nullptr,
                      const ParseOptions& options = {});

}  // namespace moltok

#endif  // MOLTOK_SMILES_HPP
