//
// Copyright 2026 moltok contributors
// SPDX-License-Identifier: Apache-2.0
//

#ifndef MOLTOK_ELEMENTS_HPP
#define MOLTOK_ELEMENTS_HPP

#include <string>
#include <string_view>
#include <vector>

namespace moltok {

// Periodic-table helpers. The attachment placeholder "*" is treated as a
// pseudo-element so motif subgraphs can flow through the same graph code.

// 1-based atomic number; 0 for "*"; -1 if the symbol is unknown.
int atomic_number(std::string_view symbol);

bool is_valid_element(std::string_view symbol);

// Elements that may be written without brackets: B C N O P S F Cl Br I.
bool in_organic_subset(std::string_view symbol);

// Elements that may be written as aromatic lowercase atoms: b c n o p s.
bool aromatic_symbol_allowed(std::string_view symbol);

// Standard valences used for implicit-hydrogen completion. Most elements
// have one entry; P has {3,5} and S has {2,4,6}. Empty for elements
// without a fixed valence model (implicit hydrogens default to 0).
const std::vector<int>& standard_valences(std::string_view symbol);

}  // namespace moltok

#endif  // MOLTOK_ELEMENTS_HPP
