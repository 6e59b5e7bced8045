//
// Copyright 2026 moltok contributors
// SPDX-License-Identifier: Apache-2.0
//

#ifndef MOLTOK_FINGERPRINT_HPP
#define MOLTOK_FINGERPRINT_HPP

#include <cstdint>
#include <vector>

#include "moltok/mol_graph.hpp"

namespace moltok {

enum class FingerprintKind { Morgan, Path };

// Binary structural fingerprint. Bit length must be a power of two.
struct Fingerprint {
  FingerprintKind kind = FingerprintKind::Morgan;
  int nbits = 0;
  std::vector<std::uint64_t> words;

  void set(int bit) {
    words[static_cast<std::size_t>(bit) >> 6] |= 1ULL << (bit & 63);
  }
  bool test(int bit) const {
    return (words[static_cast<std::size_t>(bit) >> 6] >> (bit & 63)) & 1ULL;
  }
  int popcount() const;
};

// Circular fingerprint: per-atom invariants (element, charge, degree,
// H count, aromaticity, ring membership) folded over neighbor shells up
// to `radius`; every identifier at every radius sets one bit. Hashing is
// 64-bit FNV-1a, so output is identical across platforms and invariant
// under atom relabeling.
Fingerprint morgan_fingerprint(const MolGraph& mol, int radius = 2,
                               int nbits = 2048);

// Linear-path fingerprint: every simple path of 0..max_path_len bonds is
// rendered as its (element, bond order) string, taking the smaller of
// the two directions, and hashed into the bit vector.
Fingerprint path_fingerprint(const MolGraph& mol, int max_path_len = 7,
                             int nbits = 2048);

// |a AND b| / |a OR b|; 1.0 when both fingerprints are all-zero.
// Throws KindMismatchError when kinds or lengths differ.
double tanimoto(const Fingerprint& a, const Fingerprint& b);

}  // namespace moltok

#endif  // MOLTOK_FINGERPRINT_HPP
