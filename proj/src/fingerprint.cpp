//
// Copyright 2026 moltok contributors
// SPDX-License-Identifier: Apache-2.0
//

#include "moltok/fingerprint.hpp"

#include <algorithm>
#include <bit>
#include <string>

#include "moltok/errors.hpp"
#include "moltok/rings.hpp"

namespace moltok {

namespace {

constexpr std::uint64_t kFnvOffset = 14695981039346656037ULL;
constexpr std::uint64_t kFnvPrime = 1099511628211ULL;

std::uint64_t fnv1a(std::uint64_t h, std::uint64_t value) {
  for (int i = 0; i < 8; ++i) {
    h ^= (value >> (8 * i)) & 0xffULL;
    h *= kFnvPrime;
  }
  return h;
}

std::uint64_t fnv1a_str(std::uint64_t h, const std::string& s) {
  for (unsigned char c : s) {
    h ^= c;
    h *= kFnvPrime;
  }
  return h;
}

void check_nbits(int nbits) {
  if (nbits <= 0 || (nbits & (nbits - 1)) != 0)
    throw InvalidArgumentError("fingerprint length must be a power of two");
}

int bond_code(BondOrder order) {
  switch (order) {
    case BondOrder::Single: return 1;
    case BondOrder::Double: return 2;
    case BondOrder::Triple: return 3;
    case BondOrder::Aromatic: return 4;
  }
  return 0;
}

}  // namespace

int Fingerprint::popcount() const {
  int n = 0;
  for (std::uint64_t w : words)
    n += std::popcount(w);
  return n;
}

Fingerprint morgan_fingerprint(const MolGraph& mol, int radius, int nbits) {
  check_nbits(nbits);
  if (radius < 0)
    throw InvalidArgumentError("negative fingerprint radius");
  Fingerprint fp;
  fp.kind = FingerprintKind::Morgan;
  fp.nbits = nbits;
  fp.words.assign(static_cast<std::size_t>(nbits) / 64, 0);

  RingPerception rings = perceive_rings(mol);
  int n = mol.atom_count();
  std::vector<std::uint64_t> ids(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    const Atom& a = mol.atom(i);
    std::uint64_t h = kFnvOffset;
    h = fnv1a_str(h, a.element);
    h = fnv1a(h, static_cast<std::uint64_t>(
                     static_cast<std::int64_t>(a.formal_charge)));
    h = fnv1a(h, static_cast<std::uint64_t>(mol.degree(i)));
    h = fnv1a(h, static_cast<std::uint64_t>(a.hydrogens));
    h = fnv1a(h, a.aromatic ? 1 : 0);
    h = fnv1a(h, rings.atom_in_ring[static_cast<std::size_t>(i)] ? 1 : 0);
    ids[static_cast<std::size_t>(i)] = h;
    fp.set(static_cast<int>(h & static_cast<std::uint64_t>(nbits - 1)));
  }

  for (int r = 1; r <= radius; ++r) {
    std::vector<std::uint64_t> next(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
      std::vector<std::pair<int, std::uint64_t>> shell;
      for (const auto& [nbr, bond_idx] : mol.neighbors(i))
        shell.emplace_back(bond_code(mol.bond(bond_idx).order),
                           ids[static_cast<std::size_t>(nbr)]);
      std::sort(shell.begin(), shell.end());
      std::uint64_t h = kFnvOffset;
      h = fnv1a(h, static_cast<std::uint64_t>(r));
      h = fnv1a(h, ids[static_cast<std::size_t>(i)]);
      for (const auto& [code, nbr_id] : shell) {
        h = fnv1a(h, static_cast<std::uint64_t>(code));
        h = fnv1a(h, nbr_id);
      }
      next[static_cast<std::size_t>(i)] = h;
      fp.set(static_cast<int>(h & static_cast<std::uint64_t>(nbits - 1)));
    }
    ids = std::move(next);
  }
  return fp;
}

namespace {

std::string path_string(const MolGraph& mol, const std::vector<int>& atoms) {
  std::string s;
  for (std::size_t i = 0; i < atoms.size(); ++i) {
    if (i > 0) {
      int bond = mol.bond_between(atoms[i - 1], atoms[i]);
      s += bond_symbol(mol.bond(bond).order);
    }
    const Atom& a = mol.atom(atoms[static_cast<std::size_t>(i)]);
    s += a.aromatic ? "(" + a.element + ")" : a.element;
  }
  return s;
}

}  // namespace

Fingerprint path_fingerprint(const MolGraph& mol, int max_path_len,
                             int nbits) {
  check_nbits(nbits);
  if (max_path_len < 0)
    throw InvalidArgumentError("negative path length");
  Fingerprint fp;
  fp.kind = FingerprintKind::Path;
  fp.nbits = nbits;
  fp.words.assign(static_cast<std::size_t>(nbits) / 64, 0);

  auto record = [&](const std::vector<int>& atoms) {
    std::string fwd = path_string(mol, atoms);
    std::vector<int> rev(atoms.rbegin(), atoms.rend());
    std::string bwd = path_string(mol, rev);
    const std::string& canon = std::min(fwd, bwd);
    std::uint64_t h = fnv1a_str(kFnvOffset, canon);
    fp.set(static_cast<int>(h & static_cast<std::uint64_t>(nbits - 1)));
  };

  // DFS over simple paths from every start atom; each multi-atom path is
  // found once per direction, the canonical direction dedupes them.
  std::vector<int> path;
  std::vector<char> on_path(static_cast<std::size_t>(mol.atom_count()), 0);
  struct Frame {
    int atom;
    std::size_t next = 0;
  };
  for (int start = 0; start < mol.atom_count(); ++start) {
    std::vector<Frame> stack;
    stack.push_back({start, 0});
    path.assign(1, start);
    on_path[static_cast<std::size_t>(start)] = 1;
    record(path);
    while (!stack.empty()) {
      Frame& f = stack.back();
      const auto& adj = mol.neighbors(f.atom);
      bool descended = false;
      while (f.next < adj.size()) {
        auto [v, bond_idx] = adj[f.next++];
        (void)bond_idx;
        if (on_path[static_cast<std::size_t>(v)])
          continue;
        if (static_cast<int>(path.size()) > max_path_len)
          continue;
        path.push_back(v);
        on_path[static_cast<std::size_t>(v)] = 1;
        record(path);
        stack.push_back({v, 0});
        descended = true;
        break;
      }
      if (!descended) {
        on_path[static_cast<std::size_t>(f.atom)] = 0;
        path.pop_back();
        stack.pop_back();
      }
    }
  }
  return fp;
}

double tanimoto(const Fingerprint& a, const Fingerprint& b) {
  if (a.kind != b.kind || a.nbits != b.nbits)
    throw KindMismatchError("tanimoto of incompatible fingerprints");
  int inter = 0, uni = 0;
  for (std::size_t i = 0; i < a.words.size(); ++i) {
    inter += std::popcount(a.words[i] & b.words[i]);
    uni += std::popcount(a.words[i] | b.words[i]);
  }
  if (uni == 0)
    return 1.0;
  return static_cast<double>(inter) / static_cast<double>(uni);
}

}  // namespace moltok
