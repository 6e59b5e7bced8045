//
// Copyright 2026 moltok contributors
// SPDX-License-Identifier: Apache-2.0
//

#ifndef MOLTOK_TESTS_TEST_SUPPORT_HPP
#define MOLTOK_TESTS_TEST_SUPPORT_HPP

#include <algorithm>
#include <fstream>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "moltok/elements.hpp"
#include "moltok/mol_graph.hpp"
#include "moltok/smiles.hpp"

namespace moltok::testing {

inline MolGraph mol(const std::string& smiles) { return parse_smiles(smiles); }

inline std::vector<int> random_permutation(int n, std::mt19937_64& rng) {
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  return perm;
}

// Chemically plausible random molecules assembled directly on the graph:
// random skeletons of plain atoms and aromatic-ring units, extra ring
// bonds, bond-order upgrades, sprinkled charges/isotopes and stereo.
// Independent of the SMILES parser, so it can serve as an oracle-side
// input source.
inline MolGraph random_molecule(std::mt19937_64& rng) {
  MolGraph m;
  std::vector<int> spare;
  auto coin = [&](double p) {
    return std::uniform_real_distribution<>(0, 1)(rng) < p;
  };
  auto add_plain = [&](const char* el) {
    Atom a;
    a.element = el;
    int idx = m.add_atom(a);
    spare.push_back(standard_valences(el).back());
    return idx;
  };
  auto add_aromatic_ring = [&](int kind) {
    std::vector<int> ring;
    auto arom = [&](const char* el, int spare_val, int hydrogens = 0) {
      Atom a;
      a.element = el;
      a.aromatic = true;
      a.hydrogens = hydrogens;
      int idx = m.add_atom(a);
      spare.push_back(spare_val);
      return idx;
    };
    switch (kind) {
      case 0:
        for (int i = 0; i < 6; ++i)
          ring.push_back(arom("C", 1));
        break;
      case 1:
        ring.push_back(arom("N", 0));
        for (int i = 0; i < 5; ++i)
          ring.push_back(arom("C", 1));
        break;
      case 2:
        ring.push_back(arom("N", 0, 1));
        for (int i = 0; i < 4; ++i)
          ring.push_back(arom("C", 1));
        break;
      case 3:
        ring.push_back(arom("S", 0));
        for (int i = 0; i < 4; ++i)
          ring.push_back(arom("C", 1));
        break;
      default:
        ring.push_back(arom("O", 0));
        for (int i = 0; i < 4; ++i)
          ring.push_back(arom("C", 1));
        break;
    }
    for (std::size_t i = 0; i < ring.size(); ++i)
      m.add_bond(ring[i], ring[(i + 1) % ring.size()], BondOrder::Aromatic);
    return ring;
  };

  const char* elems[] = {"C", "C", "C", "C", "N", "O",  "S",
                         "P", "F", "Cl", "Br", "I", "B"};
  int units = std::uniform_int_distribution<int>(1, 10)(rng);
  std::vector<int> attachable;
  for (int u = 0; u < units; ++u) {
    std::vector<int> unit_atoms;
    if (coin(0.25)) {
      unit_atoms =
          add_aromatic_ring(std::uniform_int_distribution<int>(0, 4)(rng));
    } else {
      unit_atoms.push_back(
          add_plain(elems[std::uniform_int_distribution<int>(0, 12)(rng)]));
    }
    if (!attachable.empty()) {
      std::vector<int> cand, ucand;
      for (int a : attachable)
        if (spare[static_cast<std::size_t>(a)] >= 1)
          cand.push_back(a);
      for (int a : unit_atoms)
        if (spare[static_cast<std::size_t>(a)] >= 1)
          ucand.push_back(a);
      if (cand.empty() || ucand.empty())
        return random_molecule(rng);  // dead-end skeleton; try again
      int p = cand[std::uniform_int_distribution<std::size_t>(
          0, cand.size() - 1)(rng)];
      int c = ucand[std::uniform_int_distribution<std::size_t>(
          0, ucand.size() - 1)(rng)];
      m.add_bond(p, c, BondOrder::Single);
      --spare[static_cast<std::size_t>(p)];
      --spare[static_cast<std::size_t>(c)];
    }
    attachable.insert(attachable.end(), unit_atoms.begin(), unit_atoms.end());
  }

  int n = m.atom_count();
  int extra = std::uniform_int_distribution<int>(0, 2)(rng);
  for (int e = 0; e < extra; ++e) {
    int a = std::uniform_int_distribution<int>(0, n - 1)(rng);
    int b = std::uniform_int_distribution<int>(0, n - 1)(rng);
    if (a == b || spare[static_cast<std::size_t>(a)] < 1 ||
        spare[static_cast<std::size_t>(b)] < 1 || m.bond_between(a, b) != -1)
      continue;
    m.add_bond(a, b, BondOrder::Single);
    --spare[static_cast<std::size_t>(a)];
    --spare[static_cast<std::size_t>(b)];
  }
  for (int b = 0; b < m.bond_count(); ++b) {
    Bond& bd = m.bond(b);
    if (bd.order != BondOrder::Single)
      continue;
    if (coin(0.2) && spare[static_cast<std::size_t>(bd.a)] >= 1 &&
        spare[static_cast<std::size_t>(bd.b)] >= 1) {
      bd.order = BondOrder::Double;
      --spare[static_cast<std::size_t>(bd.a)];
      --spare[static_cast<std::size_t>(bd.b)];
      if (coin(0.25) && spare[static_cast<std::size_t>(bd.a)] >= 1 &&
          spare[static_cast<std::size_t>(bd.b)] >= 1) {
        bd.order = BondOrder::Triple;
        --spare[static_cast<std::size_t>(bd.a)];
        --spare[static_cast<std::size_t>(bd.b)];
      }
    }
  }
  for (int i = 0; i < n; ++i) {
    if (m.atom(i).aromatic)
      continue;
    double r = std::uniform_real_distribution<>(0, 1)(rng);
    if (r < 0.05)
      m.atom(i).formal_charge = r < 0.025 ? 1 : -1;
    else if (r < 0.08)
      m.atom(i).isotope = 13;
  }
  for (int i = 0; i < n; ++i) {
    if (m.atom(i).aromatic) {
      if (m.atom(i).hydrogens == 0 && m.degree(i) == 2 &&
          spare[static_cast<std::size_t>(i)] > 0)
        m.atom(i).hydrogens = 1;
    } else {
      m.atom(i).hydrogens = std::max(0, spare[static_cast<std::size_t>(i)]);
    }
  }
  for (int b = 0; b < m.bond_count(); ++b) {
    Bond& bd = m.bond(b);
    if (bd.order != BondOrder::Double)
      continue;
    auto pick_ref = [&](int e, int other) {
      for (const auto& [v, bi] : m.neighbors(e))
        if (v != other && m.bond(bi).order == BondOrder::Single)
          return v;
      return -1;
    };
    int ra = pick_ref(bd.a, bd.b);
    int rb = pick_ref(bd.b, bd.a);
    if (ra >= 0 && rb >= 0 && coin(0.6)) {
      bd.stereo = coin(0.5) ? BondStereo::E : BondStereo::Z;
      bd.stereo_ref_a = ra;
      bd.stereo_ref_b = rb;
    }
  }
  for (int i = 0; i < n; ++i)
    if (m.chirality_supported(i) && coin(0.3))
      m.atom(i).chirality = coin(0.5) ? Chirality::CW : Chirality::CCW;
  return m;
}

inline std::vector<std::string> load_sample_corpus() {
  std::vector<std::string> lines;
  std::ifstream in(std::string(MOLTOK_DATA_DIR) + "/sample_smiles.txt");
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#')
      continue;
    lines.push_back(line);
  }
  return lines;
}

}  // namespace moltok::testing

#endif  // MOLTOK_TESTS_TEST_SUPPORT_HPP
