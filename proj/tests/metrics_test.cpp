//
// Copyright 2026 moltok contributors
// SPDX-License-Identifier: Apache-2.0
//

#include <gtest/gtest.h>

#include <random>
#include <set>
#include <string>
#include <vector>

#include "moltok/errors.hpp"
#include "moltok/metrics.hpp"
#include "moltok/motif.hpp"
#include "moltok/smiles.hpp"
#include "test_support.hpp"

namespace moltok {
namespace {

using testing::load_sample_corpus;
using testing::mol;
using testing::random_molecule;
using testing::random_permutation;

TEST(MorganFingerprint, SingleAtomRadiusZero) {
  Fingerprint fp = morgan_fingerprint(mol("C"), 0);
  EXPECT_EQ(fp.popcount(), 1);
}

TEST(MorganFingerprint, IdenticalMoleculesMatch) {
  Fingerprint a = morgan_fingerprint(mol("CCO"));
  Fingerprint b = morgan_fingerprint(mol("CCO"));
  EXPECT_EQ(a.words, b.words);
}

TEST(MorganFingerprint, PermutationInvariance) {
  std::mt19937_64 rng(61);
  for (const std::string& s :
       {std::string("CC(=O)Oc1ccccc1C(=O)O"), std::string("CCO"),
        std::string("C1C2CC3CC1CC(C2)C3")}) {
    MolGraph m = mol(s);
    Fingerprint base = morgan_fingerprint(m);
    for (int p = 0; p < 100; ++p) {
      MolGraph permuted = m.permuted(random_permutation(m.atom_count(), rng));
      EXPECT_EQ(morgan_fingerprint(permuted).words, base.words) << s;
    }
  }
}

TEST(MorganFingerprint, BadParameters) {
  EXPECT_THROW(morgan_fingerprint(mol("C"), 2, 1000), InvalidArgumentError);
  EXPECT_THROW(morgan_fingerprint(mol("C"), -1), InvalidArgumentError);
}

// brute-force enumeration of undirected simple paths with <= max bonds
int count_simple_paths(const MolGraph& m, int max_bonds) {
  int directed = 0;
  std::vector<char> on_path(static_cast<std::size_t>(m.atom_count()), 0);
  struct Frame {
    int atom;
    std::size_t next;
  };
  for (int start = 0; start < m.atom_count(); ++start) {
    std::vector<Frame> stack{{start, 0}};
    on_path[static_cast<std::size_t>(start)] = 1;
    int depth = 0;
    while (!stack.empty()) {
      Frame& f = stack.back();
      const auto& adj = m.neighbors(f.atom);
      bool descended = false;
      while (f.next < adj.size()) {
        int v = adj[f.next++].first;
        if (on_path[static_cast<std::size_t>(v)] || depth >= max_bonds)
          continue;
        on_path[static_cast<std::size_t>(v)] = 1;
        ++depth;
        ++directed;
        stack.push_back({v, 0});
        descended = true;
        break;
      }
      if (!descended) {
        on_path[static_cast<std::size_t>(f.atom)] = 0;
        --depth;
        stack.pop_back();
      }
    }
    on_path.assign(static_cast<std::size_t>(m.atom_count()), 0);
  }
  // every multi-atom path was counted from both ends
  return m.atom_count() + directed / 2;
}

TEST(PathFingerprint, SingleAtom) {
  Fingerprint fp = path_fingerprint(mol("C"));
  EXPECT_EQ(fp.popcount(), 1);
}

TEST(PathFingerprint, PropanePathCount) {
  // 3 atoms, 2 one-bond paths, 1 two-bond path
  EXPECT_EQ(count_simple_paths(mol("CCC"), 7), 6);
}

TEST(PathFingerprint, DistinctPathStringsBoundPopcount) {
  MolGraph m = mol("CCC");
  Fingerprint fp = path_fingerprint(m);
  // 6 path instances but only 3 distinct strings: C, C-C, C-C-C
  EXPECT_EQ(fp.popcount(), 3);
}

TEST(PathFingerprint, PermutationInvariance) {
  std::mt19937_64 rng(62);
  for (const std::string& s :
       {std::string("CC(=O)Oc1ccccc1C(=O)O"), std::string("c1ccc2ccccc2c1")}) {
    MolGraph m = mol(s);
    Fingerprint base = path_fingerprint(m);
    for (int p = 0; p < 100; ++p) {
      MolGraph permuted = m.permuted(random_permutation(m.atom_count(), rng));
      EXPECT_EQ(path_fingerprint(permuted).words, base.words) << s;
    }
  }
}

TEST(Tanimoto, SelfSimilarityIsOne) {
  Fingerprint fp = morgan_fingerprint(mol("CC(=O)O"));
  EXPECT_DOUBLE_EQ(tanimoto(fp, fp), 1.0);
}

TEST(Tanimoto, SetArithmetic) {
  Fingerprint a, b;
  a.kind = b.kind = FingerprintKind::Morgan;
  a.nbits = b.nbits = 64;
  a.words.assign(1, 0);
  b.words.assign(1, 0);
  a.set(1);
  a.set(2);
  b.set(1);
  b.set(2);
  b.set(3);
  b.set(4);
  EXPECT_DOUBLE_EQ(tanimoto(a, b), 0.5);  // |a&b|=2, |a|b|=4
  Fingerprint disjoint = b;
  disjoint.words.assign(1, 0);
  disjoint.set(9);
  EXPECT_DOUBLE_EQ(tanimoto(a, disjoint), 0.0);
  Fingerprint zero = a, zero2 = a;
  zero.words.assign(1, 0);
  zero2.words.assign(1, 0);
  EXPECT_DOUBLE_EQ(tanimoto(zero, zero2), 1.0);
}

TEST(Tanimoto, KindMismatch) {
  EXPECT_THROW(
      tanimoto(morgan_fingerprint(mol("C")), path_fingerprint(mol("C"))),
      KindMismatchError);
  EXPECT_THROW(tanimoto(morgan_fingerprint(mol("C"), 2, 1024),
                        morgan_fingerprint(mol("C"), 2, 2048)),
               KindMismatchError);
}

TEST(Tanimoto, SymmetricAndBounded) {
  std::mt19937_64 rng(63);
  for (int iter = 0; iter < 50; ++iter) {
    Fingerprint a = morgan_fingerprint(random_molecule(rng));
    Fingerprint b = morgan_fingerprint(random_molecule(rng));
    double ab = tanimoto(a, b);
    EXPECT_DOUBLE_EQ(ab, tanimoto(b, a));
    EXPECT_GE(ab, 0.0);
    EXPECT_LE(ab, 1.0);
  }
}

TEST(ExactMatch, CanonicalEquality) {
  EXPECT_TRUE(exact_match(mol("OCC"), mol("CCO")));
  EXPECT_FALSE(exact_match(mol("CCO"), mol("CCN")));
  MolGraph m = mol("CC(=O)Oc1ccccc1C(=O)O");
  EXPECT_TRUE(exact_match(m, detokenize(tokenize(m, TraversalOrder::DFS))));
}

TEST(ExactMatch, ImpliesUnitTanimoto) {
  std::mt19937_64 rng(64);
  for (int iter = 0; iter < 50; ++iter) {
    MolGraph m = random_molecule(rng);
    MolGraph other = m.permuted(random_permutation(m.atom_count(), rng));
    ASSERT_TRUE(exact_match(m, other));
    EXPECT_DOUBLE_EQ(tanimoto(morgan_fingerprint(m), morgan_fingerprint(other)),
                     1.0);
    EXPECT_DOUBLE_EQ(tanimoto(path_fingerprint(m), path_fingerprint(other)),
                     1.0);
  }
}

TEST(Evaluate, AllIdenticalAllOnes) {
  std::vector<std::pair<GenerationResult, MolGraph>> pairs;
  for (const char* s : {"CCO", "c1ccccc1", "CC(=O)O"}) {
    GenerationResult gen;
    gen.mol = mol(s);
    pairs.emplace_back(std::move(gen), mol(s));
  }
  EvalReport report = evaluate(pairs);
  EXPECT_DOUBLE_EQ(report.exact, 1.0);
  EXPECT_DOUBLE_EQ(report.morgan, 1.0);
  EXPECT_DOUBLE_EQ(report.path, 1.0);
  EXPECT_DOUBLE_EQ(report.validity, 1.0);
}

TEST(Evaluate, AllInvalidAllZero) {
  std::vector<std::pair<GenerationResult, MolGraph>> pairs;
  pairs.emplace_back(GenerationResult::invalid(), mol("CCO"));
  pairs.emplace_back(GenerationResult::invalid(), mol("CCN"));
  EvalReport report = evaluate(pairs);
  EXPECT_DOUBLE_EQ(report.exact, 0.0);
  EXPECT_DOUBLE_EQ(report.morgan, 0.0);
  EXPECT_DOUBLE_EQ(report.path, 0.0);
  EXPECT_DOUBLE_EQ(report.validity, 0.0);
  EXPECT_EQ(report.n, 2);
}

TEST(Evaluate, MixedSetHandComputed) {
  // 4 pairs: 2 exact, 1 near-miss, 1 invalid
  std::vector<std::pair<GenerationResult, MolGraph>> pairs;
  auto valid = [&](const char* s) {
    GenerationResult g;
    g.mol = mol(s);
    return g;
  };
  pairs.emplace_back(valid("CCO"), mol("OCC"));
  pairs.emplace_back(valid("c1ccccc1"), mol("c1ccccc1"));
  pairs.emplace_back(valid("CCN"), mol("CCO"));
  pairs.emplace_back(GenerationResult::invalid(), mol("CCO"));
  EvalReport report = evaluate(pairs);
  EXPECT_DOUBLE_EQ(report.exact, 0.5);
  EXPECT_DOUBLE_EQ(report.validity, 0.75);
  double expected_morgan =
      (1.0 + 1.0 +
       tanimoto(morgan_fingerprint(mol("CCN")), morgan_fingerprint(mol("CCO"))) +
       0.0) /
      4.0;
  EXPECT_DOUBLE_EQ(report.morgan, expected_morgan);
}

TEST(Evaluate, PermutationInvariantOverPairList) {
  std::vector<std::pair<GenerationResult, MolGraph>> pairs;
  auto valid = [&](const char* s) {
    GenerationResult g;
    g.mol = mol(s);
    return g;
  };
  pairs.emplace_back(valid("CCO"), mol("CCO"));
  pairs.emplace_back(valid("CCN"), mol("CCO"));
  pairs.emplace_back(GenerationResult::invalid(), mol("c1ccccc1"));
  EvalReport a = evaluate(pairs);
  std::reverse(pairs.begin(), pairs.end());
  EvalReport b = evaluate(pairs);
  EXPECT_DOUBLE_EQ(a.exact, b.exact);
  EXPECT_DOUBLE_EQ(a.morgan, b.morgan);
  EXPECT_DOUBLE_EQ(a.path, b.path);
  EXPECT_DOUBLE_EQ(a.validity, b.validity);
}

TEST(Evaluate, EmptyInput) {
  EXPECT_THROW(evaluate({}), EmptyInputError);
}

}  // namespace
}  // namespace moltok
