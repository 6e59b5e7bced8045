//
// Copyright 2026 moltok contributors
// SPDX-License-Identifier: Apache-2.0
//

#include <gtest/gtest.h>

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <random>

#include "moltok/canonical.hpp"
#include "moltok/errors.hpp"
#include "moltok/motif.hpp"
#include "moltok/smiles.hpp"
#include "moltok/vocab.hpp"
#include "test_support.hpp"

namespace moltok {
namespace {

using testing::load_sample_corpus;
using testing::mol;

Vocabulary vocab_of(const std::vector<std::string>& corpus) {
  std::vector<MolGraph> mols;
  for (const std::string& s : corpus)
    mols.push_back(mol(s));
  return build_vocab(mols);
}

TEST(BuildVocab, EthanolHasThreeMotifTokens) {
  // terminal C (1 slot), middle C (2 slots), O (1 slot)
  Vocabulary v = vocab_of({"CCO"});
  EXPECT_EQ(v.motif_token_count(), 3);
}

TEST(BuildVocab, SingleAtomCorpus) {
  Vocabulary v = vocab_of({"C"});
  EXPECT_EQ(v.motif_token_count(), 1);
}

TEST(BuildVocab, EmptyCorpusRejected) {
  EXPECT_THROW(build_vocab({}), EmptyCorpusError);
}

TEST(BuildVocab, DeterministicUnderInputOrder) {
  std::vector<std::string> corpus = load_sample_corpus();
  Vocabulary a = vocab_of(corpus);
  std::reverse(corpus.begin(), corpus.end());
  Vocabulary b = vocab_of(corpus);
  ASSERT_EQ(a.size(), b.size());
  for (int id = 0; id < a.size(); ++id) {
    EXPECT_EQ(a.key_of(id), b.key_of(id));
    EXPECT_EQ(a.atom_count(id), b.atom_count(id));
  }
}

TEST(BuildVocab, SpecialsAreReserved) {
  Vocabulary v = vocab_of({"CCO"});
  EXPECT_EQ(v.key_of(Vocabulary::kPadId), "<pad>");
  EXPECT_EQ(v.key_of(Vocabulary::kEosId), "</s>");
  EXPECT_EQ(v.key_of(Vocabulary::kUnkId), "<unk>");
  EXPECT_EQ(v.key_of(Vocabulary::sentinel_id(0)), "<sent_0>");
  EXPECT_EQ(v.key_of(Vocabulary::sentinel_id(99)), "<sent_99>");
  for (int id = 0; id < Vocabulary::kFirstMotifId; ++id)
    EXPECT_EQ(v.atom_count(id), 0);
  for (int id = Vocabulary::kFirstMotifId; id < v.size(); ++id)
    EXPECT_GE(v.atom_count(id), 1);
}

TEST(BuildVocab, AtomCountsMatchReconstructedMotifs) {
  Vocabulary v = vocab_of(load_sample_corpus());
  for (int id = Vocabulary::kFirstMotifId; id < v.size(); ++id)
    EXPECT_EQ(v.atom_count(id), motif_from_key(v.key_of(id)).atom_count());
}

TEST(EncodeDecode, FreshVocabularyMapsEverythingToUnk) {
  Vocabulary v;
  std::vector<int> ids = v.encode(tokenize(mol("CC(=O)O"), TraversalOrder::DFS));
  for (int id : ids)
    EXPECT_EQ(id, Vocabulary::kUnkId);
}

TEST(EncodeDecode, UnknownKeyMapsToUnk) {
  Vocabulary v = vocab_of({"C"});
  TokenSequence seq = tokenize(mol("c1ccccc1"), TraversalOrder::DFS);
  std::vector<int> ids = v.encode(seq);
  ASSERT_EQ(ids.size(), 1u);
  EXPECT_EQ(ids[0], Vocabulary::kUnkId);
}

TEST(EncodeDecode, ClosureOverOwnCorpus) {
  Vocabulary v = vocab_of(load_sample_corpus());
  for (const std::string& s : load_sample_corpus()) {
    std::vector<int> ids = v.encode(tokenize(mol(s), TraversalOrder::DFS));
    for (int id : ids)
      EXPECT_NE(id, Vocabulary::kUnkId) << s;
  }
}

TEST(EncodeDecode, RoundTrip) {
  Vocabulary v = vocab_of(load_sample_corpus());
  TokenSequence seq = tokenize(mol("Cc1ccccc1"), TraversalOrder::DFS);
  std::vector<int> ids = v.encode(seq);
  TokenSequence back = v.decode(ids);
  EXPECT_EQ(v.encode(back), ids);
  EXPECT_TRUE(molecules_equal(detokenize(back), mol("Cc1ccccc1")));
}

TEST(EncodeDecode, SpecialsSkippedWithWarning) {
  Vocabulary v = vocab_of({"CCO"});
  Diagnostics diag;
  TokenSequence seq = v.decode({Vocabulary::kPadId, Vocabulary::sentinel_id(3),
                                Vocabulary::kUnkId});
  EXPECT_TRUE(seq.tokens.empty());
  v.decode({Vocabulary::kPadId}, TraversalOrder::DFS, &diag);
  EXPECT_GE(diag.count(WarningKind::SkippedToken), 1u);
}

TEST(EncodeDecode, OutOfRangeIdThrows) {
  Vocabulary v = vocab_of({"CCO"});
  EXPECT_THROW(v.decode({v.size()}), UnknownIdError);
  EXPECT_THROW(v.key_of(-1), UnknownIdError);
  EXPECT_THROW(v.atom_count(v.size()), UnknownIdError);
}

TEST(VocabFile, SaveLoadBitExact) {
  Vocabulary v = vocab_of(load_sample_corpus());
  std::string path = ::testing::TempDir() + "vocab_roundtrip.tsv";
  v.save(path);
  Vocabulary loaded = Vocabulary::load(path);
  ASSERT_EQ(loaded.size(), v.size());
  for (int id = 0; id < v.size(); ++id) {
    EXPECT_EQ(loaded.key_of(id), v.key_of(id));
    EXPECT_EQ(loaded.atom_count(id), v.atom_count(id));
  }
  // byte-identical re-serialization
  std::string path2 = ::testing::TempDir() + "vocab_roundtrip2.tsv";
  loaded.save(path2);
  std::ifstream f1(path), f2(path2);
  std::string s1((std::istreambuf_iterator<char>(f1)),
                 std::istreambuf_iterator<char>());
  std::string s2((std::istreambuf_iterator<char>(f2)),
                 std::istreambuf_iterator<char>());
  EXPECT_EQ(s1, s2);
  std::remove(path.c_str());
  std::remove(path2.c_str());
}

TEST(VocabFile, RejectsGarbage) {
  std::string path = ::testing::TempDir() + "vocab_garbage.tsv";
  {
    std::ofstream out(path);
    out << "not a vocab file\n";
  }
  EXPECT_THROW(Vocabulary::load(path), FormatError);
  EXPECT_THROW(Vocabulary::load("/nonexistent/path/vocab.tsv"), IoError);
  std::remove(path.c_str());
}

}  // namespace
}  // namespace moltok
