//
// Copyright 2026 moltok contributors
// SPDX-License-Identifier: Apache-2.0
//

#ifndef MOLTOK_VOCAB_HPP
#define MOLTOK_VOCAB_HPP

#include <string>
#include <unordered_map>
#include <vector>

#include "moltok/diagnostics.hpp"
#include "moltok/mol_graph.hpp"
#include "moltok/motif.hpp"

namespace moltok {

// Bijection between canonical motif keys and dense token ids, with a
// per-id atom count. Ids 0..2 are PAD/EOS/UNK, followed by 100 span
// sentinels; motif tokens start after them. Special tokens carry atom
// count 0. Immutable once built; concurrent reads are safe.
class Vocabulary {
public:
  static constexpr int kPadId = 0;
  static constexpr int kEosId = 1;
  static constexpr int kUnkId = 2;
  static constexpr int kSentinelBase = 3;
  static constexpr int kNumSentinels = 100;
  static constexpr int kFirstMotifId = kSentinelBase + kNumSentinels;

  Vocabulary();

  int size() const { return static_cast<int>(keys_.size()); }
  int motif_token_count() const { return size() - kFirstMotifId; }
  bool is_special(int id) const { return id >= 0 && id < kFirstMotifId; }
  static int sentinel_id(int k) { return kSentinelBase + k; }

  // kUnkId when the key is absent.
  int id_of(const std::string& key) const;
  // Throws UnknownIdError when id is out of range.
  const std::string& key_of(int id) const;
  int atom_count(int id) const;

  int add_key(const std::string& key);  // no-op when already present

  std::vector<int> encode(const TokenSequence& seq) const;
  // Inverse of encode on special-free id lists; specials and UNK are
  // skipped with a warning so downstream detokenization stays total.
  TokenSequence decode(const std::vector<int>& ids,
                       TraversalOrder order = TraversalOrder::DFS,
                       Diagnostics* diag = nullptr) const;

  void save(const std::string& path) const;        // IoError
  static Vocabulary load(const std::string& path);  // IoError, FormatError

private:
  std::unordered_map<std::string, int> id_by_key_;
  std::vector<std::string> keys_;
  std::vector<int> atom_counts_;
};

// Collects the distinct motif keys over a corpus of molecules.
// Duplicate molecules are folded; ids are assigned by first appearance
// over the corpus sorted by canonical form, so any input order yields
// the same vocabulary.
class VocabBuilder {
public:
  void add(const MolGraph& mol, Diagnostics* diag = nullptr);
  Vocabulary finish() const;  // EmptyCorpusError when nothing was added
  std::size_t molecule_count() const { return keys_by_molecule_.size(); }

private:
  // canonical form -> token keys of that molecule in sequence order
  std::unordered_map<std::string, std::vector<std::string>> keys_by_molecule_;
};

Vocabulary build_vocab(const std::vector<MolGraph>& corpus,
                       Diagnostics* diag = nullptr);

}  // namespace moltok

#endif  // MOLTOK_VOCAB_HPP
