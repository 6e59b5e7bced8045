//
// Copyright 2026 moltok contributors
// SPDX-License-Identifier: Apache-2.0
//

#include "moltok/vocab.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "moltok/canonical.hpp"
#include "moltok/errors.hpp"

namespace moltok {

namespace {

std::string special_name(int id) {
  if (id == Vocabulary::kPadId)
    return "<pad>";
  if (id == Vocabulary::kEosId)
    return "</s>";
  if (id == Vocabulary::kUnkId)
    return "<unk>";
  return "<sent_" + std::to_string(id - Vocabulary::kSentinelBase) + ">";
}

}  // namespace

Vocabulary::Vocabulary() {
  for (int id = 0; id < kFirstMotifId; ++id) {
    keys_.push_back(special_name(id));
    atom_counts_.push_back(0);
    id_by_key_.emplace(keys_.back(), id);
  }
}

int Vocabulary::id_of(const std::string& key) const {
  auto it = id_by_key_.find(key);
  return it == id_by_key_.end() ? kUnkId : it->second;
}

const std::string& Vocabulary::key_of(int id) const {
  if (id < 0 || id >= size())
    throw UnknownIdError("token id " + std::to_string(id) +
                         " outside vocabulary of size " + std::to_string(size()));
  return keys_[static_cast<std::size_t>(id)];
}

int Vocabulary::atom_count(int id) const {
  if (id < 0 || id >= size())
    throw UnknownIdError("token id " + std::to_string(id) +
                         " outside vocabulary of size " + std::to_string(size()));
  return atom_counts_[static_cast<std::size_t>(id)];
}

int Vocabulary::add_key(const std::string& key) {
  auto it = id_by_key_.find(key);
  if (it != id_by_key_.end())
    return it->second;
  int id = size();
  keys_.push_back(key);
  atom_counts_.push_back(motif_from_key(key).atom_count());
  id_by_key_.emplace(key, id);
  return id;
}

std::vector<int> Vocabulary::encode(const TokenSequence& seq) const {
  std::vector<int> ids;
  ids.reserve(seq.tokens.size());
  for (const Motif& m : seq.tokens)
    ids.push_back(id_of(canonical_motif_key(m)));
  return ids;
}

TokenSequence Vocabulary::decode(const std::vector<int>& ids,
                                 TraversalOrder order,
                                 Diagnostics* diag) const {
  TokenSequence seq;
  seq.order = order;
  for (int id : ids) {
    if (id < 0 || id >= size())
      throw UnknownIdError("token id " + std::to_string(id) +
                           " outside vocabulary of size " +
                           std::to_string(size()));
    if (is_special(id) || id == kUnkId) {
      warn(diag, WarningKind::SkippedToken,
           "skipped non-motif token id " + std::to_string(id) + " (" +
               key_of(id) + ")");
      continue;
    }
    seq.tokens.push_back(motif_from_key(key_of(id)));
  }
  if (!seq.tokens.empty())
    seq.tokens.front().height_zero = true;
  return seq;
}

void Vocabulary::save(const std::string& path) const {
  std::ofstream out(path);
  if (!out)
    throw IoError("cannot open '" + path + "' for writing");
  out << "#moltok-vocab\tv1\tpad=" << kPadId << "\teos=" << kEosId
      << "\tunk=" << kUnkId << "\tsentinels=" << kSentinelBase << ".."
      << (kSentinelBase + kNumSentinels - 1) << "\n";
  for (int id = 0; id < size(); ++id)
    out << id << '\t' << atom_counts_[static_cast<std::size_t>(id)] << '\t'
        << keys_[static_cast<std::size_t>(id)] << '\n';
  if (!out)
    throw IoError("failed writing vocabulary to '" + path + "'");
}

Vocabulary Vocabulary::load(const std::string& path) {
  std::ifstream in(path);
  if (!in)
    throw IoError("cannot open '" + path + "'");
  std::string header;
  if (!std::getline(in, header) || header.rfind("#moltok-vocab\tv1", 0) != 0)
    throw FormatError("'" + path + "' is not a v1 vocabulary file");
  Vocabulary vocab;
  std::string line;
  int line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty())
      continue;
    std::istringstream row(line);
    std::string id_field, count_field, key;
    if (!std::getline(row, id_field, '\t') ||
        !std::getline(row, count_field, '\t') || !std::getline(row, key))
      throw FormatError(path + ":" + std::to_string(line_no) +
                        ": expected id<TAB>atom_count<TAB>key");
    int id = std::stoi(id_field);
    int count = std::stoi(count_field);
    if (id < kFirstMotifId) {
      if (key != special_name(id) || count != 0)
        throw FormatError(path + ":" + std::to_string(line_no) +
                          ": special token mismatch");
      continue;
    }
    if (id != vocab.size())
      throw FormatError(path + ":" + std::to_string(line_no) +
                        ": ids must be dense and ascending");
    int added = vocab.add_key(key);
    if (added != id || vocab.atom_count(id) != count)
      throw FormatError(path + ":" + std::to_string(line_no) +
                        ": key or atom count does not match its id");
  }
  return vocab;
}

void VocabBuilder::add(const MolGraph& mol, Diagnostics* diag) {
  std::string form = canonical_form(mol);
  if (keys_by_molecule_.count(form))
    return;
  TokenSequence seq = tokenize(mol, TraversalOrder::DFS, diag);
  std::vector<std::string> keys;
  keys.reserve(seq.tokens.size());
  for (const Motif& m : seq.tokens)
    keys.push_back(canonical_motif_key(m));
  keys_by_molecule_.emplace(std::move(form), std::move(keys));
}

Vocabulary VocabBuilder::finish() const {
  if (keys_by_molecule_.empty())
    throw EmptyCorpusError("vocabulary build over an empty corpus");
  std::vector<const std::string*> forms;
  forms.reserve(keys_by_molecule_.size());
  for (const auto& [form, keys] : keys_by_molecule_) {
    (void)keys;
    forms.push_back(&form);
  }
  std::sort(forms.begin(), forms.end(),
            [](const std::string* a, const std::string* b) { return *a < *b; });
  Vocabulary vocab;
  for (const std::string* form : forms)
    for (const std::string& key : keys_by_molecule_.at(*form))
      vocab.add_key(key);
  return vocab;
}

Vocabulary build_vocab(const std::vector<MolGraph>& corpus, Diagnostics* diag) {
  VocabBuilder builder;
  for (const MolGraph& mol : corpus)
    builder.add(mol, diag);
  return builder.finish();
}

}  // namespace moltok
