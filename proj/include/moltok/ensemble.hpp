//
// Copyright 2026 moltok contributors
// SPDX-License-Identifier: Apache-2.0
//

#ifndef MOLTOK_ENSEMBLE_HPP
#define MOLTOK_ENSEMBLE_HPP

#include <optional>
#include <string>
#include <vector>

#include "moltok/metrics.hpp"
#include "moltok/training.hpp"

namespace moltok {

// One model's output for a description: the generated molecule (or an
// invalid marker) plus the per-token log-probabilities the model
// reported for its own output.
struct Candidate {
  std::string model;
  GenerationResult molecule;
  TokenLogProbs token_logprobs;
};

// Mean per-token log-likelihood; equals -sequence_ce. 0 is maximal.
double confidence(const TokenLogProbs& tlp);

struct SelectionRow {
  std::string model;
  bool valid = false;
  std::optional<double> confidence;  // absent for invalid candidates
};

struct Selection {
  int winner = -1;  // index into the candidate list
  std::vector<SelectionRow> table;
};

// Drops invalid candidates, then picks the one with maximal confidence;
// ties go to the earliest in the list. Throws NoValidCandidateError when
// nothing valid remains and InvalidArgumentError when a valid candidate
// carries no log-probabilities.
Selection select(const std::vector<Candidate>& candidates);

}  // namespace moltok

#endif  // MOLTOK_ENSEMBLE_HPP
