//
// Copyright 2026 moltok contributors
// SPDX-License-Identifier: Apache-2.0
//

#ifndef MOLTOK_TRAINING_HPP
#define MOLTOK_TRAINING_HPP

#include <cstdint>
#include <utility>
#include <vector>

#include "moltok/vocab.hpp"

namespace moltok {

// Log-probabilities an external model assigned to the realized token at
// each position (natural log, every entry <= 0).
struct TokenLogProbs {
  std::vector<double> values;
};

// Per-position masked-LM weights for one sequence: softmax over
// log(atom_count + 1), i.e. weight_i = (A_i + 1) / sum_j (A_j + 1).
// Specials contribute atom count 0. Throws EmptyInputError on an empty
// sequence and UnknownIdError on ids outside the vocabulary.
std::vector<double> importance_weights(const std::vector<int>& ids,
                                       const Vocabulary& vocab);

struct CorruptedPair {
  std::vector<int> input_ids;   // spans replaced by ascending sentinels
  std::vector<int> target_ids;  // sentinel, span contents, sentinel, ...
  std::vector<std::pair<int, int>> spans;  // (start, length) in the original
};

// Deterministic span corruption: ~rate of positions masked in spans of
// geometric length with the given mean, at least one position always.
// Splicing the unmasked input around the target spans reproduces the
// original ids exactly.
CorruptedPair span_corrupt(const std::vector<int>& ids, std::uint64_t seed,
                           double corruption_rate = 0.15,
                           double mean_span = 3.0);

// Importance-weighted masked-LM loss over the masked positions; the
// restricted weights are renormalized to sum to 1 first. Uniform weights
// reduce this to the plain mean. Throws LengthMismatchError.
double weighted_mlm_loss(const std::vector<double>& per_token_nll,
                         const std::vector<double>& weights);

// Mean negative log-likelihood of a generated sequence; the negative of
// the ensemble confidence.
double sequence_ce(const TokenLogProbs& tlp);

}  // namespace moltok

#endif  // MOLTOK_TRAINING_HPP
