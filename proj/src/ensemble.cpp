//
// Copyright 2026 moltok contributors
// SPDX-License-Identifier: Apache-2.0
//

#include "moltok/ensemble.hpp"

#include "moltok/errors.hpp"

namespace moltok {

double confidence(const TokenLogProbs& tlp) {
  return -sequence_ce(tlp);
}

Selection select(const std::vector<Candidate>& candidates) {
  Selection out;
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    const Candidate& c = candidates[i];
    SelectionRow row;
    row.model = c.model;
    row.valid = c.molecule.valid();
    if (row.valid) {
      if (c.token_logprobs.values.empty())
        throw InvalidArgumentError("valid candidate '" + c.model +
                                   "' has no token log-probabilities");
      row.confidence = confidence(c.token_logprobs);
      if (out.winner == -1 ||
          *row.confidence > *out.table[static_cast<std::size_t>(out.winner)].confidence)
        out.winner = static_cast<int>(i);
    }
    out.table.push_back(std::move(row));
  }
  if (out.winner == -1)
    throw NoValidCandidateError("no candidate produced a valid molecule");
  return out;
}

}  // namespace moltok
