//
// Copyright 2026 moltok contributors
// SPDX-License-Identifier: Apache-2.0
//

#ifndef MOLTOK_METRICS_HPP
#define MOLTOK_METRICS_HPP

#include <optional>
#include <vector>

#include "moltok/fingerprint.hpp"
#include "moltok/mol_graph.hpp"

namespace moltok {

// A model output: either a molecule or an invalid generation.
struct GenerationResult {
  std::optional<MolGraph> mol;

  bool valid() const { return mol.has_value(); }
  static GenerationResult invalid() { return {}; }
};

struct EvalReport {
  double exact = 0.0;     // fraction exactly matching the reference
  double morgan = 0.0;    // mean Morgan Tanimoto, invalid scored 0
  double path = 0.0;      // mean path Tanimoto, invalid scored 0
  double validity = 0.0;  // fraction of valid generations
  int n = 0;
};

struct EvalParams {
  int morgan_radius = 2;
  int path_max_len = 7;
  int nbits = 2048;
};

bool exact_match(const MolGraph& gen, const MolGraph& ref);

// Averages the metrics over (generation, reference) pairs. Similarity of
// an invalid generation counts as 0. Throws EmptyInputError.
EvalReport evaluate(
    const std::vector<std::pair<GenerationResult, MolGraph>>& pairs,
    const EvalParams& params = {});

}  // namespace moltok

#endif  // MOLTOK_METRICS_HPP
