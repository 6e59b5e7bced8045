//
// Copyright 2026 moltok contributors
// SPDX-License-Identifier: Apache-2.0
//

#include "moltok/metrics.hpp"

#include "moltok/canonical.hpp"
#include "moltok/errors.hpp"

namespace moltok {

bool exact_match(const MolGraph& gen, const MolGraph& ref) {
  return molecules_equal(gen, ref);
}

EvalReport evaluate(
    const std::vector<std::pair<GenerationResult, MolGraph>>& pairs,
    const EvalParams& params) {
  if (pairs.empty())
    throw EmptyInputError("evaluation over an empty pair list");
  EvalReport report;
  report.n = static_cast<int>(pairs.size());
  double exact = 0, morgan = 0, path = 0, valid = 0;
  for (const auto& [gen, ref] : pairs) {
    if (!gen.valid())
      continue;
    valid += 1;
    if (exact_match(*gen.mol, ref))
      exact += 1;
    morgan += tanimoto(
        morgan_fingerprint(*gen.mol, params.morgan_radius, params.nbits),
        morgan_fingerprint(ref, params.morgan_radius, params.nbits));
    path += tanimoto(
        path_fingerprint(*gen.mol, params.path_max_len, params.nbits),
        path_fingerprint(ref, params.path_max_len, params.nbits));
  }
  double n = static_cast<double>(report.n);
  report.exact = exact / n;
  report.morgan = morgan / n;
  report.path = path / n;
  report.validity = valid / n;
  return report;
}

}  // namespace moltok
