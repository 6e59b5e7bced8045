//
// Copyright 2026 moltok contributors
// SPDX-License-Identifier: Apache-2.0
//

#include "moltok/training.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "moltok/errors.hpp"

namespace moltok {

std::vector<double> importance_weights(const std::vector<int>& ids,
                                       const Vocabulary& vocab) {
  if (ids.empty())
    throw EmptyInputError("importance weights of an empty sequence");
  // softmax(log(A+1)) collapses to (A+1)/sum(A+1) exactly
  std::vector<double> weights(ids.size());
  double total = 0.0;
  for (std::size_t i = 0; i < ids.size(); ++i) {
    weights[i] = static_cast<double>(vocab.atom_count(ids[i]) + 1);
    total += weights[i];
  }
  for (double& w : weights)
    w /= total;
  return weights;
}

CorruptedPair span_corrupt(const std::vector<int>& ids, std::uint64_t seed,
                           double corruption_rate, double mean_span) {
  if (ids.empty())
    throw EmptyInputError("span corruption of an empty sequence");
  if (corruption_rate <= 0.0 || corruption_rate >= 1.0)
    throw InvalidArgumentError("corruption rate must lie in (0, 1)");
  if (mean_span < 1.0)
    throw InvalidArgumentError("mean span length must be >= 1");

  int n = static_cast<int>(ids.size());
  int target =
      std::clamp(static_cast<int>(std::lround(corruption_rate * n)), 1, n);

  std::mt19937_64 rng(seed);
  // shifted geometric on {1,2,...} with the requested mean
  std::geometric_distribution<int> geo(std::min(1.0 / mean_span, 1.0 - 1e-12));
  auto draw_length = [&] { return mean_span <= 1.0 ? 1 : 1 + geo(rng); };

  // span lengths truncated so they cover the target exactly
  std::vector<int> lengths;
  int assigned = 0;
  while (assigned < target) {
    int len = std::min(draw_length(), target - assigned);
    lengths.push_back(len);
    assigned += len;
  }
  // spans must be separated by at least one kept token; merge the two
  // shortest spans while the layout cannot fit
  while (static_cast<int>(lengths.size()) - 1 > n - target) {
    std::sort(lengths.begin(), lengths.end());
    lengths[1] += lengths[0];
    lengths.erase(lengths.begin());
  }
  int k = static_cast<int>(lengths.size());
  if (k > Vocabulary::kNumSentinels) {
    // collapse the tail; one sentinel per span is a hard budget
    std::sort(lengths.begin(), lengths.end(), std::greater<int>());
    while (static_cast<int>(lengths.size()) > Vocabulary::kNumSentinels) {
      lengths[lengths.size() - 2] += lengths.back();
      lengths.pop_back();
    }
    k = static_cast<int>(lengths.size());
  }
  std::shuffle(lengths.begin(), lengths.end(), rng);

  // place k spans with >=1 kept token between consecutive spans:
  // distribute the remaining slack over the k+1 gaps
  int kept = n - target;
  int slack = kept - (k - 1);
  std::vector<int> gaps(static_cast<std::size_t>(k) + 1, 0);
  for (int i = 1; i < k; ++i)
    gaps[static_cast<std::size_t>(i)] = 1;
  for (int s = 0; s < slack; ++s) {
    std::uniform_int_distribution<int> pick(0, k);
    ++gaps[static_cast<std::size_t>(pick(rng))];
  }

  CorruptedPair out;
  int pos = 0;
  for (int i = 0; i < k; ++i) {
    pos += gaps[static_cast<std::size_t>(i)];
    out.spans.emplace_back(pos, lengths[static_cast<std::size_t>(i)]);
    pos += lengths[static_cast<std::size_t>(i)];
  }

  std::size_t span_i = 0;
  for (int i = 0; i < n;) {
    if (span_i < out.spans.size() && i == out.spans[span_i].first) {
      int sentinel = Vocabulary::sentinel_id(static_cast<int>(span_i));
      out.input_ids.push_back(sentinel);
      out.target_ids.push_back(sentinel);
      for (int j = 0; j < out.spans[span_i].second; ++j)
        out.target_ids.push_back(ids[static_cast<std::size_t>(i + j)]);
      i += out.spans[span_i].second;
      ++span_i;
    } else {
      out.input_ids.push_back(ids[static_cast<std::size_t>(i)]);
      ++i;
    }
  }
  return out;
}

double weighted_mlm_loss(const std::vector<double>& per_token_nll,
                         const std::vector<double>& weights) {
  if (per_token_nll.size() != weights.size())
    throw LengthMismatchError("loss terms and weights differ in length");
  if (per_token_nll.empty())
    throw EmptyInputError("masked-LM loss over zero positions");
  double total_weight = 0.0;
  for (double w : weights) {
    if (w < 0.0)
      throw InvalidArgumentError("negative importance weight");
    total_weight += w;
  }
  if (total_weight <= 0.0)
    throw InvalidArgumentError("importance weights sum to zero");
  double loss = 0.0;
  for (std::size_t i = 0; i < per_token_nll.size(); ++i)
    loss += (weights[i] / total_weight) * per_token_nll[i];
  return loss;
}

double sequence_ce(const TokenLogProbs& tlp) {
  if (tlp.values.empty())
    throw EmptyInputError("cross entropy of an empty sequence");
  double sum = 0.0;
  for (double lp : tlp.values) {
    if (lp > 0.0)
      throw InvalidArgumentError("log-probability above zero");
    sum += lp;
  }
  return -sum / static_cast<double>(tlp.values.size());
}

}  // namespace moltok
