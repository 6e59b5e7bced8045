//
// Copyright 2026 moltok contributors
// SPDX-License-Identifier: Apache-2.0
//

#ifndef MOLTOK_DIAGNOSTICS_HPP
#define MOLTOK_DIAGNOSTICS_HPP

#include <string>
#include <vector>

namespace moltok {

enum class WarningKind {
  Valence,          // bond order sum exceeds the standard valence model
  DroppedStereo,    // stereo annotation could not be kept consistent
  DroppedChirality, // chirality on a center that cannot be tetrahedral
  ExcessTokens,     // detokenizer truncated tokens with no open slot left
  SkippedToken,     // decoder skipped a special or unknown id
  Other,
};

struct Warning {
  WarningKind kind = WarningKind::Other;
  std::string message;
};

// Non-fatal issue collector. Operations that must stay total on messy
// corpus inputs report here instead of throwing. Passing nullptr where a
// Diagnostics* is accepted silently discards warnings.
class Diagnostics {
public:
  void warn(WarningKind kind, std::string message) {
    warnings_.push_back({kind, std::move(message)});
  }

  const std::vector<Warning>& warnings() const { return warnings_; }
  bool empty() const { return warnings_.empty(); }
  std::size_t count(WarningKind kind) const {
    std::size_t n = 0;
    for (const Warning& w : warnings_)
      if (w.kind == kind)
        ++n;
    return n;
  }
  void clear() { warnings_.clear(); }

private:
  std::vector<Warning> warnings_;
};

inline void warn(Diagnostics* diag, WarningKind kind, std::string message) {
  if (diag != nullptr)
    diag->warn(kind, std::move(message));
}

}  // namespace moltok

#endif  // MOLTOK_DIAGNOSTICS_HPP
