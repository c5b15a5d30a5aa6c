#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "hurwitz/cycle.hpp"
#include "hurwitz/permutation.hpp"

namespace hurwitz {

/// Fixed data for one pair augmentation. The pair lives in Sym(d-1) where
/// d = target_degree; the augmentation inserts the new point d into both
/// cycles so that the product sigma2 * alpha * sigma1 is unchanged when
/// everything is viewed in Sym(d).
///
/// x anchors the written form of the higher-index cycle (it ends at x);
/// anchor1 = alpha^{-1}(x) anchors the lower-index cycle (it starts there).
struct AugmentationContext {
  int target_degree;
  Permutation alpha;
  int x;
  int anchor1;

  static AugmentationContext make(int target_degree, Permutation alpha, int x);
};

/// True iff sigma2 and alpha sigma1 alpha^{-1} share a moved point, or at
/// least one of sigma1, sigma2 is the identity.
bool can_augment(const Cycle& sigma1, const Cycle& sigma2, const Permutation& alpha);

/// Smallest x that is moved by sigma2 (or sigma2 is the identity) and whose
/// preimage alpha^{-1}(x) is moved by sigma1 (or sigma1 is the identity).
/// Empty exactly when can_augment is false.
std::optional<int> choose_x(const Cycle& sigma1, const Cycle& sigma2,
                            const Permutation& alpha);

/// Inserts the new point d right after the written form of sigma1 anchored at
/// alpha^{-1}(x) and right before the written form of sigma2 ending at x.
/// Both lengths grow by exactly one.
std::pair<Cycle, Cycle> augment_pair(const Cycle& sigma1, const Cycle& sigma2,
                                     const AugmentationContext& ctx);

/// Product of the tuple entries strictly between positions i and j (1-based,
/// i < j), the entry closer to i acting first; identity when they are
/// adjacent.
Permutation tuple_alpha(const std::vector<Cycle>& tuple, int i, int j);

/// Augments the pair (tuple[i], tuple[j]) with alpha taken from the current
/// tuple and re-types every entry one degree up. The full right-to-left
/// product of the tuple is unchanged. If x is absent the smallest valid
/// choice is used.
std::vector<Cycle> augment_in_tuple(const std::vector<Cycle>& tuple, int i, int j,
                                    std::optional<int> x = std::nullopt);

}  // namespace hurwitz
