#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hurwitz/error.hpp"
#include "hurwitz/permutation.hpp"

namespace hurwitz {

/// A cyclic permutation of {1,...,d} given by its ordered support. The
/// identity has empty support and length 1 by convention; its written anchor
/// "(x)" is never stored. Nonempty supports are kept rotated so the smallest
/// point comes first, which makes equality a plain field comparison.
class Cycle {
public:
  static Cycle identity(int degree) {
    if (degree < 1) fail(ErrorCode::InvalidCycle, "degree must be >= 1");
    return Cycle(degree, {});
  }

  /// A support of size <= 1 denotes the identity.
  static Cycle from_support(int degree, std::vector<int> support) {
    if (degree < 1) fail(ErrorCode::InvalidCycle, "degree must be >= 1");
    std::vector<bool> seen(static_cast<size_t>(degree), false);
    for (int p : support) {
      if (p < 1 || p > degree)
        fail(ErrorCode::InvalidCycle, "support point " + std::to_string(p) + " out of range");
      if (seen[static_cast<size_t>(p - 1)])
        fail(ErrorCode::InvalidCycle, "support point " + std::to_string(p) + " repeated");
      seen[static_cast<size_t>(p - 1)] = true;
    }
    if (support.size() <= 1) return Cycle(degree, {});
    auto smallest = std::min_element(support.begin(), support.end());
    std::rotate(support.begin(), smallest, support.end());
    return Cycle(degree, std::move(support));
  }

  /// Requires sigma to consist of at most one nontrivial cycle.
  static Cycle from_permutation(const Permutation& sigma) {
    auto cycles = cycles_of(sigma);
    if (cycles.empty()) return identity(sigma.degree());
    if (cycles.size() > 1)
      fail(ErrorCode::InvalidCycle, "permutation is not a single cycle");
    return Cycle(sigma.degree(), std::move(cycles.front()));
  }

  int degree() const { return degree_; }

  int length() const { return support_.empty() ? 1 : static_cast<int>(support_.size()); }

  bool is_identity() const { return support_.empty(); }

  const std::vector<int>& support() const { return support_; }

  bool moves(int p) const {
    return std::find(support_.begin(), support_.end(), p) != support_.end();
  }

  int apply(int p) const {
    auto it = std::find(support_.begin(), support_.end(), p);
    if (it == support_.end()) return p;
    ++it;
    return it == support_.end() ? support_.front() : *it;
  }

  Permutation to_permutation() const {
    std::vector<int> images(static_cast<size_t>(degree_));
    std::iota(images.begin(), images.end(), 1);
    for (size_t i = 0; i < support_.size(); ++i)
      images[static_cast<size_t>(support_[i] - 1)] = support_[(i + 1) % support_.size()];
    return Permutation::from_images(std::move(images));
  }

  /// The same cycle seen in a larger symmetric group.
  Cycle viewed_in(int degree) const {
    if (degree < degree_)
      fail(ErrorCode::DegreeMismatch, "viewed_in: target degree smaller than source");
    return Cycle(degree, support_);
  }

  /// The support rotated to start at anchor. For the identity this is the
  /// one-point written form "(anchor)".
  std::vector<int> written_from(int anchor) const {
    if (anchor < 1 || anchor > degree_)
      fail(ErrorCode::InvalidAnchor, "anchor " + std::to_string(anchor) + " out of range");
    if (is_identity()) return {anchor};
    auto it = std::find(support_.begin(), support_.end(), anchor);
    if (it == support_.end())
      fail(ErrorCode::InvalidAnchor,
           "anchor " + std::to_string(anchor) + " not moved by the cycle");
    std::vector<int> out(it, support_.end());
    out.insert(out.end(), support_.begin(), it);
    return out;
  }

  friend bool operator==(const Cycle&, const Cycle&) = default;

private:
  Cycle(int degree, std::vector<int> support)
      : degree_(degree), support_(std::move(support)) {}

  int degree_;
  std::vector<int> support_;
};

/// Smallest point moved by both cycles; empty if they are disjoint. The
/// identity moves nothing and is disjoint from everything.
inline std::optional<int> common_moved_point(const Cycle& c1, const Cycle& c2) {
  std::optional<int> best;
  for (int p : c1.support())
    if (c2.moves(p) && (!best || p < *best)) best = p;
  return best;
}

inline std::string to_string(const Cycle& cycle) {
  std::string out = "(";
  for (size_t i = 0; i < cycle.support().size(); ++i) {
    if (i > 0) out += ' ';
    out += std::to_string(cycle.support()[i]);
  }
  out += ')';
  return out;
}

/// Parses "(1 2 3)"; "()" is the identity.
inline Cycle parse_cycle(int degree, std::string_view text) {
  size_t pos = 0;
  auto skip_ws = [&] { while (pos < text.size() && text[pos] == ' ') ++pos; };
  skip_ws();
  if (pos >= text.size() || text[pos] != '(')
    fail(ErrorCode::ParseError, "cycle must start with '('");
  ++pos;
  std::vector<int> support;
  while (true) {
    skip_ws();
    if (pos >= text.size()) fail(ErrorCode::ParseError, "unterminated cycle");
    if (text[pos] == ')') {
      ++pos;
      break;
    }
    int value = 0;
    bool any = false;
    while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') {
      value = value * 10 + (text[pos] - '0');
      ++pos;
      any = true;
    }
    if (!any) fail(ErrorCode::ParseError, "expected a point in cycle");
    support.push_back(value);
  }
  skip_ws();
  if (pos != text.size()) fail(ErrorCode::ParseError, "trailing characters after cycle");
  return Cycle::from_support(degree, std::move(support));
}

inline bool is_transitive(const std::vector<Cycle>& cycles, int degree) {
  std::vector<Permutation> perms;
  perms.reserve(cycles.size());
  for (const auto& c : cycles) perms.push_back(c.to_permutation());
  return is_transitive(std::span<const Permutation>(perms), degree);
}

}  // namespace hurwitz
