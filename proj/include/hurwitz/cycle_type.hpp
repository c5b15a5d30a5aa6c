#pragma once

#include <algorithm>
#include <functional>
#include <numeric>
#include <string>
#include <vector>

#include "hurwitz/error.hpp"
#include "hurwitz/permutation.hpp"

namespace hurwitz {

/// A partition of d, kept weakly decreasing.
class CycleType {
public:
  CycleType() = default;

  explicit CycleType(std::vector<int> parts) : parts_(std::move(parts)) {
    if (parts_.empty()) fail(ErrorCode::InvalidPartition, "partition must be nonempty");
    for (int part : parts_)
      if (part < 1) fail(ErrorCode::InvalidPartition, "partition parts must be >= 1");
    std::sort(parts_.begin(), parts_.end(), std::greater<int>());
  }

  const std::vector<int>& parts() const { return parts_; }

  int sum() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

  friend bool operator==(const CycleType&, const CycleType&) = default;

private:
  std::vector<int> parts_;
};

/// The partition of d given by the lengths of sigma's disjoint cycles, fixed
/// points contributing 1s.
inline CycleType cycle_type(const Permutation& sigma) {
  std::vector<int> parts;
  std::vector<bool> done(static_cast<size_t>(sigma.degree()), false);
  for (int p = 1; p <= sigma.degree(); ++p) {
    if (done[static_cast<size_t>(p - 1)]) continue;
    int length = 0;
    for (int q = p; !done[static_cast<size_t>(q - 1)]; q = sigma.image(q)) {
      done[static_cast<size_t>(q - 1)] = true;
      ++length;
    }
    parts.push_back(length);
  }
  return CycleType(std::move(parts));
}

inline std::string to_string(const CycleType& type) {
  std::string out = "[";
  for (size_t i = 0; i < type.parts().size(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(type.parts()[i]);
  }
  out += ']';
  return out;
}

}  // namespace hurwitz
