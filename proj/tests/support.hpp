#pragma once

#include <numeric>
#include <random>
#include <vector>

#include "hurwitz/cycle.hpp"
#include "hurwitz/permutation.hpp"

namespace test_support {

inline hurwitz::Permutation random_permutation(std::mt19937& rng, int degree) {
  std::vector<int> images(static_cast<size_t>(degree));
  std::iota(images.begin(), images.end(), 1);
  std::shuffle(images.begin(), images.end(), rng);
  return hurwitz::Permutation::from_images(std::move(images));
}

/// A random cycle of the given length; length <= 1 gives the identity.
inline hurwitz::Cycle random_cycle(std::mt19937& rng, int degree, int length) {
  std::vector<int> points(static_cast<size_t>(degree));
  std::iota(points.begin(), points.end(), 1);
  std::shuffle(points.begin(), points.end(), rng);
  points.resize(static_cast<size_t>(std::max(0, length)));
  return hurwitz::Cycle::from_support(degree, std::move(points));
}

inline hurwitz::Permutation product_right_to_left(const std::vector<hurwitz::Cycle>& cycles,
                                                  int degree) {
  hurwitz::Permutation product = hurwitz::Permutation::identity(degree);
  for (const auto& c : cycles) product = hurwitz::compose(c.to_permutation(), product);
  return product;
}

inline hurwitz::Permutation product_right_to_left(
    const std::vector<hurwitz::Permutation>& perms, int degree) {
  hurwitz::Permutation product = hurwitz::Permutation::identity(degree);
  for (const auto& sigma : perms) product = hurwitz::compose(sigma, product);
  return product;
}

}  // namespace test_support
