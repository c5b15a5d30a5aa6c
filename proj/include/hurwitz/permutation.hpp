#pragma once

#include <numeric>
#include <span>
#include <string>
#include <vector>

#include "hurwitz/error.hpp"

namespace hurwitz {

/// A permutation of the points {1,...,d}, stored as its image table.
/// Permutations are immutable values; every operation returns a fresh one.
class Permutation {
public:
  static Permutation identity(int degree) {
    if (degree < 1) fail(ErrorCode::InvalidPermutation, "degree must be >= 1");
    std::vector<int> images(static_cast<size_t>(degree));
    std::iota(images.begin(), images.end(), 1);
    return Permutation(std::move(images), unchecked{});
  }

  /// images[p-1] is the image of p; the table must be a bijection of 1..d.
  static Permutation from_images(std::vector<int> images) {
    const int d = static_cast<int>(images.size());
    if (d < 1) fail(ErrorCode::InvalidPermutation, "empty image table");
    std::vector<bool> seen(static_cast<size_t>(d), false);
    for (int v : images) {
      if (v < 1 || v > d || seen[static_cast<size_t>(v - 1)])
        fail(ErrorCode::InvalidPermutation, "image table is not a bijection of 1..d");
      seen[static_cast<size_t>(v - 1)] = true;
    }
    return Permutation(std::move(images), unchecked{});
  }

  int degree() const { return static_cast<int>(images_.size()); }

  int image(int p) const { return images_[static_cast<size_t>(p - 1)]; }

  bool moves(int p) const { return image(p) != p; }

  bool is_identity() const {
    for (int p = 1; p <= degree(); ++p)
      if (image(p) != p) return false;
    return true;
  }

  const std::vector<int>& images() const { return images_; }

  friend bool operator==(const Permutation&, const Permutation&) = default;

  friend Permutation compose(const Permutation&, const Permutation&);
  friend Permutation inverse(const Permutation&);
  friend Permutation conjugate(const Permutation&, const Permutation&);
  friend Permutation embed(const Permutation&, int);

private:
  struct unchecked {};
  Permutation(std::vector<int> images, unchecked) : images_(std::move(images)) {}

  std::vector<int> images_;
};

/// (sigma gamma)(x) = sigma(gamma(x)): gamma acts first.
inline Permutation compose(const Permutation& sigma, const Permutation& gamma) {
  if (sigma.degree() != gamma.degree())
    fail(ErrorCode::DegreeMismatch, "compose: degrees differ");
  std::vector<int> images(static_cast<size_t>(sigma.degree()));
  for (int p = 1; p <= sigma.degree(); ++p)
    images[static_cast<size_t>(p - 1)] = sigma.image(gamma.image(p));
  return Permutation(std::move(images), Permutation::unchecked{});
}

inline Permutation inverse(const Permutation& sigma) {
  std::vector<int> images(static_cast<size_t>(sigma.degree()));
  for (int p = 1; p <= sigma.degree(); ++p)
    images[static_cast<size_t>(sigma.image(p) - 1)] = p;
  return Permutation(std::move(images), Permutation::unchecked{});
}

/// tau sigma tau^{-1}.
inline Permutation conjugate(const Permutation& tau, const Permutation& sigma) {
  if (tau.degree() != sigma.degree())
    fail(ErrorCode::DegreeMismatch, "conjugate: degrees differ");
  std::vector<int> images(static_cast<size_t>(sigma.degree()));
  for (int p = 1; p <= sigma.degree(); ++p)
    images[static_cast<size_t>(tau.image(p) - 1)] = tau.image(sigma.image(p));
  return Permutation(std::move(images), Permutation::unchecked{});
}

/// View sigma inside Sym(degree), fixing the added points.
inline Permutation embed(const Permutation& sigma, int degree) {
  if (degree < sigma.degree())
    fail(ErrorCode::DegreeMismatch, "embed: target degree smaller than source");
  std::vector<int> images(static_cast<size_t>(degree));
  std::iota(images.begin(), images.end(), 1);
  for (int p = 1; p <= sigma.degree(); ++p)
    images[static_cast<size_t>(p - 1)] = sigma.image(p);
  return Permutation(std::move(images), Permutation::unchecked{});
}

inline Permutation power(const Permutation& sigma, unsigned long long k) {
  Permutation result = Permutation::identity(sigma.degree());
  Permutation base = sigma;
  while (k > 0) {
    if (k & 1ull) result = compose(result, base);
    if (k >>= 1) base = compose(base, base);
  }
  return result;
}

/// Nontrivial cycles of sigma, each written from its smallest point, ordered
/// by smallest point. Fixed points are omitted.
inline std::vector<std::vector<int>> cycles_of(const Permutation& sigma) {
  std::vector<std::vector<int>> cycles;
  std::vector<bool> done(static_cast<size_t>(sigma.degree()), false);
  for (int p = 1; p <= sigma.degree(); ++p) {
    if (done[static_cast<size_t>(p - 1)] || !sigma.moves(p)) continue;
    std::vector<int> cycle;
    for (int q = p; !done[static_cast<size_t>(q - 1)]; q = sigma.image(q)) {
      cycle.push_back(q);
      done[static_cast<size_t>(q - 1)] = true;
    }
    cycles.push_back(std::move(cycle));
  }
  return cycles;
}

/// Orbit computation over the generators and their inverses; no group
/// elements beyond the generators are ever formed.
inline bool is_transitive(std::span<const Permutation> generators, int degree) {
  if (degree < 1) fail(ErrorCode::InvalidPermutation, "degree must be >= 1");
  for (const auto& g : generators)
    if (g.degree() != degree) fail(ErrorCode::DegreeMismatch, "is_transitive: degree mismatch");
  std::vector<Permutation> moves;
  moves.reserve(generators.size() * 2);
  for (const auto& g : generators) {
    moves.push_back(g);
    moves.push_back(inverse(g));
  }
  std::vector<bool> seen(static_cast<size_t>(degree), false);
  std::vector<int> stack{1};
  seen[0] = true;
  int reached = 1;
  while (!stack.empty()) {
    const int p = stack.back();
    stack.pop_back();
    for (const auto& g : moves) {
      const int q = g.image(p);
      if (!seen[static_cast<size_t>(q - 1)]) {
        seen[static_cast<size_t>(q - 1)] = true;
        ++reached;
        stack.push_back(q);
      }
    }
  }
  return reached == degree;
}

inline bool is_transitive(const std::vector<Permutation>& generators, int degree) {
  return is_transitive(std::span<const Permutation>(generators), degree);
}

/// Disjoint-cycle text form, fixed points omitted: "(1 2)(3 4)"; "()" for the
/// identity.
inline std::string to_string(const Permutation& sigma) {
  const auto cycles = cycles_of(sigma);
  if (cycles.empty()) return "()";
  std::string out;
  for (const auto& cycle : cycles) {
    out += '(';
    for (size_t i = 0; i < cycle.size(); ++i) {
      if (i > 0) out += ' ';
      out += std::to_string(cycle[i]);
    }
    out += ')';
  }
  return out;
}

}  // namespace hurwitz
