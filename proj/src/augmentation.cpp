#include "hurwitz/augmentation.hpp"

#include <string>

#include "hurwitz/error.hpp"

namespace hurwitz {

AugmentationContext AugmentationContext::make(int target_degree, Permutation alpha, int x) {
  if (target_degree < 2)
    fail(ErrorCode::DegreeMismatch, "augmentation target degree must be >= 2");
  if (alpha.degree() != target_degree - 1)
    fail(ErrorCode::DegreeMismatch, "alpha must have degree target_degree - 1");
  if (x < 1 || x > target_degree - 1)
    fail(ErrorCode::InvalidAnchor, "x = " + std::to_string(x) + " out of range");
  int anchor1 = 0;
  for (int p = 1; p <= alpha.degree(); ++p)
    if (alpha.image(p) == x) {
      anchor1 = p;
      break;
    }
  return AugmentationContext{target_degree, std::move(alpha), x, anchor1};
}

bool can_augment(const Cycle& sigma1, const Cycle& sigma2, const Permutation& alpha) {
  if (sigma1.degree() != sigma2.degree() || sigma1.degree() != alpha.degree())
    fail(ErrorCode::DegreeMismatch, "can_augment: degrees differ");
  if (sigma1.is_identity() || sigma2.is_identity()) return true;
  // alpha sigma1 alpha^{-1} moves exactly the alpha-images of sigma1's support.
  for (int p : sigma1.support())
    if (sigma2.moves(alpha.image(p))) return true;
  return false;
}

std::optional<int> choose_x(const Cycle& sigma1, const Cycle& sigma2,
                            const Permutation& alpha) {
  if (sigma1.degree() != sigma2.degree() || sigma1.degree() != alpha.degree())
    fail(ErrorCode::DegreeMismatch, "choose_x: degrees differ");
  const Permutation alpha_inv = inverse(alpha);
  for (int x = 1; x <= alpha.degree(); ++x) {
    if (!sigma2.is_identity() && !sigma2.moves(x)) continue;
    if (!sigma1.is_identity() && !sigma1.moves(alpha_inv.image(x))) continue;
    return x;
  }
  return std::nullopt;
}

std::pair<Cycle, Cycle> augment_pair(const Cycle& sigma1, const Cycle& sigma2,
                                     const AugmentationContext& ctx) {
  const int d = ctx.target_degree;
  if (sigma1.degree() != d - 1 || sigma2.degree() != d - 1 ||
      ctx.alpha.degree() != d - 1)
    fail(ErrorCode::DegreeMismatch, "augment_pair: inputs must live in Sym(d-1)");
  if (!can_augment(sigma1, sigma2, ctx.alpha))
    fail(ErrorCode::NotAugmentable,
         "cycles are disjoint after conjugation and neither is the identity");
  if (!sigma2.is_identity() && !sigma2.moves(ctx.x))
    fail(ErrorCode::InvalidAnchor, "x = " + std::to_string(ctx.x) + " not moved by sigma2");
  if (!sigma1.is_identity() && !sigma1.moves(ctx.anchor1))
    fail(ErrorCode::InvalidAnchor,
         "alpha^{-1}(x) = " + std::to_string(ctx.anchor1) + " not moved by sigma1");

  // sigma1 = (anchor1 a_1 ... a_s)  ->  (anchor1 a_1 ... a_s d)
  std::vector<int> support1 = sigma1.written_from(ctx.anchor1);
  support1.push_back(d);

  // sigma2 = (b_1 ... b_t x)  ->  (d b_1 ... b_t x)
  std::vector<int> support2 =
      sigma2.is_identity() ? std::vector<int>{ctx.x}
                           : sigma2.written_from(sigma2.apply(ctx.x));
  support2.insert(support2.begin(), d);

  return {Cycle::from_support(d, std::move(support1)),
          Cycle::from_support(d, std::move(support2))};
}

Permutation tuple_alpha(const std::vector<Cycle>& tuple, int i, int j) {
  const int degree = tuple.front().degree();
  Permutation alpha = Permutation::identity(degree);
  for (int k = i + 1; k <= j - 1; ++k)
    alpha = compose(tuple[static_cast<size_t>(k - 1)].to_permutation(), alpha);
  return alpha;
}

std::vector<Cycle> augment_in_tuple(const std::vector<Cycle>& tuple, int i, int j,
                                    std::optional<int> x) {
  const int n = static_cast<int>(tuple.size());
  if (i < 1 || j <= i || j > n)
    fail(ErrorCode::BadIndex, "augment_in_tuple: need 1 <= i < j <= n");
  const int degree = tuple.front().degree();
  for (const auto& c : tuple)
    if (c.degree() != degree)
      fail(ErrorCode::DegreeMismatch, "augment_in_tuple: mixed degrees in tuple");

  const Permutation alpha = tuple_alpha(tuple, i, j);
  const Cycle& sigma1 = tuple[static_cast<size_t>(i - 1)];
  const Cycle& sigma2 = tuple[static_cast<size_t>(j - 1)];
  if (!can_augment(sigma1, sigma2, alpha))
    fail(ErrorCode::NotAugmentable,
         "pair (" + std::to_string(i) + "," + std::to_string(j) + ") is not augmentable");
  const int chosen_x = x ? *x : *choose_x(sigma1, sigma2, alpha);

  const auto ctx = AugmentationContext::make(degree + 1, alpha, chosen_x);
  auto [aug1, aug2] = augment_pair(sigma1, sigma2, ctx);

  std::vector<Cycle> out;
  out.reserve(tuple.size());
  for (int k = 1; k <= n; ++k) {
    if (k == i)
      out.push_back(aug1);
    else if (k == j)
      out.push_back(aug2);
    else
      out.push_back(tuple[static_cast<size_t>(k - 1)].viewed_in(degree + 1));
  }
  return out;
}

}  // namespace hurwitz
