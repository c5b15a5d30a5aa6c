#include "hurwitz/witness.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "hurwitz/augmentation.hpp"
#include "hurwitz/error.hpp"

namespace hurwitz {

namespace {

int order_sum(const std::vector<int>& orders) {
  return std::accumulate(orders.begin(), orders.end(), 0);
}

void check_order_range(int degree, const std::vector<int>& orders, ErrorCode code) {
  if (orders.empty()) fail(code, "at least one ramification order is required");
  for (int e : orders)
    if (e < 2 || e > degree)
      fail(code, "order " + std::to_string(e) + " outside [2, " + std::to_string(degree) + "]");
}

Permutation product_right_to_left(const std::vector<Cycle>& cycles, int degree) {
  Permutation product = Permutation::identity(degree);
  for (const auto& c : cycles) product = compose(c.to_permutation(), product);
  return product;
}

bool consecutive_nondisjoint(const std::vector<Cycle>& cycles) {
  for (size_t i = 0; i + 1 < cycles.size(); ++i)
    if (!common_moved_point(cycles[i], cycles[i + 1])) return false;
  return true;
}

int smallest_moved(const Cycle& cycle) {
  if (cycle.is_identity())
    fail(ErrorCode::ConstructionBug, "smallest_moved called on the identity");
  return cycle.support().front();  // canonical rotation puts the minimum first
}

/// Simultaneously augments the pairs (set[0],set[1]), (set[2],set[3]), ... of
/// the tuple, every context computed from the pre-augmentation entries. When
/// the tuple holds an identity at padding_index, its pair is anchored at a
/// point shared with the identity's surviving neighbors so the augmented
/// entry (anchor d) keeps the chain of overlaps intact.
std::vector<Cycle> lift_pairs(int target_degree, const std::vector<Cycle>& tuple,
                              const std::vector<int>& augment_set,
                              std::optional<int> padding_index) {
  const int n = static_cast<int>(tuple.size());
  struct Plan {
    int lo, hi;
    AugmentationContext ctx;
  };
  std::vector<Plan> plans;
  for (size_t k = 0; k + 1 < augment_set.size(); k += 2) {
    const int lo = augment_set[k];
    const int hi = augment_set[k + 1];
    Permutation alpha = tuple_alpha(tuple, lo, hi);
    int x = 0;
    if (padding_index && (*padding_index == lo || *padding_index == hi)) {
      int anchor = 0;
      if (*padding_index == 1) {
        anchor = smallest_moved(tuple[1]);
      } else if (*padding_index == n) {
        anchor = smallest_moved(tuple[static_cast<size_t>(n - 2)]);
      } else {
        auto shared = common_moved_point(tuple[static_cast<size_t>(*padding_index - 2)],
                                         tuple[static_cast<size_t>(*padding_index)]);
        if (!shared)
          fail(ErrorCode::ConstructionBug, "neighbors of the identity entry are disjoint");
        anchor = *shared;
      }
      // The anchor names the point the identity's written form sits on; when
      // the identity plays the lower role the pair parameter is its alpha-image.
      x = (*padding_index == hi) ? anchor : alpha.image(anchor);
    } else {
      auto choice = choose_x(tuple[static_cast<size_t>(lo - 1)],
                             tuple[static_cast<size_t>(hi - 1)], alpha);
      if (!choice)
        fail(ErrorCode::ConstructionBug, "no valid anchor for an augmentation pair");
      x = *choice;
    }
    plans.push_back({lo, hi, AugmentationContext::make(target_degree, std::move(alpha), x)});
  }

  std::vector<Cycle> out;
  out.reserve(tuple.size());
  for (const auto& c : tuple) out.push_back(c.viewed_in(target_degree));
  for (const auto& plan : plans) {
    auto [aug1, aug2] = augment_pair(tuple[static_cast<size_t>(plan.lo - 1)],
                                     tuple[static_cast<size_t>(plan.hi - 1)], plan.ctx);
    out[static_cast<size_t>(plan.lo - 1)] = aug1;
    out[static_cast<size_t>(plan.hi - 1)] = aug2;
  }
  return out;
}

/// Recursive chain construction. Invariants maintained by the caller: some
/// e_i = d at every level, sum(e_i) - n even and >= 2(d - 1), 2 <= e_i <= d.
std::vector<Cycle> chain_recurse(int degree, const std::vector<int>& orders) {
  const int n = static_cast<int>(orders.size());
  if (n < 2) fail(ErrorCode::ConstructionBug, "chain recursion reached a 1-tuple");

  const bool all_two =
      std::all_of(orders.begin(), orders.end(), [](int e) { return e == 2; });
  const bool all_max =
      std::all_of(orders.begin(), orders.end(), [&](int e) { return e == degree; });

  if (all_two) {
    // Max-presence forces degree 2 here; n is even by parity.
    if (degree != 2)
      fail(ErrorCode::ConstructionBug, "all-2 chain base reached with degree != 2");
    return std::vector<Cycle>(static_cast<size_t>(n), Cycle::from_support(2, {1, 2}));
  }

  if (all_max) {
    std::vector<int> forward(static_cast<size_t>(degree));
    std::iota(forward.begin(), forward.end(), 1);
    const Cycle full = Cycle::from_support(degree, std::move(forward));
    const Cycle back = Cycle::from_permutation(inverse(full.to_permutation()));
    std::vector<Cycle> out;
    out.reserve(static_cast<size_t>(n));
    if (n % 2 == 0) {
      for (int i = 0; i < n; ++i) out.push_back(i % 2 == 0 ? full : back);
      return out;
    }
    // n odd forces degree odd by parity; the final inverse of the even
    // solution is replaced by two copies of its square root, itself a full
    // cycle since (degree+1)/2 is invertible mod degree.
    if (degree % 2 == 0)
      fail(ErrorCode::ConstructionBug, "odd tuple of full cycles with even degree");
    const Cycle root =
        Cycle::from_permutation(power(back.to_permutation(),
                                      static_cast<unsigned long long>((degree + 1) / 2)));
    if (root.length() != degree)
      fail(ErrorCode::ConstructionBug, "square root of a full cycle is not a full cycle");
    for (int i = 0; i < n - 2; ++i) out.push_back(i % 2 == 0 ? full : back);
    out.push_back(root);
    out.push_back(root);
    return out;
  }

  // One reduction step: lower every maximal entry by one, plus one non-maximal
  // padding entry when the maximal count is odd, so the lowered set has even
  // size and can be re-augmented in pairs on the way back up.
  std::vector<int> augment_set;
  for (int i = 1; i <= n; ++i)
    if (orders[static_cast<size_t>(i - 1)] == degree) augment_set.push_back(i);
  std::optional<int> padding_index;
  if (augment_set.size() % 2 == 1) {
    for (int i = 1; i <= n; ++i)
      if (orders[static_cast<size_t>(i - 1)] != degree) {
        padding_index = i;
        break;
      }
    augment_set.insert(
        std::lower_bound(augment_set.begin(), augment_set.end(), *padding_index),
        *padding_index);
  }

  std::vector<int> reduced = orders;
  for (int i : augment_set) reduced[static_cast<size_t>(i - 1)] -= 1;
  const bool dropped = padding_index && reduced[static_cast<size_t>(*padding_index - 1)] == 1;

  std::vector<int> recurse_orders = reduced;
  if (dropped)
    recurse_orders.erase(recurse_orders.begin() + (*padding_index - 1));

  std::vector<Cycle> sub = chain_recurse(degree - 1, recurse_orders);
  if (dropped)
    sub.insert(sub.begin() + (*padding_index - 1), Cycle::identity(degree - 1));

  return lift_pairs(degree, sub, augment_set,
                    dropped ? padding_index : std::nullopt);
}

/// Recursive transitive construction for admissible order sequences.
std::vector<Cycle> transitive_recurse(int degree, const std::vector<int>& orders) {
  const int n = static_cast<int>(orders.size());

  if (std::any_of(orders.begin(), orders.end(), [&](int e) { return e == degree; }))
    return chain_recurse(degree, orders);  // a full cycle makes transitivity automatic

  if (std::all_of(orders.begin(), orders.end(), [](int e) { return e == 2; })) {
    // Admissibility gives n even and n >= 2(d-1): walk the transposition
    // chain out and back, then pad with copies of (1 2).
    std::vector<Cycle> out;
    out.reserve(static_cast<size_t>(n));
    for (int j = 1; j <= degree - 1; ++j)
      out.push_back(Cycle::from_support(degree, {j, j + 1}));
    for (int j = 1; j <= degree - 1; ++j)
      out.push_back(out[static_cast<size_t>(degree - 1 - j)]);
    while (static_cast<int>(out.size()) < n)
      out.push_back(Cycle::from_support(degree, {1, 2}));
    return out;
  }

  // Non-extremal: 2 <= e_i < d, some e_i >= 3, and n >= 3 since an admissible
  // pair would have both orders equal to d. Lower a pivot of order >= 3 and a
  // neighbor, recurse, then augment that adjacent pair back up.
  int pivot = 0;
  for (int i = 1; i <= n; ++i)
    if (orders[static_cast<size_t>(i - 1)] >= 3) {
      pivot = i;
      break;
    }
  if (pivot == 0)
    fail(ErrorCode::ConstructionBug, "non-extremal step without an order >= 3");
  const int neighbor = pivot < n ? pivot + 1 : pivot - 1;

  std::vector<int> reduced = orders;
  reduced[static_cast<size_t>(pivot - 1)] -= 1;
  reduced[static_cast<size_t>(neighbor - 1)] -= 1;
  const bool dropped = reduced[static_cast<size_t>(neighbor - 1)] == 1;

  std::vector<int> recurse_orders = reduced;
  if (dropped) recurse_orders.erase(recurse_orders.begin() + (neighbor - 1));

  std::vector<Cycle> sub = transitive_recurse(degree - 1, recurse_orders);
  if (dropped) sub.insert(sub.begin() + (neighbor - 1), Cycle::identity(degree - 1));

  int x = 0;
  if (dropped) {
    if (neighbor == 1 || neighbor == n) {
      x = smallest_moved(sub[static_cast<size_t>(pivot - 1)]);
    } else {
      // The pivot and the entry two steps past the dropped neighbor were
      // consecutive in the reduced tuple, hence share a moved point.
      auto shared = neighbor == pivot + 1
                        ? common_moved_point(sub[static_cast<size_t>(pivot - 1)],
                                             sub[static_cast<size_t>(pivot + 1)])
                        : common_moved_point(sub[static_cast<size_t>(pivot - 3)],
                                             sub[static_cast<size_t>(pivot - 1)]);
      if (!shared)
        fail(ErrorCode::ConstructionBug, "neighbors of the identity entry are disjoint");
      x = *shared;
    }
  } else {
    auto shared = common_moved_point(sub[static_cast<size_t>(std::min(pivot, neighbor) - 1)],
                                     sub[static_cast<size_t>(std::max(pivot, neighbor) - 1)]);
    if (!shared)
      fail(ErrorCode::ConstructionBug, "consecutive cycles lost their overlap");
    x = *shared;
  }

  const int lo = std::min(pivot, neighbor);
  const int hi = std::max(pivot, neighbor);
  const auto ctx =
      AugmentationContext::make(degree, Permutation::identity(degree - 1), x);
  auto [aug1, aug2] = augment_pair(sub[static_cast<size_t>(lo - 1)],
                                   sub[static_cast<size_t>(hi - 1)], ctx);

  std::vector<Cycle> out;
  out.reserve(sub.size());
  for (const auto& c : sub) out.push_back(c.viewed_in(degree));
  out[static_cast<size_t>(lo - 1)] = aug1;
  out[static_cast<size_t>(hi - 1)] = aug2;
  return out;
}

}  // namespace

RamificationData RamificationData::from_orders(int degree, std::vector<int> orders) {
  if (degree < 2) fail(ErrorCode::InvalidOrder, "degree must be >= 2");
  check_order_range(degree, orders, ErrorCode::InvalidOrder);
  const int surplus = order_sum(orders) - static_cast<int>(orders.size());
  if (surplus % 2 != 0)
    fail(ErrorCode::ParityError, "sum of orders minus their count must be even");
  RamificationData data;
  data.degree = degree;
  data.genus = surplus / 2 - degree + 1;
  data.orders = std::move(orders);
  return data;
}

RamificationData RamificationData::with_claimed_genus(int degree, std::vector<int> orders,
                                                      int genus) {
  if (degree < 2) fail(ErrorCode::InvalidOrder, "degree must be >= 2");
  check_order_range(degree, orders, ErrorCode::InvalidOrder);
  RamificationData data;
  data.degree = degree;
  data.genus = genus;
  data.orders = std::move(orders);
  return data;
}

WitnessTuple WitnessTuple::make(int degree, std::vector<Cycle> cycles) {
  if (degree < 1) fail(ErrorCode::DegreeMismatch, "witness degree must be >= 1");
  for (const auto& c : cycles)
    if (c.degree() != degree)
      fail(ErrorCode::DegreeMismatch, "witness cycle degree differs from tuple degree");
  WitnessTuple witness;
  witness.degree = degree;
  witness.cycles = std::move(cycles);
  return witness;
}

int riemann_hurwitz_genus(int degree, const std::vector<int>& orders) {
  if (degree < 2) fail(ErrorCode::InvalidOrder, "degree must be >= 2");
  check_order_range(degree, orders, ErrorCode::InvalidOrder);
  const int surplus = order_sum(orders) - static_cast<int>(orders.size());
  if (surplus % 2 != 0)
    fail(ErrorCode::ParityError, "sum of orders minus their count must be even");
  return surplus / 2 - degree + 1;
}

bool is_admissible(int degree, const std::vector<int>& orders) {
  if (degree < 2 || orders.size() < 2)
    fail(ErrorCode::OutOfScope, "admissibility needs degree >= 2 and at least 2 orders");
  for (int e : orders)
    if (e < 2 || e > degree) return false;
  const int surplus = order_sum(orders) - static_cast<int>(orders.size());
  return surplus % 2 == 0 && surplus >= 2 * (degree - 1);
}

bool is_extremal(int degree, const std::vector<int>& orders) {
  return std::any_of(orders.begin(), orders.end(), [&](int e) { return e == degree; }) ||
         std::all_of(orders.begin(), orders.end(), [](int e) { return e == 2; });
}

WitnessTuple construct_chain_tuple(int degree, const std::vector<int>& orders) {
  const int n = static_cast<int>(orders.size());
  if (degree < 2 || n < 2)
    fail(ErrorCode::NotApplicable, "chain construction needs degree >= 2 and >= 2 orders");
  check_order_range(degree, orders, ErrorCode::NotApplicable);
  if (std::none_of(orders.begin(), orders.end(), [&](int e) { return e == degree; }))
    fail(ErrorCode::NotApplicable, "chain construction needs some order equal to the degree");
  const int surplus = order_sum(orders) - n;
  if (surplus % 2 != 0)
    fail(ErrorCode::NotApplicable, "sum of orders minus their count must be even");
  // A full cycle is a product of no fewer than degree-1 transpositions, so the
  // remaining cycles must carry at least that much length surplus; below the
  // bound no tuple with identity product exists at all.
  if (surplus < 2 * (degree - 1))
    fail(ErrorCode::NotApplicable,
         "no tuple of these lengths multiplies to the identity: order surplus " +
             std::to_string(surplus) + " is below 2(degree - 1) = " +
             std::to_string(2 * (degree - 1)));

  WitnessTuple witness = WitnessTuple::make(degree, chain_recurse(degree, orders));
  const auto report =
      verify_witness(witness, RamificationData::from_orders(degree, orders), true);
  if (!(report.lengths && report.product && report.nondisjoint.value_or(false)))
    fail(ErrorCode::ConstructionBug, "chain construction produced an invalid tuple");
  witness.verified = report;
  return witness;
}

WitnessTuple construct_transitive_tuple(int degree, const std::vector<int>& orders) {
  if (degree < 2 || orders.size() < 2)
    fail(ErrorCode::NotAdmissible, "construction needs degree >= 2 and at least 2 orders");
  if (!is_admissible(degree, orders))
    fail(ErrorCode::NotAdmissible, "order sequence is not admissible for this degree");

  WitnessTuple witness = WitnessTuple::make(degree, transitive_recurse(degree, orders));
  const auto report =
      verify_witness(witness, RamificationData::from_orders(degree, orders), true);
  if (!report.passed())
    fail(ErrorCode::ConstructionBug, "construction produced an invalid witness");
  witness.verified = report;
  return witness;
}

std::pair<int, WitnessTuple> construct_witness(int degree, const std::vector<int>& orders) {
  if (degree < 2) fail(ErrorCode::InvalidOrder, "degree must be >= 2");
  check_order_range(degree, orders, ErrorCode::InvalidOrder);
  if (orders.size() == 1)
    fail(ErrorCode::Vacuous,
         "one branch point admits no cover: the order would have to exceed the degree");
  const int genus = riemann_hurwitz_genus(degree, orders);
  if (genus < 0)
    fail(ErrorCode::NegativeGenus,
         "orders force genus " + std::to_string(genus) + "; no cover exists");
  return {genus, construct_transitive_tuple(degree, orders)};
}

VerificationReport verify_witness(const WitnessTuple& witness,
                                  const RamificationData& data, bool strict) {
  if (witness.degree != data.degree)
    fail(ErrorCode::DegreeMismatch, "witness degree differs from ramification data");

  VerificationReport report;

  report.lengths = witness.cycles.size() == data.orders.size();
  if (report.lengths)
    for (size_t i = 0; i < witness.cycles.size(); ++i)
      if (witness.cycles[i].length() != data.orders[i]) {
        report.lengths = false;
        break;
      }

  report.product =
      product_right_to_left(witness.cycles, witness.degree).is_identity();

  report.transitive = is_transitive(witness.cycles, witness.degree);

  int surplus = 0;
  for (const auto& c : witness.cycles) surplus += c.length() - 1;
  report.genus =
      surplus % 2 == 0 && surplus / 2 - witness.degree + 1 == data.genus;

  if (strict) report.nondisjoint = consecutive_nondisjoint(witness.cycles);

  return report;
}

}  // namespace hurwitz
