#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <functional>
#include <random>

#include "hurwitz/error.hpp"
#include "hurwitz/oracle.hpp"
#include "hurwitz/witness.hpp"
#include "support.hpp"

using namespace hurwitz;
using test_support::product_right_to_left;
using test_support::random_permutation;

namespace {

Cycle cyc(int degree, std::vector<int> support) {
  return Cycle::from_support(degree, std::move(support));
}

ErrorCode code_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an error");
  return ErrorCode::ConstructionBug;
}

bool nondisjoint_chain(const std::vector<Cycle>& cycles) {
  for (size_t i = 0; i + 1 < cycles.size(); ++i)
    if (!common_moved_point(cycles[i], cycles[i + 1])) return false;
  return true;
}

/// Walks every order sequence in [2..d]^n and calls fn.
void for_each_orders(int degree, int n, const std::function<void(const std::vector<int>&)>& fn) {
  std::vector<int> orders(static_cast<size_t>(n), 2);
  while (true) {
    fn(orders);
    int k = n - 1;
    while (k >= 0 && orders[static_cast<size_t>(k)] == degree)
      orders[static_cast<size_t>(k--)] = 2;
    if (k < 0) break;
    ++orders[static_cast<size_t>(k)];
  }
}

}  // namespace

TEST_CASE("riemann_hurwitz_genus") {
  CHECK(riemann_hurwitz_genus(2, {2, 2}) == 0);
  CHECK(riemann_hurwitz_genus(4, {4, 3, 2}) == 0);
  CHECK(riemann_hurwitz_genus(3, {2, 2}) == -1);  // negative is the caller's problem
  CHECK(code_of([] { riemann_hurwitz_genus(4, {3, 2}); }) == ErrorCode::ParityError);
  CHECK(code_of([] { riemann_hurwitz_genus(4, {5, 3}); }) == ErrorCode::InvalidOrder);
  CHECK(code_of([] { riemann_hurwitz_genus(4, {1, 3}); }) == ErrorCode::InvalidOrder);
  CHECK(code_of([] { riemann_hurwitz_genus(1, {2}); }) == ErrorCode::InvalidOrder);
}

TEST_CASE("is_admissible") {
  CHECK(is_admissible(4, {4, 3, 2}));
  CHECK_FALSE(is_admissible(4, {3, 2}));      // odd surplus
  CHECK_FALSE(is_admissible(3, {2, 2}));      // surplus 2 < 2(d-1) = 4
  CHECK_FALSE(is_admissible(4, {5, 3, 2}));   // out of range
  CHECK(code_of([] { is_admissible(4, {4}); }) == ErrorCode::OutOfScope);
  CHECK(code_of([] { is_admissible(1, {2, 2}); }) == ErrorCode::OutOfScope);
}

TEST_CASE("admissibility matches a defined nonnegative genus") {
  for (int d = 2; d <= 8; ++d) {
    for (int n = 2; n <= 6; ++n) {
      for_each_orders(d, n, [&](const std::vector<int>& orders) {
        bool genus_side = false;
        try {
          genus_side = riemann_hurwitz_genus(d, orders) >= 0;
        } catch (const Error&) {
          genus_side = false;
        }
        REQUIRE(is_admissible(d, orders) == genus_side);
      });
    }
  }
}

TEST_CASE("is_extremal") {
  CHECK(is_extremal(4, {4, 3, 2}));
  CHECK(is_extremal(3, {2, 2, 2, 2}));
  CHECK_FALSE(is_extremal(4, {3, 3, 2}));
}

TEST_CASE("chain construction base cases") {
  CHECK(construct_chain_tuple(3, {3, 3}).cycles ==
        std::vector<Cycle>{cyc(3, {1, 2, 3}), cyc(3, {1, 3, 2})});
  CHECK(construct_chain_tuple(3, {3, 3, 3}).cycles ==
        std::vector<Cycle>{cyc(3, {1, 2, 3}), cyc(3, {1, 2, 3}), cyc(3, {1, 2, 3})});
  CHECK(construct_chain_tuple(2, {2, 2, 2, 2}).cycles ==
        std::vector<Cycle>(4, cyc(2, {1, 2})));
}

TEST_CASE("chain construction rejects impossible inputs") {
  CHECK(code_of([] { construct_chain_tuple(4, {3, 3}); }) == ErrorCode::NotApplicable);
  CHECK(code_of([] { construct_chain_tuple(4, {4, 3}); }) == ErrorCode::NotApplicable);
  // Surplus 4 - 2 < 2(d-1): a 4-cycle cannot be one transposition.
  CHECK(code_of([] { construct_chain_tuple(4, {4, 2}); }) == ErrorCode::NotApplicable);
  CHECK(code_of([] { construct_chain_tuple(6, {6, 3, 2}); }) == ErrorCode::NotApplicable);
  CHECK(code_of([] { construct_chain_tuple(4, {4}); }) == ErrorCode::NotApplicable);
}

TEST_CASE("chain construction sweep with oracle confirmation of refusals") {
  for (int d = 2; d <= 6; ++d) {
    for (int n = 2; n <= 5; ++n) {
      for_each_orders(d, n, [&](const std::vector<int>& orders) {
        int surplus = -n;
        bool has_max = false;
        for (int e : orders) {
          surplus += e;
          has_max |= e == d;
        }
        if (!has_max || surplus % 2 != 0) return;
        if (surplus >= 2 * (d - 1)) {
          const WitnessTuple witness = construct_chain_tuple(d, orders);
          REQUIRE(witness.cycles.size() == orders.size());
          for (size_t i = 0; i < orders.size(); ++i)
            REQUIRE(witness.cycles[i].length() == orders[i]);
          REQUIRE(product_right_to_left(witness.cycles, d).is_identity());
          REQUIRE(nondisjoint_chain(witness.cycles));
        } else {
          REQUIRE(code_of([&] { construct_chain_tuple(d, orders); }) ==
                  ErrorCode::NotApplicable);
          if (d <= 5 && n <= 4)
            REQUIRE_FALSE(search_exists(Profile::from_orders(d, orders), false).exists);
        }
      });
    }
  }
}

TEST_CASE("transitive construction base cases") {
  CHECK(construct_transitive_tuple(3, {2, 2, 2, 2}).cycles ==
        std::vector<Cycle>{cyc(3, {1, 2}), cyc(3, {2, 3}), cyc(3, {2, 3}), cyc(3, {1, 2})});
  CHECK(construct_transitive_tuple(2, {2, 2}).cycles ==
        std::vector<Cycle>{cyc(2, {1, 2}), cyc(2, {1, 2})});
  // Padding after the out-and-back transposition chain.
  CHECK(construct_transitive_tuple(3, {2, 2, 2, 2, 2, 2}).cycles ==
        std::vector<Cycle>{cyc(3, {1, 2}), cyc(3, {2, 3}), cyc(3, {2, 3}), cyc(3, {1, 2}),
                           cyc(3, {1, 2}), cyc(3, {1, 2})});
}

TEST_CASE("transitive construction fixed outputs") {
  CHECK(construct_transitive_tuple(4, {4, 3, 2}).cycles ==
        std::vector<Cycle>{cyc(4, {1, 2, 3, 4}), cyc(4, {1, 4, 3}), cyc(4, {1, 2})});
  CHECK(construct_transitive_tuple(4, {3, 3, 3}).cycles ==
        std::vector<Cycle>{cyc(4, {1, 3, 4}), cyc(4, {1, 4, 2}), cyc(4, {1, 2, 3})});
}

TEST_CASE("transitive construction rejects inadmissible input") {
  CHECK(code_of([] { construct_transitive_tuple(4, {3, 2}); }) == ErrorCode::NotAdmissible);
  CHECK(code_of([] { construct_transitive_tuple(3, {2, 2}); }) == ErrorCode::NotAdmissible);
  CHECK(code_of([] { construct_transitive_tuple(1, {2, 2}); }) == ErrorCode::NotAdmissible);
  CHECK(code_of([] { construct_transitive_tuple(4, {4}); }) == ErrorCode::NotAdmissible);
}

TEST_CASE("transitive construction is deterministic") {
  for (int d = 2; d <= 7; ++d) {
    for (int n = 2; n <= 5; ++n) {
      for_each_orders(d, n, [&](const std::vector<int>& orders) {
        if (!is_admissible(d, orders)) return;
        REQUIRE(construct_transitive_tuple(d, orders).cycles ==
                construct_transitive_tuple(d, orders).cycles);
      });
    }
  }
}

TEST_CASE("small soundness sweep in strict mode") {
  for (int d = 2; d <= 6; ++d) {
    for (int n = 2; n <= 5; ++n) {
      for_each_orders(d, n, [&](const std::vector<int>& orders) {
        if (!is_admissible(d, orders)) return;
        const WitnessTuple witness = construct_transitive_tuple(d, orders);
        const auto report =
            verify_witness(witness, RamificationData::from_orders(d, orders), true);
        REQUIRE(report.passed());
      });
    }
  }
}

TEST_CASE("construct_witness") {
  const auto [genus, witness] = construct_witness(2, {2, 2});
  CHECK(genus == 0);
  CHECK(witness.cycles == std::vector<Cycle>{cyc(2, {1, 2}), cyc(2, {1, 2})});
  CHECK(witness.verified.passed());

  CHECK(code_of([] { construct_witness(4, {2, 2, 3}); }) == ErrorCode::NegativeGenus);
  CHECK(code_of([] { construct_witness(3, {3}); }) == ErrorCode::Vacuous);
  CHECK(code_of([] { construct_witness(3, {2, 3}); }) == ErrorCode::ParityError);
  CHECK(code_of([] { construct_witness(3, {2, 4}); }) == ErrorCode::InvalidOrder);
}

TEST_CASE("construct_witness agrees with the oracle on a nontrivial case") {
  const auto [genus, witness] = construct_witness(4, {4, 3, 2});
  CHECK(genus == 0);
  const auto outcome = search_exists(Profile::from_orders(4, {4, 3, 2}), true);
  CHECK(outcome.exists);
}

TEST_CASE("verify_witness") {
  const auto data22 = RamificationData::from_orders(2, {2, 2});
  const auto all_pass = verify_witness(
      WitnessTuple::make(2, {cyc(2, {1, 2}), cyc(2, {1, 2})}), data22, true);
  CHECK(all_pass.passed());

  // Product of (1 2) then (1 3) is a 3-cycle, not the identity.
  const auto data32 = RamificationData::from_orders(3, {2, 2});
  const auto bad_product = verify_witness(
      WitnessTuple::make(3, {cyc(3, {1, 2}), cyc(3, {1, 3})}), data32, false);
  CHECK_FALSE(bad_product.product);
  CHECK(bad_product.lengths);
  CHECK(bad_product.transitive);
  CHECK(bad_product.genus);

  const auto intransitive = verify_witness(
      WitnessTuple::make(3, {cyc(3, {1, 2}), cyc(3, {1, 2})}), data32, false);
  CHECK_FALSE(intransitive.transitive);
  CHECK(intransitive.product);

  // Strict mode also wants consecutive overlap.
  const auto data4 = RamificationData::from_orders(4, {2, 2, 2, 2, 2, 2});
  const auto disjoint = verify_witness(
      WitnessTuple::make(4, {cyc(4, {1, 2}), cyc(4, {3, 4}), cyc(4, {3, 4}), cyc(4, {1, 2}),
                             cyc(4, {2, 3}), cyc(4, {2, 3})}),
      data4, true);
  CHECK(disjoint.product);
  CHECK(disjoint.transitive);
  CHECK(disjoint.nondisjoint.has_value());
  CHECK_FALSE(*disjoint.nondisjoint);
  CHECK_FALSE(disjoint.passed());

  // Genus check compares a recomputation from the actual cycle lengths.
  const auto claimed = RamificationData::with_claimed_genus(2, {2, 2}, 5);
  CHECK_FALSE(verify_witness(WitnessTuple::make(2, {cyc(2, {1, 2}), cyc(2, {1, 2})}), claimed,
                             false)
                  .genus);

  CHECK_THROWS_AS(verify_witness(WitnessTuple::make(3, {cyc(3, {1, 2})}), data22, false),
                  Error);
}

TEST_CASE("witnesses stay valid under simultaneous conjugation") {
  std::mt19937 rng(2025);
  for (int iter = 0; iter < 200; ++iter) {
    const int d = 2 + static_cast<int>(rng() % 6);
    std::vector<int> orders;
    const int n = 2 + static_cast<int>(rng() % 4);
    for (int i = 0; i < n; ++i) orders.push_back(2 + static_cast<int>(rng() % (d - 1)));
    if (!is_admissible(d, orders)) continue;
    const WitnessTuple witness = construct_transitive_tuple(d, orders);
    const Permutation tau = random_permutation(rng, d);
    std::vector<Cycle> conjugated;
    for (const auto& c : witness.cycles)
      conjugated.push_back(Cycle::from_permutation(conjugate(tau, c.to_permutation())));
    const auto report = verify_witness(WitnessTuple::make(d, conjugated),
                                       RamificationData::from_orders(d, orders), false);
    REQUIRE(report.passed());
  }
}

TEST_CASE("ramification data validation") {
  const auto data = RamificationData::from_orders(4, {4, 3, 2, 3});
  CHECK(data.genus == 1);
  CHECK(data.branch_points() == 4);
  CHECK(code_of([] { RamificationData::from_orders(4, {4, 3}); }) == ErrorCode::ParityError);
  CHECK(code_of([] { RamificationData::from_orders(4, {}); }) == ErrorCode::InvalidOrder);
  CHECK(code_of([] { WitnessTuple::make(4, {Cycle::identity(3)}); }) ==
        ErrorCode::DegreeMismatch);
}
