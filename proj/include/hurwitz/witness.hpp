#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "hurwitz/cycle.hpp"

namespace hurwitz {

/// Branch data for a degree-d cover of the line with one ramification point
/// over each of n branch points: the orders e_1..e_n and the genus the
/// Riemann-Hurwitz formula forces on the source curve.
struct RamificationData {
  int degree = 0;
  std::vector<int> orders;
  int genus = 0;

  int branch_points() const { return static_cast<int>(orders.size()); }

  /// Validates ranges and parity and derives the genus (possibly negative).
  static RamificationData from_orders(int degree, std::vector<int> orders);

  /// Validates ranges only and trusts the stated genus. Used when checking
  /// externally supplied witness records, where the genus claim itself is
  /// under test.
  static RamificationData with_claimed_genus(int degree, std::vector<int> orders,
                                             int genus);
};

struct VerificationReport {
  bool lengths = false;
  bool product = false;
  bool transitive = false;
  bool genus = false;
  std::optional<bool> nondisjoint;  // strict mode only

  bool passed() const {
    return lengths && product && transitive && genus && nondisjoint.value_or(true);
  }
};

/// An n-tuple of cycles in Sym(d) certifying existence of a cover, together
/// with the verification report attached when it was produced.
struct WitnessTuple {
  int degree = 0;
  std::vector<Cycle> cycles;
  VerificationReport verified;

  static WitnessTuple make(int degree, std::vector<Cycle> cycles);
};

/// Genus from sum(e_i) = 2(g - 1 + d) + n. May be negative; the caller
/// decides what that means.
int riemann_hurwitz_genus(int degree, const std::vector<int>& orders);

/// 2 <= e_i <= d for all i, sum(e_i) - n even and >= 2(d - 1). Equivalent to
/// riemann_hurwitz_genus being defined with value >= 0.
bool is_admissible(int degree, const std::vector<int>& orders);

/// Some e_i = d, or all e_i = 2: the base cases of the recursive construction.
bool is_extremal(int degree, const std::vector<int>& orders);

/// Cycles of lengths e_1..e_n in Sym(d) whose right-to-left product is the
/// identity and in which consecutive cycles always share a moved point.
/// Requires some e_i = d and even sum(e_i) - n; beyond that, a tuple exists
/// iff sum(e_i) - n >= 2(d - 1), and NotApplicable reports the failure.
WitnessTuple construct_chain_tuple(int degree, const std::vector<int>& orders);

/// Full construction for admissible order sequences: identity product,
/// transitive generated subgroup, consecutive cycles non-disjoint. Output is
/// deterministic for fixed input.
WitnessTuple construct_transitive_tuple(int degree, const std::vector<int>& orders);

/// Entry point: derives the genus, requires it to be a nonnegative integer,
/// and returns the genus with a verified witness tuple.
std::pair<int, WitnessTuple> construct_witness(int degree, const std::vector<int>& orders);

/// Checks, per report entry: cycle lengths match the orders; right-to-left
/// product is the identity; generated subgroup is transitive; the genus
/// recomputed from the actual cycle lengths matches data.genus; and, in
/// strict mode, consecutive cycles are non-disjoint.
VerificationReport verify_witness(const WitnessTuple& witness,
                                  const RamificationData& data, bool strict);

}  // namespace hurwitz
