#pragma once

#include <optional>
#include <vector>

#include "hurwitz/cycle_type.hpp"
#include "hurwitz/permutation.hpp"

namespace hurwitz {

/// A general ramification datum: one partition of d per branch point.
struct Profile {
  int degree = 0;
  std::vector<CycleType> partitions;

  int branch_points() const { return static_cast<int>(partitions.size()); }

  static Profile make(int degree, std::vector<CycleType> partitions);

  /// The [e, 1, ..., 1] profile rows for an order sequence.
  static Profile from_orders(int degree, const std::vector<int>& orders);
};

/// Enumeration grows factorially with the degree, so searches refuse degrees
/// beyond the cap unless the caller acknowledges the cost explicitly.
struct SearchLimits {
  int max_degree_exists = 8;
  int max_degree_count = 6;
  bool acknowledge_factorial = false;
  int threads = 0;  // 0 = hardware default
};

struct SearchOutcome {
  bool exists = false;
  std::optional<std::vector<Permutation>> witness;
  unsigned long long tuples_with_first_fixed = 0;
  unsigned long long raw_tuple_count = 0;
  std::optional<unsigned long long> class_count;
  SearchLimits limits;
};

/// Genus from the Riemann-Hurwitz formula over the line:
/// 2(g - 1) = -2d + sum(e_ij - 1).
int genus_from_profile(const Profile& profile);

/// d! / prod(k^{m_k} m_k!) where m_k is the multiplicity of part k.
unsigned long long conjugacy_class_size(const CycleType& type, int degree);

/// The partition's parts laid out on consecutive points ascending, e.g.
/// [3,1] -> (1 2 3).
Permutation canonical_representative(const CycleType& type, int degree);

/// All members of the class, in lexicographic order of their image tables.
std::vector<Permutation> conjugacy_class_members(const CycleType& type, int degree);

/// Exhaustive decision: fixes the first entry to the canonical class
/// representative (sound by conjugation invariance), enumerates the middle
/// entries over their full classes, and determines the last entry from the
/// product condition. Counts every accepted tuple.
SearchOutcome search_exists(const Profile& profile, bool want_witness,
                            const SearchLimits& limits = {});

/// search_exists plus the number of orbits of accepted tuples under
/// simultaneous conjugation, found by explicit orbit partitioning.
SearchOutcome count_classes(const Profile& profile, const SearchLimits& limits = {});

/// True iff brute-force existence for the [e, 1, ..., 1] profile agrees with
/// the Riemann-Hurwitz condition (genus defined and >= 0). A false return is
/// a bug in one of the two sides.
bool cross_check(int degree, const std::vector<int>& orders,
                 const SearchLimits& limits = {});

}  // namespace hurwitz
