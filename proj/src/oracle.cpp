#include "hurwitz/oracle.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <numeric>
#include <string>
#include <thread>

#include "hurwitz/error.hpp"

namespace hurwitz {

namespace {

struct BranchResult {
  unsigned long long accepted = 0;
  std::optional<std::vector<Permutation>> first_witness;
  std::vector<std::vector<Permutation>> collected;
};

/// Depth-first enumeration of tuple positions `next_index`..n-1 (0-based),
/// with the final entry determined by the product condition. prefix_product
/// is sigma_{next_index} ... sigma_1 for the already-chosen entries.
void enumerate_rest(const Profile& profile,
                    const std::vector<std::vector<Permutation>>& middle_classes,
                    size_t next_index, const Permutation& prefix_product,
                    std::vector<Permutation>& chosen, bool want_witness, bool collect,
                    BranchResult& result) {
  const size_t n = static_cast<size_t>(profile.branch_points());
  if (next_index == n - 1) {
    Permutation last = inverse(prefix_product);
    if (!(cycle_type(last) == profile.partitions[n - 1])) return;
    chosen.push_back(std::move(last));
    if (is_transitive(std::span<const Permutation>(chosen), profile.degree)) {
      ++result.accepted;
      if (want_witness && !result.first_witness) result.first_witness = chosen;
      if (collect) result.collected.push_back(chosen);
    }
    chosen.pop_back();
    return;
  }
  for (const auto& candidate : middle_classes[next_index - 1]) {
    chosen.push_back(candidate);
    enumerate_rest(profile, middle_classes, next_index + 1,
                   compose(candidate, prefix_product), chosen, want_witness, collect,
                   result);
    chosen.pop_back();
  }
}

SearchOutcome search_impl(const Profile& profile, bool want_witness, bool collect,
                          std::vector<std::vector<Permutation>>* accepted_out,
                          const SearchLimits& limits) {
  const int d = profile.degree;
  const int n = profile.branch_points();
  const int cap = collect ? limits.max_degree_count : limits.max_degree_exists;
  if (d > cap && !limits.acknowledge_factorial)
    fail(ErrorCode::TooLarge, "degree " + std::to_string(d) + " exceeds the cap " +
                                  std::to_string(cap) +
                                  "; raise it only with explicit acknowledgment");

  SearchOutcome outcome;
  outcome.limits = limits;

  const Permutation first = canonical_representative(profile.partitions[0], d);

  if (n == 1) {
    // A 1-tuple with identity product is the identity itself.
    std::vector<Permutation> tuple{first};
    if (first.is_identity() && is_transitive(std::span<const Permutation>(tuple), d)) {
      outcome.tuples_with_first_fixed = 1;
      if (want_witness) outcome.witness = tuple;
      if (collect) accepted_out->push_back(tuple);
    }
  } else {
    std::vector<std::vector<Permutation>> middle_classes;
    for (int i = 2; i <= n - 1; ++i)
      middle_classes.push_back(conjugacy_class_members(profile.partitions[static_cast<size_t>(i - 1)], d));

    if (n == 2) {
      BranchResult result;
      std::vector<Permutation> chosen{first};
      enumerate_rest(profile, middle_classes, 1, first, chosen, want_witness, collect,
                     result);
      outcome.tuples_with_first_fixed = result.accepted;
      outcome.witness = std::move(result.first_witness);
      if (collect)
        for (auto& t : result.collected) accepted_out->push_back(std::move(t));
    } else {
      // Split on the second entry: branches are independent sub-searches and
      // the aggregation below does not depend on the worker count.
      const auto& branches = middle_classes.front();
      std::vector<BranchResult> results(branches.size());

      unsigned long long middle_work = 1;
      for (size_t i = 1; i < middle_classes.size(); ++i)
        middle_work *= middle_classes[i].size();

      auto run_branch = [&](size_t b) {
        std::vector<Permutation> chosen{first, branches[b]};
        enumerate_rest(profile, middle_classes, 2, compose(branches[b], first), chosen,
                       want_witness, collect, results[b]);
      };

      unsigned worker_count = limits.threads > 0
                                  ? static_cast<unsigned>(limits.threads)
                                  : std::max(1u, std::thread::hardware_concurrency());
      worker_count = std::min<unsigned>(worker_count,
                                        static_cast<unsigned>(branches.size()));
      if (worker_count <= 1 || branches.size() * middle_work < 4096) {
        for (size_t b = 0; b < branches.size(); ++b) run_branch(b);
      } else {
        std::atomic<size_t> next{0};
        std::vector<std::thread> workers;
        workers.reserve(worker_count);
        for (unsigned w = 0; w < worker_count; ++w)
          workers.emplace_back([&] {
            for (size_t b = next.fetch_add(1); b < branches.size();
                 b = next.fetch_add(1))
              run_branch(b);
          });
        for (auto& worker : workers) worker.join();
      }

      for (auto& result : results) {
        outcome.tuples_with_first_fixed += result.accepted;
        if (!outcome.witness && result.first_witness)
          outcome.witness = std::move(result.first_witness);
        if (collect)
          for (auto& t : result.collected) accepted_out->push_back(std::move(t));
      }
    }
  }

  outcome.exists = outcome.tuples_with_first_fixed > 0;
  outcome.raw_tuple_count =
      conjugacy_class_size(profile.partitions[0], d) * outcome.tuples_with_first_fixed;
  if (!want_witness) outcome.witness.reset();
  return outcome;
}

std::vector<Permutation> centralizer_of(const Permutation& sigma) {
  std::vector<int> images(static_cast<size_t>(sigma.degree()));
  std::iota(images.begin(), images.end(), 1);
  std::vector<Permutation> result;
  do {
    Permutation tau = Permutation::from_images(images);
    if (compose(tau, sigma) == compose(sigma, tau)) result.push_back(std::move(tau));
  } while (std::next_permutation(images.begin(), images.end()));
  return result;
}

std::vector<int> tuple_key(const std::vector<Permutation>& tuple) {
  std::vector<int> key;
  for (const auto& sigma : tuple)
    key.insert(key.end(), sigma.images().begin(), sigma.images().end());
  return key;
}

/// Orbits of the fixed-first accepted set under simultaneous conjugation.
/// Conjugating by an arbitrary element moves the first entry off its
/// canonical representative, so the orbits are exactly those under the
/// representative's centralizer.
unsigned long long orbit_count(const std::vector<std::vector<Permutation>>& accepted,
                               const Permutation& first) {
  if (accepted.empty()) return 0;
  const auto centralizer = centralizer_of(first);
  std::map<std::vector<int>, size_t> index;
  for (size_t i = 0; i < accepted.size(); ++i) index[tuple_key(accepted[i])] = i;

  std::vector<bool> visited(accepted.size(), false);
  unsigned long long orbits = 0;
  for (size_t i = 0; i < accepted.size(); ++i) {
    if (visited[i]) continue;
    ++orbits;
    std::vector<size_t> stack{i};
    visited[i] = true;
    while (!stack.empty()) {
      const size_t at = stack.back();
      stack.pop_back();
      for (const auto& tau : centralizer) {
        std::vector<Permutation> conjugated;
        conjugated.reserve(accepted[at].size());
        for (const auto& sigma : accepted[at]) conjugated.push_back(conjugate(tau, sigma));
        auto it = index.find(tuple_key(conjugated));
        if (it == index.end())
          fail(ErrorCode::ConstructionBug,
               "conjugate of an accepted tuple was not accepted");
        if (!visited[it->second]) {
          visited[it->second] = true;
          stack.push_back(it->second);
        }
      }
    }
  }
  return orbits;
}

}  // namespace

Profile Profile::make(int degree, std::vector<CycleType> partitions) {
  if (degree < 1) fail(ErrorCode::InvalidPartition, "profile degree must be >= 1");
  if (partitions.empty())
    fail(ErrorCode::InvalidPartition, "profile needs at least one partition");
  for (const auto& partition : partitions)
    if (partition.sum() != degree)
      fail(ErrorCode::SumError, "partition " + to_string(partition) + " does not sum to " +
                                    std::to_string(degree));
  Profile profile;
  profile.degree = degree;
  profile.partitions = std::move(partitions);
  return profile;
}

Profile Profile::from_orders(int degree, const std::vector<int>& orders) {
  std::vector<CycleType> partitions;
  partitions.reserve(orders.size());
  for (int e : orders) {
    if (e < 2 || e > degree)
      fail(ErrorCode::InvalidOrder, "order " + std::to_string(e) + " outside [2, " +
                                        std::to_string(degree) + "]");
    std::vector<int> parts{e};
    parts.insert(parts.end(), static_cast<size_t>(degree - e), 1);
    partitions.emplace_back(std::move(parts));
  }
  return make(degree, std::move(partitions));
}

int genus_from_profile(const Profile& profile) {
  int index_sum = 0;
  for (const auto& partition : profile.partitions)
    for (int part : partition.parts()) index_sum += part - 1;
  if (index_sum % 2 != 0)
    fail(ErrorCode::ParityError, "total ramification index must be even");
  return 1 - profile.degree + index_sum / 2;
}

unsigned long long conjugacy_class_size(const CycleType& type, int degree) {
  if (type.sum() != degree)
    fail(ErrorCode::SumError, "partition does not sum to the degree");
  unsigned long long factorial = 1;
  for (int k = 2; k <= degree; ++k) factorial *= static_cast<unsigned long long>(k);
  unsigned long long stabilizer = 1;
  std::map<int, int> multiplicity;
  for (int part : type.parts()) ++multiplicity[part];
  for (const auto& [part, count] : multiplicity) {
    for (int i = 0; i < count; ++i) stabilizer *= static_cast<unsigned long long>(part);
    for (int i = 2; i <= count; ++i) stabilizer *= static_cast<unsigned long long>(i);
  }
  return factorial / stabilizer;
}

Permutation canonical_representative(const CycleType& type, int degree) {
  if (type.sum() != degree)
    fail(ErrorCode::SumError, "partition does not sum to the degree");
  std::vector<int> images(static_cast<size_t>(degree));
  std::iota(images.begin(), images.end(), 1);
  int start = 1;
  for (int part : type.parts()) {
    for (int p = start; p < start + part - 1; ++p)
      images[static_cast<size_t>(p - 1)] = p + 1;
    images[static_cast<size_t>(start + part - 2)] = start;
    start += part;
  }
  return Permutation::from_images(std::move(images));
}

std::vector<Permutation> conjugacy_class_members(const CycleType& type, int degree) {
  if (type.sum() != degree)
    fail(ErrorCode::SumError, "partition does not sum to the degree");
  std::vector<int> images(static_cast<size_t>(degree));
  std::iota(images.begin(), images.end(), 1);
  std::vector<Permutation> members;
  do {
    Permutation candidate = Permutation::from_images(images);
    if (cycle_type(candidate) == type) members.push_back(std::move(candidate));
  } while (std::next_permutation(images.begin(), images.end()));
  return members;
}

SearchOutcome search_exists(const Profile& profile, bool want_witness,
                            const SearchLimits& limits) {
  return search_impl(profile, want_witness, false, nullptr, limits);
}

SearchOutcome count_classes(const Profile& profile, const SearchLimits& limits) {
  std::vector<std::vector<Permutation>> accepted;
  SearchOutcome outcome = search_impl(profile, true, true, &accepted, limits);
  outcome.class_count =
      orbit_count(accepted, canonical_representative(profile.partitions[0], profile.degree));
  return outcome;
}

bool cross_check(int degree, const std::vector<int>& orders, const SearchLimits& limits) {
  const Profile profile = Profile::from_orders(degree, orders);
  const int surplus =
      std::accumulate(orders.begin(), orders.end(), 0) - static_cast<int>(orders.size());
  const bool riemann_hurwitz_side =
      surplus % 2 == 0 && surplus / 2 - degree + 1 >= 0;
  const bool oracle_side = search_exists(profile, false, limits).exists;
  return oracle_side == riemann_hurwitz_side;
}

}  // namespace hurwitz
