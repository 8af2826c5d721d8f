#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "lrc/construct.hpp"

namespace lrc::verify {

using linalg::Matrix;

inline constexpr std::uint64_t kDefaultBudget = 10'000'000;

struct GroupLocality {
  IndexSet group;
  int rank = 0;
  bool rank_ok = false;     // rank <= r
  bool subsets_ok = false;  // every (|S|-delta+1)-subset spans the group
  std::optional<IndexSet> failing_subset;
};

struct LocalityReport {
  std::vector<GroupLocality> per_group;
  IndexSet uncovered;
  bool overall = false;
};

/// Rank form of (r, delta) locality for each group of `s`. StructureMismatch on bad labels.
LocalityReport check_locality(const Matrix& g, const covers::Structure& s, int r, int delta);
LocalityReport check_locality(const construct::LrcCode& code);

enum class DistanceMethod { WeightEnumeration, RankCriterion };

struct DistanceReport {
  int d = 0;
  DistanceMethod method = DistanceMethod::WeightEnumeration;
  std::vector<std::uint32_t> codeword;  // weight method
  IndexSet deficient;                   // rank method: |S| = n-d, rank <= k-1
};

/// Minimum weight over all nonzero messages; BudgetExceeded if q^k > budget.
DistanceReport distance_by_weight(const Matrix& g, std::uint64_t budget = kDefaultBudget);
/// n minus the largest size of a column set of rank < k; BudgetExceeded if a
/// searched layer has more than `budget` subsets.
DistanceReport distance_by_rank(const Matrix& g, std::uint64_t budget = kDefaultBudget);
/// Weight enumeration when q^k <= budget, otherwise the rank criterion. RankDeficient if rank(G) < k.
DistanceReport min_distance(const Matrix& g, std::uint64_t budget = kDefaultBudget);

/// Lexicographically first `size`-subset of columns with rank < rows, if any.
std::optional<IndexSet> rank_deficient_subset(const Matrix& g, int size);

struct OptimalityReport {
  bool optimal = false;
  bool locality_ok = false;
  int subset_size = 0;
  std::uint64_t subsets = 0;  // C(n, subset_size)
  long bound_d = 0;
  std::optional<IndexSet> witness;  // subset of rank < k
};

/// Every column set of size k + (ceil(k/r)-1)(delta-1) has rank k, and locality
/// holds; together with the distance bound this pins d to the bound.
OptimalityReport certify_optimal(const construct::LrcCode& code, std::uint64_t budget = kDefaultBudget);

struct StructureReport {
  bool ok = false;
  std::vector<std::string> violations;
};

/// Optimal codes with r | k, r < k: groups disjoint, |S_i| = r+delta-1, each
/// punctured code [r+delta-1, r, delta] MDS. PreconditionViolated otherwise.
StructureReport check_structure_theorem(const construct::LrcCode& code);

/// Every rows-subset of columns has full rank.
bool check_mds(const Matrix& m);

}  // namespace lrc::verify
