#pragma once

// (S,r)-cores of a partition or a frame, and the enumerations built on them.

#include <functional>
#include <optional>
#include <vector>

#include "lrc/covers.hpp"

namespace lrc::cores {

/// Per-structure lookup tables shared by the predicates below. Cover-kind
/// structures are rejected with StructureMismatch.
class CoreModel {
 public:
  CoreModel(const covers::Structure& s, int r, int delta);

  const covers::Structure& structure() const noexcept { return *s_; }
  int r() const noexcept { return r_; }
  int delta() const noexcept { return delta_; }
  int n() const noexcept { return s_->n; }
  bool is_frame() const noexcept { return s_->kind == covers::Kind::Frame; }

  /// Groups (0-based) containing coordinate x (1-based).
  const std::vector<int>& groups_of(int x) const { return member_[static_cast<std::size_t>(x)]; }
  /// Partition cap |S_i|-delta+1, or r for frames.
  int cap(int g) const { return cap_[static_cast<std::size_t>(g)]; }
  /// Hub block (0-based) of group g, or -1 for tail groups and partitions.
  int block_of(int g) const { return block_[static_cast<std::size_t>(g)]; }
  /// Hub block (0-based) that x is the hub of, or -1.
  int hub_block(int x) const { return hub_of_[static_cast<std::size_t>(x)]; }

 private:
  const covers::Structure* s_;
  int r_;
  int delta_;
  std::vector<std::vector<int>> member_;
  std::vector<int> cap_;
  std::vector<int> block_;
  std::vector<int> hub_of_;
};

struct CoreQuery {
  const CoreModel* model = nullptr;
  int k = 0;
  IndexSet ground;  // Omega
};

/// Direct transcription of the core definitions (frame condition (2) tries every i_j).
bool is_core(const IndexSet& s, const CoreModel& model);

/// Incremental membership: add/remove coordinates while keeping per-group counts,
/// answering whether the current set is a core in O(block size).
class CoreTracker {
 public:
  explicit CoreTracker(const CoreModel& model);

  /// Adds x if the result is still a core and returns true; otherwise leaves
  /// the set unchanged and returns false.
  bool try_add(int x);
  void remove(int x);
  int size() const noexcept { return size_; }

 private:
  bool group_ok(int g) const;

  const CoreModel* m_;
  std::vector<int> count_;
  std::vector<int> hub_in_;
  int size_ = 0;
};

struct Omega0 {
  IndexSet indices;
  std::vector<IndexSet> picks;  // U_i per group
};

Omega0 omega0(const CoreModel& model);

/// Calls visit(S0) for every S0 subset of q.ground with |S0| = k-1 and S0 u {lambda}
/// a core, in lexicographic order; visit returns false to stop.
void for_each_lambda_core(const CoreQuery& q, int lambda, const std::function<bool(const IndexSet&)>& visit);
std::vector<IndexSet> lambda_cores(const CoreQuery& q, int lambda);

/// Every k-subset of q.ground that is a core, lexicographically.
void for_each_core(const CoreQuery& q, const std::function<bool(const IndexSet&)>& visit);

/// A k-subset of T that is a core, built by the per-group trimming W_l of the
/// core-forming lemma; absent when the trimmed union has fewer than k elements.
struct CoreWithin {
  IndexSet core;
  std::vector<IndexSet> pieces;  // W_l per group
  IndexSet saturated;            // J, 1-based group indices with |T n S_l| >= cap
};
std::optional<CoreWithin> core_within(const IndexSet& t, const CoreQuery& q);

}  // namespace lrc::cores
