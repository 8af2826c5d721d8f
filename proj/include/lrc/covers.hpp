#pragma once

// Repair-group structures: plain partitions, (A, Psi)-frames and the window
// covers used for the MDS case. Labels are 1-based throughout; hub_blocks and
// tail_block hold group indices, hubs hold coordinate labels.

#include <optional>
#include <string>
#include <vector>

#include "lrc/linalg.hpp"

namespace lrc::covers {

enum class Kind { Partition, Frame, Cover };

struct Structure {
  Kind kind = Kind::Partition;
  int n = 0;
  std::vector<IndexSet> groups;
  std::vector<IndexSet> hub_blocks;
  IndexSet tail_block;
  std::vector<int> hubs;

  int t() const noexcept { return static_cast<int>(groups.size()); }
  const IndexSet& group(int i) const { return groups.at(static_cast<std::size_t>(i - 1)); }

  friend bool operator==(const Structure&, const Structure&) = default;
};

std::string_view to_string(Kind k) noexcept;

Structure uniform_partition(int n, int r, int delta);
Structure remainder_partition(int n, int r, int delta, int k);
Structure hub_frame(int n, int r, int delta);
Structure paired_frame(int n, int r, int delta);
/// Windows of size k+delta-1 covering [n], the last one shifted to end at n.
Structure mds_windows(int n, int k, int delta);

/// Frame from explicit groups and blocks; tail_block is every group not in a hub block.
Structure make_frame(int n, std::vector<IndexSet> groups, std::vector<IndexSet> hub_blocks,
                     std::vector<int> hubs);

struct Validation {
  bool ok = true;
  std::vector<std::string> violations;
};

Validation validate(const Structure& s, int r, int delta);

/// Every ceil(k/r)-subset J of groups has |union| >= k + ceil(k/r)(delta-1).
/// TooFewGroups when t < ceil(k/r).
bool coverage_check(const Structure& s, int k, int r, int delta);

/// Lexicographically first ceil(k/r)-subset J (1-based group indices) whose union
/// is smaller than k + ceil(k/r)(delta-1). n is the largest label; CoverIncomplete
/// if [1..n] is not covered, TooFewGroups if there are fewer than ceil(k/r) groups.
std::optional<IndexSet> deficiency_witness(const std::vector<IndexSet>& groups, int k, int r, int delta);

/// Size of the union of the selected groups (1-based group indices).
int union_size(const std::vector<IndexSet>& groups, const IndexSet& which);

}  // namespace lrc::covers
