#include "lrc/covers.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

#include "lrc/combinatorics.hpp"
#include "lrc/error.hpp"

namespace lrc::covers {

namespace {

IndexSet range(int lo, int hi) {
  IndexSet out;
  for (int i = lo; i <= hi; ++i) out.push_back(i);
  return out;
}

void require_positive(int n, int r, int delta) {
  if (n < 1 || r < 1 || delta < 2)
    throw Error(ErrorKind::InvalidParams, "need n >= 1, r >= 1, delta >= 2");
}

std::string fmt(const IndexSet& s) {
  std::ostringstream os;
  os << '{';
  for (std::size_t i = 0; i < s.size(); ++i) os << (i ? "," : "") << s[i];
  os << '}';
  return os.str();
}

struct FrameShape {
  int s, w, m, ell;
};

FrameShape frame_shape(int n, int r, int delta) {
  require_positive(n, r, delta);
  const int s = r + delta - 1;
  const int m = n % s;
  if (m == 0) throw Error(ErrorKind::PreconditionViolated, "frames need (r+delta-1) not dividing n");
  return {s, n / s, m, s - m};
}

// Consecutive s-blocks over [from, n], appended to out.
void append_blocks(std::vector<IndexSet>& out, int from, int n, int s) {
  for (int lo = from; lo <= n; lo += s) out.push_back(range(lo, lo + s - 1));
}

}  // namespace

std::string_view to_string(Kind k) noexcept {
  switch (k) {
    case Kind::Partition: return "partition";
    case Kind::Frame: return "frame";
    case Kind::Cover: return "cover";
  }
  return "?";
}

Structure uniform_partition(int n, int r, int delta) {
  require_positive(n, r, delta);
  const int s = r + delta - 1;
  if (n % s != 0)
    throw Error(ErrorKind::NotDivisible, std::to_string(s) + " does not divide " + std::to_string(n));
  Structure out;
  out.n = n;
  append_blocks(out.groups, 1, n, s);
  return out;
}

Structure remainder_partition(int n, int r, int delta, int k) {
  require_positive(n, r, delta);
  const int s = r + delta - 1;
  const int m = n % s;
  const int v = k % r;
  if (m < v + delta - 1) {
    throw Error(ErrorKind::PreconditionViolated, "remainder m=" + std::to_string(m) + " below v+delta-1=" +
                                                     std::to_string(v + delta - 1));
  }
  Structure out;
  out.n = n;
  append_blocks(out.groups, 1, n - m, s);
  out.groups.push_back(range(n - m + 1, n));
  return out;
}

Structure hub_frame(int n, int r, int delta) {
  const auto [s, w, m, ell] = frame_shape(n, r, delta);
  if (w < ell) {
    throw Error(ErrorKind::PreconditionViolated,
                "hub frame needs w >= r+delta-1-m (w=" + std::to_string(w) + ", l=" + std::to_string(ell) + ")");
  }
  const int big_l = (ell + 1) * (s - 1) + 1;
  Structure out;
  out.kind = Kind::Frame;
  out.n = n;
  for (int i = 0; i <= ell; ++i) {
    IndexSet g{1};
    for (int x = 2 + i * (s - 1); x <= 1 + (i + 1) * (s - 1); ++x) g.push_back(x);
    out.groups.push_back(std::move(g));
  }
  append_blocks(out.groups, big_l + 1, n, s);
  out.hub_blocks.push_back(range(1, ell + 1));
  out.tail_block = range(ell + 2, out.t());
  out.hubs.push_back(1);
  return out;
}

Structure paired_frame(int n, int r, int delta) {
  const auto [s, w, m, ell] = frame_shape(n, r, delta);
  if (w + 1 < 2 * ell) {
    throw Error(ErrorKind::PreconditionViolated, "paired frame needs w+1 >= 2(r+delta-1-m) (w=" +
                                                     std::to_string(w) + ", l=" + std::to_string(ell) + ")");
  }
  const int block = 2 * s - 1;
  Structure out;
  out.kind = Kind::Frame;
  out.n = n;
  for (int i = 0; i < ell; ++i) {
    const int lo = i * block + 1;
    const int hub = lo + s - 1;  // median of the block
    out.groups.push_back(range(lo, hub));
    out.groups.push_back(range(hub, lo + block - 1));
    out.hub_blocks.push_back({2 * i + 1, 2 * i + 2});
    out.hubs.push_back(hub);
  }
  append_blocks(out.groups, ell * block + 1, n, s);
  out.tail_block = range(2 * ell + 1, out.t());
  return out;
}

Structure mds_windows(int n, int k, int delta) {
  require_positive(n, k, delta);
  const int s = k + delta - 1;
  if (n < s) throw Error(ErrorKind::PreconditionViolated, "n below k+delta-1");
  Structure out;
  out.kind = Kind::Cover;
  out.n = n;
  for (int lo = 1; lo <= n; lo += s) {
    const int hi = std::min(lo + s - 1, n);
    out.groups.push_back(range(hi - s + 1, hi));
  }
  if (n % s == 0) out.kind = Kind::Partition;
  return out;
}

Structure make_frame(int n, std::vector<IndexSet> groups, std::vector<IndexSet> hub_blocks,
                     std::vector<int> hubs) {
  Structure out;
  out.kind = Kind::Frame;
  out.n = n;
  out.groups = std::move(groups);
  out.hub_blocks = std::move(hub_blocks);
  out.hubs = std::move(hubs);
  std::vector<bool> in_hub(out.groups.size() + 1, false);
  for (const auto& a : out.hub_blocks)
    for (int i : a)
      if (i >= 1 && i <= out.t()) in_hub[static_cast<std::size_t>(i)] = true;
  for (int i = 1; i <= out.t(); ++i)
    if (!in_hub[static_cast<std::size_t>(i)]) out.tail_block.push_back(i);
  return out;
}

Validation validate(const Structure& st, int r, int delta) {
  Validation v;
  auto fail = [&](std::string msg) {
    v.ok = false;
    v.violations.push_back(std::move(msg));
  };
  const int s = r + delta - 1;
  const int t = st.t();
  if (t == 0) fail("no groups");

  std::vector<int> multiplicity(static_cast<std::size_t>(std::max(st.n, 0)) + 1, 0);
  for (int i = 1; i <= t; ++i) {
    const IndexSet& g = st.group(i);
    bool labels_ok = true;
    for (std::size_t j = 0; j < g.size(); ++j) {
      if (g[j] < 1 || g[j] > st.n || (j > 0 && g[j] <= g[j - 1])) labels_ok = false;
    }
    if (!labels_ok) {
      fail("group " + std::to_string(i) + " has labels outside [1, n] or not strictly increasing");
      continue;
    }
    for (int x : g) ++multiplicity[static_cast<std::size_t>(x)];
    const int size = static_cast<int>(g.size());
    if (st.kind == Kind::Frame) {
      if (size != s) fail("group " + std::to_string(i) + " size " + std::to_string(size) + " != r+delta-1");
    } else if (size < delta || size > s) {
      fail("group " + std::to_string(i) + " size " + std::to_string(size) + " outside [delta, r+delta-1]");
    }
  }
  for (int x = 1; x <= st.n; ++x)
    if (multiplicity[static_cast<std::size_t>(x)] == 0) fail("coordinate " + std::to_string(x) + " uncovered");
  if (!v.ok) return v;

  if (st.kind == Kind::Cover) return v;
  if (st.kind == Kind::Partition) {
    if (!st.hub_blocks.empty() || !st.hubs.empty()) fail("partition carries hub data");
    for (int x = 1; x <= st.n; ++x)
      if (multiplicity[static_cast<std::size_t>(x)] > 1) fail("coordinate " + std::to_string(x) + " in several groups");
    return v;
  }

  if (st.hub_blocks.size() != st.hubs.size()) {
    fail("hub_blocks and hubs differ in length");
    return v;
  }
  std::vector<int> owner(static_cast<std::size_t>(t) + 1, 0);
  auto claim = [&](int i, int who) {
    if (i < 1 || i > t) {
      fail("block references group " + std::to_string(i) + " outside [1, t]");
    } else if (owner[static_cast<std::size_t>(i)] != 0) {
      fail("group " + std::to_string(i) + " in more than one block");
    } else {
      owner[static_cast<std::size_t>(i)] = who;
    }
  };
  for (std::size_t j = 0; j < st.hub_blocks.size(); ++j)
    for (int i : st.hub_blocks[j]) claim(i, static_cast<int>(j) + 1);
  for (int i : st.tail_block) claim(i, -1);
  for (int i = 1; i <= t; ++i)
    if (owner[static_cast<std::size_t>(i)] == 0) fail("group " + std::to_string(i) + " in no block");
  if (!v.ok) return v;

  // Each hub block: common intersection is exactly the hub, groups otherwise disjoint.
  std::vector<int> region(static_cast<std::size_t>(st.n) + 1, 0);  // which block/tail group owns a coordinate
  int region_id = 0;
  auto mark = [&](const IndexSet& g, int id, const std::string& what) {
    for (int x : g) {
      int& cell = region[static_cast<std::size_t>(x)];
      if (cell != 0 && cell != id) fail(what + " overlaps another block at coordinate " + std::to_string(x));
      cell = id;
    }
  };
  for (std::size_t j = 0; j < st.hub_blocks.size(); ++j) {
    const IndexSet& a = st.hub_blocks[j];
    const int hub = st.hubs[j];
    const std::string name = "hub block " + std::to_string(j + 1);
    if (a.empty()) {
      fail(name + " is empty");
      continue;
    }
    IndexSet common = st.group(a.front());
    for (int i : a) {
      IndexSet next;
      const IndexSet& g = st.group(i);
      std::set_intersection(common.begin(), common.end(), g.begin(), g.end(), std::back_inserter(next));
      common = std::move(next);
    }
    if (common.size() != 1) {
      fail("hub intersection not a singleton in " + name + ": " + fmt(common));
    } else if (common.front() != hub) {
      fail(name + " intersection " + fmt(common) + " differs from hub " + std::to_string(hub));
    }
    std::vector<int> seen(static_cast<std::size_t>(st.n) + 1, 0);
    for (int i : a)
      for (int x : st.group(i))
        if (x != hub && seen[static_cast<std::size_t>(x)]++ > 0)
          fail(name + " groups meet outside the hub at coordinate " + std::to_string(x));
    ++region_id;
    for (int i : a) mark(st.group(i), region_id, name);
  }
  for (int i : st.tail_block) {
    ++region_id;
    mark(st.group(i), region_id, "tail group " + std::to_string(i));
  }
  return v;
}

int union_size(const std::vector<IndexSet>& groups, const IndexSet& which) {
  std::set<int> u;
  for (int i : which) {
    const auto& g = groups.at(static_cast<std::size_t>(i - 1));
    u.insert(g.begin(), g.end());
  }
  return static_cast<int>(u.size());
}

namespace {

std::optional<IndexSet> first_deficient(const std::vector<IndexSet>& groups, int n, int k, int r, int delta) {
  const int c = (k + r - 1) / r;
  const int t = static_cast<int>(groups.size());
  if (t < c) {
    throw Error(ErrorKind::TooFewGroups,
                std::to_string(t) + " groups but ceil(k/r)=" + std::to_string(c) + " are required");
  }
  const int need = k + c * (delta - 1);
  std::vector<int> hits(static_cast<std::size_t>(n) + 1, 0);
  std::optional<IndexSet> witness;
  for_each_combination(t, c, [&](const std::vector<int>& pick) {
    std::fill(hits.begin(), hits.end(), 0);
    int size = 0;
    for (int i : pick)
      for (int x : groups[static_cast<std::size_t>(i)])
        if (hits[static_cast<std::size_t>(x)]++ == 0) ++size;
    if (size < need) {
      IndexSet j;
      for (int i : pick) j.push_back(i + 1);
      witness = std::move(j);
      return false;
    }
    return true;
  });
  return witness;
}

}  // namespace

bool coverage_check(const Structure& s, int k, int r, int delta) {
  return !first_deficient(s.groups, s.n, k, r, delta).has_value();
}

std::optional<IndexSet> deficiency_witness(const std::vector<IndexSet>& groups, int k, int r, int delta) {
  int n = 0;
  for (const auto& g : groups)
    for (int x : g) {
      if (x < 1) throw Error(ErrorKind::IndexOutOfRange, "labels are 1-based");
      n = std::max(n, x);
    }
  std::vector<bool> covered(static_cast<std::size_t>(n) + 1, false);
  for (const auto& g : groups)
    for (int x : g) covered[static_cast<std::size_t>(x)] = true;
  for (int x = 1; x <= n; ++x)
    if (!covered[static_cast<std::size_t>(x)])
      throw Error(ErrorKind::CoverIncomplete, "coordinate " + std::to_string(x) + " is in no group");
  return first_deficient(groups, n, k, r, delta);
}

}  // namespace lrc::covers
