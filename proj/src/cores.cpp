#include "lrc/cores.hpp"

#include <algorithm>

#include "lrc/error.hpp"

namespace lrc::cores {

CoreModel::CoreModel(const covers::Structure& s, int r, int delta)
    : s_(&s), r_(r), delta_(delta), member_(static_cast<std::size_t>(s.n) + 1),
      cap_(static_cast<std::size_t>(s.t())), block_(static_cast<std::size_t>(s.t()), -1),
      hub_of_(static_cast<std::size_t>(s.n) + 1, -1) {
  if (s.kind == covers::Kind::Cover)
    throw Error(ErrorKind::StructureMismatch, "cores are defined for partitions and frames only");
  for (int g = 0; g < s.t(); ++g) {
    const IndexSet& grp = s.groups[static_cast<std::size_t>(g)];
    for (int x : grp) {
      if (x < 1 || x > s.n) throw Error(ErrorKind::StructureMismatch, "group label outside [1, n]");
      member_[static_cast<std::size_t>(x)].push_back(g);
    }
    cap_[static_cast<std::size_t>(g)] = is_frame() ? r : static_cast<int>(grp.size()) - delta + 1;
  }
  for (std::size_t j = 0; j < s.hub_blocks.size(); ++j) {
    for (int i : s.hub_blocks[j]) block_[static_cast<std::size_t>(i - 1)] = static_cast<int>(j);
    hub_of_[static_cast<std::size_t>(s.hubs[j])] = static_cast<int>(j);
  }
}

bool is_core(const IndexSet& set, const CoreModel& model) {
  const auto& st = model.structure();
  std::vector<bool> in(static_cast<std::size_t>(st.n) + 1, false);
  for (int x : set) {
    if (x < 1 || x > st.n) throw Error(ErrorKind::IndexOutOfRange, "core label outside [1, n]");
    in[static_cast<std::size_t>(x)] = true;
  }
  auto meet = [&](int i) {  // |S n S_i|, i 1-based
    int c = 0;
    for (int x : st.group(i)) c += in[static_cast<std::size_t>(x)] ? 1 : 0;
    return c;
  };
  const int r = model.r();

  if (!model.is_frame()) {
    for (int i = 1; i <= st.t(); ++i)
      if (meet(i) > model.cap(i - 1)) return false;
    return true;
  }

  for (std::size_t j = 0; j < st.hub_blocks.size(); ++j) {
    const IndexSet& a = st.hub_blocks[j];
    if (in[static_cast<std::size_t>(st.hubs[j])]) {
      for (int i : a)
        if (meet(i) > r) return false;
    } else {
      bool some = false;
      for (int ij : a) {
        if (meet(ij) > r) continue;
        bool rest = true;
        for (int i : a)
          if (i != ij && meet(i) > r - 1) rest = false;
        if (rest) {
          some = true;
          break;
        }
      }
      if (!some) return false;
    }
  }
  for (int i : st.tail_block)
    if (meet(i) > r) return false;
  return true;
}

CoreTracker::CoreTracker(const CoreModel& model)
    : m_(&model), count_(static_cast<std::size_t>(model.structure().t()), 0),
      hub_in_(model.structure().hub_blocks.size(), 0) {}

bool CoreTracker::group_ok(int g) const {
  const int b = m_->block_of(g);
  if (b < 0) return count_[static_cast<std::size_t>(g)] <= m_->cap(g);
  // Hub block: all counts <= r, and without the hub at most one reaches r.
  int at_r = 0;
  for (int i : m_->structure().hub_blocks[static_cast<std::size_t>(b)]) {
    const int c = count_[static_cast<std::size_t>(i - 1)];
    if (c > m_->r()) return false;
    if (c == m_->r()) ++at_r;
  }
  return hub_in_[static_cast<std::size_t>(b)] != 0 || at_r <= 1;
}

bool CoreTracker::try_add(int x) {
  const auto& gs = m_->groups_of(x);
  const int hb = m_->hub_block(x);
  for (int g : gs) ++count_[static_cast<std::size_t>(g)];
  if (hb >= 0) hub_in_[static_cast<std::size_t>(hb)] = 1;
  bool ok = true;
  for (int g : gs)
    if (!group_ok(g)) {
      ok = false;
      break;
    }
  if (!ok) {
    for (int g : gs) --count_[static_cast<std::size_t>(g)];
    if (hb >= 0) hub_in_[static_cast<std::size_t>(hb)] = 0;
    return false;
  }
  ++size_;
  return true;
}

void CoreTracker::remove(int x) {
  for (int g : m_->groups_of(x)) --count_[static_cast<std::size_t>(g)];
  const int hb = m_->hub_block(x);
  if (hb >= 0) hub_in_[static_cast<std::size_t>(hb)] = 0;
  --size_;
}

Omega0 omega0(const CoreModel& model) {
  const auto& st = model.structure();
  Omega0 out;
  for (int g = 0; g < st.t(); ++g) {
    const IndexSet& grp = st.groups[static_cast<std::size_t>(g)];
    const int want = model.cap(g);
    IndexSet u;
    const int b = model.block_of(g);
    const int hub = b >= 0 ? st.hubs[static_cast<std::size_t>(b)] : 0;
    if (hub != 0) u.push_back(hub);
    for (int x : grp) {
      if (static_cast<int>(u.size()) >= want) break;
      if (x != hub) u.push_back(x);
    }
    std::sort(u.begin(), u.end());
    out.indices.insert(out.indices.end(), u.begin(), u.end());
    out.picks.push_back(std::move(u));
  }
  std::sort(out.indices.begin(), out.indices.end());
  out.indices.erase(std::unique(out.indices.begin(), out.indices.end()), out.indices.end());
  return out;
}

namespace {

// Lexicographic DFS over `ground` choosing `need` elements that keep the tracker a core.
class CoreSearch {
 public:
  CoreSearch(const IndexSet& ground, CoreTracker& tracker, const std::function<bool(const IndexSet&)>& visit)
      : ground_(ground), tracker_(tracker), visit_(visit) {}

  bool run(int need) {
    need_ = need;
    chosen_.clear();
    return dfs(0);
  }

 private:
  bool dfs(std::size_t from) {
    if (static_cast<int>(chosen_.size()) == need_) return visit_(chosen_);
    const std::size_t remaining = static_cast<std::size_t>(need_) - chosen_.size();
    for (std::size_t i = from; i + remaining <= ground_.size(); ++i) {
      const int x = ground_[i];
      if (!tracker_.try_add(x)) continue;
      chosen_.push_back(x);
      const bool go_on = dfs(i + 1);
      chosen_.pop_back();
      tracker_.remove(x);
      if (!go_on) return false;
    }
    return true;
  }

  const IndexSet& ground_;
  CoreTracker& tracker_;
  const std::function<bool(const IndexSet&)>& visit_;
  IndexSet chosen_;
  int need_ = 0;
};

}  // namespace

void for_each_lambda_core(const CoreQuery& q, int lambda, const std::function<bool(const IndexSet&)>& visit) {
  if (q.k < 1) return;
  CoreTracker tracker(*q.model);
  if (!tracker.try_add(lambda)) return;
  IndexSet ground;
  for (int x : q.ground)
    if (x != lambda) ground.push_back(x);
  CoreSearch(ground, tracker, visit).run(q.k - 1);
}

std::vector<IndexSet> lambda_cores(const CoreQuery& q, int lambda) {
  std::vector<IndexSet> out;
  for_each_lambda_core(q, lambda, [&](const IndexSet& s) {
    out.push_back(s);
    return true;
  });
  return out;
}

void for_each_core(const CoreQuery& q, const std::function<bool(const IndexSet&)>& visit) {
  CoreTracker tracker(*q.model);
  CoreSearch(q.ground, tracker, visit).run(q.k);
}

std::optional<CoreWithin> core_within(const IndexSet& t, const CoreQuery& q) {
  const CoreModel& model = *q.model;
  const auto& st = model.structure();
  const int r = model.r();
  std::vector<bool> in(static_cast<std::size_t>(st.n) + 1, false);
  for (int x : t)
    if (x >= 1 && x <= st.n) in[static_cast<std::size_t>(x)] = true;

  const int tcount = st.t();
  std::vector<IndexSet> meet(static_cast<std::size_t>(tcount));
  for (int g = 0; g < tcount; ++g)
    for (int x : st.groups[static_cast<std::size_t>(g)])
      if (in[static_cast<std::size_t>(x)]) meet[static_cast<std::size_t>(g)].push_back(x);

  CoreWithin out;
  out.pieces.resize(static_cast<std::size_t>(tcount));
  std::vector<bool> saturated(static_cast<std::size_t>(tcount), false);
  for (int g = 0; g < tcount; ++g) {
    if (static_cast<int>(meet[static_cast<std::size_t>(g)].size()) >= model.cap(g)) {
      saturated[static_cast<std::size_t>(g)] = true;
      out.saturated.push_back(g + 1);
    }
  }

  // First `want` elements of T n S_g, forcing `keep` (if nonzero) to be among them.
  auto take = [&](int g, int want, int keep) {
    IndexSet w;
    if (keep != 0) w.push_back(keep);
    for (int x : meet[static_cast<std::size_t>(g)]) {
      if (static_cast<int>(w.size()) >= want) break;
      if (x != keep) w.push_back(x);
    }
    std::sort(w.begin(), w.end());
    return w;
  };

  for (int g = 0; g < tcount; ++g) {
    if (model.block_of(g) >= 0) continue;
    auto& piece = out.pieces[static_cast<std::size_t>(g)];
    piece = saturated[static_cast<std::size_t>(g)] ? take(g, model.cap(g), 0) : meet[static_cast<std::size_t>(g)];
  }
  for (std::size_t j = 0; j < st.hub_blocks.size(); ++j) {
    const IndexSet& a = st.hub_blocks[j];
    const int hub = st.hubs[j];
    const bool hub_in_t = in[static_cast<std::size_t>(hub)];
    bool first = true;
    for (int i : a) {
      const int g = i - 1;
      auto& piece = out.pieces[static_cast<std::size_t>(g)];
      if (!saturated[static_cast<std::size_t>(g)]) {
        piece = meet[static_cast<std::size_t>(g)];
      } else if (hub_in_t) {
        piece = take(g, r, hub);
      } else {
        piece = take(g, first ? r : r - 1, 0);
        first = false;
      }
    }
  }

  IndexSet w;
  for (const auto& piece : out.pieces) w.insert(w.end(), piece.begin(), piece.end());
  std::sort(w.begin(), w.end());
  w.erase(std::unique(w.begin(), w.end()), w.end());
  if (static_cast<int>(w.size()) < q.k) return std::nullopt;
  w.resize(static_cast<std::size_t>(q.k));
  out.core = std::move(w);
  return out;
}

}  // namespace lrc::cores
