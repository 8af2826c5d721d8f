#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <set>

#include "lrc/combinatorics.hpp"
#include "lrc/cores.hpp"
#include "lrc/error.hpp"
#include "support.hpp"

using namespace lrc;
using namespace lrc::cores;

namespace {

std::set<IndexSet> as_set(const std::vector<IndexSet>& v) { return {v.begin(), v.end()}; }

// Every (k-1)-subset S0 of ground with S0 u {lambda} passing the literal predicate.
std::set<IndexSet> brute_lambda(const CoreModel& m, const IndexSet& ground, int k, int lambda) {
  std::set<IndexSet> out;
  for_each_combination(static_cast<int>(ground.size()), k - 1, [&](const std::vector<int>& c) {
    IndexSet s0, s;
    for (int i : c) s0.push_back(ground[static_cast<std::size_t>(i)]);
    s = s0;
    s.insert(std::upper_bound(s.begin(), s.end(), lambda), lambda);
    if (is_core(s, m)) out.insert(s0);
    return true;
  });
  return out;
}

}  // namespace

TEST_CASE("is_core on the n=37 frame") {
  const auto frame = testing::fig3_frame();
  const CoreModel m(frame, 3, 3);
  CHECK(is_core({1, 2, 3, 6, 7, 10, 11}, m));
  CHECK_FALSE(is_core({2, 3, 4, 6, 7, 8, 28}, m));
  CHECK(is_core({}, m));
  CHECK(is_core({1, 2, 3, 6, 7, 10}, m));           // hub present: every count <= r
  CHECK_FALSE(is_core({1, 2, 3, 6, 7, 8, 10}, m));  // S_2 meets it in 4
  CHECK_FALSE(is_core({1, 2, 3, 4, 6, 7}, m));      // |S n S_1| = 4 > r
  CHECK_FALSE(is_core({23, 24, 25, 26}, m));        // tail group over r
}

TEST_CASE("is_core on partitions") {
  const auto s = covers::uniform_partition(6, 2, 2);
  const CoreModel m(s, 2, 2);
  CHECK(is_core({1, 2, 4, 5}, m));
  CHECK_FALSE(is_core({1, 2, 3}, m));
  const auto rem = covers::remainder_partition(11, 2, 2, 5);
  const CoreModel mr(rem, 2, 2);
  CHECK(is_core({10}, mr));
  CHECK_FALSE(is_core({10, 11}, mr));  // group of size 2 has cap 1
  CHECK_THROWS_AS(CoreModel(covers::Structure{covers::Kind::Cover, 3, {{1, 2, 3}}, {}, {}, {}}, 2, 2), Error);
}

TEST_CASE("omega0") {
  const auto part = covers::uniform_partition(6, 2, 2);
  const auto o = omega0(CoreModel(part, 2, 2));
  CHECK(o.indices == IndexSet{1, 2, 4, 5});
  CHECK(o.picks == std::vector<IndexSet>{{1, 2}, {4, 5}});

  const auto frame = testing::fig3_frame();
  const CoreModel fm(frame, 3, 3);
  const auto of = omega0(fm);
  CHECK(of.indices ==
        IndexSet{1, 2, 3, 6, 7, 10, 11, 14, 15, 16, 19, 20, 23, 24, 25, 28, 29, 30, 33, 34, 35});
  CHECK(of.indices.size() == 37 - 8 * 2);
  CHECK(is_core(of.indices, fm));

  const covers::Structure single{covers::Kind::Partition, 3, {{1, 2, 3}}, {}, {}, {}};
  CHECK(omega0(CoreModel(single, 1, 3)).indices == IndexSet{1});
}

TEST_CASE("lambda_cores on the (6,3) example") {
  const auto part = covers::uniform_partition(6, 2, 2);
  const CoreModel m(part, 2, 2);
  CHECK(as_set(lambda_cores({&m, 3, {1, 2, 4, 5}}, 3)) == std::set<IndexSet>{{1, 4}, {1, 5}, {2, 4}, {2, 5}, {4, 5}});

  // The worked example lists seven sets; {3,4} and {3,5} satisfy the definition as well.
  const auto got = as_set(lambda_cores({&m, 3, {1, 2, 3, 4, 5}}, 6));
  const std::set<IndexSet> listed{{1, 2}, {1, 3}, {2, 3}, {1, 4}, {1, 5}, {2, 4}, {2, 5}};
  CHECK(std::includes(got.begin(), got.end(), listed.begin(), listed.end()));
  std::set<IndexSet> extra;
  std::set_difference(got.begin(), got.end(), listed.begin(), listed.end(), std::inserter(extra, extra.end()));
  CHECK(extra == std::set<IndexSet>{{3, 4}, {3, 5}});
  CHECK(is_core({3, 4, 6}, m));
  CHECK(is_core({3, 5, 6}, m));

  CHECK(lambda_cores({&m, 1, {1, 2, 4, 5}}, 3) == std::vector<IndexSet>{IndexSet{}});
}

TEST_CASE("core_within on the n=37 frame") {
  const auto frame = testing::fig3_frame();
  const CoreModel m(frame, 3, 3);
  const CoreQuery q{&m, 7, {}};

  const IndexSet t1{2, 3, 4, 6, 7, 8, 14, 15, 16, 17, 19, 23, 24, 28};
  const auto a = core_within(t1, q);
  REQUIRE(a);
  CHECK(a->saturated == IndexSet{1, 2, 4});
  CHECK(a->pieces[0] == IndexSet{2, 3, 4});
  CHECK(a->pieces[1] == IndexSet{6, 7});
  CHECK(a->pieces[3] == IndexSet{14, 15, 16});
  CHECK(a->core.size() == 7);
  CHECK(is_core(a->core, m));
  CHECK(std::includes(t1.begin(), t1.end(), a->core.begin(), a->core.end()));

  const IndexSet t2{2, 3, 4, 6, 7, 8, 10, 11, 14, 15, 19, 23, 24, 28};
  const auto b = core_within(t2, q);
  REQUIRE(b);
  CHECK(b->saturated == IndexSet{1, 2});
  CHECK(b->pieces[0] == IndexSet{2, 3, 4});
  CHECK(b->pieces[1] == IndexSet{6, 7});
  CHECK(b->pieces[2] == IndexSet{10, 11});
  CHECK(is_core(b->core, m));

  CHECK_FALSE(core_within({1, 2, 3}, q));
}

TEST_CASE("property: counting tracker agrees with the literal predicate") {
  std::mt19937_64 rng(77);
  const auto frame = testing::fig3_frame();
  const auto hub = covers::hub_frame(37, 3, 3);
  const auto paired = covers::paired_frame(10, 2, 2);
  const auto part = covers::remainder_partition(11, 2, 2, 5);
  const std::vector<std::pair<const covers::Structure*, std::pair<int, int>>> cases = {
      {&frame, {3, 3}}, {&hub, {3, 3}}, {&paired, {2, 2}}, {&part, {2, 2}}};
  for (const auto& [s, rd] : cases) {
    const CoreModel m(*s, rd.first, rd.second);
    for (int trial = 0; trial < 2000; ++trial) {
      const IndexSet set = testing::random_subset(s->n, 0.15 + 0.3 * (trial % 3), rng);
      CoreTracker tr(m);
      bool all = true;
      for (int x : set) all = all && tr.try_add(x);
      REQUIRE(all == is_core(set, m));
    }
  }
}

TEST_CASE("property: cores are downward closed (1000 random cores)") {
  std::mt19937_64 rng(5);
  const auto frame = testing::fig3_frame();
  const CoreModel m(frame, 3, 3);
  int found = 0;
  while (found < 1000) {
    // Grow a random core greedily, then delete random elements.
    IndexSet order(37);
    std::iota(order.begin(), order.end(), 1);
    std::shuffle(order.begin(), order.end(), rng);
    CoreTracker tr(m);
    IndexSet core;
    for (int x : order)
      if (tr.try_add(x)) core.push_back(x);
    std::sort(core.begin(), core.end());
    REQUIRE(is_core(core, m));
    ++found;
    IndexSet sub;
    for (int x : core)
      if (rng() % 2) sub.push_back(x);
    REQUIRE(is_core(sub, m));
  }
}

TEST_CASE("property: lambda_cores equals brute force for |Omega| <= 14") {
  std::mt19937_64 rng(31);
  const auto frame = testing::fig3_frame();
  const auto hub = covers::hub_frame(14, 3, 3);
  const auto paired = covers::paired_frame(10, 2, 2);
  const auto part = covers::uniform_partition(16, 2, 3);
  const auto rem = covers::remainder_partition(15, 3, 2, 4);
  const std::vector<std::pair<const covers::Structure*, std::pair<int, int>>> cases = {
      {&frame, {3, 3}}, {&hub, {3, 3}}, {&paired, {2, 2}}, {&part, {2, 3}}, {&rem, {3, 2}}};
  int compared = 0;
  for (const auto& [s, rd] : cases) {
    const CoreModel m(*s, rd.first, rd.second);
    for (int trial = 0; trial < 60; ++trial) {
      IndexSet all(static_cast<std::size_t>(s->n));
      std::iota(all.begin(), all.end(), 1);
      std::shuffle(all.begin(), all.end(), rng);
      const int lambda = all.back();
      const int size = 4 + static_cast<int>(rng() % 11);
      IndexSet ground(all.begin(), all.begin() + std::min<int>(size, s->n - 1));
      std::sort(ground.begin(), ground.end());
      REQUIRE(ground.size() <= 14);
      const int k = 1 + static_cast<int>(rng() % 7);
      const auto fast = lambda_cores({&m, k, ground}, lambda);
      REQUIRE(std::is_sorted(fast.begin(), fast.end()));
      REQUIRE(as_set(fast) == brute_lambda(m, ground, k, lambda));
      REQUIRE(as_set(fast).size() == fast.size());
      ++compared;
    }
  }
  CHECK(compared == 300);
}

TEST_CASE("property: core_within returns a core inside T whenever T is large enough") {
  std::mt19937_64 rng(8);
  const auto frame = testing::fig3_frame();
  const CoreModel m(frame, 3, 3);
  const int k = 7;
  const int need = k + (3 - 1) * 2;  // coverage holds for this frame at k = 7
  REQUIRE(covers::coverage_check(frame, k, 3, 3));
  for (int trial = 0; trial < 2000; ++trial) {
    const IndexSet t = testing::random_subset(37, 0.2 + 0.1 * (trial % 5), rng);
    const auto got = core_within(t, {&m, k, {}});
    if (got) {
      REQUIRE(is_core(got->core, m));
      REQUIRE(static_cast<int>(got->core.size()) == k);
      REQUIRE(std::includes(t.begin(), t.end(), got->core.begin(), got->core.end()));
    }
    if (static_cast<int>(t.size()) >= need) REQUIRE(got.has_value());
  }
}
