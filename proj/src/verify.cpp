#include "lrc/verify.hpp"

#include <algorithm>
#include <bit>

#include "lrc/combinatorics.hpp"
#include "lrc/error.hpp"
#include "lrc/simd.hpp"

namespace lrc::verify {

namespace {

std::string fmt(const IndexSet& s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.size(); ++i) out += (i ? "," : "") + std::to_string(s[i]);
  return out + "}";
}

// Columns as contiguous vectors, for the echelon searches.
std::vector<std::vector<std::uint32_t>> columns(const Matrix& g) {
  std::vector<std::vector<std::uint32_t>> out;
  for (int j = 1; j <= g.cols(); ++j) out.push_back(g.column(j));
  return out;
}

// DFS over `size`-subsets of the candidate labels, looking for one with rank < target.
// A prefix whose rank already reaches target is pruned: all its extensions do too.
class DeficientSearch {
 public:
  DeficientSearch(const Matrix& g, const IndexSet& labels, int target)
      : cols_(columns(g)), labels_(labels), basis_(g.field(), g.rows()), target_(target) {}

  std::optional<IndexSet> run(int size) {
    size_ = size;
    chosen_.clear();
    if (size > static_cast<int>(labels_.size())) return std::nullopt;
    if (dfs(0)) return chosen_;
    return std::nullopt;
  }

 private:
  bool dfs(std::size_t from) {
    if (static_cast<int>(chosen_.size()) == size_) return basis_.rank() < target_;
    const std::size_t remaining = static_cast<std::size_t>(size_) - chosen_.size();
    for (std::size_t i = from; i + remaining <= labels_.size(); ++i) {
      const int saved = basis_.rank();
      basis_.insert(cols_[static_cast<std::size_t>(labels_[i] - 1)]);
      chosen_.push_back(labels_[i]);
      const bool found = basis_.rank() < target_ && dfs(i + 1);
      if (found) return true;
      chosen_.pop_back();
      basis_.truncate(saved);
    }
    return false;
  }

  std::vector<std::vector<std::uint32_t>> cols_;
  const IndexSet& labels_;
  linalg::EchelonBasis basis_;
  int target_;
  int size_ = 0;
  IndexSet chosen_;
};

IndexSet all_labels(int n) {
  IndexSet out(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) out[static_cast<std::size_t>(i)] = i + 1;
  return out;
}

std::uint64_t ipow_capped(std::uint64_t base, int exp, std::uint64_t cap) {
  unsigned __int128 r = 1;
  for (int i = 0; i < exp; ++i) {
    r *= base;
    if (r > cap) return cap + 1;
  }
  return static_cast<std::uint64_t>(r);
}

}  // namespace

LocalityReport check_locality(const Matrix& g, const covers::Structure& s, int r, int delta) {
  if (s.n != g.cols()) throw Error(ErrorKind::StructureMismatch, "structure length differs from matrix width");
  LocalityReport rep;
  rep.overall = true;
  std::vector<bool> covered(static_cast<std::size_t>(s.n) + 1, false);
  for (const IndexSet& grp : s.groups) {
    try {
      linalg::check_labels(grp, g.cols());
    } catch (const Error&) {
      throw Error(ErrorKind::StructureMismatch, "group " + fmt(grp) + " has invalid labels");
    }
    for (int x : grp) covered[static_cast<std::size_t>(x)] = true;
    GroupLocality gl;
    gl.group = grp;
    gl.rank = linalg::rank(g, grp);
    gl.rank_ok = gl.rank <= r;
    const int size = static_cast<int>(grp.size()) - delta + 1;
    if (size < 1) {
      gl.subsets_ok = false;
    } else {
      // Some size-subset has rank below the group rank iff the locality condition fails.
      DeficientSearch search(g, grp, gl.rank);
      gl.failing_subset = search.run(size);
      gl.subsets_ok = !gl.failing_subset.has_value();
    }
    rep.overall = rep.overall && gl.rank_ok && gl.subsets_ok;
    rep.per_group.push_back(std::move(gl));
  }
  for (int x = 1; x <= s.n; ++x)
    if (!covered[static_cast<std::size_t>(x)]) rep.uncovered.push_back(x);
  if (!rep.uncovered.empty()) rep.overall = false;
  return rep;
}

LocalityReport check_locality(const construct::LrcCode& code) {
  return check_locality(code.generator, code.structure, code.params.r, code.params.delta);
}

DistanceReport distance_by_weight(const Matrix& g, std::uint64_t budget) {
  const gf::Field& f = g.field();
  const int k = g.rows();
  const int n = g.cols();
  const std::uint64_t q = f.order();
  if (ipow_capped(q, k, budget) > budget)
    throw Error(ErrorKind::BudgetExceeded, "q^k messages exceed the budget of " + std::to_string(budget));
  if (linalg::rank(g) < k) throw Error(ErrorKind::RankDeficient, "generator rank below k");

  const auto& kernels = simd::active_kernels();
  std::vector<std::uint32_t> c(static_cast<std::size_t>(n), 0);
  DistanceReport rep;
  rep.method = DistanceMethod::WeightEnumeration;
  rep.d = n + 1;
  auto consider = [&] {
    const int w = static_cast<int>(kernels.count_nonzero(c.data(), c.size()));
    if (w > 0 && w < rep.d) {
      rep.d = w;
      rep.codeword = c;
    }
  };

  if (f.is_prime_field()) {
    // Odometer over messages; a digit stepping from a to a+1 (or wrapping
    // from q-1 to 0, since q * row = 0) adds its row once.
    std::vector<std::uint32_t> digit(static_cast<std::size_t>(k), 0);
    while (true) {
      int i = k - 1;
      while (i >= 0) {
        f.axpy(c, g.row(i), 1);
        if (++digit[static_cast<std::size_t>(i)] < q) break;
        digit[static_cast<std::size_t>(i)] = 0;
        --i;
      }
      if (i < 0) break;
      consider();
    }
  } else {
    // Binary Gray code over the e*k message bits; each step XORs one scaled row.
    const int e = f.degree();
    std::vector<std::vector<std::uint32_t>> scaled;
    for (int i = 0; i < k; ++i)
      for (int b = 0; b < e; ++b) {
        std::vector<std::uint32_t> row(g.row(i).begin(), g.row(i).end());
        f.scale(row, 1u << b);
        scaled.push_back(std::move(row));
      }
    const std::uint64_t steps = ipow_capped(q, k, budget);
    for (std::uint64_t step = 1; step < steps; ++step) {
      const auto& row = scaled[static_cast<std::size_t>(std::countr_zero(step))];
      for (int j = 0; j < n; ++j) c[static_cast<std::size_t>(j)] ^= row[static_cast<std::size_t>(j)];
      consider();
    }
  }
  return rep;
}

std::optional<IndexSet> rank_deficient_subset(const Matrix& g, int size) {
  const IndexSet labels = all_labels(g.cols());
  return DeficientSearch(g, labels, g.rows()).run(size);
}

DistanceReport distance_by_rank(const Matrix& g, std::uint64_t budget) {
  const int k = g.rows();
  const int n = g.cols();
  if (linalg::rank(g) < k) throw Error(ErrorKind::RankDeficient, "generator rank below k");
  const IndexSet labels = all_labels(n);
  DeficientSearch search(g, labels, k);
  for (int s = n - 1; s >= k - 1; --s) {
    if (binomial_saturating(n, s) > budget) {
      throw Error(ErrorKind::BudgetExceeded, "C(" + std::to_string(n) + "," + std::to_string(s) +
                                                 ") subsets exceed the budget of " + std::to_string(budget));
    }
    if (auto w = search.run(s)) {
      DistanceReport rep;
      rep.method = DistanceMethod::RankCriterion;
      rep.d = n - s;
      rep.deficient = *w;
      return rep;
    }
  }
  throw Error(ErrorKind::RankDeficient, "no deficient subset found");  // unreachable for rank k
}

DistanceReport min_distance(const Matrix& g, std::uint64_t budget) {
  if (ipow_capped(g.field().order(), g.rows(), budget) <= budget) return distance_by_weight(g, budget);
  return distance_by_rank(g, budget);
}

OptimalityReport certify_optimal(const construct::LrcCode& code, std::uint64_t budget) {
  const auto& p = code.params;
  OptimalityReport rep;
  rep.bound_d = params::distance_bound(p);
  rep.subset_size = p.k + ((p.k + p.r - 1) / p.r - 1) * (p.delta - 1);
  rep.subsets = binomial_saturating(p.n, rep.subset_size);
  if (rep.subsets > budget) {
    throw Error(ErrorKind::BudgetExceeded, "C(" + std::to_string(p.n) + "," + std::to_string(rep.subset_size) +
                                               ") subsets exceed the budget of " + std::to_string(budget));
  }
  rep.locality_ok = check_locality(code).overall;
  rep.witness = rank_deficient_subset(code.generator, rep.subset_size);
  rep.optimal = rep.locality_ok && !rep.witness;
  return rep;
}

StructureReport check_structure_theorem(const construct::LrcCode& code) {
  const auto& p = code.params;
  if (p.k % p.r != 0 || p.r >= p.k)
    throw Error(ErrorKind::PreconditionViolated, "structure theorem needs r | k and r < k");
  StructureReport rep;
  auto fail = [&](std::string msg) { rep.violations.push_back(std::move(msg)); };
  const int s = p.r + p.delta - 1;
  std::vector<int> seen(static_cast<std::size_t>(p.n) + 1, 0);
  for (const IndexSet& grp : code.structure.groups) {
    for (int x : grp)
      if (x >= 1 && x <= p.n && seen[static_cast<std::size_t>(x)]++ > 0)
        fail("coordinate " + std::to_string(x) + " lies in two groups");
    if (static_cast<int>(grp.size()) != s) fail("group " + fmt(grp) + " has size != r+delta-1");
    const Matrix sub = code.generator.select_columns(grp);
    if (linalg::rank(sub) != p.r) fail("group " + fmt(grp) + " punctured code has dimension != r");
    if (auto bad = DeficientSearch(sub, all_labels(sub.cols()), p.r).run(p.r))
      fail("group " + fmt(grp) + " punctured code is not MDS");
  }
  rep.ok = rep.violations.empty();
  return rep;
}

bool check_mds(const Matrix& m) {
  if (m.rows() > m.cols()) return false;
  return !rank_deficient_subset(m, m.rows()).has_value();
}

}  // namespace lrc::verify
