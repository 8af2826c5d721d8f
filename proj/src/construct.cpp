#include "lrc/construct.hpp"

#include <algorithm>
#include <limits>

#include "lrc/error.hpp"
#include "lrc/simd.hpp"

namespace lrc::construct {

std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound) {
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() / bound * bound;
  std::uint64_t x;
  do x = rng();
  while (x >= limit);
  return x % bound;
}

Matrix mds_generator(int length, int k, const gf::Field& field) {
  if (k < 1 || length < k) throw Error(ErrorKind::InvalidParams, "need 1 <= k <= L");
  if (field.order() < static_cast<std::uint64_t>(length)) {
    throw Error(ErrorKind::FieldTooSmall, field.describe() + " has fewer than " + std::to_string(length) +
                                              " distinct evaluation points");
  }
  Matrix m(field, k, length);
  for (int j = 0; j < length; ++j) {
    const auto x = static_cast<std::uint32_t>(j);
    std::uint32_t power = 1;
    for (int i = 0; i < k; ++i) {
      m.set(i, j, power);
      power = field.mul(power, x);
    }
  }
  return m;
}

Hyperplanes::Hyperplanes(const Matrix& g)
    : g_(&g), k_(g.rows()), cache_(g), coords_(static_cast<std::size_t>(g.rows())) {}

void Hyperplanes::add(const IndexSet& s0) {
  if (static_cast<int>(s0.size()) != k_ - 1 || cache_.rank(s0) != k_ - 1) {
    throw Error(ErrorKind::RankDeficient, "a (k-1)-core of Omega has dependent columns");
  }
  const auto normals = cache_.basis().null_space();
  const auto& h = normals.front();
  for (int c = 0; c < k_; ++c) coords_[static_cast<std::size_t>(c)].push_back(h[static_cast<std::size_t>(c)]);
  ++count_;
}

bool Hyperplanes::admits(std::span<const std::uint32_t> v) const {
  if (count_ == 0) return true;
  const gf::Field& f = g_->field();
  acc_.assign(count_, 0);
  for (int c = 0; c < k_; ++c) {
    const std::uint32_t vc = v[static_cast<std::size_t>(c)];
    if (vc != 0) f.axpy(acc_, coords_[static_cast<std::size_t>(c)], vc);
  }
  return simd::active_kernels().find_zero(acc_.data(), acc_.size()) == acc_.size();
}

PickResult find_avoiding_vector(const Matrix& g, const IndexSet& span_cols, const Hyperplanes& avoid,
                                std::mt19937_64& rng, std::uint64_t span_budget) {
  const gf::Field& f = g.field();
  const int k = g.rows();
  // Independent generators of the span, so random coefficients are uniform over it.
  linalg::EchelonBasis echelon(f, k);
  std::vector<std::vector<std::uint32_t>> basis;
  for (int label : span_cols) {
    auto col = g.column(label);
    if (echelon.insert(col)) basis.push_back(std::move(col));
  }
  auto nonzero = [](const std::vector<std::uint32_t>& v) {
    return std::any_of(v.begin(), v.end(), [](std::uint32_t x) { return x != 0; });
  };

  PickResult out;
  std::vector<std::uint32_t> v(static_cast<std::size_t>(k));
  if (!basis.empty()) {
    for (int attempt = 1; attempt <= kRandomAttempts; ++attempt) {
      std::fill(v.begin(), v.end(), 0);
      for (const auto& b : basis) {
        const auto c = static_cast<std::uint32_t>(uniform_below(rng, f.order()));
        if (c != 0) f.axpy(v, b, c);
      }
      if (nonzero(v) && avoid.admits(v)) {
        out.vector = v;
        out.attempts = attempt;
        return out;
      }
    }
  }
  linalg::SpanEnumerator scan(f, k, basis, span_budget);
  while (scan.next(v)) {
    if (nonzero(v) && avoid.admits(v)) {
      out.vector = v;
      out.attempts = kRandomAttempts + 1;
      return out;
    }
  }
  throw Error(ErrorKind::NoValidVector, "every vector of the " + std::to_string(basis.size()) +
                                            "-dimensional span meets one of |Lambda|=" +
                                            std::to_string(avoid.size()) + " subspaces over q=" +
                                            std::to_string(f.order()));
}

PickResult pick_extension_vector(ExtensionState& state, int lambda, int group) {
  const IndexSet& grp = state.structure->group(group);
  IndexSet span_cols;
  std::set_intersection(grp.begin(), grp.end(), state.omega.begin(), state.omega.end(),
                        std::back_inserter(span_cols));
  Hyperplanes avoid(state.matrix);
  cores::CoreQuery q{state.model, state.k, state.omega};
  cores::for_each_lambda_core(q, lambda, [&](const IndexSet& s0) {
    avoid.add(s0);
    return true;
  });
  PickResult pick = find_avoiding_vector(state.matrix, span_cols, avoid, state.rng);
  state.matrix.set_column(lambda, pick.vector);
  state.omega.insert(std::upper_bound(state.omega.begin(), state.omega.end(), lambda), lambda);
  state.trace.push_back({lambda, pick.vector, avoid.size(), pick.attempts});
  return pick;
}

namespace {

LrcCode run_extension(const covers::Structure& s, const params::CodeParams& p, const gf::Field& field,
                      const RunOptions& opts, const char* method) {
  params::validate(p);
  if (s.n != p.n) throw Error(ErrorKind::PreconditionViolated, "structure length differs from n");
  const cores::CoreModel model(s, p.r, p.delta);
  if (!covers::coverage_check(s, p.k, p.r, p.delta))
    throw Error(ErrorKind::PreconditionViolated, "structure fails the coverage condition");

  const cores::Omega0 base = cores::omega0(model);
  const int l0 = static_cast<int>(base.indices.size());
  if (l0 < p.k) throw Error(ErrorKind::PreconditionViolated, "|Omega0| < k");

  ExtensionState st{Matrix(field, p.k, p.n), base.indices, &s, &model, p.k, opts.seed,
                    std::mt19937_64(opts.seed), {}};
  const Matrix c0 = mds_generator(l0, p.k, field);
  for (int j = 0; j < l0; ++j) st.matrix.set_column(base.indices[static_cast<std::size_t>(j)], c0.column(j + 1));

  std::vector<bool> assigned(static_cast<std::size_t>(p.n) + 1, false);
  for (int x : st.omega) assigned[static_cast<std::size_t>(x)] = true;
  for (int i = 1; i <= s.t(); ++i) {
    for (int lambda : s.group(i)) {
      if (assigned[static_cast<std::size_t>(lambda)]) continue;
      pick_extension_vector(st, lambda, i);
      assigned[static_cast<std::size_t>(lambda)] = true;
      if (opts.on_step) opts.on_step(st);
    }
  }

  LrcCode code{field, std::move(st.matrix), s, p, static_cast<int>(params::distance_bound(p)), method,
               opts.seed, std::move(st.trace)};
  return code;
}

}  // namespace

LrcCode run_algorithm1(const covers::Structure& s, const params::CodeParams& p, const gf::Field& field,
                       const RunOptions& opts) {
  if (s.kind != covers::Kind::Partition) throw Error(ErrorKind::StructureMismatch, "Algorithm 1 needs a partition");
  const auto v = covers::validate(s, p.r, p.delta);
  if (!v.ok) throw Error(ErrorKind::PreconditionViolated, "invalid partition: " + v.violations.front());
  return run_extension(s, p, field, opts, "algorithm1");
}

LrcCode run_algorithm2(const covers::Structure& s, const params::CodeParams& p, const gf::Field& field,
                       const RunOptions& opts) {
  if (s.kind != covers::Kind::Frame) throw Error(ErrorKind::StructureMismatch, "Algorithm 2 needs a frame");
  const auto v = covers::validate(s, p.r, p.delta);
  if (!v.ok) throw Error(ErrorKind::PreconditionViolated, "invalid frame: " + v.violations.front());
  return run_extension(s, p, field, opts, "algorithm2");
}

LrcCode construct(const params::CodeParams& p, const std::optional<gf::Field>& field, const RunOptions& opts) {
  const params::Classification c = params::classify(p);
  if (c.verdict == params::Verdict::NotExists) throw Error(ErrorKind::NotConstructible, c.tag);
  if (c.verdict == params::Verdict::Unknown) throw Error(ErrorKind::UnknownCase, c.tag);

  const gf::Field f = field ? *field
                            : gf::field_at_least(std::max(c.field_bound, BigInt(std::max(p.n, 2))),
                                                 gf::Preference::Prime);
  if (c.verdict == params::Verdict::ExistsMDS) {
    return LrcCode{f, mds_generator(p.n, p.k, f), covers::mds_windows(p.n, p.k, p.delta), p,
                   static_cast<int>(params::distance_bound(p)), "mds", opts.seed, {}};
  }
  LrcCode code = [&] {
    switch (*c.method) {
      case params::Method::Algorithm1Uniform:
        return run_algorithm1(covers::uniform_partition(p.n, p.r, p.delta), p, f, opts);
      case params::Method::Algorithm1Remainder:
        return run_algorithm1(covers::remainder_partition(p.n, p.r, p.delta, p.k), p, f, opts);
      case params::Method::Algorithm2Hub:
        return run_algorithm2(covers::hub_frame(p.n, p.r, p.delta), p, f, opts);
      case params::Method::Algorithm2Paired:
        return run_algorithm2(covers::paired_frame(p.n, p.r, p.delta), p, f, opts);
    }
    throw Error(ErrorKind::PreconditionViolated, "unhandled method");
  }();
  code.method = std::string(params::to_string(*c.method));
  return code;
}

std::optional<IndexSet> invariant_violation(const ExtensionState& state) {
  linalg::EchelonCache cache(state.matrix);
  std::optional<IndexSet> bad;
  cores::CoreQuery q{state.model, state.k, state.omega};
  cores::for_each_core(q, [&](const IndexSet& s) {
    if (cache.rank(s) < state.k) {
      bad = s;
      return false;
    }
    return true;
  });
  return bad;
}

std::optional<IndexSet> invariant_spot_check(const ExtensionState& state, int samples, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  IndexSet pool = state.omega;
  for (int s = 0; s < samples; ++s) {
    for (std::size_t i = pool.size(); i > 1; --i)
      std::swap(pool[i - 1], pool[static_cast<std::size_t>(uniform_below(rng, i))]);
    cores::CoreTracker tracker(*state.model);
    IndexSet core;
    for (int x : pool) {
      if (static_cast<int>(core.size()) == state.k) break;
      if (tracker.try_add(x)) core.push_back(x);
    }
    if (static_cast<int>(core.size()) < state.k) continue;
    std::sort(core.begin(), core.end());
    if (linalg::rank(state.matrix, core) < state.k) return core;
  }
  return std::nullopt;
}

}  // namespace lrc::construct
