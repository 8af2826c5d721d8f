#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "lrc/cores.hpp"
#include "lrc/covers.hpp"
#include "lrc/gf.hpp"
#include "lrc/linalg.hpp"
#include "lrc/params.hpp"

namespace lrc::construct {

using linalg::Matrix;

inline constexpr int kRandomAttempts = 64;

struct TraceEntry {
  int lambda = 0;
  std::vector<std::uint32_t> column;
  std::uint64_t lambda_size = 0;  // |Lambda| at this step
  int attempts = 0;               // random draws used; kRandomAttempts+1 means the exhaustive scan ran

  friend bool operator==(const TraceEntry&, const TraceEntry&) = default;
};

struct LrcCode {
  gf::Field field;
  Matrix generator;
  covers::Structure structure;
  params::CodeParams params;
  int claimed_d = 0;
  std::string method;
  std::uint64_t seed = 0;
  std::vector<TraceEntry> trace;
};

/// k x L evaluation matrix, column j = (1, x, ..., x^{k-1}) with x = j-1.
Matrix mds_generator(int length, int k, const gf::Field& field);

/// Hyperplanes h_S with h_S . G_l = 0 for l in S, one per (k-1)-set S of
/// independent columns. A vector avoids span(G_S) iff h_S . v != 0. Normals
/// are stored coordinate-major so admits() is k axpy passes over |Lambda|.
class Hyperplanes {
 public:
  explicit Hyperplanes(const Matrix& g);

  /// RankDeficient if the columns of s0 are dependent or |s0| != k-1.
  void add(const IndexSet& s0);
  std::size_t size() const noexcept { return count_; }

  /// True iff v lies outside every stored span.
  bool admits(std::span<const std::uint32_t> v) const;

 private:
  const Matrix* g_;
  int k_;
  linalg::EchelonCache cache_;
  std::vector<std::vector<std::uint32_t>> coords_;  // coords_[c][j] = c-th entry of normal j
  std::size_t count_ = 0;
  mutable std::vector<std::uint32_t> acc_;
};

struct PickResult {
  std::vector<std::uint32_t> vector;
  int attempts = 0;
};

/// A vector of span{G_l : l in span_cols} outside every hyperplane: up to
/// kRandomAttempts seeded draws, then an exhaustive scan of the span.
/// NoValidVector when none exists.
PickResult find_avoiding_vector(const Matrix& g, const IndexSet& span_cols, const Hyperplanes& avoid,
                                std::mt19937_64& rng, std::uint64_t span_budget = linalg::kDefaultSpanBudget);

struct ExtensionState {
  Matrix matrix;
  IndexSet omega;
  const covers::Structure* structure = nullptr;
  const cores::CoreModel* model = nullptr;
  int k = 0;
  std::uint64_t seed = 0;
  std::mt19937_64 rng;
  std::vector<TraceEntry> trace;
};

/// Column for coordinate lambda of group `group` (1-based).
PickResult pick_extension_vector(ExtensionState& state, int lambda, int group);

struct RunOptions {
  std::uint64_t seed = 0;
  /// Called after every extension step (tests use it to recheck the loop invariant).
  /// The state's structure and model pointers are valid only during the call.
  std::function<void(const ExtensionState&)> on_step;
};

LrcCode run_algorithm1(const covers::Structure& s, const params::CodeParams& p, const gf::Field& field,
                       const RunOptions& opts = {});
LrcCode run_algorithm2(const covers::Structure& s, const params::CodeParams& p, const gf::Field& field,
                       const RunOptions& opts = {});

/// Classify, build the matching structure and run the matching algorithm.
/// Default field: smallest prime >= max(C(n,k-1), n).
LrcCode construct(const params::CodeParams& p, const std::optional<gf::Field>& field = std::nullopt,
                  const RunOptions& opts = {});

/// First k-core of Omega (lexicographic) whose columns are dependent, or absent.
std::optional<IndexSet> invariant_violation(const ExtensionState& state);

/// Checks `samples` random k-cores drawn inside Omega; returns the first dependent one.
std::optional<IndexSet> invariant_spot_check(const ExtensionState& state, int samples, std::uint64_t seed);

/// Uniform draw from [0, bound) by rejection, identical across standard libraries.
std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound);

}  // namespace lrc::construct
