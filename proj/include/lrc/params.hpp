#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "lrc/bigint.hpp"

namespace lrc::params {

struct CodeParams {
  int n = 0;
  int k = 0;
  int r = 0;
  int delta = 0;

  friend bool operator==(const CodeParams&, const CodeParams&) = default;
};

/// Throws InvalidParams unless 1 <= r <= k <= n and delta >= 2.
void validate(const CodeParams& p);

/// n = w(r+delta-1) + m, k = u r + v.
struct Decomposition {
  int w = 0;
  int m = 0;
  int u = 0;
  int v = 0;

  friend bool operator==(const Decomposition&, const Decomposition&) = default;
};

Decomposition decompose(const CodeParams& p);

/// n - k + 1 - (ceil(k/r) - 1)(delta - 1), without the positivity check.
long distance_bound_raw(const CodeParams& p);
/// Same value; BoundNonPositive when it is below 1.
long distance_bound(const CodeParams& p);

/// n r >= k (r + delta - 1).
bool necessary_check(const CodeParams& p);

/// C(n, k-1).
BigInt field_bound(const CodeParams& p);

enum class Verdict { ExistsMDS, Exists, NotExists, Unknown };

enum class Method { Algorithm1Uniform, Algorithm1Remainder, Algorithm2Hub, Algorithm2Paired };

struct Classification {
  Verdict verdict = Verdict::Unknown;
  std::optional<Method> method;  // set iff verdict == Exists
  std::string tag;               // theorem tag or case tag
  long bound_d = 0;
  BigInt field_bound;
};

Classification classify(const CodeParams& p);

std::string_view to_string(Verdict v) noexcept;
std::string_view to_string(Method m) noexcept;

/// One-line human summary, e.g. "EXISTS via Algorithm1-uniform, d*=4, q>=495".
std::string describe(const Classification& c);

/// Legend tag used by the table grid: E_M, E16, E26, E27, N10, N11, N_LB, ~, MDS.
std::string table_tag(const CodeParams& p, const Classification& c);

}  // namespace lrc::params
