#include "lrc/params.hpp"

#include <algorithm>
#include <sstream>

#include "lrc/error.hpp"

namespace lrc::params {

void validate(const CodeParams& p) {
  if (p.r < 1 || p.r > p.k || p.k > p.n || p.delta < 2) {
    std::ostringstream os;
    os << "need 1 <= r <= k <= n and delta >= 2, got (n=" << p.n << ", k=" << p.k << ", r=" << p.r
       << ", delta=" << p.delta << ")";
    throw Error(ErrorKind::InvalidParams, os.str());
  }
}

Decomposition decompose(const CodeParams& p) {
  validate(p);
  const int s = p.r + p.delta - 1;
  return {p.n / s, p.n % s, p.k / p.r, p.k % p.r};
}

long distance_bound_raw(const CodeParams& p) {
  validate(p);
  const long groups = (p.k + p.r - 1) / p.r;
  return static_cast<long>(p.n) - p.k + 1 - (groups - 1) * (p.delta - 1);
}

long distance_bound(const CodeParams& p) {
  const long d = distance_bound_raw(p);
  if (d < 1) throw Error(ErrorKind::BoundNonPositive, "distance bound " + std::to_string(d));
  return d;
}

bool necessary_check(const CodeParams& p) {
  validate(p);
  return static_cast<long long>(p.n) * p.r >= static_cast<long long>(p.k) * (p.r + p.delta - 1);
}

BigInt field_bound(const CodeParams& p) {
  validate(p);
  return binomial(p.n, p.k - 1);
}

namespace {

Classification make(const CodeParams& p, Verdict verdict, std::string tag,
                    std::optional<Method> method = std::nullopt) {
  Classification c;
  c.verdict = verdict;
  c.method = method;
  c.tag = std::move(tag);
  c.bound_d = distance_bound_raw(p);
  c.field_bound = field_bound(p);
  return c;
}

}  // namespace

Classification classify(const CodeParams& p) {
  validate(p);
  if (!necessary_check(p)) return make(p, Verdict::NotExists, "lemma-low-bound");
  if (p.r == p.k) return make(p, Verdict::ExistsMDS, "mds");

  const auto [w, m, u, v] = decompose(p);
  const int s = p.r + p.delta - 1;

  if (m == 0) return make(p, Verdict::Exists, "thm-opt-ext-1", Method::Algorithm1Uniform);
  if (v == 0) return make(p, Verdict::NotExists, "thm-non-exst");
  if (m >= v + p.delta - 1) return make(p, Verdict::Exists, "thm-opt-ext-2", Method::Algorithm1Remainder);
  if (u >= 2 * (p.r - v) + 1) return make(p, Verdict::NotExists, "thm-non-exst-1");

  // With m > 0 and v > 0, n r >= k (r + delta - 1) forces ceil(n/s) >= ceil(k/r), i.e. w >= u.
  if (w < u) {
    throw Error(ErrorKind::PreconditionViolated,
                "internal: w < u after the necessary condition passed for n=" + std::to_string(p.n) +
                    " k=" + std::to_string(p.k));
  }

  const int ell = s - m;
  if (w >= ell && std::min(p.r - v, w) >= u)
    return make(p, Verdict::Exists, "thm-opt-ext-3", Method::Algorithm2Hub);
  if (w + 1 >= 2 * ell && std::min(2 * (p.r - v), w) >= u)
    return make(p, Verdict::Exists, "thm-opt-ext-4", Method::Algorithm2Paired);
  return make(p, Verdict::Unknown, w < ell ? "condition-8" : "condition-9");
}

std::string_view to_string(Verdict v) noexcept {
  switch (v) {
    case Verdict::ExistsMDS: return "ExistsMDS";
    case Verdict::Exists: return "Exists";
    case Verdict::NotExists: return "NotExists";
    case Verdict::Unknown: return "Unknown";
  }
  return "?";
}

std::string_view to_string(Method m) noexcept {
  switch (m) {
    case Method::Algorithm1Uniform: return "Algorithm1-uniform";
    case Method::Algorithm1Remainder: return "Algorithm1-remainder";
    case Method::Algorithm2Hub: return "Algorithm2-hub";
    case Method::Algorithm2Paired: return "Algorithm2-paired";
  }
  return "?";
}

std::string describe(const Classification& c) {
  std::ostringstream os;
  switch (c.verdict) {
    case Verdict::ExistsMDS:
      os << "EXISTS (MDS), d*=" << c.bound_d;
      break;
    case Verdict::Exists:
      os << "EXISTS via " << to_string(*c.method) << " (" << c.tag << "), d*=" << c.bound_d
         << ", q>=" << c.field_bound;
      break;
    case Verdict::NotExists:
      os << "NOT-EXISTS (" << c.tag << ")";
      break;
    case Verdict::Unknown:
      os << "UNKNOWN (" << c.tag << ")";
      break;
  }
  if (c.verdict == Verdict::NotExists || c.verdict == Verdict::Unknown)
    os << ", bound_d=" << c.bound_d << ", field_bound=" << c.field_bound;
  return os.str();
}

std::string table_tag(const CodeParams& p, const Classification& c) {
  switch (c.verdict) {
    case Verdict::ExistsMDS:
      return p.n % (p.r + p.delta - 1) == 0 ? "E_M" : "MDS";
    case Verdict::Exists:
      switch (*c.method) {
        case Method::Algorithm1Uniform: return "E_M";
        case Method::Algorithm1Remainder: return "E16";
        case Method::Algorithm2Hub: return "E26";
        case Method::Algorithm2Paired: return "E27";
      }
      break;
    case Verdict::NotExists:
      if (c.tag == "thm-non-exst") return "N10";
      if (c.tag == "thm-non-exst-1") return "N11";
      return "N_LB";
    case Verdict::Unknown:
      return "~";
  }
  return "?";
}

}  // namespace lrc::params
