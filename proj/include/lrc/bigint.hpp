#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace lrc {

using BigInt = boost::multiprecision::cpp_int;

/// Exact binomial coefficient C(n, k); zero when k < 0 or k > n.
BigInt binomial(long n, long k);

}  // namespace lrc
