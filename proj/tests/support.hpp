#pragma once

#include <doctest.h>

#include <random>

#include "lrc/error.hpp"

#include "lrc/construct.hpp"
#include "lrc/covers.hpp"
#include "lrc/gf.hpp"
#include "lrc/linalg.hpp"

namespace lrc::testing {

inline ErrorKind kind_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("no error");
  return ErrorKind::FormatError;
}

inline gf::Field gf4() { return gf::Field::make(2, 2, 0x7); }

// The GF(4) generator of the (6,3) example; alpha is encoded as 2, 1+alpha as 3.
inline linalg::Matrix example_gf4_matrix() {
  return linalg::Matrix::from_rows(gf4(), {{1, 0, 1, 0, 1, 1}, {0, 1, 1, 0, 2, 2}, {0, 0, 0, 1, 1, 2}});
}

inline construct::LrcCode example_gf4_code(int delta = 2) {
  return {gf4(), example_gf4_matrix(), covers::uniform_partition(6, 2, 2), {6, 3, 2, delta}, 3, "example", 0, {}};
}

// The n=37, r=delta=3 frame of the frame example.
inline covers::Structure fig3_frame() {
  std::vector<IndexSet> groups = {{1, 2, 3, 4, 5},      {1, 6, 7, 8, 9},      {1, 10, 11, 12, 13},
                                  {14, 15, 16, 17, 18}, {14, 19, 20, 21, 22}, {23, 24, 25, 26, 27},
                                  {28, 29, 30, 31, 32}, {33, 34, 35, 36, 37}};
  return covers::make_frame(37, groups, {{1, 2, 3}, {4, 5}}, {1, 14});
}

// The n=13 family of the non-existence example.
inline std::vector<IndexSet> n13_family() {
  return {{1, 2, 3}, {4, 5, 6}, {7, 8, 9}, {10, 11, 12}, {1, 5, 13}, {5, 8, 13}};
}

inline linalg::Matrix random_matrix(const gf::Field& f, int rows, int cols, std::mt19937_64& rng) {
  linalg::Matrix m(f, rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) m.set(i, j, static_cast<std::uint32_t>(construct::uniform_below(rng, f.order())));
  return m;
}

inline IndexSet random_subset(int n, double keep, std::mt19937_64& rng) {
  IndexSet out;
  std::bernoulli_distribution coin(keep);
  for (int i = 1; i <= n; ++i)
    if (coin(rng)) out.push_back(i);
  return out;
}

}  // namespace lrc::testing
