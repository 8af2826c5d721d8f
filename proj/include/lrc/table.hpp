#pragma once

#include <optional>
#include <string>
#include <vector>

namespace lrc::table {

struct Range {
  int lo = 0;
  int hi = 0;
};

/// "a..b" or a single integer; FormatError otherwise.
Range parse_range(const std::string& text);

/// Published tag for (n=60, delta=5, r in 2..11, k in 11..20), if (r, k) is in that grid.
std::optional<std::string> reference_tag(int r, int k);

struct Cell {
  int r = 0;
  int k = 0;
  std::string tag;
  std::optional<std::string> reference;
};

std::vector<Cell> classify_grid(int n, int delta, Range r, Range k);

/// Grid text with one row per r, one column per k, followed by footnotes for
/// every cell where the classifier differs from the published table.
std::string render(int n, int delta, Range r, Range k);

}  // namespace lrc::table
