#pragma once

// Dense exact linear algebra over a gf::Field.
//
// Column labels in IndexSet are 1-based, matching the coordinate labels used
// throughout the library; Matrix::at takes 0-based (row, col).

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "lrc/gf.hpp"

namespace lrc {

/// Strictly increasing 1-based labels.
using IndexSet = std::vector<int>;

}  // namespace lrc

namespace lrc::linalg {

using gf::Field;

inline constexpr std::uint64_t kDefaultSpanBudget = std::uint64_t{1} << 24;

class Matrix {
 public:
  Matrix(Field field, int rows, int cols);

  /// Rows of raw integers, canonicalized into `field`. All rows must have equal length.
  static Matrix from_rows(Field field, const std::vector<std::vector<std::uint64_t>>& rows);

  const Field& field() const noexcept { return field_; }
  int rows() const noexcept { return rows_; }
  int cols() const noexcept { return cols_; }

  std::uint32_t at(int row, int col) const { return data_[index(row, col)]; }
  void set(int row, int col, std::uint32_t value) { data_[index(row, col)] = value; }

  /// Column with 1-based label.
  std::vector<std::uint32_t> column(int label) const;
  void set_column(int label, std::span<const std::uint32_t> values);

  std::span<const std::uint32_t> row(int r) const {
    return {data_.data() + static_cast<std::size_t>(r) * static_cast<std::size_t>(cols_),
            static_cast<std::size_t>(cols_)};
  }

  Matrix transpose() const;
  Matrix select_columns(const IndexSet& labels) const;

  friend bool operator==(const Matrix& a, const Matrix& b);

 private:
  std::size_t index(int row, int col) const {
    return static_cast<std::size_t>(row) * static_cast<std::size_t>(cols_) + static_cast<std::size_t>(col);
  }

  Field field_;
  int rows_;
  int cols_;
  std::vector<std::uint32_t> data_;
};

struct FieldVector {
  Field field;
  std::vector<std::uint32_t> entries;
};

/// Row-echelon basis of a subspace of F^dim, grown one vector at a time.
/// Each stored row is zero before its pivot and has 1 at the pivot; insertion
/// appends a row and never rewrites earlier ones, so truncate() undoes
/// insertions in LIFO order.
class EchelonBasis {
 public:
  EchelonBasis(Field field, int dim);

  const Field& field() const noexcept { return field_; }
  int dim() const noexcept { return dim_; }
  int rank() const noexcept { return static_cast<int>(pivots_.size()); }

  /// Returns true iff v was independent of the current rows (rank grew).
  bool insert(std::span<const std::uint32_t> v);
  void truncate(int rank);

  /// v minus its projection along the stored rows; zero iff v is in the span.
  std::vector<std::uint32_t> reduce(std::span<const std::uint32_t> v) const;
  bool contains(std::span<const std::uint32_t> v) const;

  /// Basis of { x : <row, x> = 0 for every stored row }, one vector per free coordinate.
  std::vector<std::vector<std::uint32_t>> null_space() const;

  /// Fully reduced rows ordered by pivot.
  std::vector<std::vector<std::uint32_t>> reduced_rows() const;

  std::span<const std::uint32_t> row(int i) const {
    return {rows_.data() + static_cast<std::size_t>(i) * static_cast<std::size_t>(dim_),
            static_cast<std::size_t>(dim_)};
  }
  int pivot(int i) const { return pivots_[static_cast<std::size_t>(i)]; }

 private:
  Field field_;
  int dim_;
  std::vector<std::uint32_t> rows_;
  std::vector<int> pivots_;
  mutable std::vector<std::uint32_t> scratch_;
};

/// Memoizes the echelon basis of the last queried column prefix, so queries
/// arriving in lexicographic order reuse their shared prefix. Results are
/// identical to uncached queries. Not safe for concurrent use; give each
/// thread its own cache.
class EchelonCache {
 public:
  explicit EchelonCache(const Matrix& m);

  int rank(const IndexSet& cols);
  /// Basis after the most recent query.
  const EchelonBasis& basis() const noexcept { return basis_; }

 private:
  const Matrix* m_;
  EchelonBasis basis_;
  std::vector<int> labels_;
  std::vector<int> rank_after_;  // rank after pushing labels_[i]
  std::vector<std::vector<std::uint32_t>> columns_;
};

/// Rank of the selected columns (all columns when `cols` is empty/absent).
/// IndexOutOfRange on invalid labels.
int rank(const Matrix& m, const std::optional<IndexSet>& cols = std::nullopt,
         EchelonCache* cache = nullptr);

/// True iff appending v to the selected columns leaves the rank unchanged.
bool in_span(const FieldVector& v, const IndexSet& basis_cols, const Matrix& m);

/// Yields every vector of the span of a set of generators exactly once, in
/// lexicographic order of coefficients over the fully reduced basis.
class SpanEnumerator {
 public:
  SpanEnumerator(const Matrix& m, const IndexSet& basis_cols,
                 std::uint64_t budget = kDefaultSpanBudget);
  SpanEnumerator(const Field& field, int dim, const std::vector<std::vector<std::uint32_t>>& generators,
                 std::uint64_t budget = kDefaultSpanBudget);

  int span_rank() const noexcept { return static_cast<int>(basis_.size()); }
  std::uint64_t count() const noexcept { return total_; }

  bool next(std::vector<std::uint32_t>& out);

 private:
  void init(std::uint64_t budget);

  Field field_;
  int dim_;
  std::vector<std::vector<std::uint32_t>> basis_;
  std::vector<std::uint32_t> coeffs_;
  std::uint64_t total_ = 0;
  std::uint64_t emitted_ = 0;
};

/// Validates labels against a column count; throws IndexOutOfRange.
void check_labels(const IndexSet& labels, int cols);

}  // namespace lrc::linalg
