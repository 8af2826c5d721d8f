#include "lrc/linalg.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "lrc/error.hpp"

namespace lrc::linalg {

Matrix::Matrix(Field field, int rows, int cols)
    : field_(std::move(field)),
      rows_(rows),
      cols_(cols),
      data_(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols), 0) {
  if (rows < 0 || cols < 0) throw Error(ErrorKind::DimensionMismatch, "negative matrix dimension");
}

Matrix Matrix::from_rows(Field field, const std::vector<std::vector<std::uint64_t>>& rows) {
  const int r = static_cast<int>(rows.size());
  const int c = r == 0 ? 0 : static_cast<int>(rows.front().size());
  Matrix m(std::move(field), r, c);
  for (int i = 0; i < r; ++i) {
    const auto& row = rows[static_cast<std::size_t>(i)];
    if (static_cast<int>(row.size()) != c) throw Error(ErrorKind::DimensionMismatch, "ragged rows");
    for (int j = 0; j < c; ++j) m.set(i, j, m.field_.canonical(row[static_cast<std::size_t>(j)]));
  }
  return m;
}

std::vector<std::uint32_t> Matrix::column(int label) const {
  if (label < 1 || label > cols_)
    throw Error(ErrorKind::IndexOutOfRange, "column " + std::to_string(label));
  std::vector<std::uint32_t> out(static_cast<std::size_t>(rows_));
  for (int i = 0; i < rows_; ++i) out[static_cast<std::size_t>(i)] = at(i, label - 1);
  return out;
}

void Matrix::set_column(int label, std::span<const std::uint32_t> values) {
  if (label < 1 || label > cols_)
    throw Error(ErrorKind::IndexOutOfRange, "column " + std::to_string(label));
  if (static_cast<int>(values.size()) != rows_)
    throw Error(ErrorKind::DimensionMismatch, "column length");
  for (int i = 0; i < rows_; ++i) set(i, label - 1, values[static_cast<std::size_t>(i)]);
}

Matrix Matrix::transpose() const {
  Matrix t(field_, cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) t.set(j, i, at(i, j));
  return t;
}

Matrix Matrix::select_columns(const IndexSet& labels) const {
  check_labels(labels, cols_);
  Matrix s(field_, rows_, static_cast<int>(labels.size()));
  for (int i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < labels.size(); ++j) s.set(i, static_cast<int>(j), at(i, labels[j] - 1));
  return s;
}

bool operator==(const Matrix& a, const Matrix& b) {
  return a.field_ == b.field_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

void check_labels(const IndexSet& labels, int cols) {
  int prev = 0;
  for (int label : labels) {
    if (label < 1 || label > cols)
      throw Error(ErrorKind::IndexOutOfRange, "column label " + std::to_string(label) + " outside [1, " +
                                                  std::to_string(cols) + "]");
    if (label <= prev) throw Error(ErrorKind::IndexOutOfRange, "column labels must be strictly increasing");
    prev = label;
  }
}

EchelonBasis::EchelonBasis(Field field, int dim)
    : field_(std::move(field)), dim_(dim), scratch_(static_cast<std::size_t>(dim)) {}

std::vector<std::uint32_t> EchelonBasis::reduce(std::span<const std::uint32_t> v) const {
  std::vector<std::uint32_t> out(v.begin(), v.end());
  for (int i = 0; i < rank(); ++i) {
    const std::uint32_t c = out[static_cast<std::size_t>(pivots_[static_cast<std::size_t>(i)])];
    if (c != 0) field_.axpy(out, row(i), field_.neg(c));
  }
  return out;
}

bool EchelonBasis::contains(std::span<const std::uint32_t> v) const {
  const auto r = reduce(v);
  return std::all_of(r.begin(), r.end(), [](std::uint32_t x) { return x == 0; });
}

bool EchelonBasis::insert(std::span<const std::uint32_t> v) {
  if (rank() == dim_) return false;
  std::copy(v.begin(), v.end(), scratch_.begin());
  for (int i = 0; i < rank(); ++i) {
    const std::uint32_t c = scratch_[static_cast<std::size_t>(pivots_[static_cast<std::size_t>(i)])];
    if (c != 0) field_.axpy(scratch_, row(i), field_.neg(c));
  }
  const auto it = std::find_if(scratch_.begin(), scratch_.end(), [](std::uint32_t x) { return x != 0; });
  if (it == scratch_.end()) return false;
  const int pivot = static_cast<int>(it - scratch_.begin());
  field_.scale(scratch_, field_.inv(*it));
  rows_.insert(rows_.end(), scratch_.begin(), scratch_.end());
  pivots_.push_back(pivot);
  return true;
}

void EchelonBasis::truncate(int r) {
  if (r >= rank()) return;
  pivots_.resize(static_cast<std::size_t>(r));
  rows_.resize(static_cast<std::size_t>(r) * static_cast<std::size_t>(dim_));
}

std::vector<std::vector<std::uint32_t>> EchelonBasis::null_space() const {
  std::vector<bool> is_pivot(static_cast<std::size_t>(dim_), false);
  for (int p : pivots_) is_pivot[static_cast<std::size_t>(p)] = true;
  std::vector<int> order(static_cast<std::size_t>(rank()));
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) { return pivot(a) > pivot(b); });

  std::vector<std::vector<std::uint32_t>> out;
  for (int f = 0; f < dim_; ++f) {
    if (is_pivot[static_cast<std::size_t>(f)]) continue;
    std::vector<std::uint32_t> x(static_cast<std::size_t>(dim_), 0);
    x[static_cast<std::size_t>(f)] = 1;
    for (int i : order) {
      const auto r = row(i);
      std::uint32_t s = 0;
      for (int j = pivot(i) + 1; j < dim_; ++j)
        s = field_.add(s, field_.mul(r[static_cast<std::size_t>(j)], x[static_cast<std::size_t>(j)]));
      x[static_cast<std::size_t>(pivot(i))] = field_.neg(s);
    }
    out.push_back(std::move(x));
  }
  return out;
}

std::vector<std::vector<std::uint32_t>> EchelonBasis::reduced_rows() const {
  std::vector<int> order(static_cast<std::size_t>(rank()));
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) { return pivot(a) < pivot(b); });
  std::vector<std::vector<std::uint32_t>> out;
  std::vector<int> piv;
  for (int i : order) {
    const auto r = row(i);
    out.emplace_back(r.begin(), r.end());
    piv.push_back(pivot(i));
  }
  for (std::size_t i = out.size(); i-- > 0;) {
    for (std::size_t h = 0; h < i; ++h) {
      const std::uint32_t c = out[h][static_cast<std::size_t>(piv[i])];
      if (c != 0) field_.axpy(out[h], out[i], field_.neg(c));
    }
  }
  return out;
}

EchelonCache::EchelonCache(const Matrix& m) : m_(&m), basis_(m.field(), m.rows()) {
  columns_.reserve(static_cast<std::size_t>(m.cols()));
  for (int j = 1; j <= m.cols(); ++j) columns_.push_back(m.column(j));
}

int EchelonCache::rank(const IndexSet& cols) {
  check_labels(cols, m_->cols());
  std::size_t common = 0;
  while (common < labels_.size() && common < cols.size() && labels_[common] == cols[common]) ++common;
  labels_.resize(common);
  rank_after_.resize(common);
  basis_.truncate(common == 0 ? 0 : rank_after_.back());
  for (std::size_t i = common; i < cols.size(); ++i) {
    basis_.insert(columns_[static_cast<std::size_t>(cols[i] - 1)]);
    labels_.push_back(cols[i]);
    rank_after_.push_back(basis_.rank());
  }
  return basis_.rank();
}

int rank(const Matrix& m, const std::optional<IndexSet>& cols, EchelonCache* cache) {
  IndexSet all;
  if (!cols) {
    all.resize(static_cast<std::size_t>(m.cols()));
    std::iota(all.begin(), all.end(), 1);
  }
  const IndexSet& sel = cols ? *cols : all;
  if (cache != nullptr) return cache->rank(sel);
  check_labels(sel, m.cols());
  EchelonBasis basis(m.field(), m.rows());
  std::vector<std::uint32_t> col(static_cast<std::size_t>(m.rows()));
  for (int label : sel) {
    if (basis.rank() == m.rows()) break;
    for (int i = 0; i < m.rows(); ++i) col[static_cast<std::size_t>(i)] = m.at(i, label - 1);
    basis.insert(col);
  }
  return basis.rank();
}

bool in_span(const FieldVector& v, const IndexSet& basis_cols, const Matrix& m) {
  if (!(v.field == m.field())) throw Error(ErrorKind::FieldMismatch, "vector and matrix fields differ");
  if (static_cast<int>(v.entries.size()) != m.rows())
    throw Error(ErrorKind::DimensionMismatch, "vector length must equal the row count");
  check_labels(basis_cols, m.cols());
  EchelonBasis basis(m.field(), m.rows());
  for (int label : basis_cols) basis.insert(m.column(label));
  return basis.contains(v.entries);
}

SpanEnumerator::SpanEnumerator(const Matrix& m, const IndexSet& basis_cols, std::uint64_t budget)
    : field_(m.field()), dim_(m.rows()) {
  check_labels(basis_cols, m.cols());
  EchelonBasis b(m.field(), m.rows());
  for (int label : basis_cols) b.insert(m.column(label));
  basis_ = b.reduced_rows();
  init(budget);
}

SpanEnumerator::SpanEnumerator(const Field& field, int dim,
                               const std::vector<std::vector<std::uint32_t>>& generators,
                               std::uint64_t budget)
    : field_(field), dim_(dim) {
  EchelonBasis b(field, dim);
  for (const auto& g : generators) {
    if (static_cast<int>(g.size()) != dim) throw Error(ErrorKind::DimensionMismatch, "generator length");
    b.insert(g);
  }
  basis_ = b.reduced_rows();
  init(budget);
}

void SpanEnumerator::init(std::uint64_t budget) {
  const std::uint64_t q = field_.order();
  unsigned __int128 total = 1;
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    total *= q;
    if (total > budget)
      throw Error(ErrorKind::BudgetExceeded, "span has q^" + std::to_string(basis_.size()) +
                                                 " vectors, above the budget of " + std::to_string(budget));
  }
  total_ = static_cast<std::uint64_t>(total);
  coeffs_.assign(basis_.size(), 0);
}

bool SpanEnumerator::next(std::vector<std::uint32_t>& out) {
  if (emitted_ == total_) return false;
  out.assign(static_cast<std::size_t>(dim_), 0);
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    if (coeffs_[i] != 0) field_.axpy(out, basis_[i], coeffs_[i]);
  }
  ++emitted_;
  // Odometer with the first coefficient most significant.
  const auto q = static_cast<std::uint32_t>(field_.order());
  for (std::size_t i = coeffs_.size(); i-- > 0;) {
    if (++coeffs_[i] < q) break;
    coeffs_[i] = 0;
  }
  return true;
}

}  // namespace lrc::linalg
