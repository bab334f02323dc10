#pragma once

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

#include "otb/field.hpp"

namespace otb {

/// Sparse vector: (column, value) pairs sorted by column, no zero values.
template <class Field>
using SparseRow = std::vector<std::pair<std::uint32_t, typename Field::Elem>>;

/// Incrementally maintained row echelon form over a field.
///
/// Rows are inserted one at a time and reduced against the current pivots;
/// a row that survives becomes a new pivot row with leading entry 1. The
/// leading column of a row is its smallest column index, so callers order
/// columns so that column 0 is the "largest" coordinate (for polynomial
/// pieces: the largest monomial in the term order). Non-pivot columns then
/// index the standard monomials of the quotient.
template <class Field>
class SparseEchelon {
 public:
  using Elem = typename Field::Elem;
  using Row = SparseRow<Field>;

  SparseEchelon(Field field, std::size_t cols)
      : field_(std::move(field)), cols_(cols), pivot_of_col_(cols, -1) {}

  std::size_t cols() const { return cols_; }
  std::size_t rank() const { return rows_.size(); }
  const Field& field() const { return field_; }

  bool is_pivot(std::size_t col) const { return pivot_of_col_[col] >= 0; }
  const Row& pivot_row(std::size_t col) const {
    return rows_[static_cast<std::size_t>(pivot_of_col_[col])];
  }

  /// Pivot columns in increasing order.
  std::vector<std::size_t> pivot_columns() const {
    std::vector<std::size_t> out;
    for (std::size_t c = 0; c < cols_; ++c)
      if (is_pivot(c)) out.push_back(c);
    return out;
  }
  std::vector<std::size_t> free_columns() const {
    std::vector<std::size_t> out;
    for (std::size_t c = 0; c < cols_; ++c)
      if (!is_pivot(c)) out.push_back(c);
    return out;
  }

  /// Returns true when the row was independent of the current span.
  bool insert(const Row& row) {
    std::vector<Elem> acc(cols_, field_.zero());
    std::size_t first = scatter(row, acc);
    if (first == cols_) return false;
    reduce_dense(acc, first);
    Row reduced = gather(acc, first);
    if (reduced.empty()) return false;
    Elem scale = field_.inv(reduced.front().second);
    for (auto& entry : reduced) entry.second = field_.mul(entry.second, scale);
    pivot_of_col_[reduced.front().first] = static_cast<std::int32_t>(rows_.size());
    rows_.push_back(std::move(reduced));
    return true;
  }

  /// Remainder of `row` modulo the span: supported on non-pivot columns.
  Row reduce(const Row& row) const {
    std::vector<Elem> acc(cols_, field_.zero());
    std::size_t first = scatter(row, acc);
    if (first == cols_) return {};
    reduce_dense(acc, first);
    return gather(acc, first);
  }

  /// Back-substitution to reduced row echelon form.
  void reduce_fully() {
    auto pivots = pivot_columns();
    for (auto it = pivots.rbegin(); it != pivots.rend(); ++it) {
      auto idx = static_cast<std::size_t>(pivot_of_col_[*it]);
      Row lead{rows_[idx].front()};
      Row tail(rows_[idx].begin() + 1, rows_[idx].end());
      Row reduced_tail = reduce(tail);
      lead.insert(lead.end(), reduced_tail.begin(), reduced_tail.end());
      rows_[idx] = std::move(lead);
    }
  }

  const std::vector<Row>& rows() const { return rows_; }

 private:
  std::size_t scatter(const Row& row, std::vector<Elem>& acc) const {
    std::size_t first = cols_;
    for (const auto& [c, v] : row) {
      if (field_.is_zero(v)) continue;
      acc[c] = field_.add(acc[c], v);
      if (c < first) first = c;
    }
    return first;
  }

  void reduce_dense(std::vector<Elem>& acc, std::size_t first) const {
    for (std::size_t c = first; c < cols_; ++c) {
      if (field_.is_zero(acc[c]) || pivot_of_col_[c] < 0) continue;
      const Row& p = rows_[static_cast<std::size_t>(pivot_of_col_[c])];
      Elem factor = acc[c];
      for (const auto& [pc, pv] : p) acc[pc] = field_.sub(acc[pc], field_.mul(factor, pv));
    }
  }

  Row gather(std::vector<Elem>& acc, std::size_t first) const {
    Row out;
    for (std::size_t c = first; c < cols_; ++c)
      if (!field_.is_zero(acc[c])) out.emplace_back(static_cast<std::uint32_t>(c), acc[c]);
    return out;
  }

  Field field_;
  std::size_t cols_;
  std::vector<std::int32_t> pivot_of_col_;
  std::vector<Row> rows_;
};

/// Rank of a family of sparse vectors.
template <class Field>
std::size_t sparse_rank(const Field& field, std::size_t cols,
                        const std::vector<SparseRow<Field>>& rows) {
  SparseEchelon<Field> ech(field, cols);
  for (const auto& r : rows) ech.insert(r);
  return ech.rank();
}

}  // namespace otb
