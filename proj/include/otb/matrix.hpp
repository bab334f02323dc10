#pragma once

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "otb/rational.hpp"

namespace otb {

/// Dense row-major matrix of rationals.
class RatMatrix {
 public:
  RatMatrix() = default;
  RatMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  RatMatrix(std::initializer_list<std::initializer_list<Rational>> rows);

  static RatMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<const Rational> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }
  std::vector<Rational> column(std::size_t c) const;

  RatMatrix transpose() const;
  RatMatrix operator*(const RatMatrix& other) const;

  bool operator==(const RatMatrix& other) const = default;

  std::string to_string() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

/// Exact rank by fraction-free (Bareiss) elimination over the integers.
std::size_t rank(const RatMatrix& m);

/// Reduced row echelon form; pivot columns are appended to `pivots` if given.
RatMatrix rref(const RatMatrix& m, std::vector<std::size_t>* pivots = nullptr);

/// Columns form a basis of the right kernel {v : m v = 0}.
RatMatrix kernel_basis(const RatMatrix& m);

/// Some solution of m x = b, or nullopt when inconsistent.
std::optional<std::vector<Rational>> solve(const RatMatrix& m, std::span<const Rational> b);

/// Scales a nonzero vector to a primitive integer vector whose first nonzero
/// entry is positive.
std::vector<Rational> primitive_normalized(std::span<const Rational> v);

}  // namespace otb
