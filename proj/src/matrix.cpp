#include "otb/matrix.hpp"

#include <algorithm>
#include <sstream>

#include "otb/error.hpp"

namespace otb {

RatMatrix::RatMatrix(std::initializer_list<std::initializer_list<Rational>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw InputError("ragged matrix literal");
    data_.insert(data_.end(), r.begin(), r.end());
  }
}

RatMatrix RatMatrix::identity(std::size_t n) {
  RatMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

std::vector<Rational> RatMatrix::column(std::size_t c) const {
  std::vector<Rational> out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out[r] = (*this)(r, c);
  return out;
}

RatMatrix RatMatrix::transpose() const {
  RatMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

RatMatrix RatMatrix::operator*(const RatMatrix& o) const {
  if (cols_ != o.rows_) throw InputError("matrix dimension mismatch");
  RatMatrix p(rows_, o.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Rational& a = (*this)(i, k);
      if (sgn(a) == 0) continue;
      for (std::size_t j = 0; j < o.cols_; ++j) p(i, j) += a * o(k, j);
    }
  return p;
}

std::string RatMatrix::to_string() const {
  std::ostringstream os;
  os << "[";
  for (std::size_t r = 0; r < rows_; ++r) {
    os << (r ? ", [" : "[");
    for (std::size_t c = 0; c < cols_; ++c) os << (c ? ", " : "") << otb::to_string((*this)(r, c));
    os << "]";
  }
  os << "]";
  return os.str();
}

std::size_t rank(const RatMatrix& m) {
  const std::size_t rows = m.rows(), cols = m.cols();
  // Clear denominators row by row; the rank is unchanged.
  std::vector<std::vector<Integer>> a(rows, std::vector<Integer>(cols));
  for (std::size_t r = 0; r < rows; ++r) {
    Integer l = 1;
    for (std::size_t c = 0; c < cols; ++c) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(r, c).get_den_mpz_t());
    for (std::size_t c = 0; c < cols; ++c) a[r][c] = m(r, c).get_num() * (l / m(r, c).get_den());
  }
  Integer prev = 1;
  std::size_t rk = 0;
  for (std::size_t c = 0; c < cols && rk < rows; ++c) {
    std::size_t piv = rk;
    while (piv < rows && a[piv][c] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(a[piv], a[rk]);
    const Integer& p = a[rk][c];
    for (std::size_t r = rk + 1; r < rows; ++r) {
      for (std::size_t j = c + 1; j < cols; ++j) {
        Integer v = p * a[r][j] - a[r][c] * a[rk][j];
        mpz_divexact(a[r][j].get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
      }
      a[r][c] = 0;
    }
    prev = p;
    ++rk;
  }
  return rk;
}

RatMatrix rref(const RatMatrix& m, std::vector<std::size_t>* pivots) {
  RatMatrix a = m;
  const std::size_t rows = a.rows(), cols = a.cols();
  std::size_t rk = 0;
  for (std::size_t c = 0; c < cols && rk < rows; ++c) {
    std::size_t piv = rk;
    while (piv < rows && sgn(a(piv, c)) == 0) ++piv;
    if (piv == rows) continue;
    if (piv != rk)
      for (std::size_t j = 0; j < cols; ++j) std::swap(a(piv, j), a(rk, j));
    Rational inv = 1 / a(rk, c);
    for (std::size_t j = c; j < cols; ++j) a(rk, j) *= inv;
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == rk || sgn(a(r, c)) == 0) continue;
      Rational f = a(r, c);
      for (std::size_t j = c; j < cols; ++j) a(r, j) -= f * a(rk, j);
    }
    if (pivots) pivots->push_back(c);
    ++rk;
  }
  return a;
}

RatMatrix kernel_basis(const RatMatrix& m) {
  std::vector<std::size_t> pivots;
  RatMatrix r = rref(m, &pivots);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<std::size_t> free;
  for (std::size_t c = 0; c < m.cols(); ++c)
    if (!is_pivot[c]) free.push_back(c);
  RatMatrix k(m.cols(), free.size());
  for (std::size_t f = 0; f < free.size(); ++f) {
    k(free[f], f) = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) k(pivots[i], f) = -r(i, free[f]);
  }
  return k;
}

std::optional<std::vector<Rational>> solve(const RatMatrix& m, std::span<const Rational> b) {
  if (b.size() != m.rows()) throw InputError("right-hand side has wrong length");
  RatMatrix aug(m.rows(), m.cols() + 1);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) aug(r, c) = m(r, c);
    aug(r, m.cols()) = b[r];
  }
  std::vector<std::size_t> pivots;
  RatMatrix red = rref(aug, &pivots);
  if (!pivots.empty() && pivots.back() == m.cols()) return std::nullopt;
  std::vector<Rational> x(m.cols());
  for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = red(i, m.cols());
  return x;
}

std::vector<Rational> primitive_normalized(std::span<const Rational> v) {
  Integer l = 1, g = 0;
  for (const auto& q : v) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), q.get_den_mpz_t());
  std::vector<Rational> out(v.begin(), v.end());
  for (auto& q : out) {
    q *= l;
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), q.get_num_mpz_t());
  }
  if (g == 0) throw InputError("cannot normalize the zero vector");
  auto first = std::find_if(out.begin(), out.end(), [](const Rational& q) { return sgn(q) != 0; });
  if (sgn(*first) < 0) g = -g;
  for (auto& q : out) q /= g;
  return out;
}

}  // namespace otb
