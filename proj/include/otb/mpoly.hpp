#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "otb/rational.hpp"

namespace otb {

using Exponents = std::vector<std::uint16_t>;

std::size_t total_degree(const Exponents& e);

/// Graded lexicographic order: lower total degree first, then the vector with
/// the smaller first differing exponent.
struct GrlexLess {
  bool operator()(const Exponents& a, const Exponents& b) const;
};

/// All exponent vectors of total degree `degree` in `nvars` variables,
/// largest first in graded lex order.
std::vector<Exponents> monomials_of_degree(std::size_t nvars, std::size_t degree);

/// Sparse multivariate polynomial with rational coefficients. No zero
/// coefficient is ever stored.
class MPoly {
 public:
  using Terms = std::map<Exponents, Rational, GrlexLess>;

  explicit MPoly(std::size_t nvars = 0) : nvars_(nvars) {}

  static MPoly constant(std::size_t nvars, const Rational& c);
  static MPoly variable(std::size_t nvars, std::size_t index);
  static MPoly monomial(Exponents exps, const Rational& c = 1);
  /// sum_i coeffs[i] * x_i
  static MPoly linear(std::span<const Rational> coeffs);

  std::size_t nvars() const { return nvars_; }
  const Terms& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  /// -1 for the zero polynomial.
  long degree() const;
  bool is_homogeneous() const;
  Rational coefficient(const Exponents& e) const;

  /// Adds c * x^e.
  void add_term(const Exponents& e, const Rational& c);

  MPoly& operator+=(const MPoly& o);
  MPoly& operator-=(const MPoly& o);
  MPoly& operator*=(const Rational& c);
  friend MPoly operator+(MPoly a, const MPoly& b) { return a += b; }
  friend MPoly operator-(MPoly a, const MPoly& b) { return a -= b; }
  friend MPoly operator*(MPoly a, const Rational& c) { return a *= c; }
  friend MPoly operator*(const Rational& c, MPoly a) { return a *= c; }
  MPoly operator-() const { return *this * Rational(-1); }
  friend MPoly operator*(const MPoly& a, const MPoly& b);

  bool operator==(const MPoly& o) const { return nvars_ == o.nvars_ && terms_ == o.terms_; }

  MPoly pow(unsigned e) const;
  MPoly derivative(std::size_t var) const;
  Rational evaluate(std::span<const Rational> point) const;
  /// Replaces variable k by images[k]; all images share one ring.
  MPoly substitute(std::span<const MPoly> images) const;

  /// Coefficients against a list of monomials (zero where absent).
  std::vector<Rational> coefficients(std::span<const Exponents> basis) const;

  /// Leading term first. Default names: x,y,z for three variables, y1..yn otherwise.
  std::string to_string(std::span<const std::string> names = {}) const;

 private:
  std::size_t nvars_;
  Terms terms_;
};

std::vector<std::string> default_variable_names(std::size_t nvars);

/// Determinant of a square matrix of polynomials (Laplace expansion with
/// memoised minors; intended for small sizes).
MPoly determinant(const std::vector<std::vector<MPoly>>& m);

/// Order of vanishing of a homogeneous polynomial in three variables at a
/// projective point: the lowest total degree after moving the point to the
/// origin of an affine chart.
long order_of_vanishing(const MPoly& f, std::span<const Rational> point);

}  // namespace otb
