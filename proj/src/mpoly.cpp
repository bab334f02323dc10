#include "otb/mpoly.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <sstream>
#include <unordered_map>

#include "otb/error.hpp"

namespace otb {

std::size_t total_degree(const Exponents& e) {
  return std::accumulate(e.begin(), e.end(), std::size_t{0});
}

bool GrlexLess::operator()(const Exponents& a, const Exponents& b) const {
  std::size_t da = total_degree(a), db = total_degree(b);
  if (da != db) return da < db;
  for (std::size_t i = 0; i < a.size() && i < b.size(); ++i)
    if (a[i] != b[i]) return a[i] < b[i];
  return a.size() < b.size();
}

namespace {

void fill_monomials(std::size_t var, std::size_t remaining, Exponents& cur, std::vector<Exponents>& out) {
  if (var + 1 == cur.size()) {
    cur[var] = static_cast<std::uint16_t>(remaining);
    out.push_back(cur);
    return;
  }
  for (std::size_t e = remaining + 1; e-- > 0;) {
    cur[var] = static_cast<std::uint16_t>(e);
    fill_monomials(var + 1, remaining - e, cur, out);
  }
}

}  // namespace

std::vector<Exponents> monomials_of_degree(std::size_t nvars, std::size_t degree) {
  std::vector<Exponents> out;
  if (nvars == 0) {
    if (degree == 0) out.emplace_back();
    return out;
  }
  Exponents cur(nvars, 0);
  fill_monomials(0, degree, cur, out);
  return out;
}

MPoly MPoly::constant(std::size_t nvars, const Rational& c) {
  MPoly p(nvars);
  p.add_term(Exponents(nvars, 0), c);
  return p;
}

MPoly MPoly::variable(std::size_t nvars, std::size_t index) {
  Exponents e(nvars, 0);
  e.at(index) = 1;
  return monomial(std::move(e));
}

MPoly MPoly::monomial(Exponents exps, const Rational& c) {
  MPoly p(exps.size());
  p.add_term(exps, c);
  return p;
}

MPoly MPoly::linear(std::span<const Rational> coeffs) {
  MPoly p(coeffs.size());
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    Exponents e(coeffs.size(), 0);
    e[i] = 1;
    p.add_term(e, coeffs[i]);
  }
  return p;
}

long MPoly::degree() const {
  if (terms_.empty()) return -1;
  return static_cast<long>(total_degree(terms_.rbegin()->first));
}

bool MPoly::is_homogeneous() const {
  if (terms_.empty()) return true;
  return total_degree(terms_.begin()->first) == total_degree(terms_.rbegin()->first);
}

Rational MPoly::coefficient(const Exponents& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Rational(0) : it->second;
}

void MPoly::add_term(const Exponents& e, const Rational& c) {
  if (e.size() != nvars_) throw InputError("exponent vector length does not match ring");
  if (sgn(c) == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (sgn(it->second) == 0) terms_.erase(it);
  }
}

MPoly& MPoly::operator+=(const MPoly& o) {
  if (o.nvars_ != nvars_) throw InputError("polynomials live in different rings");
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

MPoly& MPoly::operator-=(const MPoly& o) {
  if (o.nvars_ != nvars_) throw InputError("polynomials live in different rings");
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

MPoly& MPoly::operator*=(const Rational& c) {
  if (sgn(c) == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, v] : terms_) v *= c;
  return *this;
}

MPoly operator*(const MPoly& a, const MPoly& b) {
  if (a.nvars_ != b.nvars_) throw InputError("polynomials live in different rings");
  MPoly p(a.nvars_);
  Exponents e(a.nvars_);
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) {
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = static_cast<std::uint16_t>(ea[i] + eb[i]);
      p.add_term(e, ca * cb);
    }
  return p;
}

MPoly MPoly::pow(unsigned e) const {
  MPoly result = constant(nvars_, 1);
  MPoly base = *this;
  while (e) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return result;
}

MPoly MPoly::derivative(std::size_t var) const {
  MPoly d(nvars_);
  for (const auto& [e, c] : terms_) {
    if (e[var] == 0) continue;
    Exponents f = e;
    --f[var];
    d.add_term(f, c * e[var]);
  }
  return d;
}

Rational MPoly::evaluate(std::span<const Rational> point) const {
  if (point.size() != nvars_) throw InputError("evaluation point has wrong length");
  Rational sum = 0;
  for (const auto& [e, c] : terms_) {
    Rational t = c;
    for (std::size_t i = 0; i < nvars_; ++i)
      for (unsigned k = 0; k < e[i]; ++k) t *= point[i];
    sum += t;
  }
  return sum;
}

MPoly MPoly::substitute(std::span<const MPoly> images) const {
  if (images.size() != nvars_) throw InputError("substitution needs one image per variable");
  std::size_t target = images.empty() ? 0 : images[0].nvars();
  // powers[k][e] = images[k]^e, filled on demand
  std::vector<std::vector<MPoly>> powers(nvars_);
  auto power = [&](std::size_t k, unsigned e) -> const MPoly& {
    auto& cache = powers[k];
    if (cache.empty()) cache.push_back(constant(target, 1));
    while (cache.size() <= e) cache.push_back(cache.back() * images[k]);
    return cache[e];
  };
  MPoly out(target);
  for (const auto& [e, c] : terms_) {
    MPoly t = constant(target, c);
    for (std::size_t k = 0; k < nvars_; ++k)
      if (e[k]) t = t * power(k, e[k]);
    out += t;
  }
  return out;
}

std::vector<Rational> MPoly::coefficients(std::span<const Exponents> basis) const {
  std::vector<Rational> out(basis.size());
  for (std::size_t i = 0; i < basis.size(); ++i) out[i] = coefficient(basis[i]);
  return out;
}

std::vector<std::string> default_variable_names(std::size_t nvars) {
  if (nvars <= 3) {
    static const char* xyz[] = {"x", "y", "z"};
    return std::vector<std::string>(xyz, xyz + nvars);
  }
  std::vector<std::string> names;
  for (std::size_t i = 1; i <= nvars; ++i) names.push_back("y" + std::to_string(i));
  return names;
}

std::string MPoly::to_string(std::span<const std::string> names) const {
  std::vector<std::string> fallback;
  if (names.empty()) {
    fallback = default_variable_names(nvars_);
    names = fallback;
  }
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    bool negative = sgn(c) < 0;
    Rational mag = negative ? Rational(-c) : c;
    if (first)
      os << (negative ? "-" : "");
    else
      os << (negative ? " - " : " + ");
    first = false;
    bool is_const = total_degree(e) == 0;
    bool unit = mag == 1;
    if (!unit || is_const) os << otb::to_string(mag);
    bool need_star = !unit || is_const;
    for (std::size_t i = 0; i < nvars_; ++i) {
      if (e[i] == 0) continue;
      if (need_star) os << "*";
      os << names[i];
      if (e[i] > 1) os << "^" << e[i];
      need_star = true;
    }
  }
  return os.str();
}

MPoly determinant(const std::vector<std::vector<MPoly>>& m) {
  const std::size_t n = m.size();
  if (n == 0) throw InputError("determinant of an empty matrix");
  for (const auto& row : m)
    if (row.size() != n) throw InputError("determinant of a non-square matrix");
  if (n > 24) throw InputError("determinant: matrix too large for Laplace expansion");
  const std::size_t nvars = m[0][0].nvars();
  std::unordered_map<std::uint32_t, MPoly> memo;
  // det of rows [n - popcount(mask), n) restricted to the columns in mask
  auto rec = [&](auto&& self, std::uint32_t mask) -> MPoly {
    int k = __builtin_popcount(mask);
    if (k == 0) return MPoly::constant(nvars, 1);
    if (auto it = memo.find(mask); it != memo.end()) return it->second;
    std::size_t row = n - static_cast<std::size_t>(k);
    MPoly acc(nvars);
    int pos = 0;
    for (std::size_t c = 0; c < n; ++c) {
      if (!(mask >> c & 1u)) continue;
      if (!m[row][c].is_zero()) {
        MPoly term = m[row][c] * self(self, mask & ~(1u << c));
        if (pos % 2) acc -= term;
        else acc += term;
      }
      ++pos;
    }
    memo.emplace(mask, acc);
    return acc;
  };
  return rec(rec, (n == 32 ? 0xffffffffu : (1u << n) - 1));
}

long order_of_vanishing(const MPoly& f, std::span<const Rational> point) {
  if (f.nvars() != 3 || point.size() != 3) throw InputError("order_of_vanishing expects three variables");
  if (f.is_zero()) return std::numeric_limits<long>::max();
  std::size_t chart = 0;
  while (chart < 3 && sgn(point[chart]) == 0) ++chart;
  if (chart == 3) throw InputError("the zero vector is not a projective point");
  // x_chart = 1, other coordinates shifted so the point becomes the origin of (u, v)
  std::vector<MPoly> images;
  std::size_t local = 0;
  for (std::size_t i = 0; i < 3; ++i) {
    if (i == chart) {
      images.push_back(MPoly::constant(2, 1));
    } else {
      images.push_back(MPoly::variable(2, local++) + MPoly::constant(2, point[i] / point[chart]));
    }
  }
  MPoly g = f.substitute(images);
  if (g.is_zero()) return std::numeric_limits<long>::max();
  return static_cast<long>(total_degree(g.terms().begin()->first));
}

}  // namespace otb
