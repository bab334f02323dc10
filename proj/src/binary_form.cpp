#include "otb/binary_form.hpp"

#include <algorithm>
#include <sstream>

#include "otb/error.hpp"

namespace otb {

namespace {

// Univariate polynomial in lambda, ascending coefficients, no trailing zeros.
using Univariate = std::vector<Rational>;

void trim(Univariate& p) {
  while (!p.empty() && sgn(p.back()) == 0) p.pop_back();
}

Univariate remainder(Univariate a, const Univariate& b) {
  trim(a);
  while (a.size() >= b.size() && !a.empty()) {
    Rational f = a.back() / b.back();
    std::size_t shift = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i) a[i + shift] -= f * b[i];
    trim(a);
  }
  return a;
}

Univariate make_monic(Univariate p) {
  Rational lead = p.back();
  for (auto& c : p) c /= lead;
  return p;
}

Univariate univariate_gcd(Univariate a, Univariate b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Univariate r = remainder(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return make_monic(a);
}

}  // namespace

BinaryForm::BinaryForm(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) throw InputError("a binary form needs at least one coefficient");
}

bool BinaryForm::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& c) { return sgn(c) == 0; });
}

std::size_t BinaryForm::mu_valuation() const {
  for (std::size_t k = 0; k < coeffs_.size(); ++k)
    if (sgn(coeffs_[k]) != 0) return k;
  throw InputError("zero binary form has no valuation");
}

std::string BinaryForm::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  const std::size_t b = degree();
  bool first = true;
  for (std::size_t k = 0; k <= b; ++k) {
    const Rational& c = coeffs_[k];
    if (sgn(c) == 0) continue;
    bool negative = sgn(c) < 0;
    Rational mag = negative ? Rational(-c) : c;
    os << (first ? (negative ? "-" : "") : (negative ? " - " : " + "));
    first = false;
    std::size_t lam = b - k, mu = k;
    bool unit = mag == 1 && (lam + mu) > 0;
    if (!unit) os << otb::to_string(mag);
    bool star = !unit;
    if (lam) {
      os << (star ? "*" : "") << "lambda" << (lam > 1 ? "^" + std::to_string(lam) : "");
      star = true;
    }
    if (mu) os << (star ? "*" : "") << "mu" << (mu > 1 ? "^" + std::to_string(mu) : "");
  }
  return os.str();
}

BinaryForm binary_gcd(std::span<const BinaryForm> forms) {
  bool any = false;
  std::size_t common_mu = 0;
  Univariate g;
  for (const auto& f : forms) {
    if (f.is_zero()) continue;
    std::size_t k = f.mu_valuation();
    const auto& c = f.coefficients();
    const std::size_t b = f.degree();
    // dehomogenize at mu = 1: coefficient of lambda^(b-j) is c_j
    Univariate u(b - k + 1);
    for (std::size_t j = k; j <= b; ++j) u[b - j] = c[j];
    if (!any) {
      common_mu = k;
      g = make_monic(u);
      any = true;
    } else {
      common_mu = std::min(common_mu, k);
      g = univariate_gcd(g, u);
    }
  }
  if (!any) throw InputError("zero pencil");
  const std::size_t e = g.size() - 1;
  std::vector<Rational> coeffs(common_mu + e + 1);
  for (std::size_t t = 0; t <= e; ++t) coeffs[e - t + common_mu] = g[t];
  return BinaryForm(std::move(coeffs));
}

}  // namespace otb
