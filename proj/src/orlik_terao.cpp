#include "otb/orlik_terao.hpp"

#include <algorithm>

#include "otb/error.hpp"
#include "otb/matrix.hpp"

namespace otb {

namespace {
constexpr std::uint64_t kExactPieceLimit = 2000;
}  // namespace

std::vector<MPoly> l_forms(const Arrangement& a) {
  const std::size_t d = a.size();
  std::vector<MPoly> out;
  out.reserve(d);
  for (std::size_t i = 0; i < d; ++i) {
    MPoly p = MPoly::constant(3, 1);
    for (std::size_t j = 0; j < d; ++j)
      if (j != i) p = p * a.form_poly(j);
    out.push_back(std::move(p));
  }
  return out;
}

OTPresentation ot_presentation(const Arrangement& a, std::size_t max_circuit_size) {
  OTPresentation p;
  p.d = a.size();
  p.circuits = enumerate_circuits(a, std::min(max_circuit_size, a.size()));
  for (const auto& c : p.circuits) p.generators.push_back(circuit_relation(c, p.d));
  p.l_forms = l_forms(a);
  return p;
}

GradedPiece ideal_graded_piece(const OTPresentation& p, std::size_t j) {
  auto ring = ot_ring<RationalField>(p, j);
  GradedPiece g;
  g.degree = j;
  g.ambient_dim = ring.monomials(j).size();
  g.ideal_dim = ring.ideal_dim(j);
  g.quotient_dim = ring.quotient_dim(j);
  for (auto k : ring.standard(j)) g.standard_monomials.push_back(ring.monomials(j)[k]);
  return g;
}

std::vector<std::size_t> quotient_dimensions(const OTPresentation& p, std::size_t upto) {
  std::vector<std::size_t> out;
  // exact while the ambient pieces stay moderate, two primes beyond that
  std::size_t exact_top = 0;
  while (exact_top < upto && binomial(p.d + exact_top, exact_top + 1) <= kExactPieceLimit) ++exact_top;
  auto exact = ot_ring<RationalField>(p, exact_top);
  for (std::size_t j = 0; j <= exact_top; ++j) out.push_back(exact.quotient_dim(j));
  if (upto <= exact_top) return out;
  auto r1 = ot_ring(p, upto, PrimeField(PrimeField::kDefaultPrime));
  auto r2 = ot_ring(p, upto, PrimeField(PrimeField::kSecondPrime));
  for (std::size_t j = exact_top + 1; j <= upto; ++j) {
    if (r1.quotient_dim(j) != r2.quotient_dim(j))
      throw VerificationError("dim C(A)_" + std::to_string(j) + " differs between the two primes");
    out.push_back(r1.quotient_dim(j));
  }
  return out;
}

std::size_t quotient_dimension(const OTPresentation& p, std::size_t j) { return quotient_dimensions(p, j).at(j); }

TeraoSeries terao_series(const PoincarePoly& poincare, std::size_t upto) {
  const auto& c = poincare.coeffs;
  TeraoSeries s;
  // P(t/(1-t)) = sum_k c_k t^k (1-t)^{-k}; [t^j] t^k (1-t)^{-k} = C(j-1, j-k)
  for (std::size_t j = 0; j <= upto; ++j) {
    long long v = j == 0 ? c[0] : 0;
    for (std::size_t k = 1; k < c.size() && k <= j; ++k)
      v += c[k] * static_cast<long long>(binomial(j - 1, j - k));
    s.coefficients.push_back(v);
  }
  const std::size_t n = c.size() - 1;
  std::vector<long long> h(n + 1, 0);
  for (std::size_t k = 0; k <= n; ++k)
    for (std::size_t t = 0; t <= n - k; ++t) {
      long long b = static_cast<long long>(binomial(n - k, t));
      h[k + t] += c[k] * (t % 2 ? -b : b);
    }
  while (h.size() > 1 && h.back() == 0) h.pop_back();
  s.h_polynomial = std::move(h);
  return s;
}

bool membership(const OTPresentation& p, const MPoly& g) {
  if (g.nvars() != p.d) throw InputError("polynomial must live in Q[y_1..y_d]");
  if (!g.is_homogeneous()) throw InputError("membership test needs a homogeneous polynomial");
  return g.substitute(p.l_forms).is_zero();
}

HilbertBurch hilbert_burch_psi(const Arrangement& a) {
  const std::size_t d = a.size();
  auto l = l_forms(a);
  HilbertBurch hb;
  hb.psi.assign(d, std::vector<MPoly>(d - 1, MPoly(3)));
  for (std::size_t i = 0; i + 1 < d; ++i) {
    hb.psi[i][i] = a.form_poly(i);
    hb.psi[i + 1][i] = -a.form_poly(i + 1);
  }
  for (std::size_t c = 0; c + 1 < d; ++c) {
    MPoly s(3);
    for (std::size_t r = 0; r < d; ++r) s += hb.psi[r][c] * l[r];
    if (!s.is_zero()) throw VerificationError("column " + std::to_string(c + 1) + " of psi is not a syzygy");
  }
  for (std::size_t i = 0; i < d; ++i) {
    std::vector<std::vector<MPoly>> minor;
    for (std::size_t r = 0; r < d; ++r)
      if (r != i) minor.push_back(hb.psi[r]);
    MPoly det = determinant(minor);
    if (det == l[i])
      hb.minor_signs.push_back(1);
    else if (det == -l[i])
      hb.minor_signs.push_back(-1);
    else
      throw VerificationError("maximal minor " + std::to_string(i + 1) + " of psi is not +-l_" + std::to_string(i + 1));
  }
  return hb;
}

JacobianContainment jacobian_containment(const Arrangement& a) {
  const std::size_t d = a.size();
  auto l = l_forms(a);
  MPoly alpha = a.defining_polynomial();
  auto basis = monomials_of_degree(3, d - 1);
  RatMatrix m(basis.size(), d);
  for (std::size_t i = 0; i < d; ++i) {
    auto col = l[i].coefficients(basis);
    for (std::size_t r = 0; r < basis.size(); ++r) m(r, i) = col[r];
  }
  JacobianContainment out;
  out.contained = true;
  MPoly euler(3);
  for (std::size_t v = 0; v < 3; ++v) {
    MPoly partial = alpha.derivative(v);
    euler += MPoly::variable(3, v) * partial;
    auto rhs = partial.coefficients(basis);
    auto x = solve(m, rhs);
    if (!x) {
      out.contained = false;
      for (auto& c : out.coefficients) c.clear();
    } else if (out.contained) {
      out.coefficients[v] = std::move(*x);
    }
  }
  out.euler_identity = euler == alpha * Rational(static_cast<long>(d));
  return out;
}

long long gradient_degree(const Arrangement& a, const std::vector<FlatPoint>& flats) {
  return sum_mu(flats) - static_cast<long long>(a.size()) + 1;
}

std::vector<std::vector<long>> l_vanishing_orders(const Arrangement& a, const std::vector<FlatPoint>& flats) {
  auto l = l_forms(a);
  std::vector<std::vector<long>> out;
  for (const auto& p : flats) {
    std::vector<long> row;
    for (const auto& li : l) row.push_back(order_of_vanishing(li, std::span<const Rational>(p.point.data(), 3)));
    out.push_back(std::move(row));
  }
  return out;
}

}  // namespace otb
