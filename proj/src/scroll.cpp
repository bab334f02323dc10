#include "otb/scroll.hpp"

#include <sstream>

#include "otb/binary_form.hpp"
#include "otb/echelon.hpp"
#include "otb/error.hpp"
#include "otb/fatpoints.hpp"
#include "otb/matrix.hpp"
#include "otb/subsets.hpp"

namespace otb {

namespace {

RatMatrix coefficient_matrix(const std::vector<MPoly>& polys, const std::vector<Exponents>& basis) {
  RatMatrix m(basis.size(), polys.size());
  for (std::size_t c = 0; c < polys.size(); ++c) {
    auto v = polys[c].coefficients(basis);
    for (std::size_t r = 0; r < basis.size(); ++r) m(r, c) = v[r];
  }
  return m;
}

}  // namespace

MPoly MultiplicationMatrix::entry(std::size_t i, std::size_t j) const { return MPoly::linear(entries.at(i).at(j)); }

std::string MultiplicationMatrix::to_string() const {
  std::vector<std::string> names;
  for (std::size_t k = 0; k < d; ++k) names.push_back("y" + std::to_string(k + 1));
  std::ostringstream os;
  for (std::size_t i = 0; i < entries.size(); ++i) {
    os << "[";
    for (std::size_t j = 0; j < columns(); ++j) os << (j ? ", " : "") << entry(i, j).to_string(names);
    os << "]\n";
  }
  return os.str();
}

MultiplicationMatrix multiplication_matrix(const Arrangement& a, const std::vector<FlatPoint>& flats,
                                           const MultinetCertificate& cert) {
  if (!cert.is_net()) throw InputError("the scroll construction needs a net (all weights 1)");
  const std::size_t d = a.size();
  auto split = net_split(a, flats, cert);
  auto ha = h0_fatpoints(a, flats, split.a_div);
  if (ha.dimension != 2) throw InputError("not a pencil: h^0(A) = " + std::to_string(ha.dimension));
  auto hb = h0_fatpoints(a, flats, split.b_div);

  MultiplicationMatrix g;
  g.d = d;
  std::vector<MPoly> products;
  for (const auto& block : cert.blocks) {
    MPoly f = MPoly::constant(3, 1);
    for (auto l : block) f = f * a.form_poly(l);
    products.push_back(std::move(f));
  }
  auto mono_a = monomials_of_degree(3, static_cast<std::size_t>(cert.m));
  for (std::size_t s = 0; s < products.size() && g.sigma.empty(); ++s)
    for (std::size_t t = s + 1; t < products.size() && g.sigma.empty(); ++t)
      if (rank(coefficient_matrix({products[s], products[t]}, mono_a)) == 2) g.sigma = {products[s], products[t]};
  g.sigma_from_blocks = !g.sigma.empty();
  if (g.sigma.empty()) g.sigma = ha.basis;
  g.tau = hb.basis;

  auto ls = l_forms(a);
  auto mono = monomials_of_degree(3, d - 1);
  RatMatrix lm = coefficient_matrix(ls, mono);
  g.entries.assign(2, {});
  for (std::size_t i = 0; i < 2; ++i)
    for (const auto& t : g.tau) {
      auto rhs = (g.sigma[i] * t).coefficients(mono);
      auto sol = solve(lm, rhs);
      if (!sol) throw VerificationError("a product of sections is not in the span of the l_k");
      g.entries[i].push_back(*sol);
    }
  return g;
}

bool is_one_generic(const MultiplicationMatrix& g) {
  const std::size_t b = g.columns();
  if (b == 0 || g.entries.size() != 2) return false;
  if (b > g.d) return false;
  // pencil entry (j, k) = lambda g_{0j}[k] + mu g_{1j}[k] in Q[lambda, mu]
  const MPoly lambda = MPoly::variable(2, 0), mu = MPoly::variable(2, 1);
  std::vector<BinaryForm> minors;
  for (const auto& cols : k_subsets(g.d, b)) {
    std::vector<std::vector<MPoly>> m(b, std::vector<MPoly>(b, MPoly(2)));
    for (std::size_t j = 0; j < b; ++j)
      for (std::size_t c = 0; c < b; ++c)
        m[j][c] = lambda * g.entries[0][j][cols[c]] + mu * g.entries[1][j][cols[c]];
    MPoly det = determinant(m);
    std::vector<Rational> coeffs(b + 1);
    for (std::size_t k = 0; k <= b; ++k)
      coeffs[k] = det.coefficient(Exponents{static_cast<std::uint16_t>(b - k), static_cast<std::uint16_t>(k)});
    minors.emplace_back(std::move(coeffs));
  }
  bool any = false;
  for (const auto& f : minors) any = any || !f.is_zero();
  if (!any) return false;
  return binary_gcd(minors).degree() == 0;
}

MinorCheck check_minors(const OTPresentation& p, const MultiplicationMatrix& g) {
  MinorCheck out;
  const std::size_t b = g.columns();
  out.all_members = true;
  for (std::size_t s = 0; s < b; ++s)
    for (std::size_t t = s + 1; t < b; ++t) {
      MPoly q = g.entry(0, s) * g.entry(1, t) - g.entry(0, t) * g.entry(1, s);
      out.all_members = out.all_members && membership(p, q);
      out.minors.push_back(std::move(q));
    }
  auto basis = monomials_of_degree(p.d, 2);
  RatMatrix m = coefficient_matrix(out.minors, basis);
  out.span_dimension = rank(m);
  out.ideal_quadrics = ideal_graded_piece(p, 2).ideal_dim;
  return out;
}

bool minors_in_ideal(const Arrangement& a, const MultiplicationMatrix& g) {
  return check_minors(ot_presentation(a), g).all_members;
}

EagonNorthcott en_prediction(const MultinetCertificate& cert, std::size_t d) {
  (void)d;
  if (!cert.is_net()) throw InputError("Eagon-Northcott prediction needs a net");
  const long k = static_cast<long>(cert.k), m = cert.m;
  if (k < m) throw InputError("net hypothesis k >= m fails: k = " + std::to_string(k) + ", m = " + std::to_string(m));
  EagonNorthcott en;
  en.b = k * m - m * (m + 1) / 2;
  for (long i = 0; i + 2 <= en.b; ++i)
    en.betti.push_back((i + 1) * static_cast<long long>(binomial(static_cast<std::size_t>(en.b), static_cast<std::size_t>(i + 2))));
  return en;
}

}  // namespace otb
