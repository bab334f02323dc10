#include "otb/fatpoints.hpp"

#include <sstream>

#include "otb/error.hpp"
#include "otb/matrix.hpp"

namespace otb {

namespace {

void check_same(const DivisorClass& x, const DivisorClass& y) {
  if (x.mults.size() != y.mults.size()) throw InputError("divisor classes on different blowups");
}

// d^|beta| x^e / dx^beta evaluated at p
Rational partial_at(const Exponents& e, const Exponents& beta, const ProjectivePoint& p) {
  Rational v = 1;
  for (std::size_t i = 0; i < 3; ++i) {
    if (beta[i] > e[i]) return 0;
    for (unsigned t = 0; t < beta[i]; ++t) v *= e[i] - t;
    for (unsigned t = beta[i]; t < e[i]; ++t) v *= p[i];
  }
  return v;
}

}  // namespace

DivisorClass DivisorClass::operator+(const DivisorClass& o) const {
  check_same(*this, o);
  DivisorClass r{m + o.m, mults};
  for (std::size_t i = 0; i < mults.size(); ++i) r.mults[i] += o.mults[i];
  return r;
}

DivisorClass DivisorClass::operator-(const DivisorClass& o) const { return *this + o * -1; }

DivisorClass DivisorClass::operator*(long c) const {
  DivisorClass r{m * c, mults};
  for (auto& v : r.mults) v *= c;
  return r;
}

std::string DivisorClass::to_string() const {
  std::ostringstream os;
  os << "(" << m << ";";
  for (std::size_t i = 0; i < mults.size(); ++i) os << (i ? "," : "") << mults[i];
  os << ")";
  return os.str();
}

long pairing(const DivisorClass& x, const DivisorClass& y) {
  check_same(x, y);
  long s = x.m * y.m;
  for (std::size_t i = 0; i < x.mults.size(); ++i) s -= x.mults[i] * y.mults[i];
  return s;
}

DivisorClass canonical_class(std::size_t flats) { return {-3, std::vector<long>(flats, -1)}; }

DivisorClass exceptional_class(std::size_t flats, std::size_t p) {
  DivisorClass e{0, std::vector<long>(flats, 0)};
  e.mults.at(p) = -1;
  return e;
}

DivisorClass hyperplane_class(std::size_t flats) { return {1, std::vector<long>(flats, 0)}; }

long riemann_roch_chi(const DivisorClass& d) {
  long twice = pairing(d, d) - pairing(d, canonical_class(d.mults.size()));
  if (twice % 2 != 0) throw VerificationError("D^2 - D.K is odd for " + d.to_string());
  return twice / 2 + 1;
}

DivisorClass divisor_DA(const Arrangement& a, const std::vector<FlatPoint>& flats) {
  DivisorClass d{static_cast<long>(a.size()) - 1, {}};
  for (const auto& p : flats) d.mults.push_back(p.mu);
  return d;
}

std::vector<std::vector<Rational>> fatpoint_conditions(const std::vector<FlatPoint>& flats, const DivisorClass& d) {
  if (d.mults.size() != flats.size()) throw InputError("divisor has the wrong number of multiplicities");
  if (d.m < 0) throw InputError("not a fat-point divisor: negative degree " + std::to_string(d.m));
  for (auto a : d.mults)
    if (a < 0) throw InputError("not a fat-point divisor: negative multiplicity " + std::to_string(a));
  auto monomials = monomials_of_degree(3, static_cast<std::size_t>(d.m));
  std::vector<std::vector<Rational>> rows;
  for (std::size_t p = 0; p < flats.size(); ++p) {
    if (d.mults[p] == 0) continue;
    for (const auto& beta : monomials_of_degree(3, static_cast<std::size_t>(d.mults[p] - 1))) {
      std::vector<Rational> row;
      for (const auto& e : monomials) row.push_back(partial_at(e, beta, flats[p].point));
      rows.push_back(std::move(row));
    }
  }
  return rows;
}

SectionSpace h0_fatpoints(const Arrangement& a, const std::vector<FlatPoint>& flats, const DivisorClass& d) {
  (void)a;
  auto rows = fatpoint_conditions(flats, d);
  auto monomials = monomials_of_degree(3, static_cast<std::size_t>(d.m));
  RatMatrix cond(rows.size(), monomials.size());
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < monomials.size(); ++c) cond(r, c) = rows[r][c];
  SectionSpace s;
  s.m = d.m;
  s.conditions = rows.size();
  RatMatrix ker = kernel_basis(cond);
  s.rank = monomials.size() - ker.cols();
  s.dimension = ker.cols();
  for (std::size_t k = 0; k < ker.cols(); ++k) {
    auto v = primitive_normalized(ker.column(k));
    MPoly f(3);
    for (std::size_t c = 0; c < monomials.size(); ++c) f.add_term(monomials[c], v[c]);
    s.basis.push_back(std::move(f));
  }
  s.chi = riemann_roch_chi(d);
  return s;
}

NetSplit net_split(const Arrangement& a, const std::vector<FlatPoint>& flats, const MultinetCertificate& cert) {
  NetSplit out;
  out.a_div = {cert.m, std::vector<long>(flats.size(), 0)};
  for (std::size_t t = 0; t < cert.base_locus.size(); ++t) out.a_div.mults.at(cert.base_locus[t]) = cert.n[t];
  out.b_div = divisor_DA(a, flats) - out.a_div;
  if (out.b_div.m < 0) throw VerificationError("residual divisor has negative degree");
  for (std::size_t p = 0; p < flats.size(); ++p)
    if (out.b_div.mults[p] < 0)
      throw VerificationError("residual divisor has negative multiplicity at " + point_to_string(flats[p].point));
  if (cert.is_net()) {
    long k = static_cast<long>(cert.k), m = cert.m;
    out.b_lower_bound = k * m - m * (m + 1) / 2;
  }
  return out;
}

}  // namespace otb
