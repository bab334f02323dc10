#include "doctest.h"
#include "helpers.hpp"
#include "otb/error.hpp"
#include "otb/fatpoints.hpp"
#include "otb/matrix.hpp"
#include "otb/orlik_terao.hpp"
#include "otb/random.hpp"

using namespace otb;

namespace {

MultinetCertificate first_net(const Arrangement& a, const std::vector<FlatPoint>& flats) {
  auto ms = search_multinets(a, flats, {});
  REQUIRE(ms.size() == 1);
  return ms[0];
}

}  // namespace

TEST_CASE("intersection pairing") {
  const std::size_t n = 7;
  CHECK(pairing(hyperplane_class(n), hyperplane_class(n)) == 1);
  CHECK(pairing(exceptional_class(n, 0), exceptional_class(n, 1)) == 0);
  CHECK(pairing(exceptional_class(n, 2), exceptional_class(n, 2)) == -1);
  auto a = builtin_arrangement("braid-a3");
  auto flats = compute_flats(a);
  auto da = divisor_DA(a, flats);
  CHECK(pairing(da, da) == 6);
  CHECK(riemann_roch_chi(da) == 6);
  CHECK(riemann_roch_chi(DivisorClass{0, std::vector<long>(n, 0)}) == 1);
  auto k = canonical_class(n);
  CHECK(k.m == -3);
  CHECK((da + k - k) == da);
  CHECK((da * 2).m == 10);
}

TEST_CASE("D_A as a class") {
  auto braid = builtin_arrangement("braid-a3");
  auto bf = compute_flats(braid);
  auto da = divisor_DA(braid, bf);
  CHECK(da.m == 5);
  std::vector<long> mu;
  for (const auto& p : bf) mu.push_back(p.mu);
  CHECK(da.mults == mu);
  auto ex = builtin_arrangement("ex-2-4");
  auto de = divisor_DA(ex, compute_flats(ex));
  CHECK(de.m == 3);
  CHECK(de.mults == std::vector<long>(6, 1));
  auto nine = builtin_arrangement("9_3_2");
  auto dn = divisor_DA(nine, compute_flats(nine));
  CHECK(dn.m == 8);
  CHECK(std::count(dn.mults.begin(), dn.mults.end(), 2) == 9);
  CHECK(std::count(dn.mults.begin(), dn.mults.end(), 1) == 9);
}

TEST_CASE("sections of D_A are spanned by the l forms") {
  for (const auto& name : builtin_names()) {
    CAPTURE(name);
    auto a = builtin_arrangement(name);
    auto flats = compute_flats(a);
    auto da = divisor_DA(a, flats);
    auto s = h0_fatpoints(a, flats, da);
    CHECK(s.dimension == a.size());
    CHECK(s.chi == static_cast<long>(a.size()));
    CHECK(s.h1() == 0);
    // mutual containment: l_i satisfy every condition and both spans have dimension d
    auto rows = fatpoint_conditions(flats, da);
    auto mono = monomials_of_degree(3, a.size() - 1);
    RatMatrix lm(mono.size(), a.size());
    auto ls = l_forms(a);
    for (std::size_t i = 0; i < ls.size(); ++i) {
      auto c = ls[i].coefficients(mono);
      for (const auto& row : rows) {
        Rational v = 0;
        for (std::size_t k = 0; k < c.size(); ++k) v += row[k] * c[k];
        CHECK(is_zero(v));
      }
      for (std::size_t k = 0; k < c.size(); ++k) lm(k, i) = c[k];
    }
    CHECK(rank(lm) == a.size());
  }
}

TEST_CASE("net divisors") {
  auto braid = builtin_arrangement("braid-a3");
  auto bf = compute_flats(braid);
  auto split = net_split(braid, bf, first_net(braid, bf));
  CHECK(split.a_div.m == 2);
  CHECK(split.b_div.m == 3);
  CHECK(split.b_div.mults == std::vector<long>(bf.size(), 1));
  CHECK(split.b_lower_bound == 3);
  CHECK(h0_fatpoints(braid, bf, split.a_div).dimension == 2);
  CHECK(h0_fatpoints(braid, bf, split.b_div).dimension >= 3);

  auto nine = builtin_arrangement("9_3_1");
  auto nf = compute_flats(nine);
  auto cert = first_net(nine, nf);
  auto ns = net_split(nine, nf, cert);
  CHECK(ns.b_lower_bound == 3);
  auto ha = h0_fatpoints(nine, nf, ns.a_div);
  CHECK(ha.dimension == 2);
  CHECK(ha.chi == 1);
  CHECK(ha.h1() == 1);
  CHECK(ns.b_div.m == 5);
  CHECK(ns.b_div.mults == std::vector<long>(nf.size(), 1));
  CHECK(h0_fatpoints(nine, nf, ns.b_div).dimension == 3);
  // sum of mu over Z is d m - m^2
  long s = 0;
  for (auto p : cert.base_locus) s += nf[p].mu;
  CHECK(s == 9 * 3 - 9);
}

TEST_CASE("h0 bounds chi and rejects negative classes") {
  auto a = builtin_arrangement("9_3_1");
  auto flats = compute_flats(a);
  DeterministicRng rng(9);
  for (int t = 0; t < 12; ++t) {
    DivisorClass d{rng.integer(0, 6), {}};
    for (std::size_t p = 0; p < flats.size(); ++p) d.mults.push_back(rng.integer(0, 2));
    auto s = h0_fatpoints(a, flats, d);
    CHECK(static_cast<long>(s.dimension) >= s.chi);
    CHECK(s.dimension == s.basis.size());
  }
  DivisorClass bad{-1, std::vector<long>(flats.size(), 0)};
  CHECK_THROWS_WITH_AS(h0_fatpoints(a, flats, bad), doctest::Contains("not a fat-point divisor"), InputError);
  DivisorClass bad2{3, std::vector<long>(flats.size(), 0)};
  bad2.mults[0] = -1;
  CHECK_THROWS_WITH_AS(h0_fatpoints(a, flats, bad2), doctest::Contains("not a fat-point divisor"), InputError);
}
