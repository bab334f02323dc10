#include "doctest.h"
#include "helpers.hpp"
#include "otb/error.hpp"
#include "otb/koszul_betti.hpp"
#include "otb/random.hpp"
#include "otb/scroll.hpp"

using namespace otb;

namespace {

struct Net {
  Arrangement a;
  std::vector<FlatPoint> flats;
  MultinetCertificate cert;
};

Net net_of(const char* name) {
  auto a = builtin_arrangement(name);
  auto flats = compute_flats(a);
  auto ms = search_multinets(a, flats, {});
  REQUIRE(ms.size() == 1);
  return {a, flats, ms[0]};
}

}  // namespace

TEST_CASE("multiplication matrix of the nets") {
  for (auto name : {"braid-a3", "9_3_1"}) {
    CAPTURE(name);
    auto n = net_of(name);
    auto g = multiplication_matrix(n.a, n.flats, n.cert);
    CHECK(g.entries.size() == 2);
    CHECK(g.columns() == 3);
    CHECK(g.sigma_from_blocks);
    // sigma_i tau_j = sum_k g_ij[k] l_k
    auto ls = l_forms(n.a);
    for (std::size_t i = 0; i < 2; ++i)
      for (std::size_t j = 0; j < 3; ++j) {
        MPoly s(3);
        for (std::size_t k = 0; k < n.a.size(); ++k) s += ls[k] * g.entries[i][j][k];
        CHECK(s == g.sigma[i] * g.tau[j]);
      }
    CHECK(is_one_generic(g));
    auto p = ot_presentation(n.a);
    auto mc = check_minors(p, g);
    CHECK(mc.all_members);
    CHECK(mc.minors.size() == 3);
    CHECK(mc.span_dimension == 3);
    CHECK(minors_in_ideal(n.a, g));
    auto en = en_prediction(n.cert, n.a.size());
    CHECK(en.b == 3);
    CHECK(en.betti == std::vector<long long>{3, 2});
    CHECK(static_cast<long long>(tor_dimension(n.a, 2, 3)) == en.betti[1]);
  }
  auto n = net_of("braid-a3");
  auto mc = check_minors(ot_presentation(n.a), multiplication_matrix(n.a, n.flats, n.cert));
  CHECK(mc.ideal_quadrics == 4);
}

TEST_CASE("one-genericity") {
  MultiplicationMatrix zero_entry;
  zero_entry.d = 3;
  zero_entry.entries = {{otb::test::rats({1, 0, 0}), otb::test::rats({0, 1, 0})},
                        {otb::test::rats({0, 0, 0}), otb::test::rats({0, 0, 1})}};
  CHECK_FALSE(is_one_generic(zero_entry));
  MultiplicationMatrix swap;
  swap.d = 2;
  swap.entries = {{otb::test::rats({1, 0}), otb::test::rats({0, 1})}, {otb::test::rats({0, 1}), otb::test::rats({1, 0})}};
  CHECK_FALSE(is_one_generic(swap));

  // invariance under row operations and column permutations
  auto n = net_of("braid-a3");
  auto g = multiplication_matrix(n.a, n.flats, n.cert);
  DeterministicRng rng(31);
  for (int t = 0; t < 5; ++t) {
    Rational a = rng.small_rational(5), b = rng.small_rational(5), c = rng.small_rational(5), d = rng.small_rational(5);
    if (is_zero(a * d - b * c)) continue;
    MultiplicationMatrix h = g;
    for (std::size_t j = 0; j < 3; ++j)
      for (std::size_t k = 0; k < g.d; ++k) {
        h.entries[0][j][k] = a * g.entries[0][j][k] + b * g.entries[1][j][k];
        h.entries[1][j][k] = c * g.entries[0][j][k] + d * g.entries[1][j][k];
      }
    std::swap(h.entries[0][0], h.entries[0][2]);
    std::swap(h.entries[1][0], h.entries[1][2]);
    CHECK(is_one_generic(h));
  }
}

TEST_CASE("minor membership rejects non-members") {
  auto n = net_of("braid-a3");
  auto p = ot_presentation(n.a);
  auto y1 = MPoly::variable(6, 0);
  CHECK_FALSE(membership(p, y1 * y1));
}

TEST_CASE("Eagon-Northcott numbers") {
  MultinetCertificate c;
  c.k = 4;
  c.m = 3;
  c.weights.assign(12, 1);
  c.blocks = {{0, 1, 2}, {3, 4, 5}, {6, 7, 8}, {9, 10, 11}};
  c.base_locus.assign(9, 0);
  c.n.assign(9, 1);
  auto en = en_prediction(c, 12);
  CHECK(en.b == 6);
  CHECK(en.betti[0] == 15);
  CHECK(en.betti[1] == 40);
  c.k = 3;
  c.m = 4;
  CHECK_THROWS_AS(en_prediction(c, 12), InputError);
}

TEST_CASE("weighted multinets are rejected") {
  auto a = builtin_arrangement("b3");
  auto flats = compute_flats(a);
  MultinetSearchOptions o;
  o.max_weight = 2;
  auto ms = search_multinets(a, flats, o);
  REQUIRE(!ms.empty());
  CHECK_THROWS_AS(multiplication_matrix(a, flats, ms[0]), InputError);
}
