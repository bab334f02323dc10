#include "doctest.h"
#include "helpers.hpp"
#include "otb/circuits.hpp"
#include "otb/matrix.hpp"

using namespace otb;
using otb::test::make;
using otb::test::rats;

TEST_CASE("braid triples") {
  auto a = builtin_arrangement("braid-a3");
  auto cs = enumerate_circuits(a, 3);
  REQUIRE(cs.size() == 4);
  std::vector<IndexSet> idx;
  for (const auto& c : cs) idx.push_back(c.indices);
  CHECK(idx == std::vector<IndexSet>{{0, 1, 3}, {0, 2, 4}, {1, 2, 5}, {3, 4, 5}});
  CHECK(cs[0].coeffs == rats({1, -1, -1}));
  auto y = [](std::size_t i) { return MPoly::variable(6, i); };
  CHECK(circuit_relation(cs[0], 6) == y(1) * y(3) - y(0) * y(3) - y(0) * y(1));
}

TEST_CASE("four generic lines have one circuit") {
  auto a = builtin_arrangement("ex-2-4");
  auto cs = enumerate_circuits(a, 4);
  REQUIRE(cs.size() == 1);
  CHECK(cs[0].indices == IndexSet{0, 1, 2, 3});
  CHECK(cs[0].coeffs == rats({1, 1, 1, -1}));
  auto y = [](std::size_t i) { return MPoly::variable(4, i); };
  CHECK(circuit_relation(cs[0], 4) == y(1) * y(2) * y(3) + y(0) * y(2) * y(3) + y(0) * y(1) * y(3) - y(0) * y(1) * y(2));
}

TEST_CASE("three independent lines have no circuit") {
  auto a = make({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}});
  CHECK(enumerate_circuits(a, 3).empty());
}

TEST_CASE("circuit invariants on the corpus") {
  for (const auto& name : builtin_names()) {
    CAPTURE(name);
    auto a = builtin_arrangement(name);
    auto flats = compute_flats(a);
    auto cs = enumerate_circuits(a, 4);
    std::size_t triples = 0;
    for (const auto& p : flats) triples += binomial(p.lines.size(), 3);
    std::size_t size3 = 0;
    for (const auto& c : cs) {
      // the dependency holds and every proper subset is independent
      for (std::size_t v = 0; v < 3; ++v) {
        Rational s = 0;
        for (std::size_t j = 0; j < c.indices.size(); ++j) s += c.coeffs[j] * a.form(c.indices[j])[v];
        CHECK(is_zero(s));
      }
      RatMatrix m(3, c.indices.size() - 1);
      for (std::size_t j = 0; j + 1 < c.indices.size(); ++j)
        for (std::size_t v = 0; v < 3; ++v) m(v, j) = a.form(c.indices[j])[v];
      CHECK(rank(m) == c.indices.size() - 1);
      for (const auto& x : c.coeffs) CHECK(!is_zero(x));
      CHECK(sgn(c.coeffs[0]) > 0);
      if (c.indices.size() == 3) {
        ++size3;
        bool on_flat = false;
        for (const auto& p : flats)
          on_flat = on_flat || (p.contains(c.indices[0]) && p.contains(c.indices[1]) && p.contains(c.indices[2]));
        CHECK(on_flat);
      }
      for (const auto& o : cs) {
        if (&o == &c || o.indices.size() >= c.indices.size()) continue;
        bool subset = std::includes(c.indices.begin(), c.indices.end(), o.indices.begin(), o.indices.end());
        CHECK_FALSE(subset);
      }
    }
    CHECK(size3 == triples);
  }
}
