#include "doctest.h"
#include "helpers.hpp"
#include "otb/error.hpp"
#include "otb/orlik_terao.hpp"

using namespace otb;
using otb::test::make;

TEST_CASE("graded pieces") {
  auto braid = ot_presentation(builtin_arrangement("braid-a3"));
  auto g2 = ideal_graded_piece(braid, 2);
  CHECK(g2.ambient_dim == 21);
  CHECK(g2.ideal_dim == 4);
  CHECK(g2.quotient_dim == 17);
  CHECK(g2.standard_monomials.size() == 17);
  CHECK(ideal_graded_piece(braid, 1).ideal_dim == 0);
  for (auto name : {"9_3_1", "9_3_2"}) {
    auto p = ot_presentation(builtin_arrangement(name));
    CHECK(ideal_graded_piece(p, 2).ideal_dim == 9);
    CHECK(quotient_dimension(p, 1) == 9);
    CHECK(quotient_dimension(p, 2) == 36);
  }
}

TEST_CASE("Terao series") {
  auto braid = terao_series(poincare_polynomial(builtin_arrangement("braid-a3")), 5);
  CHECK(braid.h_polynomial == std::vector<long long>{1, 3, 2});
  CHECK(braid.coefficients == std::vector<long long>{1, 6, 17, 34, 57, 86});
  auto nine = terao_series(poincare_polynomial(builtin_arrangement("9_3_2")), 5);
  CHECK(nine.h_polynomial == std::vector<long long>{1, 6, 12});
  CHECK(nine.coefficients == std::vector<long long>{1, 9, 36, 82, 147, 231});
}

TEST_CASE("Hilbert function equals the series on the corpus") {
  for (const auto& name : builtin_names()) {
    CAPTURE(name);
    auto a = builtin_arrangement(name);
    auto dims = quotient_dimensions(ot_presentation(a), 5);
    auto s = terao_series(poincare_polynomial(a), 5);
    for (std::size_t j = 0; j <= 5; ++j) CHECK(static_cast<long long>(dims[j]) == s.coefficients[j]);
  }
}

TEST_CASE("membership by substitution") {
  auto ex = ot_presentation(builtin_arrangement("ex-2-4"));
  auto y = [](std::size_t i) { return MPoly::variable(4, i); };
  CHECK(membership(ex, y(1) * y(2) * y(3) + y(0) * y(2) * y(3) + y(0) * y(1) * y(3) - y(0) * y(1) * y(2)));
  CHECK_FALSE(membership(ex, y(0) * y(0)));
  CHECK_THROWS_AS(membership(ex, y(0) * y(0) + y(1)), InputError);
  for (const auto& name : builtin_names()) {
    auto p = ot_presentation(builtin_arrangement(name));
    for (const auto& g : p.generators) CHECK(membership(p, g));
  }
}

TEST_CASE("Hilbert-Burch minors") {
  for (const auto& name : builtin_names()) {
    CAPTURE(name);
    auto a = builtin_arrangement(name);
    auto hb = hilbert_burch_psi(a);
    const std::size_t d = a.size();
    REQUIRE(hb.psi.size() == d);
    REQUIRE(hb.psi[0].size() == d - 1);
    auto ls = l_forms(a);
    for (std::size_t c = 0; c + 1 < d; ++c) {
      MPoly s(3);
      for (std::size_t r = 0; r < d; ++r) s += hb.psi[r][c] * ls[r];
      CHECK(s.is_zero());
    }
    for (std::size_t i = 0; i < d; ++i) {
      std::vector<std::vector<MPoly>> m;
      for (std::size_t r = 0; r < d; ++r)
        if (r != i) m.push_back(hb.psi[r]);
      CHECK(determinant(m) == ls[i] * Rational(hb.minor_signs[i]));
      CHECK(hb.minor_signs[i] == ((d - 1 - i) % 2 ? -1 : 1));
    }
  }
}

TEST_CASE("Jacobian containment and Euler identity") {
  for (const auto& name : builtin_names()) {
    CAPTURE(name);
    auto a = builtin_arrangement(name);
    auto j = jacobian_containment(a);
    CHECK(j.contained);
    CHECK(j.euler_identity);
    auto ls = l_forms(a);
    auto alpha = a.defining_polynomial();
    for (std::size_t v = 0; v < 3; ++v) {
      MPoly s(3);
      for (std::size_t k = 0; k < a.size(); ++k) s += ls[k] * j.coefficients[v][k];
      CHECK(s == alpha.derivative(v));
    }
  }
}

TEST_CASE("gradient degree") {
  auto braid = builtin_arrangement("braid-a3");
  CHECK(gradient_degree(braid, compute_flats(braid)) == 6);
  auto nine = builtin_arrangement("9_3_1");
  CHECK(gradient_degree(nine, compute_flats(nine)) == 19);
  auto tri = make({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}});
  CHECK(gradient_degree(tri, compute_flats(tri)) == 1);
  for (const auto& name : builtin_names()) {
    auto a = builtin_arrangement(name);
    auto flats = compute_flats(a);
    auto p = poincare_polynomial(a, flats);
    CHECK(gradient_degree(a, flats) == p.coeffs[2] - p.coeffs[1] + 1);
  }
}

TEST_CASE("vanishing orders of the l forms") {
  for (const auto& name : builtin_names()) {
    auto a = builtin_arrangement(name);
    auto flats = compute_flats(a);
    auto orders = l_vanishing_orders(a, flats);
    for (std::size_t p = 0; p < flats.size(); ++p)
      for (std::size_t i = 0; i < a.size(); ++i)
        CHECK(orders[p][i] == flats[p].mu + 1 - (flats[p].contains(i) ? 1 : 0));
  }
}
