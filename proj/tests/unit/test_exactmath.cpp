#include "doctest.h"
#include "helpers.hpp"
#include "otb/binary_form.hpp"
#include "otb/echelon.hpp"
#include "otb/error.hpp"
#include "otb/fatpoints.hpp"
#include "otb/field.hpp"
#include "otb/matrix.hpp"
#include "otb/mpoly.hpp"
#include "otb/random.hpp"

using namespace otb;
using otb::test::rats;

TEST_CASE("rational parsing and normal form") {
  CHECK(parse_rational("6/4") == Rational(3, 2));
  CHECK(parse_rational("-7") == Rational(-7));
  CHECK(to_string(parse_rational("-6/4")) == "-3/2");
  CHECK(to_string(Rational(0)) == "0");
  CHECK_THROWS_AS(parse_rational("1/0"), InputError);
  CHECK_THROWS_AS(parse_rational("x"), InputError);
  CHECK(binomial(9, 3) == 84);
}

TEST_CASE("rank examples") {
  CHECK(rank(RatMatrix::identity(3)) == 3);
  CHECK(rank(RatMatrix{{1, 2}, {2, 4}}) == 1);
  CHECK(rank(RatMatrix(0, 4)) == 0);
}

TEST_CASE("kernel examples") {
  CHECK(kernel_basis(RatMatrix::identity(2)).cols() == 0);
  auto k = kernel_basis(RatMatrix{{1, 1}});
  REQUIRE(k.cols() == 1);
  CHECK(primitive_normalized(k.column(0)) == rats({1, -1}));
  // columns x1, x2, x3, x1 + x2 + x3
  auto dep = kernel_basis(RatMatrix{{1, 0, 0, 1}, {0, 1, 0, 1}, {0, 0, 1, 1}});
  REQUIRE(dep.cols() == 1);
  CHECK(primitive_normalized(dep.column(0)) == rats({1, 1, 1, -1}));
}

TEST_CASE("rank properties on random matrices") {
  DeterministicRng rng(11);
  for (int trial = 0; trial < 40; ++trial) {
    std::size_t r = 1 + rng.integer(0, 6), c = 1 + rng.integer(0, 6);
    RatMatrix m(r, c);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < c; ++j) m(i, j) = rng.integer(0, 3) == 0 ? Rational(0) : rng.small_rational(5);
    if (trial % 3 == 0 && r > 1)
      for (std::size_t j = 0; j < c; ++j) m(r - 1, j) = m(0, j) * 2;
    const std::size_t rk = rank(m);
    CHECK(rk == rank(m.transpose()));
    auto k = kernel_basis(m);
    CHECK(rk + k.cols() == c);
    auto prod = m * k;
    for (std::size_t i = 0; i < prod.rows(); ++i)
      for (std::size_t j = 0; j < prod.cols(); ++j) CHECK(is_zero(prod(i, j)));
    // the sparse path agrees, exactly and modulo both primes
    std::vector<SparseRow<RationalField>> qrows;
    std::vector<SparseRow<PrimeField>> prows;
    PrimeField f(PrimeField::kSecondPrime);
    for (std::size_t i = 0; i < r; ++i) {
      SparseRow<RationalField> q;
      SparseRow<PrimeField> p;
      for (std::size_t j = 0; j < c; ++j)
        if (!is_zero(m(i, j))) {
          q.emplace_back(static_cast<std::uint32_t>(j), m(i, j));
          p.emplace_back(static_cast<std::uint32_t>(j), f.from(m(i, j)));
        }
      qrows.push_back(q);
      prows.push_back(p);
    }
    CHECK(sparse_rank(RationalField{}, c, qrows) == rk);
    CHECK(sparse_rank(f, c, prows) == rk);
  }
}

TEST_CASE("solve") {
  RatMatrix m{{1, 1}, {1, -1}};
  auto s = solve(m, rats({3, 1}));
  REQUIRE(s);
  CHECK(*s == rats({2, 1}));
  CHECK_FALSE(solve(RatMatrix{{1, 1}, {2, 2}}, rats({1, 3})));
}

TEST_CASE("degree-3 conditions of the pencil divisor on 9_3_1") {
  auto a = builtin_arrangement("9_3_1");
  auto flats = compute_flats(a);
  DivisorClass d{3, {}};
  for (const auto& p : flats) d.mults.push_back(p.mu == 2 ? 1 : 0);
  auto rows = fatpoint_conditions(flats, d);
  RatMatrix m(rows.size(), rows[0].size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < rows[i].size(); ++j) m(i, j) = rows[i][j];
  CHECK(m.rows() == 9);
  CHECK(m.cols() == 10);
  CHECK(rank(m) == 8);
  CHECK(m.cols() - rank(m) == 2);
}

TEST_CASE("polynomial arithmetic") {
  auto x = MPoly::variable(3, 0), y = MPoly::variable(3, 1), z = MPoly::variable(3, 2);
  auto f = (x + y) * (x - y);
  CHECK(f == x * x - y * y);
  CHECK(f.degree() == 2);
  CHECK(f.is_homogeneous());
  CHECK((x + MPoly::constant(3, 1)).is_homogeneous() == false);
  CHECK(f.derivative(0) == x * Rational(2));
  CHECK(f.evaluate(rats({3, 1, 7})) == 8);
  CHECK(x.pow(3).coefficient(Exponents{3, 0, 0}) == 1);
  std::vector<MPoly> img{y, z, x};
  CHECK(f.substitute(img) == y * y - z * z);
  std::vector<std::vector<MPoly>> m{{x, y}, {z, x}};
  CHECK(determinant(m) == x * x - y * z);

  DeterministicRng rng(5);
  auto random_poly = [&] {
    MPoly p(3);
    for (int t = 0; t < 4; ++t) {
      Exponents e{static_cast<std::uint16_t>(rng.integer(0, 2)), static_cast<std::uint16_t>(rng.integer(0, 2)),
                  static_cast<std::uint16_t>(rng.integer(0, 2))};
      p.add_term(e, rng.small_rational(4));
    }
    return p;
  };
  for (int t = 0; t < 20; ++t) {
    auto a = random_poly(), b = random_poly(), c = random_poly();
    CHECK((a + b) * c == a * c + b * c);
    CHECK(a * b == b * a);
  }
}

TEST_CASE("binary gcd") {
  // coefficients of lambda^(b-k) mu^k
  BinaryForm l2({1, 0, 0}), lm({0, 1, 0});
  std::vector<BinaryForm> f1{l2, lm};
  CHECK(binary_gcd(f1) == BinaryForm({1, 0}));
  BinaryForm diff({1, 0, -1}), lin({1, -1});
  std::vector<BinaryForm> f2{diff, lin};
  CHECK(binary_gcd(f2) == BinaryForm({1, -1}));
  std::vector<BinaryForm> f3{BinaryForm({1, 0}), BinaryForm({0, 1})};
  CHECK(binary_gcd(f3).degree() == 0);
  std::vector<BinaryForm> f4{BinaryForm({0, 0}), BinaryForm({0})};
  CHECK_THROWS_WITH_AS(binary_gcd(f4), doctest::Contains("zero pencil"), InputError);
  // common root at infinity: mu^2 and lambda mu
  std::vector<BinaryForm> f5{BinaryForm({0, 0, 1}), BinaryForm({0, 1, 0})};
  CHECK(binary_gcd(f5) == BinaryForm({0, 1}));
}
