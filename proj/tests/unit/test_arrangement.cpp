#include <algorithm>

#include "doctest.h"
#include "helpers.hpp"
#include "otb/error.hpp"
#include "otb/random.hpp"

using namespace otb;
using otb::test::make;

namespace {

long long double_count_rhs(const std::vector<FlatPoint>& flats) {
  long long s = 0;
  for (const auto& p : flats) s += static_cast<long long>(binomial(static_cast<std::size_t>(p.mu) + 1, 2));
  return s;
}

}  // namespace

TEST_CASE("builtin braid arrangement") {
  auto a = builtin_arrangement("braid-a3");
  REQUIRE(a.size() == 6);
  std::vector<std::string> forms;
  for (std::size_t i = 0; i < a.size(); ++i) forms.push_back(a.form_to_string(i));
  CHECK(forms == std::vector<std::string>{"x", "y", "z", "x - y", "x - z", "y - z"});
  auto flats = compute_flats(a);
  std::vector<std::string> triples;
  std::size_t doubles = 0;
  for (const auto& p : flats) {
    if (p.mu == 2) triples.push_back(point_to_string(p.point));
    if (p.mu == 1) ++doubles;
  }
  std::sort(triples.begin(), triples.end());
  CHECK(triples == std::vector<std::string>{"(0:0:1)", "(0:1:0)", "(1:0:0)", "(1:1:1)"});
  CHECK(doubles == 3);
  CHECK(poincare_polynomial(a).coeffs == std::vector<long long>{1, 6, 11, 6});
}

TEST_CASE("builtin 9_3 arrangements") {
  for (auto name : {"9_3_1", "9_3_2"}) {
    auto a = builtin_arrangement(name);
    auto flats = compute_flats(a);
    std::size_t t = 0, dbl = 0;
    for (const auto& p : flats) (p.mu == 2 ? t : dbl)++;
    CHECK(t == 9);
    CHECK(dbl == 9);
    auto p = poincare_polynomial(a, flats);
    CHECK(p.coeffs == std::vector<long long>{1, 9, 27, 19});
    CHECK(p.projective_factor() == std::vector<long long>{1, 8, 19});
    CHECK(p.to_string() == "1+9t+27t^2+19t^3");
  }
  auto a = builtin_arrangement("9_3_2");
  auto b = make({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 1, 0}, {0, 1, 1}, {1, 0, 3}, {1, 2, 1}, {1, 2, 3}, {2, 3, 3}});
  CHECK(a.forms() == b.forms());
}

TEST_CASE("generic lines") {
  auto a = make({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}});
  auto flats = compute_flats(a);
  CHECK(flats.size() == 3);
  CHECK(poincare_polynomial(a, flats).coeffs == std::vector<long long>{1, 3, 3, 1});
  auto b = make({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 1, 1}, {1, 2, 3}});
  auto fb = compute_flats(b);
  CHECK(fb.size() == 10);
  for (const auto& p : fb) CHECK(p.mu == 1);
}

TEST_CASE("parsing and validation") {
  CHECK_THROWS_WITH_AS(make({{1, 0, 0}, {2, 0, 0}, {0, 1, 0}, {0, 0, 1}}), doctest::Contains("duplicate line"),
                       InputError);
  CHECK_THROWS_WITH_AS(make({{1, 0, 0}, {0, 1, 0}, {1, 1, 0}}), doctest::Contains("non-essential"), InputError);
  CHECK_THROWS_WITH_AS(parse_arrangement(R"({"name": "t", "forms": [[1, 0, 0], ["1/2", 0, 0], [0, 1, 0], [0, 0, 1]]})"),
                       doctest::Contains("duplicate line"), InputError);
}

TEST_CASE("file format round trip") {
  auto a = parse_arrangement(R"({"name": "t", "forms": [["2/3", "-4/3", 0], [0, 1, 0], [0, 0, 1], [1, 1, 1]]})");
  CHECK(a.form_to_string(0) == "x - 2*y");
  auto b = parse_arrangement(arrangement_to_json(a));
  CHECK(a.forms() == b.forms());
  CHECK(b.name() == "t");
  CHECK(parse_arrangement("braid-a3").size() == 6);
  CHECK_THROWS_AS(parse_arrangement(R"({"forms": [[1, "a", 0]]})"), InputError);
  CHECK_THROWS_AS(builtin_arrangement("nope"), InputError);
}

TEST_CASE("lattice identities on the corpus") {
  for (const auto& name : builtin_names()) {
    CAPTURE(name);
    auto a = builtin_arrangement(name);
    auto flats = compute_flats(a);
    CHECK(static_cast<long long>(binomial(a.size(), 2)) == double_count_rhs(flats));
    auto p = poincare_polynomial(a, flats);
    CHECK(p.coeffs[0] == 1);
    CHECK(p.coeffs[1] == static_cast<long long>(a.size()));
    CHECK(p.coeffs[2] == sum_mu(flats));
    CHECK_NOTHROW(p.projective_factor());
    for (const auto& q : flats) CHECK(q.mu == static_cast<int>(q.lines.size()) - 1);
  }
}

TEST_CASE("flats are permutation-equivariant") {
  DeterministicRng rng(3);
  for (const auto& name : builtin_names()) {
    auto a = builtin_arrangement(name);
    std::vector<std::size_t> perm(a.size());
    for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = i;
    for (std::size_t i = perm.size(); i > 1; --i) std::swap(perm[i - 1], perm[rng.integer(0, static_cast<long>(i) - 1)]);
    std::vector<LinearForm> forms(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) forms[perm[i]] = a.form(i);
    Arrangement b(forms, "permuted");
    auto fa = compute_flats(a), fb = compute_flats(b);
    REQUIRE(fa.size() == fb.size());
    for (const auto& p : fa) {
      IndexSet image;
      for (auto l : p.lines) image.push_back(perm[l]);
      std::sort(image.begin(), image.end());
      auto it = std::find_if(fb.begin(), fb.end(), [&](const FlatPoint& q) { return q.point == p.point; });
      REQUIRE(it != fb.end());
      CHECK(it->lines == image);
    }
  }
}
