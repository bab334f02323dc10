#include "doctest.h"
#include "helpers.hpp"
#include "otb/koszul_betti.hpp"

using namespace otb;

namespace {

std::vector<long long> expected_k_polynomial(const Arrangement& a) {
  auto h = terao_series(poincare_polynomial(a), 0).h_polynomial;
  std::vector<long long> k = h;
  for (std::size_t e = 0; e + 3 < a.size(); ++e) {
    std::vector<long long> next(k.size() + 1, 0);
    for (std::size_t t = 0; t < k.size(); ++t) {
      next[t] += k[t];
      next[t + 1] -= k[t];
    }
    k = next;
  }
  while (!k.empty() && k.back() == 0) k.pop_back();
  return k;
}

}  // namespace

TEST_CASE("braid Betti table") {
  auto a = builtin_arrangement("braid-a3");
  auto bc = compute_betti(a);
  const auto& t = bc.table;
  CHECK(t.totals() == std::vector<std::size_t>{1, 4, 5, 2});
  CHECK(t.row(1) == std::vector<std::size_t>{0, 4, 2, 0});
  CHECK(t.row(2) == std::vector<std::size_t>{0, 0, 3, 2});
  CHECK(t.regularity() == 2);
  CHECK(t.projective_dimension() == 3);
  CHECK(bc.reduction.dims.back() == 0);
  CHECK(t.to_text() ==
        "       0 1 2 3\n"
        "total: 1 4 5 2\n"
        "    0: 1 - - -\n"
        "    1: - 4 2 -\n"
        "    2: - - 3 2\n");
  CHECK(t.to_json() == R"({"0,0":1,"1,2":4,"2,3":2,"2,4":3,"3,5":2})");
}

TEST_CASE("tor dimensions") {
  auto a = builtin_arrangement("braid-a3");
  CHECK(tor_dimension(a, 2, 3) == 2);
  CHECK(tor_dimension(a, 2, 4) == 3);
  CHECK(tor_dimension(a, 0, 0) == 1);
  CHECK(tor_dimension(a, 1, 1) == 0);
  TorOptions strict;
  strict.verify_regularity = true;
  CHECK(tor_dimension(a, 2, 5, strict) == 0);
}

TEST_CASE("b23 formula") {
  auto braid = b23_formula(builtin_arrangement("braid-a3"));
  CHECK(braid.value == 2);
  CHECK(braid.hypothesis_holds);
  auto nine = b23_formula(builtin_arrangement("9_3_1"));
  CHECK_FALSE(nine.hypothesis_holds);
  CHECK(nine.cubic_generators == 4);
}

TEST_CASE("small tables satisfy the structural identities") {
  for (auto name : {"braid-a3", "ex-2-4", "b3"}) {
    CAPTURE(name);
    auto a = builtin_arrangement(name);
    BettiOptions o;
    o.verify_regularity = true;
    auto bc = compute_betti(a, o);
    const auto& t = bc.table;
    CHECK(t.at(0, 0) == 1);
    for (int i = 1; i <= static_cast<int>(a.size()); ++i) CHECK(t.at(i, i) == 0);
    CHECK(t.regularity() <= 2);
    CHECK(t.projective_dimension() == static_cast<int>(a.size()) - 3);
    CHECK(t.k_polynomial() == expected_k_polynomial(a));
    CHECK(bc.strand3_checked.size() == a.size() + 1);
    auto p = ot_presentation(a);
    CHECK(t.at(1, 2) == ideal_graded_piece(p, 2).ideal_dim);
    CHECK(t.at(1, 3) == b23_formula(a).cubic_generators);
  }
}

TEST_CASE("known tables for b3 and four lines") {
  auto b3 = betti_table(builtin_arrangement("b3"));
  CHECK(b3.totals() == std::vector<std::size_t>{1, 13, 38, 77, 85, 42, 8});
  CHECK(b3.row(1) == std::vector<std::size_t>{0, 13, 22, 1, 0, 0, 0});
  auto ex = betti_table(builtin_arrangement("ex-2-4"));
  CHECK(ex.totals() == std::vector<std::size_t>{1, 1});
  CHECK(ex.at(1, 3) == 1);
}

TEST_CASE("Koszul differentials compose to zero") {
  for (auto name : {"braid-a3", "ex-2-4"}) {
    auto p = ot_presentation(builtin_arrangement(name));
    auto ring = ot_ring<RationalField>(p, 4);
    for (std::size_t i = 0; i <= p.d; ++i)
      for (std::size_t s = 0; s <= 3; ++s) CHECK(KoszulStrand<RationalField>(ring, i, s).composes_to_zero());
  }
  auto p = ot_presentation(builtin_arrangement("9_3_1"));
  auto ring = ot_ring(p, 3, PrimeField());
  for (std::size_t i = 1; i <= 4; ++i) CHECK(KoszulStrand<PrimeField>(ring, i, 1).composes_to_zero());
}

TEST_CASE("linear reduction certificate") {
  auto a = builtin_arrangement("braid-a3");
  auto red = artinian_reduction(a, 20080701);
  CHECK(red.variables == 3);
  CHECK(red.multiplicity == 6);
  long long total = 0;
  for (auto v : red.dims) total += static_cast<long long>(v);
  CHECK(total == 6);
  CHECK(reduced_betti_table(a, red) == betti_table(a, {false, false, 20080701}));
}
