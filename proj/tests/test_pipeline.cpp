#include <random>

#include "doctest.h"
#include "sklift/errors.hpp"
#include "sklift/exactnum/modp.hpp"
#include "sklift/exactnum/poly.hpp"
#include "sklift/pipeline/pipeline.hpp"

using namespace sklift;

TEST_CASE("residual trace check") {
  CHECK(residual_trace_check(516223, 32486, 483789, 258573).holds);
  CHECK(residual_trace_check(516223, 0, 0, 2).holds);
  CHECK_FALSE(residual_trace_check(516223, 32486, 483789, 258574).holds);
  CHECK(residual_trace_check(516223, 32486, 483789, 0).value == 258573);
}

TEST_CASE("property: trace check agrees with repeated doubling") {
  std::mt19937_64 rng(3);
  for (int it = 0; it < 100; ++it) {
    std::uint64_t p = 1009, a = rng() % 3000, b = rng() % 3000;
    std::uint64_t x = 1, y = 1;
    for (std::uint64_t i = 0; i < a; ++i) x = x * 2 % p;
    for (std::uint64_t i = 0; i < b; ++i) y = y * 2 % p;
    CHECK(residual_trace_check(p, a, b, (x + y) % p).holds);
  }
}

TEST_CASE("reducible branches") {
  auto br = reducible_branches(516223, 54, 451304);
  REQUIRE(br.size() == 2);
  CHECK_FALSE(br[0].admissible);
  CHECK(br[1].admissible);
  CHECK(br[1].a == 32486);
  CHECK(br[1].b == 483789);
  CHECK(br[1].trace == 258573);
  auto br2 = reducible_branches(516223, 54, 451404);
  CHECK(br2[1].a == 32436);
  CHECK(br2[1].b == 483839);
  for (auto& b : br2) CHECK(b.b - b.a + 1 == 451404);
}

TEST_CASE("irreducibility argument") {
  auto r = irreducibility_argument(516223, 54);
  CHECK(r.roots == std::vector<std::uint64_t>{85284, 287487});
  CHECK(r.indices == std::vector<std::uint64_t>{451404});
  CHECK(r.irreducible);
  CHECK(r.conclusion == "no reducible residual representation consistent");
  SUBCASE("regular prime") {
    auto q = irreducibility_argument(7, 12);
    CHECK(q.indices.empty());
    CHECK(q.irreducible);
    CHECK(q.conclusion == "no reducible shape possible at any index");
  }
  SUBCASE("forced match") {
    auto br = reducible_branches(516223, 54, 451304);
    auto q = irreducibility_argument(516223, 54, {451304}, {br[1].trace});
    CHECK_FALSE(q.irreducible);
    CHECK(q.conclusion == "match - argument inconclusive");
  }
  SUBCASE("several indices enumerate every branch") {
    auto q = irreducibility_argument(691, 12);
    CHECK(q.indices == std::vector<std::uint64_t>{12, 200});
    CHECK(q.branches.size() == 4);
  }
}

TEST_CASE("congruence scan") {
  auto s = congruence_scan(54, 516223);
  CHECK(s.pass);
  CHECK(s.conjugates == 4);
  CHECK(congruence_scan(54, 59).pass);
  auto printed = congruence_scan(54, 59, parse_poly(kExampleCharpoly));
  CHECK_FALSE(printed.pass);
  CHECK(printed.p_divides);
  auto t = congruence_scan(12, 691);
  CHECK(t.pass);
  CHECK(t.conjugates == 1);
  // conjugates of a(2) at weight 24 differ by 144 sqrt(144169)
  CHECK_FALSE(congruence_scan(24, 144169).pass);
}

TEST_CASE("check_hypotheses input validation") {
  auto r = check_hypotheses(12, 691, DirichletChar::trivial(), -3);
  CHECK(r.character_required);
  CHECK_FALSE(r.hypotheses_satisfied);
  CHECK_FALSE(r.n.has_value());
  REQUIRE(r.find("character") != nullptr);
  CHECK(r.find("character")->computed == "character required");
  CHECK_THROWS_AS(check_hypotheses(13, 691, DirichletChar::quadratic(-3), -3), DomainError);
  CHECK_THROWS_AS(check_hypotheses(54, 53, DirichletChar::quadratic(-3), -3), DomainError);
  CHECK_THROWS_AS(check_hypotheses(54, 516223, DirichletChar::quadratic(-3), -12), DomainError);
  CHECK_THROWS_AS(check_hypotheses(54, 516221, DirichletChar::quadratic(-3), -3), DomainError);
}

TEST_CASE("check_hypotheses at the weight-54 example") {
  auto r = check_hypotheses(54, 516223, DirichletChar::quadratic(-3), -3);
  REQUIRE(r.m.has_value());
  CHECK(*r.m >= 1);
  CHECK(r.find("p does not divide N D")->pass);
  CHECK(r.find("chi_D(-1) = -1")->pass);
  CHECK(r.find("(-1)^(k-1) D > 0")->pass);
  CHECK(r.find("v(L_alg(1, f, chi)) = 0")->pass);
  CHECK(r.find("v(L_alg(2, f, chi)) = 0")->pass);
  CHECK(r.find("v(L_alg(27, f, chi_D)) = 0")->pass);
  // L(-25, chi_-3) vanishes, so n is infinite
  CHECK_FALSE(r.find("v(L^Sigma(-25, chi)) = 0")->pass);
  CHECK_FALSE(r.n.has_value());
  CHECK_FALSE(r.hypotheses_satisfied);
}

TEST_CASE("check_hypotheses flags an even chi_D") {
  auto r = check_hypotheses(54, 516223, DirichletChar::quadratic(-3), 5);
  CHECK_FALSE(r.find("chi_D(-1) = -1")->pass);
  CHECK_FALSE(r.find("(-1)^(k-1) D > 0")->pass);
  CHECK_FALSE(r.hypotheses_satisfied);
}

TEST_CASE("full example report") {
  auto r = verify_paper_example();
  CHECK(r.find("roots of T(2) charpoly mod p")->pass);
  CHECK(r.find("2^32486 + 2^483789 mod p")->pass);
  CHECK(r.find("disc(g) factorization")->pass);
  CHECK(r.find("irreducibility argument")->pass);
  CHECK(r.find("irreducibility argument at index 451304")->pass);
  CHECK(r.find("congruence scan at p")->pass);
  CHECK(r.find("L_alg(27, f) = 0")->pass);
  CHECK(r.find("m >= 1")->pass);
  CHECK(r.find("L(-25, chi_-3) = -B_{26,chi}/26")->pass);
  // stated values that the computation does not reproduce
  CHECK_FALSE(r.find("charpoly of T(2) on S_54")->pass);
  CHECK_FALSE(r.find("B_451304 mod p")->pass);
  CHECK_FALSE(r.find("irregular indices of p")->pass);
  CHECK_FALSE(r.find("n = 0")->pass);
  CHECK_FALSE(r.all_pass());
  CHECK(!r.notes.empty());
}
