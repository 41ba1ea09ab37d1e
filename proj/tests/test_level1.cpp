#include "doctest.h"
#include "sklift/level1/level1.hpp"

using namespace sklift;

namespace {
const char* kHeckeG =
    "x^4 + 68476320*x^3 - 19584715019010048*x^2 - 1083312724663489297121280*x + "
    "39446133467662904714689328971776";
}

TEST_CASE("dim_cusp") {
  CHECK(dim_cusp(12) == 1);
  CHECK(dim_cusp(2) == 0);
  CHECK(dim_cusp(54) == 4);
  CHECK(dim_cusp(13) == 0);
  CHECK(dim_cusp(26) == 1);
  CHECK(dim_cusp(24) == 2);
}

TEST_CASE("dim_cusp equals Miller basis size") {
  for (int w = 0; w <= 60; w += 2) {
    auto mb = miller_basis(w, dim_cusp(w) + 2);
    CHECK(static_cast<int>(mb.rows.size()) == dim_cusp(w));
  }
}

TEST_CASE("Miller basis echelon and integrality") {
  auto mb12 = miller_basis(12, 20);
  REQUIRE(mb12.rows.size() == 1);
  CHECK(mb12.rows[0] == delta(20));
  auto mb = miller_basis(54, 40);
  REQUIRE(mb.rows.size() == 4);
  CHECK(mb.rows[0][1] == 1);
  CHECK(mb.rows[0][2] == 0);
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = 1; j <= 4; ++j) CHECK(mb.rows[i][j] == (i + 1 == j ? 1 : 0));
    for (const auto& c : mb.rows[i].coeffs()) CHECK(c.get_den() == 1);
  }
  CHECK_THROWS_AS(miller_basis(54, 4), PrecisionError);
}

TEST_CASE("hecke matrices") {
  CHECK(hecke_matrix(12, 2, 10)(0, 0) == -24);
  CHECK(hecke_matrix(12, 3, 10)(0, 0) == 252);
  QMatrix t2 = hecke_matrix(54, 2, 12);
  CHECK(charpoly(t2) == parse_poly(kHeckeG));
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) CHECK(t2(i, j).get_den() == 1);
  CHECK_THROWS_AS(hecke_matrix(54, 2, 9), PrecisionError);
}

TEST_CASE("T(2) and T(3) commute for weights 12..54") {
  for (int w = 12; w <= 54; w += 2) {
    std::size_t d = dim_cusp(w);
    if (d == 0) continue;
    MillerBasis mb = miller_basis(w, 3 * (d + 1));
    QMatrix a = hecke_matrix(mb, 2), b = hecke_matrix(mb, 3);
    CHECK(a * b == b * a);
  }
}

TEST_CASE("newform at weight 12 and 18") {
  auto f = newform(12);
  CHECK(f.expansion[1] == NFElement(1));
  CHECK(f.expansion[2] == NFElement(-24));
  CHECK(newform(18).expansion[2] == NFElement(-528));
  CHECK(newform(22).expansion[3] == NFElement(-128844));
}

TEST_CASE("newform at weight 54") {
  auto f = newform(54);
  NFElement a = NFElement::generator(f.field);
  CHECK(f.expansion[1] == NFElement(1));
  CHECK(f.expansion[2] == a);
  CHECK(f.charpoly == parse_poly(kHeckeG));
  // Hecke recursion at 2 and eigenvalue consistency.
  CHECK(f.expansion[4] == a * a - NFElement(ipow(BigInt(2), 53)));
  for (unsigned long l : {3ul, 5ul, 7ul}) CHECK(hecke_eigenvalue(f, l) == f.expansion[l]);
  // Multiplicativity.
  CHECK(f.expansion[6] == f.expansion[2] * f.expansion[3]);
  CHECK(f.expansion[15] == f.expansion[3] * f.expansion[5]);
  // Degree-1 primes above 516223.
  std::vector<std::uint64_t> red;
  for (std::uint64_t r : roots_mod_p(f.charpoly, 516223))
    red.push_back(nf_reduce_deg1(f.expansion[2], 516223, r).residue);
  CHECK(red == std::vector<std::uint64_t>{85284, 287487});
}
