#include <random>

#include "doctest.h"
#include "sklift/level1/level1.hpp"
#include "sklift/lfun/dirichlet.hpp"
#include "sklift/lifts/lifts.hpp"

using namespace sklift;

namespace {

KohnenForm kohnen_of_weight(int k, std::size_t prec) {
  auto b = jacobi_cusp_basis(k, prec - 1);
  REQUIRE(b.forms.size() == 1);
  return ez_to_kohnen(b.forms[0]);
}

EulerFactor product_side(const NFElement& a, int k, unsigned long l, int chi) {
  auto dir = dirichlet_euler_factor(l, NFElement(chi * static_cast<long>(l * l)));
  auto e1 = elliptic_euler_factor(a, 2 * k - 2, l, chi, k - 3);
  auto e2 = elliptic_euler_factor(a, 2 * k - 2, l, chi, k - 4);
  return euler_product(euler_product(dir, e1, EulerTag::standard), e2, EulerTag::standard);
}

}  // namespace

TEST_CASE("kronecker symbol") {
  CHECK(kronecker(-3, 2) == -1);
  CHECK(kronecker(-3, 1) == 1);
  CHECK(kronecker(5, 1) == 1);
  CHECK(kronecker(-3, 3) == 0);
  CHECK(kronecker(-4, 3) == -1);
  CHECK(kronecker(-4, 2) == 0);
  CHECK(kronecker(8, 7) == 1);
  std::mt19937_64 rng(1);
  std::uniform_int_distribution<unsigned long> d(1, 400);
  for (long D : {-3L, -4L, 5L, -7L, 8L, 12L, -15L}) {
    for (int it = 0; it < 100; ++it) {
      unsigned long a = d(rng), b = d(rng);
      CHECK(kronecker(D, a * b) == kronecker(D, a) * kronecker(D, b));
    }
  }
}

TEST_CASE("shimura lift basics") {
  auto g = kohnen_of_weight(10, 1300);
  auto L = shimura_lift(g, -3, 10, 20);
  CHECK(L.weight() == 18);
  CHECK(L[1] == g[3]);
  CHECK(L[0] == 0);
  KohnenForm z{10, std::vector<BigRational>(400, BigRational(0))};
  CHECK(shimura_lift(z, -3, 10, 10).is_zero());
  CHECK_THROWS_AS(shimura_lift(g, -3, 10, 40), PrecisionError);
  CHECK_THROWS_AS(shimura_lift(g, -12, 10, 5), DomainError);
  CHECK_THROWS_AS(shimura_lift(g, 5, 10, 5), DomainError);
}

TEST_CASE("shimura lift of phi10 is the weight-18 newform") {
  auto g = kohnen_of_weight(10, 1300);
  auto L = shimura_lift(g, -3, 10, 20);
  auto f = newform(18);
  REQUIRE(!is_zero(f.expansion[1]));
  REQUIRE(sgn(L[1]) != 0);
  for (std::size_t n = 1; n < 20; ++n) CHECK(NFElement(L[n]) * f.expansion[1] == NFElement(L[1]) * f.expansion[n]);
}

TEST_CASE("shimura lift is Hecke equivariant") {
  for (int k : {10, 12, 14}) {
    const int w = 2 * k - 2;
    REQUIRE(dim_cusp(w) == 1);
    auto f = newform(w);
    auto g = kohnen_of_weight(k, 1602);
    for (long D : {-3L, -4L}) {
      auto L = shimura_lift(g, D, k, 21);
      CHECK(!L.is_zero());
      for (unsigned long l : {2UL, 3UL}) {
        BigRational a = hecke_eigenvalue(f, l).rational_value();
        auto TL = hecke_t(L, l);
        CHECK(TL == a * L.truncate(TL.precision()));
      }
    }
  }
  // weight 20 would need k = 11: index-1 Jacobi forms of odd weight vanish
  CHECK(jacobi_cusp_basis(11, 10).forms.empty());
}

TEST_CASE("shimura lift is Hecke equivariant at weights 20 and 24") {
  // odd k: plus-space forms built on Gamma0(4), D > 0
  for (int k : {11, 13}) {
    for (long D : {5L, 8L}) {
      const std::size_t need = static_cast<std::size_t>(D) * 26 * 26 + 2;
      auto basis = kohnen_cusp_basis(k, need);
      REQUIRE(basis.size() == static_cast<std::size_t>(dim_cusp(2 * k - 2)));
      for (const auto& g : basis) {
        for (auto [l, P] : {std::pair<unsigned long, std::size_t>{2, 13}, {3, 9}}) {
          auto lhs = shimura_lift(kohnen_hecke(g, l), D, k, P);
          auto L = shimura_lift(g, D, k, l * P);
          auto rhs = hecke_t(L, l);
          REQUIRE(rhs.precision() == P);
          CHECK(lhs == rhs);
          CHECK(!L.is_zero());
        }
      }
    }
  }
  CHECK_THROWS_AS(shimura_lift(kohnen_cusp_basis(11, 100)[0], -3, 11, 3), DomainError);
}

TEST_CASE("maass lift coefficients") {
  for (int k : {10, 12}) {
    auto g = kohnen_of_weight(k, 145);
    auto F = maass_lift(g, k, 6);
    CHECK(F.at(1, 1, 1) == g[3]);
    CHECK(F.at(2, 2, 2) == g[12] + BigRational(ipow(BigInt(2), k - 1)) * g[3]);
    CHECK(F.at(1, 0, 1) == g[4]);
    CHECK(F.at(0, 0, 3) == 0);
    CHECK(maass_check(F).empty());
  }
  auto g = kohnen_of_weight(10, 100);
  CHECK_THROWS_AS(maass_lift(g, 10, 6), PrecisionError);
}

TEST_CASE("V_m and Fourier-Jacobi coefficients") {
  auto b = jacobi_cusp_basis(10, 150);
  const auto& phi = b.forms[0];
  auto v1 = v_operator(phi, 1, 6);
  for (auto& [nr, val] : v1.c) CHECK(val == phi.c(nr.first, nr.second));
  JacobiForm1 zero{10, std::vector<BigRational>(151, BigRational(0))};
  for (auto& [nr, val] : v_operator(zero, 3, 5).c) CHECK(val == 0);
  auto F = maass_lift(ez_to_kohnen(phi), 10, 6);
  for (unsigned long m = 1; m <= 6; ++m) {
    auto V = v_operator(phi, m, m <= 4 ? 5 : 4);
    auto FJ = fourier_jacobi(F, m, m <= 4 ? 5 : 4);
    CHECK(V.c == FJ.c);
    CHECK(V.index == m);
  }
  CHECK_THROWS_AS(v_operator(phi, 0, 3), DomainError);
}

TEST_CASE("spinor Euler factor") {
  auto f = newform(18);
  NFElement a = hecke_eigenvalue(f, 2);
  auto sp = spinor_euler_factor(a, 10, 2);
  CHECK(sp.degree() == 4);
  CHECK(sp.coeffs[0] == NFElement(1));
  CHECK(sp.coeffs[1] == -(NFElement(512 + 256) + a));
  CHECK(sp.coeffs[1] == NFElement(-240));
  CHECK(sp.coeffs[4] == NFElement(ipow(BigInt(2), 4 * 10 - 6)));
  // zeta(s-k+1) zeta(s-k+2) L(s,f) at x = l^{-s}
  std::mt19937_64 rng(2);
  std::uniform_int_distribution<long> d(-1000, 1000);
  for (int it = 0; it < 100; ++it) {
    int k = 4 + 2 * (it % 12);
    unsigned long l = std::vector<unsigned long>{2, 3, 5, 7}[it % 4];
    NFElement x = NFElement(make_rational(d(rng), 997));
    auto s = spinor_euler_factor(x, k, l);
    auto z1 = dirichlet_euler_factor(l, NFElement(ipow(BigInt(l), k - 1)));
    auto z2 = dirichlet_euler_factor(l, NFElement(ipow(BigInt(l), k - 2)));
    auto e = elliptic_euler_factor(x, 2 * k - 2, l, 1, 0);
    CHECK(euler_product(euler_product(z1, z2, EulerTag::spinor), e, EulerTag::spinor) == s);
    CHECK(s.coeffs[4] == NFElement(ipow(BigInt(l), 4 * k - 6)));
  }
}

TEST_CASE("standard Euler factor factorization") {
  auto chi3 = DirichletChar::quadratic(-3);
  for (int k : {10, 28}) {
    auto f = newform(2 * k - 2);
    for (unsigned long l : {2UL, 5UL}) {
      NFElement a = hecke_eigenvalue(f, l);
      for (int chi : {chi3(static_cast<long>(l)), 1, -1}) {
        auto st = standard_euler_factor(a, k, l, chi);
        CHECK(st.degree() == 5);
        CHECK(st.coeffs[0] == NFElement(1));
        CHECK(!is_zero(st.coeffs[5]));
        CHECK(st == product_side(a, k, l, chi));
      }
    }
  }
  auto st0 = standard_euler_factor(NFElement(7), 10, 3, 0);
  for (int i = 1; i <= 5; ++i) CHECK(is_zero(st0.coeffs[i]));
  std::mt19937_64 rng(4);
  std::uniform_int_distribution<long> d(-5000, 5000);
  for (int it = 0; it < 120; ++it) {
    int k = 6 + (it % 20);
    unsigned long l = std::vector<unsigned long>{2, 3, 5, 7, 11}[it % 5];
    int chi = static_cast<int>(it % 3) - 1;
    NFElement a(make_rational(d(rng), 1 + it));
    CHECK(standard_euler_factor(a, k, l, chi) == product_side(a, k, l, chi));
  }
  CHECK_THROWS_AS(standard_euler_factor(NFElement(1), 10, 4, 1), DomainError);
}
