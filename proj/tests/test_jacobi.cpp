#include <map>

#include "doctest.h"
#include "sklift/exactnum/matrix.hpp"
#include "sklift/jacobi/jacobi.hpp"
#include "sklift/level1/level1.hpp"

using namespace sklift;

namespace {

// theta_1(tau,z)^2 eta(tau)^18 as a table (8 * q-exponent, 2 * zeta-exponent) -> coefficient.
// Exponents of q are carried in units of 1/8 and of zeta in units of 1/2.
std::map<std::pair<long, long>, BigInt> theta_eta_product(long nmax) {
  const long qmax = 8 * nmax;
  // theta_1 = sum_n (-1)^n q^{(2n+1)^2/8} zeta^{(2n+1)/2}
  std::map<std::pair<long, long>, BigInt> th;
  for (long n = -20; n <= 20; ++n) {
    long e = (2 * n + 1) * (2 * n + 1);
    if (e > qmax) continue;
    th[{e, 2 * n + 1}] += (n % 2 == 0) ? 1 : -1;
  }
  std::map<std::pair<long, long>, BigInt> th2;
  for (auto& [ka, va] : th)
    for (auto& [kb, vb] : th) {
      long e = ka.first + kb.first;
      if (e <= qmax) th2[{e, ka.second + kb.second}] += va * vb;
    }
  // eta^18 = q^{3/4} prod (1-q^n)^18, in units of q^1
  std::vector<BigInt> eta(nmax + 1, 0);
  eta[0] = 1;
  for (long n = 1; n <= nmax; ++n)
    for (int rep = 0; rep < 18; ++rep)
      for (long i = nmax; i >= n; --i) eta[i] -= eta[i - n];
  std::map<std::pair<long, long>, BigInt> out;
  for (auto& [k, v] : th2)
    for (long j = 0; j <= nmax; ++j) {
      long e = k.first + 6 + 8 * j;
      if (e <= qmax) out[{e, k.second}] += v * eta[j];
    }
  return out;
}

}  // namespace

TEST_CASE("Hurwitz class numbers as Cohen numbers") {
  CHECK(cohen_number(1, 0) == BigRational(-1, 12));
  CHECK(cohen_number(1, 3) == BigRational(1, 3));
  CHECK(cohen_number(1, 4) == BigRational(1, 2));
  CHECK(cohen_number(1, 7) == 1);
  CHECK(cohen_number(1, 8) == 1);
  CHECK(cohen_number(1, 11) == 1);
  CHECK(cohen_number(1, 12) == BigRational(4, 3));
  CHECK(cohen_number(1, 15) == 2);
  CHECK(cohen_number(1, 16) == BigRational(3, 2));
  CHECK(cohen_number(1, 1) == 0);
  CHECK(cohen_number(1, 2) == 0);
}

TEST_CASE("Eisenstein Jacobi series") {
  auto e4 = eisenstein_jacobi(4, 12);
  CHECK(e4.c(0) == 1);
  CHECK(e4.c(-3) == 56);
  CHECK(e4.c(-4) == 126);
  CHECK(e4.c(-7) == 576);
  CHECK(e4.c(-8) == 756);
  CHECK(e4.c(-2) == 0);
  CHECK(e4.c(1, 2) == 1);
  auto e6 = eisenstein_jacobi(6, 12);
  CHECK(e6.c(0) == 1);
  CHECK(e6.c(-3) == -88);
  CHECK(e6.c(-4) == -330);
  CHECK_THROWS_AS(e6.c(-15), PrecisionError);
  CHECK_THROWS_AS(eisenstein_jacobi(5, 4), DomainError);
}

TEST_CASE("generators phi10 and phi12") {
  auto [p10, p12] = jacobi_generators(40);
  std::vector<long> v10{0, 0, 0, 1, -2, 0, 0, -16, 36, 0, 0, 99};
  std::vector<long> v12{0, 0, 0, 1, 10, 0, 0, -88, -132, 0, 0, 1275};
  for (std::size_t N = 0; N < v10.size(); ++N) {
    CHECK(p10.c(-static_cast<long>(N)) == v10[N]);
    CHECK(p12.c(-static_cast<long>(N)) == v12[N]);
  }
  for (auto* f : {&p10, &p12})
    for (const auto& c : f->coeffs) CHECK(c.get_den() == 1);
  CHECK_THROWS_AS(jacobi_generators(3), PrecisionError);
}

TEST_CASE("phi10 equals theta_1^2 eta^18") {
  const long nmax = 9;
  auto prod = theta_eta_product(nmax);
  auto [p10, p12] = jacobi_generators(4 * nmax + 4);
  int checked = 0;
  for (long n = 0; n <= nmax; ++n)
    for (long r = -2 * n; r <= 2 * n; ++r) {
      if (r * r > 4 * n) continue;
      auto it = prod.find({8 * n, 2 * r});
      BigInt expect = it == prod.end() ? BigInt(0) : it->second;
      CHECK(p10.c(n, r) == BigRational(expect));
      ++checked;
    }
  CHECK(checked > 50);
  // no half-integral powers survive
  for (auto& [k, v] : prod)
    if (v != 0) CHECK(k.first % 8 == 0);
}

TEST_CASE("cusp basis dimension matches S_{2k-2}") {
  for (int k = 10; k <= 34; k += 2) {
    auto b = jacobi_cusp_basis(k, 80);
    CHECK(static_cast<int>(b.forms.size()) == dim_cusp(2 * k - 2));
    QMatrix m(b.forms.size(), 81);
    for (std::size_t i = 0; i < b.forms.size(); ++i)
      for (std::size_t j = 0; j <= 80; ++j) m(i, j) = b.forms[i].coeffs[j];
    CHECK(rank(m) == b.forms.size());
    for (auto& f : b.forms) {
      CHECK(f.c(0) == 0);
      CHECK(plus_space_check(ez_to_kohnen(f)).empty());
    }
  }
  auto odd = jacobi_cusp_basis(11, 20);
  CHECK(odd.forms.empty());
  CHECK(odd.note.find("odd-weight vanishing") != std::string::npos);
  CHECK(jacobi_cusp_basis(8, 20).forms.empty());
}

TEST_CASE("plus space violations detected") {
  KohnenForm g{10, {0, 0, 0, 1, 3, 5}};
  auto bad = plus_space_check(g);
  REQUIRE(bad.size() == 1);
  CHECK(bad[0] == 5);
  KohnenForm ok{10, {0, 0, 0, 1, 0, 0, 0, 7, 2}};
  CHECK(plus_space_check(ok).empty());
  CHECK_THROWS_AS(ok[9], PrecisionError);
}

TEST_CASE("Jacobi arithmetic") {
  auto [p10, p12] = jacobi_generators(20);
  auto z = p10 - p10;
  CHECK(z.is_zero());
  auto two = BigRational(2) * p10;
  CHECK(two.c(-4) == -4);
  CHECK_THROWS_AS(p10 + p12, DomainError);
  auto e4 = eisenstein(4, 6);
  auto prod = multiply(e4, p10);
  CHECK(prod.weight == 14);
  CHECK(prod.c(-3) == 1);
  CHECK_THROWS_AS(multiply(eisenstein(4, 2), p10), PrecisionError);
}

TEST_CASE("Cohen Eisenstein series match E_{k,1}") {
  for (int k : {4, 6, 8}) {
    auto H = cohen_eisenstein(k - 1, 30);
    auto E = eisenstein_jacobi(k, 29);
    for (std::size_t N = 0; N < 30; ++N) CHECK(H.a[N] / H.a[0] == E.coeffs[N]);
  }
  CHECK(cohen_eisenstein(2, 5).a[0] == make_rational(1, 120));
}

TEST_CASE("plus space on Gamma0(4) directly") {
  for (int k = 4; k <= 30; ++k) {
    auto b = kohnen_plus_basis(k, 120);
    CHECK(static_cast<int>(b.size()) == dim_modular(2 * k - 2));
    for (const auto& g : b) CHECK(plus_space_check(g).empty());
    auto c = kohnen_cusp_basis(k, 120);
    CHECK(static_cast<int>(c.size()) == dim_cusp(2 * k - 2));
    for (const auto& g : c) CHECK(g[0] == 0);
  }
  CHECK_THROWS_AS(kohnen_plus_basis(2, 10), DomainError);
}

TEST_CASE("plus space cusp part agrees with the Jacobi route") {
  for (int k : {10, 12, 16, 20}) {
    auto c = kohnen_cusp_basis(k, 100);
    auto j = jacobi_cusp_basis(k, 99);
    QMatrix m(c.size() + j.forms.size(), 100);
    for (std::size_t i = 0; i < c.size(); ++i)
      for (std::size_t n = 0; n < 100; ++n) m(i, n) = c[i].a[n];
    for (std::size_t i = 0; i < j.forms.size(); ++i)
      for (std::size_t n = 0; n < 100; ++n) m(c.size() + i, n) = j.forms[i].coeffs[n];
    CHECK(rank(m) == c.size());
  }
}

TEST_CASE("T(p^2) on the plus space") {
  // ez(phi10) is an eigenform with the eigenvalues of the weight-18 newform
  auto g = ez_to_kohnen(jacobi_cusp_basis(10, 400).forms[0]);
  auto f = newform(18);
  for (unsigned long p : {2UL, 3UL, 5UL}) {
    auto Tg = kohnen_hecke(g, p);
    BigRational a = hecke_eigenvalue(f, p).rational_value();
    REQUIRE(Tg.a.size() == (g.a.size() - 1) / (p * p) + 1);
    for (std::size_t n = 0; n < Tg.a.size(); ++n) CHECK(Tg.a[n] == a * g.a[n]);
    CHECK(plus_space_check(Tg).empty());
  }
  // Eisenstein eigenvalue 1 + p^{2l-1}
  auto H = cohen_eisenstein(9, 200);
  auto TH = kohnen_hecke(H, 2);
  for (std::size_t n = 0; n < TH.a.size(); ++n) CHECK(TH.a[n] == BigRational(1 + ipow(BigInt(2), 17)) * H.a[n]);
  CHECK_THROWS_AS(kohnen_hecke(g, 4), DomainError);
}

TEST_CASE("odd k: T(4) on the plus space has the weight 2k-2 charpoly") {
  for (int k : {11, 13, 15}) {
    auto c = kohnen_cusp_basis(k, 800);
    const std::size_t d = c.size();
    REQUIRE(d == static_cast<std::size_t>(dim_cusp(2 * k - 2)));
    // coordinates on the echelon basis are read off at the pivot columns
    std::vector<std::size_t> piv;
    for (const auto& g : c) {
      std::size_t j = 0;
      while (sgn(g.a[j]) == 0) ++j;
      piv.push_back(j);
    }
    QMatrix T(d, d);
    for (std::size_t i = 0; i < d; ++i) {
      auto t = kohnen_hecke(c[i], 2);
      for (std::size_t j = 0; j < d; ++j) T(i, j) = t.a[piv[j]];
      // and the image really is that combination
      for (std::size_t n = 0; n < t.a.size(); ++n) {
        BigRational s = 0;
        for (std::size_t j = 0; j < d; ++j) s += T(i, j) * c[j].a[n];
        CHECK(s == t.a[n]);
      }
    }
    CHECK(charpoly(T) == newform(2 * k - 2).charpoly);
  }
}
