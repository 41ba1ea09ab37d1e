#include <numeric>
#include <random>
#include <set>

#include "doctest.h"
#include "sklift/exactnum/arith.hpp"
#include "sklift/level1/level1.hpp"
#include "sklift/lifts/lifts.hpp"
#include "sklift/siegel/siegel.hpp"

using namespace sklift;

namespace {

KohnenForm lift_input(int k, std::size_t bound) {
  auto b = jacobi_cusp_basis(k, 4 * bound * bound + 1);
  REQUIRE(b.forms.size() == 1);
  return ez_to_kohnen(b.forms[0]);
}

// classical closed form of the genus-2 T(l) coefficients
BigRational t_closed(const SiegelExpansion& F, long l, long n, long r, long m) {
  const int k = F.weight();
  BigRational tot = F.at(l * n, l * r, l * m);
  BigRational mid = 0;
  if (m % l == 0) mid += F.at(l * n, r, m / l);
  for (long j = 0; j < l; ++j) {
    long q = n + j * r + j * j * m;
    if (q % l == 0) mid += F.at(q / l, r + 2 * j * m, l * m);
  }
  tot += BigRational(ipow(BigInt(l), k - 2)) * mid;
  if (n % l == 0 && r % l == 0 && m % l == 0) tot += BigRational(ipow(BigInt(l), 2 * k - 3)) * F.at(n / l, r / l, m / l);
  return tot;
}

SiegelExpansion random_expansion(int k, std::size_t bound, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> d(-50, 50);
  SiegelExpansion F(k, bound);
  for (auto& t : siegel_classes(bound)) F.set(t.n, t.r, t.m, BigRational(d(rng)));
  return F;
}

}  // namespace

TEST_CASE("reduction of triples") {
  CHECK(reduce_triple(1, 1, 1) == SiegelTriple{1, 1, 1});
  CHECK(reduce_triple(1, -1, 1) == SiegelTriple{1, 1, 1});
  CHECK(reduce_triple(3, 1, 2) == SiegelTriple{2, 1, 3});
  CHECK(reduce_triple(1, 2, 1) == SiegelTriple{0, 0, 1});
  CHECK(reduce_triple(2, 4, 2) == SiegelTriple{0, 0, 2});
  CHECK(reduce_triple(1, 3, 3) == SiegelTriple{1, 1, 1});
  CHECK(reduce_triple(0, 0, 0) == SiegelTriple{0, 0, 0});
  CHECK_THROWS_AS(reduce_triple(1, 3, 1), DomainError);
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<long> d(-6, 6);
  for (int it = 0; it < 300; ++it) {
    long n = std::labs(d(rng)), m = std::labs(d(rng)), r = d(rng);
    if (r * r > 4 * n * m) continue;
    auto t = reduce_triple(n, r, m);
    CHECK(4 * t.n * t.m - t.r * t.r == 4 * n * m - r * r);
    CHECK(std::gcd(std::gcd(t.n, t.r), t.m) == std::gcd(std::gcd(n, std::labs(r)), m));
    CHECK(reduce_triple(m, r, n) == t);
    CHECK(reduce_triple(n, -r, m) == t);
    // x -> x + y
    CHECK(reduce_triple(n, r + 2 * n, n + r + m) == t);
  }
}

TEST_CASE("stored classes cover the box") {
  auto cls = siegel_classes(6);
  std::set<SiegelTriple> s(cls.begin(), cls.end());
  for (long n = 0; n <= 6; ++n)
    for (long m = 0; m <= 6; ++m)
      for (long r = -12; r <= 12; ++r)
        if (r * r <= 4 * n * m) CHECK(s.count(reduce_triple(n, r, m)) == 1);
  for (auto& t : cls) CHECK(reduce_triple(t.n, t.r, t.m) == t);
}

TEST_CASE("coset count for T(l)") {
  CHECK(hecke_cosets(2).size() == 15);
  CHECK(hecke_cosets(3).size() == 40);
  CHECK(hecke_cosets(5).size() == 156);
  CHECK_THROWS_AS(hecke_cosets(4), DomainError);
}

TEST_CASE("Maass relation closure and mutation") {
  for (int k : {10, 12}) {
    auto F = maass_lift(lift_input(k, 6), k, 6);
    CHECK(maass_check(F).empty());
    CHECK(F.at(0, 0, 0) == 0);
    auto G = F;
    G.set(2, 2, 2, F.at(2, 2, 2) + 1);
    auto bad = maass_check(G);
    REQUIRE(bad.size() == 1);
    CHECK(bad[0] == SiegelTriple{2, 2, 2});
  }
  CHECK(maass_check(SiegelExpansion::zero(10, 4)).empty());
}

TEST_CASE("Maass check invariant under index symmetries") {
  auto F = maass_lift(lift_input(10, 5), 10, 5);
  auto G = F;
  G.set(1, 1, 2, F.at(1, 1, 2) + 3);
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<long> d(1, 5), rr(-10, 10);
  int cases = 0;
  while (cases < 150) {
    long n = d(rng), m = d(rng), r = rr(rng);
    if (r * r > 4 * n * m) continue;
    ++cases;
    for (auto* X : {&F, &G}) {
      bool h = maass_relation_holds(*X, n, r, m);
      CHECK(maass_relation_holds(*X, m, r, n) == h);
      CHECK(maass_relation_holds(*X, n, -r, m) == h);
    }
  }
}

TEST_CASE("Siegel Phi operator") {
  auto F = maass_lift(lift_input(10, 4), 10, 4);
  CHECK(phi_operator(F).is_zero());
  CHECK(phi_operator(SiegelExpansion::zero(10, 4)).is_zero());
  auto Z = SiegelExpansion::zero(10, 4);
  Z.set(1, 0, 0, 5);
  auto p = phi_operator(Z);
  CHECK(p[0] == 0);
  CHECK(p[1] == 5);
  CHECK(p.weight() == 10);
}

TEST_CASE("coset formula agrees with the closed form") {
  std::mt19937_64 rng(11);
  for (long l : {2L, 3L}) {
    auto F = random_expansion(10, 6, rng);
    auto TF = hecke_t2(F, l);
    CHECK(TF.bound() == static_cast<std::size_t>(6 / l));
    for (auto& [t, v] : TF.coeffs()) CHECK(v == t_closed(F, l, t.n, t.r, t.m));
  }
}

TEST_CASE("T(l) linearity and zero") {
  auto Z = SiegelExpansion::zero(12, 4);
  CHECK(hecke_t2(Z, 2).is_zero());
  std::mt19937_64 rng(5);
  for (int it = 0; it < 100; ++it) {
    auto F = random_expansion(12, 4, rng), G = random_expansion(12, 4, rng);
    BigRational s = make_rational(it - 50, 7);
    CHECK(hecke_t2(F + s * G, 2) == hecke_t2(F, 2) + s * hecke_t2(G, 2));
  }
  CHECK_THROWS_AS(hecke_t2(Z, 5), PrecisionError);
}

TEST_CASE("Saito-Kurokawa eigenvalues") {
  for (int k : {10, 12}) {
    auto F = maass_lift(lift_input(k, 6), k, 6);
    auto f = newform(2 * k - 2);
    for (unsigned long l : {2UL, 3UL}) {
      auto rep = eigenvalue_extract(F, hecke_t2(F, l));
      NFElement a = hecke_eigenvalue(f, l);
      BigRational expect = BigRational(ipow(BigInt(l), k - 1) + ipow(BigInt(l), k - 2)) + a.rational_value();
      CHECK(rep.lambda == expect);
      CHECK(rep.checked.size() > 5);
      auto sp = spinor_euler_factor(a, k, l);
      CHECK(NFElement(rep.lambda) == -sp.coeffs[1]);
    }
  }
  auto F = maass_lift(lift_input(10, 6), 10, 6);
  CHECK(eigenvalue_extract(F, hecke_t2(F, 2)).lambda == 240);
  CHECK(eigenvalue_extract(F, hecke_t2(F, 3)).lambda == 21960);
}

TEST_CASE("T(2) and T(3) commute on lifts") {
  auto F = maass_lift(lift_input(12, 12), 12, 12);
  auto a = hecke_t2(hecke_t2(F, 2), 3);
  auto b = hecke_t2(hecke_t2(F, 3), 2);
  CHECK(a.bound() == b.bound());
  CHECK(a == b);
  CHECK(!a.is_zero());
}

TEST_CASE("eigenvalue_extract") {
  auto F = maass_lift(lift_input(10, 4), 10, 4);
  CHECK(eigenvalue_extract(F, BigRational(3) * F).lambda == 3);
  CHECK(eigenvalue_extract(F, F).lambda == 1);
  auto G = F;
  G.set(1, 1, 2, F.at(1, 1, 2) * 2);
  CHECK_THROWS_AS(eigenvalue_extract(F, G), CheckFailure);
  CHECK_THROWS_AS(eigenvalue_extract(SiegelExpansion::zero(10, 3), F), DomainError);
}

TEST_CASE("Phi and T(l) on the Eisenstein lift") {
  for (int k : {10, 12}) {
    auto e = eisenstein_jacobi(k, 145);
    KohnenForm g = ez_to_kohnen(e);
    BigRational a0 = -bernoulli_number(k) / BigRational(2 * k);
    auto F = maass_lift(g, k, 6, a0);
    CHECK(maass_check(F).empty());
    auto phiF = phi_operator(F);
    CHECK(phiF == a0 * eisenstein(k, 7));
    for (unsigned long l : {2UL, 3UL}) {
      auto TF = hecke_t2(F, l);
      auto rhs = hecke_t(phiF, l);
      auto lhs = phi_operator(TF).truncate(rhs.precision());
      BigRational one_plus = 1 + BigRational(ipow(BigInt(l), k - 2));
      CHECK(lhs == one_plus * rhs);
      BigRational printed = 1 - qpow(BigRational(l), 2 - k);
      CHECK(!(lhs == printed * rhs));
      // Eisenstein eigenvalue (1 + l^{k-1})(1 + l^{k-2})
      auto rep = eigenvalue_extract(F, TF);
      CHECK(rep.lambda == (1 + BigRational(ipow(BigInt(l), k - 1))) * one_plus);
    }
  }
}
