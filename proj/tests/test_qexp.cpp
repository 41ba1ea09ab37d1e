#include <random>

#include "doctest.h"
#include "sklift/level1/level1.hpp"
#include "sklift/qexp/qexp.hpp"

using namespace sklift;

TEST_CASE("eisenstein series") {
  QExpansion e4 = eisenstein(4, 10);
  CHECK(e4[0] == 1);
  CHECK(e4[1] == 240);
  CHECK(e4[2] == 2160);
  CHECK(eisenstein(6, 5)[0] == 1);
  CHECK(eisenstein(6, 5)[1] == -504);
  CHECK_THROWS_AS(eisenstein(5, 10), DomainError);
  CHECK_THROWS_AS(eisenstein(2, 10), DomainError);
  CHECK_THROWS_AS(e4[10], PrecisionError);
}

TEST_CASE("bernoulli numbers") {
  CHECK(bernoulli_number(1) == BigRational(-1, 2));
  CHECK(bernoulli_number(2) == BigRational(1, 6));
  CHECK(bernoulli_number(12) == BigRational(-691, 2730));
  CHECK(bernoulli_number(13) == 0);
}

TEST_CASE("delta") {
  QExpansion d = delta(30);
  CHECK(d[0] == 0);
  CHECK(d[1] == 1);
  CHECK(d[2] == -24);
  CHECK(d[3] == 252);
  CHECK(d == delta_product(30));
  CHECK(d.weight() == 12);
}

TEST_CASE("hecke_t on delta") {
  QExpansion d = delta(40);
  QExpansion t2 = hecke_t(d, 2);
  CHECK(t2.precision() == 20);
  CHECK(t2[1] == -24);
  CHECK(t2 == BigRational(-24) * d.truncate(20));
  QExpansion t3 = hecke_t(d, 3);
  CHECK(t3[1] == 252);
  CHECK(t3 == BigRational(252) * d.truncate(13));
  CHECK(hecke_t(QExpansion::zero(12, 20), 5).is_zero());
  CHECK_THROWS_AS(hecke_t(d, 2, 21), PrecisionError);
}

TEST_CASE("multiplicativity of delta coefficients") {
  QExpansion d = delta(401);
  for (unsigned m = 1; m <= 20; ++m)
    for (unsigned n = 1; n <= 20; ++n) {
      if (std::gcd(m, n) != 1) continue;
      CHECK(d[m * n] == d[m] * d[n]);
    }
}

TEST_CASE("property: Hecke operators commute on random combinations") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<long> dist(-50, 50);
  const std::size_t prec = 300;
  for (int w : {24, 36, 48}) {
    MillerBasis mb = miller_basis(w, prec);
    for (int t = 0; t < 34; ++t) {
      QExpansion f = QExpansion::zero(w, prec);
      for (const auto& b : mb.rows) f = f + BigRational(dist(rng)) * b;
      for (unsigned l1 : {2u, 3u, 5u})
        for (unsigned l2 : {2u, 3u, 5u}) {
          if (l1 >= l2) continue;
          std::size_t out = prec / (l1 * l2);
          auto a = hecke_t(hecke_t(f, l1), l2, out);
          auto b = hecke_t(hecke_t(f, l2), l1, out);
          CHECK(a == b);
        }
    }
  }
}

TEST_CASE("property: series product agrees with the naive product") {
  std::mt19937_64 rng(12);
  std::uniform_int_distribution<long> dist(-1000, 1000);
  for (int t = 0; t < 100; ++t) {
    std::size_t n = 1 + rng() % 120;
    std::vector<BigRational> a(n), b(n);
    for (auto& x : a) x = make_rational(dist(rng), 1 + (rng() % 7));
    for (auto& x : b) x = make_rational(dist(rng), 1 + (rng() % 5));
    QExpansion pa(2, a), pb(4, b);
    QExpansion c = pa * pb;
    CHECK(c.weight() == 6);
    bool ok = true;
    for (std::size_t k = 0; k < n; ++k) {
      BigRational s = 0;
      for (std::size_t i = 0; i <= k; ++i) s += a[i] * b[k - i];
      ok = ok && s == c[k];
    }
    CHECK(ok);
  }
}
