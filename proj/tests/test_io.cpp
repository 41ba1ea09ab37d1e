#include <filesystem>
#include <functional>
#include <fstream>
#include <random>
#include <thread>
#include <unistd.h>

#include "doctest.h"
#include "sklift/errors.hpp"
#include "sklift/io/cache.hpp"
#include "sklift/io/record.hpp"
#include "sklift/jacobi/jacobi.hpp"
#include "sklift/level1/level1.hpp"

using namespace sklift;
namespace fs = std::filesystem;

namespace {

BigRational rand_q(std::mt19937_64& rng) {
  std::uniform_int_distribution<long> num(-1000000, 1000000), den(1, 999);
  BigRational q = make_rational(num(rng), den(rng));
  if (rng() % 4 == 0) q *= BigRational(BigInt("123456789012345678901234567890"));
  return q;
}

std::vector<BigRational> rand_vec(std::mt19937_64& rng, std::size_t n) {
  std::vector<BigRational> v(n);
  for (auto& x : v) x = rand_q(rng);
  return v;
}

fs::path fresh_dir(const std::string& name) {
  fs::path d = fs::temp_directory_path() / ("sklift-io-" + name + "-" + std::to_string(::getpid()));
  fs::remove_all(d);
  return d;
}

}  // namespace

TEST_CASE("FNV-1a test vectors") {
  CHECK(fnv1a64("") == 0xcbf29ce484222325ULL);
  CHECK(fnv1a64("a") == 0xaf63dc4c8601ec8cULL);
  CHECK(hex64(fnv1a64("foobar")) == "85944171f73967e8");
}

TEST_CASE("property: q-expansion round trip") {
  std::mt19937_64 rng(1);
  for (int it = 0; it < 100; ++it) {
    QExpansion f(2 * static_cast<int>(rng() % 30), rand_vec(rng, rng() % 40));
    auto r = qexp_record(f, {{"seed", std::to_string(it)}});
    auto back = parse_record(serialize(r));
    CHECK(back == r);
    CHECK(qexp_from_record(back) == f);
    CHECK(serialize(back) == serialize(r));
  }
}

TEST_CASE("property: jacobi and kohnen round trip") {
  std::mt19937_64 rng(2);
  for (int it = 0; it < 100; ++it) {
    JacobiForm1 phi{10 + 2 * static_cast<int>(rng() % 10), rand_vec(rng, 1 + rng() % 30)};
    auto back = jacobi_from_record(parse_record(serialize(jacobi_record(phi))));
    CHECK(back.weight == phi.weight);
    CHECK(back.coeffs == phi.coeffs);
    KohnenForm g{10 + 2 * static_cast<int>(rng() % 10), rand_vec(rng, rng() % 30)};
    auto gb = kohnen_from_record(parse_record(serialize(kohnen_record(g))));
    CHECK(gb.k == g.k);
    CHECK(gb.a == g.a);
  }
}

TEST_CASE("property: siegel round trip") {
  std::mt19937_64 rng(3);
  for (int it = 0; it < 100; ++it) {
    const std::size_t B = 1 + rng() % 4;
    SiegelExpansion F(10, B);
    for (const auto& t : siegel_classes(B))
      if (rng() % 3) F.set(t.n, t.r, t.m, rand_q(rng));
    auto r = siegel_record(F);
    auto back = siegel_from_record(parse_record(serialize(r)));
    CHECK(back == F);
  }
  SiegelExpansion G(12, 2);
  G.set(1, 1, 2, 7);
  auto r = siegel_record(G);
  CHECK(r.payload["coefficients"].contains("1,1,2"));
}

TEST_CASE("property: matrix round trip") {
  std::mt19937_64 rng(4);
  for (int it = 0; it < 100; ++it) {
    const std::size_t n = rng() % 6, m = rng() % 6;
    QMatrix M(n, m);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < m; ++j) M(i, j) = rand_q(rng);
    auto back = matrix_from_record(parse_record(serialize(matrix_record(M, 12))));
    CHECK(back.rows() == n);
    CHECK(back.cols() == m);
    CHECK(back == M);
  }
}

TEST_CASE("property: report round trip") {
  std::mt19937_64 rng(5);
  for (int it = 0; it < 100; ++it) {
    DivisibilityReport rep;
    rep.p = rng() % 1000003;
    rep.weight = 2 * static_cast<int>(rng() % 40);
    rep.character = "chi_" + std::to_string(-static_cast<long>(rng() % 50));
    rep.disc = -static_cast<long>(rng() % 100);
    if (rng() % 3) rep.m = static_cast<long>(rng() % 7);
    if (rng() % 3) rep.n = static_cast<long>(rng() % 7);
    rep.character_required = rng() % 2;
    rep.hypotheses_satisfied = rng() % 2;
    for (std::size_t c = rng() % 8; c > 0; --c)
      rep.checks.push_back({"check " + std::to_string(rng()), to_string(rand_q(rng)), to_string(rand_q(rng)),
                            static_cast<bool>(rng() % 2)});
    for (std::size_t c = rng() % 5; c > 0; --c)
      rep.witnesses.push_back({"z" + std::to_string(rng() % 100), to_string(rand_q(rng))});
    rep.notes.push_back("note " + std::to_string(it));
    auto r = report_record(rep);
    auto back = report_from_record(parse_record(serialize(r)));
    CHECK(report_record(back) == r);
    CHECK(back.m == rep.m);
    CHECK(back.n == rep.n);
    CHECK(back.witnesses == rep.witnesses);  // order kept
    CHECK(back.checks.size() == rep.checks.size());
  }
}

TEST_CASE("records never carry JSON numbers in payloads") {
  auto f = newform(24);
  auto r = newform_record(f);
  std::function<void(const nlohmann::json&)> walk = [&](const nlohmann::json& j) {
    CHECK_FALSE(j.is_number());
    if (j.is_structured())
      for (const auto& x : j) walk(x);
  };
  walk(r.payload);
  walk(basis_record(miller_basis(24, 10)).payload);
  CHECK(r.payload["charpoly"] == "x^2 - 1080*x - 20468736");
}

TEST_CASE("tampered records are rejected") {
  auto r = qexp_record(delta(6));
  std::string text = serialize(r);
  auto pos = text.find("-24");
  REQUIRE(pos != std::string::npos);
  text.replace(pos, 3, "-25");
  CHECK_THROWS_AS(parse_record(text), DomainError);
  CHECK_THROWS_AS(parse_record("{ not json"), DomainError);
  CHECK_THROWS_AS(parse_record("{}"), DomainError);
  CHECK_THROWS_AS(qexp_from_record(matrix_record(QMatrix(1, 1), 12)), DomainError);
}

TEST_CASE("error records") {
  auto e = error_record("precision", "need 10 coefficients", 3);
  auto back = parse_record(serialize(e));
  CHECK(back.kind == "error");
  CHECK(back.payload["exit_code"] == "3");
}

TEST_CASE("disk cache") {
  auto dir = fresh_dir("cache");
  DiskCache c(dir);
  CHECK_FALSE(c.get("missing").has_value());
  c.put("k", "hello\n");
  CHECK(c.get("k") == std::string("hello\n"));
  // corrupt entries read as misses
  c.put(DiskCache::key_for({{"x", "1"}}), "garbage");
  CHECK_FALSE(c.get_record({{"x", "1"}}).has_value());
  fs::remove_all(dir);
}

TEST_CASE("cache hit is byte-identical to cold computation") {
  auto dir = fresh_dir("hecke");
  DiskCache c(dir);
  bool hit = true;
  auto cold = cached_hecke_matrix(c, 24, 2, 40, &hit);
  CHECK_FALSE(hit);
  auto warm = cached_hecke_matrix(c, 24, 2, 40, &hit);
  CHECK(hit);
  CHECK(cold == warm);
  nlohmann::json params = {{"op", "hecke_matrix"}, {"weight", "24"}, {"ell", "2"}, {"prec", "40"}};
  CHECK(serialize(matrix_record(cold, 24, params)) == *c.get(DiskCache::key_for(params)));
  CHECK(cold == hecke_matrix(24, 2, 40));
  fs::remove_all(dir);
}

TEST_CASE("concurrent writers leave one complete entry") {
  auto dir = fresh_dir("race");
  DiskCache c(dir);
  std::string big(200000, 'x');
  std::vector<std::thread> ts;
  for (int i = 0; i < 8; ++i)
    ts.emplace_back([&, i] {
      for (int j = 0; j < 20; ++j) c.put("same", big + std::to_string(i % 2));
    });
  for (int i = 0; i < 4; ++i)
    ts.emplace_back([&] {
      for (int j = 0; j < 50; ++j) {
        auto v = c.get("same");
        if (v) CHECK(v->size() == big.size() + 1);
      }
    });
  for (auto& t : ts) t.join();
  auto v = c.get("same");
  REQUIRE(v.has_value());
  CHECK(v->size() == big.size() + 1);
  std::size_t files = 0;
  for (const auto& e : fs::directory_iterator(dir)) {
    (void)e;
    ++files;
  }
  CHECK(files == 1);  // no temp files left behind
  fs::remove_all(dir);
}

TEST_CASE("cache directory from the environment") {
  ::setenv("SKLIFT_CACHE_DIR", "/tmp/sklift-env-test", 1);
  CHECK(DiskCache::from_env().dir() == fs::path("/tmp/sklift-env-test"));
  ::unsetenv("SKLIFT_CACHE_DIR");
  CHECK(DiskCache::from_env().dir() == fs::path(".sklift-cache"));
}
