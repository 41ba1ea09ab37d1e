#include <filesystem>
#include <string>
#include <unistd.h>

#include "doctest.h"
#include "json.hpp"
#include "sklift/sklift.h"

using nlohmann::json;
namespace fs = std::filesystem;

namespace {

struct Ctx {
  fs::path dir;
  sklift_context* ctx;
  Ctx() {
    dir = fs::temp_directory_path() / ("sklift-capi-" + std::to_string(::getpid()));
    fs::remove_all(dir);
    ctx = sklift_context_new(dir.c_str());
  }
  ~Ctx() {
    sklift_context_free(ctx);
    fs::remove_all(dir);
  }
};

json payload(sklift_record* r) { return json::parse(sklift_record_text(r))["payload"]; }

}  // namespace

TEST_CASE("version and null handling") {
  CHECK(std::string(sklift_version()) == "1.0.0");
  sklift_record* r = nullptr;
  CHECK(sklift_basis(nullptr, 12, 5, &r) == SKLIFT_DOMAIN_ERROR);
  CHECK(r == nullptr);
  CHECK(std::string(sklift_record_text(nullptr)).empty());
  CHECK(sklift_record_passed(nullptr) == -1);
  sklift_record_free(nullptr);
  sklift_context_free(nullptr);
}

TEST_CASE("hecke matrix and charpoly") {
  Ctx c;
  sklift_record* r = nullptr;
  REQUIRE(sklift_hecke(c.ctx, 12, 2, 0, &r) == SKLIFT_OK);
  CHECK(std::string(sklift_record_kind(r)) == "matrix");
  CHECK(payload(r)["charpoly"] == "x + 24");
  std::string cold = sklift_record_text(r);
  sklift_record_free(r);
  REQUIRE(sklift_hecke(c.ctx, 12, 2, 0, &r) == SKLIFT_OK);
  CHECK(std::string(sklift_record_text(r)) == cold);  // from the cache
  sklift_record_free(r);
  REQUIRE(sklift_hecke(c.ctx, 24, 2, 0, &r) == SKLIFT_OK);
  CHECK(payload(r)["charpoly"] == "x^2 - 1080*x - 20468736");
  sklift_record_free(r);
  bool any = false;
  for (const auto& e : fs::directory_iterator(c.dir)) any = any || e.path().extension() == ".json";
  CHECK(any);
}

TEST_CASE("errors map to statuses and error records") {
  Ctx c;
  sklift_record* r = nullptr;
  CHECK(sklift_newform(c.ctx, 13, &r) == SKLIFT_DOMAIN_ERROR);
  REQUIRE(r != nullptr);
  CHECK(std::string(sklift_record_kind(r)) == "error");
  CHECK(payload(r)["exit_code"] == "2");
  CHECK(std::string(sklift_context_last_error(c.ctx)).size() > 0);
  sklift_record_free(r);
  CHECK(sklift_hecke(c.ctx, 24, 2, 3, &r) == SKLIFT_PRECISION_ERROR);
  CHECK(payload(r)["type"] == "precision");
  sklift_record_free(r);
  CHECK(sklift_bernoulli(c.ctx, 36, 2, 0, &r) == SKLIFT_DOMAIN_ERROR);
  sklift_record_free(r);
  CHECK(sklift_basis(c.ctx, 12, 5, nullptr) == SKLIFT_DOMAIN_ERROR);
  // a successful call clears the message
  REQUIRE(sklift_basis(c.ctx, 12, 5, &r) == SKLIFT_OK);
  CHECK(std::string(sklift_context_last_error(c.ctx)).empty());
  sklift_record_free(r);
}

TEST_CASE("bernoulli") {
  Ctx c;
  sklift_record* r = nullptr;
  REQUIRE(sklift_bernoulli(c.ctx, 37, 0, 1, &r) == SKLIFT_OK);
  CHECK(payload(r)["irregular_indices"] == json::array({"32"}));
  sklift_record_free(r);
  REQUIRE(sklift_bernoulli(c.ctx, 37, 32, 0, &r) == SKLIFT_OK);
  CHECK(payload(r)["residue"] == "0");
  sklift_record_free(r);
}

TEST_CASE("forms and lifts") {
  Ctx c;
  sklift_record* r = nullptr;
  REQUIRE(sklift_newform(c.ctx, 18, &r) == SKLIFT_OK);
  CHECK(payload(r)["charpoly"] == "x + 528");
  sklift_record_free(r);
  REQUIRE(sklift_jacobi(c.ctx, 10, 20, &r) == SKLIFT_OK);
  CHECK(payload(r)["dimension"] == "1");
  CHECK(payload(r)["forms"][0]["c(-N)"][3] == "1");
  sklift_record_free(r);
  REQUIRE(sklift_kohnen(c.ctx, 10, 20, &r) == SKLIFT_OK);
  CHECK(payload(r)["of"] == "kohnen");
  sklift_record_free(r);
  REQUIRE(sklift_shimura(c.ctx, 10, -3, 8, 0, &r) == SKLIFT_OK);
  CHECK(std::string(sklift_record_kind(r)) == "q-expansion");
  sklift_record_free(r);
  CHECK(sklift_shimura(c.ctx, 10, 5, 8, 0, &r) == SKLIFT_DOMAIN_ERROR);
  sklift_record_free(r);
  REQUIRE(sklift_sk_lift(c.ctx, 10, 3, 0, &r) == SKLIFT_OK);
  CHECK(sklift_record_passed(r) == 1);
  CHECK(payload(r)["maass_check"]["pass"] == true);
  sklift_record_free(r);
  REQUIRE(sklift_siegel_hecke(c.ctx, 10, 2, 4, 0, &r) == SKLIFT_OK);
  // 2^9 + 2^8 + a_f(2) with a_f(2) = -528
  CHECK(payload(r)["lambda"] == "240");
  CHECK(sklift_record_passed(r) == 1);
  sklift_record_free(r);
  CHECK(sklift_sk_lift(c.ctx, 10, 3, 4, &r) == SKLIFT_DOMAIN_ERROR);
  sklift_record_free(r);
}

TEST_CASE("algebraic L-values") {
  Ctx c;
  sklift_record* r = nullptr;
  REQUIRE(sklift_l_alg(c.ctx, 12, 6, 1, 691, &r) == SKLIFT_OK);
  CHECK(payload(r)["zero"] == false);
  sklift_record_free(r);
  REQUIRE(sklift_l_alg(c.ctx, 22, 11, 1, 0, &r) == SKLIFT_OK);
  CHECK(payload(r)["zero"] == true);
  sklift_record_free(r);
  CHECK(sklift_l_alg(c.ctx, 12, 12, 1, 0, &r) == SKLIFT_DOMAIN_ERROR);
  sklift_record_free(r);
}

TEST_CASE("record parse") {
  Ctx c;
  sklift_record *r = nullptr, *q = nullptr;
  REQUIRE(sklift_basis(c.ctx, 16, 6, &r) == SKLIFT_OK);
  REQUIRE(sklift_record_parse(c.ctx, sklift_record_text(r), &q) == SKLIFT_OK);
  CHECK(std::string(sklift_record_text(q)) == sklift_record_text(r));
  sklift_record_free(q);
  CHECK(sklift_record_parse(c.ctx, "{}", &q) == SKLIFT_DOMAIN_ERROR);
  sklift_record_free(q);
  sklift_record_free(r);
}

TEST_CASE("hypotheses probe") {
  Ctx c;
  sklift_record* r = nullptr;
  CHECK(sklift_check_hypotheses(c.ctx, 12, 691, 1, -3, &r) == SKLIFT_CHECK_FAILED);
  CHECK(std::string(sklift_record_kind(r)) == "report");
  CHECK(payload(r)["character_required"] == true);
  CHECK(sklift_record_passed(r) == 0);
  sklift_record_free(r);
}
