#include <doctest.h>
#include <json.hpp>

#include "syzdepth/syzdepth.h"

#include <string>
#include <thread>

using Json = nlohmann::json;

namespace {

Json take(char* s) {
  REQUIRE(s != nullptr);
  Json j = Json::parse(s);
  syzd_string_free(s);
  return j;
}

syzd_ideal* parse(const char* text) {
  syzd_ideal* i = nullptr;
  REQUIRE(syzd_ideal_parse(text, &i) == SYZD_OK);
  return i;
}

}  // namespace

TEST_CASE("ideal handles") {
  syzd_ideal* i = parse(R"({"n": 3, "generators": [[1,1,0],[0,1,1],[1,0,1]]})");
  CHECK(syzd_ideal_nvars(i) == 3);
  CHECK(syzd_ideal_ngens(i) == 3);
  CHECK(syzd_ideal_is_stable(i) == 0);
  char* out = nullptr;
  REQUIRE(syzd_ideal_to_json(i, &out) == SYZD_OK);
  CHECK(take(out)["generators"].size() == 3);
  syzd_ideal_free(i);

  syzd_ideal* bad = nullptr;
  CHECK(syzd_ideal_parse(R"({"n": 2, "generators": [[1]]})", &bad) == SYZD_INPUT_ERROR);
  CHECK(bad == nullptr);
  CHECK(std::string(syzd_last_error()).find("length") != std::string::npos);
  CHECK(syzd_ideal_parse("{not json", &bad) == SYZD_INPUT_ERROR);
  CHECK(syzd_ideal_parse(nullptr, &bad) == SYZD_INPUT_ERROR);
  CHECK(syzd_ideal_read("/no/such/file.json", &bad) == SYZD_INPUT_ERROR);
  syzd_ideal_free(nullptr);
}

TEST_CASE("resolutions through the C interface") {
  syzd_ideal* i = parse(R"({"n": 3, "generators": [[1,1,0],[0,1,1],[1,0,1]]})");
  syzd_complex* t = nullptr;
  REQUIRE(syzd_resolve(i, "taylor", 0, &t) == SYZD_OK);
  CHECK(syzd_complex_length(t) == 3);
  CHECK(syzd_complex_rank(t, 2) == 3);
  CHECK(syzd_complex_rank(t, 9) == 0);
  syzd_complex* m = nullptr;
  REQUIRE(syzd_resolve(i, "taylor", 1, &m) == SYZD_OK);
  CHECK(syzd_complex_length(m) == 2);
  CHECK(syzd_complex_rank(m, 2) == 2);

  char* report = nullptr;
  CHECK(syzd_complex_check(m, i, &report) == SYZD_OK);
  CHECK(take(report)["exact"] == true);

  char* out = nullptr;
  REQUIRE(syzd_complex_to_json(t, &out) == SYZD_OK);
  Json j = take(out);
  CHECK(j["ranks"] == Json::array({1, 3, 3, 1}));
  CHECK(j["differentials"][0][0][0]["coeff"].is_string());

  syzd_complex* ek = nullptr;
  CHECK(syzd_resolve(i, "ek", 0, &ek) == SYZD_INPUT_ERROR);
  CHECK(std::string(syzd_last_error()).find("stable") != std::string::npos);
  CHECK(syzd_resolve(i, "cellular", 0, &ek) == SYZD_INPUT_ERROR);
  CHECK(ek == nullptr);
  syzd_complex_free(t);
  syzd_complex_free(m);
  syzd_ideal_free(i);
}

TEST_CASE("initial modules and the oracle flag") {
  syzd_ideal* i = parse(R"({"n": 2, "generators": [[2,0],[1,1],[0,2]]})");
  syzd_complex* t = nullptr;
  REQUIRE(syzd_resolve(i, "taylor", 0, &t) == SYZD_OK);
  char* out = nullptr;
  REQUIRE(syzd_initial(t, 1, "boundary", 1, &out) == SYZD_OK);
  Json j = take(out);
  CHECK(j["equal"] == true);
  CHECK(j["components"][0]["generators"] == Json::parse("[[1,0]]"));
  CHECK(j["components"][2]["generators"].empty());
  CHECK(j["closed_form"] == j["components"]);
  REQUIRE(syzd_initial(t, 1, "lex", 1, &out) == SYZD_OK);
  j = take(out);
  CHECK(j["components"][0]["generators"] == Json::parse("[[0,1]]"));
  CHECK(syzd_initial(t, 1, "grevlex", 0, &out) == SYZD_INPUT_ERROR);
  syzd_complex_free(t);
  syzd_ideal_free(i);
}

TEST_CASE("Stanley depth entry points") {
  syzd_ideal* m4 = parse(R"({"n": 4, "generators": [[1,0,0,0],[0,1,0,0],[0,0,1,0],[0,0,0,1]]})");
  char* out = nullptr;
  REQUIRE(syzd_sdepth_exact(m4, 0, nullptr, 0, &out) == SYZD_OK);
  Json j = take(out);
  CHECK(j["sdepth"] == 2);
  CHECK(j["decomposition_verified"] == true);
  REQUIRE(syzd_sdepth_exact(m4, 1, nullptr, 0, &out) == SYZD_OK);
  CHECK(take(out)["sdepth"] == 0);
  const long box[] = {2, 2, 2, 2};
  REQUIRE(syzd_sdepth_exact(m4, 0, box, 4, &out) == SYZD_OK);
  CHECK(take(out)["sdepth"] == 2);
  CHECK(syzd_sdepth_exact(m4, 0, box, 3, &out) == SYZD_INPUT_ERROR);
  REQUIRE(syzd_partition(m4, 0, 2, nullptr, 0, &out) == SYZD_OK);
  CHECK(take(out)["verified"] == true);
  REQUIRE(syzd_partition(m4, 0, 3, nullptr, 0, &out) == SYZD_OK);
  CHECK(take(out)["exists"] == false);
  REQUIRE(syzd_sdepth_sqfree(m4, &out) == SYZD_OK);
  CHECK(take(out)["value"] == 1);
  syzd_ideal_free(m4);

  syzd_ideal* big = parse(R"({"n": 6, "generators": [[3,3,3,0,0,0],[0,3,3,3,0,0],[0,0,3,3,3,3],[1,1,1,1,1,1]]})");
  CHECK(syzd_sdepth_exact(big, 0, nullptr, 0, &out) == SYZD_LIMIT_ERROR);
  syzd_ideal_free(big);

  syzd_ideal* sq = parse(R"({"n": 2, "generators": [[2,0]]})");
  CHECK(syzd_sdepth_sqfree(sq, &out) == SYZD_INPUT_ERROR);
  syzd_ideal_free(sq);
}

TEST_CASE("filtration bound through the C interface") {
  syzd_ideal* i = parse(R"({"n": 3, "generators": [[1,1,0],[0,1,1],[1,0,1]]})");
  syzd_complex* m = nullptr;
  REQUIRE(syzd_resolve(i, "taylor", 1, &m) == SYZD_OK);
  char* out = nullptr;
  REQUIRE(syzd_sdepth_filtration(m, 1, &out) == SYZD_OK);
  Json j = take(out);
  CHECK(j["bound"] >= 2);
  REQUIRE(syzd_sdepth_filtration(m, 7, &out) == SYZD_OK);
  CHECK(take(out)["all_zero"] == true);
  syzd_complex_free(m);
  syzd_ideal_free(i);
}

TEST_CASE("block structures through the C interface") {
  const size_t a[] = {4, 1};
  char* out = nullptr;
  REQUIRE(syzd_block_structure(7, a, 2, 3, 2, &out) == SYZD_OK);
  Json j = take(out);
  CHECK(j["delta"] == "3/2");
  CHECK(j["axioms_hold"] == true);
  CHECK(syzd_block_structure(7, a, 2, 5, 1, &out) == SYZD_INPUT_ERROR);
  CHECK(syzd_block_structure(7, a, 2, 1, 0, &out) == SYZD_INPUT_ERROR);
  CHECK(syzd_block_structure(7, nullptr, 0, 1, 1, &out) == SYZD_INPUT_ERROR);
}

TEST_CASE("verify jobs") {
  char* out = nullptr;
  REQUIRE(syzd_verify(R"({"theorem": "regular", "trials": 5, "seed": 2})", &out) == SYZD_OK);
  std::string text = out;
  syzd_string_free(out);
  CHECK(text.find("\"status\":\"FAIL\"") == std::string::npos);
  CHECK(text.find("\"theorem\":\"regular\"") != std::string::npos);
  CHECK(syzd_verify(R"({"theorem": "regular", "caps": {"n": 0}})", &out) == SYZD_INPUT_ERROR);
  CHECK(syzd_verify(R"({"trials": 3})", &out) == SYZD_INPUT_ERROR);
  CHECK(syzd_verify(R"({"theorem": "regular", "trials": "many"})", &out) == SYZD_INPUT_ERROR);
}

TEST_CASE("last error is per thread") {
  syzd_ideal* bad = nullptr;
  CHECK(syzd_ideal_parse("[]", &bad) == SYZD_INPUT_ERROR);
  std::string other;
  std::thread([&] { other = syzd_last_error(); }).join();
  CHECK(other.empty());
  CHECK_FALSE(std::string(syzd_last_error()).empty());
  syzd_ideal* ok = parse(R"({"n": 1, "generators": [[1]]})");
  CHECK(std::string(syzd_last_error()).empty());
  syzd_ideal_free(ok);
}
