#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>
#include <string>

#include "lietheory.h"

namespace {

struct Algebra {
  lt_algebra* ptr = nullptr;
  ~Algebra() { lt_algebra_destroy(ptr); }
};

struct Roots {
  lt_root_system* ptr = nullptr;
  ~Roots() { lt_root_system_destroy(ptr); }
};

struct Weyl {
  lt_weyl_group* ptr = nullptr;
  ~Weyl() { lt_weyl_destroy(ptr); }
};

std::string take_string(char* s) {
  std::string out = s ? s : "";
  lt_string_free(s);
  return out;
}

}  // namespace

TEST_CASE("algebra handle lifecycle and queries") {
  Algebra a;
  REQUIRE(lt_algebra_create("su3", &a.ptr) == LT_OK);
  size_t dim = 0;
  CHECK(lt_algebra_dim(a.ptr, &dim) == LT_OK);
  CHECK(dim == 8);
  size_t ambient = 0;
  CHECK(lt_algebra_ambient_size(a.ptr, &ambient) == LT_OK);
  CHECK(ambient == 3);
  int semisimple = 0, compact = 0;
  CHECK(lt_algebra_is_semisimple(a.ptr, &semisimple) == LT_OK);
  CHECK(semisimple == 1);
  CHECK(lt_algebra_is_compact_type(a.ptr, &compact) == LT_OK);
  CHECK(compact == 1);
  int signature[3] = {0, 0, 0};
  CHECK(lt_algebra_killing_signature(a.ptr, signature) == LT_OK);
  CHECK(signature[0] == 0);
  CHECK(signature[1] == 0);
  CHECK(signature[2] == 8);
  size_t center = 99, rank = 0;
  CHECK(lt_algebra_center_dim(a.ptr, &center) == LT_OK);
  CHECK(center == 0);
  CHECK(lt_algebra_rank(a.ptr, &rank) == LT_OK);
  CHECK(rank == 2);
}

TEST_CASE("error codes and messages") {
  lt_algebra* bad = nullptr;
  CHECK(lt_algebra_create("zz9", &bad) == LT_ERROR_ARGUMENT);
  CHECK(std::string(lt_last_error()).find("zz9") != std::string::npos);

  CHECK(lt_algebra_create(nullptr, &bad) == LT_ERROR_ARGUMENT);

  Algebra u2;
  REQUIRE(lt_algebra_create("u2", &u2.ptr) == LT_OK);
  int semisimple = 1, compact = 0;
  CHECK(lt_algebra_is_semisimple(u2.ptr, &semisimple) == LT_OK);
  CHECK(semisimple == 0);
  CHECK(lt_algebra_is_compact_type(u2.ptr, &compact) == LT_ERROR_UNSUPPORTED);
  size_t center = 0;
  CHECK(lt_algebra_center_dim(u2.ptr, &center) == LT_OK);
  CHECK(center == 1);

  Algebra sl;
  REQUIRE(lt_algebra_create("sl2_r", &sl.ptr) == LT_OK);
  lt_root_system* rs = nullptr;
  CHECK(lt_root_system_create(sl.ptr, 1, 0.0, &rs) == LT_ERROR_UNSUPPORTED);
}

TEST_CASE("algebra info json matches the declared schema") {
  Algebra a;
  REQUIRE(lt_algebra_create("su2", &a.ptr) == LT_OK);
  char* text = nullptr;
  REQUIRE(lt_algebra_info_json(a.ptr, &text) == LT_OK);
  nlohmann::json j = nlohmann::json::parse(take_string(text));
  for (const char* key : {"name", "ambient_size", "dim", "basis",
                          "structure_constants", "killing_signature"})
    CHECK(j.contains(key));
  CHECK(j["name"] == "su2");
  CHECK(j["dim"] == 3);
  CHECK(j["basis"].size() == 3);
  CHECK(j["basis"][0].size() == 4);     // 2x2 entries
  CHECK(j["basis"][0][0].size() == 2);  // [re, im]
  CHECK(j["killing_signature"] == nlohmann::json::array({0, 0, 3}));
}

TEST_CASE("root system over the C API") {
  Algebra a;
  REQUIRE(lt_algebra_create("su3", &a.ptr) == LT_OK);
  Roots rs;
  REQUIRE(lt_root_system_create(a.ptr, 1, 0.0, &rs.ptr) == LT_OK);
  size_t rank = 0, roots = 0, positive = 0, simple = 0;
  CHECK(lt_root_system_rank(rs.ptr, &rank) == LT_OK);
  CHECK(rank == 2);
  CHECK(lt_root_system_root_count(rs.ptr, &roots) == LT_OK);
  CHECK(roots == 6);
  CHECK(lt_root_system_positive_count(rs.ptr, &positive) == LT_OK);
  CHECK(positive == 3);
  CHECK(lt_root_system_simple_count(rs.ptr, &simple) == LT_OK);
  CHECK(simple == 2);

  char* text = nullptr;
  REQUIRE(lt_root_system_json(rs.ptr, &text) == LT_OK);
  nlohmann::json j = nlohmann::json::parse(take_string(text));
  for (const char* key : {"rank", "metric", "roots", "positive", "simple",
                          "coroots", "regular_element"})
    CHECK(j.contains(key));
  CHECK(j["metric"] == "trace");
  CHECK(j["roots"].size() == 6);
  CHECK(j["coroots"].size() == 3);
}

TEST_CASE("Dynkin output over the C API") {
  Algebra a;
  REQUIRE(lt_algebra_create("so7", &a.ptr) == LT_OK);
  Roots rs;
  REQUIRE(lt_root_system_create(a.ptr, 1, 0.0, &rs.ptr) == LT_OK);

  char* ascii = nullptr;
  REQUIRE(lt_dynkin_ascii(rs.ptr, &ascii) == LT_OK);
  CHECK(take_string(ascii) == "o - o => o");

  char* labels = nullptr;
  REQUIRE(lt_dynkin_labels(rs.ptr, &labels) == LT_OK);
  CHECK(take_string(labels) == "B3");

  char* text = nullptr;
  REQUIRE(lt_dynkin_json(rs.ptr, &text) == LT_OK);
  nlohmann::json j = nlohmann::json::parse(take_string(text));
  CHECK(j["nodes"].size() == 3);
  CHECK(j["edges"].size() == 2);
  CHECK(j["components"].size() == 1);
  CHECK(j["components"][0]["label"] == "B3");
  bool saw_double = false;
  for (const auto& e : j["edges"])
    if (e["multiplicity"] == 2) {
      saw_double = true;
      CHECK(!e["arrow_to"].is_null());
    }
  CHECK(saw_double);
}

TEST_CASE("Weyl group over the C API") {
  Algebra a;
  REQUIRE(lt_algebra_create("so5", &a.ptr) == LT_OK);
  Roots rs;
  REQUIRE(lt_root_system_create(a.ptr, 1, 0.0, &rs.ptr) == LT_OK);
  Weyl w;
  REQUIRE(lt_weyl_create(rs.ptr, &w.ptr) == LT_OK);
  size_t order = 0;
  CHECK(lt_weyl_order(w.ptr, &order) == LT_OK);
  CHECK(order == 8);

  char* text = nullptr;
  REQUIRE(lt_weyl_json(w.ptr, &text) == LT_OK);
  nlohmann::json j = nlohmann::json::parse(take_string(text));
  CHECK(j["order"] == 8);
  CHECK(j["generators"] == 2);
  CHECK(j["elements"].size() == 8);
  CHECK(j["elements"][0].contains("matrix"));
  CHECK(j["elements"][0].contains("word"));
}

TEST_CASE("orbit report over the C API") {
  Algebra a;
  REQUIRE(lt_algebra_create("su3", &a.ptr) == LT_OK);
  Roots rs;
  REQUIRE(lt_root_system_create(a.ptr, 1, 0.0, &rs.ptr) == LT_OK);
  Weyl w;
  REQUIRE(lt_weyl_create(rs.ptr, &w.ptr) == LT_OK);

  double z[2] = {1.0, 2.0};
  char* text = nullptr;
  REQUIRE(lt_orbit_report_json(rs.ptr, w.ptr, z, z, 2, 4, 9, &text) == LT_OK);
  std::string first = take_string(text);
  nlohmann::json j = nlohmann::json::parse(first);
  for (const char* key : {"Z", "N", "canonical_Z_plus_N", "orbit_dim",
                          "principal_curvatures", "parallel_check"})
    CHECK(j.contains(key));
  CHECK(j["parallel_check"] == "PASS");
  for (const auto& c : j["principal_curvatures"]) {
    CHECK(c["value"] == -1.0);  // N = Z
    CHECK(c["multiplicity"] == 2);
  }

  // determinism: identical call, identical bytes
  char* again = nullptr;
  REQUIRE(lt_orbit_report_json(rs.ptr, w.ptr, z, z, 2, 4, 9, &again) == LT_OK);
  CHECK(take_string(again) == first);

  // a singular base point is a bad-input failure
  double zero[2] = {0.0, 0.0};
  CHECK(lt_orbit_report_json(rs.ptr, w.ptr, zero, z, 2, 2, 9, &text) ==
        LT_ERROR_BAD_INPUT);
  CHECK(std::string(lt_last_error()).find("vanishing") != std::string::npos);

  // wrong coordinate count
  CHECK(lt_orbit_report_json(rs.ptr, w.ptr, z, z, 1, 2, 9, &text) ==
        LT_ERROR_ARGUMENT);
}
