#include <cstdlib>
#include <cstring>
#include <string>
#include <vector>

#include "doctest.h"
#include "json.hpp"
#include "yw/yw.h"

using nlohmann::json;

namespace {

// Takes ownership of a returned string and parses it.
json take(char* s) {
  REQUIRE(s != nullptr);
  json j = json::parse(s);
  yw_string_free(s);
  return j;
}

struct Cfg {
  yw_config* c = nullptr;
  Cfg(const char* f, int n, const char* w) { REQUIRE(yw_config_new(f, n, w, &c) == YW_OK); }
  ~Cfg() { yw_config_free(c); }
};

}  // namespace

TEST_CASE("capi: config") {
  Cfg a("A2odd", 4, "L0");
  char* s = nullptr;
  REQUIRE(yw_config_json(a.c, &s) == YW_OK);
  json j = take(s);
  CHECK(j["U"] == 7);
  CHECK(j["V"] == 7);

  yw_config* bad = nullptr;
  CHECK(yw_config_new("E8", 3, "L0", &bad) == YW_E_INVALID);
  CHECK(bad == nullptr);
  CHECK(std::strlen(yw_last_error()) > 0);
  CHECK(yw_config_new("A2even", 2, "L1", &bad) == YW_E_INVALID);
  CHECK(yw_config_new("A2odd", 4, nullptr, &bad) == YW_E_INVALID);
}

TEST_CASE("capi: partitions") {
  yw_partition* p = nullptr;
  REQUIRE(yw_partition_parse(" 20, 13, 11, 7~, 5, 3 ", &p) == YW_OK);
  CHECK(yw_partition_length(p) == 6);
  CHECK(yw_partition_size(p) == 59);
  int v = 0, b = 0;
  REQUIRE(yw_partition_part(p, 3, &v, &b) == YW_OK);
  CHECK(v == 7);
  CHECK(b == 1);
  CHECK(yw_partition_part(p, 6, &v, &b) == YW_E_INVALID);
  char* s = nullptr;
  REQUIRE(yw_partition_to_string(p, &s) == YW_OK);
  CHECK(std::string(s) == "(20,13,11,7~,5,3)");
  yw_string_free(s);
  yw_partition_free(p);

  CHECK(yw_partition_parse("1,2", &p) == YW_E_INVALID);
  CHECK(yw_partition_parse("3,x", &p) == YW_E_INVALID);
  CHECK(yw_last_error()[0] != '\0');
}

TEST_CASE("capi: enumeration and counts") {
  int64_t n = 0;
  REQUIRE(yw_count("overpartitions", nullptr, nullptr, 0, 0, 3, &n) == YW_OK);
  CHECK(n == 8);
  yw_list* l = nullptr;
  REQUIRE(yw_enumerate("overpartitions", nullptr, nullptr, 0, 0, 3, &l) == YW_OK);
  CHECK(yw_list_size(l) == 8);
  char* s = nullptr;
  REQUIRE(yw_list_json(l, &s) == YW_OK);
  json j = take(s);
  CHECK(j.size() == 8);
  yw_partition* first = nullptr;
  REQUIRE(yw_list_get(l, 0, &first) == YW_OK);
  CHECK(yw_partition_size(first) == 3);
  yw_partition_free(first);
  CHECK(yw_list_get(l, 8, &first) == YW_E_INVALID);
  yw_list_free(l);

  Cfg d("D2", 3, "L0");
  std::vector<int64_t> prod(16);
  REQUIRE(yw_product_series(d.c, 15, prod.data(), prod.size()) == YW_OK);
  for (int m = 0; m <= 15; ++m) {
    int64_t a = 0, b = 0;
    REQUIRE(yw_count("ao1", d.c, nullptr, 0, 0, m, &a) == YW_OK);
    REQUIRE(yw_count("ao2", d.c, nullptr, 0, 0, m, &b) == YW_OK);
    CHECK(a == b);
    CHECK(a == prod[m]);
  }
  CHECK(yw_product_series(d.c, 15, prod.data(), 3) == YW_E_INVALID);
  CHECK(yw_count("nonsense", d.c, nullptr, 0, 0, 3, &n) == YW_E_INVALID);
  CHECK(yw_count("ao1", nullptr, nullptr, 0, 0, 3, &n) == YW_E_INVALID);

  int X[] = {1, 3};
  CHECK(yw_count("ao1-classical", nullptr, X, 2, 4, 10, &n) == YW_OK);
  int64_t m2 = 0;
  CHECK(yw_count("ao2-classical", nullptr, X, 2, 4, 10, &m2) == YW_OK);
  CHECK(n == m2);
}

TEST_CASE("capi: contains") {
  Cfg a("A2odd", 4, "L0");
  yw_partition* p = nullptr;
  REQUIRE(yw_partition_parse("33,31,28~,28~,21,21,15,9,7,1", &p) == YW_OK);
  int r = -1;
  REQUIRE(yw_contains("ao1", a.c, nullptr, 0, 0, p, &r) == YW_OK);
  CHECK(r == 1);
  REQUIRE(yw_contains("ao2", a.c, nullptr, 0, 0, p, &r) == YW_OK);
  CHECK(r == 0);
  yw_partition_free(p);
}

TEST_CASE("capi: theta example") {
  Cfg a("A2odd", 4, "L0");
  yw_partition *in = nullptr, *out = nullptr, *back = nullptr;
  REQUIRE(yw_partition_parse("33,31,28~,28~,21,21,15,9,7,1", &in) == YW_OK);
  REQUIRE(yw_theta(a.c, in, &out) == YW_OK);
  char* s = nullptr;
  REQUIRE(yw_partition_to_string(out, &s) == YW_OK);
  CHECK(std::string(s) == "(47,45,42~,28~,15,9,8)");
  yw_string_free(s);
  REQUIRE(yw_theta_inv(a.c, out, &back) == YW_OK);
  REQUIRE(yw_partition_to_string(back, &s) == YW_OK);
  CHECK(std::string(s) == "(33,31,28~,28~,21,21,15,9,7,1)");
  yw_string_free(s);
  yw_partition_free(in);
  yw_partition_free(out);
  yw_partition_free(back);

  REQUIRE(yw_partition_parse("7", &in) == YW_OK);
  CHECK(yw_theta(a.c, in, &out) == YW_E_DOMAIN);
  yw_partition_free(in);
}

TEST_CASE("capi: bijection json") {
  Cfg a("A2odd", 4, "L0");
  char* s = nullptr;
  REQUIRE(yw_bijection_json(a.c, "theta", 1, "33,31,28~,28~,21,21,15,9,7,1", nullptr, 1, &s) == YW_OK);
  json j = take(s);
  CHECK(j["output"] == "(47,45,42~,28~,15,9,8)");
  bool saw = false;
  for (auto& step : j["trace"])
    if (step["step"] == "transpose") saw = step["lambda"] == "(3,3,3,2,1,1,1)";
  CHECK(saw);

  REQUIRE(yw_bijection_json(a.c, "E", 1, "33,31,28~,28,21~,21,15,9,7,1", nullptr, 1, &s) == YW_OK);
  j = take(s);
  CHECK(j["output"] == "(26,24,21~,14~,8,2,1)");
  CHECK(j["diagram"]["t"] == 7);

  REQUIRE(yw_bijection_json(a.c, "F", 1, "19,17,14~,8,2,1", "6,6,4,3", 0, &s) == YW_OK);
  j = take(s);
  CHECK(j["output"] == "(33,31,28,28,21~,21,15,9,7,1)");

  CHECK(yw_bijection_json(a.c, "Z", 1, "1", nullptr, 0, &s) == YW_E_INVALID);
  CHECK(yw_bijection_json(a.c, "theta", 1, "7", nullptr, 0, &s) == YW_E_DOMAIN);
}

TEST_CASE("capi: verify and selfcheck") {
  Cfg d("D2", 3, "L0");
  char* s = nullptr;
  int pass = 0;
  REQUIRE(yw_verify("ao", d.c, 12, 2, &s, &pass) == YW_OK);
  json j = take(s);
  CHECK(pass == 1);
  CHECK(j["identity"] == "ao");
  CHECK(j["family"] == "D2");
  CHECK(j["results"].size() == 13);
  CHECK(j["results"][4]["lhs"] == 2);

  REQUIRE(yw_verify("euler", nullptr, 20, 1, &s, &pass) == YW_OK);
  take(s);
  CHECK(pass == 1);
  CHECK(yw_verify("ao", nullptr, 5, 1, &s, &pass) == YW_E_INVALID);
  CHECK(yw_verify("bogus", d.c, 5, 1, &s, &pass) == YW_E_INVALID);

  REQUIRE(yw_selfcheck(&s, &pass) == YW_OK);
  j = take(s);
  CHECK(pass == 1);
  CHECK(j["checks"].size() > 5);
}

TEST_CASE("capi: resource guard") {
  Cfg b("B1", 3, "L0");
  int64_t n = 0;
  setenv("YW_MAX_SPACE", "100000", 1);
  CHECK(yw_count("ao1", b.c, nullptr, 0, 0, 200, &n) == YW_E_RESOURCE);
  CHECK(std::string(yw_last_error()).find("YW_MAX_SPACE") != std::string::npos);
  setenv("YW_MAX_SPACE", "lots", 1);
  CHECK(yw_count("ao1", b.c, nullptr, 0, 0, 3, &n) == YW_E_INVALID);
  unsetenv("YW_MAX_SPACE");
  CHECK(yw_count("ao1", b.c, nullptr, 0, 0, 3, &n) == YW_OK);
}
