// Exercises the shared library through its C header only.

#include <doctest.h>

#include <bookramsey/bookramsey.h>

#include <cstdio>
#include <filesystem>
#include <json.hpp>
#include <memory>
#include <string>

using nlohmann::json;

namespace {

struct StrFree {
  void operator()(char* s) const { br_string_free(s); }
};
using Str = std::unique_ptr<char, StrFree>;

json take_json(char* s) {
  Str owned(s);
  REQUIRE(s != nullptr);
  return json::parse(s);
}

std::string take(char* s) {
  Str owned(s);
  return s ? std::string(s) : std::string();
}

}  // namespace

TEST_CASE("version and errors") {
  CHECK(std::string(br_version()) == "1.0.0");
  br_graph* g = nullptr;
  CHECK(br_graph_from_graph6("B", &g) == BR_ERR_PARSE);
  CHECK(g == nullptr);
  CHECK(std::string(br_last_error()).find("graph6") != std::string::npos);
  CHECK(br_graph_from_graph6(nullptr, &g) == BR_ERR_ARGUMENT);
  br_string_free(nullptr);
}

TEST_CASE("graphs") {
  br_graph* g = nullptr;
  REQUIRE(br_graph_from_graph6("Bw", &g) == BR_OK);
  CHECK(br_graph_order(g) == 3);
  int edge = 0;
  CHECK(br_graph_has_edge(g, 0, 2, &edge) == BR_OK);
  CHECK(edge == 1);
  CHECK(br_graph_has_edge(g, 0, 3, &edge) == BR_ERR_ARGUMENT);
  char* text = nullptr;
  CHECK(br_graph_to_graph6(g, &text) == BR_OK);
  CHECK(take(text) == "Bw");

  int pass = -1;
  char* report = nullptr;
  CHECK(br_graph_check(g, 1, 1, &pass, &report) == BR_OK);
  CHECK(pass == 0);
  const auto j = take_json(report);
  CHECK(j["pass"] == false);
  CHECK(j["graph_side"]["max_pages"] == 1);
  CHECK(j["violation"]["side"] == "graph");
  br_graph_free(g);

  br_graph* c4 = nullptr;
  REQUIRE(br_graph_parse("0 1 0 1\n1 0 1 0\n0 1 0 1\n1 0 1 0\n", &c4) == BR_OK);
  br_graph* k22 = nullptr;
  REQUIRE(br_graph_complete_bipartite(2, 2, &k22) == BR_OK);
  char* f1 = nullptr;
  char* f2 = nullptr;
  CHECK(br_graph_canonical_form(c4, &f1) == BR_OK);
  CHECK(br_graph_canonical_form(k22, &f2) == BR_OK);
  CHECK(take(f1) == take(f2));
  char* matrix = nullptr;
  CHECK(br_graph_to_matrix(c4, &matrix) == BR_OK);
  br_graph* back = nullptr;
  CHECK(br_graph_from_matrix(matrix, &back) == BR_OK);
  br_string_free(matrix);
  CHECK(br_graph_order(back) == 4);
  br_graph_free(back);
  br_graph_free(c4);
  br_graph_free(k22);
  br_graph_free(nullptr);
}

TEST_CASE("Paley constructions") {
  br_graph* g = nullptr;
  REQUIRE(br_paley_book_graph(13, &g) == BR_OK);
  CHECK(br_graph_order(g) == 26);
  br_graph_free(g);
  CHECK(br_paley_book_graph(7, &g) == BR_ERR_ARGUMENT);

  int pass = 0;
  char* report = nullptr;
  REQUIRE(br_paley_report(5, &pass, &report) == BR_OK);
  CHECK(pass == 1);
  const auto j = take_json(report);
  CHECK(j["claim"] == "R(B_2,B_3) >= 11");
  CHECK(j["residue_counts_match"] == true);
}

TEST_CASE("specs") {
  br_spec* spec = nullptr;
  REQUIRE(br_spec_parse("12; D11={2,4,5,7,8,10}; D12={0,3,4,6,11}", &spec) == BR_OK);
  char* text = nullptr;
  CHECK(br_spec_format(spec, &text) == BR_OK);
  CHECK(take(text) == "12; D11={2,4,5,7,8,10}; D12={0,3,4,6,11}; D22={1,3,6,9,11}");
  br_graph* g = nullptr;
  CHECK(br_spec_expand(spec, &g) == BR_OK);
  CHECK(br_graph_order(g) == 24);
  br_graph_free(g);

  int pass = 0;
  char* report = nullptr;
  CHECK(br_spec_check(spec, 5, 7, &pass, &report) == BR_OK);
  CHECK(pass == 1);
  auto j = take_json(report);
  CHECK(j["agree"] == true);
  CHECK(j["conditions"]["families"].size() == 6);

  CHECK(br_spec_check(spec, 4, 7, &pass, &report) == BR_OK);
  CHECK(pass == 0);
  j = take_json(report);
  CHECK(j["report"]["violation"]["side"] == "graph");
  br_spec_free(spec);

  CHECK(br_spec_parse("5; D11={1}; D12={}", &spec) == BR_ERR_VALIDATION);
  CHECK(br_spec_parse("5; D11={1", &spec) == BR_ERR_PARSE);
}

TEST_CASE("encoders") {
  char* dimacs = nullptr;
  char* map = nullptr;
  REQUIRE(br_encode_sat(5, 1, 1, 0, &dimacs, &map) == BR_OK);
  const std::string cnf = take(dimacs);
  CHECK(cnf.rfind("p cnf ", 0) == 0);
  CHECK(take(map).rfind("x 0 1 1\n", 0) == 0);
  char* again = nullptr;
  REQUIRE(br_encode_sat(5, 1, 1, 0, &again, nullptr) == BR_OK);
  CHECK(take(again) == cnf);

  char* lp = nullptr;
  const uint32_t pins[] = {2};
  REQUIRE(br_encode_ip(12, 5, 7, 1, 0, pins, 1, &lp) == BR_OK);
  const std::string text = take(lp);
  CHECK(text.find("pin_x_2: x_2 = 1\n") != std::string::npos);
  CHECK(br_encode_ip(1, 5, 7, 1, 0, nullptr, 0, &lp) == BR_ERR_ARGUMENT);

  br_spec* spec = nullptr;
  REQUIRE(br_decode_ip(5, "x_1 1\nx_4 1\nz_0 1\n", 1, &spec) == BR_OK);
  char* st = nullptr;
  CHECK(br_spec_format(spec, &st) == BR_OK);
  CHECK(take(st) == "5; D11={1,4}; D12={0}; D22={2,3}");
  br_spec_free(spec);
  CHECK(br_decode_ip(5, "x_1 1\n", 1, &spec) == BR_ERR_VALIDATION);
}

TEST_CASE("enumeration") {
  br_enumeration* e = nullptr;
  REQUIRE(br_enumerate(10, 2, 3, 0, 1, &e) == BR_OK);
  CHECK(br_enumeration_count(e) == 4);
  CHECK(br_enumeration_graph(e, 0) != nullptr);
  CHECK(br_enumeration_graph(e, 4) == nullptr);
  char* report = nullptr;
  CHECK(br_enumeration_summary(e, &report) == BR_OK);
  const auto j = take_json(report);
  CHECK(j["count"] == 4);
  CHECK(j["complete"] == true);
  br_enumeration_free(e);

  e = nullptr;
  CHECK(br_enumerate(20, 4, 4, 1e-3, 1, &e) == BR_ERR_BUDGET);
  REQUIRE(e != nullptr);
  CHECK(br_enumeration_count(e) == 0);
  br_enumeration_free(e);

  REQUIRE(br_ramsey_number(1, 2, 10, 0, 1, &report) == BR_OK);
  const auto r = take_json(report);
  CHECK(r["value"] == 7);
  CHECK(r["critical_count"] == 4);

  CHECK(br_ramsey_number(2, 2, 8, 0, 1, &report) == BR_ERR_INCONCLUSIVE);
  CHECK(take_json(report)["value"].is_null());
}

TEST_CASE("appendix and registry") {
  int all = 0;
  char* report = nullptr;
  REQUIRE(br_appendix_verify(&all, &report) == BR_OK);
  CHECK(all == 1);
  CHECK(take_json(report).size() == 28);

  br_registry* reg = nullptr;
  REQUIRE(br_registry_seeded(&reg) == BR_OK);
  const size_t n = br_registry_size(reg);
  CHECK(n > 0);
  REQUIRE(br_registry_query(reg, 6, 8, &report) == BR_OK);
  auto q = take_json(report);
  CHECK(q["lower"] == 29);
  CHECK(q["upper"] == 29);
  REQUIRE(br_registry_query(reg, 5, 7, &report) == BR_OK);
  q = take_json(report);
  CHECK(q["lower"] == 25);
  CHECK(q["upper"].is_null());

  CHECK(br_registry_verify_all(reg, &all, &report) == BR_OK);
  CHECK(all == 1);
  br_string_free(report);

  CHECK(br_registry_put(reg, R"({"r":30,"s":31,"kind":"upper","value":200,"witness":null,"provenance":"t"})") ==
        BR_OK);
  CHECK(br_registry_size(reg) == n + 1);
  CHECK(br_registry_put(reg, "nope") == BR_ERR_PARSE);

  const auto path = std::filesystem::temp_directory_path() / "bookramsey_capi_registry.jsonl";
  CHECK(br_registry_save(reg, path.c_str()) == BR_OK);
  br_registry* loaded = nullptr;
  REQUIRE(br_registry_load(path.c_str(), &loaded) == BR_OK);
  CHECK(br_registry_size(loaded) == n + 1);
  char* a = nullptr;
  char* b = nullptr;
  CHECK(br_registry_to_jsonl(reg, &a) == BR_OK);
  CHECK(br_registry_to_jsonl(loaded, &b) == BR_OK);
  CHECK(take(a) == take(b));
  br_registry_free(loaded);
  br_registry_free(reg);
  std::filesystem::remove(path);
  CHECK(br_registry_load("/nonexistent/x.jsonl", &loaded) == BR_ERR_IO);
}
