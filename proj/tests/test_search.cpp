#include <doctest.h>

#include <set>

#include "canon.hpp"
#include "error.hpp"
#include "oracle.hpp"
#include "search.hpp"

using namespace bookramsey;

namespace {

// Ramsey classes on n vertices by labeled brute force.
std::set<std::string> brute_force_classes(std::uint32_t n, BookParams p) {
  std::set<std::string> out;
  for (std::uint64_t code = 0; code < (std::uint64_t{1} << (n * (n - 1) / 2)); ++code) {
    const Graph g = oracle::from_code(n, code);
    if (oracle::ramsey(g, p.r, p.s)) out.insert(canonical_form(g).graph6);
  }
  return out;
}

}  // namespace

TEST_CASE("enumeration of small rows") {
  const auto c5 = enumerate_ramsey_graphs(5, {1, 1});
  REQUIRE(c5.graphs.size() == 1);
  CHECK(c5.graphs[0] == canonical_form(cycle_graph(5)).graph6);
  CHECK(enumerate_ramsey_graphs(6, {1, 1}).graphs.empty());
  CHECK(enumerate_ramsey_graphs(10, {2, 3}).graphs.size() == 4);
}

TEST_CASE("enumeration matches labeled brute force") {
  for (std::uint32_t n = 1; n <= 6; ++n) {
    for (std::uint32_t r = 1; r <= 2; ++r) {
      for (std::uint32_t s = 1; s <= 2; ++s) {
        const auto res = enumerate_ramsey_graphs(n, {r, s});
        const auto expect = brute_force_classes(n, {r, s});
        CHECK(std::set<std::string>(res.graphs.begin(), res.graphs.end()) == expect);
        CHECK(res.graphs.size() == expect.size());
        CHECK(res.stats.level_counts.size() == n + 1);
        CHECK(res.stats.level_counts[n] == expect.size());
      }
    }
  }
}

TEST_CASE("level counts agree with brute force at every order") {
  const auto res = enumerate_ramsey_graphs(7, {2, 2});
  for (std::uint32_t k = 1; k <= 6; ++k) CHECK(res.stats.level_counts[k] == brute_force_classes(k, {2, 2}).size());
}

TEST_CASE("results are sorted canonical forms and satisfy the bounds") {
  const auto res = enumerate_ramsey_graphs(9, {2, 3});
  CHECK(std::is_sorted(res.graphs.begin(), res.graphs.end()));
  for (const auto& g6 : res.graphs) {
    const Graph g = from_graph6(g6);
    CHECK(oracle::ramsey(g, 2, 3));
    CHECK(canonical_form(g).graph6 == g6);
  }
}

TEST_CASE("parallel workers give the same answer") {
  const auto one = enumerate_ramsey_graphs(10, {2, 3}, {0, 1});
  const auto four = enumerate_ramsey_graphs(10, {2, 3}, {0, 4});
  CHECK(one.graphs == four.graphs);
  CHECK(one.stats.level_counts == four.stats.level_counts);
}

TEST_CASE("small Ramsey numbers") {
  const auto r11 = ramsey_number_smallcase({1, 1}, 10);
  CHECK(r11.value == 6);
  CHECK(r11.critical_graphs.size() == 1);
  const auto r12 = ramsey_number_smallcase({1, 2}, 10);
  CHECK(r12.value == 7);
  CHECK(r12.critical_graphs.size() == 4);
  const auto r22 = ramsey_number_smallcase({2, 2}, 12);
  CHECK(r22.value == 10);
  CHECK(r22.critical_graphs.size() == 1);
  // Symmetric in r and s.
  CHECK(ramsey_number_smallcase({2, 1}, 10).critical_graphs.size() == 4);
}

TEST_CASE("incomplete searches") {
  CHECK_THROWS_AS(ramsey_number_smallcase({2, 2}, 8), Inconclusive);
  try {
    enumerate_ramsey_graphs(20, {4, 4}, {1e-3, 1});
    FAIL("expected BudgetExceeded");
  } catch (const BudgetExceeded& e) {
    CHECK(e.stats().level_counts.size() >= 2);
  }
  CHECK_THROWS_AS(enumerate_ramsey_graphs(0, {1, 1}), ArgumentError);
  CHECK_THROWS_AS(enumerate_ramsey_graphs(65, {1, 1}), ArgumentError);
  CHECK_THROWS_AS(enumerate_ramsey_graphs(5, {1, 1}, {-1, 1}), ArgumentError);
}
