#pragma once

// Isomorph-free enumeration of Ramsey (B_r, B_s, n) graphs by canonical
// augmentation, one vertex at a time.

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "canon.hpp"
#include "graph.hpp"

namespace bookramsey {

struct EnumerationStats {
  std::vector<std::uint64_t> level_counts;  // index k: classes on k vertices
  std::uint64_t extensions = 0;             // neighborhoods passing the book checks
  std::uint64_t accepted = 0;
  double elapsed_seconds = 0;
};

struct EnumerationResult {
  std::uint32_t n = 0;
  BookParams params;
  std::vector<std::string> graphs;  // canonical graph6, sorted
  EnumerationStats stats;
};

// Raised when the search stops before answering. stats holds every level
// completed so far.
class SearchIncomplete : public std::runtime_error {
 public:
  SearchIncomplete(const std::string& what, EnumerationStats stats)
      : std::runtime_error(what), stats_(std::move(stats)) {}
  const EnumerationStats& stats() const { return stats_; }

 private:
  EnumerationStats stats_;
};

class BudgetExceeded : public SearchIncomplete {
 public:
  using SearchIncomplete::SearchIncomplete;
};

class Inconclusive : public SearchIncomplete {
 public:
  using SearchIncomplete::SearchIncomplete;
};

struct SearchOptions {
  double budget_seconds = 0;  // wall clock; 0 means unlimited
  unsigned workers = 1;
};

// Requires 1 <= n <= 64.
EnumerationResult enumerate_ramsey_graphs(std::uint32_t n, BookParams p, SearchOptions opts = {});

struct SmallcaseResult {
  std::uint32_t value = 0;  // least n with no Ramsey graph
  std::vector<std::string> critical_graphs;  // classes on value - 1 vertices
  EnumerationStats stats;
};

// Throws Inconclusive when every level up to n_cap is nonempty and
// BudgetExceeded when time runs out first.
SmallcaseResult ramsey_number_smallcase(BookParams p, std::uint32_t n_cap, SearchOptions opts = {});

}  // namespace bookramsey
