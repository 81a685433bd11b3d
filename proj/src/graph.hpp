#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace bookramsey {

using Vertex = std::uint32_t;
using Edge = std::pair<Vertex, Vertex>;

// Undirected simple graph stored as n rows of packed adjacency bits.
// Symmetry and irreflexivity are maintained by the mutators.
class Graph {
 public:
  static constexpr std::size_t kMaxVertices = 1024;

  Graph() = default;
  explicit Graph(std::size_t n);

  std::size_t order() const { return n_; }
  std::size_t words_per_row() const { return words_; }

  bool has_edge(Vertex u, Vertex v) const {
    return (bits_[u * words_ + (v >> 6)] >> (v & 63)) & 1U;
  }
  void add_edge(Vertex u, Vertex v);
  void remove_edge(Vertex u, Vertex v);
  void set_edge(Vertex u, Vertex v, bool present) {
    present ? add_edge(u, v) : remove_edge(u, v);
  }

  std::span<const std::uint64_t> row(Vertex u) const {
    return {bits_.data() + u * words_, words_};
  }

  std::size_t degree(Vertex u) const;
  std::size_t edge_count() const;
  std::vector<Edge> edges() const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  void check_pair(Vertex u, Vertex v) const;

  std::size_t n_ = 0;
  std::size_t words_ = 0;
  std::vector<std::uint64_t> bits_;
};

// Page bounds for a book Ramsey question: the graph must avoid B_r and its
// complement must avoid B_s.
struct BookParams {
  std::uint32_t r = 1;
  std::uint32_t s = 1;

  BookParams() = default;
  BookParams(std::uint32_t r_, std::uint32_t s_);
  BookParams swapped() const { return {s, r}; }
};

std::size_t common_neighbors(const Graph& g, Vertex u, Vertex v);

struct BookScan {
  std::size_t max_pages = 0;
  std::optional<Edge> argmax;  // first edge attaining max_pages
};

// Largest |Γ(u,v)| over edges {u,v}; 0 for edgeless graphs.
BookScan scan_books(const Graph& g);
std::size_t max_book_pages(const Graph& g);

// Same scan on the complement, without materialising it.
BookScan scan_cobooks(const Graph& g);

struct RamseyReport {
  bool pass = false;
  BookScan graph_side;
  BookScan complement_side;
};

RamseyReport ramsey_report(const Graph& g, BookParams p);
bool is_ramsey_graph(const Graph& g, BookParams p);

Graph complement(const Graph& g);
Graph relabel(const Graph& g, std::span<const Vertex> perm);  // v -> perm[v]
Graph induced_without(const Graph& g, Vertex v);              // delete v, shift labels down

Graph complete_graph(std::size_t n);
Graph cycle_graph(std::size_t n);
Graph path_graph(std::size_t n);
Graph complete_bipartite(std::size_t a, std::size_t b);

// graph6: short header for n <= 62, 4-byte header for larger n.
std::string to_graph6(const Graph& g);
Graph from_graph6(std::string_view text);

// 0/1 matrix rows, one per line; commas, brackets and blank lines ignored.
Graph parse_adjacency_text(std::string_view text);
std::string to_adjacency_text(const Graph& g);

}  // namespace bookramsey
