#include "graph.hpp"

#include <algorithm>
#include <sstream>

#include "error.hpp"

namespace bookramsey {

Graph::Graph(std::size_t n) : n_(n), words_((n + 63) / 64) {
  if (n > kMaxVertices) {
    throw ArgumentError("graph order " + std::to_string(n) + " exceeds cap of " +
                        std::to_string(kMaxVertices));
  }
  bits_.assign(n_ * words_, 0);
}

void Graph::check_pair(Vertex u, Vertex v) const {
  if (u >= n_ || v >= n_) {
    throw ArgumentError("vertex out of range: (" + std::to_string(u) + ", " +
                        std::to_string(v) + ") with n = " + std::to_string(n_));
  }
  if (u == v) throw ArgumentError("loops are not allowed");
}

void Graph::add_edge(Vertex u, Vertex v) {
  check_pair(u, v);
  bits_[u * words_ + (v >> 6)] |= std::uint64_t{1} << (v & 63);
  bits_[v * words_ + (u >> 6)] |= std::uint64_t{1} << (u & 63);
}

void Graph::remove_edge(Vertex u, Vertex v) {
  check_pair(u, v);
  bits_[u * words_ + (v >> 6)] &= ~(std::uint64_t{1} << (v & 63));
  bits_[v * words_ + (u >> 6)] &= ~(std::uint64_t{1} << (u & 63));
}

std::size_t Graph::degree(Vertex u) const {
  std::size_t d = 0;
  for (auto w : row(u)) d += static_cast<std::size_t>(std::popcount(w));
  return d;
}

std::size_t Graph::edge_count() const {
  std::size_t total = 0;
  for (auto w : bits_) total += static_cast<std::size_t>(std::popcount(w));
  return total / 2;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  for (Vertex u = 0; u < n_; ++u)
    for (Vertex v = u + 1; v < n_; ++v)
      if (has_edge(u, v)) out.emplace_back(u, v);
  return out;
}

BookParams::BookParams(std::uint32_t r_, std::uint32_t s_) : r(r_), s(s_) {
  if (r < 1 || s < 1) throw ArgumentError("book sizes must be >= 1");
}

std::size_t common_neighbors(const Graph& g, Vertex u, Vertex v) {
  if (u >= g.order() || v >= g.order()) {
    throw ArgumentError("vertex out of range: (" + std::to_string(u) + ", " +
                        std::to_string(v) + ") with n = " + std::to_string(g.order()));
  }
  if (u == v) throw ArgumentError("common_neighbors needs distinct vertices");
  auto a = g.row(u);
  auto b = g.row(v);
  std::size_t c = 0;
  for (std::size_t i = 0; i < a.size(); ++i)
    c += static_cast<std::size_t>(std::popcount(a[i] & b[i]));
  return c;
}

namespace {

// Shared scan: for pairs whose adjacency equals `want_edge`, count vertices
// other than u,v whose adjacency to both equals `want_edge`.
BookScan scan(const Graph& g, bool want_edge) {
  BookScan out;
  const std::size_t n = g.order();
  const std::size_t words = g.words_per_row();
  std::vector<std::uint64_t> valid(words, 0);
  for (std::size_t v = 0; v < n; ++v) valid[v >> 6] |= std::uint64_t{1} << (v & 63);
  for (Vertex u = 0; u < n; ++u) {
    auto ru = g.row(u);
    for (Vertex v = u + 1; v < n; ++v) {
      if (g.has_edge(u, v) != want_edge) continue;
      auto rv = g.row(v);
      std::size_t c = 0;
      for (std::size_t i = 0; i < words; ++i) {
        std::uint64_t w = want_edge ? (ru[i] & rv[i]) : (~ru[i] & ~rv[i] & valid[i]);
        c += static_cast<std::size_t>(std::popcount(w));
      }
      if (!want_edge) c -= 2;  // u and v themselves
      if (!out.argmax || c > out.max_pages) {
        out.max_pages = c;
        out.argmax = Edge{u, v};
      }
    }
  }
  return out;
}

}  // namespace

BookScan scan_books(const Graph& g) { return scan(g, true); }
BookScan scan_cobooks(const Graph& g) { return scan(g, false); }
std::size_t max_book_pages(const Graph& g) { return scan_books(g).max_pages; }

RamseyReport ramsey_report(const Graph& g, BookParams p) {
  RamseyReport rep;
  rep.graph_side = scan_books(g);
  rep.complement_side = scan_cobooks(g);
  rep.pass = rep.graph_side.max_pages < p.r && rep.complement_side.max_pages < p.s;
  return rep;
}

bool is_ramsey_graph(const Graph& g, BookParams p) { return ramsey_report(g, p).pass; }

Graph complement(const Graph& g) {
  Graph h(g.order());
  for (Vertex u = 0; u < g.order(); ++u)
    for (Vertex v = u + 1; v < g.order(); ++v)
      if (!g.has_edge(u, v)) h.add_edge(u, v);
  return h;
}

Graph relabel(const Graph& g, std::span<const Vertex> perm) {
  if (perm.size() != g.order()) throw ArgumentError("permutation size mismatch");
  Graph h(g.order());
  for (auto [u, v] : g.edges()) h.add_edge(perm[u], perm[v]);
  return h;
}

Graph induced_without(const Graph& g, Vertex x) {
  if (x >= g.order()) throw ArgumentError("vertex out of range");
  Graph h(g.order() - 1);
  auto shift = [x](Vertex v) { return v > x ? v - 1 : v; };
  for (auto [u, v] : g.edges())
    if (u != x && v != x) h.add_edge(shift(u), shift(v));
  return h;
}

Graph complete_graph(std::size_t n) {
  Graph g(n);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) g.add_edge(u, v);
  return g;
}

Graph cycle_graph(std::size_t n) {
  Graph g(n);
  if (n < 3) throw ArgumentError("cycle needs at least 3 vertices");
  for (Vertex u = 0; u < n; ++u) g.add_edge(u, static_cast<Vertex>((u + 1) % n));
  return g;
}

Graph path_graph(std::size_t n) {
  Graph g(n);
  for (Vertex u = 0; u + 1 < n; ++u) g.add_edge(u, u + 1);
  return g;
}

Graph complete_bipartite(std::size_t a, std::size_t b) {
  Graph g(a + b);
  for (Vertex u = 0; u < a; ++u)
    for (Vertex v = 0; v < b; ++v) g.add_edge(u, static_cast<Vertex>(a + v));
  return g;
}

std::string to_graph6(const Graph& g) {
  const std::size_t n = g.order();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(63 + n));
  } else {
    out.push_back(126);
    out.push_back(static_cast<char>(63 + ((n >> 12) & 63)));
    out.push_back(static_cast<char>(63 + ((n >> 6) & 63)));
    out.push_back(static_cast<char>(63 + (n & 63)));
  }
  // Upper triangle, column by column: (0,1),(0,2),(1,2),(0,3),...
  int acc = 0;
  int nbits = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.has_edge(i, j) ? 1 : 0);
      if (++nbits == 6) {
        out.push_back(static_cast<char>(63 + acc));
        acc = 0;
        nbits = 0;
      }
    }
  }
  if (nbits > 0) out.push_back(static_cast<char>(63 + (acc << (6 - nbits))));
  return out;
}

Graph from_graph6(std::string_view text) {
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.remove_suffix(1);
  if (text.starts_with(">>graph6<<")) text.remove_prefix(10);
  if (text.empty()) throw ParseError("graph6: empty input");
  for (std::size_t i = 0; i < text.size(); ++i) {
    auto c = static_cast<unsigned char>(text[i]);
    if (c < 63 || c > 126) {
      throw ParseError("graph6: invalid byte " + std::to_string(c) + " at offset " +
                       std::to_string(i));
    }
  }
  std::size_t n = 0;
  std::size_t pos = 0;
  if (static_cast<unsigned char>(text[0]) != 126) {
    n = static_cast<std::size_t>(text[0] - 63);
    pos = 1;
  } else {
    if (text.size() < 4 || static_cast<unsigned char>(text[1]) == 126) {
      throw ParseError("graph6: unsupported or truncated size header at offset 0");
    }
    n = (static_cast<std::size_t>(text[1] - 63) << 12) |
        (static_cast<std::size_t>(text[2] - 63) << 6) | static_cast<std::size_t>(text[3] - 63);
    pos = 4;
  }
  if (n > Graph::kMaxVertices) throw ParseError("graph6: order " + std::to_string(n) + " too large");
  const std::size_t bits = n * (n - (n > 0 ? 1 : 0)) / 2;
  const std::size_t need = (bits + 5) / 6;
  if (text.size() - pos != need) {
    throw ParseError("graph6: expected " + std::to_string(need) + " data bytes for n = " +
                     std::to_string(n) + ", got " + std::to_string(text.size() - pos) +
                     " (first bad byte offset " + std::to_string(pos + std::min(need, text.size() - pos)) + ")");
  }
  Graph g(n);
  std::size_t k = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i, ++k) {
      int byte = text[pos + k / 6] - 63;
      if ((byte >> (5 - k % 6)) & 1) g.add_edge(i, j);
    }
  }
  // Padding bits must be zero.
  if (k % 6 != 0) {
    int byte = text[pos + k / 6] - 63;
    if (byte & ((1 << (6 - k % 6)) - 1)) {
      throw ParseError("graph6: nonzero padding in byte at offset " + std::to_string(pos + k / 6));
    }
  }
  return g;
}

Graph parse_adjacency_text(std::string_view text) {
  std::vector<std::vector<int>> rows;
  std::vector<std::size_t> line_numbers;
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    std::vector<int> row;
    for (std::size_t i = 0; i < line.size(); ++i) {
      char c = line[i];
      if (c == '0' || c == '1') {
        row.push_back(c - '0');
      } else if (c == ',' || c == '[' || c == ']' || c == ' ' || c == '\t' || c == '\r') {
        continue;
      } else {
        throw ParseError("adjacency text: unexpected character '" + std::string(1, c) +
                         "' on line " + std::to_string(line_no));
      }
    }
    if (!row.empty()) {
      rows.push_back(std::move(row));
      line_numbers.push_back(line_no);
    }
    if (end == text.size()) break;
    start = end + 1;
  }
  const std::size_t n = rows.size();
  if (n == 0) throw ParseError("adjacency text: no rows");
  if (n > Graph::kMaxVertices) throw ParseError("adjacency text: too many rows");
  for (std::size_t i = 0; i < n; ++i) {
    if (rows[i].size() != n) {
      throw ParseError("adjacency text: row " + std::to_string(i) + " (line " +
                       std::to_string(line_numbers[i]) + ") has " + std::to_string(rows[i].size()) +
                       " entries, expected " + std::to_string(n));
    }
  }
  Graph g(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (rows[i][i] != 0) {
      throw ParseError("adjacency text: row " + std::to_string(i) + " has a loop");
    }
    for (std::size_t j = 0; j < n; ++j) {
      if (rows[i][j] != rows[j][i]) {
        throw ParseError("adjacency text: row " + std::to_string(std::min(i, j)) +
                         " is not symmetric at column " + std::to_string(std::max(i, j)));
      }
      if (j > i && rows[i][j]) g.add_edge(static_cast<Vertex>(i), static_cast<Vertex>(j));
    }
  }
  return g;
}

std::string to_adjacency_text(const Graph& g) {
  std::ostringstream os;
  for (Vertex u = 0; u < g.order(); ++u) {
    os << '[';
    for (Vertex v = 0; v < g.order(); ++v) {
      if (v) os << ", ";
      os << (g.has_edge(u, v) ? 1 : 0);
    }
    os << "]\n";
  }
  return os.str();
}

}  // namespace bookramsey
