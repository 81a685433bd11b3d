#pragma once

// Brute-force reference computations used as test oracles. Nothing here
// calls into the library beyond the Graph container.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "circulant.hpp"
#include "graph.hpp"

namespace oracle {

using bookramsey::Graph;
using bookramsey::Vertex;

inline std::size_t common(const Graph& g, Vertex u, Vertex v) {
  std::size_t c = 0;
  for (Vertex w = 0; w < g.order(); ++w)
    if (w != u && w != v && g.has_edge(u, w) && g.has_edge(v, w)) ++c;
  return c;
}

inline std::size_t common_non(const Graph& g, Vertex u, Vertex v) {
  std::size_t c = 0;
  for (Vertex w = 0; w < g.order(); ++w)
    if (w != u && w != v && !g.has_edge(u, w) && !g.has_edge(v, w)) ++c;
  return c;
}

struct Maxima {
  std::size_t graph_side = 0;
  std::size_t complement_side = 0;
};

inline Maxima book_maxima(const Graph& g) {
  Maxima m;
  for (Vertex u = 0; u < g.order(); ++u) {
    for (Vertex v = u + 1; v < g.order(); ++v) {
      if (g.has_edge(u, v))
        m.graph_side = std::max(m.graph_side, common(g, u, v));
      else
        m.complement_side = std::max(m.complement_side, common_non(g, u, v));
    }
  }
  return m;
}

inline bool ramsey(const Graph& g, std::uint32_t r, std::uint32_t s) {
  auto m = book_maxima(g);
  return m.graph_side < r && m.complement_side < s;
}

// Adjacency by definition of the 2-block circulant: V1-V1 on D11, V2-V2 on
// D22, V1-V2 on D12, each by difference y - x mod m.
inline Graph circulant(std::uint32_t m, const std::set<std::uint32_t>& d11, const std::set<std::uint32_t>& d12,
                       const std::set<std::uint32_t>& d22) {
  Graph g(2 * m);
  for (std::uint32_t x = 0; x < m; ++x) {
    for (std::uint32_t y = 0; y < m; ++y) {
      const std::uint32_t diff = (y + m - x) % m;
      if (x != y && d11.count(diff)) g.add_edge(x, y);
      if (x != y && d22.count(diff)) g.add_edge(m + x, m + y);
      if (d12.count(diff)) g.add_edge(x, m + y);
    }
  }
  return g;
}

// Graph with bit t of `code` selecting the t-th pair in (0,1),(0,2),...,(n-2,n-1) order.
inline Graph from_code(std::uint32_t n, std::uint64_t code) {
  Graph g(n);
  std::uint32_t t = 0;
  for (Vertex i = 0; i < n; ++i)
    for (Vertex j = i + 1; j < n; ++j, ++t)
      if ((code >> t) & 1U) g.add_edge(i, j);
  return g;
}

inline std::uint64_t to_code(const Graph& g) {
  std::uint64_t code = 0;
  std::uint32_t t = 0;
  for (Vertex i = 0; i < g.order(); ++i)
    for (Vertex j = i + 1; j < g.order(); ++j, ++t)
      if (g.has_edge(i, j)) code |= std::uint64_t{1} << t;
  return code;
}

// Least code over all n! relabelings; equal iff isomorphic. n <= 8.
inline std::uint64_t min_code(const Graph& g) {
  const auto n = static_cast<std::uint32_t>(g.order());
  std::vector<Vertex> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::uint64_t best = ~std::uint64_t{0};
  do {
    std::uint64_t code = 0;
    std::uint32_t t = 0;
    for (Vertex i = 0; i < n; ++i)
      for (Vertex j = i + 1; j < n; ++j, ++t)
        if (g.has_edge(perm[i], perm[j])) code |= std::uint64_t{1} << t;
    best = std::min(best, code);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

// Nonzero squares of Z_p.
inline std::set<std::uint32_t> squares_mod(std::uint32_t p) {
  std::set<std::uint32_t> q;
  for (std::uint32_t x = 1; x < p; ++x) q.insert(x * x % p);
  return q;
}

// Random valid spec: D11, D22 symmetric subsets of Z_m \ {0}, D12 any subset.
struct RandomSpec {
  std::uint32_t m;
  std::set<std::uint32_t> d11, d12, d22;
};

inline RandomSpec random_spec(std::mt19937_64& rng, std::uint32_t max_m) {
  std::uniform_int_distribution<std::uint32_t> pick_m(1, max_m);
  std::bernoulli_distribution coin(0.5);
  RandomSpec s;
  s.m = pick_m(rng);
  for (std::uint32_t x = 1; 2 * x <= s.m; ++x) {
    if (coin(rng)) {
      s.d11.insert(x);
      s.d11.insert(s.m - x);
    }
    if (coin(rng)) {
      s.d22.insert(x);
      s.d22.insert(s.m - x);
    }
  }
  for (std::uint32_t x = 0; x < s.m; ++x)
    if (coin(rng)) s.d12.insert(x);
  return s;
}

inline bookramsey::BlockCirculantSpec to_spec(const RandomSpec& s) {
  return {s.m, {s.d11.begin(), s.d11.end()}, {s.d12.begin(), s.d12.end()}, {s.d22.begin(), s.d22.end()}};
}

inline std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  std::uint64_t r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace oracle
