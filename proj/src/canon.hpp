#pragma once

// Canonical labeling by equitable refinement and individualization, with
// pruning by the automorphisms discovered during the search.

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "graph.hpp"

namespace bookramsey {

struct CanonicalForm {
  std::string graph6;  // graph6 of the canonically relabeled graph
  friend auto operator<=>(const CanonicalForm&, const CanonicalForm&) = default;
};

struct CanonicalLabeling {
  std::vector<Vertex> order;   // order[i] is the vertex that receives label i
  std::vector<Vertex> label;   // inverse of order
  std::vector<Vertex> orbit;   // least vertex of each vertex's orbit
  std::vector<std::vector<Vertex>> generators;  // automorphisms, v -> gen[v]
  CanonicalForm form;
};

constexpr std::size_t kCanonMaxVertices = 64;

// Requires g.order() <= 64.
CanonicalLabeling canonical_labeling(const Graph& g);
CanonicalForm canonical_form(const Graph& g);
bool isomorphic(const Graph& a, const Graph& b);

// Same search on raw rows (bit v of rows[u] set iff u ~ v).
CanonicalLabeling canonical_labeling(std::span<const std::uint64_t> rows);
std::string graph6_from_rows(std::span<const std::uint64_t> rows);

}  // namespace bookramsey
