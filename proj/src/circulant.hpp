#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>

#include "graph.hpp"
#include "two_block.hpp"

namespace bookramsey {

// 2-block-circulant graph on 2m vertices. Sets are sorted, duplicate-free
// residues in [0, m); D11 and D22 avoid 0 and are closed under negation.
struct BlockCirculantSpec {
  std::uint32_t m = 1;
  ElementSet d11;
  ElementSet d12;
  ElementSet d22;

  TwoBlockSets sets() const { return {d11, d12, d22}; }
  friend bool operator==(const BlockCirculantSpec&, const BlockCirculantSpec&) = default;
};

// Reduces every element into [0, m), sorts, dedupes, then validates.
// Without d22 the complement convention D22 = Z_m \ ({0} ∪ D11) applies.
BlockCirculantSpec make_spec(std::uint32_t m, std::span<const std::int64_t> d11,
                             std::span<const std::int64_t> d12,
                             std::optional<std::span<const std::int64_t>> d22 = std::nullopt);
void validate(const BlockCirculantSpec& spec);

// Pair counts over Z_m. Elements of X, Y must lie in [0, m); d is reduced.
std::size_t delta(std::span<const std::uint32_t> x, std::span<const std::uint32_t> y,
                  std::int64_t d, std::uint32_t m);
std::size_t sigma(std::span<const std::uint32_t> x, std::span<const std::uint32_t> y,
                  std::int64_t d, std::uint32_t m);

// V1 = {0..m-1}, V2 = {m..2m-1}.
Graph expand(const BlockCirculantSpec& spec);

// |Γ(u,v)| by the three-case difference formula, without building the graph.
std::size_t common_neighbors_formula(const BlockCirculantSpec& spec, Vertex u, Vertex v);

ConditionReport check_book_conditions(const BlockCirculantSpec& spec, BookParams p);

BlockCirculantSpec complement_spec(const BlockCirculantSpec& spec);

// Text form: "m; D11={...}; D12={...}" with optional "; D22={...}".
BlockCirculantSpec parse_spec(std::string_view text);
std::string format_spec(const BlockCirculantSpec& spec, bool explicit_d22 = true);

}  // namespace bookramsey
