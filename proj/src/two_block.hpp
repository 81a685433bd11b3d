#pragma once

// Two-block Cayley graphs over a finite abelian group, plus the six
// difference-count conditions that certify a (B_r, B_s)-Ramsey graph.
//
// A Group here is any type with
//   std::uint32_t size() const;
//   std::uint32_t add(std::uint32_t, std::uint32_t) const;
//   std::uint32_t sub(std::uint32_t, std::uint32_t) const;
//   std::uint32_t neg(std::uint32_t) const;
// whose elements are encoded as integers in [0, size()) with 0 the identity.

#include <algorithm>
#include <array>
#include <concepts>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "error.hpp"
#include "graph.hpp"

namespace bookramsey {

template <class G>
concept AdditiveGroup = requires(const G& g, std::uint32_t a) {
  { g.size() } -> std::convertible_to<std::uint32_t>;
  { g.add(a, a) } -> std::convertible_to<std::uint32_t>;
  { g.sub(a, a) } -> std::convertible_to<std::uint32_t>;
  { g.neg(a) } -> std::convertible_to<std::uint32_t>;
};

struct CyclicGroup {
  std::uint32_t m = 1;

  std::uint32_t size() const { return m; }
  std::uint32_t add(std::uint32_t a, std::uint32_t b) const { return (a + b) % m; }
  std::uint32_t sub(std::uint32_t a, std::uint32_t b) const { return (a + m - b) % m; }
  std::uint32_t neg(std::uint32_t a) const { return (m - a) % m; }
};

using ElementSet = std::vector<std::uint32_t>;

struct TwoBlockSets {
  ElementSet d11;
  ElementSet d12;
  ElementSet d22;
};

// One of the six condition families. `bound` is r or s; the family holds when
// every value over its domain is strictly below the bound.
struct FamilyResult {
  std::string name;
  bool complement_side = false;
  std::uint32_t bound = 0;
  std::size_t max_value = 0;
  std::size_t domain_size = 0;
  std::optional<std::uint32_t> violating_d;  // first d (ascending) with value >= bound

  bool pass() const { return max_value < bound; }
};

struct ConditionReport {
  std::array<FamilyResult, 6> families;
  bool pass = false;
};

namespace two_block_detail {

inline std::vector<char> membership(std::uint32_t size, const ElementSet& s) {
  std::vector<char> in(size, 0);
  for (auto x : s) in[x] = 1;
  return in;
}

inline ElementSet from_membership(const std::vector<char>& in) {
  ElementSet out;
  for (std::uint32_t i = 0; i < in.size(); ++i)
    if (in[i]) out.push_back(i);
  return out;
}

}  // namespace two_block_detail

// Δ(X,Y,d) for every d at once: result[d] = |{(x,y): x - y = d}|.
template <AdditiveGroup G>
std::vector<std::size_t> delta_table(const G& g, const ElementSet& x, const ElementSet& y) {
  std::vector<std::size_t> out(g.size(), 0);
  for (auto a : x)
    for (auto b : y) ++out[g.sub(a, b)];
  return out;
}

// Σ(X,Y,d) for every d at once.
template <AdditiveGroup G>
std::vector<std::size_t> sigma_table(const G& g, const ElementSet& x, const ElementSet& y) {
  std::vector<std::size_t> out(g.size(), 0);
  for (auto a : x)
    for (auto b : y) ++out[g.add(a, b)];
  return out;
}

template <AdditiveGroup G>
void validate_two_block(const G& g, const TwoBlockSets& d) {
  auto check_range = [&](const ElementSet& s, const char* name) {
    for (auto x : s) {
      if (x >= g.size()) {
        throw ValidationError(std::string(name) + " contains " + std::to_string(x) +
                              " outside the group of order " + std::to_string(g.size()));
      }
    }
  };
  check_range(d.d11, "D11");
  check_range(d.d12, "D12");
  check_range(d.d22, "D22");
  auto check_diag = [&](const ElementSet& s, const char* name) {
    auto in = two_block_detail::membership(g.size(), s);
    if (in[0]) throw ValidationError(std::string(name) + " must not contain 0");
    for (auto x : s) {
      if (!in[g.neg(x)]) {
        throw ValidationError(std::string(name) + " is not closed under negation: contains " +
                              std::to_string(x) + " but not " + std::to_string(g.neg(x)));
      }
    }
  };
  check_diag(d.d11, "D11");
  check_diag(d.d22, "D22");
}

// Complements: D11, D22 within G \ {0}; D12 within G.
template <AdditiveGroup G>
TwoBlockSets complement_sets(const G& g, const TwoBlockSets& d) {
  using two_block_detail::from_membership;
  using two_block_detail::membership;
  auto flip = [&](const ElementSet& s, bool drop_zero) {
    auto in = membership(g.size(), s);
    for (auto& c : in) c = !c;
    if (drop_zero) in[0] = 0;
    return from_membership(in);
  };
  return {flip(d.d11, true), flip(d.d12, false), flip(d.d22, true)};
}

// Vertices 0..|G|-1 form V1, |G|..2|G|-1 form V2.
template <AdditiveGroup G>
Graph two_block_graph(const G& g, const TwoBlockSets& d) {
  validate_two_block(g, d);
  const std::uint32_t m = g.size();
  auto in11 = two_block_detail::membership(m, d.d11);
  auto in12 = two_block_detail::membership(m, d.d12);
  auto in22 = two_block_detail::membership(m, d.d22);
  Graph out(2 * static_cast<std::size_t>(m));
  for (std::uint32_t x = 0; x < m; ++x) {
    for (std::uint32_t y = 0; y < m; ++y) {
      const std::uint32_t diff = g.sub(y, x);
      if (x < y && in11[diff]) out.add_edge(x, y);
      if (x < y && in22[diff]) out.add_edge(m + x, m + y);
      if (in12[diff]) out.add_edge(x, m + y);
    }
  }
  return out;
}

template <AdditiveGroup G>
ConditionReport evaluate_two_block_conditions(const G& g, const TwoBlockSets& d, BookParams p) {
  validate_two_block(g, d);
  const TwoBlockSets c = complement_sets(g, d);

  auto family = [&](const char* name, bool comp, std::uint32_t bound, const ElementSet& domain,
                    const std::vector<std::size_t>& t1, const std::vector<std::size_t>& t2) {
    FamilyResult f;
    f.name = name;
    f.complement_side = comp;
    f.bound = bound;
    f.domain_size = domain.size();
    for (auto x : domain) {
      const std::size_t v = t1[x] + t2[x];
      f.max_value = std::max(f.max_value, v);
      if (v >= bound && !f.violating_d) f.violating_d = x;
    }
    return f;
  };

  auto run_side = [&](const TwoBlockSets& s, bool comp, std::uint32_t bound, std::size_t base,
                      ConditionReport& rep) {
    auto d12d12 = delta_table(g, s.d12, s.d12);
    rep.families[base + 0] = family(comp ? "cV1" : "V1", comp, bound, s.d11,
                                    delta_table(g, s.d11, s.d11), d12d12);
    rep.families[base + 1] = family(comp ? "cV2" : "V2", comp, bound, s.d22,
                                    delta_table(g, s.d22, s.d22), d12d12);
    rep.families[base + 2] = family(comp ? "cX" : "X", comp, bound, s.d12,
                                    sigma_table(g, s.d11, s.d12), delta_table(g, s.d12, s.d22));
  };

  ConditionReport rep;
  run_side(d, false, p.r, 0, rep);
  run_side(c, true, p.s, 3, rep);
  rep.pass = true;
  for (const auto& f : rep.families) rep.pass = rep.pass && f.pass();
  return rep;
}

}  // namespace bookramsey
