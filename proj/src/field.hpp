#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "graph.hpp"
#include "two_block.hpp"

namespace bookramsey {

// GF(p^k). An element is the integer sum c_i p^i of its coefficient vector
// (c_0, ..., c_{k-1}) in the polynomial basis, so 0 and 1 are the field's 0
// and 1, and for k = 1 elements are the residues mod p.
class FiniteField {
 public:
  static constexpr std::uint64_t kMaxOrder = std::uint64_t{1} << 20;

  // Uses the lexicographically smallest monic irreducible of degree k
  // (coefficients compared c_0 first).
  static FiniteField make(std::uint32_t p, std::uint32_t k);
  // modulus: k+1 coefficients, low degree first, leading coefficient 1.
  static FiniteField with_modulus(std::uint32_t p, std::vector<std::uint32_t> modulus);

  std::uint32_t characteristic() const { return p_; }
  std::uint32_t degree() const { return k_; }
  std::uint32_t size() const { return q_; }
  const std::vector<std::uint32_t>& modulus() const { return modulus_; }

  std::uint32_t add(std::uint32_t a, std::uint32_t b) const;
  std::uint32_t sub(std::uint32_t a, std::uint32_t b) const;
  std::uint32_t neg(std::uint32_t a) const;
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const;
  std::uint32_t pow(std::uint32_t a, std::uint64_t e) const;

  std::vector<std::uint32_t> coefficients(std::uint32_t a) const;
  std::uint32_t from_coefficients(std::span<const std::uint32_t> c) const;

 private:
  FiniteField(std::uint32_t p, std::vector<std::uint32_t> modulus);
  std::uint32_t mul_poly(std::uint32_t a, std::uint32_t b) const;

  std::uint32_t p_ = 2;
  std::uint32_t k_ = 1;
  std::uint32_t q_ = 2;
  std::vector<std::uint32_t> modulus_;
  std::vector<std::uint32_t> exp_;  // exp_[i] = g^i, length q-1
  std::vector<std::uint32_t> log_;  // log_[x] for x != 0
};

bool is_prime(std::uint64_t n);
bool is_irreducible(std::uint32_t p, std::span<const std::uint32_t> monic);

struct PrimePower {
  std::uint32_t p;
  std::uint32_t k;
};
// Throws ArgumentError when q is not a prime power.
PrimePower factor_prime_power(std::uint64_t q);

struct QuadraticResidues {
  ElementSet residues;     // Q: nonzero squares
  ElementSet nonresidues;  // N: nonzero non-squares
  std::vector<std::int8_t> chi;  // +1 on Q, -1 on N, 0 at 0
};

QuadraticResidues residues(const FiniteField& f);

struct ResidueDifferenceRow {
  std::uint32_t d;
  bool d_is_residue;
  std::size_t qq, nn, qn;                       // counted
  std::size_t expected_qq, expected_nn, expected_qn;  // closed forms
  bool matches() const { return qq == expected_qq && nn == expected_nn && qn == expected_qn; }
};

struct ResidueDifferenceTable {
  std::uint32_t q;
  std::vector<ResidueDifferenceRow> rows;  // one per nonzero d
  bool all_match() const;
};

// Counts Δ(Q,Q,d), Δ(N,N,d), Δ(Q,N,d) directly and records the closed forms
// (q-1)/4 - 1 or (q-1)/4. Requires q ≡ 1 (mod 4).
ResidueDifferenceTable residue_difference_counts(const FiniteField& f);

// Two-block Cayley graph over F_q's additive group.
Graph cayley_two_block(const FiniteField& f, const TwoBlockSets& sets);
Graph cayley_two_block(const CyclicGroup& g, const TwoBlockSets& sets);

// Cayley graph of F_q on the nonzero squares, q ≡ 1 (mod 4). Every edge has
// (q-5)/4 common neighbors and the graph is self-complementary.
Graph paley_graph(const FiniteField& f);

// Γ(Q, Q, N) over F_q, q ≡ 1 (mod 4). With n = (q+1)/2 it avoids B_{n-1}
// and its complement avoids B_n.
Graph paley_book_graph(std::uint64_t q);
Graph paley_book_graph(const FiniteField& f);
TwoBlockSets paley_book_sets(const FiniteField& f);
ConditionReport paley_book_conditions(const FiniteField& f);

}  // namespace bookramsey
