#include <doctest.h>

#include "canon.hpp"
#include "circulant.hpp"
#include "error.hpp"
#include "field.hpp"
#include "oracle.hpp"

using namespace bookramsey;

namespace {

// Every nonzero element has a multiplicative inverse and the ring laws hold.
void check_field_axioms(const FiniteField& f) {
  const std::uint32_t q = f.size();
  for (std::uint32_t a = 0; a < q; ++a) {
    CHECK(f.add(a, 0) == a);
    CHECK(f.mul(a, 1) == a);
    CHECK(f.add(a, f.neg(a)) == 0);
    bool has_inverse = a == 0;
    for (std::uint32_t b = 0; b < q; ++b) {
      CHECK(f.add(a, b) == f.add(b, a));
      CHECK(f.mul(a, b) == f.mul(b, a));
      CHECK(f.sub(f.add(a, b), b) == a);
      has_inverse = has_inverse || f.mul(a, b) == 1;
      for (std::uint32_t c = 0; c < q; c += 3) {
        CHECK(f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c)));
        CHECK(f.mul(a, f.mul(b, c)) == f.mul(f.mul(a, b), c));
      }
    }
    CHECK(has_inverse);
  }
}

}  // namespace

TEST_CASE("make_field") {
  const auto f13 = FiniteField::make(13, 1);
  CHECK(f13.size() == 13);
  for (std::uint32_t a = 0; a < 13; ++a)
    for (std::uint32_t b = 0; b < 13; ++b) {
      CHECK(f13.add(a, b) == (a + b) % 13);
      CHECK(f13.mul(a, b) == (a * b) % 13);
    }

  const auto f9 = FiniteField::make(3, 2);
  CHECK(f9.size() == 9);
  CHECK(is_irreducible(3, f9.modulus()));
  check_field_axioms(f9);

  const auto f8 = FiniteField::make(2, 3);
  CHECK(f8.size() == 8);
  for (std::uint32_t a = 1; a < 8; ++a) CHECK(f8.pow(a, 7) == 1);
  check_field_axioms(f8);

  check_field_axioms(FiniteField::make(5, 2));

  CHECK_THROWS_AS(FiniteField::make(4, 1), ArgumentError);
  CHECK_THROWS_AS(FiniteField::make(3, 0), ArgumentError);
  CHECK_THROWS_AS(FiniteField::with_modulus(3, {1, 0, 1, 0}), ArgumentError);  // not monic
  CHECK_THROWS_AS(FiniteField::with_modulus(3, {2, 0, 1}), ArgumentError);     // x^2 - 1 reducible
}

TEST_CASE("prime powers") {
  CHECK(factor_prime_power(81).p == 3);
  CHECK(factor_prime_power(81).k == 4);
  CHECK(factor_prime_power(97).k == 1);
  CHECK_THROWS_AS(factor_prime_power(45), ArgumentError);
  CHECK_THROWS_AS(factor_prime_power(1), ArgumentError);
}

TEST_CASE("quadratic residues") {
  const auto r5 = residues(FiniteField::make(5, 1));
  CHECK(r5.residues == ElementSet{1, 4});
  CHECK(r5.nonresidues == ElementSet{2, 3});

  const auto r13 = residues(FiniteField::make(13, 1));
  const auto sq = oracle::squares_mod(13);
  CHECK(r13.residues == ElementSet(sq.begin(), sq.end()));
  CHECK(r13.residues == ElementSet{1, 3, 4, 9, 10, 12});

  CHECK(residues(FiniteField::make(3, 2)).residues.size() == 4);
  CHECK_THROWS_AS(residues(FiniteField::make(2, 3)), ArgumentError);
}

TEST_CASE("residue difference counts") {
  const auto t5 = residue_difference_counts(FiniteField::make(5, 1));
  CHECK(t5.all_match());
  CHECK(t5.rows[0].d == 1);
  CHECK(t5.rows[0].qq == 0);

  const auto t13 = residue_difference_counts(FiniteField::make(13, 1));
  const auto& row2 = t13.rows[1];
  CHECK(row2.d == 2);
  CHECK_FALSE(row2.d_is_residue);
  CHECK(row2.nn == 2);

  const auto t9 = residue_difference_counts(FiniteField::make(3, 2));
  for (const auto& row : t9.rows) CHECK(row.qn == 2);

  // Closed forms against direct counting mod p.
  for (std::uint32_t p : {5u, 13u, 17u, 29u, 37u, 41u, 53u}) {
    const auto q = oracle::squares_mod(p);
    const auto t = residue_difference_counts(FiniteField::make(p, 1));
    for (const auto& row : t.rows) {
      std::size_t qq = 0;
      for (auto a : q)
        for (auto b : q)
          if ((a + p - b) % p == row.d) ++qq;
      CHECK(row.qq == qq);
      CHECK(row.qq == (q.count(row.d) ? (p - 1) / 4 - 1 : (p - 1) / 4));
    }
  }

  CHECK_THROWS_AS(residue_difference_counts(FiniteField::make(7, 1)), ArgumentError);
}

TEST_CASE("cayley_two_block") {
  CHECK(cayley_two_block(CyclicGroup{3}, {{1, 2}, {}, {1, 2}}).edge_count() == 6);

  const auto f5 = FiniteField::make(5, 1);
  const auto r5 = residues(f5);
  const Graph g = cayley_two_block(f5, {r5.residues, r5.residues, r5.nonresidues});
  CHECK(g.order() == 10);
  CHECK(oracle::ramsey(g, 2, 3));
  CHECK(is_ramsey_graph(g, {2, 3}));

  std::mt19937_64 rng(21);
  for (int t = 0; t < 100; ++t) {
    const auto s = oracle::random_spec(rng, 20);
    const auto spec = oracle::to_spec(s);
    CHECK(cayley_two_block(CyclicGroup{s.m}, spec.sets()) == expand(spec));
  }
}

TEST_CASE("Paley-type book graphs") {
  const Graph g5 = paley_book_graph(5);
  CHECK(g5.order() == 10);
  CHECK(oracle::ramsey(g5, 2, 3));

  const Graph g13 = paley_book_graph(13);
  CHECK(g13.order() == 26);
  CHECK(oracle::ramsey(g13, 6, 7));
  for (Vertex v = 1; v < 13; ++v)
    if (g13.has_edge(0, v)) CHECK(oracle::common(g13, 0, v) == 4);

  const Graph g9 = paley_book_graph(9);
  CHECK(g9.order() == 18);
  CHECK(oracle::ramsey(g9, 4, 5));

  CHECK_THROWS_AS(paley_book_graph(7), ArgumentError);
  CHECK_THROWS_AS(paley_book_graph(21), ArgumentError);
}

TEST_CASE("GF(9) constructions agree up to isomorphism across moduli") {
  const Graph base = paley_book_graph(FiniteField::make(3, 2));
  int irreducible = 0;
  for (std::uint32_t c0 = 0; c0 < 3; ++c0) {
    for (std::uint32_t c1 = 0; c1 < 3; ++c1) {
      const std::vector<std::uint32_t> poly = {c0, c1, 1};
      if (!is_irreducible(3, poly)) continue;
      ++irreducible;
      const auto f = FiniteField::with_modulus(3, poly);
      CHECK(isomorphic(paley_book_graph(f), base));
      CHECK(paley_book_conditions(f).pass);
    }
  }
  CHECK(irreducible == 3);  // monic irreducible quadratics over F_3: (9 - 3) / 2
}

TEST_CASE("Paley graph") {
  const Graph p9 = paley_graph(FiniteField::make(3, 2));
  CHECK(isomorphic(p9, complement(p9)));
  for (const auto& [u, v] : p9.edges()) CHECK(oracle::common(p9, u, v) == 1);
}
