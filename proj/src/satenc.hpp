#pragma once

// CNF encodings for "no B_r in G and no B_s in the complement of G" on a
// fixed vertex count, plus DIMACS I/O and model checking.

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "graph.hpp"

namespace bookramsey {

using Literal = std::int32_t;
using Clause = std::vector<Literal>;

struct CnfFormula {
  std::uint32_t num_vars = 0;
  std::vector<Clause> clauses;

  // Rejects zero literals, literals beyond num_vars and tautologies.
  void add_clause(Clause c);
};

// Index 0 unused; entries are 0/1, anything else counts as unassigned.
using Assignment = std::vector<std::int8_t>;

// Totalizer tree for one at-most-k constraint. Each node's outputs[j] is a
// literal meaning "at least j+1 inputs in this subtree are true", truncated
// at k+1 outputs. Leaves carry their input literal as their single output.
struct TotalizerNode {
  std::vector<Literal> outputs;
  std::int32_t left = -1;
  std::int32_t right = -1;
};

struct CardinalityNetwork {
  std::vector<Literal> inputs;
  std::uint32_t k = 0;
  std::vector<TotalizerNode> nodes;  // children precede parents; root last
};

struct AtMostK {
  std::vector<Clause> clauses;
  std::uint32_t aux_count = 0;
  CardinalityNetwork network;
};

// New auxiliaries are numbered next_var, next_var+1, ...
AtMostK at_most_k(const std::vector<Literal>& literals, std::int64_t k, std::uint32_t next_var);

// Sets every totalizer output to its exact "at least j" value given the inputs.
void evaluate_network(const CardinalityNetwork& net, Assignment& a);

// One adjacent-transposition lex constraint. pairs[t] = (p_t, q_t) are the
// x-variables compared at the t-th first-differing position; equal[t] is the
// auxiliary meaning "pairs 0..t all equal" (one fewer than pairs).
struct SymmetryChain {
  Vertex i = 0;  // transposition (i, i+1)
  std::vector<std::pair<Literal, Literal>> pairs;
  std::vector<Literal> equal;
};

struct PairCardinality {
  Vertex i = 0;
  Vertex j = 0;
  bool complement_family = false;  // y' family when true
  CardinalityNetwork network;
};

class VarMap {
 public:
  VarMap() = default;
  explicit VarMap(std::uint32_t n);

  std::uint32_t order() const { return n_; }
  Literal x(Vertex i, Vertex j) const;               // unordered pair
  Literal y(Vertex i, Vertex j, Vertex k) const;     // unordered triple
  Literal yp(Vertex i, Vertex j, Vertex k) const;
  std::uint32_t base_vars() const { return pairs_ + 2 * triples_; }
  std::uint32_t num_vars() const { return num_vars_; }

  std::vector<PairCardinality> cardinality;
  std::vector<SymmetryChain> symmetry;

  std::uint32_t allocate(std::uint32_t count);  // returns first new index

 private:
  std::uint32_t pair_rank(Vertex i, Vertex j) const;
  std::uint32_t triple_rank(Vertex i, Vertex j, Vertex k) const;

  std::uint32_t n_ = 0;
  std::uint32_t pairs_ = 0;
  std::uint32_t triples_ = 0;
  std::uint32_t num_vars_ = 0;
};

struct BooksOptions {
  bool symmetry_breaking = false;
};

struct BooksEncoding {
  CnfFormula formula;
  VarMap vars;
};

// Clauses: Tseitin triangle implications per triple, then per pair {i,j} an
// at-most-(r-1) over y_ijk and an at-most-(s-1) over y'_ijk, then optional
// transposition symmetry breaking. Requires n <= 128.
BooksEncoding encode_books(std::uint32_t n, BookParams p, BooksOptions opts = {});

// One clause per embedded B_r (negative) and per B_s in the complement
// (positive), over x-variables only. Requires n <= 12.
CnfFormula encode_naive(std::uint32_t n, BookParams p);

// Lex-leader clauses for adjacent transpositions, appended to `out`;
// chains are recorded in vm.symmetry.
void symmetry_breaking_clauses(std::uint32_t n, VarMap& vm, std::vector<Clause>& out);

bool check_model(const CnfFormula& f, const Assignment& a);

// x from edges, y/y' exact triangle indicators, auxiliaries evaluated.
Assignment graph_to_assignment(const Graph& g, const VarMap& vm);
Graph assignment_to_graph(const Assignment& a, const VarMap& vm);

void write_dimacs(const CnfFormula& f, std::ostream& os);
std::string to_dimacs(const CnfFormula& f);
CnfFormula parse_dimacs(std::string_view text);

// Sidecar listing "x i j var", "y i j k var", "yp i j k var" and the
// auxiliary range.
std::string write_var_map(const VarMap& vm);

}  // namespace bookramsey
