#include "satenc.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <ostream>
#include <sstream>

#include "error.hpp"

namespace bookramsey {

void CnfFormula::add_clause(Clause c) {
  for (auto lit : c) {
    if (lit == 0) throw ArgumentError("zero literal in clause");
    if (static_cast<std::uint32_t>(std::abs(lit)) > num_vars) {
      throw ArgumentError("literal " + std::to_string(lit) + " exceeds variable count");
    }
    if (std::find(c.begin(), c.end(), -lit) != c.end()) throw ArgumentError("tautological clause");
  }
  clauses.push_back(std::move(c));
}

// ---------------------------------------------------------------------------
// Totalizer

namespace {

bool lit_value(const Assignment& a, Literal lit) {
  const auto v = static_cast<std::size_t>(std::abs(lit));
  return lit > 0 ? a[v] == 1 : a[v] == 0;
}

struct TotalizerBuilder {
  std::uint32_t cap;  // k + 1
  std::uint32_t next;
  std::vector<Clause>& clauses;
  CardinalityNetwork& net;

  std::int32_t build(std::size_t lo, std::size_t hi) {
    if (hi - lo == 1) {
      net.nodes.push_back({{net.inputs[lo]}, -1, -1});
      return static_cast<std::int32_t>(net.nodes.size() - 1);
    }
    const std::size_t mid = lo + (hi - lo) / 2;
    const std::int32_t l = build(lo, mid);
    const std::int32_t r = build(mid, hi);
    const auto width = static_cast<std::uint32_t>(std::min<std::size_t>(hi - lo, cap));
    TotalizerNode node;
    node.left = l;
    node.right = r;
    for (std::uint32_t j = 0; j < width; ++j) node.outputs.push_back(static_cast<Literal>(next++));
    const auto& lo_out = net.nodes[static_cast<std::size_t>(l)].outputs;
    const auto& hi_out = net.nodes[static_cast<std::size_t>(r)].outputs;
    // (a true on the left) and (b true on the right) imply >= a+b here.
    for (std::size_t a = 0; a <= lo_out.size(); ++a) {
      for (std::size_t b = 0; b <= hi_out.size(); ++b) {
        if (a + b == 0) continue;
        const std::size_t c = std::min<std::size_t>(a + b, width);
        Clause cl;
        if (a > 0) cl.push_back(-lo_out[a - 1]);
        if (b > 0) cl.push_back(-hi_out[b - 1]);
        cl.push_back(node.outputs[c - 1]);
        clauses.push_back(std::move(cl));
      }
    }
    net.nodes.push_back(std::move(node));
    return static_cast<std::int32_t>(net.nodes.size() - 1);
  }
};

}  // namespace

AtMostK at_most_k(const std::vector<Literal>& literals, std::int64_t k, std::uint32_t next_var) {
  if (k < 0) throw ArgumentError("at_most_k: k must be >= 0");
  AtMostK out;
  out.network.inputs = literals;
  out.network.k = static_cast<std::uint32_t>(std::min<std::int64_t>(k, literals.size()));
  if (static_cast<std::size_t>(k) >= literals.size()) return out;
  if (k == 0) {
    for (auto lit : literals) out.clauses.push_back({-lit});
    return out;
  }
  TotalizerBuilder b{static_cast<std::uint32_t>(k) + 1, next_var, out.clauses, out.network};
  b.build(0, literals.size());
  const auto& root = out.network.nodes.back();
  // The root has exactly k+1 outputs since |literals| > k.
  out.clauses.push_back({-root.outputs[static_cast<std::size_t>(k)]});
  out.aux_count = b.next - next_var;
  return out;
}

void evaluate_network(const CardinalityNetwork& net, Assignment& a) {
  std::vector<std::size_t> count(net.nodes.size(), 0);
  for (std::size_t idx = 0; idx < net.nodes.size(); ++idx) {
    const auto& node = net.nodes[idx];
    if (node.left < 0) {
      count[idx] = lit_value(a, node.outputs[0]) ? 1 : 0;
      continue;
    }
    count[idx] = count[static_cast<std::size_t>(node.left)] + count[static_cast<std::size_t>(node.right)];
    for (std::size_t j = 0; j < node.outputs.size(); ++j) {
      a[static_cast<std::size_t>(node.outputs[j])] = count[idx] >= j + 1 ? 1 : 0;
    }
  }
}

// ---------------------------------------------------------------------------
// Variable layout

VarMap::VarMap(std::uint32_t n) : n_(n) {
  pairs_ = n * (n - (n > 0 ? 1 : 0)) / 2;
  triples_ = n >= 3 ? n * (n - 1) * (n - 2) / 6 : 0;
  num_vars_ = pairs_ + 2 * triples_;
}

std::uint32_t VarMap::pair_rank(Vertex i, Vertex j) const {
  if (i > j) std::swap(i, j);
  if (i == j || j >= n_) throw ArgumentError("bad vertex pair");
  return i * n_ - i * (i + 1) / 2 + (j - i - 1);
}

std::uint32_t VarMap::triple_rank(Vertex i, Vertex j, Vertex k) const {
  Vertex t[3] = {i, j, k};
  std::sort(t, t + 3);
  if (t[0] == t[1] || t[1] == t[2] || t[2] >= n_) throw ArgumentError("bad vertex triple");
  auto c2 = [](std::uint32_t m) { return m * (m - (m > 0 ? 1 : 0)) / 2; };
  std::uint32_t rank = 0;
  for (Vertex a = 0; a < t[0]; ++a) rank += c2(n_ - 1 - a);
  for (Vertex b = t[0] + 1; b < t[1]; ++b) rank += n_ - 1 - b;
  return rank + (t[2] - t[1] - 1);
}

Literal VarMap::x(Vertex i, Vertex j) const { return static_cast<Literal>(1 + pair_rank(i, j)); }
Literal VarMap::y(Vertex i, Vertex j, Vertex k) const {
  return static_cast<Literal>(1 + pairs_ + triple_rank(i, j, k));
}
Literal VarMap::yp(Vertex i, Vertex j, Vertex k) const {
  return static_cast<Literal>(1 + pairs_ + triples_ + triple_rank(i, j, k));
}

std::uint32_t VarMap::allocate(std::uint32_t count) {
  const std::uint32_t first = num_vars_ + 1;
  num_vars_ += count;
  return first;
}

// ---------------------------------------------------------------------------
// Encodings

void symmetry_breaking_clauses(std::uint32_t n, VarMap& vm, std::vector<Clause>& out) {
  for (Vertex i = 0; i + 1 < n; ++i) {
    SymmetryChain chain;
    chain.i = i;
    // First occurrences in row-major upper-triangle order: rows a < i, then row i.
    for (Vertex a = 0; a < n; ++a) {
      if (a == i || a == i + 1) continue;
      chain.pairs.emplace_back(vm.x(a, i), vm.x(a, i + 1));
    }
    if (chain.pairs.empty()) {
      vm.symmetry.push_back(std::move(chain));
      continue;
    }
    const auto extra = static_cast<std::uint32_t>(chain.pairs.size() - 1);
    const std::uint32_t first = extra ? vm.allocate(extra) : 0;
    for (std::uint32_t t = 0; t < extra; ++t) chain.equal.push_back(static_cast<Literal>(first + t));
    for (std::size_t t = 0; t < chain.pairs.size(); ++t) {
      const auto [p, q] = chain.pairs[t];
      Clause le;
      if (t > 0) le.push_back(-chain.equal[t - 1]);
      le.push_back(-p);
      le.push_back(q);
      out.push_back(std::move(le));
      if (t < extra) {
        Clause both_false;
        Clause both_true;
        if (t > 0) {
          both_false.push_back(-chain.equal[t - 1]);
          both_true.push_back(-chain.equal[t - 1]);
        }
        both_false.insert(both_false.end(), {p, q, chain.equal[t]});
        both_true.insert(both_true.end(), {-p, -q, chain.equal[t]});
        out.push_back(std::move(both_false));
        out.push_back(std::move(both_true));
      }
    }
    vm.symmetry.push_back(std::move(chain));
  }
}

BooksEncoding encode_books(std::uint32_t n, BookParams p, BooksOptions opts) {
  if (n < 1 || n > 128) throw ArgumentError("encode_books: n must be in [1, 128]");
  BooksEncoding enc;
  enc.vars = VarMap(n);
  VarMap& vm = enc.vars;
  std::vector<Clause> clauses;

  for (Vertex i = 0; i < n; ++i) {
    for (Vertex j = i + 1; j < n; ++j) {
      for (Vertex k = j + 1; k < n; ++k) {
        clauses.push_back({-vm.x(i, j), -vm.x(i, k), -vm.x(j, k), vm.y(i, j, k)});
        clauses.push_back({vm.x(i, j), vm.x(i, k), vm.x(j, k), vm.yp(i, j, k)});
      }
    }
  }

  for (Vertex i = 0; i < n; ++i) {
    for (Vertex j = i + 1; j < n; ++j) {
      for (bool comp : {false, true}) {
        std::vector<Literal> lits;
        for (Vertex k = 0; k < n; ++k) {
          if (k == i || k == j) continue;
          lits.push_back(comp ? vm.yp(i, j, k) : vm.y(i, j, k));
        }
        const std::int64_t bound = static_cast<std::int64_t>(comp ? p.s : p.r) - 1;
        auto amk = at_most_k(lits, bound, vm.num_vars() + 1);
        vm.allocate(amk.aux_count);
        clauses.insert(clauses.end(), amk.clauses.begin(), amk.clauses.end());
        if (!amk.clauses.empty()) vm.cardinality.push_back({i, j, comp, std::move(amk.network)});
      }
    }
  }

  if (opts.symmetry_breaking && n >= 2) symmetry_breaking_clauses(n, vm, clauses);

  enc.formula.num_vars = vm.num_vars();
  enc.formula.clauses = std::move(clauses);
  return enc;
}

namespace {

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  std::uint64_t r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

// Calls f on every size-k subset of `pool`, in lexicographic order.
template <class F>
void for_each_subset(const std::vector<Vertex>& pool, std::size_t k, F&& f) {
  if (k > pool.size()) return;
  std::vector<std::size_t> idx(k);
  std::iota(idx.begin(), idx.end(), 0);
  std::vector<Vertex> pick(k);
  while (true) {
    for (std::size_t t = 0; t < k; ++t) pick[t] = pool[idx[t]];
    f(pick);
    std::size_t t = k;
    while (t > 0 && idx[t - 1] == pool.size() - k + t - 1) --t;
    if (t == 0) return;
    ++idx[t - 1];
    for (std::size_t u = t; u < k; ++u) idx[u] = idx[u - 1] + 1;
  }
}

}  // namespace

CnfFormula encode_naive(std::uint32_t n, BookParams p) {
  if (n > 12 || n < 1) {
    const std::uint64_t estimate = binomial(n, 2) * (binomial(n - 2, p.r) + binomial(n - 2, p.s));
    throw ArgumentError("encode_naive: n = " + std::to_string(n) +
                        " outside [1, 12]; the formula would have " + std::to_string(estimate) +
                        " clauses");
  }
  VarMap vm(n);
  CnfFormula f;
  f.num_vars = n * (n - 1) / 2;
  for (bool comp : {false, true}) {
    const std::size_t pages = comp ? p.s : p.r;
    for (Vertex i = 0; i < n; ++i) {
      for (Vertex j = i + 1; j < n; ++j) {
        std::vector<Vertex> others;
        for (Vertex k = 0; k < n; ++k)
          if (k != i && k != j) others.push_back(k);
        for_each_subset(others, pages, [&](const std::vector<Vertex>& ks) {
          Clause c{vm.x(i, j)};
          for (auto k : ks) {
            c.push_back(vm.x(i, k));
            c.push_back(vm.x(j, k));
          }
          if (!comp)
            for (auto& lit : c) lit = -lit;
          f.clauses.push_back(std::move(c));
        });
      }
    }
  }
  return f;
}

bool check_model(const CnfFormula& f, const Assignment& a) {
  if (a.size() < static_cast<std::size_t>(f.num_vars) + 1) {
    throw ArgumentError("assignment covers " + std::to_string(a.empty() ? 0 : a.size() - 1) +
                        " of " + std::to_string(f.num_vars) + " variables");
  }
  for (std::uint32_t v = 1; v <= f.num_vars; ++v) {
    if (a[v] != 0 && a[v] != 1) throw ArgumentError("variable " + std::to_string(v) + " is unassigned");
  }
  for (const auto& c : f.clauses) {
    if (std::none_of(c.begin(), c.end(), [&](Literal l) { return lit_value(a, l); })) return false;
  }
  return true;
}

Assignment graph_to_assignment(const Graph& g, const VarMap& vm) {
  const std::uint32_t n = vm.order();
  if (g.order() != n) throw ArgumentError("graph order does not match the variable map");
  Assignment a(static_cast<std::size_t>(vm.num_vars()) + 1, 0);
  for (Vertex i = 0; i < n; ++i)
    for (Vertex j = i + 1; j < n; ++j) a[static_cast<std::size_t>(vm.x(i, j))] = g.has_edge(i, j);
  for (Vertex i = 0; i < n; ++i) {
    for (Vertex j = i + 1; j < n; ++j) {
      for (Vertex k = j + 1; k < n; ++k) {
        const bool e1 = g.has_edge(i, j), e2 = g.has_edge(i, k), e3 = g.has_edge(j, k);
        a[static_cast<std::size_t>(vm.y(i, j, k))] = e1 && e2 && e3;
        a[static_cast<std::size_t>(vm.yp(i, j, k))] = !e1 && !e2 && !e3;
      }
    }
  }
  for (const auto& pc : vm.cardinality) evaluate_network(pc.network, a);
  for (const auto& chain : vm.symmetry) {
    bool equal = true;
    for (std::size_t t = 0; t < chain.equal.size(); ++t) {
      equal = equal && (lit_value(a, chain.pairs[t].first) == lit_value(a, chain.pairs[t].second));
      a[static_cast<std::size_t>(chain.equal[t])] = equal;
    }
  }
  return a;
}

Graph assignment_to_graph(const Assignment& a, const VarMap& vm) {
  Graph g(vm.order());
  for (Vertex i = 0; i < vm.order(); ++i)
    for (Vertex j = i + 1; j < vm.order(); ++j)
      if (a.at(static_cast<std::size_t>(vm.x(i, j))) == 1) g.add_edge(i, j);
  return g;
}

void write_dimacs(const CnfFormula& f, std::ostream& os) {
  os << "p cnf " << f.num_vars << ' ' << f.clauses.size() << '\n';
  for (const auto& c : f.clauses) {
    for (auto lit : c) os << lit << ' ';
    os << "0\n";
  }
}

std::string to_dimacs(const CnfFormula& f) {
  std::ostringstream os;
  write_dimacs(f, os);
  return os.str();
}

CnfFormula parse_dimacs(std::string_view text) {
  std::istringstream is{std::string(text)};
  std::string line;
  std::size_t line_no = 0;
  bool have_header = false;
  std::size_t declared_clauses = 0;
  CnfFormula f;
  Clause current;
  while (std::getline(is, line)) {
    ++line_no;
    if (line.empty() || line[0] == 'c') continue;
    std::istringstream ls(line);
    if (line[0] == 'p') {
      std::string p, cnf;
      long long vars = -1, clauses = -1;
      if (have_header || !(ls >> p >> cnf >> vars >> clauses) || cnf != "cnf" || vars < 0 || clauses < 0) {
        throw ParseError("dimacs: bad header on line " + std::to_string(line_no));
      }
      have_header = true;
      f.num_vars = static_cast<std::uint32_t>(vars);
      declared_clauses = static_cast<std::size_t>(clauses);
      continue;
    }
    if (!have_header) throw ParseError("dimacs: clause before header on line " + std::to_string(line_no));
    long long lit = 0;
    while (ls >> lit) {
      if (lit == 0) {
        f.add_clause(std::move(current));
        current.clear();
      } else {
        if (static_cast<std::uint64_t>(std::llabs(lit)) > f.num_vars) {
          throw ParseError("dimacs: literal out of range on line " + std::to_string(line_no));
        }
        current.push_back(static_cast<Literal>(lit));
      }
    }
    if (!ls.eof()) throw ParseError("dimacs: bad token on line " + std::to_string(line_no));
  }
  if (!have_header) throw ParseError("dimacs: missing header");
  if (!current.empty()) throw ParseError("dimacs: unterminated final clause");
  if (f.clauses.size() != declared_clauses) {
    throw ParseError("dimacs: header declares " + std::to_string(declared_clauses) + " clauses, found " +
                     std::to_string(f.clauses.size()));
  }
  return f;
}

std::string write_var_map(const VarMap& vm) {
  std::ostringstream os;
  const std::uint32_t n = vm.order();
  for (Vertex i = 0; i < n; ++i)
    for (Vertex j = i + 1; j < n; ++j) os << "x " << i << ' ' << j << ' ' << vm.x(i, j) << '\n';
  for (Vertex i = 0; i < n; ++i)
    for (Vertex j = i + 1; j < n; ++j)
      for (Vertex k = j + 1; k < n; ++k) os << "y " << i << ' ' << j << ' ' << k << ' ' << vm.y(i, j, k) << '\n';
  for (Vertex i = 0; i < n; ++i)
    for (Vertex j = i + 1; j < n; ++j)
      for (Vertex k = j + 1; k < n; ++k) os << "yp " << i << ' ' << j << ' ' << k << ' ' << vm.yp(i, j, k) << '\n';
  if (vm.num_vars() > vm.base_vars()) os << "aux " << vm.base_vars() + 1 << ' ' << vm.num_vars() << '\n';
  return os.str();
}

}  // namespace bookramsey
