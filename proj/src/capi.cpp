#include "bookramsey/bookramsey.h"

#include <cstdlib>
#include <cstring>
#include <string>

#include <json.hpp>

#include "canon.hpp"
#include "circulant.hpp"
#include "error.hpp"
#include "field.hpp"
#include "graph.hpp"
#include "ipenc.hpp"
#include "satenc.hpp"
#include "search.hpp"
#include "witness.hpp"

using nlohmann::ordered_json;
using namespace bookramsey;

struct br_graph {
  Graph g;
};
struct br_spec {
  BlockCirculantSpec spec;
};
struct br_enumeration {
  EnumerationResult result;
  bool complete = true;
};
struct br_registry {
  BoundsRegistry reg;
};

namespace {

thread_local std::string last_error;

char* dup(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out) std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

br_status fail(br_status code, const std::string& msg) {
  last_error = msg;
  return code;
}

template <class F>
br_status guarded(F&& f) {
  last_error.clear();
  try {
    return f();
  } catch (const BudgetExceeded& e) {
    return fail(BR_ERR_BUDGET, e.what());
  } catch (const Inconclusive& e) {
    return fail(BR_ERR_INCONCLUSIVE, e.what());
  } catch (const ArgumentError& e) {
    return fail(BR_ERR_ARGUMENT, e.what());
  } catch (const ParseError& e) {
    return fail(BR_ERR_PARSE, e.what());
  } catch (const ValidationError& e) {
    return fail(BR_ERR_VALIDATION, e.what());
  } catch (const std::filesystem::filesystem_error& e) {
    return fail(BR_ERR_IO, e.what());
  } catch (const std::bad_alloc&) {
    return fail(BR_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(BR_ERR_INTERNAL, e.what());
  }
}

#define BR_REQUIRE(cond, what) \
  if (!(cond)) return fail(BR_ERR_ARGUMENT, what)

ordered_json scan_json(const BookScan& scan) {
  ordered_json j;
  j["max_pages"] = scan.max_pages;
  if (scan.argmax) {
    j["argmax"] = {scan.argmax->first, scan.argmax->second};
  } else {
    j["argmax"] = nullptr;
  }
  return j;
}

ordered_json ramsey_json(const RamseyReport& rep, BookParams p, std::size_t order) {
  ordered_json j;
  j["pass"] = rep.pass;
  j["vertices"] = order;
  j["r"] = p.r;
  j["s"] = p.s;
  j["graph_side"] = scan_json(rep.graph_side);
  j["complement_side"] = scan_json(rep.complement_side);
  if (!rep.pass) {
    const bool graph_bad = rep.graph_side.max_pages >= p.r;
    const auto& side = graph_bad ? rep.graph_side : rep.complement_side;
    j["violation"] = {{"side", graph_bad ? "graph" : "complement"},
                      {"pair", {side.argmax->first, side.argmax->second}},
                      {"pages", side.max_pages}};
  }
  return j;
}

ordered_json conditions_json(const ConditionReport& rep) {
  ordered_json j;
  j["pass"] = rep.pass;
  j["families"] = ordered_json::array();
  for (const auto& f : rep.families) {
    ordered_json fj;
    fj["name"] = f.name;
    fj["complement_side"] = f.complement_side;
    fj["bound"] = f.bound;
    fj["max_value"] = f.max_value;
    fj["domain_size"] = f.domain_size;
    fj["pass"] = f.pass();
    fj["violating_d"] = f.violating_d ? ordered_json(*f.violating_d) : ordered_json(nullptr);
    j["families"].push_back(fj);
  }
  return j;
}

ordered_json verification_json(const VerificationReport& rep) {
  ordered_json j;
  j["claim"] = rep.claim;
  j["pass"] = rep.pass;
  j["expected_vertices"] = rep.expected_order;
  j["report"] = ramsey_json(rep.ramsey, rep.params, rep.order);
  if (rep.conditions) j["conditions"] = conditions_json(*rep.conditions);
  j["conditions_agree"] = rep.conditions_agree;
  if (!rep.failure.empty()) j["failure"] = rep.failure;
  return j;
}

ordered_json stats_json(const EnumerationStats& st) {
  ordered_json j;
  j["level_counts"] = st.level_counts;
  j["extensions"] = st.extensions;
  j["accepted"] = st.accepted;
  j["elapsed_seconds"] = st.elapsed_seconds;
  return j;
}

ordered_json optional_json(const std::optional<std::uint32_t>& v) {
  return v ? ordered_json(*v) : ordered_json(nullptr);
}

br_status emit(char** out, const ordered_json& j) {
  if (out) *out = dup(j.dump());
  return BR_OK;
}

}  // namespace

extern "C" {

const char* br_version(void) { return "1.0.0"; }

const char* br_last_error(void) { return last_error.c_str(); }

void br_string_free(char* s) { std::free(s); }

br_status br_graph_from_graph6(const char* text, br_graph** out) {
  return guarded([&] {
    BR_REQUIRE(text && out, "null argument");
    std::string t(text);
    while (!t.empty() && (t.back() == '\n' || t.back() == '\r' || t.back() == ' ')) t.pop_back();
    *out = new br_graph{from_graph6(t)};
    return BR_OK;
  });
}

br_status br_graph_from_matrix(const char* text, br_graph** out) {
  return guarded([&] {
    BR_REQUIRE(text && out, "null argument");
    *out = new br_graph{parse_adjacency_text(text)};
    return BR_OK;
  });
}

br_status br_graph_parse(const char* text, br_graph** out) {
  return guarded([&] {
    BR_REQUIRE(text && out, "null argument");
    std::string t(text);
    const auto b = t.find_first_not_of(" \t\r\n");
    const auto e = t.find_last_not_of(" \t\r\n");
    const std::string core = b == std::string::npos ? std::string() : t.substr(b, e - b + 1);
    const bool single_token = !core.empty() && core.find_first_of(" \t\r\n,[") == std::string::npos &&
                              core.find_first_not_of("01") != std::string::npos;
    *out = new br_graph{single_token ? from_graph6(core) : parse_adjacency_text(t)};
    return BR_OK;
  });
}

br_status br_graph_complete_bipartite(uint32_t a, uint32_t b, br_graph** out) {
  return guarded([&] {
    BR_REQUIRE(out, "null argument");
    *out = new br_graph{complete_bipartite(a, b)};
    return BR_OK;
  });
}

void br_graph_free(br_graph* g) { delete g; }

size_t br_graph_order(const br_graph* g) { return g ? g->g.order() : 0; }

br_status br_graph_has_edge(const br_graph* g, uint32_t u, uint32_t v, int* out) {
  return guarded([&] {
    BR_REQUIRE(g && out, "null argument");
    BR_REQUIRE(u < g->g.order() && v < g->g.order(), "vertex out of range");
    *out = u != v && g->g.has_edge(u, v);
    return BR_OK;
  });
}

br_status br_graph_to_graph6(const br_graph* g, char** out) {
  return guarded([&] {
    BR_REQUIRE(g && out, "null argument");
    *out = dup(to_graph6(g->g));
    return BR_OK;
  });
}

br_status br_graph_to_matrix(const br_graph* g, char** out) {
  return guarded([&] {
    BR_REQUIRE(g && out, "null argument");
    *out = dup(to_adjacency_text(g->g));
    return BR_OK;
  });
}

br_status br_graph_canonical_form(const br_graph* g, char** out) {
  return guarded([&] {
    BR_REQUIRE(g && out, "null argument");
    *out = dup(canonical_form(g->g).graph6);
    return BR_OK;
  });
}

br_status br_graph_check(const br_graph* g, uint32_t r, uint32_t s, int* pass, char** report) {
  return guarded([&] {
    BR_REQUIRE(g, "null graph");
    const BookParams p(r, s);
    const auto rep = ramsey_report(g->g, p);
    if (pass) *pass = rep.pass;
    return emit(report, ramsey_json(rep, p, g->g.order()));
  });
}

br_status br_paley_book_graph(uint64_t q, br_graph** out) {
  return guarded([&] {
    BR_REQUIRE(out, "null argument");
    *out = new br_graph{paley_book_graph(q)};
    return BR_OK;
  });
}

br_status br_paley_report(uint64_t q, int* pass, char** report) {
  return guarded([&] {
    const auto pk = factor_prime_power(q);
    BR_REQUIRE(q % 4 == 1, "Paley-type construction needs q = 1 (mod 4), got " + std::to_string(q));
    const auto f = FiniteField::make(pk.p, pk.k);
    const std::uint32_t n = static_cast<std::uint32_t>((q + 1) / 2);
    const BookParams p(n - 1, n);
    const Graph g = paley_book_graph(f);
    const auto rep = ramsey_report(g, p);
    const auto cond = paley_book_conditions(f);
    const auto table = residue_difference_counts(f);
    ordered_json j;
    j["q"] = q;
    j["n"] = n;
    j["claim"] = "R(B_" + std::to_string(n - 1) + ",B_" + std::to_string(n) + ") >= " + std::to_string(4 * n - 1);
    j["modulus"] = f.modulus();
    j["graph6"] = to_graph6(g);
    j["report"] = ramsey_json(rep, p, g.order());
    j["conditions"] = conditions_json(cond);
    j["residue_counts_match"] = table.all_match();
    const bool ok = rep.pass && cond.pass && table.all_match();
    j["pass"] = ok;
    if (pass) *pass = ok;
    return emit(report, j);
  });
}

br_status br_spec_parse(const char* text, br_spec** out) {
  return guarded([&] {
    BR_REQUIRE(text && out, "null argument");
    *out = new br_spec{parse_spec(text)};
    return BR_OK;
  });
}

void br_spec_free(br_spec* spec) { delete spec; }

br_status br_spec_format(const br_spec* spec, char** out) {
  return guarded([&] {
    BR_REQUIRE(spec && out, "null argument");
    *out = dup(format_spec(spec->spec));
    return BR_OK;
  });
}

br_status br_spec_expand(const br_spec* spec, br_graph** out) {
  return guarded([&] {
    BR_REQUIRE(spec && out, "null argument");
    *out = new br_graph{expand(spec->spec)};
    return BR_OK;
  });
}

br_status br_spec_check(const br_spec* spec, uint32_t r, uint32_t s, int* pass, char** report) {
  return guarded([&] {
    BR_REQUIRE(spec, "null spec");
    const BookParams p(r, s);
    const auto cond = check_book_conditions(spec->spec, p);
    const Graph g = expand(spec->spec);
    const auto rep = ramsey_report(g, p);
    ordered_json j;
    j["spec"] = format_spec(spec->spec);
    j["vertices"] = g.order();
    j["claim"] = "R(B_" + std::to_string(r) + ",B_" + std::to_string(s) + ") >= " + std::to_string(g.order() + 1);
    j["conditions"] = conditions_json(cond);
    j["report"] = ramsey_json(rep, p, g.order());
    j["agree"] = cond.pass == rep.pass;
    j["pass"] = cond.pass && rep.pass;
    if (pass) *pass = cond.pass && rep.pass;
    return emit(report, j);
  });
}

br_status br_encode_sat(uint32_t n, uint32_t r, uint32_t s, int symmetry, char** dimacs, char** var_map) {
  return guarded([&] {
    BR_REQUIRE(dimacs, "null argument");
    const auto enc = encode_books(n, BookParams(r, s), BooksOptions{symmetry != 0});
    *dimacs = dup(to_dimacs(enc.formula));
    if (var_map) *var_map = dup(write_var_map(enc.vars));
    return BR_OK;
  });
}

br_status br_encode_ip(uint32_t m, uint32_t r, uint32_t s, int complement_ansatz, int d11_eq_d12,
                       const uint32_t* pinned, size_t pinned_count, char** lp) {
  return guarded([&] {
    BR_REQUIRE(lp, "null argument");
    BR_REQUIRE(pinned || pinned_count == 0, "null pin list");
    IpOptions opts{complement_ansatz != 0, d11_eq_d12 != 0, {pinned, pinned + pinned_count}};
    *lp = dup(to_lp(encode_block_circulant_ip(m, BookParams(r, s), opts)));
    return BR_OK;
  });
}

br_status br_decode_ip(uint32_t m, const char* solution, int complement_ansatz, br_spec** out) {
  return guarded([&] {
    BR_REQUIRE(solution && out, "null argument");
    BR_REQUIRE(m >= 2, "m must be >= 2");
    IpOptions opts{complement_ansatz != 0, false, {}};
    *out = new br_spec{solution_to_spec(m, parse_solution(solution, m, opts), opts)};
    return BR_OK;
  });
}

br_status br_enumerate(uint32_t n, uint32_t r, uint32_t s, double budget_seconds, unsigned workers,
                       br_enumeration** out) {
  return guarded([&] {
    BR_REQUIRE(out, "null argument");
    const BookParams p(r, s);
    try {
      *out = new br_enumeration{enumerate_ramsey_graphs(n, p, {budget_seconds, workers}), true};
      return BR_OK;
    } catch (const BudgetExceeded& e) {
      EnumerationResult partial;
      partial.n = n;
      partial.params = p;
      partial.stats = e.stats();
      *out = new br_enumeration{std::move(partial), false};
      throw;
    }
  });
}

void br_enumeration_free(br_enumeration* e) { delete e; }

size_t br_enumeration_count(const br_enumeration* e) { return e ? e->result.graphs.size() : 0; }

const char* br_enumeration_graph(const br_enumeration* e, size_t i) {
  if (!e || i >= e->result.graphs.size()) return nullptr;
  return e->result.graphs[i].c_str();
}

br_status br_enumeration_summary(const br_enumeration* e, char** report) {
  return guarded([&] {
    BR_REQUIRE(e && report, "null argument");
    ordered_json j;
    j["n"] = e->result.n;
    j["r"] = e->result.params.r;
    j["s"] = e->result.params.s;
    j["complete"] = e->complete;
    j["count"] = e->complete ? ordered_json(e->result.graphs.size()) : ordered_json(nullptr);
    j["stats"] = stats_json(e->result.stats);
    return emit(report, j);
  });
}

br_status br_ramsey_number(uint32_t r, uint32_t s, uint32_t n_cap, double budget_seconds, unsigned workers,
                           char** report) {
  return guarded([&] {
    BR_REQUIRE(report, "null argument");
    const BookParams p(r, s);
    try {
      const auto res = ramsey_number_smallcase(p, n_cap, {budget_seconds, workers});
      ordered_json j;
      j["r"] = r;
      j["s"] = s;
      j["value"] = res.value;
      j["critical_count"] = res.critical_graphs.size();
      j["critical_graphs"] = res.critical_graphs;
      j["stats"] = stats_json(res.stats);
      return emit(report, j);
    } catch (const SearchIncomplete& e) {
      ordered_json j;
      j["r"] = r;
      j["s"] = s;
      j["value"] = nullptr;
      j["reason"] = e.what();
      j["stats"] = stats_json(e.stats());
      emit(report, j);
      throw;
    }
  });
}

br_status br_appendix_verify(int* all_pass, char** report) {
  return guarded([&] {
    ordered_json j = ordered_json::array();
    bool ok = true;
    for (const auto& entry : load_appendix()) {
      const auto rep = verify_bound(entry);
      ok = ok && rep.pass;
      auto ej = verification_json(rep);
      if (const auto* spec = std::get_if<BlockCirculantSpec>(&entry.payload)) {
        ej["payload"] = format_spec(*spec);
      } else {
        ej["payload"] = "adjacency matrix";
      }
      j.push_back(ej);
    }
    if (all_pass) *all_pass = ok;
    return emit(report, j);
  });
}

br_status br_registry_seeded(br_registry** out) {
  return guarded([&] {
    BR_REQUIRE(out, "null argument");
    *out = new br_registry{BoundsRegistry::seeded()};
    return BR_OK;
  });
}

br_status br_registry_load(const char* path, br_registry** out) {
  return guarded([&] {
    BR_REQUIRE(path && out, "null argument");
    if (!std::filesystem::exists(path)) return fail(BR_ERR_IO, std::string("no such registry file: ") + path);
    *out = new br_registry{BoundsRegistry::load(path)};
    return BR_OK;
  });
}

br_status br_registry_save(const br_registry* reg, const char* path) {
  return guarded([&] {
    BR_REQUIRE(reg && path, "null argument");
    try {
      reg->reg.save(path);
    } catch (const ArgumentError& e) {
      return fail(BR_ERR_IO, e.what());
    }
    return BR_OK;
  });
}

void br_registry_free(br_registry* reg) { delete reg; }

size_t br_registry_size(const br_registry* reg) { return reg ? reg->reg.records().size() : 0; }

br_status br_registry_put(br_registry* reg, const char* record_json) {
  return guarded([&] {
    BR_REQUIRE(reg && record_json, "null argument");
    reg->reg.put(record_from_json(record_json));
    return BR_OK;
  });
}

br_status br_registry_query(const br_registry* reg, uint32_t r, uint32_t s, char** report) {
  return guarded([&] {
    BR_REQUIRE(reg && report, "null argument");
    BookParams(r, s);
    const auto iv = reg->reg.query(r, s);
    ordered_json j;
    j["r"] = r;
    j["s"] = s;
    j["lower"] = optional_json(iv.lower);
    j["upper"] = optional_json(iv.upper);
    j["exact"] = iv.exact();
    j["consistent"] = iv.consistent();
    j["lower_provenance"] = iv.lower_provenance;
    j["upper_provenance"] = iv.upper_provenance;
    return emit(report, j);
  });
}

br_status br_registry_verify_all(const br_registry* reg, int* all_pass, char** report) {
  return guarded([&] {
    BR_REQUIRE(reg, "null argument");
    ordered_json j = ordered_json::array();
    bool ok = true;
    for (const auto& rec : reg->reg.records()) {
      if (!rec.witness) continue;
      const auto rep = verify_record(rec);
      ok = ok && rep.pass;
      auto rj = verification_json(rep);
      rj["kind"] = std::string(to_string(rec.kind));
      rj["witness_type"] = rec.witness->type;
      rj["sha256"] = rec.witness->sha256;
      j.push_back(rj);
    }
    if (all_pass) *all_pass = ok;
    return emit(report, j);
  });
}

br_status br_registry_to_jsonl(const br_registry* reg, char** out) {
  return guarded([&] {
    BR_REQUIRE(reg && out, "null argument");
    *out = dup(reg->reg.to_jsonl());
    return BR_OK;
  });
}

}  // extern "C"
