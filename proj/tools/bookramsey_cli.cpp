// Command-line front end. Uses only the C interface.

#include <bookramsey/bookramsey.h>

#include <CLI11.hpp>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

namespace {

using nlohmann::json;

constexpr int kOk = 0;
constexpr int kFailed = 1;
constexpr int kUsage = 2;
constexpr int kIncomplete = 3;

struct StringDeleter {
  void operator()(char* s) const { br_string_free(s); }
};
using CString = std::unique_ptr<char, StringDeleter>;

template <class T, void (*Free)(T*)>
struct HandleDeleter {
  void operator()(T* p) const { Free(p); }
};
using GraphPtr = std::unique_ptr<br_graph, HandleDeleter<br_graph, br_graph_free>>;
using SpecPtr = std::unique_ptr<br_spec, HandleDeleter<br_spec, br_spec_free>>;
using EnumPtr = std::unique_ptr<br_enumeration, HandleDeleter<br_enumeration, br_enumeration_free>>;
using RegistryPtr = std::unique_ptr<br_registry, HandleDeleter<br_registry, br_registry_free>>;

// Library failure; argument and parse errors count as usage errors.
struct CallError {
  br_status status;
  std::string message;
};

void check(br_status st) {
  if (st != BR_OK) throw CallError{st, br_last_error()};
}

std::string take(char* s) {
  CString owned(s);
  return owned ? std::string(owned.get()) : std::string();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw CallError{BR_ERR_ARGUMENT, "cannot read " + path};
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw CallError{BR_ERR_IO, "cannot write " + path};
  out << text;
  if (!out.flush()) throw CallError{BR_ERR_IO, "write to " + path + " failed"};
}

std::string pair_text(const json& pair) {
  return "{" + std::to_string(pair[0].get<int>()) + "," + std::to_string(pair[1].get<int>()) + "}";
}

// Human text for a ramsey_report object.
void print_report(const json& rep) {
  const auto& g = rep["graph_side"];
  const auto& c = rep["complement_side"];
  std::cout << (rep["pass"].get<bool>() ? "pass" : "FAIL") << ": " << rep["vertices"] << " vertices, r=" << rep["r"]
            << " s=" << rep["s"] << "; max common neighbors " << g["max_pages"] << " (limit "
            << rep["r"].get<int>() - 1 << "), max common non-neighbors " << c["max_pages"] << " (limit "
            << rep["s"].get<int>() - 1 << ")\n";
  if (rep.contains("violation")) {
    const auto& v = rep["violation"];
    const bool graph = v["side"] == "graph";
    std::cout << "violation: " << (graph ? "edge " : "non-edge ") << pair_text(v["pair"]) << " has " << v["pages"]
              << (graph ? " common neighbors\n" : " common non-neighbors\n");
  }
}

void print_conditions(const json& cond) {
  for (const auto& f : cond["families"]) {
    std::cout << "  " << f["name"].get<std::string>() << ": max " << f["max_value"] << " < " << f["bound"] << " "
              << (f["pass"].get<bool>() ? "ok" : "violated");
    if (!f["violating_d"].is_null()) std::cout << " at d=" << f["violating_d"];
    std::cout << "\n";
  }
}

GraphPtr load_graph(const std::string& path) {
  br_graph* g = nullptr;
  check(br_graph_parse(read_file(path).c_str(), &g));
  return GraphPtr(g);
}

std::vector<uint32_t> parse_pins(const std::string& text) {
  std::vector<uint32_t> out;
  std::string item;
  std::istringstream is(text);
  while (std::getline(is, item, ',')) {
    if (item.empty()) continue;
    try {
      std::size_t used = 0;
      const long v = std::stol(item, &used);
      if (used != item.size() || v < 0) throw std::invalid_argument(item);
      out.push_back(static_cast<uint32_t>(v));
    } catch (const std::exception&) {
      throw CLI::ValidationError("--pin", "expected a comma-separated list of integers, got \"" + text + "\"");
    }
  }
  return out;
}

struct Options {
  bool json = false;
  uint64_t q = 0;
  std::string graph, spec, out, map, solution, registry;
  uint32_t n = 0, m = 0, r = 0, s = 0, cap = 64;
  bool symmetry = false, complement_ansatz = false, d11_eq_d12 = false;
  std::string pins;
  double budget = 0;
  unsigned workers = 1;
  std::vector<uint32_t> show;
  std::optional<uint32_t> check_r, check_s;
};

int cmd_paley(const Options& o) {
  int pass = 0;
  const json rep = json::parse(take([&] {
    char* s = nullptr;
    check(br_paley_report(o.q, &pass, &s));
    return s;
  }()));
  if (o.json) {
    std::cout << rep.dump() << "\n";
  } else {
    std::cout << rep["graph6"].get<std::string>() << "\n";
    std::cout << rep["claim"].get<std::string>() << "\n";
    print_report(rep["report"]);
    std::cout << "difference conditions: " << (rep["conditions"]["pass"].get<bool>() ? "pass" : "FAIL") << "\n";
    std::cout << "residue difference counts: " << (rep["residue_counts_match"].get<bool>() ? "match" : "MISMATCH")
              << "\n";
  }
  return pass ? kOk : kFailed;
}

int cmd_check(const Options& o) {
  auto g = load_graph(o.graph);
  int pass = 0;
  char* s = nullptr;
  check(br_graph_check(g.get(), o.r, o.s, &pass, &s));
  const json rep = json::parse(take(s));
  if (o.json) {
    std::cout << rep.dump() << "\n";
  } else {
    print_report(rep);
  }
  return pass ? kOk : kFailed;
}

int cmd_spec_check(const Options& o) {
  br_spec* raw = nullptr;
  check(br_spec_parse(read_file(o.spec).c_str(), &raw));
  SpecPtr spec(raw);
  int pass = 0;
  char* s = nullptr;
  check(br_spec_check(spec.get(), o.r, o.s, &pass, &s));
  const json rep = json::parse(take(s));
  if (o.json) {
    std::cout << rep.dump() << "\n";
  } else {
    std::cout << rep["spec"].get<std::string>() << "\n";
    std::cout << "difference conditions: " << (rep["conditions"]["pass"].get<bool>() ? "pass" : "FAIL") << "\n";
    print_conditions(rep["conditions"]);
    print_report(rep["report"]);
    if (pass) std::cout << rep["claim"].get<std::string>() << "\n";
  }
  return pass ? kOk : kFailed;
}

int cmd_encode_sat(const Options& o) {
  char* dimacs = nullptr;
  char* map = nullptr;
  check(br_encode_sat(o.n, o.r, o.s, o.symmetry, &dimacs, o.map.empty() ? nullptr : &map));
  const std::string text = take(dimacs);
  const std::string map_text = take(map);
  write_file(o.out, text);
  if (!o.map.empty()) write_file(o.map, map_text);
  unsigned long vars = 0, clauses = 0;
  std::sscanf(text.c_str(), "p cnf %lu %lu", &vars, &clauses);
  if (o.json) {
    std::cout << json{{"out", o.out}, {"variables", vars}, {"clauses", clauses}}.dump() << "\n";
  } else {
    std::cout << "wrote " << o.out << ": " << vars << " variables, " << clauses << " clauses\n";
  }
  return kOk;
}

int cmd_encode_ip(const Options& o) {
  const auto pins = parse_pins(o.pins);
  char* lp = nullptr;
  check(br_encode_ip(o.m, o.r, o.s, o.complement_ansatz, o.d11_eq_d12, pins.data(), pins.size(), &lp));
  const std::string text = take(lp);
  write_file(o.out, text);
  std::size_t rows = 0, binaries = 0;
  std::istringstream is(text);
  std::string line;
  int section = 0;
  while (std::getline(is, line)) {
    if (line == "Subject To") {
      section = 1;
    } else if (line == "Binary") {
      section = 2;
    } else if (line == "End") {
      section = 3;
    } else if (section == 1) {
      ++rows;
    } else if (section == 2) {
      ++binaries;
    }
  }
  if (o.json) {
    std::cout << json{{"out", o.out}, {"rows", rows}, {"binaries", binaries}}.dump() << "\n";
  } else {
    std::cout << "wrote " << o.out << ": " << rows << " rows, " << binaries << " binary variables\n";
  }
  return kOk;
}

int cmd_decode_ip(const Options& o) {
  br_spec* raw = nullptr;
  check(br_decode_ip(o.m, read_file(o.solution).c_str(), o.complement_ansatz, &raw));
  SpecPtr spec(raw);
  char* text = nullptr;
  check(br_spec_format(spec.get(), &text));
  const std::string spec_text = take(text);
  if (!o.check_r) {
    if (o.json) {
      std::cout << json{{"spec", spec_text}}.dump() << "\n";
    } else {
      std::cout << spec_text << "\n";
    }
    return kOk;
  }
  int pass = 0;
  char* s = nullptr;
  check(br_spec_check(spec.get(), *o.check_r, *o.check_s, &pass, &s));
  const json rep = json::parse(take(s));
  if (o.json) {
    std::cout << rep.dump() << "\n";
  } else {
    std::cout << spec_text << "\n";
    print_report(rep["report"]);
  }
  return pass ? kOk : kFailed;
}

int cmd_enumerate(const Options& o) {
  br_enumeration* raw = nullptr;
  const br_status st = br_enumerate(o.n, o.r, o.s, o.budget, o.workers, &raw);
  EnumPtr e(raw);
  if (st != BR_OK && !(st == BR_ERR_BUDGET && e)) throw CallError{st, br_last_error()};
  const std::string message = st == BR_OK ? std::string() : br_last_error();
  for (std::size_t i = 0; i < br_enumeration_count(e.get()); ++i) {
    std::cout << br_enumeration_graph(e.get(), i) << "\n";
  }
  char* s = nullptr;
  check(br_enumeration_summary(e.get(), &s));
  json summary = json::parse(take(s));
  if (!message.empty()) summary["error"] = message;
  std::cout << summary.dump() << "\n";
  if (st == BR_ERR_BUDGET) {
    std::cerr << "bookramsey: " << message << "\n";
    return kIncomplete;
  }
  return kOk;
}

int cmd_ramsey_number(const Options& o) {
  char* s = nullptr;
  const br_status st = br_ramsey_number(o.r, o.s, o.cap, o.budget, o.workers, &s);
  const std::string message = st == BR_OK ? std::string() : br_last_error();
  const std::string text = take(s);
  if (text.empty()) throw CallError{st, message};
  const json rep = json::parse(text);
  if (o.json) {
    std::cout << rep.dump() << "\n";
  } else if (st == BR_OK) {
    std::cout << "R(B_" << o.r << ",B_" << o.s << ") = " << rep["value"] << " with " << rep["critical_count"]
              << " critical graph" << (rep["critical_count"] == 1 ? "" : "s") << "\n";
    for (const auto& g : rep["critical_graphs"]) std::cout << g.get<std::string>() << "\n";
  }
  if (st != BR_OK) {
    std::cerr << "bookramsey: " << message << "\n";
    return kIncomplete;
  }
  return kOk;
}

RegistryPtr open_registry(const Options& o) {
  br_registry* raw = nullptr;
  if (o.registry.empty()) {
    check(br_registry_seeded(&raw));
  } else {
    check(br_registry_load(o.registry.c_str(), &raw));
  }
  return RegistryPtr(raw);
}

std::string interval_text(const json& q) {
  std::string lo = q["lower"].is_null() ? "?" : std::to_string(q["lower"].get<int>());
  std::string hi = q["upper"].is_null() ? "inf)" : std::to_string(q["upper"].get<int>()) + "]";
  return "[" + lo + ", " + hi;
}

int cmd_bounds_show(const Options& o) {
  if (o.show.size() != 2) throw CLI::ValidationError("show", "expects two values: r s");
  auto reg = open_registry(o);
  char* s = nullptr;
  check(br_registry_query(reg.get(), o.show[0], o.show[1], &s));
  const json q = json::parse(take(s));
  if (o.json) {
    std::cout << q.dump() << "\n";
    return kOk;
  }
  std::cout << "R(B_" << o.show[0] << ",B_" << o.show[1] << ") in " << interval_text(q)
            << (q["exact"].get<bool>() ? " (exact)" : "") << "\n";
  for (const auto& p : q["lower_provenance"]) std::cout << "  lower: " << p.get<std::string>() << "\n";
  for (const auto& p : q["upper_provenance"]) std::cout << "  upper: " << p.get<std::string>() << "\n";
  return kOk;
}

int cmd_bounds_verify_all(const Options& o) {
  auto reg = open_registry(o);
  int pass = 0;
  char* s = nullptr;
  check(br_registry_verify_all(reg.get(), &pass, &s));
  const json rep = json::parse(take(s));
  if (o.json) {
    std::cout << json{{"pass", pass != 0}, {"records", rep}}.dump() << "\n";
  } else {
    for (const auto& r : rep) {
      std::cout << (r["pass"].get<bool>() ? "pass " : "FAIL ") << r["claim"].get<std::string>() << " ["
                << r["kind"].get<std::string>() << ", " << r["witness_type"].get<std::string>() << "]";
      if (r.contains("failure")) std::cout << ": " << r["failure"].get<std::string>();
      std::cout << "\n";
    }
    std::cout << rep.size() << " witnesses, " << (pass ? "all pass" : "failures present") << "\n";
  }
  return pass ? kOk : kFailed;
}

int cmd_bounds_export(const Options& o) {
  auto reg = open_registry(o);
  check(br_registry_save(reg.get(), o.out.c_str()));
  if (o.json) {
    std::cout << json{{"out", o.out}, {"records", br_registry_size(reg.get())}}.dump() << "\n";
  } else {
    std::cout << "wrote " << br_registry_size(reg.get()) << " records to " << o.out << "\n";
  }
  return kOk;
}

int cmd_verify_appendix(const Options& o) {
  int pass = 0;
  char* s = nullptr;
  check(br_appendix_verify(&pass, &s));
  const json rep = json::parse(take(s));
  if (o.json) {
    std::cout << json{{"pass", pass != 0}, {"entries", rep}}.dump() << "\n";
  } else {
    for (const auto& e : rep) {
      const auto& r = e["report"];
      std::cout << (e["pass"].get<bool>() ? "pass " : "FAIL ") << e["claim"].get<std::string>() << ": "
                << r["vertices"] << " vertices, max pages " << r["graph_side"]["max_pages"] << "/"
                << r["complement_side"]["max_pages"];
      if (e.contains("failure")) std::cout << "; " << e["failure"].get<std::string>();
      std::cout << "\n";
    }
    std::cout << rep.size() << " entries, " << (pass ? "all pass" : "failures present") << "\n";
  }
  return pass ? kOk : kFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Construct, verify, encode and enumerate Ramsey graphs for book graphs B_n."};
  app.set_version_flag("--version", std::string(br_version()));
  app.require_subcommand(1);
  Options o;
  int (*handler)(const Options&) = nullptr;

  auto json_flag = [&](CLI::App* sub) { sub->add_flag("--json", o.json, "Print a JSON object instead of text"); };
  auto book_opts = [&](CLI::App* sub) {
    sub->add_option("--r", o.r, "Graph must avoid B_r")->required()->check(CLI::PositiveNumber);
    sub->add_option("--s", o.s, "Complement must avoid B_s")->required()->check(CLI::PositiveNumber);
  };

  auto* paley = app.add_subcommand("paley", "Build the Paley-type witness on 2q vertices and verify it");
  paley->add_option("--q", o.q, "Prime power q = 1 (mod 4)")->required();
  json_flag(paley);
  paley->callback([&] { handler = cmd_paley; });

  auto* chk = app.add_subcommand("check", "Check a graph (graph6 or 0/1 matrix file) against (B_r, B_s)");
  chk->add_option("--graph", o.graph, "Graph file")->required();
  book_opts(chk);
  json_flag(chk);
  chk->callback([&] { handler = cmd_check; });

  auto* spec = app.add_subcommand("spec-check", "Check a 2-block circulant spec file by difference counts and explicitly");
  spec->add_option("--spec", o.spec, "Spec file: m; D11={..}; D12={..}[; D22={..}]")->required();
  book_opts(spec);
  json_flag(spec);
  spec->callback([&] { handler = cmd_spec_check; });

  auto* sat = app.add_subcommand("encode-sat", "Write the DIMACS CNF for Ramsey (B_r, B_s, n) graphs");
  sat->add_option("--n", o.n, "Vertex count")->required();
  book_opts(sat);
  sat->add_flag("--symmetry", o.symmetry, "Add adjacent-transposition lex-leader clauses");
  sat->add_option("--out", o.out, "Output CNF file")->required();
  sat->add_option("--map", o.map, "Also write the variable map to this file");
  json_flag(sat);
  sat->callback([&] { handler = cmd_encode_sat; });

  auto* ip = app.add_subcommand("encode-ip", "Write the LP model for 2-block circulant witnesses on Z_m");
  ip->add_option("--m", o.m, "Block size")->required();
  book_opts(ip);
  ip->add_flag("--complement-ansatz", o.complement_ansatz, "Force D22 = Z_m \\ ({0} u D11)");
  ip->add_flag("--d11-eq-d12", o.d11_eq_d12, "Force D11 = D12");
  ip->add_option("--pin", o.pins, "Comma-separated elements forced into D11");
  ip->add_option("--out", o.out, "Output LP file")->required();
  json_flag(ip);
  ip->callback([&] { handler = cmd_encode_ip; });

  auto* dec = app.add_subcommand("decode-ip", "Turn a solver solution (name value lines) into a spec");
  dec->add_option("--m", o.m, "Block size")->required();
  dec->add_option("--solution", o.solution, "Solution file")->required();
  dec->add_flag("--complement-ansatz", o.complement_ansatz, "The model was built with --complement-ansatz");
  auto* dr = dec->add_option("--r", o.check_r, "Also verify against B_r (needs --s)")->check(CLI::PositiveNumber);
  auto* ds = dec->add_option("--s", o.check_s, "Also verify against B_s (needs --r)")->check(CLI::PositiveNumber);
  dr->needs(ds);
  ds->needs(dr);
  json_flag(dec);
  dec->callback([&] { handler = cmd_decode_ip; });

  auto* en = app.add_subcommand("enumerate", "List Ramsey (B_r, B_s, n) graphs up to isomorphism as graph6");
  en->add_option("--n", o.n, "Vertex count")->required();
  book_opts(en);
  en->add_option("--budget", o.budget, "Wall-clock limit in seconds (0: none)")->check(CLI::NonNegativeNumber);
  en->add_option("--workers", o.workers, "Worker threads")->check(CLI::PositiveNumber);
  en->callback([&] { handler = cmd_enumerate; });

  auto* rn = app.add_subcommand("ramsey-number", "Find R(B_r, B_s) by enumeration and list the critical graphs");
  book_opts(rn);
  rn->add_option("--cap", o.cap, "Largest vertex count to try")->check(CLI::Range(1, 64));
  rn->add_option("--budget", o.budget, "Wall-clock limit in seconds (0: none)")->check(CLI::NonNegativeNumber);
  rn->add_option("--workers", o.workers, "Worker threads")->check(CLI::PositiveNumber);
  json_flag(rn);
  rn->callback([&] { handler = cmd_ramsey_number; });

  auto* bounds = app.add_subcommand("bounds", "Query and verify the bounds registry");
  bounds->add_option("--registry", o.registry, "Registry file (JSON lines); default: built-in records");
  bounds->require_subcommand(1);
  auto* show = bounds->add_subcommand("show", "Best known interval for R(B_r, B_s)");
  show->add_option("rs", o.show, "r s")->required()->expected(2);
  json_flag(show);
  show->callback([&] { handler = cmd_bounds_show; });
  auto* va = bounds->add_subcommand("verify-all", "Re-verify every stored witness");
  json_flag(va);
  va->callback([&] { handler = cmd_bounds_verify_all; });
  auto* ex = bounds->add_subcommand("export", "Write the registry as JSON lines");
  ex->add_option("--out", o.out, "Output file")->required();
  json_flag(ex);
  ex->callback([&] { handler = cmd_bounds_export; });

  auto* app_v = app.add_subcommand("verify-appendix", "Verify every bundled witness against its bound");
  json_flag(app_v);
  app_v->callback([&] { handler = cmd_verify_appendix; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    return handler(o);
  } catch (const CLI::ValidationError& e) {
    std::cerr << "bookramsey: " << e.what() << "\n";
    return kUsage;
  } catch (const CallError& e) {
    std::cerr << "bookramsey: " << e.message << "\n";
    return e.status == BR_ERR_ARGUMENT || e.status == BR_ERR_PARSE ? kUsage : kFailed;
  } catch (const std::exception& e) {
    std::cerr << "bookramsey: " << e.what() << "\n";
    return kFailed;
  }
}
