#include "witness.hpp"

#include <openssl/evp.h>

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <regex>
#include <sstream>

#include <json.hpp>

#include "embedded.hpp"
#include "field.hpp"

namespace bookramsey {

namespace {

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r\n");
  return std::string(s.substr(b, e - b + 1));
}

std::vector<std::string> lines_of(std::string_view text) {
  std::vector<std::string> out;
  std::istringstream is{std::string(text)};
  std::string line;
  while (std::getline(is, line)) out.push_back(line);
  return out;
}

}  // namespace

WitnessEntry parse_claim(std::string_view text) {
  static const std::regex re(R"(^\s*R\(\s*B_\{?(\d+)\}?\s*,\s*B_\{?(\d+)\}?\s*\)\s*(>=|≥)\s*(\d+)\s*$)");
  const std::string s(text);
  std::smatch m;
  if (!std::regex_match(s, m, re)) throw ParseError("malformed bound claim \"" + s + "\"");
  WitnessEntry e;
  e.r = static_cast<std::uint32_t>(std::stoul(m[1]));
  e.s = static_cast<std::uint32_t>(std::stoul(m[2]));
  e.bound = static_cast<std::uint32_t>(std::stoul(m[4]));
  if (e.r < 1 || e.s < 1 || e.bound < 2) throw ParseError("bound claim out of range \"" + s + "\"");
  e.claim = "R(B_" + std::to_string(e.r) + ",B_" + std::to_string(e.s) + ") >= " + std::to_string(e.bound);
  return e;
}

std::vector<WitnessEntry> parse_block_circulant_table(std::string_view text) {
  std::vector<WitnessEntry> out;
  const auto lines = lines_of(text);
  for (std::size_t i = 0; i < lines.size(); ++i) {
    const std::string line = trim(lines[i]);
    if (line.empty() || line[0] == '#') continue;
    try {
      const auto colon = line.find(':');
      if (colon == std::string::npos) throw ParseError("missing ':' after the bound");
      WitnessEntry e = parse_claim(std::string_view(line).substr(0, colon));
      e.payload = parse_spec(std::string_view(line).substr(colon + 1));
      out.push_back(std::move(e));
    } catch (const std::exception& ex) {
      throw ParseError("witness row " + std::to_string(i + 1) + " (\"" + line + "\"): " + ex.what());
    }
  }
  return out;
}

WitnessEntry parse_matrix_witness(std::string_view text) {
  const auto lines = lines_of(text);
  auto it = std::find_if(lines.begin(), lines.end(), [](const std::string& l) { return !trim(l).empty(); });
  if (it == lines.end() || trim(*it)[0] != '#') throw ParseError("matrix witness needs a '# R(B_r,B_s) >= v' header");
  WitnessEntry e = parse_claim(trim(*it).substr(1));
  std::string body;
  for (++it; it != lines.end(); ++it) body += *it + "\n";
  try {
    e.payload = parse_adjacency_text(body);
  } catch (const std::exception& ex) {
    throw ParseError("matrix witness for " + e.claim + ": " + ex.what());
  }
  return e;
}

std::vector<WitnessEntry> load_appendix() {
  auto entries = parse_block_circulant_table(embedded_file("appendix/block_circulant.txt"));
  for (const char* name : {"appendix/matrix_B2_B8.txt", "appendix/matrix_B2_B9.txt", "appendix/matrix_B2_B10.txt"}) {
    entries.push_back(parse_matrix_witness(embedded_file(name)));
  }
  return entries;
}

std::optional<Edge> VerificationReport::violating_pair() const {
  if (ramsey.graph_side.max_pages >= params.r) return ramsey.graph_side.argmax;
  if (ramsey.complement_side.max_pages >= params.s) return ramsey.complement_side.argmax;
  return std::nullopt;
}

bool VerificationReport::violation_in_complement() const {
  return ramsey.graph_side.max_pages < params.r && ramsey.complement_side.max_pages >= params.s;
}

Graph witness_graph(const WitnessEntry& entry) {
  if (const auto* spec = std::get_if<BlockCirculantSpec>(&entry.payload)) return expand(*spec);
  return std::get<Graph>(entry.payload);
}

VerificationReport verify_graph_bound(const std::string& claim, const Graph& g, BookParams p, std::uint32_t bound) {
  VerificationReport rep;
  rep.claim = claim;
  rep.params = p;
  rep.expected_order = bound - 1;
  rep.order = g.order();
  rep.ramsey = ramsey_report(g, p);
  rep.pass = rep.order == rep.expected_order && rep.ramsey.pass;
  if (rep.order != rep.expected_order) {
    rep.failure = "graph has " + std::to_string(rep.order) + " vertices, expected " + std::to_string(rep.expected_order);
  } else if (auto e = rep.violating_pair()) {
    const bool co = rep.violation_in_complement();
    rep.failure = std::string(co ? "non-edge " : "edge ") + "{" + std::to_string(e->first) + "," +
                  std::to_string(e->second) + "} has " +
                  std::to_string(co ? rep.ramsey.complement_side.max_pages : rep.ramsey.graph_side.max_pages) +
                  (co ? " common non-neighbors (limit " + std::to_string(p.s - 1) + ")"
                      : " common neighbors (limit " + std::to_string(p.r - 1) + ")");
  }
  return rep;
}

VerificationReport verify_bound(const WitnessEntry& entry) {
  const BookParams p(entry.r, entry.s);
  VerificationReport rep = verify_graph_bound(entry.claim, witness_graph(entry), p, entry.bound);
  if (const auto* spec = std::get_if<BlockCirculantSpec>(&entry.payload)) {
    rep.conditions = check_book_conditions(*spec, p);
    rep.conditions_agree = rep.conditions->pass == rep.ramsey.pass;
    if (!rep.conditions_agree) {
      rep.pass = false;
      if (rep.failure.empty()) rep.failure = "difference conditions disagree with the explicit graph";
    }
  }
  return rep;
}

std::string_view to_string(BoundKind kind) {
  switch (kind) {
    case BoundKind::Lower: return "lower";
    case BoundKind::Upper: return "upper";
    case BoundKind::Exact: return "exact";
  }
  return "lower";
}

BoundKind parse_bound_kind(std::string_view text) {
  if (text == "lower") return BoundKind::Lower;
  if (text == "upper") return BoundKind::Upper;
  if (text == "exact") return BoundKind::Exact;
  throw ParseError("unknown bound kind \"" + std::string(text) + "\"");
}

std::string sha256_hex(std::string_view data) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(data.data(), data.size(), digest, &len, EVP_sha256(), nullptr) != 1) {
    throw std::runtime_error("sha256 digest failed");
  }
  static const char* hex = "0123456789abcdef";
  std::string out;
  for (unsigned i = 0; i < len; ++i) {
    out.push_back(hex[digest[i] >> 4]);
    out.push_back(hex[digest[i] & 15]);
  }
  return out;
}

WitnessRef make_witness_ref(std::string type, std::string description, const Graph& g) {
  WitnessRef w{std::move(type), std::move(description), to_graph6(g), {}};
  w.sha256 = sha256_hex(w.graph6);
  return w;
}

VerificationReport verify_record(const BoundRecord& rec) {
  VerificationReport rep;
  rep.params = BookParams(rec.r, rec.s);
  rep.claim = "R(B_" + std::to_string(rec.r) + ",B_" + std::to_string(rec.s) + ") >= " + std::to_string(rec.value);
  if (!rec.witness) {
    rep.failure = "record has no witness";
    return rep;
  }
  const auto& w = *rec.witness;
  if (sha256_hex(w.graph6) != w.sha256) {
    rep.failure = "witness hash does not match its graph6";
    return rep;
  }
  Graph g;
  try {
    g = from_graph6(w.graph6);
  } catch (const std::exception& ex) {
    rep.failure = std::string("witness graph6 invalid: ") + ex.what();
    return rep;
  }
  rep = verify_graph_bound(rep.claim, g, rep.params, rec.value);
  if (rep.pass && w.type == "block_circulant") {
    try {
      const auto spec = parse_spec(w.description);
      if (to_graph6(expand(spec)) != w.graph6) {
        rep.pass = false;
        rep.failure = "block-circulant description does not expand to the stored graph";
      } else {
        rep.conditions = check_book_conditions(spec, rep.params);
        rep.conditions_agree = rep.conditions->pass == rep.ramsey.pass;
        if (!rep.conditions_agree) {
          rep.pass = false;
          rep.failure = "difference conditions disagree with the explicit graph";
        }
      }
    } catch (const std::exception& ex) {
      rep.pass = false;
      rep.failure = std::string("block-circulant description invalid: ") + ex.what();
    }
  }
  return rep;
}

std::string record_to_json(const BoundRecord& rec) {
  nlohmann::ordered_json j;
  j["r"] = rec.r;
  j["s"] = rec.s;
  j["kind"] = std::string(to_string(rec.kind));
  j["value"] = rec.value;
  if (rec.witness) {
    j["witness"] = {{"type", rec.witness->type},
                    {"description", rec.witness->description},
                    {"graph6", rec.witness->graph6},
                    {"sha256", rec.witness->sha256}};
  } else {
    j["witness"] = nullptr;
  }
  j["provenance"] = rec.provenance;
  return j.dump();
}

BoundRecord record_from_json(std::string_view line) {
  try {
    const auto j = nlohmann::json::parse(line);
    BoundRecord rec;
    rec.r = j.at("r").get<std::uint32_t>();
    rec.s = j.at("s").get<std::uint32_t>();
    rec.kind = parse_bound_kind(j.at("kind").get<std::string>());
    rec.value = j.at("value").get<std::uint32_t>();
    if (j.contains("witness") && !j.at("witness").is_null()) {
      const auto& w = j.at("witness");
      rec.witness = WitnessRef{w.at("type").get<std::string>(), w.value("description", std::string()),
                               w.at("graph6").get<std::string>(), w.at("sha256").get<std::string>()};
    }
    rec.provenance = j.value("provenance", std::string());
    if (rec.r < 1 || rec.s < 1) throw ParseError("book sizes must be >= 1");
    return rec;
  } catch (const nlohmann::json::exception& ex) {
    throw ParseError(std::string("registry record: ") + ex.what());
  }
}

BoundsRegistry BoundsRegistry::from_jsonl(std::string_view text) {
  BoundsRegistry reg;
  const auto lines = lines_of(text);
  for (std::size_t i = 0; i < lines.size(); ++i) {
    if (trim(lines[i]).empty()) continue;
    try {
      reg.put(record_from_json(lines[i]));
    } catch (const WitnessRejected& ex) {
      throw WitnessRejected("registry line " + std::to_string(i + 1) + ": " + ex.what(), ex.report());
    } catch (const std::exception& ex) {
      throw ParseError("registry line " + std::to_string(i + 1) + ": " + ex.what());
    }
  }
  return reg;
}

std::string BoundsRegistry::to_jsonl() const {
  std::string out;
  for (const auto& rec : records_) out += record_to_json(rec) + "\n";
  return out;
}

BoundsRegistry BoundsRegistry::load(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ArgumentError("cannot open registry " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return from_jsonl(ss.str());
}

void BoundsRegistry::save(const std::filesystem::path& path) const {
  auto tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw ArgumentError("cannot write " + tmp.string());
    out << to_jsonl();
    out.flush();
    if (!out) throw std::runtime_error("write to " + tmp.string() + " failed");
  }
  std::filesystem::rename(tmp, path);
}

void BoundsRegistry::put(BoundRecord rec) {
  if (rec.r < 1 || rec.s < 1) throw ArgumentError("book sizes must be >= 1");
  if (rec.value < 2) throw ArgumentError("bound value must be >= 2");
  if (rec.witness) {
    if (rec.kind == BoundKind::Upper) throw ArgumentError("upper-bound records cannot carry a witness graph");
    auto rep = verify_record(rec);
    if (!rep.pass) throw WitnessRejected("witness for " + rep.claim + " rejected: " + rep.failure, rep);
  }
  if (std::find(records_.begin(), records_.end(), rec) != records_.end()) return;
  records_.push_back(std::move(rec));
}

BoundInterval BoundsRegistry::query(std::uint32_t r, std::uint32_t s) const {
  BoundInterval out;
  out.r = r;
  out.s = s;
  for (const auto& rec : records_) {
    if (!((rec.r == r && rec.s == s) || (rec.r == s && rec.s == r))) continue;
    if (rec.kind != BoundKind::Upper) {
      if (!out.lower || rec.value > *out.lower) {
        out.lower = rec.value;
        out.lower_provenance.clear();
      }
      if (rec.value == *out.lower) out.lower_provenance.push_back(rec.provenance);
    }
    if (rec.kind != BoundKind::Lower) {
      if (!out.upper || rec.value < *out.upper) {
        out.upper = rec.value;
        out.upper_provenance.clear();
      }
      if (rec.value == *out.upper) out.upper_provenance.push_back(rec.provenance);
    }
  }
  return out;
}

Graph k14_14() { return complete_bipartite(14, 14); }

namespace {

struct TableRow {
  std::uint32_t r, s, value;
  BoundKind kind;
};

constexpr const char* kEnumerationSource = "critical graphs enumerated with SAT modulo symmetries";
constexpr const char* kSatSource = "lower bound by witness graph, upper bound by an unsatisfiable SAT encoding";
constexpr const char* kIpSource = "two-block circulant witness found by integer programming";
constexpr const char* kRsDiagonal = "Rousseau-Sheehan: R(B_n,B_n) <= 4n+2";
constexpr const char* kRsAlmost = "Rousseau-Sheehan: R(B_{n-1},B_n) <= 4n-1";
constexpr const char* kRsOffByTwo = "Rousseau-Sheehan: R(B_{n-2},B_n) <= 4n-3 for n = 2 (mod 3)";

bool is_prime_power(std::uint64_t q) {
  try {
    factor_prime_power(q);
    return true;
  } catch (const ArgumentError&) {
    return false;
  }
}

// Witness graphs keyed by (r, s, vertex count).
struct WitnessPool {
  struct Item {
    std::uint32_t r, s;
    WitnessRef ref;
  };
  std::vector<Item> items;

  void add(std::uint32_t r, std::uint32_t s, WitnessRef ref) { items.push_back({r, s, std::move(ref)}); }

  std::optional<WitnessRef> find(std::uint32_t r, std::uint32_t s, std::uint32_t order) const {
    for (const auto& it : items) {
      if (it.r == r && it.s == s && static_cast<std::uint32_t>(it.ref.graph6.empty() ? 0 : from_graph6(it.ref.graph6).order()) == order) {
        return it.ref;
      }
    }
    return std::nullopt;
  }
};

WitnessPool bundled_witnesses() {
  WitnessPool pool;
  for (const auto& e : load_appendix()) {
    if (const auto* spec = std::get_if<BlockCirculantSpec>(&e.payload)) {
      pool.add(e.r, e.s, make_witness_ref("block_circulant", format_spec(*spec), expand(*spec)));
    } else {
      pool.add(e.r, e.s, make_witness_ref("adjacency", e.claim + " matrix", std::get<Graph>(e.payload)));
    }
  }
  for (const auto& line : lines_of(embedded_file("critical/witnesses.txt"))) {
    const std::string t = trim(line);
    if (t.empty() || t[0] == '#') continue;
    std::istringstream ls(t);
    std::uint32_t r = 0, s = 0;
    std::string g6;
    if (!(ls >> r >> s >> g6)) throw ParseError("critical witness line \"" + t + "\"");
    pool.add(r, s, make_witness_ref("enumerated", "critical graph found by enumeration", from_graph6(g6)));
  }
  return pool;
}

}  // namespace

BoundsRegistry BoundsRegistry::seeded() {
  BoundsRegistry reg;
  const WitnessPool pool = bundled_witnesses();
  auto put = [&](std::uint32_t r, std::uint32_t s, BoundKind kind, std::uint32_t value, std::string provenance,
                 bool attach) {
    BoundRecord rec{r, s, kind, value, std::nullopt, std::move(provenance)};
    if (attach && kind != BoundKind::Upper) rec.witness = pool.find(r, s, value - 1);
    reg.put(std::move(rec));
  };

  // Exhaustive enumeration: R(B_r,B_s) and the number of critical graphs.
  struct Enumerated {
    std::uint32_t r, s, value, critical;
  };
  static constexpr Enumerated kEnumerated[] = {
      {1, 1, 6, 1},    {1, 2, 7, 4},    {1, 3, 9, 8},    {1, 4, 11, 7},   {1, 5, 13, 8},   {1, 6, 15, 8},
      {1, 7, 17, 10},  {1, 8, 19, 10},  {2, 2, 10, 1},   {2, 3, 11, 4},   {2, 4, 13, 6},   {2, 5, 16, 1},
      {2, 6, 17, 3},   {2, 7, 18, 65},  {2, 8, 21, 1},   {2, 9, 22, 72},  {2, 10, 25, 5},  {2, 11, 28, 1},
      {2, 12, 28, 10}, {3, 3, 14, 1},   {3, 4, 15, 1},   {3, 5, 17, 10},  {3, 6, 19, 4},   {4, 4, 18, 1},
      {4, 5, 19, 27},  {5, 5, 21, 247}, {5, 6, 23, 23},  {6, 6, 26, 15},
  };
  for (const auto& e : kEnumerated) {
    put(e.r, e.s, BoundKind::Exact, e.value,
        std::string(kEnumerationSource) + ": " + std::to_string(e.critical) + " critical graph" +
            (e.critical == 1 ? "" : "s"),
        true);
  }

  // New bounds for r = 2, 3.
  static constexpr TableRow kSmallR[] = {
      {2, 8, 21, BoundKind::Exact},  {2, 9, 22, BoundKind::Exact}, {2, 10, 25, BoundKind::Exact},
      {2, 12, 28, BoundKind::Exact}, {2, 13, 29, BoundKind::Exact}, {3, 6, 19, BoundKind::Exact},
      {3, 7, 20, BoundKind::Exact},
  };
  for (const auto& t : kSmallR) put(t.r, t.s, t.kind, t.value, kSatSource, true);
  put(2, 11, BoundKind::Lower, 28, "Schlafli graph: 27 vertices, no B_11, complement has no B_2", false);
  put(2, 12, BoundKind::Lower, 28, "Schlafli graph: 27 vertices, no B_11, complement has no B_2", false);
  reg.put({2, 13, BoundKind::Lower, 29, make_witness_ref("construction", "K_{14,14}", k14_14()),
           "complete bipartite graph K_{14,14}: no B_2, complement has no B_13"});

  // Off-by-two rows, stored as printed under their r = s - 2 heading.
  static constexpr TableRow kOffByTwo[] = {
      {5, 7, 25, BoundKind::Lower},   {6, 8, 29, BoundKind::Exact},   {7, 9, 33, BoundKind::Lower},
      {8, 10, 37, BoundKind::Lower},  {9, 11, 41, BoundKind::Exact},  {10, 12, 45, BoundKind::Lower},
      {11, 13, 49, BoundKind::Lower}, {12, 14, 53, BoundKind::Exact}, {13, 15, 57, BoundKind::Lower},
      {14, 16, 61, BoundKind::Lower}, {15, 17, 65, BoundKind::Exact},
  };
  for (const auto& t : kOffByTwo) put(t.r, t.s, t.kind, t.value, kIpSource, true);

  static constexpr TableRow kDiagonal[] = {
      {8, 8, 33, BoundKind::Exact},
      {11, 11, 45, BoundKind::Lower},
      {14, 14, 57, BoundKind::Exact},
      {16, 16, 65, BoundKind::Lower},
  };
  for (const auto& t : kDiagonal) put(t.r, t.s, t.kind, t.value, kIpSource, true);

  // R(B_{n-1},B_n) = 4n - 1 for n <= 20 and whenever 2n - 1 is a prime power
  // congruent to 1 mod 4.
  for (std::uint32_t n = 2; n <= 51; ++n) {
    const std::uint32_t q = 2 * n - 1;
    const bool paley = q % 4 == 1 && is_prime_power(q);
    if (paley) {
      const auto pk = factor_prime_power(q);
      const auto f = FiniteField::make(pk.p, pk.k);
      reg.put({n - 1, n, BoundKind::Lower, 4 * n - 1,
               make_witness_ref("construction", "Gamma(Q,Q,N) over F_" + std::to_string(q), paley_book_graph(f)),
               "Paley-type two-block graph over F_" + std::to_string(q)});
    }
    if (n <= 20 || paley) {
      put(n - 1, n, BoundKind::Exact, 4 * n - 1,
          n <= 20 ? "R(B_{n-1},B_n) = 4n-1 for n <= 20: SAT and integer programming witnesses"
                  : "R(B_{n-1},B_n) = 4n-1: Paley-type construction meets the upper bound",
          true);
    }
    put(n - 1, n, BoundKind::Upper, 4 * n - 1, kRsAlmost, false);
  }

  // Rousseau-Sheehan diagonal and off-by-two upper bounds; Paley graphs meet
  // the diagonal one when 4n + 1 is a prime power.
  for (std::uint32_t n = 1; n <= 25; ++n) {
    put(n, n, BoundKind::Upper, 4 * n + 2, kRsDiagonal, false);
    const std::uint32_t q = 4 * n + 1;
    if (is_prime_power(q)) {
      const auto pk = factor_prime_power(q);
      reg.put({n, n, BoundKind::Lower, 4 * n + 2,
               make_witness_ref("construction", "Paley graph over F_" + std::to_string(q),
                                paley_graph(FiniteField::make(pk.p, pk.k))),
               "Paley graph over F_" + std::to_string(q) + ": no B_n, self-complementary"});
    }
  }
  for (std::uint32_t n = 3; n <= 51; ++n) {
    if (n % 3 == 2) put(n - 2, n, BoundKind::Upper, 4 * n - 3, kRsOffByTwo, false);
  }
  return reg;
}

}  // namespace bookramsey
