#pragma once

// Bundled lower-bound witnesses and the persistent bounds registry.

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "circulant.hpp"
#include "error.hpp"
#include "graph.hpp"

namespace bookramsey {

// One claimed lower bound R(B_r, B_s) >= bound with the graph proving it.
struct WitnessEntry {
  std::string claim;  // e.g. "R(B_8,B_8) >= 33"
  std::uint32_t r = 0;
  std::uint32_t s = 0;
  std::uint32_t bound = 0;
  std::variant<BlockCirculantSpec, Graph> payload;
};

// Parses "R(B_r,B_s) >= v" (">=" or "≥").
WitnessEntry parse_claim(std::string_view text);

// Lines "R(B_r,B_s) >= v: m; D11={...}; D12={...}[; D22={...}]", '#' comments.
// Missing D22 is the complement of D11 in Z_m \ {0}. Errors name the line.
std::vector<WitnessEntry> parse_block_circulant_table(std::string_view text);
// "# R(B_r,B_s) >= v" header followed by 0/1 rows.
WitnessEntry parse_matrix_witness(std::string_view text);

// Every bundled witness: the two-block rows in file order, then the matrices.
std::vector<WitnessEntry> load_appendix();

struct VerificationReport {
  std::string claim;
  BookParams params;
  std::size_t expected_order = 0;  // bound - 1
  std::size_t order = 0;
  RamseyReport ramsey;
  std::optional<ConditionReport> conditions;  // two-block payloads only
  bool conditions_agree = true;               // condition verdict == graph verdict
  bool pass = false;
  std::string failure;  // empty when pass

  // First edge with >= r common neighbors, else first non-edge with >= s
  // common non-neighbors.
  std::optional<Edge> violating_pair() const;
  bool violation_in_complement() const;
};

Graph witness_graph(const WitnessEntry& entry);
VerificationReport verify_bound(const WitnessEntry& entry);
VerificationReport verify_graph_bound(const std::string& claim, const Graph& g, BookParams p,
                                      std::uint32_t bound);

enum class BoundKind { Lower, Upper, Exact };
std::string_view to_string(BoundKind kind);
BoundKind parse_bound_kind(std::string_view text);

struct WitnessRef {
  std::string type;  // "block_circulant", "adjacency" or "construction"
  std::string description;  // spec text, matrix label or construction name
  std::string graph6;
  std::string sha256;  // hex digest of graph6
  friend bool operator==(const WitnessRef&, const WitnessRef&) = default;
};

WitnessRef make_witness_ref(std::string type, std::string description, const Graph& g);
std::string sha256_hex(std::string_view data);

struct BoundRecord {
  std::uint32_t r = 1;
  std::uint32_t s = 1;
  BoundKind kind = BoundKind::Lower;
  std::uint32_t value = 0;
  std::optional<WitnessRef> witness;
  std::string provenance;
  friend bool operator==(const BoundRecord&, const BoundRecord&) = default;
};

std::string record_to_json(const BoundRecord& rec);
BoundRecord record_from_json(std::string_view line);

struct BoundInterval {
  std::uint32_t r = 0;
  std::uint32_t s = 0;
  std::optional<std::uint32_t> lower;  // R >= lower
  std::optional<std::uint32_t> upper;  // R <= upper
  std::vector<std::string> lower_provenance;
  std::vector<std::string> upper_provenance;
  bool exact() const { return lower && upper && *lower == *upper; }
  bool consistent() const { return !lower || !upper || *lower <= *upper; }
};

// Thrown by put when a witness fails to verify.
class WitnessRejected : public ValidationError {
 public:
  WitnessRejected(const std::string& what, VerificationReport report)
      : ValidationError(what), report_(std::move(report)) {}
  const VerificationReport& report() const { return report_; }

 private:
  VerificationReport report_;
};

class BoundsRegistry {
 public:
  BoundsRegistry() = default;

  // Records collected from the bundled witnesses and the published tables.
  static BoundsRegistry seeded();

  static BoundsRegistry from_jsonl(std::string_view text);
  std::string to_jsonl() const;
  static BoundsRegistry load(const std::filesystem::path& path);
  // Writes a sibling temp file, then renames it over path.
  void save(const std::filesystem::path& path) const;

  // Witness-carrying records are verified first; duplicates are ignored.
  void put(BoundRecord rec);
  // R(B_r,B_s) = R(B_s,B_r), so records of both orientations count.
  BoundInterval query(std::uint32_t r, std::uint32_t s) const;

  const std::vector<BoundRecord>& records() const { return records_; }

 private:
  std::vector<BoundRecord> records_;
};

// Verification of a stored witness: hash, graph6 and bound.
VerificationReport verify_record(const BoundRecord& rec);

// Complete bipartite K_{14,14}: no B_2, complement has no B_13.
Graph k14_14();

}  // namespace bookramsey
