#pragma once

// Minimal reader for the LP files the encoder writes, used to check models
// from their text alone.

#include <cctype>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace lp_oracle {

struct Row {
  std::string name;
  std::vector<std::pair<long long, std::size_t>> terms;  // (coef, var index)
  std::string sense;
  long long rhs = 0;
};

struct Lp {
  std::vector<std::string> vars;
  std::map<std::string, std::size_t> index;
  std::vector<Row> rows;
  std::map<std::string, std::vector<std::size_t>> rows_by_prefix;  // defining rows of a product variable
};

inline std::size_t var_id(Lp& lp, const std::string& name) {
  auto [it, fresh] = lp.index.emplace(name, lp.vars.size());
  if (fresh) lp.vars.push_back(name);
  return it->second;
}

// Throws std::runtime_error on anything outside the expected grammar.
inline Lp parse(std::string_view text) {
  Lp lp;
  std::istringstream is{std::string(text)};
  std::string line;
  auto expect = [&](const char* want) {
    if (!std::getline(is, line) || line != want) throw std::runtime_error(std::string("expected ") + want);
  };
  expect("Minimize");
  expect("obj: 0");
  expect("Subject To");
  std::map<std::string, bool> declared;
  while (std::getline(is, line) && line != "Binary") {
    const auto colon = line.find(": ");
    if (colon == std::string::npos) throw std::runtime_error("row without name: " + line);
    Row row;
    row.name = line.substr(0, colon);
    std::istringstream ls(line.substr(colon + 2));
    std::string tok;
    long long sign = 1;
    long long coef = 1;
    while (ls >> tok) {
      if (tok == "+" || tok == "-") {
        sign = tok == "-" ? -1 : 1;
      } else if (tok == "<=" || tok == ">=" || tok == "=") {
        row.sense = tok;
        if (!(ls >> row.rhs)) throw std::runtime_error("missing rhs: " + line);
        break;
      } else if (std::isdigit(static_cast<unsigned char>(tok[0]))) {
        coef = std::stoll(tok);
      } else {
        row.terms.emplace_back(sign * coef, var_id(lp, tok));
        sign = 1;
        coef = 1;
      }
    }
    if (row.sense.empty() || ls >> tok) throw std::runtime_error("malformed row: " + line);
    if (declared[row.name]) throw std::runtime_error("duplicate row " + row.name);
    declared[row.name] = true;
    lp.rows.push_back(std::move(row));
  }
  if (line != "Binary") throw std::runtime_error("missing Binary section");
  std::size_t binaries = 0;
  while (std::getline(is, line) && line != "End") {
    if (!lp.index.count(line)) var_id(lp, line);
    ++binaries;
  }
  if (line != "End" || is.peek() != std::char_traits<char>::eof()) throw std::runtime_error("missing End");
  if (binaries != lp.vars.size()) throw std::runtime_error("binary section does not cover every variable");
  for (std::size_t i = 0; i < lp.rows.size(); ++i) {
    const auto& name = lp.rows[i].name;
    const auto cut = name.rfind('_');
    if (cut != std::string::npos && lp.index.count(name.substr(0, cut))) lp.rows_by_prefix[name.substr(0, cut)].push_back(i);
  }
  return lp;
}

inline bool holds(const Row& row, const std::vector<int>& v) {
  long long lhs = 0;
  for (auto [c, id] : row.terms) lhs += c * v[id];
  return row.sense == "<=" ? lhs <= row.rhs : row.sense == ">=" ? lhs >= row.rhs : lhs == row.rhs;
}

// Indicators come from `fixed`; every other variable is set to the single
// 0/1 value its own defining rows allow. Returns nullopt when some variable
// has no consistent value, else whether every row holds.
inline std::optional<bool> feasible_with(const Lp& lp, const std::map<std::string, int>& fixed) {
  std::vector<int> v(lp.vars.size(), 0);
  for (const auto& [name, val] : fixed) {
    auto it = lp.index.find(name);
    if (it != lp.index.end()) v[it->second] = val;
  }
  for (std::size_t id = 0; id < lp.vars.size(); ++id) {
    if (fixed.count(lp.vars[id])) continue;
    auto def = lp.rows_by_prefix.find(lp.vars[id]);
    if (def == lp.rows_by_prefix.end()) continue;
    int ok_count = 0;
    int chosen = 0;
    for (int b : {0, 1}) {
      v[id] = b;
      bool ok = true;
      for (auto r : def->second) ok = ok && holds(lp.rows[r], v);
      if (ok) {
        ++ok_count;
        chosen = b;
      }
    }
    if (ok_count != 1) return std::nullopt;
    v[id] = chosen;
  }
  for (const auto& row : lp.rows)
    if (!holds(row, v)) return false;
  return true;
}

}  // namespace lp_oracle
