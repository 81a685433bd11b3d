#include "circulant.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "error.hpp"

namespace bookramsey {

namespace {

std::uint32_t reduce(std::int64_t x, std::uint32_t m) {
  std::int64_t r = x % static_cast<std::int64_t>(m);
  if (r < 0) r += m;
  return static_cast<std::uint32_t>(r);
}

ElementSet normalize(std::span<const std::int64_t> xs, std::uint32_t m) {
  ElementSet out;
  out.reserve(xs.size());
  for (auto x : xs) out.push_back(reduce(x, m));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

void check_elements(std::span<const std::uint32_t> xs, std::uint32_t m) {
  for (auto x : xs) {
    if (x >= m) {
      throw ArgumentError("element " + std::to_string(x) + " is not a residue mod " +
                          std::to_string(m));
    }
  }
}

}  // namespace

BlockCirculantSpec make_spec(std::uint32_t m, std::span<const std::int64_t> d11,
                             std::span<const std::int64_t> d12,
                             std::optional<std::span<const std::int64_t>> d22) {
  if (m < 1) throw ValidationError("block size m must be >= 1");
  BlockCirculantSpec spec;
  spec.m = m;
  spec.d11 = normalize(d11, m);
  spec.d12 = normalize(d12, m);
  if (d22) {
    spec.d22 = normalize(*d22, m);
  } else {
    std::vector<char> in(m, 0);
    for (auto x : spec.d11) in[x] = 1;
    for (std::uint32_t i = 1; i < m; ++i)
      if (!in[i]) spec.d22.push_back(i);
  }
  validate(spec);
  return spec;
}

void validate(const BlockCirculantSpec& spec) {
  if (spec.m < 1) throw ValidationError("block size m must be >= 1");
  auto sorted_unique = [](const ElementSet& s, const char* name) {
    for (std::size_t i = 1; i < s.size(); ++i) {
      if (s[i - 1] >= s[i]) throw ValidationError(std::string(name) + " must be sorted and duplicate-free");
    }
  };
  sorted_unique(spec.d11, "D11");
  sorted_unique(spec.d12, "D12");
  sorted_unique(spec.d22, "D22");
  validate_two_block(CyclicGroup{spec.m}, spec.sets());
}

std::size_t delta(std::span<const std::uint32_t> x, std::span<const std::uint32_t> y,
                  std::int64_t d, std::uint32_t m) {
  if (m < 1) throw ArgumentError("modulus must be >= 1");
  check_elements(x, m);
  check_elements(y, m);
  const std::uint32_t dd = reduce(d, m);
  std::vector<char> in_y(m, 0);
  for (auto b : y) in_y[b] = 1;
  std::size_t count = 0;
  for (auto a : x) count += in_y[(a + m - dd) % m];
  return count;
}

std::size_t sigma(std::span<const std::uint32_t> x, std::span<const std::uint32_t> y,
                  std::int64_t d, std::uint32_t m) {
  if (m < 1) throw ArgumentError("modulus must be >= 1");
  check_elements(x, m);
  check_elements(y, m);
  const std::uint32_t dd = reduce(d, m);
  std::vector<char> in_y(m, 0);
  for (auto b : y) in_y[b] = 1;
  std::size_t count = 0;
  for (auto a : x) count += in_y[(dd + m - a) % m];
  return count;
}

Graph expand(const BlockCirculantSpec& spec) {
  validate(spec);
  return two_block_graph(CyclicGroup{spec.m}, spec.sets());
}

std::size_t common_neighbors_formula(const BlockCirculantSpec& spec, Vertex u, Vertex v) {
  validate(spec);
  const std::uint32_t m = spec.m;
  if (u >= 2 * m || v >= 2 * m) throw ArgumentError("vertex out of range for 2m vertices");
  if (u == v) throw ArgumentError("common_neighbors_formula needs distinct vertices");
  if (u > v) std::swap(u, v);
  const bool u1 = u < m;
  const bool v1 = v < m;
  const std::int64_t lu = u1 ? u : u - m;
  const std::int64_t lv = v1 ? v : v - m;
  const std::int64_t d = lv - lu;
  if (u1 && v1) return delta(spec.d11, spec.d11, d, m) + delta(spec.d12, spec.d12, d, m);
  if (!u1 && !v1) return delta(spec.d22, spec.d22, d, m) + delta(spec.d12, spec.d12, d, m);
  // u in V1, v = m + j in V2: d = j - u.
  return sigma(spec.d11, spec.d12, d, m) + delta(spec.d12, spec.d22, d, m);
}

ConditionReport check_book_conditions(const BlockCirculantSpec& spec, BookParams p) {
  validate(spec);
  return evaluate_two_block_conditions(CyclicGroup{spec.m}, spec.sets(), p);
}

BlockCirculantSpec complement_spec(const BlockCirculantSpec& spec) {
  validate(spec);
  auto c = complement_sets(CyclicGroup{spec.m}, spec.sets());
  return {spec.m, std::move(c.d11), std::move(c.d12), std::move(c.d22)};
}

namespace {

std::string trim(std::string_view s) {
  std::size_t a = 0;
  std::size_t b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return std::string(s.substr(a, b - a));
}

std::vector<std::int64_t> parse_set(const std::string& body, const std::string& field) {
  std::vector<std::int64_t> out;
  std::string token;
  std::istringstream is(body);
  while (std::getline(is, token, ',')) {
    token = trim(token);
    if (token.empty()) continue;
    std::size_t used = 0;
    long long v = 0;
    try {
      v = std::stoll(token, &used);
    } catch (const std::exception&) {
      throw ParseError("spec text: bad element '" + token + "' in " + field);
    }
    if (used != token.size()) throw ParseError("spec text: bad element '" + token + "' in " + field);
    out.push_back(v);
  }
  return out;
}

std::string join(const ElementSet& s) {
  std::string out;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(s[i]);
  }
  return out;
}

}  // namespace

BlockCirculantSpec parse_spec(std::string_view text) {
  std::string t = trim(text);
  if (auto hash = t.find('#'); hash != std::string::npos) t = trim(t.substr(0, hash));
  std::vector<std::string> parts;
  {
    std::string part;
    std::istringstream is(t);
    while (std::getline(is, part, ';')) parts.push_back(trim(part));
  }
  if (parts.size() < 3 || parts.size() > 4) {
    throw ParseError("spec text: expected 'm; D11={...}; D12={...}[; D22={...}]'");
  }
  std::uint32_t m = 0;
  try {
    std::size_t used = 0;
    long long v = std::stoll(parts[0], &used);
    if (used != parts[0].size() || v < 1 || v > 512) throw ParseError("");
    m = static_cast<std::uint32_t>(v);
  } catch (const std::exception&) {
    throw ParseError("spec text: bad block size '" + parts[0] + "'");
  }
  std::optional<std::vector<std::int64_t>> d11, d12, d22;
  for (std::size_t i = 1; i < parts.size(); ++i) {
    const auto& p = parts[i];
    auto eq = p.find('=');
    if (eq == std::string::npos) throw ParseError("spec text: missing '=' in '" + p + "'");
    std::string key = trim(p.substr(0, eq));
    std::string val = trim(p.substr(eq + 1));
    if (val.size() < 2 || val.front() != '{' || val.back() != '}') {
      throw ParseError("spec text: set for " + key + " must be written {...}");
    }
    auto elems = parse_set(val.substr(1, val.size() - 2), key);
    if (key != "D11" && key != "D12" && key != "D22") throw ParseError("spec text: unknown field '" + key + "'");
    auto& slot = key == "D11" ? d11 : key == "D12" ? d12 : d22;
    if (slot) throw ParseError("spec text: duplicate field " + key);
    slot = std::move(elems);
  }
  if (!d11 || !d12) throw ParseError("spec text: D11 and D12 are required");
  if (d22) return make_spec(m, *d11, *d12, std::span<const std::int64_t>(*d22));
  return make_spec(m, *d11, *d12);
}

std::string format_spec(const BlockCirculantSpec& spec, bool explicit_d22) {
  std::string out = std::to_string(spec.m) + "; D11={" + join(spec.d11) + "}; D12={" + join(spec.d12) + "}";
  if (explicit_d22) out += "; D22={" + join(spec.d22) + "}";
  return out;
}

}  // namespace bookramsey
