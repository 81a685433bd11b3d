#include "ipenc.hpp"

#include <algorithm>
#include <functional>
#include <ostream>
#include <sstream>

#include "error.hpp"

namespace bookramsey {

std::uint32_t IpModel::add_variable(std::string name) {
  if (index_.count(name)) throw ArgumentError("duplicate variable " + name);
  const auto id = static_cast<std::uint32_t>(variables_.size());
  index_.emplace(name, id);
  variables_.push_back(std::move(name));
  return id;
}

void IpModel::add_constraint(LinearConstraint c) {
  for (const auto& t : c.terms) {
    if (t.var >= variables_.size()) throw ArgumentError("row " + c.name + " references an undeclared variable");
  }
  if (!row_names_.insert(c.name).second) throw ArgumentError("duplicate row name " + c.name);
  constraints_.push_back(std::move(c));
}

std::optional<std::uint32_t> IpModel::find(std::string_view name) const {
  auto it = index_.find(std::string(name));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

namespace {

// Indicator of one difference set at one element: a variable, its
// complement, or the constant 0.
struct Indicator {
  enum Kind { Zero, Var, NegVar } kind = Zero;
  std::uint32_t var = 0;
};

// Linear expression sum(coef * var) + constant.
struct Affine {
  std::vector<LinearTerm> terms;
  std::int64_t constant = 0;

  void add(const Factor& f, std::int64_t coef) {
    if (f.negated) {
      constant += coef;
      terms.push_back({-coef, f.var});
    } else {
      terms.push_back({coef, f.var});
    }
  }
};

LinearConstraint make_row(std::string name, Affine lhs, Sense sense, std::int64_t rhs) {
  // Merge duplicate variables and drop zero coefficients.
  std::map<std::uint32_t, std::int64_t> merged;
  std::vector<std::uint32_t> order;
  for (const auto& t : lhs.terms) {
    if (!merged.count(t.var)) order.push_back(t.var);
    merged[t.var] += t.coef;
  }
  LinearConstraint c{std::move(name), {}, sense, rhs - lhs.constant};
  for (auto v : order)
    if (merged[v] != 0) c.terms.push_back({merged[v], v});
  return c;
}

class IpBuilder {
 public:
  IpBuilder(std::uint32_t m, BookParams p, const IpOptions& opts) : m_(m), p_(p), opts_(opts) {}

  IpModel build() {
    for (std::uint32_t i = 0; i < m_; ++i) x_.push_back(model_.add_variable("x_" + std::to_string(i)));
    for (std::uint32_t i = 0; i < m_; ++i) z_.push_back(model_.add_variable("z_" + std::to_string(i)));
    if (!opts_.complement_ansatz)
      for (std::uint32_t i = 0; i < m_; ++i) w_.push_back(model_.add_variable("w_" + std::to_string(i)));

    structural_rows();
    ansatz_rows();

    using IndFn = std::function<Indicator(std::uint32_t)>;
    IndFn d11 = [this](std::uint32_t i) { return i == 0 ? Indicator{} : Indicator{Indicator::Var, x_[i]}; };
    IndFn d12 = [this](std::uint32_t i) { return Indicator{Indicator::Var, z_[i]}; };
    IndFn d22 = [this](std::uint32_t i) {
      if (i == 0) return Indicator{};
      return opts_.complement_ansatz ? Indicator{Indicator::NegVar, x_[i]} : Indicator{Indicator::Var, w_[i]};
    };
    IndFn c11 = [this](std::uint32_t i) { return i == 0 ? Indicator{} : Indicator{Indicator::NegVar, x_[i]}; };
    IndFn c12 = [this](std::uint32_t i) { return Indicator{Indicator::NegVar, z_[i]}; };
    IndFn c22 = [this](std::uint32_t i) {
      if (i == 0) return Indicator{};
      return opts_.complement_ansatz ? Indicator{Indicator::Var, x_[i]} : Indicator{Indicator::NegVar, w_[i]};
    };

    const std::int64_t r1 = static_cast<std::int64_t>(p_.r) - 1;
    const std::int64_t s1 = static_cast<std::int64_t>(p_.s) - 1;
    diagonal_family(1, d11, d12, r1);
    diagonal_family(2, d22, d12, r1);
    cross_family(3, d11, d12, d22, r1);
    diagonal_family(4, c11, c12, s1);
    diagonal_family(5, c22, c12, s1);
    cross_family(6, c11, c12, c22, s1);
    return std::move(model_);
  }

 private:
  std::uint32_t add(std::uint32_t a, std::uint32_t b) const { return (a + b) % m_; }
  std::uint32_t sub(std::uint32_t a, std::uint32_t b) const { return (a + m_ - b) % m_; }

  void structural_rows() {
    model_.add_constraint({"fix_x_0", {{1, x_[0]}}, Sense::Equal, 0});
    for (std::uint32_t i = 1; i < m_ - i; ++i) {
      model_.add_constraint({"neg_x_" + std::to_string(i), {{1, x_[i]}, {-1, x_[m_ - i]}}, Sense::Equal, 0});
    }
    if (!w_.empty()) {
      model_.add_constraint({"fix_w_0", {{1, w_[0]}}, Sense::Equal, 0});
      for (std::uint32_t i = 1; i < m_ - i; ++i) {
        model_.add_constraint({"neg_w_" + std::to_string(i), {{1, w_[i]}, {-1, w_[m_ - i]}}, Sense::Equal, 0});
      }
    }
  }

  void ansatz_rows() {
    if (opts_.d11_eq_d12) {
      for (std::uint32_t i = 0; i < m_; ++i) {
        model_.add_constraint({"eq_xz_" + std::to_string(i), {{1, x_[i]}, {-1, z_[i]}}, Sense::Equal, 0});
      }
    }
    std::vector<std::uint32_t> pins = opts_.pinned;
    std::sort(pins.begin(), pins.end());
    pins.erase(std::unique(pins.begin(), pins.end()), pins.end());
    for (auto i : pins) {
      if (i == 0 || i >= m_) throw ArgumentError("pinned element " + std::to_string(i) + " outside [1, m-1]");
      model_.add_constraint({"pin_x_" + std::to_string(i), {{1, x_[i]}}, Sense::Equal, 1});
    }
  }

  // Adds a binary product of the given indicators with its linearization
  // rows; returns nullopt when the product is identically zero.
  std::optional<std::uint32_t> product(const std::string& name, std::vector<Indicator> inds) {
    std::vector<Factor> factors;
    for (const auto& ind : inds) {
      if (ind.kind == Indicator::Zero) return std::nullopt;
      factors.push_back({ind.var, ind.kind == Indicator::NegVar});
    }
    std::sort(factors.begin(), factors.end());
    factors.erase(std::unique(factors.begin(), factors.end()), factors.end());
    for (std::size_t i = 1; i < factors.size(); ++i)
      if (factors[i].var == factors[i - 1].var) return std::nullopt;  // v * (1 - v)

    const std::uint32_t pv = model_.add_variable(name);
    for (std::size_t t = 0; t < factors.size(); ++t) {
      Affine lhs;
      lhs.terms.push_back({1, pv});
      lhs.add(factors[t], -1);
      model_.add_constraint(make_row(name + "_ub" + std::to_string(t + 1), lhs, Sense::LessEq, 0));
    }
    Affine lhs;
    lhs.terms.push_back({1, pv});
    for (const auto& f : factors) lhs.add(f, -1);
    model_.add_constraint(make_row(name + "_lb", lhs, Sense::GreaterEq,
                                   -static_cast<std::int64_t>(factors.size()) + 1));
    model_.add_product({pv, std::move(factors)});
    return pv;
  }

  void family_row(int family, std::uint32_t d, const std::vector<std::uint32_t>& vars, std::int64_t bound) {
    if (vars.empty()) return;
    LinearConstraint c{"card" + std::to_string(family) + "_" + std::to_string(d), {}, Sense::LessEq, bound};
    for (auto v : vars) c.terms.push_back({1, v});
    model_.add_constraint(std::move(c));
  }

  std::string pname(char term, int family, std::uint32_t i, std::uint32_t d) const {
    return std::string(1, term) + std::to_string(family) + "_" + std::to_string(i) + "_" + std::to_string(d);
  }

  // Δ(A,A,d) + Δ(B,B,d) over d ∈ A, for d ≠ 0.
  template <class IndFn>
  void diagonal_family(int family, const IndFn& a, const IndFn& b, std::int64_t bound) {
    for (std::uint32_t d = 1; d < m_; ++d) {
      std::vector<std::uint32_t> vars;
      for (std::uint32_t i = 0; i < m_; ++i) {
        if (auto v = product(pname('s', family, i, d), {a(add(i, d)), a(i), a(d)})) vars.push_back(*v);
      }
      for (std::uint32_t i = 0; i < m_; ++i) {
        if (auto v = product(pname('u', family, i, d), {b(add(i, d)), b(i), a(d)})) vars.push_back(*v);
      }
      family_row(family, d, vars, bound);
    }
  }

  // Σ(A,B,d) + Δ(B,C,d) over d ∈ B.
  template <class IndFn>
  void cross_family(int family, const IndFn& a, const IndFn& b, const IndFn& c, std::int64_t bound) {
    for (std::uint32_t d = 0; d < m_; ++d) {
      std::vector<std::uint32_t> vars;
      for (std::uint32_t i = 0; i < m_; ++i) {
        if (auto v = product(pname('s', family, i, d), {a(i), b(sub(d, i)), b(d)})) vars.push_back(*v);
      }
      for (std::uint32_t i = 0; i < m_; ++i) {
        if (auto v = product(pname('u', family, i, d), {b(add(i, d)), c(i), b(d)})) vars.push_back(*v);
      }
      family_row(family, d, vars, bound);
    }
  }

  std::uint32_t m_;
  BookParams p_;
  const IpOptions& opts_;
  IpModel model_;
  std::vector<std::uint32_t> x_, z_, w_;
};

}  // namespace

IpModel encode_block_circulant_ip(std::uint32_t m, BookParams p, const IpOptions& opts) {
  if (m < 2) throw ArgumentError("encode_block_circulant_ip: m must be >= 2");
  if (m > 512) throw ArgumentError("encode_block_circulant_ip: m must be <= 512");
  return IpBuilder(m, p, opts).build();
}

void write_lp(const IpModel& model, std::ostream& os) {
  const auto& names = model.variables();
  os << "Minimize\nobj: 0\nSubject To\n";
  for (const auto& c : model.constraints()) {
    os << c.name << ':';
    bool first = true;
    for (const auto& t : c.terms) {
      const std::int64_t mag = t.coef < 0 ? -t.coef : t.coef;
      if (t.coef < 0) {
        os << " -";
      } else if (!first) {
        os << " +";
      }
      os << ' ';
      if (mag != 1) os << mag << ' ';
      os << names[t.var];
      first = false;
    }
    if (c.terms.empty()) os << " 0 " << names.front();
    switch (c.sense) {
      case Sense::LessEq: os << " <= "; break;
      case Sense::GreaterEq: os << " >= "; break;
      case Sense::Equal: os << " = "; break;
    }
    os << c.rhs << '\n';
  }
  os << "Binary\n";
  for (const auto& v : names) os << v << '\n';
  os << "End\n";
}

std::string to_lp(const IpModel& model) {
  std::ostringstream os;
  write_lp(model, os);
  return os.str();
}

BlockCirculantSpec solution_to_spec(std::uint32_t m, const IndicatorAssignment& a, const IpOptions& opts) {
  auto get = [&](char prefix, std::uint32_t i) {
    const std::string name = std::string(1, prefix) + "_" + std::to_string(i);
    auto it = a.find(name);
    if (it == a.end()) throw ArgumentError("solution is missing indicator " + name);
    return it->second != 0;
  };
  BlockCirculantSpec spec;
  spec.m = m;
  if (get('x', 0)) throw ValidationError("decode: x_0 is set, but 0 cannot lie in D11");
  for (std::uint32_t i = 1; i < m; ++i)
    if (get('x', i)) spec.d11.push_back(i);
  for (std::uint32_t i = 0; i < m; ++i)
    if (get('z', i)) spec.d12.push_back(i);
  if (opts.complement_ansatz) {
    for (std::uint32_t i = 1; i < m; ++i)
      if (!get('x', i)) spec.d22.push_back(i);
  } else {
    if (get('w', 0)) throw ValidationError("decode: w_0 is set, but 0 cannot lie in D22");
    for (std::uint32_t i = 1; i < m; ++i)
      if (get('w', i)) spec.d22.push_back(i);
  }
  try {
    validate(spec);
  } catch (const ValidationError& e) {
    throw ValidationError(std::string("decode: ") + e.what());
  }
  return spec;
}

IndicatorAssignment spec_to_indicators(const BlockCirculantSpec& spec, const IpOptions& opts) {
  IndicatorAssignment a;
  for (std::uint32_t i = 0; i < spec.m; ++i) {
    a["x_" + std::to_string(i)] = 0;
    a["z_" + std::to_string(i)] = 0;
    if (!opts.complement_ansatz) a["w_" + std::to_string(i)] = 0;
  }
  for (auto i : spec.d11) a["x_" + std::to_string(i)] = 1;
  for (auto i : spec.d12) a["z_" + std::to_string(i)] = 1;
  if (!opts.complement_ansatz)
    for (auto i : spec.d22) a["w_" + std::to_string(i)] = 1;
  return a;
}

IndicatorAssignment parse_solution(std::string_view text, std::uint32_t m, const IpOptions& opts) {
  IndicatorAssignment a;
  for (std::uint32_t i = 0; i < m; ++i) {
    a["x_" + std::to_string(i)] = 0;
    a["z_" + std::to_string(i)] = 0;
    if (!opts.complement_ansatz) a["w_" + std::to_string(i)] = 0;
  }
  std::istringstream is{std::string(text)};
  std::string line;
  while (std::getline(is, line)) {
    std::istringstream ls(line);
    std::string name, value;
    if (!(ls >> name >> value)) continue;
    if (name.empty() || name[0] == '#' || name[0] == '\\') continue;
    double v = 0;
    try {
      std::size_t used = 0;
      v = std::stod(value, &used);
      if (used != value.size()) continue;
    } catch (const std::exception&) {
      continue;
    }
    if (a.count(name)) a[name] = v >= 0.5 ? 1 : 0;
  }
  return a;
}

std::vector<int> complete_assignment(const IpModel& model, const IndicatorAssignment& a) {
  std::vector<int> values(model.variables().size(), 0);
  for (const auto& [name, v] : a) {
    if (auto id = model.find(name)) values[*id] = v;
  }
  for (const auto& p : model.products()) {
    int prod = 1;
    for (const auto& f : p.factors) prod &= f.negated ? 1 - values[f.var] : values[f.var];
    values[p.var] = prod;
  }
  return values;
}

std::optional<std::string> first_violated(const IpModel& model, const std::vector<int>& values) {
  for (const auto& c : model.constraints()) {
    std::int64_t lhs = 0;
    for (const auto& t : c.terms) lhs += t.coef * values.at(t.var);
    const bool ok = c.sense == Sense::LessEq ? lhs <= c.rhs : c.sense == Sense::GreaterEq ? lhs >= c.rhs : lhs == c.rhs;
    if (!ok) return c.name;
  }
  return std::nullopt;
}

}  // namespace bookramsey
