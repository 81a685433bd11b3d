#pragma once

// Integer-programming feasibility model whose 0/1 points are exactly the
// 2-block-circulant specs on Z_m passing the six book conditions.

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "circulant.hpp"

namespace bookramsey {

enum class Sense { LessEq, GreaterEq, Equal };

struct LinearTerm {
  std::int64_t coef;
  std::uint32_t var;
};

struct LinearConstraint {
  std::string name;
  std::vector<LinearTerm> terms;
  Sense sense;
  std::int64_t rhs;
};

// A factor of a product variable: the indicator itself or 1 minus it.
struct Factor {
  std::uint32_t var;
  bool negated;
  friend auto operator<=>(const Factor&, const Factor&) = default;
};

struct ProductDef {
  std::uint32_t var;
  std::vector<Factor> factors;
};

class IpModel {
 public:
  std::uint32_t add_variable(std::string name);
  void add_constraint(LinearConstraint c);
  void add_product(ProductDef p) { products_.push_back(std::move(p)); }

  const std::vector<std::string>& variables() const { return variables_; }
  const std::vector<LinearConstraint>& constraints() const { return constraints_; }
  const std::vector<ProductDef>& products() const { return products_; }
  std::optional<std::uint32_t> find(std::string_view name) const;

 private:
  std::vector<std::string> variables_;
  std::unordered_map<std::string, std::uint32_t> index_;
  std::vector<LinearConstraint> constraints_;
  std::set<std::string> row_names_;
  std::vector<ProductDef> products_;
};

struct IpOptions {
  bool complement_ansatz = false;  // D22 = Z_m \ ({0} ∪ D11), no w variables
  bool d11_eq_d12 = false;
  std::vector<std::uint32_t> pinned;  // forced into D11; each in [1, m-1]
};

// Indicators x_i (D11), z_i (D12), w_i (D22, absent under the complement
// ansatz); product variables s<f>_<i>_<d> and u<f>_<i>_<d> for the two
// difference-count terms of condition family f = 1..6.
IpModel encode_block_circulant_ip(std::uint32_t m, BookParams p, const IpOptions& opts);

void write_lp(const IpModel& model, std::ostream& os);
std::string to_lp(const IpModel& model);

using IndicatorAssignment = std::map<std::string, int>;

// Reads a spec off the indicator values. Throws ArgumentError when an
// indicator is missing and ValidationError when the values do not form a
// valid spec (x_0 set, D11 or D22 not closed under negation).
BlockCirculantSpec solution_to_spec(std::uint32_t m, const IndicatorAssignment& a, const IpOptions& opts);
IndicatorAssignment spec_to_indicators(const BlockCirculantSpec& spec, const IpOptions& opts);

// "name value" lines; other lines are skipped. Indicators of the m-model
// that the dump omits are taken as 0, since solvers list nonzeros only.
IndicatorAssignment parse_solution(std::string_view text, std::uint32_t m, const IpOptions& opts);

// Full assignment (by variable index) with product variables set to the
// product of their factors.
std::vector<int> complete_assignment(const IpModel& model, const IndicatorAssignment& a);
// Name of the first violated row, if any.
std::optional<std::string> first_violated(const IpModel& model, const std::vector<int>& values);

}  // namespace bookramsey
