#include "search.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <chrono>
#include <functional>
#include <mutex>
#include <set>
#include <thread>

#include "error.hpp"

namespace bookramsey {

namespace {

using Clock = std::chrono::steady_clock;
using Rows = std::vector<std::uint64_t>;

Rows rows_from_graph6(const std::string& g6) {
  const std::size_t n = static_cast<std::size_t>(g6[0] - 63);
  Rows rows(n, 0);
  std::size_t pos = 1;
  int bit = 5;
  for (std::size_t j = 1; j < n; ++j) {
    for (std::size_t i = 0; i < j; ++i) {
      if (((g6[pos] - 63) >> bit) & 1) {
        rows[i] |= std::uint64_t{1} << j;
        rows[j] |= std::uint64_t{1} << i;
      }
      if (--bit < 0) {
        bit = 5;
        ++pos;
      }
    }
  }
  return rows;
}

Rows delete_vertex(const Rows& rows, std::size_t c) {
  Rows out;
  out.reserve(rows.size() - 1);
  const std::uint64_t low = (std::uint64_t{1} << c) - 1;
  for (std::size_t u = 0; u < rows.size(); ++u) {
    if (u == c) continue;
    const std::uint64_t r = rows[u];
    out.push_back((r & low) | ((r >> 1) & ~low));
  }
  return out;
}

struct Invariant {
  std::uint32_t degree = 0;
  std::uint32_t triangles = 0;
  friend auto operator<=>(const Invariant&, const Invariant&) = default;
};

Invariant invariant_of(const Rows& rows, std::size_t v) {
  Invariant inv{static_cast<std::uint32_t>(std::popcount(rows[v])), 0};
  std::uint64_t nb = rows[v];
  std::uint32_t twice = 0;
  while (nb) {
    twice += static_cast<std::uint32_t>(std::popcount(rows[std::countr_zero(nb)] & rows[v]));
    nb &= nb - 1;
  }
  inv.triangles = twice / 2;
  return inv;
}

class Extender {
 public:
  Extender(BookParams p, Clock::time_point deadline, bool has_deadline, const std::atomic<bool>& stop)
      : p_(p), deadline_(deadline), has_deadline_(has_deadline), stop_(stop) {}

  // Children of one canonical parent, each as canonical graph6. Returns false
  // when the deadline passed or another worker stopped.
  bool extend(const std::string& parent_form, std::vector<std::string>& out) {
    const Rows parent = rows_from_graph6(parent_form);
    const std::size_t k = parent.size();
    const std::uint64_t full = k == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << k) - 1;

    // Pairs already at the page limit: an edge whose endpoints both join the
    // new vertex, or a non-edge whose endpoints both avoid it, would overflow.
    std::vector<std::uint64_t> sat_edges, sat_nonedges;
    std::vector<std::uint32_t> deg(k);
    std::uint32_t max_parent_deg = 0;
    for (std::size_t a = 0; a < k; ++a) {
      deg[a] = static_cast<std::uint32_t>(std::popcount(parent[a]));
      max_parent_deg = std::max(max_parent_deg, deg[a]);
      for (std::size_t b = a + 1; b < k; ++b) {
        const std::uint64_t pair = (std::uint64_t{1} << a) | (std::uint64_t{1} << b);
        if ((parent[a] >> b) & 1U) {
          if (std::popcount(parent[a] & parent[b]) + 1 >= static_cast<int>(p_.r)) sat_edges.push_back(pair);
        } else {
          const std::uint64_t co = ~parent[a] & ~parent[b] & full & ~pair;
          if (std::popcount(co) + 1 >= static_cast<int>(p_.s)) sat_nonedges.push_back(pair);
        }
      }
    }

    std::set<std::string> seen;
    Rows child(parent);
    child.push_back(0);
    std::uint64_t mask = full;
    std::uint64_t counter = 0;
    while (true) {
      if ((++counter & 1023U) == 0 && (stop_.load(std::memory_order_relaxed) || expired())) return false;
      if (admissible(parent, mask, full, sat_edges, sat_nonedges) &&
          max_degree_ok(deg, max_parent_deg, mask)) {
        ++extensions_;
        for (std::size_t u = 0; u < k; ++u) {
          child[u] = parent[u] | (((mask >> u) & 1U) << k);
        }
        child[k] = mask;
        if (auto form = accept(child, parent_form)) {
          if (seen.insert(*form).second) {
            out.push_back(std::move(*form));
            ++accepted_;
          }
        }
      }
      if (mask == 0) break;
      --mask;
    }
    return !expired();
  }

  std::uint64_t extensions() const { return extensions_; }
  std::uint64_t accepted() const { return accepted_; }

 private:
  bool expired() const { return has_deadline_ && Clock::now() > deadline_; }

  bool admissible(const Rows& parent, std::uint64_t s, std::uint64_t full, const std::vector<std::uint64_t>& sat_edges,
                  const std::vector<std::uint64_t>& sat_nonedges) const {
    for (auto m : sat_edges)
      if ((s & m) == m) return false;
    for (auto m : sat_nonedges)
      if ((s & m) == 0) return false;
    const std::uint64_t outside = ~s & full;
    for (std::size_t u = 0; u < parent.size(); ++u) {
      const std::uint64_t bit = std::uint64_t{1} << u;
      if (s & bit) {
        if (std::popcount(s & parent[u]) >= static_cast<int>(p_.r)) return false;
      } else {
        if (std::popcount(outside & ~parent[u] & ~bit) >= static_cast<int>(p_.s)) return false;
      }
    }
    return true;
  }

  // Deleting a vertex of smaller degree cannot give the canonical parent.
  static bool max_degree_ok(const std::vector<std::uint32_t>& deg, std::uint32_t max_parent_deg, std::uint64_t s) {
    const auto d = static_cast<std::uint32_t>(std::popcount(s));
    if (d < max_parent_deg) return false;
    for (std::size_t u = 0; u < deg.size(); ++u)
      if (deg[u] + ((s >> u) & 1U) > d) return false;
    return true;
  }

  // Canonical form of the child when the new (last) vertex is equivalent to
  // the canonical deletion vertex.
  std::optional<std::string> accept(const Rows& child, const std::string& parent_form) const {
    const std::size_t v = child.size() - 1;
    std::vector<Invariant> inv(child.size());
    Invariant best{};
    for (std::size_t u = 0; u < child.size(); ++u) {
      inv[u] = invariant_of(child, u);
      best = std::max(best, inv[u]);
    }
    if (inv[v] != best) return std::nullopt;

    const CanonicalLabeling lab = canonical_labeling(std::span<const std::uint64_t>(child));
    std::size_t c = v;
    for (std::size_t u = 0; u < child.size(); ++u) {
      if (inv[u] == best && lab.label[u] > lab.label[c]) c = u;
    }
    if (lab.orbit[c] != lab.orbit[v]) {
      const Rows reduced = delete_vertex(child, c);
      if (canonical_labeling(std::span<const std::uint64_t>(reduced)).form.graph6 != parent_form) {
        return std::nullopt;
      }
    }
    return lab.form.graph6;
  }

  BookParams p_;
  Clock::time_point deadline_;
  bool has_deadline_;
  const std::atomic<bool>& stop_;
  std::uint64_t extensions_ = 0;
  std::uint64_t accepted_ = 0;
};

// Walks levels 1..n_max; on_level sees each completed level and returns
// false to stop early.
EnumerationStats run_levels(std::uint32_t n_max, BookParams p, const SearchOptions& opts,
                            const std::function<bool(std::uint32_t, const std::vector<std::string>&)>& on_level) {
  if (n_max < 1 || n_max > kCanonMaxVertices) {
    throw ArgumentError("enumeration order must be in [1, 64], got " + std::to_string(n_max));
  }
  if (opts.budget_seconds < 0) throw ArgumentError("budget must be nonnegative");
  const auto start = Clock::now();
  const bool has_deadline = opts.budget_seconds > 0;
  const auto deadline =
      start + std::chrono::duration_cast<Clock::duration>(std::chrono::duration<double>(opts.budget_seconds));
  const unsigned workers = std::max(1U, opts.workers);

  EnumerationStats stats;
  stats.level_counts = {1, 1};
  std::vector<std::string> level{graph6_from_rows(Rows{0})};
  auto elapsed = [&] { return std::chrono::duration<double>(Clock::now() - start).count(); };

  if (!on_level(1, level)) {
    stats.elapsed_seconds = elapsed();
    return stats;
  }
  for (std::uint32_t k = 2; k <= n_max; ++k) {
    std::vector<std::vector<std::string>> children(level.size());
    std::atomic<std::size_t> next{0};
    std::atomic<bool> stop{false};
    std::atomic<std::uint64_t> extensions{0}, accepted{0};
    auto work = [&] {
      Extender ext(p, deadline, has_deadline, stop);
      for (std::size_t i = next++; i < level.size() && !stop; i = next++) {
        if (!ext.extend(level[i], children[i])) stop = true;
      }
      extensions += ext.extensions();
      accepted += ext.accepted();
    };
    if (workers == 1) {
      work();
    } else {
      std::vector<std::thread> pool;
      for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work);
      for (auto& t : pool) t.join();
    }
    stats.extensions += extensions;
    stats.accepted += accepted;
    if (stop) {
      stats.elapsed_seconds = elapsed();
      throw BudgetExceeded("enumeration budget of " + std::to_string(opts.budget_seconds) +
                               " s exhausted while extending to " + std::to_string(k) + " vertices",
                           stats);
    }
    std::vector<std::string> merged;
    for (auto& c : children) std::move(c.begin(), c.end(), std::back_inserter(merged));
    std::sort(merged.begin(), merged.end());
    level = std::move(merged);
    stats.level_counts.push_back(level.size());
    if (!on_level(k, level)) break;
    if (level.empty()) {
      // Empty levels are upward-closed.
      for (std::uint32_t rest = k + 1; rest <= n_max; ++rest) stats.level_counts.push_back(0);
      break;
    }
  }
  stats.elapsed_seconds = elapsed();
  return stats;
}

}  // namespace

EnumerationResult enumerate_ramsey_graphs(std::uint32_t n, BookParams p, SearchOptions opts) {
  EnumerationResult result;
  result.n = n;
  result.params = p;
  result.stats = run_levels(n, p, opts, [&](std::uint32_t k, const std::vector<std::string>& level) {
    if (k == n) result.graphs = level;
    return true;
  });
  return result;
}

SmallcaseResult ramsey_number_smallcase(BookParams p, std::uint32_t n_cap, SearchOptions opts) {
  SmallcaseResult result;
  std::vector<std::string> previous;
  result.stats = run_levels(n_cap, p, opts, [&](std::uint32_t k, const std::vector<std::string>& level) {
    if (level.empty()) {
      result.value = k;
      result.critical_graphs = previous;
      return false;
    }
    previous = level;
    return true;
  });
  if (result.value == 0) {
    throw Inconclusive("every order up to " + std::to_string(n_cap) + " admits a Ramsey graph", result.stats);
  }
  return result;
}

}  // namespace bookramsey
