#include "canon.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <numeric>

#include "error.hpp"

namespace bookramsey {

namespace {

constexpr int kMax = 64;

// Ordered partition of positions 0..n-1. Cells are contiguous ranges of lab;
// size[start] is meaningful only at a cell start.
struct Partition {
  std::array<std::uint8_t, kMax> lab{};
  std::array<std::uint8_t, kMax> start_of{};
  std::array<std::uint8_t, kMax> size{};
  int cells = 0;
};

struct UnionFind {
  std::array<std::uint8_t, kMax> parent{};
  explicit UnionFind(int n) {
    for (int i = 0; i < n; ++i) parent[i] = static_cast<std::uint8_t>(i);
  }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (a < b) std::swap(a, b);
    parent[a] = static_cast<std::uint8_t>(b);  // root is the least element
  }
};

struct Leaf {
  std::vector<std::uint8_t> path;
  std::array<std::uint8_t, kMax> lab{};
  std::array<std::uint64_t, kMax> cert{};
};

class Search {
 public:
  Search(std::span<const std::uint64_t> rows) : n_(static_cast<int>(rows.size())) {
    std::copy(rows.begin(), rows.end(), rows_.begin());
  }

  CanonicalLabeling run() {
    Partition p;
    for (int i = 0; i < n_; ++i) {
      p.lab[i] = static_cast<std::uint8_t>(i);
      p.start_of[i] = 0;
    }
    p.size[0] = static_cast<std::uint8_t>(n_);
    p.cells = n_ > 0 ? 1 : 0;
    if (n_ > 0) {
      queue_.clear();
      in_queue_.fill(false);
      push(0);
      refine(p);
    }
    std::vector<std::uint8_t> path;
    node(p, path);
    return finish();
  }

 private:
  void push(int start) {
    if (!in_queue_[start]) {
      in_queue_[start] = true;
      queue_.push_back(static_cast<std::uint8_t>(start));
    }
  }

  void refine(Partition& p) {
    std::array<std::uint8_t, kMax> count{};
    std::size_t head = 0;
    while (head < queue_.size() && p.cells < n_) {
      const int w = queue_[head++];
      in_queue_[w] = false;
      std::uint64_t mask = 0;
      for (int i = w; i < w + p.size[w]; ++i) mask |= std::uint64_t{1} << p.lab[i];
      for (int x = 0; x < n_; x += p.size[x]) {
        const int sz = p.size[x];
        if (sz == 1) continue;
        bool uniform = true;
        for (int i = x; i < x + sz; ++i) {
          count[p.lab[i]] = static_cast<std::uint8_t>(std::popcount(rows_[p.lab[i]] & mask));
          if (count[p.lab[i]] != count[p.lab[x]]) uniform = false;
        }
        if (uniform) continue;
        std::stable_sort(p.lab.begin() + x, p.lab.begin() + x + sz,
                         [&](std::uint8_t a, std::uint8_t b) { return count[a] < count[b]; });
        int frag = x;
        for (int i = x + 1; i <= x + sz; ++i) {
          if (i == x + sz || count[p.lab[i]] != count[p.lab[frag]]) {
            p.size[frag] = static_cast<std::uint8_t>(i - frag);
            for (int j = frag; j < i; ++j) p.start_of[j] = static_cast<std::uint8_t>(frag);
            if (frag != x) ++p.cells;
            push(frag);
            frag = i;
          }
        }
      }
    }
    for (std::size_t i = head; i < queue_.size(); ++i) in_queue_[queue_[i]] = false;
    queue_.clear();
  }

  // Returns the depth the search must unwind to.
  int node(const Partition& p, std::vector<std::uint8_t>& path) {
    const int depth = static_cast<int>(path.size());
    if (p.cells == n_) return leaf(p, path);

    int target = 0;
    while (p.size[target] == 1) target += p.size[target];
    const int sz = p.size[target];

    std::vector<std::uint8_t> tried;
    for (int k = 0; k < sz; ++k) {
      const std::uint8_t v = p.lab[target + k];
      if (!tried.empty() && equivalent_to_tried(path, tried, v)) continue;
      tried.push_back(v);

      Partition child = p;
      // Individualize v: move it to the front of its cell.
      auto it = std::find(child.lab.begin() + target, child.lab.begin() + target + sz, v);
      std::rotate(child.lab.begin() + target, it, it + 1);
      child.size[target] = 1;
      child.size[target + 1] = static_cast<std::uint8_t>(sz - 1);
      for (int j = target + 1; j < target + sz; ++j) child.start_of[j] = static_cast<std::uint8_t>(target + 1);
      ++child.cells;
      queue_.clear();
      in_queue_.fill(false);
      push(target);
      refine(child);

      path.push_back(v);
      const int back = node(child, path);
      path.pop_back();
      if (back < depth) return back;
    }
    return depth;
  }

  bool equivalent_to_tried(const std::vector<std::uint8_t>& path, const std::vector<std::uint8_t>& tried,
                           std::uint8_t v) {
    UnionFind uf(n_);
    for (const auto& g : gens_) {
      bool fixes = true;
      for (auto u : path) {
        if (g[u] != u) {
          fixes = false;
          break;
        }
      }
      if (!fixes) continue;
      for (int i = 0; i < n_; ++i) uf.unite(i, g[i]);
    }
    const int root = uf.find(v);
    return std::any_of(tried.begin(), tried.end(), [&](std::uint8_t t) { return uf.find(t) == root; });
  }

  void certificate(const Partition& p, std::array<std::uint64_t, kMax>& cert) const {
    std::array<std::uint8_t, kMax> inv{};
    for (int i = 0; i < n_; ++i) inv[p.lab[i]] = static_cast<std::uint8_t>(i);
    for (int i = 0; i < n_; ++i) {
      std::uint64_t row = rows_[p.lab[i]];
      std::uint64_t out = 0;
      while (row) {
        out |= std::uint64_t{1} << inv[std::countr_zero(row)];
        row &= row - 1;
      }
      cert[i] = out;
    }
  }

  int compare(const std::array<std::uint64_t, kMax>& a, const std::array<std::uint64_t, kMax>& b) const {
    for (int i = 0; i < n_; ++i) {
      if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
    }
    return 0;
  }

  static int common_prefix(const std::vector<std::uint8_t>& a, const std::vector<std::uint8_t>& b) {
    int k = 0;
    while (k < static_cast<int>(a.size()) && k < static_cast<int>(b.size()) && a[k] == b[k]) ++k;
    return k;
  }

  void record_automorphism(const Leaf& from, const Partition& to) {
    std::vector<std::uint8_t> g(n_);
    bool identity = true;
    for (int i = 0; i < n_; ++i) {
      g[from.lab[i]] = to.lab[i];
      if (from.lab[i] != to.lab[i]) identity = false;
    }
    if (!identity) gens_.push_back(std::move(g));
  }

  int leaf(const Partition& p, const std::vector<std::uint8_t>& path) {
    Leaf cur;
    cur.path = path;
    cur.lab = p.lab;
    certificate(p, cur.cert);
    if (!have_first_) {
      first_ = cur;
      best_ = cur;
      have_first_ = true;
      return static_cast<int>(path.size());
    }
    if (compare(cur.cert, first_.cert) == 0) {
      record_automorphism(first_, p);
      return common_prefix(path, first_.path);
    }
    const int c = compare(cur.cert, best_.cert);
    if (c == 0) {
      record_automorphism(best_, p);
      return common_prefix(path, best_.path);
    }
    if (c > 0) best_ = std::move(cur);
    return static_cast<int>(path.size());
  }

  CanonicalLabeling finish() const {
    CanonicalLabeling out;
    out.order.resize(n_);
    out.label.resize(n_);
    for (int i = 0; i < n_; ++i) {
      out.order[i] = best_.lab[i];
      out.label[best_.lab[i]] = static_cast<Vertex>(i);
    }
    UnionFind uf(n_);
    for (const auto& g : gens_) {
      for (int i = 0; i < n_; ++i) uf.unite(i, g[i]);
      out.generators.emplace_back(g.begin(), g.end());
    }
    out.orbit.resize(n_);
    for (int i = 0; i < n_; ++i) out.orbit[i] = static_cast<Vertex>(uf.find(i));
    out.form.graph6 = graph6_from_rows(std::span<const std::uint64_t>(best_.cert.data(), n_));
    return out;
  }

  int n_;
  std::array<std::uint64_t, kMax> rows_{};
  std::vector<std::uint8_t> queue_;
  std::array<bool, kMax> in_queue_{};
  std::vector<std::vector<std::uint8_t>> gens_;
  Leaf first_;
  Leaf best_;
  bool have_first_ = false;
};

std::vector<std::uint64_t> rows_of(const Graph& g) {
  if (g.order() > kCanonMaxVertices) {
    throw ArgumentError("canonical form supports at most 64 vertices, got " + std::to_string(g.order()));
  }
  std::vector<std::uint64_t> rows(g.order());
  for (std::size_t u = 0; u < g.order(); ++u) rows[u] = g.row(static_cast<Vertex>(u))[0];
  return rows;
}

}  // namespace

std::string graph6_from_rows(std::span<const std::uint64_t> rows) {
  const std::size_t n = rows.size();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(63 + n));
  } else {
    out.push_back('~');
    for (int shift : {12, 6, 0}) out.push_back(static_cast<char>(63 + ((n >> shift) & 63)));
  }
  int bits = 0;
  int acc = 0;
  for (std::size_t j = 1; j < n; ++j) {
    for (std::size_t i = 0; i < j; ++i) {
      acc = (acc << 1) | static_cast<int>((rows[i] >> j) & 1U);
      if (++bits == 6) {
        out.push_back(static_cast<char>(63 + acc));
        bits = acc = 0;
      }
    }
  }
  if (bits > 0) out.push_back(static_cast<char>(63 + (acc << (6 - bits))));
  return out;
}

CanonicalLabeling canonical_labeling(std::span<const std::uint64_t> rows) {
  if (rows.size() > kCanonMaxVertices) {
    throw ArgumentError("canonical form supports at most 64 vertices, got " + std::to_string(rows.size()));
  }
  return Search(rows).run();
}

CanonicalLabeling canonical_labeling(const Graph& g) {
  const auto rows = rows_of(g);
  return canonical_labeling(std::span<const std::uint64_t>(rows));
}

CanonicalForm canonical_form(const Graph& g) { return canonical_labeling(g).form; }

bool isomorphic(const Graph& a, const Graph& b) {
  if (a.order() != b.order() || a.edge_count() != b.edge_count()) return false;
  return canonical_form(a) == canonical_form(b);
}

}  // namespace bookramsey
