#include "plotkit/walks.hpp"

#include <deque>
#include <functional>

namespace plotkit {

namespace {

using Table = std::vector<std::vector<std::map<Index, std::size_t>>>;

// t[i][j]: counts for the sub-path i..j inclusive.
Table interval_counts(const Plot& p, const std::vector<Index>& path) {
  const std::size_t n = path.size();
  Table t(n, std::vector<std::map<Index, std::size_t>>(n));
  for (std::size_t i = 0; i < n; ++i) {
    p.check_arrow(path[i]);
    t[i][i][path[i]] = 1;
  }
  for (std::size_t len = 2; len <= n; ++len)
    for (std::size_t i = 0; i + len <= n; ++i) {
      const std::size_t j = i + len - 1;
      auto& cell = t[i][j];
      for (std::size_t k = i; k < j; ++k)
        for (auto [x, cx] : t[i][k])
          for (auto [y, cy] : t[k + 1][j])
            if (Index h = p.comp(x, y); h != kNone) cell[h] += cx * cy;
    }
  return t;
}

}  // namespace

std::map<Index, std::size_t> evaluation_counts(const Plot& p, const std::vector<Index>& path) {
  if (path.empty()) return {};
  return interval_counts(p, path)[0][path.size() - 1];
}

std::optional<Paren> paren_with_value(const Plot& p, const std::vector<Index>& path, Index v) {
  if (path.empty()) return std::nullopt;
  const Table t = interval_counts(p, path);
  std::function<std::optional<Paren>(std::size_t, std::size_t, Index)> build =
      [&](std::size_t i, std::size_t j, Index want) -> std::optional<Paren> {
    if (!t[i][j].count(want)) return std::nullopt;
    if (i == j) return Paren::leaf();
    // left-split length ascending, as in the canonical enumeration
    for (std::size_t k = i; k < j; ++k)
      for (auto [x, cx] : t[i][k])
        for (auto [y, cy] : t[k + 1][j])
          if (p.comp(x, y) == want) return Paren::node(*build(i, k, x), *build(k + 1, j, y));
    return std::nullopt;
  };
  return build(0, path.size() - 1, v);
}

std::optional<std::size_t> longest_m_path(const Plot& p, const std::vector<Index>& m, Index a,
                                          Index b) {
  const auto n = static_cast<Index>(p.num_objects());
  std::vector<std::vector<Index>> fwd(n), bwd(n);
  for (Index f : m) {
    fwd[p.src(f)].push_back(p.tgt(f));
    bwd[p.tgt(f)].push_back(p.src(f));
  }
  // objects on some nonempty path a -> ... -> b
  auto reach = [&](Index start, const std::vector<std::vector<Index>>& g) {
    std::vector<bool> seen(n, false);
    std::deque<Index> work;
    for (Index x : g[start])
      if (!seen[x]) {
        seen[x] = true;
        work.push_back(x);
      }
    while (!work.empty()) {
      Index x = work.front();
      work.pop_front();
      for (Index y : g[x])
        if (!seen[y]) {
          seen[y] = true;
          work.push_back(y);
        }
    }
    return seen;
  };
  auto from_a = reach(a, fwd);
  if (!from_a[b]) return 0;
  auto to_b = reach(b, bwd);
  std::vector<bool> on(n, false);
  for (Index x = 0; x < n; ++x) on[x] = (x == a || from_a[x]) && (x == b || to_b[x]);
  // a cycle among these objects gives unboundedly long paths
  std::vector<int> state(n, 0);  // 0 new, 1 open, 2 done
  std::vector<std::size_t> longest(n, 0);  // longest path x -> b within `on`
  bool cyclic = false;
  std::function<void(Index)> dfs = [&](Index x) {
    state[x] = 1;
    std::optional<std::size_t> best;
    if (x == b) best = 0;
    for (Index y : fwd[x]) {
      if (!on[y] || cyclic) continue;
      if (state[y] == 1) {
        cyclic = true;
        return;
      }
      if (state[y] == 0) dfs(y);
      if (cyclic) return;
      if (y == b || longest[y] > 0) best = std::max(best.value_or(0), longest[y] + 1);
    }
    longest[x] = best.value_or(0);
    state[x] = 2;
  };
  dfs(a);
  if (cyclic) return std::nullopt;
  return longest[a];
}

}  // namespace plotkit
