#include "plotkit/connections.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <set>

#include "plotkit/subplots.hpp"
#include "plotkit/walks.hpp"

namespace plotkit {

Contiguity contiguous(const Plot& p, Index f, Index g) {
  p.check_arrow(f);
  p.check_arrow(g);
  Contiguity c;
  c.left = p.src(f) == p.src(g) || p.tgt(f) == p.src(g);
  c.right = p.tgt(g) == p.tgt(f) || p.src(g) == p.tgt(f);
  c.either = c.left || c.right;
  return c;
}

bool is_m_connection(const Plot& p, const std::vector<Index>& m, const std::vector<Index>& seq) {
  if (seq.empty()) return false;
  std::set<Index> ms(m.begin(), m.end());
  for (Index f : seq) {
    p.check_arrow(f);
    if (!ms.count(f)) return false;
  }
  if (seq.size() == 1) return true;
  const std::size_t n = seq.size();
  std::vector<Index> head(seq.begin(), seq.end() - 1);
  std::vector<std::size_t> perm(n - 1);
  std::iota(perm.begin(), perm.end(), 0);
  std::set<std::vector<Index>> tried;  // equal arrows give equal permuted tuples
  do {
    std::vector<Index> permuted;
    for (auto i : perm) permuted.push_back(head[i]);
    if (!tried.insert(permuted).second) continue;
    if (p.src(seq[0]) != p.src(permuted.front())) continue;
    if (!contiguous(p, permuted.back(), seq.back()).either) continue;
    if (is_m_connection(p, m, permuted)) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

namespace {

std::vector<std::vector<Index>> undirected_neighbours(const Plot& p, const std::vector<Index>& m) {
  std::vector<std::vector<Index>> nb(p.num_objects());
  for (Index f : m) {
    p.check_arrow(f);
    nb[p.src(f)].push_back(p.tgt(f));
    nb[p.tgt(f)].push_back(p.src(f));
  }
  return nb;
}

}  // namespace

bool m_connected(const Plot& p, const std::vector<Index>& m, Index a, Index b) {
  p.check_object(a);
  p.check_object(b);
  auto nb = undirected_neighbours(p, m);
  std::vector<bool> seen(p.num_objects(), false);
  std::deque<Index> work;
  for (Index x : nb[a])
    if (!seen[x]) {
      seen[x] = true;
      work.push_back(x);
    }
  while (!work.empty()) {
    Index x = work.front();
    work.pop_front();
    for (Index y : nb[x])
      if (!seen[y]) {
        seen[y] = true;
        work.push_back(y);
      }
  }
  return seen[b];
}

bool m_equivalent(const Plot& p, const std::vector<Index>& m, Index a, Index b) {
  return a == b || m_connected(p, m, a, b);
}

Components m_components(const Plot& p, const std::vector<Index>& m) {
  const auto n = static_cast<Index>(p.num_objects());
  std::vector<Index> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](Index x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (Index f : m) {
    p.check_arrow(f);
    Index a = find(p.src(f)), b = find(p.tgt(f));
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
  std::map<Index, std::vector<Index>> groups;
  for (Index a = 0; a < n; ++a) groups[find(a)].push_back(a);
  Components c;
  for (auto& [root, members] : groups) {
    std::vector<std::string> ids;
    for (Index a : members) ids.push_back(p.object(a));
    c.subplots.push_back(derived_subplot(p, DerivedKind::Full, ids, false));
    c.classes.push_back(std::move(members));
  }
  return c;
}

std::string to_string(const Plot& p, const MFactorization& phi) {
  std::string out;
  for (std::size_t i = 0; i < phi.path.size(); ++i) {
    if (i) out += '.';
    out += p.arrow(phi.path[i]);
  }
  return out + "|" + phi.wp.to_string();
}

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::True: return "true";
    case Verdict::False: return "false";
    case Verdict::Inconclusive: return "inconclusive";
  }
  return "?";
}

std::vector<std::vector<Index>> m_paths(const Plot& p, const std::vector<Index>& m, Index a,
                                        Index b, std::size_t length) {
  std::vector<bool> in(p.num_arrows(), false);
  for (Index f : m) in[f] = true;
  std::vector<std::vector<Index>> out;
  std::vector<Index> cur;
  auto rec = [&](auto&& self, Index at) -> void {
    if (cur.size() == length) {
      if (b == kNone || at == b) out.push_back(cur);
      return;
    }
    for (Index f : p.out_arrows(at)) {
      if (!in[f]) continue;
      cur.push_back(f);
      self(self, p.tgt(f));
      cur.pop_back();
    }
  };
  if (length > 0) rec(rec, a);
  return out;
}

MorphicResult m_morphic(const Plot& p, const std::vector<Index>& m, Index a, Index b,
                        std::size_t max_len) {
  p.check_object(a);
  p.check_object(b);
  for (std::size_t len = 1; len <= max_len; ++len)
    for (const auto& path : m_paths(p, m, a, b, len)) {
      auto counts = evaluation_counts(p, path);
      if (counts.empty()) continue;
      Index v = counts.begin()->first;
      return {Verdict::True, MFactorization{path, *paren_with_value(p, path, v)}};
    }
  return {longest_m_path(p, m, a, b).value_or(max_len + 1) <= max_len ? Verdict::False
                                                                       : Verdict::Inconclusive,
          std::nullopt};
}

namespace {

std::string path_id(const Plot& p, const std::vector<Index>& path) {
  std::string out;
  for (std::size_t i = 0; i < path.size(); ++i) {
    if (i) out += '.';
    out += p.arrow(path[i]);
  }
  return out;
}

std::vector<std::vector<Index>> all_m_paths(const Plot& p, const std::vector<Index>& m,
                                            std::size_t max_len) {
  std::vector<std::vector<Index>> out;
  for (std::size_t len = 1; len <= max_len; ++len)
    for (Index a = 0; a < static_cast<Index>(p.num_objects()); ++a)
      for (auto& path : m_paths(p, m, a, kNone, len)) out.push_back(std::move(path));
  return out;
}

}  // namespace

Plot bounded_path_plot(const Plot& p, const std::vector<Index>& m, std::size_t max_len) {
  auto paths = all_m_paths(p, m, max_len);
  RawPlot r;
  for (Index a = 0; a < static_cast<Index>(p.num_objects()); ++a) r.objects.push_back(p.object(a));
  for (const auto& path : paths)
    r.arrows.push_back({path_id(p, path), p.object(p.src(path.front())), p.object(p.tgt(path.back()))});
  for (const auto& x : paths)
    for (const auto& y : paths) {
      if (x.size() + y.size() > max_len || p.tgt(x.back()) != p.src(y.front())) continue;
      std::vector<Index> xy(x);
      xy.insert(xy.end(), y.begin(), y.end());
      r.comp.push_back({path_id(p, x), path_id(p, y), path_id(p, xy)});
    }
  return make_plot(r);
}

FactPlot bounded_fact_plot(const Plot& p, const std::vector<Index>& m, std::size_t max_len) {
  std::vector<MFactorization> facts;
  std::vector<Index> values;
  for (const auto& path : all_m_paths(p, m, max_len))
    for (const auto& wp : enumerate_parens(path.size()))
      if (auto v = eval_paren(p, wp, path)) {
        facts.push_back({path, wp});
        values.push_back(*v);
      }
  RawPlot r;
  for (Index a = 0; a < static_cast<Index>(p.num_objects()); ++a) r.objects.push_back(p.object(a));
  for (const auto& phi : facts)
    r.arrows.push_back({to_string(p, phi), p.object(p.src(phi.path.front())),
                        p.object(p.tgt(phi.path.back()))});
  for (std::size_t i = 0; i < facts.size(); ++i)
    for (std::size_t j = 0; j < facts.size(); ++j) {
      const auto& x = facts[i];
      const auto& y = facts[j];
      if (x.path.size() + y.path.size() > max_len) continue;
      if (p.tgt(x.path.back()) != p.src(y.path.front())) continue;
      if (!p.composable(values[i], values[j])) continue;
      MFactorization xy{x.path, Paren::node(x.wp, y.wp)};
      xy.path.insert(xy.path.end(), y.path.begin(), y.path.end());
      r.comp.push_back({to_string(p, x), to_string(p, y), to_string(p, xy)});
    }
  FactPlot out{make_plot(r), {}};
  out.factorizations.resize(facts.size());
  for (const auto& phi : facts) out.factorizations[out.plot.arrow_index(to_string(p, phi))] = phi;
  return out;
}

Punctor evaluation_punctor(const Plot& p, const std::vector<Index>& m, std::size_t max_len) {
  FactPlot fp = bounded_fact_plot(p, m, max_len);
  std::vector<Index> om, am;
  for (Index a = 0; a < static_cast<Index>(p.num_objects()); ++a) om.push_back(a);
  for (const auto& phi : fp.factorizations) am.push_back(*eval_paren(p, phi.wp, phi.path));
  return make_punctor(fp.plot, p, om, am);
}

Plot skeleton(const Plot& p, const std::vector<Index>& m) {
  auto comps = m_components(p, m);
  std::vector<std::string> reps;
  for (const auto& cls : comps.classes) reps.push_back(p.object(cls.front()));
  return derived_subplot(p, DerivedKind::Full, reps, false);
}

bool is_m_skeletal(const Plot& p, const std::vector<Index>& m) {
  return m_components(p, m).classes.size() == p.num_objects();
}

}  // namespace plotkit
