#pragma once

// Brute-force oracles that work on ids and maps, straight from the
// definitions, without going through the library's indexed tables.

#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "plotkit/plot.hpp"

namespace oracle {

using Id = std::string;

struct Table {
  std::vector<Id> objects;
  std::vector<Id> arrows;
  std::map<Id, Id> src, tgt;
  std::map<std::pair<Id, Id>, Id> comp;

  std::optional<Id> c(const Id& f, const Id& g) const {
    auto it = comp.find({f, g});
    if (it == comp.end()) return std::nullopt;
    return it->second;
  }
  bool defined(const Id& f, const Id& g) const { return comp.count({f, g}) > 0; }
};

inline Table table_of(const plotkit::Plot& p) {
  Table t;
  auto r = p.raw();
  t.objects = r.objects;
  for (const auto& a : r.arrows) {
    t.arrows.push_back(a.id);
    t.src[a.id] = a.src;
    t.tgt[a.id] = a.tgt;
  }
  for (const auto& c : r.comp) t.comp[{c.f, c.g}] = c.h;
  return t;
}

inline Table opposite(const Table& t) {
  Table o = t;
  o.src = t.tgt;
  o.tgt = t.src;
  o.comp.clear();
  for (const auto& [fg, h] : t.comp) o.comp[{fg.second, fg.first}] = h;
  return o;
}

// Clause-by-clause transcription of the associativity conditions.
inline bool left_pre_associative(const Table& t) {
  for (const auto& x : t.arrows)
    for (const auto& y : t.arrows)
      for (const auto& z : t.arrows) {
        auto xy = t.c(x, y), yz = t.c(y, z);
        if (!xy || !yz || !t.defined(*xy, z)) continue;
        if (!t.defined(x, *yz)) return false;
        if (*t.c(*xy, z) != *t.c(x, *yz)) return false;
      }
  return true;
}

inline bool strong_clause(const Table& t) {
  for (const auto& x : t.arrows)
    for (const auto& y : t.arrows)
      for (const auto& z : t.arrows) {
        auto xy = t.c(x, y);
        if (xy && t.defined(y, z) && !t.defined(*xy, z)) return false;
      }
  return true;
}

inline bool associative(const Table& t) {
  for (const auto& x : t.arrows)
    for (const auto& y : t.arrows)
      for (const auto& z : t.arrows) {
        auto xy = t.c(x, y), yz = t.c(y, z);
        if (!xy || !yz) continue;
        auto l = t.c(*xy, z), r = t.c(x, *yz);
        if (l && r && *l != *r) return false;
      }
  return true;
}

inline bool left_dissociative(const Table& t) {
  for (const auto& x : t.arrows)
    for (const auto& y : t.arrows)
      for (const auto& z : t.arrows) {
        auto xy = t.c(x, y);
        if (!xy || !t.defined(*xy, z)) continue;
        auto yz = t.c(y, z);
        if (!yz || !t.defined(x, *yz)) return false;
        if (*t.c(*xy, z) != *t.c(x, *yz)) return false;
      }
  return true;
}

struct Laws {
  bool lpa, rpa, pa, sa, as, ld, rd, d;
};

inline Laws laws(const Table& t) {
  Laws l{};
  const Table o = opposite(t);
  l.lpa = left_pre_associative(t);
  l.rpa = left_pre_associative(o);
  l.pa = l.lpa && l.rpa;
  l.sa = l.pa && strong_clause(t);
  l.as = associative(t);
  l.ld = left_dissociative(t);
  l.rd = left_dissociative(o);
  l.d = l.ld && l.rd;
  return l;
}

// Local identity at A: a loop composing on both sides, neutrally, with every
// incident arrow.
inline std::optional<Id> identity_at(const Table& t, const Id& a) {
  std::optional<Id> found;
  for (const auto& e : t.arrows) {
    if (t.src.at(e) != a || t.tgt.at(e) != a) continue;
    bool ok = true;
    for (const auto& f : t.arrows) {
      if (t.tgt.at(f) == a && t.c(f, e) != std::optional<Id>(f)) ok = false;
      if (t.src.at(f) == a && t.c(e, f) != std::optional<Id>(f)) ok = false;
    }
    if (ok) found = e;
  }
  return found;
}

// g with (g, f) composable, and f with (f, g) composable
inline std::vector<Id> into(const Table& t, const Id& f) {
  std::vector<Id> out;
  for (const auto& g : t.arrows)
    if (t.defined(g, f)) out.push_back(g);
  return out;
}

inline std::vector<Id> from(const Table& t, const Id& f) {
  std::vector<Id> out;
  for (const auto& g : t.arrows)
    if (t.defined(f, g)) out.push_back(g);
  return out;
}

inline bool monic(const Table& t, const Id& f) {
  auto hs = into(t, f);
  for (const auto& a : hs)
    for (const auto& b : hs)
      if (a != b && *t.c(a, f) == *t.c(b, f)) return false;
  return true;
}

inline bool epic(const Table& t, const Id& f) {
  auto hs = from(t, f);
  for (const auto& a : hs)
    for (const auto& b : hs)
      if (a != b && *t.c(f, a) == *t.c(f, b)) return false;
  return true;
}

inline bool right_split(const Table& t, const Id& f) {
  for (const auto& k : t.arrows) {
    if (t.tgt.at(k) != t.tgt.at(f)) continue;
    bool hit = false;
    for (const auto& g : t.arrows)
      if (t.c(g, f) == std::optional<Id>(k)) hit = true;
    if (!hit) return false;
  }
  return true;
}

inline bool left_split(const Table& t, const Id& f) {
  for (const auto& k : t.arrows) {
    if (t.src.at(k) != t.src.at(f)) continue;
    bool hit = false;
    for (const auto& g : t.arrows)
      if (t.c(f, g) == std::optional<Id>(k)) hit = true;
    if (!hit) return false;
  }
  return true;
}

// g with f;g = 1_src and g;f = 1_tgt
inline std::optional<Id> two_sided_inverse(const Table& t, const Id& f) {
  auto ea = identity_at(t, t.src.at(f)), eb = identity_at(t, t.tgt.at(f));
  if (!ea || !eb) return std::nullopt;
  for (const auto& g : t.arrows)
    if (t.c(f, g) == ea && t.c(g, f) == eb) return g;
  return std::nullopt;
}

inline bool saturated(const Table& t) {
  for (const auto& f : t.arrows)
    for (const auto& g : t.arrows)
      if (t.tgt.at(f) == t.src.at(g) && !t.defined(f, g)) return false;
  return true;
}

inline bool unital(const Table& t) {
  for (const auto& a : t.objects)
    if (!identity_at(t, a)) return false;
  return true;
}

// Undirected reachability on the doubled digraph, plus A = B.
inline bool equivalent(const Table& t, const std::set<Id>& m, const Id& a, const Id& b) {
  std::set<Id> seen{a};
  std::vector<Id> stack{a};
  while (!stack.empty()) {
    Id x = stack.back();
    stack.pop_back();
    for (const auto& f : m) {
      for (auto [u, v] : {std::pair{t.src.at(f), t.tgt.at(f)}, std::pair{t.tgt.at(f), t.src.at(f)}})
        if (u == x && seen.insert(v).second) stack.push_back(v);
    }
  }
  return seen.count(b) > 0;
}

// Binary trees independent of the library's Paren.
struct Tree {
  std::vector<Tree> kids;  // empty for a leaf, two for a node
  std::size_t leaves() const { return kids.empty() ? 1 : kids[0].leaves() + kids[1].leaves(); }
};

inline std::vector<Tree> trees(std::size_t n) {
  if (n == 1) return {Tree{}};
  std::vector<Tree> out;
  for (std::size_t k = 1; k < n; ++k)
    for (const auto& l : trees(k))
      for (const auto& r : trees(n - k)) out.push_back(Tree{{l, r}});
  return out;
}

// Evaluate a tree on a list of arrows starting at position pos.
inline std::optional<Id> eval(const Table& t, const Tree& w, const std::vector<Id>& fs, std::size_t& pos) {
  if (w.kids.empty()) return fs[pos++];
  auto l = eval(t, w.kids[0], fs, pos);
  auto r = eval(t, w.kids[1], fs, pos);
  if (!l || !r) return std::nullopt;
  return t.c(*l, *r);
}

inline std::set<Id> powers(const Table& t, const Id& f, std::size_t n) {
  std::set<Id> out;
  std::vector<Id> fs(n, f);
  for (const auto& w : trees(n)) {
    std::size_t pos = 0;
    if (auto v = eval(t, w, fs, pos)) out.insert(*v);
  }
  return out;
}

inline std::size_t catalan(std::size_t k) {
  std::vector<std::size_t> c(k + 1, 0);
  c[0] = 1;
  for (std::size_t i = 1; i <= k; ++i)
    for (std::size_t j = 0; j < i; ++j) c[i] += c[j] * c[i - 1 - j];
  return c[k];
}

}  // namespace oracle
