#include "plotkit/subplots.hpp"

#include <algorithm>
#include <deque>
#include <set>

namespace plotkit {

namespace {

std::vector<Index> sorted_unique(std::vector<Index> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

std::vector<Index> known_objects(const Plot& p, const std::vector<std::string>& ids) {
  std::vector<Index> out;
  for (const auto& id : ids)
    if (auto a = p.find_object(id)) out.push_back(*a);
  return sorted_unique(out);
}

std::vector<Index> known_arrows(const Plot& p, const std::vector<std::string>& ids) {
  std::vector<Index> out;
  for (const auto& id : ids)
    if (auto f = p.find_arrow(id)) out.push_back(*f);
  return sorted_unique(out);
}

}  // namespace

SubplotCheck is_subplot(const Plot& q, const Plot& p) {
  SubplotCheck r;
  std::vector<Index> obj(q.num_objects());
  for (Index a = 0; a < static_cast<Index>(q.num_objects()); ++a) {
    auto pa = p.find_object(q.object(a));
    if (!pa) {
      r.reason = "object '" + q.object(a) + "' not in parent";
      return r;
    }
    obj[a] = *pa;
  }
  std::vector<Index> arr(q.num_arrows());
  for (Index f = 0; f < static_cast<Index>(q.num_arrows()); ++f) {
    auto pf = p.find_arrow(q.arrow(f));
    if (!pf) {
      r.reason = "arrow '" + q.arrow(f) + "' not in parent";
      return r;
    }
    if (p.src(*pf) != obj[q.src(f)] || p.tgt(*pf) != obj[q.tgt(f)]) {
      r.reason = "endpoints of '" + q.arrow(f) + "' differ from parent";
      return r;
    }
    arr[f] = *pf;
  }
  for (auto [f, g] : q.comp_domain()) {
    if (p.comp(arr[f], arr[g]) != arr[q.comp(f, g)]) {
      r.reason = "comp triple (" + q.arrow(f) + "," + q.arrow(g) + ")->" + q.arrow(q.comp(f, g)) +
                 " not in parent";
      return r;
    }
  }
  r.is_subplot = true;
  r.is_wide = q.num_objects() == p.num_objects();
  // Q is already contained in P, so equality is a matter of sizes
  r.is_proper = q.num_objects() != p.num_objects() || q.num_arrows() != p.num_arrows() ||
                q.comp_size() != p.comp_size();

  std::set<Index> arrows_in_q(arr.begin(), arr.end());
  r.is_full = true;
  for (Index a : obj)
    for (Index f : p.out_arrows(a)) {
      bool tgt_in_q = std::find(obj.begin(), obj.end(), p.tgt(f)) != obj.end();
      if (tgt_in_q && !arrows_in_q.count(f)) r.is_full = false;
    }
  r.is_identitive = true;
  for (Index a : obj)
    if (Index e = p.identity(a); e != kNone && !arrows_in_q.count(e)) r.is_identitive = false;
  return r;
}

Plot relative_subplot(const Plot& p, const std::vector<Index>& objects,
                      const std::vector<Index>& arrows) {
  std::vector<Index> arrs = sorted_unique(arrows);
  std::vector<Index> objs = objects;
  for (Index f : arrs) {
    p.check_arrow(f);
    objs.push_back(p.src(f));
    objs.push_back(p.tgt(f));
  }
  objs = sorted_unique(objs);
  std::vector<bool> in(p.num_arrows(), false);
  for (Index f : arrs) in[f] = true;

  RawPlot r;
  for (Index a : objs) r.objects.push_back(p.object(a));
  for (Index f : arrs) r.arrows.push_back({p.arrow(f), p.object(p.src(f)), p.object(p.tgt(f))});
  for (Index f : arrs)
    for (Index g : p.out_arrows(p.tgt(f))) {
      Index h = p.comp(f, g);
      if (in[g] && h != kNone && in[h]) r.comp.push_back({p.arrow(f), p.arrow(g), p.arrow(h)});
    }
  return make_plot(r);
}

std::vector<Index> compositive_closure(const Plot& p, std::vector<Index> arrows) {
  std::vector<bool> in(p.num_arrows(), false);
  std::deque<Index> work;
  for (Index f : sorted_unique(std::move(arrows))) {
    in[f] = true;
    work.push_back(f);
  }
  std::vector<Index> members(work.begin(), work.end());
  while (!work.empty()) {
    Index f = work.front();
    work.pop_front();
    // f may sit on either side of a new composite
    for (std::size_t i = 0; i < members.size(); ++i) {
      Index g = members[i];
      for (Index h : {p.comp(f, g), p.comp(g, f)})
        if (h != kNone && !in[h]) {
          in[h] = true;
          members.push_back(h);
          work.push_back(h);
        }
    }
  }
  return sorted_unique(members);
}

Plot generated_subplot(const Plot& p, const std::vector<Index>& objects,
                       const std::vector<Index>& arrows, GenerationMode mode) {
  std::vector<Index> objs = sorted_unique(objects);
  std::vector<Index> arrs = sorted_unique(arrows);
  switch (mode) {
    case GenerationMode::Relative:
      return relative_subplot(p, objs, arrs);
    case GenerationMode::Identitive: {
      std::vector<Index> ends = objs;
      for (Index f : arrs) {
        ends.push_back(p.src(f));
        ends.push_back(p.tgt(f));
      }
      for (Index a : ends)
        if (Index e = p.identity(a); e != kNone) arrs.push_back(e);
      return relative_subplot(p, objs, compositive_closure(p, arrs));
    }
    case GenerationMode::Smallest:
      return relative_subplot(p, objs, compositive_closure(p, arrs));
  }
  return Plot();
}

Plot generated_subplot(const Plot& p, const std::vector<std::string>& objects,
                       const std::vector<std::string>& arrows, GenerationMode mode) {
  return generated_subplot(p, known_objects(p, objects), known_arrows(p, arrows), mode);
}

Plot derived_subplot(const Plot& p, DerivedKind kind, const std::vector<std::string>& ids,
                     bool identitive) {
  const auto mode = identitive ? GenerationMode::Identitive : GenerationMode::Smallest;
  switch (kind) {
    case DerivedKind::Hom: {
      auto arrs = known_arrows(p, ids);
      std::vector<Index> objs;
      for (Index f : arrs) {
        objs.push_back(p.src(f));
        objs.push_back(p.tgt(f));
      }
      return generated_subplot(p, objs, arrs, mode);
    }
    case DerivedKind::Obj:
    case DerivedKind::Full: {
      auto objs = known_objects(p, ids);
      std::vector<bool> in(p.num_objects(), false);
      for (Index a : objs) in[a] = true;
      std::vector<Index> arrs;
      for (Index a : objs)
        for (Index f : p.out_arrows(a))
          if (in[p.tgt(f)]) arrs.push_back(f);
      return generated_subplot(p, objs, arrs, mode);
    }
    case DerivedKind::Wide: {
      std::vector<Index> objs;
      for (Index a = 0; a < static_cast<Index>(p.num_objects()); ++a) objs.push_back(a);
      return generated_subplot(p, objs, known_arrows(p, ids), mode);
    }
  }
  return Plot();
}

Plot restrict_to_relation(const Plot& p, const std::vector<std::pair<Index, Index>>& relation) {
  std::vector<Index> arrs;
  for (auto [f, g] : relation) {
    p.check_arrow(f);
    p.check_arrow(g);
    arrs.push_back(f);
    arrs.push_back(g);
  }
  return relative_subplot(p, {}, arrs);
}

Plot restrict_to_class(const Plot& p, const std::vector<Index>& cls) {
  // cls x cls mentions exactly the arrows of cls (and nothing when cls is empty)
  return relative_subplot(p, {}, cls);
}

CompositiveCheck is_compositive(const Plot& p, const std::vector<Index>& m) {
  std::vector<bool> in(p.num_arrows(), false);
  for (Index f : m) {
    p.check_arrow(f);
    in[f] = true;
  }
  auto ms = sorted_unique(m);
  for (Index f : ms)
    for (Index g : ms) {
      Index h = p.comp(f, g);
      if (h != kNone && !in[h]) return {false, std::make_pair(f, g)};
    }
  return {};
}

Plot underlying_quiver(const Plot& p) {
  RawPlot r = p.raw();
  r.comp.clear();
  return make_plot(r);
}

std::vector<GraphEdge> underlying_graph(const Plot& p) {
  std::vector<GraphEdge> out;
  for (Index f = 0; f < static_cast<Index>(p.num_arrows()); ++f) {
    GraphEdge e{p.arrow(f), {p.object(p.src(f))}};
    if (p.src(f) != p.tgt(f)) e.ends.push_back(p.object(p.tgt(f)));
    std::sort(e.ends.begin(), e.ends.end());
    out.push_back(std::move(e));
  }
  return out;
}

}  // namespace plotkit
