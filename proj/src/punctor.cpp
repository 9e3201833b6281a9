#include "plotkit/punctor.hpp"

#include <algorithm>
#include <cstdlib>
#include <set>

#include "plotkit/connections.hpp"
#include "plotkit/subplots.hpp"

namespace plotkit {

std::string_view to_string(PunctorViolationKind kind) {
  switch (kind) {
    case PunctorViolationKind::NotTotal: return "NotTotal";
    case PunctorViolationKind::EndpointMismatch: return "EndpointMismatch";
    case PunctorViolationKind::CompositionNotPreserved: return "CompositionNotPreserved";
    case PunctorViolationKind::UnknownId: return "UnknownId";
  }
  return "?";
}

static std::string join(const std::vector<PunctorViolation>& vs) {
  std::string out = "invalid punctor:";
  for (const auto& v : vs) {
    out += "\n  ";
    out += to_string(v.kind);
    out += ": " + v.detail;
  }
  return out;
}

PunctorError::PunctorError(std::vector<PunctorViolation> violations)
    : Error(join(violations)), violations_(std::move(violations)) {}

std::vector<PunctorViolation> punctor_violations(const Plot& source, const Plot& target,
                                                 const std::vector<Index>& obj_map,
                                                 const std::vector<Index>& arrow_map) {
  std::vector<PunctorViolation> vs;
  auto bad_obj = [&](Index b) { return b < 0 || b >= static_cast<Index>(target.num_objects()); };
  auto bad_arrow = [&](Index g) { return g < 0 || g >= static_cast<Index>(target.num_arrows()); };
  if (obj_map.size() != source.num_objects() || arrow_map.size() != source.num_arrows()) {
    vs.push_back({PunctorViolationKind::NotTotal, "map sizes do not match the source"});
    return vs;
  }
  for (Index a = 0; a < static_cast<Index>(obj_map.size()); ++a)
    if (bad_obj(obj_map[a]))
      vs.push_back({PunctorViolationKind::NotTotal, "object '" + source.object(a) + "' unmapped"});
  for (Index f = 0; f < static_cast<Index>(arrow_map.size()); ++f)
    if (bad_arrow(arrow_map[f]))
      vs.push_back({PunctorViolationKind::NotTotal, "arrow '" + source.arrow(f) + "' unmapped"});
  if (!vs.empty()) return vs;

  for (Index f = 0; f < static_cast<Index>(arrow_map.size()); ++f) {
    Index g = arrow_map[f];
    if (target.src(g) != obj_map[source.src(f)] || target.tgt(g) != obj_map[source.tgt(f)])
      vs.push_back({PunctorViolationKind::EndpointMismatch,
                    "'" + source.arrow(f) + "' -> '" + target.arrow(g) + "'"});
  }
  if (!vs.empty()) return vs;

  for (auto [f, g] : source.comp_domain()) {
    Index h = source.comp(f, g);
    if (target.comp(arrow_map[f], arrow_map[g]) != arrow_map[h])
      vs.push_back({PunctorViolationKind::CompositionNotPreserved,
                    "(" + source.arrow(f) + "," + source.arrow(g) + ")->" + source.arrow(h)});
  }
  return vs;
}

Punctor make_punctor(const Plot& source, const Plot& target, std::vector<Index> obj_map,
                     std::vector<Index> arrow_map) {
  auto vs = punctor_violations(source, target, obj_map, arrow_map);
  if (!vs.empty()) throw PunctorError(std::move(vs));
  return Punctor{source, target, std::move(obj_map), std::move(arrow_map)};
}

Punctor make_punctor(const Plot& source, const Plot& target,
                     const std::map<std::string, std::string>& obj_map,
                     const std::map<std::string, std::string>& arrow_map) {
  std::vector<PunctorViolation> vs;
  std::vector<Index> om(source.num_objects(), kNone);
  std::vector<Index> am(source.num_arrows(), kNone);
  for (const auto& [k, v] : obj_map) {
    auto a = source.find_object(k);
    auto b = target.find_object(v);
    if (!a || !b) {
      vs.push_back({PunctorViolationKind::UnknownId, "object pair '" + k + "' -> '" + v + "'"});
      continue;
    }
    om[*a] = *b;
  }
  for (const auto& [k, v] : arrow_map) {
    auto f = source.find_arrow(k);
    auto g = target.find_arrow(v);
    if (!f || !g) {
      vs.push_back({PunctorViolationKind::UnknownId, "arrow pair '" + k + "' -> '" + v + "'"});
      continue;
    }
    am[*f] = *g;
  }
  if (!vs.empty()) throw PunctorError(std::move(vs));
  return make_punctor(source, target, std::move(om), std::move(am));
}

Punctor identity_punctor(const Plot& p) {
  std::vector<Index> om(p.num_objects()), am(p.num_arrows());
  for (Index a = 0; a < static_cast<Index>(om.size()); ++a) om[a] = a;
  for (Index f = 0; f < static_cast<Index>(am.size()); ++f) am[f] = f;
  return Punctor{p, p, om, am};
}

bool is_functor(const Punctor& f) {
  for (Index a = 0; a < static_cast<Index>(f.source.num_objects()); ++a) {
    Index e = f.source.identity(a);
    if (e != kNone && f.target.identity(f.obj_map[a]) != f.arrow_map[e]) return false;
  }
  return true;
}

Punctor compose_punctors(const Punctor& f, const Punctor& g) {
  if (!(f.target == g.source))
    throw SourceTargetMismatch("compose: target of the first is not the source of the second");
  Punctor h{f.source, g.target, {}, {}};
  for (Index b : f.obj_map) h.obj_map.push_back(g.obj_map[b]);
  for (Index x : f.arrow_map) h.arrow_map.push_back(g.arrow_map[x]);
  return h;
}

Punctor dual_punctor(const Punctor& f) {
  // ids, and therefore indices, are unchanged by dualizing
  return Punctor{dual(f.source), dual(f.target), f.obj_map, f.arrow_map};
}

namespace {

void require_subplot(const Plot& sub, const Plot& p, const char* what) {
  auto c = is_subplot(sub, p);
  if (!c.is_subplot) throw NotASubplot(std::string(what) + ": " + c.reason);
}

std::vector<Index> objects_in(const Plot& sub, const Plot& p) {
  std::vector<Index> out;
  for (Index a = 0; a < static_cast<Index>(sub.num_objects()); ++a)
    out.push_back(p.object_index(sub.object(a)));
  return out;
}

std::vector<Index> arrows_in(const Plot& sub, const Plot& p) {
  std::vector<Index> out;
  for (Index f = 0; f < static_cast<Index>(sub.num_arrows()); ++f)
    out.push_back(p.arrow_index(sub.arrow(f)));
  return out;
}

}  // namespace

Plot image(const Punctor& f, const Plot& sub) {
  require_subplot(sub, f.source, "image");
  std::vector<Index> objs, arrs;
  for (Index a : objects_in(sub, f.source)) objs.push_back(f.obj_map[a]);
  for (Index x : arrows_in(sub, f.source)) arrs.push_back(f.arrow_map[x]);
  return relative_subplot(f.target, objs, arrs);
}

Plot inverse_image(const Punctor& f, const Plot& sub) {
  require_subplot(sub, f.target, "inverse_image");
  std::set<Index> tobjs, tarrs;
  for (Index b : objects_in(sub, f.target)) tobjs.insert(b);
  for (Index y : arrows_in(sub, f.target)) tarrs.insert(y);
  std::vector<Index> objs, arrs;
  for (Index a = 0; a < static_cast<Index>(f.obj_map.size()); ++a)
    if (tobjs.count(f.obj_map[a])) objs.push_back(a);
  for (Index x = 0; x < static_cast<Index>(f.arrow_map.size()); ++x)
    if (tarrs.count(f.arrow_map[x])) arrs.push_back(x);
  return relative_subplot(f.source, objs, arrs);
}

Punctor restrict_punctor(const Punctor& f, const Plot& sub) {
  require_subplot(sub, f.source, "restrict");
  std::vector<Index> om, am;
  for (Index a : objects_in(sub, f.source)) om.push_back(f.obj_map[a]);
  for (Index x : arrows_in(sub, f.source)) am.push_back(f.arrow_map[x]);
  return make_punctor(sub, f.target, om, am);
}

Punctor corestrict_punctor(const Punctor& f, const Plot& sub) {
  Plot pre = inverse_image(f, sub);
  std::vector<Index> om, am;
  for (Index a : objects_in(pre, f.source))
    om.push_back(sub.object_index(f.target.object(f.obj_map[a])));
  for (Index x : arrows_in(pre, f.source))
    am.push_back(sub.arrow_index(f.target.arrow(f.arrow_map[x])));
  return make_punctor(pre, sub, om, am);
}

PunctorClassReport classify_punctor(const Punctor& f, const std::optional<std::vector<Index>>& m) {
  const Plot& p = f.source;
  const Plot& q = f.target;
  PunctorClassReport r;

  r.is_unital = true;
  for (Index a = 0; a < static_cast<Index>(p.num_objects()); ++a) {
    Index e = p.identity(a);
    if (e != kNone && q.identity(f.obj_map[a]) != f.arrow_map[e]) {
      r.is_unital = false;
      r.non_identity_preserved = a;
      break;
    }
  }

  r.faithful = true;
  for (Index x = 0; x < static_cast<Index>(p.num_arrows()) && r.faithful; ++x)
    for (Index y : p.out_arrows(p.src(x)))
      if (y > x && p.tgt(y) == p.tgt(x) && f.arrow_map[x] == f.arrow_map[y]) {
        r.faithful = false;
        r.unfaithful_pair = std::make_pair(x, y);
        break;
      }

  r.full = true;
  for (Index a = 0; a < static_cast<Index>(p.num_objects()) && r.full; ++a)
    for (Index b = 0; b < static_cast<Index>(p.num_objects()) && r.full; ++b) {
      std::set<Index> hit;
      for (Index x : hom(p, a, b)) hit.insert(f.arrow_map[x]);
      for (Index y : hom(q, f.obj_map[a], f.obj_map[b]))
        if (!hit.count(y)) {
          r.full = false;
          r.unfull_witness = std::make_pair(std::make_pair(a, b), y);
          break;
        }
    }
  r.fully_faithful = r.faithful && r.full;

  r.injective_on_objects = true;
  std::vector<Index> first(q.num_objects(), kNone);
  for (Index a = 0; a < static_cast<Index>(p.num_objects()); ++a) {
    Index b = f.obj_map[a];
    if (first[b] != kNone) {
      r.injective_on_objects = false;
      r.object_collision = std::make_pair(first[b], a);
      break;
    }
    first[b] = a;
  }
  std::set<Index> hit_objects(f.obj_map.begin(), f.obj_map.end());
  r.surjective_on_objects = hit_objects.size() == q.num_objects();
  r.embedding = r.faithful && r.injective_on_objects;
  r.isomorphism = r.fully_faithful && r.injective_on_objects && r.surjective_on_objects;

  std::set<Index> hit_arrows(f.arrow_map.begin(), f.arrow_map.end());
  r.constant = hit_objects.size() <= 1 && hit_arrows.size() <= 1;
  r.coconstant = p.num_objects() == 0;

  if (m) {
    r.m_dense = true;
    for (Index b = 0; b < static_cast<Index>(q.num_objects()); ++b) {
      bool found = false;
      for (Index a : hit_objects)
        if (m_equivalent(q, *m, a, b)) {
          found = true;
          break;
        }
      if (!found) {
        r.m_dense = false;
        r.undense_object = b;
        break;
      }
    }
    r.m_equivalence = r.fully_faithful && *r.m_dense;
  }
  return r;
}

PreservesReflects preserves_reflects(const Punctor& f, const std::vector<Index>& m,
                                     const std::vector<Index>& n) {
  std::set<Index> ms(m.begin(), m.end()), ns(n.begin(), n.end());
  PreservesReflects r;
  for (Index x = 0; x < static_cast<Index>(f.arrow_map.size()); ++x) {
    bool in_m = ms.count(x) > 0;
    bool in_n = ns.count(f.arrow_map[x]) > 0;
    if (in_m && !in_n && r.preserves.holds) r.preserves = {false, x};
    if (in_n && !in_m && r.reflects.holds) r.reflects = {false, x};
  }
  return r;
}

std::size_t search_cap() {
  if (const char* env = std::getenv("PLOTKIT_SEARCH_CAP")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
  }
  return 1000000;
}

PunctorEnumeration enumerate_punctors(const Plot& p, const Plot& q, std::optional<std::size_t> cap) {
  const std::size_t limit = cap.value_or(search_cap());
  PunctorEnumeration out;
  const auto np = static_cast<Index>(p.num_objects());
  const auto na = static_cast<Index>(p.num_arrows());
  const auto nq = static_cast<Index>(q.num_objects());
  std::vector<Index> om(np, kNone), am(na, kNone);
  std::size_t visited = 0;

  // comp triples of p grouped by their last-assigned arrow, so each is
  // checked once all three arrows have images
  std::vector<std::vector<std::pair<Index, Index>>> checks(na);
  for (auto [f, g] : p.comp_domain()) {
    Index h = p.comp(f, g);
    checks[std::max({f, g, h})].emplace_back(f, g);
  }

  auto arrows = [&](auto&& self, Index x) -> bool {
    if (x == na) {
      out.punctors.push_back(Punctor{p, q, om, am});
      return true;
    }
    for (Index y : hom(q, om[p.src(x)], om[p.tgt(x)])) {
      if (++visited > limit) return false;
      am[x] = y;
      bool ok = true;
      for (auto [f, g] : checks[x])
        if (q.comp(am[f], am[g]) != am[p.comp(f, g)]) {
          ok = false;
          break;
        }
      if (ok && !self(self, x + 1)) return false;
    }
    am[x] = kNone;
    return true;
  };
  auto objects = [&](auto&& self, Index a) -> bool {
    if (a == np) return arrows(arrows, 0);
    for (Index b = 0; b < nq; ++b) {
      if (++visited > limit) return false;
      om[a] = b;
      if (!self(self, a + 1)) return false;
    }
    return true;
  };
  out.overflow = !objects(objects, 0);
  return out;
}

}  // namespace plotkit
