#include "plotkit/constructions.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "plotkit/subplots.hpp"

namespace plotkit {

std::string unit_id(std::string_view marker, std::string_view object) {
  return std::string(marker) + std::string(object);
}

std::string fresh_marker(const Plot& p) {
  std::string marker(kUnitMarker);
  for (;;) {
    bool clash = false;
    for (Index a = 0; a < static_cast<Index>(p.num_objects()) && !clash; ++a)
      clash = p.find_arrow(unit_id(marker, p.object(a))).has_value();
    if (!clash) return marker;
    marker += kUnitMarker;
  }
}

namespace {

Plot unitize_at(const Plot& p, std::string_view marker, const std::vector<bool>& at) {
  RawPlot r = p.raw();
  for (Index a = 0; a < static_cast<Index>(p.num_objects()); ++a) {
    if (!at[a]) continue;
    const std::string& obj = p.object(a);
    const std::string u = unit_id(marker, obj);
    r.arrows.push_back({u, obj, obj});
    r.comp.push_back({u, u, u});
    for (Index g : p.out_arrows(a)) r.comp.push_back({u, p.arrow(g), p.arrow(g)});
    for (Index f : p.in_arrows(a)) r.comp.push_back({p.arrow(f), u, p.arrow(f)});
  }
  return make_plot(r);
}

Index index_in(const Plot& big, const Plot& small, Index f) {
  return big.arrow_index(small.arrow(f));
}

}  // namespace

Plot force_unitize(const Plot& p, std::string_view marker) {
  return unitize_at(p, marker, std::vector<bool>(p.num_objects(), true));
}

Plot conditional_unitize(const Plot& p, std::string_view marker) {
  std::vector<bool> at(p.num_objects());
  for (Index a = 0; a < static_cast<Index>(p.num_objects()); ++a) at[a] = !p.is_unital_object(a);
  return unitize_at(p, marker, at);
}

Plot deunitize(const Plot& p) {
  std::vector<Index> objs, arrs;
  for (Index a = 0; a < static_cast<Index>(p.num_objects()); ++a) objs.push_back(a);
  for (Index f = 0; f < static_cast<Index>(p.num_arrows()); ++f)
    if (p.identity(p.src(f)) != f) arrs.push_back(f);
  return relative_subplot(p, objs, arrs);
}

Punctor unitization_unit(const Plot& p, std::string_view marker) {
  Plot pn = force_unitize(p, marker);
  std::vector<Index> om, am;
  for (Index a = 0; a < static_cast<Index>(p.num_objects()); ++a) om.push_back(a);
  for (Index f = 0; f < static_cast<Index>(p.num_arrows()); ++f) am.push_back(index_in(pn, p, f));
  return make_punctor(p, pn, om, am);
}

Punctor unitization_counit(const Plot& q, std::string_view marker) {
  for (Index a = 0; a < static_cast<Index>(q.num_objects()); ++a)
    if (!q.is_unital_object(a)) throw NotUnital("object '" + q.object(a) + "' has no local identity");
  Plot qn = force_unitize(q, marker);
  std::vector<Index> om, am;
  for (Index a = 0; a < static_cast<Index>(q.num_objects()); ++a) om.push_back(a);
  for (Index f = 0; f < static_cast<Index>(qn.num_arrows()); ++f) {
    auto g = q.find_arrow(qn.arrow(f));
    am.push_back(g ? *g : q.identity(qn.src(f)));
  }
  return make_punctor(qn, q, om, am);
}

Punctor unitize_punctor(const Punctor& f, std::string_view source_marker,
                        std::string_view target_marker) {
  Plot pn = force_unitize(f.source, source_marker);
  Plot qn = force_unitize(f.target, target_marker);
  std::vector<Index> am(pn.num_arrows(), kNone);
  for (Index a = 0; a < static_cast<Index>(f.source.num_objects()); ++a) {
    Index u = pn.arrow_index(unit_id(source_marker, f.source.object(a)));
    am[u] = qn.arrow_index(unit_id(target_marker, f.target.object(f.obj_map[a])));
  }
  for (Index x = 0; x < static_cast<Index>(f.source.num_arrows()); ++x)
    am[index_in(pn, f.source, x)] = index_in(qn, f.target, f.arrow_map[x]);
  return make_punctor(pn, qn, f.obj_map, am);
}

AdjunctionCheck check_unitization_adjunction(const Plot& p, const Plot& q) {
  for (Index a = 0; a < static_cast<Index>(q.num_objects()); ++a)
    if (!q.is_unital_object(a)) throw NotUnital("object '" + q.object(a) + "' has no local identity");
  AdjunctionCheck r;

  const std::string m1 = fresh_marker(p);
  Plot pn = force_unitize(p, m1);
  const std::string m2 = fresh_marker(pn);
  Punctor eta = unitization_unit(p, m1);
  Punctor l_eta = unitize_punctor(eta, m1, m2);
  Punctor eps = unitization_counit(pn, m2);
  if (!(compose_punctors(l_eta, eps) == identity_punctor(pn))) {
    r.holds = false;
    r.failing = "1_L(P) = eps_L(P) o L(eta_P)";
    return r;
  }

  const std::string mq = fresh_marker(q);
  Punctor eta_q = unitization_unit(q, mq);
  Punctor eps_q = unitization_counit(q, mq);
  if (!(compose_punctors(eta_q, eps_q) == identity_punctor(q))) {
    r.holds = false;
    r.failing = "1_I(Q) = I(eps_Q) o eta_I(Q)";
  }
  return r;
}

std::string tuple_id(const std::vector<std::string>& parts) {
  std::string out = "(";
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += ',';
    out += parts[i];
  }
  return out + ")";
}

namespace {

// Odometer over the product of ranges [0, sizes[i]).
bool next_tuple(std::vector<Index>& t, const std::vector<std::size_t>& sizes) {
  for (std::size_t i = t.size(); i-- > 0;) {
    if (static_cast<std::size_t>(++t[i]) < sizes[i]) return true;
    t[i] = 0;
  }
  return false;
}

std::vector<std::vector<Index>> all_tuples(const std::vector<std::size_t>& sizes) {
  std::vector<std::vector<Index>> out;
  if (sizes.empty()) return out;  // zero factors: nothing, not one empty tuple
  for (auto s : sizes)
    if (s == 0) return out;
  std::vector<Index> t(sizes.size(), 0);
  do out.push_back(t);
  while (next_tuple(t, sizes));
  return out;
}

}  // namespace

ProductResult product(const std::vector<Plot>& plots) {
  std::vector<std::size_t> no, na;
  for (const auto& p : plots) {
    no.push_back(p.num_objects());
    na.push_back(p.num_arrows());
  }
  auto otuples = all_tuples(no);
  auto atuples = all_tuples(na);
  auto oname = [&](const std::vector<Index>& t) {
    std::vector<std::string> parts;
    for (std::size_t i = 0; i < t.size(); ++i) parts.push_back(plots[i].object(t[i]));
    return tuple_id(parts);
  };
  auto aname = [&](const std::vector<Index>& t) {
    std::vector<std::string> parts;
    for (std::size_t i = 0; i < t.size(); ++i) parts.push_back(plots[i].arrow(t[i]));
    return tuple_id(parts);
  };

  RawPlot r;
  for (const auto& t : otuples) r.objects.push_back(oname(t));
  for (const auto& t : atuples) {
    std::vector<Index> s, u;
    for (std::size_t i = 0; i < t.size(); ++i) {
      s.push_back(plots[i].src(t[i]));
      u.push_back(plots[i].tgt(t[i]));
    }
    r.arrows.push_back({aname(t), oname(s), oname(u)});
  }
  // composable pairs are exactly the componentwise composable ones
  std::vector<std::vector<std::pair<Index, Index>>> doms;
  std::vector<std::size_t> dsize;
  for (const auto& p : plots) {
    doms.push_back(p.comp_domain());
    dsize.push_back(doms.back().size());
  }
  for (const auto& t : all_tuples(dsize)) {
    std::vector<Index> f, g, h;
    for (std::size_t i = 0; i < t.size(); ++i) {
      auto [x, y] = doms[i][t[i]];
      f.push_back(x);
      g.push_back(y);
      h.push_back(plots[i].comp(x, y));
    }
    r.comp.push_back({aname(f), aname(g), aname(h)});
  }

  ProductResult out{make_plot(r), {}};
  for (std::size_t i = 0; i < plots.size(); ++i) {
    std::vector<Index> om(out.plot.num_objects()), am(out.plot.num_arrows());
    for (const auto& t : otuples) om[out.plot.object_index(oname(t))] = t[i];
    for (const auto& t : atuples) am[out.plot.arrow_index(aname(t))] = t[i];
    out.projections.push_back(make_punctor(out.plot, plots[i], om, am));
  }
  return out;
}

Punctor pair_into_product(const std::vector<Punctor>& fs) {
  if (fs.empty()) throw FactorMismatch("pairing needs at least one punctor");
  for (const auto& f : fs)
    if (!(f.source == fs[0].source)) throw FactorMismatch("punctors do not share a source");
  std::vector<Plot> targets;
  for (const auto& f : fs) targets.push_back(f.target);
  ProductResult prod = product(targets);
  const Plot& src = fs[0].source;
  std::vector<Index> om, am;
  for (Index a = 0; a < static_cast<Index>(src.num_objects()); ++a) {
    std::vector<std::string> parts;
    for (const auto& f : fs) parts.push_back(f.target.object(f.obj_map[a]));
    om.push_back(prod.plot.object_index(tuple_id(parts)));
  }
  for (Index x = 0; x < static_cast<Index>(src.num_arrows()); ++x) {
    std::vector<std::string> parts;
    for (const auto& f : fs) parts.push_back(f.target.arrow(f.arrow_map[x]));
    am.push_back(prod.plot.arrow_index(tuple_id(parts)));
  }
  return make_punctor(src, prod.plot, om, am);
}

std::string tagged_id(std::string_view id, std::size_t index) {
  return std::string(id) + "#" + std::to_string(index);
}

CoproductResult coproduct(const std::vector<Plot>& plots) {
  RawPlot r;
  for (std::size_t i = 0; i < plots.size(); ++i) {
    RawPlot part = plots[i].raw();
    for (const auto& o : part.objects) r.objects.push_back(tagged_id(o, i));
    for (const auto& a : part.arrows)
      r.arrows.push_back({tagged_id(a.id, i), tagged_id(a.src, i), tagged_id(a.tgt, i)});
    for (const auto& c : part.comp)
      r.comp.push_back({tagged_id(c.f, i), tagged_id(c.g, i), tagged_id(c.h, i)});
  }
  CoproductResult out{make_plot(r), {}};
  for (std::size_t i = 0; i < plots.size(); ++i) {
    const Plot& p = plots[i];
    std::vector<Index> om, am;
    for (Index a = 0; a < static_cast<Index>(p.num_objects()); ++a)
      om.push_back(out.plot.object_index(tagged_id(p.object(a), i)));
    for (Index f = 0; f < static_cast<Index>(p.num_arrows()); ++f)
      am.push_back(out.plot.arrow_index(tagged_id(p.arrow(f), i)));
    out.injections.push_back(make_punctor(p, out.plot, om, am));
  }
  return out;
}

Punctor copair_from_coproduct(const std::vector<Punctor>& fs) {
  for (const auto& f : fs)
    if (!(f.target == fs[0].target)) throw FactorMismatch("punctors do not share a target");
  std::vector<Plot> sources;
  for (const auto& f : fs) sources.push_back(f.source);
  CoproductResult co = coproduct(sources);
  const Plot target = fs.empty() ? Plot() : fs[0].target;
  std::vector<Index> om(co.plot.num_objects()), am(co.plot.num_arrows());
  for (std::size_t i = 0; i < fs.size(); ++i) {
    const auto& k = co.injections[i];
    for (Index a = 0; a < static_cast<Index>(k.obj_map.size()); ++a) om[k.obj_map[a]] = fs[i].obj_map[a];
    for (Index x = 0; x < static_cast<Index>(k.arrow_map.size()); ++x)
      am[k.arrow_map[x]] = fs[i].arrow_map[x];
  }
  return make_punctor(co.plot, target, om, am);
}

Plot augment(const Plot& p, const std::vector<std::string>& index_set,
             const std::map<std::pair<std::string, std::string>, std::string>& zeta) {
  std::vector<std::string> idx(index_set);
  std::sort(idx.begin(), idx.end());
  idx.erase(std::unique(idx.begin(), idx.end()), idx.end());
  const std::string bottom = "_";
  auto is_id = [&](Index f) { return p.identity(p.src(f)) == f; };
  // classes: (f, i) for non-identities, (e, bottom) for identities
  auto name = [&](Index f, const std::string& i) { return tuple_id({p.arrow(f), i}); };
  auto indices_of = [&](Index f) {
    return is_id(f) ? std::vector<std::string>{bottom} : idx;
  };
  auto zeta_of = [&](const std::string& i, const std::string& j) -> std::optional<std::string> {
    if (i == bottom) return j;
    if (j == bottom) return i;
    auto it = zeta.find({i, j});
    if (it == zeta.end()) return std::nullopt;
    return it->second;
  };

  RawPlot r;
  for (Index a = 0; a < static_cast<Index>(p.num_objects()); ++a) r.objects.push_back(p.object(a));
  if (idx.empty()) return make_plot(r);
  for (const auto& [k, v] : zeta)
    if (!std::binary_search(idx.begin(), idx.end(), v) ||
        !std::binary_search(idx.begin(), idx.end(), k.first) ||
        !std::binary_search(idx.begin(), idx.end(), k.second))
      throw Error("augment: zeta mentions an index outside the index set");
  for (Index f = 0; f < static_cast<Index>(p.num_arrows()); ++f)
    for (const auto& i : indices_of(f))
      r.arrows.push_back({name(f, i), p.object(p.src(f)), p.object(p.tgt(f))});
  for (auto [f, g] : p.comp_domain()) {
    Index h = p.comp(f, g);
    for (const auto& i : indices_of(f))
      for (const auto& j : indices_of(g)) {
        auto k = zeta_of(i, j);
        if (!k) continue;
        r.comp.push_back({name(f, i), name(g, j), name(h, is_id(h) ? bottom : *k)});
      }
  }
  return make_plot(r);
}

std::vector<std::string> nt_violations(const Punctor& from, const Punctor& to,
                                       const Plot& flat, const std::vector<Index>& comps) {
  std::vector<std::string> out;
  const Plot& p = from.source;
  if (comps.size() != p.num_objects()) {
    out.push_back("component count differs from the number of source objects");
    return out;
  }
  for (Index a = 0; a < static_cast<Index>(p.num_objects()); ++a) {
    Index e = comps[a];
    if (e < 0 || e >= static_cast<Index>(flat.num_arrows())) {
      out.push_back("component at '" + p.object(a) + "' missing");
      continue;
    }
    if (flat.src(e) != from.obj_map[a] || flat.tgt(e) != to.obj_map[a])
      out.push_back("component at '" + p.object(a) + "' is not in hom(F A, G A)");
  }
  if (!out.empty()) return out;
  const Plot& q = from.target;
  for (Index f = 0; f < static_cast<Index>(p.num_arrows()); ++f) {
    Index ff = flat.arrow_index(q.arrow(from.arrow_map[f]));
    Index gf = flat.arrow_index(q.arrow(to.arrow_map[f]));
    Index lhs = flat.comp(ff, comps[p.tgt(f)]);
    Index rhs = flat.comp(comps[p.src(f)], gf);
    if (lhs == kNone || rhs == kNone || lhs != rhs)
      out.push_back("naturality fails at '" + p.arrow(f) + "'");
  }
  return out;
}

static void require_parallel(const Punctor& from, const Punctor& to) {
  if (!(from.source == to.source) || !(from.target == to.target))
    throw NotParallel("punctors are not parallel");
}

NaturalTransformation make_nt(const Punctor& from, const Punctor& to,
                              const std::vector<Index>& components) {
  require_parallel(from, to);
  Plot flat = conditional_unitize(from.target);
  auto vs = nt_violations(from, to, flat, components);
  if (!vs.empty()) {
    std::string msg = "not a natural transformation:";
    for (const auto& v : vs) msg += "\n  " + v;
    throw NotNatural(msg);
  }
  return NaturalTransformation{from, to, flat, components};
}

NaturalTransformation make_nt(const Punctor& from, const Punctor& to,
                              const std::map<std::string, std::string>& components) {
  require_parallel(from, to);
  Plot flat = conditional_unitize(from.target);
  std::vector<Index> comps(from.source.num_objects(), kNone);
  for (const auto& [k, v] : components) {
    auto a = from.source.find_object(k);
    auto e = flat.find_arrow(v);
    if (!a) throw UnknownObject("unknown object '" + k + "'");
    if (!e) throw UnknownArrow("unknown arrow '" + v + "'");
    comps[*a] = *e;
  }
  return make_nt(from, to, comps);
}

NaturalTransformation identity_nt(const Punctor& f) {
  Plot flat = conditional_unitize(f.target);
  std::vector<Index> comps;
  for (Index b : f.obj_map) comps.push_back(flat.identity(b));
  return make_nt(f, f, comps);
}

std::optional<NaturalTransformation> compose_nt(const NaturalTransformation& e,
                                                const NaturalTransformation& h) {
  if (!(e.to == h.from)) throw NotParallel("composite: codomain of the first is not the domain of the second");
  std::vector<Index> comps;
  for (std::size_t a = 0; a < e.components.size(); ++a) {
    Index c = e.target_flat.comp(e.components[a], h.components[a]);
    if (c == kNone) return std::nullopt;
    comps.push_back(c);
  }
  if (!nt_violations(e.from, h.to, e.target_flat, comps).empty()) return std::nullopt;
  return NaturalTransformation{e.from, h.to, e.target_flat, comps};
}

std::vector<NaturalTransformation> enumerate_nts(const Punctor& from, const Punctor& to,
                                                 std::optional<std::size_t> cap) {
  require_parallel(from, to);
  const std::size_t limit = cap.value_or(search_cap());
  Plot flat = conditional_unitize(from.target);
  const Plot& p = from.source;
  const auto n = static_cast<Index>(p.num_objects());
  std::vector<Index> comps(n, kNone);
  std::vector<NaturalTransformation> out;
  std::size_t visited = 0;
  auto rec = [&](auto&& self, Index a) -> void {
    if (a == n) {
      if (nt_violations(from, to, flat, comps).empty())
        out.push_back(NaturalTransformation{from, to, flat, comps});
      return;
    }
    for (Index e : hom(flat, from.obj_map[a], to.obj_map[a])) {
      if (++visited > limit) throw Overflow("natural transformation enumeration exceeded the search cap");
      comps[a] = e;
      self(self, a + 1);
    }
    comps[a] = kNone;
  };
  rec(rec, 0);
  return out;
}

PunctorPlot punctor_plot(const Plot& p, const Plot& q, const std::optional<std::vector<Punctor>>& punctors,
                         std::optional<std::size_t> cap) {
  PunctorPlot out;
  if (punctors) {
    out.punctors = *punctors;
  } else {
    auto e = enumerate_punctors(p, q, cap);
    if (e.overflow) throw Overflow("punctor enumeration exceeded the search cap");
    out.punctors = std::move(e.punctors);
  }
  for (const auto& f : out.punctors)
    if (!(f.source == p) || !(f.target == q)) throw NotParallel("listed punctor is not P -> Q");

  RawPlot r;
  const auto np = out.punctors.size();
  auto fname = [](std::size_t i) { return "F" + std::to_string(i); };
  for (std::size_t i = 0; i < np; ++i) r.objects.push_back(fname(i));
  struct Entry {
    std::size_t from, to;
    std::string id;
  };
  std::vector<Entry> entries;
  std::vector<NaturalTransformation> nts;
  for (std::size_t i = 0; i < np; ++i)
    for (std::size_t j = 0; j < np; ++j) {
      auto list = enumerate_nts(out.punctors[i], out.punctors[j], cap);
      for (std::size_t k = 0; k < list.size(); ++k) {
        entries.push_back({i, j, fname(i) + "=>" + fname(j) + "#" + std::to_string(k)});
        nts.push_back(std::move(list[k]));
      }
    }
  for (const auto& e : entries) r.arrows.push_back({e.id, fname(e.from), fname(e.to)});
  for (std::size_t x = 0; x < nts.size(); ++x)
    for (std::size_t y = 0; y < nts.size(); ++y) {
      if (entries[x].to != entries[y].from) continue;
      auto c = compose_nt(nts[x], nts[y]);
      if (!c) continue;
      for (std::size_t z = 0; z < nts.size(); ++z)
        if (entries[z].from == entries[x].from && entries[z].to == entries[y].to &&
            nts[z].components == c->components) {
          r.comp.push_back({entries[x].id, entries[y].id, entries[z].id});
          break;
        }
    }
  out.plot = make_plot(r);
  out.transformations.resize(nts.size());
  for (std::size_t x = 0; x < nts.size(); ++x)
    out.transformations[out.plot.arrow_index(entries[x].id)] = nts[x];
  return out;
}

}  // namespace plotkit
