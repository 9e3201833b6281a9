#include "plotkit/limits.hpp"

#include "plotkit/constructions.hpp"
#include "plotkit/walks.hpp"

namespace plotkit {

Index Diagram::flat_image(Index shape_arrow) const {
  return flat.arrow_index(into().arrow(functor.arrow_map[shape_arrow]));
}

Diagram make_diagram(const Punctor& d) {
  if (d.source.comp_size() != 0) throw InvalidDiagram("diagram shape is not a quiver");
  return Diagram{d, conditional_unitize(d.target)};
}

Diagram dual_diagram(const Diagram& d) {
  // flat(P^op) is flat(P)^op with the same ids
  return Diagram{dual_punctor(d.functor), dual(d.flat)};
}

std::optional<std::string> cone_violation(const Diagram& d, const Cone& c) {
  const Plot& j = d.shape();
  const Plot& f = d.flat;
  if (c.apex < 0 || c.apex >= static_cast<Index>(f.num_objects())) return "apex out of range";
  if (c.legs.size() != j.num_objects()) return "one leg per shape object required";
  for (Index a = 0; a < static_cast<Index>(j.num_objects()); ++a) {
    Index leg = c.legs[a];
    if (leg < 0 || leg >= static_cast<Index>(f.num_arrows())) return "leg out of range";
    if (f.src(leg) != c.apex || f.tgt(leg) != d.functor.obj_map[a])
      return "leg at '" + j.object(a) + "' is not apex -> D(" + j.object(a) + ")";
  }
  for (Index x = 0; x < static_cast<Index>(j.num_arrows()); ++x) {
    Index h = f.comp(c.legs[j.src(x)], d.flat_image(x));
    if (h == kNone || h != c.legs[j.tgt(x)])
      return "cone does not commute with '" + j.arrow(x) + "'";
  }
  return std::nullopt;
}

bool check_cone(const Diagram& d, const Cone& c) { return !cone_violation(d, c).has_value(); }

std::vector<Cone> enumerate_cones(const Diagram& d, std::optional<std::size_t> cap) {
  const std::size_t limit = cap.value_or(search_cap());
  const Plot& j = d.shape();
  const Plot& f = d.flat;
  std::vector<Cone> out;
  std::size_t visited = 0;
  for (Index apex = 0; apex < static_cast<Index>(f.num_objects()); ++apex) {
    Cone c{apex, std::vector<Index>(j.num_objects(), kNone)};
    auto rec = [&](auto&& self, Index a) -> void {
      if (a == static_cast<Index>(j.num_objects())) {
        if (check_cone(d, c)) out.push_back(c);
        return;
      }
      for (Index leg : hom(f, apex, d.functor.obj_map[a])) {
        if (++visited > limit) throw Overflow("cone enumeration exceeded the search cap");
        c.legs[a] = leg;
        self(self, a + 1);
      }
    };
    rec(rec, 0);
  }
  return out;
}

std::string_view to_string(LimitLabel label) {
  switch (label) {
    case LimitLabel::Strong: return "strong";
    case LimitLabel::WeakOnly: return "weak_only";
    case LimitLabel::SublimitOnly: return "sublimit_only";
    case LimitLabel::None: return "none";
    case LimitLabel::Inconclusive: return "inconclusive";
  }
  return "?";
}

namespace {

Competitor mediators(const Diagram& d, const Cone& limit, const Cone& other,
                     const std::vector<Index>& m, std::size_t max_len) {
  const Plot& f = d.flat;
  Competitor out{other, std::nullopt, 0, false, std::nullopt};
  auto mediates = [&](Index v) {
    for (std::size_t x = 0; x < limit.legs.size(); ++x)
      if (f.comp(v, limit.legs[x]) != other.legs[x]) return false;
    return true;
  };
  for (std::size_t len = 1; len <= max_len; ++len) {
    for (const auto& path : m_paths(f, m, other.apex, limit.apex, len))
      for (auto [v, n] : evaluation_counts(f, path))
        if (mediates(v)) {
          if (!out.witness) out.witness = MFactorization{path, *paren_with_value(f, path, v)};
          out.count += n;
        }
    if (out.count > 0) {
      out.min_length = len;
      return out;
    }
  }
  // every factorization evaluates to an arrow other.apex -> limit.apex
  bool candidate = false;
  for (Index v : hom(f, other.apex, limit.apex)) candidate |= mediates(v);
  auto longest = longest_m_path(f, m, other.apex, limit.apex);
  out.none_exist = !candidate || (longest.has_value() && *longest <= max_len);
  return out;
}

}  // namespace

LimitReport classify_limit(const Diagram& d, const Cone& limit, const std::vector<Index>& m,
                           std::size_t max_len) {
  if (auto why = cone_violation(d, limit)) throw InvalidCone(*why);
  for (Index f : m) d.flat.check_arrow(f);
  LimitReport r;
  bool all_found = true, any_none = false, any_many = false, any_open = false;
  for (const auto& other : enumerate_cones(d)) {
    Competitor c = mediators(d, limit, other, m, max_len);
    if (c.count == 0) {
      all_found = false;
      if (c.none_exist)
        any_none = true;
      else
        any_open = true;
    }
    if (c.count > 1) any_many = true;
    r.competitors.push_back(std::move(c));
  }
  if (all_found) r.weak = true;
  else if (any_none) r.weak = false;
  if (any_many) r.sub = false;
  else if (!any_open) r.sub = true;

  if (r.weak && r.sub) {
    if (*r.weak && *r.sub) r.label = LimitLabel::Strong;
    else if (*r.weak) r.label = LimitLabel::WeakOnly;
    else if (*r.sub) r.label = LimitLabel::SublimitOnly;
    else r.label = LimitLabel::None;
  }
  return r;
}

LimitReport classify_colimit(const Diagram& d, const Cone& colimit, const std::vector<Index>& m,
                             std::size_t max_len) {
  return classify_limit(dual_diagram(d), colimit, m, max_len);
}

}  // namespace plotkit
