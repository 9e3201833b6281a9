#include "plotkit/plot.hpp"

#include <algorithm>
#include <cassert>
#include <set>

namespace plotkit {

struct Plot::Data {
  std::vector<std::string> objects;
  std::vector<std::string> arrows;
  std::vector<Index> src;
  std::vector<Index> tgt;
  std::vector<Index> table;  // arrows x arrows, row-major
  std::size_t comp_size = 0;
  std::vector<Index> identities;
  std::vector<std::vector<Index>> out;
  std::vector<std::vector<Index>> in;
};

struct PlotAccess {
  static Plot make(std::shared_ptr<const Plot::Data> d) { return Plot(std::move(d)); }
};

namespace {

std::optional<Index> find_sorted(const std::vector<std::string>& ids, std::string_view id) {
  auto it = std::lower_bound(ids.begin(), ids.end(), id);
  if (it == ids.end() || *it != id) return std::nullopt;
  return static_cast<Index>(it - ids.begin());
}

const Plot::Data& empty_data() {
  static const auto* d = new Plot::Data();
  return *d;
}

}  // namespace

std::string_view to_string(ViolationKind kind) {
  switch (kind) {
    case ViolationKind::DanglingEndpoint: return "DanglingEndpoint";
    case ViolationKind::CompOutsidePullback: return "CompOutsidePullback";
    case ViolationKind::CompEndpointMismatch: return "CompEndpointMismatch";
    case ViolationKind::DuplicateId: return "DuplicateId";
    case ViolationKind::UnknownArrow: return "UnknownArrow";
    case ViolationKind::ConflictingComp: return "ConflictingComp";
  }
  return "?";
}

static std::string join_violations(const std::vector<Violation>& vs) {
  std::string out = "invalid plot:";
  for (const auto& v : vs) {
    out += "\n  ";
    out += to_string(v.kind);
    out += ": ";
    out += v.detail;
  }
  return out;
}

ValidationError::ValidationError(std::vector<Violation> violations)
    : Error(join_violations(violations)), violations_(std::move(violations)) {}

Plot::Plot() : d_(std::shared_ptr<const Data>(&empty_data(), [](const Data*) {})) {}

std::size_t Plot::num_objects() const { return d_->objects.size(); }
std::size_t Plot::num_arrows() const { return d_->arrows.size(); }

void Plot::check_object(Index a) const {
  if (a < 0 || static_cast<std::size_t>(a) >= d_->objects.size())
    throw UnknownObject("object index out of range: " + std::to_string(a));
}

void Plot::check_arrow(Index f) const {
  if (f < 0 || static_cast<std::size_t>(f) >= d_->arrows.size())
    throw UnknownArrow("arrow index out of range: " + std::to_string(f));
}

const std::string& Plot::object(Index a) const { return d_->objects[a]; }
const std::string& Plot::arrow(Index f) const { return d_->arrows[f]; }
Index Plot::src(Index f) const { return d_->src[f]; }
Index Plot::tgt(Index f) const { return d_->tgt[f]; }

Index Plot::comp(Index f, Index g) const {
  return d_->table[static_cast<std::size_t>(f) * d_->arrows.size() + g];
}

std::size_t Plot::comp_size() const { return d_->comp_size; }

std::vector<std::pair<Index, Index>> Plot::comp_domain() const {
  std::vector<std::pair<Index, Index>> out;
  const auto n = static_cast<Index>(num_arrows());
  for (Index f = 0; f < n; ++f)
    for (Index g : d_->out[d_->tgt[f]])
      if (composable(f, g)) out.emplace_back(f, g);
  return out;
}

Index Plot::identity(Index a) const { return d_->identities[a]; }
const std::vector<Index>& Plot::out_arrows(Index a) const { return d_->out[a]; }
const std::vector<Index>& Plot::in_arrows(Index a) const { return d_->in[a]; }

std::optional<Index> Plot::find_object(std::string_view id) const {
  return find_sorted(d_->objects, id);
}

std::optional<Index> Plot::find_arrow(std::string_view id) const {
  return find_sorted(d_->arrows, id);
}

Index Plot::object_index(std::string_view id) const {
  if (auto a = find_object(id)) return *a;
  throw UnknownObject("unknown object '" + std::string(id) + "'");
}

Index Plot::arrow_index(std::string_view id) const {
  if (auto f = find_arrow(id)) return *f;
  throw UnknownArrow("unknown arrow '" + std::string(id) + "'");
}

RawPlot Plot::raw() const {
  RawPlot r;
  r.objects = d_->objects;
  for (std::size_t f = 0; f < d_->arrows.size(); ++f)
    r.arrows.push_back({d_->arrows[f], d_->objects[d_->src[f]], d_->objects[d_->tgt[f]]});
  for (auto [f, g] : comp_domain())
    r.comp.push_back({arrow(f), arrow(g), arrow(comp(f, g))});
  return r;
}

bool operator==(const Plot& a, const Plot& b) {
  if (a.d_ == b.d_) return true;
  return a.d_->objects == b.d_->objects && a.d_->arrows == b.d_->arrows &&
         a.d_->src == b.d_->src && a.d_->tgt == b.d_->tgt && a.d_->table == b.d_->table;
}

ValidationReport validate(const RawPlot& raw) {
  ValidationReport report;
  auto& vs = report.violations;

  auto d = std::make_shared<Plot::Data>();
  d->objects = raw.objects;
  std::sort(d->objects.begin(), d->objects.end());
  for (std::size_t i = 1; i < d->objects.size(); ++i)
    if (d->objects[i] == d->objects[i - 1])
      vs.push_back({ViolationKind::DuplicateId, "object '" + d->objects[i] + "'"});
  d->objects.erase(std::unique(d->objects.begin(), d->objects.end()), d->objects.end());

  std::vector<const ArrowSpec*> arrows;
  for (const auto& a : raw.arrows) arrows.push_back(&a);
  std::sort(arrows.begin(), arrows.end(),
            [](const ArrowSpec* x, const ArrowSpec* y) { return x->id < y->id; });
  for (std::size_t i = 1; i < arrows.size(); ++i)
    if (arrows[i]->id == arrows[i - 1]->id)
      vs.push_back({ViolationKind::DuplicateId, "arrow '" + arrows[i]->id + "'"});
  arrows.erase(std::unique(arrows.begin(), arrows.end(),
                           [](const ArrowSpec* x, const ArrowSpec* y) { return x->id == y->id; }),
               arrows.end());

  for (const auto* a : arrows) {
    auto s = find_sorted(d->objects, a->src);
    auto t = find_sorted(d->objects, a->tgt);
    if (!s) vs.push_back({ViolationKind::DanglingEndpoint, "src of '" + a->id + "' is '" + a->src + "'"});
    if (!t) vs.push_back({ViolationKind::DanglingEndpoint, "tgt of '" + a->id + "' is '" + a->tgt + "'"});
    d->arrows.push_back(a->id);
    d->src.push_back(s.value_or(kNone));
    d->tgt.push_back(t.value_or(kNone));
  }

  const std::size_t n = d->arrows.size();
  d->table.assign(n * n, kNone);
  for (const auto& c : raw.comp) {
    const std::string triple = "(" + c.f + "," + c.g + ")->" + c.h;
    auto f = find_sorted(d->arrows, c.f);
    auto g = find_sorted(d->arrows, c.g);
    auto h = find_sorted(d->arrows, c.h);
    if (!f || !g || !h) {
      vs.push_back({ViolationKind::UnknownArrow, "comp triple " + triple});
      continue;
    }
    if (d->tgt[*f] == kNone || d->src[*g] == kNone || d->src[*h] == kNone || d->tgt[*h] == kNone)
      continue;  // already reported as dangling
    if (d->tgt[*f] != d->src[*g]) {
      vs.push_back({ViolationKind::CompOutsidePullback, "comp triple " + triple});
      continue;
    }
    if (d->src[*h] != d->src[*f] || d->tgt[*h] != d->tgt[*g]) {
      vs.push_back({ViolationKind::CompEndpointMismatch, "comp triple " + triple});
      continue;
    }
    Index& cell = d->table[static_cast<std::size_t>(*f) * n + *g];
    if (cell != kNone && cell != *h) {
      vs.push_back({ViolationKind::ConflictingComp,
                    "comp triple " + triple + " conflicts with ->" + d->arrows[cell]});
      continue;
    }
    if (cell == kNone) ++d->comp_size;
    cell = *h;
  }

  if (!vs.empty()) return report;

  d->out.assign(d->objects.size(), {});
  d->in.assign(d->objects.size(), {});
  for (std::size_t f = 0; f < n; ++f) {
    d->out[d->src[f]].push_back(static_cast<Index>(f));
    d->in[d->tgt[f]].push_back(static_cast<Index>(f));
  }
  d->identities.assign(d->objects.size(), kNone);
  Plot p = PlotAccess::make(d);
  d->identities = compute_identities(p);
  report.plot = std::move(p);
  return report;
}

Plot make_plot(const RawPlot& raw) {
  auto r = validate(raw);
  if (!r.ok()) throw ValidationError(std::move(r.violations));
  return std::move(*r.plot);
}

std::vector<Index> compute_identities(const Plot& p) {
  std::vector<Index> ids(p.num_objects(), kNone);
  for (Index a = 0; a < static_cast<Index>(p.num_objects()); ++a) {
    for (Index e : p.out_arrows(a)) {
      if (p.tgt(e) != a) continue;
      bool neutral = true;
      for (Index f : p.in_arrows(a))
        if (p.comp(f, e) != f) { neutral = false; break; }
      if (neutral)
        for (Index g : p.out_arrows(a))
          if (p.comp(e, g) != g) { neutral = false; break; }
      if (!neutral) continue;
      // two neutral loops e, e' would give e = e.e' = e'
      assert(ids[a] == kNone && "two local identities at one object");
      ids[a] = e;
    }
  }
  return ids;
}

Plot dual(const Plot& p) {
  RawPlot r;
  r.objects.reserve(p.num_objects());
  for (Index a = 0; a < static_cast<Index>(p.num_objects()); ++a) r.objects.push_back(p.object(a));
  for (Index f = 0; f < static_cast<Index>(p.num_arrows()); ++f)
    r.arrows.push_back({p.arrow(f), p.object(p.tgt(f)), p.object(p.src(f))});
  for (auto [f, g] : p.comp_domain()) r.comp.push_back({p.arrow(g), p.arrow(f), p.arrow(p.comp(f, g))});
  return make_plot(r);
}

std::vector<Index> hom(const Plot& p, std::optional<Index> source, std::optional<Index> target) {
  if (source) p.check_object(*source);
  if (target) p.check_object(*target);
  std::vector<Index> out;
  if (source) {
    for (Index f : p.out_arrows(*source))
      if (!target || p.tgt(f) == *target) out.push_back(f);
  } else if (target) {
    out = p.in_arrows(*target);
  } else {
    for (Index f = 0; f < static_cast<Index>(p.num_arrows()); ++f) out.push_back(f);
  }
  return out;
}

std::vector<Index> hom_into_composable(const Plot& p, Index f) {
  p.check_arrow(f);
  std::vector<Index> out;
  for (Index g : p.in_arrows(p.src(f)))
    if (p.composable(g, f)) out.push_back(g);
  return out;
}

std::vector<Index> hom_from_composable(const Plot& p, Index f) {
  p.check_arrow(f);
  std::vector<Index> out;
  for (Index g : p.out_arrows(p.tgt(f)))
    if (p.composable(f, g)) out.push_back(g);
  return out;
}

bool Representation::injective() const {
  std::set<Index> seen(values.begin(), values.end());
  return seen.size() == values.size();
}

bool Representation::surjective() const {
  std::set<Index> seen(values.begin(), values.end());
  return std::all_of(codomain.begin(), codomain.end(), [&](Index g) { return seen.count(g) > 0; });
}

bool Representation::constant() const {
  return std::adjacent_find(values.begin(), values.end(), std::not_equal_to<>()) == values.end();
}

std::optional<Index> Representation::at(Index g) const {
  auto it = std::lower_bound(domain.begin(), domain.end(), g);
  if (it == domain.end() || *it != g) return std::nullopt;
  return values[it - domain.begin()];
}

Representation regular_representation(const Plot& p, Index f, Side side) {
  Representation r;
  if (side == Side::Right) {
    r.domain = hom_into_composable(p, f);
    for (Index g : r.domain) r.values.push_back(p.comp(g, f));
    r.codomain = p.in_arrows(p.tgt(f));
  } else {
    r.domain = hom_from_composable(p, f);
    for (Index g : r.domain) r.values.push_back(p.comp(f, g));
    r.codomain = p.out_arrows(p.src(f));
  }
  return r;
}

Degree degree(const Plot& p, Index a) {
  p.check_object(a);
  Degree d;
  d.in = p.in_arrows(a).size();
  d.out = p.out_arrows(a).size();
  d.total = d.in + d.out;
  return d;
}

std::vector<Index> arrow_indices(const Plot& p, const std::vector<std::string>& ids) {
  std::vector<Index> out;
  for (const auto& id : ids) out.push_back(p.arrow_index(id));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<std::string> arrow_ids(const Plot& p, const std::vector<Index>& fs) {
  std::vector<std::string> out;
  for (Index f : fs) out.push_back(p.arrow(f));
  return out;
}

}  // namespace plotkit
