#include "plotkit/arrows.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <string>

#include "plotkit/subplots.hpp"

namespace plotkit {

std::vector<std::pair<std::string_view, bool>> ArrowClass::flags() const {
  return {
      {"monic", monic},
      {"epic", epic},
      {"cancellative", cancellative},
      {"left_split", left_split},
      {"right_split", right_split},
      {"split", split},
      {"left_invertible", left_invertible},
      {"right_invertible", right_invertible},
      {"invertible", invertible},
      {"strongly_invertible", strongly_invertible},
      {"left_iso", left_iso},
      {"right_iso", right_iso},
      {"iso", iso},
      {"automorphism", automorphism},
      {"left_neutral", left_neutral},
      {"right_neutral", right_neutral},
      {"neutral", neutral},
      {"left_identity", left_identity},
      {"right_identity", right_identity},
      {"local_identity", local_identity},
      {"constant", constant},
      {"coconstant", coconstant},
      {"opaque", opaque},
      {"transparent", transparent},
      {"singular", singular},
      {"regular", regular},
      {"endomorphism", endomorphism},
  };
}

std::string_view mirror_flag(std::string_view name) {
  static const std::map<std::string_view, std::string_view> swaps = {
      {"monic", "epic"},
      {"epic", "monic"},
      {"left_split", "right_split"},
      {"right_split", "left_split"},
      {"left_invertible", "right_invertible"},
      {"right_invertible", "left_invertible"},
      {"left_iso", "right_iso"},
      {"right_iso", "left_iso"},
      {"left_neutral", "right_neutral"},
      {"right_neutral", "left_neutral"},
      {"left_identity", "right_identity"},
      {"right_identity", "left_identity"},
      {"constant", "coconstant"},
      {"coconstant", "constant"},
  };
  auto it = swaps.find(name);
  return it == swaps.end() ? name : it->second;
}

Inverses inverses(const Plot& p, Index f) {
  p.check_arrow(f);
  Inverses r;
  const Index a = p.src(f);
  const Index b = p.tgt(f);
  const Index ia = p.identity(a);
  const Index ib = p.identity(b);
  for (Index g : p.out_arrows(b)) {
    if (p.tgt(g) != a) continue;
    if (ia != kNone && p.comp(f, g) == ia) r.right.push_back(g);
    if (ib != kNone && p.comp(g, f) == ib) r.left.push_back(g);
  }
  if (r.left.size() == 1 && r.right.size() == 1 && r.left[0] == r.right[0]) r.strong = r.left[0];
  return r;
}

ArrowClass classify_arrow(const Plot& p, Index f) {
  p.check_arrow(f);
  ArrowClass c;
  const Index a = p.src(f);
  const Index b = p.tgt(f);
  const auto rho = regular_representation(p, f, Side::Right);
  const auto lambda = regular_representation(p, f, Side::Left);

  c.monic = rho.injective();
  c.epic = lambda.injective();
  c.cancellative = c.monic && c.epic;
  c.right_split = rho.surjective();
  c.left_split = lambda.surjective();
  c.split = c.left_split && c.right_split;

  auto inv = inverses(p, f);
  c.left_inverses = inv.left;
  c.right_inverses = inv.right;
  c.strong_inverse = inv.strong;
  c.left_invertible = !inv.left.empty();
  c.right_invertible = !inv.right.empty();
  c.invertible = c.left_invertible && c.right_invertible;
  c.strongly_invertible = inv.strong.has_value();

  c.right_iso = c.monic && c.right_split;
  c.left_iso = c.epic && c.left_split;
  c.iso = c.cancellative && c.split;
  c.endomorphism = a == b;
  c.automorphism = c.iso && c.endomorphism;

  if (c.endomorphism) {
    // left neutral: f.g = g on hom(A restricted to f, -); right neutral dually
    c.left_neutral = std::equal(lambda.domain.begin(), lambda.domain.end(), lambda.values.begin());
    c.right_neutral = std::equal(rho.domain.begin(), rho.domain.end(), rho.values.begin());
    c.neutral = c.left_neutral && c.right_neutral;
    c.left_identity = c.left_neutral && lambda.domain == p.out_arrows(a);
    c.right_identity = c.right_neutral && rho.domain == p.in_arrows(a);
  }
  c.local_identity = p.identity(a) == f;

  c.constant = rho.constant();
  c.coconstant = lambda.constant();
  c.opaque = !c.monic && !c.epic;
  c.transparent = !c.opaque;
  c.singular = !c.left_split && !c.right_split;
  c.regular = !c.singular;
  (void)b;
  return c;
}

ArrowClassReport classify_arrows(const Plot& p) {
  ArrowClassReport r;
  for (Index f = 0; f < static_cast<Index>(p.num_arrows()); ++f) r.arrows.push_back(classify_arrow(p, f));
  return r;
}

namespace {

const std::vector<std::pair<std::string_view, ArrowKind>>& kind_names() {
  static const std::vector<std::pair<std::string_view, ArrowKind>> names = {
      {"all", ArrowKind::All},   {"mono", ArrowKind::Mono}, {"epi", ArrowKind::Epi},
      {"canc", ArrowKind::Canc}, {"lspl", ArrowKind::Lspl}, {"rspl", ArrowKind::Rspl},
      {"spl", ArrowKind::Spl},   {"linv", ArrowKind::Linv}, {"rinv", ArrowKind::Rinv},
      {"inv", ArrowKind::Inv},   {"liso", ArrowKind::Liso}, {"riso", ArrowKind::Riso},
      {"iso", ArrowKind::Iso},   {"opa", ArrowKind::Opa},   {"sng", ArrowKind::Sng},
      {"end", ArrowKind::End},
  };
  return names;
}

bool in_kind(const ArrowClass& c, ArrowKind kind) {
  switch (kind) {
    case ArrowKind::All: return true;
    case ArrowKind::Mono: return c.monic;
    case ArrowKind::Epi: return c.epic;
    case ArrowKind::Canc: return c.cancellative;
    case ArrowKind::Lspl: return c.left_split;
    case ArrowKind::Rspl: return c.right_split;
    case ArrowKind::Spl: return c.split;
    case ArrowKind::Linv: return c.left_invertible;
    case ArrowKind::Rinv: return c.right_invertible;
    case ArrowKind::Inv: return c.invertible;
    case ArrowKind::Liso: return c.left_iso;
    case ArrowKind::Riso: return c.right_iso;
    case ArrowKind::Iso: return c.iso;
    case ArrowKind::Opa: return c.opaque;
    case ArrowKind::Sng: return c.singular;
    case ArrowKind::End: return c.endomorphism;
  }
  return false;
}

}  // namespace

std::optional<ArrowKind> parse_arrow_kind(std::string_view name) {
  for (auto [n, k] : kind_names())
    if (n == name) return k;
  return std::nullopt;
}

std::string_view to_string(ArrowKind kind) {
  for (auto [n, k] : kind_names())
    if (k == kind) return n;
  return "?";
}

std::vector<Index> arrow_class(const Plot& p, ArrowKind kind) {
  std::vector<Index> out;
  for (Index f = 0; f < static_cast<Index>(p.num_arrows()); ++f)
    if (in_kind(classify_arrow(p, f), kind)) out.push_back(f);
  return out;
}

Plot derived_arrow_plot(const Plot& p, ArrowKind kind) {
  return restrict_to_class(p, arrow_class(p, kind));
}

std::vector<std::vector<Index>> power_values(const Plot& p, Index f, std::size_t n) {
  std::vector<std::vector<Index>> v;
  if (n == 0) return v;
  v.push_back({f});
  for (std::size_t k = 2; k <= n; ++k) {
    std::set<Index> s;
    for (std::size_t i = 1; i < k; ++i)
      for (Index x : v[i - 1])
        for (Index y : v[k - i - 1])
          if (Index h = p.comp(x, y); h != kNone) s.insert(h);
    v.emplace_back(s.begin(), s.end());
  }
  return v;
}

std::optional<Order> order_of(const Plot& p, Index f, std::optional<std::size_t> max_n,
                              std::optional<std::size_t> max_p) {
  p.check_arrow(f);
  if (p.src(f) != p.tgt(f)) throw NotEndomorphism("'" + p.arrow(f) + "' is not an endomorphism");
  const std::size_t bn = max_n.value_or(p.num_arrows() + 1);
  const std::size_t bp = max_p.value_or(p.num_arrows() + 1);
  const auto v = power_values(p, f, std::max(bn, bp));
  for (std::size_t n = 1; n <= bn; ++n)
    for (std::size_t q = 1; q <= bp; ++q)
      for (Index x : v[n - 1])
        for (Index y : v[q - 1])
          if (p.comp(x, y) == x) return Order{n, q, n + q - 1};
  return std::nullopt;
}

}  // namespace plotkit
