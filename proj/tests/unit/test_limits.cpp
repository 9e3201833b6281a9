#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>

#include "plotkit/constructions.hpp"
#include "plotkit/io.hpp"
#include "plotkit/limits.hpp"
#include "support/gen.hpp"

using namespace plotkit;

namespace {

std::string fixture(const std::string& name) { return std::string(PLOTKIT_FIXTURES) + "/" + name; }

Cone cone_of(const Diagram& d, const std::string& apex, const std::vector<std::string>& legs) {
  Cone c{d.flat.object_index(apex), {}};
  for (const auto& l : legs) c.legs.push_back(d.flat.arrow_index(l));
  return c;
}

// Plain definition on a category: arrows v : C -> L with v;leg = other leg.
std::size_t mediating_arrows(const Diagram& d, const Cone& limit, const Cone& other) {
  std::size_t n = 0;
  for (Index v : hom(d.flat, other.apex, limit.apex)) {
    bool ok = true;
    for (std::size_t i = 0; i < limit.legs.size(); ++i) ok &= d.flat.comp(v, limit.legs[i]) == other.legs[i];
    n += ok;
  }
  return n;
}

// Cones by brute force over every apex and every leg tuple.
std::set<std::pair<Index, std::vector<Index>>> cones_oracle(const Diagram& d) {
  std::set<std::pair<Index, std::vector<Index>>> out;
  const Plot& j = d.shape();
  const Plot& f = d.flat;
  for (Index apex = 0; apex < static_cast<Index>(f.num_objects()); ++apex) {
    std::vector<std::vector<Index>> tuples{{}};
    for (Index a = 0; a < static_cast<Index>(j.num_objects()); ++a) {
      std::vector<std::vector<Index>> next;
      for (const auto& t : tuples)
        for (Index leg : testkit::all_arrows(f))
          if (f.src(leg) == apex && f.tgt(leg) == d.functor.on_object(a)) {
            auto t2 = t;
            t2.push_back(leg);
            next.push_back(t2);
          }
      tuples = std::move(next);
    }
    for (const auto& t : tuples) {
      bool ok = true;
      for (Index x : testkit::all_arrows(j)) ok &= f.comp(t[j.src(x)], d.flat_image(x)) == t[j.tgt(x)];
      if (ok) out.insert({apex, t});
    }
  }
  return out;
}

}  // namespace

TEST_CASE("binary product in a small category") {
  Diagram d = make_diagram(load_punctor(fixture("diagram_product.json")));
  auto all = testkit::all_arrows(d.flat);
  Cone p = cone_of(d, "P", {"p1", "p2"});
  Cone t = cone_of(d, "T", {"ta", "tb"});
  CHECK(check_cone(d, p));
  CHECK(check_cone(d, t));
  CHECK_FALSE(check_cone(d, cone_of(d, "P", {"p2", "p1"})));

  auto rp = classify_limit(d, p, all, 3);
  CHECK(rp.label == LimitLabel::Strong);
  for (const auto& c : rp.competitors) {
    CHECK(c.count == 1);
    CHECK(c.min_length == std::optional<std::size_t>(1));
  }
  auto rt = classify_limit(d, t, all, 3);
  CHECK(rt.label == LimitLabel::SublimitOnly);
  CHECK(rt.weak == std::optional<bool>(false));

  CHECK_THROWS_AS(classify_limit(d, cone_of(d, "P", {"p2", "p1"}), all, 3), InvalidCone);
}

TEST_CASE("terminal object as the limit of the empty diagram") {
  Diagram d = make_diagram(load_punctor(fixture("diagram_terminal.json")));
  auto all = testkit::all_arrows(d.flat);
  CHECK(enumerate_cones(d).size() == d.flat.num_objects());
  CHECK(classify_limit(d, cone_of(d, "T", {}), all, 2).label == LimitLabel::Strong);
  CHECK(classify_limit(d, cone_of(d, "X", {}), all, 2).label == LimitLabel::SublimitOnly);
}

TEST_CASE("colimits are limits in the dual") {
  Plot pre = load_plot(fixture("preorder.json")).plot;
  Plot two = make_plot({{"a", "b"}, {}, {}});
  Diagram d = make_diagram(make_punctor(two, pre, {{"a", "A"}, {"b", "B"}}, {}));
  auto all = testkit::all_arrows(d.flat);
  Cone join = cone_of(d, "B", {"ab", "1B"});
  auto r = classify_colimit(d, join, all, 2);
  CHECK(r.label == LimitLabel::Strong);
  CHECK(r.label == classify_limit(dual_diagram(d), join, all, 2).label);
  // C is a cocone but not the join
  CHECK(classify_colimit(d, cone_of(d, "C", {"ac", "bc"}), all, 2).label == LimitLabel::SublimitOnly);
}

TEST_CASE("unbounded searches stay inconclusive") {
  Plot q = make_plot({{"D", "X", "Y"},
                      {{"x", "X", "D"}, {"y", "Y", "D"}, {"v", "Y", "X"}, {"w", "Y", "X"}, {"l", "Y", "Y"}},
                      {{"v", "x", "y"}}});
  Plot one = make_plot({{"a"}, {}, {}});
  Diagram d = make_diagram(make_punctor(one, q, {{"a", "D"}}, {}));
  // v mediates but is not in m, and the loop makes M-paths unbounded
  std::vector<Index> m{d.flat.arrow_index("l"), d.flat.arrow_index("w")};
  auto r = classify_limit(d, cone_of(d, "X", {"x"}), m, 4);
  CHECK(r.label == LimitLabel::Inconclusive);
  bool open = false;
  for (const auto& c : r.competitors) open |= c.count == 0 && !c.none_exist;
  CHECK(open);
}

TEST_CASE("diagram validation") {
  Plot z2 = testkit::cyclic_group(2);
  CHECK_THROWS_AS(make_diagram(identity_punctor(z2)), InvalidDiagram);
  Diagram d = make_diagram(load_punctor(fixture("diagram_product.json")));
  CHECK(cone_violation(d, Cone{99, {}}).has_value());
  CHECK(cone_violation(d, Cone{0, {0}}).has_value());
}

TEST_CASE("cones and labels against the plain definition in categories") {
  testkit::Rng rng(91);
  int decided = 0;
  for (int i = 0; i < 150; ++i) {
    Plot cat = testkit::random_category(rng);
    if (cat.num_arrows() > 8 || cat.num_objects() == 0) continue;
    Plot shape = testkit::random_plot(rng, {0, 2, 0, 2, 0.0});
    auto fs = enumerate_punctors(shape, cat, 20000).punctors;
    if (fs.empty()) continue;
    Diagram d = make_diagram(testkit::pick(rng, fs));
    CHECK(d.flat == cat);

    auto cones = enumerate_cones(d);
    std::set<std::pair<Index, std::vector<Index>>> got;
    for (const auto& c : cones) got.insert({c.apex, c.legs});
    CHECK(got == cones_oracle(d));

    auto all = testkit::all_arrows(d.flat);
    for (const auto& cand : cones) {
      auto r = classify_limit(d, cand, all, 2);
      bool weak = true, sub = true;
      for (const auto& other : cones) {
        auto n = mediating_arrows(d, cand, other);
        weak &= n >= 1;
        sub &= n <= 1;
      }
      if (r.weak) CHECK(*r.weak == weak);
      if (r.sub && *r.sub) CHECK(sub);
      if (r.sub && !*r.sub) CHECK_FALSE(sub);
      if (r.label == LimitLabel::Strong) CHECK((weak && sub));
      if (weak && sub) CHECK(r.label == LimitLabel::Strong);
      decided += r.label != LimitLabel::Inconclusive;
    }
  }
  CHECK(decided > 20);
}
