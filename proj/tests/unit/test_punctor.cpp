#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>

#include "plotkit/arrows.hpp"
#include "plotkit/io.hpp"
#include "plotkit/punctor.hpp"
#include "plotkit/subplots.hpp"
#include "support/gen.hpp"
#include "support/oracle.hpp"

using namespace plotkit;

namespace {

std::string fixture(const std::string& name) { return std::string(PLOTKIT_FIXTURES) + "/" + name; }

using IdMap = std::map<std::string, std::string>;

// Every object map, then every endpoint-respecting arrow map, filtered by the
// composition condition. Returns (objects, arrows) id maps.
std::set<std::pair<IdMap, IdMap>> all_punctors(const oracle::Table& p, const oracle::Table& q) {
  std::set<std::pair<IdMap, IdMap>> out;
  std::vector<IdMap> obj_maps{{}};
  for (const auto& a : p.objects) {
    std::vector<IdMap> next;
    for (const auto& m : obj_maps)
      for (const auto& b : q.objects) {
        IdMap m2 = m;
        m2[a] = b;
        next.push_back(m2);
      }
    obj_maps = std::move(next);
  }
  for (const auto& om : obj_maps) {
    std::vector<IdMap> arr_maps{{}};
    for (const auto& x : p.arrows) {
      std::vector<IdMap> next;
      for (const auto& m : arr_maps)
        for (const auto& y : q.arrows)
          if (q.src.at(y) == om.at(p.src.at(x)) && q.tgt.at(y) == om.at(p.tgt.at(x))) {
            IdMap m2 = m;
            m2[x] = y;
            next.push_back(m2);
          }
      arr_maps = std::move(next);
    }
    for (const auto& am : arr_maps) {
      bool ok = true;
      for (const auto& [fg, h] : p.comp)
        if (q.c(am.at(fg.first), am.at(fg.second)) != std::optional<std::string>(am.at(h))) ok = false;
      if (ok) out.insert({om, am});
    }
  }
  return out;
}

std::pair<IdMap, IdMap> id_maps(const Punctor& f) {
  IdMap om, am;
  for (Index a = 0; a < static_cast<Index>(f.source.num_objects()); ++a)
    om[f.source.object(a)] = f.target.object(f.obj_map[a]);
  for (Index x = 0; x < static_cast<Index>(f.source.num_arrows()); ++x)
    am[f.source.arrow(x)] = f.target.arrow(f.arrow_map[x]);
  return {om, am};
}

// A copy of p under fresh, reshuffled names, with the renaming punctor.
Punctor relabel(testkit::Rng& rng, const Plot& p) {
  RawPlot r = p.raw(), out;
  std::vector<int> perm(r.arrows.size());
  for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = static_cast<int>(i);
  std::shuffle(perm.begin(), perm.end(), rng);
  IdMap om, am;
  for (const auto& a : r.objects) om[a] = "o" + a;
  for (std::size_t i = 0; i < r.arrows.size(); ++i) am[r.arrows[i].id] = "n" + std::to_string(perm[i]);
  for (const auto& a : r.objects) out.objects.push_back(om[a]);
  for (const auto& a : r.arrows) out.arrows.push_back({am[a.id], om[a.src], om[a.tgt]});
  for (const auto& c : r.comp) out.comp.push_back({am[c.f], am[c.g], am[c.h]});
  return make_punctor(p, make_plot(out), om, am);
}

}  // namespace

TEST_CASE("fixture punctors") {
  Punctor par = load_punctor(fixture("punctor_z4_z2.json"));
  for (Index x = 0; x < 4; ++x)
    CHECK(std::stoi(par.target.arrow(par(x))) == std::stoi(par.source.arrow(x)) % 2);
  CHECK(is_functor(par));
  auto rep = classify_punctor(par);
  CHECK(rep.is_unital);
  CHECK(rep.full);
  CHECK_FALSE(rep.faithful);
  CHECK(rep.surjective_on_objects);
  CHECK_FALSE(rep.isomorphism);

  CHECK_THROWS_AS(load_punctor(fixture("bad_punctor.json")), PunctorError);
}

TEST_CASE("violation kinds") {
  Plot q = make_plot({{"A", "B"}, {{"f", "A", "B"}, {"g", "B", "B"}}, {{"f", "g", "f"}}});
  Plot z2 = testkit::cyclic_group(2);
  auto kinds = [](const std::vector<PunctorViolation>& vs) {
    std::set<PunctorViolationKind> s;
    for (const auto& v : vs) s.insert(v.kind);
    return s;
  };
  CHECK(kinds(punctor_violations(q, z2, {0}, {0, 0})).count(PunctorViolationKind::NotTotal));
  CHECK(kinds(punctor_violations(q, q, {0, 1}, {0, 0})).count(PunctorViolationKind::EndpointMismatch));
  CHECK(kinds(punctor_violations(q, q, {0, 1}, {0, 7})).count(PunctorViolationKind::NotTotal));
  try {
    make_punctor(q, q, IdMap{{"A", "A"}, {"B", "B"}}, IdMap{{"f", "f"}, {"g", "zz"}});
    FAIL("expected PunctorError");
  } catch (const PunctorError& e) {
    CHECK(kinds(e.violations()).count(PunctorViolationKind::UnknownId));
  }
  // f;g = f must land on 0+1 = 1, not on 0
  CHECK(kinds(punctor_violations(q, z2, {0, 0}, {0, 1})).count(PunctorViolationKind::CompositionNotPreserved));
  CHECK(punctor_violations(q, z2, {0, 0}, {1, 0}).empty());
  CHECK_THROWS_AS(make_punctor(q, z2, IdMap{{"A", "*"}}, IdMap{{"f", "1"}, {"g", "0"}}), PunctorError);
}

TEST_CASE("enumeration matches a brute-force search") {
  testkit::Rng rng(51);
  for (int i = 0; i < 80; ++i) {
    Plot p = testkit::random_plot(rng, {0, 2, 0, 3, 0.7});
    Plot q = testkit::coin(rng, 0.5) ? testkit::random_plot(rng, {1, 2, 1, 4, 0.8})
                                     : testkit::random_category(rng);
    if (q.num_objects() > 3 || q.num_arrows() > 6) continue;
    auto en = enumerate_punctors(p, q);
    REQUIRE_FALSE(en.overflow);
    std::set<std::pair<IdMap, IdMap>> mine;
    for (const auto& f : en.punctors) {
      CHECK(punctor_violations(f.source, f.target, f.obj_map, f.arrow_map).empty());
      mine.insert(id_maps(f));
    }
    CHECK(mine.size() == en.punctors.size());
    CHECK(mine == all_punctors(oracle::table_of(p), oracle::table_of(q)));
  }
}

TEST_CASE("enumeration cap") {
  Plot z3 = testkit::cyclic_group(3);
  Plot free = make_plot({{"A"}, {{"a", "A", "A"}, {"b", "A", "A"}, {"c", "A", "A"}}, {}});
  auto en = enumerate_punctors(free, z3, 5);
  CHECK(en.overflow);
  auto all = enumerate_punctors(free, z3);
  CHECK_FALSE(all.overflow);
  CHECK(all.punctors.size() == 27);
}

TEST_CASE("composition laws") {
  testkit::Rng rng(52);
  for (int i = 0; i < 60; ++i) {
    Plot p = testkit::random_plot(rng, {1, 2, 0, 3, 0.7});
    Plot q = testkit::random_category(rng);
    Plot r = testkit::cyclic_group(testkit::uniform(rng, 1, 3));
    if (q.num_arrows() > 6) continue;
    auto fs = enumerate_punctors(p, q).punctors;
    auto gs = enumerate_punctors(q, r).punctors;
    auto hs = enumerate_punctors(r, r).punctors;
    if (fs.empty() || gs.empty()) continue;
    const Punctor& f = testkit::pick(rng, fs);
    const Punctor& g = testkit::pick(rng, gs);
    const Punctor& h = testkit::pick(rng, hs);
    CHECK(compose_punctors(identity_punctor(p), f) == f);
    CHECK(compose_punctors(f, identity_punctor(q)) == f);
    CHECK(compose_punctors(compose_punctors(f, g), h) == compose_punctors(f, compose_punctors(g, h)));
    Punctor gf = compose_punctors(f, g);
    for (Index x = 0; x < static_cast<Index>(p.num_arrows()); ++x) CHECK(gf(x) == g(f(x)));
    CHECK_THROWS_AS(compose_punctors(g, f), SourceTargetMismatch);
    // duality is an involution and respects composition
    CHECK(dual_punctor(dual_punctor(f)) == f);
    CHECK(dual_punctor(gf) == compose_punctors(dual_punctor(f), dual_punctor(g)));
  }
}

TEST_CASE("image and inverse image") {
  testkit::Rng rng(53);
  int seen = 0;
  for (int i = 0; i < 200 && seen < 60; ++i) {
    Plot p = testkit::random_plot(rng, {1, 3, 1, 4, 0.7});
    Plot q = testkit::random_category(rng);
    if (q.num_arrows() > 7) continue;
    auto fs = enumerate_punctors(p, q, 20000);
    if (fs.punctors.empty()) continue;
    ++seen;
    const Punctor& f = testkit::pick(rng, fs.punctors);
    Plot s = generated_subplot(p, std::vector<Index>{}, testkit::random_class(rng, p), GenerationMode::Smallest);
    Plot im = image(f, s);
    CHECK(is_subplot(im, q).is_subplot);
    std::set<std::string> expected;
    for (Index x = 0; x < static_cast<Index>(s.num_arrows()); ++x)
      expected.insert(q.arrow(f(p.arrow_index(s.arrow(x)))));
    std::set<std::string> got;
    for (Index y = 0; y < static_cast<Index>(im.num_arrows()); ++y) got.insert(im.arrow(y));
    CHECK(got == expected);

    Plot pre = inverse_image(f, im);
    CHECK(is_subplot(s, pre).is_subplot);
    CHECK(inverse_image(f, q) == p);
    CHECK(image(f, p) == image(f, inverse_image(f, image(f, p))));

    Punctor fr = restrict_punctor(f, s);
    for (Index x = 0; x < static_cast<Index>(s.num_arrows()); ++x)
      CHECK(q.arrow(fr(x)) == q.arrow(f(p.arrow_index(s.arrow(x)))));
    Punctor fc = corestrict_punctor(f, im);
    CHECK(fc.source == pre);
    CHECK(fc.target == im);
  }
  CHECK(seen > 20);
  Plot z2 = testkit::cyclic_group(2);
  Plot other = testkit::cyclic_group(3);
  CHECK_THROWS_AS(image(identity_punctor(z2), other), NotASubplot);
}

TEST_CASE("classification against definitions") {
  testkit::Rng rng(54);
  for (int i = 0; i < 120; ++i) {
    Plot p = testkit::random_plot(rng, {1, 3, 0, 4, 0.7});
    Plot q = testkit::coin(rng, 0.5) ? testkit::random_category(rng) : testkit::random_plot(rng, {1, 2, 1, 4, 0.8});
    if (q.num_arrows() > 7) continue;
    auto fs = enumerate_punctors(p, q, 20000).punctors;
    if (fs.empty()) continue;
    const Punctor& f = testkit::pick(rng, fs);
    auto rep = classify_punctor(f);
    auto tp = oracle::table_of(p), tq = oracle::table_of(q);
    auto [om, am] = id_maps(f);

    bool faithful = true, full = true, unital = true;
    for (const auto& a : tp.objects)
      for (const auto& b : tp.objects) {
        std::set<std::string> images;
        std::size_t count = 0;
        for (const auto& x : tp.arrows)
          if (tp.src[x] == a && tp.tgt[x] == b) {
            images.insert(am[x]);
            ++count;
          }
        if (images.size() != count) faithful = false;
        for (const auto& y : tq.arrows)
          if (tq.src[y] == om[a] && tq.tgt[y] == om[b] && !images.count(y)) full = false;
      }
    for (const auto& a : tp.objects)
      if (auto e = oracle::identity_at(tp, a)) unital &= oracle::identity_at(tq, om[a]) == am[*e];
    std::set<std::string> hit;
    for (const auto& [a, b] : om) hit.insert(b);

    CHECK(rep.faithful == faithful);
    CHECK(rep.full == full);
    CHECK(rep.is_unital == unital);
    CHECK(rep.is_unital == is_functor(f));
    CHECK(rep.injective_on_objects == (hit.size() == om.size()));
    CHECK(rep.surjective_on_objects == (hit.size() == tq.objects.size()));
    CHECK(rep.fully_faithful == (faithful && full));
    CHECK(rep.unfaithful_pair.has_value() == !faithful);
    CHECK(rep.unfull_witness.has_value() == !full);
  }
}

TEST_CASE("isomorphisms preserve and reflect arrow classes") {
  testkit::Rng rng(55);
  for (int i = 0; i < 60; ++i) {
    Plot p = testkit::coin(rng, 0.5) ? testkit::random_plot(rng) : testkit::random_category(rng);
    Punctor f = relabel(rng, p);
    auto rep = classify_punctor(f);
    CHECK(rep.isomorphism);
    CHECK(rep.embedding);
    for (auto kind : {ArrowKind::Mono, ArrowKind::Epi, ArrowKind::Rspl, ArrowKind::Lspl, ArrowKind::Iso,
                      ArrowKind::Sng}) {
      auto pr = preserves_reflects(f, arrow_class(p, kind), arrow_class(f.target, kind));
      CHECK(pr.preserves.holds);
      CHECK(pr.reflects.holds);
    }
  }
}

TEST_CASE("punctors need not preserve monos") {
  // the collapse of the left-zero magma onto one arrow sends monos to the
  // non-mono zero of a null magma
  Plot lz = testkit::left_zero_magma(2);
  Plot null = testkit::magma_from(2, [](int, int) { return 0; });
  Punctor f = make_punctor(lz, null, {0}, {0, 0});
  auto pr = preserves_reflects(f, arrow_class(lz, ArrowKind::Mono), arrow_class(null, ArrowKind::Mono));
  CHECK_FALSE(pr.preserves.holds);
  REQUIRE(pr.preserves.witness);
  CHECK(classify_punctor(f).constant);
}
