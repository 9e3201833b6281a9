#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>

#include "plotkit/arrows.hpp"
#include "plotkit/io.hpp"
#include "plotkit/paren.hpp"
#include "plotkit/subplots.hpp"
#include "support/gen.hpp"
#include "support/oracle.hpp"

using namespace plotkit;

namespace {

Plot cayley() { return load_plot(std::string(PLOTKIT_FIXTURES) + "/cayley.json").plot; }

std::set<std::string> arrow_set(const Plot& p) {
  std::set<std::string> s;
  for (Index f = 0; f < static_cast<Index>(p.num_arrows()); ++f) s.insert(p.arrow(f));
  return s;
}

std::set<std::string> object_set(const Plot& p) {
  std::set<std::string> s;
  for (Index a = 0; a < static_cast<Index>(p.num_objects()); ++a) s.insert(p.object(a));
  return s;
}

// Closure oracle on ids: repeatedly add composites.
std::set<std::string> closure(const oracle::Table& t, std::set<std::string> s) {
  for (bool grew = true; grew;) {
    grew = false;
    for (const auto& f : std::set<std::string>(s))
      for (const auto& g : std::set<std::string>(s))
        if (auto h = t.c(f, g)) grew |= s.insert(*h).second;
  }
  return s;
}

}  // namespace

TEST_CASE("is_subplot") {
  Plot c = cayley();
  auto self = is_subplot(c, c);
  CHECK(self.is_subplot);
  CHECK_FALSE(self.is_proper);
  CHECK(self.is_wide);
  CHECK(self.is_full);

  auto q = is_subplot(underlying_quiver(c), c);
  CHECK(q.is_subplot);
  CHECK(q.is_wide);
  CHECK(q.is_full);
  CHECK(q.is_proper);

  // a triple the parent does not have
  Plot bad = make_plot({{"*"}, {{"0", "*", "*"}}, {{"0", "0", "0"}}});
  auto r = is_subplot(bad, c);
  CHECK_FALSE(r.is_subplot);
  CHECK_FALSE(r.reason.empty());

  testkit::Rng rng(31);
  for (int i = 0; i < 100; ++i) {
    Plot p = testkit::random_plot(rng);
    auto objs = std::vector<Index>{};
    for (Index a = 0; a < static_cast<Index>(p.num_objects()); ++a)
      if (testkit::coin(rng, 0.6)) objs.push_back(a);
    Plot s = generated_subplot(p, objs, testkit::random_class(rng, p), GenerationMode::Relative);
    Plot s2 = generated_subplot(s, std::vector<Index>{}, testkit::random_class(rng, s), GenerationMode::Relative);
    auto ss = is_subplot(s, p);
    CHECK(ss.is_subplot);
    if (ss.is_full) CHECK(ss.is_identitive);
    // transitivity and antisymmetry
    CHECK(is_subplot(s2, s).is_subplot);
    CHECK(is_subplot(s2, p).is_subplot);
    if (is_subplot(p, s).is_subplot) CHECK(p == s);
  }
}

TEST_CASE("generated subplots") {
  Plot c = cayley();
  CHECK(generated_subplot(c, std::vector<std::string>{}, {}, GenerationMode::Smallest) == Plot());

  Plot g = generated_subplot(c, {}, {"1"}, GenerationMode::Smallest);
  CHECK(arrow_set(g) == std::set<std::string>{"0", "1"});

  // unknown ids are ignored
  Plot g2 = generated_subplot(c, {"nope"}, {"1", "zz"}, GenerationMode::Smallest);
  CHECK(g2 == g);

  // all arrows is compositive, so relative = smallest
  auto all = std::vector<std::string>{"0", "1", "2"};
  CHECK(generated_subplot(c, {}, all, GenerationMode::Relative) ==
        generated_subplot(c, {}, all, GenerationMode::Smallest));

  // identitive adds identities at endpoints
  Plot z = testkit::cyclic_group(3);
  Plot gi = generated_subplot(z, {}, {"1"}, GenerationMode::Identitive);
  CHECK(arrow_set(gi) == std::set<std::string>{"0", "1", "2"});
  Plot pre = load_plot(std::string(PLOTKIT_FIXTURES) + "/preorder.json").plot;
  Plot gp = generated_subplot(pre, {}, {"ab"}, GenerationMode::Identitive);
  CHECK(arrow_set(gp) == std::set<std::string>{"1A", "1B", "ab"});
  CHECK(arrow_set(generated_subplot(pre, {}, {"ab"}, GenerationMode::Smallest)) ==
        std::set<std::string>{"ab"});

  testkit::Rng rng(32);
  for (int i = 0; i < 150; ++i) {
    Plot p = testkit::random_plot(rng, {1, 3, 0, 6, 0.6});
    auto t = oracle::table_of(p);
    auto m = testkit::random_class(rng, p);
    std::set<std::string> ids;
    for (Index f : m) ids.insert(p.arrow(f));
    Plot sm = generated_subplot(p, std::vector<Index>{}, m, GenerationMode::Smallest);
    Plot rel = generated_subplot(p, std::vector<Index>{}, m, GenerationMode::Relative);
    CHECK(is_subplot(sm, p).is_subplot);
    CHECK(is_subplot(rel, p).is_subplot);
    CHECK(is_subplot(rel, sm).is_subplot);
    CHECK(arrow_set(sm) == closure(t, ids));
    CHECK((rel == sm) == is_compositive(p, m).compositive);
    // minimality: every arrow of the closure is needed
    for (const auto& drop : arrow_set(sm)) {
      if (ids.count(drop)) continue;
      auto fewer = arrow_set(sm);
      fewer.erase(drop);
      CHECK(closure(t, fewer) != fewer);
    }
  }
}

TEST_CASE("derived subplot kinds") {
  Plot pre = load_plot(std::string(PLOTKIT_FIXTURES) + "/preorder.json").plot;
  Plot full = derived_subplot(pre, DerivedKind::Full, {"A", "B"}, false);
  CHECK(object_set(full) == std::set<std::string>{"A", "B"});
  CHECK(arrow_set(full) == std::set<std::string>{"1A", "1B", "ab"});
  CHECK(is_subplot(full, pre).is_full);

  Plot wide = derived_subplot(pre, DerivedKind::Wide, {"ab"}, false);
  CHECK(object_set(wide) == object_set(pre));
  CHECK(is_subplot(wide, pre).is_wide);

  Plot homs = derived_subplot(pre, DerivedKind::Hom, {"bc"}, true);
  CHECK(arrow_set(homs) == std::set<std::string>{"1B", "1C", "bc"});
}

TEST_CASE("restriction to a relation") {
  Plot c = cayley();
  CHECK(restrict_to_relation(c, {}) == Plot());

  // Mono(P) on the Cayley magma
  auto mono = arrow_class(c, ArrowKind::Mono);
  std::vector<std::pair<Index, Index>> rel;
  for (Index f : mono)
    for (Index g : mono) rel.push_back({f, g});
  Plot m = restrict_to_relation(c, rel);
  CHECK(arrow_set(m) == std::set<std::string>{"1", "2"});
  CHECK(m == derived_arrow_plot(c, ArrowKind::Mono));
  // 2*1 = 2, 2*2 = 1, 1*2 = 2 survive; 1*1 = 0 does not
  CHECK(m.comp_size() == 3);
  CHECK(classify(m).is_epic);

  testkit::Rng rng(33);
  for (int i = 0; i < 100; ++i) {
    Plot p = testkit::random_plot(rng, {1, 4, 0, 6, 1.0});
    // on a saturated plot, restricting to dom(c) keeps all non-isolated structure
    auto r = restrict_to_relation(p, p.comp_domain());
    std::set<std::string> expected;
    for (auto [f, g] : p.comp_domain()) {
      expected.insert(p.arrow(f));
      expected.insert(p.arrow(g));
    }
    CHECK(arrow_set(r) == expected);
    CHECK(classify(r).is_epic);
    CHECK_THROWS_AS(restrict_to_relation(p, {{0, 99}}), UnknownArrow);
  }
}

TEST_CASE("compositive classes") {
  Plot c = cayley();
  CHECK(is_compositive(c, testkit::all_arrows(c)).compositive);
  auto r = is_compositive(c, {c.arrow_index("1")});
  CHECK_FALSE(r.compositive);
  REQUIRE(r.witness);
  CHECK(r.witness->first == c.arrow_index("1"));
  CHECK(r.witness->second == c.arrow_index("1"));

  Plot pre = load_plot(std::string(PLOTKIT_FIXTURES) + "/preorder.json").plot;
  auto ids = compute_identities(pre);
  CHECK(is_compositive(pre, ids).compositive);
}

TEST_CASE("compositive classes are closed under every parenthesization") {
  testkit::Rng rng(34);
  for (int i = 0; i < 100; ++i) {
    Plot p = testkit::random_magma(rng, 3, 0.7);
    auto m = testkit::random_class(rng, p);
    if (m.empty() || !is_compositive(p, m).compositive) continue;
    std::set<Index> ms(m.begin(), m.end());
    for (std::size_t n = 1; n <= 4; ++n)
      for (int trial = 0; trial < 5; ++trial) {
        std::vector<Index> fs;
        for (std::size_t k = 0; k < n; ++k) fs.push_back(testkit::pick(rng, m));
        for (const auto& w : enumerate_parens(n))
          if (auto v = eval_paren(p, w, fs)) CHECK(ms.count(*v));
      }
  }
}

TEST_CASE("underlying quiver and graph") {
  Plot q = make_plot({{"A", "B"}, {{"f", "A", "B"}, {"g", "B", "B"}}, {}});
  CHECK(underlying_quiver(q) == q);
  auto loop = underlying_graph(make_plot({{"A"}, {{"f", "A", "A"}}, {}}));
  REQUIRE(loop.size() == 1);
  CHECK(loop[0].ends == std::vector<std::string>{"A"});
  Plot c = cayley();
  CHECK(underlying_graph(underlying_quiver(c)) == underlying_graph(c));
}

TEST_CASE("saturated subplots of pre-associative plots are strongly associative") {
  testkit::Rng rng(35);
  int seen = 0;
  for (int i = 0; i < 400 && seen < 60; ++i) {
    Plot p = testkit::random_plot(rng, {1, 3, 1, 5, 0.8});
    if (!associativity_profile(p).pre_associative) continue;
    Plot s = generated_subplot(p, std::vector<Index>{}, testkit::random_class(rng, p), GenerationMode::Relative);
    if (!classify(s).is_saturated) continue;
    ++seen;
    CHECK(associativity_profile(s).strongly_associative);
  }
  CHECK(seen > 10);
}
