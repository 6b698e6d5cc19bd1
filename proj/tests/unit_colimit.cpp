#include <doctest.h>

#include <random>

#include "finbound/colimit.hpp"
#include "gen.hpp"

using namespace finbound;
using namespace finbound::cats;
using namespace finbound::colimit;

namespace {

/// Random chain of finite sets with random injective links.
Chain random_finset_chain(std::mt19937& rng, int length) {
  Chain c;
  int n = gen::uniform(rng, 0, 2);
  c.objects.push_back(finset(n));
  for (int i = 1; i < length; ++i) {
    int m = n + gen::uniform(rng, 0, 2);
    std::vector<int> slots(m);
    std::iota(slots.begin(), slots.end(), 0);
    std::shuffle(slots.begin(), slots.end(), rng);
    slots.resize(n);
    c.objects.push_back(finset(m));
    c.links.push_back(make_mor(c.objects[i - 1], c.objects[i], {slots}));
    n = m;
  }
  return c;
}

/// Chain of subalgebras of a random unary algebra generated by a growing
/// list of generators.
Chain random_unary_chain(std::mt19937& rng, int length) {
  Obj x = gen::random_unary(rng, gen::uniform(rng, 1, 8));
  std::vector<std::pair<int, int>> gens;
  std::vector<Mor> subs;
  for (int i = 0; i < length; ++i) {
    gens.emplace_back(0, gen::uniform(rng, 0, x.total_size() - 1));
    subs.push_back(generated_subobject(x, gens));
  }
  Chain c;
  for (const auto& s : subs) c.objects.push_back(s.dom);
  for (int i = 0; i + 1 < length; ++i) {
    Maps m{{}};
    for (int v : subs[i].maps[0])
      m[0].push_back(static_cast<int>(std::find(subs[i + 1].maps[0].begin(), subs[i + 1].maps[0].end(), v) -
                                      subs[i + 1].maps[0].begin()));
    c.links.push_back(make_mor(subs[i].dom, subs[i + 1].dom, m));
  }
  return c;
}

}  // namespace

TEST_SUITE("colimit reflection") {
  TEST_CASE("finite chain with its last object as apex passes") {
    std::mt19937 rng(1);
    for (int t = 0; t < 10; ++t) {
      auto cc = chain_colimit(random_unary_chain(rng, 3));
      auto r = reflect_colimit_test(cc, small_objects(Category::unary(), 2));
      CHECK(r.verdict == Verdict::PassProbeLimited);
      auto c2 = chain_colimit(random_finset_chain(rng, 4));
      CHECK(reflect_colimit_test(c2, small_objects(Category::finset(), 3)).verdict == Verdict::PassProbeLimited);
    }
  }

  TEST_CASE("apex with an extra isolated point fails with that point") {
    Chain c{{finset(1), finset(2)}, {make_mor(finset(1), finset(2), {{0}})}};
    Cocone cc{c, finset(3), {make_mor(finset(1), finset(3), {{0}}), make_mor(finset(2), finset(3), {{0, 1}})}};
    auto r = reflect_colimit_test(cc, {finset(1)});
    CHECK(r.verdict == Verdict::FailCertified);
    REQUIRE(r.unfactorized);
    CHECK(r.unfactorized->maps[0][0] == 2);
  }

  TEST_CASE("prime-cycle chain into the cycle family passes") {
    auto cc = prime_cycle_chain(3);
    auto r = reflect_colimit_test(cc, {cycle(2), cycle(3), cycle(5)});
    CHECK(r.verdict == Verdict::PassProbeLimited);
    CHECK_FALSE(r.window_exhausted);
    CHECK(r.morphisms_checked == 2 + 3 + 5);
  }

  TEST_CASE("probe beyond the prefix is exhausted, not failed") {
    auto cc = prime_cycle_chain(2);
    auto r = reflect_colimit_test(cc, {cycle(5)});
    CHECK(r.verdict == Verdict::Exhausted);
  }

  TEST_CASE("non-commuting cocone is rejected") {
    Chain c{{finset(1), finset(2)}, {make_mor(finset(1), finset(2), {{0}})}};
    Cocone cc{c, finset(2), {make_mor(finset(1), finset(2), {{1}}), identity(finset(2))}};
    CHECK_THROWS_AS(reflect_colimit_test(cc, {finset(1)}), PreconditionError);
  }
}

TEST_SUITE("unions") {
  TEST_CASE("identity alone is a union") { CHECK(union_test({identity(finset(2))}, finset(2))); }

  TEST_CASE("proper subsets of a 2-set cover it") {
    std::vector<Mor> proper;
    for (const auto& m : subobjects(finset(2), 1)) proper.push_back(m);
    CHECK(union_test(proper, finset(2)));
  }

  TEST_CASE("a single point does not cover a 2-set") {
    CHECK_FALSE(union_test({subobject(finset(2), {{0}})}, finset(2)));
  }

  TEST_CASE("graph unions must cover edges") {
    Obj e = path(2);
    CHECK_FALSE(union_test({subobject(e, {{0, 1}}, std::vector<Edge>{})}, e));
    CHECK(union_test({subobject(e, {{0, 1}}, std::vector<Edge>{}), identity(e)}, e));
  }

  TEST_CASE("adding subobjects never breaks a union") {
    std::mt19937 rng(9);
    for (int t = 0; t < 50; ++t) {
      Obj x = gen::random_unary(rng, gen::uniform(rng, 1, 5));
      auto subs = subobjects(x, x.total_size());
      std::vector<Mor> pick;
      bool was = false;
      for (int k = 0; k < 6; ++k) {
        pick.push_back(subs[gen::uniform(rng, 0, static_cast<int>(subs.size()) - 1)]);
        bool now = union_test(pick, x);
        CHECK((!was || now));
        was = now;
      }
    }
  }
}

TEST_SUITE("image unions") {
  TEST_CASE("identity: images are the legs themselves") {
    std::mt19937 rng(2);
    auto cc = chain_colimit(random_finset_chain(rng, 4));
    const Obj& apex = std::get<Obj>(cc.apex);
    auto iu = image_union(cc, identity(apex));
    CHECK(iu.equal);
    for (std::size_t i = 0; i < cc.legs.size(); ++i) {
      auto sorted = cc.legs[i].maps[0];
      std::sort(sorted.begin(), sorted.end());
      CHECK(iu.images[i].maps[0] == sorted);
    }
  }

  TEST_CASE("constant map: every nonempty image is the same point") {
    Chain c{{finset(1), finset(3)}, {make_mor(finset(1), finset(3), {{2}})}};
    auto cc = chain_colimit(c);
    auto f = make_mor(finset(3), finset(4), {{3, 3, 3}});
    auto iu = image_union(cc, f);
    CHECK(iu.equal);
    for (const auto& im : iu.images) CHECK(im.maps[0] == std::vector<int>{3});
  }

  TEST_CASE("random finset and unary chains satisfy the union equality") {
    std::mt19937 rng(2024);
    int checked = 0;
    for (int t = 0; t < 100; ++t) {
      auto cc = chain_colimit(random_finset_chain(rng, 4));
      const Obj& apex = std::get<Obj>(cc.apex);
      std::vector<int> f(apex.total_size());
      const int cod = gen::uniform(rng, 1, 4);
      for (int& v : f) v = gen::uniform(rng, 0, cod - 1);
      CHECK(image_union(cc, make_mor(apex, finset(cod), {f})).equal);
      ++checked;

      auto uc = chain_colimit(random_unary_chain(rng, 4));
      const Obj& ua = std::get<Obj>(uc.apex);
      // A fixed point in the target guarantees a hom exists.
      Obj target = coproduct(Category::unary(), {gen::random_unary(rng, gen::uniform(rng, 1, 4)), cycle(1)}).object;
      auto g = gen::random_hom(rng, ua, target);
      if (g) {
        CHECK(image_union(uc, *g).equal);
        ++checked;
      }
    }
    CHECK(checked == 200);
  }
}
