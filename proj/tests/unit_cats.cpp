#include <doctest.h>

#include <random>

#include "finbound/symbolic.hpp"
#include "gen.hpp"
#include "oracles.hpp"

using namespace finbound;
using namespace finbound::cats;

TEST_SUITE("hom enumeration") {
  TEST_CASE("finset 2 -> 3 has 9 maps") { CHECK(hom_set(finset(2), finset(3)).size() == 9); }

  TEST_CASE("C2 -> C4 is empty, C4 -> C2 has two maps") {
    CHECK(oracle::homs(cycle(2), cycle(4)).empty());
    CHECK(oracle::homs(cycle(4), cycle(2)).size() == 2);
    CHECK(hom_set(cycle(2), cycle(4)).empty());
    CHECK(hom_set(cycle(4), cycle(2)).size() == 2);
  }

  TEST_CASE("backtracking agrees with brute force on random instances") {
    std::mt19937 rng(7);
    for (int t = 0; t < 60; ++t) {
      Obj x = gen::random_unary(rng, gen::uniform(rng, 0, 4));
      Obj y = gen::random_unary(rng, gen::uniform(rng, 0, 4));
      auto fast = hom_set(x, y);
      auto slow = oracle::homs(x, y);
      std::sort(slow.begin(), slow.end());
      REQUIRE(fast.size() == slow.size());
      for (std::size_t i = 0; i < fast.size(); ++i) CHECK(fast[i].maps == slow[i]);
      Obj g = gen::random_graph(rng, gen::uniform(rng, 0, 4), 0.4);
      Obj h = gen::random_graph(rng, gen::uniform(rng, 0, 4), 0.5);
      CHECK(hom_set(g, h).size() == oracle::homs(g, h).size());
      CHECK(hom_count(g, h) == oracle::homs(g, h).size());
      CHECK(hom_exists(g, h) == !oracle::homs(g, h).empty());
    }
  }

  TEST_CASE("presheaf homs agree with brute force") {
    std::mt19937 rng(11);
    auto s3 = FiniteGroupoid::symmetric3();
    auto cod2 = FiniteGroupoid::codiscrete(2);
    for (int t = 0; t < 20; ++t) {
      for (const auto& g : {s3, cod2}) {
        Obj x = gen::random_presheaf(rng, g, 6);
        Obj y = gen::random_presheaf(rng, g, 6);
        CHECK(hom_count(x, y) == oracle::homs(x, y).size());
      }
    }
  }

  TEST_CASE("parallel and serial enumeration produce the same list") {
    std::mt19937 rng(3);
    for (int t = 0; t < 20; ++t) {
      Obj x = gen::random_graph(rng, 4, 0.2);
      Obj y = gen::random_graph(rng, 5, 0.5);
      CHECK(hom_set(x, y) == serial::hom_set(x, y));
    }
  }

  TEST_CASE("prime cycle divisibility law up to 23") {
    for (int p = 1; p <= 23; ++p)
      for (int q = 1; q <= 23; ++q) CHECK(hom_exists(cycle(p), cycle(q)) == (p % q == 0));
  }

  TEST_CASE("composites of homs are homs") {
    std::mt19937 rng(5);
    for (int t = 0; t < 30; ++t) {
      Obj x = gen::random_unary(rng, 3), y = gen::random_unary(rng, 3), z = gen::random_unary(rng, 4);
      auto fs = hom_set(x, y);
      auto gs = hom_set(y, z);
      auto xz = hom_set(x, z);
      for (const auto& f : fs)
        for (const auto& g : gs) CHECK(std::find(xz.begin(), xz.end(), compose(g, f)) != xz.end());
    }
  }
}

TEST_SUITE("factorization") {
  TEST_CASE("identity factors as identities") {
    Obj x = cycle(3);
    auto fe = factorize(identity(x));
    CHECK(fe.epi == identity(x));
    CHECK(fe.mono == identity(x));
  }

  TEST_CASE("constant map 3 -> 3 has a one-point image") {
    auto f = make_mor(finset(3), finset(3), {{1, 1, 1}});
    CHECK(factorize(f).mono.dom.total_size() == 1);
  }

  TEST_CASE("collapsing a path keeps only image edges") {
    // Target has all four edges on two vertices; the path lands on vertex 0.
    Obj k2 = graph(2, {{0, 0}, {0, 1}, {1, 0}, {1, 1}});
    auto f = make_mor(path(3), k2, {{0, 0, 0}});
    auto fe = factorize(f);
    CHECK(fe.mono.dom.total_size() == 1);
    CHECK(fe.mono.dom.edges.size() == 1);
    // Zig-zag onto a 2-cycle: image uses both edges of the 2-cycle only.
    auto g = make_mor(path(3), k2, {{0, 1, 0}});
    CHECK(factorize(g).mono.dom.edges == std::vector<Edge>{{0, 1}, {1, 0}});
  }

  TEST_CASE("m . e = f and diagonal fill-in on random morphisms") {
    std::mt19937 rng(13);
    for (int t = 0; t < 40; ++t) {
      Obj x = gen::random_graph(rng, 3, 0.3), y = gen::random_graph(rng, 3, 0.6);
      auto f = gen::random_hom(rng, x, y);
      if (!f) continue;
      auto fe = factorize(*f);
      CHECK(compose(fe.mono, fe.epi) == *f);
      CHECK(is_mono(fe.mono));
      CHECK(is_strong_epi(fe.epi));
      // Fill-in: for any square v.e = m'.u with m' mono, a diagonal exists.
      for (const auto& m2 : subobjects(y, 3)) {
        auto us = hom_set(fe.epi.dom, m2.dom);
        for (const auto& u : us) {
          if (!(compose(m2, u) == compose(identity(y), *f))) continue;
          bool found = false;
          for (const auto& d : hom_set(fe.epi.cod, m2.dom))
            if (compose(d, fe.epi) == u && compose(m2, d) == fe.mono) found = true;
          CHECK(found);
        }
      }
    }
  }
}

TEST_SUITE("mono and epi") {
  TEST_CASE("injective finset map is mono") {
    auto f = make_mor(finset(2), finset(3), {{0, 2}});
    CHECK(is_mono(f));
    CHECK(is_mono_by_probe(f));
    CHECK_FALSE(is_epi(f));
    CHECK_FALSE(is_epi_by_probe(f));
  }

  TEST_CASE("surjective unary hom is epi") {
    auto f = hom_set(cycle(6), cycle(3)).front();
    CHECK(is_epi(f));
    CHECK(is_epi_by_probe(f));
  }

  TEST_CASE("C4 -> C2 is epi but not mono") {
    auto f = hom_set(cycle(4), cycle(2)).front();
    CHECK(is_epi(f));
    CHECK_FALSE(is_mono(f));
    CHECK(is_epi_by_probe(f));
    CHECK_FALSE(is_mono_by_probe(f));
  }

  TEST_CASE("declared answers match cancellation probes on random morphisms") {
    std::mt19937 rng(17);
    for (int t = 0; t < 25; ++t) {
      Obj x = gen::random_unary(rng, 3), y = gen::random_unary(rng, 3);
      if (auto f = gen::random_hom(rng, x, y)) {
        CHECK(is_mono(*f) == is_mono_by_probe(*f, 2));
        CHECK(is_epi(*f) == is_epi_by_probe(*f, 2));
      }
      Obj g = gen::random_graph(rng, 3, 0.3), h = gen::random_graph(rng, 3, 0.5);
      if (auto f = gen::random_hom(rng, g, h)) {
        CHECK(is_mono(*f) == is_mono_by_probe(*f, 2));
        CHECK(is_epi(*f) == is_epi_by_probe(*f, 2));
      }
    }
  }

  TEST_CASE("presheaf probes") {
    auto z2 = FiniteGroupoid::cyclic(2);
    Obj reg = representable(z2, 0);
    Obj pt = terminal_object(Category::presheaf(z2));
    auto f = to_terminal(reg, pt);
    CHECK(is_epi_by_probe(f));
    CHECK_FALSE(is_mono_by_probe(f));
  }
}

TEST_SUITE("finite colimits") {
  TEST_CASE("empty coproduct is initial") {
    auto c = coproduct(Category::unary(), {});
    CHECK(c.object.total_size() == 0);
    CHECK(hom_count(c.object, cycle(3)) == 1);
  }

  TEST_CASE("C2 + C3 has five elements and two cycles") {
    auto c = coproduct(Category::unary(), {cycle(2), cycle(3)});
    CHECK(c.object.total_size() == 5);
    CHECK(cycle_lengths(c.object) == std::vector<int>{2, 3});
  }

  TEST_CASE("edge + edge") {
    auto c = coproduct(Category::graph(), {path(2), path(2)});
    CHECK(c.object.total_size() == 4);
    CHECK(c.object.edges.size() == 2);
  }

  TEST_CASE("copairing satisfies the universal property on probes") {
    auto c = coproduct(Category::unary(), {cycle(2), cycle(3)});
    Obj z = coproduct(Category::unary(), {cycle(6), cycle(1)}).object;
    for (const auto& a : hom_set(cycle(2), z))
      for (const auto& b : hom_set(cycle(3), z)) {
        Mor ab = copair(c, {a, b});
        CHECK(compose(ab, c.injections[0]) == a);
        CHECK(compose(ab, c.injections[1]) == b);
        int agreeing = 0;
        for (const auto& h : hom_set(c.object, z))
          if (compose(h, c.injections[0]) == a && compose(h, c.injections[1]) == b) ++agreeing;
        CHECK(agreeing == 1);
      }
  }

  TEST_CASE("coequalizer of f with itself is the identity quotient") {
    auto f = hom_set(cycle(4), cycle(2)).front();
    auto q = coequalizer(f, f);
    CHECK(is_iso(q));
  }

  TEST_CASE("two distinct constants 1 => 2 coequalize to a point") {
    auto a = make_mor(finset(1), finset(2), {{0}});
    auto b = make_mor(finset(1), finset(2), {{1}});
    CHECK(coequalizer(a, b).cod.total_size() == 1);
  }

  TEST_CASE("kernel pair of C4 -> C2 has eight elements") {
    auto f = hom_set(cycle(4), cycle(2)).front();
    auto kp = kernel_pair(f);
    CHECK(kp.object.total_size() == 8);
    CHECK(compose(f, kp.p1) == compose(f, kp.p2));
  }

  TEST_CASE("coequalizer of the kernel pair recovers a surjection") {
    std::mt19937 rng(23);
    auto z2 = FiniteGroupoid::cyclic(2);
    for (int t = 0; t < 30; ++t) {
      std::vector<std::pair<Obj, Obj>> pairs = {
          {finset(gen::uniform(rng, 1, 6)), finset(gen::uniform(rng, 1, 4))},
          {gen::random_unary(rng, gen::uniform(rng, 1, 6)), gen::random_unary(rng, gen::uniform(rng, 1, 3))},
          {gen::random_presheaf(rng, z2, 6), gen::random_presheaf(rng, z2, 4)},
      };
      for (auto& [x, y] : pairs) {
        for (const auto& f : hom_set(x, y)) {
          if (!is_epi(f)) continue;
          auto kp = kernel_pair(f);
          auto q = coequalizer(kp.p1, kp.p2);
          CHECK(isomorphic(q.cod, y));
          // The induced map Q -> Y is an isomorphism.
          Maps m(y.sort_count());
          for (int s = 0; s < y.sort_count(); ++s) {
            m[s].assign(q.cod.sizes[s], -1);
            for (int i = 0; i < x.sizes[s]; ++i) m[s][q.maps[s][i]] = f.maps[s][i];
          }
          CHECK(is_iso(make_mor(q.cod, y, m)));
          break;
        }
      }
    }
  }
}

TEST_SUITE("chains and subobjects") {
  TEST_CASE("single-object chain has the identity cocone") {
    Chain c{{cycle(2)}, {}};
    auto cc = chain_colimit(c);
    REQUIRE(cc.legs.size() == 1);
    CHECK(cc.legs[0] == identity(cycle(2)));
  }

  TEST_CASE("prime-cycle prefix colimit is the last object") {
    auto sym = prime_cycle_chain(3);
    auto cc = chain_colimit(sym.chain);
    CHECK(std::get<Obj>(cc.apex).total_size() == 10);
    CHECK(cc.legs[0].dom.total_size() == 2);
    for (const auto& leg : cc.legs) CHECK(is_mono(leg));
  }

  TEST_CASE("formal colimit legs are summand inclusions into the window") {
    auto sym = prime_cycle_chain(3);
    CHECK(std::get<SymbolicObject>(sym.apex).kind == SymbolicKind::CycleFamily);
    for (std::size_t i = 0; i < sym.legs.size(); ++i) {
      CHECK(is_mono(sym.legs[i]));
      CHECK(sym.legs[i].cod.total_size() == 28);
      if (i + 1 < sym.legs.size()) CHECK(compose(sym.legs[i + 1], sym.chain.links[i]) == sym.legs[i]);
    }
  }

  TEST_CASE("subobjects of a 2-set") { CHECK(subobjects(finset(2), 2).size() == 4); }

  TEST_CASE("C4 has only the empty and full subalgebras") {
    auto subs = subobjects(cycle(4), 4);
    REQUIRE(subs.size() == 2);
    CHECK(subs[0].dom.total_size() == 0);
    CHECK(subs[1].dom.total_size() == 4);
  }

  TEST_CASE("graph subobjects are not necessarily induced") {
    // One edge: empty, two single vertices, both vertices without / with edge.
    CHECK(subobjects(path(2), 2).size() == 5);
  }

  TEST_CASE("ray subobjects with bound 3 include every short sub-path") {
    auto subs = subobjects_fg(ray(8), 3);
    CHECK(subs.exhausted);
    int paths = 0;
    for (const auto& m : subs.items) {
      const Obj& d = m.dom;
      bool is_path = d.total_size() >= 1 && static_cast<int>(d.edges.size()) == d.total_size() - 1;
      for (int i = 0; i + 1 < static_cast<int>(m.maps[0].size()); ++i)
        if (m.maps[0][i + 1] != m.maps[0][i] + 1) is_path = false;
      if (is_path) ++paths;
    }
    CHECK(paths == 8 + 7 + 6);
  }

  TEST_CASE("cycle family window and hom decisions") {
    auto cf = cycle_family();
    CHECK(cf.window_primes() == std::vector<int>{2, 3, 5, 7, 11});
    CHECK(hom_exists_into(cycle(6), cf));
    CHECK_FALSE(hom_exists_into(cycle(1), cf));
    auto h = hom_into(cycle(5), cf);
    CHECK(h.items.size() == 5);
    CHECK_FALSE(h.exhausted);
    CHECK(hom_into(cycle(13), cf).exhausted);
  }

  TEST_CASE("ray hom decisions") {
    CHECK(hom_exists_into(path(40), ray()));
    CHECK_FALSE(hom_exists_into(graph(2, {{0, 1}, {1, 0}}), ray()));
    CHECK_FALSE(hom_exists_into(terminal_graph(), ray()));
    CHECK(hom_exists_into(terminal_graph(), loop_ray()));
    // A triangle with a shortcut has no consistent height function.
    CHECK_FALSE(hom_exists_into(graph(3, {{0, 1}, {1, 2}, {0, 2}}), ray()));
  }
}
