#include <doctest.h>

#include <random>

#include "finbound/strictness.hpp"
#include "gen.hpp"
#include "oracles.hpp"

using namespace finbound;
using namespace finbound::cats;
using namespace finbound::strictness;

TEST_SUITE("finitary morphisms") {
  TEST_CASE("identity on a finite object factors through itself") {
    std::vector<Obj> xs{cycle(3), path(4), finset(2), unary({1, 1, 0})};
    for (const auto& x : xs) {
      auto r = finitary_morphism_witness(identity(x), x.total_size());
      REQUIRE(r.witness);
      CHECK(r.witness->holds());
      CHECK(r.witness->v.cod.total_size() == x.total_size());
    }
  }

  TEST_CASE("image larger than the bound is exhausted") {
    auto r = finitary_morphism_witness(identity(path(4)), 3);
    CHECK_FALSE(r.witness);
    CHECK(r.exhausted);
  }

  TEST_CASE("constant endo of the loop ray factors through the loop vertex") {
    SymbolicEndo u{loop_ray(), SymbolicEndoKind::Constant};
    auto r = finitary_morphism_witness(u, 1);
    REQUIRE(r.witness);
    CHECK(r.witness->holds());
    CHECK(r.witness->v.cod == terminal_graph());
  }

  TEST_CASE("ray shift and identity are exhausted with the advance certificate") {
    for (auto kind : {SymbolicEndoKind::Identity, SymbolicEndoKind::Shift}) {
      auto r = finitary_morphism_witness(SymbolicEndo{ray(), kind}, 8);
      CHECK_FALSE(r.witness);
      CHECK(r.exhausted);
      REQUIRE(r.certificate);
      CHECK(r.certificate->rows.size() == 8);
      CHECK(r.certificate->holds());
    }
    auto lr = finitary_morphism_witness(SymbolicEndo{loop_ray(), SymbolicEndoKind::Shift}, 8);
    CHECK(lr.exhausted);
  }

  TEST_CASE("ray advance table counts window translates") {
    auto cert = ray_advance_certificate(8, 20);
    for (const auto& row : cert.rows) CHECK(row.homs_in_window == static_cast<std::size_t>(20 - row.k + 1));
  }

  TEST_CASE("constant endo needs the loop vertex") {
    CHECK_THROWS_AS(SymbolicEndo({ray(), SymbolicEndoKind::Constant}).restrict_to_window(), PreconditionError);
  }
}

TEST_SUITE("strictness witnesses") {
  TEST_CASE("FinSet injection 2 -> 3 is split") {
    auto b = make_mor(finset(2), finset(3), {{0, 2}});
    auto r = strictness_witness(b, 3);
    REQUIRE(r.witness);
    CHECK(r.witness->holds());
    CHECK(r.witness->bprime.dom.size() == 2);
  }

  TEST_CASE("FinSet empty domain uses a point") {
    auto r = strictness_witness(from_empty(finset(3)), 1);
    REQUIRE(r.witness);
    CHECK(r.witness->construction == "point");
    CHECK(r.witness->bprime.dom.size() == 1);
    CHECK(r.witness->holds());
    auto e = strictness_witness(from_empty(finset(0)), 0);
    REQUIRE(e.witness);
    CHECK(e.witness->holds());
  }

  TEST_CASE("FinSet strictness is total on small maps") {
    int checked = 0;
    for (int d = 0; d <= 4; ++d)
      for (int c = 0; c <= 5; ++c)
        for (const auto& t : all_functions(d, c)) {
          auto b = make_mor(finset(d), finset(c), {t});
          auto r = strictness_witness(b, std::max(d, 1));
          REQUIRE(r.witness);
          CHECK(r.witness->holds());
          CHECK(r.witness->bprime.dom.size() <= std::max(d, 1));
          ++checked;
        }
    CHECK(checked == 1 + 1 + 1 + 1 + 1 + 1 + 0 + 1 + 2 + 3 + 4 + 5 + 0 + 1 + 4 + 9 + 16 + 25 + 0 + 1 + 8 + 27 + 64 +
                         125 + 0 + 1 + 16 + 81 + 256 + 625);
  }

  TEST_CASE("Z2-set: free orbit into two free orbits folds the second") {
    auto g = FiniteGroupoid::cyclic(2);
    auto sum = coproduct(Category::presheaf(g), {representable(g, 0), representable(g, 0)});
    auto r = strictness_witness(sum.injections[0], 2);
    REQUIRE(r.witness);
    CHECK(r.witness->construction == "orbit-fold");
    CHECK(r.witness->bprime.dom.total_size() == 2);
    CHECK(r.witness->holds());
  }

  TEST_CASE("presheaf fold keeps non-isomorphic orbits that have no map across") {
    // A fixed point maps to nothing free, so it stays in B'.
    auto g = FiniteGroupoid::cyclic(2);
    Obj fixed = terminal_object(Category::presheaf(g));
    auto sum = coproduct(Category::presheaf(g), {representable(g, 0), fixed});
    auto r = strictness_witness(sum.injections[0], 3);
    REQUIRE(r.witness);
    CHECK(r.witness->bprime.dom.total_size() == 3);
    CHECK(r.witness->holds());
    CHECK(strictness_witness(sum.injections[0], 2).exhausted);
  }

  TEST_CASE("random presheaf embeddings have fold witnesses") {
    std::mt19937 rng(11);
    for (auto g : {FiniteGroupoid::cyclic(2), FiniteGroupoid::cyclic(3), FiniteGroupoid::symmetric3(),
                   FiniteGroupoid::codiscrete(2)}) {
      for (int t = 0; t < 15; ++t) {
        Obj a = gen::random_presheaf(rng, g, 8);
        if (a.total_size() == 0) continue;
        auto subs = subobjects(a, a.total_size());
        const Mor& b = subs[gen::uniform(rng, 0, static_cast<int>(subs.size()) - 1)];
        auto r = strictness_witness(b, a.total_size());
        REQUIRE(r.witness);
        CHECK(r.witness->holds());
      }
    }
  }

  TEST_CASE("unary retract search") {
    Obj a = coproduct(Category::unary(), {cycle(2), cycle(1)}).object;
    auto b = make_mor(cycle(1), a, {{2}});
    auto r = strictness_witness(b, 1);
    REQUIRE(r.witness);
    CHECK(r.witness->construction == "retract-search");
    CHECK(r.witness->holds());

    Obj a2 = coproduct(Category::unary(), {cycle(2), cycle(3)}).object;
    auto b2 = make_mor(cycle(2), a2, {{0, 1}});
    CHECK(strictness_witness(b2, 4).exhausted);
    auto r2 = strictness_witness(b2, 5);
    REQUIRE(r2.witness);
    CHECK(r2.witness->holds());
  }

  TEST_CASE("graph retract onto a loop") {
    Obj a = graph(3, {{0, 0}, {0, 1}, {1, 2}});
    auto b = make_mor(terminal_graph(), a, {{0}});
    auto r = strictness_witness(b, 1);
    REQUIRE(r.witness);
    CHECK(r.witness->holds());
    CHECK(r.witness->f.maps[0] == std::vector<int>{0, 0, 0});
  }

  TEST_CASE("symbolic codomain is exhausted") {
    CHECK(strictness_witness(cycle(2), cycle_family(), 10).exhausted);
    CHECK_THROWS_AS(strictness_witness(cycle(2), ray(), 10), PreconditionError);
  }

  TEST_CASE("F_q-Vec split through the image") {
    std::mt19937 rng(3);
    for (int q : {2, 3})
      for (int t = 0; t < 30; ++t) {
        const int n = gen::uniform(rng, 0, 3), m = gen::uniform(rng, 0, 4);
        fqvec::Matrix a(m, std::vector<int>(n));
        for (auto& row : a)
          for (int& v : row) v = gen::uniform(rng, 0, q - 1);
        auto b = fqvec::make_map(q, n, m, a);
        auto w = strictness_witness(b);
        CHECK(w.holds());
        CHECK(w.bprime.dom_dim == fqvec::rank(q, a));
      }
  }
}

TEST_SUITE("semi-strictness") {
  TEST_CASE("finite objects use the identity") {
    auto r = semistrictness_witness(AnyObject{cycle(5)}, 1);
    REQUIRE(r.witness);
    CHECK(r.witness->factorization.holds());
  }

  TEST_CASE("loop ray uses the constant endo") {
    auto r = semistrictness_witness(AnyObject{loop_ray()}, 1);
    REQUIRE(r.witness);
    CHECK(r.witness->factorization.holds());
    CHECK(r.witness->factorization.v.cod.total_size() == 1);
  }

  TEST_CASE("ray and cycle family are exhausted at every bound") {
    for (int bound = 0; bound <= 8; ++bound) {
      CHECK(semistrictness_witness(AnyObject{ray()}, bound).exhausted);
      CHECK(semistrictness_witness(AnyObject{cycle_family()}, bound).exhausted);
    }
  }
}

TEST_SUITE("fixed subobjects") {
  TEST_CASE("identity is fixed by the identity") {
    Obj x = cycle(3);
    auto w = fixed_subobject_witness(identity(x), 3);
    REQUIRE(w);
    CHECK(w->holds());
    CHECK(w->u == identity(x));
  }

  TEST_CASE("point of a 3-set is fixed by the constant map") {
    auto m = make_mor(finset(1), finset(3), {{1}});
    auto w = fixed_subobject_witness(m, 1);
    REQUIRE(w);
    CHECK(w->holds());
    CHECK(w->u.maps[0] == std::vector<int>{1, 1, 1});
  }

  TEST_CASE("line in F_2^3 is fixed by a rank-one projection") {
    auto m = fqvec::make_map(2, 1, 3, {{1}, {1}, {0}});
    auto w = fixed_subobject_witness(m);
    CHECK(w.holds());
    CHECK(fqvec::rank(2, w.u.a) == 1);
  }

  TEST_CASE("non-mono is rejected") {
    CHECK_THROWS_AS(fixed_subobject_witness(make_mor(finset(2), finset(1), {{0, 0}}), 2), PreconditionError);
  }
}

TEST_SUITE("atoms") {
  TEST_CASE("atom counts agree with brute-force congruences") {
    struct Case {
      std::shared_ptr<const FiniteGroupoid> g;
      std::size_t expect;
    };
    std::vector<Case> cases{{FiniteGroupoid::trivial(), 1},
                            {FiniteGroupoid::cyclic(2), 2},
                            {FiniteGroupoid::cyclic(3), 2},
                            {FiniteGroupoid::symmetric3(), 4},
                            {FiniteGroupoid::cyclic(4), 3},
                            {FiniteGroupoid::codiscrete(2), 1}};
    for (const auto& c : cases) {
      auto atoms = atoms_of_presheaves(c.g);
      CHECK(atoms.size() == c.expect);
      // Oracle: every quotient of every representable, up to isomorphism.
      std::vector<Obj> brute;
      for (int x = 0; x < c.g->object_count(); ++x)
        for (const auto& q : oracle::quotients(representable(c.g, x))) {
          bool seen = false;
          for (const auto& o : brute) seen |= oracle::isomorphic(o, q);
          if (!seen) brute.push_back(q);
        }
      CHECK(brute.size() == atoms.size());
      for (const auto& a : atoms) {
        CHECK(is_atom(a));
        bool found = false;
        for (const auto& o : brute) found |= oracle::isomorphic(o, a);
        CHECK(found);
      }
    }
  }

  TEST_CASE("subgroups of the vertex group") {
    CHECK(vertex_subgroups(*FiniteGroupoid::symmetric3(), 0).size() == 6);
    CHECK(vertex_subgroups(*FiniteGroupoid::cyclic(4), 0).size() == 3);
    CHECK(vertex_subgroups(*FiniteGroupoid::trivial(), 0).size() == 1);
  }

  TEST_CASE("coproducts of two orbits are not atoms") {
    auto g = FiniteGroupoid::cyclic(3);
    auto sum = coproduct(Category::presheaf(g), {representable(g, 0), representable(g, 0)}).object;
    CHECK_FALSE(is_atom(sum));
    CHECK_FALSE(is_atom(empty_object(Category::presheaf(g))));
  }
}

TEST_SUITE("atom decomposition") {
  TEST_CASE("singleton presheaf is its own decomposition") {
    Obj one = terminal_object(Category::presheaf(FiniteGroupoid::cyclic(2)));
    auto parts = decompose_into_atoms(one);
    REQUIRE(parts.size() == 1);
    CHECK(parts[0].dom == one);
  }

  TEST_CASE("free orbit plus fixed point gives two summands") {
    auto g = FiniteGroupoid::cyclic(2);
    Obj x = coproduct(Category::presheaf(g), {representable(g, 0), terminal_object(Category::presheaf(g))}).object;
    CHECK(decompose_into_atoms(x).size() == 2);
  }

  TEST_CASE("two regular Z3-orbits give two summands") {
    auto g = FiniteGroupoid::cyclic(3);
    Obj x = coproduct(Category::presheaf(g), {representable(g, 0), representable(g, 0)}).object;
    CHECK(decompose_into_atoms(x).size() == 2);
  }

  TEST_CASE("random G-sets are the coproduct of their atoms") {
    std::mt19937 rng(17);
    for (auto g : {FiniteGroupoid::cyclic(2), FiniteGroupoid::cyclic(3), FiniteGroupoid::symmetric3()}) {
      for (int t = 0; t < 20; ++t) {
        Obj x = gen::random_presheaf(rng, g, 8);
        auto parts = decompose_into_atoms(x);
        std::vector<Obj> doms;
        for (const auto& p : parts) {
          CHECK(is_atom(p.dom));
          doms.push_back(p.dom);
        }
        CHECK(isomorphic(coproduct(Category::presheaf(g), doms).object, x));
        // The canonical copairing of the inclusions is itself the isomorphism.
        auto sum = coproduct(Category::presheaf(g), doms);
        CHECK(is_iso(copair(sum, parts)));
      }
    }
  }

  TEST_CASE("split quotients of finite objects are finite retracts") {
    std::mt19937 rng(23);
    for (int t = 0; t < 30; ++t) {
      Obj x = gen::random_unary(rng, gen::uniform(rng, 1, 5));
      for (const auto& e : hom_set(x, x)) {
        if (compose(e, e) != e) continue;
        auto fac = factorize(e);
        CHECK(compose(fac.epi, fac.mono) == identity(fac.epi.cod));
        CHECK(fac.epi.cod.total_size() <= x.total_size());
      }
    }
  }
}

TEST_SUITE("no finitary endo certificates") {
  TEST_CASE("cycle family: prime hom table") {
    auto c = no_finitary_endo_certificate(cycle_family());
    CHECK_FALSE(c.refused);
    CHECK(c.holds);
    REQUIRE(c.primes.size() == 9);
    CHECK(c.primes.back() == 23);
    for (std::size_t i = 0; i < 9; ++i)
      for (std::size_t j = 0; j < 9; ++j)
        CHECK(c.prime_hom_table[i][j] == (i == j ? static_cast<std::size_t>(c.primes[i]) : 0u));
  }

  TEST_CASE("ray: advance table up to 8") {
    auto c = no_finitary_endo_certificate(ray());
    CHECK(c.holds);
    REQUIRE(c.ray);
    CHECK(c.ray->rows.size() == 8);
  }

  TEST_CASE("loop ray is refused") {
    auto c = no_finitary_endo_certificate(loop_ray());
    CHECK(c.refused);
    CHECK_FALSE(c.holds);
  }
}
