#include <doctest.h>

#include <random>
#include <set>

#include "finbound/nominal.hpp"

using namespace finbound;
using namespace finbound::nominal;
using colimit::Verdict;

namespace {

/// Subgroups of Perm(n) as closed subsets of the element list: a subset
/// containing the identity and closed under products.
std::size_t brute_subgroup_count(int n) {
  const auto perms = all_perms(n);
  const int m = static_cast<int>(perms.size());
  std::vector<std::vector<int>> mult(m, std::vector<int>(m));
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b) {
      Perm c(n);
      for (int i = 0; i < n; ++i) c[i] = perms[a][perms[b][i]];
      mult[a][b] = static_cast<int>(std::find(perms.begin(), perms.end(), c) - perms.begin());
    }
  std::size_t count = 0;
  // Element 0 is the identity and is always present.
  for (std::uint32_t rest = 0; rest < (1u << (m - 1)); ++rest) {
    const std::uint32_t mask = 1u | (rest << 1);
    bool closed = true;
    for (int a = 1; a < m && closed; ++a) {
      if (!(mask >> a & 1)) continue;
      for (int b = 1; b < m; ++b)
        if ((mask >> b & 1) && !(mask >> mult[a][b] & 1)) {
          closed = false;
          break;
        }
    }
    if (closed) ++count;
  }
  return count;
}

/// Conjugacy classes of subgroups, by conjugating with every permutation.
std::size_t conjugacy_classes(int n) {
  const auto subs = subgroups_of_Sn(n);
  std::set<std::vector<Perm>> seen;
  std::size_t classes = 0;
  for (const auto& s : subs) {
    if (seen.count(s)) continue;
    ++classes;
    for (const Perm& g : all_perms(n)) {
      std::vector<Perm> c;
      for (const Perm& h : s) {
        Perm gi(n), r(n);
        for (int i = 0; i < n; ++i) gi[g[i]] = i;
        for (int i = 0; i < n; ++i) r[i] = g[h[gi[i]]];
        c.push_back(r);
      }
      std::sort(c.begin(), c.end());
      seen.insert(c);
    }
  }
  return classes;
}

Perm random_pool_perm(std::mt19937& rng, int pool) {
  Perm p = perm_identity(pool);
  std::shuffle(p.begin(), p.end(), rng);
  return p;
}

}  // namespace

TEST_SUITE("permutations and subgroups") {
  TEST_CASE("composition and inverse") {
    Perm p{1, 2, 0}, q{0, 2, 1};
    CHECK(perm_compose(p, q) == Perm{1, 0, 2});
    CHECK(perm_compose(p, perm_inverse(p)) == perm_identity(3));
    CHECK(all_perms(4).size() == 24);
    CHECK(closure(3, {p}).size() == 3);
    CHECK(closure(3, {p, q}).size() == 6);
  }

  TEST_CASE("subgroup counts") {
    const std::vector<std::size_t> expect{1, 1, 2, 6, 30, 156};
    for (int n = 0; n <= 5; ++n) CHECK(subgroups_of_Sn(n).size() == expect[n]);
    CHECK_THROWS_AS(subgroups_of_Sn(6), PreconditionError);
  }

  TEST_CASE("subgroup counts match closed-subset enumeration") {
    for (int n = 1; n <= 4; ++n) CHECK(subgroups_of_Sn(n).size() == brute_subgroup_count(n));
  }

  TEST_CASE("every listed subgroup is closed and listed once") {
    for (int n = 0; n <= 4; ++n) {
      auto subs = subgroups_of_Sn(n);
      std::set<std::vector<Perm>> uniq(subs.begin(), subs.end());
      CHECK(uniq.size() == subs.size());
      for (const auto& s : subs) CHECK(closure(n, s) == s);
    }
  }

  TEST_CASE("parallel enumeration matches serial") {
    for (int n = 0; n <= 5; ++n) CHECK(subgroups_of_Sn(n) == serial::subgroups_of_Sn(n));
  }
}

TEST_SUITE("orbits and supports") {
  TEST_CASE("supports") {
    NominalSetSpec p2 = p_sum({2});
    CHECK(support(make_element(p2, 0, {5, 2})) == std::vector<int>{2, 5});
    NominalSetSpec v3 = single(tuples_orbit(3));
    CHECK(support(make_element(v3, 0, {4, 0, 2})) == std::vector<int>{0, 2, 4});
  }

  TEST_CASE("element counts over a pool") {
    CHECK(elements(p_sum({2}), 5).size() == 10);
    CHECK(elements(single(tuples_orbit(2)), 5).size() == 20);
    CHECK(elements(p_sum({1, 2, 3}), 10).size() == 10 + 45 + 120);
    CHECK(elements(one_point(), 3).size() == 1);
  }

  TEST_CASE("supp is equivariant") {
    std::mt19937 rng(4);
    std::vector<NominalSetSpec> xs{p_sum({1, 2, 3}), single(tuples_orbit(3)),
                                   single(orbit_spec(3, {Perm{1, 2, 0}}))};
    for (const auto& x : xs)
      for (const auto& e : elements(x, 6))
        for (int t = 0; t < 3; ++t) {
          Perm pi = random_pool_perm(rng, 6);
          std::vector<int> moved;
          for (int v : support(e)) moved.push_back(pi[v]);
          std::sort(moved.begin(), moved.end());
          CHECK(support(act(x, pi, e)) == moved);
        }
  }

  TEST_CASE("every enumerated orbit has support exactly n") {
    for (int n = 0; n <= 3; ++n)
      for (const auto& o : single_orbit_enumerate(n)) {
        const NominalSetSpec x = single(o);
        const int pool = 2 * n + 2;
        for (const auto& e : elements(x, pool)) {
          auto s = support(e);
          for (int a = 0; a < pool; ++a)
            for (int b = a + 1; b < pool; ++b) {
              const bool ina = std::binary_search(s.begin(), s.end(), a);
              const bool inb = std::binary_search(s.begin(), s.end(), b);
              const bool fixed = act(x, transposition(pool, a, b), e) == e;
              // Swapping a support name with an outside name always moves e.
              if (ina != inb) CHECK_FALSE(fixed);
              if (!ina && !inb) CHECK(fixed);
            }
        }
      }
  }
}

TEST_SUITE("equivariant maps") {
  TEST_CASE("identity is equivariant") {
    auto x = p_sum({1, 2});
    CHECK(equivariant_map_check(x, x, identity_map(x).as_function(), 6));
  }

  TEST_CASE("P_2 -> P_1 picking the smaller name is not equivariant") {
    auto p2 = p_sum({2}), p1 = p_sum({1});
    ElementMap f = [](const NomElement& e) { return NomElement{0, {std::min(e.t[0], e.t[1])}}; };
    CHECK_FALSE(equivariant_map_check(p2, p1, f, 6));
    CHECK(admissible_images(pn_orbit(2), p1).empty());
  }

  TEST_CASE("image map V^{#2} -> P_2 is equivariant") {
    auto v2 = single(tuples_orbit(2)), p2 = p_sum({2});
    ElementMap f = [](const NomElement& e) { return NomElement{0, support(e)}; };
    CHECK(equivariant_map_check(v2, p2, f, 6));
    auto m = make_map(v2, p2, {NomElement{0, {0, 1}}});
    for (const auto& e : elements(v2, 6)) CHECK(m(e) == f(e));
  }

  TEST_CASE("pool too small is rejected") {
    auto x = p_sum({2});
    CHECK_THROWS_AS(equivariant_map_check(x, x, identity_map(x).as_function(), 5), PreconditionError);
  }

  TEST_CASE("structured maps pass the transposition check and shrink supports") {
    std::vector<NominalSetSpec> xs{p_sum({1, 2}), single(tuples_orbit(2)), one_point(),
                                   coproduct(one_point(), p_sum({1})), single(orbit_spec(3, {Perm{1, 2, 0}}))};
    for (const auto& a : xs)
      for (const auto& b : xs) {
        const int pool = required_pool(a, b);
        for (const auto& f : equivariant_maps(a, b)) {
          CHECK(equivariant_map_check(a, b, f.as_function(), pool));
          for (const auto& e : elements(a, pool)) {
            auto sf = support(f(e)), se = support(e);
            CHECK(std::includes(se.begin(), se.end(), sf.begin(), sf.end()));
          }
        }
      }
  }

  TEST_CASE("composition of structured maps") {
    auto v2 = single(tuples_orbit(2)), p2 = p_sum({2});
    auto f = make_map(v2, v2, {NomElement{0, {1, 0}}});  // swap
    auto g = make_map(v2, p2, {NomElement{0, {0, 1}}});
    auto gf = compose(g, f);
    for (const auto& e : elements(v2, 6)) CHECK(gf(e) == g(f(e)));
    CHECK(compose(f, f) == identity_map(v2));
  }

  TEST_CASE("hom from P_n") {
    CHECK(hom_exists_Pn(1, single(tuples_orbit(1))));
    CHECK(hom_exists_Pn(2, one_point()));
    CHECK_FALSE(hom_exists_Pn(2, p_sum({1})));
    CHECK_FALSE(hom_exists_Pn(4, p_sum({1, 2, 3})));
    CHECK(hom_exists_Pn(3, p_sum({1, 2, 3})));
    // V^{#2} has no element fixed by the swap.
    CHECK_FALSE(hom_exists_Pn(2, single(tuples_orbit(2))));
  }
}

TEST_SUITE("single-orbit classification") {
  TEST_CASE("iso-class counts") {
    const std::vector<std::size_t> expect{1, 1, 2, 4, 11};
    for (int n = 0; n <= 4; ++n) CHECK(single_orbit_enumerate(n).size() == expect[n]);
  }

  TEST_CASE("iso classes match conjugacy classes of subgroups") {
    for (int n = 0; n <= 3; ++n) CHECK(single_orbit_enumerate(n).size() == conjugacy_classes(n));
  }

  TEST_CASE("conjugate subgroups give isomorphic orbits") {
    auto a = orbit_spec(3, {Perm{1, 0, 2}});
    auto b = orbit_spec(3, {Perm{0, 2, 1}});
    auto c = orbit_spec(3, {Perm{1, 2, 0}});
    auto iso = orbit_isomorphism(a, b);
    REQUIRE(iso);
    CHECK(equivariant_map_check(iso->dom, iso->cod, iso->as_function(), 8));
    CHECK_FALSE(orbits_isomorphic(a, c));
    CHECK_FALSE(orbits_isomorphic(pn_orbit(2), tuples_orbit(2)));
  }
}

TEST_SUITE("subgroups from quotients") {
  TEST_CASE("identity equivalence gives the trivial subgroup") {
    auto s = subgroup_from_quotient(2, [](const Tuple& t, const Tuple& u) { return t == u; });
    CHECK(s == std::vector<Perm>{perm_identity(2)});
  }

  TEST_CASE("same-image equivalence on V^{#2} gives S_2") {
    auto s = subgroup_from_quotient(2, [](const Tuple& t, const Tuple& u) {
      return support(NomElement{0, t}) == support(NomElement{0, u});
    });
    CHECK(s.size() == 2);
  }

  TEST_CASE("subgroup -> equivalence -> subgroup is the identity") {
    for (int n = 0; n <= 3; ++n)
      for (const auto& s : subgroups_of_Sn(n)) CHECK(subgroup_from_quotient(n, equivalence_from_subgroup(s)) == s);
  }

  TEST_CASE("equivalence -> subgroup -> equivalence is the identity") {
    for (int n = 0; n <= 3; ++n)
      for (const auto& s : subgroups_of_Sn(n)) {
        auto eq = equivalence_from_subgroup(s);
        auto eq2 = equivalence_from_subgroup(subgroup_from_quotient(n, eq));
        auto x = single(tuples_orbit(n));
        for (const auto& a : elements(x, 2 * n + 2))
          for (const auto& b : elements(x, 2 * n + 2)) CHECK(eq(a.t, b.t) == eq2(a.t, b.t));
      }
  }

  TEST_CASE("non-equivariant relation is rejected") {
    auto bad = [](const Tuple& t, const Tuple& u) {
      if (t == u) return true;
      const Tuple a{0, 1}, b{1, 0};
      return (t == a && u == b) || (t == b && u == a);
    };
    CHECK_THROWS_AS(subgroup_from_quotient(2, bad), PreconditionError);
  }

  TEST_CASE("support-collapsing relation is rejected") {
    auto all = [](const Tuple&, const Tuple&) { return true; };
    CHECK_THROWS_AS(subgroup_from_quotient(1, all), PreconditionError);
  }
}

TEST_SUITE("nominal counterexample functor") {
  TEST_CASE("F(P_1) = 1 + P_1 because P_2 has no map in") {
    auto r = nom_counterexample(p_sum({1}));
    CHECK(r.missing_n == 2);
    CHECK(r.value == coproduct(one_point(), p_sum({1})));
  }

  TEST_CASE("F(1) = 1") {
    auto r = nom_counterexample(one_point());
    CHECK_FALSE(r.missing_n);
    CHECK(r.value == one_point());
  }

  TEST_CASE("F(P_1 + P_2 + P_3) = 1 + X with P_4 missing") {
    auto x = p_sum({1, 2, 3});
    auto r = nom_counterexample(x);
    CHECK(r.missing_n == 4);
    CHECK(r.value.orbits.size() == 4);
  }

  TEST_CASE("F preserves identities and composition on small maps") {
    std::vector<NominalSetSpec> xs{p_sum({1}), p_sum({1, 2}), one_point(), coproduct(one_point(), p_sum({1}))};
    for (const auto& a : xs) {
      CHECK(nom_counterexample_map(identity_map(a)) == identity_map(nom_counterexample(a).value));
      for (const auto& b : xs)
        for (const auto& c : xs)
          for (const auto& f : equivariant_maps(a, b))
            for (const auto& g : equivariant_maps(b, c))
              CHECK(nom_counterexample_map(compose(g, f)) ==
                    compose(nom_counterexample_map(g), nom_counterexample_map(f)));
    }
  }

  TEST_CASE("finitarity fails on the P-chain at k = 3") {
    auto c = nom_finitarity_certificate(3);
    CHECK(c.lhs_orbits == 4);
    CHECK(c.rhs_orbits == 1);
    CHECK(c.persists);
    CHECK(c.verdict == Verdict::FailCertified);
    CHECK(c.homs_into_colimit == std::vector<int>{1, 2, 3, 4});
  }
}

TEST_SUITE("support rigidity") {
  TEST_CASE("every endo of P_1 + P_2 + P_3 preserves supports") {
    auto s = rigidity_sweep(3, 10);
    CHECK(s.candidates == 1);
    CHECK(s.all_rigid);
    CHECK(s.reports[0].elements_checked == 175);
    CHECK(s.reports[0].transposition_steps > 0);
  }

  TEST_CASE("a map collapsing to the point is not rigid") {
    auto x = coproduct(one_point(), p_sum({1}));
    auto f = make_map(x, x, {NomElement{0, {}}, NomElement{0, {}}});
    CHECK_FALSE(support_rigidity_check(f, 4).rigid);
  }

  TEST_CASE("non-equivariant candidate is rejected") {
    auto x = p_sum({2});
    EquivariantMap bad{x, x, {NomElement{0, {0, 5}}}};
    CHECK_THROWS_AS(support_rigidity_check(bad, 10), PreconditionError);
  }
}

TEST_SUITE("countable strictness") {
  TEST_CASE("identity") {
    auto x = p_sum({1, 2});
    auto w = countable_strictness_witness(identity_map(x));
    CHECK(w.holds());
    CHECK(w.bprime == identity_map(x));
    CHECK(w.f == identity_map(x));
  }

  TEST_CASE("P_1 + P_1 with the left injection keeps both copies") {
    auto a = p_sum({1, 1});
    auto b = make_map(p_sum({1}), a, {NomElement{0, {0}}});
    auto w = countable_strictness_witness(b);
    CHECK(w.holds());
    CHECK(w.bprime.dom.orbits.size() == 2);
  }

  TEST_CASE("P_1 + P_1 + P_1 with the left injection keeps one copy for the rest") {
    auto a = p_sum({1, 1, 1});
    auto b = make_map(p_sum({1}), a, {NomElement{0, {0}}});
    auto w = countable_strictness_witness(b);
    CHECK(w.holds());
    CHECK(w.bprime.dom.orbits.size() == 2);
  }

  TEST_CASE("P_1 + P_2 with b onto P_1 keeps P_2") {
    auto a = p_sum({1, 2});
    auto b = make_map(p_sum({1}), a, {NomElement{0, {0}}});
    auto w = countable_strictness_witness(b);
    CHECK(w.holds());
    CHECK(w.bprime.dom == a);
    CHECK(w.f == identity_map(a));
  }

  TEST_CASE("random maps into sums of small orbits") {
    std::mt19937 rng(8);
    std::vector<OrbitSpec> pieces{pn_orbit(1), pn_orbit(2), tuples_orbit(2), orbit_spec(0, {})};
    for (int t = 0; t < 30; ++t) {
      NominalSetSpec a, bdom;
      for (int i = 0; i < 4; ++i) a.orbits.push_back(pieces[std::uniform_int_distribution<int>(0, 3)(rng)]);
      for (int i = 0; i < 2; ++i) bdom.orbits.push_back(pieces[std::uniform_int_distribution<int>(0, 3)(rng)]);
      auto maps = equivariant_maps(bdom, a);
      if (maps.empty()) continue;
      auto w = countable_strictness_witness(maps[std::uniform_int_distribution<int>(0, maps.size() - 1)(rng)]);
      CHECK(w.holds());
      CHECK(w.bprime.dom.orbits.size() <= a.orbits.size());
    }
  }
}
