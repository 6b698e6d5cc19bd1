#include <doctest.h>

#include "finbound/serialize.hpp"

using namespace finbound;
using namespace finbound::cats;

TEST_SUITE("serialization") {
  TEST_CASE("objects and morphisms roundtrip") {
    std::vector<Obj> xs{finset(3), graph(3, {{0, 1}, {1, 2}, {2, 2}}), cycle(4),
                        representable(FiniteGroupoid::symmetric3(), 0),
                        representable(FiniteGroupoid::codiscrete(2), 1)};
    for (const auto& x : xs) {
      CHECK(obj_from_json(to_json(x)) == x);
      CHECK(obj_from_json(json::parse(to_json(x).dump())) == x);
      Mor id = identity(x);
      CHECK(mor_from_json(to_json(id)) == id);
    }
    auto f = hom_set(cycle(4), cycle(2)).front();
    CHECK(mor_from_json(to_json(f)) == f);
  }

  TEST_CASE("symbolic objects roundtrip") {
    for (const auto& s : {ray(7), loop_ray(5), cycle_family(12)}) {
      CHECK(symbolic_from_json(to_json(s)) == s);
      CHECK(std::get<SymbolicObject>(any_from_json(to_json(AnyObject{s}))) == s);
    }
  }

  TEST_CASE("presentations roundtrip and are checked on load") {
    std::vector<superfin::Presentation> ps{superfin::identity_presentation(2), superfin::hom_presentation(2, 2),
                                           superfin::constant_presentation(2, 3)};
    for (const auto& p : ps) CHECK(presentation_from_json(to_json(p)) == p);
    json j = to_json(superfin::identity_presentation(2));
    CHECK(j.at("values") == json({0, 1, 2}));
    j["action"][1][1][0] = json::array({0});
    j["values"][1] = 2;
    CHECK_THROWS(presentation_from_json(j));
  }

  TEST_CASE("orbit specs and maps roundtrip") {
    using namespace nominal;
    auto o = orbit_spec(3, {Perm{1, 2, 0}});
    CHECK(to_json(o) == json::parse(R"({"n":3,"generators":[[1,2,0]]})"));
    CHECK(orbit_from_json(to_json(o)) == o);
    auto x = p_sum({1, 2});
    CHECK(nominal_set_from_json(to_json(x)) == x);
    auto f = identity_map(x);
    CHECK(equivariant_map_from_json(to_json(f)) == f);
    json bad = to_json(f);
    bad["images"][1]["tuple"] = json::array({0, 5});
    CHECK_THROWS_AS(equivariant_map_from_json(bad), PreconditionError);
  }

  TEST_CASE("metric spaces use triangular p/q strings") {
    using hausdorff::Q;
    auto x = hausdorff::make_space({{0, Q(1, 5), Q(2, 5)}, {Q(1, 5), 0, Q(1, 2)}, {Q(2, 5), Q(1, 2), 0}});
    json j = to_json(x);
    CHECK(j == json::parse(R"({"points":3,"d":[[],["1/5"],["2/5","1/2"]]})"));
    CHECK(space_from_json(j) == x);
    CHECK(rational_from_json("1") == Q(1));
    CHECK_THROWS_AS(rational_from_json("1/0"), PreconditionError);
    CHECK_THROWS_AS(rational_from_json("x"), PreconditionError);
    j["d"][2][1] = "1/10";
    CHECK_THROWS_AS(space_from_json(j), PreconditionError);
  }
}
