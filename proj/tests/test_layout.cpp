#include <doctest.h>

#include "helpers.hpp"
#include "isoperiod/caravan.hpp"
#include "isoperiod/generate.hpp"
#include "isoperiod/layout.hpp"
#include "oracles.hpp"

using namespace testing;

namespace {

std::vector<Rational> lengths(const ArcDiagram& d) {
  std::vector<Rational> out;
  for (const auto& a : d.arcs()) out.push_back(a.length());
  return out;
}

ArcDiagram placed(const ArcDiagram& d, const std::vector<Rational>& lefts) {
  std::vector<Arc> arcs = d.arcs();
  for (auto& a : arcs) {
    const Rational len = a.length();
    a.left = lefts[a.id - 1];
    a.right = a.left + len;
  }
  return ArcDiagram(std::move(arcs), d.basis());
}

}  // namespace

TEST_SUITE("layout") {
  TEST_CASE("realize_order reproduces orders of random diagrams") {
    Rng rng(21);
    for (int it = 0; it < 40; ++it) {
      const ArcDiagram c = standard_caravan(random_basis(1 + it % 3, rng));
      const ArcDiagram d = apply_sequence(c, random_walk(c, 12, rng)).diagram;
      const auto lefts = realize_order(d.endpoint_order(), lengths(d));
      REQUIRE(lefts);
      const ArcDiagram r = placed(d, *lefts);
      CHECK(r.endpoint_order() == d.endpoint_order());
      CHECK(r.coordinate(r.endpoint_order().front()) == 0);
    }
  }

  TEST_CASE("infeasible order") {
    // Arc 2 (length 1) cannot contain arc 1 (length 5).
    const ArcDiagram d = simple({{"0", "5"}, {"1", "2"}});
    std::vector<Endpoint> order{{2, End::Left}, {1, End::Left}, {1, End::Right}, {2, End::Right}};
    CHECK_FALSE(realize_order(order, lengths(d)));
  }

  TEST_CASE("pins and tight gap") {
    const ArcDiagram d = standard_caravan({3, 4, 5, 6});
    Pins pins(4);
    pins[2] = d.arc(3).left;
    pins[3] = d.arc(4).left;
    const auto order = d.endpoint_order();
    const auto lefts = realize_order(order, lengths(d), std::size_t{1}, pins);
    REQUIRE(lefts);
    CHECK((*lefts)[2] == d.arc(3).left);
    CHECK((*lefts)[3] == d.arc(4).left);
    const ArcDiagram r = placed(d, *lefts);
    CHECK(r.endpoint_order() == order);
  }

  TEST_CASE("transport uses only legal shifts") {
    Rng rng(8);
    for (int it = 0; it < 30; ++it) {
      const ArcDiagram c = standard_caravan(random_basis(1 + it % 3, rng));
      const ArcDiagram d = apply_sequence(c, random_walk(c, 10, rng)).diagram;
      const auto lefts = realize_order(d.endpoint_order(), lengths(d));
      REQUIRE(lefts);
      const Transported t = transport(d, *lefts);
      for (const auto& m : t.moves) CHECK(std::holds_alternative<Shift>(m));
      CHECK(apply_sequence(d, t.moves).diagram == t.diagram);
      CHECK(t.diagram == placed(d, *lefts));
      CHECK(equal_up_to_translation(relax(d).diagram, t.diagram));
    }
  }

  TEST_CASE("drag prepares and applies a Vasiliev move") {
    const ArcDiagram c = standard_caravan({2, 3});
    const auto r = drag(c, Vasiliev{1, 2, End::Right}, End::Left);
    REQUIRE(r);
    CHECK(std::holds_alternative<Vasiliev>(r->moves.back()));
    CHECK(apply_sequence(c, r->moves).diagram == r->diagram);
    CHECK(period_vector(r->diagram).lengths == std::vector<Rational>{5, 3});
    // Not consecutive in the order.
    CHECK_FALSE(drag(c, Vasiliev{1, 2, End::Left}, End::Right));
    // Would shrink arc 1 below zero.
    CHECK_FALSE(drag(c, Vasiliev{1, 2, End::Right}, End::Right));
    // Pinned arcs stay put.
    const ArcDiagram c2 = standard_caravan({2, 3, 5, 7});
    const auto p = drag(c2, Vasiliev{1, 2, End::Right}, End::Left, {3, 4});
    REQUIRE(p);
    CHECK(p->diagram.arc(3).left == c2.arc(3).left);
    CHECK(p->diagram.arc(4).left == c2.arc(4).left);
    CHECK(drag_options(c).size() == 6);
  }
}
