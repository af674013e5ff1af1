#include <doctest.h>

#include <random>

#include "helpers.hpp"
#include "isoperiod/caravan.hpp"
#include "isoperiod/generate.hpp"
#include "oracles.hpp"

using namespace testing;

TEST_SUITE("diagram") {
  TEST_CASE("construction and validation") {
    const ArcDiagram one({{1, 0, 2, unit(2, 0)}, {2, 1, 3, unit(2, 1)}}, {2, 2});
    CHECK(one.genus() == 1);
    CHECK(is_admissible(one));
    CHECK(kind_of([] { simple({{"0", "2"}, {"2", "3"}}); }) == ErrorKind::DuplicateEndpoint);
    CHECK(kind_of([] { ArcDiagram({{1, 0, 2, unit(2, 0)}, {2, 1, 6, unit(2, 1)}}, {3, 5}); }) ==
          ErrorKind::InconsistentLattice);
    CHECK(kind_of([] { simple({{"0", "2"}, {"1", "3"}, {"4", "5"}}); }) == ErrorKind::BadArity);
    CHECK(kind_of([] { ArcDiagram({{1, 2, 0, unit(2, 0)}, {2, 1, 3, unit(2, 1)}}, {2, 2}); }) ==
          ErrorKind::InvalidArc);
    CHECK(kind_of([] { ArcDiagram({{1, 0, 2, unit(2, 0)}, {1, 1, 3, unit(2, 1)}}, {2, 2}); }) ==
          ErrorKind::InvalidArc);
    CHECK(kind_of([&] { one.arc(3); }) == ErrorKind::BadIndex);
  }

  TEST_CASE("canonical numbering") {
    CHECK(canonical_numbering(simple({{"0", "2"}, {"1", "3"}})) == std::vector<int>{1, 2});
    CHECK(canonical_numbering(simple({{"5", "7"}, {"0", "3"}})) == std::vector<int>{2, 1});
    CHECK(canonical_numbering(simple({{"0", "2"}, {"1", "3"}, {"4", "6"}, {"5", "7"}})) ==
          std::vector<int>{1, 2, 3, 4});
  }

  TEST_CASE("crossing predicate") {
    const Arc a{1, 0, 2, {}}, b{2, 1, 3, {}}, c{3, 0, 3, {}}, d{4, 1, 2, {}}, e{5, 0, 1, {}}, f{6, 2, 3, {}};
    CHECK(arcs_cross(a, b));
    CHECK_FALSE(arcs_cross(c, d));
    CHECK(arcs_nested(c, d));
    CHECK_FALSE(arcs_cross(e, f));
    CHECK_FALSE(arcs_nested(e, f));
  }

  TEST_CASE("crossing is symmetric on all small configurations") {
    // Every placement of two arcs on four distinct slots.
    const int slots[] = {0, 1, 2, 3};
    for (int i : slots)
      for (int j : slots)
        for (int k : slots)
          for (int l : slots) {
            if (i >= j || k >= l || i == k || i == l || j == k || j == l) continue;
            const Arc a{1, i, j, {}}, b{2, k, l, {}};
            CHECK(arcs_cross(a, b) == arcs_cross(b, a));
            CHECK(arcs_cross(a, b) == oracle::interleave({1, i, j, {}}, {2, k, l, {}}));
          }
  }

  TEST_CASE("intersection matrix examples") {
    CHECK(intersection_matrix(simple({{"0", "2"}, {"1", "3"}})) == IntMatrix{{0, 1}, {-1, 0}});
    CHECK(intersection_matrix(simple({{"0", "2"}, {"1", "3"}, {"4", "6"}, {"5", "7"}})) ==
          IntMatrix{{0, 1, 0, 0}, {-1, 0, 0, 0}, {0, 0, 0, 1}, {0, 0, -1, 0}});
    CHECK(intersection_matrix(simple({{"0", "1"}, {"2", "3"}})) == IntMatrix(2, 2));
  }

  TEST_CASE("admissibility examples") {
    CHECK(is_admissible(simple({{"0", "2"}, {"1", "3"}})));
    CHECK_FALSE(is_admissible(simple({{"0", "1"}, {"2", "3"}})));
    CHECK(is_admissible(standard_caravan({1, 2, 3, 4, 5, 6})));
  }

  TEST_CASE("translation") {
    const ArcDiagram d = simple({{"0", "2"}, {"1", "3"}});
    CHECK(translate(d, 0) == d);
    CHECK(translate(d, 5) == ArcDiagram({{1, 5, 7, unit(2, 0)}, {2, 6, 8, unit(2, 1)}}, {2, 2}));
    CHECK(translate(translate(d, q("7/3")), q("-7/3")) == d);
    CHECK(equal_up_to_translation(d, translate(d, q("-11/5"))));
    CHECK_FALSE(equal_up_to_translation(d, simple({{"0", "2"}, {"1", "4"}})));
  }

  TEST_CASE("renumbering keeps geometry") {
    const ArcDiagram d = simple({{"5", "7"}, {"0", "3"}, {"1", "6"}, {"2", "4"}});
    const ArcDiagram r = renumber_canonically(d);
    CHECK(canonical_numbering(r) == std::vector<int>{1, 2, 3, 4});
    CHECK(equal_up_to_translation(d, r));
    CHECK(intersection_matrix(d) == intersection_matrix(r));
  }

  TEST_CASE("random diagrams: skew symmetry, oracle agreement, invariance") {
    Rng rng(11);
    for (int it = 0; it < 60; ++it) {
      const int g = 1 + it % 3;
      const ArcDiagram c = standard_caravan(random_basis(g, rng));
      const auto moves = random_walk(c, 12, rng);
      const ArcDiagram d = apply_sequence(c, moves).diagram;
      const IntMatrix m = intersection_matrix(d);
      for (std::size_t i = 0; i < m.rows(); ++i) {
        CHECK(m(i, i) == 0);
        for (std::size_t j = 0; j < m.cols(); ++j) CHECK(m(i, j) == -m(j, i));
      }
      CHECK(oracle::rows_of(m) == oracle::intersection(d));
      CHECK(is_admissible(d) == oracle::admissible(d));
      CHECK(is_admissible(translate(d, q("13/7"))) == is_admissible(d));
      CHECK(is_admissible(renumber_canonically(d)) == is_admissible(d));
      CHECK(oracle::lattice_consistent(d));
    }
  }
}
