#include <doctest.h>

#include <cstdlib>

#include "helpers.hpp"
#include "isoperiod/caravan.hpp"
#include "isoperiod/generate.hpp"
#include "isoperiod/layout.hpp"
#include "oracles.hpp"

using namespace testing;

TEST_SUITE("caravan") {
  TEST_CASE("recognition") {
    CHECK(is_caravan(simple({{"0", "2"}, {"1", "3"}, {"4", "6"}, {"5", "7"}})));
    CHECK_FALSE(is_caravan(simple({{"0", "2"}, {"1", "3"}, {"5/2", "15/2"}, {"5", "6"}})));
    CHECK_FALSE(is_caravan(simple({{"0", "3"}, {"1", "2"}})));
    CHECK(is_caravan(simple({{"4", "6"}, {"0", "2"}, {"5", "7"}, {"1", "3"}})));
    CHECK_FALSE(is_caravan(simple({{"0", "5"}, {"1", "3"}, {"2", "6"}, {"4", "7"}})));
  }

  TEST_CASE("period vector") {
    CHECK(period_vector(simple({{"0", "2"}, {"1", "3"}, {"4", "6"}, {"5", "7"}})).lengths ==
          std::vector<Rational>{2, 2, 2, 2});
    CHECK(period_vector(simple({{"6", "9"}, {"1", "4"}, {"0", "2"}, {"7", "12"}})).lengths ==
          std::vector<Rational>{2, 3, 3, 5});
    CHECK(kind_of([] { period_vector(simple({{"0", "3"}, {"1", "2"}})); }) == ErrorKind::NotACaravan);
  }

  TEST_CASE("caravan from periods") {
    std::vector<std::vector<Integer>> e;
    for (std::size_t i = 0; i < 4; ++i) e.push_back(unit(4, i));
    const ArcDiagram c = caravan_from_periods({2, {2, 2, 2, 2}}, e, {2, 2, 2, 2});
    CHECK(c == simple({{"0", "2"}, {"1", "3"}, {"4", "6"}, {"5", "7"}}));
    CHECK(kind_of([&] { caravan_from_periods({2, {2, 0, 2, 2}}, e, {2, 0, 2, 2}); }) ==
          ErrorKind::NonPositiveLength);
    CHECK(kind_of([&] { caravan_from_periods({2, {2, 3, 2, 2}}, e, {2, 2, 2, 2}); }) ==
          ErrorKind::InconsistentLattice);
    CHECK(kind_of([&] { caravan_from_periods({2, {2, 2, 2}}, e, {2, 2, 2, 2}); }) == ErrorKind::BadArity);

    Rng rng(3);
    for (int it = 0; it < 30; ++it) {
      const int g = 1 + it % 4;
      const auto basis = random_basis(g, rng);
      const ArcDiagram s = standard_caravan(basis);
      CHECK(oracle::caravan(s));
      CHECK(period_vector(s).lengths == basis);
      CHECK(oracle::intersection(s) == oracle::block_form(g));
      CHECK(oracle::determinant(oracle::intersection(s)) == 1);
      CHECK(caravan_form(g) == intersection_matrix(s));
    }
  }

  TEST_CASE("reduction of a caravan is trivial") {
    const ArcDiagram c = standard_caravan({2, 3, 5, 7});
    const Reduction r = reduce_to_caravan(c);
    CHECK(r.caravan == c);
    CHECK(r.moves.empty());
    CHECK(r.matrix.is_identity());
  }

  TEST_CASE("reduction after one Vasiliev move") {
    const ArcDiagram c = standard_caravan({q("3/101"), q("5/103"), q("7/107"), q("11/109")});
    // Drag pair 1's right arc across pair 2: leaves the caravan form.
    const auto opts = drag_options(c);
    int done = 0;
    for (const auto& o : opts) {
      const auto step = drag(c, o.move, o.fixed_near);
      if (!step || is_caravan(step->diagram)) continue;
      const Reduction r = reduce_to_caravan(step->diagram);
      CHECK(oracle::caravan(r.caravan));
      CHECK(apply_sequence(step->diagram, r.moves).diagram == r.caravan);
      const auto m = oracle::rows_of(r.matrix);
      CHECK(oracle::multiply(oracle::multiply(m, oracle::intersection_by_id(step->diagram)), oracle::transpose(m)) ==
            oracle::intersection_by_id(r.caravan));
      CHECK(oracle::determinant(m) == 1);
      ++done;
    }
    CHECK(done > 0);
  }

  TEST_CASE("reduction from random walks, genus up to 3") {
    Rng rng(77);
    for (int it = 0; it < 24; ++it) {
      const ArcDiagram d = scrambled(2 + it % 2, 15, rng);
      CHECK(!oracle::caravan(d));
      const Reduction r = reduce_to_caravan(d);
      CHECK(oracle::caravan(r.caravan));
      CHECK(apply_sequence(d, r.moves).diagram == r.caravan);
      CHECK(caravan_defect(r.caravan) == 0);
    }
  }

  TEST_CASE("inadmissible input and budget") {
    CHECK(kind_of([] { reduce_to_caravan(simple({{"0", "1"}, {"2", "3"}})); }) == ErrorKind::NotApplicable);
    // Find an input whose search needs more than one expansion.
    Rng rng(9);
    ArcDiagram d = scrambled(2, 15, rng);
    while (reduce_to_caravan(d).explored < 2) d = scrambled(2, 15, rng);
    CHECK(kind_of([&] { reduce_to_caravan(d, 1); }) == ErrorKind::SearchExhausted);
  }

  TEST_CASE("budget from environment") {
    ::setenv("ISOPERIOD_SEARCH_BUDGET", "123", 1);
    CHECK(default_search_budget() == 123);
    ::setenv("ISOPERIOD_SEARCH_BUDGET", "junk", 1);
    CHECK(default_search_budget() == 20000);
    ::unsetenv("ISOPERIOD_SEARCH_BUDGET");
    CHECK(default_search_budget() == 20000);
  }
}
