#include <doctest.h>

#include "helpers.hpp"
#include "isoperiod/caravan.hpp"
#include "isoperiod/generate.hpp"
#include "isoperiod/io.hpp"

using namespace testing;

TEST_SUITE("io") {
  TEST_CASE("diagram json round trip") {
    Rng rng(5);
    for (int it = 0; it < 30; ++it) {
      const int g = 1 + it % 3;
      const ArcDiagram c = standard_caravan(random_basis(g, rng));
      const auto walk = random_walk(c, 10, rng);
      const ArcDiagram d = apply_sequence(c, walk).diagram;
      const Json j = diagram_to_json(d);
      CHECK(j["genus"] == g);
      CHECK(diagram_from_json(j) == d);
      CHECK(diagram_from_json(Json::parse(j.dump())) == d);
    }
  }

  TEST_CASE("diagram json errors") {
    const Json good = diagram_to_json(simple({{"0", "2"}, {"1", "3"}}));
    Json missing = good;
    missing.erase("arcs");
    CHECK(kind_of([&] { diagram_from_json(missing); }) == ErrorKind::ParseError);
    Json badrat = good;
    badrat["basis"][0] = "x/2";
    CHECK(kind_of([&] { diagram_from_json(badrat); }) == ErrorKind::ParseError);
    Json genus = good;
    genus["genus"] = 2;
    CHECK(kind_of([&] { diagram_from_json(genus); }) == ErrorKind::BadArity);
    Json dup = good;
    dup["arcs"][1]["left"] = dup["arcs"][0]["left"];
    CHECK(kind_of([&] { diagram_from_json(dup); }) != static_cast<ErrorKind>(-1));
  }

  TEST_CASE("big integers") {
    const Integer big("123456789012345678901234567890");
    const Json j = integer_to_json(big);
    CHECK(j.is_string());
    CHECK(integer_from_json(j) == big);
    CHECK(integer_to_json(Integer(-7)).is_number_integer());
    CHECK(integer_from_json(Json(-7)) == -7);
    CHECK(kind_of([] { integer_from_json(Json("12a")); }) == ErrorKind::ParseError);
    IntMatrix m(2, 2);
    m(0, 0) = big;
    m(1, 1) = -1;
    CHECK(matrix_from_json(matrix_to_json(m)) == m);
    CHECK(kind_of([] { matrix_from_json(Json::parse("[[1,2],[3]]")); }) == ErrorKind::ParseError);
  }

  TEST_CASE("script round trip") {
    const std::vector<Move> moves{Shift{2, q("-3/7")}, Vasiliev{1, 3, End::Left}, Vasiliev{4, 2, End::Right}};
    CHECK(format_move(moves[0]) == "shift 2 -3/7");
    CHECK(format_move(moves[1]) == "vasiliev 1 3 L");
    CHECK(parse_script(format_script(moves)) == moves);
    CHECK(parse_script("# header\n\nshift 1 5\n") == std::vector<Move>{Shift{1, 5}});
    CHECK(kind_of([] { parse_script("shift 1\n"); }) == ErrorKind::ParseError);
    CHECK(kind_of([] { parse_script("vasiliev 1 2 X\n"); }) == ErrorKind::ParseError);
    CHECK(kind_of([] { parse_script("hop 1 2\n"); }) == ErrorKind::ParseError);
    try {
      parse_script("shift 1 1\nbogus\n");
      FAIL("expected ParseError");
    } catch (const Error& e) {
      CHECK(std::string(e.what()).find('2') != std::string::npos);
    }
  }

  TEST_CASE("rendering") {
    const ArcDiagram d = simple({{"0", "2"}, {"1", "7/2"}});
    const std::string a = render_ascii(d);
    CHECK(a.find('(') != std::string::npos);
    CHECK(a.find("7/2") != std::string::npos);
    const std::string s = render_svg(d);
    CHECK(s.rfind("<svg", 0) == 0);
    CHECK(s.find("</svg>") != std::string::npos);
    CHECK(s.find("<path") != std::string::npos);
  }
}
