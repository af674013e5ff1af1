#ifndef ISOPERIOD_IO_HPP
#define ISOPERIOD_IO_HPP

#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "isoperiod/moves.hpp"

namespace isoperiod {

using Json = nlohmann::ordered_json;

// Diagram document:
//   {"genus": g, "basis": ["p/q", ...], "arcs": [{"id", "left", "right", "lattice"}, ...]}
// Rationals are strings (or plain integers); lattice entries are integers, or
// decimal strings when they do not fit in 64 bits.
Json diagram_to_json(const ArcDiagram& d);
ArcDiagram diagram_from_json(const Json& j);

// Integer matrix as an array of rows.
Json matrix_to_json(const IntMatrix& m);
IntMatrix matrix_from_json(const Json& j);

Json integer_to_json(const Integer& v);
Integer integer_from_json(const Json& j);

// One move per line: "shift <id> <delta>" or "vasiliev <moved> <fixed> <L|R>".
// Blank lines and lines starting with '#' are skipped by the parser.
std::string format_move(const Move& m);
std::string format_script(const std::vector<Move>& moves);
std::vector<Move> parse_script(std::string_view text);

std::string render_ascii(const ArcDiagram& d, std::size_t width = 64);
std::string render_svg(const ArcDiagram& d);

}  // namespace isoperiod

#endif  // ISOPERIOD_IO_HPP
