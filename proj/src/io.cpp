#include "isoperiod/io.hpp"

#include <algorithm>
#include <sstream>

#include "isoperiod/error.hpp"

namespace isoperiod {

namespace {

[[noreturn]] void parse_fail(const std::string& what) { fail(ErrorKind::ParseError, what); }

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) parse_fail(std::string("missing field '") + key + "'");
  return j.at(key);
}

Rational rational_from_json(const Json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(Integer(std::to_string(j.get<long long>())));
  parse_fail("expected a rational string");
}

int int_from_json(const Json& j, const char* what) {
  if (!j.is_number_integer()) parse_fail(std::string(what) + " must be an integer");
  return j.get<int>();
}

double approx(const Rational& r) { return r.get_d(); }

}  // namespace

Json integer_to_json(const Integer& v) {
  if (v.fits_slong_p()) return Json(v.get_si());
  return Json(v.get_str());
}

Integer integer_from_json(const Json& j) {
  if (j.is_number_integer()) return Integer(std::to_string(j.get<long long>()));
  if (j.is_string()) {
    Integer out;
    if (out.set_str(j.get<std::string>(), 10) != 0) parse_fail("bad integer '" + j.get<std::string>() + "'");
    return out;
  }
  parse_fail("expected an integer");
}

Json diagram_to_json(const ArcDiagram& d) {
  Json out;
  out["genus"] = d.genus();
  out["basis"] = Json::array();
  for (const auto& b : d.basis()) out["basis"].push_back(format_rational(b));
  out["arcs"] = Json::array();
  for (const auto& a : d.arcs()) {
    Json arc;
    arc["id"] = a.id;
    arc["left"] = format_rational(a.left);
    arc["right"] = format_rational(a.right);
    arc["lattice"] = Json::array();
    for (const auto& v : a.lattice) arc["lattice"].push_back(integer_to_json(v));
    out["arcs"].push_back(std::move(arc));
  }
  return out;
}

ArcDiagram diagram_from_json(const Json& j) {
  const int genus = int_from_json(field(j, "genus"), "genus");
  const Json& basis_j = field(j, "basis");
  const Json& arcs_j = field(j, "arcs");
  if (!basis_j.is_array() || !arcs_j.is_array()) parse_fail("basis and arcs must be arrays");
  std::vector<Rational> basis;
  for (const auto& b : basis_j) basis.push_back(rational_from_json(b));
  std::vector<Arc> arcs;
  for (const auto& a : arcs_j) {
    Arc arc;
    arc.id = int_from_json(field(a, "id"), "arc id");
    arc.left = rational_from_json(field(a, "left"));
    arc.right = rational_from_json(field(a, "right"));
    const Json& lat = field(a, "lattice");
    if (!lat.is_array()) parse_fail("lattice must be an array");
    for (const auto& v : lat) arc.lattice.push_back(integer_from_json(v));
    arcs.push_back(std::move(arc));
  }
  if (static_cast<std::size_t>(2 * genus) != arcs.size())
    fail(ErrorKind::BadArity, "genus does not match the number of arcs");
  return ArcDiagram(std::move(arcs), std::move(basis));
}

Json matrix_to_json(const IntMatrix& m) {
  Json out = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(integer_to_json(m(r, c)));
    out.push_back(std::move(row));
  }
  return out;
}

IntMatrix matrix_from_json(const Json& j) {
  if (!j.is_array()) parse_fail("matrix must be an array of rows");
  std::vector<std::vector<Integer>> rows;
  for (const auto& r : j) {
    if (!r.is_array()) parse_fail("matrix row must be an array");
    std::vector<Integer> row;
    for (const auto& v : r) row.push_back(integer_from_json(v));
    if (!rows.empty() && row.size() != rows.front().size()) parse_fail("ragged matrix");
    rows.push_back(std::move(row));
  }
  return IntMatrix::from_rows(rows);
}

std::string format_move(const Move& m) {
  if (const auto* s = std::get_if<Shift>(&m))
    return "shift " + std::to_string(s->arc_id) + " " + format_rational(s->delta);
  const auto& v = std::get<Vasiliev>(m);
  return "vasiliev " + std::to_string(v.moved_id) + " " + std::to_string(v.fixed_id) + " " +
         (v.moved_end == End::Left ? "L" : "R");
}

std::string format_script(const std::vector<Move>& moves) {
  std::string out;
  for (const auto& m : moves) out += format_move(m) + "\n";
  return out;
}

std::vector<Move> parse_script(std::string_view text) {
  std::vector<Move> out;
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t number = 0;
  while (std::getline(in, line)) {
    ++number;
    std::istringstream words(line);
    std::string kind;
    if (!(words >> kind) || kind[0] == '#') continue;
    const std::string where = "script line " + std::to_string(number);
    if (kind == "shift") {
      int id = 0;
      std::string delta;
      if (!(words >> id >> delta)) parse_fail(where + ": expected 'shift <id> <delta>'");
      out.push_back(Shift{id, parse_rational(delta)});
    } else if (kind == "vasiliev") {
      int moved = 0, fixed = 0;
      std::string end;
      if (!(words >> moved >> fixed >> end) || (end != "L" && end != "R"))
        parse_fail(where + ": expected 'vasiliev <moved> <fixed> <L|R>'");
      out.push_back(Vasiliev{moved, fixed, end == "L" ? End::Left : End::Right});
    } else {
      parse_fail(where + ": unknown move '" + kind + "'");
    }
    std::string extra;
    if (words >> extra) parse_fail(where + ": trailing text");
  }
  return out;
}

std::string render_ascii(const ArcDiagram& d, std::size_t width) {
  const auto order = d.endpoint_order();
  const Rational lo = d.coordinate(order.front());
  const Rational span = d.coordinate(order.back()) - lo;
  const auto column = [&](const Rational& x) {
    const double f = approx((x - lo) / span);
    return static_cast<std::size_t>(f * static_cast<double>(width - 1) + 0.5);
  };
  std::ostringstream out;
  for (int id : canonical_numbering(d)) {
    const Arc& a = d.arc(id);
    std::string row(width, ' ');
    const std::size_t l = column(a.left);
    const std::size_t r = std::max(column(a.right), l + 1);
    row.resize(std::max(width, r + 1), ' ');
    for (std::size_t c = l + 1; c < r; ++c) row[c] = '-';
    row[l] = '(';
    row[r] = ')';
    while (!row.empty() && row.back() == ' ') row.pop_back();
    out << "arc " << id << "  " << row << "\n";
  }
  out << "\n";
  for (const auto& e : order)
    out << (e.end == End::Left ? "  L" : "  R") << e.arc << " at " << format_rational(d.coordinate(e)) << "\n";
  return out.str();
}

std::string render_svg(const ArcDiagram& d) {
  const auto order = d.endpoint_order();
  const double lo = approx(d.coordinate(order.front()));
  const double hi = approx(d.coordinate(order.back()));
  const double width = 800;
  const double margin = 40;
  const double scale = (width - 2 * margin) / (hi - lo);
  double tallest = 0;
  for (const auto& a : d.arcs()) tallest = std::max(tallest, approx(a.length()) * scale / 2);
  const double base = tallest + margin;
  const double height = base + 3 * margin;
  const auto x_of = [&](const Rational& v) { return margin + (approx(v) - lo) * scale; };

  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height
      << "\" font-family=\"monospace\" font-size=\"11\">\n";
  out << "  <line x1=\"" << margin / 2 << "\" y1=\"" << base << "\" x2=\"" << width - margin / 2 << "\" y2=\""
      << base << "\" stroke=\"black\"/>\n";
  for (const auto& a : d.arcs()) {
    const double x1 = x_of(a.left);
    const double x2 = x_of(a.right);
    const double r = (x2 - x1) / 2;
    out << "  <path d=\"M " << x1 << " " << base << " A " << r << " " << r << " 0 0 1 " << x2 << " " << base
        << "\" fill=\"none\" stroke=\"steelblue\"/>\n";
  }
  std::size_t k = 0;
  for (const auto& e : order) {
    const double x = x_of(d.coordinate(e));
    const double y = base + 14 + 12 * static_cast<double>(k++ % 3);
    out << "  <circle cx=\"" << x << "\" cy=\"" << base << "\" r=\"2\"/>\n";
    out << "  <text x=\"" << x << "\" y=\"" << y << "\" text-anchor=\"middle\">" << e.arc
        << (e.end == End::Left ? "L" : "R") << " " << format_rational(d.coordinate(e)) << "</text>\n";
  }
  out << "</svg>\n";
  return out.str();
}

}  // namespace isoperiod
