// isoperiod: command-line front end for arc diagrams and caravans.
#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "isoperiod/caravan.hpp"
#include "isoperiod/error.hpp"
#include "isoperiod/generate.hpp"
#include "isoperiod/io.hpp"
#include "isoperiod/planner.hpp"
#include "isoperiod/symplectic.hpp"

using namespace isoperiod;

namespace {

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out || !(out << text)) throw IoError("cannot write '" + path + "'");
}

Json read_json(const std::string& path) {
  try {
    return Json::parse(read_file(path));
  } catch (const Json::parse_error& e) {
    throw Error(ErrorKind::ParseError, path + ": " + e.what());
  }
}

ArcDiagram read_diagram(const std::string& path) {
  try {
    return diagram_from_json(read_json(path));
  } catch (const Json::exception& e) {
    throw Error(ErrorKind::ParseError, path + ": " + e.what());
  }
}

Json script_json(const std::vector<Move>& moves) {
  Json out = Json::array();
  for (const auto& m : moves) out.push_back(format_move(m));
  return out;
}

void emit(const Json& j) { std::cout << j.dump(2) << "\n"; }

// Errors are a single JSON line.
void emit_error(const Json& j) { std::cout << j.dump() << "\n"; }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Arc diagrams, Vasiliev moves and caravans in exact arithmetic"};
  app.require_subcommand(1);
  app.fallthrough();
  std::uint64_t seed = 1;
  app.add_option("--seed", seed, "Seed for randomized helpers");

  std::string in1, in2, script_path, out_path, format = "ascii";
  std::size_t budget = default_search_budget();
  std::size_t random_moves = 0;

  auto* check = app.add_subcommand("check", "Admissibility and determinant parity");
  check->add_option("diagram", in1)->required();
  auto* matrix = app.add_subcommand("matrix", "Intersection matrix in canonical numbering");
  matrix->add_option("diagram", in1)->required();
  auto* reduce = app.add_subcommand("reduce", "Bring an admissible diagram to a caravan");
  reduce->add_option("diagram", in1)->required();
  reduce->add_option("--budget", budget, "Search node budget (default from ISOPERIOD_SEARCH_BUDGET)");
  reduce->add_option("--script", script_path, "Also write the move script to this file");
  auto* decomp = app.add_subcommand("decompose", "Write a symplectic matrix as a generator word");
  decomp->add_option("matrix", in1)->required();
  auto* conn = app.add_subcommand("connect", "Move sequence between two caravans");
  conn->add_option("from", in1)->required();
  conn->add_option("to", in2)->required();
  conn->add_option("--script", script_path, "Also write the move script to this file");
  auto* apply = app.add_subcommand("apply", "Replay a move script on a diagram");
  apply->add_option("diagram", in1)->required();
  apply->add_option("script", in2);
  apply->add_option("--random", random_moves, "Generate this many random legal moves instead (uses --seed)");
  auto* render = app.add_subcommand("render", "Draw a diagram to a file");
  render->add_option("diagram", in1)->required();
  render->add_option("-o,--output", out_path, "Output file")->required();
  render->add_option("--format", format, "ascii or svg")->check(CLI::IsMember({"ascii", "svg"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (check->parsed()) {
      const ArcDiagram d = read_diagram(in1);
      const bool odd = is_admissible(d);
      emit({{"admissible", odd}, {"det_parity", odd ? "odd" : "even"},
            {"determinant", integer_to_json(intersection_matrix(d).determinant())},
            {"caravan", is_caravan(d)}});
    } else if (matrix->parsed()) {
      const ArcDiagram d = read_diagram(in1);
      emit({{"canonical_ids", canonical_numbering(d)}, {"matrix", matrix_to_json(intersection_matrix(d))}});
    } else if (reduce->parsed()) {
      const ArcDiagram d = read_diagram(in1);
      const Reduction r = reduce_to_caravan(d, budget);
      if (!script_path.empty()) write_file(script_path, format_script(r.moves));
      emit({{"caravan", diagram_to_json(r.caravan)}, {"script", script_json(r.moves)},
            {"matrix", matrix_to_json(r.matrix)}, {"explored", r.explored}});
    } else if (decomp->parsed()) {
      IntMatrix m;
      try {
        m = matrix_from_json(read_json(in1));
      } catch (const Json::exception& e) {
        throw Error(ErrorKind::ParseError, in1 + ": " + e.what());
      }
      if (!m.square() || m.rows() == 0 || m.rows() % 2 != 0)
        throw Error(ErrorKind::SizeMismatch, "matrix must be square of even size");
      const int g = static_cast<int>(m.rows() / 2);
      const GeneratorWord w = decompose(m, g);
      emit({{"genus", g}, {"word", format_word(w)}, {"length", w.letters.size()}});
    } else if (conn->parsed()) {
      const ArcDiagram d1 = read_diagram(in1);
      const ArcDiagram d2 = read_diagram(in2);
      const Connection c = connect(d1, d2);
      const MoveResult replay = apply_sequence(d1, c.moves);
      if (!script_path.empty()) write_file(script_path, format_script(c.moves));
      emit({{"script", script_json(c.moves)},
            {"report",
             {{"change_of_basis", matrix_to_json(c.change_of_basis)},
              {"word", format_word(c.word)},
              {"product_matrix", matrix_to_json(replay.matrix)},
              {"final", diagram_to_json(replay.diagram)},
              {"matches_target", equal_up_to_translation(replay.diagram, d2)}}}});
    } else if (apply->parsed()) {
      const ArcDiagram d = read_diagram(in1);
      std::vector<Move> moves;
      if (random_moves > 0) {
        Rng rng(seed);
        moves = random_walk(d, random_moves, rng);
      } else {
        if (in2.empty()) throw IoError("apply needs a script file or --random");
        moves = parse_script(read_file(in2));
      }
      const MoveResult r = apply_sequence(d, moves);
      emit({{"diagram", diagram_to_json(r.diagram)}, {"matrix", matrix_to_json(r.matrix)},
            {"script", script_json(moves)}});
    } else if (render->parsed()) {
      const ArcDiagram d = read_diagram(in1);
      write_file(out_path, format == "svg" ? render_svg(d) : render_ascii(d));
      emit({{"written", out_path}, {"format", format}});
    }
  } catch (const IoError& e) {
    emit_error({{"error", "IoError"}, {"message", e.what()}});
    return 2;
  } catch (const SequenceError& e) {
    emit_error({{"error", error_name(e.kind())}, {"index", e.index()}, {"message", e.what()}});
    return 1;
  } catch (const Error& e) {
    emit_error({{"error", error_name(e.kind())}, {"message", e.what()}});
    return e.kind() == ErrorKind::ParseError ? 2 : 1;
  }
  return 0;
}
