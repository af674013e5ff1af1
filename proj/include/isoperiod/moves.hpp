#ifndef ISOPERIOD_MOVES_HPP
#define ISOPERIOD_MOVES_HPP

#include <variant>
#include <vector>

#include "isoperiod/diagram.hpp"

namespace isoperiod {

/// Rigid displacement of one arc that keeps the linear order of all endpoints.
struct Shift {
  int arc_id = 0;
  Rational delta;

  friend bool operator==(const Shift&, const Shift&) = default;
};

/// Second Vasiliev move: the `moved_end` endpoint of arc `moved_id` is dragged
/// along arc `fixed_id` through the adjacent fixed endpoint and reappears next
/// to the far fixed endpoint. The fixed arc does not change.
struct Vasiliev {
  int moved_id = 0;
  int fixed_id = 0;
  End moved_end = End::Right;

  friend bool operator==(const Vasiliev&, const Vasiliev&) = default;
};

using Move = std::variant<Shift, Vasiliev>;

ArcDiagram apply_shift(const ArcDiagram& d, int arc_id, const Rational& delta);

bool vasiliev_applicable(const ArcDiagram& d, const Vasiliev& m);

struct MoveResult {
  ArcDiagram diagram;
  IntMatrix matrix;
};

/// Applies a Vasiliev move. With p the dragged endpoint, q the nearest adjacent
/// endpoint of the fixed arc, q' its partner and d = p - q, the arc is carried
/// by -2d while p crosses q: p' = q' - d and the other endpoint m' = m - 2d.
/// The arc length changes by exactly +-(fixed length).
///
/// The matrix is indexed by arc id: identity plus sigma at (moved, fixed), with
/// new lattice rows = matrix * old lattice rows.
MoveResult apply_vasiliev(const ArcDiagram& d, const Vasiliev& m);

IntMatrix move_matrix(const ArcDiagram& d, const Move& m);

MoveResult apply_move(const ArcDiagram& d, const Move& m);

/// Runs the moves in order. The returned matrix is the ordered product
/// M_n ... M_1, so lattice_by_id(final) = matrix * lattice_by_id(d).
/// Failures are rethrown as SequenceError carrying the failing index.
MoveResult apply_sequence(const ArcDiagram& d, const std::vector<Move>& moves);

/// The move undoing `m` when applied to the diagram that `m` produced.
/// Vasiliev moves are their own inverses as descriptors.
Move inverse_move(const Move& m);

std::vector<Move> inverse_sequence(const std::vector<Move>& moves);

}  // namespace isoperiod

#endif  // ISOPERIOD_MOVES_HPP
