#ifndef ISOPERIOD_LAYOUT_HPP
#define ISOPERIOD_LAYOUT_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include "isoperiod/moves.hpp"

namespace isoperiod {

// Coordinates for a prescribed endpoint order.
//
// The positions of the 4g endpoints in a fixed linear order, with the arc
// lengths held fixed, form an open convex polytope in the space of left
// endpoints. Consecutive endpoints u < w give difference constraints
// pos(w) - pos(u) >= s, which a longest-path Bellman-Ford pass solves exactly
// for a given slack s. The slack is halved until the system is feasible.
//
// When `tight_gap` is set to j, the gap between order[j] and order[j+1] is
// pinned to exactly s/4, which is how a Vasiliev move is prepared: the dragged
// endpoint sits a quarter-slack away from the endpoint it crosses, so the
// -2d carry of the arc and the landing beside the far endpoint stay inside
// empty gaps.
//
// Arcs with a pin (indexed by id - 1) keep that left coordinate exactly.
//
// Returns left coordinates indexed by arc id - 1, with the leftmost endpoint
// at 0 when nothing is pinned, or nothing when the order cannot be realized
// with these lengths.
using Pins = std::vector<std::optional<Rational>>;
std::optional<std::vector<Rational>> realize_order(const std::vector<Endpoint>& order,
                                                   const std::vector<Rational>& lengths_by_id,
                                                   std::optional<std::size_t> tight_gap = {},
                                                   const Pins& pins = {});

bool shift_applicable(const ArcDiagram& d, int arc_id, const Rational& delta);

struct Transported {
  ArcDiagram diagram;
  std::vector<Move> moves;
};

// Moves every arc to the requested left coordinate using only legal shifts.
// `target_lefts` must realize the same endpoint order as `from`.
Transported transport(const ArcDiagram& from, const std::vector<Rational>& target_lefts);

// Same as transport() after translating the target so that the leftmost
// endpoints coincide.
Transported transport_shape(const ArcDiagram& from, const std::vector<Rational>& target_lefts);

// Re-lays the diagram in the default realization of its endpoint order.
Transported relax(const ArcDiagram& d);

// Prepared Vasiliev move: the dragged endpoint must be consecutive with the
// `fixed_near` endpoint of the fixed arc in the current order. Shifts bring
// the two together, then the move is applied. Empty when the lengths do not
// admit the required configuration. Arcs listed in `pinned` are not moved.
std::optional<Transported> drag(const ArcDiagram& d, const Vasiliev& m, End fixed_near,
                                const std::vector<int>& pinned = {});

// All prepared Vasiliev moves available from d, in a fixed deterministic order.
struct DragOption {
  Vasiliev move;
  End fixed_near;
};
std::vector<DragOption> drag_options(const ArcDiagram& d);

}  // namespace isoperiod

#endif  // ISOPERIOD_LAYOUT_HPP
