#ifndef ISOPERIOD_PLANNER_HPP
#define ISOPERIOD_PLANNER_HPP

#include <array>
#include <vector>

#include "isoperiod/caravan.hpp"
#include "isoperiod/symplectic.hpp"

namespace isoperiod {

/// A tuple of 2g nonzero lengths up to the per-pair relation (x,y) ~ (-y,x).
/// rotations[k] counts how often (x,y) -> (y,-x) was applied to pair k to
/// reach the positive representative.
struct SignClass {
  int genus = 0;
  std::vector<Rational> positive;
  std::vector<int> rotations;
};

/// Throws ZeroEntry (any zero) or BadArity (odd length).
SignClass normalize_class(const std::vector<Rational>& tuple);

struct Realized {
  ArcDiagram diagram;
  std::vector<Move> moves;
};

/// One step of the core C script on four consecutive caravan arcs, given by
/// their roles 1..4 in left order.
struct ScriptStep {
  int moved_role;
  End moved_end;
  int fixed_role;
  End fixed_near;
};

/// Drags turning a 2-caravan with periods (x,y,z,t), z > x, into the caravan
/// with periods (x, y+t, z-x, t).
const std::array<ScriptStep, 6>& core_c_script();

/// Runs the core script (exponent +1, needs z > x) or its reverse (exponent -1,
/// needs y > t) on pairs k, k+1 (1-based k). No conditioning; throws
/// NotApplicable when the precondition fails.
Realized run_core_c(const ArcDiagram& caravan, int k, int exponent);

/// Caravan for the class of A_k^e (resp. B_k^e) applied to the period vector.
/// Only pair k's arcs move. Throws NotACaravan, BadIndex, DegenerateResult.
Realized realize_A(const ArcDiagram& caravan, int k, int exponent);
Realized realize_B(const ArcDiagram& caravan, int k, int exponent);

/// Caravan for the class of C_k^e applied to the period vector, routed through
/// conditioning moves and the core script. Only pairs k, k+1 move. Throws
/// ZeroEntryInTarget, DegenerateResult.
Realized realize_C(const ArcDiagram& caravan, int k, int exponent);

struct Connection {
  std::vector<Move> moves;
  IntMatrix change_of_basis;  // M with lattice(d2) = M * lattice(d1), canonical rows
  GeneratorWord word;         // compose(word) == M
  ArcDiagram final_diagram;   // replay result; equals d2 up to arc ids
};

/// Move sequence from caravan d1 to caravan d2. Throws NotACaravan,
/// NotIsoperiodic, NotSamePolarization, DegenerateResult.
Connection connect(const ArcDiagram& d1, const ArcDiagram& d2);

/// Change-of-basis matrix between two caravans' canonical lattices, with the
/// isoperiodic and polarization checks of connect().
IntMatrix change_of_basis(const ArcDiagram& d1, const ArcDiagram& d2);

}  // namespace isoperiod

#endif  // ISOPERIOD_PLANNER_HPP
