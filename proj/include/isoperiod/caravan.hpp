#ifndef ISOPERIOD_CARAVAN_HPP
#define ISOPERIOD_CARAVAN_HPP

#include <cstddef>
#include <vector>

#include "isoperiod/moves.hpp"

namespace isoperiod {

/// Arc lengths of a caravan, listed by increasing left endpoint.
struct PeriodVector {
  int genus = 0;
  std::vector<Rational> lengths;

  friend bool operator==(const PeriodVector&, const PeriodVector&) = default;
};

/// g consecutive groups of four endpoints, each group a crossing pair (a b a b).
bool is_caravan(const ArcDiagram& d);

PeriodVector period_vector(const ArcDiagram& d);

/// Canonical caravan with the given arc lattice vectors (left to right). Pair k
/// puts its left arc at the group offset o and its right arc at o + h with
/// h = (max(0, x - y) + x) / 2; groups are separated by unit gaps. Arc ids
/// follow left-to-right order.
ArcDiagram caravan_from_periods(const PeriodVector& p,
                                const std::vector<std::vector<Integer>>& basis_lattice,
                                const std::vector<Rational>& basis_lengths);

/// Caravan whose arcs are the basis vectors themselves (lattice e_1..e_2g).
ArcDiagram standard_caravan(const std::vector<Rational>& basis_lengths);

/// Rows of the lattice matrix of a caravan read left to right.
std::vector<std::vector<Integer>> caravan_lattice(const ArcDiagram& d);

/// Block-diagonal polarization form with g blocks [[0,1],[-1,0]].
IntMatrix caravan_form(int genus);

struct Reduction {
  ArcDiagram caravan;
  std::vector<Move> moves;
  IntMatrix matrix;        // product of move matrices, indexed by arc id
  std::size_t explored = 0;  // search nodes expanded
};

/// Default node budget for reduce_to_caravan; the ISOPERIOD_SEARCH_BUDGET
/// environment variable overrides it.
std::size_t default_search_budget();

/// Brings an admissible diagram to a caravan by shifts and Vasiliev moves.
/// Best-first search over endpoint orders reachable by prepared Vasiliev moves,
/// ranked by defect plus depth, where the defect counts crossing pairs beyond
/// g plus nested pairs. Candidates are laid out directly; only the winning
/// path is replayed with shifts. Throws SearchExhausted past `budget` expanded
/// nodes.
Reduction reduce_to_caravan(const ArcDiagram& d, std::size_t budget = default_search_budget());

/// Non-caravan defect count used to rank search nodes; zero exactly on
/// caravans among admissible diagrams.
std::size_t caravan_defect(const ArcDiagram& d);

}  // namespace isoperiod

#endif  // ISOPERIOD_CARAVAN_HPP
