#ifndef ISOPERIOD_DIAGRAM_HPP
#define ISOPERIOD_DIAGRAM_HPP

#include <cstddef>
#include <vector>

#include "isoperiod/numeric.hpp"

namespace isoperiod {

enum class End { Left, Right };

inline End opposite(End e) { return e == End::Left ? End::Right : End::Left; }

/// One arc of a diagram. `lattice` holds the coordinates of the arc length in
/// the period module spanned by the diagram's basis lengths.
struct Arc {
  int id = 0;
  Rational left;
  Rational right;
  std::vector<Integer> lattice;

  Rational length() const { return right - left; }
  const Rational& at(End e) const { return e == End::Left ? left : right; }
  Rational& at(End e) { return e == End::Left ? left : right; }
};

/// A marked endpoint: which arc, which end.
struct Endpoint {
  int arc = 0;
  End end = End::Left;

  friend bool operator==(const Endpoint&, const Endpoint&) = default;
};

/// Immutable, validated arc diagram of genus g: 2g arcs with pairwise distinct
/// rational endpoints and integer period coordinates consistent with the
/// fixed basis lengths. Arcs are stored by id (1..2g).
class ArcDiagram {
 public:
  /// Validates every invariant; throws Error with kind DuplicateEndpoint,
  /// InconsistentLattice, BadArity or InvalidArc.
  ArcDiagram(std::vector<Arc> arcs, std::vector<Rational> basis_lengths);

  int genus() const { return static_cast<int>(arcs_.size() / 2); }
  std::size_t size() const { return arcs_.size(); }
  const std::vector<Arc>& arcs() const { return arcs_; }
  const Arc& arc(int id) const;
  const std::vector<Rational>& basis() const { return basis_; }

  /// Endpoints sorted by coordinate, left to right.
  std::vector<Endpoint> endpoint_order() const;
  const Rational& coordinate(const Endpoint& e) const { return arc(e.arc).at(e.end); }

  /// Lattice vectors as rows, row i = arc with id i+1.
  IntMatrix lattice_by_id() const;
  /// Lattice vectors as rows in canonical (left-endpoint) order.
  IntMatrix lattice_canonical() const;

  friend bool operator==(const ArcDiagram& a, const ArcDiagram& b);

 private:
  std::vector<Arc> arcs_;
  std::vector<Rational> basis_;
};

ArcDiagram new_diagram(std::vector<Arc> arcs, std::vector<Rational> basis_lengths);

// canonical_numbering(d)[k] is the id of the arc with the (k+1)-th smallest
// left endpoint.
std::vector<int> canonical_numbering(const ArcDiagram& d);

bool arcs_cross(const Arc& a, const Arc& b);
bool arcs_nested(const Arc& a, const Arc& b);

// Entries in canonical numbering: +1 above the diagonal for crossing arcs,
// -1 below, 0 otherwise.
IntMatrix intersection_matrix(const ArcDiagram& d);

// Odd determinant of the intersection matrix, decided over GF(2).
bool is_admissible(const ArcDiagram& d);

ArcDiagram translate(const ArcDiagram& d, const Rational& delta);

// Same genus and basis, and some translation maps the endpoint sets with their
// pairings and lattice vectors onto each other. Arc ids are ignored.
bool equal_up_to_translation(const ArcDiagram& a, const ArcDiagram& b);

// Diagram with arc ids renumbered into canonical order.
ArcDiagram renumber_canonically(const ArcDiagram& d);

}  // namespace isoperiod

#endif  // ISOPERIOD_DIAGRAM_HPP
