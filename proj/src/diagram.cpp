#include "isoperiod/diagram.hpp"

#include <algorithm>
#include <bitset>
#include <numeric>
#include <string>

#include "isoperiod/error.hpp"

namespace isoperiod {

ArcDiagram::ArcDiagram(std::vector<Arc> arcs, std::vector<Rational> basis_lengths)
    : basis_(std::move(basis_lengths)) {
  if (basis_.empty() || basis_.size() % 2 != 0)
    fail(ErrorKind::BadArity, "basis must have 2g > 0 entries, got " + std::to_string(basis_.size()));
  for (const auto& b : basis_)
    if (b <= 0) fail(ErrorKind::InvalidArc, "basis lengths must be positive");
  const std::size_t n = basis_.size();
  if (arcs.size() != n)
    fail(ErrorKind::BadArity, "expected " + std::to_string(n) + " arcs, got " +
                                  std::to_string(arcs.size()));

  arcs_.resize(n);
  std::vector<bool> seen(n, false);
  for (auto& a : arcs) {
    if (a.id < 1 || static_cast<std::size_t>(a.id) > n || seen[a.id - 1])
      fail(ErrorKind::InvalidArc, "arc ids must be a permutation of 1.." + std::to_string(n));
    seen[a.id - 1] = true;
    if (!(a.left < a.right))
      fail(ErrorKind::InvalidArc, "arc " + std::to_string(a.id) + " has left >= right");
    if (a.lattice.size() != n)
      fail(ErrorKind::BadArity, "arc " + std::to_string(a.id) + " lattice vector has wrong size");
    const int id = a.id;
    arcs_[id - 1] = std::move(a);
  }

  std::vector<Rational> coords;
  coords.reserve(2 * n);
  for (const auto& a : arcs_) {
    coords.push_back(a.left);
    coords.push_back(a.right);
  }
  std::sort(coords.begin(), coords.end());
  if (std::adjacent_find(coords.begin(), coords.end()) != coords.end())
    fail(ErrorKind::DuplicateEndpoint, "coincident endpoint coordinates");

  for (const auto& a : arcs_)
    if (a.length() != dot(a.lattice, basis_))
      fail(ErrorKind::InconsistentLattice,
           "arc " + std::to_string(a.id) + " has length " + format_rational(a.length()) +
               " but lattice gives " + format_rational(dot(a.lattice, basis_)));
}

const Arc& ArcDiagram::arc(int id) const {
  if (id < 1 || static_cast<std::size_t>(id) > arcs_.size())
    fail(ErrorKind::BadIndex, "no arc with id " + std::to_string(id));
  return arcs_[id - 1];
}

std::vector<Endpoint> ArcDiagram::endpoint_order() const {
  std::vector<Endpoint> out;
  out.reserve(2 * arcs_.size());
  for (const auto& a : arcs_) {
    out.push_back({a.id, End::Left});
    out.push_back({a.id, End::Right});
  }
  std::sort(out.begin(), out.end(), [this](const Endpoint& x, const Endpoint& y) {
    return coordinate(x) < coordinate(y);
  });
  return out;
}

IntMatrix ArcDiagram::lattice_by_id() const {
  const std::size_t n = arcs_.size();
  IntMatrix m(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) m(r, c) = arcs_[r].lattice[c];
  return m;
}

IntMatrix ArcDiagram::lattice_canonical() const {
  const auto order = canonical_numbering(*this);
  const std::size_t n = arcs_.size();
  IntMatrix m(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) m(r, c) = arc(order[r]).lattice[c];
  return m;
}

bool operator==(const ArcDiagram& a, const ArcDiagram& b) {
  if (a.basis_ != b.basis_ || a.arcs_.size() != b.arcs_.size()) return false;
  for (std::size_t i = 0; i < a.arcs_.size(); ++i) {
    const Arc& x = a.arcs_[i];
    const Arc& y = b.arcs_[i];
    if (x.left != y.left || x.right != y.right || x.lattice != y.lattice) return false;
  }
  return true;
}

ArcDiagram new_diagram(std::vector<Arc> arcs, std::vector<Rational> basis_lengths) {
  return ArcDiagram(std::move(arcs), std::move(basis_lengths));
}

std::vector<int> canonical_numbering(const ArcDiagram& d) {
  std::vector<int> ids(d.size());
  std::iota(ids.begin(), ids.end(), 1);
  std::sort(ids.begin(), ids.end(),
            [&d](int a, int b) { return d.arc(a).left < d.arc(b).left; });
  return ids;
}

bool arcs_cross(const Arc& a, const Arc& b) {
  const auto inside = [&a](const Rational& x) { return a.left < x && x < a.right; };
  return inside(b.left) != inside(b.right);
}

bool arcs_nested(const Arc& a, const Arc& b) {
  return (a.left < b.left && b.right < a.right) || (b.left < a.left && a.right < b.right);
}

IntMatrix intersection_matrix(const ArcDiagram& d) {
  const auto order = canonical_numbering(d);
  const std::size_t n = order.size();
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (arcs_cross(d.arc(order[i]), d.arc(order[j]))) {
        m(i, j) = 1;
        m(j, i) = -1;
      }
  return m;
}

bool is_admissible(const ArcDiagram& d) {
  // Genus is small in practice; 64 columns covers g <= 32.
  constexpr std::size_t kMax = 64;
  const std::size_t n = d.size();
  if (n > kMax) fail(ErrorKind::BadArity, "admissibility check supports at most 64 arcs");
  const IntMatrix m = intersection_matrix(d);
  std::vector<std::bitset<kMax>> rows(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) rows[i][j] = m(i, j) != 0;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && !rows[pivot][col]) ++pivot;
    if (pivot == n) return false;
    std::swap(rows[pivot], rows[col]);
    for (std::size_t r = col + 1; r < n; ++r)
      if (rows[r][col]) rows[r] ^= rows[col];
  }
  return true;
}

ArcDiagram translate(const ArcDiagram& d, const Rational& delta) {
  std::vector<Arc> arcs = d.arcs();
  for (auto& a : arcs) {
    a.left += delta;
    a.right += delta;
  }
  return ArcDiagram(std::move(arcs), d.basis());
}

bool equal_up_to_translation(const ArcDiagram& a, const ArcDiagram& b) {
  if (a.genus() != b.genus() || a.basis() != b.basis()) return false;
  const auto oa = canonical_numbering(a);
  const auto ob = canonical_numbering(b);
  const Rational delta = b.arc(ob[0]).left - a.arc(oa[0]).left;
  for (std::size_t k = 0; k < oa.size(); ++k) {
    const Arc& x = a.arc(oa[k]);
    const Arc& y = b.arc(ob[k]);
    if (x.left + delta != y.left || x.right + delta != y.right || x.lattice != y.lattice)
      return false;
  }
  return true;
}

ArcDiagram renumber_canonically(const ArcDiagram& d) {
  const auto order = canonical_numbering(d);
  std::vector<Arc> arcs;
  arcs.reserve(order.size());
  for (std::size_t k = 0; k < order.size(); ++k) {
    Arc a = d.arc(order[k]);
    a.id = static_cast<int>(k) + 1;
    arcs.push_back(std::move(a));
  }
  return ArcDiagram(std::move(arcs), d.basis());
}

}  // namespace isoperiod
