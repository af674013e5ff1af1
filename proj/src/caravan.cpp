#include "isoperiod/caravan.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <memory>
#include <queue>
#include <set>
#include <string>

#include "isoperiod/error.hpp"
#include "isoperiod/layout.hpp"

namespace isoperiod {

bool is_caravan(const ArcDiagram& d) {
  const auto order = d.endpoint_order();
  for (std::size_t k = 0; k < order.size(); k += 4) {
    const int a = order[k].arc;
    const int b = order[k + 1].arc;
    if (a == b || order[k + 2].arc != a || order[k + 3].arc != b) return false;
  }
  return true;
}

PeriodVector period_vector(const ArcDiagram& d) {
  if (!is_caravan(d)) fail(ErrorKind::NotACaravan, "period vector requested for a non-caravan");
  PeriodVector p{d.genus(), {}};
  for (int id : canonical_numbering(d)) p.lengths.push_back(d.arc(id).length());
  return p;
}

ArcDiagram caravan_from_periods(const PeriodVector& p,
                                const std::vector<std::vector<Integer>>& basis_lattice,
                                const std::vector<Rational>& basis_lengths) {
  const std::size_t n = p.lengths.size();
  if (n == 0 || n % 2 != 0 || static_cast<int>(n) != 2 * p.genus)
    fail(ErrorKind::BadArity, "period vector must have 2g entries");
  if (basis_lattice.size() != n || basis_lengths.size() != n)
    fail(ErrorKind::BadArity, "lattice data does not match the period vector size");
  for (const auto& x : p.lengths)
    if (x <= 0) fail(ErrorKind::NonPositiveLength, "period entries must be positive");
  for (std::size_t i = 0; i < n; ++i)
    if (dot(basis_lattice[i], basis_lengths) != p.lengths[i])
      fail(ErrorKind::InconsistentLattice,
           "period entry " + std::to_string(i + 1) + " disagrees with its lattice vector");

  std::vector<Arc> arcs;
  arcs.reserve(n);
  Rational offset = 0;
  for (std::size_t k = 0; k < n; k += 2) {
    const Rational& x = p.lengths[k];
    const Rational& y = p.lengths[k + 1];
    const Rational low = x > y ? Rational(x - y) : Rational(0);
    const Rational h = (low + x) / 2;
    arcs.push_back({static_cast<int>(k) + 1, offset, offset + x, basis_lattice[k]});
    arcs.push_back({static_cast<int>(k) + 2, offset + h, offset + h + y, basis_lattice[k + 1]});
    offset += h + y + 1;
  }
  return ArcDiagram(std::move(arcs), basis_lengths);
}

ArcDiagram standard_caravan(const std::vector<Rational>& basis_lengths) {
  const std::size_t n = basis_lengths.size();
  std::vector<std::vector<Integer>> lattice(n, std::vector<Integer>(n, Integer(0)));
  for (std::size_t i = 0; i < n; ++i) lattice[i][i] = 1;
  return caravan_from_periods({static_cast<int>(n / 2), basis_lengths}, lattice, basis_lengths);
}

std::vector<std::vector<Integer>> caravan_lattice(const ArcDiagram& d) {
  return d.lattice_canonical().to_rows();
}

IntMatrix caravan_form(int genus) {
  const auto n = static_cast<std::size_t>(2 * genus);
  IntMatrix j(n, n);
  for (std::size_t k = 0; k < n; k += 2) {
    j(k, k + 1) = 1;
    j(k + 1, k) = -1;
  }
  return j;
}

std::size_t caravan_defect(const ArcDiagram& d) {
  const auto& arcs = d.arcs();
  std::size_t crossings = 0;
  std::size_t nested = 0;
  for (std::size_t i = 0; i < arcs.size(); ++i)
    for (std::size_t j = i + 1; j < arcs.size(); ++j) {
      if (arcs_cross(arcs[i], arcs[j])) ++crossings;
      if (arcs_nested(arcs[i], arcs[j])) ++nested;
    }
  const auto g = static_cast<std::size_t>(d.genus());
  return (crossings > g ? crossings - g : g - crossings) + nested;
}

std::size_t default_search_budget() {
  if (const char* env = std::getenv("ISOPERIOD_SEARCH_BUDGET")) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
  }
  return 20000;
}

namespace {

std::string state_key(const ArcDiagram& d) {
  std::string key;
  for (const auto& e : d.endpoint_order()) {
    key += std::to_string(e.arc);
    key += e.end == End::Left ? 'l' : 'r';
  }
  key += '|';
  for (const auto& a : d.arcs())
    for (const auto& v : a.lattice) {
      key += v.get_str();
      key += ',';
    }
  return key;
}

struct Node {
  ArcDiagram diagram;
  int parent;
  DragOption via;
  std::size_t depth;
};

struct Ranked {
  std::size_t defect;
  Rational total_length;
  std::size_t depth;
  int index;
};

struct RankedWorse {
  bool operator()(const Ranked& a, const Ranked& b) const {
    if (a.defect + a.depth != b.defect + b.depth) return a.defect + a.depth > b.defect + b.depth;
    if (a.defect != b.defect) return a.defect > b.defect;
    if (a.total_length != b.total_length) return a.total_length > b.total_length;
    if (a.depth != b.depth) return a.depth > b.depth;
    return a.index > b.index;
  }
};

// Child of a prepared drag laid out directly at the realized order, without
// the shifts that carry the actual diagram there. Same order and lattice as
// drag() produces, so search can run on these and replay only the winner.
std::optional<ArcDiagram> planned_drag(const ArcDiagram& d, const DragOption& opt) {
  const Vasiliev& m = opt.move;
  const auto order = d.endpoint_order();
  const auto p_it = std::find(order.begin(), order.end(), Endpoint{m.moved_id, m.moved_end});
  const auto q_it = std::find(order.begin(), order.end(), Endpoint{m.fixed_id, opt.fixed_near});
  const auto p_pos = static_cast<std::size_t>(p_it - order.begin());
  const auto q_pos = static_cast<std::size_t>(q_it - order.begin());
  std::vector<Rational> lengths;
  for (const auto& a : d.arcs()) lengths.push_back(a.length());
  const auto lefts = realize_order(order, lengths, std::min(p_pos, q_pos));
  if (!lefts) return std::nullopt;
  std::vector<Arc> arcs = d.arcs();
  for (auto& a : arcs) {
    a.left = (*lefts)[a.id - 1];
    a.right = a.left + lengths[a.id - 1];
  }
  const ArcDiagram laid(std::move(arcs), d.basis());
  if (!vasiliev_applicable(laid, m)) return std::nullopt;
  try {
    return apply_vasiliev(laid, m).diagram;
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::DegenerateResult) return std::nullopt;  // flip
    throw;
  }
}

Rational total_length(const ArcDiagram& d) {
  Rational sum = 0;
  for (const auto& a : d.arcs()) sum += a.length();
  return sum;
}

}  // namespace

Reduction reduce_to_caravan(const ArcDiagram& d, std::size_t budget) {
  if (!is_admissible(d))
    fail(ErrorKind::NotApplicable, "reduction requires an admissible diagram");
  if (is_caravan(d)) return {d, {}, IntMatrix::identity(d.size()), 0};

  std::vector<Node> nodes;
  nodes.push_back({d, -1, {}, 0});
  std::priority_queue<Ranked, std::vector<Ranked>, RankedWorse> open;
  open.push({caravan_defect(d), total_length(d), 0, 0});
  std::set<std::string> seen{state_key(d)};

  std::size_t expanded = 0;
  int found = -1;
  while (!open.empty() && found < 0) {
    if (expanded >= budget)
      fail(ErrorKind::SearchExhausted,
           "no caravan found within " + std::to_string(budget) + " search nodes");
    const Ranked top = open.top();
    open.pop();
    ++expanded;
    const ArcDiagram current = nodes[top.index].diagram;
    for (const DragOption& opt : drag_options(current)) {
      std::optional<ArcDiagram> next;
      try {
        next = planned_drag(current, opt);
      } catch (const Error& e) {
        fail(ErrorKind::DegenerateEncountered, std::string("reduction hit ") + e.what());
      }
      if (!next) continue;
      if (!seen.insert(state_key(*next)).second) continue;
      nodes.push_back({*next, top.index, opt, top.depth + 1});
      const int index = static_cast<int>(nodes.size()) - 1;
      if (is_caravan(*next)) {
        found = index;
        break;
      }
      open.push({caravan_defect(*next), total_length(*next), top.depth + 1, index});
    }
  }
  if (found < 0)
    fail(ErrorKind::SearchExhausted, "search space exhausted without reaching a caravan");

  std::vector<DragOption> path;
  std::vector<int> steps;
  for (int i = found; nodes[i].parent >= 0; i = nodes[i].parent) {
    path.push_back(nodes[i].via);
    steps.push_back(i);
  }
  std::reverse(path.begin(), path.end());
  std::reverse(steps.begin(), steps.end());

  Reduction out{d, {}, IntMatrix::identity(d.size()), expanded};
  for (std::size_t i = 0; i < path.size(); ++i) {
    const auto& opt = path[i];
    auto step = drag(out.caravan, opt.move, opt.fixed_near);
    if (!step || state_key(step->diagram) != state_key(nodes[steps[i]].diagram))
      fail(ErrorKind::InternalCheckFailed, "replay of a reduction step failed");
    out.moves.insert(out.moves.end(), step->moves.begin(), step->moves.end());
    out.caravan = std::move(step->diagram);
  }
  out.matrix = apply_sequence(d, out.moves).matrix;
  if (!is_caravan(out.caravan))
    fail(ErrorKind::InternalCheckFailed, "reduction ended on a non-caravan");
  return out;
}

}  // namespace isoperiod
