#include "isoperiod/layout.hpp"

#include <algorithm>
#include <string>

#include "isoperiod/error.hpp"

namespace isoperiod {

namespace {

struct Edge {
  std::size_t from;
  std::size_t to;
  Rational weight;  // pos_left[to] >= pos_left[from] + weight
};

Rational offset(const Endpoint& e, const std::vector<Rational>& lengths) {
  return e.end == End::Left ? Rational(0) : lengths[e.arc - 1];
}

std::optional<std::vector<Rational>> solve(const std::vector<Endpoint>& order,
                                           const std::vector<Rational>& lengths,
                                           std::optional<std::size_t> tight, const Rational& s,
                                           const Pins& pins) {
  const std::size_t n = lengths.size();
  const std::size_t ref = n;  // origin node, only used with pins
  std::vector<Edge> edges;
  edges.reserve(order.size() + 1);
  for (std::size_t j = 0; j + 1 < order.size(); ++j) {
    const Endpoint& u = order[j];
    const Endpoint& w = order[j + 1];
    const Rational gap = (tight && *tight == j) ? Rational(s / 4) : s;
    const Rational base = offset(u, lengths) - offset(w, lengths);
    const std::size_t a = static_cast<std::size_t>(u.arc - 1);
    const std::size_t b = static_cast<std::size_t>(w.arc - 1);
    edges.push_back({a, b, gap + base});
    if (tight && *tight == j) edges.push_back({b, a, -gap - base});
  }
  bool pinned = false;
  for (std::size_t i = 0; i < pins.size() && i < n; ++i)
    if (pins[i]) {
      pinned = true;
      edges.push_back({ref, i, *pins[i]});
      edges.push_back({i, ref, -*pins[i]});
    }
  std::vector<Rational> dist(n + 1, Rational(0));
  for (std::size_t round = 0; round <= n + 1; ++round) {
    bool changed = false;
    for (const Edge& e : edges) {
      const Rational cand = dist[e.from] + e.weight;
      if (cand > dist[e.to]) {
        dist[e.to] = cand;
        changed = true;
      }
    }
    if (!changed) {
      const Rational origin =
          pinned ? dist[ref] : Rational(dist[order.front().arc - 1] + offset(order.front(), lengths));
      dist.pop_back();
      for (auto& v : dist) v -= origin;
      return dist;
    }
  }
  return std::nullopt;
}

std::vector<Rational> lefts_of(const ArcDiagram& d) {
  std::vector<Rational> out;
  out.reserve(d.size());
  for (const auto& a : d.arcs()) out.push_back(a.left);
  return out;
}

std::vector<Rational> lengths_of(const ArcDiagram& d) {
  std::vector<Rational> out;
  out.reserve(d.size());
  for (const auto& a : d.arcs()) out.push_back(a.length());
  return out;
}

void transport_into(ArcDiagram& cur, const std::vector<Rational>& target,
                    std::vector<Move>& moves, int depth) {
  if (depth > 200) fail(ErrorKind::InternalCheckFailed, "transport did not converge");
  for (;;) {
    bool pending = false;
    bool progressed = false;
    for (const auto& a : cur.arcs()) {
      const Rational delta = target[a.id - 1] - a.left;
      if (delta == 0) continue;
      if (shift_applicable(cur, a.id, delta)) {
        const int id = a.id;
        cur = apply_shift(cur, id, delta);
        moves.push_back(Shift{id, delta});
        progressed = true;
        break;
      }
      pending = true;
    }
    if (!pending && !progressed) return;
    if (!progressed) break;
  }
  // Blocked: go through the midpoint of the current and target layouts, which
  // realizes the same order by convexity.
  std::vector<Rational> mid = lefts_of(cur);
  for (std::size_t i = 0; i < mid.size(); ++i) mid[i] = (mid[i] + target[i]) / 2;
  transport_into(cur, mid, moves, depth + 1);
  transport_into(cur, target, moves, depth + 1);
}

}  // namespace

std::optional<std::vector<Rational>> realize_order(const std::vector<Endpoint>& order,
                                                   const std::vector<Rational>& lengths_by_id,
                                                   std::optional<std::size_t> tight_gap,
                                                   const Pins& pins) {
  if (lengths_by_id.empty()) return std::nullopt;
  Rational s = *std::min_element(lengths_by_id.begin(), lengths_by_id.end());
  if (s <= 0) return std::nullopt;
  s /= static_cast<long>(order.size());
  for (int attempt = 0; attempt < 64; ++attempt) {
    if (auto sol = solve(order, lengths_by_id, tight_gap, s, pins)) return sol;
    s /= 2;
  }
  return std::nullopt;
}

bool shift_applicable(const ArcDiagram& d, int arc_id, const Rational& delta) {
  if (delta == 0) return false;
  const Arc& a = d.arc(arc_id);
  const Rational nl = a.left + delta;
  const Rational nr = a.right + delta;
  // Order is kept iff no other endpoint lies between an old and new position
  // (inclusive of the new one).
  for (const auto& b : d.arcs()) {
    if (b.id == arc_id) continue;
    for (const Rational* x : {&b.left, &b.right}) {
      for (const auto& [from, to] : {std::pair{a.left, nl}, std::pair{a.right, nr}}) {
        const bool between = delta > 0 ? (from < *x && *x <= to) : (to <= *x && *x < from);
        if (between) return false;
      }
    }
  }
  return true;
}

Transported transport(const ArcDiagram& from, const std::vector<Rational>& target_lefts) {
  if (target_lefts.size() != from.size())
    fail(ErrorKind::SizeMismatch, "transport target has wrong size");
  ArcDiagram cur = from;
  std::vector<Move> moves;
  transport_into(cur, target_lefts, moves, 0);
  return {std::move(cur), std::move(moves)};
}

Transported transport_shape(const ArcDiagram& from, const std::vector<Rational>& target_lefts) {
  const auto order = from.endpoint_order();
  const Endpoint& first = order.front();
  const Rational target_first =
      target_lefts[first.arc - 1] + (first.end == End::Left ? Rational(0) : from.arc(first.arc).length());
  const Rational delta = from.coordinate(first) - target_first;
  std::vector<Rational> aligned = target_lefts;
  for (auto& v : aligned) v += delta;
  return transport(from, aligned);
}

Transported relax(const ArcDiagram& d) {
  auto lefts = realize_order(d.endpoint_order(), lengths_of(d));
  if (!lefts) fail(ErrorKind::InternalCheckFailed, "a valid diagram must realize its own order");
  return transport_shape(d, *lefts);
}

std::optional<Transported> drag(const ArcDiagram& d, const Vasiliev& m, End fixed_near,
                                const std::vector<int>& pinned) {
  if (m.moved_id == m.fixed_id) return std::nullopt;
  const auto order = d.endpoint_order();
  const Endpoint p{m.moved_id, m.moved_end};
  const Endpoint q{m.fixed_id, fixed_near};
  const auto p_it = std::find(order.begin(), order.end(), p);
  const auto q_it = std::find(order.begin(), order.end(), q);
  if (p_it == order.end() || q_it == order.end()) return std::nullopt;
  const auto p_pos = static_cast<std::size_t>(p_it - order.begin());
  const auto q_pos = static_cast<std::size_t>(q_it - order.begin());
  if (p_pos + 1 != q_pos && q_pos + 1 != p_pos) return std::nullopt;

  // After the move the arc length changes by +-fixed length; a flip is never
  // realizable, so reject early.
  const Arc& moved = d.arc(m.moved_id);
  const Arc& fixed = d.arc(m.fixed_id);
  const Rational travel = fixed.at(opposite(fixed_near)) - fixed.at(fixed_near);
  const Rational new_len = m.moved_end == End::Right ? Rational(moved.length() + travel)
                                                     : Rational(moved.length() - travel);
  if (new_len <= 0) return std::nullopt;

  Pins pins;
  if (!pinned.empty()) {
    pins.assign(d.size(), std::nullopt);
    for (int id : pinned) {
      if (id == m.moved_id || id == m.fixed_id) return std::nullopt;
      pins[id - 1] = d.arc(id).left;
    }
  }
  const auto lefts = realize_order(order, lengths_of(d), std::min(p_pos, q_pos), pins);
  if (!lefts) return std::nullopt;
  Transported prepared = pinned.empty() ? transport_shape(d, *lefts) : transport(d, *lefts);
  if (!vasiliev_applicable(prepared.diagram, m)) return std::nullopt;
  MoveResult r = apply_vasiliev(prepared.diagram, m);
  prepared.moves.push_back(m);
  prepared.diagram = std::move(r.diagram);
  return prepared;
}

std::vector<DragOption> drag_options(const ArcDiagram& d) {
  std::vector<DragOption> out;
  const auto order = d.endpoint_order();
  for (std::size_t j = 0; j + 1 < order.size(); ++j) {
    const Endpoint& u = order[j];
    const Endpoint& w = order[j + 1];
    if (u.arc == w.arc) continue;
    out.push_back({Vasiliev{u.arc, w.arc, u.end}, w.end});
    out.push_back({Vasiliev{w.arc, u.arc, w.end}, u.end});
  }
  return out;
}

}  // namespace isoperiod
