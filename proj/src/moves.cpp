#include "isoperiod/moves.hpp"

#include <algorithm>
#include <optional>
#include <string>

#include "isoperiod/error.hpp"

namespace isoperiod {

namespace {

std::string describe(const Vasiliev& m) {
  return "vasiliev " + std::to_string(m.moved_id) + " " + std::to_string(m.fixed_id) + " " +
         (m.moved_end == End::Left ? "L" : "R");
}

std::size_t index_of(const std::vector<Endpoint>& order, const Endpoint& e) {
  return static_cast<std::size_t>(std::find(order.begin(), order.end(), e) - order.begin());
}

struct VasilievPlan {
  End fixed_near;  // which end of the fixed arc plays q
  Rational d;      // p - q
  Rational new_p;
  Rational new_m;
};

enum class Verdict { Ok, NotApplicable, Degenerate };

struct Analysis {
  Verdict verdict = Verdict::NotApplicable;
  std::string reason;
  std::optional<VasilievPlan> plan;
};

Analysis analyse(const ArcDiagram& d, const Vasiliev& m) {
  Analysis out;
  const int n = static_cast<int>(d.size());
  if (m.moved_id < 1 || m.moved_id > n || m.fixed_id < 1 || m.fixed_id > n) {
    out.reason = "arc id out of range";
    return out;
  }
  if (m.moved_id == m.fixed_id) {
    out.reason = "moved and fixed arcs coincide";
    return out;
  }
  const Arc& moved = d.arc(m.moved_id);
  const Arc& fixed = d.arc(m.fixed_id);
  const auto order = d.endpoint_order();
  const Endpoint p_label{m.moved_id, m.moved_end};
  const std::size_t p_pos = index_of(order, p_label);

  // Fixed endpoints sitting right next to p in the linear order.
  std::optional<End> near;
  for (const End e : {End::Left, End::Right}) {
    const std::size_t q_pos = index_of(order, Endpoint{m.fixed_id, e});
    const std::size_t gap = p_pos > q_pos ? p_pos - q_pos : q_pos - p_pos;
    if (gap != 1) continue;
    if (!near) {
      near = e;
      continue;
    }
    const Rational& p = moved.at(m.moved_end);
    const Rational d_old = abs(p - fixed.at(*near));
    const Rational d_new = abs(p - fixed.at(e));
    if (d_new == d_old) {
      out.reason = "dragged endpoint is equidistant from both fixed endpoints";
      return out;
    }
    if (d_new < d_old) near = e;
  }
  if (!near) {
    out.reason = "no fixed endpoint adjacent to the dragged endpoint";
    return out;
  }

  const Rational& p = moved.at(m.moved_end);
  const Rational& mo = moved.at(opposite(m.moved_end));
  const Rational& q = fixed.at(*near);
  const Rational& q_far = fixed.at(opposite(*near));
  VasilievPlan plan{*near, p - q, 0, 0};
  plan.new_p = q_far - plan.d;
  plan.new_m = mo - 2 * plan.d;

  const bool keeps_orientation =
      m.moved_end == End::Right ? plan.new_m < plan.new_p : plan.new_p < plan.new_m;
  if (!keeps_orientation) {
    out.verdict = Verdict::Degenerate;
    out.reason = "dragged arc would flip or collapse";
    return out;
  }

  // The endpoint order after the move must be the old order with p relocated
  // next to q', on the side opposite to where it sat relative to q.
  std::vector<Endpoint> expected = order;
  expected.erase(expected.begin() + static_cast<std::ptrdiff_t>(p_pos));
  const std::size_t far_pos = index_of(expected, Endpoint{m.fixed_id, opposite(*near)});
  const std::size_t insert_at = plan.d < 0 ? far_pos + 1 : far_pos;
  expected.insert(expected.begin() + static_cast<std::ptrdiff_t>(insert_at), p_label);

  std::vector<std::pair<Rational, Endpoint>> placed;
  placed.reserve(order.size());
  for (const auto& e : order) {
    Rational x = d.coordinate(e);
    if (e.arc == m.moved_id) x = e.end == m.moved_end ? plan.new_p : plan.new_m;
    placed.emplace_back(std::move(x), e);
  }
  std::sort(placed.begin(), placed.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  for (std::size_t i = 0; i < placed.size(); ++i) {
    if (i + 1 < placed.size() && placed[i].first == placed[i + 1].first) {
      out.verdict = Verdict::Degenerate;
      out.reason = "landing position collides with an endpoint";
      return out;
    }
    if (!(placed[i].second == expected[i])) {
      out.verdict = Verdict::Degenerate;
      out.reason = "drag would sweep across another endpoint";
      return out;
    }
  }
  out.verdict = Verdict::Ok;
  out.plan = plan;
  return out;
}

}  // namespace

ArcDiagram apply_shift(const ArcDiagram& d, int arc_id, const Rational& delta) {
  const Arc& target = d.arc(arc_id);
  if (delta == 0) fail(ErrorKind::NotApplicable, "shift by zero");
  const auto before = d.endpoint_order();
  std::vector<Arc> arcs = d.arcs();
  arcs[arc_id - 1].left = target.left + delta;
  arcs[arc_id - 1].right = target.right + delta;
  ArcDiagram out(std::move(arcs), d.basis());
  if (out.endpoint_order() != before)
    fail(ErrorKind::OrderChanged, "shifting arc " + std::to_string(arc_id) + " by " +
                                      format_rational(delta) + " changes the endpoint order");
  return out;
}

bool vasiliev_applicable(const ArcDiagram& d, const Vasiliev& m) {
  return analyse(d, m).verdict == Verdict::Ok;
}

MoveResult apply_vasiliev(const ArcDiagram& d, const Vasiliev& m) {
  const Analysis a = analyse(d, m);
  if (a.verdict == Verdict::NotApplicable)
    fail(ErrorKind::NotApplicable, describe(m) + ": " + a.reason);
  if (a.verdict == Verdict::Degenerate)
    fail(ErrorKind::DegenerateResult, describe(m) + ": " + a.reason);
  const VasilievPlan& plan = *a.plan;

  const Arc& moved = d.arc(m.moved_id);
  const Arc& fixed = d.arc(m.fixed_id);
  std::vector<Arc> arcs = d.arcs();
  Arc& out_arc = arcs[m.moved_id - 1];
  out_arc.at(m.moved_end) = plan.new_p;
  out_arc.at(opposite(m.moved_end)) = plan.new_m;
  const Rational change = out_arc.length() - moved.length();
  const int sigma = change == fixed.length() ? 1 : -1;
  if (sigma == -1 && change != -fixed.length())
    fail(ErrorKind::InternalCheckFailed, describe(m) + ": length change is not +-fixed length");
  for (std::size_t k = 0; k < out_arc.lattice.size(); ++k)
    out_arc.lattice[k] += sigma * fixed.lattice[k];

  ArcDiagram next(std::move(arcs), d.basis());
  if (is_admissible(d) && !is_admissible(next))
    fail(ErrorKind::InternalCheckFailed, describe(m) + ": admissibility was not preserved");

  IntMatrix matrix = IntMatrix::identity(d.size());
  matrix(m.moved_id - 1, m.fixed_id - 1) = sigma;
  return {std::move(next), std::move(matrix)};
}

IntMatrix move_matrix(const ArcDiagram& d, const Move& m) {
  if (const auto* s = std::get_if<Shift>(&m)) {
    apply_shift(d, s->arc_id, s->delta);
    return IntMatrix::identity(d.size());
  }
  return apply_vasiliev(d, std::get<Vasiliev>(m)).matrix;
}

MoveResult apply_move(const ArcDiagram& d, const Move& m) {
  if (const auto* s = std::get_if<Shift>(&m))
    return {apply_shift(d, s->arc_id, s->delta), IntMatrix::identity(d.size())};
  return apply_vasiliev(d, std::get<Vasiliev>(m));
}

MoveResult apply_sequence(const ArcDiagram& d, const std::vector<Move>& moves) {
  MoveResult acc{d, IntMatrix::identity(d.size())};
  for (std::size_t i = 0; i < moves.size(); ++i) {
    try {
      MoveResult step = apply_move(acc.diagram, moves[i]);
      acc.matrix = step.matrix * acc.matrix;
      acc.diagram = std::move(step.diagram);
    } catch (const SequenceError&) {
      throw;
    } catch (const Error& e) {
      throw SequenceError(e.kind(), i, "move " + std::to_string(i) + ": " + e.what());
    }
  }
  return acc;
}

Move inverse_move(const Move& m) {
  if (const auto* s = std::get_if<Shift>(&m)) return Shift{s->arc_id, -s->delta};
  return m;
}

std::vector<Move> inverse_sequence(const std::vector<Move>& moves) {
  std::vector<Move> out;
  out.reserve(moves.size());
  for (auto it = moves.rbegin(); it != moves.rend(); ++it) out.push_back(inverse_move(*it));
  return out;
}

}  // namespace isoperiod
