#include "isoperiod/planner.hpp"

#include <algorithm>
#include <deque>
#include <optional>
#include <map>
#include <string>

#include "isoperiod/error.hpp"
#include "isoperiod/layout.hpp"

namespace isoperiod {

namespace {

Integer floor_of(const Rational& r) {
  Integer out;
  mpz_fdiv_q(out.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
  return out;
}

// Smallest n >= 0 with base + n * step > threshold (step > 0).
Integer minimal_multiplier(const Rational& base, const Rational& step, const Rational& threshold) {
  if (base > threshold) return 0;
  return floor_of((threshold - base) / step) + 1;
}

// (x,y) -> (y,-x) on a pair of rows.
void rotate_pair(std::vector<Integer>& q, std::vector<Integer>& p) {
  std::vector<Integer> new_p = q;
  for (auto& v : new_p) v = -v;
  q = std::move(p);
  p = std::move(new_p);
}

struct State {
  ArcDiagram diagram;
  IntMatrix tracked;  // signed lattice rows in canonical order
  std::vector<Move> moves;
};

Rational row_length(const IntMatrix& m, std::size_t r, const std::vector<Rational>& basis) {
  return dot(m.row(r), basis);
}

// Positive representative of every pair, row by row. Throws `zero_kind` on a
// zero length.
IntMatrix positive_rows(const IntMatrix& t, const std::vector<Rational>& basis, ErrorKind zero_kind) {
  std::vector<std::vector<Integer>> rows = t.to_rows();
  for (std::size_t k = 0; k + 1 < rows.size(); k += 2) {
    for (int turn = 0;; ++turn) {
      const Rational x = dot(rows[k], basis);
      const Rational y = dot(rows[k + 1], basis);
      if (x == 0 || y == 0)
        fail(zero_kind, "pair " + std::to_string(k / 2 + 1) + " has a zero length");
      if (x > 0 && y > 0) break;
      rotate_pair(rows[k], rows[k + 1]);
    }
  }
  return IntMatrix::from_rows(rows);
}

void check_caravan(const ArcDiagram& d) {
  if (!is_caravan(d)) fail(ErrorKind::NotACaravan, "planner input is not a caravan");
}

std::vector<int> window_ids(const ArcDiagram& d, std::size_t first, std::size_t count) {
  const auto ids = canonical_numbering(d);
  return {ids.begin() + static_cast<std::ptrdiff_t>(first),
          ids.begin() + static_cast<std::ptrdiff_t>(first + count)};
}

// Pinning plans, strictest first: every arc outside the window; only the arcs
// left of it; nothing.
std::vector<std::vector<int>> pin_plans(const ArcDiagram& d, const std::vector<int>& window) {
  Rational start = d.arc(window.front()).left;
  for (int id : window) start = std::min(start, d.arc(id).left);
  std::vector<int> outside;
  std::vector<int> left_of;
  for (const auto& a : d.arcs()) {
    if (std::find(window.begin(), window.end(), a.id) != window.end()) continue;
    outside.push_back(a.id);
    if (a.right < start) left_of.push_back(a.id);
  }
  return {outside, left_of, {}};
}

void step(State& s, const Vasiliev& m, End near, const std::vector<int>& window) {
  for (const auto& pins : pin_plans(s.diagram, window)) {
    auto r = drag(s.diagram, m, near, pins);
    if (!r) continue;
    s.moves.insert(s.moves.end(), r->moves.begin(), r->moves.end());
    s.diagram = std::move(r->diagram);
    return;
  }
  fail(ErrorKind::DegenerateResult, "prepared Vasiliev move " + std::to_string(m.moved_id) + " along " +
                                        std::to_string(m.fixed_id) + " is not realizable");
}

void expect_lattice(const State& s, const char* what) {
  if (!is_caravan(s.diagram))
    fail(ErrorKind::InternalCheckFailed, std::string(what) + " left the caravan form");
  if (s.diagram.lattice_canonical() != positive_rows(s.tracked, s.diagram.basis(), ErrorKind::InternalCheckFailed))
    fail(ErrorKind::InternalCheckFailed, std::string(what) + " missed its target lattice");
}

// Single-drag operations on one caravan pair (left arc L, right arc R).
enum class PairOp { AddRight, SubRight, AddLeft, SubLeft };  // L+=R, L-=R, R+=L, R-=L

void apply_pair_op(PairOp op, std::vector<Integer>& q, std::vector<Integer>& p) {
  switch (op) {
    case PairOp::AddRight:
      for (std::size_t i = 0; i < q.size(); ++i) q[i] += p[i];
      break;
    case PairOp::SubRight:
      for (std::size_t i = 0; i < q.size(); ++i) q[i] -= p[i];
      break;
    case PairOp::AddLeft:
      for (std::size_t i = 0; i < q.size(); ++i) p[i] += q[i];
      break;
    case PairOp::SubLeft:
      for (std::size_t i = 0; i < q.size(); ++i) p[i] -= q[i];
      break;
  }
}

void drag_pair_op(State& s, std::size_t pair, PairOp op) {
  const auto window = window_ids(s.diagram, 2 * pair, 2);
  const int l = window[0];
  const int r = window[1];
  switch (op) {
    case PairOp::AddRight:
      step(s, Vasiliev{l, r, End::Right}, End::Left, window);
      break;
    case PairOp::SubRight:
      step(s, Vasiliev{l, r, End::Right}, End::Right, window);
      break;
    case PairOp::AddLeft:
      step(s, Vasiliev{r, l, End::Left}, End::Right, window);
      break;
    case PairOp::SubLeft:
      step(s, Vasiliev{r, l, End::Left}, End::Left, window);
      break;
  }
}

// Shortest list of pair operations (at most four) taking the current rows of
// the pair to `target` through positive lengths only.
std::vector<PairOp> plan_pair(std::vector<Integer> q, std::vector<Integer> p,
                              const std::vector<Integer>& target_q, const std::vector<Integer>& target_p,
                              const std::vector<Rational>& basis) {
  struct Node {
    std::vector<Integer> q, p;
    std::vector<PairOp> path;
  };
  std::deque<Node> queue{{std::move(q), std::move(p), {}}};
  while (!queue.empty()) {
    Node n = std::move(queue.front());
    queue.pop_front();
    if (n.q == target_q && n.p == target_p) return n.path;
    if (n.path.size() == 4) continue;
    for (PairOp op : {PairOp::AddRight, PairOp::SubRight, PairOp::AddLeft, PairOp::SubLeft}) {
      Node next = n;
      apply_pair_op(op, next.q, next.p);
      if (dot(next.q, basis) <= 0 || dot(next.p, basis) <= 0) continue;
      next.path.push_back(op);
      queue.push_back(std::move(next));
    }
  }
  fail(ErrorKind::InternalCheckFailed, "no short pair-operation plan for the target class");
}

void pair_letter(State& s, Family family, std::size_t pair, int exponent) {
  const int g = s.diagram.genus();
  const IntMatrix next = generator_matrix({family, static_cast<int>(pair) + 1, exponent}, g) * s.tracked;
  const auto& basis = s.diagram.basis();
  const IntMatrix target = positive_rows(next, basis, ErrorKind::DegenerateResult);
  const IntMatrix current = s.diagram.lattice_canonical();
  const auto plan = plan_pair(current.row(2 * pair), current.row(2 * pair + 1), target.row(2 * pair),
                              target.row(2 * pair + 1), basis);
  for (PairOp op : plan) drag_pair_op(s, pair, op);
  s.tracked = next;
  expect_lattice(s, "pair letter");
}

void core(State& s, std::size_t pair, int exponent) {
  const IntMatrix rows = s.diagram.lattice_canonical();
  const auto& basis = s.diagram.basis();
  const auto len = [&](std::size_t r) { return row_length(rows, 2 * pair + r, basis); };
  if (exponent == 1 && !(len(2) > len(0)))
    fail(ErrorKind::NotApplicable, "core C script needs z > x");
  if (exponent == -1 && !(len(1) > len(3)))
    fail(ErrorKind::NotApplicable, "reverse core C script needs y > t");

  const auto roles = window_ids(s.diagram, 2 * pair, 4);
  const auto& script = core_c_script();
  auto run = [&](const ScriptStep& st, End near) {
    step(s, Vasiliev{roles[st.moved_role - 1], roles[st.fixed_role - 1], st.moved_end}, near, roles);
  };
  if (exponent == 1)
    for (const auto& st : script) run(st, st.fixed_near);
  else
    for (auto it = script.rbegin(); it != script.rend(); ++it) run(*it, opposite(it->fixed_near));

  const IntMatrix c = generator_matrix({Family::C, static_cast<int>(pair) + 1, exponent}, s.diagram.genus());
  if (!is_caravan(s.diagram) || s.diagram.lattice_canonical() != c * rows)
    fail(ErrorKind::InternalCheckFailed, "core C script missed C * P");
}

void negate_pair(IntMatrix& m, std::size_t pair) {
  for (std::size_t r : {2 * pair, 2 * pair + 1})
    for (std::size_t c = 0; c < m.cols(); ++c) m(r, c) = -m(r, c);
}

void c_letter(State& s, std::size_t pair, int exponent) {
  const int g = s.diagram.genus();
  const auto& basis = s.diagram.basis();
  const IntMatrix expected = generator_matrix({Family::C, static_cast<int>(pair) + 1, exponent}, g) * s.tracked;
  positive_rows(expected, basis, ErrorKind::ZeroEntryInTarget);

  // Relabel inside the class so that x > 0 and t > 0; mixed signs turn C into C^-1.
  const bool flip_first = row_length(s.tracked, 2 * pair, basis) < 0;
  const bool flip_second = row_length(s.tracked, 2 * pair + 3, basis) < 0;
  if (flip_first) negate_pair(s.tracked, pair);
  if (flip_second) negate_pair(s.tracked, pair + 1);
  const int e = flip_first == flip_second ? exponent : -exponent;

  const auto len = [&](std::size_t r) { return row_length(s.tracked, 2 * pair + r, basis); };
  const Rational x = len(0), y = len(1), z = len(2), t = len(3);
  const Integer n1 = e == 1 ? minimal_multiplier(y, x, 0) : minimal_multiplier(y, x, t);
  const Integer n2 = e == 1 ? minimal_multiplier(z, t, x) : minimal_multiplier(z, t, 0);

  for (Integer i = 0; i < n1; ++i) pair_letter(s, Family::B, pair, 1);
  for (Integer i = 0; i < n2; ++i) pair_letter(s, Family::A, pair + 1, 1);
  core(s, pair, e);
  s.tracked = generator_matrix({Family::C, static_cast<int>(pair) + 1, e}, g) * s.tracked;
  for (Integer i = 0; i < n1; ++i) pair_letter(s, Family::B, pair, -1);
  for (Integer i = 0; i < n2; ++i) pair_letter(s, Family::A, pair + 1, -1);

  if (flip_first) negate_pair(s.tracked, pair);
  if (flip_second) negate_pair(s.tracked, pair + 1);
  if (s.tracked != expected) fail(ErrorKind::InternalCheckFailed, "C letter bookkeeping diverged");
  expect_lattice(s, "C letter");
}

void letter(State& s, const Letter& l) {
  const auto pair = static_cast<std::size_t>(l.index - 1);
  if (l.family == Family::C)
    c_letter(s, pair, l.exponent);
  else
    pair_letter(s, l.family, pair, l.exponent);
}

State start(const ArcDiagram& d) {
  check_caravan(d);
  return {d, d.lattice_canonical(), {}};
}

void check_index(int k, int top) {
  if (k < 1 || k > top) fail(ErrorKind::BadIndex, "pair index " + std::to_string(k) + " out of range");
}

Realized realize_letter(const ArcDiagram& d, const Letter& l) {
  State s = start(d);
  check_index(l.index, l.family == Family::C ? d.genus() - 1 : d.genus());
  if (l.exponent != 1 && l.exponent != -1) fail(ErrorKind::BadIndex, "exponent must be +1 or -1");
  letter(s, l);
  return {std::move(s.diagram), std::move(s.moves)};
}

// Exact rational solve of X * a = b for square a; empty when a is singular.
std::optional<std::vector<std::vector<Rational>>> right_divide(const IntMatrix& b, const IntMatrix& a) {
  // X a = b  <=>  a^T X^T = b^T.
  const std::size_t n = a.rows();
  std::vector<std::vector<Rational>> aug(n, std::vector<Rational>(2 * n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      aug[i][j] = Rational(a(j, i));
      aug[i][n + j] = Rational(b(j, i));
    }
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (piv < n && aug[piv][c] == 0) ++piv;
    if (piv == n) return std::nullopt;
    std::swap(aug[c], aug[piv]);
    const Rational lead = aug[c][c];
    for (auto& v : aug[c]) v /= lead;
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c || aug[r][c] == 0) continue;
      const Rational f = aug[r][c];
      for (std::size_t j = 0; j < 2 * n; ++j) aug[r][j] -= f * aug[c][j];
    }
  }
  std::vector<std::vector<Rational>> x(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) x[j][i] = aug[i][n + j];
  return x;
}

}  // namespace

SignClass normalize_class(const std::vector<Rational>& tuple) {
  if (tuple.size() % 2 != 0) fail(ErrorKind::BadArity, "tuple must have even length");
  SignClass out{static_cast<int>(tuple.size() / 2), tuple, {}};
  for (const auto& v : tuple)
    if (v == 0) fail(ErrorKind::ZeroEntry, "tuple has a zero entry");
  for (std::size_t k = 0; k < tuple.size(); k += 2) {
    int turns = 0;
    Rational& x = out.positive[k];
    Rational& y = out.positive[k + 1];
    while (!(x > 0 && y > 0)) {
      Rational nx = y;
      y = -x;
      x = nx;
      ++turns;
    }
    out.rotations.push_back(turns);
  }
  return out;
}

const std::array<ScriptStep, 6>& core_c_script() {
  static const std::array<ScriptStep, 6> script{{
      {3, End::Left, 2, End::Right},
      {3, End::Left, 1, End::Left},
      {3, End::Left, 2, End::Left},
      {2, End::Right, 3, End::Left},
      {2, End::Right, 4, End::Left},
      {2, End::Right, 3, End::Right},
  }};
  return script;
}

Realized run_core_c(const ArcDiagram& caravan, int k, int exponent) {
  State s = start(caravan);
  check_index(k, caravan.genus() - 1);
  if (exponent != 1 && exponent != -1) fail(ErrorKind::BadIndex, "exponent must be +1 or -1");
  core(s, static_cast<std::size_t>(k - 1), exponent);
  return {std::move(s.diagram), std::move(s.moves)};
}

Realized realize_A(const ArcDiagram& caravan, int k, int exponent) {
  return realize_letter(caravan, {Family::A, k, exponent});
}

Realized realize_B(const ArcDiagram& caravan, int k, int exponent) {
  return realize_letter(caravan, {Family::B, k, exponent});
}

Realized realize_C(const ArcDiagram& caravan, int k, int exponent) {
  return realize_letter(caravan, {Family::C, k, exponent});
}

IntMatrix change_of_basis(const ArcDiagram& d1, const ArcDiagram& d2) {
  check_caravan(d1);
  check_caravan(d2);
  if (d1.genus() != d2.genus() || d1.basis() != d2.basis())
    fail(ErrorKind::NotIsoperiodic, "caravans have different genus or basis lengths");
  const IntMatrix l1 = d1.lattice_canonical();
  const IntMatrix l2 = d2.lattice_canonical();
  const auto x = right_divide(l2, l1);
  if (!x) fail(ErrorKind::NotIsoperiodic, "period lattice of the first caravan is degenerate");
  const std::size_t n = l1.rows();
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if ((*x)[i][j].get_den() != 1)
        fail(ErrorKind::NotIsoperiodic, "change of basis is not integral");
      m(i, j) = (*x)[i][j].get_num();
    }
  const Integer det = m.determinant();
  if (det != 1 && det != -1) fail(ErrorKind::NotIsoperiodic, "change of basis is not invertible over Z");
  if (!is_symplectic(m, standard_form(d1.genus())))
    fail(ErrorKind::NotSamePolarization, "change of basis does not preserve the polarization");
  return m;
}

Connection connect(const ArcDiagram& d1, const ArcDiagram& d2) {
  const IntMatrix m = change_of_basis(d1, d2);
  GeneratorWord word = decompose(m, d1.genus());
  State s = start(d1);
  // lattice(d2) = w_1 ... w_n lattice(d1): the last letter acts first.
  for (auto it = word.letters.rbegin(); it != word.letters.rend(); ++it) letter(s, *it);
  if (s.tracked != d2.lattice_canonical() || s.diagram.lattice_canonical() != s.tracked)
    fail(ErrorKind::InternalCheckFailed, "realized word does not reach the target lattice");

  const auto ours = canonical_numbering(s.diagram);
  const auto theirs = canonical_numbering(d2);
  std::vector<Rational> target(s.diagram.size());
  for (std::size_t i = 0; i < ours.size(); ++i) target[ours[i] - 1] = d2.arc(theirs[i]).left;
  Transported aligned = transport(s.diagram, target);
  s.moves.insert(s.moves.end(), aligned.moves.begin(), aligned.moves.end());
  if (!equal_up_to_translation(aligned.diagram, d2))
    fail(ErrorKind::InternalCheckFailed, "aligned caravan differs from the target");
  return {std::move(s.moves), m, std::move(word), std::move(aligned.diagram)};
}

}  // namespace isoperiod
