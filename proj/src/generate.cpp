#include "isoperiod/generate.hpp"

#include "isoperiod/layout.hpp"

namespace isoperiod {

namespace {

long pick(Rng& rng, long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); }

}  // namespace

std::vector<Rational> random_basis(int genus, Rng& rng) {
  static const long primes[] = {101, 103, 107, 109, 113, 127, 131, 137, 139, 149, 151, 157};
  std::vector<Rational> out;
  for (int i = 0; i < 2 * genus; ++i) out.push_back(make_rational(pick(rng, 50, 900), primes[i % 12]));
  return out;
}

std::optional<Shift> random_shift(const ArcDiagram& d, Rng& rng) {
  const Arc& a = d.arc(static_cast<int>(pick(rng, 1, static_cast<long>(d.size()))));
  const bool right = pick(rng, 0, 1) == 1;
  std::optional<Rational> room;
  for (const auto& b : d.arcs()) {
    if (b.id == a.id) continue;
    for (const Rational* x : {&b.left, &b.right})
      for (const Rational* y : {&a.left, &a.right}) {
        const Rational gap = right ? Rational(*x - *y) : Rational(*y - *x);
        if (gap > 0 && (!room || gap < *room)) room = gap;
      }
  }
  const Rational step = room ? Rational(*room * pick(rng, 1, 7) / 8) : Rational(pick(rng, 1, 8));
  return Shift{a.id, right ? step : Rational(-step)};
}

std::vector<Move> random_walk(const ArcDiagram& d, std::size_t max_moves, Rng& rng) {
  std::vector<Move> out;
  ArcDiagram cur = d;
  for (int attempt = 0; out.size() < max_moves && attempt < 200; ++attempt) {
    if (pick(rng, 0, 2) == 0) {
      if (auto s = random_shift(cur, rng); s && shift_applicable(cur, s->arc_id, s->delta)) {
        cur = apply_shift(cur, s->arc_id, s->delta);
        out.push_back(*s);
      }
      continue;
    }
    const auto options = drag_options(cur);
    const auto& opt = options[static_cast<std::size_t>(pick(rng, 0, static_cast<long>(options.size()) - 1))];
    auto r = drag(cur, opt.move, opt.fixed_near);
    if (!r || out.size() + r->moves.size() > max_moves) continue;
    out.insert(out.end(), r->moves.begin(), r->moves.end());
    cur = std::move(r->diagram);
  }
  return out;
}

GeneratorWord random_word(int genus, std::size_t length, Rng& rng) {
  GeneratorWord w{genus, {}};
  for (std::size_t i = 0; i < length; ++i) {
    const auto f = static_cast<Family>(pick(rng, 0, genus > 1 ? 2 : 1));
    const int top = f == Family::C ? genus - 1 : genus;
    w.letters.push_back({f, static_cast<int>(pick(rng, 1, top)), pick(rng, 0, 1) == 1 ? 1 : -1});
  }
  return w;
}

}  // namespace isoperiod
