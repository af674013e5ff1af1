#ifndef ISOPERIOD_TEST_HELPERS_HPP
#define ISOPERIOD_TEST_HELPERS_HPP

#include <string>
#include <utility>
#include <vector>

#include "isoperiod/caravan.hpp"
#include "isoperiod/diagram.hpp"
#include "isoperiod/generate.hpp"
#include "isoperiod/error.hpp"

namespace testing {

using namespace isoperiod;

inline Rational q(const char* s) { return parse_rational(s); }

inline std::vector<Integer> unit(std::size_t n, std::size_t i) {
  std::vector<Integer> v(n, Integer(0));
  v[i] = 1;
  return v;
}

// Arcs given as (left, right) in id order; the basis is the arc lengths and
// arc i carries e_i.
inline ArcDiagram simple(const std::vector<std::pair<const char*, const char*>>& spans) {
  std::vector<Arc> arcs;
  std::vector<Rational> basis;
  for (std::size_t i = 0; i < spans.size(); ++i) {
    const Rational l = q(spans[i].first), r = q(spans[i].second);
    arcs.push_back({static_cast<int>(i) + 1, l, r, unit(spans.size(), i)});
    basis.push_back(r - l);
  }
  return ArcDiagram(std::move(arcs), std::move(basis));
}

// Non-caravan diagram reached by a random walk from a random caravan. Walks
// that happen to end on a caravan are redrawn; genus 1 has no other kind.
inline ArcDiagram scrambled(int genus, std::size_t max_moves, Rng& rng) {
  for (;;) {
    const ArcDiagram c = standard_caravan(random_basis(genus, rng));
    ArcDiagram d = apply_sequence(c, random_walk(c, max_moves, rng)).diagram;
    if (genus == 1 || !is_caravan(d)) return d;
  }
}

template <class F>
ErrorKind kind_of(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  return static_cast<ErrorKind>(-1);
}

}  // namespace testing

#endif  // ISOPERIOD_TEST_HELPERS_HPP
