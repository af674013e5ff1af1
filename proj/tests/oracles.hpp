// Independent reference computations used to check library results. These
// deliberately avoid the library's own algorithms: plain loops over
// coordinates, rational Gaussian elimination, explicit block matrices.
#ifndef ISOPERIOD_TEST_ORACLES_HPP
#define ISOPERIOD_TEST_ORACLES_HPP

#include <algorithm>
#include <utility>
#include <vector>

#include "isoperiod/diagram.hpp"
#include "isoperiod/symplectic.hpp"

namespace oracle {

using isoperiod::Integer;
using isoperiod::Rational;
using Rows = std::vector<std::vector<Integer>>;

inline Rows rows_of(const isoperiod::IntMatrix& m) {
  Rows out(m.rows(), std::vector<Integer>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out[i][j] = m(i, j);
  return out;
}

inline Rows identity(std::size_t n) {
  Rows out(n, std::vector<Integer>(n, Integer(0)));
  for (std::size_t i = 0; i < n; ++i) out[i][i] = 1;
  return out;
}

inline Rows multiply(const Rows& a, const Rows& b) {
  Rows out(a.size(), std::vector<Integer>(b.empty() ? 0 : b[0].size(), Integer(0)));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t k = 0; k < b.size(); ++k)
      for (std::size_t j = 0; j < b[0].size(); ++j) out[i][j] += a[i][k] * b[k][j];
  return out;
}

inline Rows transpose(const Rows& a) {
  Rows out(a.empty() ? 0 : a[0].size(), std::vector<Integer>(a.size()));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a[i].size(); ++j) out[j][i] = a[i][j];
  return out;
}

// Determinant by rational Gaussian elimination with row swaps.
inline Rational determinant(const Rows& m) {
  const std::size_t n = m.size();
  std::vector<std::vector<Rational>> a(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a[i][j] = Rational(m[i][j]);
  Rational det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a[p][c] == 0) ++p;
    if (p == n) return 0;
    if (p != c) {
      std::swap(a[p], a[c]);
      det = -det;
    }
    det *= a[c][c];
    for (std::size_t r = c + 1; r < n; ++r) {
      const Rational f = a[r][c] / a[c][c];
      for (std::size_t j = c; j < n; ++j) a[r][j] -= f * a[c][j];
    }
  }
  return det;
}

inline Rows block_form(int g) {
  Rows j(2 * g, std::vector<Integer>(2 * g, Integer(0)));
  for (int k = 0; k < g; ++k) {
    j[2 * k][2 * k + 1] = 1;
    j[2 * k + 1][2 * k] = -1;
  }
  return j;
}

inline bool symplectic(const Rows& m) {
  const int g = static_cast<int>(m.size() / 2);
  return multiply(multiply(transpose(m), block_form(g)), m) == block_form(g);
}

// Generator matrices written out block by block.
inline Rows generator(const isoperiod::Letter& l, int g) {
  Rows m = identity(2 * g);
  const int k = l.index - 1;
  const int e = l.exponent;
  switch (l.family) {
    case isoperiod::Family::A:
      m[2 * k][2 * k + 1] = e;
      break;
    case isoperiod::Family::B:
      m[2 * k + 1][2 * k] = e;
      break;
    case isoperiod::Family::C: {
      // [[1,0,0,0],[0,1,0,1],[-1,0,1,0],[0,0,0,1]]; the inverse flips both signs.
      m[2 * k + 1][2 * k + 3] = e;
      m[2 * k + 2][2 * k] = -e;
      break;
    }
  }
  return m;
}

inline Rows word_product(const isoperiod::GeneratorWord& w) {
  Rows m = identity(2 * w.genus);
  for (const auto& l : w.letters) m = multiply(m, generator(l, w.genus));
  return m;
}

struct Span {
  int id;
  Rational left, right;
  std::vector<Integer> lattice;
};

inline std::vector<Span> spans_by_left(const isoperiod::ArcDiagram& d) {
  std::vector<Span> out;
  for (const auto& a : d.arcs()) out.push_back({a.id, a.left, a.right, a.lattice});
  std::sort(out.begin(), out.end(), [](const Span& a, const Span& b) { return a.left < b.left; });
  return out;
}

inline bool interleave(const Span& a, const Span& b) {
  return (a.left < b.left && b.left < a.right && a.right < b.right) ||
         (b.left < a.left && a.left < b.right && b.right < a.right);
}

// Intersection matrix in left-endpoint order from raw coordinates.
inline Rows intersection(const isoperiod::ArcDiagram& d) {
  const auto s = spans_by_left(d);
  Rows m(s.size(), std::vector<Integer>(s.size(), Integer(0)));
  for (std::size_t i = 0; i < s.size(); ++i)
    for (std::size_t j = 0; j < s.size(); ++j)
      if (i != j && interleave(s[i], s[j])) m[i][j] = i < j ? 1 : -1;
  return m;
}

// Same, with rows and columns indexed by arc id.
inline Rows intersection_by_id(const isoperiod::ArcDiagram& d) {
  const auto s = spans_by_left(d);
  const Rows c = intersection(d);
  Rows m(s.size(), std::vector<Integer>(s.size(), Integer(0)));
  for (std::size_t i = 0; i < s.size(); ++i)
    for (std::size_t j = 0; j < s.size(); ++j) m[s[i].id - 1][s[j].id - 1] = c[i][j];
  return m;
}

inline bool admissible(const isoperiod::ArcDiagram& d) {
  const Integer det = determinant(intersection(d)).get_num();
  return det % 2 != 0;
}

// Consecutive blocks of four endpoints, each block two interleaved arcs.
inline bool caravan(const isoperiod::ArcDiagram& d) {
  std::vector<std::pair<Rational, int>> pts;
  for (const auto& a : d.arcs()) {
    pts.emplace_back(a.left, a.id);
    pts.emplace_back(a.right, a.id);
  }
  std::sort(pts.begin(), pts.end());
  for (std::size_t k = 0; k < pts.size(); k += 4) {
    const int a = pts[k].second, b = pts[k + 1].second;
    if (a == b || pts[k + 2].second != a || pts[k + 3].second != b) return false;
  }
  return true;
}

inline bool lattice_consistent(const isoperiod::ArcDiagram& d) {
  for (const auto& a : d.arcs()) {
    Rational sum = 0;
    for (std::size_t k = 0; k < a.lattice.size(); ++k) sum += Rational(a.lattice[k]) * d.basis()[k];
    if (sum != a.right - a.left) return false;
  }
  return true;
}

inline Rows lattice_by_id(const isoperiod::ArcDiagram& d) {
  Rows out;
  for (const auto& a : d.arcs()) out.push_back(a.lattice);
  return out;
}

inline Rows lattice_by_left(const isoperiod::ArcDiagram& d) {
  Rows out;
  for (const auto& s : spans_by_left(d)) out.push_back(s.lattice);
  return out;
}

inline std::vector<Rational> lengths_by_left(const isoperiod::ArcDiagram& d) {
  std::vector<Rational> out;
  for (const auto& s : spans_by_left(d)) out.push_back(s.right - s.left);
  return out;
}

// Coordinates agree after moving the leftmost endpoints together; ids ignored.
inline bool same_up_to_translation(const isoperiod::ArcDiagram& a, const isoperiod::ArcDiagram& b) {
  const auto sa = spans_by_left(a), sb = spans_by_left(b);
  if (sa.size() != sb.size() || a.basis() != b.basis()) return false;
  const Rational delta = sb[0].left - sa[0].left;
  for (std::size_t i = 0; i < sa.size(); ++i)
    if (sa[i].left + delta != sb[i].left || sa[i].right + delta != sb[i].right || sa[i].lattice != sb[i].lattice)
      return false;
  return true;
}

// Positive member of {(x,y), (-y,x), (-x,-y), (y,-x)} for every pair.
inline std::vector<Rational> positive_class(const std::vector<Rational>& t) {
  std::vector<Rational> out;
  for (std::size_t k = 0; k < t.size(); k += 2) {
    const Rational x = t[k], y = t[k + 1];
    const std::pair<Rational, Rational> members[] = {{x, y}, {-y, x}, {-x, -y}, {y, -x}};
    for (const auto& [u, v] : members)
      if (u > 0 && v > 0) {
        out.push_back(u);
        out.push_back(v);
        break;
      }
  }
  return out;
}

}  // namespace oracle

#endif  // ISOPERIOD_TEST_ORACLES_HPP
