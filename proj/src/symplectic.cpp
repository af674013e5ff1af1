#include "isoperiod/symplectic.hpp"

#include <algorithm>
#include <cctype>
#include <optional>
#include <sstream>

#include "isoperiod/error.hpp"

namespace isoperiod {

namespace {

void check_letter(const Letter& l, int genus) {
  if (genus < 1) fail(ErrorKind::BadIndex, "genus must be positive");
  if (l.exponent != 1 && l.exponent != -1) fail(ErrorKind::BadIndex, "exponent must be +1 or -1");
  const int top = l.family == Family::C ? genus - 1 : genus;
  if (l.index < 1 || l.index > top)
    fail(ErrorKind::BadIndex, "generator index " + std::to_string(l.index) +
                                  " out of range for genus " + std::to_string(genus));
}

void add_row(IntMatrix& w, std::size_t dst, std::size_t src, const Integer& factor) {
  for (std::size_t c = 0; c < w.cols(); ++c) w(dst, c) += factor * w(src, c);
}

// w <- generator * w, as row operations.
void left_apply(IntMatrix& w, const Letter& l) {
  const auto k = static_cast<std::size_t>(l.index - 1);
  const Integer e = l.exponent;
  switch (l.family) {
    case Family::A:
      add_row(w, 2 * k, 2 * k + 1, e);
      break;
    case Family::B:
      add_row(w, 2 * k + 1, 2 * k, e);
      break;
    case Family::C:
      add_row(w, 2 * k + 1, 2 * k + 3, e);
      add_row(w, 2 * k + 2, 2 * k, Integer(-e));
      break;
  }
}

Letter A(int k, int e = 1) { return {Family::A, k, e}; }
Letter B(int k, int e = 1) { return {Family::B, k, e}; }
Letter C(int k, int e = 1) { return {Family::C, k, e}; }

// In-pair rotation (q, p) -> (p, -q) as A B^-1 A.
std::vector<Letter> rotation(int k) { return {A(k), B(k, -1), A(k)}; }
std::vector<Letter> rotation_inverse(int k) { return {A(k, -1), B(k), A(k, -1)}; }

int sign(const Integer& x) { return sgn(x); }

class Reducer {
 public:
  Reducer(IntMatrix u, int genus, const StageObserver& observer)
      : w_(std::move(u)), genus_(genus), form_(standard_form(genus)), observer_(observer) {}

  GeneratorWord run() {
    descend();
    for (int i = 0; i < genus_; ++i) reduce_level(i);
    if (!w_.is_identity()) fail(ErrorKind::InternalCheckFailed, "reduction did not reach identity");
    // w_final = g_n ... g_1 U = I, hence U = g_1^-1 ... g_n^-1.
    GeneratorWord out{genus_, {}};
    for (const Letter& l : applied_) {
      const Letter inv = l.inverse();
      if (!out.letters.empty() && out.letters.back() == l)
        out.letters.pop_back();
      else
        out.letters.push_back(inv);
    }
    return out;
  }

 private:
  // Left-multiplies by the product l_1 ... l_m (rightmost letter acts first).
  void apply(const std::vector<Letter>& product) {
    for (auto it = product.rbegin(); it != product.rend(); ++it) {
      left_apply(w_, *it);
      applied_.push_back(*it);
    }
  }

  void apply_power(Letter l, const Integer& times) {
    for (Integer t = 0; t < times; ++t) apply({l});
  }

  // X C^n X^-1 with X a product of rotations; the conjugator is paid once.
  void conjugated_c(const std::vector<Letter>& x, const std::vector<Letter>& x_inv, int k,
                    int e, const Integer& times) {
    if (times == 0) return;
    std::vector<Letter> product = x;
    for (Integer t = 0; t < times; ++t) product.push_back(C(k, e));
    product.insert(product.end(), x_inv.begin(), x_inv.end());
    apply(product);
  }

  // Pair j (0-based) gets q_j += a * q_{j+1} (and p_{j+1} -= a * p_j), |a| times sign.
  void raise_q(int j, const Integer& a) {
    const int k = j + 1;
    std::vector<Letter> x = rotation(k);
    auto r2 = rotation(k + 1);
    x.insert(x.end(), r2.begin(), r2.end());
    std::vector<Letter> x_inv = rotation_inverse(k + 1);
    auto r1 = rotation_inverse(k);
    x_inv.insert(x_inv.end(), r1.begin(), r1.end());
    conjugated_c(x, x_inv, k, sign(a), abs(a));
  }

  // q_{j+1} += a * q_j (and p_j -= a * p_{j+1}).
  void lower_q(int j, const Integer& a) {
    if (a == 0) return;
    apply_power(C(j + 1, -sign(a)), abs(a));
  }

  // q_{j+1} += a * p_j and q_j += a * p_{j+1}.
  void cross_qp(int j, const Integer& a) {
    conjugated_c(rotation(j + 1), rotation_inverse(j + 1), j + 1, sign(a), abs(a));
  }

  // Euclid inside pair k on column c, leaving (g, 0).
  void euclid_pair(int k, std::size_t c) {
    const auto q = static_cast<std::size_t>(2 * k);
    while (w_(q + 1, c) != 0) {
      if (w_(q, c) == 0) {
        apply({A(k + 1)});
        continue;
      }
      Integer t = w_(q + 1, c) / w_(q, c);
      apply_power(B(k + 1, -sign(t)), abs(t));
      if (w_(q + 1, c) == 0) break;
      t = w_(q, c) / w_(q + 1, c);
      apply_power(A(k + 1, -sign(t)), abs(t));
    }
  }

  // Euclid between the q-rows of pairs j and j+1 on column c (p-rows zero),
  // leaving the gcd in pair j.
  void euclid_across(int j, std::size_t c) {
    const auto u = static_cast<std::size_t>(2 * j);
    const auto v = u + 2;
    while (w_(v, c) != 0) {
      if (w_(u, c) == 0) {
        raise_q(j, 1);
        continue;
      }
      Integer t = w_(v, c) / w_(u, c);
      lower_q(j, Integer(-t));
      if (w_(v, c) == 0) break;
      t = w_(u, c) / w_(v, c);
      raise_q(j, Integer(-t));
    }
  }

  static Integer norm(const IntMatrix& m) {
    Integer sum = 0;
    for (std::size_t i = 0; i < m.rows(); ++i)
      for (std::size_t j = 0; j < m.cols(); ++j) sum += m(i, j) * m(i, j);
    return sum;
  }

  // Greedy descent: left-apply the candidate that lowers the sum of squared
  // entries most, while one does. Candidates are the single A and B letters
  // and the C letters conjugated by in-pair rotations. Strips most of a
  // product word cheaply and leaves a small matrix for the staged reduction.
  void descend() {
    std::vector<std::vector<Letter>> candidates;
    for (int k = 1; k <= genus_; ++k)
      for (int e : {1, -1}) {
        candidates.push_back({A(k, e)});
        candidates.push_back({B(k, e)});
        if (k == genus_) continue;
        for (int mask = 0; mask < 4; ++mask) {
          std::vector<Letter> x, x_inv;
          if (mask & 1) {
            const auto r = rotation(k), ri = rotation_inverse(k);
            x.insert(x.end(), r.begin(), r.end());
            x_inv.insert(x_inv.begin(), ri.begin(), ri.end());
          }
          if (mask & 2) {
            const auto r = rotation(k + 1), ri = rotation_inverse(k + 1);
            x.insert(x.end(), r.begin(), r.end());
            x_inv.insert(x_inv.begin(), ri.begin(), ri.end());
          }
          std::vector<Letter> product = x;
          product.push_back(C(k, e));
          product.insert(product.end(), x_inv.begin(), x_inv.end());
          candidates.push_back(std::move(product));
        }
      }
    Integer current = norm(w_);
    for (;;) {
      const std::vector<Letter>* best = nullptr;
      Integer best_norm = current;
      for (const auto& product : candidates) {
        IntMatrix trial = w_;
        for (auto it = product.rbegin(); it != product.rend(); ++it) left_apply(trial, *it);
        const Integer v = norm(trial);
        if (v < best_norm) {
          best_norm = v;
          best = &product;
        }
      }
      if (!best) return;
      apply(*best);
      current = best_norm;
    }
  }

  // One step r += a * m on column `col` by a generator product whose side
  // effect on that column is zero.
  struct Step {
    std::size_t r = 0;
    std::size_t m = 0;
    Integer remainder;
  };

  bool clean_link(std::size_t r, std::size_t m, std::size_t col) const {
    if (r / 2 == m / 2) return true;
    const std::size_t lo = std::min(r, m) / 2 * 2;  // q row of the lower pair
    if (std::max(r, m) / 2 != lo / 2 + 1) return false;
    const std::size_t q_lo = lo, p_lo = lo + 1, q_hi = lo + 2, p_hi = lo + 3;
    if (r == q_hi && (m == q_lo || m == p_lo)) return w_(p_hi, col) == 0;
    if (r == q_lo && (m == q_hi || m == p_hi)) return w_(p_lo, col) == 0;
    return false;
  }

  void apply_step(std::size_t r, std::size_t m, const Integer& a) {
    const int k = static_cast<int>(r / 2);
    if (r / 2 == m / 2) {
      apply_power(r % 2 == 0 ? A(k + 1, sign(a)) : B(k + 1, sign(a)), abs(a));
      return;
    }
    const int j = static_cast<int>(std::min(r, m) / 2);
    const bool r_high = r > m;
    const bool m_is_q = m % 2 == 0;
    if (r_high && m_is_q) lower_q(j, a);
    else if (!r_high && m_is_q) raise_q(j, a);
    else cross_qp(j, a);
  }

  // Euclid over the column entries of pairs first..g-1, always reducing the
  // largest entry against the entry that leaves the smallest remainder.
  // Leaves the gcd in the q row of pair `first`.
  void reduce_column(int first, std::size_t col) {
    const auto lo = static_cast<std::size_t>(2 * first);
    const std::size_t n = w_.rows();
    for (;;) {
      std::size_t nonzero = 0;
      for (std::size_t r = lo; r < n; ++r) nonzero += w_(r, col) != 0;
      if (nonzero <= 1) break;
      std::optional<Step> best;
      std::vector<std::size_t> rows;
      for (std::size_t r = lo; r < n; ++r)
        if (w_(r, col) != 0) rows.push_back(r);
      std::stable_sort(rows.begin(), rows.end(), [&](std::size_t a, std::size_t b) {
        return abs(w_(a, col)) > abs(w_(b, col));
      });
      for (std::size_t r : rows) {
        for (std::size_t m : rows) {
          if (m == r || abs(w_(m, col)) > abs(w_(r, col)) || !clean_link(r, m, col)) continue;
          const Integer rem = w_(r, col) % w_(m, col);
          if (!best || abs(rem) < abs(best->remainder)) best = Step{r, m, rem};
        }
        if (best) break;
      }
      if (best) {
        apply_step(best->r, best->m, Integer(-(w_(best->r, col) / w_(best->m, col))));
        continue;
      }
      // No clean link: clear the p entries pair by pair, then fall back to the
      // staged reduction, which always applies.
      for (int k = first; k < genus_; ++k) euclid_pair(k, col);
      for (int k = genus_ - 1; k > first; --k) euclid_across(k - 1, col);
    }
    // Bring a lone entry to the q row of pair `first`.
    std::size_t at = lo;
    while (at < n && w_(at, col) == 0) ++at;
    if (at == n || at == lo) return;
    int k = static_cast<int>(at / 2);
    if (at % 2 == 1) {
      apply({A(k + 1)});
      apply({B(k + 1, -1)});
      if (w_(at - 1, col) == 0) apply({A(k + 1)});
    }
    for (; k > first; --k) {
      raise_q(k - 1, 1);
      lower_q(k - 1, -1);
    }
  }

  void stage_done(const char* what) {
    if (!is_symplectic(w_, form_))
      fail(ErrorKind::InternalCheckFailed, std::string("form not preserved after ") + what);
    if (observer_) observer_(w_);
  }

  void reduce_level(int i) {
    const auto c = static_cast<std::size_t>(2 * i);
    const auto n = w_.rows();

    reduce_column(i, c);
    stage_done("reduction of the pivot column");
    stage_done("pivot placement");

    const Integer u = w_(c, c);
    if (u != 1 && u != -1) fail(ErrorKind::InternalCheckFailed, "pivot column is not primitive");
    for (std::size_t r = 0; r < n; ++r)
      if (r != c && w_(r, c) != 0) fail(ErrorKind::InternalCheckFailed, "pivot column not cleared");

    // Second column: collect the later pairs into pair i+1, then cancel
    // against row c+1, which the form forces to be u * e_{c+1}.
    if (i + 1 < genus_) {
      reduce_column(i + 1, c + 1);
      const Integer h = w_(c + 2, c + 1);
      if (h != 0) cross_qp(i, Integer(-h * u));
    }
    const Integer top = w_(c, c + 1);
    if (top != 0) apply_power(A(i + 1, -sign(Integer(top * u))), abs(top));
    stage_done("reduction of the second column");

    if (u == -1) {
      apply(rotation(i + 1));
      apply(rotation(i + 1));
    }
    stage_done("sign fix");
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t s : {c, c + 1})
        if (w_(r, s) != (r == s ? 1 : 0) || w_(s, r) != (r == s ? 1 : 0))
          fail(ErrorKind::InternalCheckFailed, "pair block not reduced to identity");
  }

  IntMatrix w_;
  int genus_;
  SymplecticForm form_;
  const StageObserver& observer_;
  std::vector<Letter> applied_;
};

}  // namespace

SymplecticForm standard_form(int genus) {
  const auto n = static_cast<std::size_t>(2 * genus);
  IntMatrix j(n, n);
  for (std::size_t k = 0; k < n; k += 2) {
    j(k, k + 1) = 1;
    j(k + 1, k) = -1;
  }
  return {genus, std::move(j)};
}

IntMatrix generator_matrix(const Letter& letter, int genus) {
  check_letter(letter, genus);
  IntMatrix m = IntMatrix::identity(static_cast<std::size_t>(2 * genus));
  left_apply(m, letter);
  return m;
}

bool is_symplectic(const IntMatrix& m, const SymplecticForm& form) {
  const auto n = static_cast<std::size_t>(2 * form.genus);
  if (!m.square() || m.rows() != n)
    fail(ErrorKind::SizeMismatch, "matrix size does not match the form");
  return m.transpose() * form.matrix * m == form.matrix;
}

bool is_symplectic(const IntMatrix& m) {
  if (!m.square() || m.rows() % 2 != 0 || m.rows() == 0)
    fail(ErrorKind::SizeMismatch, "symplectic test needs an even square matrix");
  return is_symplectic(m, standard_form(static_cast<int>(m.rows() / 2)));
}

IntMatrix compose(const GeneratorWord& w) {
  IntMatrix m = IntMatrix::identity(static_cast<std::size_t>(2 * w.genus));
  for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it) {
    check_letter(*it, w.genus);
    left_apply(m, *it);
  }
  return m;
}

GeneratorWord decompose(const IntMatrix& u, int genus, const StageObserver& observer) {
  const SymplecticForm form = standard_form(genus);
  if (!is_symplectic(u, form)) fail(ErrorKind::NotSymplectic, "matrix is not symplectic");
  GeneratorWord w = Reducer(u, genus, observer).run();
  if (compose(w) != u) fail(ErrorKind::InternalCheckFailed, "decomposition does not recompose");
  return w;
}

std::string format_word(const GeneratorWord& w) {
  std::string out;
  for (const Letter& l : w.letters) {
    if (!out.empty()) out += ' ';
    out += l.family == Family::A ? 'A' : l.family == Family::B ? 'B' : 'C';
    out += std::to_string(l.index);
    if (l.exponent == -1) out += "^-1";
  }
  return out;
}

GeneratorWord parse_word(std::string_view text, int genus) {
  GeneratorWord w{genus, {}};
  std::istringstream in{std::string(text)};
  std::string tok;
  while (in >> tok) {
    const char f = tok[0];
    if (f != 'A' && f != 'B' && f != 'C') fail(ErrorKind::ParseError, "bad letter '" + tok + "'");
    std::size_t pos = 1;
    while (pos < tok.size() && std::isdigit(static_cast<unsigned char>(tok[pos]))) ++pos;
    if (pos == 1) fail(ErrorKind::ParseError, "letter without index '" + tok + "'");
    Letter l{f == 'A' ? Family::A : f == 'B' ? Family::B : Family::C,
             std::stoi(tok.substr(1, pos - 1)), 1};
    const std::string rest = tok.substr(pos);
    if (rest == "^-1")
      l.exponent = -1;
    else if (!rest.empty() && rest != "^1")
      fail(ErrorKind::ParseError, "bad exponent in '" + tok + "'");
    check_letter(l, genus);
    w.letters.push_back(l);
  }
  return w;
}

GeneratorWord inverse_word(const GeneratorWord& w) {
  GeneratorWord out{w.genus, {}};
  for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it) out.letters.push_back(it->inverse());
  return out;
}

}  // namespace isoperiod
