#ifndef ISOPERIOD_NUMERIC_HPP
#define ISOPERIOD_NUMERIC_HPP

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

namespace isoperiod {

using Integer = mpz_class;
using Rational = mpq_class;

// Accepts "p/q" or "p" (optional sign on p). Throws Error{ParseError}.
Rational parse_rational(std::string_view text);
// "p/q" in lowest terms, or "p" when the denominator is 1.
std::string format_rational(const Rational& value);

Rational make_rational(long num, long den = 1);

// Dense integer matrix with arbitrary-precision entries, row-major.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols);
  IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

  static IntMatrix identity(std::size_t n);
  static IntMatrix from_rows(const std::vector<std::vector<Integer>>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }

  Integer& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Integer& operator()(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }

  std::vector<Integer> row(std::size_t r) const;
  std::vector<std::vector<Integer>> to_rows() const;

  IntMatrix transpose() const;
  bool is_identity() const;

  // Bareiss fraction-free elimination; exact.
  Integer determinant() const;
  // Exact inverse when it exists over the integers (|det| = 1); throws
  // Error{NotIsoperiodic} otherwise.
  IntMatrix unimodular_inverse() const;

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  friend bool operator==(const IntMatrix& a, const IntMatrix& b);
  friend bool operator!=(const IntMatrix& a, const IntMatrix& b) { return !(a == b); }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> data_;
};

std::vector<Integer> operator*(const IntMatrix& m, const std::vector<Integer>& v);

// Exact linear combination sum_k coeffs[k] * values[k].
Rational dot(const std::vector<Integer>& coeffs, const std::vector<Rational>& values);

}  // namespace isoperiod

#endif  // ISOPERIOD_NUMERIC_HPP
