#include "isoperiod/numeric.hpp"

#include <cctype>

#include "isoperiod/error.hpp"

namespace isoperiod {

std::string_view error_name(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::DuplicateEndpoint: return "DuplicateEndpoint";
    case ErrorKind::InconsistentLattice: return "InconsistentLattice";
    case ErrorKind::BadArity: return "BadArity";
    case ErrorKind::InvalidArc: return "InvalidArc";
    case ErrorKind::OrderChanged: return "OrderChanged";
    case ErrorKind::NotApplicable: return "NotApplicable";
    case ErrorKind::DegenerateResult: return "DegenerateResult";
    case ErrorKind::NotACaravan: return "NotACaravan";
    case ErrorKind::NonPositiveLength: return "NonPositiveLength";
    case ErrorKind::SearchExhausted: return "SearchExhausted";
    case ErrorKind::DegenerateEncountered: return "DegenerateEncountered";
    case ErrorKind::BadIndex: return "BadIndex";
    case ErrorKind::SizeMismatch: return "SizeMismatch";
    case ErrorKind::NotSymplectic: return "NotSymplectic";
    case ErrorKind::InternalCheckFailed: return "InternalCheckFailed";
    case ErrorKind::ZeroEntry: return "ZeroEntry";
    case ErrorKind::ZeroEntryInTarget: return "ZeroEntryInTarget";
    case ErrorKind::NotIsoperiodic: return "NotIsoperiodic";
    case ErrorKind::NotSamePolarization: return "NotSamePolarization";
    case ErrorKind::ParseError: return "ParseError";
  }
  return "Unknown";
}

namespace {

bool is_integer_literal(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

Integer parse_integer(std::string_view s, std::string_view whole) {
  if (!is_integer_literal(s))
    fail(ErrorKind::ParseError, "malformed rational '" + std::string(whole) + "'");
  if (s.front() == '+') s.remove_prefix(1);
  return Integer(std::string(s), 10);
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(text, text));
  const Integer num = parse_integer(text.substr(0, slash), text);
  const std::string_view den_text = text.substr(slash + 1);
  if (!den_text.empty() && (den_text.front() == '-' || den_text.front() == '+'))
    fail(ErrorKind::ParseError, "sign not allowed in denominator: '" + std::string(text) + "'");
  const Integer den = parse_integer(den_text, text);
  if (den == 0) fail(ErrorKind::ParseError, "zero denominator in '" + std::string(text) + "'");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

std::string format_rational(const Rational& value) { return value.get_str(); }

Rational make_rational(long num, long den) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols, Integer(0)) {}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) fail(ErrorKind::SizeMismatch, "ragged matrix literal");
    for (long v : r) data_.emplace_back(v);
  }
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<Integer>>& rows) {
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  IntMatrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) fail(ErrorKind::SizeMismatch, "ragged matrix rows");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

std::vector<Integer> IntMatrix::row(std::size_t r) const {
  return {data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
          data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_)};
}

std::vector<std::vector<Integer>> IntMatrix::to_rows() const {
  std::vector<std::vector<Integer>> out;
  out.reserve(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out.push_back(row(r));
  return out;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

bool IntMatrix::is_identity() const {
  if (!square()) return false;
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c)
      if ((*this)(r, c) != (r == c ? 1 : 0)) return false;
  return true;
}

Integer IntMatrix::determinant() const {
  if (!square()) fail(ErrorKind::SizeMismatch, "determinant of a non-square matrix");
  const std::size_t n = rows_;
  if (n == 0) return 1;
  IntMatrix a = *this;
  Integer sign = 1;
  Integer prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t swap_row = k + 1;
      while (swap_row < n && a(swap_row, k) == 0) ++swap_row;
      if (swap_row == n) return 0;
      for (std::size_t c = 0; c < n; ++c) std::swap(a(k, c), a(swap_row, c));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer v = a(i, j) * a(k, k) - a(i, k) * a(k, j);
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
        a(i, j) = v;
      }
      a(i, k) = 0;
    }
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

IntMatrix IntMatrix::unimodular_inverse() const {
  if (!square()) fail(ErrorKind::SizeMismatch, "inverse of a non-square matrix");
  const std::size_t n = rows_;
  std::vector<std::vector<Rational>> aug(n, std::vector<Rational>(2 * n));
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) aug[r][c] = (*this)(r, c);
    aug[r][n + r] = 1;
  }
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && aug[pivot][col] == 0) ++pivot;
    if (pivot == n) fail(ErrorKind::NotIsoperiodic, "matrix is singular");
    std::swap(aug[pivot], aug[col]);
    const Rational inv = 1 / aug[col][col];
    for (auto& v : aug[col]) v *= inv;
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || aug[r][col] == 0) continue;
      const Rational f = aug[r][col];
      for (std::size_t c = 0; c < 2 * n; ++c) aug[r][c] -= f * aug[col][c];
    }
  }
  IntMatrix out(n, n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) {
      const Rational& v = aug[r][n + c];
      if (v.get_den() != 1) fail(ErrorKind::NotIsoperiodic, "inverse is not integral");
      out(r, c) = v.get_num();
    }
  }
  return out;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols_ != b.rows_) fail(ErrorKind::SizeMismatch, "matrix product dimension mismatch");
  IntMatrix out(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Integer& aik = a(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) out(i, j) += aik * b(k, j);
    }
  return out;
}

bool operator==(const IntMatrix& a, const IntMatrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

std::vector<Integer> operator*(const IntMatrix& m, const std::vector<Integer>& v) {
  if (m.cols() != v.size()) fail(ErrorKind::SizeMismatch, "matrix-vector dimension mismatch");
  std::vector<Integer> out(m.rows(), Integer(0));
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) out[r] += m(r, c) * v[c];
  return out;
}

Rational dot(const std::vector<Integer>& coeffs, const std::vector<Rational>& values) {
  if (coeffs.size() != values.size()) fail(ErrorKind::SizeMismatch, "dot product size mismatch");
  Rational sum = 0;
  for (std::size_t k = 0; k < coeffs.size(); ++k) sum += Rational(coeffs[k]) * values[k];
  return sum;
}

}  // namespace isoperiod
