#include "spinclass/exact.hpp"

#include <sstream>
#include <utility>

namespace spinclass::exact {

Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) { return q.get_str(); }

// ---------------------------------------------------------------------------
// GaussianRational

GaussianRational::GaussianRational(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {
  re_.canonicalize();
  im_.canonicalize();
}

GaussianRational GaussianRational::inverse() const {
  if (is_zero()) throw std::domain_error("inverse of zero in Q(i)");
  Rational n = norm();
  return {re_ / n, -im_ / n};
}

GaussianRational& GaussianRational::operator+=(const GaussianRational& o) {
  re_ += o.re_;
  im_ += o.im_;
  return *this;
}

GaussianRational& GaussianRational::operator-=(const GaussianRational& o) {
  re_ -= o.re_;
  im_ -= o.im_;
  return *this;
}

GaussianRational& GaussianRational::operator*=(const GaussianRational& o) {
  Rational r = re_ * o.re_ - im_ * o.im_;
  Rational i = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(r);
  im_ = std::move(i);
  return *this;
}

GaussianRational& GaussianRational::operator/=(const GaussianRational& o) { return *this *= o.inverse(); }

std::string GaussianRational::to_string() const {
  if (sgn(im_) == 0) return re_.get_str();
  std::string imag = (im_ == 1) ? "i" : (im_ == -1) ? "-i" : im_.get_str() + "i";
  if (sgn(re_) == 0) return imag;
  if (sgn(im_) > 0) return re_.get_str() + "+" + imag;
  return re_.get_str() + imag;
}

// ---------------------------------------------------------------------------
// ExactMatrix

ExactMatrix::ExactMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols) {}

ExactMatrix::ExactMatrix(std::size_t rows, std::size_t cols, std::vector<GaussianRational> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (entries_.size() != rows * cols) {
    throw DimensionError("matrix entry count " + std::to_string(entries_.size()) + " does not match shape " +
                         std::to_string(rows) + "x" + std::to_string(cols));
  }
}

ExactMatrix::ExactMatrix(std::initializer_list<std::initializer_list<GaussianRational>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  entries_.reserve(rows_ * cols_);
  for (const auto& row : rows) {
    if (row.size() != cols_) throw DimensionError("ragged matrix literal");
    entries_.insert(entries_.end(), row.begin(), row.end());
  }
}

ExactMatrix ExactMatrix::identity(std::size_t n) {
  ExactMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

ExactMatrix ExactMatrix::diagonal(const std::vector<GaussianRational>& diag) {
  ExactMatrix m(diag.size(), diag.size());
  for (std::size_t i = 0; i < diag.size(); ++i) m(i, i) = diag[i];
  return m;
}

ExactMatrix ExactMatrix::column(const std::vector<GaussianRational>& values) {
  return ExactMatrix(values.size(), 1, values);
}

const GaussianRational& ExactMatrix::at(std::size_t r, std::size_t c) const {
  if (r >= rows_ || c >= cols_) {
    throw std::out_of_range("index (" + std::to_string(r) + "," + std::to_string(c) + ") outside " + shape());
  }
  return (*this)(r, c);
}

ExactMatrix ExactMatrix::transpose() const {
  ExactMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

ExactMatrix ExactMatrix::conj() const {
  ExactMatrix t = *this;
  for (auto& z : t.entries_) z = z.conj();
  return t;
}

ExactMatrix ExactMatrix::conj_transpose() const { return transpose().conj(); }

bool ExactMatrix::is_zero() const {
  for (const auto& z : entries_)
    if (!z.is_zero()) return false;
  return true;
}

bool ExactMatrix::is_real() const {
  for (const auto& z : entries_)
    if (!z.is_real()) return false;
  return true;
}

bool ExactMatrix::is_identity() const { return is_square() && *this == identity(rows_); }

ExactMatrix& ExactMatrix::operator+=(const ExactMatrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionError("cannot add " + shape() + " and " + o.shape());
  for (std::size_t k = 0; k < entries_.size(); ++k) entries_[k] += o.entries_[k];
  return *this;
}

ExactMatrix& ExactMatrix::operator-=(const ExactMatrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionError("cannot subtract " + o.shape() + " from " + shape());
  for (std::size_t k = 0; k < entries_.size(); ++k) entries_[k] -= o.entries_[k];
  return *this;
}

ExactMatrix& ExactMatrix::operator*=(const GaussianRational& s) {
  for (auto& z : entries_) z *= s;
  return *this;
}

ExactMatrix ExactMatrix::operator-() const {
  ExactMatrix t = *this;
  for (auto& z : t.entries_) z = -z;
  return t;
}

std::string ExactMatrix::shape() const { return std::to_string(rows_) + "x" + std::to_string(cols_); }

std::string ExactMatrix::to_string() const {
  std::ostringstream out;
  out << "[";
  for (std::size_t r = 0; r < rows_; ++r) {
    out << (r ? ", [" : "[");
    for (std::size_t c = 0; c < cols_; ++c) out << (c ? ", " : "") << (*this)(r, c).to_string();
    out << "]";
  }
  out << "]";
  return out.str();
}

// ---------------------------------------------------------------------------
// Products

ExactMatrix mat_mul(const ExactMatrix& a, const ExactMatrix& b) {
  if (a.cols() != b.rows()) throw DimensionError("cannot multiply " + a.shape() + " by " + b.shape());
  ExactMatrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const auto& aik = a(i, k);
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) += aik * b(k, j);
    }
  }
  return out;
}

ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b) { return mat_mul(a, b); }

ExactMatrix kronecker(const ExactMatrix& a, const ExactMatrix& b) {
  ExactMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      for (std::size_t k = 0; k < b.rows(); ++k)
        for (std::size_t l = 0; l < b.cols(); ++l) out(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
  return out;
}

ExactMatrix hstack(const std::vector<ExactMatrix>& blocks) {
  if (blocks.empty()) return {};
  std::size_t rows = blocks.front().rows();
  std::size_t cols = 0;
  for (const auto& b : blocks) {
    if (b.rows() != rows) throw DimensionError("hstack row mismatch: " + blocks.front().shape() + " vs " + b.shape());
    cols += b.cols();
  }
  ExactMatrix out(rows, cols);
  std::size_t offset = 0;
  for (const auto& b : blocks) {
    for (std::size_t r = 0; r < rows; ++r)
      for (std::size_t c = 0; c < b.cols(); ++c) out(r, offset + c) = b(r, c);
    offset += b.cols();
  }
  return out;
}

ExactMatrix vstack(const std::vector<ExactMatrix>& blocks) {
  if (blocks.empty()) return {};
  std::size_t cols = blocks.front().cols();
  std::size_t rows = 0;
  for (const auto& b : blocks) {
    if (b.cols() != cols) throw DimensionError("vstack column mismatch: " + blocks.front().shape() + " vs " + b.shape());
    rows += b.rows();
  }
  ExactMatrix out(rows, cols);
  std::size_t offset = 0;
  for (const auto& b : blocks) {
    for (std::size_t r = 0; r < b.rows(); ++r)
      for (std::size_t c = 0; c < cols; ++c) out(offset + r, c) = b(r, c);
    offset += b.rows();
  }
  return out;
}

// ---------------------------------------------------------------------------
// Elimination

RowEchelon row_reduce(const ExactMatrix& m) {
  ExactMatrix a = m;
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < a.cols() && row < a.rows(); ++col) {
    std::size_t p = row;
    while (p < a.rows() && a(p, col).is_zero()) ++p;
    if (p == a.rows()) continue;
    if (p != row)
      for (std::size_t c = 0; c < a.cols(); ++c) std::swap(a(p, c), a(row, c));
    GaussianRational inv = a(row, col).inverse();
    for (std::size_t c = col; c < a.cols(); ++c) a(row, c) *= inv;
    for (std::size_t r = 0; r < a.rows(); ++r) {
      if (r == row || a(r, col).is_zero()) continue;
      GaussianRational f = a(r, col);
      for (std::size_t c = col; c < a.cols(); ++c) a(r, c) -= f * a(row, c);
    }
    pivots.push_back(col);
    ++row;
  }
  return {std::move(a), std::move(pivots)};
}

std::size_t rank(const ExactMatrix& m) { return row_reduce(m).pivot_columns.size(); }

std::vector<ExactMatrix> nullspace(const ExactMatrix& m) {
  RowEchelon e = row_reduce(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : e.pivot_columns) is_pivot[c] = true;

  std::vector<ExactMatrix> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    ExactMatrix v(m.cols(), 1);
    v(free, 0) = 1;
    for (std::size_t r = 0; r < e.pivot_columns.size(); ++r) v(e.pivot_columns[r], 0) = -e.reduced(r, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

GaussianRational determinant(const ExactMatrix& m) {
  if (!m.is_square()) throw DimensionError("determinant of non-square " + m.shape());
  ExactMatrix a = m;
  GaussianRational det = 1;
  const std::size_t n = a.rows();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t p = col;
    while (p < n && a(p, col).is_zero()) ++p;
    if (p == n) return 0;
    if (p != col) {
      for (std::size_t c = 0; c < n; ++c) std::swap(a(p, c), a(col, c));
      det = -det;
    }
    det *= a(col, col);
    GaussianRational inv = a(col, col).inverse();
    for (std::size_t r = col + 1; r < n; ++r) {
      if (a(r, col).is_zero()) continue;
      GaussianRational f = a(r, col) * inv;
      for (std::size_t c = col; c < n; ++c) a(r, c) -= f * a(col, c);
    }
  }
  return det;
}

ExactMatrix inverse(const ExactMatrix& m) {
  if (!m.is_square()) throw DimensionError("inverse of non-square " + m.shape());
  const std::size_t n = m.rows();
  RowEchelon e = row_reduce(hstack({m, ExactMatrix::identity(n)}));
  if (e.pivot_columns.size() < n || e.pivot_columns[n - 1] != n - 1) {
    throw SingularMatrixError("matrix is singular");
  }
  ExactMatrix out(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) out(r, c) = e.reduced(r, n + c);
  return out;
}

bool is_skew_hermitian(const ExactMatrix& m) { return m.is_square() && m.conj_transpose() == -m; }

bool is_unitary(const ExactMatrix& m) { return m.is_square() && (m.conj_transpose() * m).is_identity(); }

ExactMatrix cayley_unitary(const ExactMatrix& s) {
  if (!is_skew_hermitian(s)) throw std::invalid_argument("cayley_unitary: input " + s.shape() + " is not skew-Hermitian");
  const auto id = ExactMatrix::identity(s.rows());
  ExactMatrix plus_inv;
  try {
    plus_inv = inverse(id + s);
  } catch (const SingularMatrixError&) {
    throw SingularMatrixError("cayley_unitary: I + s is singular; resample s");
  }
  return (id - s) * plus_inv;
}

// ---------------------------------------------------------------------------
// Sampling

long ExactSampler::integer(long lo, long hi) {
  if (hi < lo) throw std::invalid_argument("empty sampling range");
  auto span = static_cast<std::uint64_t>(hi - lo) + 1;
  return lo + static_cast<long>(engine_() % span);
}

Rational ExactSampler::rational(long bound) {
  long num = integer(-bound, bound);
  long den = integer(1, bound);
  return make_rational(num, den);
}

GaussianRational ExactSampler::gaussian(long bound) {
  Rational re = rational(bound);
  Rational im = rational(bound);
  return {re, im};
}

ExactMatrix ExactSampler::matrix(std::size_t rows, std::size_t cols, long bound) {
  ExactMatrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = gaussian(bound);
  return m;
}

ExactMatrix ExactSampler::skew_hermitian(std::size_t n, long bound) {
  ExactMatrix m(n, n);
  for (std::size_t r = 0; r < n; ++r) {
    m(r, r) = GaussianRational(0, rational(bound));
    for (std::size_t c = r + 1; c < n; ++c) {
      m(r, c) = gaussian(bound);
      m(c, r) = -m(r, c).conj();
    }
  }
  return m;
}

std::pair<Rational, Rational> ExactSampler::circle_point(long bound) {
  Rational t = rational(bound);
  Rational d = 1 + t * t;
  return {(1 - t * t) / d, 2 * t / d};
}

}  // namespace spinclass::exact
