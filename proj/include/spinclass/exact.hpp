#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

namespace spinclass::exact {

using Integer = mpz_class;
using Rational = mpq_class;

/// Builds num/den in lowest terms with a positive denominator.
Rational make_rational(const Integer& num, const Integer& den = 1);

std::string to_string(const Rational& q);

class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class SingularMatrixError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// a + b*i with a, b rational.
class GaussianRational {
 public:
  GaussianRational() = default;
  GaussianRational(Rational re, Rational im = 0);  // NOLINT: implicit from reals
  GaussianRational(int re) : GaussianRational(Rational(re)) {}  // NOLINT
  GaussianRational(long re) : GaussianRational(Rational(re)) {}  // NOLINT

  static GaussianRational imaginary_unit() { return {0, 1}; }

  const Rational& re() const { return re_; }
  const Rational& im() const { return im_; }

  bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
  bool is_real() const { return sgn(im_) == 0; }

  GaussianRational conj() const { return {re_, -im_}; }
  /// |z|^2
  Rational norm() const { return re_ * re_ + im_ * im_; }
  GaussianRational inverse() const;

  GaussianRational& operator+=(const GaussianRational& o);
  GaussianRational& operator-=(const GaussianRational& o);
  GaussianRational& operator*=(const GaussianRational& o);
  GaussianRational& operator/=(const GaussianRational& o);

  friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
  friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
  friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
  friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }
  GaussianRational operator-() const { return {-re_, -im_}; }

  friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }
  friend bool operator!=(const GaussianRational& a, const GaussianRational& b) { return !(a == b); }

  std::string to_string() const;

 private:
  Rational re_{0};
  Rational im_{0};
};

/// Dense row-major matrix over Q(i).
class ExactMatrix {
 public:
  ExactMatrix() = default;
  ExactMatrix(std::size_t rows, std::size_t cols);
  ExactMatrix(std::size_t rows, std::size_t cols, std::vector<GaussianRational> entries);
  ExactMatrix(std::initializer_list<std::initializer_list<GaussianRational>> rows);

  static ExactMatrix identity(std::size_t n);
  static ExactMatrix diagonal(const std::vector<GaussianRational>& diag);
  static ExactMatrix column(const std::vector<GaussianRational>& values);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }
  const std::vector<GaussianRational>& entries() const { return entries_; }

  const GaussianRational& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }
  GaussianRational& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  const GaussianRational& at(std::size_t r, std::size_t c) const;

  ExactMatrix transpose() const;
  ExactMatrix conj() const;
  ExactMatrix conj_transpose() const;

  bool is_zero() const;
  bool is_real() const;
  bool is_identity() const;

  ExactMatrix& operator+=(const ExactMatrix& o);
  ExactMatrix& operator-=(const ExactMatrix& o);
  ExactMatrix& operator*=(const GaussianRational& s);
  friend ExactMatrix operator+(ExactMatrix a, const ExactMatrix& b) { return a += b; }
  friend ExactMatrix operator-(ExactMatrix a, const ExactMatrix& b) { return a -= b; }
  friend ExactMatrix operator*(ExactMatrix a, const GaussianRational& s) { return a *= s; }
  friend ExactMatrix operator*(const GaussianRational& s, ExactMatrix a) { return a *= s; }
  ExactMatrix operator-() const;

  friend bool operator==(const ExactMatrix& a, const ExactMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
  }
  friend bool operator!=(const ExactMatrix& a, const ExactMatrix& b) { return !(a == b); }

  std::string shape() const;
  std::string to_string() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<GaussianRational> entries_;
};

ExactMatrix mat_mul(const ExactMatrix& a, const ExactMatrix& b);
ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b);

/// Block (i,j) of the result is a(i,j) * b.
ExactMatrix kronecker(const ExactMatrix& a, const ExactMatrix& b);

/// Horizontal concatenation [a | b]; row counts must agree.
ExactMatrix hstack(const std::vector<ExactMatrix>& blocks);
/// Vertical concatenation; column counts must agree.
ExactMatrix vstack(const std::vector<ExactMatrix>& blocks);

/// Reduced row echelon form with first-nonzero pivoting in column order.
struct RowEchelon {
  ExactMatrix reduced;
  std::vector<std::size_t> pivot_columns;
};
RowEchelon row_reduce(const ExactMatrix& m);

std::size_t rank(const ExactMatrix& m);

/// Basis of {v : m v = 0} as column vectors, one per free column of the
/// echelon form, ordered by free column index.
std::vector<ExactMatrix> nullspace(const ExactMatrix& m);

GaussianRational determinant(const ExactMatrix& m);
ExactMatrix inverse(const ExactMatrix& m);

bool is_skew_hermitian(const ExactMatrix& m);
bool is_unitary(const ExactMatrix& m);

/// (I - s)(I + s)^{-1} for skew-Hermitian s.
ExactMatrix cayley_unitary(const ExactMatrix& s);

inline constexpr std::uint64_t kDefaultSeed = 20240917;

/// Seeded source of small exact values. Output depends only on the seed.
class ExactSampler {
 public:
  explicit ExactSampler(std::uint64_t seed = kDefaultSeed) : engine_(seed) {}

  /// Uniform integer in [lo, hi].
  long integer(long lo, long hi);
  /// p/q with |p| <= bound, 1 <= q <= bound.
  Rational rational(long bound = 5);
  GaussianRational gaussian(long bound = 5);
  ExactMatrix matrix(std::size_t rows, std::size_t cols, long bound = 5);
  ExactMatrix skew_hermitian(std::size_t n, long bound = 5);
  /// Rational point (a, b) on the unit circle, a^2 + b^2 = 1.
  std::pair<Rational, Rational> circle_point(long bound = 9);

 private:
  std::mt19937_64 engine_;
};

}  // namespace spinclass::exact
