// Exact arithmetic over the Gaussian rationals Q(i) and dense exact linear
// algebra. Every exact computation in the library runs on these types.
#pragma once

#include <gmpxx.h>

#include <complex>
#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace hitchin {

using Rational = mpq_class;

/// Reduces q into [0, 1).
Rational frac_part(const Rational& q);

/// a + b*i with a, b rational.
class Gaussian {
 public:
  Gaussian() = default;
  Gaussian(long re) : re_(re) {}  // NOLINT(google-explicit-constructor)
  Gaussian(Rational re, Rational im = 0) : re_(std::move(re)), im_(std::move(im)) {
    re_.canonicalize();
    im_.canonicalize();
  }

  static Gaussian i() { return {0, 1}; }
  /// i^e for any integer e.
  static Gaussian i_pow(long e);

  const Rational& re() const { return re_; }
  const Rational& im() const { return im_; }

  bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
  bool is_real() const { return sgn(im_) == 0; }

  Gaussian conj() const { return {re_, -im_}; }
  /// |z|^2, always rational.
  Rational norm2() const { return re_ * re_ + im_ * im_; }
  /// max(|re|, |im|); used as the exact max-norm of residuals.
  Rational max_abs_component() const;
  /// Throws std::domain_error on zero.
  Gaussian inverse() const;

  Gaussian& operator+=(const Gaussian& o);
  Gaussian& operator-=(const Gaussian& o);
  Gaussian& operator*=(const Gaussian& o);
  Gaussian& operator/=(const Gaussian& o) { return *this *= o.inverse(); }

  friend Gaussian operator+(Gaussian a, const Gaussian& b) { return a += b; }
  friend Gaussian operator-(Gaussian a, const Gaussian& b) { return a -= b; }
  friend Gaussian operator*(Gaussian a, const Gaussian& b) { return a *= b; }
  friend Gaussian operator/(Gaussian a, const Gaussian& b) { return a /= b; }
  Gaussian operator-() const { return {-re_, -im_}; }

  friend bool operator==(const Gaussian& a, const Gaussian& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }

  std::complex<double> to_complex() const { return {re_.get_d(), im_.get_d()}; }
  std::string to_string() const;

 private:
  Rational re_{0};
  Rational im_{0};
};

std::ostream& operator<<(std::ostream& os, const Gaussian& z);

/// Dense row-major exact matrix.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  Matrix(std::size_t rows, std::size_t cols, std::vector<Gaussian> entries);

  static Matrix identity(std::size_t n);
  static Matrix diagonal(const std::vector<Gaussian>& d);
  /// Matrix whose columns are the given vectors (all of equal length).
  static Matrix from_columns(const std::vector<std::vector<Gaussian>>& cols, std::size_t rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  Gaussian& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Gaussian& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  const std::vector<Gaussian>& entries() const { return data_; }

  std::vector<Gaussian> column(std::size_t c) const;
  std::vector<Gaussian> apply(const std::vector<Gaussian>& v) const;

  bool is_zero() const;
  bool is_diagonal() const;
  /// Number of nonzero entries.
  std::size_t support() const;
  Rational max_norm() const;
  Gaussian trace() const;
  Matrix transpose() const;

  Matrix& operator+=(const Matrix& o);
  Matrix& operator-=(const Matrix& o);
  Matrix& operator*=(const Gaussian& s);

  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator*(Matrix a, const Gaussian& s) { return a *= s; }
  friend Matrix operator*(const Gaussian& s, Matrix a) { return a *= s; }
  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Gaussian> data_;
};

/// Throws std::invalid_argument when a.cols() != b.rows().
Matrix mat_mul(const Matrix& a, const Matrix& b);
inline Matrix operator*(const Matrix& a, const Matrix& b) { return mat_mul(a, b); }
Matrix commutator(const Matrix& a, const Matrix& b);

std::size_t rank(const Matrix& m);
/// dim ker(m - lambda I).
std::size_t nullity(const Matrix& m, const Gaussian& lambda);
/// Basis of ker(m), one vector per free column of the reduced echelon form.
std::vector<std::vector<Gaussian>> solve_homogeneous(const Matrix& m);
std::optional<Matrix> inverse(const Matrix& m);
/// Rank of the matrix whose rows are the given vectors.
std::size_t rank_of_vectors(const std::vector<std::vector<Gaussian>>& vs);

/// Incremental reduced row echelon form. Rows are added one at a time and
/// kept fully reduced, so tall sparse systems never materialize densely.
class RowReducer {
 public:
  explicit RowReducer(std::size_t cols) : cols_(cols) {}

  /// Reduces `row` against the basis; returns true if it increased the rank.
  bool add_row(std::vector<Gaussian> row);
  std::size_t rank() const { return rows_.size(); }
  std::size_t cols() const { return cols_; }
  std::vector<std::vector<Gaussian>> kernel() const;
  /// True if v lies in the row space.
  bool contains(std::vector<Gaussian> v) const;

 private:
  void reduce(std::vector<Gaussian>& row) const;

  std::size_t cols_;
  std::vector<std::vector<Gaussian>> rows_;  // pivot entry normalized to 1
  std::vector<std::size_t> pivots_;
};

}  // namespace hitchin
