#include "hitchin/exact.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace hitchin {

Rational frac_part(const Rational& q) {
  mpz_class fl;
  mpz_fdiv_q(fl.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  Rational r = q - Rational(fl);
  r.canonicalize();
  return r;
}

Gaussian Gaussian::i_pow(long e) {
  switch (((e % 4) + 4) % 4) {
    case 0: return {1, 0};
    case 1: return {0, 1};
    case 2: return {-1, 0};
    default: return {0, -1};
  }
}

Rational Gaussian::max_abs_component() const {
  Rational a = abs(re_);
  Rational b = abs(im_);
  return a > b ? a : b;
}

Gaussian Gaussian::inverse() const {
  Rational n = norm2();
  if (sgn(n) == 0) throw std::domain_error("Gaussian: inverse of zero");
  return {re_ / n, -im_ / n};
}

Gaussian& Gaussian::operator+=(const Gaussian& o) {
  re_ += o.re_;
  im_ += o.im_;
  return *this;
}

Gaussian& Gaussian::operator-=(const Gaussian& o) {
  re_ -= o.re_;
  im_ -= o.im_;
  return *this;
}

Gaussian& Gaussian::operator*=(const Gaussian& o) {
  if (o.is_real()) {
    re_ *= o.re_;
    im_ *= o.re_;
    return *this;
  }
  if (is_real()) {
    im_ = re_ * o.im_;
    re_ *= o.re_;
    return *this;
  }
  Rational r = re_ * o.re_ - im_ * o.im_;
  im_ = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(r);
  return *this;
}

std::string Gaussian::to_string() const {
  std::ostringstream os;
  os << *this;
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Gaussian& z) {
  if (z.is_real()) return os << z.re();
  if (sgn(z.re()) == 0) return os << z.im() << "i";
  os << z.re() << (sgn(z.im()) > 0 ? "+" : "") << z.im() << "i";
  return os;
}

// ---------------------------------------------------------------------------

Matrix::Matrix(std::size_t rows, std::size_t cols, std::vector<Gaussian> entries)
    : rows_(rows), cols_(cols), data_(std::move(entries)) {
  if (data_.size() != rows * cols) throw std::invalid_argument("Matrix: entry count != rows*cols");
}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t k = 0; k < n; ++k) m(k, k) = 1;
  return m;
}

Matrix Matrix::diagonal(const std::vector<Gaussian>& d) {
  Matrix m(d.size(), d.size());
  for (std::size_t k = 0; k < d.size(); ++k) m(k, k) = d[k];
  return m;
}

Matrix Matrix::from_columns(const std::vector<std::vector<Gaussian>>& cols, std::size_t rows) {
  Matrix m(rows, cols.size());
  for (std::size_t c = 0; c < cols.size(); ++c) {
    if (cols[c].size() != rows) throw std::invalid_argument("Matrix::from_columns: length mismatch");
    for (std::size_t r = 0; r < rows; ++r) m(r, c) = cols[c][r];
  }
  return m;
}

std::vector<Gaussian> Matrix::column(std::size_t c) const {
  std::vector<Gaussian> v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

std::vector<Gaussian> Matrix::apply(const std::vector<Gaussian>& v) const {
  if (v.size() != cols_) throw std::invalid_argument("Matrix::apply: dimension mismatch");
  std::vector<Gaussian> out(rows_);
  for (std::size_t c = 0; c < cols_; ++c) {
    if (v[c].is_zero()) continue;
    for (std::size_t r = 0; r < rows_; ++r) {
      const Gaussian& a = (*this)(r, c);
      if (!a.is_zero()) out[r] += a * v[c];
    }
  }
  return out;
}

bool Matrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const Gaussian& z) { return z.is_zero(); });
}

bool Matrix::is_diagonal() const {
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c)
      if (r != c && !(*this)(r, c).is_zero()) return false;
  return true;
}

std::size_t Matrix::support() const {
  return static_cast<std::size_t>(
      std::count_if(data_.begin(), data_.end(), [](const Gaussian& z) { return !z.is_zero(); }));
}

Rational Matrix::max_norm() const {
  Rational best = 0;
  for (const auto& z : data_) {
    Rational a = z.max_abs_component();
    if (a > best) best = a;
  }
  return best;
}

Gaussian Matrix::trace() const {
  Gaussian t;
  for (std::size_t k = 0; k < std::min(rows_, cols_); ++k) t += (*this)(k, k);
  return t;
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

Matrix& Matrix::operator+=(const Matrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("Matrix +: shape mismatch");
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += o.data_[k];
  return *this;
}

Matrix& Matrix::operator-=(const Matrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("Matrix -: shape mismatch");
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= o.data_[k];
  return *this;
}

Matrix& Matrix::operator*=(const Gaussian& s) {
  for (auto& z : data_) z *= s;
  return *this;
}

Matrix mat_mul(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows()) {
    throw std::invalid_argument("mat_mul: " + std::to_string(a.rows()) + "x" + std::to_string(a.cols()) +
                                " times " + std::to_string(b.rows()) + "x" + std::to_string(b.cols()));
  }
  Matrix out(a.rows(), b.cols());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t m = 0; m < a.cols(); ++m) {
      const Gaussian& x = a(r, m);
      if (x.is_zero()) continue;
      for (std::size_t c = 0; c < b.cols(); ++c) {
        const Gaussian& y = b(m, c);
        if (!y.is_zero()) out(r, c) += x * y;
      }
    }
  }
  return out;
}

Matrix commutator(const Matrix& a, const Matrix& b) { return a * b - b * a; }

// ---------------------------------------------------------------------------

void RowReducer::reduce(std::vector<Gaussian>& row) const {
  for (std::size_t k = 0; k < rows_.size(); ++k) {
    const Gaussian f = row[pivots_[k]];
    if (f.is_zero()) continue;
    const auto& basis = rows_[k];
    for (std::size_t c = pivots_[k]; c < cols_; ++c)
      if (!basis[c].is_zero()) row[c] -= f * basis[c];
  }
}

bool RowReducer::add_row(std::vector<Gaussian> row) {
  if (row.size() != cols_) throw std::invalid_argument("RowReducer: row length mismatch");
  reduce(row);
  std::size_t p = 0;
  while (p < cols_ && row[p].is_zero()) ++p;
  if (p == cols_) return false;
  const Gaussian inv = row[p].inverse();
  for (std::size_t c = p; c < cols_; ++c)
    if (!row[c].is_zero()) row[c] *= inv;
  // Keep every stored row free of the new pivot column.
  for (auto& other : rows_) {
    const Gaussian f = other[p];
    if (f.is_zero()) continue;
    for (std::size_t c = p; c < cols_; ++c)
      if (!row[c].is_zero()) other[c] -= f * row[c];
  }
  auto pos = std::lower_bound(pivots_.begin(), pivots_.end(), p);
  auto idx = pos - pivots_.begin();
  pivots_.insert(pos, p);
  rows_.insert(rows_.begin() + idx, std::move(row));
  return true;
}

bool RowReducer::contains(std::vector<Gaussian> v) const {
  if (v.size() != cols_) throw std::invalid_argument("RowReducer: vector length mismatch");
  reduce(v);
  return std::all_of(v.begin(), v.end(), [](const Gaussian& z) { return z.is_zero(); });
}

std::vector<std::vector<Gaussian>> RowReducer::kernel() const {
  std::vector<bool> is_pivot(cols_, false);
  for (auto p : pivots_) is_pivot[p] = true;
  std::vector<std::vector<Gaussian>> basis;
  for (std::size_t f = 0; f < cols_; ++f) {
    if (is_pivot[f]) continue;
    std::vector<Gaussian> v(cols_);
    v[f] = 1;
    for (std::size_t k = 0; k < rows_.size(); ++k) v[pivots_[k]] = -rows_[k][f];
    basis.push_back(std::move(v));
  }
  return basis;
}

std::size_t rank(const Matrix& m) {
  RowReducer rr(m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    std::vector<Gaussian> row(m.entries().begin() + static_cast<std::ptrdiff_t>(r * m.cols()),
                              m.entries().begin() + static_cast<std::ptrdiff_t>((r + 1) * m.cols()));
    rr.add_row(std::move(row));
    if (rr.rank() == m.cols()) break;
  }
  return rr.rank();
}

std::size_t nullity(const Matrix& m, const Gaussian& lambda) {
  if (!m.is_square()) throw std::invalid_argument("nullity: matrix not square");
  Matrix shifted = m - Matrix::identity(m.rows()) * lambda;
  return m.cols() - rank(shifted);
}

std::vector<std::vector<Gaussian>> solve_homogeneous(const Matrix& m) {
  RowReducer rr(m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    std::vector<Gaussian> row(m.entries().begin() + static_cast<std::ptrdiff_t>(r * m.cols()),
                              m.entries().begin() + static_cast<std::ptrdiff_t>((r + 1) * m.cols()));
    rr.add_row(std::move(row));
  }
  return rr.kernel();
}

std::optional<Matrix> inverse(const Matrix& m) {
  if (!m.is_square()) throw std::invalid_argument("inverse: matrix not square");
  const std::size_t n = m.rows();
  // Gauss-Jordan on [m | I].
  std::vector<std::vector<Gaussian>> a(n, std::vector<Gaussian>(2 * n));
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) a[r][c] = m(r, c);
    a[r][n + r] = 1;
  }
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && a[piv][col].is_zero()) ++piv;
    if (piv == n) return std::nullopt;
    std::swap(a[piv], a[col]);
    const Gaussian inv = a[col][col].inverse();
    for (auto& z : a[col]) z *= inv;
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || a[r][col].is_zero()) continue;
      const Gaussian f = a[r][col];
      for (std::size_t c = col; c < 2 * n; ++c)
        if (!a[col][c].is_zero()) a[r][c] -= f * a[col][c];
    }
  }
  Matrix out(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) out(r, c) = a[r][n + c];
  return out;
}

std::size_t rank_of_vectors(const std::vector<std::vector<Gaussian>>& vs) {
  if (vs.empty()) return 0;
  RowReducer rr(vs.front().size());
  for (const auto& v : vs) rr.add_row(v);
  return rr.rank();
}

}  // namespace hitchin
