// Homogeneous polynomials in n variables X_0..X_{n-1} and the operator
// calculus on them: first-order lifts L_A, second-order symbols (with the
// factor-2 symmetric-tensor normalization), contraction and the Euler tensor.
#pragma once

#include <cstdint>
#include <unordered_map>
#include <vector>

#include "hitchin/exact.hpp"

namespace hitchin {

using Exponents = std::vector<int>;

/// Degree-k monomials in n variables, ordered lexicographically by exponent
/// vector, largest first (X_0^k comes first).
class MonomialBasis {
 public:
  MonomialBasis(std::size_t nvars, int degree);

  std::size_t nvars() const { return n_; }
  int degree() const { return k_; }
  std::size_t size() const { return monos_.size(); }
  const Exponents& operator[](std::size_t idx) const { return monos_[idx]; }
  /// Throws std::out_of_range for exponents not in this basis.
  std::size_t index(const Exponents& e) const;

 private:
  static std::uint64_t key(const Exponents& e);

  std::size_t n_;
  int k_;
  std::vector<Exponents> monos_;
  std::unordered_map<std::uint64_t, std::size_t> lookup_;
};

/// Shared immutable basis for (nvars, degree). Negative degrees give an empty basis.
const MonomialBasis& monomial_basis(std::size_t nvars, int degree);
/// C(n+k-1, k).
std::size_t dim_sym(std::size_t nvars, int degree);

/// Homogeneous polynomial as a coefficient vector over monomial_basis(n, k).
struct Polynomial {
  std::size_t nvars = 0;
  int degree = 0;
  std::vector<Gaussian> coeffs;

  Polynomial() = default;
  Polynomial(std::size_t n, int k);
  Polynomial(std::size_t n, int k, std::vector<Gaussian> c);

  static Polynomial constant(std::size_t n, const Gaussian& c);
  static Polynomial variable(std::size_t n, std::size_t a);
  static Polynomial monomial(std::size_t n, const Exponents& e, const Gaussian& c = 1);

  const MonomialBasis& basis() const { return monomial_basis(nvars, degree); }
  bool is_zero() const;
  /// Coefficient of a monomial (zero if absent).
  Gaussian coeff(const Exponents& e) const;

  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const Gaussian& s);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(Polynomial a, const Gaussian& s) { return a *= s; }
  friend Polynomial operator*(const Gaussian& s, Polynomial a) { return a *= s; }
  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.nvars == b.nvars && a.degree == b.degree && a.coeffs == b.coeffs;
  }
};

Polynomial multiply(const Polynomial& a, const Polynomial& b);
Polynomial power(const Polynomial& p, int e);
/// dP/dX_a.
Polynomial partial(const Polynomial& p, std::size_t a);

/// Element of S^m W (x) W*: coefficient of X^mono (x) d_l at mono*nvars + l.
struct MixedTensor {
  std::size_t nvars = 0;
  int degree = 0;
  std::vector<Gaussian> coeffs;

  MixedTensor() = default;
  MixedTensor(std::size_t n, int m);

  const MonomialBasis& basis() const { return monomial_basis(nvars, degree); }
  Gaussian& at(std::size_t mono, std::size_t l) { return coeffs[mono * nvars + l]; }
  const Gaussian& at(std::size_t mono, std::size_t l) const { return coeffs[mono * nvars + l]; }
  /// Adds p (x) d_l.
  void add(const Polynomial& p, std::size_t l, const Gaussian& scale = 1);

  bool is_zero() const;
  Rational max_norm() const;

  MixedTensor& operator+=(const MixedTensor& o);
  MixedTensor& operator*=(const Gaussian& s);
  friend MixedTensor operator+(MixedTensor a, const MixedTensor& b) { return a += b; }
  friend MixedTensor operator*(MixedTensor a, const Gaussian& s) { return a *= s; }
  friend bool operator==(const MixedTensor& a, const MixedTensor& b) {
    return a.nvars == b.nvars && a.degree == b.degree && a.coeffs == b.coeffs;
  }
};

/// The tensor as a first-order operator: sum c X^m d_l(r).
Polynomial apply(const MixedTensor& t, const Polynomial& r);

/// Tensor in S^2 W (x) S^2 W*; entry (i,k,j,l) is the coefficient of
/// X_i X_k (x) d_j (x) d_l, symmetric under i<->k and under j<->l.
struct SecondOrderSymbol {
  std::size_t nvars = 0;
  std::vector<Gaussian> coeffs;  // nvars^4

  explicit SecondOrderSymbol(std::size_t n) : nvars(n), coeffs(n * n * n * n) {}
  Gaussian& at(std::size_t i, std::size_t k, std::size_t j, std::size_t l) {
    return coeffs[((i * nvars + k) * nvars + j) * nvars + l];
  }
  const Gaussian& at(std::size_t i, std::size_t k, std::size_t j, std::size_t l) const {
    return coeffs[((i * nvars + k) * nvars + j) * nvars + l];
  }
  bool is_symmetric() const;
};

/// Matrix of L_A = sum a_ij X_i d_j on monomial_basis(dim, k).
Matrix lift_linear(const Matrix& a, int k);
/// Matrix of S^k(A): substitution X_j -> sum_i a_ij X_i.
Matrix symmetric_power(const Matrix& a, int k);
/// sigma(L_A^2) = 2 sum a_ij a_kl X_i X_k d_j d_l.
SecondOrderSymbol symbol_of_square(const Matrix& a);
/// The symbol as a differential operator on S_k (ordinary second derivatives).
Matrix symbol_matrix(const SecondOrderSymbol& s, int k);
/// Contraction of the first lower index against p; lands in S^{k+1} W (x) W*.
MixedTensor contract_symbol(const SecondOrderSymbol& s, const Polynomial& p);
/// sum_sigma (q X_sigma) (x) d_sigma.
MixedTensor euler_product(const Polynomial& q);

}  // namespace hitchin
