#include <doctest.h>

#include "hitchin/heisenberg.hpp"
#include "hitchin/polynomial.hpp"

using namespace hitchin;

namespace {

Matrix sample_matrix(std::size_t n, int salt) {
  Matrix a(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) a(r, c) = Gaussian((int(r * 5 + c * 3) + salt) % 7 - 3, int(r + 2 * c + salt) % 3 - 1);
  return a;
}

Polynomial sample_poly(std::size_t n, int k, int salt) {
  Polynomial p(n, k);
  for (std::size_t m = 0; m < p.coeffs.size(); ++m) p.coeffs[m] = Gaussian((int(m) * 3 + salt) % 5 - 2, int(m + salt) % 2);
  return p;
}

std::size_t binomial(std::size_t n, std::size_t r) {
  std::size_t c = 1;
  for (std::size_t i = 1; i <= r; ++i) c = c * (n - r + i) / i;
  return c;
}

}  // namespace

TEST_SUITE("polynomial") {
  TEST_CASE("monomial bases") {
    for (std::size_t n = 1; n <= 6; ++n)
      for (int k = 0; k <= 5; ++k) {
        const auto& b = monomial_basis(n, k);
        CHECK(b.size() == binomial(n + k - 1, k));
        CHECK(dim_sym(n, k) == b.size());
        for (std::size_t i = 0; i < b.size(); ++i) CHECK(b.index(b[i]) == i);
      }
    CHECK(monomial_basis(4, 2)[0] == Exponents{2, 0, 0, 0});
    CHECK(monomial_basis(3, -1).size() == 0);
  }

  TEST_CASE("first-order lifts") {
    for (int k = 0; k <= 4; ++k) CHECK(lift_linear(Matrix::identity(4), k) == Matrix::identity(dim_sym(4, k)) * Gaussian(k));
    const Matrix d = Matrix::diagonal({1, 1, -1, -1});
    const auto& b2 = monomial_basis(4, 2);
    const std::size_t idx = b2.index({1, 0, 1, 0});  // X00 X10
    CHECK(lift_linear(d, 2)(idx, idx) == Gaussian(0));
    // On linear polynomials L_A is A itself.
    const Matrix a = sample_matrix(4, 1);
    CHECK(lift_linear(a, 1) == a);
    // Homomorphism property: L_[A,B] = [L_A, L_B].
    const Matrix b = sample_matrix(4, 2);
    CHECK(lift_linear(commutator(a, b), 3) == commutator(lift_linear(a, 3), lift_linear(b, 3)));
  }

  TEST_CASE("symmetric powers") {
    const Matrix a = sample_matrix(3, 4), b = sample_matrix(3, 5);
    CHECK(symmetric_power(a * b, 3) == symmetric_power(a, 3) * symmetric_power(b, 3));
    CHECK(symmetric_power(Matrix::identity(3), 4) == Matrix::identity(dim_sym(3, 4)));
  }

  TEST_CASE("symbol of a square") {
    for (int salt = 0; salt < 3; ++salt) {
      const Matrix a = sample_matrix(4, salt);
      const auto s = symbol_of_square(a);
      CHECK(s.is_symmetric());
      for (int k = 1; k <= 4; ++k) {
        const Matrix l = lift_linear(a, k);
        CHECK(symbol_matrix(s, k) == (l * l - lift_linear(a * a, k)) * Gaussian(2));
      }
      CHECK(symbol_matrix(s, 1).is_zero());
    }
    // U_{x12} is diagonal with signs (1,1,-1,-1); for i U_{x12} the symbol is
    // diagonal on monomials with eigenvalue 2(k - (k-2b)^2), b = m_2 + m_3.
    const Matrix f = involution_matrix(pair_point(2, 1, 2)) * Gaussian::i();
    for (int k = 1; k <= 4; ++k) {
      const Matrix m = symbol_matrix(symbol_of_square(f), k);
      CHECK(m.is_diagonal());
      const auto& basis = monomial_basis(4, k);
      for (std::size_t idx = 0; idx < basis.size(); ++idx) {
        const int b = basis[idx][2] + basis[idx][3];
        CHECK(m(idx, idx) == Gaussian(2 * (k - (k - 2 * b) * (k - 2 * b))));
      }
    }
  }

  TEST_CASE("contraction against a polynomial") {
    // sigma(L^2) for L = X0 d1 contracted with X1^2 gives 4 X0^2 X1 (x) d1.
    Matrix e01(2, 2);
    e01(0, 1) = 1;
    const auto t = contract_symbol(symbol_of_square(e01), Polynomial::monomial(2, {0, 2}));
    CHECK(t.degree == 3);
    MixedTensor want(2, 3);
    want.add(Polynomial::monomial(2, {2, 1}, 4), 1);
    CHECK(t == want);

    CHECK(contract_symbol(symbol_of_square(sample_matrix(3, 1)), Polynomial::constant(3, 5)).is_zero());

    // sigma(D^2).P = 2 D(P) D for D = L_A = sum_j f_j d_j with f_j = sum_i a_ij X_i.
    for (int salt = 0; salt < 3; ++salt) {
      const Matrix a = sample_matrix(4, salt);
      const Polynomial p = sample_poly(4, 4, salt);
      const Polynomial dp(4, 4, lift_linear(a, 4).apply(p.coeffs));
      MixedTensor want2(4, 5);
      for (std::size_t j = 0; j < 4; ++j) {
        Polynomial fj(4, 1);
        for (std::size_t i = 0; i < 4; ++i) fj += Polynomial::variable(4, i) * a(i, j);
        want2.add(multiply(dp, fj), j, 2);
      }
      CHECK(contract_symbol(symbol_of_square(a), p) == want2);
    }
  }

  TEST_CASE("Euler tensor") {
    const Polynomial q = sample_poly(3, 2, 1);
    const auto e = euler_product(q);
    CHECK(e.degree == 3);
    for (int salt = 0; salt < 3; ++salt) {
      const Polynomial r = sample_poly(3, 1, salt);
      CHECK(apply(e, r) == multiply(q, r));
    }
    // On degree m polynomials the Euler field is m times the identity.
    const Polynomial r3 = sample_poly(3, 3, 2);
    CHECK(apply(euler_product(Polynomial::constant(3, 1)), r3) == r3 * Gaussian(3));
  }

  TEST_CASE("polynomial ring basics") {
    const Polynomial x0 = Polynomial::variable(2, 0), x1 = Polynomial::variable(2, 1);
    const Polynomial s = x0 + x1;
    const Polynomial cube = power(s, 3);
    CHECK(cube.coeff({2, 1}) == Gaussian(3));
    CHECK(partial(cube, 0) == power(s, 2) * Gaussian(3));
  }
}
