#include <doctest.h>

#include "hitchin/connection.hpp"
#include "hitchin/polynomial.hpp"

using namespace hitchin;

TEST_SUITE("connection") {
  TEST_CASE("residue operators from first-order lifts") {
    for (int k = 1; k <= 3; ++k) {
      const ResidueOperators ops(2, k);
      const HalfSpin spin(2);
      const std::size_t n = dim_sym(4, k);
      CHECK(ops.dim() == n);
      for (int i = 1; i <= 6; ++i)
        for (int j = i + 1; j <= 6; ++j) {
          CHECK(ops.at(i, j) == ops.at(j, i));
          const Matrix l = lift_linear(spin.upper(i, j), k);
          CHECK(ops.at(i, j) == (l * l + Matrix::identity(n) * Gaussian(k)) * Gaussian(2));
          CHECK(omega_symbol(2, k, i, j).matrix == ops.at(i, j));
          if (k == 1) CHECK(ops.at(i, j).is_zero());
        }
    }
    CHECK_THROWS_AS(omega_symbol(2, 2, 3, 3), std::invalid_argument);
  }

  TEST_CASE("M_12 in terms of U_x12") {
    // rho(F12) = +-i U_x12 with U_x12 = diag(1,1,-1,-1), so M12 = -sigma(L_U^2).
    const Matrix u = involution_matrix(pair_point(2, 1, 2));
    for (int k = 2; k <= 4; ++k)
      CHECK(ResidueOperators(2, k).at(1, 2) == symbol_matrix(symbol_of_square(u), k) * Gaussian(-1));
  }

  TEST_CASE("braid relations and a broken control") {
    CHECK(verify_braid_relations(2, 2).ok());
    CHECK(verify_braid_relations(1, 3).ok());
    ResidueOperators ops(2, 2);
    ops.mutable_at(1, 2)(0, 1) += Gaussian(1);
    const auto r = verify_braid_relations(ops);
    CHECK_FALSE(r.ok());
    CHECK(r.failures.size() > 0);
  }

  TEST_CASE("Heisenberg invariance with sign-flipping linear parts") {
    const auto r = verify_heisenberg_invariance(2, 2);
    CHECK(r.ok());
    CHECK(r.checked == 225);
    bool saw_flip = false;
    for (const auto& [y, i, j, sign] : r.linear_signs) {
      CHECK((sign == 1 || sign == -1));
      saw_flip = saw_flip || sign == -1;
    }
    CHECK(saw_flip);
  }

  TEST_CASE("lambda presets") {
    CHECK(lambda_kummer() == Gaussian(-16));
    CHECK(lambda_hitchin(3) == Gaussian(-80));
  }

  TEST_CASE("one-form evaluation") {
    const std::vector<Gaussian> z{0, 1, Gaussian(0, 1), -1, Gaussian(0, -1), 2};
    const ConnectionForm k1{ResidueOperators(2, 1), lambda_hitchin(1)};
    for (int i = 1; i <= 6; ++i) CHECK(evaluate_form(k1, z, i).is_zero());

    const ConnectionForm form{ResidueOperators(2, 2), lambda_hitchin(2)};
    CHECK_THROWS(evaluate_form(form, {0, 0, 1, 2, 3, 4}, 1));
    CHECK_THROWS(evaluate_form(ConnectionForm{ResidueOperators(2, 2), Gaussian(0)}, z, 1));

    // Residue along z = (z2 + t, z2, ...): (z1 - z2) A_1 -> M12 / lambda, with an O(t) error.
    auto excess = [&](const Rational& t) {
      std::vector<Gaussian> zt = z;
      zt[0] = zt[1] + Gaussian(t);
      const Matrix d = evaluate_form(form, zt, 1) * Gaussian(t) - form.ops.at(1, 2) * form.lambda.inverse();
      return d.max_norm();
    };
    const Rational e1 = excess(Rational(1, 1000)), e2 = excess(Rational(1, 1000000));
    CHECK(e1 > 0);
    CHECK(e2 * 900 < e1);
    CHECK(e2 * 1100 > e1);
  }

  TEST_CASE("k = 2 eigenlines") {
    const auto d = k2_eigenspace_decomposition();
    CHECK(d.lines.size() == 10);
    CHECK(d.all_one_dimensional);
    CHECK(d.scalars_are_even_integers);
    CHECK(d.spans);
    const ResidueOperators ops(2, 2);
    for (int i = 1; i <= 6; ++i)
      for (int j = i + 1; j <= 6; ++j) {
        Gaussian sum;
        for (const auto& line : d.lines) sum += line.scalars.at({i, j});
        CHECK(sum == ops.at(i, j).trace());
      }
    for (const auto& line : d.lines) CHECK(ops.at(1, 2).apply(line.vector) == [&] {
      auto v = line.vector;
      for (auto& x : v) x *= line.scalars.at({1, 2});
      return v;
    }());
  }
}
