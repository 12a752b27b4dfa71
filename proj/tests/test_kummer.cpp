#include <doctest.h>

#include "hitchin/kummer.hpp"

using namespace hitchin;

namespace {

int inversion_parity(const std::vector<int>& perm) {
  int inv = 0;
  for (std::size_t a = 0; a < perm.size(); ++a)
    for (std::size_t b = a + 1; b < perm.size(); ++b) inv += perm[a] > perm[b];
  return inv % 2 ? -1 : 1;
}

const Intertwiner& phi() {
  static const Intertwiner p = *solve_intertwiner(1);
  return p;
}

std::vector<Gaussian> column(const Matrix& m, std::size_t c) { return m.column(c); }

}  // namespace

TEST_SUITE("kummer") {
  TEST_CASE("wedge basis and generator action") {
    const int g = 2;
    const auto& basis = wedge_basis(g);
    CHECK(basis.size() == 20);
    for (std::size_t s = 0; s < basis.size(); ++s) CHECK(wedge_position(basis[s]) == s);
    for (int i = 1; i <= 6; ++i)
      for (int j = i + 1; j <= 6; ++j) {
        const Matrix f = wedge_generator_action(g, i, j);
        const Matrix f2 = f * f;
        for (std::size_t s = 0; s < basis.size(); ++s) {
          const int meet = basis[s].contains(i) + basis[s].contains(j);
          if (meet != 1) {
            CHECK(column(f, s) == std::vector<Gaussian>(20));
          } else {
            std::vector<Gaussian> want(20);
            want[s] = -4;
            CHECK(column(f2, s) == want);
            // t_{S,ij} = -t_{S+ij,ij}: the partner column carries the opposite sign.
            WedgeIndex partner{g, basis[s].members ^ (std::uint64_t{1} << (i - 1)) ^ (std::uint64_t{1} << (j - 1))};
            const std::size_t p = wedge_position(partner);
            CHECK(f(p, s) == -f(s, p));
            CHECK_FALSE(f(p, s).is_zero());
          }
        }
      }
  }

  TEST_CASE("sigma signs by inversion count") {
    CHECK(sigma_sign({2, 0b000111}) == 1);
    CHECK(sigma_sign({2, 0b001011}) == -1);
    for (const auto& s : wedge_basis(2)) {
      std::vector<int> perm = s.elements();
      const auto rest = s.complement().elements();
      perm.insert(perm.end(), rest.begin(), rest.end());
      CHECK(sigma_sign(s) == inversion_parity(perm));
    }
  }

  TEST_CASE("the two invariant halves") {
    for (int g = 1; g <= 2; ++g) {
      const Matrix a = wedge_hodge_operator(g);
      const std::size_t n = wedge_basis(g).size();
      const Gaussian ig = Gaussian::i_pow(g + 1);
      std::vector<std::vector<Gaussian>> both;
      for (int sign : {1, -1}) {
        const auto half = half_space_basis(g, sign);
        CHECK(half.size() == n / 2);
        RowReducer span(n);
        for (const auto& v : half) {
          span.add_row(v);
          both.push_back(v);
          auto av = a.apply(v);
          // sign * (i^{g+1})^{-1}, one of the two eigenvalues +-i^{g+1}
          for (auto& x : av) x /= ig.inverse() * Gaussian(sign);
          CHECK(av == v);
        }
        for (int i = 1; i <= 2 * g + 2; ++i)
          for (int j = i + 1; j <= 2 * g + 2; ++j)
            for (const auto& v : half) CHECK(span.contains(wedge_generator_action(g, i, j).apply(v)));
      }
      CHECK(rank_of_vectors(both) == n);
    }
  }

  TEST_CASE("intertwiner") {
    CHECK(intertwiner_solution_dim(1) == 1);
    CHECK(intertwiner_solution_dim(-1) == 0);
    CHECK_FALSE(solve_intertwiner(-1).has_value());
    CHECK(phi().solution_dim == 1);
    // Phi kills the other half.
    for (const auto& v : half_space_basis(2, -1)) CHECK(phi().phi.apply(v) == std::vector<Gaussian>(10));
  }

  TEST_CASE("quartic structure") {
    const std::vector<Gaussian> z{2, -3, 5, 7, -11, 13};
    const Polynomial p = kummer_quartic(z, phi()).p;
    CHECK(p.degree == 4);
    std::vector<Gaussian> tz = z;
    for (auto& x : tz) x *= 2;
    CHECK(kummer_quartic(tz, phi()).p == p * Gaussian(8));

    // z_1 = 0 keeps only the ten S avoiding 1.
    std::vector<Gaussian> z0 = z;
    z0[0] = 0;
    Polynomial sum(4, 4);
    int terms = 0;
    for (std::size_t s = 0; s < wedge_basis(2).size(); ++s) {
      if (wedge_basis(2)[s].contains(1)) continue;
      ++terms;
      const Polynomial e = phi().image(s);
      sum += multiply(e, e) * z_product(z0, wedge_basis(2)[s]);
    }
    CHECK(terms == 10);
    CHECK(kummer_quartic(z0, phi()).p == sum);

    // P is affine in each z_i, so the derivative equals the exact difference quotient.
    for (int i = 1; i <= 6; ++i) {
      std::vector<Gaussian> zi = z;
      zi[i - 1] += Gaussian(1);
      CHECK(kummer_quartic(zi, phi()).p - p == kummer_quartic_dz(z, phi(), i));
    }
  }

  TEST_CASE("flat sections at fixed configurations") {
    for (const std::vector<Gaussian>& z : {std::vector<Gaussian>{0, 1, 2, 3, 4, 5}, std::vector<Gaussian>{1, 2, 4, 8, 16, 32}}) {
      const auto r = verify_flat_section(z, phi());
      CHECK(r.winning_sign == 1);
      REQUIRE(r.residuals.size() == 6);
      for (const auto& res : r.residuals) {
        CHECK(res.residual_plus == 0);
        CHECK(res.residual_minus > 0);
      }
    }
    CHECK(spin_flat_coefficient() == Rational(1, 8));
  }

  TEST_CASE("the literal 1/16 does not give a flat section in spin coordinates") {
    const std::vector<Gaussian> z{0, 1, 2, 3, 4, 5};
    CHECK(verify_flat_section(z, phi(), Rational(1, 16)).winning_sign == 0);
  }

  TEST_CASE("negative control: perturbed quartic") {
    const std::vector<Gaussian> z{0, 1, 2, 3, 4, 5};
    const Polynomial e = phi().image(3);
    const Polynomial p = kummer_quartic(z, phi()).p + multiply(e, e);
    std::vector<Polynomial> dp;
    for (int i = 1; i <= 6; ++i) dp.push_back(kummer_quartic_dz(z, phi(), i));
    CHECK(verify_flat_section(z, p, dp).winning_sign == 0);
    CHECK_THROWS(verify_flat_section({0, 0, 2, 3, 4, 5}, phi()));
  }

  TEST_CASE("seeded configurations") {
    const auto a = seeded_configurations(7, 3), b = seeded_configurations(7, 3);
    CHECK(a == b);
    CHECK(seeded_configurations(8, 3) != a);
    for (const auto& z : a) {
      REQUIRE(z.size() == 6);
      for (std::size_t i = 0; i < 6; ++i) {
        CHECK(z[i].is_real());
        CHECK(abs(z[i].re()) <= 64);
        for (std::size_t j = i + 1; j < 6; ++j) CHECK_FALSE(z[i] == z[j]);
      }
      CHECK(verify_flat_section(z, phi()).winning_sign == 1);
    }
  }

  TEST_CASE("symbolic family") {
    const auto r = verify_flat_section_symbolic({3, 3, -1, 4, -7, 9}, {1, 0, 0, 0, 0, 0}, phi(), 1);
    CHECK(r.ok());
    const auto wrong = verify_flat_section_symbolic({3, 3, -1, 4, -7, 9}, {1, 0, 0, 0, 0, 0}, phi(), -1);
    CHECK_FALSE(wrong.ok());
    const auto general = verify_flat_section_symbolic({0, 1, 2, 3, 4, 5}, {1, -2, 0, 3, 0, 1}, phi(), 1);
    CHECK(general.ok());
  }
}
