#include <doctest.h>

#include "hitchin/connection.hpp"
#include "hitchin/polynomial.hpp"
#include "hitchin/spectra.hpp"

using namespace hitchin;

namespace {

std::size_t binomial(int n, int r) {
  std::size_t c = 1;
  for (int i = 1; i <= r; ++i) c = c * (n - r + i) / i;
  return c;
}

PhaseMultiset from(std::initializer_list<std::pair<Rational, std::size_t>> items) {
  PhaseMultiset m;
  for (const auto& [q, n] : items) m.add(q, n);
  return m;
}

// Per-monomial phases mu/2 + transvection part, written out from the
// diagonal forms: M12 has eigenvalue 2(k - (k-2b)^2) and the normalized lift of
// U_x12 + iI acts by i^b. Pulling back inverts it, giving phase +b/4;
// transvection_sign -1 keeps the lift itself and 0 drops it.
PhaseMultiset per_monomial(int k, int transvection_sign) {
  PhaseMultiset out;
  const Rational lambda = -16 * (k + 2);
  for (const auto& e : [&] {
         std::vector<Exponents> v;
         const auto& basis = monomial_basis(4, k);
         for (std::size_t i = 0; i < basis.size(); ++i) v.push_back(basis[i]);
         return v;
       }()) {
    const int b = e[2] + e[3];
    const Rational mu = Rational(2 * (k - (k - 2 * b) * (k - 2 * b))) / lambda;
    out.add(mu / 2 + Rational(transvection_sign * b, 4));
  }
  return out;
}

}  // namespace

TEST_SUITE("spectra") {
  TEST_CASE("phase multisets") {
    PhaseMultiset m;
    m.add(Rational(5, 4));
    m.add(Rational(-3, 4), 2);
    m.add(0);
    CHECK(m.items() == std::vector<PhaseItem>{{0, 1}, {Rational(1, 4), 3}});
    CHECK(m.total() == 4);
    CHECK(m.shifted(Rational(3, 4)) == from({{Rational(3, 4), 1}, {0, 3}}));
    CHECK(fourth_root_phase(1) == 0);
    CHECK(fourth_root_phase(Gaussian(0, -1)) == Rational(1, 4));
    CHECK(fourth_root_phase(-1) == Rational(1, 2));
    CHECK(fourth_root_phase(Gaussian(0, 1)) == Rational(3, 4));
    CHECK_THROWS(fourth_root_phase(Gaussian(1, 1)));
  }

  TEST_CASE("projective comparison") {
    const auto a = from({{0, 2}, {Rational(1, 3), 1}});
    CHECK(compare_projective(a, a) == Rational(0));
    CHECK(compare_projective(a.shifted(Rational(1, 5)), a) == Rational(1, 5));
    CHECK_FALSE(compare_projective(from({{0, 1}, {Rational(1, 3), 1}}), from({{0, 1}, {Rational(1, 2), 1}})).has_value());
    CHECK_FALSE(compare_projective(from({{0, 2}}), from({{0, 3}})).has_value());
  }

  TEST_CASE("non-separating closed form") {
    CHECK(nonseparating_closed_form(1) == from({{0, 2}, {Rational(1, 4), 2}}));
    // c = 0, 1/2, 1 with multiplicities 3, 4, 3.
    CHECK(nonseparating_closed_form(2) == from({{0, 3}, {Rational(3, 16), 4}, {Rational(1, 2), 3}}));
    for (int k = 1; k <= 8; ++k) CHECK(nonseparating_closed_form(k).total() == binomial(k + 3, 3));
  }

  TEST_CASE("non-separating constructive spectrum and its convention") {
    for (int k = 1; k <= 6; ++k) {
      CHECK(nonseparating_constructive(k) == per_monomial(k, 1));
      const auto r = nonseparating_spectrum(k);
      CHECK(r.agree());
      CHECK(r.constructive.total() == binomial(k + 3, 3));
    }
    // The projective comparison cannot see the direction of the lift: b <-> k - b
    // maps one convention onto the other.
    for (int k = 1; k <= 6; ++k) CHECK(compare_projective(per_monomial(k, -1), nonseparating_closed_form(k)).has_value());
    // Dropping the transvection part altogether does break it.
    CHECK_FALSE(compare_projective(per_monomial(3, 0), nonseparating_closed_form(3)).has_value());
  }

  TEST_CASE("Q and the primitive decomposition") {
    CHECK(q_xq_matrix(1).is_zero());
    for (int k = 1; k <= 6; ++k) {
      const auto pd = primitive_decomposition(k);
      CHECK(pd.complete);
      CHECK(pd.eigenvectors);
      std::size_t total = 0;
      for (const auto& s : pd.summands) {
        CHECK(s.basis.size() == std::size_t((k - 2 * s.l + 1) * (k - 2 * s.l + 1)));
        CHECK(s.qxq_eigenvalue == Gaussian(s.l * (k - s.l + 1)));
        total += s.basis.size();
      }
      CHECK(total == binomial(k + 3, 3));
    }
    const auto pd2 = primitive_decomposition(2);
    REQUIRE(pd2.summands.size() == 2);
    CHECK(pd2.summands[0].basis.size() + pd2.summands[1].basis.size() == 10);
  }

  TEST_CASE("R_123 scalar part") {
    const auto r1 = verify_r123(1);
    CHECK(r1.ok());
    CHECK(r1.lambda_k == Gaussian(0));
    // Regression values: the scalar is an output of the computation, lambda_k = -4k(k-1).
    const int expected[] = {0, 0, -8, -24, -48, -80, -120};
    for (int k = 2; k <= 6; ++k) {
      const auto r = verify_r123(k);
      CHECK(r.ok());
      CHECK(r.lambda_k == Gaussian(expected[k]));
    }
  }

  TEST_CASE("separating spectrum") {
    CHECK(separating_closed_form(1) == from({{0, 4}}));
    CHECK(separating_closed_form(2) == from({{0, 9}, {Rational(1, 2), 1}}));
    for (int k = 1; k <= 8; ++k) CHECK(separating_closed_form(k).total() == binomial(k + 3, 3));
    for (int k = 1; k <= 6; ++k) {
      const auto r = separating_spectrum(k);
      CHECK(r.agree());
      CHECK(r.constructive == r.closed_form);
    }
  }

  TEST_CASE("Verlinde labelings") {
    CHECK(verlinde_enumerate(TrivalentGraph::theta(), 0).size() == 1);
    for (int k = 0; k <= 12; ++k) CHECK(verlinde_enumerate(TrivalentGraph::theta(), k).size() == binomial(k + 3, 3));
    for (int k = 0; k <= 8; ++k) CHECK(verlinde_enumerate(TrivalentGraph::dumbbell(), k).size() == binomial(k + 3, 3));
    CHECK(admissible_triple(1, 1, 0, 1));
    CHECK_FALSE(admissible_triple(1, 1, 1, 4));  // odd sum
    CHECK_FALSE(admissible_triple(2, 2, 2, 2));  // sum exceeds 2k
    CHECK_FALSE(admissible_triple(4, 0, 2, 6));  // triangle inequality
    CHECK(TrivalentGraph::parse("dumbbell").has_value());
    CHECK_FALSE(TrivalentGraph::parse("tetrahedron").has_value());

    for (int k = 1; k <= 6; ++k) {
      PhaseMultiset theta, bridge;
      for (int twice = 0; twice <= k; ++twice) {
        theta.add(Rational(twice * (twice + 2), 4 * (k + 2)), (k - twice + 1) * (twice + 1));
        if (twice % 2 == 0 && k - twice >= 0) {
          const int l = twice / 2;
          bridge.add(Rational(l * (l + 1), k + 2), (k - 2 * l + 1) * (k - 2 * l + 1));
        }
      }
      for (int e = 0; e < 3; ++e) CHECK(dehn_twist_phases(TrivalentGraph::theta(), e, k) == theta);
      CHECK(dehn_twist_phases(TrivalentGraph::dumbbell(), 2, k) == bridge);
      for (const auto& lab : verlinde_enumerate(TrivalentGraph::dumbbell(), k)) CHECK(lab.twice_label[2] % 2 == 0);
    }
  }
}
