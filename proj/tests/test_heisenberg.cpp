#include <doctest.h>

#include "hitchin/heisenberg.hpp"

using namespace hitchin;

namespace {

PhasePoint pt(int g, BitVec xi, BitVec xp) { return {g, xi, xp}; }

std::vector<SubsetLabel> even_subsets(int g) {
  std::vector<SubsetLabel> out;
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << (2 * g + 2)); ++m)
    if (__builtin_popcountll(m) % 2 == 0) out.push_back({g, m});
  return out;
}

}  // namespace

TEST_SUITE("heisenberg") {
  TEST_CASE("group law") {
    for (int g = 1; g <= 3; ++g) {
      const auto pts = PhasePoint::all(g);
      for (const auto& x : pts) {
        const GroupElement e{FourthRoot(1), x};
        CHECK(multiply(identity_element(g), e) == e);
        // (t,x)^2 = ((-1)^{xi xi'} t^2, 0)
        const auto sq = multiply(e, e);
        CHECK(sq.point.is_zero());
        CHECK(sq.t == FourthRoot(2 + 2 * x.self_pairing()));
        CHECK(multiply(inverse(e), e) == identity_element(g));
        for (const auto& y : pts) {
          const GroupElement f{FourthRoot(0), y};
          const auto comm = multiply(multiply(e, f), multiply(inverse(e), inverse(f)));
          CHECK(comm.point.is_zero());
          CHECK(comm.t == FourthRoot(2 * symplectic(x, y)));
        }
      }
    }
    CHECK_THROWS(multiply(identity_element(1), identity_element(2)));
  }

  TEST_CASE("symplectic form on subsets") {
    const int g = 2;
    CHECK(symplectic(pair_point(g, 1, 2), pair_point(g, 1, 3)) == 1);
    for (const auto& x : PhasePoint::all(g)) CHECK(symplectic(x, x) == 0);
    const auto subsets = even_subsets(g);
    for (const auto& t : subsets)
      for (const auto& s : subsets) {
        CHECK(symplectic(subset_to_point(t), subset_to_point(s)) == __builtin_popcountll(t.members & s.members) % 2);
        CHECK(subset_to_point(t) + subset_to_point(s) == subset_to_point(t + s));
      }
    for (const auto& t : subsets) CHECK(subset_to_point(t) == subset_to_point(t.complement()));
  }

  TEST_CASE("subset coordinates") {
    CHECK(subset_to_point(SubsetLabel::of(2, {1, 2})) == pt(2, 0b00, 0b10));
    CHECK(subset_to_point(SubsetLabel::of(2, {3, 4, 5, 6})) == pt(2, 0b00, 0b10));
    CHECK(subset_to_point(SubsetLabel::of(2, {1, 6})) == pt(2, 0b10, 0b00));
    CHECK(subset_to_point(SubsetLabel::of(2, {2, 3, 4, 5})) == pt(2, 0b10, 0b00));
    CHECK(subset_to_point(SubsetLabel::of(1, {1, 3})) == pt(1, 1, 1));
    CHECK(subset_to_point(SubsetLabel::of(1, {2, 4})) == pt(1, 1, 1));
    CHECK_THROWS_AS(subset_to_point(SubsetLabel::of(2, {1, 2, 3})), std::invalid_argument);
  }

  TEST_CASE("involutive lift") {
    CHECK(involutive_lift(pt(2, 0, 0)) == FourthRoot(0));
    CHECK(involutive_lift(pair_point(2, 1, 2)) == FourthRoot(0));
    CHECK(pair_point(2, 2, 6) == pt(2, 0b10, 0b10));
    CHECK(involutive_lift(pair_point(2, 2, 6)) == FourthRoot(1));
  }

  TEST_CASE("Schrodinger matrices") {
    CHECK(involution_matrix(pair_point(2, 1, 2)) == Matrix::diagonal({1, 1, -1, -1}));
    CHECK(schrodinger_matrix({FourthRoot(1), pt(2, 0, 0)}) == Matrix::identity(4) * Gaussian::i());
    // g = 1, U(i, (1,1)): X_0 -> -i X_1, X_1 -> i X_0 (columns are images).
    CHECK(schrodinger_matrix({FourthRoot(1), pt(1, 1, 1)}) == Matrix(2, 2, {0, Gaussian(0, 1), Gaussian(0, -1), 0}));

    for (int g = 1; g <= 3; ++g) {
      const auto pts = PhasePoint::all(g);
      for (const auto& x : pts) {
        const Matrix ux = involution_matrix(x);
        CHECK(ux * ux == Matrix::identity(std::size_t{1} << g));
        for (const auto& y : pts) {
          const Matrix uy = involution_matrix(y);
          CHECK(ux * uy == uy * ux * Gaussian(symplectic(x, y) ? -1 : 1));
          const GroupElement a{FourthRoot(1), x}, b{FourthRoot(3), y};
          CHECK(schrodinger_matrix(a) * schrodinger_matrix(b) == schrodinger_matrix(multiply(a, b)));
        }
      }
    }
  }

  TEST_CASE("explicit genus-two operators") {
    // From the defining formula: U_{x16} swaps X00 <-> X10 and X01 <-> X11,
    // i.e. X10 d00 + X11 d01 + X00 d10 + X01 d11.
    const Matrix u16 = involution_matrix(pair_point(2, 1, 6));
    CHECK(u16 == Matrix(4, 4, {0, 0, 1, 0,  //
                               0, 0, 0, 1,  //
                               1, 0, 0, 0,  //
                               0, 1, 0, 0}));
    // A variant with d10 repeated (X10 d00 + X11 d10 + X00 d10 + X01 d10) is not
    // even invertible, so it cannot be U_{x16}.
    const Matrix repeated(4, 4, {0, 0, 1, 0,  //
                                0, 0, 1, 0,  //
                                1, 0, 0, 0,  //
                                0, 0, 1, 0});
    CHECK(rank(repeated) == 2);
    // U_{x26} = i(-X10 d00 - X11 d01 + X00 d10 + X01 d11).
    const Gaussian i = Gaussian::i();
    CHECK(involution_matrix(pair_point(2, 2, 6)) == Matrix(4, 4, {0, 0, i, 0,   //
                                                                 0, 0, 0, i,   //
                                                                 -i, 0, 0, 0,  //
                                                                 0, -i, 0, 0}));
  }

  TEST_CASE("transvections") {
    const int g = 2;
    const auto pts = PhasePoint::all(g);
    const Gaussian i = Gaussian::i();
    for (const auto& x : pts) {
      if (x.is_zero()) {
        CHECK_THROWS(transvection_matrix(x));
        continue;
      }
      const Matrix t = transvection_matrix(x);
      CHECK(t * t == involution_matrix(x) * (Gaussian(2) * i));
      const Matrix tinv = *inverse(t);
      CHECK(tinv == (involution_matrix(x) - Matrix::identity(4) * i) * Gaussian(Rational(1, 2)));
      for (const auto& y : pts) {
        const PhasePoint ty = symplectic_transvection(x, y);
        CHECK(symplectic_transvection(x, ty) == y);
        // Conjugation lands on a fourth-root multiple of U_{T_x(y)}.
        const Matrix conj = t * involution_matrix(y) * tinv;
        const Matrix target = involution_matrix(ty);
        int found = 0;
        for (int e = 0; e < 4; ++e) found += conj == target * Gaussian::i_pow(e);
        CHECK(found == 1);
      }
      CHECK(symplectic_transvection(x, x) == x);
    }
    CHECK(symplectic_transvection(pair_point(g, 1, 2), pair_point(g, 2, 3)) == pair_point(g, 1, 3));
    // x = (0, (1,0)): the normalized lift is diag(I, iI).
    const Matrix tn = transvection_matrix(pt(2, 0, 0b10)) * Gaussian(1, 1).inverse();
    CHECK(tn == Matrix::diagonal({1, 1, i, i}));
  }
}
