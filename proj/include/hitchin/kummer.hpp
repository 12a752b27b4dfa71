// The wedge representation of so(2g+2) on Lambda^{g+1} C^{2g+2}, its split into
// two invariant halves, the equivariant map to S^2 V (g = 2), the Kummer
// quartic P_z = sum_S z_S e_S^2 and its flat-section equations.
#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "hitchin/exact.hpp"
#include "hitchin/polynomial.hpp"
#include "hitchin/spin.hpp"

namespace hitchin {

/// Subset S of {1, ..., 2g+2} with |S| = g+1; bit (b-1) marks b.
struct WedgeIndex {
  int genus = 0;
  std::uint64_t members = 0;

  std::vector<int> elements() const;
  bool contains(int b) const { return (members >> (b - 1)) & 1U; }
  WedgeIndex complement() const;
  friend bool operator==(const WedgeIndex& a, const WedgeIndex& b) = default;
};

/// All C(2g+2, g+1) indices in lexicographic order of their sorted elements.
const std::vector<WedgeIndex>& wedge_basis(int g);
std::size_t wedge_position(const WedgeIndex& s);

/// Derivation action of F_ij = 2(E_ij - E_ji) on the e_S basis.
Matrix wedge_generator_action(int g, int i, int j);
/// Sign of sigma_S: k -> i_k, g+1+k -> j_k (S' = {j_1 < ... < j_{g+1}}).
int sigma_sign(const WedgeIndex& s);
/// A(e_S) = sgn(sigma_S) e_{S'}, A(e_{S'}) = sgn(sigma_S)(-1)^{g+1} e_S for 1 in S.
Matrix wedge_hodge_operator(int g);
/// e_S + sign * sgn(sigma_S) i^{g+1} e_{S'} for S containing 1; sign is +1 or -1.
std::vector<std::vector<Gaussian>> half_space_basis(int g, int sign);

/// Equivariant map from the wedge space to S^2 V that kills the other half.
struct Intertwiner {
  int sign = 0;                // which half survives
  Matrix phi;                  // dim S^2 V x dim wedge space
  std::size_t solution_dim = 0;

  /// Phi(e_S) as a quadratic polynomial in the spin coordinates.
  Polynomial image(std::size_t wedge_idx) const;
};

/// Solves the equivariance system for the given half (g = 2). Empty when only
/// zero solves; throws std::logic_error if the solution space is not a line.
std::optional<Intertwiner> solve_intertwiner(int sign, int g = 2);
/// Solution-space dimension of the same system (for both halves, 0 or 1 expected).
std::size_t intertwiner_solution_dim(int sign, int g = 2);

/// `count` configurations of six distinct integers in [-64, 64], drawn from
/// std::mt19937_64(seed) as (draw mod 129) - 64, rejecting repeats.
std::vector<std::vector<Gaussian>> seeded_configurations(std::uint64_t seed, std::size_t count);

/// z_S for S given as an element list.
Gaussian z_product(const std::vector<Gaussian>& z, const WedgeIndex& s);

struct KummerQuartic {
  std::vector<Gaussian> z;
  Polynomial p;  // in S^4 V
};

KummerQuartic kummer_quartic(const std::vector<Gaussian>& z, const Intertwiner& phi);
/// d/dz_i of P_z = sum_{S contains i} z_{S - i} Phi(e_S)^2.
Polynomial kummer_quartic_dz(const std::vector<Gaussian>& z, const Intertwiner& phi, int i);

struct FlatSectionResidual {
  int i = 0;
  Rational residual_plus;   // coefficient +c
  Rational residual_minus;  // coefficient -c
};

struct FlatSectionReport {
  std::vector<Gaussian> z;
  std::vector<FlatSectionResidual> residuals;
  /// +1 or -1 if that global sign makes all residuals vanish, 0 otherwise.
  int winning_sign = 0;
  bool ok() const { return winning_sign != 0; }
};

/// Coefficient of the symbol term for the equations written in S^5 V (x) V*.
/// The wedge-side 1/16 doubles because the Euler field of S^2 V pulls back to
/// half the Euler field of V along v -> v^2.
Rational spin_flat_coefficient();

/// T_i = c sum_{j != i} sigma(Omega_ij).P_z/(z_i - z_j) + (d_{z_i} P_z) E in
/// S^5 V (x) V*, for c = +-coefficient. Throws on coincident coordinates.
FlatSectionReport verify_flat_section(const std::vector<Gaussian>& z, const Intertwiner& phi,
                                      const Rational& coefficient = spin_flat_coefficient());
/// Same check with a caller-supplied quartic (for negative controls).
FlatSectionReport verify_flat_section(const std::vector<Gaussian>& z, const Polynomial& p,
                                      const std::vector<Polynomial>& dp,
                                      const Rational& coefficient = spin_flat_coefficient());

/// Polynomial in one variable t with exact coefficients (lowest degree first).
using TPoly = std::vector<Gaussian>;

struct SymbolicFlatReport {
  std::vector<Gaussian> base;   // z(0)
  std::vector<Gaussian> slope;  // z'(t)
  int sign = 0;                 // coefficient sign tested
  std::vector<bool> vanishes;   // per i, numerator identically zero in t
  bool ok() const;
};

/// The flat-section identity along the affine family z(t) = base + t slope,
/// with denominators cleared so every coefficient in t must vanish.
SymbolicFlatReport verify_flat_section_symbolic(const std::vector<Gaussian>& base,
                                                const std::vector<Gaussian>& slope, const Intertwiner& phi,
                                                int sign, const Rational& coefficient = spin_flat_coefficient());

}  // namespace hitchin
