// The residue operators M_ij = sigma(rho_s(Omega_ij)) on S_k, the one-form
// omega_lambda = lambda^{-1} sum_{i != j} M_ij dz_i / (z_i - z_j), and the exact
// structural checks on them.
#pragma once

#include <map>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "hitchin/exact.hpp"
#include "hitchin/heisenberg.hpp"
#include "hitchin/spin.hpp"

namespace hitchin {

struct OmegaSymbol {
  int genus = 0;
  int degree = 0;
  int i = 0;
  int j = 0;
  Matrix matrix;
};

/// sigma(L^2) on S_k for L the lift of rho_s(F_ij). Throws for i == j.
OmegaSymbol omega_symbol(int g, int k, int i, int j);

/// All M_ij (i < j) for one (g, k), built from a single HalfSpin.
class ResidueOperators {
 public:
  ResidueOperators(int g, int k, Half half = Half::plus);
  ResidueOperators(int g, int k, std::map<std::pair<int, int>, Matrix> ops);

  int genus() const { return g_; }
  int degree() const { return k_; }
  int points() const { return 2 * g_ + 2; }
  std::size_t dim() const;
  /// M_ij, symmetric in (i, j).
  const Matrix& at(int i, int j) const;
  Matrix& mutable_at(int i, int j);

 private:
  int g_;
  int k_;
  std::map<std::pair<int, int>, Matrix> ops_;
};

/// Named lambda presets.
Gaussian lambda_kummer();          // -16
Gaussian lambda_hitchin(int k);    // -16(k+2)

struct ConnectionForm {
  ResidueOperators ops;
  Gaussian lambda;
};

/// A_i(z) = lambda^{-1} sum_{j != i} M_ij / (z_i - z_j); i is 1-based.
/// Throws on coincident coordinates or lambda = 0.
Matrix evaluate_form(const ConnectionForm& form, const std::vector<Gaussian>& z, int i);

struct RelationFailure {
  std::string kind;  // "disjoint" or "triangle"
  std::vector<int> indices;
};

struct BraidReport {
  int genus = 0;
  int degree = 0;
  std::size_t checked = 0;
  std::vector<RelationFailure> failures;
  bool ok() const { return failures.empty(); }
};

/// [M_ij, M_kl] = 0 for disjoint pairs, [M_ik, M_ij + M_jk] = 0 for distinct i, j, k.
BraidReport verify_braid_relations(const ResidueOperators& ops);
BraidReport verify_braid_relations(int g, int k);

struct InvarianceReport {
  int genus = 0;
  int degree = 0;
  std::size_t checked = 0;
  std::vector<std::pair<PhasePoint, std::pair<int, int>>> failures;
  /// Sign s with S^k(U_y) L_ij S^k(U_y)^{-1} = s L_ij, for y in the listed order and i<j;
  /// 0 if the conjugate is not +-L_ij.
  std::vector<std::tuple<PhasePoint, int, int, int>> linear_signs;
  bool ok() const { return failures.empty(); }
};

/// S^k(U_y) M_ij S^k(U_y)^{-1} == M_ij for every nonzero y in F_2^{2g} and every pair.
InvarianceReport verify_heisenberg_invariance(int g, int k);

struct EigenLine {
  std::vector<Gaussian> vector;           // in monomial_basis(2^g, 2)
  std::vector<int> character;             // eigenvalue (+-1) of S^2(U_x) for x in the generator list
  std::map<std::pair<int, int>, Gaussian> scalars;  // M_ij eigenvalue
};

struct K2Decomposition {
  std::vector<EigenLine> lines;
  bool all_one_dimensional = false;
  bool scalars_are_even_integers = false;
  bool spans = false;
};

/// Common eigenlines of the Heisenberg action on S_2 (g = 2).
K2Decomposition k2_eigenspace_decomposition();

}  // namespace hitchin
