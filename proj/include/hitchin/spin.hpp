// Half-spin representations of so(2g+2) built from the Heisenberg group of
// genus g+1 ("sharp" space V# of dimension 2^{g+1}).
#pragma once

#include <map>
#include <tuple>
#include <utility>
#include <vector>

#include "hitchin/exact.hpp"
#include "hitchin/heisenberg.hpp"

namespace hitchin {

enum class Half { plus, minus };

/// V# with its parity split; plus = span of Y_s with even coordinate sum.
struct SharpSpace {
  int genus = 0;  // g, so V# has dimension 2^{g+1}
  std::size_t dim = 0;
  std::vector<std::size_t> plus_basis;
  std::vector<std::size_t> minus_basis;

  explicit SharpSpace(int g);
  const std::vector<std::size_t>& basis(Half h) const { return h == Half::plus ? plus_basis : minus_basis; }
};

/// Image of e_k (1 <= k <= 2g+2) in End(V#): U#_{x_{k,2g+4}}.
Matrix clifford_generator(int g, int k);

/// Matrix of m on one parity half of V#, transported through
/// Y_{sigma, sigma_{g+1}} -> X_sigma. Throws if m does not preserve the half.
Matrix restrict_half(const Matrix& m, int g, Half half = Half::plus);
inline Matrix restrict_plus(const Matrix& m, int g) { return restrict_half(m, g, Half::plus); }

/// rho_s(F_jk): the restriction of gamma(e_j) gamma(e_k). Throws for j == k.
Matrix spin_generator(int g, int j, int k, Half half = Half::plus);

/// All rho_s(F_jk) for one genus and half, computed once.
class HalfSpin {
 public:
  explicit HalfSpin(int g, Half half = Half::plus);

  int genus() const { return g_; }
  Half half() const { return half_; }
  std::size_t dim() const { return std::size_t{1} << g_; }
  int points() const { return 2 * g_ + 2; }
  /// rho_s(F_jk); generator(k, j) = -generator(j, k).
  Matrix generator(int j, int k) const;
  const Matrix& upper(int j, int k) const { return gens_.at({j, k}); }

 private:
  int g_;
  Half half_;
  std::map<std::pair<int, int>, Matrix> gens_;  // j < k
};

/// [F_ij, F_kl] in the basis F_ab, as a list of (coefficient, a, b) terms.
/// Derived from the matrix bracket of F_ij = 2(E_ij - E_ji).
std::vector<std::tuple<int, int, int>> so_bracket(int i, int j, int k, int l);

struct SpinReport {
  int genus = 0;
  std::size_t clifford_checked = 0;
  std::size_t clifford_failures = 0;  // gamma_j^2 = I, gamma_j gamma_k = -gamma_k gamma_j
  std::size_t square_checked = 0;
  std::size_t square_failures = 0;    // rho_s(F_jk)^2 = -I
  std::size_t bracket_checked = 0;
  std::size_t bracket_failures = 0;   // [rho_s(F_ij), rho_s(F_kl)] against so_bracket
  bool ok() const { return clifford_failures + square_failures + bracket_failures == 0; }
};

SpinReport verify_spin(int g, Half half = Half::plus);

}  // namespace hitchin
