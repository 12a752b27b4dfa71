#include "hitchin/spin.hpp"

#include <stdexcept>
#include <string>

namespace hitchin {

SharpSpace::SharpSpace(int g) : genus(g), dim(std::size_t{1} << (g + 1)) {
  for (std::size_t s = 0; s < dim; ++s) (parity(static_cast<BitVec>(s)) ? minus_basis : plus_basis).push_back(s);
}

Matrix clifford_generator(int g, int k) {
  if (k < 1 || k > 2 * g + 2) throw std::invalid_argument("clifford_generator: index out of range");
  return involution_matrix(pair_point(g + 1, k, 2 * g + 4));
}

Matrix restrict_half(const Matrix& m, int g, Half half) {
  const SharpSpace sharp(g);
  if (m.rows() != sharp.dim || m.cols() != sharp.dim)
    throw std::invalid_argument("restrict_half: matrix is not on the sharp space");
  const auto& basis = sharp.basis(half);
  const BitVec want = half == Half::plus ? 0 : 1;
  const std::size_t n = basis.size();
  Matrix out(n, n);
  for (std::size_t col : basis) {
    for (std::size_t row = 0; row < sharp.dim; ++row) {
      if (m(row, col).is_zero()) continue;
      if (static_cast<BitVec>(parity(static_cast<BitVec>(row))) != want)
        throw std::invalid_argument("restrict_half: column " + std::to_string(col) +
                                    " leaves the invariant half");
      // Y_{sigma, sigma_{g+1}} -> X_sigma drops the last coordinate.
      out(row >> 1, col >> 1) = m(row, col);
    }
  }
  return out;
}

Matrix spin_generator(int g, int j, int k, Half half) {
  if (j == k) throw std::invalid_argument("spin_generator: j == k");
  return restrict_half(clifford_generator(g, j) * clifford_generator(g, k), g, half);
}

HalfSpin::HalfSpin(int g, Half half) : g_(g), half_(half) {
  for (int j = 1; j <= 2 * g + 2; ++j)
    for (int k = j + 1; k <= 2 * g + 2; ++k) gens_.emplace(std::pair{j, k}, spin_generator(g, j, k, half));
}

Matrix HalfSpin::generator(int j, int k) const {
  if (j == k) throw std::invalid_argument("HalfSpin::generator: j == k");
  if (j < k) return gens_.at({j, k});
  return gens_.at({k, j}) * Gaussian(-1);
}

std::vector<std::tuple<int, int, int>> so_bracket(int i, int j, int k, int l) {
  // [F_ij, F_kl] = 2(d_jk F_il + d_il F_jk + d_jl F_ki + d_ik F_lj)
  std::vector<std::tuple<int, int, int>> out;
  auto add = [&](bool cond, int a, int b) {
    if (cond && a != b) out.emplace_back(2, a, b);
  };
  add(j == k, i, l);
  add(i == l, j, k);
  add(j == l, k, i);
  add(i == k, l, j);
  return out;
}

SpinReport verify_spin(int g, Half half) {
  SpinReport rep;
  rep.genus = g;
  const int n = 2 * g + 2;
  const std::size_t sharp = std::size_t{1} << (g + 1);
  std::vector<Matrix> gamma;
  for (int j = 1; j <= n; ++j) gamma.push_back(clifford_generator(g, j));
  for (int j = 0; j < n; ++j)
    for (int k = j; k < n; ++k) {
      ++rep.clifford_checked;
      const Matrix anti = gamma[j] * gamma[k] + gamma[k] * gamma[j];
      const Matrix want = j == k ? Matrix::identity(sharp) * Gaussian(2) : Matrix(sharp, sharp);
      if (!(anti == want)) ++rep.clifford_failures;
    }

  const HalfSpin spin(g, half);
  const Matrix minus_id = Matrix::identity(spin.dim()) * Gaussian(-1);
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) {
      ++rep.square_checked;
      if (!(spin.upper(i, j) * spin.upper(i, j) == minus_id)) ++rep.square_failures;
      for (int k = 1; k <= n; ++k)
        for (int l = k + 1; l <= n; ++l) {
          ++rep.bracket_checked;
          Matrix want(spin.dim(), spin.dim());
          for (const auto& [coef, a, b] : so_bracket(i, j, k, l)) want += spin.generator(a, b) * Gaussian(coef);
          if (!(commutator(spin.upper(i, j), spin.upper(k, l)) == want)) ++rep.bracket_failures;
        }
    }
  return rep;
}

}  // namespace hitchin
