#include "hitchin/connection.hpp"

#include <stdexcept>

#include "hitchin/polynomial.hpp"

namespace hitchin {

namespace {

std::pair<int, int> ordered(int i, int j) { return i < j ? std::pair{i, j} : std::pair{j, i}; }

}  // namespace

OmegaSymbol omega_symbol(int g, int k, int i, int j) {
  if (i == j) throw std::invalid_argument("omega_symbol: i == j");
  const Matrix rho = spin_generator(g, i, j);
  return {g, k, i, j, symbol_matrix(symbol_of_square(rho), k)};
}

ResidueOperators::ResidueOperators(int g, int k, Half half) : g_(g), k_(k) {
  const HalfSpin spin(g, half);
  for (int i = 1; i <= points(); ++i)
    for (int j = i + 1; j <= points(); ++j)
      ops_.emplace(std::pair{i, j}, symbol_matrix(symbol_of_square(spin.upper(i, j)), k));
}

ResidueOperators::ResidueOperators(int g, int k, std::map<std::pair<int, int>, Matrix> ops)
    : g_(g), k_(k), ops_(std::move(ops)) {
  for (int i = 1; i <= points(); ++i)
    for (int j = i + 1; j <= points(); ++j)
      if (!ops_.count({i, j})) throw std::invalid_argument("ResidueOperators: missing pair");
}

std::size_t ResidueOperators::dim() const { return ops_.begin()->second.rows(); }

const Matrix& ResidueOperators::at(int i, int j) const {
  if (i == j) throw std::invalid_argument("ResidueOperators::at: i == j");
  return ops_.at(ordered(i, j));
}

Matrix& ResidueOperators::mutable_at(int i, int j) {
  if (i == j) throw std::invalid_argument("ResidueOperators::mutable_at: i == j");
  return ops_.at(ordered(i, j));
}

Gaussian lambda_kummer() { return -16; }
Gaussian lambda_hitchin(int k) { return Gaussian(-16L * (k + 2)); }

Matrix evaluate_form(const ConnectionForm& form, const std::vector<Gaussian>& z, int i) {
  const int n = form.ops.points();
  if (static_cast<int>(z.size()) != n) throw std::invalid_argument("evaluate_form: wrong number of coordinates");
  if (i < 1 || i > n) throw std::invalid_argument("evaluate_form: direction out of range");
  if (form.lambda.is_zero()) throw std::invalid_argument("evaluate_form: lambda = 0");
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      if (z[a] == z[b]) throw std::invalid_argument("evaluate_form: coincident coordinates");
  Matrix out(form.ops.dim(), form.ops.dim());
  for (int j = 1; j <= n; ++j) {
    if (j == i) continue;
    out += form.ops.at(i, j) * (z[i - 1] - z[j - 1]).inverse();
  }
  return out * form.lambda.inverse();
}

BraidReport verify_braid_relations(const ResidueOperators& ops) {
  BraidReport rep{ops.genus(), ops.degree(), 0, {}};
  const int n = ops.points();
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      for (int k = i; k <= n; ++k)
        for (int l = k + 1; l <= n; ++l) {
          if (std::pair{k, l} <= std::pair{i, j}) continue;
          if (k == i || k == j || l == i || l == j) continue;
          ++rep.checked;
          if (!commutator(ops.at(i, j), ops.at(k, l)).is_zero()) rep.failures.push_back({"disjoint", {i, j, k, l}});
        }
  for (int i = 1; i <= n; ++i)
    for (int k = i + 1; k <= n; ++k)
      for (int j = 1; j <= n; ++j) {
        if (j == i || j == k) continue;
        ++rep.checked;
        if (!commutator(ops.at(i, k), ops.at(i, j) + ops.at(j, k)).is_zero())
          rep.failures.push_back({"triangle", {i, j, k}});
      }
  return rep;
}

BraidReport verify_braid_relations(int g, int k) { return verify_braid_relations(ResidueOperators(g, k)); }

InvarianceReport verify_heisenberg_invariance(int g, int k) {
  InvarianceReport rep{g, k, 0, {}, {}};
  const ResidueOperators ops(g, k);
  const HalfSpin spin(g);
  std::map<std::pair<int, int>, Matrix> lifts;
  for (int i = 1; i <= ops.points(); ++i)
    for (int j = i + 1; j <= ops.points(); ++j) lifts.emplace(std::pair{i, j}, lift_linear(spin.upper(i, j), k));

  for (const PhasePoint& y : PhasePoint::all(g)) {
    if (y.is_zero()) continue;
    const Matrix s = symmetric_power(involution_matrix(y), k);
    const auto s_inv = inverse(s);
    if (!s_inv) throw std::logic_error("verify_heisenberg_invariance: S^k(U_y) singular");
    for (const auto& [pair, lift] : lifts) {
      ++rep.checked;
      const Matrix& m = ops.at(pair.first, pair.second);
      if (!(s * m * *s_inv == m)) rep.failures.push_back({y, pair});
      const Matrix conj = s * lift * *s_inv;
      int sign = 0;
      if (conj == lift) {
        sign = 1;
      } else if (conj == lift * Gaussian(-1)) {
        sign = -1;
      }
      rep.linear_signs.emplace_back(y, pair.first, pair.second, sign);
    }
  }
  return rep;
}

K2Decomposition k2_eigenspace_decomposition() {
  constexpr int g = 2;
  const ResidueOperators ops(g, 2);
  const std::size_t dim = ops.dim();
  std::vector<PhasePoint> gens{{g, 0b10, 0}, {g, 0b01, 0}, {g, 0, 0b10}, {g, 0, 0b01}};
  std::vector<Matrix> actions;
  for (const auto& x : gens) actions.push_back(symmetric_power(involution_matrix(x), 2));

  K2Decomposition out;
  out.all_one_dimensional = true;
  for (int pattern = 0; pattern < 16; ++pattern) {
    RowReducer rr(dim);
    std::vector<int> character;
    for (std::size_t r = 0; r < gens.size(); ++r) {
      const int eps = (pattern >> (3 - r)) & 1 ? -1 : 1;
      character.push_back(eps);
      const Matrix shifted = actions[r] - Matrix::identity(dim) * Gaussian(eps);
      for (std::size_t row = 0; row < dim; ++row) {
        std::vector<Gaussian> v(dim);
        for (std::size_t c = 0; c < dim; ++c) v[c] = shifted(row, c);
        rr.add_row(std::move(v));
      }
    }
    auto kernel = rr.kernel();
    if (kernel.empty()) continue;
    if (kernel.size() != 1) {
      out.all_one_dimensional = false;
      continue;
    }
    EigenLine line{kernel.front(), character, {}};
    out.lines.push_back(std::move(line));
  }

  out.scalars_are_even_integers = true;
  for (auto& line : out.lines) {
    std::size_t lead = 0;
    while (line.vector[lead].is_zero()) ++lead;
    for (int i = 1; i <= ops.points(); ++i)
      for (int j = i + 1; j <= ops.points(); ++j) {
        const auto image = ops.at(i, j).apply(line.vector);
        const Gaussian c = image[lead] / line.vector[lead];
        for (std::size_t r = 0; r < dim; ++r)
          if (!(image[r] == c * line.vector[r])) throw std::logic_error("k2 decomposition: M_ij not scalar on a line");
        line.scalars.emplace(std::pair{i, j}, c);
        const bool even_int = c.is_real() && c.re().get_den() == 1 && mpz_even_p(c.re().get_num_mpz_t());
        if (!even_int) out.scalars_are_even_integers = false;
      }
  }
  std::vector<std::vector<Gaussian>> vs;
  for (const auto& line : out.lines) vs.push_back(line.vector);
  out.spans = rank_of_vectors(vs) == dim;
  return out;
}

}  // namespace hitchin
