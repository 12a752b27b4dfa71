#include "hitchin/kummer.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <random>
#include <stdexcept>

namespace hitchin {

namespace {

int permutation_sign(const std::vector<int>& seq) {
  int inv = 0;
  for (std::size_t a = 0; a < seq.size(); ++a)
    for (std::size_t b = a + 1; b < seq.size(); ++b)
      if (seq[a] > seq[b]) ++inv;
  return inv % 2 ? -1 : 1;
}

std::uint64_t mask_of(const std::vector<int>& elems) {
  std::uint64_t m = 0;
  for (int b : elems) m |= std::uint64_t{1} << (b - 1);
  return m;
}

void require_distinct(const std::vector<Gaussian>& z) {
  for (std::size_t a = 0; a < z.size(); ++a)
    for (std::size_t b = a + 1; b < z.size(); ++b)
      if (z[a] == z[b]) throw std::invalid_argument("coincident configuration coordinates");
}

TPoly tmul(const TPoly& a, const TPoly& b) {
  if (a.empty() || b.empty()) return {};
  TPoly out(a.size() + b.size() - 1);
  for (std::size_t x = 0; x < a.size(); ++x)
    for (std::size_t y = 0; y < b.size(); ++y) out[x + y] += a[x] * b[y];
  return out;
}

}  // namespace

std::vector<int> WedgeIndex::elements() const {
  std::vector<int> out;
  for (int b = 1; b <= 2 * genus + 2; ++b)
    if (contains(b)) out.push_back(b);
  return out;
}

WedgeIndex WedgeIndex::complement() const {
  const std::uint64_t all = (std::uint64_t{1} << (2 * genus + 2)) - 1;
  return {genus, all & ~members};
}

const std::vector<WedgeIndex>& wedge_basis(int g) {
  static std::mutex mu;
  static std::map<int, std::unique_ptr<std::vector<WedgeIndex>>> cache;
  std::lock_guard lock(mu);
  auto& slot = cache[g];
  if (!slot) {
    slot = std::make_unique<std::vector<WedgeIndex>>();
    const int n = 2 * g + 2;
    const int r = g + 1;
    std::vector<int> comb(r);
    for (int a = 0; a < r; ++a) comb[a] = a + 1;
    while (true) {
      slot->push_back({g, mask_of(comb)});
      int p = r - 1;
      while (p >= 0 && comb[p] == n - r + p + 1) --p;
      if (p < 0) break;
      ++comb[p];
      for (int q = p + 1; q < r; ++q) comb[q] = comb[q - 1] + 1;
    }
  }
  return *slot;
}

std::size_t wedge_position(const WedgeIndex& s) {
  const auto& basis = wedge_basis(s.genus);
  auto it = std::find(basis.begin(), basis.end(), s);
  if (it == basis.end()) throw std::invalid_argument("wedge_position: not a (g+1)-subset");
  return static_cast<std::size_t>(it - basis.begin());
}

Matrix wedge_generator_action(int g, int i, int j) {
  if (i == j) throw std::invalid_argument("wedge_generator_action: i == j");
  const auto& basis = wedge_basis(g);
  Matrix out(basis.size(), basis.size());
  for (std::size_t col = 0; col < basis.size(); ++col) {
    const std::vector<int> elems = basis[col].elements();
    for (std::size_t p = 0; p < elems.size(); ++p) {
      // F_ij e_j = 2 e_i, F_ij e_i = -2 e_j.
      int replacement = 0;
      int coef = 0;
      if (elems[p] == j) {
        replacement = i;
        coef = 2;
      } else if (elems[p] == i) {
        replacement = j;
        coef = -2;
      } else {
        continue;
      }
      std::vector<int> seq = elems;
      seq[p] = replacement;
      if (std::count(seq.begin(), seq.end(), replacement) > 1) continue;
      const int sign = permutation_sign(seq);
      const WedgeIndex target{g, mask_of(seq)};
      out(wedge_position(target), col) += Gaussian(sign * coef);
    }
  }
  return out;
}

int sigma_sign(const WedgeIndex& s) {
  std::vector<int> seq = s.elements();
  const std::vector<int> rest = s.complement().elements();
  seq.insert(seq.end(), rest.begin(), rest.end());
  return permutation_sign(seq);
}

Matrix wedge_hodge_operator(int g) {
  const auto& basis = wedge_basis(g);
  Matrix a(basis.size(), basis.size());
  const int tail = (g + 1) % 2 ? -1 : 1;
  for (const auto& s : basis) {
    if (!s.contains(1)) continue;
    const std::size_t ps = wedge_position(s);
    const std::size_t pc = wedge_position(s.complement());
    const int sg = sigma_sign(s);
    a(pc, ps) = sg;
    a(ps, pc) = sg * tail;
  }
  return a;
}

std::vector<std::vector<Gaussian>> half_space_basis(int g, int sign) {
  if (sign != 1 && sign != -1) throw std::invalid_argument("half_space_basis: sign must be +-1");
  const auto& basis = wedge_basis(g);
  std::vector<std::vector<Gaussian>> out;
  const Gaussian ig = Gaussian::i_pow(g + 1);
  for (const auto& s : basis) {
    if (!s.contains(1)) continue;
    std::vector<Gaussian> v(basis.size());
    v[wedge_position(s)] = 1;
    v[wedge_position(s.complement())] = ig * Gaussian(sign * sigma_sign(s));
    out.push_back(std::move(v));
  }
  return out;
}

// ---------------------------------------------------------------------------

Polynomial Intertwiner::image(std::size_t wedge_idx) const {
  // S^2 V has dim d(d+1)/2; recover d.
  std::size_t d = 1;
  while (d * (d + 1) / 2 < phi.rows()) ++d;
  return Polynomial(d, 2, phi.column(wedge_idx));
}

namespace {

struct IntertwinerSystem {
  std::size_t rows_s2 = 0;
  std::size_t cols_wedge = 0;
  RowReducer reducer{0};
};

IntertwinerSystem build_system(int sign, int g) {
  if (sign != 1 && sign != -1) throw std::invalid_argument("solve_intertwiner: sign must be +-1");
  const HalfSpin spin(g);
  const std::size_t nw = wedge_basis(g).size();
  const std::size_t ns = dim_sym(spin.dim(), 2);
  IntertwinerSystem sys{ns, nw, RowReducer(ns * nw)};
  auto unknown = [&](std::size_t a, std::size_t c) { return a * nw + c; };

  // Phi kills the other half.
  for (const auto& v : half_space_basis(g, -sign)) {
    for (std::size_t a = 0; a < ns; ++a) {
      std::vector<Gaussian> row(ns * nw);
      for (std::size_t c = 0; c < nw; ++c) row[unknown(a, c)] = v[c];
      sys.reducer.add_row(std::move(row));
    }
  }
  // Phi rho_wedge(F_ij) = rho_S2(F_ij) Phi.
  for (int i = 1; i <= spin.points(); ++i)
    for (int j = i + 1; j <= spin.points(); ++j) {
      const Matrix fw = wedge_generator_action(g, i, j);
      const Matrix fs = lift_linear(spin.upper(i, j), 2);
      for (std::size_t a = 0; a < ns; ++a)
        for (std::size_t c = 0; c < nw; ++c) {
          std::vector<Gaussian> row(ns * nw);
          bool any = false;
          for (std::size_t r = 0; r < nw; ++r)
            if (!fw(r, c).is_zero()) {
              row[unknown(a, r)] += fw(r, c);
              any = true;
            }
          for (std::size_t b = 0; b < ns; ++b)
            if (!fs(a, b).is_zero()) {
              row[unknown(b, c)] -= fs(a, b);
              any = true;
            }
          if (any) sys.reducer.add_row(std::move(row));
        }
    }
  return sys;
}

}  // namespace

std::size_t intertwiner_solution_dim(int sign, int g) {
  const auto sys = build_system(sign, g);
  return sys.reducer.cols() - sys.reducer.rank();
}

std::optional<Intertwiner> solve_intertwiner(int sign, int g) {
  const auto sys = build_system(sign, g);
  const auto kernel = sys.reducer.kernel();
  if (kernel.empty()) return std::nullopt;
  if (kernel.size() > 1) throw std::logic_error("solve_intertwiner: solution space has dimension >= 2");
  std::vector<Gaussian> v = kernel.front();
  std::size_t lead = 0;
  while (v[lead].is_zero()) ++lead;
  const Gaussian inv = v[lead].inverse();
  for (auto& x : v) x *= inv;
  return Intertwiner{sign, Matrix(sys.rows_s2, sys.cols_wedge, std::move(v)), 1};
}

// ---------------------------------------------------------------------------

std::vector<std::vector<Gaussian>> seeded_configurations(std::uint64_t seed, std::size_t count) {
  std::mt19937_64 rng(seed);
  std::vector<std::vector<Gaussian>> out;
  while (out.size() < count) {
    std::vector<long> z;
    while (z.size() < 6) {
      const long v = static_cast<long>(rng() % 129) - 64;
      if (std::find(z.begin(), z.end(), v) == z.end()) z.push_back(v);
    }
    out.emplace_back(z.begin(), z.end());
  }
  return out;
}

Gaussian z_product(const std::vector<Gaussian>& z, const WedgeIndex& s) {
  Gaussian p = 1;
  for (int b : s.elements()) p *= z.at(b - 1);
  return p;
}

namespace {

std::vector<Polynomial> squared_images(const Intertwiner& phi) {
  std::vector<Polynomial> out;
  for (std::size_t c = 0; c < phi.phi.cols(); ++c) {
    const Polynomial q = phi.image(c);
    out.push_back(multiply(q, q));
  }
  return out;
}

}  // namespace

KummerQuartic kummer_quartic(const std::vector<Gaussian>& z, const Intertwiner& phi) {
  const auto& basis = wedge_basis(2);
  if (z.size() != 6) throw std::invalid_argument("kummer_quartic: expects 6 coordinates");
  const auto sq = squared_images(phi);
  Polynomial p(sq.front().nvars, 4);
  for (std::size_t c = 0; c < basis.size(); ++c) {
    const Gaussian zs = z_product(z, basis[c]);
    if (!zs.is_zero()) p += sq[c] * zs;
  }
  return {z, p};
}

Polynomial kummer_quartic_dz(const std::vector<Gaussian>& z, const Intertwiner& phi, int i) {
  const auto& basis = wedge_basis(2);
  if (z.size() != 6) throw std::invalid_argument("kummer_quartic_dz: expects 6 coordinates");
  const auto sq = squared_images(phi);
  Polynomial p(sq.front().nvars, 4);
  for (std::size_t c = 0; c < basis.size(); ++c) {
    if (!basis[c].contains(i)) continue;
    WedgeIndex rest = basis[c];
    rest.members &= ~(std::uint64_t{1} << (i - 1));
    Gaussian zs = 1;
    for (int b : rest.elements()) zs *= z[b - 1];
    p += sq[c] * zs;
  }
  return p;
}

namespace {

// Shared core: generator(i, j) supplies the linear operator whose squared symbol
// is contracted against p.
template <class Gen>
FlatSectionReport flat_core(const std::vector<Gaussian>& z, const Polynomial& p, const std::vector<Polynomial>& dp,
                            const Rational& coefficient, int points, Gen generator) {
  require_distinct(z);
  FlatSectionReport rep{z, {}, 0};
  bool plus_ok = true;
  bool minus_ok = true;
  const Gaussian c(coefficient);
  for (int i = 1; i <= points; ++i) {
    MixedTensor sum(p.nvars, p.degree + 1);
    for (int j = 1; j <= points; ++j) {
      if (j == i) continue;
      MixedTensor t = contract_symbol(symbol_of_square(generator(i, j)), p);
      sum += t * (z[i - 1] - z[j - 1]).inverse();
    }
    const MixedTensor euler = euler_product(dp.at(i - 1));
    const MixedTensor plus = sum * c + euler;
    const MixedTensor minus = sum * (-c) + euler;
    rep.residuals.push_back({i, plus.max_norm(), minus.max_norm()});
    plus_ok = plus_ok && plus.is_zero();
    minus_ok = minus_ok && minus.is_zero();
  }
  rep.winning_sign = plus_ok ? 1 : (minus_ok ? -1 : 0);
  return rep;
}

}  // namespace

Rational spin_flat_coefficient() { return Rational(1, 8); }

FlatSectionReport verify_flat_section(const std::vector<Gaussian>& z, const Polynomial& p,
                                      const std::vector<Polynomial>& dp, const Rational& coefficient) {
  const HalfSpin spin(2);
  return flat_core(z, p, dp, coefficient, spin.points(), [&](int i, int j) { return spin.generator(i, j); });
}

FlatSectionReport verify_flat_section(const std::vector<Gaussian>& z, const Intertwiner& phi,
                                      const Rational& coefficient) {
  require_distinct(z);
  std::vector<Polynomial> dp;
  for (int i = 1; i <= 6; ++i) dp.push_back(kummer_quartic_dz(z, phi, i));
  return verify_flat_section(z, kummer_quartic(z, phi).p, dp, coefficient);
}

bool SymbolicFlatReport::ok() const {
  return !vanishes.empty() && std::all_of(vanishes.begin(), vanishes.end(), [](bool b) { return b; });
}

SymbolicFlatReport verify_flat_section_symbolic(const std::vector<Gaussian>& base,
                                                const std::vector<Gaussian>& slope, const Intertwiner& phi,
                                                int sign, const Rational& coefficient) {
  constexpr int n = 6;
  if (base.size() != n || slope.size() != n) throw std::invalid_argument("symbolic family: expects 6 coordinates");
  const auto& basis = wedge_basis(2);
  const auto sq = squared_images(phi);
  const std::size_t nv = sq.front().nvars;
  const HalfSpin spin(2);
  auto zt = [&](int b) { return TPoly{base[b - 1], slope[b - 1]}; };

  // P(t) and d_{z_i}P(t) as polynomials in t with S^4 V coefficients.
  auto expand = [&](int skip) {
    std::vector<Polynomial> coeffs;
    for (std::size_t c = 0; c < basis.size(); ++c) {
      if (skip && !basis[c].contains(skip)) continue;
      TPoly zs{Gaussian(1)};
      for (int b : basis[c].elements())
        if (b != skip) zs = tmul(zs, zt(b));
      while (coeffs.size() < zs.size()) coeffs.emplace_back(nv, 4);
      for (std::size_t d = 0; d < zs.size(); ++d)
        if (!zs[d].is_zero()) coeffs[d] += sq[c] * zs[d];
    }
    return coeffs;
  };
  const std::vector<Polynomial> p_t = expand(0);

  SymbolicFlatReport rep{base, slope, sign, {}};
  const Gaussian coef = Gaussian(coefficient * sign);
  for (int i = 1; i <= n; ++i) {
    std::vector<MixedTensor> numer;
    auto accumulate = [&](const TPoly& scalar, const std::vector<MixedTensor>& vec) {
      for (std::size_t a = 0; a < scalar.size(); ++a) {
        if (scalar[a].is_zero()) continue;
        for (std::size_t b = 0; b < vec.size(); ++b) {
          while (numer.size() <= a + b) numer.emplace_back(nv, 5);
          numer[a + b] += vec[b] * scalar[a];
        }
      }
    };
    auto diff = [&](int a, int b) {
      TPoly d{base[a - 1] - base[b - 1], slope[a - 1] - slope[b - 1]};
      return d;
    };
    for (int j = 1; j <= n; ++j) {
      if (j == i) continue;
      const SecondOrderSymbol sym = symbol_of_square(spin.generator(i, j));
      std::vector<MixedTensor> contracted;
      for (const auto& pd : p_t) contracted.push_back(contract_symbol(sym, pd) * coef);
      TPoly others{Gaussian(1)};
      for (int l = 1; l <= n; ++l)
        if (l != i && l != j) others = tmul(others, diff(i, l));
      accumulate(others, contracted);
    }
    TPoly all{Gaussian(1)};
    for (int l = 1; l <= n; ++l)
      if (l != i) all = tmul(all, diff(i, l));
    std::vector<MixedTensor> euler;
    for (const auto& q : expand(i)) euler.push_back(euler_product(q));
    accumulate(all, euler);
    rep.vanishes.push_back(std::all_of(numer.begin(), numer.end(), [](const MixedTensor& m) { return m.is_zero(); }));
  }
  return rep;
}

}  // namespace hitchin
