#include "hitchin/polynomial.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>

namespace hitchin {

namespace {

void enumerate(std::size_t var, int remaining, Exponents& cur, std::vector<Exponents>& out) {
  if (var + 1 == cur.size()) {
    cur[var] = remaining;
    out.push_back(cur);
    return;
  }
  for (int e = remaining; e >= 0; --e) {
    cur[var] = e;
    enumerate(var + 1, remaining - e, cur, out);
  }
}

void require_same_space(std::size_t a, std::size_t b, const char* what) {
  if (a != b) throw std::invalid_argument(std::string(what) + ": variable count mismatch");
}

}  // namespace

MonomialBasis::MonomialBasis(std::size_t nvars, int degree) : n_(nvars), k_(degree) {
  if (nvars == 0 || nvars > 12) throw std::invalid_argument("MonomialBasis: unsupported variable count");
  if (degree < 0) return;
  if (degree > 31) throw std::invalid_argument("MonomialBasis: degree too large");
  Exponents cur(nvars, 0);
  enumerate(0, degree, cur, monos_);
  for (std::size_t idx = 0; idx < monos_.size(); ++idx) lookup_.emplace(key(monos_[idx]), idx);
}

std::uint64_t MonomialBasis::key(const Exponents& e) {
  std::uint64_t h = 0;
  for (int x : e) h = (h << 5) | static_cast<std::uint64_t>(x);
  return h;
}

std::size_t MonomialBasis::index(const Exponents& e) const {
  if (e.size() != n_) throw std::out_of_range("MonomialBasis::index: wrong variable count");
  auto it = lookup_.find(key(e));
  if (it == lookup_.end()) throw std::out_of_range("MonomialBasis::index: monomial not in basis");
  return it->second;
}

const MonomialBasis& monomial_basis(std::size_t nvars, int degree) {
  static std::mutex mu;
  static std::map<std::pair<std::size_t, int>, std::unique_ptr<MonomialBasis>> cache;
  const int k = std::max(degree, -1);
  std::lock_guard lock(mu);
  auto& slot = cache[{nvars, k}];
  if (!slot) slot = std::make_unique<MonomialBasis>(nvars, k);
  return *slot;
}

std::size_t dim_sym(std::size_t nvars, int degree) {
  if (degree < 0) return 0;
  // C(n+k-1, k)
  mpz_class c;
  mpz_bin_uiui(c.get_mpz_t(), nvars + static_cast<std::size_t>(degree) - 1, static_cast<unsigned long>(degree));
  return c.get_ui();
}

// ---------------------------------------------------------------------------

Polynomial::Polynomial(std::size_t n, int k) : nvars(n), degree(k), coeffs(monomial_basis(n, k).size()) {}

Polynomial::Polynomial(std::size_t n, int k, std::vector<Gaussian> c) : nvars(n), degree(k), coeffs(std::move(c)) {
  if (coeffs.size() != monomial_basis(n, k).size()) throw std::invalid_argument("Polynomial: coefficient count");
}

Polynomial Polynomial::constant(std::size_t n, const Gaussian& c) { return {n, 0, {c}}; }

Polynomial Polynomial::variable(std::size_t n, std::size_t a) {
  Exponents e(n, 0);
  e.at(a) = 1;
  return monomial(n, e);
}

Polynomial Polynomial::monomial(std::size_t n, const Exponents& e, const Gaussian& c) {
  int k = 0;
  for (int x : e) k += x;
  Polynomial p(n, k);
  p.coeffs[p.basis().index(e)] = c;
  return p;
}

bool Polynomial::is_zero() const {
  return std::all_of(coeffs.begin(), coeffs.end(), [](const Gaussian& z) { return z.is_zero(); });
}

Gaussian Polynomial::coeff(const Exponents& e) const {
  int k = 0;
  for (int x : e) k += x;
  if (k != degree) return {};
  return coeffs[basis().index(e)];
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  require_same_space(nvars, o.nvars, "Polynomial +");
  if (degree != o.degree) throw std::invalid_argument("Polynomial +: degree mismatch");
  for (std::size_t c = 0; c < coeffs.size(); ++c) coeffs[c] += o.coeffs[c];
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  require_same_space(nvars, o.nvars, "Polynomial -");
  if (degree != o.degree) throw std::invalid_argument("Polynomial -: degree mismatch");
  for (std::size_t c = 0; c < coeffs.size(); ++c) coeffs[c] -= o.coeffs[c];
  return *this;
}

Polynomial& Polynomial::operator*=(const Gaussian& s) {
  for (auto& z : coeffs) z *= s;
  return *this;
}

Polynomial multiply(const Polynomial& a, const Polynomial& b) {
  require_same_space(a.nvars, b.nvars, "multiply");
  Polynomial out(a.nvars, a.degree + b.degree);
  const auto& ba = a.basis();
  const auto& bb = b.basis();
  const auto& bo = out.basis();
  Exponents e(a.nvars);
  for (std::size_t x = 0; x < ba.size(); ++x) {
    if (a.coeffs[x].is_zero()) continue;
    for (std::size_t y = 0; y < bb.size(); ++y) {
      if (b.coeffs[y].is_zero()) continue;
      for (std::size_t v = 0; v < a.nvars; ++v) e[v] = ba[x][v] + bb[y][v];
      out.coeffs[bo.index(e)] += a.coeffs[x] * b.coeffs[y];
    }
  }
  return out;
}

Polynomial power(const Polynomial& p, int e) {
  if (e < 0) throw std::invalid_argument("power: negative exponent");
  Polynomial out = Polynomial::constant(p.nvars, 1);
  for (int r = 0; r < e; ++r) out = multiply(out, p);
  return out;
}

Polynomial partial(const Polynomial& p, std::size_t a) {
  if (a >= p.nvars) throw std::invalid_argument("partial: variable out of range");
  if (p.degree == 0) return Polynomial(p.nvars, 0);
  Polynomial out(p.nvars, p.degree - 1);
  const auto& bp = p.basis();
  const auto& bo = out.basis();
  for (std::size_t x = 0; x < bp.size(); ++x) {
    if (p.coeffs[x].is_zero() || bp[x][a] == 0) continue;
    Exponents e = bp[x];
    const int mult = e[a]--;
    out.coeffs[bo.index(e)] += p.coeffs[x] * Gaussian(mult);
  }
  return out;
}

// ---------------------------------------------------------------------------

MixedTensor::MixedTensor(std::size_t n, int m) : nvars(n), degree(m), coeffs(monomial_basis(n, m).size() * n) {}

void MixedTensor::add(const Polynomial& p, std::size_t l, const Gaussian& scale) {
  require_same_space(nvars, p.nvars, "MixedTensor::add");
  if (p.degree != degree) throw std::invalid_argument("MixedTensor::add: degree mismatch");
  for (std::size_t m = 0; m < p.coeffs.size(); ++m)
    if (!p.coeffs[m].is_zero()) at(m, l) += p.coeffs[m] * scale;
}

bool MixedTensor::is_zero() const {
  return std::all_of(coeffs.begin(), coeffs.end(), [](const Gaussian& z) { return z.is_zero(); });
}

Rational MixedTensor::max_norm() const {
  Rational best = 0;
  for (const auto& z : coeffs) {
    Rational a = z.max_abs_component();
    if (a > best) best = a;
  }
  return best;
}

MixedTensor& MixedTensor::operator+=(const MixedTensor& o) {
  require_same_space(nvars, o.nvars, "MixedTensor +");
  if (degree != o.degree) throw std::invalid_argument("MixedTensor +: degree mismatch");
  for (std::size_t c = 0; c < coeffs.size(); ++c) coeffs[c] += o.coeffs[c];
  return *this;
}

MixedTensor& MixedTensor::operator*=(const Gaussian& s) {
  for (auto& z : coeffs) z *= s;
  return *this;
}

Polynomial apply(const MixedTensor& t, const Polynomial& r) {
  require_same_space(t.nvars, r.nvars, "apply");
  if (r.degree == 0) return Polynomial(t.nvars, std::max(t.degree - 1, 0));
  Polynomial out(t.nvars, t.degree + r.degree - 1);
  const auto& bt = t.basis();
  for (std::size_t l = 0; l < t.nvars; ++l) {
    Polynomial dr = partial(r, l);
    if (dr.is_zero()) continue;
    Polynomial coef(t.nvars, t.degree);
    for (std::size_t m = 0; m < bt.size(); ++m) coef.coeffs[m] = t.at(m, l);
    out += multiply(coef, dr);
  }
  return out;
}

bool SecondOrderSymbol::is_symmetric() const {
  const std::size_t n = nvars;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t l = 0; l < n; ++l)
          if (!(at(i, k, j, l) == at(k, i, j, l)) || !(at(i, k, j, l) == at(i, k, l, j))) return false;
  return true;
}

// ---------------------------------------------------------------------------

Matrix lift_linear(const Matrix& a, int k) {
  if (!a.is_square()) throw std::invalid_argument("lift_linear: matrix not square");
  const std::size_t n = a.rows();
  const auto& basis = monomial_basis(n, k);
  Matrix out(basis.size(), basis.size());
  for (std::size_t col = 0; col < basis.size(); ++col) {
    const Exponents& m = basis[col];
    for (std::size_t j = 0; j < n; ++j) {
      if (m[j] == 0) continue;
      Exponents e = m;
      --e[j];
      for (std::size_t i = 0; i < n; ++i) {
        if (a(i, j).is_zero()) continue;
        ++e[i];
        out(basis.index(e), col) += a(i, j) * Gaussian(m[j]);
        --e[i];
      }
    }
  }
  return out;
}

Matrix symmetric_power(const Matrix& a, int k) {
  if (!a.is_square()) throw std::invalid_argument("symmetric_power: matrix not square");
  const std::size_t n = a.rows();
  std::vector<Polynomial> images;
  for (std::size_t j = 0; j < n; ++j) images.emplace_back(n, 1, a.column(j));
  const auto& basis = monomial_basis(n, k);
  Matrix out(basis.size(), basis.size());
  for (std::size_t col = 0; col < basis.size(); ++col) {
    Polynomial img = Polynomial::constant(n, 1);
    for (std::size_t j = 0; j < n; ++j) img = multiply(img, power(images[j], basis[col][j]));
    for (std::size_t row = 0; row < basis.size(); ++row) out(row, col) = img.coeffs[row];
  }
  return out;
}

SecondOrderSymbol symbol_of_square(const Matrix& a) {
  if (!a.is_square()) throw std::invalid_argument("symbol_of_square: matrix not square");
  const std::size_t n = a.rows();
  SecondOrderSymbol s(n);
  // 2 a_ij a_kl X_i X_k d_j d_l, symmetrized over the upper pair.
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (a(i, j).is_zero()) continue;
      for (std::size_t k = 0; k < n; ++k)
        for (std::size_t l = 0; l < n; ++l) {
          if (a(k, l).is_zero()) continue;
          const Gaussian p = a(i, j) * a(k, l);
          s.at(i, k, j, l) += p;
          s.at(k, i, j, l) += p;
        }
    }
  return s;
}

Matrix symbol_matrix(const SecondOrderSymbol& s, int k) {
  const std::size_t n = s.nvars;
  const auto& basis = monomial_basis(n, k);
  Matrix out(basis.size(), basis.size());
  for (std::size_t col = 0; col < basis.size(); ++col) {
    const Exponents& m = basis[col];
    for (std::size_t j = 0; j < n; ++j) {
      if (m[j] == 0) continue;
      for (std::size_t l = 0; l < n; ++l) {
        Exponents e = m;
        const int dj = e[j]--;
        if (e[l] == 0) continue;
        const int dl = e[l]--;
        const Gaussian deriv(static_cast<long>(dj) * dl);
        for (std::size_t i = 0; i < n; ++i)
          for (std::size_t kk = 0; kk < n; ++kk) {
            const Gaussian& c = s.at(i, kk, j, l);
            if (c.is_zero()) continue;
            ++e[i];
            ++e[kk];
            out(basis.index(e), col) += c * deriv;
            --e[i];
            --e[kk];
          }
      }
    }
  }
  return out;
}

MixedTensor contract_symbol(const SecondOrderSymbol& s, const Polynomial& p) {
  require_same_space(s.nvars, p.nvars, "contract_symbol");
  const std::size_t n = s.nvars;
  MixedTensor out(n, p.degree + 1);
  if (p.degree == 0) return out;
  std::vector<Polynomial> dp;
  for (std::size_t j = 0; j < n; ++j) dp.push_back(partial(p, j));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      Exponents quad(n, 0);
      ++quad[i];
      ++quad[k];
      const Polynomial xx = Polynomial::monomial(n, quad);
      for (std::size_t j = 0; j < n; ++j) {
        if (dp[j].is_zero()) continue;
        Polynomial term;
        bool have = false;
        for (std::size_t l = 0; l < n; ++l) {
          const Gaussian& c = s.at(i, k, j, l);
          if (c.is_zero()) continue;
          if (!have) {
            term = multiply(xx, dp[j]);
            have = true;
          }
          out.add(term, l, c);
        }
      }
    }
  return out;
}

MixedTensor euler_product(const Polynomial& q) {
  MixedTensor out(q.nvars, q.degree + 1);
  for (std::size_t s = 0; s < q.nvars; ++s) out.add(multiply(q, Polynomial::variable(q.nvars, s)), s);
  return out;
}

}  // namespace hitchin
