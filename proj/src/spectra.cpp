#include "hitchin/spectra.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "hitchin/connection.hpp"
#include "hitchin/heisenberg.hpp"
#include "hitchin/polynomial.hpp"

namespace hitchin {

void PhaseMultiset::add(const Rational& q, std::size_t multiplicity) {
  if (multiplicity == 0) return;
  const Rational r = frac_part(q);
  auto it = std::lower_bound(items_.begin(), items_.end(), r,
                             [](const PhaseItem& item, const Rational& x) { return item.phase < x; });
  if (it != items_.end() && it->phase == r) {
    it->multiplicity += multiplicity;
  } else {
    items_.insert(it, PhaseItem{r, multiplicity});
  }
}

std::size_t PhaseMultiset::total() const {
  std::size_t t = 0;
  for (const auto& item : items_) t += item.multiplicity;
  return t;
}

PhaseMultiset PhaseMultiset::shifted(const Rational& s) const {
  PhaseMultiset out;
  for (const auto& item : items_) out.add(item.phase + s, item.multiplicity);
  return out;
}

std::string PhaseMultiset::to_string() const {
  std::ostringstream os;
  os << '{';
  for (std::size_t a = 0; a < items_.size(); ++a) {
    if (a) os << ", ";
    os << items_[a].phase.get_str() << " x" << items_[a].multiplicity;
  }
  os << '}';
  return os.str();
}

Rational fourth_root_phase(const Gaussian& w) {
  if (w == Gaussian(1)) return 0;
  if (w == -Gaussian::i()) return Rational(1, 4);
  if (w == Gaussian(-1)) return Rational(1, 2);
  if (w == Gaussian::i()) return Rational(3, 4);
  throw std::invalid_argument("fourth_root_phase: not a fourth root of unity: " + w.to_string());
}

std::optional<Rational> compare_projective(const PhaseMultiset& a, const PhaseMultiset& b) {
  if (a.items().size() != b.items().size() || a.total() != b.total()) return std::nullopt;
  if (a.items().empty()) return Rational(0);
  const PhaseItem& first = a.items().front();
  for (const auto& candidate : b.items()) {
    if (candidate.multiplicity != first.multiplicity) continue;
    const Rational s = frac_part(first.phase - candidate.phase);
    if (b.shifted(s) == a) return s;
  }
  return std::nullopt;
}

std::size_t dim_sk(int k) { return dim_sym(4, k); }

// ---------------------------------------------------------------------------

PhaseMultiset nonseparating_closed_form(int k) {
  PhaseMultiset out;
  for (int twice_c = 0; twice_c <= k; ++twice_c) {
    const Rational c(twice_c, 2);
    const Rational mult = (Rational(k) - 2 * c + 1) * (2 * c + 1);
    out.add(c * (c + 1) / Rational(k + 2), mult.get_num().get_ui());
  }
  return out;
}

PhaseMultiset nonseparating_constructive(int k) {
  if (k < 1) throw std::invalid_argument("nonseparating_constructive: k >= 1");
  const ResidueOperators ops(2, k);
  const Matrix& m12 = ops.at(1, 2);
  if (!m12.is_diagonal()) throw std::logic_error("M_12 is not diagonal on monomials");
  // Normalized by 1/(1+i); the same element of A(G).
  const Matrix t = symmetric_power(transvection_matrix(pair_point(2, 1, 2)) * Gaussian(1, 1).inverse(), k);
  if (!t.is_diagonal()) throw std::logic_error("lifted transvection at x_12 is not diagonal on monomials");
  const Gaussian lambda = lambda_hitchin(k);
  PhaseMultiset out;
  for (std::size_t r = 0; r < m12.rows(); ++r) {
    const Gaussian mu = m12(r, r) / lambda;
    if (!mu.is_real()) throw std::logic_error("non-real residue eigenvalue");
    // Half twist: gamma^2 is the loop, so the residue enters halved; the
    // transvection acts on flat sections by pullback, i.e. through its inverse.
    out.add(mu.re() / 2 + fourth_root_phase(t(r, r).inverse()));
  }
  return out;
}

SpectrumReport nonseparating_spectrum(int k) {
  SpectrumReport rep{k, nonseparating_closed_form(k), nonseparating_constructive(k), std::nullopt};
  rep.shift = compare_projective(rep.constructive, rep.closed_form);
  return rep;
}

// ---------------------------------------------------------------------------

namespace {

// Variables 0..3 are X00, X01, X10, X11.
Polynomial quadric_q() {
  return multiply(Polynomial::variable(4, 0), Polynomial::variable(4, 2)) -
         multiply(Polynomial::variable(4, 1), Polynomial::variable(4, 3));
}

Polynomial apply_xq(const Polynomial& p) {
  if (p.degree < 2) return Polynomial(4, std::max(p.degree - 2, 0));
  return partial(partial(p, 0), 2) - partial(partial(p, 1), 3);
}

// Matrix of X_Q : S_m -> S_{m-2}.
Matrix xq_matrix(int m) {
  const auto& basis = monomial_basis(4, m);
  Matrix out(dim_sym(4, m - 2), basis.size());
  for (std::size_t c = 0; c < basis.size(); ++c) {
    const Polynomial img = apply_xq(Polynomial::monomial(4, basis[c]));
    for (std::size_t r = 0; r < img.coeffs.size(); ++r) out(r, c) = img.coeffs[r];
  }
  return out;
}

}  // namespace

Matrix q_xq_matrix(int k) {
  const auto& basis = monomial_basis(4, k);
  Matrix out(basis.size(), basis.size());
  if (k < 2) return out;
  const Polynomial q = quadric_q();
  for (std::size_t c = 0; c < basis.size(); ++c) {
    const Polynomial img = multiply(q, apply_xq(Polynomial::monomial(4, basis[c])));
    for (std::size_t r = 0; r < basis.size(); ++r) out(r, c) = img.coeffs[r];
  }
  return out;
}

PrimitiveDecomposition primitive_decomposition(int k) {
  if (k < 0) throw std::invalid_argument("primitive_decomposition: k >= 0");
  PrimitiveDecomposition out{k, {}, false, true};
  const Matrix qxq = q_xq_matrix(k);
  const Polynomial q = quadric_q();
  std::vector<std::vector<Gaussian>> all;
  for (int l = 0; 2 * l <= k; ++l) {
    const int m = k - 2 * l;
    std::vector<std::vector<Gaussian>> primitive;
    if (m < 2) {
      for (std::size_t a = 0; a < dim_sym(4, m); ++a) {
        std::vector<Gaussian> e(dim_sym(4, m));
        e[a] = 1;
        primitive.push_back(std::move(e));
      }
    } else {
      primitive = solve_homogeneous(xq_matrix(m));
    }
    const Polynomial ql = power(q, l);
    PrimitiveSummand summand{l, {}, Gaussian(Rational(l) * (k - l + 1))};
    for (auto& v : primitive) {
      summand.basis.push_back(multiply(ql, Polynomial(4, m, std::move(v))).coeffs);
      const auto image = qxq.apply(summand.basis.back());
      for (std::size_t r = 0; r < image.size(); ++r)
        if (!(image[r] == summand.qxq_eigenvalue * summand.basis.back()[r])) out.eigenvectors = false;
      all.push_back(summand.basis.back());
    }
    out.summands.push_back(std::move(summand));
  }
  out.complete = all.size() == dim_sk(k) && rank_of_vectors(all) == dim_sk(k);
  return out;
}

R123Report verify_r123(int k) {
  const ResidueOperators ops(2, k);
  const Matrix r123 = (ops.at(1, 2) + ops.at(1, 3) + ops.at(2, 3)) * Gaussian(2);
  const Matrix qxq = q_xq_matrix(k);
  const Matrix d = r123 - qxq * Gaussian(16);
  const std::size_t n = d.rows();
  const Gaussian lambda = d(0, 0);
  R123Report rep{k, std::nullopt, (d - Matrix::identity(n) * lambda).max_norm(), false};
  if (rep.residual == 0) rep.lambda_k = lambda;
  rep.trace_consistent = r123.trace() == qxq.trace() * Gaussian(16) + lambda * Gaussian(static_cast<long>(n));
  return rep;
}

PhaseMultiset separating_closed_form(int k) {
  PhaseMultiset out;
  for (int l = 0; 2 * l <= k; ++l) out.add(Rational(l * (l + 1), k + 2), static_cast<std::size_t>((k - 2 * l + 1) * (k - 2 * l + 1)));
  return out;
}

SeparatingReport separating_spectrum(int k) {
  if (k < 1) throw std::invalid_argument("separating_spectrum: k >= 1");
  SeparatingReport rep;
  rep.k = k;
  rep.closed_form = separating_closed_form(k);
  const auto r123 = verify_r123(k);
  if (!r123.lambda_k) throw std::logic_error("separating_spectrum: R_123 - 16 Q X_Q is not scalar");
  const Rational lambda_k = r123.lambda_k->re();
  for (const auto& s : primitive_decomposition(k).summands) {
    const Rational e = s.qxq_eigenvalue.re();
    rep.constructive.add(-e / (k + 2), s.basis.size());
    rep.with_scalar.add(-(16 * e + lambda_k) / Rational(16 * (k + 2)), s.basis.size());
  }
  rep.scalar_shift = compare_projective(rep.with_scalar, rep.closed_form);
  return rep;
}

// ---------------------------------------------------------------------------

TrivalentGraph TrivalentGraph::theta() { return {GraphName::theta, {{0, 1, 2}, {0, 1, 2}}, 3}; }
TrivalentGraph TrivalentGraph::dumbbell() { return {GraphName::dumbbell, {{0, 0, 2}, {1, 1, 2}}, 3}; }

std::optional<TrivalentGraph> TrivalentGraph::parse(const std::string& name) {
  if (name == "theta") return theta();
  if (name == "dumbbell") return dumbbell();
  return std::nullopt;
}

std::string TrivalentGraph::to_string() const { return name == GraphName::theta ? "theta" : "dumbbell"; }

bool admissible_triple(int a, int b, int c, int k) {
  return a + b + c <= 2 * k && std::abs(a - b) <= c && c <= a + b && (a + b + c) % 2 == 0;
}

std::vector<VerlindeLabeling> verlinde_enumerate(const TrivalentGraph& graph, int k) {
  if (k < 0) throw std::invalid_argument("verlinde_enumerate: k >= 0");
  std::vector<VerlindeLabeling> out;
  std::vector<int> f(graph.edges, 0);
  while (true) {
    bool ok = true;
    for (const auto& v : graph.vertices) ok = ok && admissible_triple(f[v[0]], f[v[1]], f[v[2]], k);
    if (ok) out.push_back({k, f});
    int e = graph.edges - 1;
    while (e >= 0 && f[e] == k) f[e--] = 0;
    if (e < 0) break;
    ++f[e];
  }
  return out;
}

PhaseMultiset dehn_twist_phases(const TrivalentGraph& graph, int edge, int k) {
  if (edge < 0 || edge >= graph.edges) throw std::invalid_argument("dehn_twist_phases: no such edge");
  PhaseMultiset out;
  for (const auto& f : verlinde_enumerate(graph, k)) {
    const int a = f.twice_label[edge];
    out.add(Rational(a * (a + 2), 4 * (k + 2)));
  }
  return out;
}

}  // namespace hitchin
