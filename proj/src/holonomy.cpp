#include "hitchin/holonomy.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

namespace hitchin {

namespace {

constexpr double two_pi = 2 * std::numbers::pi;

double min_pairwise(const Config& z) {
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t a = 0; a < z.size(); ++a)
    for (std::size_t b = a + 1; b < z.size(); ++b) best = std::min(best, std::abs(z[a] - z[b]));
  return best;
}

cplx to_cplx(const Gaussian& g) { return g.to_complex(); }

}  // namespace

std::pair<Config, Config> PathSpec::evaluate(const Segment& seg, const Config& start, double s) {
  Config z = start;
  Config v(start.size(), cplx(0));
  std::visit(
      [&](const auto& sg) {
        using T = std::decay_t<decltype(sg)>;
        if constexpr (std::is_same_v<T, CircleSegment>) {
          const cplx center = start.at(sg.j - 1);
          const cplx r0 = start.at(sg.i - 1) - center;
          const double w = two_pi * sg.turns;
          const cplx rot = std::polar(1.0, w * s);
          z[sg.i - 1] = center + r0 * rot;
          v[sg.i - 1] = cplx(0, w) * r0 * rot;
        } else if constexpr (std::is_same_v<T, LineSegment>) {
          for (std::size_t a = 0; a < z.size(); ++a) {
            v[a] = sg.target.at(a) - start[a];
            z[a] = start[a] + s * v[a];
          }
        } else {
          const double w = two_pi * sg.turns;
          const cplx rot = std::polar(1.0, w * s);
          for (int m : sg.indices) {
            z.at(m - 1) = start[m - 1] * rot;
            v[m - 1] = cplx(0, w) * z[m - 1];
          }
        }
      },
      seg);
  return {z, v};
}

std::vector<Config> PathSpec::corners() const {
  std::vector<Config> out{base};
  for (const auto& seg : segments) out.push_back(evaluate(seg, out.back(), 1.0).first);
  return out;
}

bool PathSpec::closed(double tol) const {
  const auto c = corners();
  for (std::size_t a = 0; a < base.size(); ++a)
    if (std::abs(c.back()[a] - base[a]) > tol) return false;
  return true;
}

double PathSpec::min_separation(int samples) const {
  double best = std::numeric_limits<double>::infinity();
  const auto c = corners();
  for (std::size_t s = 0; s < segments.size(); ++s)
    for (int n = 0; n <= samples; ++n)
      best = std::min(best, min_pairwise(evaluate(segments[s], c[s], static_cast<double>(n) / samples).first));
  return best;
}

PathSpec PathSpec::circle(const Config& base, int i, int j, int turns) {
  const double radius = std::abs(base.at(i - 1) - base.at(j - 1));
  return {base, {CircleSegment{i, j, turns}}, radius / 2};
}

PathSpec PathSpec::dilation(const Config& base, std::vector<int> indices, int turns) {
  return {base, {DilationSegment{std::move(indices), turns}}, min_pairwise(base) / 2};
}

PathSpec PathSpec::rectangle(const Config& base, int i, cplx a, int j, cplx b) {
  PathSpec p{base, {}, min_pairwise(base) / 4};
  Config z = base;
  z.at(i - 1) += a;
  p.segments.push_back(LineSegment{z});
  z.at(j - 1) += b;
  p.segments.push_back(LineSegment{z});
  z[i - 1] -= a;
  p.segments.push_back(LineSegment{z});
  z[j - 1] -= b;
  p.segments.push_back(LineSegment{z});
  return p;
}

PathSpec PathSpec::degenerate(const Config& base, int i, cplx a) {
  Config z = base;
  z.at(i - 1) += a;
  return {base, {LineSegment{z}, LineSegment{base}}, min_pairwise(base) / 4};
}

PathSpec PathSpec::concat(const PathSpec& p, const PathSpec& q) {
  const Config end = p.corners().back();
  for (std::size_t a = 0; a < end.size(); ++a)
    if (std::abs(end[a] - q.base.at(a)) > 1e-12) throw std::invalid_argument("PathSpec::concat: paths do not chain");
  PathSpec out = p;
  out.segments.insert(out.segments.end(), q.segments.begin(), q.segments.end());
  out.clearance = std::min(p.clearance, q.clearance);
  return out;
}

// ---------------------------------------------------------------------------

NumericConnection::NumericConnection(const ConnectionForm& form)
    : dim_(form.ops.dim()), inv_lambda_(to_cplx(form.lambda.inverse())) {
  const int n = form.ops.points();
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) {
      const Matrix& m = form.ops.at(i, j);
      ApproxMatrix a(dim_, dim_);
      for (std::size_t r = 0; r < dim_; ++r)
        for (std::size_t c = 0; c < dim_; ++c) a(r, c) = to_cplx(m(r, c));
      pairs_.emplace_back(i, j);
      traces_.push_back(a.trace());
      ops_.push_back(std::move(a));
    }
}

ApproxMatrix NumericConnection::evaluate(const Config& z, const Config& zdot) const {
  ApproxMatrix out = ApproxMatrix::Zero(dim_, dim_);
  for (std::size_t p = 0; p < pairs_.size(); ++p) {
    const auto [i, j] = pairs_[p];
    const cplx w = (zdot[i - 1] - zdot[j - 1]) / (z[i - 1] - z[j - 1]);
    if (w != cplx(0)) out += w * ops_[p];
  }
  return out * inv_lambda_;
}

cplx NumericConnection::trace(const Config& z, const Config& zdot) const {
  cplx out = 0;
  for (std::size_t p = 0; p < pairs_.size(); ++p) {
    const auto [i, j] = pairs_[p];
    out += traces_[p] * (zdot[i - 1] - zdot[j - 1]) / (z[i - 1] - z[j - 1]);
  }
  return out * inv_lambda_;
}

ApproxMatrix transport(const PathSpec& path, const NumericConnection& conn, const IntegratorConfig& cfg) {
  if (cfg.steps < 16) throw std::invalid_argument("transport: at least 16 steps per segment");
  const double sep = path.min_separation(cfg.clearance_samples);
  if (sep < path.clearance)
    throw ClearanceError("transport: path comes within " + std::to_string(sep) + " of a diagonal (clearance " +
                         std::to_string(path.clearance) + ")");
  const auto corners = path.corners();
  const double h = 1.0 / cfg.steps;
  ApproxMatrix psi = ApproxMatrix::Identity(conn.dim(), conn.dim());
  for (std::size_t s = 0; s < path.segments.size(); ++s) {
    auto field = [&](double t) {
      const auto [z, v] = PathSpec::evaluate(path.segments[s], corners[s], t);
      return conn.evaluate(z, v);
    };
    ApproxMatrix a0 = field(0.0);
    for (int n = 0; n < cfg.steps; ++n) {
      const double t = n * h;
      const ApproxMatrix am = field(t + h / 2);
      const ApproxMatrix a1 = field(t + h);
      const ApproxMatrix k1 = a0 * psi;
      const ApproxMatrix k2 = am * (psi + (h / 2) * k1);
      const ApproxMatrix k3 = am * (psi + (h / 2) * k2);
      const ApproxMatrix k4 = a1 * (psi + h * k3);
      psi += (h / 6) * (k1 + 2 * k2 + 2 * k3 + k4);
      a0 = a1;
    }
    if (!psi.allFinite()) throw std::runtime_error("transport: non-finite entries after segment " + std::to_string(s));
  }
  return psi;
}

ApproxMatrix monodromy(const ApproxMatrix& psi) { return psi.inverse(); }

std::vector<cplx> spectrum_approx(const ApproxMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("spectrum_approx: matrix not square");
  Eigen::ComplexEigenSolver<ApproxMatrix> solver(m, false);
  if (solver.info() != Eigen::Success) throw std::runtime_error("spectrum_approx: eigensolver did not converge");
  const auto& ev = solver.eigenvalues();
  return {ev.data(), ev.data() + ev.size()};
}

cplx trace_integral(const PathSpec& path, const NumericConnection& conn, const IntegratorConfig& cfg) {
  const auto corners = path.corners();
  const int n = cfg.steps % 2 ? cfg.steps + 1 : cfg.steps;
  const double h = 1.0 / n;
  cplx total = 0;
  for (std::size_t s = 0; s < path.segments.size(); ++s)
    for (int m = 0; m <= n; ++m) {
      const auto [z, v] = PathSpec::evaluate(path.segments[s], corners[s], m * h);
      const double w = (m == 0 || m == n) ? 1 : (m % 2 ? 4 : 2);
      total += w * h / 3 * conn.trace(z, v);
    }
  return total;
}

double check_flatness(const PathSpec& rect, const NumericConnection& conn, const IntegratorConfig& cfg) {
  const ApproxMatrix psi = transport(rect, conn, cfg);
  return (psi - ApproxMatrix::Identity(psi.rows(), psi.cols())).cwiseAbs().maxCoeff();
}

// ---------------------------------------------------------------------------

namespace {

double greedy_match(const std::vector<cplx>& eig, const std::vector<double>& phases, double shift) {
  std::vector<cplx> targets;
  for (double q : phases) targets.push_back(std::polar(1.0, -two_pi * (q + shift)));
  std::vector<bool> used(targets.size(), false);
  double worst = 0;
  for (const cplx& w : eig) {
    std::size_t best = targets.size();
    double dist = std::numeric_limits<double>::infinity();
    for (std::size_t t = 0; t < targets.size(); ++t)
      if (!used[t] && std::abs(w - targets[t]) < dist) {
        dist = std::abs(w - targets[t]);
        best = t;
      }
    if (best == targets.size()) return std::numeric_limits<double>::infinity();
    used[best] = true;
    worst = std::max(worst, dist);
  }
  return worst;
}

}  // namespace

PhaseMatch match_phases(const std::vector<cplx>& eigenvalues, const PhaseMultiset& expected, bool allow_shift) {
  std::vector<double> phases;
  for (const auto& item : expected.items())
    for (std::size_t m = 0; m < item.multiplicity; ++m) phases.push_back(item.phase.get_d());
  if (phases.size() != eigenvalues.size()) return {std::numeric_limits<double>::infinity(), 0};
  PhaseMatch best{greedy_match(eigenvalues, phases, 0), 0};
  if (!allow_shift || eigenvalues.empty()) return best;
  const double q0 = -std::arg(eigenvalues.front()) / two_pi;
  for (const auto& item : expected.items()) {
    double shift = q0 - item.phase.get_d();
    shift -= std::floor(shift);
    const double err = greedy_match(eigenvalues, phases, shift);
    if (err < best.max_error) best = {err, shift};
  }
  return best;
}

PhaseMultiset residue_phases(const Matrix& m, const Gaussian& lambda) {
  if (!m.is_diagonal()) throw std::invalid_argument("residue_phases: expects a diagonal residue");
  PhaseMultiset out;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    const Gaussian mu = m(r, r) / lambda;
    if (!mu.is_real()) throw std::invalid_argument("residue_phases: non-real residue eigenvalue");
    out.add(mu.re());
  }
  return out;
}

PhaseMultiset dilation_phases(int k, int turns) {
  const auto r123 = verify_r123(k);
  if (!r123.lambda_k) throw std::logic_error("dilation_phases: R_123 - 16 Q X_Q is not scalar");
  const Rational lambda = lambda_hitchin(k).re();
  const Rational lambda_k = r123.lambda_k->re();
  PhaseMultiset out;
  for (const auto& s : primitive_decomposition(k).summands) {
    const Rational mu = (16 * s.qxq_eigenvalue.re() + lambda_k) / (2 * lambda);
    out.add(mu * turns, s.basis.size());
  }
  return out;
}

Config default_circle_base() {
  Config z{cplx(0), cplx(0, 0), cplx(1, 0.5), cplx(-0.8, 1.1), cplx(1.3, -1.2), cplx(-1.1, -0.9)};
  const Config fixed(z.begin() + 1, z.end());
  z[0] = z[1] + min_pairwise(fixed) / 4;
  return z;
}

Config default_dilation_base() {
  return {cplx(0.3, 0), cplx(-0.2, 0.25), cplx(-0.1, -0.3), cplx(3, 0), cplx(-2, 2.5), cplx(-1.5, -3)};
}

}  // namespace hitchin
