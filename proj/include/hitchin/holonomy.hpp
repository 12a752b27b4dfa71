// Numerical parallel transport of the connection along loops in the
// configuration space of six distinct points, and comparison of the resulting
// monodromy eigenvalues with exact phases.
#pragma once

#include <complex>
#include <optional>
#include <stdexcept>
#include <variant>
#include <vector>

#include <Eigen/Dense>

#include "hitchin/connection.hpp"
#include "hitchin/spectra.hpp"

namespace hitchin {

using cplx = std::complex<double>;
using Config = std::vector<cplx>;
using ApproxMatrix = Eigen::MatrixXcd;

/// z_i runs `turns` times anticlockwise around the (fixed) z_j.
struct CircleSegment {
  int i = 1;
  int j = 2;
  int turns = 1;
};

/// Straight line from the current configuration to `target`.
struct LineSegment {
  Config target;
};

/// z_m -> exp(2 pi i turns s) z_m for m in `indices`, others fixed.
struct DilationSegment {
  std::vector<int> indices{1, 2, 3};
  int turns = 1;
};

using Segment = std::variant<CircleSegment, LineSegment, DilationSegment>;

struct PathSpec {
  Config base;
  std::vector<Segment> segments;
  double clearance = 0;  // required minimum pairwise distance along the path

  /// Configuration and velocity at local time s in [0,1] of segment `seg`,
  /// which starts at `start`.
  static std::pair<Config, Config> evaluate(const Segment& seg, const Config& start, double s);
  /// Configuration at the end of each segment (front() is base).
  std::vector<Config> corners() const;
  bool closed(double tol = 1e-12) const;
  /// Minimum pairwise distance over `samples` points per segment.
  double min_separation(int samples) const;

  /// z_i once around z_j, the other points fixed; base radius is |z_i - z_j|.
  static PathSpec circle(const Config& base, int i, int j, int turns = 1);
  static PathSpec dilation(const Config& base, std::vector<int> indices, int turns);
  /// z_i -> z_i + a, z_j -> z_j + b, z_i -> z_i - a, z_j -> z_j - b.
  static PathSpec rectangle(const Config& base, int i, cplx a, int j, cplx b);
  /// Out along z_i -> z_i + a and straight back.
  static PathSpec degenerate(const Config& base, int i, cplx a);
  /// Concatenation (p first, then q); q must start where p ends.
  static PathSpec concat(const PathSpec& p, const PathSpec& q);
};

struct IntegratorConfig {
  int steps = 256;  // RK4 steps per segment, at least 16
  int clearance_samples = 256;
};

class ClearanceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The connection demoted to doubles: A(z, zdot) = lambda^{-1} sum_{i<j} M_ij (zdot_i - zdot_j)/(z_i - z_j).
class NumericConnection {
 public:
  explicit NumericConnection(const ConnectionForm& form);

  std::size_t dim() const { return dim_; }
  ApproxMatrix evaluate(const Config& z, const Config& zdot) const;
  cplx trace(const Config& z, const Config& zdot) const;

 private:
  std::size_t dim_;
  cplx inv_lambda_;
  std::vector<std::pair<int, int>> pairs_;
  std::vector<ApproxMatrix> ops_;
  std::vector<cplx> traces_;
};

/// Fundamental solution Psi(1) of f' = +A(z(s), z'(s)) f, Psi(0) = I, by RK4.
/// Throws ClearanceError if the path comes within path.clearance of a
/// diagonal, std::runtime_error on non-finite entries.
ApproxMatrix transport(const PathSpec& path, const NumericConnection& conn, const IntegratorConfig& cfg);

/// Action on flat sections by pullback: Psi(1)^{-1}; its eigenvalues are
/// exp(-2 pi i mu) for a loop around a divisor with residue eigenvalues mu.
ApproxMatrix monodromy(const ApproxMatrix& psi);

/// All eigenvalues with multiplicity (Eigen's ComplexEigenSolver).
std::vector<cplx> spectrum_approx(const ApproxMatrix& m);

/// Integral of trace A along the path (composite Simpson, same step count).
cplx trace_integral(const PathSpec& path, const NumericConnection& conn, const IntegratorConfig& cfg);

/// max |Psi(1) - I|.
double check_flatness(const PathSpec& rect, const NumericConnection& conn, const IntegratorConfig& cfg);

struct PhaseMatch {
  double max_error = 0;  // worst distance between matched eigenvalues
  double shift = 0;      // added to the expected phases
};

/// Matches eigenvalues against exp(-2 pi i (q + shift)) for q in `expected`
/// (with multiplicity). With allow_shift, tries each shift that aligns the
/// first eigenvalue with one of the expected phases and keeps the best.
PhaseMatch match_phases(const std::vector<cplx>& eigenvalues, const PhaseMultiset& expected, bool allow_shift);

/// Phases of exp(-2 pi i mu) for the exact residue eigenvalues of lambda^{-1} M
/// (M diagonalizable over Q with rational eigenvalues, e.g. M_12 on monomials).
PhaseMultiset residue_phases(const Matrix& m, const Gaussian& lambda);

/// Exact phases for `turns` dilations of z_1, z_2, z_3 at level k with
/// lambda = lambda_hitchin(k): the residue is lambda^{-1}(M_12 + M_13 + M_23),
/// which acts on Q^l V_{k-2l} by (16 l(k-l+1) + lambda_k) / (2 lambda).
PhaseMultiset dilation_phases(int k, int turns);

/// Default geometry: five well-separated fixed points, z_1 placed at distance
/// a quarter of their minimal separation from z_2.
Config default_circle_base();
/// z_1..z_3 clustered near 0, z_4..z_6 far out.
Config default_dilation_base();

}  // namespace hitchin
