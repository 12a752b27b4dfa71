// Exact local-monodromy spectra for g = 2: phases q stand for eigenvalues
// exp(-2 pi i q) and are kept as rationals mod 1.
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hitchin/exact.hpp"

namespace hitchin {

struct PhaseItem {
  Rational phase;  // in [0, 1)
  std::size_t multiplicity = 0;
  friend bool operator==(const PhaseItem&, const PhaseItem&) = default;
};

class PhaseMultiset {
 public:
  PhaseMultiset() = default;

  /// Adds q mod 1 with the given multiplicity; keeps items sorted and merged.
  void add(const Rational& q, std::size_t multiplicity = 1);
  const std::vector<PhaseItem>& items() const { return items_; }
  std::size_t total() const;
  PhaseMultiset shifted(const Rational& s) const;
  std::string to_string() const;

  friend bool operator==(const PhaseMultiset&, const PhaseMultiset&) = default;

 private:
  std::vector<PhaseItem> items_;
};

/// Phase q of a fourth root of unity w = exp(-2 pi i q).
Rational fourth_root_phase(const Gaussian& w);

/// Some s with a = b + s (mod 1) as multisets, if one exists.
std::optional<Rational> compare_projective(const PhaseMultiset& a, const PhaseMultiset& b);

// --- non-separating vanishing cycle ---------------------------------------

/// {c(c+1)/(k+2) with multiplicity (k-2c+1)(2c+1)}, 2c integral, 0 <= c <= k/2.
PhaseMultiset nonseparating_closed_form(int k);

/// Per monomial of S_k: half the residue eigenvalue of M_12/lambda_hitchin(k)
/// plus the phase of the lifted transvection at x_12, acting by pullback.
PhaseMultiset nonseparating_constructive(int k);

struct SpectrumReport {
  int k = 0;
  PhaseMultiset closed_form;
  PhaseMultiset constructive;
  std::optional<Rational> shift;  // constructive = closed_form + shift
  bool agree() const { return shift.has_value(); }
};

SpectrumReport nonseparating_spectrum(int k);

// --- separating vanishing cycle -------------------------------------------

/// Q = X00 X10 - X01 X11 in S_2 and the operator Q X_Q on S_k.
Matrix q_xq_matrix(int k);

struct PrimitiveSummand {
  int l = 0;
  std::vector<std::vector<Gaussian>> basis;  // Q^l V_{k-2l} inside S_k
  Gaussian qxq_eigenvalue;                   // l(k-l+1) expected
};

struct PrimitiveDecomposition {
  int k = 0;
  std::vector<PrimitiveSummand> summands;
  bool complete = false;         // bases together span S_k
  bool eigenvectors = false;     // Q X_Q acts on each summand by its scalar
};

PrimitiveDecomposition primitive_decomposition(int k);

struct R123Report {
  int k = 0;
  std::optional<Gaussian> lambda_k;  // empty if R_123 - 16 Q X_Q is not scalar
  Rational residual;                 // max-norm of R_123 - 16 Q X_Q - lambda_k I
  bool trace_consistent = false;
  bool ok() const { return lambda_k.has_value() && residual == 0 && trace_consistent; }
};

/// R_123 = 2(M_12 + M_13 + M_23); solves for the scalar lambda_k.
R123Report verify_r123(int k);

/// {l(l+1)/(k+2) with multiplicity (k-2l+1)^2}, l integral, 0 <= l <= k/2.
PhaseMultiset separating_closed_form(int k);

struct SeparatingReport {
  int k = 0;
  PhaseMultiset closed_form;
  /// Phases -e/(k+2) with e the Q X_Q eigenvalue on each primitive summand
  /// (the scalar lambda_k part of the residue removed).
  PhaseMultiset constructive;
  /// Full residue phases -(16 e + lambda_k)/(16(k+2)).
  PhaseMultiset with_scalar;
  std::optional<Rational> scalar_shift;
  bool agree() const { return constructive == closed_form && scalar_shift.has_value(); }
};

SeparatingReport separating_spectrum(int k);

// --- Verlinde labelings ---------------------------------------------------

enum class GraphName { theta, dumbbell };

struct TrivalentGraph {
  GraphName name;
  /// Edge indices (0-based) meeting each vertex; loops appear twice.
  std::vector<std::vector<int>> vertices;
  int edges = 3;

  static TrivalentGraph theta();
  static TrivalentGraph dumbbell();
  static std::optional<TrivalentGraph> parse(const std::string& name);
  std::string to_string() const;
};

/// Edge labels stored doubled: twice_label[e] = 2 f(e) in {0, ..., k}.
struct VerlindeLabeling {
  int k = 0;
  std::vector<int> twice_label;
};

bool admissible_triple(int a, int b, int c, int k);  // doubled labels
std::vector<VerlindeLabeling> verlinde_enumerate(const TrivalentGraph& graph, int k);

/// {f(e)(f(e)+1)/(k+2) over admissible labelings}.
PhaseMultiset dehn_twist_phases(const TrivalentGraph& graph, int edge, int k);

/// dim S_k = C(k+3, 3).
std::size_t dim_sk(int k);

}  // namespace hitchin
