// The finite Heisenberg group G_g: points of F_2^g x F_2^g, its group law,
// the symplectic form, the subset notation for points and the Schrodinger
// representation on functions F_2^g -> C.
//
// Bit layout: coordinate i (1-based) of a vector in F_2^g is bit (g - i), so
// the integer value of sigma is its lexicographic index in the basis X_sigma.
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hitchin/exact.hpp"

namespace hitchin {

using BitVec = std::uint32_t;

inline int parity(BitVec v) { return __builtin_popcount(v) & 1; }
/// sum_i a_i b_i mod 2.
inline int dot(BitVec a, BitVec b) { return parity(a & b); }

struct PhasePoint {
  int genus = 0;
  BitVec xi = 0;
  BitVec xi_prime = 0;

  bool is_zero() const { return xi == 0 && xi_prime == 0; }
  /// xi . xi'
  int self_pairing() const { return dot(xi, xi_prime); }

  friend PhasePoint operator+(const PhasePoint& a, const PhasePoint& b);
  friend bool operator==(const PhasePoint& a, const PhasePoint& b) = default;

  /// All 4^g points, ordered by (xi, xi_prime).
  static std::vector<PhasePoint> all(int genus);
  std::string to_string() const;
};

/// A fourth root of unity i^exponent.
class FourthRoot {
 public:
  FourthRoot() = default;
  explicit FourthRoot(int exponent) : e_(((exponent % 4) + 4) % 4) {}

  int exponent() const { return e_; }
  Gaussian value() const { return Gaussian::i_pow(e_); }
  FourthRoot inverse() const { return FourthRoot(-e_); }

  friend FourthRoot operator*(FourthRoot a, FourthRoot b) { return FourthRoot(a.e_ + b.e_); }
  friend bool operator==(FourthRoot a, FourthRoot b) = default;

 private:
  int e_ = 0;
};

struct GroupElement {
  FourthRoot t;
  PhasePoint point;

  friend bool operator==(const GroupElement& a, const GroupElement& b) = default;
};

GroupElement identity_element(int genus);
/// (t,x)(s,y) = (ts(-1)^{xi eta'}, x+y). Throws on genus mismatch.
GroupElement multiply(const GroupElement& a, const GroupElement& b);
GroupElement inverse(const GroupElement& a);

/// E(x,y) = xi eta' + eta xi' mod 2.
int symplectic(const PhasePoint& x, const PhasePoint& y);

/// Even subset of B = {1, ..., 2g+2}; bit (b-1) marks membership of b.
struct SubsetLabel {
  int genus = 0;
  std::uint64_t members = 0;

  static SubsetLabel of(int genus, std::initializer_list<int> elems);
  static SubsetLabel of(int genus, const std::vector<int>& elems);
  SubsetLabel complement() const;
  /// Symmetric difference.
  SubsetLabel operator+(const SubsetLabel& o) const;
  int size() const { return __builtin_popcountll(members); }
};

/// The fixed isomorphism F_B -> F_2^g x F_2^g with
/// x_{2i-1,2i} = (0, e_i) and x_{2i,...,2g+1} = (e_i, 0).
/// Throws std::invalid_argument for odd subsets.
PhasePoint subset_to_point(const SubsetLabel& s);
/// x_{ij} for distinct i, j in {1, ..., 2g+2}.
PhasePoint pair_point(int genus, int i, int j);

/// Order-two lift: 1 when xi.xi' = 0, i otherwise.
FourthRoot involutive_lift(const PhasePoint& x);

/// U(t,x) on the delta basis: U(t,x) X_sigma = t(-1)^{(sigma+xi)xi'} X_{sigma+xi}.
Matrix schrodinger_matrix(const GroupElement& e);
/// U_x = U(involutive_lift(x), x); U_0 = I.
Matrix involution_matrix(const PhasePoint& x);
/// U_x + iI. Throws for x = 0.
Matrix transvection_matrix(const PhasePoint& x);
/// y + E(y,x) x.
PhasePoint symplectic_transvection(const PhasePoint& x, const PhasePoint& y);

}  // namespace hitchin
