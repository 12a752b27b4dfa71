#include "hitchin/heisenberg.hpp"

#include <stdexcept>

namespace hitchin {

namespace {

void require_same_genus(int a, int b, const char* what) {
  if (a != b) throw std::invalid_argument(std::string(what) + ": genus mismatch");
}

std::string bits(BitVec v, int g) {
  std::string s;
  for (int i = 1; i <= g; ++i) s += ((v >> (g - i)) & 1U) ? '1' : '0';
  return s;
}

}  // namespace

PhasePoint operator+(const PhasePoint& a, const PhasePoint& b) {
  require_same_genus(a.genus, b.genus, "PhasePoint +");
  return {a.genus, a.xi ^ b.xi, a.xi_prime ^ b.xi_prime};
}

std::vector<PhasePoint> PhasePoint::all(int genus) {
  std::vector<PhasePoint> out;
  const BitVec n = BitVec{1} << genus;
  for (BitVec a = 0; a < n; ++a)
    for (BitVec b = 0; b < n; ++b) out.push_back({genus, a, b});
  return out;
}

std::string PhasePoint::to_string() const {
  return "((" + bits(xi, genus) + "),(" + bits(xi_prime, genus) + "))";
}

GroupElement identity_element(int genus) { return {FourthRoot(0), {genus, 0, 0}}; }

GroupElement multiply(const GroupElement& a, const GroupElement& b) {
  require_same_genus(a.point.genus, b.point.genus, "multiply");
  const int sign = dot(a.point.xi, b.point.xi_prime);
  return {a.t * b.t * FourthRoot(2 * sign), a.point + b.point};
}

GroupElement inverse(const GroupElement& a) {
  return {a.t.inverse() * FourthRoot(2 * a.point.self_pairing()), a.point};
}

int symplectic(const PhasePoint& x, const PhasePoint& y) {
  require_same_genus(x.genus, y.genus, "symplectic");
  return dot(x.xi, y.xi_prime) ^ dot(y.xi, x.xi_prime);
}

SubsetLabel SubsetLabel::of(int genus, const std::vector<int>& elems) {
  SubsetLabel s{genus, 0};
  for (int b : elems) {
    if (b < 1 || b > 2 * genus + 2) throw std::invalid_argument("SubsetLabel: element out of range");
    s.members ^= std::uint64_t{1} << (b - 1);
  }
  return s;
}

SubsetLabel SubsetLabel::of(int genus, std::initializer_list<int> elems) {
  return of(genus, std::vector<int>(elems));
}

SubsetLabel SubsetLabel::complement() const {
  const std::uint64_t all = (std::uint64_t{1} << (2 * genus + 2)) - 1;
  return {genus, all & ~members};
}

SubsetLabel SubsetLabel::operator+(const SubsetLabel& o) const {
  require_same_genus(genus, o.genus, "SubsetLabel +");
  return {genus, members ^ o.members};
}

PhasePoint subset_to_point(const SubsetLabel& s) {
  if (s.size() % 2 != 0) throw std::invalid_argument("subset_to_point: odd cardinality");
  const int g = s.genus;
  auto count = [&](int lo, int hi) {
    int c = 0;
    for (int b = lo; b <= hi; ++b) c += static_cast<int>((s.members >> (b - 1)) & 1U);
    return c & 1;
  };
  // Pairing against the generators: E(x_T, (0,e_i)) = xi_i and E(x_T, (e_i,0)) = xi'_i.
  PhasePoint p{g, 0, 0};
  for (int i = 1; i <= g; ++i) {
    if (count(2 * i - 1, 2 * i)) p.xi |= BitVec{1} << (g - i);
    if (count(2 * i, 2 * g + 1)) p.xi_prime |= BitVec{1} << (g - i);
  }
  return p;
}

PhasePoint pair_point(int genus, int i, int j) {
  if (i == j) throw std::invalid_argument("pair_point: indices must differ");
  return subset_to_point(SubsetLabel::of(genus, {i, j}));
}

FourthRoot involutive_lift(const PhasePoint& x) { return FourthRoot(x.self_pairing()); }

Matrix schrodinger_matrix(const GroupElement& e) {
  const int g = e.point.genus;
  const std::size_t n = std::size_t{1} << g;
  Matrix m(n, n);
  const Gaussian t = e.t.value();
  for (BitVec sigma = 0; sigma < n; ++sigma) {
    const BitVec target = sigma ^ e.point.xi;
    m(target, sigma) = dot(target, e.point.xi_prime) ? -t : t;
  }
  return m;
}

Matrix involution_matrix(const PhasePoint& x) {
  return schrodinger_matrix({involutive_lift(x), x});
}

Matrix transvection_matrix(const PhasePoint& x) {
  if (x.is_zero()) throw std::invalid_argument("transvection_matrix: x = 0");
  return involution_matrix(x) + Matrix::identity(std::size_t{1} << x.genus) * Gaussian::i();
}

PhasePoint symplectic_transvection(const PhasePoint& x, const PhasePoint& y) {
  return symplectic(y, x) ? y + x : y;
}

}  // namespace hitchin
