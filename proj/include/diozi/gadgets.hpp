#ifndef DIOZI_GADGETS_HPP
#define DIOZI_GADGETS_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "diozi/circuit.hpp"
#include "diozi/pell.hpp"
#include "diozi/quadint.hpp"

namespace diozi {

// Circuit for 2 * prod_{k=1..n} (3 z_k + 1) over variables z1..zn.
// This quantity is a unit multiple away from nothing: -1/3 is not an
// algebraic integer, so it never vanishes on O_K.
Circuit build_y(unsigned n);

// Exact value y + sum_k x_k / y^k with y = 2 prod (3 x_k + 1).
QuadRat integrality_value(const QuadField& field, const std::vector<QuadInt>& xs);

// True iff the value above is rational, which happens exactly when every
// x_k is a rational integer.
bool integrality_criterion(const QuadField& field, const std::vector<QuadInt>& xs);

enum class DescentOutcome { hypothesis_fails, holds, violated };

// With y = 2 x0 prod(3 x_k + 1): when z + sum x_k / y^k is rational, z must
// be a rational integer. `violated` is the outcome the sweeps assert away.
DescentOutcome descent_check(const QuadField& field, const QuadInt& x0,
                             const std::vector<QuadInt>& xs, const QuadInt& z);

// p^2 + 2 q^2; over Z[i] it vanishes iff both inputs do. Only valid for
// d = 1 (in Q(sqrt(-2)), -2 is a square and the trick breaks).
Circuit conj_combine(const Circuit& p, const Circuit& q);
NodeId conj_combine(CircuitBuilder& b, NodeId p, NodeId q);

// f(A1,A2,S,T,m) = (T-mS)^4 - 2(A1+A2)S^2(T-mS)^2 + (A1-A2)^2 S^4.
// Vanishes for some m iff A1 and A2 are squares and S divides T.
template <typename T>
T relation_f(const T& a1, const T& a2, const T& s, const T& t, const T& m) {
  T u = t - m * s;
  T u2 = u * u;
  T s2 = s * s;
  T d = a1 - a2;
  return u2 * u2 - BigInt(2) * ((a1 + a2) * (s2 * u2)) + (d * d) * (s2 * s2);
}

NodeId relation_f(CircuitBuilder& b, NodeId a1, NodeId a2, NodeId s, NodeId t, NodeId m);

// Forward witness: m = T/S - alpha1 - alpha2, with f(alpha1^2, alpha2^2,
// S, T, m) = 0 checked. Requires S != 0 and S | T.
QuadInt relation_m_witness(const QuadInt& alpha1, const QuadInt& alpha2, const QuadInt& s,
                           const QuadInt& t);

struct RelationDecode {
  QuadInt root1;     // root1^2 = A1
  QuadInt root2;     // root2^2 = A2
  QuadInt quotient;  // T / S, certified in O_K
};

// Backward direction: from f = 0 (with A1 != A2, S != 0) recover the two
// square roots and the quotient. Non-integrality along the way signals an
// implementation bug, not bad input, and raises InternalError.
RelationDecode relation_decode(const QuadInt& a1, const QuadInt& a2, const QuadInt& s,
                               const QuadInt& t, const QuadInt& m);

// m = (2r+1)(3s+1) for any nonzero integer m.
std::pair<BigInt, BigInt> nonzero_witness(const BigInt& m);

// Circuit templates for the Pell-backed integrality gadget.
//
// scale_power 0, in the witness variables (t, v, x, y):
//   eq_main    = 4 (2 v (2 (2t+1)^2 + 1) - y)^2 - 3 y^2 - 1     (must be 0)
//   square_arg = 3 y^2 (2t+1 - x y)^2 + 1                        (must be a square)
//
// scale_power 2n, denominator-cleared in (W, yn, v, x, y) where W stands for
// the numerator of 2u+1 and yn for y^n:
//   eq_main    = 4 (2 v (2 W^2 + yn^2) - y yn^2)^2 - (3 y^2 + 1) yn^4
//   square_arg = 3 y^2 (W - x y yn)^2 + yn^2
struct IntegralityTemplates {
  Circuit eq_main;
  Circuit square_arg;
};

IntegralityTemplates integrality_templates(unsigned scale_power);

struct IntegralityWitness {
  BigInt v, x, y;
  std::size_t pell_index_vy;  // stage 1: produced v and y
  std::size_t pell_index_x;   // stage 2: produced x
  BigInt square_x;            // Pell X certifying square_arg = square_x^2
};

struct IntegralitySearch {
  SearchStatus status;
  std::optional<IntegralityWitness> witness;
  std::string note;  // modulus/steps detail for the two failure statuses
};

// Two-stage Pell search for integer witnesses of the gadget at integer t.
// Stage 1 searches odd-index pairs with X/2 + Y = 0 (mod 2M), M = 2(2t+1)^2+1,
// and sets v = (X/2+Y)/(2M), y = Y. Stage 2 searches any-index pairs with
// Y' = +-y(2t+1) (mod y^2), trying + before -, and sets x = (y(2t+1) -+ Y')/y^2.
// Each stage's walk is capped at `budget` advances.
IntegralitySearch integrality_witness(const BigInt& t, std::size_t budget);

// Exhaustive consistency check for non-integer Gaussian t: no (v, x, y) in
// the d=1 box of the given bound, v != 0, satisfies both gadget conditions.
// True means refuted within the box; a bounded check, not a proof.
bool integrality_refute_box(const QuadInt& t, long bound);

}  // namespace diozi

#endif
