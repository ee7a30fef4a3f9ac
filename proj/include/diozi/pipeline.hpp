#ifndef DIOZI_PIPELINE_HPP
#define DIOZI_PIPELINE_HPP

#include <cstddef>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "diozi/circuit.hpp"
#include "diozi/errors.hpp"
#include "diozi/poly.hpp"

namespace diozi {

// Which pair feeds the divisibility slots (S_f, T_f) of the relation gadget.
//   repaired: (y^n, t*S)   -- divisibility y^n | t*S; forward-realizable
//   paper:    (t*y^n, S)   -- divisibility t*y^n | S; kept for comparison,
//             typically unsatisfiable for t != 0 because |S| < |y^n|
enum class Encoding { repaired, paper };

std::string encoding_name(Encoding e);
Encoding parse_encoding(std::string_view name);

struct ReductionConfig {
  unsigned n = 10;  // number of z-unknowns
  Encoding encoding = Encoding::repaired;
};

// Compiled form: one circuit F over the unknowns, the input parameter folded
// in as a constant. The named intermediates (y, S, tau, W, A1, A2, E1..E5)
// stay addressable for diagnostics and verification.
struct Reduction {
  Circuit circuit;
  std::vector<std::string> unknowns;  // z1..zn, m, r, s, t, v0, x0, y0, v1, x1, y1
  std::string parameter;              // "z0"
  BigInt parameter_value;
  ReductionConfig config;
  std::map<std::string, NodeId> landmarks;
};

// Builds F from P(z0..zn) with z0 pinned to `a`. The solvability of F = 0
// over the Gaussian integers matches the solvability of P(a, z) = 0 over Z
// with z_n != 0.
Reduction reduce(const SparsePoly& p, const BigInt& a, const ReductionConfig& cfg);

// Raised by lifting under the `paper` encoding when no nonzero t can satisfy
// the divisibility (0 < |S| < |y^n|).
struct NoAdmissibleT : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct WitnessBundle {
  BigInt parameter;                      // value of z0
  std::map<std::string, BigInt> values;  // unknowns by name
  std::map<std::string, BigInt> derived; // y, S, tau, A1, A2
  std::vector<std::string> provenance;   // search indices and moduli
  bool verified = false;

  std::string emit() const;
  static WitnessBundle parse(std::string_view text);
};

// Lifts a Z-witness of P(a, z) = 0 (z_n != 0) to a full assignment of F,
// running the two Pell searches, and verifies F = 0 by exact evaluation.
WitnessBundle lift_witness(const SparsePoly& p, const BigInt& a, const std::vector<BigInt>& zs,
                           const ReductionConfig& cfg, std::size_t budget);

// True iff F evaluates to 0 at the bundle and the recomputed pair (A1, A2)
// separates mod 3 (A1 = 0, A2 = 1), which forces A1 != A2.
bool verify_bundle(const Circuit& f, const WitnessBundle& bundle);
bool verify_bundle(const Reduction& reduction, const WitnessBundle& bundle);

// Equisolvable system of total degree <= 2: fresh variables name monomial
// subproducts, every solution of P = 0 extends uniquely to them.
std::vector<SparsePoly> skolem_flatten(const SparsePoly& p);

struct CombineReport {
  Circuit circuit;
  BigInt bound;  // structural degree bound; doubles per fold level
};

// Left-nested conj_combine fold; over Z[i] the result vanishes iff every
// input does.
CombineReport tree_combine(const std::vector<Circuit>& eqs);

}  // namespace diozi

#endif
