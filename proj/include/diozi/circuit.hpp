#ifndef DIOZI_CIRCUIT_HPP
#define DIOZI_CIRCUIT_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "diozi/numeric.hpp"
#include "diozi/poly.hpp"
#include "diozi/quadint.hpp"

namespace diozi {

// Arithmetic straight-line program over named variables and integer
// constants. Nodes reference earlier nodes only; one node is the output.
// This is the compiler's IR and output form: the pipeline's polynomial is
// kept as a circuit because its expansion is astronomically large.
class Circuit {
 public:
  enum class Op : std::uint8_t { constant, variable, add, sub, mul, pow };

  struct Node {
    Op op;
    BigInt value;       // constant
    std::string name;   // variable
    std::uint32_t a = 0;
    std::uint32_t b = 0;
    std::uint32_t exp = 0;  // pow, 1..64
  };

  Circuit(std::vector<Node> nodes, std::uint32_t output);

  const std::vector<Node>& nodes() const noexcept { return nodes_; }
  std::uint32_t output() const noexcept { return output_; }

  // Distinct variable names, natural order.
  std::vector<std::string> variables() const;

  // Line-based SSA text: `n<k> = const <int> | var <name> | add n<i> n<j> |
  // sub n<i> n<j> | mul n<i> n<j> | pow n<i> <nat>`, final line `out n<k>`.
  // Emission is canonical and parse(emit(c)) round-trips byte-identically.
  std::string emit() const;
  static Circuit parse(std::string_view text);

 private:
  std::vector<Node> nodes_;
  std::uint32_t output_;
};

using NodeId = std::uint32_t;

// Append-only builder. Structurally identical nodes are shared, and
// operations on two constants fold; no other simplification happens.
class CircuitBuilder {
 public:
  NodeId constant(const BigInt& v);
  NodeId variable(const std::string& name);
  NodeId add(NodeId a, NodeId b);
  NodeId sub(NodeId a, NodeId b);
  NodeId mul(NodeId a, NodeId b);
  // e >= 1; e == 1 returns the operand, e > 64 is built by squaring.
  NodeId pow(NodeId a, std::uint64_t e);

  // Copies another circuit in, mapping its variables through `binding`
  // (unbound variables stay symbolic). Returns the copied output node.
  NodeId splice(const Circuit& other, const std::map<std::string, NodeId>& binding = {});

  Circuit take(NodeId output) &&;

 private:
  NodeId intern(Circuit::Node node);
  std::vector<Circuit::Node> nodes_;
  std::map<std::string, NodeId> memo_;
};

BigInt eval_int(const Circuit& c, const std::map<std::string, BigInt>& assignment);
QuadInt eval_quad(const Circuit& c, const QuadField& field,
                  const std::map<std::string, QuadInt>& assignment);

// Structural upper bound on total degree: var 1, const 0, add/sub max,
// mul sum, pow product.
BigInt degree_bound(const Circuit& c);

struct ExpandOutcome {
  std::optional<SparsePoly> poly;  // set iff every step stayed within budget
  BigInt bound;                    // structural degree bound, always set
};

// Exact expansion to a SparsePoly over the circuit's variables, abandoning
// with only the degree bound if any intermediate exceeds `term_budget` terms.
ExpandOutcome expand(const Circuit& c, std::size_t term_budget);

// Composition: evaluating the result equals evaluating `c` with each bound
// variable replaced by its circuit's value. Node sharing is preserved;
// unbound variables remain symbolic.
Circuit substitute(const Circuit& c, const std::map<std::string, Circuit>& binding);

// Converts a polynomial to a circuit, optionally pinning variables to
// constants.
Circuit poly_to_circuit(const SparsePoly& p, const std::map<std::string, BigInt>& pinned = {});

}  // namespace diozi

#endif
