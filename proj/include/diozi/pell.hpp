#ifndef DIOZI_PELL_HPP
#define DIOZI_PELL_HPP

#include <cstddef>
#include <functional>
#include <optional>
#include <vector>

#include "diozi/numeric.hpp"

namespace diozi {

// Solutions of X^2 - 3 Y^2 = 1 with X, Y >= 0, indexed from (1, 0).
struct PellPair {
  std::size_t index;
  BigInt x;
  BigInt y;
};

// First `count` pairs: (1,0), (2,1), then X' = 2X + 3Y, Y' = X + 2Y.
std::vector<PellPair> pell_pairs(std::size_t count);

// X >= 0 with X^2 = 3 Y^2 + 1, if 3 Y^2 + 1 is a perfect square.
std::optional<BigInt> pell_is_y(const BigInt& y);

enum class PellParity { odd, even, any };

enum class SearchStatus { found, exhausted_period, budget_exceeded };

struct SearchOutcome {
  SearchStatus status;
  std::size_t index = 0;  // meaningful for `found`
  BigInt x;               // full-size pair at the found index
  BigInt y;
  std::size_t steps = 0;  // recurrence advances consumed
};

// Walks the Pell sequence modulo `modulus`, handing the predicate the residue
// pair (X mod modulus, Y mod modulus) at every index of the allowed parity.
// Stops with `found` at the first hit (big-integer pair reconstructed),
// `exhausted_period` when the residue state returns to the start with nothing
// found (a definitive negative for this modulus), or `budget_exceeded` after
// `budget` advances. Residue iteration never materializes big values.
SearchOutcome period_search(const BigInt& modulus,
                            const std::function<bool(const BigInt&, const BigInt&)>& predicate,
                            PellParity parity, std::size_t budget);

}  // namespace diozi

#endif
