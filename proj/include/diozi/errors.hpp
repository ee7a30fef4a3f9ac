#ifndef DIOZI_ERRORS_HPP
#define DIOZI_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace diozi {

// Bad input or violated precondition; maps to CLI exit code 2.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A bounded search ran out of steps without reaching a decision; exit code 3.
struct BudgetExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A search scanned a full residue period without a hit: a definitive negative
// for that modulus. Maps to exit code 1 (refuted).
struct SearchExhausted : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// An invariant the construction guarantees failed to hold; always a bug.
// Exit code 4.
struct InternalError : std::logic_error {
  using std::logic_error::logic_error;
};

}  // namespace diozi

#endif
