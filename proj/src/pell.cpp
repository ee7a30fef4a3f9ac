#include "diozi/pell.hpp"

#include "diozi/errors.hpp"

namespace diozi {

std::vector<PellPair> pell_pairs(std::size_t count) {
  std::vector<PellPair> out;
  out.reserve(count);
  BigInt x = 1, y = 0;
  for (std::size_t i = 0; i < count; ++i) {
    out.push_back({i, x, y});
    BigInt nx = 2 * x + 3 * y;
    y = x + 2 * y;
    x = nx;
  }
  return out;
}

std::optional<BigInt> pell_is_y(const BigInt& y) {
  return exact_sqrt(3 * y * y + 1);
}

SearchOutcome period_search(const BigInt& modulus,
                            const std::function<bool(const BigInt&, const BigInt&)>& predicate,
                            PellParity parity, std::size_t budget) {
  if (modulus < 2) throw UsageError("period_search: modulus must be >= 2");
  if (budget < 1) throw UsageError("period_search: budget must be >= 1");
  BigInt xr = mod_floor(1, modulus), yr = 0;
  const BigInt x0 = xr, y0 = yr;
  std::size_t index = 0, steps = 0;
  for (;;) {
    bool parity_ok = parity == PellParity::any ||
                     ((parity == PellParity::odd) == (index % 2 == 1));
    if (parity_ok && predicate(xr, yr)) {
      // Reconstruct the full pair by re-running the recurrence.
      BigInt x = 1, y = 0;
      for (std::size_t i = 0; i < index; ++i) {
        BigInt nx = 2 * x + 3 * y;
        y = x + 2 * y;
        x = nx;
      }
      return {SearchStatus::found, index, x, y, steps};
    }
    // The residue walk is purely periodic. A parity filter distinguishes
    // indices mod 2, so the combined state closes only at an even index.
    if (index > 0 && index % 2 == 0 && xr == x0 && yr == y0) {
      return {SearchStatus::exhausted_period, 0, 0, 0, steps};
    }
    if (steps >= budget) {
      return {SearchStatus::budget_exceeded, 0, 0, 0, steps};
    }
    BigInt nx = mod_floor(2 * xr + 3 * yr, modulus);
    yr = mod_floor(xr + 2 * yr, modulus);
    xr = nx;
    ++index;
    ++steps;
  }
}

}  // namespace diozi
