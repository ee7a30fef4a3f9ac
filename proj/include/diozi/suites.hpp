#ifndef DIOZI_SUITES_HPP
#define DIOZI_SUITES_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "diozi/numeric.hpp"

namespace diozi {

struct SuiteParams {
  std::vector<std::int64_t> ds{1, 2, 3, 5, 6, 7, 11, 13};
  long box = 0;             // 0 = suite default
  unsigned n = 2;           // largest tuple length for the integrality sweeps
  std::int64_t t_lo = 0;    // witness search range, inclusive
  std::int64_t t_hi = 3;
  std::size_t budget = 100000;
  std::uint64_t seed = 1;   // random evaluation points
  unsigned threads = 1;
};

struct SuiteReport {
  std::string name;
  std::string params;
  std::uint64_t cases = 0;
  std::uint64_t violations = 0;
  std::vector<std::string> findings;
  std::optional<std::string> counterexample;  // smallest failing input
  double wall_seconds = 0;                    // not part of text(): timing only

  // Deterministic report block; identical invocations produce identical text.
  std::string text() const;
};

// Runs one of the named property sweeps: lemma21, bound22, thm12, lemma22,
// lemma31, lemma32, lemma33, lemma34, pell, pipeline.
SuiteReport run_suite(const std::string& name, const SuiteParams& params);

const std::vector<std::string>& suite_names();

}  // namespace diozi

#endif
