#ifndef DIOZI_POLY_HPP
#define DIOZI_POLY_HPP

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "diozi/numeric.hpp"

namespace diozi {

using ExpVec = std::vector<std::uint32_t>;

// Graded lexicographic, higher terms first: compare total degree, then the
// exponent vector itself. Terms iterate leading-term-first.
struct GrlexGreater {
  bool operator()(const ExpVec& a, const ExpVec& b) const;
};

// Multivariate polynomial with integer coefficients in canonical sparse form:
// no zero coefficients stored, exponent vectors match the manifest length.
class SparsePoly {
 public:
  SparsePoly() = default;  // zero polynomial over the empty manifest
  explicit SparsePoly(std::vector<std::string> manifest);

  static SparsePoly constant(std::vector<std::string> manifest, const BigInt& c);
  static SparsePoly variable(std::vector<std::string> manifest, const std::string& name);

  const std::vector<std::string>& manifest() const noexcept { return manifest_; }
  const std::map<ExpVec, BigInt, GrlexGreater>& terms() const noexcept { return terms_; }

  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t term_count() const noexcept { return terms_.size(); }
  std::uint64_t total_degree() const;  // 0 for the zero polynomial

  // Adds c * x^e, dropping the term if the coefficient cancels.
  void add_term(const ExpVec& exponents, const BigInt& c);

  // Same polynomial over a manifest that contains every current variable.
  SparsePoly aligned(const std::vector<std::string>& manifest) const;

  BigInt eval(const std::map<std::string, BigInt>& assignment) const;

  std::string emit() const;  // canonical text, grlex order

  SparsePoly pow(std::uint32_t e) const;

  friend SparsePoly operator+(const SparsePoly& a, const SparsePoly& b);
  friend SparsePoly operator-(const SparsePoly& a, const SparsePoly& b);
  friend SparsePoly operator*(const SparsePoly& a, const SparsePoly& b);
  SparsePoly operator-() const;

  friend bool operator==(const SparsePoly& a, const SparsePoly& b) {
    return a.manifest_ == b.manifest_ && a.terms_ == b.terms_;
  }

 private:
  std::vector<std::string> manifest_;
  std::map<ExpVec, BigInt, GrlexGreater> terms_;
};

// Grammar: poly := term (('+'|'-') term)*, term := coeff? ('*'? factor)*,
// factor := var ('^' nat)?, var := [A-Za-z][A-Za-z0-9_]*. '#' starts a
// comment until end of line. The manifest is the set of variables that
// appear, in natural order. parse(emit(p)) == p.
SparsePoly parse_poly(std::string_view text);

}  // namespace diozi

#endif
