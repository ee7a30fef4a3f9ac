#ifndef DIOZI_NUMERIC_HPP
#define DIOZI_NUMERIC_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <string>
#include <string_view>

namespace diozi {

// All arithmetic in the project is exact: arbitrary-precision integers and
// rationals, no floating point.
using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

inline BigInt rat_num(const BigRat& q) { return boost::multiprecision::numerator(q); }
inline BigInt rat_den(const BigRat& q) { return boost::multiprecision::denominator(q); }

// Floor of sqrt(n); n must be nonnegative.
BigInt isqrt_floor(const BigInt& n);

// Exact square root when n is a perfect square, empty otherwise.
std::optional<BigInt> exact_sqrt(const BigInt& n);

// Residue in [0, m) for m > 0.
BigInt mod_floor(const BigInt& a, const BigInt& m);

// Strict decimal integer parse ('-' allowed); throws on junk.
BigInt parse_bigint(std::string_view text);

std::string to_string(const BigInt& n);
std::string to_string(const BigRat& q);  // "p/q" or "p"

// Order that compares embedded digit runs numerically, so z2 < z10.
bool natural_less(std::string_view a, std::string_view b);

struct NaturalLess {
  bool operator()(std::string_view a, std::string_view b) const { return natural_less(a, b); }
};

}  // namespace diozi

#endif
