#include "diozi/numeric.hpp"

#include <cctype>

#include "diozi/errors.hpp"

namespace diozi {

BigInt isqrt_floor(const BigInt& n) {
  if (n < 0) throw InternalError("isqrt_floor: negative argument");
  return boost::multiprecision::sqrt(n);
}

std::optional<BigInt> exact_sqrt(const BigInt& n) {
  if (n < 0) return std::nullopt;
  BigInt r = boost::multiprecision::sqrt(n);
  if (r * r == n) return r;
  return std::nullopt;
}

BigInt mod_floor(const BigInt& a, const BigInt& m) {
  BigInt r = a % m;
  if (r < 0) r += m;
  return r;
}

BigInt parse_bigint(std::string_view text) {
  std::size_t i = 0;
  while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  std::size_t j = text.size();
  while (j > i && std::isspace(static_cast<unsigned char>(text[j - 1]))) --j;
  if (i == j) throw UsageError("empty integer literal");
  std::string core(text.substr(i, j - i));
  if (core[0] == '+') core.erase(0, 1);  // cpp_int rejects a leading '+'
  std::size_t k = (!core.empty() && core[0] == '-') ? 1 : 0;
  if (k == core.size()) throw UsageError("bad integer literal '" + core + "'");
  for (; k < core.size(); ++k) {
    if (!std::isdigit(static_cast<unsigned char>(core[k]))) {
      throw UsageError("bad integer literal '" + core + "'");
    }
  }
  return BigInt(core);
}

std::string to_string(const BigInt& n) { return n.str(); }

std::string to_string(const BigRat& q) {
  BigInt den = rat_den(q);
  if (den == 1) return rat_num(q).str();
  return rat_num(q).str() + "/" + den.str();
}

bool natural_less(std::string_view a, std::string_view b) {
  std::size_t i = 0, j = 0;
  auto digit = [](char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; };
  while (i < a.size() && j < b.size()) {
    if (digit(a[i]) && digit(b[j])) {
      std::size_t i2 = i, j2 = j;
      while (i2 < a.size() && digit(a[i2])) ++i2;
      while (j2 < b.size() && digit(b[j2])) ++j2;
      std::string_view da = a.substr(i, i2 - i), db = b.substr(j, j2 - j);
      std::string_view ta = da.substr(std::min(da.find_first_not_of('0'), da.size() - 1));
      std::string_view tb = db.substr(std::min(db.find_first_not_of('0'), db.size() - 1));
      if (ta.size() != tb.size()) return ta.size() < tb.size();
      if (ta != tb) return ta < tb;
      if (da != db) return da < db;  // same value, more leading zeros first
      i = i2;
      j = j2;
    } else {
      if (a[i] != b[j]) return a[i] < b[j];
      ++i;
      ++j;
    }
  }
  return a.size() - i < b.size() - j;
}

}  // namespace diozi
