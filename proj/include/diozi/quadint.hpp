#ifndef DIOZI_QUADINT_HPP
#define DIOZI_QUADINT_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "diozi/numeric.hpp"

namespace diozi {

// The imaginary quadratic field Q(sqrt(-d)) for a squarefree d >= 1.
// Only d matters; the class exists so every element knows its ring and so
// construction can reject non-squarefree d once, up front.
class QuadField {
 public:
  explicit QuadField(std::int64_t d);

  std::int64_t d() const noexcept { return d_; }
  // True when d = 3 (mod 4) and the ring of integers contains half-integer
  // coordinates (a + b*sqrt(-d))/2 with a, b both odd.
  bool half_coords() const noexcept { return half_; }

  friend bool operator==(const QuadField& lhs, const QuadField& rhs) noexcept {
    return lhs.d_ == rhs.d_;
  }

 private:
  std::int64_t d_;
  bool half_;
};

// Algebraic integer of Q(sqrt(-d)), stored in doubled coordinates:
// the element is (a2 + b2*sqrt(-d)) / 2. Membership invariant:
//   d != 3 (mod 4):  a2 and b2 both even
//   d  = 3 (mod 4):  a2 = b2 (mod 2)
// One representation covers every d; the constructor enforces it.
class QuadInt {
 public:
  QuadInt(QuadField field, BigInt a2, BigInt b2);  // doubled coordinates

  static QuadInt integer(const QuadField& field, const BigInt& n);
  // a + b*sqrt(-d) with integer coordinates.
  static QuadInt element(const QuadField& field, const BigInt& a, const BigInt& b);
  static QuadInt zero(const QuadField& field);

  const QuadField& field() const noexcept { return field_; }
  const BigInt& a2() const noexcept { return a2_; }
  const BigInt& b2() const noexcept { return b2_; }

  bool is_zero() const noexcept { return a2_ == 0 && b2_ == 0; }
  // In Z, i.e. the surd part vanishes.
  bool is_rational_integer() const noexcept { return b2_ == 0; }
  BigInt to_integer() const;  // requires is_rational_integer()

  BigInt norm() const;             // r^2 + d s^2, a nonnegative integer
  std::pair<BigRat, BigRat> parts() const;  // (r, s) with value r + s*sqrt(-d)

  QuadInt conj() const { return QuadInt(field_, a2_, -b2_); }

  std::string str() const;  // literal grammar, canonical spacing

  friend QuadInt operator+(const QuadInt& x, const QuadInt& y);
  friend QuadInt operator-(const QuadInt& x, const QuadInt& y);
  friend QuadInt operator*(const QuadInt& x, const QuadInt& y);
  friend QuadInt operator*(const BigInt& c, const QuadInt& x);
  friend QuadInt operator*(const QuadInt& x, const BigInt& c) { return c * x; }
  QuadInt operator-() const { return QuadInt(field_, -a2_, -b2_); }

  friend bool operator==(const QuadInt& x, const QuadInt& y) noexcept {
    return x.field_ == y.field_ && x.a2_ == y.a2_ && x.b2_ == y.b2_;
  }

 private:
  QuadField field_;
  BigInt a2_, b2_;
};

// Element of the field Q(sqrt(-d)): value r + s*sqrt(-d) with exact rationals.
// BigRat keeps itself in lowest terms with positive denominator.
class QuadRat {
 public:
  QuadRat(QuadField field, BigRat r, BigRat s);
  explicit QuadRat(const QuadInt& x);
  static QuadRat zero(const QuadField& field);

  const QuadField& field() const noexcept { return field_; }
  const BigRat& r() const noexcept { return r_; }
  const BigRat& s() const noexcept { return s_; }

  bool is_zero() const noexcept { return r_ == 0 && s_ == 0; }
  bool is_rational() const noexcept { return s_ == 0; }

  BigRat norm() const;  // r^2 + d s^2

  std::string str() const;

  friend QuadRat operator+(const QuadRat& x, const QuadRat& y);
  friend QuadRat operator-(const QuadRat& x, const QuadRat& y);
  friend QuadRat operator*(const QuadRat& x, const QuadRat& y);
  friend QuadRat operator/(const QuadRat& x, const QuadRat& y);  // y != 0
  QuadRat operator-() const { return QuadRat(field_, -r_, -s_); }

  friend bool operator==(const QuadRat& x, const QuadRat& y) noexcept {
    return x.field_ == y.field_ && x.r_ == y.r_ && x.s_ == y.s_;
  }

 private:
  QuadField field_;
  BigRat r_, s_;
};

// O_K membership test; returns the integral element when the test passes.
std::optional<QuadInt> to_integral(const QuadRat& x);

// Quotient dividend / divisor when it lies in O_K; divisor must be nonzero.
std::optional<QuadInt> divides(const QuadInt& divisor, const QuadInt& dividend);

// Square root in O_K if one exists. Canonical sign: a2 > 0, or a2 = 0 and
// b2 > 0 (zero maps to zero).
std::optional<QuadInt> square_root(const QuadInt& x);

// All elements of O_K with |a2| <= 2B and |b2| <= 2B, each exactly once, in
// lexicographic (a2, b2) order.
std::vector<QuadInt> box(const QuadField& field, long bound);

// Literal grammar: `int`, `int w`, `int + int w`, `int - int w`, and the
// half-integer form `(int + int w)/2`; `w` stands for sqrt(-d). Whitespace is
// insignificant. Throws UsageError with a character position on bad input.
QuadInt parse_quad(const QuadField& field, std::string_view text);

}  // namespace diozi

#endif
