#include "diozi/quadint.hpp"

#include <cctype>

#include "diozi/errors.hpp"

namespace diozi {

namespace {

bool even(const BigInt& n) { return n % 2 == 0; }

void require_same_field(const QuadField& fx, const QuadField& fy) {
  if (!(fx == fy)) {
    throw UsageError("field mismatch: d=" + std::to_string(fx.d()) + " vs d=" +
                     std::to_string(fy.d()));
  }
}

}  // namespace

QuadField::QuadField(std::int64_t d) : d_(d), half_(d % 4 == 3) {
  if (d < 1) throw UsageError("d must be a positive integer");
  for (std::int64_t p = 2; p * p <= d; ++p) {
    if (d % (p * p) == 0) {
      throw UsageError("d must be squarefree; " + std::to_string(p) + "^2 divides " +
                       std::to_string(d));
    }
  }
}

QuadInt::QuadInt(QuadField field, BigInt a2, BigInt b2)
    : field_(field), a2_(std::move(a2)), b2_(std::move(b2)) {
  if (field_.half_coords()) {
    if (mod_floor(a2_, 2) != mod_floor(b2_, 2)) {
      throw UsageError("not in O_K for d=" + std::to_string(field_.d()) +
                       ": doubled coordinates must share parity");
    }
  } else {
    if (!even(a2_) || !even(b2_)) {
      throw UsageError("not in O_K for d=" + std::to_string(field_.d()) +
                       ": coordinates must be integers");
    }
  }
}

QuadInt QuadInt::integer(const QuadField& field, const BigInt& n) {
  return QuadInt(field, 2 * n, 0);
}

QuadInt QuadInt::element(const QuadField& field, const BigInt& a, const BigInt& b) {
  return QuadInt(field, 2 * a, 2 * b);
}

QuadInt QuadInt::zero(const QuadField& field) { return QuadInt(field, 0, 0); }

BigInt QuadInt::to_integer() const {
  if (b2_ != 0) throw UsageError("not a rational integer: " + str());
  return a2_ / 2;
}

BigInt QuadInt::norm() const {
  // (a2^2 + d b2^2) / 4 -- exact for any element satisfying the membership
  // invariant (both coordinates even, or both odd with d = 3 mod 4).
  BigInt num = a2_ * a2_ + field_.d() * b2_ * b2_;
  if (num % 4 != 0) throw InternalError("norm: numerator not divisible by 4");
  return num / 4;
}

std::pair<BigRat, BigRat> QuadInt::parts() const {
  return {BigRat(a2_, BigInt(2)), BigRat(b2_, BigInt(2))};
}

QuadInt operator+(const QuadInt& x, const QuadInt& y) {
  require_same_field(x.field_, y.field_);
  return QuadInt(x.field_, x.a2_ + y.a2_, x.b2_ + y.b2_);
}

QuadInt operator-(const QuadInt& x, const QuadInt& y) {
  require_same_field(x.field_, y.field_);
  return QuadInt(x.field_, x.a2_ - y.a2_, x.b2_ - y.b2_);
}

QuadInt operator*(const QuadInt& x, const QuadInt& y) {
  require_same_field(x.field_, y.field_);
  // (a2 + b2 w)(c2 + d2 w) / 4 with w^2 = -d; halves are exact on O_K.
  BigInt re = x.a2_ * y.a2_ - x.field_.d() * x.b2_ * y.b2_;
  BigInt im = x.a2_ * y.b2_ + x.b2_ * y.a2_;
  if (re % 2 != 0 || im % 2 != 0) throw InternalError("QuadInt mul: odd numerator");
  return QuadInt(x.field_, re / 2, im / 2);
}

QuadInt operator*(const BigInt& c, const QuadInt& x) {
  return QuadInt(x.field_, c * x.a2_, c * x.b2_);
}

std::string QuadInt::str() const {
  bool half = a2_ % 2 != 0 || b2_ % 2 != 0;
  if (half) {
    std::string s = "(" + a2_.str();
    s += b2_ < 0 ? " - " : " + ";
    s += (b2_ < 0 ? -b2_ : b2_).str() + "w)/2";
    return s;
  }
  BigInt a = a2_ / 2, b = b2_ / 2;
  if (b == 0) return a.str();
  if (a == 0) return b.str() + "w";
  std::string s = a.str();
  s += b < 0 ? " - " : " + ";
  s += (b < 0 ? -b : b).str() + "w";
  return s;
}

QuadRat::QuadRat(QuadField field, BigRat r, BigRat s)
    : field_(field), r_(std::move(r)), s_(std::move(s)) {}

QuadRat::QuadRat(const QuadInt& x)
    : field_(x.field()), r_(BigRat(x.a2(), BigInt(2))), s_(BigRat(x.b2(), BigInt(2))) {}

QuadRat QuadRat::zero(const QuadField& field) { return QuadRat(field, 0, 0); }

BigRat QuadRat::norm() const { return r_ * r_ + field_.d() * s_ * s_; }

QuadRat operator+(const QuadRat& x, const QuadRat& y) {
  require_same_field(x.field_, y.field_);
  return QuadRat(x.field_, x.r_ + y.r_, x.s_ + y.s_);
}

QuadRat operator-(const QuadRat& x, const QuadRat& y) {
  require_same_field(x.field_, y.field_);
  return QuadRat(x.field_, x.r_ - y.r_, x.s_ - y.s_);
}

QuadRat operator*(const QuadRat& x, const QuadRat& y) {
  require_same_field(x.field_, y.field_);
  return QuadRat(x.field_, x.r_ * y.r_ - x.field_.d() * x.s_ * y.s_,
                 x.r_ * y.s_ + x.s_ * y.r_);
}

QuadRat operator/(const QuadRat& x, const QuadRat& y) {
  require_same_field(x.field_, y.field_);
  if (y.is_zero()) throw UsageError("division by zero");
  BigRat n = y.norm();
  // x * conj(y) / N(y)
  BigRat re = (x.r_ * y.r_ + x.field_.d() * x.s_ * y.s_) / n;
  BigRat im = (x.s_ * y.r_ - x.r_ * y.s_) / n;
  return QuadRat(x.field_, re, im);
}

std::string QuadRat::str() const {
  if (s_ == 0) return to_string(r_);
  std::string tail = to_string(s_ < 0 ? BigRat(-s_) : s_) + "w";
  if (r_ == 0) return (s_ < 0 ? "-" : "") + tail;
  return to_string(r_) + (s_ < 0 ? " - " : " + ") + tail;
}

std::optional<QuadInt> to_integral(const QuadRat& x) {
  BigRat a2 = 2 * x.r(), b2 = 2 * x.s();
  if (rat_den(a2) != 1 || rat_den(b2) != 1) return std::nullopt;
  BigInt ia2 = rat_num(a2), ib2 = rat_num(b2);
  if (x.field().half_coords()) {
    if (mod_floor(ia2, 2) != mod_floor(ib2, 2)) return std::nullopt;
  } else {
    if (ia2 % 2 != 0 || ib2 % 2 != 0) return std::nullopt;
  }
  return QuadInt(x.field(), ia2, ib2);
}

std::optional<QuadInt> divides(const QuadInt& divisor, const QuadInt& dividend) {
  if (divisor.is_zero()) throw UsageError("divides: zero divisor");
  return to_integral(QuadRat(dividend) / QuadRat(divisor));
}

std::optional<QuadInt> square_root(const QuadInt& x) {
  const QuadField& f = x.field();
  if (x.is_zero()) return QuadInt::zero(f);
  auto root_norm = exact_sqrt(x.norm());
  if (!root_norm) return std::nullopt;
  // Any root has norm sqrt(N(x)); enumerate doubled coordinates with
  // a2^2 + d b2^2 = 4 sqrt(N(x)) and test.
  BigInt target = 4 * *root_norm;
  for (BigInt b2 = 0; f.d() * b2 * b2 <= target; ++b2) {
    auto a2 = exact_sqrt(target - f.d() * b2 * b2);
    if (!a2) continue;
    for (int sa = 0; sa < 2; ++sa) {
      for (int sb = 0; sb < 2; ++sb) {
        BigInt ca = sa ? -*a2 : *a2, cb = sb ? -b2 : b2;
        if (f.half_coords()) {
          if (mod_floor(ca, 2) != mod_floor(cb, 2)) continue;
        } else {
          if (ca % 2 != 0 || cb % 2 != 0) continue;
        }
        QuadInt cand(f, ca, cb);
        if (cand * cand == x) {
          // Canonical sign: a2 > 0, or a2 = 0 and b2 > 0.
          if (cand.a2() < 0 || (cand.a2() == 0 && cand.b2() < 0)) return -cand;
          return cand;
        }
        if (cb == 0) break;
      }
      if (*a2 == 0) break;
    }
  }
  return std::nullopt;
}

std::vector<QuadInt> box(const QuadField& field, long bound) {
  if (bound < 0) throw UsageError("box: negative bound");
  std::vector<QuadInt> out;
  BigInt lim = 2 * BigInt(bound);
  for (BigInt a2 = -lim; a2 <= lim; ++a2) {
    for (BigInt b2 = -lim; b2 <= lim; ++b2) {
      if (field.half_coords()) {
        if (mod_floor(a2, 2) != mod_floor(b2, 2)) continue;
      } else {
        if (a2 % 2 != 0 || b2 % 2 != 0) continue;
      }
      out.emplace_back(field, a2, b2);
    }
  }
  return out;
}

namespace {

struct LiteralParser {
  std::string_view text;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }

  [[noreturn]] void fail(const std::string& what) {
    throw UsageError("bad quadratic literal at position " + std::to_string(pos) + ": " + what);
  }

  bool eat(char c) {
    skip_ws();
    if (pos < text.size() && text[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }

  BigInt integer() {
    skip_ws();
    bool neg = false;
    if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) {
      neg = text[pos] == '-';
      ++pos;
    }
    std::size_t digits = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == digits) fail("expected integer");
    BigInt value(std::string(text.substr(digits, pos - digits)));
    return neg ? BigInt(-value) : value;
  }

  bool at_w() {
    skip_ws();
    return pos < text.size() && text[pos] == 'w';
  }

  // int | int w | int +- int w
  std::pair<BigInt, BigInt> sum() {
    BigInt first = integer();
    if (eat('w')) return {0, first};
    skip_ws();
    if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
      int sign = text[pos] == '-' ? -1 : 1;
      ++pos;
      BigInt second = integer();
      if (!eat('w')) fail("expected 'w'");
      return {first, sign * second};
    }
    return {first, 0};
  }
};

}  // namespace

QuadInt parse_quad(const QuadField& field, std::string_view text) {
  LiteralParser p{text};
  p.skip_ws();
  bool halved = false;
  BigInt a, b;
  if (p.eat('(')) {
    std::tie(a, b) = p.sum();
    if (!p.eat(')')) p.fail("expected ')'");
    if (!p.eat('/')) p.fail("expected '/2'");
    BigInt den = p.integer();
    if (den != 2) p.fail("only /2 is allowed");
    halved = true;
  } else {
    std::tie(a, b) = p.sum();
  }
  p.skip_ws();
  if (p.pos != text.size()) p.fail("trailing input");
  if (halved) return QuadInt(field, a, b);
  return QuadInt(field, 2 * a, 2 * b);
}

}  // namespace diozi
