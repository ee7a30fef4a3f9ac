#include "diozi/gadgets.hpp"

#include "diozi/errors.hpp"

namespace diozi {

Circuit build_y(unsigned n) {
  if (n < 1) throw UsageError("build_y: n must be >= 1");
  CircuitBuilder b;
  NodeId three = b.constant(3);
  NodeId one = b.constant(1);
  std::optional<NodeId> prod;
  for (unsigned k = 1; k <= n; ++k) {
    NodeId zk = b.variable("z" + std::to_string(k));
    NodeId factor = b.add(b.mul(three, zk), one);
    prod = prod ? b.mul(*prod, factor) : factor;
  }
  NodeId out = b.mul(b.constant(2), *prod);
  return std::move(b).take(out);
}

namespace {

QuadInt product_y(const QuadField& field, const std::vector<QuadInt>& xs) {
  QuadInt y = QuadInt::integer(field, 2);
  for (const QuadInt& x : xs) {
    y = y * (BigInt(3) * x + QuadInt::integer(field, 1));
  }
  return y;
}

}  // namespace

QuadRat integrality_value(const QuadField& field, const std::vector<QuadInt>& xs) {
  if (xs.empty()) throw UsageError("at least one element required");
  QuadRat y{product_y(field, xs)};
  QuadRat value = y;
  QuadRat ypow{QuadInt::integer(field, 1)};
  for (const QuadInt& x : xs) {
    ypow = ypow * y;  // y is never zero on O_K
    value = value + QuadRat(x) / ypow;
  }
  return value;
}

bool integrality_criterion(const QuadField& field, const std::vector<QuadInt>& xs) {
  return integrality_value(field, xs).is_rational();
}

DescentOutcome descent_check(const QuadField& field, const QuadInt& x0,
                             const std::vector<QuadInt>& xs, const QuadInt& z) {
  if (x0.is_zero()) throw UsageError("descent_check: x0 must be nonzero");
  QuadInt y = x0 * product_y(field, xs);
  QuadRat sum = QuadRat::zero(field);
  QuadRat ypow{QuadInt::integer(field, 1)};
  QuadRat yq{y};
  for (const QuadInt& x : xs) {
    ypow = ypow * yq;
    sum = sum + QuadRat(x) / ypow;
  }
  if (!(QuadRat(z) + sum).is_rational()) return DescentOutcome::hypothesis_fails;
  return z.is_rational_integer() ? DescentOutcome::holds : DescentOutcome::violated;
}

NodeId conj_combine(CircuitBuilder& b, NodeId p, NodeId q) {
  return b.add(b.pow(p, 2), b.mul(b.constant(2), b.pow(q, 2)));
}

Circuit conj_combine(const Circuit& p, const Circuit& q) {
  CircuitBuilder b;
  NodeId np = b.splice(p);
  NodeId nq = b.splice(q);
  NodeId out = conj_combine(b, np, nq);
  return std::move(b).take(out);
}

NodeId relation_f(CircuitBuilder& b, NodeId a1, NodeId a2, NodeId s, NodeId t, NodeId m) {
  NodeId u = b.sub(t, b.mul(m, s));
  NodeId u2 = b.pow(u, 2);
  NodeId u4 = b.pow(u, 4);
  NodeId s2 = b.pow(s, 2);
  NodeId s4 = b.pow(s, 4);
  NodeId mid = b.mul(b.constant(2), b.mul(b.add(a1, a2), b.mul(s2, u2)));
  NodeId last = b.mul(b.pow(b.sub(a1, a2), 2), s4);
  return b.add(b.sub(u4, mid), last);
}

QuadInt relation_m_witness(const QuadInt& alpha1, const QuadInt& alpha2, const QuadInt& s,
                           const QuadInt& t) {
  if (s.is_zero()) throw UsageError("relation_m_witness: S must be nonzero");
  auto quotient = divides(s, t);
  if (!quotient) throw UsageError("relation_m_witness: S does not divide T");
  QuadInt m = *quotient - alpha1 - alpha2;
  if (!relation_f(alpha1 * alpha1, alpha2 * alpha2, s, t, m).is_zero()) {
    throw InternalError("relation_m_witness: f(m) != 0");
  }
  return m;
}

RelationDecode relation_decode(const QuadInt& a1, const QuadInt& a2, const QuadInt& s,
                               const QuadInt& t, const QuadInt& m) {
  if (s.is_zero()) throw UsageError("relation_decode: S must be nonzero");
  if (a1 == a2) throw UsageError("relation_decode: A1 and A2 must differ");
  if (!relation_f(a1, a2, s, t, m).is_zero()) {
    throw UsageError("relation_decode: f(A1,A2,S,T,m) != 0");
  }
  // x = T/S - m satisfies the monic equation (x^2 + A1 - A2)^2 = 4 A1 x^2,
  // so it is integral; ditto y = (A1-A2)/x and (x+y)/2. Failures here mean
  // the implementation broke, not the caller.
  auto quotient = to_integral(QuadRat(t) / QuadRat(s));
  if (!quotient) throw InternalError("relation_decode: T/S not integral");
  QuadInt x = *quotient - m;
  if (x.is_zero()) throw InternalError("relation_decode: x = 0 despite A1 != A2");
  auto y = divides(x, a1 - a2);
  if (!y) throw InternalError("relation_decode: (A1-A2)/x not integral");
  auto root1 = divides(QuadInt::integer(s.field(), 2), x + *y);
  if (!root1) throw InternalError("relation_decode: (x+y)/2 not integral");
  QuadInt root2 = *root1 - *y;
  if (!(*root1 * *root1 == a1) || !(root2 * root2 == a2)) {
    throw InternalError("relation_decode: recovered roots fail to square back");
  }
  return {*root1, root2, *quotient};
}

std::pair<BigInt, BigInt> nonzero_witness(const BigInt& m) {
  if (m == 0) throw UsageError("nonzero_witness: m must be nonzero");
  BigInt q = m;
  BigInt pow2 = 1;
  while (q % 2 == 0) {
    q /= 2;
    pow2 *= 2;
  }
  int eps = mod_floor(pow2, 3) == 1 ? 1 : -1;
  BigInt s = (eps * pow2 - 1) / 3;
  BigInt r = (eps * q - 1) / 2;
  if ((2 * r + 1) * (3 * s + 1) != m) throw InternalError("nonzero_witness: product check failed");
  return {r, s};
}

IntegralityTemplates integrality_templates(unsigned scale_power) {
  if (scale_power == 0) {
    CircuitBuilder b1;
    NodeId t = b1.variable("t"), v = b1.variable("v"), y = b1.variable("y");
    NodeId odd = b1.add(b1.mul(b1.constant(2), t), b1.constant(1));
    NodeId msc = b1.add(b1.mul(b1.constant(2), b1.pow(odd, 2)), b1.constant(1));
    NodeId inner = b1.sub(b1.mul(b1.constant(2), b1.mul(v, msc)), y);
    NodeId lhs = b1.mul(b1.constant(4), b1.pow(inner, 2));
    NodeId rhs = b1.add(b1.mul(b1.constant(3), b1.pow(y, 2)), b1.constant(1));
    NodeId out1 = b1.sub(lhs, rhs);
    Circuit eq_main = std::move(b1).take(out1);

    CircuitBuilder b2;
    NodeId t2 = b2.variable("t"), x2 = b2.variable("x"), y2 = b2.variable("y");
    NodeId odd2 = b2.add(b2.mul(b2.constant(2), t2), b2.constant(1));
    NodeId diff = b2.sub(odd2, b2.mul(x2, y2));
    NodeId sq = b2.mul(b2.constant(3), b2.mul(b2.pow(y2, 2), b2.pow(diff, 2)));
    NodeId out2 = b2.add(sq, b2.constant(1));
    Circuit square_arg = std::move(b2).take(out2);
    return {std::move(eq_main), std::move(square_arg)};
  }
  if (scale_power % 2 != 0) throw UsageError("scale power must be even");
  // Denominator-cleared form: W plays the numerator of 2u+1 over y^n, yn
  // stands for y^n. The original main equation got scaled by yn^4, the
  // square argument by yn^2.
  CircuitBuilder b1;
  NodeId w = b1.variable("W"), yn = b1.variable("yn");
  NodeId v = b1.variable("v"), y = b1.variable("y");
  NodeId yn2 = b1.pow(yn, 2);
  NodeId q = b1.add(b1.mul(b1.constant(2), b1.pow(w, 2)), yn2);
  NodeId inner = b1.sub(b1.mul(b1.constant(2), b1.mul(v, q)), b1.mul(y, yn2));
  NodeId lhs = b1.mul(b1.constant(4), b1.pow(inner, 2));
  NodeId rhs = b1.mul(b1.add(b1.mul(b1.constant(3), b1.pow(y, 2)), b1.constant(1)),
                      b1.pow(yn, 4));
  NodeId out1 = b1.sub(lhs, rhs);
  Circuit eq_main = std::move(b1).take(out1);

  CircuitBuilder b2;
  NodeId w2 = b2.variable("W"), yn_2 = b2.variable("yn");
  NodeId x2 = b2.variable("x"), y2 = b2.variable("y");
  NodeId diff = b2.sub(w2, b2.mul(x2, b2.mul(y2, yn_2)));
  NodeId sq = b2.mul(b2.constant(3), b2.mul(b2.pow(y2, 2), b2.pow(diff, 2)));
  NodeId out2 = b2.add(sq, b2.pow(yn_2, 2));
  Circuit square_arg = std::move(b2).take(out2);
  return {std::move(eq_main), std::move(square_arg)};
}

IntegralitySearch integrality_witness(const BigInt& t, std::size_t budget) {
  BigInt odd = 2 * t + 1;
  BigInt big_m = 2 * odd * odd + 1;
  BigInt two_m = 2 * big_m;
  // Track residues mod 4M so that X/2 mod 2M is well defined at odd indices
  // (where X is even).
  BigInt track = 4 * big_m;
  auto stage1 = period_search(
      track,
      [&](const BigInt& xr, const BigInt& yr) {
        if (xr % 2 != 0) return false;
        return mod_floor(xr / 2 + yr, two_m) == 0;
      },
      PellParity::odd, budget);
  if (stage1.status != SearchStatus::found) {
    return {stage1.status, std::nullopt,
            "stage 1 modulus " + track.str() + " after " + std::to_string(stage1.steps) +
                " steps"};
  }
  BigInt half_x = stage1.x / 2;
  BigInt v = (half_x + stage1.y) / two_m;
  BigInt y = stage1.y;
  if (v == 0) throw InternalError("integrality_witness: v = 0");

  BigInt mod2 = y * y;
  BigInt target = mod_floor(y * odd, mod2);
  BigInt target_neg = mod_floor(-y * odd, mod2);
  auto stage2 = period_search(
      mod2,
      [&](const BigInt&, const BigInt& yr) { return yr == target || yr == target_neg; },
      PellParity::any, budget);
  if (stage2.status != SearchStatus::found) {
    return {stage2.status, std::nullopt,
            "stage 2 modulus " + mod2.str() + " after " + std::to_string(stage2.steps) +
                " steps"};
  }
  // Plus sign preferred when both residues match.
  BigInt x;
  if (mod_floor(stage2.y, mod2) == target) {
    x = (y * odd - stage2.y) / mod2;
  } else {
    x = (y * odd + stage2.y) / mod2;
  }

  BigInt eq_main = 4 * (2 * v * big_m - y) * (2 * v * big_m - y) - 3 * y * y - 1;
  if (eq_main != 0) throw InternalError("integrality_witness: main equation nonzero");
  BigInt arg = 3 * y * y * (odd - x * y) * (odd - x * y) + 1;
  if (stage2.x * stage2.x != arg) {
    throw InternalError("integrality_witness: square certificate mismatch");
  }
  IntegralityWitness w{v, x, y, stage1.index, stage2.index, stage2.x};
  return {SearchStatus::found, std::move(w), ""};
}

bool integrality_refute_box(const QuadInt& t, long bound) {
  if (t.field().d() != 1) throw UsageError("refutation runs over Z[i] (d = 1)");
  if (t.is_rational_integer()) {
    throw UsageError("refutation requires a non-integer Gaussian t");
  }
  const QuadField& f = t.field();
  QuadInt one = QuadInt::integer(f, 1);
  QuadInt odd = BigInt(2) * t + one;
  QuadInt big_m = BigInt(2) * (odd * odd) + one;
  auto elems = box(f, bound);
  for (const QuadInt& v : elems) {
    if (v.is_zero()) continue;
    for (const QuadInt& y : elems) {
      QuadInt inner = BigInt(2) * (v * big_m) - y;
      QuadInt main = BigInt(4) * (inner * inner) - BigInt(3) * (y * y) - one;
      if (!main.is_zero()) continue;
      for (const QuadInt& x : elems) {
        QuadInt diff = odd - x * y;
        QuadInt arg = BigInt(3) * ((y * y) * (diff * diff)) + one;
        if (square_root(arg)) return false;  // witness found: not refuted
      }
    }
  }
  return true;
}

}  // namespace diozi
