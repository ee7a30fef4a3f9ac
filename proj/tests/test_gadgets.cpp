#include "diozi/gadgets.hpp"

#include "diozi/errors.hpp"
#include "doctest.h"

using namespace diozi;

TEST_CASE("build_y") {
  Circuit y1 = build_y(1);
  CHECK(eval_int(y1, {{"z1", -1}}) == -4);
  Circuit y2 = build_y(2);
  CHECK(eval_int(y2, {{"z1", 1}, {"z2", 1}}) == 32);
  Circuit y10 = build_y(10);
  std::map<std::string, BigInt> zeros;
  for (int k = 1; k <= 10; ++k) zeros["z" + std::to_string(k)] = 0;
  CHECK(eval_int(y10, zeros) == 2);
  CHECK_THROWS_AS(build_y(0), UsageError);
}

TEST_CASE("integrality criterion worked values") {
  QuadField d1(1), d3(3);
  {
    QuadRat v = integrality_value(d1, {QuadInt::integer(d1, 1)});
    CHECK(v.r() == BigRat(65, 8));
    CHECK(v.s() == 0);
    CHECK(integrality_criterion(d1, {QuadInt::integer(d1, 1)}));
  }
  {
    QuadRat v = integrality_value(d1, {QuadInt::element(d1, 0, 1)});  // [i]
    CHECK(v.r() == BigRat(43, 20));
    CHECK(v.s() == BigRat(121, 20));
    CHECK_FALSE(integrality_criterion(d1, {QuadInt::element(d1, 0, 1)}));
  }
  {
    QuadInt omega(d3, -1, 1);
    QuadRat v = integrality_value(d3, {omega});
    CHECK(v.r() == BigRat(-23, 28));
    CHECK(v.s() == BigRat(85, 28));
    CHECK_FALSE(integrality_criterion(d3, {omega}));
  }
  CHECK_THROWS_AS(integrality_value(d1, {}), UsageError);
}

TEST_CASE("descent check outcomes") {
  QuadField d1(1);
  QuadInt one = QuadInt::integer(d1, 1);
  CHECK(descent_check(d1, one, {QuadInt::zero(d1)}, QuadInt::integer(d1, 3)) ==
        DescentOutcome::holds);
  CHECK(descent_check(d1, one, {QuadInt::zero(d1)}, QuadInt::element(d1, 0, 1)) ==
        DescentOutcome::hypothesis_fails);
  CHECK_THROWS_AS(descent_check(d1, QuadInt::zero(d1), {one}, one), UsageError);
  // small exhaustive sweep: the `violated` outcome never occurs
  for (std::int64_t d : {1, 3}) {
    QuadField field(d);
    auto elems = box(field, 2);
    for (const QuadInt& x0 : elems) {
      if (x0.is_zero()) continue;
      for (const QuadInt& x1 : elems) {
        for (const QuadInt& z : elems) {
          CHECK(descent_check(field, x0, {x1}, z) != DescentOutcome::violated);
        }
      }
    }
  }
}

TEST_CASE("pairwise conjunction gadget") {
  QuadField d1(1);
  Circuit combined = conj_combine(poly_to_circuit(parse_poly("x")),
                                  poly_to_circuit(parse_poly("y")));
  QuadInt x = QuadInt::element(d1, 1, 1);
  CHECK(eval_quad(combined, d1, {{"x", x}, {"y", QuadInt::integer(d1, 1)}}) ==
        QuadInt::element(d1, 2, 2));
  CHECK(eval_quad(combined, d1, {{"x", QuadInt::zero(d1)}, {"y", QuadInt::zero(d1)}}).is_zero());
}

TEST_CASE("relation forward witness and value") {
  QuadField d1(1);
  auto I = [&](long v) { return QuadInt::integer(d1, v); };
  CHECK(relation_f(I(1), I(4), I(1), I(5), I(2)).is_zero());
  CHECK(relation_f(I(9), I(4), I(2), I(10), I(0)).is_zero());
  CHECK(relation_f(I(1), I(4), I(1), I(5), I(0)) == I(384));
  CHECK(relation_f<BigInt>(1, 4, 1, 5, 2) == 0);
  CHECK(relation_f<BigInt>(9, 4, 2, 10, 0) == 0);

  CHECK(relation_m_witness(I(1), I(2), I(1), I(5)) == I(2));
  CHECK(relation_m_witness(I(3), I(2), I(2), I(10)) == I(0));
  CHECK(relation_m_witness(I(0), I(0), I(1), I(0)) == I(0));
  CHECK_THROWS_AS(relation_m_witness(I(1), I(2), I(2), I(3)), UsageError);
  CHECK_THROWS_AS(relation_m_witness(I(1), I(2), I(0), I(0)), UsageError);
}

TEST_CASE("relation decode recovers roots and quotient") {
  QuadField d1(1);
  auto I = [&](long v) { return QuadInt::integer(d1, v); };
  {
    RelationDecode dec = relation_decode(I(1), I(4), I(1), I(5), I(2));
    CHECK(dec.root1 == I(1));
    CHECK(dec.root2 == I(2));
    CHECK(dec.quotient == I(5));
  }
  {
    RelationDecode dec = relation_decode(I(9), I(4), I(2), I(10), I(0));
    CHECK(dec.root1 == I(3));
    CHECK(dec.root2 == I(2));
    CHECK(dec.quotient == I(5));
  }
  {
    // genuinely Gaussian instance built from its own witness
    QuadInt alpha1 = QuadInt::element(d1, 0, 1);   // i
    QuadInt alpha2 = QuadInt::element(d1, 1, 1);   // 1+i
    QuadInt s = QuadInt::element(d1, 1, -1);
    QuadInt t = s * QuadInt::element(d1, 2, 3);
    QuadInt m = relation_m_witness(alpha1, alpha2, s, t);
    RelationDecode dec = relation_decode(alpha1 * alpha1, alpha2 * alpha2, s, t, m);
    CHECK(dec.root1 * dec.root1 == alpha1 * alpha1);
    CHECK(dec.root2 * dec.root2 == alpha2 * alpha2);
    CHECK(dec.quotient * s == t);
  }
  CHECK_THROWS_AS(relation_decode(I(4), I(4), I(1), I(5), I(2)), UsageError);
  CHECK_THROWS_AS(relation_decode(I(1), I(4), I(1), I(5), I(1)), UsageError);  // f != 0
}

TEST_CASE("nonzero witness construction") {
  CHECK(nonzero_witness(6) == std::pair<BigInt, BigInt>{-2, -1});
  CHECK(nonzero_witness(1) == std::pair<BigInt, BigInt>{0, 0});
  CHECK(nonzero_witness(-5) == std::pair<BigInt, BigInt>{-3, 0});
  CHECK_THROWS_AS(nonzero_witness(0), UsageError);
  for (int m = -200; m <= 200; ++m) {
    if (m == 0) continue;
    auto [r, s] = nonzero_witness(m);
    CHECK((2 * r + 1) * (3 * s + 1) == m);
  }
}

TEST_CASE("integrality gadget templates") {
  IntegralityTemplates plain = integrality_templates(0);
  CHECK(eval_int(plain.eq_main, {{"t", 0}, {"v", 65}, {"y", 209}}) == 0);
  CHECK(eval_int(plain.eq_main, {{"t", 0}, {"v", 1}, {"y", 1}}) == 96);
  CHECK(eval_int(plain.square_arg, {{"t", 0}, {"x", 0}, {"y", 209}}) == BigInt(362) * 362);
  CHECK_THROWS_AS(integrality_templates(3), UsageError);

  // scaled templates agree with the plain ones after clearing denominators:
  // at yn = 1 and W = 2t+1 the scaling is trivial
  IntegralityTemplates scaled = integrality_templates(2);
  for (int t = -2; t <= 2; ++t) {
    for (int v = -2; v <= 2; ++v) {
      for (int y = -2; y <= 2; ++y) {
        BigInt lhs = eval_int(scaled.eq_main, {{"W", 2 * t + 1}, {"yn", 1}, {"v", v}, {"y", y}});
        BigInt rhs = eval_int(plain.eq_main, {{"t", t}, {"v", v}, {"y", y}});
        CHECK(lhs == rhs);
        BigInt lhs2 =
            eval_int(scaled.square_arg, {{"W", 2 * t + 1}, {"yn", 1}, {"x", v}, {"y", y}});
        BigInt rhs2 = eval_int(plain.square_arg, {{"t", t}, {"x", v}, {"y", y}});
        CHECK(lhs2 == rhs2);
      }
    }
  }

  // substitution into the scaled template equals a directly-built scaled
  // circuit on sample points
  CircuitBuilder b;
  NodeId yv = b.variable("yy");
  NodeId yn = b.pow(yv, 2);
  NodeId w = b.add(b.mul(b.constant(2), b.mul(b.variable("tt"), b.variable("tau"))), yn);
  Circuit wc = std::move(b).take(w);
  Circuit ysq = [&] {
    CircuitBuilder bb;
    NodeId out = bb.pow(bb.variable("yy"), 2);
    return std::move(bb).take(out);
  }();
  Circuit composed = substitute(scaled.eq_main, {{"W", wc}, {"yn", ysq}});
  for (int yy = 1; yy <= 3; ++yy) {
    for (int tt = -2; tt <= 2; ++tt) {
      std::map<std::string, BigInt> a{{"yy", yy}, {"tt", tt}, {"tau", 7}, {"v", 3}, {"y", 5}};
      BigInt wval = 2 * tt * 7 + yy * yy;
      BigInt direct = eval_int(scaled.eq_main,
                               {{"W", wval}, {"yn", BigInt(yy) * yy}, {"v", 3}, {"y", 5}});
      CHECK(eval_int(composed, a) == direct);
    }
  }
}

TEST_CASE("integer witness search") {
  {
    IntegralitySearch s = integrality_witness(0, 100000);
    REQUIRE(s.status == SearchStatus::found);
    CHECK(s.witness->v == 65);
    CHECK(s.witness->x == 0);
    CHECK(s.witness->y == 209);
    CHECK(s.witness->pell_index_vy == 5);
    CHECK(s.witness->pell_index_x == 5);
    CHECK(s.witness->square_x == 362);
  }
  {
    IntegralitySearch s = integrality_witness(1, 100000);
    REQUIRE(s.status == SearchStatus::found);
    CHECK(s.witness->v == 1991);
    CHECK(s.witness->x == -486540);
    CHECK(s.witness->y == 40545);
    CHECK(s.witness->pell_index_vy == 9);
    CHECK(s.witness->pell_index_x == 27);
  }
  {
    IntegralitySearch s = integrality_witness(-1, 100000);
    REQUIRE(s.status == SearchStatus::found);
    CHECK(s.witness->v == 65);
    CHECK(s.witness->x == 0);
    CHECK(s.witness->y == 209);
  }
  {
    IntegralitySearch s = integrality_witness(1000000, 3);
    CHECK(s.status == SearchStatus::budget_exceeded);
  }
}

TEST_CASE("bounded refutation for non-integer t") {
  QuadField d1(1);
  CHECK(integrality_refute_box(QuadInt::element(d1, 0, 1), 3));
  CHECK(integrality_refute_box(QuadInt::element(d1, 1, 1), 3));
  CHECK_THROWS_AS(integrality_refute_box(QuadInt::integer(d1, 2), 3), UsageError);
  CHECK_THROWS_AS(integrality_refute_box(QuadInt::element(QuadField(3), 1, 1), 3), UsageError);
}
