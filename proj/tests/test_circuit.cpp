#include "diozi/circuit.hpp"

#include "diozi/errors.hpp"
#include "doctest.h"

using namespace diozi;

namespace {

Circuit square_plus(const std::string& v1, const std::string& v2) {
  // v1^2 + 2 v2^2
  CircuitBuilder b;
  NodeId x = b.variable(v1), y = b.variable(v2);
  NodeId out = b.add(b.pow(x, 2), b.mul(b.constant(2), b.pow(y, 2)));
  return std::move(b).take(out);
}

}  // namespace

TEST_CASE("emission is canonical SSA and parses back byte-identically") {
  CircuitBuilder b;
  NodeId x = b.variable("x");
  NodeId one = b.constant(1);
  NodeId out = b.pow(b.add(x, one), 2);
  Circuit c = std::move(b).take(out);
  std::string text = c.emit();
  CHECK(text ==
        "n0 = var x\n"
        "n1 = const 1\n"
        "n2 = add n0 n1\n"
        "n3 = pow n2 2\n"
        "out n3\n");
  CHECK(Circuit::parse(text).emit() == text);
}

TEST_CASE("parser rejects malformed programs") {
  CHECK_THROWS_AS(Circuit::parse("n1 = var x\nout n1\n"), UsageError);       // ids must be dense
  CHECK_THROWS_AS(Circuit::parse("n0 = add n0 n0\nout n0\n"), UsageError);   // forward reference
  CHECK_THROWS_AS(Circuit::parse("n0 = var x\n"), UsageError);               // missing out
  CHECK_THROWS_AS(Circuit::parse("n0 = var x\nout n1\n"), UsageError);       // bad out target
  CHECK_THROWS_AS(Circuit::parse("n0 = var x\nn1 = pow n0 0\nout n1\n"), UsageError);
  CHECK_THROWS_AS(Circuit::parse("n0 = var x\nn1 = pow n0 65\nout n1\n"), UsageError);
  CHECK_THROWS_AS(Circuit::parse("n0 = frob 1\nout n0\n"), UsageError);
  CHECK_THROWS_AS(Circuit::parse("n0 = var 3x\nout n0\n"), UsageError);
  CHECK_NOTHROW(Circuit::parse("# comment\nn0 = const -7\n\nout n0\n"));
}

TEST_CASE("builder shares structurally equal nodes and folds constants") {
  CircuitBuilder b;
  NodeId x = b.variable("x");
  NodeId p1 = b.pow(x, 2);
  NodeId p2 = b.pow(x, 2);
  CHECK(p1 == p2);
  CHECK(b.variable("x") == x);
  NodeId c = b.add(b.constant(2), b.constant(3));
  NodeId five = b.constant(5);
  CHECK(c == five);
  CHECK(b.pow(b.constant(3), 4) == b.constant(81));
  CHECK(b.pow(x, 1) == x);
  CHECK_THROWS_AS(b.pow(x, 0), UsageError);
}

TEST_CASE("evaluation over integers and over Gaussian integers") {
  Circuit c = square_plus("x", "y");
  CHECK(eval_int(c, {{"x", 3}, {"y", 2}}) == 17);
  CHECK_THROWS_AS(eval_int(c, {{"x", 3}}), UsageError);

  QuadField d1(1);
  QuadInt x = QuadInt::element(d1, 1, 1);  // 1+i
  QuadInt y = QuadInt::integer(d1, 1);
  QuadInt v = eval_quad(c, d1, {{"x", x}, {"y", y}});
  CHECK(v == QuadInt::element(d1, 2, 2));  // (1+i)^2 + 2 = 2 + 2i
  CHECK(eval_quad(c, d1, {{"x", QuadInt::zero(d1)}, {"y", QuadInt::zero(d1)}}).is_zero());
  CHECK_THROWS_AS(eval_quad(c, d1, {{"x", QuadInt::integer(QuadField(2), 1)}, {"y", y}}),
                  UsageError);
}

TEST_CASE("relation-shaped evaluation example") {
  // (T - mS)^4 - 2(A1+A2) S^2 (T-mS)^2 + (A1-A2)^2 S^4 at (1,4,1,5,2) is
  // 81 - 90 + 9 = 0
  CircuitBuilder b;
  NodeId t = b.variable("T"), m = b.variable("m"), s = b.variable("S");
  NodeId a1 = b.variable("A1"), a2 = b.variable("A2");
  NodeId u = b.sub(t, b.mul(m, s));
  NodeId u2 = b.pow(u, 2);
  NodeId out = b.add(b.sub(b.pow(u, 4), b.mul(b.constant(2), b.mul(b.add(a1, a2),
                                                                   b.mul(b.pow(s, 2), u2)))),
                     b.mul(b.pow(b.sub(a1, a2), 2), b.pow(s, 4)));
  Circuit f = std::move(b).take(out);
  CHECK(eval_int(f, {{"A1", 1}, {"A2", 4}, {"S", 1}, {"T", 5}, {"m", 2}}) == 0);
  CHECK(eval_int(f, {{"A1", 1}, {"A2", 4}, {"S", 1}, {"T", 5}, {"m", 0}}) == 384);
}

TEST_CASE("degree bounds") {
  CHECK(degree_bound(square_plus("x", "y")) == 2);
  {
    // (T - mS)^4 with m, S variables dominates: (1 + 1) * 4
    CircuitBuilder rb;
    NodeId t = rb.variable("T"), m = rb.variable("m"), s = rb.variable("S");
    NodeId a1 = rb.variable("A1"), a2 = rb.variable("A2");
    NodeId u = rb.sub(t, rb.mul(m, s));
    NodeId out = rb.add(
        rb.sub(rb.pow(u, 4), rb.mul(rb.constant(2), rb.mul(rb.add(a1, a2),
                                                           rb.mul(rb.pow(s, 2), rb.pow(u, 2))))),
        rb.mul(rb.pow(rb.sub(a1, a2), 2), rb.pow(s, 4)));
    CHECK(degree_bound(std::move(rb).take(out)) == 8);
  }
  CircuitBuilder b;
  CHECK(degree_bound(std::move(b).take(b.constant(7))) == 0);

  CircuitBuilder b2;
  NodeId x = b2.variable("x");
  NodeId deep = b2.pow(b2.pow(b2.pow(x, 64), 64), 64);
  Circuit c = std::move(b2).take(deep);
  CHECK(degree_bound(c) == BigInt(64) * 64 * 64);
}

TEST_CASE("expansion agrees with a symbolic oracle") {
  CircuitBuilder b;
  NodeId x = b.variable("x");
  NodeId out = b.pow(b.add(x, b.constant(1)), 2);
  Circuit c = std::move(b).take(out);
  ExpandOutcome got = expand(c, 10);
  REQUIRE(got.poly.has_value());
  CHECK(*got.poly == parse_poly("x^2 + 2*x + 1"));
  CHECK(got.bound == 2);

  ExpandOutcome tight = expand(c, 2);
  CHECK_FALSE(tight.poly.has_value());
  CHECK(tight.bound == 2);

  // the full relation polynomial, expanded, matches the formula built
  // directly from SparsePoly algebra
  CircuitBuilder rb;
  NodeId t = rb.variable("T"), m = rb.variable("m"), s = rb.variable("S");
  NodeId a1 = rb.variable("A1"), a2 = rb.variable("A2");
  NodeId u = rb.sub(t, rb.mul(m, s));
  NodeId u2 = rb.pow(u, 2);
  NodeId rout = rb.add(
      rb.sub(rb.pow(u, 4),
             rb.mul(rb.constant(2), rb.mul(rb.add(a1, a2), rb.mul(rb.pow(s, 2), u2)))),
      rb.mul(rb.pow(rb.sub(a1, a2), 2), rb.pow(s, 4)));
  Circuit f = std::move(rb).take(rout);
  ExpandOutcome expanded = expand(f, 10000);
  REQUIRE(expanded.poly.has_value());

  std::vector<std::string> manifest{"A1", "A2", "S", "T", "m"};
  auto V = [&](const char* name) { return SparsePoly::variable(manifest, name); };
  SparsePoly U = V("T") - V("m") * V("S");
  SparsePoly two = SparsePoly::constant(manifest, 2);
  SparsePoly oracle = U.pow(4) - two * (V("A1") + V("A2")) * V("S").pow(2) * U.pow(2) +
                      (V("A1") - V("A2")).pow(2) * V("S").pow(4);
  CHECK(*expanded.poly == oracle.aligned(expanded.poly->manifest()));
  CHECK(expanded.bound >= BigInt(expanded.poly->total_degree()));
}

TEST_CASE("substitution composes evaluation and keeps sharing") {
  CircuitBuilder b;
  NodeId x = b.variable("x");
  NodeId sq = b.pow(x, 2);
  Circuit c = std::move(b).take(sq);

  CircuitBuilder ub;
  NodeId u = ub.variable("u");
  NodeId v = ub.variable("v");
  NodeId sum = ub.add(u, v);
  Circuit uv = std::move(ub).take(sum);

  Circuit composed = substitute(c, {{"x", uv}});
  for (int a = -3; a <= 3; ++a) {
    for (int bb = -3; bb <= 3; ++bb) {
      BigInt direct = BigInt(a + bb) * BigInt(a + bb);
      CHECK(eval_int(composed, {{"u", a}, {"v", bb}}) == direct);
    }
  }
  // empty binding leaves evaluation unchanged
  Circuit same = substitute(c, {});
  CHECK(eval_int(same, {{"x", 9}}) == 81);
  // unbound variables stay symbolic
  CHECK(composed.variables() == std::vector<std::string>{"u", "v"});
}

TEST_CASE("poly_to_circuit with pinned parameters") {
  SparsePoly p = parse_poly("z0 - z1^2");
  Circuit c = poly_to_circuit(p, {{"z0", 7}});
  CHECK(c.variables() == std::vector<std::string>{"z1"});
  CHECK(eval_int(c, {{"z1", 2}}) == 3);
  Circuit full = poly_to_circuit(p);
  CHECK(eval_int(full, {{"z0", 4}, {"z1", 2}}) == 0);
}
