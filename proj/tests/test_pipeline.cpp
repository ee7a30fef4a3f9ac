#include "diozi/pipeline.hpp"

#include <set>

#include "diozi/gadgets.hpp"
#include "doctest.h"

using namespace diozi;

namespace {

const ReductionConfig kSquareCfg{1, Encoding::repaired};

SparsePoly square_poly() { return parse_poly("z0 - z1^2"); }

}  // namespace

TEST_CASE("reduce produces the expected manifest and structure") {
  Reduction red = reduce(square_poly(), 1, kSquareCfg);
  std::vector<std::string> expect{"z1", "m", "r", "s", "t", "v0",
                                  "x0", "y0", "v1", "x1", "y1"};
  CHECK(red.unknowns == expect);
  CHECK(red.parameter == "z0");
  CHECK(red.parameter_value == 1);
  std::set<std::string> vars;
  for (const std::string& v : red.circuit.variables()) vars.insert(v);
  CHECK(vars == std::set<std::string>(expect.begin(), expect.end()));
  CHECK(degree_bound(red.circuit) == 112);

  // all-zero assignment: the nonzero-product equation forces E4 = -1,
  // hence F != 0
  std::map<std::string, BigInt> zeros;
  for (const std::string& v : expect) zeros[v] = 0;
  Reduction red0 = reduce(square_poly(), 0, kSquareCfg);
  CHECK(eval_int(red0.circuit, zeros) != 0);
  Circuit e4(red0.circuit.nodes(), red0.landmarks.at("E4"));
  CHECK(eval_int(e4, zeros) == -1);
}

TEST_CASE("reduce rejects stray variables") {
  CHECK_THROWS_AS(reduce(parse_poly("z0 - w^2"), 1, kSquareCfg), UsageError);
  CHECK_THROWS_AS(reduce(parse_poly("z0 - z2^2"), 1, kSquareCfg), UsageError);
  CHECK_THROWS_AS(reduce(square_poly(), 1, ReductionConfig{0, Encoding::repaired}), UsageError);
}

TEST_CASE("unknown count at the default size") {
  std::string text = "z0";
  for (int k = 1; k <= 10; ++k) text += " - z" + std::to_string(k) + "^2";
  Reduction red = reduce(parse_poly(text), 0, ReductionConfig{10, Encoding::repaired});
  CHECK(red.unknowns.size() == 20);
  CHECK(red.circuit.variables().size() == 20);
  CHECK(degree_bound(red.circuit) == 3568);
  std::string emitted = red.circuit.emit();
  CHECK(Circuit::parse(emitted).emit() == emitted);

  // the full-size compiled form is not expandable at any sane budget; the
  // outcome degrades to the structural degree bound
  ExpandOutcome out = expand(red.circuit, 1000000);
  CHECK_FALSE(out.poly.has_value());
  CHECK(out.bound == 3568);
}

TEST_CASE("lift produces a verified bundle on the square instance") {
  WitnessBundle bundle = lift_witness(square_poly(), 1, {-1}, kSquareCfg, 100000);
  CHECK(bundle.verified);
  CHECK(bundle.parameter == 1);
  CHECK(bundle.values.at("z1") == -1);
  CHECK(bundle.derived.at("y") == -4);
  CHECK(bundle.derived.at("S") == -1);
  CHECK(bundle.values.at("t") == -4);
  CHECK(bundle.derived.at("tau") == 15);
  CHECK(mod_floor(bundle.derived.at("A1"), 3) == 0);
  CHECK(mod_floor(bundle.derived.at("A2"), 3) == 1);
  REQUIRE(bundle.provenance.size() == 2);
  CHECK(bundle.provenance[0].find("(89, 623)") != std::string::npos);
  CHECK(bundle.provenance[0].find("198") != std::string::npos);
  CHECK(bundle.provenance[1].find("(641, 19871)") != std::string::npos);
  CHECK(bundle.provenance[1].find("3846") != std::string::npos);

  Reduction red = reduce(square_poly(), 1, kSquareCfg);
  CHECK(verify_bundle(red, bundle));

  SUBCASE("tampered bundles fail verification") {
    WitnessBundle broken = bundle;
    broken.values.at("m") += 1;
    broken.derived.clear();
    CHECK_FALSE(verify_bundle(red, broken));
    WitnessBundle broken2 = bundle;
    broken2.values.at("r") += 1;
    broken2.derived.clear();
    CHECK_FALSE(verify_bundle(red, broken2));
  }

  SUBCASE("bundle files round-trip") {
    std::string text = bundle.emit();
    CHECK(text == bundle.emit());
    WitnessBundle back = WitnessBundle::parse(text);
    CHECK(back.parameter == bundle.parameter);
    CHECK(back.values == bundle.values);
    CHECK(back.derived == bundle.derived);
    CHECK(back.verified);
    CHECK(verify_bundle(red, back));
  }
}

TEST_CASE("lift preconditions") {
  CHECK_THROWS_AS(lift_witness(square_poly(), 1, {0}, kSquareCfg, 100000), UsageError);
  CHECK_THROWS_AS(lift_witness(square_poly(), 1, {2}, kSquareCfg, 100000), UsageError);
  CHECK_THROWS_AS(lift_witness(square_poly(), 1, {-1, 1}, kSquareCfg, 100000), UsageError);
  CHECK_THROWS_AS(lift_witness(parse_poly("z0 - w^2"), 1, {-1}, kSquareCfg, 100000), UsageError);
}

TEST_CASE("lift budget propagates") {
  CHECK_THROWS_AS(lift_witness(square_poly(), 1, {-1}, kSquareCfg, 3), BudgetExceeded);
}

TEST_CASE("paper encoding reports the divisibility obstruction") {
  ReductionConfig paper{1, Encoding::paper};
  std::string message;
  try {
    lift_witness(square_poly(), 1, {-1}, paper, 100000);
    CHECK(false);
  } catch (const NoAdmissibleT& e) {
    message = e.what();
  }
  CHECK(message.rfind("no admissible t: |t*y^n| = 16 > |S| = 1", 0) == 0);
  // deterministic: a second run produces the identical diagnostic
  try {
    lift_witness(square_poly(), 1, {-1}, paper, 100000);
  } catch (const NoAdmissibleT& e) {
    CHECK(message == e.what());
  }
  // the repaired encoding lifts the same instance
  CHECK(lift_witness(square_poly(), 1, {-1}, kSquareCfg, 100000).verified);
}

TEST_CASE("paper encoding still reduces") {
  ReductionConfig paper{1, Encoding::paper};
  Reduction red = reduce(square_poly(), 1, paper);
  CHECK(degree_bound(red.circuit) == 112);
  // circuits differ between encodings
  Reduction rep = reduce(square_poly(), 1, kSquareCfg);
  CHECK(red.circuit.emit() != rep.circuit.emit());
}

TEST_CASE("flattening") {
  {
    std::vector<SparsePoly> sys = skolem_flatten(parse_poly("z1^3 - 2"));
    REQUIRE(sys.size() == 2);
    std::vector<std::string> manifest{"z1", "u1"};
    SparsePoly def(manifest);
    def.add_term({0, 1}, 1);
    def.add_term({2, 0}, -1);
    SparsePoly main(manifest);
    main.add_term({1, 1}, 1);
    main.add_term({0, 0}, -2);
    CHECK(sys[0] == def);
    CHECK(sys[1] == main);
  }
  {
    std::vector<SparsePoly> sys = skolem_flatten(parse_poly("x^2*y^2 - 1"));
    REQUIRE(sys.size() == 3);
    for (const SparsePoly& q : sys) CHECK(q.total_degree() <= 2);
    CHECK(sys.back().manifest() == std::vector<std::string>{"x", "y", "u1", "u2"});
  }
  {
    SparsePoly low = parse_poly("x*y - 3");
    std::vector<SparsePoly> sys = skolem_flatten(low);
    REQUIRE(sys.size() == 1);
    CHECK(sys[0] == low);
  }
  {
    // fresh names dodge collisions with existing u<k> variables
    std::vector<SparsePoly> sys = skolem_flatten(parse_poly("u1^3 - 2"));
    REQUIRE(sys.size() == 2);
    std::set<std::string> names(sys.back().manifest().begin(), sys.back().manifest().end());
    CHECK(names.size() == sys.back().manifest().size());
    CHECK(names.count("u1") == 1);
    CHECK(names.count("u2") == 1);
  }
}

TEST_CASE("tree combine") {
  Circuit c1 = poly_to_circuit(parse_poly("x^2 - 1"));
  Circuit c2 = poly_to_circuit(parse_poly("x*y - 1"));
  Circuit c3 = poly_to_circuit(parse_poly("y^2 - x"));
  CombineReport two = tree_combine({c1, c2});
  CHECK(two.bound == 4);
  CombineReport three = tree_combine({c1, c2, c3});
  CHECK(three.bound == 8);
  CombineReport one = tree_combine({c1});
  CHECK(one.circuit.emit() == c1.emit());
  CHECK(one.bound == 2);
  CHECK_THROWS_AS(tree_combine({}), UsageError);
}
