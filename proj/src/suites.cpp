#include "diozi/suites.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <thread>

#include "diozi/circuit.hpp"
#include "diozi/errors.hpp"
#include "diozi/gadgets.hpp"
#include "diozi/pell.hpp"
#include "diozi/pipeline.hpp"
#include "diozi/poly.hpp"
#include "diozi/quadint.hpp"

namespace diozi {

namespace {

struct Tally {
  SuiteReport& report;

  template <typename Describe>
  void check(bool ok, Describe&& describe) {
    ++report.cases;
    if (!ok) {
      ++report.violations;
      if (!report.counterexample) report.counterexample = describe();
    }
  }
};

std::string fmt_big(const BigInt& v) {
  std::string s = v.str();
  if (s.size() <= 12) return s;
  return "<" + std::to_string(v < 0 ? s.size() - 1 : s.size()) + " digits>";
}

std::string join_ds(const std::vector<std::int64_t>& ds) {
  std::string out;
  for (std::size_t i = 0; i < ds.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(ds[i]);
  }
  return out;
}

// Every n-tuple over `elems`, lexicographic by index, visitor gets the tuple.
void for_tuples(const std::vector<QuadInt>& elems, unsigned n,
                const std::function<void(const std::vector<QuadInt>&)>& visit) {
  if (elems.empty()) return;
  std::vector<std::size_t> idx(n, 0);
  std::vector<QuadInt> tuple;
  tuple.reserve(n);
  for (;;) {
    tuple.clear();
    for (std::size_t i : idx) tuple.push_back(elems[i]);
    visit(tuple);
    std::size_t pos = n;
    while (pos > 0 && ++idx[pos - 1] == elems.size()) {
      idx[pos - 1] = 0;
      --pos;
    }
    if (pos == 0) return;
  }
}

// sum_k x_k / y^k with y = 2 prod (3 x_k + 1)
QuadRat tail_sum(const QuadField& field, const std::vector<QuadInt>& xs) {
  QuadInt y = QuadInt::integer(field, 2);
  for (const QuadInt& x : xs) y = y * (BigInt(3) * x + QuadInt::integer(field, 1));
  QuadRat yq{y};
  QuadRat sum = QuadRat::zero(field);
  QuadRat ypow{QuadInt::integer(field, 1)};
  for (const QuadInt& x : xs) {
    ypow = ypow * yq;
    sum = sum + QuadRat(x) / ypow;
  }
  return sum;
}

std::string tuple_str(const std::vector<QuadInt>& xs) {
  std::string out = "(";
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) out += "; ";
    out += xs[i].str();
  }
  return out + ")";
}

SuiteReport suite_lemma21(const SuiteParams& p) {
  long bound = p.box ? p.box : 8;
  SuiteReport report{.name = "lemma21",
                     .params = "d=" + join_ds(p.ds) + " box=" + std::to_string(bound)};
  Tally tally{report};
  for (std::int64_t d : p.ds) {
    QuadField field(d);
    for (const QuadInt& x : box(field, bound)) {
      QuadInt x3 = BigInt(3) * x + QuadInt::integer(field, 1);
      BigInt lhs = x3.norm();
      tally.check(lhs >= x.norm() && lhs >= 1, [&] {
        return "d=" + std::to_string(d) + " x=" + x.str();
      });
    }
  }
  return report;
}

SuiteReport suite_bound22(const SuiteParams& p) {
  long bound = p.box ? p.box : 2;
  SuiteReport report{.name = "bound22",
                     .params = "d=" + join_ds(p.ds) + " box=" + std::to_string(bound) +
                               " n=" + std::to_string(p.n)};
  Tally tally{report};
  const BigRat sharp = BigRat(49, 64) * BigRat(49, 64);
  for (std::int64_t d : p.ds) {
    QuadField field(d);
    auto elems = box(field, bound);
    for (unsigned n = 1; n <= p.n; ++n) {
      for_tuples(elems, n, [&](const std::vector<QuadInt>& xs) {
        QuadRat z = tail_sum(field, xs);
        BigRat surd_sq = z.s() * z.s();
        bool ok = d * surd_sq < 1;
        if (ok && d == 3) {
          bool all_nonzero = true;
          for (const QuadInt& x : xs) all_nonzero = all_nonzero && !x.is_zero();
          if (all_nonzero) ok = 3 * surd_sq < sharp;
        }
        tally.check(ok, [&] { return "d=" + std::to_string(d) + " xs=" + tuple_str(xs); });
      });
    }
  }
  return report;
}

SuiteReport suite_thm12(const SuiteParams& p) {
  long bound = p.box ? p.box : 2;
  SuiteReport report{.name = "thm12",
                     .params = "d=" + join_ds(p.ds) + " box=" + std::to_string(bound) +
                               " n=" + std::to_string(p.n)};
  Tally tally{report};
  for (std::int64_t d : p.ds) {
    QuadField field(d);
    auto elems = box(field, bound);
    for (unsigned n = 1; n <= p.n; ++n) {
      for_tuples(elems, n, [&](const std::vector<QuadInt>& xs) {
        bool all_integer = true;
        for (const QuadInt& x : xs) all_integer = all_integer && x.is_rational_integer();
        bool criterion = integrality_criterion(field, xs);
        tally.check(criterion == all_integer,
                    [&] { return "d=" + std::to_string(d) + " xs=" + tuple_str(xs); });
      });
    }
  }
  return report;
}

SuiteReport suite_lemma22(const SuiteParams& p) {
  long bound = p.box ? p.box : 2;
  SuiteReport report{.name = "lemma22",
                     .params = "d=" + join_ds(p.ds) + " box=" + std::to_string(bound)};
  Tally tally{report};
  for (std::int64_t d : p.ds) {
    QuadField field(d);
    auto elems = box(field, bound);
    for (const QuadInt& x0 : elems) {
      if (x0.is_zero()) continue;
      for (const QuadInt& x1 : elems) {
        for (const QuadInt& z : elems) {
          DescentOutcome outcome = descent_check(field, x0, {x1}, z);
          tally.check(outcome != DescentOutcome::violated, [&] {
            return "d=" + std::to_string(d) + " x0=" + x0.str() + " x1=" + x1.str() +
                   " z=" + z.str();
          });
        }
      }
    }
  }
  return report;
}

SuiteReport suite_lemma31(const SuiteParams& p) {
  long bound = p.box ? p.box : 2;
  SuiteReport report{.name = "lemma31", .params = "box=" + std::to_string(bound)};
  Tally tally{report};
  QuadField field(1);
  auto elems = box(field, bound);

  // forward: squares and a multiple always admit the witness m
  for (const QuadInt& alpha1 : elems) {
    for (const QuadInt& alpha2 : elems) {
      QuadInt a1 = alpha1 * alpha1, a2 = alpha2 * alpha2;
      if (a1 == a2) continue;
      for (const QuadInt& s : elems) {
        if (s.is_zero()) continue;
        for (const QuadInt& k : elems) {
          QuadInt t = s * k;
          bool ok = true;
          std::string why;
          try {
            QuadInt m = relation_m_witness(alpha1, alpha2, s, t);
            ok = relation_f(a1, a2, s, t, m).is_zero();
          } catch (const std::exception& e) {
            ok = false;
            why = e.what();
          }
          tally.check(ok, [&] {
            return "forward alpha1=" + alpha1.str() + " alpha2=" + alpha2.str() +
                   " S=" + s.str() + " T=" + t.str() + (why.empty() ? "" : " (" + why + ")");
          });
        }
      }
    }
  }

  // backward: every zero of f decodes to two squares and a quotient. The
  // outer loop shards across workers; counterexamples merge by scan rank so
  // the report is independent of the partitioning.
  struct Shard {
    std::uint64_t cases = 0;
    std::uint64_t violations = 0;
    std::optional<std::pair<std::uint64_t, std::string>> first;
  };
  unsigned workers = std::max(1u, p.threads);
  std::vector<Shard> shards(workers);
  auto run_shard = [&](unsigned w) {
    Shard& shard = shards[w];
    const std::uint64_t size = elems.size();
    for (std::size_t si = w; si < elems.size(); si += workers) {
      const QuadInt& s = elems[si];
      if (s.is_zero()) continue;
      QuadInt s2 = s * s;
      QuadInt s4 = s2 * s2;
      std::uint64_t rank = si * size * size * size * size;
      for (const QuadInt& t : elems) {
        for (const QuadInt& m : elems) {
          QuadInt u = t - m * s;
          QuadInt u2 = u * u;
          QuadInt u4 = u2 * u2;
          QuadInt s2u2 = s2 * u2;
          for (const QuadInt& a1 : elems) {
            for (const QuadInt& a2 : elems) {
              ++rank;
              if (a1 == a2) continue;
              QuadInt diff = a1 - a2;
              QuadInt f = u4 - BigInt(2) * ((a1 + a2) * s2u2) + (diff * diff) * s4;
              bool ok = true;
              std::string why;
              if (f.is_zero()) {
                try {
                  RelationDecode dec = relation_decode(a1, a2, s, t, m);
                  ok = dec.root1 * dec.root1 == a1 && dec.root2 * dec.root2 == a2 &&
                       dec.quotient * s == t;
                } catch (const std::exception& e) {
                  ok = false;
                  why = e.what();
                }
              }
              ++shard.cases;
              if (!ok && !shard.first) {
                ++shard.violations;
                shard.first = {rank, "backward A1=" + a1.str() + " A2=" + a2.str() +
                                         " S=" + s.str() + " T=" + t.str() + " m=" + m.str() +
                                         (why.empty() ? "" : " (" + why + ")")};
              } else if (!ok) {
                ++shard.violations;
              }
            }
          }
        }
      }
    }
  };
  if (workers == 1) {
    run_shard(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(run_shard, w);
    for (std::thread& th : pool) th.join();
  }
  std::optional<std::pair<std::uint64_t, std::string>> best;
  for (const Shard& shard : shards) {
    report.cases += shard.cases;
    report.violations += shard.violations;
    if (shard.first && (!best || shard.first->first < best->first)) best = shard.first;
  }
  if (best && !report.counterexample) report.counterexample = best->second;
  return report;
}

SuiteReport suite_lemma32(const SuiteParams& p) {
  long bound = p.box ? p.box : 6;
  SuiteReport report{.name = "lemma32", .params = "box=" + std::to_string(bound)};
  Tally tally{report};
  QuadField field(1);
  auto elems = box(field, bound);
  for (const QuadInt& x : elems) {
    for (const QuadInt& y : elems) {
      QuadInt value = x * x + BigInt(2) * (y * y);
      bool expect_zero = x.is_zero() && y.is_zero();
      tally.check(value.is_zero() == expect_zero,
                  [&] { return "x=" + x.str() + " y=" + y.str(); });
    }
  }
  // three-term weighted extension fails: a^2 + 2b^2 + 4c^2 has the nonzero
  // zero (2i, 0, 1), pinning the pairwise-combination design
  QuadInt a = QuadInt::element(field, 0, 2), b = QuadInt::zero(field),
          c = QuadInt::integer(field, 1);
  QuadInt probe = a * a + BigInt(2) * (b * b) + BigInt(4) * (c * c);
  tally.check(probe.is_zero(), [&] { return "three-term probe (2w, 0, 1) not zero"; });
  report.findings.push_back("three-term counterexample (2w, 0, 1) confirmed: a^2+2b^2+4c^2 = 0");
  return report;
}

SuiteReport suite_lemma33(const SuiteParams& p) {
  long bound = p.box ? p.box : 4;
  SuiteReport report{.name = "lemma33",
                     .params = "t=" + std::to_string(p.t_lo) + ".." + std::to_string(p.t_hi) +
                               " budget=" + std::to_string(p.budget) +
                               " refute-box=" + std::to_string(bound)};
  Tally tally{report};
  for (std::int64_t ti = p.t_lo; ti <= p.t_hi; ++ti) {
    BigInt t(ti);
    IntegralitySearch search = integrality_witness(t, p.budget);
    if (search.status == SearchStatus::found) {
      const IntegralityWitness& w = *search.witness;
      tally.check(true, [] { return std::string(); });
      report.findings.push_back("t=" + t.str() + ": pell indices (" +
                                std::to_string(w.pell_index_vy) + ", " +
                                std::to_string(w.pell_index_x) + "), v=" + fmt_big(w.v) +
                                " x=" + fmt_big(w.x) + " y=" + fmt_big(w.y));
    } else if (search.status == SearchStatus::budget_exceeded) {
      ++report.cases;
      report.findings.push_back("t=" + t.str() + ": budget exceeded (" + search.note + ")");
    } else {
      ++report.cases;
      report.findings.push_back("t=" + t.str() + ": no witness in period (" + search.note + ")");
    }
  }
  QuadField field(1);
  const QuadInt gaussian_ts[] = {
      QuadInt::element(field, 0, 1),   // i
      QuadInt::element(field, 0, -1),  // -i
      QuadInt::element(field, 1, 1),   // 1+i
      QuadInt::element(field, 0, 2),   // 2i
  };
  for (const QuadInt& t : gaussian_ts) {
    bool refuted = integrality_refute_box(t, bound);
    tally.check(refuted, [&] { return "witness found for non-integer t=" + t.str(); });
    if (refuted) {
      report.findings.push_back("refuted t=" + t.str() + " within box " +
                                std::to_string(bound));
    }
  }
  return report;
}

SuiteReport suite_lemma34(const SuiteParams& p) {
  long bound = p.box ? p.box : 3;
  SuiteReport report{.name = "lemma34",
                     .params = "|m|<=1000 box=" + std::to_string(bound)};
  Tally tally{report};
  for (int m = -1000; m <= 1000; ++m) {
    if (m == 0) continue;
    bool ok = true;
    try {
      auto [r, s] = nonzero_witness(BigInt(m));
      ok = (2 * r + 1) * (3 * s + 1) == m;
    } catch (const std::exception&) {
      ok = false;
    }
    tally.check(ok, [&] { return "m=" + std::to_string(m); });
  }
  QuadField field(1);
  auto elems = box(field, bound);
  QuadInt one = QuadInt::integer(field, 1);
  for (const QuadInt& r : elems) {
    for (const QuadInt& s : elems) {
      QuadInt value = (BigInt(2) * r + one) * (BigInt(3) * s + one);
      tally.check(!value.is_zero(), [&] { return "r=" + r.str() + " s=" + s.str(); });
    }
  }
  return report;
}

SuiteReport suite_pell(const SuiteParams&) {
  SuiteReport report{.name = "pell", .params = "count=50"};
  Tally tally{report};
  auto pairs = pell_pairs(51);
  tally.check(pairs[0].x == 1 && pairs[0].y == 0, [] { return std::string("index 0"); });
  for (const PellPair& pp : pairs) {
    tally.check(pp.x * pp.x - 3 * pp.y * pp.y == 1 && pp.x >= 0 && pp.y >= 0,
                [&] { return "index " + std::to_string(pp.index); });
  }
  for (std::size_t i = 0; i <= 30; ++i) {
    bool x_even = pairs[i].x % 2 == 0;
    tally.check(x_even == (i % 2 == 1), [&] { return "parity at index " + std::to_string(i); });
  }
  // membership agreement: every listed Y maps back to its X, every value up
  // to Y_10 answers membership exactly, and the neighbors of each listed Y
  // agree with membership
  std::set<BigInt> members;
  for (const PellPair& pp : pairs) members.insert(pp.y);
  for (const PellPair& pp : pairs) {
    auto x = pell_is_y(pp.y);
    tally.check(x && *x == pp.x, [&] { return "is_y at index " + std::to_string(pp.index); });
    for (int delta : {-1, 1}) {
      BigInt probe = pp.y + delta;
      if (probe < 0) continue;
      bool expect = members.count(probe) > 0;
      tally.check(pell_is_y(probe).has_value() == expect,
                  [&] { return "neighbor " + probe.str(); });
    }
  }
  for (BigInt y = 0; y <= pairs[10].y; ++y) {
    bool expect = members.count(y) > 0;
    tally.check(pell_is_y(y).has_value() == expect, [&] { return "exhaustive Y=" + y.str(); });
  }
  // exhausted-period soundness: rescan the full cycle and confirm no hit
  {
    BigInt modulus = 5;
    auto never = [](const BigInt& xr, const BigInt& yr) { return xr == 0 && yr == 0; };
    SearchOutcome outcome = period_search(modulus, never, PellParity::any, 1000000);
    bool sound = outcome.status == SearchStatus::exhausted_period;
    if (sound) {
      BigInt xr = 1, yr = 0;
      for (std::size_t i = 0; i < outcome.steps; ++i) {
        if (never(xr, yr)) sound = false;
        BigInt nx = mod_floor(2 * xr + 3 * yr, modulus);
        yr = mod_floor(xr + 2 * yr, modulus);
        xr = nx;
      }
    }
    tally.check(sound, [] { return std::string("exhausted-period rescan (mod 5)"); });
  }
  return report;
}

SuiteReport suite_pipeline(const SuiteParams& p) {
  SuiteReport report{.name = "pipeline",
                     .params = "budget=" + std::to_string(p.budget) +
                               " seed=" + std::to_string(p.seed)};
  Tally tally{report};

  // end-to-end lift on the square instance
  SparsePoly square = parse_poly("z0 - z1^2");
  ReductionConfig cfg{1, Encoding::repaired};
  {
    WitnessBundle bundle = lift_witness(square, 1, {-1}, cfg, p.budget);
    bool ok = bundle.verified && bundle.derived.at("y") == -4 &&
              bundle.derived.at("S") == -1 && bundle.values.at("t") == -4 &&
              bundle.derived.at("tau") == 15;
    tally.check(ok, [] { return std::string("n=1 lift"); });
    Reduction red = reduce(square, 1, cfg);
    tally.check(verify_bundle(red, bundle), [] { return std::string("n=1 verify"); });
    // damaged bundles must fail
    WitnessBundle broken = bundle;
    broken.values["m"] += 1;
    broken.derived.clear();
    tally.check(!verify_bundle(red, broken), [] { return std::string("damaged m accepted"); });
  }
  {
    ReductionConfig paper_cfg{1, Encoding::paper};
    bool ok = false;
    std::string message;
    try {
      lift_witness(square, 1, {-1}, paper_cfg, p.budget);
    } catch (const NoAdmissibleT& e) {
      message = e.what();
      ok = message.rfind("no admissible t: |t*y^n| = 16 > |S| = 1", 0) == 0;
    }
    tally.check(ok, [&] { return "paper encoding diagnostic: '" + message + "'"; });
    report.findings.push_back("paper encoding: " + message);
  }
  {
    // unknown count at the full size
    std::string text = "z0";
    for (int k = 1; k <= 10; ++k) text += " - z" + std::to_string(k) + "^2";
    SparsePoly p10 = parse_poly(text);
    Reduction red = reduce(p10, 0, ReductionConfig{10, Encoding::repaired});
    tally.check(red.unknowns.size() == 20 && red.circuit.variables().size() == 20,
                [&] { return "unknowns: " + std::to_string(red.unknowns.size()); });
    report.findings.push_back("n=10 degree bound: " + degree_bound(red.circuit).str());
    std::string once = red.circuit.emit();
    tally.check(Circuit::parse(once).emit() == once,
                [] { return std::string("circuit file round-trip"); });
  }
  {
    Reduction red = reduce(square, 1, cfg);
    report.findings.push_back("n=1 degree bound: " + degree_bound(red.circuit).str());
  }

  // tree_combine preserves zero sets over Z[i]
  {
    QuadField field(1);
    Circuit c1 = poly_to_circuit(parse_poly("x - y"));
    Circuit c2 = poly_to_circuit(parse_poly("x*y - 1"));
    CombineReport combined = tree_combine({c1, c2});
    for (const QuadInt& x : box(field, 3)) {
      for (const QuadInt& y : box(field, 3)) {
        std::map<std::string, QuadInt> assign{{"x", x}, {"y", y}};
        bool both = eval_quad(c1, field, assign).is_zero() &&
                    eval_quad(c2, field, assign).is_zero();
        bool whole = eval_quad(combined.circuit, field, assign).is_zero();
        tally.check(both == whole, [&] { return "combine at x=" + x.str() + " y=" + y.str(); });
      }
    }
    tally.check(combined.bound == 4, [&] { return "combine bound " + combined.bound.str(); });
  }

  // flattening preserves solution sets pointwise
  for (const char* text : {"z1^3 - 2", "x^2*y^2 - 1", "x^3*y^2 - x*y + 5", "x + y - 3"}) {
    SparsePoly poly = parse_poly(text);
    std::vector<SparsePoly> system = skolem_flatten(poly);
    for (const SparsePoly& q : system) {
      tally.check(q.total_degree() <= 2,
                  [&] { return std::string("flatten degree: ") + text; });
    }
    const std::vector<std::string>& ext = system.back().manifest();
    const std::vector<std::string>& orig = poly.manifest();
    std::vector<BigInt> point(orig.size(), -3);
    bool done = false;
    while (!done) {
      std::map<std::string, BigInt> assign;
      for (std::size_t i = 0; i < orig.size(); ++i) assign[orig[i]] = point[i];
      // unique extension: each definition fixes its fresh variable
      for (std::size_t i = 0; i + 1 < system.size(); ++i) {
        const SparsePoly& def = system[i];
        std::string fresh = ext[orig.size() + i];
        BigInt value = 0;
        for (const auto& [e, c] : def.terms()) {
          BigInt term = c;
          bool is_fresh = false;
          for (std::size_t k = 0; k < e.size(); ++k) {
            if (e[k] == 0) continue;
            if (ext[k] == fresh) {
              is_fresh = true;
              break;
            }
            for (std::uint32_t rep = 0; rep < e[k]; ++rep) term *= assign.at(ext[k]);
          }
          if (!is_fresh) value -= term;
        }
        assign[fresh] = value;
      }
      bool orig_zero = poly.eval(assign) == 0;
      bool all_zero = true;
      for (const SparsePoly& q : system) all_zero = all_zero && q.eval(assign) == 0;
      tally.check(orig_zero == all_zero, [&] {
        std::string s = std::string("flatten at ") + text + " point (";
        for (std::size_t i = 0; i < point.size(); ++i) {
          if (i) s += ",";
          s += point[i].str();
        }
        return s + ")";
      });
      std::size_t pos = point.size();
      while (pos > 0 && ++point[pos - 1] > 3) {
        point[pos - 1] = -3;
        --pos;
      }
      done = pos == 0;
    }
  }

  // expansion agrees with direct evaluation on seeded points
  {
    std::vector<Circuit> circuits;
    circuits.push_back(build_y(1));
    circuits.push_back(build_y(2));
    circuits.push_back(build_y(3));
    IntegralityTemplates plain = integrality_templates(0);
    IntegralityTemplates scaled = integrality_templates(2);
    circuits.push_back(plain.eq_main);
    circuits.push_back(plain.square_arg);
    circuits.push_back(scaled.eq_main);
    circuits.push_back(scaled.square_arg);
    {
      CircuitBuilder b;
      NodeId out = relation_f(b, b.variable("A1"), b.variable("A2"), b.variable("S"),
                              b.variable("T"), b.variable("m"));
      circuits.push_back(std::move(b).take(out));
    }
    circuits.push_back(poly_to_circuit(parse_poly("3*x*y + 2")));
    circuits.push_back(conj_combine(poly_to_circuit(parse_poly("x - 1")),
                                    poly_to_circuit(parse_poly("y^2 - x"))));
    std::mt19937_64 rng(p.seed);
    std::uniform_int_distribution<int> pick(-9, 9);
    for (const Circuit& c : circuits) {
      ExpandOutcome expanded = expand(c, 100000);
      tally.check(expanded.poly.has_value(), [] { return std::string("expand budget"); });
      if (!expanded.poly) continue;
      tally.check(expanded.bound >= BigInt(expanded.poly->total_degree()),
                  [] { return std::string("degree bound below true degree"); });
      auto vars = c.variables();
      for (int trial = 0; trial < 100; ++trial) {
        std::map<std::string, BigInt> assign;
        for (const std::string& v : vars) assign[v] = pick(rng);
        tally.check(eval_int(c, assign) == expanded.poly->eval(assign),
                    [&] { return "expansion mismatch on trial " + std::to_string(trial); });
      }
    }
  }
  return report;
}

}  // namespace

std::string SuiteReport::text() const {
  std::ostringstream out;
  out << "suite: " << name << "\n";
  out << "params: " << params << "\n";
  out << "cases: " << cases << "\n";
  out << "violations: " << violations << "\n";
  if (counterexample) out << "counterexample: " << *counterexample << "\n";
  for (const std::string& f : findings) out << "finding: " << f << "\n";
  return out.str();
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"lemma21", "bound22", "thm12",   "lemma22",
                                              "lemma31", "lemma32", "lemma33", "lemma34",
                                              "pell",    "pipeline"};
  return names;
}

SuiteReport run_suite(const std::string& name, const SuiteParams& params) {
  auto start = std::chrono::steady_clock::now();
  SuiteReport report;
  if (name == "lemma21") report = suite_lemma21(params);
  else if (name == "bound22") report = suite_bound22(params);
  else if (name == "thm12") report = suite_thm12(params);
  else if (name == "lemma22") report = suite_lemma22(params);
  else if (name == "lemma31") report = suite_lemma31(params);
  else if (name == "lemma32") report = suite_lemma32(params);
  else if (name == "lemma33") report = suite_lemma33(params);
  else if (name == "lemma34") report = suite_lemma34(params);
  else if (name == "pell") report = suite_pell(params);
  else if (name == "pipeline") report = suite_pipeline(params);
  else throw UsageError("unknown suite '" + name + "'");
  report.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

}  // namespace diozi
