#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "diozi/circuit.hpp"
#include "diozi/errors.hpp"
#include "diozi/gadgets.hpp"
#include "diozi/pell.hpp"
#include "diozi/pipeline.hpp"
#include "diozi/poly.hpp"
#include "diozi/quadint.hpp"
#include "diozi/suites.hpp"

namespace {

using namespace diozi;

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void spill(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw UsageError("cannot write " + path);
  out << content;
}

std::vector<std::int64_t> parse_d_list(const std::string& text) {
  std::vector<std::int64_t> ds;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) ds.push_back(std::stoll(item));
  }
  if (ds.empty()) throw UsageError("empty d list");
  return ds;
}

std::vector<QuadInt> parse_literals(const QuadField& field, const std::string& text) {
  std::vector<QuadInt> xs;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ';')) {
    if (item.find_first_not_of(" \t") == std::string::npos) continue;
    xs.push_back(parse_quad(field, item));
  }
  if (xs.empty()) throw UsageError("no literals given");
  return xs;
}

std::vector<BigInt> parse_int_list(const std::string& text) {
  std::vector<BigInt> values;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) values.push_back(parse_bigint(item));
  return values;
}

struct Options {
  std::uint64_t seed = 1;
  unsigned threads = 1;
  std::size_t budget = 100000;
};

int cmd_reduce(const std::string& poly_path, const std::string& out_path, unsigned n,
               const std::string& param, const std::string& encoding) {
  SparsePoly p = parse_poly(slurp(poly_path));
  ReductionConfig cfg{n, parse_encoding(encoding)};
  Reduction red = reduce(p, parse_bigint(param), cfg);
  spill(out_path, red.circuit.emit());
  std::cout << "unknowns: " << red.unknowns.size() << "\n";
  std::string names;
  for (const std::string& u : red.unknowns) {
    if (!names.empty()) names += " ";
    names += u;
  }
  std::cout << "manifest: " << names << "\n";
  std::cout << "parameter: " << red.parameter << " = " << red.parameter_value.str() << "\n";
  std::cout << "encoding: " << encoding_name(cfg.encoding) << "\n";
  std::cout << "degree bound: " << degree_bound(red.circuit).str() << "\n";
  std::cout << "nodes: " << red.circuit.nodes().size() << "\n";
  return 0;
}

int cmd_lift(const std::string& poly_path, const std::string& out_path, unsigned n,
             const std::string& param, const std::string& witness, const std::string& encoding,
             std::size_t budget) {
  SparsePoly p = parse_poly(slurp(poly_path));
  ReductionConfig cfg{n, parse_encoding(encoding)};
  std::vector<BigInt> zs = parse_int_list(witness);
  WitnessBundle bundle = lift_witness(p, parse_bigint(param), zs, cfg, budget);
  spill(out_path, bundle.emit());
  std::cout << "verified: " << (bundle.verified ? "true" : "false") << "\n";
  for (const std::string& line : bundle.provenance) std::cout << line << "\n";
  return bundle.verified ? 0 : 1;
}

int cmd_verify_files(const std::string& circuit_path, const std::string& bundle_path) {
  Circuit f = Circuit::parse(slurp(circuit_path));
  WitnessBundle bundle = WitnessBundle::parse(slurp(bundle_path));
  bool ok = verify_bundle(f, bundle);
  std::cout << "verified: " << (ok ? "true" : "false") << "\n";
  return ok ? 0 : 1;
}

int cmd_suite(const std::string& name, const SuiteParams& params) {
  SuiteReport report = run_suite(name, params);
  std::cout << report.text();
  std::cerr << "wall: " << report.wall_seconds << "s\n";
  if (report.violations > 0) return 4;
  for (const std::string& f : report.findings) {
    if (f.find("budget exceeded") != std::string::npos) return 3;
  }
  return 0;
}

int cmd_check_rational(std::int64_t d, const std::string& literals) {
  QuadField field(d);
  std::vector<QuadInt> xs = parse_literals(field, literals);
  QuadRat value = integrality_value(field, xs);
  bool rational = value.is_rational();
  std::cout << (rational ? "RATIONAL" : "IRRATIONAL") << "\n";
  std::cout << "value: " << value.str() << "\n";
  return rational ? 0 : 1;
}

int cmd_is_square(std::int64_t d, const std::string& literal) {
  QuadField field(d);
  auto root = square_root(parse_quad(field, literal));
  if (root) {
    std::cout << root->str() << "\n";
    return 0;
  }
  std::cout << "NONE\n";
  return 1;
}

int cmd_pell(std::size_t count) {
  for (const PellPair& p : pell_pairs(count)) {
    std::cout << p.index << " " << p.x.str() << " " << p.y.str() << "\n";
  }
  return 0;
}

int cmd_combine(const std::string& op, std::int64_t d, const std::vector<std::string>& lits) {
  QuadField field(d);
  QuadInt value = QuadInt::zero(field);
  if (op == "lemma32") {
    if (lits.size() != 2) throw UsageError("lemma32 takes two literals: x y");
    QuadInt x = parse_quad(field, lits[0]), y = parse_quad(field, lits[1]);
    value = x * x + BigInt(2) * (y * y);
  } else if (op == "lemma31") {
    if (lits.size() != 5) throw UsageError("lemma31 takes five literals: A1 A2 S T m");
    std::vector<QuadInt> v;
    for (const std::string& l : lits) v.push_back(parse_quad(field, l));
    value = relation_f(v[0], v[1], v[2], v[3], v[4]);
  } else {
    throw UsageError("unknown combine op '" + op + "' (lemma31|lemma32)");
  }
  std::cout << "value: " << value.str() << "\n";
  std::cout << (value.is_zero() ? "ZERO" : "NONZERO") << "\n";
  return value.is_zero() ? 0 : 1;
}

int cmd_flatten(const std::string& poly_path, const std::string& out_path) {
  SparsePoly p = parse_poly(slurp(poly_path));
  std::vector<SparsePoly> system = skolem_flatten(p);
  std::string text = "# " + std::to_string(system.size()) + " equations, one per line\n";
  for (const SparsePoly& q : system) text += q.emit() + "\n";
  if (out_path.empty()) {
    std::cout << text;
  } else {
    spill(out_path, text);
    std::cout << "wrote " << system.size() << " equations\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"reduction compiler and verification lab for diophantine equations over Z[i]"};
  app.require_subcommand(1);
  app.fallthrough();

  Options opt;
  app.add_option("--seed", opt.seed, "seed for randomized evaluation points");
  app.add_option("--threads", opt.threads, "worker thread cap for sweeps");
  app.add_option("--budget", opt.budget, "step limit for witness searches");

  auto* reduce_cmd = app.add_subcommand("reduce", "compile P(z0..zn) into a single circuit F");
  unsigned n = 10;
  std::string param = "0", encoding = "repaired", poly_path, out_path = "F.circ";
  reduce_cmd->add_option("--n", n, "number of z unknowns");
  reduce_cmd->add_option("--param", param, "value of the parameter z0");
  reduce_cmd->add_option("--encoding", encoding, "repaired|paper");
  reduce_cmd->add_option("poly", poly_path, "polynomial file")->required();
  reduce_cmd->add_option("-o,--output", out_path, "circuit output file");

  auto* lift_cmd = app.add_subcommand("lift", "lift a Z-witness of P to an assignment of F");
  unsigned lift_n = 10;
  std::string lift_param = "0", lift_encoding = "repaired", lift_poly, lift_out = "W.bundle";
  std::string witness;
  lift_cmd->add_option("--n", lift_n, "number of z unknowns");
  lift_cmd->add_option("--param", lift_param, "value of the parameter z0");
  lift_cmd->add_option("--encoding", lift_encoding, "repaired|paper");
  lift_cmd->add_option("--witness", witness, "comma separated z1..zn")->required();
  lift_cmd->add_option("poly", lift_poly, "polynomial file")->required();
  lift_cmd->add_option("-o,--output", lift_out, "bundle output file");

  auto* verify_cmd = app.add_subcommand("verify", "verify a bundle against a circuit, or run a suite");
  std::string suite_name, d_list = "1,2,3,5,6,7,11,13", t_range = "0..3";
  long box_bound = 0;
  unsigned suite_n = 2;
  std::vector<std::string> verify_files;
  verify_cmd->add_option("--suite", suite_name, "property suite name");
  verify_cmd->add_option("--d", d_list, "comma separated squarefree d values");
  verify_cmd->add_option("--box", box_bound, "box bound for exhaustive sweeps");
  verify_cmd->add_option("--n", suite_n, "tuple length for the integrality sweeps");
  verify_cmd->add_option("--t", t_range, "t range lo..hi for witness searches");
  verify_cmd->add_option("files", verify_files, "F.circ W.bundle");

  auto* check_cmd = app.add_subcommand("check-rational", "integrality criterion for x1; x2; ...");
  std::int64_t check_d = 1;
  std::string check_lits;
  check_cmd->add_option("--d", check_d, "squarefree d")->required();
  check_cmd->add_option("literals", check_lits, "semicolon separated literals")->required();

  auto* square_cmd = app.add_subcommand("is-square", "square root in O_K, or NONE");
  std::int64_t square_d = 1;
  std::string square_lit;
  square_cmd->add_option("--d", square_d, "squarefree d")->required();
  square_cmd->add_option("literal", square_lit, "quadratic integer literal")->required();

  auto* pell_cmd = app.add_subcommand("pell", "emit index, X, Y of the fundamental recurrence");
  std::size_t count = 10;
  pell_cmd->add_option("--count", count, "number of pairs");

  auto* combine_cmd = app.add_subcommand("combine", "evaluate a gadget at given literals");
  std::string combine_op;
  std::int64_t combine_d = 1;
  std::vector<std::string> combine_lits;
  combine_cmd->add_option("--op", combine_op, "lemma31|lemma32")->required();
  combine_cmd->add_option("--d", combine_d, "squarefree d");
  combine_cmd->add_option("literals", combine_lits, "gadget arguments");

  auto* flatten_cmd = app.add_subcommand("flatten", "rewrite P as an equisolvable degree-2 system");
  std::string flatten_poly, flatten_out;
  flatten_cmd->add_option("poly", flatten_poly, "polynomial file")->required();
  flatten_cmd->add_option("-o,--output", flatten_out, "output file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (reduce_cmd->parsed()) return cmd_reduce(poly_path, out_path, n, param, encoding);
    if (lift_cmd->parsed()) {
      return cmd_lift(lift_poly, lift_out, lift_n, lift_param, witness, lift_encoding,
                      opt.budget);
    }
    if (verify_cmd->parsed()) {
      if (!suite_name.empty()) {
        SuiteParams params;
        params.ds = parse_d_list(d_list);
        params.box = box_bound;
        params.n = suite_n;
        params.budget = opt.budget;
        params.seed = opt.seed;
        params.threads = opt.threads;
        auto dots = t_range.find("..");
        if (dots == std::string::npos) {
          params.t_lo = params.t_hi = std::stoll(t_range);
        } else {
          params.t_lo = std::stoll(t_range.substr(0, dots));
          params.t_hi = std::stoll(t_range.substr(dots + 2));
        }
        return cmd_suite(suite_name, params);
      }
      if (verify_files.size() != 2) {
        throw UsageError("verify needs either --suite NAME or two files: F.circ W.bundle");
      }
      return cmd_verify_files(verify_files[0], verify_files[1]);
    }
    if (check_cmd->parsed()) return cmd_check_rational(check_d, check_lits);
    if (square_cmd->parsed()) return cmd_is_square(square_d, square_lit);
    if (pell_cmd->parsed()) return cmd_pell(count);
    if (combine_cmd->parsed()) return cmd_combine(combine_op, combine_d, combine_lits);
    if (flatten_cmd->parsed()) return cmd_flatten(flatten_poly, flatten_out);
  } catch (const NoAdmissibleT& e) {
    std::cout << e.what() << "\n";
    return 1;
  } catch (const SearchExhausted& e) {
    std::cout << "refuted: " << e.what() << "\n";
    return 1;
  } catch (const BudgetExceeded& e) {
    std::cerr << "budget exceeded: " << e.what() << "\n";
    return 3;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const InternalError& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 4;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 4;
  }
  return 2;
}
