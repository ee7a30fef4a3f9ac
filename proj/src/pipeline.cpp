#include "diozi/pipeline.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "diozi/gadgets.hpp"

namespace diozi {

namespace {

const char* kWitnessOrder[] = {"m", "r", "s", "t", "v0", "x0", "y0", "v1", "x1", "y1"};

std::vector<std::string> unknown_names(unsigned n) {
  std::vector<std::string> names;
  for (unsigned k = 1; k <= n; ++k) names.push_back("z" + std::to_string(k));
  for (const char* w : kWitnessOrder) names.emplace_back(w);
  return names;
}

}  // namespace

std::string encoding_name(Encoding e) {
  return e == Encoding::repaired ? "repaired" : "paper";
}

Encoding parse_encoding(std::string_view name) {
  if (name == "repaired") return Encoding::repaired;
  if (name == "paper") return Encoding::paper;
  throw UsageError("unknown encoding '" + std::string(name) + "' (repaired|paper)");
}

Reduction reduce(const SparsePoly& p, const BigInt& a, const ReductionConfig& cfg) {
  unsigned n = cfg.n;
  if (n < 1) throw UsageError("reduce: n must be >= 1");
  std::set<std::string> allowed;
  for (unsigned k = 0; k <= n; ++k) allowed.insert("z" + std::to_string(k));
  for (const std::string& name : p.manifest()) {
    if (!allowed.count(name)) {
      throw UsageError("manifest mismatch: variable " + name + " not among z0..z" +
                       std::to_string(n));
    }
  }

  CircuitBuilder b;
  std::map<std::string, NodeId> landmarks;
  // Variables first, in manifest order, so emitted files list them up front.
  std::map<std::string, NodeId> var;
  for (const std::string& name : unknown_names(n)) var[name] = b.variable(name);

  NodeId two = b.constant(2);
  NodeId e1 = b.splice(poly_to_circuit(p, {{"z0", a}}));
  NodeId y = b.splice(build_y(n));
  NodeId yn = b.pow(y, n);
  NodeId yn1 = b.pow(y, n + 1);

  // S = sum_k z_k y^(n-k)
  std::optional<NodeId> s_acc;
  for (unsigned k = 1; k <= n; ++k) {
    NodeId zk = var.at("z" + std::to_string(k));
    NodeId term = k == n ? zk : b.mul(zk, b.pow(y, n - k));
    s_acc = s_acc ? b.add(*s_acc, term) : term;
  }
  NodeId s_node = *s_acc;
  NodeId tau = b.add(yn1, s_node);
  NodeId w = b.add(b.mul(b.mul(two, var.at("t")), tau), yn);

  IntegralityTemplates plain = integrality_templates(0);
  IntegralityTemplates scaled = integrality_templates(2 * n);

  NodeId e2 = b.splice(plain.eq_main,
                       {{"t", var.at("t")}, {"v", var.at("v0")}, {"y", var.at("y0")}});
  NodeId e3 = b.splice(scaled.eq_main,
                       {{"W", w}, {"yn", yn}, {"v", var.at("v1")}, {"y", var.at("y1")}});
  NodeId a1 = b.mul(b.constant(9),
                    b.splice(plain.square_arg,
                             {{"t", var.at("t")}, {"x", var.at("x0")}, {"y", var.at("y0")}}));
  NodeId a2 = b.splice(scaled.square_arg,
                       {{"W", w}, {"yn", yn}, {"x", var.at("x1")}, {"y", var.at("y1")}});

  NodeId zn = var.at("z" + std::to_string(n));
  NodeId prod = b.mul(b.mul(b.mul(zn, var.at("t")), var.at("v0")), var.at("v1"));
  NodeId tung = b.mul(b.add(b.mul(two, var.at("r")), b.constant(1)),
                      b.add(b.mul(b.constant(3), var.at("s")), b.constant(1)));
  NodeId e4 = b.sub(prod, tung);

  NodeId s_f = cfg.encoding == Encoding::repaired ? yn : b.mul(var.at("t"), yn);
  NodeId t_f = cfg.encoding == Encoding::repaired ? b.mul(var.at("t"), s_node) : s_node;
  NodeId e5 = relation_f(b, a1, a2, s_f, t_f, var.at("m"));

  NodeId f = e1;
  for (NodeId e : {e2, e3, e4, e5}) f = conj_combine(b, f, e);

  landmarks["E1"] = e1;
  landmarks["E2"] = e2;
  landmarks["E3"] = e3;
  landmarks["E4"] = e4;
  landmarks["E5"] = e5;
  landmarks["y"] = y;
  landmarks["yn"] = yn;
  landmarks["S"] = s_node;
  landmarks["tau"] = tau;
  landmarks["W"] = w;
  landmarks["A1"] = a1;
  landmarks["A2"] = a2;

  Reduction red{std::move(b).take(f), unknown_names(n), "z0", a, cfg, std::move(landmarks)};
  return red;
}

namespace {

struct DerivedValues {
  unsigned n;
  BigInt y, s, t, tau, w, a1, a2;
};

// Recomputes the shared intermediates from the raw witness values alone.
DerivedValues derive(const std::map<std::string, BigInt>& v) {
  unsigned n = 0;
  while (v.count("z" + std::to_string(n + 1))) ++n;
  if (n == 0) throw UsageError("bundle names no z variables");
  for (const char* w : kWitnessOrder) {
    if (!v.count(w)) throw UsageError(std::string("bundle is missing ") + w);
  }
  DerivedValues d;
  d.n = n;
  d.y = 2;
  for (unsigned k = 1; k <= n; ++k) d.y *= 3 * v.at("z" + std::to_string(k)) + 1;
  BigInt ypow = 1;  // y^(n-k) accumulated backwards
  d.s = 0;
  for (unsigned k = n; k >= 1; --k) {
    d.s += v.at("z" + std::to_string(k)) * ypow;
    ypow *= d.y;
  }
  // ypow is now y^n
  d.t = v.at("t");
  d.tau = ypow * d.y + d.s;
  d.w = 2 * d.t * d.tau + ypow;
  const BigInt &x0 = v.at("x0"), &y0 = v.at("y0"), &x1 = v.at("x1"), &y1 = v.at("y1");
  BigInt odd = 2 * d.t + 1;
  d.a1 = 9 * (3 * y0 * y0 * (odd - x0 * y0) * (odd - x0 * y0) + 1);
  BigInt u1 = d.w - x1 * y1 * ypow;
  d.a2 = 3 * y1 * y1 * u1 * u1 + ypow * ypow;
  return d;
}

}  // namespace

WitnessBundle lift_witness(const SparsePoly& p, const BigInt& a, const std::vector<BigInt>& zs,
                           const ReductionConfig& cfg, std::size_t budget) {
  unsigned n = cfg.n;
  if (zs.size() != n) {
    throw UsageError("expected " + std::to_string(n) + " witness values, got " +
                     std::to_string(zs.size()));
  }
  if (zs.back() == 0) throw UsageError("lift requires z" + std::to_string(n) + " != 0");
  std::map<std::string, BigInt> zmap{{"z0", a}};
  for (unsigned k = 1; k <= n; ++k) zmap["z" + std::to_string(k)] = zs[k - 1];
  {
    std::map<std::string, BigInt> restricted;
    for (const std::string& name : p.manifest()) {
      auto it = zmap.find(name);
      if (it == zmap.end()) {
        throw UsageError("manifest mismatch: variable " + name + " not among z0..z" +
                         std::to_string(n));
      }
      restricted[name] = it->second;
    }
    if (p.eval(restricted) != 0) throw UsageError("witness does not satisfy P(a, z) = 0");
  }

  BigInt y = 2;
  for (const BigInt& z : zs) y *= 3 * z + 1;
  BigInt yn = 1;
  for (unsigned k = 0; k < n; ++k) yn *= y;
  BigInt s = 0;
  {
    BigInt ypow = 1;
    for (unsigned k = n; k >= 1; --k) {
      s += zs[k - 1] * ypow;
      ypow *= y;
    }
  }
  BigInt t = yn;  // makes tau = t (y + sum z_k / y^k) integral by construction
  BigInt tau = yn * y + s;

  BigInt quot;  // T_f / S_f
  if (cfg.encoding == Encoding::paper) {
    BigInt tyn = t * yn;
    BigInt abs_s = s < 0 ? BigInt(-s) : s;
    BigInt abs_tyn = tyn < 0 ? BigInt(-tyn) : tyn;
    if (s != 0 && abs_s < abs_tyn) {
      throw NoAdmissibleT("no admissible t: |t*y^n| = " + abs_tyn.str() + " > |S| = " +
                          abs_s.str() + ", so no nonzero t divides S through t*y^n");
    }
    if (s % tyn != 0) {
      throw UsageError("paper encoding: t*y^n does not divide S for t = y^n");
    }
    quot = s / tyn;
  } else {
    quot = t * s / yn;  // = S exactly, since t = y^n
  }

  auto search0 = integrality_witness(t, budget);
  if (search0.status == SearchStatus::budget_exceeded) {
    throw BudgetExceeded("witness search for t: " + search0.note);
  }
  if (search0.status == SearchStatus::exhausted_period) {
    throw SearchExhausted("witness search for t: " + search0.note);
  }
  auto search1 = integrality_witness(tau, budget);
  if (search1.status == SearchStatus::budget_exceeded) {
    throw BudgetExceeded("witness search for tau: " + search1.note);
  }
  if (search1.status == SearchStatus::exhausted_period) {
    throw SearchExhausted("witness search for tau: " + search1.note);
  }
  const IntegralityWitness& w0 = *search0.witness;
  const IntegralityWitness& w1 = *search1.witness;

  BigInt root1 = 3 * w0.square_x;        // A1 = (3 X0')^2
  BigInt root2 = yn * w1.square_x;       // A2 = (y^n X1')^2
  BigInt m = quot - root1 - root2;
  auto [r, sw] = nonzero_witness(zs.back() * t * w0.v * w1.v);

  WitnessBundle bundle;
  bundle.parameter = a;
  for (unsigned k = 1; k <= n; ++k) bundle.values["z" + std::to_string(k)] = zs[k - 1];
  bundle.values["m"] = m;
  bundle.values["r"] = r;
  bundle.values["s"] = sw;
  bundle.values["t"] = t;
  bundle.values["v0"] = w0.v;
  bundle.values["x0"] = w0.x;
  bundle.values["y0"] = w0.y;
  bundle.values["v1"] = w1.v;
  bundle.values["x1"] = w1.x;
  bundle.values["y1"] = w1.y;
  bundle.derived["y"] = y;
  bundle.derived["S"] = s;
  bundle.derived["tau"] = tau;
  bundle.derived["A1"] = root1 * root1;
  bundle.derived["A2"] = root2 * root2;
  BigInt mod_t = 4 * (2 * t + 1) * (2 * t + 1) + 2;      // 2M for the t search
  BigInt mod_tau = 4 * (2 * tau + 1) * (2 * tau + 1) + 2;
  bundle.provenance.push_back(
      "t = y^" + std::to_string(n) + " search: pell indices (" +
      std::to_string(w0.pell_index_vy) + ", " + std::to_string(w0.pell_index_x) +
      "), stage-1 congruence modulus " + mod_t.str());
  bundle.provenance.push_back(
      "tau search: pell indices (" + std::to_string(w1.pell_index_vy) + ", " +
      std::to_string(w1.pell_index_x) + "), stage-1 congruence modulus " + mod_tau.str());

  Reduction red = reduce(p, a, cfg);
  if (!verify_bundle(red, bundle)) {
    throw InternalError("lifted bundle fails verification");
  }
  bundle.verified = true;
  return bundle;
}

bool verify_bundle(const Circuit& f, const WitnessBundle& bundle) {
  DerivedValues d = derive(bundle.values);
  if (mod_floor(d.a1, 3) != 0 || mod_floor(d.a2, 3) != 1) return false;
  for (const auto& [name, value] :
       std::initializer_list<std::pair<const char*, const BigInt*>>{{"y", &d.y},
                                                                    {"S", &d.s},
                                                                    {"tau", &d.tau},
                                                                    {"A1", &d.a1},
                                                                    {"A2", &d.a2}}) {
    auto it = bundle.derived.find(name);
    if (it != bundle.derived.end() && it->second != *value) return false;
  }
  std::map<std::string, BigInt> assignment = bundle.values;
  assignment["z0"] = bundle.parameter;
  for (const std::string& name : f.variables()) {
    if (!assignment.count(name)) {
      throw UsageError("manifest mismatch: bundle has no value for " + name);
    }
  }
  return eval_int(f, assignment) == 0;
}

bool verify_bundle(const Reduction& reduction, const WitnessBundle& bundle) {
  if (reduction.parameter_value != bundle.parameter) {
    throw UsageError("manifest mismatch: reduction parameter " +
                     reduction.parameter_value.str() + " vs bundle " + bundle.parameter.str());
  }
  return verify_bundle(reduction.circuit, bundle);
}

std::string WitnessBundle::emit() const {
  std::ostringstream out;
  out << "# parameter\n";
  out << "z0 = " << parameter.str() << "\n";
  out << "# witness\n";
  unsigned n = 0;
  while (values.count("z" + std::to_string(n + 1))) ++n;
  for (unsigned k = 1; k <= n; ++k) {
    const std::string name = "z" + std::to_string(k);
    out << name << " = " << values.at(name).str() << "\n";
  }
  for (const char* name : kWitnessOrder) {
    auto it = values.find(name);
    if (it != values.end()) out << name << " = " << it->second.str() << "\n";
  }
  out << "# derived\n";
  for (const char* name : {"y", "S", "tau", "A1", "A2"}) {
    auto it = derived.find(name);
    if (it != derived.end()) out << name << " = " << it->second.str() << "\n";
  }
  if (!provenance.empty()) {
    out << "# provenance\n";
    for (const std::string& line : provenance) out << "# " << line << "\n";
  }
  out << "verified: " << (verified ? "true" : "false") << "\n";
  return out.str();
}

WitnessBundle WitnessBundle::parse(std::string_view text) {
  WitnessBundle bundle;
  std::istringstream in{std::string(text)};
  std::string line;
  int lineno = 0;
  bool saw_param = false;
  const std::set<std::string> derived_names{"y", "S", "tau", "A1", "A2"};
  while (std::getline(in, line)) {
    ++lineno;
    std::string_view sv = line;
    if (auto hash = sv.find('#'); hash != std::string_view::npos) sv = sv.substr(0, hash);
    while (!sv.empty() && std::isspace(static_cast<unsigned char>(sv.back()))) sv.remove_suffix(1);
    while (!sv.empty() && std::isspace(static_cast<unsigned char>(sv.front()))) sv.remove_prefix(1);
    if (sv.empty()) continue;
    if (sv.rfind("verified:", 0) == 0) {
      std::string flag(sv.substr(9));
      flag.erase(0, flag.find_first_not_of(" \t"));
      if (flag == "true") bundle.verified = true;
      else if (flag == "false") bundle.verified = false;
      else throw UsageError("bundle line " + std::to_string(lineno) + ": bad verified flag");
      continue;
    }
    auto eq = sv.find('=');
    if (eq == std::string_view::npos) {
      throw UsageError("bundle line " + std::to_string(lineno) + ": expected 'name = value'");
    }
    std::string name(sv.substr(0, eq));
    name.erase(name.find_last_not_of(" \t") + 1);
    BigInt value = parse_bigint(sv.substr(eq + 1));
    if (name == "z0") {
      bundle.parameter = value;
      saw_param = true;
    } else if (derived_names.count(name)) {
      bundle.derived[name] = value;
    } else {
      bundle.values[name] = value;
    }
  }
  if (!saw_param) throw UsageError("bundle has no parameter line (z0 = ...)");
  return bundle;
}

namespace {

std::uint32_t vec_degree(const ExpVec& e) {
  std::uint32_t d = 0;
  for (std::uint32_t x : e) d += x;
  return d;
}

}  // namespace

std::vector<SparsePoly> skolem_flatten(const SparsePoly& p) {
  if (p.total_degree() <= 2) return {p};
  const std::vector<std::string>& base = p.manifest();
  std::set<std::string> used(base.begin(), base.end());
  int counter = 1;
  auto fresh = [&]() {
    for (;;) {
      std::string cand = "u" + std::to_string(counter++);
      if (used.insert(cand).second) return cand;
    }
  };

  // aux variable per monomial subproduct (exponent vector over the base
  // manifest); introduced on first need, defined by one degree-2 equation
  struct Def {
    std::string name;
    std::string f1, f2;  // each an existing variable or an earlier aux
  };
  std::map<ExpVec, std::string> aux;
  std::vector<Def> defs;

  auto split = [&](const ExpVec& e) {
    std::uint32_t take = (vec_degree(e) + 1) / 2;
    ExpVec first(e.size(), 0), second = e;
    for (std::size_t i = 0; i < e.size() && take > 0; ++i) {
      std::uint32_t grab = std::min(e[i], take);
      first[i] = grab;
      second[i] -= grab;
      take -= grab;
    }
    return std::pair{first, second};
  };

  // name standing for the monomial: the variable itself at degree 1, an aux
  // variable (defined recursively) at degree >= 2
  auto name_for = [&](auto&& self, const ExpVec& e) -> std::string {
    std::uint32_t d = vec_degree(e);
    if (d == 1) {
      for (std::size_t i = 0; i < e.size(); ++i) {
        if (e[i] == 1) return base[i];
      }
    }
    if (auto it = aux.find(e); it != aux.end()) return it->second;
    auto [w1, w2] = split(e);
    std::string f1 = self(self, w1);
    std::string f2 = self(self, w2);
    std::string name = fresh();
    aux.emplace(e, name);
    defs.push_back({name, f1, f2});
    return name;
  };

  struct FlatTerm {
    BigInt coeff;
    std::vector<std::string> factors;  // at most two
  };
  std::vector<FlatTerm> main_terms;
  for (const auto& [e, c] : p.terms()) {
    std::uint32_t d = vec_degree(e);
    if (d <= 2) {
      FlatTerm t{c, {}};
      for (std::size_t i = 0; i < e.size(); ++i) {
        for (std::uint32_t k = 0; k < e[i]; ++k) t.factors.push_back(base[i]);
      }
      main_terms.push_back(std::move(t));
    } else {
      auto [w1, w2] = split(e);
      main_terms.push_back({c, {name_for(name_for, w1), name_for(name_for, w2)}});
    }
  }

  std::vector<std::string> manifest = base;
  for (const Def& d : defs) manifest.push_back(d.name);

  auto mono = [&](const std::vector<std::string>& factors) {
    ExpVec e(manifest.size(), 0);
    for (const std::string& f : factors) {
      auto it = std::find(manifest.begin(), manifest.end(), f);
      ++e[static_cast<std::size_t>(it - manifest.begin())];
    }
    return e;
  };

  std::vector<SparsePoly> out;
  for (const Def& d : defs) {
    SparsePoly def(manifest);
    def.add_term(mono({d.name}), 1);
    def.add_term(mono({d.f1, d.f2}), -1);
    out.push_back(std::move(def));
  }
  SparsePoly main(manifest);
  for (const FlatTerm& t : main_terms) main.add_term(mono(t.factors), t.coeff);
  out.push_back(std::move(main));
  return out;
}

CombineReport tree_combine(const std::vector<Circuit>& eqs) {
  if (eqs.empty()) throw UsageError("tree_combine: empty equation list");
  Circuit acc = eqs.front();
  for (std::size_t i = 1; i < eqs.size(); ++i) acc = conj_combine(acc, eqs[i]);
  BigInt bound = degree_bound(acc);
  return {std::move(acc), std::move(bound)};
}

}  // namespace diozi
