#include "diozi/circuit.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>

#include "diozi/errors.hpp"

namespace diozi {

Circuit::Circuit(std::vector<Node> nodes, std::uint32_t output)
    : nodes_(std::move(nodes)), output_(output) {
  if (nodes_.empty()) throw UsageError("circuit has no nodes");
  if (output_ >= nodes_.size()) throw UsageError("circuit output out of range");
  for (std::uint32_t i = 0; i < nodes_.size(); ++i) {
    const Node& n = nodes_[i];
    switch (n.op) {
      case Op::constant:
      case Op::variable:
        break;
      case Op::add:
      case Op::sub:
      case Op::mul:
        if (n.a >= i || n.b >= i) throw UsageError("circuit node references a later node");
        break;
      case Op::pow:
        if (n.a >= i) throw UsageError("circuit node references a later node");
        if (n.exp < 1 || n.exp > 64) throw UsageError("pow exponent out of range");
        break;
    }
  }
}

std::vector<std::string> Circuit::variables() const {
  std::set<std::string, NaturalLess> names;
  for (const Node& n : nodes_) {
    if (n.op == Op::variable) names.insert(n.name);
  }
  return {names.begin(), names.end()};
}

std::string Circuit::emit() const {
  std::string out;
  for (std::uint32_t i = 0; i < nodes_.size(); ++i) {
    const Node& n = nodes_[i];
    out += "n" + std::to_string(i) + " = ";
    switch (n.op) {
      case Op::constant: out += "const " + n.value.str(); break;
      case Op::variable: out += "var " + n.name; break;
      case Op::add: out += "add n" + std::to_string(n.a) + " n" + std::to_string(n.b); break;
      case Op::sub: out += "sub n" + std::to_string(n.a) + " n" + std::to_string(n.b); break;
      case Op::mul: out += "mul n" + std::to_string(n.a) + " n" + std::to_string(n.b); break;
      case Op::pow: out += "pow n" + std::to_string(n.a) + " " + std::to_string(n.exp); break;
    }
    out += "\n";
  }
  out += "out n" + std::to_string(output_) + "\n";
  return out;
}

namespace {

bool valid_var_name(const std::string& name) {
  if (name.empty() || !std::isalpha(static_cast<unsigned char>(name[0]))) return false;
  for (char c : name) {
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
  }
  return true;
}

std::uint32_t parse_node_ref(const std::string& tok, std::uint32_t limit, int lineno) {
  if (tok.size() < 2 || tok[0] != 'n') {
    throw UsageError("circuit line " + std::to_string(lineno) + ": expected node reference, got '" +
                     tok + "'");
  }
  for (std::size_t i = 1; i < tok.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(tok[i]))) {
      throw UsageError("circuit line " + std::to_string(lineno) + ": bad node reference '" + tok +
                       "'");
    }
  }
  unsigned long v = std::stoul(tok.substr(1));
  if (v >= limit) {
    throw UsageError("circuit line " + std::to_string(lineno) + ": node reference '" + tok +
                     "' out of range");
  }
  return static_cast<std::uint32_t>(v);
}

}  // namespace

Circuit Circuit::parse(std::string_view text) {
  std::vector<Node> nodes;
  std::optional<std::uint32_t> output;
  std::istringstream in{std::string(text)};
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::string_view sv = line;
    if (auto hash = sv.find('#'); hash != std::string_view::npos) sv = sv.substr(0, hash);
    std::istringstream ls{std::string(sv)};
    std::vector<std::string> toks;
    std::string t;
    while (ls >> t) toks.push_back(t);
    if (toks.empty()) continue;
    if (output) throw UsageError("circuit line " + std::to_string(lineno) + ": content after out");
    if (toks[0] == "out") {
      if (toks.size() != 2) throw UsageError("circuit line " + std::to_string(lineno) + ": bad out");
      output = parse_node_ref(toks[1], static_cast<std::uint32_t>(nodes.size()) , lineno);
      continue;
    }
    std::string expect = "n" + std::to_string(nodes.size());
    if (toks.size() < 3 || toks[0] != expect || toks[1] != "=") {
      throw UsageError("circuit line " + std::to_string(lineno) + ": expected '" + expect +
                       " = ...'");
    }
    const std::string& op = toks[2];
    Node n{};
    auto limit = static_cast<std::uint32_t>(nodes.size());
    if (op == "const" && toks.size() == 4) {
      n.op = Op::constant;
      n.value = parse_bigint(toks[3]);
    } else if (op == "var" && toks.size() == 4) {
      if (!valid_var_name(toks[3])) {
        throw UsageError("circuit line " + std::to_string(lineno) + ": bad variable name '" +
                         toks[3] + "'");
      }
      n.op = Op::variable;
      n.name = toks[3];
    } else if ((op == "add" || op == "sub" || op == "mul") && toks.size() == 5) {
      n.op = op == "add" ? Op::add : op == "sub" ? Op::sub : Op::mul;
      n.a = parse_node_ref(toks[3], limit, lineno);
      n.b = parse_node_ref(toks[4], limit, lineno);
    } else if (op == "pow" && toks.size() == 5) {
      n.op = Op::pow;
      n.a = parse_node_ref(toks[3], limit, lineno);
      unsigned long e = std::stoul(toks[4]);
      if (e < 1 || e > 64) {
        throw UsageError("circuit line " + std::to_string(lineno) + ": pow exponent out of range");
      }
      n.exp = static_cast<std::uint32_t>(e);
    } else {
      throw UsageError("circuit line " + std::to_string(lineno) + ": unrecognized node '" +
                       std::string(sv) + "'");
    }
    nodes.push_back(std::move(n));
  }
  if (!output) throw UsageError("circuit file has no 'out' line");
  return Circuit(std::move(nodes), *output);
}

NodeId CircuitBuilder::intern(Circuit::Node node) {
  std::string key;
  switch (node.op) {
    case Circuit::Op::constant: key = "c:" + node.value.str(); break;
    case Circuit::Op::variable: key = "v:" + node.name; break;
    case Circuit::Op::add:
      key = "a:" + std::to_string(node.a) + "," + std::to_string(node.b);
      break;
    case Circuit::Op::sub:
      key = "s:" + std::to_string(node.a) + "," + std::to_string(node.b);
      break;
    case Circuit::Op::mul:
      key = "m:" + std::to_string(node.a) + "," + std::to_string(node.b);
      break;
    case Circuit::Op::pow:
      key = "p:" + std::to_string(node.a) + "^" + std::to_string(node.exp);
      break;
  }
  auto it = memo_.find(key);
  if (it != memo_.end()) return it->second;
  auto id = static_cast<NodeId>(nodes_.size());
  nodes_.push_back(std::move(node));
  memo_.emplace(std::move(key), id);
  return id;
}

NodeId CircuitBuilder::constant(const BigInt& v) {
  Circuit::Node n{};
  n.op = Circuit::Op::constant;
  n.value = v;
  return intern(std::move(n));
}

NodeId CircuitBuilder::variable(const std::string& name) {
  if (!valid_var_name(name)) throw UsageError("bad variable name '" + name + "'");
  Circuit::Node n{};
  n.op = Circuit::Op::variable;
  n.name = name;
  return intern(std::move(n));
}

NodeId CircuitBuilder::add(NodeId a, NodeId b) {
  if (nodes_[a].op == Circuit::Op::constant && nodes_[b].op == Circuit::Op::constant) {
    return constant(nodes_[a].value + nodes_[b].value);
  }
  Circuit::Node n{};
  n.op = Circuit::Op::add;
  n.a = a;
  n.b = b;
  return intern(std::move(n));
}

NodeId CircuitBuilder::sub(NodeId a, NodeId b) {
  if (nodes_[a].op == Circuit::Op::constant && nodes_[b].op == Circuit::Op::constant) {
    return constant(nodes_[a].value - nodes_[b].value);
  }
  Circuit::Node n{};
  n.op = Circuit::Op::sub;
  n.a = a;
  n.b = b;
  return intern(std::move(n));
}

NodeId CircuitBuilder::mul(NodeId a, NodeId b) {
  if (nodes_[a].op == Circuit::Op::constant && nodes_[b].op == Circuit::Op::constant) {
    return constant(nodes_[a].value * nodes_[b].value);
  }
  Circuit::Node n{};
  n.op = Circuit::Op::mul;
  n.a = a;
  n.b = b;
  return intern(std::move(n));
}

NodeId CircuitBuilder::pow(NodeId a, std::uint64_t e) {
  if (e < 1) throw UsageError("pow exponent must be >= 1");
  if (e == 1) return a;
  if (nodes_[a].op == Circuit::Op::constant) {
    BigInt v = 1;
    BigInt base = nodes_[a].value;
    std::uint64_t k = e;
    while (k) {
      if (k & 1) v *= base;
      base *= base;
      k >>= 1;
    }
    return constant(v);
  }
  if (e <= 64) {
    Circuit::Node n{};
    n.op = Circuit::Op::pow;
    n.a = a;
    n.exp = static_cast<std::uint32_t>(e);
    return intern(std::move(n));
  }
  // larger powers by squaring, keeping node fan-in bounded
  NodeId sq = pow(a, 64);
  NodeId rest = pow(a, e - 64);
  return mul(sq, rest);
}

NodeId CircuitBuilder::splice(const Circuit& other, const std::map<std::string, NodeId>& binding) {
  std::vector<NodeId> mapped(other.nodes().size());
  for (std::uint32_t i = 0; i < other.nodes().size(); ++i) {
    const Circuit::Node& n = other.nodes()[i];
    switch (n.op) {
      case Circuit::Op::constant: mapped[i] = constant(n.value); break;
      case Circuit::Op::variable: {
        auto it = binding.find(n.name);
        mapped[i] = it == binding.end() ? variable(n.name) : it->second;
        break;
      }
      case Circuit::Op::add: mapped[i] = add(mapped[n.a], mapped[n.b]); break;
      case Circuit::Op::sub: mapped[i] = sub(mapped[n.a], mapped[n.b]); break;
      case Circuit::Op::mul: mapped[i] = mul(mapped[n.a], mapped[n.b]); break;
      case Circuit::Op::pow: mapped[i] = pow(mapped[n.a], n.exp); break;
    }
  }
  return mapped[other.output()];
}

Circuit CircuitBuilder::take(NodeId output) && {
  return Circuit(std::move(nodes_), output);
}

namespace {

template <typename T, typename ConstFn>
T eval_generic(const Circuit& c, ConstFn&& make_const,
               const std::map<std::string, T>& assignment) {
  std::vector<T> vals;
  vals.reserve(c.nodes().size());
  for (const Circuit::Node& n : c.nodes()) {
    switch (n.op) {
      case Circuit::Op::constant: vals.push_back(make_const(n.value)); break;
      case Circuit::Op::variable: {
        auto it = assignment.find(n.name);
        if (it == assignment.end()) throw UsageError("missing assignment for " + n.name);
        vals.push_back(it->second);
        break;
      }
      case Circuit::Op::add: vals.push_back(vals[n.a] + vals[n.b]); break;
      case Circuit::Op::sub: vals.push_back(vals[n.a] - vals[n.b]); break;
      case Circuit::Op::mul: vals.push_back(vals[n.a] * vals[n.b]); break;
      case Circuit::Op::pow: {
        T acc = make_const(BigInt(1));
        T base = vals[n.a];
        std::uint32_t e = n.exp;
        while (e) {
          if (e & 1) acc = acc * base;
          e >>= 1;
          if (e) base = base * base;
        }
        vals.push_back(std::move(acc));
        break;
      }
    }
  }
  return vals[c.output()];
}

}  // namespace

BigInt eval_int(const Circuit& c, const std::map<std::string, BigInt>& assignment) {
  return eval_generic<BigInt>(c, [](const BigInt& v) { return v; }, assignment);
}

QuadInt eval_quad(const Circuit& c, const QuadField& field,
                  const std::map<std::string, QuadInt>& assignment) {
  for (const auto& [name, v] : assignment) {
    if (!(v.field() == field)) throw UsageError("field mismatch in assignment of " + name);
  }
  return eval_generic<QuadInt>(
      c, [&](const BigInt& v) { return QuadInt::integer(field, v); }, assignment);
}

BigInt degree_bound(const Circuit& c) {
  std::vector<BigInt> deg;
  deg.reserve(c.nodes().size());
  for (const Circuit::Node& n : c.nodes()) {
    switch (n.op) {
      case Circuit::Op::constant: deg.push_back(0); break;
      case Circuit::Op::variable: deg.push_back(1); break;
      case Circuit::Op::add:
      case Circuit::Op::sub: deg.push_back(std::max(deg[n.a], deg[n.b])); break;
      case Circuit::Op::mul: deg.push_back(deg[n.a] + deg[n.b]); break;
      case Circuit::Op::pow: deg.push_back(deg[n.a] * n.exp); break;
    }
  }
  return deg[c.output()];
}

namespace {

std::optional<SparsePoly> mul_within(const SparsePoly& a, const SparsePoly& b,
                                     std::size_t budget) {
  SparsePoly out(a.manifest());
  for (const auto& [ea, ca] : a.terms()) {
    for (const auto& [eb, cb] : b.terms()) {
      ExpVec e(ea.size());
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      out.add_term(e, ca * cb);
      if (out.term_count() > budget) return std::nullopt;
    }
  }
  return out;
}

}  // namespace

ExpandOutcome expand(const Circuit& c, std::size_t term_budget) {
  ExpandOutcome outcome{std::nullopt, degree_bound(c)};
  if (term_budget < 1) throw UsageError("expand: budget must be >= 1");
  std::vector<std::string> manifest = c.variables();
  std::vector<SparsePoly> vals;
  vals.reserve(c.nodes().size());
  auto guard = [&](SparsePoly p) -> bool {
    if (p.term_count() > term_budget) return false;
    vals.push_back(std::move(p));
    return true;
  };
  for (const Circuit::Node& n : c.nodes()) {
    bool ok = true;
    switch (n.op) {
      case Circuit::Op::constant: ok = guard(SparsePoly::constant(manifest, n.value)); break;
      case Circuit::Op::variable: ok = guard(SparsePoly::variable(manifest, n.name)); break;
      case Circuit::Op::add: ok = guard(vals[n.a] + vals[n.b]); break;
      case Circuit::Op::sub: ok = guard(vals[n.a] - vals[n.b]); break;
      case Circuit::Op::mul: {
        auto p = mul_within(vals[n.a], vals[n.b], term_budget);
        ok = p.has_value();
        if (ok) vals.push_back(std::move(*p));
        break;
      }
      case Circuit::Op::pow: {
        SparsePoly acc = SparsePoly::constant(manifest, 1);
        SparsePoly base = vals[n.a];
        std::uint32_t e = n.exp;
        while (e && ok) {
          if (e & 1) {
            auto p = mul_within(acc, base, term_budget);
            ok = p.has_value();
            if (ok) acc = std::move(*p);
          }
          e >>= 1;
          if (e && ok) {
            auto p = mul_within(base, base, term_budget);
            ok = p.has_value();
            if (ok) base = std::move(*p);
          }
        }
        if (ok) vals.push_back(std::move(acc));
        break;
      }
    }
    if (!ok) return outcome;  // budget exceeded; bound already recorded
  }
  outcome.poly = std::move(vals[c.output()]);
  return outcome;
}

Circuit substitute(const Circuit& c, const std::map<std::string, Circuit>& binding) {
  CircuitBuilder b;
  std::map<std::string, NodeId> bound;
  for (const auto& [name, circ] : binding) bound.emplace(name, b.splice(circ));
  NodeId out = b.splice(c, bound);
  return std::move(b).take(out);
}

Circuit poly_to_circuit(const SparsePoly& p, const std::map<std::string, BigInt>& pinned) {
  CircuitBuilder b;
  std::map<std::string, NodeId> vars;
  for (const std::string& name : p.manifest()) {
    auto it = pinned.find(name);
    vars.emplace(name, it == pinned.end() ? b.variable(name) : b.constant(it->second));
  }
  std::optional<NodeId> acc;
  for (const auto& [e, c] : p.terms()) {
    std::optional<NodeId> term;
    if (c != 1 || std::all_of(e.begin(), e.end(), [](std::uint32_t x) { return x == 0; })) {
      term = b.constant(c);
    }
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      NodeId f = b.pow(vars.at(p.manifest()[i]), e[i]);
      term = term ? b.mul(*term, f) : f;
    }
    acc = acc ? b.add(*acc, *term) : *term;
  }
  if (!acc) acc = b.constant(0);
  return std::move(b).take(*acc);
}

}  // namespace diozi
