#include "diozi/poly.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <set>

#include "diozi/errors.hpp"

namespace diozi {

bool GrlexGreater::operator()(const ExpVec& a, const ExpVec& b) const {
  std::uint64_t da = std::accumulate(a.begin(), a.end(), std::uint64_t{0});
  std::uint64_t db = std::accumulate(b.begin(), b.end(), std::uint64_t{0});
  if (da != db) return da > db;
  return a > b;
}

SparsePoly::SparsePoly(std::vector<std::string> manifest) : manifest_(std::move(manifest)) {}

SparsePoly SparsePoly::constant(std::vector<std::string> manifest, const BigInt& c) {
  SparsePoly p(std::move(manifest));
  p.add_term(ExpVec(p.manifest_.size(), 0), c);
  return p;
}

SparsePoly SparsePoly::variable(std::vector<std::string> manifest, const std::string& name) {
  SparsePoly p(std::move(manifest));
  auto it = std::find(p.manifest_.begin(), p.manifest_.end(), name);
  if (it == p.manifest_.end()) throw UsageError("variable not in manifest: " + name);
  ExpVec e(p.manifest_.size(), 0);
  e[static_cast<std::size_t>(it - p.manifest_.begin())] = 1;
  p.add_term(e, 1);
  return p;
}

std::uint64_t SparsePoly::total_degree() const {
  if (terms_.empty()) return 0;
  // grlex order: the first term carries the maximal total degree
  const ExpVec& lead = terms_.begin()->first;
  return std::accumulate(lead.begin(), lead.end(), std::uint64_t{0});
}

void SparsePoly::add_term(const ExpVec& exponents, const BigInt& c) {
  if (exponents.size() != manifest_.size()) {
    throw InternalError("exponent vector does not match manifest");
  }
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(exponents, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

SparsePoly SparsePoly::aligned(const std::vector<std::string>& manifest) const {
  std::vector<std::size_t> where(manifest_.size());
  for (std::size_t i = 0; i < manifest_.size(); ++i) {
    auto it = std::find(manifest.begin(), manifest.end(), manifest_[i]);
    if (it == manifest.end()) {
      throw UsageError("aligned: variable " + manifest_[i] + " missing from target manifest");
    }
    where[i] = static_cast<std::size_t>(it - manifest.begin());
  }
  SparsePoly out(manifest);
  for (const auto& [e, c] : terms_) {
    ExpVec ne(manifest.size(), 0);
    for (std::size_t i = 0; i < e.size(); ++i) ne[where[i]] = e[i];
    out.add_term(ne, c);
  }
  return out;
}

BigInt SparsePoly::eval(const std::map<std::string, BigInt>& assignment) const {
  std::vector<BigInt> vals(manifest_.size());
  for (std::size_t i = 0; i < manifest_.size(); ++i) {
    auto it = assignment.find(manifest_[i]);
    if (it == assignment.end()) throw UsageError("missing assignment for " + manifest_[i]);
    vals[i] = it->second;
  }
  BigInt acc = 0;
  for (const auto& [e, c] : terms_) {
    BigInt t = c;
    for (std::size_t i = 0; i < e.size(); ++i) {
      for (std::uint32_t k = 0; k < e[i]; ++k) t *= vals[i];
    }
    acc += t;
  }
  return acc;
}

std::string SparsePoly::emit() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    BigInt mag = c < 0 ? BigInt(-c) : c;
    if (first) {
      if (c < 0) out += "-";
      first = false;
    } else {
      out += c < 0 ? " - " : " + ";
    }
    bool any_var = std::any_of(e.begin(), e.end(), [](std::uint32_t x) { return x > 0; });
    bool coeff_shown = !any_var || mag != 1;
    if (coeff_shown) out += mag.str();
    bool need_star = coeff_shown;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (need_star) out += "*";
      out += manifest_[i];
      if (e[i] > 1) out += "^" + std::to_string(e[i]);
      need_star = true;
    }
  }
  return out;
}

SparsePoly SparsePoly::pow(std::uint32_t e) const {
  SparsePoly acc = SparsePoly::constant(manifest_, 1);
  SparsePoly base = *this;
  while (e > 0) {
    if (e & 1) acc = acc * base;
    e >>= 1;
    if (e > 0) base = base * base;
  }
  return acc;
}

SparsePoly operator+(const SparsePoly& a, const SparsePoly& b) {
  if (a.manifest_ != b.manifest_) throw InternalError("manifest mismatch in poly add");
  SparsePoly out = a;
  for (const auto& [e, c] : b.terms_) out.add_term(e, c);
  return out;
}

SparsePoly operator-(const SparsePoly& a, const SparsePoly& b) {
  if (a.manifest_ != b.manifest_) throw InternalError("manifest mismatch in poly sub");
  SparsePoly out = a;
  for (const auto& [e, c] : b.terms_) out.add_term(e, -c);
  return out;
}

SparsePoly operator*(const SparsePoly& a, const SparsePoly& b) {
  if (a.manifest_ != b.manifest_) throw InternalError("manifest mismatch in poly mul");
  SparsePoly out(a.manifest_);
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      ExpVec e(ea.size());
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      out.add_term(e, ca * cb);
    }
  }
  return out;
}

SparsePoly SparsePoly::operator-() const {
  SparsePoly out(manifest_);
  for (const auto& [e, c] : terms_) out.add_term(e, -c);
  return out;
}

namespace {

struct PolyToken {
  enum Kind { num, ident, plus, minus, star, caret, end } kind;
  std::string text;
  int line;
  int col;
};

class PolyLexer {
 public:
  explicit PolyLexer(std::string_view text) : text_(text) { advance(); }

  const PolyToken& peek() const { return tok_; }

  PolyToken take() {
    PolyToken t = tok_;
    advance();
    return t;
  }

  [[noreturn]] void fail(const std::string& what) const {
    throw UsageError("syntax error at line " + std::to_string(tok_.line) + ", column " +
                     std::to_string(tok_.col) + ": " + what);
  }

 private:
  void advance() {
    for (;;) {
      while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) {
        bump(text_[pos_]);
        ++pos_;
      }
      if (pos_ < text_.size() && text_[pos_] == '#') {
        while (pos_ < text_.size() && text_[pos_] != '\n') ++pos_;
        continue;
      }
      break;
    }
    tok_.line = line_;
    tok_.col = col_;
    if (pos_ >= text_.size()) {
      tok_ = {PolyToken::end, "", line_, col_};
      return;
    }
    char c = text_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
        bump(text_[pos_]);
        ++pos_;
      }
      tok_ = {PolyToken::num, std::string(text_.substr(start, pos_ - start)), tok_.line, tok_.col};
      return;
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
        bump(text_[pos_]);
        ++pos_;
      }
      tok_ = {PolyToken::ident, std::string(text_.substr(start, pos_ - start)), tok_.line,
              tok_.col};
      return;
    }
    bump(c);
    ++pos_;
    switch (c) {
      case '+': tok_ = {PolyToken::plus, "+", tok_.line, tok_.col}; return;
      case '-': tok_ = {PolyToken::minus, "-", tok_.line, tok_.col}; return;
      case '*': tok_ = {PolyToken::star, "*", tok_.line, tok_.col}; return;
      case '^': tok_ = {PolyToken::caret, "^", tok_.line, tok_.col}; return;
      default:
        throw UsageError("syntax error at line " + std::to_string(tok_.line) + ", column " +
                         std::to_string(tok_.col) + ": unexpected character '" +
                         std::string(1, c) + "'");
    }
  }

  void bump(char c) {
    if (c == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  int line_ = 1;
  int col_ = 1;
  PolyToken tok_;
};

struct RawTerm {
  BigInt coeff;
  std::map<std::string, std::uint32_t> powers;
};

}  // namespace

SparsePoly parse_poly(std::string_view text) {
  PolyLexer lex(text);
  std::vector<RawTerm> terms;
  bool first = true;
  while (lex.peek().kind != PolyToken::end) {
    int sign = 1;
    if (lex.peek().kind == PolyToken::plus || lex.peek().kind == PolyToken::minus) {
      sign = lex.take().kind == PolyToken::minus ? -1 : 1;
    } else if (!first) {
      lex.fail("expected '+' or '-' between terms");
    }
    RawTerm term;
    term.coeff = sign;
    bool any = false;
    if (lex.peek().kind == PolyToken::num) {
      term.coeff *= BigInt(lex.take().text);
      any = true;
    }
    for (;;) {
      if (lex.peek().kind == PolyToken::star) {
        lex.take();
        if (lex.peek().kind != PolyToken::ident) lex.fail("expected variable after '*'");
      }
      if (lex.peek().kind != PolyToken::ident) break;
      std::string name = lex.take().text;
      std::uint32_t e = 1;
      if (lex.peek().kind == PolyToken::caret) {
        lex.take();
        if (lex.peek().kind != PolyToken::num) lex.fail("expected exponent after '^'");
        std::string digits = lex.take().text;
        if (digits.size() > 6) lex.fail("exponent too large");
        e = static_cast<std::uint32_t>(std::stoul(digits));
      }
      term.powers[name] += e;
      any = true;
    }
    if (!any) lex.fail("empty term");
    terms.push_back(std::move(term));
    first = false;
  }
  std::set<std::string> names;
  for (const auto& t : terms) {
    for (const auto& [name, e] : t.powers) {
      if (e > 0) names.insert(name);  // x^0 does not bring x into the manifest
    }
  }
  std::vector<std::string> manifest(names.begin(), names.end());
  std::sort(manifest.begin(), manifest.end(), NaturalLess{});
  SparsePoly poly(manifest);
  for (const auto& t : terms) {
    ExpVec e(manifest.size(), 0);
    for (const auto& [name, exp] : t.powers) {
      if (exp == 0) continue;
      auto it = std::lower_bound(manifest.begin(), manifest.end(), name, NaturalLess{});
      e[static_cast<std::size_t>(it - manifest.begin())] += exp;
    }
    poly.add_term(e, t.coeff);
  }
  return poly;
}

}  // namespace diozi
