#include "eliq/io.hpp"

#include <cctype>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>

namespace eliq {

namespace {

struct Token {
  enum class Type { Ident, Symbol, End };
  Type type = Type::End;
  std::string text;
  int line = 1;
  int column = 1;
};

class Lexer {
 public:
  Lexer(const std::string& text, bool dotted_idents, int line = 1)
      : text_(text), dotted_(dotted_idents), line_(line) {
    advance();
  }

  const Token& peek() const { return tok_; }

  Token next() {
    Token t = tok_;
    advance();
    return t;
  }

  bool accept(const std::string& sym) {
    if (tok_.type != Token::Type::End && tok_.text == sym) {
      advance();
      return true;
    }
    return false;
  }

  void expect(const std::string& sym) {
    if (!accept(sym)) fail("expected '" + sym + "'");
  }

  std::string ident(const char* what) {
    if (tok_.type != Token::Type::Ident) fail(std::string("expected ") + what);
    return next().text;
  }

  [[noreturn]] void fail(const std::string& msg) const {
    std::string found = tok_.type == Token::Type::End ? "end of input" : "'" + tok_.text + "'";
    throw ParseError(msg + ", found " + found, tok_.line, tok_.column);
  }

  bool at_end() const { return tok_.type == Token::Type::End; }

 private:
  void advance() {
    while (pos_ < text_.size()) {
      char c = text_[pos_];
      if (c == '#') {
        while (pos_ < text_.size() && text_[pos_] != '\n') step();
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        step();
      } else {
        break;
      }
    }
    tok_ = Token{};
    tok_.line = line_;
    tok_.column = col_;
    if (pos_ >= text_.size()) return;
    char c = text_[pos_];
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < text_.size()) {
        char d = text_[pos_];
        bool ok = std::isalnum(static_cast<unsigned char>(d)) || d == '_' ||
                  (dotted_ && d == '.' && pos_ + 1 < text_.size() &&
                   (std::isalnum(static_cast<unsigned char>(text_[pos_ + 1])) || text_[pos_ + 1] == '_'));
        if (!ok) break;
        step();
      }
      if (pos_ < text_.size() && text_[pos_] == '-') step();
      tok_.type = Token::Type::Ident;
      tok_.text = text_.substr(start, pos_ - start);
      return;
    }
    tok_.type = Token::Type::Symbol;
    if (c == ':' && pos_ + 1 < text_.size() && text_[pos_ + 1] == '-') {
      tok_.text = ":-";
      step();
      step();
      return;
    }
    if (std::string("&.(),:").find(c) == std::string::npos)
      throw ParseError(std::string("unexpected character '") + c + "'", line_, col_);
    tok_.text = std::string(1, c);
    step();
  }

  void step() {
    if (text_[pos_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++pos_;
  }

  const std::string& text_;
  bool dotted_;
  std::size_t pos_ = 0;
  int line_;
  int col_ = 1;
  Token tok_;
};

const std::set<std::string> kKeywords = {"top", "some", "sub", "rsub", "disj", "rdisj", "func"};

bool is_inverse_token(const std::string& t) { return !t.empty() && t.back() == '-'; }

Role parse_role(Lexer& lx) {
  if (lx.peek().type != Token::Type::Ident) lx.fail("expected a role");
  auto t = lx.peek().text;
  std::string base = is_inverse_token(t) ? t.substr(0, t.size() - 1) : t;
  if (kKeywords.count(base)) lx.fail("expected a role");
  lx.next();
  return Role(base, is_inverse_token(t));
}

std::string parse_concept_name(Lexer& lx) {
  if (lx.peek().type != Token::Type::Ident) lx.fail("expected a concept");
  auto t = lx.peek().text;
  if (is_inverse_token(t) || kKeywords.count(t)) lx.fail("expected a concept name");
  lx.next();
  return t;
}

BasicConcept parse_basic(Lexer& lx) {
  if (lx.accept("top")) return BasicConcept::top();
  if (lx.accept("some")) return BasicConcept::exists(parse_role(lx));
  return BasicConcept::atomic(parse_concept_name(lx));
}

EliConcept parse_eli(Lexer& lx);

EliConcept parse_eli_unary(Lexer& lx) {
  if (lx.accept("(")) {
    auto c = parse_eli(lx);
    lx.expect(")");
    return c;
  }
  if (lx.accept("top")) return EliConcept::top();
  if (lx.accept("some")) {
    Role r = parse_role(lx);
    if (lx.accept(".")) return EliConcept::exists(r, parse_eli_unary(lx));
    return EliConcept::exists(r);
  }
  return EliConcept::atomic(parse_concept_name(lx));
}

EliConcept parse_eli(Lexer& lx) {
  std::vector<EliConcept> parts{parse_eli_unary(lx)};
  while (lx.accept("&")) parts.push_back(parse_eli_unary(lx));
  return EliConcept::conj(std::move(parts));
}

void expect_end(Lexer& lx) {
  if (!lx.at_end()) lx.fail("unexpected trailing input");
}

std::vector<std::pair<int, std::string>> split_lines(const std::string& text) {
  std::vector<std::pair<int, std::string>> out;
  std::istringstream in(text);
  std::string line;
  int n = 0;
  while (std::getline(in, line)) out.push_back({++n, line});
  return out;
}

bool blank(const std::string& line) {
  for (char c : line) {
    if (c == '#') return true;
    if (!std::isspace(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

Ontology parse_ontology(const std::string& text) {
  Ontology o;
  for (const auto& [n, line] : split_lines(text)) {
    if (blank(line)) continue;
    Lexer lx(line, false, n);
    if (lx.accept("disj")) {
      auto a = parse_basic(lx);
      auto b = parse_basic(lx);
      o.concept_disjointness.push_back({a, b});
    } else if (lx.accept("rdisj")) {
      auto a = parse_role(lx);
      auto b = parse_role(lx);
      o.role_disjointness.push_back({a, b});
    } else if (lx.accept("func")) {
      o.functional.insert(parse_role(lx));
    } else {
      // "basic sub eli" or "role rsub role"; a bare identifier starts either
      Lexer probe = lx;
      if (probe.peek().type == Token::Type::Ident && !kKeywords.count(probe.peek().text)) {
        probe.next();
        if (probe.peek().text == "rsub") {
          auto a = parse_role(lx);
          lx.expect("rsub");
          auto b = parse_role(lx);
          expect_end(lx);
          o.ris.push_back({a, b});
          continue;
        }
      }
      auto lhs = parse_basic(lx);
      lx.expect("sub");
      auto rhs = parse_eli(lx);
      o.cis.push_back({lhs, rhs});
    }
    expect_end(lx);
  }
  return o;
}

std::string to_string(const Ontology& o) {
  std::string s;
  for (const auto& ci : o.cis) s += ci.str() + "\n";
  for (const auto& ri : o.ris) s += ri.sub.str() + " rsub " + ri.sup.str() + "\n";
  for (const auto& d : o.concept_disjointness) s += "disj " + d.first.str() + " " + d.second.str() + "\n";
  for (const auto& d : o.role_disjointness) s += "rdisj " + d.first.str() + " " + d.second.str() + "\n";
  for (const auto& r : o.functional) s += "func " + r.str() + "\n";
  return s;
}

EliConcept parse_concept(const std::string& text) {
  Lexer lx(text, false);
  auto c = parse_eli(lx);
  expect_end(lx);
  return c;
}

CQ parse_cq(const std::string& text) {
  {
    Lexer probe(text, false);
    if (probe.peek().text == "eliq") {
      probe.next();
      if (probe.accept(":")) {
        auto c = parse_eli(probe);
        expect_end(probe);
        return concept_to_eliq(c);
      }
    }
  }
  Lexer lx(text, true);
  lx.ident("query name");
  lx.expect("(");
  auto answer = lx.ident("answer variable");
  lx.expect(")");
  lx.expect(":-");
  CQ q(answer);
  if (lx.at_end()) return q;
  do {
    auto t = lx.next();
    if (t.type != Token::Type::Ident) throw ParseError("expected an atom", t.line, t.column);
    bool inv = is_inverse_token(t.text);
    std::string name = inv ? t.text.substr(0, t.text.size() - 1) : t.text;
    if (name.find('.') != std::string::npos || (kKeywords.count(name) && name != "top"))
      throw ParseError("bad predicate name '" + t.text + "'", t.line, t.column);
    lx.expect("(");
    auto x = lx.ident("variable");
    if (lx.accept(",")) {
      auto y = lx.ident("variable");
      lx.expect(")");
      if (name == "top") throw ParseError("top is unary", t.line, t.column);
      q.add_role(Role(name, inv), x, y);
    } else {
      lx.expect(")");
      if (inv) throw ParseError("concept atoms cannot be inverted", t.line, t.column);
      q.add_concept(name, x);
    }
  } while (lx.accept(","));
  expect_end(lx);
  return q;
}

std::string to_string(const CQ& q) {
  std::map<std::string, std::vector<const RoleAtom*>> adj;
  for (const auto& a : q.role_atoms()) {
    adj[a.from].push_back(&a);
    if (a.to != a.from) adj[a.to].push_back(&a);
  }
  std::vector<std::string> atoms;
  std::set<std::string> visited;
  std::set<const RoleAtom*> emitted;
  std::function<void(const std::string&)> visit = [&](const std::string& v) {
    visited.insert(v);
    auto cs = q.concepts_at(v);
    for (const auto& c : cs) atoms.push_back(c + "(" + v + ")");
    if (cs.empty() && !adj.count(v)) atoms.push_back("top(" + v + ")");
    for (const auto* a : adj[v]) {
      if (emitted.count(a)) continue;
      emitted.insert(a);
      atoms.push_back(a->role + "(" + a->from + "," + a->to + ")");
      const auto& w = a->from == v ? a->to : a->from;
      if (!visited.count(w)) visit(w);
    }
  };
  visit(q.answer_var());
  for (const auto& v : q.vars())
    if (!visited.count(v)) visit(v);
  std::string s = "q(" + q.answer_var() + ") :- ";
  for (std::size_t i = 0; i < atoms.size(); ++i) {
    if (i) s += ", ";
    s += atoms[i];
  }
  return s;
}

ABox parse_abox(const std::string& text) {
  ABox a;
  for (const auto& [n, line] : split_lines(text)) {
    if (blank(line)) continue;
    Lexer lx(line, true, n);
    auto t = lx.next();
    if (t.type != Token::Type::Ident) throw ParseError("expected an assertion", t.line, t.column);
    bool inv = is_inverse_token(t.text);
    std::string name = inv ? t.text.substr(0, t.text.size() - 1) : t.text;
    lx.expect("(");
    auto x = lx.ident("individual");
    if (lx.accept(",")) {
      auto y = lx.ident("individual");
      lx.expect(")");
      a.add_role(Role(name, inv), x, y);
    } else {
      lx.expect(")");
      if (inv) throw ParseError("concept assertions cannot be inverted", t.line, t.column);
      a.add_concept(name, x);
    }
    expect_end(lx);
  }
  return a;
}

std::string to_string(const ABox& a) {
  std::string s;
  std::set<std::string> mentioned;
  for (const auto& c : a.concept_assertions()) {
    s += c.concept_name + "(" + c.var + ")\n";
    mentioned.insert(c.var);
  }
  for (const auto& r : a.role_assertions()) {
    s += r.role + "(" + r.from + "," + r.to + ")\n";
    mentioned.insert(r.from);
    mentioned.insert(r.to);
  }
  for (const auto& i : a.individuals())
    if (!mentioned.count(i)) s += "top(" + i + ")\n";
  return s;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("io_error", "cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("io_error", "cannot write " + path);
  out << content;
}

}  // namespace eliq
