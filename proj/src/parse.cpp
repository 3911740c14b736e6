#include "cbv/parse.hpp"

#include <algorithm>
#include <sstream>
#include <vector>

namespace cbv {

namespace {

enum class Tok {
  Lambda,
  Dot,
  LParen,
  RParen,
  LBracket,
  RBracket,
  LBrace,
  RBrace,
  Comma,
  Semi,
  Ident,
  Bot,
  End,
};

struct Token {
  Tok kind;
  std::string text;
  SourceSpan span;
  std::size_t line = 1;
  std::size_t col = 1;
};

bool ident_start(char c) {
  return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z');
}

bool ident_char(char c) {
  return ident_start(c) || (c >= '0' && c <= '9') || c == '_' || c == '\'';
}

class Lexer {
 public:
  explicit Lexer(const std::string& text) : text_(text) {}

  std::vector<Token> run() {
    std::vector<Token> out;
    for (;;) {
      skip_space();
      Token t = next();
      out.push_back(t);
      if (t.kind == Tok::End) return out;
    }
  }

 private:
  [[noreturn]] void fail(const std::string& msg, std::size_t from) {
    throw ParseError(msg, {from, pos_}, line_, col_at(from));
  }

  std::size_t col_at(std::size_t from) const {
    // Column of `from` on the current line.
    std::size_t start = text_.rfind('\n', from == 0 ? 0 : from - 1);
    start = (start == std::string::npos || from == 0) ? 0 : start + 1;
    return from - start + 1;
  }

  void skip_space() {
    while (pos_ < text_.size()) {
      char c = text_[pos_];
      if (c == '\n') {
        ++line_;
        ++pos_;
      } else if (c == ' ' || c == '\t' || c == '\r') {
        ++pos_;
      } else {
        break;
      }
    }
  }

  Token make(Tok kind, std::size_t from, const std::string& text = "") {
    return {kind, text, {from, pos_}, line_, col_at(from)};
  }

  Token next() {
    std::size_t from = pos_;
    if (pos_ >= text_.size()) return make(Tok::End, from);
    char c = text_[pos_];
    switch (c) {
      case '\\': ++pos_; return make(Tok::Lambda, from);
      case '.': ++pos_; return make(Tok::Dot, from);
      case '(': ++pos_; return make(Tok::LParen, from);
      case ')': ++pos_; return make(Tok::RParen, from);
      case '[': ++pos_; return make(Tok::LBracket, from);
      case ']': ++pos_; return make(Tok::RBracket, from);
      case '{': ++pos_; return make(Tok::LBrace, from);
      case '}': ++pos_; return make(Tok::RBrace, from);
      case ',': ++pos_; return make(Tok::Comma, from);
      case ';': ++pos_; return make(Tok::Semi, from);
      default: break;
    }
    if (text_.compare(pos_, 2, "\xce\xbb") == 0) {   // λ
      pos_ += 2;
      return make(Tok::Lambda, from);
    }
    if (text_.compare(pos_, 3, "\xe2\x8a\xa5") == 0) {   // ⊥
      pos_ += 3;
      return make(Tok::Bot, from);
    }
    if (ident_start(c)) {
      while (pos_ < text_.size() && ident_char(text_[pos_])) ++pos_;
      std::string name = text_.substr(from, pos_ - from);
      if (name == "bot") return make(Tok::Bot, from);
      return make(Tok::Ident, from, name);
    }
    ++pos_;
    fail("unexpected character", from);
  }

  const std::string& text_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
};

class Parser {
 public:
  explicit Parser(const std::string& text) : toks_(Lexer(text).run()) {}

  TermPtr term() {
    TermPtr t = p_term();
    expect(Tok::End, "end of input");
    return t;
  }

  RPtr resource() {
    RPtr t = p_rexpr();
    expect(Tok::End, "end of input");
    return t;
  }

  TermSet termset() {
    TermSet out;
    expect(Tok::LBrace, "'{'");
    if (peek().kind == Tok::RBrace) {
      advance();
      expect(Tok::End, "end of input");
      return out;
    }
    for (;;) {
      const Token& at = peek();
      RPtr e = p_rexpr();
      if (!r_is_simple(e)) {
        fail("set element must be a simple term", at);
      }
      out.insert(e);
      if (peek().kind == Tok::Semi) {
        advance();
        continue;
      }
      break;
    }
    expect(Tok::RBrace, "'}'");
    expect(Tok::End, "end of input");
    return out;
  }

 private:
  const Token& peek() const { return toks_[pos_]; }
  const Token& advance() { return toks_[pos_++]; }

  [[noreturn]] void fail(const std::string& msg, const Token& at) {
    throw ParseError(msg, at.span, at.line, at.col);
  }

  const Token& expect(Tok kind, const std::string& what) {
    if (peek().kind != kind) fail("expected " + what, peek());
    return advance();
  }

  bool atom_start() const {
    Tok k = peek().kind;
    return k == Tok::Ident || k == Tok::Bot || k == Tok::LParen;
  }

  TermPtr p_term() {
    if (peek().kind == Tok::Lambda) {
      advance();
      std::vector<std::string> binders;
      while (peek().kind == Tok::Ident) binders.push_back(advance().text);
      if (binders.empty()) fail("expected binder", peek());
      expect(Tok::Dot, "'.'");
      TermPtr body = p_term();
      for (auto it = binders.rbegin(); it != binders.rend(); ++it) {
        body = mk_abs(*it, body);
      }
      return body;
    }
    if (!atom_start()) fail("expected term", peek());
    TermPtr t = p_atom();
    while (atom_start()) t = mk_app(t, p_atom());
    return t;
  }

  TermPtr p_atom() {
    const Token& t = peek();
    switch (t.kind) {
      case Tok::Ident: advance(); return mk_var(t.text);
      case Tok::Bot: advance(); return mk_bot();
      case Tok::LParen: {
        advance();
        TermPtr inner = p_term();
        expect(Tok::RParen, "')'");
        return inner;
      }
      default: fail("expected term", t);
    }
  }

  bool ratom_start() const {
    Tok k = peek().kind;
    return k == Tok::Ident || k == Tok::LBracket || k == Tok::LParen;
  }

  RPtr p_rexpr() {
    if (peek().kind == Tok::Lambda) {
      advance();
      const Token& binder = expect(Tok::Ident, "binder");
      if (peek().kind == Tok::Ident) {
        fail("resource abstraction binds exactly one variable", peek());
      }
      expect(Tok::Dot, "'.'");
      const Token& at = peek();
      RPtr body = p_rexpr();
      if (!r_is_simple(body)) {
        fail("abstraction body must be a simple term", at);
      }
      return r_abs(binder.text, body);
    }
    if (!ratom_start()) fail("expected resource term", peek());
    const Token& first = peek();
    RPtr t = p_ratom();
    if (ratom_start() && !r_is_simple(t)) {
      fail("application operand must be a simple term", first);
    }
    while (ratom_start()) {
      const Token& at = peek();
      RPtr a = p_ratom();
      if (!r_is_simple(a)) {
        fail("application operand must be a simple term", at);
      }
      t = r_app(t, a);
    }
    return t;
  }

  RPtr p_ratom() {
    const Token& t = peek();
    switch (t.kind) {
      case Tok::Ident: advance(); return r_var(t.text);
      case Tok::LBracket: {
        advance();
        std::vector<RPtr> elems;
        if (peek().kind != Tok::RBracket) {
          for (;;) {
            const Token& at = peek();
            RPtr v = p_rexpr();
            if (!r_is_value(v)) fail("bag element must be a value", at);
            elems.push_back(v);
            if (peek().kind == Tok::Comma) {
              advance();
              continue;
            }
            break;
          }
        }
        expect(Tok::RBracket, "']'");
        return r_bag(std::move(elems));
      }
      case Tok::LParen: {
        advance();
        RPtr inner = p_rexpr();
        expect(Tok::RParen, "')'");
        return inner;
      }
      default: fail("expected resource term", t);
    }
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
};

void print_term_rec(const TermPtr& t, bool unicode, bool arg_pos,
                    bool fun_pos, std::string& out) {
  switch (t->kind) {
    case TermKind::Var:
      out += t->name;
      return;
    case TermKind::Bot:
      out += unicode ? "\xe2\x8a\xa5" : "bot";
      return;
    case TermKind::Abs: {
      bool parens = arg_pos || fun_pos;
      if (parens) out += '(';
      out += unicode ? "\xce\xbb" : "\\";
      out += t->name;
      out += '.';
      print_term_rec(t->child0, unicode, false, false, out);
      if (parens) out += ')';
      return;
    }
    case TermKind::App: {
      if (arg_pos) out += '(';
      print_term_rec(t->child0, unicode, false, true, out);
      out += ' ';
      print_term_rec(t->child1, unicode, true, false, out);
      if (arg_pos) out += ')';
      return;
    }
  }
}

void print_resource_rec(const RPtr& t, bool unicode, bool arg_pos,
                        std::string& out) {
  switch (t->kind) {
    case RKind::RVar:
      out += t->name;
      return;
    case RKind::RAbs:
      out += unicode ? "\xce\xbb" : "\\";
      out += t->name;
      out += '.';
      print_resource_rec(t->child0, unicode, false, out);
      return;
    case RKind::RApp:
      if (arg_pos) out += '(';
      print_resource_rec(t->child0, unicode, false, out);
      out += ' ';
      print_resource_rec(t->child1, unicode, true, out);
      if (arg_pos) out += ')';
      return;
    case RKind::Bag: {
      out += '[';
      bool first = true;
      for (const RPtr& v : t->elems) {
        if (!first) out += ", ";
        first = false;
        print_resource_rec(v, unicode, false, out);
      }
      out += ']';
      return;
    }
  }
}

nlohmann::ordered_json term_json_rec(const TermPtr& t) {
  using json = nlohmann::ordered_json;
  switch (t->kind) {
    case TermKind::Var:
      return json{{"var", t->name}};
    case TermKind::Bot:
      return json{{"bot", true}};
    case TermKind::Abs:
      return json{{"abs", json{{"binder", t->name},
                               {"body", term_json_rec(t->child0)}}}};
    case TermKind::App:
      return json{{"app", json::array({term_json_rec(t->child0),
                                       term_json_rec(t->child1)})}};
  }
  return json();
}

nlohmann::ordered_json resource_json_rec(const RPtr& t) {
  using json = nlohmann::ordered_json;
  switch (t->kind) {
    case RKind::RVar:
      return json{{"var", t->name}};
    case RKind::RAbs:
      return json{{"abs", json{{"binder", t->name},
                               {"body", resource_json_rec(t->child0)}}}};
    case RKind::RApp:
      return json{{"app", json::array({resource_json_rec(t->child0),
                                       resource_json_rec(t->child1)})}};
    case RKind::Bag: {
      auto arr = json::array();
      for (const RPtr& v : t->elems) arr.push_back(resource_json_rec(v));
      return json{{"bag", arr}};
    }
  }
  return json();
}

bool truncated_at(const std::vector<std::vector<int>>& paths,
                  const std::vector<int>& path) {
  return std::find(paths.begin(), paths.end(), path) != paths.end();
}

void render_ascii_rec(const TermPtr& t,
                      const std::vector<std::vector<int>>& cuts,
                      std::vector<int>& path, int depth, std::string& out) {
  out.append(static_cast<std::size_t>(depth) * 2, ' ');
  if (truncated_at(cuts, path)) {
    out += "?\n";
    return;
  }
  switch (t->kind) {
    case TermKind::Var:
      out += t->name;
      out += '\n';
      return;
    case TermKind::Bot:
      out += "\xe2\x8a\xa5\n";
      return;
    case TermKind::Abs:
      out += "\xce\xbb";
      out += t->name;
      out += '\n';
      path.push_back(0);
      render_ascii_rec(t->child0, cuts, path, depth + 1, out);
      path.pop_back();
      return;
    case TermKind::App:
      out += "@\n";
      path.push_back(0);
      render_ascii_rec(t->child0, cuts, path, depth + 1, out);
      path.back() = 1;
      render_ascii_rec(t->child1, cuts, path, depth + 1, out);
      path.pop_back();
      return;
  }
}

}  // namespace

TermPtr parse_term(const std::string& text) { return Parser(text).term(); }

RPtr parse_resource(const std::string& text) {
  return Parser(text).resource();
}

TermSet parse_termset(const std::string& text) {
  return Parser(text).termset();
}

TermSet parse_termset_lines(const std::string& text) {
  TermSet out;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    std::size_t hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    bool blank = true;
    for (char c : line) {
      if (c != ' ' && c != '\t' && c != '\r') blank = false;
    }
    if (blank) continue;
    out.insert(parse_resource(line));
  }
  return out;
}

std::string print_term(const TermPtr& t, bool unicode) {
  std::string out;
  print_term_rec(rename_binders_canonically(t), unicode, false, false, out);
  return out;
}

std::string print_resource(const RPtr& t, bool unicode) {
  std::string out;
  print_resource_rec(r_rename_binders_canonically(t), unicode, false, out);
  return out;
}

std::string print_termset(const TermSet& set, bool unicode) {
  if (set.empty()) return "{}";
  std::string out = "{ ";
  bool first = true;
  for (const RPtr& e : set.elements()) {
    if (!first) out += " ; ";
    first = false;
    out += print_resource(e, unicode);
  }
  out += " }";
  return out;
}

nlohmann::ordered_json term_to_json(const TermPtr& t) {
  return term_json_rec(rename_binders_canonically(t));
}

TermPtr term_from_json(const nlohmann::ordered_json& j) {
  if (!j.is_object()) throw std::invalid_argument("term json: object expected");
  if (j.contains("var")) return mk_var(j.at("var").get<std::string>());
  if (j.contains("bot")) return mk_bot();
  if (j.contains("abs")) {
    const auto& a = j.at("abs");
    return mk_abs(a.at("binder").get<std::string>(),
                  term_from_json(a.at("body")));
  }
  if (j.contains("app")) {
    const auto& a = j.at("app");
    if (!a.is_array() || a.size() != 2) {
      throw std::invalid_argument("term json: app expects two children");
    }
    return mk_app(term_from_json(a.at(0)), term_from_json(a.at(1)));
  }
  throw std::invalid_argument("term json: unknown node");
}

nlohmann::ordered_json resource_to_json(const RPtr& t) {
  return resource_json_rec(r_rename_binders_canonically(t));
}

RPtr resource_from_json(const nlohmann::ordered_json& j) {
  if (!j.is_object()) {
    throw std::invalid_argument("resource json: object expected");
  }
  if (j.contains("var")) return r_var(j.at("var").get<std::string>());
  if (j.contains("abs")) {
    const auto& a = j.at("abs");
    return r_abs(a.at("binder").get<std::string>(),
                 resource_from_json(a.at("body")));
  }
  if (j.contains("app")) {
    const auto& a = j.at("app");
    if (!a.is_array() || a.size() != 2) {
      throw std::invalid_argument("resource json: app expects two children");
    }
    return r_app(resource_from_json(a.at(0)), resource_from_json(a.at(1)));
  }
  if (j.contains("bag")) {
    std::vector<RPtr> elems;
    for (const auto& e : j.at("bag")) elems.push_back(resource_from_json(e));
    return r_bag(std::move(elems));
  }
  throw std::invalid_argument("resource json: unknown node");
}

std::string render_tree(const BTResult& bt, TreeStyle style) {
  using json = nlohmann::ordered_json;
  if (style == TreeStyle::Ascii) {
    if (!bt.tree) return "\xe2\x88\x85";   // ∅
    std::string out;
    std::vector<int> path;
    render_ascii_rec(rename_binders_canonically(bt.tree->term),
                     bt.truncated_positions, path, 0, out);
    if (!out.empty() && out.back() == '\n') out.pop_back();
    return out;
  }
  json doc;
  doc["bt"] = bt.tree ? term_to_json(bt.tree->term) : json(nullptr);
  doc["status"] = bt.status == BTStatus::Exact ? "exact" : "partial";
  auto arr = json::array();
  for (const auto& p : bt.truncated_positions) arr.push_back(p);
  doc["truncated"] = arr;
  return doc.dump();
}

}  // namespace cbv
