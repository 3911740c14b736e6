#include "cbv/corpus.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "cbv/parse.hpp"

namespace cbv {

namespace {

std::string lower(const std::string& s) {
  std::string out = s;
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return std::tolower(c); });
  return out;
}

std::string strip(const std::string& s) {
  std::size_t a = s.find_first_not_of(" \t\r");
  if (a == std::string::npos) return "";
  std::size_t b = s.find_last_not_of(" \t\r");
  return s.substr(a, b - a + 1);
}

}  // namespace

Corpus Corpus::builtin() {
  Corpus c;
  c.add("I", parse_term("\\x.x"));
  c.add("K", parse_term("\\x.\\y.x"));
  c.add("F", parse_term("\\x.\\y.y"));
  c.add("B", parse_term("\\f.\\g.\\x.f (g x)"));
  c.add("Delta", parse_term("\\x.x x"));
  c.add("Omega", parse_term("(\\x.x x) (\\x.x x)"));
  TermPtr z = parse_term("\\f.(\\y.f (\\z.y y z)) (\\y.f (\\z.y y z))");
  c.add("Z", z);
  c.add("Kstar", mk_app(z, c.lookup("K").value()));
  c.add("ZB", mk_app(z, c.lookup("B").value()));
  c.add("Xi", mk_app(z, parse_term("\\f.(\\y1.f (\\x.x)) (z z)")));
  c.add("A", parse_term("(\\z.(\\y.y) (z z)) (x x)"));
  return c;
}

void Corpus::add(const std::string& name, const TermPtr& term) {
  for (auto& e : entries_) {
    if (e.name == name) {
      e.term = term;
      return;
    }
  }
  entries_.push_back({name, term});
}

void Corpus::load_text(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::size_t hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::string body = strip(line);
    if (body.empty()) continue;
    std::size_t eq = body.find('=');
    if (eq == std::string::npos) {
      throw ParseError("expected 'name = term'", {0, 0}, lineno, 1);
    }
    std::string name = strip(body.substr(0, eq));
    std::string rhs = strip(body.substr(eq + 1));
    if (name.empty()) {
      throw ParseError("empty corpus name", {0, 0}, lineno, 1);
    }
    add(name, parse_term(rhs));
  }
}

std::optional<TermPtr> Corpus::lookup(const std::string& name) const {
  for (const auto& e : entries_) {
    if (e.name == name) return e.term;
  }
  if (name.size() > 1) {
    std::string want = lower(name);
    for (const auto& e : entries_) {
      if (e.name.size() > 1 && lower(e.name) == want) return e.term;
    }
  }
  return std::nullopt;
}

}  // namespace cbv
