#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "cbv/approx.hpp"
#include "cbv/resource.hpp"
#include "cbv/term.hpp"

namespace cbv {

// Byte range into the input text.
struct SourceSpan {
  std::size_t start = 0;
  std::size_t end = 0;
};

struct ParseError : std::runtime_error {
  ParseError(const std::string& message, SourceSpan where, std::size_t line,
             std::size_t col)
      : std::runtime_error(std::to_string(line) + ":" + std::to_string(col) +
                           ": " + message),
        span(where),
        line(line),
        col(col) {}
  SourceSpan span;
  std::size_t line = 1;
  std::size_t col = 1;
};

// Concrete syntax: identifiers [a-zA-Z][a-zA-Z0-9_']*, abstraction
// `\x.M` or `λx.M` (multiple binders allowed: `\f g x.M`), application
// by juxtaposition (left-associative, binds tighter than abstraction),
// `bot` or `⊥`, parentheses.
TermPtr parse_term(const std::string& text);

// Resource syntax: bags `[v1, v2]` (empty `[]`), abstraction `\x.t`
// with exactly one binder and a simple body, application by
// juxtaposition over simple terms. A bare value is accepted at top
// level so bag elements and coherence arguments can be written alone.
RPtr parse_resource(const std::string& text);

// `{ t1 ; t2 ; ... }` or `{}`; every element must be a simple term.
TermSet parse_termset(const std::string& text);

// One resource term per line; `#` starts a comment; blank lines ignored.
TermSet parse_termset_lines(const std::string& text);

// Canonical printing: binders renamed deterministically, minimal
// parentheses, single spaces between application operands. ASCII
// spellings by default; unicode switches to λ and ⊥.
std::string print_term(const TermPtr& t, bool unicode = false);
std::string print_resource(const RPtr& t, bool unicode = false);
std::string print_termset(const TermSet& set, bool unicode = false);

// JSON term schema:
//   {"var": name} | {"abs": {"binder": name, "body": AST}}
//   | {"app": [AST, AST]} | {"bot": true}
// and for resource terms additionally {"bag": [AST...]}.
nlohmann::ordered_json term_to_json(const TermPtr& t);
TermPtr term_from_json(const nlohmann::ordered_json& j);
nlohmann::ordered_json resource_to_json(const RPtr& t);
RPtr resource_from_json(const nlohmann::ordered_json& j);

enum class TreeStyle { Ascii, Json };

// Ascii: one node per line, two-space indentation, λx / @ / variable /
// ⊥ labels, ? at truncated positions, ∅ for the empty tree. Json:
// {"bt": AST, "status": "exact"|"partial", "truncated": [paths]}.
std::string render_tree(const BTResult& bt, TreeStyle style);

}  // namespace cbv
