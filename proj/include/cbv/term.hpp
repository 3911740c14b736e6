#pragma once

#include <memory>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace cbv {

// Immutable AST for the value calculus, with an explicit undefined leaf
// (Bot) so partially known terms can share the same representation.
enum class TermKind { Var, Abs, App, Bot };

struct Term;
using TermPtr = std::shared_ptr<const Term>;

struct Term {
  TermKind kind;
  std::string name;   // Var: variable name; Abs: binder name
  TermPtr child0;     // Abs: body; App: function
  TermPtr child1;     // App: argument
};

TermPtr mk_var(std::string name);
TermPtr mk_abs(std::string binder, TermPtr body);
TermPtr mk_app(TermPtr fun, TermPtr arg);
TermPtr mk_bot();

bool is_value(const TermPtr& t);   // variables and abstractions
bool contains_bot(const TermPtr& t);
std::size_t term_size(const TermPtr& t);   // number of AST nodes

std::set<std::string> free_vars(const TermPtr& t);

// Fresh name "x0", "x1", ... not present in `used`.
std::string fresh_name(const std::set<std::string>& used);

// Capture-avoiding substitution M[x := N]; binders are renamed on demand.
TermPtr subst(const TermPtr& m, const std::string& x, const TermPtr& n);

// Nameless canonical serialization: alpha-equivalent terms map to equal
// strings, and lexicographic comparison of the strings yields a total
// order with Var < Abs < App < Bot at each node.
std::string canon(const TermPtr& t);

bool alpha_eq(const TermPtr& a, const TermPtr& b);
int term_cmp(const TermPtr& a, const TermPtr& b);   // -1 / 0 / +1
std::size_t term_hash(const TermPtr& t);

// Alpha-rename binders to x0, x1, ... in pre-order, skipping names that
// occur free; gives every alpha class one representative spelling.
TermPtr rename_binders_canonically(const TermPtr& t);

struct NonValueArg : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A context of shape (\x1...xn. hole) V1 ... Vm. Plugging does not rename:
// free variables of the plugged term may be captured by the binders.
struct HeadContext {
  std::vector<std::string> binders;
  std::vector<TermPtr> args;   // must all be values
};

// Throws NonValueArg if some argument is not a value.
TermPtr plug_head_context(const HeadContext& ctx, const TermPtr& hole);

}  // namespace cbv
