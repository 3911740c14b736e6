#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace cbv {

// Resource terms: values are variables and abstractions; simple terms are
// applications and bags (finite multisets of values); abstraction bodies
// and application components are simple terms.
enum class RKind { RVar, RAbs, RApp, Bag };

struct RTerm;
using RPtr = std::shared_ptr<const RTerm>;

struct RTerm {
  RKind kind;
  std::string name;          // RVar: name; RAbs: binder
  RPtr child0;               // RAbs: body; RApp: function
  RPtr child1;               // RApp: argument
  std::vector<RPtr> elems;   // Bag: values, stored in canonical order
};

struct GrammarViolation : std::runtime_error {
  using std::runtime_error::runtime_error;
};

RPtr r_var(std::string name);
RPtr r_abs(std::string binder, RPtr body);   // body must be simple
RPtr r_app(RPtr fun, RPtr arg);              // both must be simple
RPtr r_bag(std::vector<RPtr> elems);         // elems must be values

bool r_is_value(const RPtr& t);
bool r_is_simple(const RPtr& t);

std::size_t r_size(const RPtr& t);    // all constructors
std::size_t r_height(const RPtr& t);  // var 0, empty bag 1, else max+1

std::set<std::string> r_free_vars(const RPtr& t);
std::size_t degree(const RPtr& t, const std::string& x);

// Alpha-invariant canonical serialization; bag children are re-sorted by
// their canonical keys under the live binder environment, so multiset
// equality is string equality.
std::string rcanon(const RPtr& t);
bool r_alpha_eq(const RPtr& a, const RPtr& b);
int r_cmp(const RPtr& a, const RPtr& b);

// Alpha-rename binders to x0, x1, ... in pre-order, skipping names that
// occur free.
RPtr r_rename_binders_canonically(const RPtr& t);

// Finite set of resource terms, duplicate-free, iterated in canonical
// order.
class TermSet {
 public:
  TermSet() = default;

  bool insert(const RPtr& t);   // false if already present
  bool contains(const RPtr& t) const;
  std::size_t size() const { return by_key_.size(); }
  bool empty() const { return by_key_.empty(); }

  void merge(const TermSet& other);
  bool operator==(const TermSet& other) const;
  bool operator!=(const TermSet& other) const { return !(*this == other); }

  std::vector<RPtr> elements() const;
  // Elements of *this missing from other.
  std::vector<RPtr> difference(const TermSet& other) const;

  const std::map<std::string, RPtr>& raw() const { return by_key_; }

 private:
  std::map<std::string, RPtr> by_key_;
};

// All ways to hand the values vs to the free occurrences of x, one value
// per occurrence; empty unless degree(e, x) == vs.size().
TermSet linear_subst(const RPtr& e, const std::string& x,
                     const std::vector<RPtr>& vs);

enum class RRedexKind { BetaR, Zero, Sigma1R, Sigma3R };

struct ROccurrence {
  RRedexKind kind;
  std::vector<int> position;   // child indices; bag children by slot
};

// Leftmost-outermost (pre-order) listing of all redexes.
std::vector<ROccurrence> r_find_redexes(const RPtr& e);

struct NotMember : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct InvalidResourceRedex : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// All elements produced by contracting the redex at occ inside e. Zero
// and arity-mismatched BetaR yield no elements at all (the surrounding
// element dies with them).
TermSet contract_at(const RPtr& e, const ROccurrence& occ);

// One set-level step: replace element by its contracta.
TermSet r_step(const TermSet& set, const RPtr& element,
               const ROccurrence& occ);

struct ROrder {
  enum class Pick { Deterministic, RandomSeeded } pick = Pick::Deterministic;
  std::uint64_t seed = 0;
  static ROrder deterministic() { return {}; }
  static ROrder random(std::uint64_t seed) {
    return {Pick::RandomSeeded, seed};
  }
};

// Full normalization; terminates on every input and the result does not
// depend on the order.
TermSet r_normalize(const TermSet& set,
                    const ROrder& order = ROrder::deterministic());

// Normal form of a single element (deterministic serial engine).
TermSet nf_element(const RPtr& e);

// Element-parallel normalization (OpenMP when available); agrees with
// r_normalize.
TermSet r_normalize_par(const TermSet& set);

// Resource approximants:
//   a ::= b | c
//   b ::= [x,...,x] | [\x.a1,...,\x.an] | [x] b a1 ... ak
//   c ::= [\x.a]([y] b a1 ... ak)
bool is_resource_approximant(const RPtr& t);

}  // namespace cbv
