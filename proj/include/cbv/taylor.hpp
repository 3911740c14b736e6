#pragma once

#include <cstdint>
#include <vector>

#include "cbv/approx.hpp"
#include "cbv/resource.hpp"
#include "cbv/term.hpp"

namespace cbv {

// Enumeration caps: every bag cardinality <= max_bag, term height
// <= max_height. Any Bounds makes the expansions below finite.
struct Bounds {
  std::uint32_t max_bag = 2;
  std::uint32_t max_height = 8;
};

bool within_bounds(const RPtr& t, const Bounds& b);
TermSet filter_set(const TermSet& set, const Bounds& b);

// The bounds-filter of the Taylor expansion of m (m may contain bot,
// expanding to the empty bag only).
TermSet taylor(const TermPtr& m, const Bounds& b);

// Same, restricted to elements whose function-position bags are all
// singletons. Every omitted element contains a 0-redex that survives
// until fired, so the normal form of the expansion is unchanged; the cut
// keeps normalization workloads small.
TermSet taylor_zero_free(const TermPtr& m, const Bounds& b);

// Structural membership t ∈ T(m), no enumeration.
bool in_taylor(const RPtr& t, const TermPtr& m);

// The coherence relation: same variable, abstractions with coherent
// bodies, bags whose elements are pairwise coherent across the union
// (self-pairs included), applications componentwise. Not reflexive, not
// transitive.
bool coherent(const RPtr& a, const RPtr& b);

// Pairwise coherence over the set, each element also with itself.
bool is_clique(const TermSet& e);

// Reconstruct a lambda term from a finite clique of simple terms.
// Positions witnessed only by empty bags cannot be determined and yield
// Ambiguous; sets that are not cliques of simple terms yield NotAClique.
struct InferResult {
  enum class Status { Ok, NotAClique, Ambiguous };
  Status status = Status::Ambiguous;
  TermPtr term;   // set when status == Ok
};

InferResult infer_term(const TermSet& e);

// Normal form of the bounded Taylor expansion, restricted to filter.
// saturated reports whether enlarging the enumeration bounds to
// (max_bag+1, max_height+2) leaves the filtered set unchanged.
struct NfTaylorResult {
  TermSet set;
  bool saturated = false;
};

NfTaylorResult taylor_nf(const TermPtr& m, const Bounds& b,
                         const Bounds& filter);

// Bounded normalized Taylor expansion of an approximant: variable bags,
// abstraction bags, empty bag for bot, singleton head bags on spines.
// Every element is a resource approximant.
TermSet normalized_taylor_of_approximant(const TermPtr& a, const Bounds& b);

struct TnBtResult {
  TermSet set;
  BTStatus bt_status = BTStatus::Partial;
};

// Normalized Taylor expansion of the computed Boehm tree (depth derived
// from the height bound; Empty tree gives the empty set).
TnBtResult normalized_taylor_of_bt(const TermPtr& m, std::uint64_t fuel,
                                   const Bounds& b);

// Both sides of the commutation: left = NF of the bounded Taylor
// expansion, right = bounded normalized Taylor of the Boehm tree, both
// restricted to filter.
struct CommutationReport {
  TermSet left;
  TermSet right;
  Bounds filter;
  BTStatus bt_status = BTStatus::Partial;
  bool equal = false;
  std::vector<RPtr> left_only;
  std::vector<RPtr> right_only;
  bool saturated = false;
};

CommutationReport check_commutation(const TermPtr& m, std::uint64_t fuel,
                                    const Bounds& b, const Bounds& filter);

// Whether the two plugged terms still have equal bounded Taylor normal
// forms under the filter.
bool taylor_context_check(const TermPtr& m, const TermPtr& n,
                          const HeadContext& ctx, std::uint64_t fuel,
                          const Bounds& b, const Bounds& filter);

}  // namespace cbv
