#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "cbv/reduce.hpp"
#include "cbv/term.hpp"

namespace cbv {

// Which production of the approximant grammar a term matches:
//   A ::= B | C
//   B ::= x | \x.A | bot | x B A1 ... Ak
//   C ::= (\x.A)(y B A1 ... Ak)
enum class ApproxClass { A_B, A_C };

struct Approximant {
  TermPtr term;
  ApproxClass cls;
};

std::optional<ApproxClass> is_approximant(const TermPtr& t);

// The approximation order: a ⊑ b when a is b with some value subterms
// replaced by bot. bot never sits below an application.
bool leq(const TermPtr& a, const TermPtr& b);

// Least upper bound w.r.t. leq, or nullopt when shapes clash outside
// bot positions.
std::optional<TermPtr> join(const TermPtr& a, const TermPtr& b);

// The greatest approximant below a term, or nullopt when none exists
// (redex shapes have no approximant below them).
std::optional<TermPtr> direct_approximant(const TermPtr& n);

enum class BTStatus { Exact, Partial };

// A computed prefix of a Boehm tree. tree == nullopt encodes the empty
// supremum (no approximant at all), which is distinct from the bot leaf.
struct BTResult {
  std::optional<Approximant> tree;
  BTStatus status = BTStatus::Partial;
  std::vector<std::vector<int>> truncated_positions;
};

constexpr std::uint32_t kUnboundedDepth = 0xffffffffu;

// Reduce leftmost-outermost up to fuel, extract the direct approximant of
// the endpoint, and cut it below `depth` constructor layers (lambda and
// application nodes each count one).
BTResult boehm_tree(const TermPtr& m, std::uint64_t fuel,
                    std::uint32_t depth = kUnboundedDepth);

// Semi-decision results: Yes is sound, Unknown is "not certified with
// this much fuel".
enum class Cert { Yes, Unknown };

Cert is_approximant_of(const TermPtr& a, const TermPtr& m,
                       std::uint64_t fuel);

Cert is_potentially_valuable(const TermPtr& m, std::uint64_t fuel);

}  // namespace cbv
