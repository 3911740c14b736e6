#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "cbv/term.hpp"

namespace cbv {

// The three reduction rules: beta restricted to value arguments, and the
// two permutation rules that commute stuck applications.
enum class RedexKind { BetaV, Sigma1, Sigma3 };

// Position = child-index path from the root (Abs body = 0, App fun = 0,
// App arg = 1).
struct RedexOccurrence {
  RedexKind kind;
  std::vector<int> position;
};

enum class ReduceStatus { NormalForm, FuelExhausted };

struct ReductionOutcome {
  TermPtr term;
  std::uint64_t steps_used = 0;
  ReduceStatus status = ReduceStatus::NormalForm;
  std::vector<TermPtr> trace;   // filled only when requested
};

struct Strategy {
  enum class Pick { LeftmostOutermost, RandomSeeded } pick =
      Pick::LeftmostOutermost;
  std::uint64_t seed = 0;
  static Strategy lmo() { return {}; }
  static Strategy random(std::uint64_t seed) {
    return {Pick::RandomSeeded, seed};
  }
};

// All redexes in leftmost-outermost order (node before children, function
// before argument).
std::vector<RedexOccurrence> find_redexes(const TermPtr& t);

std::optional<TermPtr> subterm_at(const TermPtr& t,
                                  const std::vector<int>& position);

struct InvalidRedex : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Contract one redex. Throws InvalidRedex when the position/kind does not
// name a redex of that kind. The permutation rules rename the moved binder
// to a globally fresh name, so their side conditions always hold.
TermPtr step(const TermPtr& t, const RedexOccurrence& r);

ReductionOutcome reduce(const TermPtr& t, const Strategy& strategy,
                        std::uint64_t fuel, bool keep_trace = false);

// Normal-form classification: values and variable-headed spines (G_H),
// stuck applications (G_R), or reducible.
enum class NfClass { G_H, G_R, NotNormal };

NfClass classify_nf(const TermPtr& t);

}  // namespace cbv
