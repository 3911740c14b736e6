#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "cbv/resource.hpp"
#include "cbv/term.hpp"

namespace cbv {

// Seeded random Λ⊥-term generator used by property tests and benches.
struct TermGen {
  std::uint32_t max_size = 12;
  std::uint32_t max_lambda_depth = 3;
  bool allow_bot = false;
  std::vector<std::string> free_pool = {"x", "y", "z"};

  TermPtr operator()(std::mt19937_64& rng) const;
};

// Random simple resource terms (bags and applications of them).
struct ResourceGen {
  std::uint32_t max_size = 14;
  std::uint32_t max_bag = 2;
  std::uint32_t max_depth = 4;
  std::vector<std::string> free_pool = {"x", "y", "z"};

  RPtr operator()(std::mt19937_64& rng) const;
};

TermSet gen_termset(std::mt19937_64& rng, const ResourceGen& gen,
                    std::uint32_t max_elems);

// Random head context (λx1...xn.[-])V1...Vm with value arguments.
HeadContext gen_head_context(std::mt19937_64& rng,
                             std::uint32_t max_binders,
                             std::uint32_t value_size);

// Random lowering: replaces some value positions by bot, so the result
// is below the input in the approximation order.
TermPtr weaken(std::mt19937_64& rng, const TermPtr& t);

}  // namespace cbv
