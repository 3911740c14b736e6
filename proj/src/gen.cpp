#include "cbv/gen.hpp"

namespace cbv {

namespace {

std::uint64_t pick(std::mt19937_64& rng, std::uint64_t n) {
  return n == 0 ? 0 : rng() % n;
}

TermPtr gen_term_rec(std::mt19937_64& rng, const TermGen& g,
                     std::uint32_t& budget, std::uint32_t lambda_depth,
                     std::vector<std::string>& bound) {
  auto leaf = [&]() -> TermPtr {
    if (budget > 0) --budget;
    if (g.allow_bot && pick(rng, 5) == 0) return mk_bot();
    std::size_t total = g.free_pool.size() + bound.size();
    std::size_t i = static_cast<std::size_t>(pick(rng, total));
    if (i < bound.size()) return mk_var(bound[bound.size() - 1 - i]);
    return mk_var(g.free_pool[i - bound.size()]);
  };
  if (budget <= 1) return leaf();
  std::uint64_t roll = pick(rng, 10);
  if (roll < 4) {   // application
    --budget;
    TermPtr f = gen_term_rec(rng, g, budget, lambda_depth, bound);
    TermPtr a = gen_term_rec(rng, g, budget, lambda_depth, bound);
    return mk_app(f, a);
  }
  if (roll < 7 && lambda_depth < g.max_lambda_depth) {   // abstraction
    --budget;
    std::string name = "v" + std::to_string(bound.size());
    bound.push_back(name);
    TermPtr body = gen_term_rec(rng, g, budget, lambda_depth + 1, bound);
    bound.pop_back();
    return mk_abs(name, body);
  }
  return leaf();
}

RPtr gen_bag(std::mt19937_64& rng, const ResourceGen& g,
             std::uint32_t& budget, std::uint32_t depth,
             std::vector<std::string>& bound);

RPtr gen_simple(std::mt19937_64& rng, const ResourceGen& g,
                std::uint32_t& budget, std::uint32_t depth,
                std::vector<std::string>& bound) {
  if (budget > 0) --budget;
  if (depth < g.max_depth && budget > 2 && pick(rng, 3) == 0) {
    RPtr f = gen_simple(rng, g, budget, depth + 1, bound);
    RPtr a = gen_simple(rng, g, budget, depth + 1, bound);
    return r_app(f, a);
  }
  return gen_bag(rng, g, budget, depth, bound);
}

RPtr gen_value(std::mt19937_64& rng, const ResourceGen& g,
               std::uint32_t& budget, std::uint32_t depth,
               std::vector<std::string>& bound) {
  if (budget > 0) --budget;
  if (depth < g.max_depth && budget > 1 && pick(rng, 3) == 0) {
    std::string name = "v" + std::to_string(bound.size());
    bound.push_back(name);
    RPtr body = gen_simple(rng, g, budget, depth + 1, bound);
    bound.pop_back();
    return r_abs(name, body);
  }
  std::size_t total = g.free_pool.size() + bound.size();
  std::size_t i = static_cast<std::size_t>(pick(rng, total));
  if (i < bound.size()) return r_var(bound[bound.size() - 1 - i]);
  return r_var(g.free_pool[i - bound.size()]);
}

RPtr gen_bag(std::mt19937_64& rng, const ResourceGen& g,
             std::uint32_t& budget, std::uint32_t depth,
             std::vector<std::string>& bound) {
  std::uint32_t k =
      static_cast<std::uint32_t>(pick(rng, g.max_bag + 1));
  std::vector<RPtr> elems;
  for (std::uint32_t i = 0; i < k && budget > 0; ++i) {
    elems.push_back(gen_value(rng, g, budget, depth + 1, bound));
  }
  return r_bag(std::move(elems));
}

}  // namespace

TermPtr TermGen::operator()(std::mt19937_64& rng) const {
  std::uint32_t budget = max_size;
  std::vector<std::string> bound;
  return gen_term_rec(rng, *this, budget, 0, bound);
}

RPtr ResourceGen::operator()(std::mt19937_64& rng) const {
  std::uint32_t budget = max_size;
  std::vector<std::string> bound;
  return gen_simple(rng, *this, budget, 0, bound);
}

TermSet gen_termset(std::mt19937_64& rng, const ResourceGen& gen,
                    std::uint32_t max_elems) {
  TermSet out;
  std::uint32_t k = static_cast<std::uint32_t>(pick(rng, max_elems + 1));
  for (std::uint32_t i = 0; i < k; ++i) out.insert(gen(rng));
  return out;
}

HeadContext gen_head_context(std::mt19937_64& rng,
                             std::uint32_t max_binders,
                             std::uint32_t value_size) {
  HeadContext ctx;
  std::uint32_t n = static_cast<std::uint32_t>(pick(rng, max_binders + 1));
  for (std::uint32_t i = 0; i < n; ++i) {
    ctx.binders.push_back("c" + std::to_string(i));
  }
  std::uint32_t m = static_cast<std::uint32_t>(pick(rng, n + 1));
  TermGen values{value_size, 2, false, {"x"}};
  for (std::uint32_t i = 0; i < m; ++i) {
    // Context binders may appear free in the argument values; plugging
    // is capture-permitting by design.
    TermGen g = values;
    g.free_pool.insert(g.free_pool.end(), ctx.binders.begin(),
                       ctx.binders.end());
    TermPtr v = g(rng);
    if (!is_value(v)) v = mk_abs("u", v);
    ctx.args.push_back(v);
  }
  return ctx;
}

TermPtr weaken(std::mt19937_64& rng, const TermPtr& t) {
  bool value_like = is_value(t) || t->kind == TermKind::Bot;
  if (value_like && pick(rng, 3) == 0) return mk_bot();
  switch (t->kind) {
    case TermKind::Var:
    case TermKind::Bot:
      return t;
    case TermKind::Abs:
      return mk_abs(t->name, weaken(rng, t->child0));
    case TermKind::App:
      return mk_app(weaken(rng, t->child0), weaken(rng, t->child1));
  }
  return t;
}

}  // namespace cbv
