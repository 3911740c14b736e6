#include "cbv/approx.hpp"

#include <cassert>

namespace cbv {

namespace {

bool is_a(const TermPtr& t);
bool is_b(const TermPtr& t);

// Unwind an application spine; returns the head and the arguments with
// the innermost argument last.
struct Spine {
  TermPtr head;
  std::vector<TermPtr> args;   // outermost first, innermost last
};

Spine unwind(const TermPtr& t) {
  Spine s;
  TermPtr cur = t;
  while (cur->kind == TermKind::App) {
    s.args.push_back(cur->child1);
    cur = cur->child0;
  }
  s.head = cur;
  return s;
}

// x B A1 ... Ak (at least one application off a variable head).
bool is_b_spine(const TermPtr& t) {
  if (t->kind != TermKind::App) return false;
  Spine s = unwind(t);
  if (s.head->kind != TermKind::Var) return false;
  if (!is_b(s.args.back())) return false;
  for (std::size_t i = 0; i + 1 < s.args.size(); ++i) {
    if (!is_a(s.args[i])) return false;
  }
  return true;
}

bool is_b(const TermPtr& t) {
  switch (t->kind) {
    case TermKind::Var:
    case TermKind::Bot: return true;
    case TermKind::Abs: return is_a(t->child0);
    case TermKind::App: return is_b_spine(t);
  }
  return false;
}

bool is_c(const TermPtr& t) {
  if (t->kind != TermKind::App) return false;
  const TermPtr& f = t->child0;
  return f->kind == TermKind::Abs && is_a(f->child0) && is_b_spine(t->child1);
}

bool is_a(const TermPtr& t) { return is_b(t) || is_c(t); }

bool value_like(const TermPtr& t) {
  return t->kind == TermKind::Var || t->kind == TermKind::Abs ||
         t->kind == TermKind::Bot;
}

struct Env {
  // variable name -> binder depth, innermost wins
  std::vector<std::pair<std::string, int>> stack;
  int lookup(const std::string& name) const {
    for (auto it = stack.rbegin(); it != stack.rend(); ++it) {
      if (it->first == name) return it->second;
    }
    return -1;
  }
};

bool leq_rec(const TermPtr& a, const TermPtr& b, Env& ea, Env& eb,
             int depth) {
  if (a->kind == TermKind::Bot) return value_like(b);
  if (a->kind != b->kind) return false;
  switch (a->kind) {
    case TermKind::Var: {
      int da = ea.lookup(a->name);
      int db = eb.lookup(b->name);
      if (da != db) return false;
      return da >= 0 || a->name == b->name;
    }
    case TermKind::Abs: {
      ea.stack.emplace_back(a->name, depth);
      eb.stack.emplace_back(b->name, depth);
      bool r = leq_rec(a->child0, b->child0, ea, eb, depth + 1);
      ea.stack.pop_back();
      eb.stack.pop_back();
      return r;
    }
    case TermKind::App:
      return leq_rec(a->child0, b->child0, ea, eb, depth) &&
             leq_rec(a->child1, b->child1, ea, eb, depth);
    case TermKind::Bot:
      return true;
  }
  return false;
}

std::optional<TermPtr> join_rec(const TermPtr& a, const TermPtr& b) {
  if (a->kind == TermKind::Bot) {
    return value_like(b) ? std::optional<TermPtr>(b) : std::nullopt;
  }
  if (b->kind == TermKind::Bot) {
    return value_like(a) ? std::optional<TermPtr>(a) : std::nullopt;
  }
  if (a->kind != b->kind) return std::nullopt;
  switch (a->kind) {
    case TermKind::Var:
      if (a->name == b->name) return a;
      return std::nullopt;
    case TermKind::Abs: {
      // Move both bodies onto a shared fresh binder so variable cases
      // below reduce to literal name equality.
      std::set<std::string> avoid = free_vars(a->child0);
      std::set<std::string> fb = free_vars(b->child0);
      avoid.insert(fb.begin(), fb.end());
      avoid.insert(a->name);
      avoid.insert(b->name);
      std::string z = fresh_name(avoid);
      auto body = join_rec(subst(a->child0, a->name, mk_var(z)),
                           subst(b->child0, b->name, mk_var(z)));
      if (!body) return std::nullopt;
      return mk_abs(z, *body);
    }
    case TermKind::App: {
      auto f = join_rec(a->child0, b->child0);
      if (!f) return std::nullopt;
      auto g = join_rec(a->child1, b->child1);
      if (!g) return std::nullopt;
      return mk_app(*f, *g);
    }
    case TermKind::Bot:
      return a;
  }
  return std::nullopt;
}

bool is_var_headed_app(const TermPtr& t) {
  if (t->kind != TermKind::App) return false;
  return unwind(t).head->kind == TermKind::Var;
}

std::optional<TermPtr> da(const TermPtr& n) {
  switch (n->kind) {
    case TermKind::Var:
    case TermKind::Bot:
      return n;
    case TermKind::Abs: {
      auto body = da(n->child0);
      if (!body) return mk_bot();
      return mk_abs(n->name, *body);
    }
    case TermKind::App: {
      Spine s = unwind(n);
      if (s.head->kind == TermKind::Var) {
        std::vector<TermPtr> ds;
        ds.reserve(s.args.size());
        for (const TermPtr& arg : s.args) {
          auto d = da(arg);
          if (!d) return std::nullopt;
          ds.push_back(*d);
        }
        if (!is_b(ds.back())) return std::nullopt;
        TermPtr out = s.head;
        for (auto it = ds.rbegin(); it != ds.rend(); ++it) {
          out = mk_app(out, *it);
        }
        return out;
      }
      if (n->child0->kind == TermKind::Abs &&
          is_var_headed_app(n->child1)) {
        auto body = da(n->child0->child0);
        if (!body) return std::nullopt;
        auto arg = da(n->child1);
        if (!arg) return std::nullopt;
        if (!is_b_spine(*arg)) return std::nullopt;
        return mk_app(mk_abs(n->child0->name, *body), *arg);
      }
      // Redex shapes and value arguments have nothing below them.
      return std::nullopt;
    }
  }
  return std::nullopt;
}

struct Truncator {
  std::uint32_t limit;
  std::vector<std::vector<int>> cut;

  TermPtr slot(const TermPtr& t, std::uint32_t budget,
               std::vector<int>& path) {
    if (budget == 0 && t->kind != TermKind::Var &&
        t->kind != TermKind::Bot) {
      cut.push_back(path);
      return mk_bot();
    }
    switch (t->kind) {
      case TermKind::Var:
      case TermKind::Bot:
        return t;
      case TermKind::Abs: {
        path.push_back(0);
        TermPtr body = slot(t->child0, budget - 1, path);
        path.pop_back();
        return body == t->child0 ? t : mk_abs(t->name, body);
      }
      case TermKind::App: {
        if (t->child0->kind == TermKind::Abs) {
          // C shape: the abstraction node and its body slot.
          path.push_back(0);
          path.push_back(0);
          TermPtr body =
              slot(t->child0->child0, budget >= 2 ? budget - 2 : 0, path);
          path.pop_back();
          path.pop_back();
          path.push_back(1);
          TermPtr arg = spine(t->child1, budget - 1, path);
          path.pop_back();
          if (body == t->child0->child0 && arg == t->child1) return t;
          return mk_app(mk_abs(t->child0->name, body), arg);
        }
        return spine(t, budget, path);
      }
    }
    return t;
  }

  // Variable-headed spine: the applications and the head are structural,
  // only the argument slots can be cut.
  TermPtr spine(const TermPtr& t, std::uint32_t budget,
                std::vector<int>& path) {
    if (t->kind != TermKind::App) return t;
    path.push_back(0);
    TermPtr f = spine(t->child0, budget >= 1 ? budget - 1 : 0, path);
    path.pop_back();
    path.push_back(1);
    TermPtr a = slot(t->child1, budget >= 1 ? budget - 1 : 0, path);
    path.pop_back();
    if (f == t->child0 && a == t->child1) return t;
    return mk_app(f, a);
  }
};

}  // namespace

std::optional<ApproxClass> is_approximant(const TermPtr& t) {
  if (is_b(t)) return ApproxClass::A_B;
  if (is_c(t)) return ApproxClass::A_C;
  return std::nullopt;
}

bool leq(const TermPtr& a, const TermPtr& b) {
  Env ea, eb;
  return leq_rec(a, b, ea, eb, 0);
}

std::optional<TermPtr> join(const TermPtr& a, const TermPtr& b) {
  return join_rec(a, b);
}

std::optional<TermPtr> direct_approximant(const TermPtr& n) {
  return da(n);
}

BTResult boehm_tree(const TermPtr& m, std::uint64_t fuel,
                    std::uint32_t depth) {
#ifndef NDEBUG
  ReductionOutcome outcome = reduce(m, Strategy::lmo(), fuel, true);
  std::optional<TermPtr> prev;
  for (const TermPtr& step : outcome.trace) {
    if (auto cur = da(step)) {
      assert(!prev || leq(*prev, *cur));
      prev = *cur;
    }
  }
#else
  ReductionOutcome outcome = reduce(m, Strategy::lmo(), fuel);
#endif
  BTResult out;
  auto full = da(outcome.term);
  if (!full) {
    out.tree = std::nullopt;
    out.status = BTStatus::Partial;
    return out;
  }
  TermPtr tree = *full;
  if (depth != kUnboundedDepth) {
    Truncator tr{depth, {}};
    std::vector<int> path;
    tree = tr.slot(tree, depth, path);
    out.truncated_positions = std::move(tr.cut);
  }
  auto cls = is_approximant(tree);
  assert(cls);
  out.tree = Approximant{tree, cls.value_or(ApproxClass::A_B)};
  out.status = (outcome.status == ReduceStatus::NormalForm &&
                out.truncated_positions.empty())
                   ? BTStatus::Exact
                   : BTStatus::Partial;
  return out;
}

Cert is_approximant_of(const TermPtr& a, const TermPtr& m,
                       std::uint64_t fuel) {
  if (!is_approximant(a)) return Cert::Unknown;
  ReductionOutcome outcome = reduce(m, Strategy::lmo(), fuel);
  auto d = da(outcome.term);
  if (d && leq(a, *d)) return Cert::Yes;
  return Cert::Unknown;
}

Cert is_potentially_valuable(const TermPtr& m, std::uint64_t fuel) {
  BTResult bt = boehm_tree(m, fuel);
  if (bt.tree && bt.tree->term->kind != TermKind::Bot) return Cert::Yes;
  return Cert::Unknown;
}

}  // namespace cbv
