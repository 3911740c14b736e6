#include "cbv/reduce.hpp"

#include <random>

namespace cbv {

namespace {

// Bot stands for an unknown value, so it is allowed wherever the rules
// demand a value.
bool value_like(const TermPtr& t) {
  return t->kind == TermKind::Var || t->kind == TermKind::Abs ||
         t->kind == TermKind::Bot;
}

std::optional<RedexKind> redex_kind_at(const TermPtr& t) {
  if (t->kind != TermKind::App) return std::nullopt;
  const TermPtr& f = t->child0;
  const TermPtr& a = t->child1;
  if (f->kind == TermKind::Abs && value_like(a)) return RedexKind::BetaV;
  if (f->kind == TermKind::App && f->child0->kind == TermKind::Abs) {
    return RedexKind::Sigma1;
  }
  if (value_like(f) && a->kind == TermKind::App &&
      a->child0->kind == TermKind::Abs) {
    return RedexKind::Sigma3;
  }
  return std::nullopt;
}

void find_redexes_into(const TermPtr& t, std::vector<int>& path,
                       std::vector<RedexOccurrence>& out) {
  if (auto k = redex_kind_at(t)) out.push_back({*k, path});
  if (t->kind == TermKind::Abs) {
    path.push_back(0);
    find_redexes_into(t->child0, path, out);
    path.pop_back();
  } else if (t->kind == TermKind::App) {
    path.push_back(0);
    find_redexes_into(t->child0, path, out);
    path.back() = 1;
    find_redexes_into(t->child1, path, out);
    path.pop_back();
  }
}

void collect_names(const TermPtr& t, std::set<std::string>& out) {
  switch (t->kind) {
    case TermKind::Var: out.insert(t->name); return;
    case TermKind::Bot: return;
    case TermKind::Abs:
      out.insert(t->name);
      collect_names(t->child0, out);
      return;
    case TermKind::App:
      collect_names(t->child0, out);
      collect_names(t->child1, out);
      return;
  }
}

TermPtr contract(const TermPtr& t, RedexKind kind,
                 const std::set<std::string>& all_names) {
  auto actual = redex_kind_at(t);
  if (!actual || *actual != kind) {
    throw InvalidRedex("no redex of the requested kind at this position");
  }
  const TermPtr& f = t->child0;
  const TermPtr& a = t->child1;
  switch (kind) {
    case RedexKind::BetaV:
      return subst(f->child0, f->name, a);
    case RedexKind::Sigma1: {
      // (\x.M) N P  ->  (\x'.M' P) N  with x' fresh for the whole term
      const TermPtr& lam = f->child0;
      const TermPtr& n = f->child1;
      std::string x2 = fresh_name(all_names);
      TermPtr body = subst(lam->child0, lam->name, mk_var(x2));
      return mk_app(mk_abs(x2, mk_app(body, a)), n);
    }
    case RedexKind::Sigma3: {
      // V ((\x.M) N)  ->  (\x'.V M') N  with x' fresh for the whole term
      const TermPtr& lam = a->child0;
      const TermPtr& n = a->child1;
      std::string x2 = fresh_name(all_names);
      TermPtr body = subst(lam->child0, lam->name, mk_var(x2));
      return mk_app(mk_abs(x2, mk_app(f, body)), n);
    }
  }
  throw InvalidRedex("unreachable");
}

TermPtr rebuild(const TermPtr& t, const std::vector<int>& path,
                std::size_t i, RedexKind kind,
                const std::set<std::string>& all_names) {
  if (i == path.size()) return contract(t, kind, all_names);
  int c = path[i];
  if (t->kind == TermKind::Abs && c == 0) {
    return mk_abs(t->name, rebuild(t->child0, path, i + 1, kind, all_names));
  }
  if (t->kind == TermKind::App && (c == 0 || c == 1)) {
    if (c == 0) {
      return mk_app(rebuild(t->child0, path, i + 1, kind, all_names),
                    t->child1);
    }
    return mk_app(t->child0,
                  rebuild(t->child1, path, i + 1, kind, all_names));
  }
  throw InvalidRedex("position does not exist in this term");
}

bool is_var_spine(const TermPtr& t);

bool is_h(const TermPtr& t);
bool is_g(const TermPtr& t);

// x H G1 ... Gk with k >= 0, i.e. at least one application off a variable
// head whose first argument is H-class.
bool is_var_spine(const TermPtr& t) {
  if (t->kind != TermKind::App) return false;
  std::vector<TermPtr> args;
  TermPtr cur = t;
  while (cur->kind == TermKind::App) {
    args.push_back(cur->child1);
    cur = cur->child0;
  }
  if (cur->kind != TermKind::Var) return false;
  // args are collected outermost-first; the innermost argument must be H.
  if (!is_h(args.back())) return false;
  for (std::size_t i = 0; i + 1 < args.size(); ++i) {
    if (!is_g(args[i])) return false;
  }
  return true;
}

bool is_h(const TermPtr& t) {
  switch (t->kind) {
    case TermKind::Var:
    case TermKind::Bot: return true;
    case TermKind::Abs: return is_g(t->child0);
    case TermKind::App: return is_var_spine(t);
  }
  return false;
}

bool is_r(const TermPtr& t) {
  if (t->kind != TermKind::App) return false;
  const TermPtr& f = t->child0;
  return f->kind == TermKind::Abs && is_g(f->child0) &&
         is_var_spine(t->child1);
}

bool is_g(const TermPtr& t) { return is_h(t) || is_r(t); }

}  // namespace

std::vector<RedexOccurrence> find_redexes(const TermPtr& t) {
  std::vector<RedexOccurrence> out;
  std::vector<int> path;
  find_redexes_into(t, path, out);
  return out;
}

std::optional<TermPtr> subterm_at(const TermPtr& t,
                                  const std::vector<int>& position) {
  TermPtr cur = t;
  for (int c : position) {
    if (cur->kind == TermKind::Abs && c == 0) {
      cur = cur->child0;
    } else if (cur->kind == TermKind::App && (c == 0 || c == 1)) {
      cur = c == 0 ? cur->child0 : cur->child1;
    } else {
      return std::nullopt;
    }
  }
  return cur;
}

TermPtr step(const TermPtr& t, const RedexOccurrence& r) {
  std::set<std::string> all_names;
  collect_names(t, all_names);
  return rebuild(t, r.position, 0, r.kind, all_names);
}

ReductionOutcome reduce(const TermPtr& t, const Strategy& strategy,
                        std::uint64_t fuel, bool keep_trace) {
  ReductionOutcome out;
  out.term = t;
  if (keep_trace) out.trace.push_back(t);
  std::mt19937_64 rng(strategy.seed);
  for (std::uint64_t i = 0; i < fuel; ++i) {
    std::vector<RedexOccurrence> rs = find_redexes(out.term);
    if (rs.empty()) {
      out.status = ReduceStatus::NormalForm;
      return out;
    }
    std::size_t pick = 0;
    if (strategy.pick == Strategy::Pick::RandomSeeded) {
      pick = static_cast<std::size_t>(rng() % rs.size());
    }
    out.term = step(out.term, rs[pick]);
    ++out.steps_used;
    if (keep_trace) out.trace.push_back(out.term);
  }
  out.status = find_redexes(out.term).empty() ? ReduceStatus::NormalForm
                                              : ReduceStatus::FuelExhausted;
  return out;
}

NfClass classify_nf(const TermPtr& t) {
  if (is_h(t)) return NfClass::G_H;
  if (is_r(t)) return NfClass::G_R;
  if (!find_redexes(t).empty()) return NfClass::NotNormal;
  // Bot-headed applications are normal but outside the grammar; report
  // them with the head class.
  return NfClass::G_H;
}

}  // namespace cbv
