#include "cbv/taylor.hpp"

#include <algorithm>
#include <functional>

namespace cbv {

namespace {

bool bags_within(const RPtr& t, std::uint32_t max_bag) {
  switch (t->kind) {
    case RKind::RVar: return true;
    case RKind::RAbs: return bags_within(t->child0, max_bag);
    case RKind::RApp:
      return bags_within(t->child0, max_bag) &&
             bags_within(t->child1, max_bag);
    case RKind::Bag:
      if (t->elems.size() > max_bag) return false;
      for (const RPtr& v : t->elems) {
        if (!bags_within(v, max_bag)) return false;
      }
      return true;
  }
  return true;
}

// Binder-depth canonicalization: every binder at abstraction depth d is
// renamed to an internal name encoding d, so structural comparisons
// across two terms reduce to literal name equality. The \x01 prefix
// cannot collide with parsed identifiers.
std::string depth_name(int depth) {
  return std::string(1, '\x01') + std::to_string(depth);
}

RPtr r_depth_canon(const RPtr& t, std::map<std::string, std::string>& ren,
                   int depth) {
  switch (t->kind) {
    case RKind::RVar: {
      auto it = ren.find(t->name);
      return it == ren.end() ? t : r_var(it->second);
    }
    case RKind::RAbs: {
      std::string next = depth_name(depth);
      auto it = ren.find(t->name);
      bool had = it != ren.end();
      std::string saved = had ? it->second : "";
      ren[t->name] = next;
      RPtr body = r_depth_canon(t->child0, ren, depth + 1);
      if (had) {
        ren[t->name] = saved;
      } else {
        ren.erase(t->name);
      }
      return r_abs(next, body);
    }
    case RKind::RApp: {
      RPtr f = r_depth_canon(t->child0, ren, depth);
      RPtr a = r_depth_canon(t->child1, ren, depth);
      return r_app(f, a);
    }
    case RKind::Bag: {
      std::vector<RPtr> es;
      es.reserve(t->elems.size());
      for (const RPtr& v : t->elems) {
        es.push_back(r_depth_canon(v, ren, depth));
      }
      return r_bag(std::move(es));
    }
  }
  return t;
}

RPtr r_depth_canon(const RPtr& t) {
  std::map<std::string, std::string> ren;
  return r_depth_canon(t, ren, 0);
}

TermPtr t_depth_canon(const TermPtr& t,
                      std::map<std::string, std::string>& ren, int depth) {
  switch (t->kind) {
    case TermKind::Var: {
      auto it = ren.find(t->name);
      return it == ren.end() ? t : mk_var(it->second);
    }
    case TermKind::Bot:
      return t;
    case TermKind::Abs: {
      std::string next = depth_name(depth);
      auto it = ren.find(t->name);
      bool had = it != ren.end();
      std::string saved = had ? it->second : "";
      ren[t->name] = next;
      TermPtr body = t_depth_canon(t->child0, ren, depth + 1);
      if (had) {
        ren[t->name] = saved;
      } else {
        ren.erase(t->name);
      }
      return mk_abs(next, body);
    }
    case TermKind::App: {
      TermPtr f = t_depth_canon(t->child0, ren, depth);
      TermPtr a = t_depth_canon(t->child1, ren, depth);
      return mk_app(f, a);
    }
  }
  return t;
}

TermPtr t_depth_canon(const TermPtr& t) {
  std::map<std::string, std::string> ren;
  return t_depth_canon(t, ren, 0);
}

// All multisets of size lo..hi over the given distinct values.
void bags_over(const std::vector<RPtr>& values, std::uint32_t lo,
               std::uint32_t hi, std::vector<RPtr>& out) {
  std::vector<RPtr> cur;
  std::function<void(std::size_t, std::uint32_t)> rec =
      [&](std::size_t start, std::uint32_t remaining) {
        if (remaining == 0) {
          out.push_back(r_bag(cur));
          return;
        }
        for (std::size_t i = start; i < values.size(); ++i) {
          cur.push_back(values[i]);
          rec(i, remaining - 1);
          cur.pop_back();
        }
      };
  for (std::uint32_t k = lo; k <= hi; ++k) rec(0, k);
}

std::vector<RPtr> enum_taylor(const TermPtr& m, std::uint32_t max_bag,
                              int budget, bool applied, bool zero_free) {
  std::vector<RPtr> out;
  if (budget < 1) return out;
  std::uint32_t lo = 0;
  std::uint32_t hi = max_bag;
  if (zero_free && applied) lo = hi = 1;
  switch (m->kind) {
    case TermKind::Var: {
      for (std::uint32_t k = lo; k <= hi; ++k) {
        std::vector<RPtr> copies(k, r_var(m->name));
        out.push_back(r_bag(std::move(copies)));
      }
      return out;
    }
    case TermKind::Bot: {
      if (lo == 0) out.push_back(r_bag({}));
      return out;
    }
    case TermKind::Abs: {
      std::vector<RPtr> bodies =
          enum_taylor(m->child0, max_bag, budget - 2, false, zero_free);
      std::vector<RPtr> values;
      values.reserve(bodies.size());
      for (const RPtr& t : bodies) values.push_back(r_abs(m->name, t));
      bags_over(values, lo, hi, out);
      return out;
    }
    case TermKind::App: {
      std::vector<RPtr> fs =
          enum_taylor(m->child0, max_bag, budget - 1, true, zero_free);
      std::vector<RPtr> as =
          enum_taylor(m->child1, max_bag, budget - 1, false, zero_free);
      for (const RPtr& f : fs) {
        for (const RPtr& a : as) out.push_back(r_app(f, a));
      }
      return out;
    }
  }
  return out;
}

// Both arguments binder-depth-canonicalized.
bool in_taylor_canon(const RPtr& t, const TermPtr& m) {
  if (t->kind == RKind::Bag) {
    switch (m->kind) {
      case TermKind::Var:
        for (const RPtr& v : t->elems) {
          if (v->kind != RKind::RVar || v->name != m->name) return false;
        }
        return true;
      case TermKind::Abs:
        for (const RPtr& v : t->elems) {
          if (v->kind != RKind::RAbs ||
              !in_taylor_canon(v->child0, m->child0)) {
            return false;
          }
        }
        return true;
      case TermKind::Bot:
        return t->elems.empty();
      case TermKind::App:
        return false;
    }
  }
  if (t->kind == RKind::RApp) {
    return m->kind == TermKind::App &&
           in_taylor_canon(t->child0, m->child0) &&
           in_taylor_canon(t->child1, m->child1);
  }
  return false;   // bare values never occur in an expansion
}

// Both arguments binder-depth-canonicalized.
bool coh(const RPtr& a, const RPtr& b) {
  if (a->kind != b->kind) return false;
  switch (a->kind) {
    case RKind::RVar:
      return a->name == b->name;
    case RKind::RAbs:
      return coh(a->child0, b->child0);
    case RKind::RApp:
      return coh(a->child0, b->child0) && coh(a->child1, b->child1);
    case RKind::Bag: {
      std::vector<RPtr> all = a->elems;
      all.insert(all.end(), b->elems.begin(), b->elems.end());
      for (std::size_t i = 0; i < all.size(); ++i) {
        for (std::size_t j = i; j < all.size(); ++j) {
          if (!coh(all[i], all[j])) return false;
        }
      }
      return true;
    }
  }
  return false;
}

struct NodeInfer {
  InferResult::Status status = InferResult::Status::Ok;
  TermPtr term;
};

NodeInfer infer_node(const std::vector<RPtr>& elems) {
  bool all_bags = true;
  bool all_apps = true;
  for (const RPtr& e : elems) {
    all_bags = all_bags && e->kind == RKind::Bag;
    all_apps = all_apps && e->kind == RKind::RApp;
  }
  if (all_bags) {
    std::vector<RPtr> contents;
    for (const RPtr& e : elems) {
      contents.insert(contents.end(), e->elems.begin(), e->elems.end());
    }
    if (contents.empty()) {
      return {InferResult::Status::Ambiguous, nullptr};
    }
    bool vars = true;
    bool abses = true;
    for (const RPtr& v : contents) {
      vars = vars && v->kind == RKind::RVar &&
             v->name == contents[0]->name;
      abses = abses && v->kind == RKind::RAbs;
    }
    if (vars) return {InferResult::Status::Ok, mk_var(contents[0]->name)};
    if (abses) {
      // Depth canonicalization gave all binders at this position the
      // same name.
      std::vector<RPtr> bodies;
      bodies.reserve(contents.size());
      for (const RPtr& v : contents) bodies.push_back(v->child0);
      NodeInfer sub = infer_node(bodies);
      if (sub.status != InferResult::Status::Ok) return sub;
      return {InferResult::Status::Ok,
              mk_abs(contents[0]->name, sub.term)};
    }
    return {InferResult::Status::NotAClique, nullptr};
  }
  if (all_apps) {
    std::vector<RPtr> lefts, rights;
    lefts.reserve(elems.size());
    rights.reserve(elems.size());
    for (const RPtr& e : elems) {
      lefts.push_back(e->child0);
      rights.push_back(e->child1);
    }
    NodeInfer f = infer_node(lefts);
    if (f.status != InferResult::Status::Ok) return f;
    NodeInfer a = infer_node(rights);
    if (a.status != InferResult::Status::Ok) return a;
    return {InferResult::Status::Ok, mk_app(f.term, a.term)};
  }
  return {InferResult::Status::NotAClique, nullptr};
}

// Iterate the cartesian product of the slot sets.
void product(const std::vector<std::vector<RPtr>>& slots,
             const std::function<void(const std::vector<RPtr>&)>& fn) {
  for (const auto& s : slots) {
    if (s.empty()) return;
  }
  std::vector<std::size_t> idx(slots.size(), 0);
  std::vector<RPtr> pick(slots.size());
  for (;;) {
    for (std::size_t i = 0; i < slots.size(); ++i) pick[i] = slots[i][idx[i]];
    fn(pick);
    std::size_t i = 0;
    for (; i < slots.size(); ++i) {
      if (++idx[i] < slots[i].size()) break;
      idx[i] = 0;
    }
    if (i == slots.size()) return;
  }
}

std::vector<RPtr> enum_tn(const TermPtr& a, std::uint32_t max_bag,
                          int budget) {
  std::vector<RPtr> out;
  if (budget < 1) return out;
  switch (a->kind) {
    case TermKind::Bot:
      out.push_back(r_bag({}));
      return out;
    case TermKind::Var: {
      for (std::uint32_t k = 0; k <= max_bag; ++k) {
        std::vector<RPtr> copies(k, r_var(a->name));
        out.push_back(r_bag(std::move(copies)));
      }
      return out;
    }
    case TermKind::Abs: {
      std::vector<RPtr> bodies = enum_tn(a->child0, max_bag, budget - 2);
      std::vector<RPtr> values;
      values.reserve(bodies.size());
      for (const RPtr& t : bodies) values.push_back(r_abs(a->name, t));
      bags_over(values, 0, max_bag, out);
      return out;
    }
    case TermKind::App: {
      // Unwind the spine; approximants are variable-headed (B) or a
      // single abstraction applied to a variable-headed spine (C).
      std::vector<TermPtr> args;
      TermPtr cur = a;
      while (cur->kind == TermKind::App) {
        args.push_back(cur->child1);
        cur = cur->child0;
      }
      std::reverse(args.begin(), args.end());   // innermost first
      int len = static_cast<int>(args.size());
      if (cur->kind == TermKind::Var) {
        if (budget < len + 1) return out;
        std::vector<std::vector<RPtr>> slots;
        slots.reserve(args.size());
        for (int i = 0; i < len; ++i) {
          slots.push_back(enum_tn(args[static_cast<std::size_t>(i)],
                                  max_bag, budget - (len - i)));
        }
        RPtr head = r_bag({r_var(cur->name)});
        product(slots, [&](const std::vector<RPtr>& pick) {
          RPtr t = head;
          for (const RPtr& p : pick) t = r_app(t, p);
          out.push_back(t);
        });
        return out;
      }
      if (cur->kind == TermKind::Abs && len == 1) {
        std::vector<RPtr> bodies = enum_tn(cur->child0, max_bag, budget - 3);
        std::vector<RPtr> spines = enum_tn(args[0], max_bag, budget - 1);
        for (const RPtr& s : bodies) {
          RPtr head = r_bag({r_abs(cur->name, s)});
          for (const RPtr& t : spines) out.push_back(r_app(head, t));
        }
        return out;
      }
      return out;
    }
  }
  return out;
}

TermSet to_set(const std::vector<RPtr>& elems) {
  TermSet out;
  for (const RPtr& e : elems) out.insert(e);
  return out;
}

}  // namespace

bool within_bounds(const RPtr& t, const Bounds& b) {
  return bags_within(t, b.max_bag) && r_height(t) <= b.max_height;
}

TermSet filter_set(const TermSet& set, const Bounds& b) {
  TermSet out;
  for (const auto& [key, t] : set.raw()) {
    if (within_bounds(t, b)) out.insert(t);
  }
  return out;
}

TermSet taylor(const TermPtr& m, const Bounds& b) {
  return to_set(enum_taylor(m, b.max_bag,
                            static_cast<int>(b.max_height), false, false));
}

TermSet taylor_zero_free(const TermPtr& m, const Bounds& b) {
  return to_set(enum_taylor(m, b.max_bag,
                            static_cast<int>(b.max_height), false, true));
}

bool in_taylor(const RPtr& t, const TermPtr& m) {
  return in_taylor_canon(r_depth_canon(t), t_depth_canon(m));
}

bool coherent(const RPtr& a, const RPtr& b) {
  return coh(r_depth_canon(a), r_depth_canon(b));
}

bool is_clique(const TermSet& e) {
  std::vector<RPtr> elems = e.elements();
  std::vector<RPtr> canon;
  canon.reserve(elems.size());
  for (const RPtr& t : elems) canon.push_back(r_depth_canon(t));
  int n = static_cast<int>(canon.size());
  bool ok = true;
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) reduction(&& : ok)
#endif
  for (int i = 0; i < n; ++i) {
    bool row = true;
    for (int j = i; j < n; ++j) {
      row = row && coh(canon[static_cast<std::size_t>(i)],
                       canon[static_cast<std::size_t>(j)]);
    }
    ok = ok && row;
  }
  return ok;
}

InferResult infer_term(const TermSet& e) {
  if (e.empty()) return {InferResult::Status::Ambiguous, nullptr};
  if (!is_clique(e)) return {InferResult::Status::NotAClique, nullptr};
  std::vector<RPtr> canon;
  canon.reserve(e.size());
  for (const RPtr& t : e.elements()) {
    if (r_is_value(t)) return {InferResult::Status::NotAClique, nullptr};
    canon.push_back(r_depth_canon(t));
  }
  NodeInfer r = infer_node(canon);
  if (r.status != InferResult::Status::Ok) return {r.status, nullptr};
  return {InferResult::Status::Ok, rename_binders_canonically(r.term)};
}

NfTaylorResult taylor_nf(const TermPtr& m, const Bounds& b,
                         const Bounds& filter) {
  TermSet base = filter_set(r_normalize_par(taylor_zero_free(m, b)), filter);
  Bounds larger{b.max_bag + 1, b.max_height + 2};
  TermSet again =
      filter_set(r_normalize_par(taylor_zero_free(m, larger)), filter);
  return {base, base == again};
}

TermSet normalized_taylor_of_approximant(const TermPtr& a,
                                         const Bounds& b) {
  if (!is_approximant(a)) {
    throw GrammarViolation("normalized expansion needs an approximant");
  }
  return to_set(enum_tn(a, b.max_bag, static_cast<int>(b.max_height)));
}

TnBtResult normalized_taylor_of_bt(const TermPtr& m, std::uint64_t fuel,
                                   const Bounds& b) {
  BTResult bt = boehm_tree(m, fuel, b.max_height + 2);
  if (!bt.tree) return {TermSet{}, bt.status};
  return {normalized_taylor_of_approximant(bt.tree->term, b), bt.status};
}

CommutationReport check_commutation(const TermPtr& m, std::uint64_t fuel,
                                    const Bounds& b, const Bounds& filter) {
  CommutationReport report;
  report.filter = filter;
  NfTaylorResult left = taylor_nf(m, b, filter);
  report.left = left.set;
  report.saturated = left.saturated;
  TnBtResult right = normalized_taylor_of_bt(m, fuel, b);
  report.right = filter_set(right.set, filter);
  report.bt_status = right.bt_status;
  report.equal = report.left == report.right;
  if (!report.equal) {
    report.left_only = report.left.difference(report.right);
    report.right_only = report.right.difference(report.left);
  }
  return report;
}

bool taylor_context_check(const TermPtr& m, const TermPtr& n,
                          const HeadContext& ctx, std::uint64_t fuel,
                          const Bounds& b, const Bounds& filter) {
  (void)fuel;
  TermPtr cm = plug_head_context(ctx, m);
  TermPtr cn = plug_head_context(ctx, n);
  return taylor_nf(cm, b, filter).set == taylor_nf(cn, b, filter).set;
}

}  // namespace cbv
