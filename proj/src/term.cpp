#include "cbv/term.hpp"

#include <functional>
#include <map>

namespace cbv {

TermPtr mk_var(std::string name) {
  return std::make_shared<Term>(Term{TermKind::Var, std::move(name), nullptr, nullptr});
}

TermPtr mk_abs(std::string binder, TermPtr body) {
  return std::make_shared<Term>(
      Term{TermKind::Abs, std::move(binder), std::move(body), nullptr});
}

TermPtr mk_app(TermPtr fun, TermPtr arg) {
  return std::make_shared<Term>(
      Term{TermKind::App, "", std::move(fun), std::move(arg)});
}

TermPtr mk_bot() {
  static const TermPtr bot =
      std::make_shared<Term>(Term{TermKind::Bot, "", nullptr, nullptr});
  return bot;
}

bool is_value(const TermPtr& t) {
  return t->kind == TermKind::Var || t->kind == TermKind::Abs;
}

bool contains_bot(const TermPtr& t) {
  switch (t->kind) {
    case TermKind::Var: return false;
    case TermKind::Bot: return true;
    case TermKind::Abs: return contains_bot(t->child0);
    case TermKind::App: return contains_bot(t->child0) || contains_bot(t->child1);
  }
  return false;
}

std::size_t term_size(const TermPtr& t) {
  switch (t->kind) {
    case TermKind::Var:
    case TermKind::Bot: return 1;
    case TermKind::Abs: return 1 + term_size(t->child0);
    case TermKind::App: return 1 + term_size(t->child0) + term_size(t->child1);
  }
  return 0;
}

static void free_vars_into(const TermPtr& t, std::set<std::string>& bound,
                           std::set<std::string>& out) {
  switch (t->kind) {
    case TermKind::Var:
      if (!bound.count(t->name)) out.insert(t->name);
      return;
    case TermKind::Bot:
      return;
    case TermKind::Abs: {
      bool fresh = bound.insert(t->name).second;
      free_vars_into(t->child0, bound, out);
      if (fresh) bound.erase(t->name);
      return;
    }
    case TermKind::App:
      free_vars_into(t->child0, bound, out);
      free_vars_into(t->child1, bound, out);
      return;
  }
}

std::set<std::string> free_vars(const TermPtr& t) {
  std::set<std::string> bound, out;
  free_vars_into(t, bound, out);
  return out;
}

std::string fresh_name(const std::set<std::string>& used) {
  for (std::size_t i = 0;; ++i) {
    std::string cand = "x" + std::to_string(i);
    if (!used.count(cand)) return cand;
  }
}

TermPtr subst(const TermPtr& m, const std::string& x, const TermPtr& n) {
  switch (m->kind) {
    case TermKind::Var:
      return m->name == x ? n : m;
    case TermKind::Bot:
      return m;
    case TermKind::App: {
      TermPtr f = subst(m->child0, x, n);
      TermPtr a = subst(m->child1, x, n);
      if (f == m->child0 && a == m->child1) return m;
      return mk_app(std::move(f), std::move(a));
    }
    case TermKind::Abs: {
      if (m->name == x) return m;
      std::set<std::string> body_free = free_vars(m->child0);
      if (!body_free.count(x)) return m;
      std::set<std::string> n_free = free_vars(n);
      if (n_free.count(m->name)) {
        std::set<std::string> avoid = n_free;
        avoid.insert(body_free.begin(), body_free.end());
        avoid.insert(x);
        std::string y = fresh_name(avoid);
        TermPtr renamed = subst(m->child0, m->name, mk_var(y));
        return mk_abs(y, subst(renamed, x, n));
      }
      return mk_abs(m->name, subst(m->child0, x, n));
    }
  }
  return m;
}

namespace {

// Bound variables are encoded as binder distances (innermost = 1), free
// variables by length-prefixed name, so the encoding is prefix-free and
// plain string comparison gives a deterministic total order.
void canon_into(const TermPtr& t, std::map<std::string, int>& env, int depth,
                std::string& out) {
  switch (t->kind) {
    case TermKind::Var: {
      auto it = env.find(t->name);
      out += '0';
      if (it != env.end()) {
        out += 'b';
        out += std::to_string(depth - it->second);
        out += ';';
      } else {
        out += 'f';
        out += std::to_string(t->name.size());
        out += ':';
        out += t->name;
      }
      return;
    }
    case TermKind::Abs: {
      out += '1';
      auto it = env.find(t->name);
      int saved = it == env.end() ? -1 : it->second;
      env[t->name] = depth + 1;
      canon_into(t->child0, env, depth + 1, out);
      if (saved < 0) {
        env.erase(t->name);
      } else {
        env[t->name] = saved;
      }
      return;
    }
    case TermKind::App:
      out += '2';
      canon_into(t->child0, env, depth, out);
      canon_into(t->child1, env, depth, out);
      return;
    case TermKind::Bot:
      out += '3';
      return;
  }
}

}  // namespace

std::string canon(const TermPtr& t) {
  std::string out;
  out.reserve(term_size(t) * 3);
  std::map<std::string, int> env;
  canon_into(t, env, 0, out);
  return out;
}

bool alpha_eq(const TermPtr& a, const TermPtr& b) {
  if (a == b) return true;
  return canon(a) == canon(b);
}

int term_cmp(const TermPtr& a, const TermPtr& b) {
  if (a == b) return 0;
  int c = canon(a).compare(canon(b));
  return c < 0 ? -1 : c > 0 ? 1 : 0;
}

std::size_t term_hash(const TermPtr& t) {
  return std::hash<std::string>{}(canon(t));
}

namespace {

TermPtr rename_canon_rec(const TermPtr& t,
                         std::map<std::string, std::string>& ren,
                         const std::set<std::string>& avoid,
                         std::size_t& counter) {
  switch (t->kind) {
    case TermKind::Var: {
      auto it = ren.find(t->name);
      return it == ren.end() ? t : mk_var(it->second);
    }
    case TermKind::Bot:
      return t;
    case TermKind::Abs: {
      std::string next;
      do {
        next = "x" + std::to_string(counter++);
      } while (avoid.count(next));
      auto it = ren.find(t->name);
      bool had = it != ren.end();
      std::string saved = had ? it->second : "";
      ren[t->name] = next;
      TermPtr body = rename_canon_rec(t->child0, ren, avoid, counter);
      if (had) {
        ren[t->name] = saved;
      } else {
        ren.erase(t->name);
      }
      return mk_abs(next, body);
    }
    case TermKind::App: {
      TermPtr f = rename_canon_rec(t->child0, ren, avoid, counter);
      TermPtr a = rename_canon_rec(t->child1, ren, avoid, counter);
      if (f == t->child0 && a == t->child1) return t;
      return mk_app(f, a);
    }
  }
  return t;
}

}  // namespace

TermPtr rename_binders_canonically(const TermPtr& t) {
  std::map<std::string, std::string> ren;
  std::set<std::string> avoid = free_vars(t);
  std::size_t counter = 0;
  return rename_canon_rec(t, ren, avoid, counter);
}

TermPtr plug_head_context(const HeadContext& ctx, const TermPtr& hole) {
  for (const TermPtr& v : ctx.args) {
    if (!is_value(v)) {
      throw NonValueArg("head context argument is not a value");
    }
  }
  TermPtr t = hole;
  for (auto it = ctx.binders.rbegin(); it != ctx.binders.rend(); ++it) {
    t = mk_abs(*it, t);
  }
  for (const TermPtr& v : ctx.args) {
    t = mk_app(t, v);
  }
  return t;
}

}  // namespace cbv
