#include "cbv/resource.hpp"

#include <algorithm>
#include <optional>
#include <random>

#include "cbv/term.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace cbv {

namespace {

std::string rcanon_env(const RPtr& t, std::map<std::string, int>& env,
                       int depth);

}  // namespace

RPtr r_var(std::string name) {
  return std::make_shared<RTerm>(
      RTerm{RKind::RVar, std::move(name), nullptr, nullptr, {}});
}

RPtr r_abs(std::string binder, RPtr body) {
  if (!r_is_simple(body)) {
    throw GrammarViolation("abstraction body must be a simple term");
  }
  return std::make_shared<RTerm>(
      RTerm{RKind::RAbs, std::move(binder), std::move(body), nullptr, {}});
}

RPtr r_app(RPtr fun, RPtr arg) {
  if (!r_is_simple(fun) || !r_is_simple(arg)) {
    throw GrammarViolation("application components must be simple terms");
  }
  return std::make_shared<RTerm>(
      RTerm{RKind::RApp, "", std::move(fun), std::move(arg), {}});
}

RPtr r_bag(std::vector<RPtr> elems) {
  for (const RPtr& v : elems) {
    if (!r_is_value(v)) {
      throw GrammarViolation("bag elements must be values");
    }
  }
  std::stable_sort(elems.begin(), elems.end(),
                   [](const RPtr& a, const RPtr& b) {
                     return rcanon(a) < rcanon(b);
                   });
  return std::make_shared<RTerm>(
      RTerm{RKind::Bag, "", nullptr, nullptr, std::move(elems)});
}

bool r_is_value(const RPtr& t) {
  return t->kind == RKind::RVar || t->kind == RKind::RAbs;
}

bool r_is_simple(const RPtr& t) {
  return t->kind == RKind::RApp || t->kind == RKind::Bag;
}

std::size_t r_size(const RPtr& t) {
  switch (t->kind) {
    case RKind::RVar: return 1;
    case RKind::RAbs: return 1 + r_size(t->child0);
    case RKind::RApp: return 1 + r_size(t->child0) + r_size(t->child1);
    case RKind::Bag: {
      std::size_t n = 1;
      for (const RPtr& v : t->elems) n += r_size(v);
      return n;
    }
  }
  return 0;
}

std::size_t r_height(const RPtr& t) {
  switch (t->kind) {
    case RKind::RVar: return 0;
    case RKind::RAbs: return 1 + r_height(t->child0);
    case RKind::RApp:
      return 1 + std::max(r_height(t->child0), r_height(t->child1));
    case RKind::Bag: {
      std::size_t m = 0;
      for (const RPtr& v : t->elems) m = std::max(m, r_height(v));
      return m + 1;
    }
  }
  return 0;
}

namespace {

void r_free_vars_into(const RPtr& t, std::set<std::string>& bound,
                      std::set<std::string>& out) {
  switch (t->kind) {
    case RKind::RVar:
      if (!bound.count(t->name)) out.insert(t->name);
      return;
    case RKind::RAbs: {
      bool fresh = bound.insert(t->name).second;
      r_free_vars_into(t->child0, bound, out);
      if (fresh) bound.erase(t->name);
      return;
    }
    case RKind::RApp:
      r_free_vars_into(t->child0, bound, out);
      r_free_vars_into(t->child1, bound, out);
      return;
    case RKind::Bag:
      for (const RPtr& v : t->elems) r_free_vars_into(v, bound, out);
      return;
  }
}

std::size_t degree_rec(const RPtr& t, const std::string& x,
                       std::set<std::string>& bound) {
  switch (t->kind) {
    case RKind::RVar:
      return t->name == x && !bound.count(x) ? 1 : 0;
    case RKind::RAbs: {
      bool fresh = bound.insert(t->name).second;
      std::size_t n = degree_rec(t->child0, x, bound);
      if (fresh) bound.erase(t->name);
      return n;
    }
    case RKind::RApp:
      return degree_rec(t->child0, x, bound) +
             degree_rec(t->child1, x, bound);
    case RKind::Bag: {
      std::size_t n = 0;
      for (const RPtr& v : t->elems) n += degree_rec(v, x, bound);
      return n;
    }
  }
  return 0;
}

std::string rcanon_env(const RPtr& t, std::map<std::string, int>& env,
                       int depth) {
  switch (t->kind) {
    case RKind::RVar: {
      auto it = env.find(t->name);
      std::string out = "0";
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
      return out;
    }
    case RKind::RAbs: {
      auto it = env.find(t->name);
      int saved = it == env.end() ? -1 : it->second;
      env[t->name] = depth + 1;
      std::string out = "1" + rcanon_env(t->child0, env, depth + 1);
      if (saved < 0) {
        env.erase(t->name);
      } else {
        env[t->name] = saved;
      }
      return out;
    }
    case RKind::RApp:
      return "2" + rcanon_env(t->child0, env, depth) +
             rcanon_env(t->child1, env, depth);
    case RKind::Bag: {
      std::vector<std::string> keys;
      keys.reserve(t->elems.size());
      for (const RPtr& v : t->elems) {
        keys.push_back(rcanon_env(v, env, depth));
      }
      std::sort(keys.begin(), keys.end());
      std::string out = "3" + std::to_string(keys.size());
      out += ';';
      for (const std::string& k : keys) out += k;
      return out;
    }
  }
  return "";
}

}  // namespace

std::set<std::string> r_free_vars(const RPtr& t) {
  std::set<std::string> bound, out;
  r_free_vars_into(t, bound, out);
  return out;
}

std::size_t degree(const RPtr& t, const std::string& x) {
  std::set<std::string> bound;
  return degree_rec(t, x, bound);
}

std::string rcanon(const RPtr& t) {
  std::map<std::string, int> env;
  return rcanon_env(t, env, 0);
}

bool r_alpha_eq(const RPtr& a, const RPtr& b) {
  if (a == b) return true;
  return rcanon(a) == rcanon(b);
}

int r_cmp(const RPtr& a, const RPtr& b) {
  if (a == b) return 0;
  int c = rcanon(a).compare(rcanon(b));
  return c < 0 ? -1 : c > 0 ? 1 : 0;
}

namespace {

RPtr r_rename_canon_rec(const RPtr& t,
                        std::map<std::string, std::string>& ren,
                        const std::set<std::string>& avoid,
                        std::size_t& counter) {
  switch (t->kind) {
    case RKind::RVar: {
      auto it = ren.find(t->name);
      return it == ren.end() ? t : r_var(it->second);
    }
    case RKind::RAbs: {
      std::string next;
      do {
        next = "x" + std::to_string(counter++);
      } while (avoid.count(next));
      auto it = ren.find(t->name);
      bool had = it != ren.end();
      std::string saved = had ? it->second : "";
      ren[t->name] = next;
      RPtr body = r_rename_canon_rec(t->child0, ren, avoid, counter);
      if (had) {
        ren[t->name] = saved;
      } else {
        ren.erase(t->name);
      }
      return r_abs(next, body);
    }
    case RKind::RApp: {
      RPtr f = r_rename_canon_rec(t->child0, ren, avoid, counter);
      RPtr a = r_rename_canon_rec(t->child1, ren, avoid, counter);
      if (f == t->child0 && a == t->child1) return t;
      return r_app(f, a);
    }
    case RKind::Bag: {
      std::vector<RPtr> es;
      es.reserve(t->elems.size());
      bool changed = false;
      for (const RPtr& v : t->elems) {
        RPtr w = r_rename_canon_rec(v, ren, avoid, counter);
        changed = changed || w != v;
        es.push_back(w);
      }
      return changed ? r_bag(std::move(es)) : t;
    }
  }
  return t;
}

}  // namespace

RPtr r_rename_binders_canonically(const RPtr& t) {
  std::map<std::string, std::string> ren;
  std::set<std::string> avoid = r_free_vars(t);
  std::size_t counter = 0;
  return r_rename_canon_rec(t, ren, avoid, counter);
}

bool TermSet::insert(const RPtr& t) {
  return by_key_.emplace(rcanon(t), t).second;
}

bool TermSet::contains(const RPtr& t) const {
  return by_key_.count(rcanon(t)) > 0;
}

void TermSet::merge(const TermSet& other) {
  by_key_.insert(other.by_key_.begin(), other.by_key_.end());
}

bool TermSet::operator==(const TermSet& other) const {
  if (by_key_.size() != other.by_key_.size()) return false;
  auto a = by_key_.begin();
  auto b = other.by_key_.begin();
  for (; a != by_key_.end(); ++a, ++b) {
    if (a->first != b->first) return false;
  }
  return true;
}

std::vector<RPtr> TermSet::elements() const {
  std::vector<RPtr> out;
  out.reserve(by_key_.size());
  for (const auto& [key, t] : by_key_) out.push_back(t);
  return out;
}

std::vector<RPtr> TermSet::difference(const TermSet& other) const {
  std::vector<RPtr> out;
  for (const auto& [key, t] : by_key_) {
    if (!other.by_key_.count(key)) out.push_back(t);
  }
  return out;
}

namespace {

void collect_rnames(const RPtr& t, std::set<std::string>& out) {
  switch (t->kind) {
    case RKind::RVar: out.insert(t->name); return;
    case RKind::RAbs:
      out.insert(t->name);
      collect_rnames(t->child0, out);
      return;
    case RKind::RApp:
      collect_rnames(t->child0, out);
      collect_rnames(t->child1, out);
      return;
    case RKind::Bag:
      for (const RPtr& v : t->elems) collect_rnames(v, out);
      return;
  }
}

// Rename every binder whose name is in `clash` to a fresh name drawn
// outside `used`; afterwards no binder shadows x or captures the values
// being substituted.
RPtr rename_binders(const RPtr& t, const std::set<std::string>& clash,
                    std::set<std::string>& used,
                    std::map<std::string, std::string>& renames) {
  switch (t->kind) {
    case RKind::RVar: {
      auto it = renames.find(t->name);
      return it == renames.end() ? t : r_var(it->second);
    }
    case RKind::RAbs: {
      std::string binder = t->name;
      auto saved = renames.find(binder);
      std::string saved_to = saved == renames.end() ? "" : saved->second;
      bool had = saved != renames.end();
      if (clash.count(binder)) {
        std::string next = fresh_name(used);
        used.insert(next);
        renames[binder] = next;
        RPtr body = rename_binders(t->child0, clash, used, renames);
        if (had) {
          renames[binder] = saved_to;
        } else {
          renames.erase(binder);
        }
        return r_abs(next, body);
      }
      // A non-clashing binder shadows any outer rename of the same name.
      if (had) renames.erase(binder);
      RPtr body = rename_binders(t->child0, clash, used, renames);
      if (had) renames[binder] = saved_to;
      return body == t->child0 ? t : r_abs(binder, body);
    }
    case RKind::RApp: {
      RPtr f = rename_binders(t->child0, clash, used, renames);
      RPtr a = rename_binders(t->child1, clash, used, renames);
      if (f == t->child0 && a == t->child1) return t;
      return r_app(f, a);
    }
    case RKind::Bag: {
      std::vector<RPtr> es;
      es.reserve(t->elems.size());
      bool changed = false;
      for (const RPtr& v : t->elems) {
        RPtr w = rename_binders(v, clash, used, renames);
        changed = changed || w != v;
        es.push_back(w);
      }
      return changed ? r_bag(std::move(es)) : t;
    }
  }
  return t;
}

// Positional substitution: the i-th free occurrence of x (pre-order; bags
// in stored order) receives vs[i]. Assumes no binder is named x and no
// capture can occur.
RPtr subst_positions(const RPtr& t, const std::string& x,
                     const std::vector<RPtr>& vs, std::size_t& idx) {
  switch (t->kind) {
    case RKind::RVar:
      if (t->name == x) return vs[idx++];
      return t;
    case RKind::RAbs: {
      RPtr body = subst_positions(t->child0, x, vs, idx);
      return body == t->child0 ? t : r_abs(t->name, body);
    }
    case RKind::RApp: {
      RPtr f = subst_positions(t->child0, x, vs, idx);
      RPtr a = subst_positions(t->child1, x, vs, idx);
      if (f == t->child0 && a == t->child1) return t;
      return r_app(f, a);
    }
    case RKind::Bag: {
      std::vector<RPtr> es;
      es.reserve(t->elems.size());
      bool changed = false;
      for (const RPtr& v : t->elems) {
        RPtr w = subst_positions(v, x, vs, idx);
        changed = changed || w != v;
        es.push_back(w);
      }
      return changed ? r_bag(std::move(es)) : t;
    }
  }
  return t;
}

}  // namespace

TermSet linear_subst(const RPtr& e, const std::string& x,
                     const std::vector<RPtr>& vs) {
  TermSet out;
  if (degree(e, x) != vs.size()) return out;
  if (vs.empty()) {
    out.insert(e);
    return out;
  }
  std::set<std::string> clash;
  std::set<std::string> used;
  collect_rnames(e, used);
  for (const RPtr& v : vs) {
    std::set<std::string> fv = r_free_vars(v);
    clash.insert(fv.begin(), fv.end());
    collect_rnames(v, used);
  }
  clash.insert(x);   // remove shadowing binders named x as well
  std::map<std::string, std::string> renames;
  RPtr body = rename_binders(e, clash, used, renames);

  // Enumerate distinct multiset arrangements of vs.
  std::vector<std::pair<std::string, RPtr>> keyed;
  keyed.reserve(vs.size());
  for (const RPtr& v : vs) keyed.emplace_back(rcanon(v), v);
  auto key_less = [](const std::pair<std::string, RPtr>& a,
                     const std::pair<std::string, RPtr>& b) {
    return a.first < b.first;
  };
  std::sort(keyed.begin(), keyed.end(), key_less);
  do {
    std::vector<RPtr> arranged;
    arranged.reserve(keyed.size());
    for (const auto& [key, v] : keyed) arranged.push_back(v);
    std::size_t idx = 0;
    out.insert(subst_positions(body, x, arranged, idx));
  } while (std::next_permutation(keyed.begin(), keyed.end(), key_less));
  return out;
}

namespace {

bool singleton_abs(const RPtr& t) {
  return t->kind == RKind::Bag && t->elems.size() == 1 &&
         t->elems[0]->kind == RKind::RAbs;
}

std::optional<RRedexKind> r_redex_kind_at(const RPtr& t) {
  if (t->kind != RKind::RApp) return std::nullopt;
  const RPtr& f = t->child0;
  const RPtr& a = t->child1;
  if (f->kind == RKind::Bag && f->elems.size() != 1) {
    return RRedexKind::Zero;
  }
  if (singleton_abs(f) && a->kind == RKind::Bag) return RRedexKind::BetaR;
  if (f->kind == RKind::RApp && singleton_abs(f->child0)) {
    return RRedexKind::Sigma1R;
  }
  if (f->kind == RKind::Bag && f->elems.size() == 1 &&
      a->kind == RKind::RApp && singleton_abs(a->child0)) {
    return RRedexKind::Sigma3R;
  }
  return std::nullopt;
}

void r_find_into(const RPtr& t, std::vector<int>& path,
                 std::vector<ROccurrence>& out) {
  if (auto k = r_redex_kind_at(t)) out.push_back({*k, path});
  switch (t->kind) {
    case RKind::RVar: return;
    case RKind::RAbs:
      path.push_back(0);
      r_find_into(t->child0, path, out);
      path.pop_back();
      return;
    case RKind::RApp:
      path.push_back(0);
      r_find_into(t->child0, path, out);
      path.back() = 1;
      r_find_into(t->child1, path, out);
      path.pop_back();
      return;
    case RKind::Bag:
      for (std::size_t i = 0; i < t->elems.size(); ++i) {
        path.push_back(static_cast<int>(i));
        r_find_into(t->elems[i], path, out);
        path.pop_back();
      }
      return;
  }
}

// Replace every free occurrence of `from` by the variable `to`; `to` is
// globally fresh, so no capture is possible.
RPtr rename_free(const RPtr& t, const std::string& from,
                 const std::string& to) {
  switch (t->kind) {
    case RKind::RVar:
      return t->name == from ? r_var(to) : t;
    case RKind::RAbs: {
      if (t->name == from) return t;
      RPtr body = rename_free(t->child0, from, to);
      return body == t->child0 ? t : r_abs(t->name, body);
    }
    case RKind::RApp: {
      RPtr f = rename_free(t->child0, from, to);
      RPtr a = rename_free(t->child1, from, to);
      if (f == t->child0 && a == t->child1) return t;
      return r_app(f, a);
    }
    case RKind::Bag: {
      std::vector<RPtr> es;
      es.reserve(t->elems.size());
      bool changed = false;
      for (const RPtr& v : t->elems) {
        RPtr w = rename_free(v, from, to);
        changed = changed || w != v;
        es.push_back(w);
      }
      return changed ? r_bag(std::move(es)) : t;
    }
  }
  return t;
}

// Contract the redex sitting exactly at t.
TermSet contract_here(const RPtr& t, RRedexKind kind,
                      const std::set<std::string>& all_names) {
  auto actual = r_redex_kind_at(t);
  if (!actual || *actual != kind) {
    throw InvalidResourceRedex("no redex of the requested kind here");
  }
  TermSet out;
  const RPtr& f = t->child0;
  const RPtr& a = t->child1;
  switch (kind) {
    case RRedexKind::Zero:
      return out;   // empty: the whole element vanishes
    case RRedexKind::BetaR: {
      const RPtr& lam = f->elems[0];
      return linear_subst(lam->child0, lam->name, a->elems);
    }
    case RRedexKind::Sigma1R: {
      // [\x.t0] s1 s2 -> [\x'.t0' s2] s1, x' fresh
      const RPtr& lam = f->child0->elems[0];
      const RPtr& s1 = f->child1;
      std::string x2 = fresh_name(all_names);
      RPtr body = rename_free(lam->child0, lam->name, x2);
      out.insert(r_app(r_bag({r_abs(x2, r_app(body, a))}), s1));
      return out;
    }
    case RRedexKind::Sigma3R: {
      // [v] ([\x.t0] s) -> [\x'.[v] t0'] s, x' fresh
      const RPtr& lam = a->child0->elems[0];
      const RPtr& s = a->child1;
      std::string x2 = fresh_name(all_names);
      RPtr body = rename_free(lam->child0, lam->name, x2);
      out.insert(r_app(r_bag({r_abs(x2, r_app(f, body))}), s));
      return out;
    }
  }
  return out;
}

// Rebuild e with the subterm at path replaced by each contractum.
std::vector<RPtr> rebuild_multi(const RPtr& t, const std::vector<int>& path,
                                std::size_t i, RRedexKind kind,
                                const std::set<std::string>& all_names) {
  if (i == path.size()) return contract_here(t, kind, all_names).elements();
  int c = path[i];
  std::vector<RPtr> subs;
  std::vector<RPtr> out;
  switch (t->kind) {
    case RKind::RVar:
      throw InvalidResourceRedex("position does not exist");
    case RKind::RAbs:
      if (c != 0) throw InvalidResourceRedex("position does not exist");
      subs = rebuild_multi(t->child0, path, i + 1, kind, all_names);
      for (const RPtr& s : subs) out.push_back(r_abs(t->name, s));
      return out;
    case RKind::RApp:
      if (c != 0 && c != 1) {
        throw InvalidResourceRedex("position does not exist");
      }
      subs = rebuild_multi(c == 0 ? t->child0 : t->child1, path, i + 1,
                           kind, all_names);
      for (const RPtr& s : subs) {
        out.push_back(c == 0 ? r_app(s, t->child1) : r_app(t->child0, s));
      }
      return out;
    case RKind::Bag: {
      if (c < 0 || static_cast<std::size_t>(c) >= t->elems.size()) {
        throw InvalidResourceRedex("position does not exist");
      }
      subs = rebuild_multi(t->elems[static_cast<std::size_t>(c)], path,
                           i + 1, kind, all_names);
      for (const RPtr& s : subs) {
        std::vector<RPtr> es = t->elems;
        es[static_cast<std::size_t>(c)] = s;
        out.push_back(r_bag(std::move(es)));
      }
      return out;
    }
  }
  return out;
}

}  // namespace

std::vector<ROccurrence> r_find_redexes(const RPtr& e) {
  std::vector<ROccurrence> out;
  std::vector<int> path;
  r_find_into(e, path, out);
  return out;
}

TermSet contract_at(const RPtr& e, const ROccurrence& occ) {
  std::set<std::string> all_names;
  collect_rnames(e, all_names);
  TermSet out;
  for (const RPtr& t :
       rebuild_multi(e, occ.position, 0, occ.kind, all_names)) {
    out.insert(t);
  }
  return out;
}

TermSet r_step(const TermSet& set, const RPtr& element,
               const ROccurrence& occ) {
  if (!set.contains(element)) {
    throw NotMember("element not in the set");
  }
  TermSet out;
  std::string key = rcanon(element);
  for (const auto& [k, t] : set.raw()) {
    if (k != key) out.insert(t);
  }
  out.merge(contract_at(element, occ));
  return out;
}

TermSet nf_element(const RPtr& e) {
  TermSet done;
  std::set<std::string> seen;
  std::vector<RPtr> work{e};
  seen.insert(rcanon(e));
  while (!work.empty()) {
    RPtr cur = work.back();
    work.pop_back();
    std::vector<ROccurrence> rs = r_find_redexes(cur);
    if (rs.empty()) {
      done.insert(cur);
      continue;
    }
    for (const RPtr& next : contract_at(cur, rs.front()).elements()) {
      if (seen.insert(rcanon(next)).second) work.push_back(next);
    }
  }
  return done;
}

TermSet r_normalize(const TermSet& set, const ROrder& order) {
  std::map<std::string, RPtr> pending;
  TermSet done;
  for (const auto& [key, t] : set.raw()) {
    if (r_find_redexes(t).empty()) {
      done.insert(t);
    } else {
      pending.emplace(key, t);
    }
  }
  std::mt19937_64 rng(order.seed);
  while (!pending.empty()) {
    auto it = pending.begin();
    std::size_t redex_index = 0;
    if (order.pick == ROrder::Pick::RandomSeeded) {
      std::advance(it, static_cast<long>(rng() % pending.size()));
    }
    RPtr cur = it->second;
    pending.erase(it);
    std::vector<ROccurrence> rs = r_find_redexes(cur);
    if (order.pick == ROrder::Pick::RandomSeeded) {
      redex_index = static_cast<std::size_t>(rng() % rs.size());
    }
    for (const RPtr& next : contract_at(cur, rs[redex_index]).elements()) {
      std::string key = rcanon(next);
      if (done.raw().count(key) || pending.count(key)) continue;
      if (r_find_redexes(next).empty()) {
        done.insert(next);
      } else {
        pending.emplace(std::move(key), next);
      }
    }
  }
  return done;
}

TermSet r_normalize_par(const TermSet& set) {
  std::vector<RPtr> elems = set.elements();
  TermSet out;
#ifdef _OPENMP
  int n = static_cast<int>(elems.size());
  std::vector<TermSet> partial(
      static_cast<std::size_t>(omp_get_max_threads()));
#pragma omp parallel for schedule(dynamic)
  for (int i = 0; i < n; ++i) {
    partial[static_cast<std::size_t>(omp_get_thread_num())].merge(
        nf_element(elems[static_cast<std::size_t>(i)]));
  }
  for (const TermSet& p : partial) out.merge(p);
#else
  for (const RPtr& e : elems) out.merge(nf_element(e));
#endif
  return out;
}

namespace {

bool r_is_a(const RPtr& t);

// [x,...,x] (n >= 0 copies of one variable) or [\x.a1,...,\x.an].
bool is_b_bag(const RPtr& t) {
  if (t->kind != RKind::Bag) return false;
  bool all_vars = true;
  bool all_abs = true;
  for (const RPtr& v : t->elems) {
    if (v->kind != RKind::RVar || v->name != t->elems[0]->name) {
      all_vars = false;
    }
    if (v->kind != RKind::RAbs || !r_is_a(v->child0)) all_abs = false;
  }
  return all_vars || all_abs;
}

struct RSpine {
  RPtr head;
  std::vector<RPtr> args;   // outermost first, innermost last
};

RSpine r_unwind(const RPtr& t) {
  RSpine s;
  RPtr cur = t;
  while (cur->kind == RKind::RApp) {
    s.args.push_back(cur->child1);
    cur = cur->child0;
  }
  s.head = cur;
  return s;
}

bool r_is_b(const RPtr& t);

// [x] b a1 ... ak with k >= 0 (at least one application).
bool is_b_spine(const RPtr& t) {
  if (t->kind != RKind::RApp) return false;
  RSpine s = r_unwind(t);
  if (s.head->kind != RKind::Bag || s.head->elems.size() != 1 ||
      s.head->elems[0]->kind != RKind::RVar) {
    return false;
  }
  if (!r_is_b(s.args.back())) return false;
  for (std::size_t i = 0; i + 1 < s.args.size(); ++i) {
    if (!r_is_a(s.args[i])) return false;
  }
  return true;
}

bool r_is_b(const RPtr& t) {
  if (t->kind == RKind::Bag) return is_b_bag(t);
  return is_b_spine(t);
}

bool r_is_c(const RPtr& t) {
  if (t->kind != RKind::RApp) return false;
  return singleton_abs(t->child0) && r_is_a(t->child0->elems[0]->child0) &&
         is_b_spine(t->child1);
}

bool r_is_a(const RPtr& t) { return r_is_b(t) || r_is_c(t); }

}  // namespace

bool is_resource_approximant(const RPtr& t) { return r_is_a(t); }

}  // namespace cbv
