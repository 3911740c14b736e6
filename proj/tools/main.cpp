#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "cbv/approx.hpp"
#include "cbv/corpus.hpp"
#include "cbv/gen.hpp"
#include "cbv/parse.hpp"
#include "cbv/reduce.hpp"
#include "cbv/resource.hpp"
#include "cbv/taylor.hpp"
#include "cbv/term.hpp"

namespace {

using json = nlohmann::ordered_json;

struct Config {
  std::uint64_t fuel = 500;
  std::uint32_t max_bag = 2;
  std::uint32_t max_height = 8;
  std::uint32_t depth = cbv::kUnboundedDepth;
  std::string strategy = "lmo";
  std::uint64_t seed = 0;
  bool as_json = false;
  bool unicode = false;

  cbv::Bounds bounds() const { return {max_bag, max_height}; }
  cbv::Strategy term_strategy() const {
    return strategy == "random" ? cbv::Strategy::random(seed)
                                : cbv::Strategy::lmo();
  }
  cbv::ROrder r_order() const {
    return strategy == "random" ? cbv::ROrder::random(seed)
                                : cbv::ROrder::deterministic();
  }
};

cbv::Corpus& corpus() {
  static cbv::Corpus c = [] {
    cbv::Corpus built = cbv::Corpus::builtin();
    if (const char* path = std::getenv("CBVB_CORPUS")) {
      std::ifstream in(path);
      if (!in) {
        throw std::runtime_error(std::string("cannot open corpus file ") +
                                 path);
      }
      std::ostringstream buf;
      buf << in.rdbuf();
      built.load_text(buf.str());
    }
    return built;
  }();
  return c;
}

bool is_identifier(const std::string& s) {
  if (s.empty()) return false;
  if (!std::isalpha(static_cast<unsigned char>(s[0]))) return false;
  for (char c : s) {
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_' &&
        c != '\'') {
      return false;
    }
  }
  return true;
}

cbv::TermPtr get_term(const std::string& text) {
  if (is_identifier(text)) {
    if (auto hit = corpus().lookup(text)) return *hit;
  }
  return cbv::parse_term(text);
}

cbv::TermSet get_termset(const std::string& text, const std::string& file) {
  if (!file.empty()) {
    std::ifstream in(file);
    if (!in) {
      throw std::runtime_error("cannot open term set file " + file);
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return cbv::parse_termset_lines(buf.str());
  }
  std::size_t first = text.find_first_not_of(" \t");
  if (first != std::string::npos && text[first] == '{') {
    return cbv::parse_termset(text);
  }
  cbv::TermSet single;
  single.insert(cbv::parse_resource(text));
  return single;
}

json set_to_json(const cbv::TermSet& set) {
  auto arr = json::array();
  for (const cbv::RPtr& e : set.elements()) {
    arr.push_back(cbv::resource_to_json(e));
  }
  return arr;
}

json elems_to_json(const std::vector<cbv::RPtr>& elems) {
  auto arr = json::array();
  for (const cbv::RPtr& e : elems) arr.push_back(cbv::resource_to_json(e));
  return arr;
}

void emit(const Config& cfg, const json& doc, const std::string& text) {
  if (cfg.as_json) {
    std::cout << doc.dump() << "\n";
  } else {
    std::cout << text << "\n";
  }
}

const char* status_name(cbv::ReduceStatus s) {
  return s == cbv::ReduceStatus::NormalForm ? "normal" : "fuel-exhausted";
}

const char* bt_status_name(cbv::BTStatus s) {
  return s == cbv::BTStatus::Exact ? "exact" : "partial";
}

int cmd_parse(const Config& cfg, const std::string& arg) {
  cbv::TermPtr t = get_term(arg);
  emit(cfg, json{{"term", cbv::term_to_json(t)}},
       cbv::print_term(t, cfg.unicode));
  return 0;
}

int cmd_reduce(const Config& cfg, const std::string& arg, bool want_nf) {
  cbv::TermPtr t = get_term(arg);
  cbv::ReductionOutcome out =
      cbv::reduce(t, cfg.term_strategy(), cfg.fuel);
  json doc{{"term", cbv::term_to_json(out.term)},
           {"steps", out.steps_used},
           {"status", status_name(out.status)}};
  std::ostringstream text;
  text << cbv::print_term(out.term, cfg.unicode) << "\nsteps: "
       << out.steps_used << "\nstatus: " << status_name(out.status);
  emit(cfg, doc, text.str());
  if (want_nf && out.status != cbv::ReduceStatus::NormalForm) return 2;
  return 0;
}

int cmd_bt(const Config& cfg, const std::string& arg) {
  cbv::TermPtr t = get_term(arg);
  cbv::BTResult bt = cbv::boehm_tree(t, cfg.fuel, cfg.depth);
  if (cfg.as_json) {
    std::cout << cbv::render_tree(bt, cbv::TreeStyle::Json) << "\n";
  } else {
    std::cout << cbv::render_tree(bt, cbv::TreeStyle::Ascii) << "\n";
  }
  return bt.status == cbv::BTStatus::Exact ? 0 : 2;
}

int cmd_approx_of(const Config& cfg, const std::string& approximant,
                  const std::string& term) {
  cbv::TermPtr a = cbv::parse_term(approximant);
  cbv::TermPtr m = get_term(term);
  cbv::Cert c = cbv::is_approximant_of(a, m, cfg.fuel);
  bool yes = c == cbv::Cert::Yes;
  emit(cfg, json{{"verdict", yes ? "yes" : "unknown"}},
       yes ? "yes" : "unknown");
  return yes ? 0 : 2;
}

int cmd_taylor(const Config& cfg, const std::string& arg) {
  cbv::TermPtr t = get_term(arg);
  cbv::TermSet set = cbv::taylor(t, cfg.bounds());
  json doc{{"set", set_to_json(set)}, {"size", set.size()}};
  emit(cfg, doc, cbv::print_termset(set, cfg.unicode));
  return 0;
}

int cmd_in_taylor(const Config& cfg, const std::string& element,
                  const std::string& term) {
  cbv::RPtr t = cbv::parse_resource(element);
  cbv::TermPtr m = get_term(term);
  bool member = cbv::in_taylor(t, m);
  emit(cfg, json{{"member", member}}, member ? "true" : "false");
  return member ? 0 : 1;
}

int cmd_rnf(const Config& cfg, const std::string& arg,
            const std::string& file) {
  cbv::TermSet set = get_termset(arg, file);
  cbv::TermSet nf = cbv::r_normalize(set, cfg.r_order());
  json doc{{"set", set_to_json(nf)}, {"size", nf.size()}};
  emit(cfg, doc, cbv::print_termset(nf, cfg.unicode));
  return 0;
}

int cmd_coherent(const Config& cfg, const std::string& a,
                 const std::string& b) {
  bool ok = cbv::coherent(cbv::parse_resource(a), cbv::parse_resource(b));
  emit(cfg, json{{"coherent", ok}}, ok ? "true" : "false");
  return ok ? 0 : 1;
}

int cmd_clique(const Config& cfg, const std::string& arg,
               const std::string& file) {
  bool ok = cbv::is_clique(get_termset(arg, file));
  emit(cfg, json{{"clique", ok}}, ok ? "true" : "false");
  return ok ? 0 : 1;
}

int cmd_infer(const Config& cfg, const std::string& arg,
              const std::string& file) {
  cbv::InferResult r = cbv::infer_term(get_termset(arg, file));
  switch (r.status) {
    case cbv::InferResult::Status::Ok:
      emit(cfg, json{{"status", "ok"}, {"term", cbv::term_to_json(r.term)}},
           cbv::print_term(r.term, cfg.unicode));
      return 0;
    case cbv::InferResult::Status::Ambiguous:
      emit(cfg, json{{"status", "ambiguous"}, {"term", nullptr}},
           "ambiguous");
      return 2;
    case cbv::InferResult::Status::NotAClique:
      emit(cfg, json{{"status", "not-a-clique"}, {"term", nullptr}},
           "not-a-clique");
      return 1;
  }
  return 3;
}

int cmd_taylor_nf(const Config& cfg, const std::string& arg) {
  cbv::TermPtr t = get_term(arg);
  cbv::NfTaylorResult r = cbv::taylor_nf(t, cfg.bounds(), cfg.bounds());
  json doc{{"set", set_to_json(r.set)},
           {"size", r.set.size()},
           {"saturated", r.saturated}};
  std::ostringstream text;
  text << cbv::print_termset(r.set, cfg.unicode) << "\nsaturated: "
       << (r.saturated ? "true" : "false");
  emit(cfg, doc, text.str());
  return 0;
}

int cmd_tn_bt(const Config& cfg, const std::string& arg) {
  cbv::TermPtr t = get_term(arg);
  cbv::TnBtResult r = cbv::normalized_taylor_of_bt(t, cfg.fuel,
                                                   cfg.bounds());
  json doc{{"set", set_to_json(r.set)},
           {"size", r.set.size()},
           {"bt_status", bt_status_name(r.bt_status)}};
  std::ostringstream text;
  text << cbv::print_termset(r.set, cfg.unicode) << "\nbt: "
       << bt_status_name(r.bt_status);
  emit(cfg, doc, text.str());
  return r.bt_status == cbv::BTStatus::Exact ? 0 : 2;
}

int cmd_check_theorem(const Config& cfg, const std::string& arg) {
  cbv::TermPtr t = get_term(arg);
  cbv::CommutationReport r =
      cbv::check_commutation(t, cfg.fuel, cfg.bounds(), cfg.bounds());
  json doc{{"bounds",
            json{{"max_bag", cfg.max_bag}, {"max_height", cfg.max_height}}},
           {"filter", json{{"max_bag", r.filter.max_bag},
                           {"max_height", r.filter.max_height}}},
           {"bt_status", bt_status_name(r.bt_status)},
           {"saturated", r.saturated},
           {"equal", r.equal},
           {"left", set_to_json(r.left)},
           {"right", set_to_json(r.right)},
           {"left_only", elems_to_json(r.left_only)},
           {"right_only", elems_to_json(r.right_only)}};
  std::ostringstream text;
  text << "equal: " << (r.equal ? "true" : "false")
       << "\nbt: " << bt_status_name(r.bt_status)
       << "\nsaturated: " << (r.saturated ? "true" : "false")
       << "\nleft: " << cbv::print_termset(r.left, cfg.unicode)
       << "\nright: " << cbv::print_termset(r.right, cfg.unicode);
  emit(cfg, doc, text.str());
  if (r.equal) return 0;
  bool definite = r.bt_status == cbv::BTStatus::Exact && r.saturated;
  return definite ? 1 : 2;
}

int cmd_ctx_check(const Config& cfg, const std::string& m_arg,
                  const std::string& n_arg, const std::string& binders_arg,
                  const std::vector<std::string>& args_arg) {
  cbv::HeadContext ctx;
  std::istringstream in(binders_arg);
  std::string name;
  while (std::getline(in, name, ',')) {
    if (!name.empty()) ctx.binders.push_back(name);
  }
  for (const std::string& v : args_arg) {
    ctx.args.push_back(cbv::parse_term(v));
  }
  bool ok = cbv::taylor_context_check(get_term(m_arg), get_term(n_arg), ctx,
                                      cfg.fuel, cfg.bounds(), cfg.bounds());
  emit(cfg, json{{"equal", ok}}, ok ? "true" : "false");
  return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"call-by-value lambda calculus with sigma rules: reduction, "
               "Boehm trees, resource calculus, Taylor expansion"};
  app.require_subcommand(1);

  Config cfg;
  std::string arg1, arg2, file, binders;
  std::vector<std::string> ctx_args;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--fuel", cfg.fuel, "reduction step budget");
    sub->add_option("--max-bag", cfg.max_bag, "bag cardinality bound");
    sub->add_option("--max-height", cfg.max_height, "term height bound");
    sub->add_option("--depth", cfg.depth, "tree truncation depth");
    sub->add_option("--strategy", cfg.strategy, "lmo or random")
        ->check(CLI::IsMember({"lmo", "random"}));
    sub->add_option("--seed", cfg.seed, "random strategy seed");
    sub->add_flag("--json", cfg.as_json, "emit one JSON document");
    sub->add_flag("--unicode", cfg.unicode, "unicode output glyphs");
  };

  auto one_arg = [&](const std::string& name, const std::string& desc,
                     const std::string& hint) {
    CLI::App* sub = app.add_subcommand(name, desc);
    sub->add_option(hint, arg1, hint)->required();
    add_common(sub);
    return sub;
  };
  auto two_args = [&](const std::string& name, const std::string& desc,
                      const std::string& h1, const std::string& h2) {
    CLI::App* sub = app.add_subcommand(name, desc);
    sub->add_option(h1, arg1, h1)->required();
    sub->add_option(h2, arg2, h2)->required();
    add_common(sub);
    return sub;
  };
  auto set_arg = [&](const std::string& name, const std::string& desc) {
    CLI::App* sub = app.add_subcommand(name, desc);
    sub->add_option("set", arg1, "term set, resource term, or {} literal");
    sub->add_option("--file", file, "term set file, one term per line");
    add_common(sub);
    return sub;
  };

  CLI::App* c_parse = one_arg("parse", "parse and reprint a term", "term");
  CLI::App* c_reduce = one_arg("reduce", "reduce up to fuel", "term");
  CLI::App* c_nf = one_arg("nf", "reduce to v-normal form", "term");
  CLI::App* c_bt = one_arg("bt", "compute the Boehm tree", "term");
  CLI::App* c_approx =
      two_args("approx-of", "certify an approximant of a term",
               "approximant", "term");
  CLI::App* c_taylor =
      one_arg("taylor", "bounded Taylor expansion", "term");
  CLI::App* c_in_taylor = two_args(
      "in-taylor", "test expansion membership", "element", "term");
  CLI::App* c_rnf = set_arg("rnf", "resource-normalize a term set");
  CLI::App* c_coherent =
      two_args("coherent", "test coherence", "left", "right");
  CLI::App* c_clique = set_arg("clique", "test the clique property");
  CLI::App* c_infer = set_arg("infer", "reconstruct a term from a clique");
  CLI::App* c_taylor_nf = one_arg(
      "taylor-nf", "normal form of the bounded Taylor expansion", "term");
  CLI::App* c_tn_bt = one_arg(
      "tn-bt", "normalized Taylor expansion of the Boehm tree", "term");
  CLI::App* c_check = one_arg(
      "check-theorem", "compare NF(taylor) with Tn(BT)", "term");
  CLI::App* c_ctx = two_args("ctx-check",
                             "compare Taylor normal forms under a context",
                             "left", "right");
  c_ctx->add_option("--binders", binders, "comma-separated binder names");
  c_ctx->add_option("--args", ctx_args, "context argument values");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 3;
  }

  try {
    if (*c_parse) return cmd_parse(cfg, arg1);
    if (*c_reduce) return cmd_reduce(cfg, arg1, false);
    if (*c_nf) return cmd_reduce(cfg, arg1, true);
    if (*c_bt) return cmd_bt(cfg, arg1);
    if (*c_approx) return cmd_approx_of(cfg, arg1, arg2);
    if (*c_taylor) return cmd_taylor(cfg, arg1);
    if (*c_in_taylor) return cmd_in_taylor(cfg, arg1, arg2);
    if (*c_rnf) return cmd_rnf(cfg, arg1, file);
    if (*c_coherent) return cmd_coherent(cfg, arg1, arg2);
    if (*c_clique) return cmd_clique(cfg, arg1, file);
    if (*c_infer) return cmd_infer(cfg, arg1, file);
    if (*c_taylor_nf) return cmd_taylor_nf(cfg, arg1);
    if (*c_tn_bt) return cmd_tn_bt(cfg, arg1);
    if (*c_check) return cmd_check_theorem(cfg, arg1);
    if (*c_ctx) return cmd_ctx_check(cfg, arg1, arg2, binders, ctx_args);
  } catch (const cbv::ParseError& e) {
    std::cerr << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
  return 3;
}
