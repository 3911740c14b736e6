#include <doctest.h>

#include <random>

#include "cbv/gen.hpp"
#include "cbv/parse.hpp"
#include "cbv/resource.hpp"

using namespace cbv;

namespace {

RPtr rp(const std::string& s) { return parse_resource(s); }

TermSet set_of(std::initializer_list<std::string> elems) {
  TermSet s;
  for (const auto& e : elems) s.insert(rp(e));
  return s;
}

TermSet singleton(const std::string& e) { return set_of({e}); }

}  // namespace

TEST_CASE("constructors police the grammar") {
  CHECK_THROWS_AS(r_abs("x", r_var("x")), GrammarViolation);
  CHECK_THROWS_AS(r_app(r_var("x"), r_bag({})), GrammarViolation);
  CHECK_THROWS_AS(r_bag({r_app(r_bag({}), r_bag({}))}), GrammarViolation);
  CHECK_NOTHROW(r_abs("x", r_bag({r_var("x")})));
  CHECK_NOTHROW(r_app(r_bag({}), r_bag({})));
}

TEST_CASE("bags are multisets") {
  CHECK(r_alpha_eq(rp("[\\a.[a], z]"), rp("[z, \\b.[b]]")));
  CHECK(rcanon(rp("[x, y]")) == rcanon(rp("[y, x]")));
  CHECK(rcanon(rp("[x, x]")) != rcanon(rp("[x]")));
  CHECK(r_cmp(rp("[x]"), rp("[x]")) == 0);
  CHECK(r_cmp(rp("[x]"), rp("[x, x]")) != 0);
}

TEST_CASE("height and size") {
  CHECK(r_height(rp("[]")) == 1);
  CHECK(r_height(rp("[z]")) == 1);
  CHECK(r_height(rp("[z] [w]")) == 2);
  CHECK(r_height(rp("[\\x.[x]]")) == 3);
  CHECK(r_height(rp("[\\x.[x]] ([z] [w])")) == 4);
  CHECK(r_size(rp("[]")) == 1);
  CHECK(r_size(rp("[z] [w]")) > r_size(rp("[z]")));
}

TEST_CASE("degree counts free occurrences") {
  CHECK(degree(rp("[x] [x, x]"), "x") == 3);
  CHECK(degree(rp("[\\x.[x]] [x]"), "x") == 1);
  CHECK(degree(rp("[y]"), "x") == 0);
}

TEST_CASE("linear substitution") {
  // Distinct values: one result per permutation.
  TermSet two = linear_subst(rp("[x] [x]"), "x", {r_var("a"), r_var("b")});
  CHECK(two == set_of({"[a] [b]", "[b] [a]"}));

  // Equal occurrences in one bag collapse.
  TermSet one = linear_subst(rp("[x, x]"), "x", {r_var("a"), r_var("b")});
  CHECK(one == singleton("[a, b]"));

  // Arity mismatch produces nothing.
  CHECK(linear_subst(rp("[x] [x]"), "x", {r_var("a")}).empty());
  CHECK(linear_subst(rp("[y]"), "x", {r_var("a")}).empty());

  // Capture is avoided.
  TermSet cap = linear_subst(rp("[\\y.[x]]"), "x", {r_var("y")});
  CHECK(cap == singleton("[\\a.[y]]"));
}

TEST_CASE("redex kinds") {
  auto kinds = [](const std::string& s) {
    std::vector<RRedexKind> ks;
    for (const auto& r : r_find_redexes(rp(s))) ks.push_back(r.kind);
    return ks;
  };

  CHECK(kinds("[\\x.[x]] [z]") ==
        std::vector<RRedexKind>{RRedexKind::BetaR});
  CHECK(kinds("[z, w] [z]") == std::vector<RRedexKind>{RRedexKind::Zero});
  CHECK(kinds("[] [z]") == std::vector<RRedexKind>{RRedexKind::Zero});
  CHECK(kinds("[\\x.[x]] [z] [w]") ==
        std::vector<RRedexKind>{RRedexKind::Sigma1R, RRedexKind::BetaR});
  CHECK(kinds("[\\u.[u]] ([\\x.[x]] [z])") ==
        std::vector<RRedexKind>{RRedexKind::Sigma3R, RRedexKind::BetaR});
  CHECK(kinds("[z] [w]").empty());
  CHECK(kinds("[z] ([w] [u])").empty());
  CHECK(kinds("[\\x.[x]] ([z] [w])").empty());
}

TEST_CASE("zero and mismatched beta annihilate the element") {
  RPtr zero = rp("[z, w] [z]");
  CHECK(contract_at(zero, r_find_redexes(zero)[0]).empty());

  RPtr mismatch = rp("[\\x.[x, x]] [z]");
  REQUIRE(r_find_redexes(mismatch).size() == 1);
  CHECK(contract_at(mismatch, r_find_redexes(mismatch)[0]).empty());
}

TEST_CASE("two-permutation beta step") {
  RPtr e = rp("[\\x.[x] [x]] [\\y.[y], z]");
  auto rs = r_find_redexes(e);
  REQUIRE(rs.size() == 1);
  CHECK(rs[0].kind == RRedexKind::BetaR);
  TermSet first = contract_at(e, rs[0]);
  CHECK(first == set_of({"[\\y.[y]] [z]", "[z] [\\y.[y]]"}));

  // Contracting inside the first element keeps the other untouched.
  RPtr live = rp("[\\y.[y]] [z]");
  TermSet second = r_step(first, live, r_find_redexes(live)[0]);
  CHECK(second == set_of({"[z]", "[z] [\\y.[y]]"}));
  CHECK(r_normalize(first) == second);
}

TEST_CASE("permutations can collapse in a bag") {
  RPtr e = rp("[\\x.[x, x]] [\\y.[y], z]");
  TermSet out = contract_at(e, r_find_redexes(e)[0]);
  CHECK(out == singleton("[\\y.[y], z]"));
  CHECK(r_normalize(singleton("[\\x.[x, x]] [\\y.[y], z]")) == out);
}

TEST_CASE("sigma1 unblocks a beta redex, then zero fires") {
  RPtr e = rp("[\\y.[\\x.[x, x] [y]]] ([z] [w]) [\\u.[u], w]");
  // The two-element bag [x, x] in function position is a 0-redex all
  // along; the outer permutation is still listed first.
  auto rs = r_find_redexes(e);
  REQUIRE(rs.size() == 2);
  CHECK(rs[0].kind == RRedexKind::Sigma1R);
  CHECK(rs[1].kind == RRedexKind::Zero);
  TermSet s1 = contract_at(e, rs[0]);
  CHECK(s1 == singleton("[\\y.[\\x.[x, x] [y]] [\\u.[u], w]] ([z] [w])"));

  RPtr e1 = s1.elements()[0];
  auto rs1 = r_find_redexes(e1);
  REQUIRE(rs1.size() == 2);
  CHECK(rs1[0].kind == RRedexKind::BetaR);
  CHECK(rs1[1].kind == RRedexKind::Zero);
  TermSet s2 = contract_at(e1, rs1[0]);
  CHECK(s2 == singleton("[\\y.[\\u.[u], w] [y]] ([z] [w])"));

  RPtr e2 = s2.elements()[0];
  auto rs2 = r_find_redexes(e2);
  REQUIRE(rs2.size() == 1);
  CHECK(rs2[0].kind == RRedexKind::Zero);
  CHECK(contract_at(e2, rs2[0]).empty());

  CHECK(r_normalize(singleton(
            "[\\y.[\\x.[x, x] [y]]] ([z] [w]) [\\u.[u], w]"))
            .empty());
}

TEST_CASE("identity applied to a stuck spine stays stuck") {
  // The inner block normalizes, but the outer application cannot fire:
  // beta needs a bag argument and sigma3 a one-application argument.
  TermSet nf = r_normalize(
      singleton("[\\x.[x]] ([\\x.[\\y.[x] [y]]] [z] [w])"));
  CHECK(nf == singleton("[\\x.[x]] ([z] [w])"));
  CHECK(r_find_redexes(rp("[\\x.[x]] ([z] [w])")).empty());
}

TEST_CASE("single-element and set normalization agree") {
  std::vector<std::string> sources = {
      "[\\x.[x] [x]] [\\y.[y], z]",
      "[\\x.[x, x]] [\\y.[y], z]",
      "[\\y.[\\x.[x, x] [y]]] ([z] [w]) [\\u.[u], w]",
      "[\\x.[x]] ([\\x.[\\y.[x] [y]]] [z] [w])",
      "[z] [w]",
  };
  for (const auto& s : sources) {
    CHECK(nf_element(rp(s)) == r_normalize(singleton(s)));
  }
}

TEST_CASE("normalization is order independent") {
  std::mt19937_64 rng(17u);
  ResourceGen gen{14, 2, 4, {"x", "y", "z"}};
  for (int i = 0; i < 60; ++i) {
    TermSet set = gen_termset(rng, gen, 4);
    TermSet base = r_normalize(set);
    CHECK(base == r_normalize_par(set));
    for (std::uint64_t seed = 1; seed <= 3; ++seed) {
      CHECK(base == r_normalize(set, ROrder::random(seed)));
    }
    // Normal forms are fixed points.
    CHECK(r_normalize(base) == base);
    for (const auto& e : base.elements()) {
      CHECK(r_find_redexes(e).empty());
    }
  }
}

TEST_CASE("beta contracta shrink the element") {
  std::mt19937_64 rng(23u);
  ResourceGen gen{16, 2, 4, {"x", "y"}};
  for (int i = 0; i < 300; ++i) {
    RPtr e = gen(rng);
    for (const auto& r : r_find_redexes(e)) {
      if (r.kind != RRedexKind::BetaR) continue;
      for (const auto& out : contract_at(e, r).elements()) {
        CHECK(r_size(out) < r_size(e));
      }
    }
  }
}

TEST_CASE("resource approximant grammar") {
  CHECK(is_resource_approximant(rp("[]")));
  CHECK(is_resource_approximant(rp("[x, x]")));
  CHECK(is_resource_approximant(rp("[\\x.[x], \\y.[]]")));
  CHECK(is_resource_approximant(rp("[x] [y] [z]")));
  CHECK(is_resource_approximant(rp("[x] [y, y]")));
  CHECK(is_resource_approximant(rp("[\\x.[x]] ([y] [z])")));
  CHECK(is_resource_approximant(rp("[\\x.[]] ([y] [])")));

  CHECK(!is_resource_approximant(rp("[x, y]")));
  CHECK(!is_resource_approximant(rp("[x, \\y.[]]")));
  CHECK(!is_resource_approximant(rp("[\\x.[x]] [z]")));
  CHECK(!is_resource_approximant(rp("[] [z]")));
  CHECK(!is_resource_approximant(rp("[\\x.[x]] ([y] [z]) [w]")));
}
