#include "oracles.hpp"

#include "fuzzyfo/decision.hpp"
#include "fuzzyfo/errors.hpp"

#include <doctest.h>

using namespace fuzzyfo;

namespace {

const char* const kPhi =
    "exists x. (P(x) <-> ~P(x)) & forall x. exists y. (P(x) <-> (P(y) & P(y)))";

ChainClass luk(std::initializer_list<std::size_t> ks) {
  std::vector<FiniteChain> cs;
  for (auto k : ks) cs.push_back(make_lukasiewicz_chain(k));
  return ChainClass(cs);
}

ChainClass all_chains_up_to(std::size_t n) {
  std::vector<FiniteChain> cs;
  for (std::size_t s = 2; s <= n; ++s)
    for (const auto& c : enumerate_mtl_chains(s)) cs.push_back(c);
  return ChainClass(cs);
}

SearchOptions bound(std::size_t d, unsigned jobs = 1) {
  SearchOptions o;
  o.max_domain = d;
  o.jobs = jobs;
  return o;
}

void check_witness(const ChainClass& k, const Formula& f, const Verdict& v) {
  REQUIRE(v.witness.has_value());
  REQUIRE(v.witness->structure.has_value());
  CHECK(eval(k.chains()[v.witness->chain_index], *v.witness->structure, f) == v.witness->value);
}

}  // namespace

TEST_CASE("taut0 examples") {
  const Formula law = parse_formula("(P(c) & P(c)) /\\ (~P(c) & ~P(c))");
  const ChainClass k = all_chains_up_to(4);
  CHECK(taut0_bounded(k, law, bound(3)).kind == Verdict::Kind::Exhausted);

  const Formula ex = parse_formula("(P(c) & P(c)) \\/ (~P(c) & ~P(c))");
  const Verdict r = taut0_bounded(luk({2}), ex, bound(2));
  CHECK(r.kind == Verdict::Kind::Refuted);
  CHECK(r.witness->value == 1);
  CHECK(r.witness->structure->predicates.at("P").values[0] == 1);
  check_witness(luk({2}), ex, r);

  const Verdict z = taut0_bounded(k, parse_formula("0"), bound(1));
  CHECK(z.kind == Verdict::Kind::Decided);
  CHECK(z.decision);
}

TEST_CASE("satpos examples") {
  const Verdict phi = sat_pos_bounded(luk({3}), parse_formula(kPhi), bound(2));
  CHECK(phi.kind == Verdict::Kind::MemberWitness);
  CHECK(phi.witness->value == 1);
  check_witness(luk({3}), parse_formula(kPhi), phi);

  const Formula law = parse_formula("(P(c) & P(c)) /\\ (~P(c) & ~P(c))");
  CHECK(sat_pos_bounded(all_chains_up_to(4), law, bound(2)).kind == Verdict::Kind::Exhausted);

  const Verdict one = sat_pos_bounded(luk({2, 3}), parse_formula("1"), bound(1));
  CHECK(one.kind == Verdict::Kind::MemberWitness);
  CHECK(one.witness->value == 1);
}

TEST_CASE("tautlt1 and sat1 examples") {
  const Formula phi = parse_formula(kPhi);
  CHECK(taut_lt1_bounded(luk({2, 3, 4, 5, 6}), phi, bound(3)).kind == Verdict::Kind::Exhausted);
  CHECK(sat1_bounded(luk({2, 3, 4, 5, 6}), phi, bound(3)).kind == Verdict::Kind::Exhausted);
  CHECK(taut_lt1_bounded(luk({3}), parse_formula("1"), bound(1)).kind == Verdict::Kind::Refuted);

  const Verdict p = taut_lt1_bounded(luk({2}), parse_formula("P(c)"), bound(1));
  CHECK(p.kind == Verdict::Kind::Refuted);
  CHECK(p.witness->structure->predicates.at("P").values[0] == 1);

  const Verdict em = sat1_bounded(luk({2}), parse_formula("P(c) \\/ ~P(c)"), bound(1));
  CHECK(em.kind == Verdict::Kind::MemberWitness);
  CHECK(em.witness->value == 1);

  CHECK(sat1_bounded(luk({3}), parse_formula("P(c) & ~P(c)"), bound(2)).kind ==
        Verdict::Kind::Exhausted);
  CHECK(sat_pos_bounded(luk({3}), parse_formula("P(c) & ~P(c)"), bound(2)).kind ==
        Verdict::Kind::Exhausted);
}

TEST_CASE("complementarity of the bounded searches") {
  const char* corpus[] = {kPhi, "forall x. (P(x) & ~P(x))", "exists x. (P(x) & P(x) & P(x))",
                          "forall x. exists y. (R(x,y) <-> ~R(y,x))", "P(c) -> Q(d)",
                          "~exists x. P(x) /\\ P(c)"};
  const ChainClass k = all_chains_up_to(3);
  for (const char* text : corpus) {
    const Formula f = parse_formula(text);
    const Verdict t0 = taut0_bounded(k, f, bound(2));
    const Verdict sp = sat_pos_bounded(k, f, bound(2));
    CHECK((t0.kind == Verdict::Kind::Refuted) == (sp.kind == Verdict::Kind::MemberWitness));
    if (t0.witness) {
      check_witness(k, f, t0);
      CHECK(*t0.witness->structure == *sp.witness->structure);
      CHECK(t0.witness->chain_index == sp.witness->chain_index);
    }
    const Verdict lt = taut_lt1_bounded(k, f, bound(2));
    const Verdict s1 = sat1_bounded(k, f, bound(2));
    CHECK((lt.kind == Verdict::Kind::Refuted) == (s1.kind == Verdict::Kind::MemberWitness));
    if (lt.witness) {
      check_witness(k, f, lt);
      CHECK(lt.witness->value == k.chains()[lt.witness->chain_index].top());
    }
  }
}

TEST_CASE("parallel search returns the serial witness") {
  const Formula f = parse_formula(
      "exists x. exists y. exists z. (P(x) /\\ ~P(y) /\\ Q(z) /\\ ~Q(x) /\\ ~Q(y)) /\\ "
      "forall u. exists v. ~R(u,v)");
  const ChainClass k = luk({2});
  const Verdict serial = sat1_bounded(k, f, bound(3));
  REQUIRE(serial.witness.has_value());
  CHECK(serial.witness->structure->domain_size == 3);
  CHECK(serial.examined > 4096);  // large enough to be split across workers
  for (unsigned jobs : {2u, 3u, 8u}) {
    const Verdict par = sat1_bounded(k, f, bound(3, jobs));
    REQUIRE(par.witness.has_value());
    CHECK(*par.witness->structure == *serial.witness->structure);
    CHECK(par.examined == serial.examined);
  }
}

TEST_CASE("bounded search refuses oversized spaces") {
  SearchOptions o = bound(4);
  o.budget = 1000;
  CHECK_THROWS_AS(taut0_bounded(luk({3}), parse_formula("forall x. exists y. R(x,y)"), o),
                  BudgetExceeded);
  CHECK_THROWS_AS(taut0_bounded(luk({3}), parse_formula("P(x)", parse_vocabulary("pred P/1\n")),
                                bound(1)),
                  FragmentError);
}

TEST_CASE("propositional taut0") {
  const ChainClass k = all_chains_up_to(5);
  const Formula law = star_translate(parse_formula("P(c) /\\ ~P(c)"));
  const Verdict v = taut0_propositional(k, law, search_budget());
  CHECK(v.kind == Verdict::Kind::Decided);
  CHECK(v.decision);
  const Formula lem = star_translate(parse_formula("P(c) \\/ ~P(c)"));
  const Verdict r = taut0_propositional(k, lem, search_budget());
  CHECK(r.kind == Verdict::Kind::Refuted);
  CHECK(r.witness->valuation.at("P(c)") == 1);
  CHECK(eval_propositional(k.chains()[r.witness->chain_index], r.witness->valuation, lem) ==
        r.witness->value);
}

TEST_CASE("classical propositional contradiction") {
  CHECK(is_classical_contradiction_prop(parse_formula("P(c) /\\ ~P(c)")));
  CHECK_FALSE(is_classical_contradiction_prop(parse_formula("P(c) \\/ ~P(c)")));
  CHECK(is_classical_contradiction_prop(
      parse_formula("P(c) /\\ ~P(f(c)) /\\ P(f(c)) /\\ ~P(f(f(c)))")));
  CHECK(is_classical_contradiction_prop(parse_formula("0")));
  CHECK_FALSE(is_classical_contradiction_prop(parse_formula("P(a) -> P(b)")));
  CHECK(is_classical_contradiction_prop(parse_formula("~(P(a) -> (P(b) -> P(a)))")));
  CHECK_THROWS_AS(is_classical_contradiction_prop(parse_formula("P(x)", parse_vocabulary("pred P/1\n"))),
                  FragmentError);
  CHECK_THROWS_AS(is_classical_contradiction_prop(parse_formula("P(a) /\\ P(b) /\\ P(c)"), 2),
                  BudgetExceeded);
}

TEST_CASE("propositional satisfiability agrees with the truth table") {
  const char* corpus[] = {"P(a) /\\ ~P(b) /\\ (P(b) \\/ P(c)) /\\ ~P(c)", "(P(a) <-> ~P(b)) /\\ (P(b) <-> P(a))",
                          "(P(a) -> P(b)) /\\ (P(b) -> P(c)) /\\ P(a) /\\ ~P(c)",
                          "(P(a) \\/ P(b)) & (~P(a) \\/ P(b)) & ~P(b) \\/ P(d)"};
  for (const char* text : corpus) {
    const Formula f = parse_formula(text);
    PropositionalValuation<Rank> model;
    const bool sat = propositionally_satisfiable(f, &model);
    CHECK(sat == !is_classical_contradiction_prop(f));
    if (sat) CHECK(eval_propositional(make_lukasiewicz_chain(2), model, f) == 1);
  }
}

TEST_CASE("exists-forall prefix") {
  const ExistsForallPrefix p =
      exists_forall_prefix(parse_formula("exists x. forall y. (P(x) /\\ ~P(y))"));
  CHECK(p.existentials == std::vector<std::string>{"x"});
  CHECK(p.universals == std::vector<std::string>{"y"});
  CHECK_THROWS_AS(exists_forall_prefix(parse_formula("forall x. exists y. R(x,y)")), FragmentError);
  CHECK_THROWS_AS(exists_forall_prefix(parse_formula("exists x. P(f(x))")), FragmentError);
  // ~forall x. exists y is exists x. forall y after normal form.
  CHECK(exists_forall_prefix(parse_formula("~forall x. exists y. R(x,y)")).universals.size() == 1);
  CHECK(bsr_domain_bound(parse_formula("exists x. exists y. forall z. R(x,c)")) == 3);
  CHECK(bsr_domain_bound(parse_formula("forall z. P(z)")) == 1);
}

TEST_CASE("bsr examples") {
  const Verdict u = bsr_decide(parse_formula("exists x. forall y. (P(x) /\\ ~P(y))"));
  CHECK(u.kind == Verdict::Kind::Decided);
  CHECK_FALSE(u.decision);

  const Formula q = parse_formula("exists x. forall y. (Q(x) \\/ ~Q(y))");
  const Verdict s = bsr_decide(q);
  CHECK(s.decision);
  REQUIRE(s.witness.has_value());
  CHECK(s.witness->structure->domain_size == 1);
  CHECK(s.witness->structure->predicates.at("Q").values[0] == 1);

  const Verdict p = bsr_decide(parse_formula("forall y. P(y)"));
  CHECK(p.decision);
  CHECK(p.witness->structure->predicates.at("P").values == std::vector<Rank>{1});
}

TEST_CASE("bsr agrees with brute force on a small corpus") {
  const char* corpus[] = {
      "exists x. exists y. forall z. (R(x,z) /\\ ~R(y,z))",
      "exists x. forall y. (R(x,y) /\\ ~R(y,x))",
      "forall x. forall y. (R(x,y) \\/ R(y,x)) /\\ exists x. ~R(x,x)",
      "exists x. exists y. (P(x) /\\ ~P(y)) /\\ forall z. (P(z) -> Q(z)) /\\ ~Q(c)",
      "forall x. (P(x) <-> ~P(c))",
      "exists x. forall y. (R(x,y) <-> ~R(y,y))",
  };
  for (const char* text : corpus) {
    const Formula f = parse_formula(text);
    const std::size_t n = bsr_domain_bound(f);
    const Verdict v = bsr_decide(f);
    CHECK(v.decision == (oracle::brute_force_model_size(f, n + 2) != 0));
    if (v.decision) CHECK(eval(make_lukasiewicz_chain(2), *v.witness->structure, f) == 1);
  }
}

TEST_CASE("dual herbrand examples") {
  const Verdict a = dual_herbrand_search(parse_formula("forall x. (P(x) /\\ ~P(x))"), 2);
  CHECK(a.kind == Verdict::Kind::Decided);
  REQUIRE(a.herbrand.has_value());
  CHECK(a.herbrand->instances.size() == 1);
  CHECK(a.herbrand->depth == 0);

  const Formula f = parse_formula("forall x. (P(x) /\\ ~P(f(x)))");
  const Verdict b = dual_herbrand_search(f, 3);
  REQUIRE(b.herbrand.has_value());
  REQUIRE(b.herbrand->instances.size() == 2);
  CHECK(b.herbrand->depth == 1);
  CHECK(to_string(b.herbrand->instances[0][0]) == "c0");
  CHECK(to_string(b.herbrand->instances[1][0]) == "f(c0)");
  CHECK(is_classical_contradiction_prop(b.herbrand->conjunction));

  const Verdict c = dual_herbrand_search(parse_formula("forall x. P(x)"), 3);
  CHECK(c.kind == Verdict::Kind::Exhausted);
  CHECK(c.bounds == "Herbrand depth 0..3");

  CHECK_THROWS_AS(dual_herbrand_search(parse_formula("exists x. P(x)"), 1), FragmentError);
}

TEST_CASE("dual herbrand named constant") {
  const Verdict v =
      dual_herbrand_search(parse_formula("forall x. (P(c) /\\ (P(x) -> P(f(x))) /\\ ~P(f(f(c))))"), 3);
  REQUIRE(v.herbrand.has_value());
  CHECK(v.herbrand->instances.size() == 2);
  CHECK(v.herbrand->depth == 1);
  CHECK(is_classical_contradiction_prop(v.herbrand->conjunction));
}

TEST_CASE("purely universal contradictions") {
  const Verdict a = purely_universal_contradiction(parse_formula("forall x. forall y. (P(x) /\\ ~P(y))"), 2);
  CHECK(a.kind == Verdict::Kind::Decided);
  CHECK(a.decision);
  CHECK(a.herbrand.has_value());

  const Verdict b = purely_universal_contradiction(parse_formula("forall x. (P(x) \\/ ~P(x))"), 2);
  CHECK(b.kind == Verdict::Kind::Decided);
  CHECK_FALSE(b.decision);
  CHECK(b.witness.has_value());

  const Verdict c = purely_universal_contradiction(parse_formula("forall x. (P(x) /\\ ~P(f(x)))"), 2);
  CHECK(c.kind == Verdict::Kind::Decided);
  CHECK(c.decision);
  CHECK(c.herbrand->depth == 1);
  CHECK(c.reason.rfind("semi-decided", 0) == 0);

  CHECK(purely_universal_contradiction(parse_formula("forall x. P(f(x))"), 2).kind ==
        Verdict::Kind::Exhausted);
  CHECK_THROWS_AS(purely_universal_contradiction(parse_formula("exists x. P(x)"), 2), FragmentError);
}

TEST_CASE("propositional lemma on small lattice-literal formulas") {
  const ChainClass k = all_chains_up_to(5);
  const char* corpus[] = {"P(a) /\\ ~P(a)", "P(a) \\/ ~P(a)", "(P(a) \\/ P(b)) /\\ ~P(a) /\\ ~P(b)",
                          "(P(a) /\\ ~P(b)) \\/ (P(b) /\\ ~P(a))", "P(a) /\\ (~P(a) \\/ P(b)) /\\ ~P(b)",
                          "(P(a) \\/ ~P(b)) /\\ (P(b) \\/ ~P(c)) /\\ (P(c) \\/ ~P(a))"};
  for (const char* text : corpus) {
    const Formula f = parse_formula(text);
    const Verdict v = taut0_propositional(k, star_translate(f), search_budget());
    CHECK(is_classical_contradiction_prop(f) == (v.kind == Verdict::Kind::Decided));
  }
}
