/*
Copyright (c) 2026 The indtac Authors. All rights reserved.
Released under Apache 2.0 license as described in the file LICENSE.
*/
#include <doctest.h>

#include "indtac/inductive.hpp"
#include "indtac/qnify.hpp"
#include "support.hpp"

using namespace indtac;
using namespace indtac::test;

namespace {

using K = RuleFired::Kind;

std::vector<std::string> names(const std::vector<RuleFired>& trace) {
    std::vector<std::string> out;
    for (const auto& r : trace) out.push_back(toString(r));
    return out;
}

const char* kDepDecl = R"(
inductive fin : nat → Type
| zero : ∀ (n : nat), fin (succ n)
| succ : ∀ (n : nat) (i : fin n), fin (succ n)

inductive dpair : Type
| mk : ∀ (n : nat) (v : fin n), dpair
)";

void introToEquation(GoalFx& f) {
    while (f.g().lctx.empty() || !matchEq(f.g().lctx.hyps().back().type)) f.set(intro(f.st, f.g()));
}

// Steps the queue by hand, checking the measure and the proof after each rule.
std::vector<RuleFired> drive(GoalFx& f, std::vector<FVarId> queue) {
    std::vector<RuleFired> trace;
    while (!queue.empty() && !f.st.goals().empty()) {
        FVarId h = queue.front();
        queue.erase(queue.begin());
        if (!f.g().lctx.find(h)) continue;
        std::vector<FVarId> whole{h};
        whole.insert(whole.end(), queue.begin(), queue.end());
        auto before = qnifyMeasure(*f.env, f.g(), whole);
        QnifyStepResult r = qnifyStep(f.st, f.g(), h);
        trace.push_back(r.rule);
        f.update(r.goal);
        CHECK_NOTHROW(f.st.checkProof());
        if (!r.goal) break;
        queue.insert(queue.begin(), r.children.begin(), r.children.end());
        if (r.rule.kind == K::Stuck) continue;
        auto after = qnifyMeasure(*f.env, f.g(), queue);
        INFO(toString(r.rule));
        CHECK(after < before);
    }
    return trace;
}

}  // namespace

TEST_SUITE("qnify") {

TEST_CASE("injection puts the argument equations at the front") {
    GoalFx f(kStmtDecls, "∀ (S : stmt) (s s' : state), (skip, s') = (while (λ _, true) S, s) → false");
    f.intros({"S", "s", "s'", "ieq"});
    QnifyStepResult r = qnifyStep(f.st, f.g(), f.id("ieq"));
    CHECK(toString(r.rule) == "injection(2)");
    REQUIRE(r.goal);
    REQUIRE(r.children.size() == 2);
    const Goal& g = *r.goal;
    CHECK(hypNames(f.st, g) == std::vector<std::string>{"S", "s", "s'", "ieq₁", "ieq₂"});
    CHECK(printExpr(*f.env, g.lctx, g.lctx.find(r.children[0])->type) == "skip = while (λ _, true) S");
    CHECK(printExpr(*f.env, g.lctx, g.lctx.find(r.children[1])->type) == "s' = s");
    f.set(g);
    CHECK_NOTHROW(f.st.checkProof());

    // the first child is what runs next, and it closes the goal
    QnifyStepResult c = qnifyStep(f.st, f.g(), r.children[0]);
    CHECK(toString(c.rule) == "conflict");
    CHECK_FALSE(c.goal);
    f.close();
    CHECK_NOTHROW(f.st.checkProof());
}

TEST_CASE("qnifyAll on the skip case") {
    GoalFx f(kStmtDecls, "∀ (S : stmt) (s s' : state), (skip, s') = (while (λ _, true) S, s) → false");
    f.intros({"S", "s", "s'", "ieq"});
    QnifyResult r = qnifyAll(f.st, f.g(), {f.id("ieq")});
    CHECK(names(r.trace) == std::vector<std::string>{"injection(2)", "conflict"});
    CHECK_FALSE(r.goal);
    f.close();
    CHECK_NOTHROW(f.st.checkProof());
}

TEST_CASE("conflict") {
    GoalFx f(kStmtDecls, "∀ (S : stmt), skip = while (λ _, true) S → false");
    f.intros({"S", "ieq₁"});
    QnifyStepResult r = qnifyStep(f.st, f.g(), f.id("ieq₁"));
    CHECK(r.rule.kind == K::Conflict);
    CHECK_FALSE(r.goal);
    f.close();
    CHECK_NOTHROW(f.st.checkProof());
}

TEST_CASE("cycle, in both orientations") {
    for (const char* stmt : {"∀ (x : nat), x = succ (succ (succ x)) → false", "∀ (x : nat), succ x = x → false",
                             "∀ (x y : nat), (x, y) = (succ x, y) → false"}) {
        INFO(stmt);
        GoalFx f("", stmt);
        introToEquation(f);
        QnifyResult r = qnifyAll(f.st, f.g(), {f.g().lctx.hyps().back().id});
        CHECK_FALSE(r.goal);
        CHECK(r.trace.back().kind == K::Cycle);
        f.close();
        CHECK_NOTHROW(f.st.checkProof());
    }
}

TEST_CASE("buildCycleProof") {
    for (const char* eq : {"x = succ x", "x = succ (succ (succ x))", "succ (succ x) = x"}) {
        INFO(eq);
        GoalFx f("", std::string("∀ (x : nat), ") + eq + " → false");
        f.intros({"x", "h"});
        Expr p = buildCycleProof(f.st, f.g(), f.id("h"));
        Goal g = f.g();
        TypeChecker tc = f.st.checker(g);
        CHECK_NOTHROW(tc.check(p, mkConst("false")));
    }

    // x sits under a non-constructor: no spine to follow
    GoalFx f("", "∀ (x : nat), x = succ (x + 1) → false");
    f.intros({"x", "h"});
    CHECK(kindOf([&] { buildCycleProof(f.st, f.g(), f.id("h")); }) == name(TacticErrorKind::SpineNotRecursive));
    QnifyStepResult r = qnifyStep(f.st, f.g(), f.id("h"));
    CHECK(r.rule.kind == K::Stuck);
    CHECK(r.goal == f.g());
}

TEST_CASE("deletion then substitution") {
    GoalFx f("", "∀ (P : nat → Type) (t x : nat) (p : P x), t = t → x = zero → P x");
    f.intros({"P", "t", "x", "p", "e₁", "e₂"});
    QnifyResult r = qnifyAll(f.st, f.g(), {f.id("e₁"), f.id("e₂")});
    CHECK(names(r.trace) == std::vector<std::string>{"deletion", "substitution"});
    REQUIRE(r.goal);
    CHECK(hypNames(f.st, *r.goal) == std::vector<std::string>{"P", "t", "p"});
    CHECK(hypType(f.st, *r.goal, "p") == "P 0");
    CHECK(printExpr(*f.env, r.goal->lctx, r.goal->target) == "P 0");
    f.set(*r.goal);
    CHECK_NOTHROW(f.st.checkProof());
}

TEST_CASE("an empty queue leaves the goal alone") {
    GoalFx f("", "∀ (x : nat), x = zero → false");
    f.intros({"x", "h"});
    QnifyResult r = qnifyAll(f.st, f.g(), {});
    REQUIRE(r.goal);
    CHECK(*r.goal == f.g());
    CHECK(r.trace.empty());
}

TEST_CASE("homogenisation") {
    GoalFx f("", "∀ (a b : nat), a == b → b = a");
    f.intros({"a", "b", "h"});
    QnifyStepResult r = qnifyStep(f.st, f.g(), f.id("h"));
    CHECK(r.rule.kind == K::Homogenisation);
    REQUIRE(r.goal);
    CHECK(hypType(f.st, *r.goal, "h") == "a = b");
    CHECK(r.children == std::vector<FVarId>{f.id("h")});
    f.set(*r.goal);
    CHECK_NOTHROW(f.st.checkProof());
}

TEST_CASE("injection child count is the constructor arity") {
    struct Row {
        const char* decls;
        const char* stmt;
        std::size_t arity;
    };
    for (const Row& row : std::vector<Row>{
             {"", "∀ (a b : nat), succ a = succ b → false", 1},
             {"", "∀ (a b c d : nat), (a, b) = (c, d) → false", 2},
             {kStmtDecls, "∀ (x y : string) (f g : state → nat), assign x f = assign y g → false", 2},
             {kStmtDecls, "∀ (S T S' T' : stmt), seq S T = seq S' T' → false", 2},
             {"", "∀ (a b : nat) (xs ys : list nat), list.cons nat a xs = list.cons nat b ys → false", 2},
             {kDepDecl, "∀ (n m : nat) (v : fin n) (w : fin m), dpair.mk n v = dpair.mk m w → false", 2},
         }) {
        INFO(row.stmt);
        GoalFx f(row.decls, row.stmt);
        introToEquation(f);
        FVarId h = f.g().lctx.hyps().back().id;
        Expr lhs = matchEq(f.g().lctx.hyps().back().type)->lhs;
        const Constructor* c = nullptr;
        if (auto info = f.env->findConstructor(getAppFn(lhs).constName())) c = &info->first->constructors[info->second];
        REQUIRE(c);
        QnifyStepResult r = qnifyStep(f.st, f.g(), h);
        CHECK(r.rule.kind == K::Injection);
        CHECK(r.rule.childCount == row.arity);
        CHECK(r.rule.childCount == c->args.size());
        CHECK(r.children.size() == row.arity);
        f.update(r.goal);
        CHECK_NOTHROW(f.st.checkProof());
    }
}

TEST_CASE("injection through a dependent argument gives a heterogeneous child") {
    GoalFx f(kDepDecl, "∀ (n m : nat) (v : fin n) (w : fin m), dpair.mk n v = dpair.mk m w → v == w");
    f.intros({"n", "m", "v", "w", "h"});
    QnifyStepResult r = qnifyStep(f.st, f.g(), f.id("h"));
    REQUIRE(r.goal);
    REQUIRE(r.children.size() == 2);
    CHECK(printExpr(*f.env, r.goal->lctx, r.goal->lctx.find(r.children[0])->type) == "n = m");
    CHECK(printExpr(*f.env, r.goal->lctx, r.goal->lctx.find(r.children[1])->type) == "v == w");
    f.set(*r.goal);
    // n = m substitutes, after which v == w has equal types and homogenises
    std::vector<RuleFired> trace = drive(f, r.children);
    CHECK(names(trace) == std::vector<std::string>{"substitution", "homogenisation", "substitution"});
    REQUIRE(f.st.goals().size() == 1);
    CHECK(f.print(f.g().target) == "v == v");
}

TEST_CASE("the measure drops with every rule") {
    struct Row {
        const char* decls;
        const char* stmt;
        std::vector<std::string> trace;
    };
    for (const Row& row : std::vector<Row>{
             {kStmtDecls, "∀ (S : stmt) (s s' : state), (skip, s') = (while (λ _, true) S, s) → false",
              {"injection(2)", "conflict"}},
             {kStmtDecls,
              "∀ (b : state → Type) (S S' : stmt) (s s' : state), (while b S', s') = (while (λ _, true) S, s) → false",
              {"injection(2)", "injection(2)", "substitution", "substitution", "substitution"}},
             {"", "∀ (a b c : nat), (succ (succ a), b) = (succ c, c) → a = a",
              {"injection(2)", "injection(1)", "substitution", "substitution"}},
             {"", "∀ (x : nat), x = succ (succ (succ x)) → false", {"cycle"}},
             {"", "∀ (t : nat), t = t → false", {"deletion"}},
             {kDepDecl, "∀ (n m : nat) (v : fin n) (w : fin m), dpair.mk n v = dpair.mk m w → false",
              {"injection(2)", "substitution", "homogenisation", "substitution"}},
         }) {
        INFO(row.stmt);
        GoalFx f(row.decls, row.stmt);
        introToEquation(f);
        std::vector<RuleFired> trace = drive(f, {f.g().lctx.hyps().back().id});
        CHECK(names(trace) == row.trace);
    }
}

TEST_CASE("rules fired on the corpus") {
    struct Row {
        const char* file;
        const char* lemma;
        std::vector<std::string> tactics;
        std::vector<std::pair<std::string, std::vector<std::string>>> cases;
    };
    const std::vector<std::string> whileTrace{"injection(2)", "injection(2)", "substitution", "substitution",
                                              "substitution"};
    for (const Row& row : std::vector<Row>{
             {"big_step.ind", "loop", {"intros"},
              {{"skip", {"injection(2)", "conflict"}}, {"while_true", whileTrace}, {"while_false", whileTrace}}},
             {"fin0.ind", "fin0_induction", {"intro h"}, {{"zero", {"conflict"}}, {"succ", {"conflict"}}}},
             {"fin0.ind", "fin0_cases", {"intro h"}, {{"zero", {"conflict"}}, {"succ", {"conflict"}}}},
             {"tc_trans.ind", "tc_trans", {"intros"}, {{"base", {}}, {"step", {}}}},
         }) {
        INFO(row.lemma);
        ProofSession ps = openLemma(readFile(corpusDir() / row.file), row.lemma, row.tactics);
        std::string major = std::string(row.lemma) == "tc_trans" ? "h₁" : "h";
        bool cases = std::string(row.lemma) == "fin0_cases";
        TacticOutcome o = runTactic(ps, parseTactic((cases ? "cases' " : "induction' ") + major));
        REQUIRE(o.induction);
        REQUIRE(o.induction->cases.size() == row.cases.size());
        for (std::size_t i = 0; i < row.cases.size(); ++i) {
            CHECK(caseName(o.induction->cases[i].ctor) == row.cases[i].first);
            CHECK(names(o.induction->cases[i].qnifyTrace) == row.cases[i].second);
        }
        CHECK_NOTHROW(ps.state.checkProof());
    }

    // the standalone lemmas
    const std::string text = readFile(corpusDir() / "qnify.ind");
    for (const auto& [lemma, trace] : std::vector<std::pair<std::string, std::vector<std::string>>>{
             {"skip_ne_while", {"injection(2)", "conflict"}},
             {"no_cycle", {"cycle"}},
             {"deletion", {"deletion"}},
             {"homogenise", {"homogenisation", "substitution"}}}) {
        INFO(lemma);
        auto [env, item] = prepareLemma(text, lemma);
        ProofSession ps = startLemma(env, item);
        std::vector<RuleFired> seen;
        for (const auto& t : item.tactics) {
            TacticOutcome o = runTactic(ps, t);
            seen.insert(seen.end(), o.qnifyTrace.begin(), o.qnifyTrace.end());
        }
        CHECK(names(seen) == trace);
    }
}

}  // TEST_SUITE
