/*
Copyright (c) 2026 The indtac Authors. All rights reserved.
Released under Apache 2.0 license as described in the file LICENSE.
*/
#include <doctest.h>

#include "indtac/induction.hpp"
#include "indtac/naming.hpp"
#include "support.hpp"

using namespace indtac;
using namespace indtac::test;

namespace {

struct Run {
    ProofSession ps;
    InductionReport report;
};

// Declarations plus one lemma `l`; runs `setup` and then the induction tactic.
Run run(const std::string& decls, const std::string& stmt, const std::vector<std::string>& setup,
        const std::string& tactic) {
    const std::string text = decls + "\nlemma l : " + stmt + " :=\nbegin\n  sorry\nend\n";
    ProofSession ps = openLemma(text, "l", setup);
    TacticOutcome o = runTactic(ps, parseTactic(tactic));
    REQUIRE(o.induction);
    return {std::move(ps), *o.induction};
}

// "name:rule" for each hypothesis named in case `ctor`.
std::vector<std::string> rules(const InductionReport& r, const std::string& ctor) {
    for (const auto& c : r.cases)
        if (caseName(c.ctor) == ctor) {
            std::vector<std::string> out;
            for (const auto& n : c.names) out.push_back(n.name + ":" + toString(n.rule));
            return out;
        }
    return {"<no case " + ctor + ">"};
}

const char* kExprDecl = R"(
inductive expr : Type
| lit : nat → expr
| add (e₁ e₂ : expr) : expr
)";

}  // namespace

TEST_SUITE("naming") {

TEST_CASE("rules that named each corpus argument") {
    ProofSession tc = openLemma(readFile(corpusDir() / "tc_trans.ind"), "tc_trans", {"intros"});
    InductionReport r = *runTactic(tc, parseTactic("induction' h₁")).induction;
    CHECK(rules(r, "base") ==
          std::vector<std::string>{"a:index association", "b:index association", "hr:named argument"});
    CHECK(rules(r, "step") == std::vector<std::string>{"a:index association", "y:named argument",
                                                       "b:index association", "hr:named argument", "h₁:recursion",
                                                       "ih:induction hypothesis"});
    CHECK(hypNames(tc.state, goalForCase(tc.state, "step")) ==
          std::vector<std::string>{"α", "r", "a", "y", "b", "c", "hr", "h₁", "ih", "h₂"});

    ProofSession n = openLemma(readFile(corpusDir() / "commutativity.ind"), "add_zero", {"intro m"});
    InductionReport rn = *runTactic(n, parseTactic("induction' m")).induction;
    CHECK(rules(rn, "zero").empty());
    CHECK(rules(rn, "succ") == std::vector<std::string>{"m:recursion", "ih:induction hypothesis"});

    ProofSession loop = openLemma(readFile(corpusDir() / "big_step.ind"), "loop", {"intros"});
    InductionReport rl = *runTactic(loop, parseTactic("induction' h")).induction;
    CHECK(rules(rl, "while_true") ==
          std::vector<std::string>{"S:named argument", "s:named argument", "t:named argument", "t_1:index association",
                                   "hcond:named argument", "h:recursion", "h_1:recursion",
                                   "ih_h:induction hypothesis", "ih_h_1:induction hypothesis"});
    CHECK(rules(rl, "while_false") ==
          std::vector<std::string>{"S:named argument", "s:named argument", "hcond:named argument"});
}

TEST_CASE("nameIH") {
    CHECK(nameIH("h₁", 1) == "ih");
    CHECK(nameIH("e₁", 2) == "ih_e₁");
    CHECK(nameIH("e₂", 2) == "ih_e₂");
}

TEST_CASE("several IHs are named after their subexpressions") {
    Run r = run(kExprDecl, "∀ (P : expr → Type) (e : expr), P e", {"intros P e"}, "induction' e");
    CHECK(rules(r.report, "add") == std::vector<std::string>{"e:recursion", "e_1:recursion",
                                                             "ih_e:induction hypothesis",
                                                             "ih_e_1:induction hypothesis"});
    CHECK(rules(r.report, "lit") == std::vector<std::string>{"n:type hint"});

    // user names flow into the IH names
    Run u = run(kExprDecl, "∀ (P : expr → Type) (e : expr), P e", {"intros P e"},
                "induction' e with case add: e₁ e₂ ih_e₁ ih_e₂");
    const Goal& add = goalForCase(u.ps.state, "add");
    CHECK(hypType(u.ps.state, add, "ih_e₁").find("P e₁") != std::string::npos);
    CHECK(hypType(u.ps.state, add, "ih_e₂").find("P e₂") != std::string::npos);
}

TEST_CASE("freshen") {
    CHECK(freshen("n", {}) == "n");
    CHECK(freshen("n", {"n"}) == "n_1");
    CHECK(freshen("n", {"n", "n_1"}) == "n_2");
    CHECK(freshen("n", {"m"}) == "n");
}

TEST_CASE("a taken name gets a suffix") {
    // n is still in use when the succ argument is named, so it becomes n_1
    Run r = run("", "∀ (n m : nat), n = m → m = n", {"intros n m h"}, "induction' m fixing *");
    CHECK(rules(r.report, "succ") == std::vector<std::string>{"m:recursion", "ih:induction hypothesis"});
    Run c = run("", "∀ (P : nat → Type) (n : nat) (h : P n) (k : nat), P k", {"intros P n h k"},
                "induction' k fixing *");
    CHECK(rules(c.report, "succ") == std::vector<std::string>{"k:recursion", "ih:induction hypothesis"});

    Run d = run(kExprDecl, "∀ (n : nat) (e : expr), e = e", {"intros n e"}, "cases' e fixing *");
    CHECK(rules(d.report, "lit") == std::vector<std::string>{"m:type hint"});
    Run d2 = run(kExprDecl, "∀ (n m k : nat) (e : expr), e = e", {"intros n m k e"}, "cases' e fixing *");
    CHECK(rules(d2.report, "lit") == std::vector<std::string>{"n_1:type hint"});
}

TEST_CASE("user names are positional and verbatim") {
    Run r = run("", "∀ (P : nat → Type) (n : nat), P n", {"intros P n"}, "induction' n with case succ: p q");
    CHECK(rules(r.report, "succ") == std::vector<std::string>{"p:user", "q:user"});
    CHECK(hypType(r.ps.state, goalForCase(r.ps.state, "succ"), "q").find("P p") != std::string::npos);

    // "_" keeps the generated name
    Run k = run("", "∀ (P : nat → Type) (n : nat), P n", {"intros P n"}, "induction' n with case succ: _ hyp");
    CHECK(rules(k.report, "succ") == std::vector<std::string>{"n:recursion", "hyp:user"});

    ProofSession ps = openLemma("lemma l : ∀ (P : nat → Type) (n : nat), P n :=\nbegin\n  sorry\nend\n", "l",
                                {"intros P n"});
    const std::size_t before = ps.state.goals().size();
    CHECK(kindOf([&] { runTactic(ps, parseTactic("induction' n with case succ: a b c")); }) ==
          name(TacticErrorKind::UserNameCountMismatch));
    CHECK(ps.state.goals().size() == before);
}

TEST_CASE("lookupHint") {
    auto env = runScript("axiom thing : Type").env;
    LocalContext lctx;
    TypeChecker tc(*env, lctx);
    Expr nat = mkConst("nat");
    CHECK(lookupHint(*env, tc, nat, {}) == "n");
    CHECK(lookupHint(*env, tc, nat, {"n"}) == "m");
    CHECK(lookupHint(*env, tc, nat, {"n", "m"}) == "k");
    CHECK(lookupHint(*env, tc, nat, {"n", "m", "k"}) == "n");
    CHECK(lookupHint(*env, tc, elabIn(*env, lctx, "list nat"), {}) == "ns");
    CHECK(lookupHint(*env, tc, elabIn(*env, lctx, "list nat"), {"ns"}) == "ms");
    CHECK_FALSE(lookupHint(*env, tc, mkConst("thing"), {}));
    CHECK_FALSE(lookupHint(*env, tc, elabIn(*env, lctx, "list thing"), {}));

    auto st = runScript(kStmtDecls).env;
    TypeChecker ts(*st, lctx);
    CHECK(lookupHint(*st, ts, elabIn(*st, lctx, "list state"), {}) == "ss");
    CHECK(lookupHint(*st, ts, mkConst("stmt"), {"S"}) == "T");

    // later registrations win
    auto over = runScript("name_hints nat := i j").env;
    TypeChecker to(*over, lctx);
    CHECK(lookupHint(*over, to, nat, {}) == "i");
}

TEST_CASE("index association needs matching types") {
    const char* decls = R"(
inductive single (α : Type) : list α → Type
| mk : ∀ (a : α), single α (list.cons α a (list.nil α))

inductive at_ (α : Type) : α → Type
| mk : ∀ (a : α), at_ α a
)";
    // a : α sits in an index of type list α; it must not be called xs
    Run r = run(decls, "∀ (α : Type) (xs : list α), single α xs → xs = xs", {"intros α xs h"}, "cases' h");
    CHECK(rules(r.report, "mk") == std::vector<std::string>{"a:named argument"});
    // same type: named after the index
    Run s = run(decls, "∀ (α : Type) (x : α), at_ α x → x = x", {"intros α x h"}, "cases' h");
    CHECK(rules(s.report, "mk") == std::vector<std::string>{"x:index association"});
}

TEST_CASE("fallback names") {
    const char* decls = R"(
axiom thing : Type

inductive box : Type
| mk : thing → false → box
)";
    Run r = run(decls, "∀ (b : box), b = b", {"intro b"}, "cases' b");
    CHECK(rules(r.report, "mk") == std::vector<std::string>{"x:fallback", "h:fallback"});
}

TEST_CASE("leftover index equations get the induction_eq scheme") {
    const char* decls = R"(
inductive fin : nat → Type
| zero : ∀ (n : nat), fin (succ n)
| succ : ∀ (n : nat) (i : fin n), fin (succ n)
)";
    Run r = run(decls, "∀ (n : nat), fin (n + n) → n = n", {"intros n h"}, "cases' h");
    for (const auto& c : r.report.cases) {
        INFO(caseName(c.ctor));
        bool leftover = false;
        for (const auto& n : c.names)
            if (n.rule == NamingRule::Leftover) {
                leftover = true;
                CHECK(n.name.rfind("induction_eq", 0) == 0);
            }
        CHECK(leftover);
    }
    CHECK_NOTHROW(r.ps.state.checkProof());
}

TEST_CASE("new names are distinct and never temporary, across the corpus") {
    std::size_t checked = 0;
    for (const auto& path : corpusFiles()) {
        const std::string text = readFile(path);
        for (const auto& item : parseFile(text).items) {
            const auto* d = std::get_if<DeclItem>(&item);
            if (!d || d->tactics.empty()) continue;
            ProofSession ps = openLemma(text, d->name);
            for (const auto& t : d->tactics) {
                if (ps.state.goals().empty()) break;
                TacticOutcome o = runTactic(ps, t);
                if (!o.induction) continue;
                for (const Goal& g : ps.state.goals()) {
                    std::vector<std::string> ns = hypNames(ps.state, g);
                    std::set<std::string> uniq(ns.begin(), ns.end());
                    CHECK(uniq.size() == ns.size());
                    for (const auto& h : g.lctx.hyps()) {
                        CHECK_FALSE(h.temporaryName);
                        CHECK(h.name.find('%') == std::string::npos);
                    }
                    ++checked;
                }
            }
        }
    }
    CHECK(checked > 5);
}

}  // TEST_SUITE
