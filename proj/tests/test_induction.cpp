/*
Copyright (c) 2026 The indtac Authors. All rights reserved.
Released under Apache 2.0 license as described in the file LICENSE.
*/
#include <doctest.h>

#include "indtac/induction.hpp"
#include "indtac/inductive.hpp"
#include "support.hpp"

using namespace indtac;
using namespace indtac::test;

namespace {

const char* kFDecl = R"(
axiom Y : nat → Type
axiom y_of : ∀ (n : nat), Y (succ n)

inductive F : ∀ (t : nat), Y t → Type
| mk : ∀ (t : nat) (u : Y t), F t u
)";

const char* kFinDecl = R"(
inductive fin : nat → Type
| zero : ∀ (n : nat), fin (succ n)
| succ : ∀ (n : nat) (i : fin n), fin (succ n)
)";

std::vector<std::string> caseNames(const TacticState& st) {
    std::vector<std::string> out;
    for (const Goal& g : st.goals()) out.push_back(g.caseTag ? caseName(*g.caseTag) : "-");
    return out;
}

std::string display(const ProofSession& ps, const std::string& ctor) {
    return show(ps.state, goalForCase(ps.state, ctor));
}

std::string bigStep() { return readFile(corpusDir() / "big_step.ind"); }

}  // namespace

TEST_SUITE("induction") {

TEST_CASE("generalizeComplexIndices on the while loop") {
    GoalFx f(kStmtDecls, "∀ (S : stmt) (s t : state), big_step (while (λ _, true) S, s) t → false");
    f.intros({"S", "s", "t", "h"});
    InductionConfig cfg{f.id("h")};
    auto [g, records] = generalizeComplexIndices(f.st, f.g(), cfg);
    REQUIRE(records.size() == 1);
    CHECK_FALSE(records[0].isHeterogeneous);
    CHECK(printExpr(*f.env, f.g().lctx, records[0].originalTerm) == "(while (λ _, true) S, s)");
    const Hypothesis* hi = g.lctx.find(records[0].placeholderId);
    REQUIRE(hi);
    CHECK(printExpr(*f.env, g.lctx, hi->type) == "stmt × state");
    Printer p(*f.env, g.lctx);
    const std::string H = p.hypName(hi->id);
    CHECK(*g.lctx.indexOf(hi->id) + 1 == *g.lctx.indexOf(f.id("h")));
    CHECK(printExpr(*f.env, g.lctx, g.lctx.find(f.id("h"))->type) == "big_step " + H + " t");
    CHECK(printExpr(*f.env, g.lctx, g.target) == H + " = (while (λ _, true) S, s) → false");
    f.set(g);
    CHECK_NOTHROW(f.st.checkProof());
}

TEST_CASE("a dependent complex index gets a heterogeneous equation") {
    GoalFx f(kFDecl, "∀ (n : nat), F (succ n) (y_of n) → false");
    f.intros({"n", "h"});
    InductionConfig cfg{f.id("h")};
    auto [g, records] = generalizeComplexIndices(f.st, f.g(), cfg);
    REQUIRE(records.size() == 2);
    CHECK_FALSE(records[0].isHeterogeneous);
    CHECK(records[1].isHeterogeneous);
    Printer p(*f.env, g.lctx);
    const std::string Ht = p.hypName(records[0].placeholderId);
    const std::string Hu = p.hypName(records[1].placeholderId);
    CHECK(printExpr(*f.env, g.lctx, g.lctx.find(records[1].placeholderId)->type) == "Y " + Ht);
    CHECK(printExpr(*f.env, g.lctx, g.target) == Ht + " = succ n → " + Hu + " == y_of n → false");
    f.set(g);
    CHECK_NOTHROW(f.st.checkProof());
}

TEST_CASE("variable indices need no generalisation") {
    GoalFx f(kTcDecl, "∀ (α : Type) (r : α → α → Type) (a b : α), tc α r a b → tc α r a b");
    Goal before = f.intros({"α", "r", "a", "b", "h"});
    auto [g, records] = generalizeComplexIndices(f.st, f.g(), InductionConfig{f.id("h")});
    CHECK(records.empty());
    CHECK(g.lctx == before.lctx);
    CHECK(g.target == before.target);

    // a repeated variable index is generalised the second time
    GoalFx d(kTcDecl, "∀ (α : Type) (r : α → α → Type) (a : α), tc α r a a → false");
    d.intros({"α", "r", "a", "h"});
    auto [g2, rec2] = generalizeComplexIndices(d.st, d.g(), InductionConfig{d.id("h")});
    REQUIRE(rec2.size() == 1);
    CHECK(rec2[0].originalTerm == mkFVar(d.id("a")));
}

TEST_CASE("a rewrite that breaks typing is reported") {
    GoalFx f(kFinDecl, "∀ (n : nat) (v : fin (succ n)) (q : v = fin.zero n) (h : fin (succ n)), false");
    f.intros({"n", "v", "q", "h"});
    CHECK(kindOf([&] { generalizeComplexIndices(f.st, f.g(), InductionConfig{f.id("h")}); }) ==
          name(TacticErrorKind::RewriteMadeGoalIllTyped));
    // and the tactic leaves the state untouched
    TacticState before = f.st;
    CHECK(kindOf([&] { inductionTactic(f.st, f.g().meta, InductionConfig{f.id("h")}); }) ==
          name(TacticErrorKind::RewriteMadeGoalIllTyped));
    CHECK(f.st.goals() == before.goals());
}

TEST_CASE("generalizeHypotheses") {
    SUBCASE("injectivity: m and h are reverted") {
        GoalFx f("", "∀ (n m : nat), n + n = m + m → n = m");
        f.intros({"n", "m", "h"});
        InductionConfig cfg{f.id("n")};
        MajorPremiseInfo info = analyseMajorPremise(f.st, f.g(), cfg.major);
        Generalized r = generalizeHypotheses(f.st, f.g(), cfg, info);
        std::vector<std::string> reverted;
        for (const auto& h : r.reverted) reverted.push_back(h.name);
        CHECK(reverted == std::vector<std::string>{"m", "h"});
        CHECK(printExpr(*f.env, r.goal.lctx, r.goal.target) == "∀ m, n + n = m + m → n = m");
    }
    SUBCASE("commutativity: x stays") {
        GoalFx f("", "∀ (X : Type) (x : X) (n m : nat), n + m = m + n");
        f.intros({"X", "x", "n", "m"});
        InductionConfig cfg{f.id("n")};
        MajorPremiseInfo info = analyseMajorPremise(f.st, f.g(), cfg.major);
        Generalized r = generalizeHypotheses(f.st, f.g(), cfg, info);
        REQUIRE(r.reverted.size() == 1);
        CHECK(r.reverted[0].name == "m");
        CHECK(hypNames(f.st, r.goal) == std::vector<std::string>{"X", "x", "n"});
    }
    SUBCASE("a hypothesis about the major premise is reverted") {
        GoalFx f("", "∀ (P : nat → Type) (n : nat), n > 0 → P n");
        f.intros({"P", "n", "h"});
        InductionConfig cfg{f.id("n")};
        MajorPremiseInfo info = analyseMajorPremise(f.st, f.g(), cfg.major);
        Generalized r = generalizeHypotheses(f.st, f.g(), cfg, info);
        REQUIRE_FALSE(r.reverted.empty());
        CHECK(r.reverted.back().name == "h");
        CHECK(printExpr(*f.env, r.goal.lctx, r.goal.target).find("0 < n → P n") != std::string::npos);
    }
    SUBCASE("fixing everything reverts nothing") {
        GoalFx f("", "∀ (n m : nat), n + n = m + m → n = m");
        f.intros({"n", "m", "h"});
        InductionConfig cfg{f.id("n")};
        cfg.fixAll = true;
        MajorPremiseInfo info = analyseMajorPremise(f.st, f.g(), cfg.major);
        CHECK(generalizeHypotheses(f.st, f.g(), cfg, info).reverted.empty());
    }
    SUBCASE("fixing a hypothesis that the major premise needs") {
        GoalFx f(kTcDecl, "∀ (α : Type) (r : α → α → Type) (a b : α), tc α r a b → tc α r a b");
        f.intros({"α", "r", "a", "b", "h"});
        InductionConfig cfg{f.id("h")};
        cfg.fixed = {f.id("a")};
        MajorPremiseInfo info = analyseMajorPremise(f.st, f.g(), cfg.major);
        CHECK(kindOf([&] { generalizeHypotheses(f.st, f.g(), cfg, info); }) ==
              name(TacticErrorKind::FixedHypothesisConflict));
    }
}

TEST_CASE("IHs come out generalised where needed") {
    ProofSession inj = openLemma(readFile(corpusDir() / "injectivity.ind"), "double_inj",
                                 {"intros n m h", "induction' n"});
    const Goal& s = goalForCase(inj.state, "succ");
    CHECK(hypType(inj.state, s, "ih") == "∀ m, n + n = m + m → n = m");

    ProofSession fixed = openLemma(readFile(corpusDir() / "injectivity.ind"), "double_inj_fixed",
                                   {"intros n m h", "induction' n fixing *"});
    CHECK(hypType(fixed.state, goalForCase(fixed.state, "succ"), "ih") == "n + n = m + m → n = m");

    ProofSession comm = openLemma(readFile(corpusDir() / "commutativity.ind"), "add_comm",
                                  {"intros X x n m", "induction' n"});
    const Goal& c = goalForCase(comm.state, "succ");
    CHECK(hypType(comm.state, c, "ih") == "∀ m, n + m = m + n");
    CHECK(hypNames(comm.state, c) == std::vector<std::string>{"X", "x", "n", "m", "ih"});
}

TEST_CASE("the motive is read off the target") {
    GoalFx f(kTcDecl, "∀ (α : Type) (r : α → α → Type) (a b c : α), tc α r a b → tc α r b c → tc α r a c");
    f.intros({"α", "r", "a", "b", "c", "h₁", "h₂"});
    InductionConfig cfg{f.id("h₁")};
    MajorPremiseInfo info = analyseMajorPremise(f.st, f.g(), cfg.major);
    Generalized gen = generalizeHypotheses(f.st, f.g(), cfg, info);
    std::vector<CaseGoal> cases = applyRecursorWithMotive(f.st, gen.goal, cfg, gen.reverted, 0);
    REQUIRE(cases.size() == 2);
    CHECK(cases[0].ctor == "tc.base");
    CHECK(cases[1].ctor == "tc.step");
    CHECK(cases[1].ihs.size() == 1);
    // c occurs in the target, so the motive quantifies over it
    const Goal& step = cases[1].goal;
    CHECK(printExpr(*f.env, step.lctx, step.lctx.find(cases[1].ihs[0])->type).find("tc α r") != std::string::npos);
    for (const auto& h : step.lctx.hyps())
        if (std::find(cases[1].args.begin(), cases[1].args.end(), h.id) != cases[1].args.end() ||
            std::find(cases[1].ihs.begin(), cases[1].ihs.end(), h.id) != cases[1].ihs.end())
            CHECK(h.temporaryName);
    // the recursor's motive argument in the proof term
    auto assigned = f.st.mctx().assignment(gen.goal.meta);
    REQUIRE(assigned);
    Expr body = *assigned;
    for (const auto& h : gen.goal.lctx.hyps()) body = instantiate1(body.binderBody(), mkFVar(h.id));
    std::optional<Expr> motive;
    forEach(body, [&](const Expr& e, std::uint32_t) {
        if (e.isApp() && getAppFn(e).isConst() && getAppFn(e).constName() == "tc.rec" && getAppNumArgs(e) >= 3)
            motive = getAppArgs(e)[2];
        return !motive;
    });
    REQUIRE(motive);
    CHECK(*motive == elabIn(*f.env, gen.goal.lctx, "λ (x y : α) (_ : tc α r x y), ∀ (c : α), tc α r y c → tc α r x c"));
    std::vector<Goal> gs;
    for (const auto& c : cases) gs.push_back(c.goal);
    f.st.replaceGoal(f.g().meta, gs);
    CHECK_NOTHROW(f.st.checkProof());
}

TEST_CASE("simplifyIH on the while loop") {
    ProofSession ps = openLemma(bigStep(), "loop", {"intros", "induction' h"});
    CHECK(caseNames(ps.state) == std::vector<std::string>{"while_true", "while_false"});
    const Goal& wt = goalForCase(ps.state, "while_true");
    auto hyps = hypNames(ps.state, wt);
    // the IHs are the last two hypotheses
    REQUIRE(hyps.size() >= 2);
    CHECK(hypType(ps.state, wt, hyps[hyps.size() - 1]) == "false");
    CHECK(hypType(ps.state, wt, hyps[hyps.size() - 2]) == "∀ S', (S, s) = (while (λ _, true) S', s) → false");
    CHECK_NOTHROW(ps.state.checkProof());

    // no placeholders: nothing to simplify
    ProofSession tc = openLemma(readFile(corpusDir() / "tc_trans.ind"), "tc_trans", {"intros", "induction' h₁"});
    CHECK(hypType(tc.state, goalForCase(tc.state, "step"), "ih") == "∀ c, tc α r b c → tc α r y c");
}

TEST_CASE("end to end") {
    SUBCASE("fin 0") {
        for (const char* t : {"induction' h", "cases' h"}) {
            ProofSession ps = openLemma(readFile(corpusDir() / "fin0.ind"), "fin0_cases", {"intro h", t});
            CHECK(ps.state.goals().empty());
            CHECK_NOTHROW(ps.state.checkProof());
        }
    }
    SUBCASE("transitivity gives the expected step case") {
        ProofSession ps = openLemma(readFile(corpusDir() / "tc_trans.ind"), "tc_trans", {"intros", "induction' h₁"});
        CHECK(display(ps, "step") ==
              "α : Type\n"
              "r : α → α → Type\n"
              "a y b c : α\n"
              "hr : r a y\n"
              "h₁ : tc α r y b\n"
              "ih : ∀ c, tc α r b c → tc α r y c\n"
              "h₂ : tc α r b c\n"
              "⊢ tc α r a c\n");
    }
    SUBCASE("the infinite loop keeps only the while_true case interesting") {
        ProofSession ps = openLemma(bigStep(), "loop", {"intros", "induction' h"});
        CHECK(caseNames(ps.state) == std::vector<std::string>{"while_true", "while_false"});
        CHECK(display(ps, "while_true").find("ih_h_1 : false\n") != std::string::npos);
    }
    SUBCASE("nat") {
        GoalFx f("", "∀ (P : nat → Type) (n : nat), P n");
        f.intros({"P", "n"});
        TacticState st = f.st;
        inductionTactic(st, st.goal(0).meta, InductionConfig{f.id("n")});
        CHECK(caseNames(st) == std::vector<std::string>{"zero", "succ"});
        // P occurs in the target, so it is generalised too
        CHECK(show(st, st.goal(1)) == "n : ℕ\nP : ℕ → Type\nih : ∀ P, P n\n⊢ P (succ n)\n");
        CHECK_NOTHROW(st.checkProof());

        TacticState cs = f.st;
        casesTactic(cs, cs.goal(0).meta, InductionConfig{f.id("n")});
        CHECK(caseNames(cs) == std::vector<std::string>{"zero", "succ"});
        CHECK(show(cs, cs.goal(0)) == "P : ℕ → Type\n⊢ P 0\n");
        CHECK(show(cs, cs.goal(1)) == "n : ℕ\nP : ℕ → Type\n⊢ P (succ n)\n");
        CHECK_NOTHROW(cs.checkProof());
    }
}

TEST_CASE("no temporary names survive, and cases is induction without IHs") {
    std::size_t compared = 0;
    for (const auto& path : corpusFiles()) {
        const std::string text = readFile(path);
        for (const auto& item : parseFile(text).items) {
            const auto* d = std::get_if<DeclItem>(&item);
            if (!d || d->tactics.empty()) continue;
            ProofSession ps = openLemma(text, d->name);
            for (const auto& t : d->tactics) {
                if (ps.state.goals().empty()) break;
                const bool isInd = t.kind == TacticAst::Kind::Induction || t.kind == TacticAst::Kind::Cases;
                ProofSession before = ps;
                TacticOutcome o = runTactic(ps, t);
                if (!isInd) continue;
                INFO(d->name << ": " << printTactic(t));
                for (const Goal& g : ps.state.goals())
                    for (const auto& h : g.lctx.hyps()) CHECK_FALSE(h.temporaryName);

                TacticAst asInd = t;
                TacticAst asCases = t;
                asInd.kind = TacticAst::Kind::Induction;
                asCases.kind = TacticAst::Kind::Cases;
                asInd.cases.clear();
                asCases.cases.clear();
                ProofSession a = before;
                ProofSession b = before;
                TacticOutcome oa = runTactic(a, asInd);
                runTactic(b, asCases);
                REQUIRE(a.state.goals().size() == b.state.goals().size());
                std::set<FVarId> ihs;
                for (const auto& c : oa.induction->cases)
                    for (const auto& n : c.names)
                        if (n.rule == NamingRule::InductionHypothesis) ihs.insert(n.id);
                for (std::size_t i = 0; i < a.state.goals().size(); ++i) {
                    const Goal& ga = a.state.goal(i);
                    const Goal& gb = b.state.goal(i);
                    if (before.state.findGoal(ga.meta)) continue;
                    CHECK(ga.caseTag == gb.caseTag);
                    INFO(show(a.state, ga) << "---\n" << show(b.state, gb));
                    Printer pa(a.state.env(), ga.lctx);
                    std::vector<std::string> withoutIh;
                    for (const auto& h : ga.lctx.hyps())
                        if (!ihs.count(h.id)) withoutIh.push_back(pa.hypName(h.id));
                    CHECK(withoutIh == hypNames(b.state, gb));
                    CHECK(printExpr(a.state.env(), ga.lctx, ga.target) == printExpr(b.state.env(), gb.lctx, gb.target));
                    ++compared;
                }
            }
        }
    }
    CHECK(compared > 5);
}

}  // TEST_SUITE
