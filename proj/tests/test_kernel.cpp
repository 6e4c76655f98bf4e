/*
Copyright (c) 2026 The indtac Authors. All rights reserved.
Released under Apache 2.0 license as described in the file LICENSE.
*/
#include <doctest.h>

#include "indtac/declare.hpp"
#include "indtac/inductive.hpp"
#include "support.hpp"

using namespace indtac;
using namespace indtac::test;

namespace {

std::shared_ptr<Environment> envOf(const std::string& text) { return runScript(text).env; }

struct Opened {
    LocalContext lctx;
    std::uint64_t next = 1;
    std::vector<Expr> open(const Environment& env, Expr& t, std::size_t n) {
        std::vector<Expr> out;
        for (std::size_t i = 0; i < n; ++i) {
            if (!t.isPi()) t = TypeChecker(env, lctx).whnf(t, Transparency::All);
            REQUIRE(t.isPi());
            FVarId id{next++};
            lctx.push(Hypothesis{id, t.binderName().empty() ? "x" : t.binderName(), t.binderType(), false});
            out.push_back(mkFVar(id));
            t = instantiate1(t.binderBody(), out.back());
        }
        return out;
    }
};

// rec ps M minors js (C ps args) ~> minor_C args ihs, for every constructor
void checkIota(const Environment& env, const InductiveDecl& d) {
    const Declaration& rec = env.get(recursorName(d.name));
    Opened o;
    Expr rt = rec.type;
    std::vector<Expr> ps = o.open(env, rt, d.params.size());
    std::vector<Expr> motive = o.open(env, rt, 1);
    std::vector<Expr> minors = o.open(env, rt, d.constructors.size());
    Expr head = mkApp(mkApp(mkApp(mkConst(rec.name), ps), motive), minors);
    for (std::size_t k = 0; k < d.constructors.size(); ++k) {
        const Constructor& c = d.constructors[k];
        Expr ct = constructorType(d, k);
        for (const Expr& p : ps) ct = instantiate1(ct.binderBody(), p);
        std::vector<Expr> args = o.open(env, ct, c.args.size());
        std::vector<Expr> js = getAppArgs(ct);
        js.erase(js.begin(), js.begin() + static_cast<std::ptrdiff_t>(d.params.size()));
        Expr major = mkApp(mkApp(mkConst(c.name), ps), args);
        Expr term = mkApp(mkApp(head, js), major);
        Expr expected = mkApp(minors[k], args);
        for (std::size_t i = 0; i < c.args.size(); ++i) {
            if (!c.args[i].recursive) continue;
            std::vector<Expr> ai = getAppArgs(o.lctx.find(args[i].fvarId())->type);
            ai.erase(ai.begin(), ai.begin() + static_cast<std::ptrdiff_t>(d.params.size()));
            expected = mkApp(expected, mkApp(mkApp(head, ai), args[i]));
        }
        TypeChecker tc(env, o.lctx);
        INFO(c.name);
        CHECK(tc.whnf(term, Transparency::All) == expected);
        CHECK_NOTHROW(tc.infer(term));
    }
}

}  // namespace

TEST_SUITE("kernel") {

TEST_CASE("whnf: beta, iota, delta") {
    auto env = envOf("");
    LocalContext lctx;
    TypeChecker tc(*env, lctx);
    CHECK(tc.whnf(elabIn(*env, lctx, "(λ (x : nat), x) zero"), Transparency::All) == mkConst("nat.zero"));

    LocalContext ctx;
    ctx.push(Hypothesis{FVarId{1}, "M", elabIn(*env, ctx, "nat → Type"), false});
    ctx.push(Hypothesis{FVarId{2}, "z", elabIn(*env, ctx, "M zero"), false});
    ctx.push(Hypothesis{FVarId{3}, "s", elabIn(*env, ctx, "∀ (n : nat), M n → M (succ n)"), false});
    ctx.push(Hypothesis{FVarId{4}, "n", mkConst("nat"), false});
    TypeChecker tc2(*env, ctx);
    Expr e = elabIn(*env, ctx, "nat.rec M z s (succ n)");
    CHECK(tc2.whnf(e, Transparency::All) == elabIn(*env, ctx, "s n (nat.rec M z s n)"));

    // nat.add has a body but is not reducible
    Expr sum = elabIn(*env, ctx, "0 + n");
    CHECK(tc2.whnf(sum, Transparency::Reducible) == sum);
    CHECK(tc2.whnf(sum, Transparency::All) == mkFVar(FVarId{4}));
}

TEST_CASE("isDefEq") {
    auto env = envOf(kStmtDecls);
    LocalContext ctx;
    ctx.push(Hypothesis{FVarId{1}, "s", mkConst("state"), false});
    ctx.push(Hypothesis{FVarId{2}, "n", mkConst("nat"), false});
    ctx.push(Hypothesis{FVarId{3}, "b", elabIn(*env, ctx, "state → Type"), false});
    ctx.push(Hypothesis{FVarId{4}, "S", mkConst("stmt"), false});
    TypeChecker tc(*env, ctx);
    CHECK(tc.isDefEq(elabIn(*env, ctx, "(s, s)"), elabIn(*env, ctx, "(s, s)"), Transparency::Reducible));
    CHECK(tc.isDefEq(elabIn(*env, ctx, "0 + n"), elabIn(*env, ctx, "n"), Transparency::All));
    CHECK_FALSE(tc.isDefEq(elabIn(*env, ctx, "0 + n"), elabIn(*env, ctx, "n"), Transparency::Reducible));
    CHECK_FALSE(tc.isDefEq(elabIn(*env, ctx, "skip"), elabIn(*env, ctx, "while b S"), Transparency::All));
}

TEST_CASE("inferType") {
    auto env = envOf(kTcDecl);
    LocalContext lctx;
    TypeChecker tc(*env, lctx);
    Expr base = tc.infer(mkConst("tc.base"));
    CHECK(base == elabIn(*env, lctx, "∀ (α : Type) (r : α → α → Type) (x y : α), r x y → tc α r x y"));
    CHECK(tc.infer(mkSort()) == mkSort());
    CHECK_THROWS_AS(tc.infer(mkApp(mkConst("nat.zero"), mkConst("nat.zero"))), TypeError);
}

TEST_CASE("validateInductive") {
    CHECK_NOTHROW(envOf(kTcDecl));
    CHECK_NOTHROW(envOf(kStmtDecls));
    CHECK_THROWS_AS(envOf("inductive bad : Type\n| mk : (bad → nat) → bad"), PositivityError);
    CHECK_THROWS_AS(envOf("inductive rose : Type\n| node : list rose → rose"), NestedOrMutualError);
    CHECK_THROWS_AS(envOf("inductive w (A : Type) : Type\n| mk : w nat"), ParameterMismatchError);
}

TEST_CASE("generateRecursor: tc matches its expected type up to binder hints") {
    auto env = envOf(kTcDecl);
    LocalContext lctx;
    Expr expected = elabIn(*env, lctx, R"(
      ∀ (α : Type) (r : α → α → Type)
        (M : ∀ (x y : α), tc α r x y → Type)
        (Base : ∀ (x y : α) (hr : r x y), M x y (tc.base α r x y hr))
        (Step : ∀ (x y z : α) (hr : r x y) (ht : tc α r y z), M y z ht → M x z (tc.step α r x y z hr ht))
        (x y : α) (e : tc α r x y), M x y e)");
    CHECK(env->get("tc.rec").type == expected);
}

TEST_CASE("generateRecursor: nat and false") {
    auto env = envOf("");
    LocalContext lctx;
    CHECK(env->get("nat.rec").type ==
          elabIn(*env, lctx, "∀ (M : nat → Type) (z : M zero) (s : ∀ (n : nat), M n → M (succ n)) (n : nat), M n"));
    CHECK(env->get("false.rec").type == elabIn(*env, lctx, "∀ (M : false → Type) (e : false), M e"));
}

TEST_CASE("iota rules for every prelude and corpus inductive") {
    std::vector<std::shared_ptr<Environment>> envs{envOf("")};
    for (const auto& f : corpusFiles()) envs.push_back(runScript(readFile(f)).env);
    std::size_t checked = 0;
    for (const auto& env : envs)
        for (const auto& n : env->order())
            if (const InductiveDecl* d = env->findInductive(n)) {
                checkIota(*env, *d);
                ++checked;
            }
    CHECK(checked > 10);
}

TEST_CASE("sizeof") {
    auto env = envOf("");
    LocalContext lctx;
    TypeChecker tc(*env, lctx);
    CHECK(tc.isDefEq(elabIn(*env, lctx, "nat.sizeof (succ (succ zero))"), mkNatLit(3), Transparency::All));
    CHECK(tc.isDefEq(elabIn(*env, lctx, "nat.sizeof zero"), mkNatLit(1), Transparency::All));
    CHECK(env->get("nat.succ.sizeof_lt_0").type ==
          elabIn(*env, lctx, "∀ (n : nat), nat.sizeof n < nat.sizeof (succ n)"));
}

TEST_CASE("every generated lemma and definition kernel-checks") {
    std::vector<std::shared_ptr<Environment>> envs{envOf("")};
    for (const auto& f : corpusFiles()) envs.push_back(runScript(readFile(f)).env);
    for (const auto& env : envs) {
        LocalContext lctx;
        TypeChecker tc(*env, lctx);
        for (const auto& n : env->order()) {
            const Declaration& d = env->get(n);
            INFO(n);
            CHECK_NOTHROW(tc.ensureSort(tc.infer(d.type)));
            if (d.value) CHECK_NOTHROW(tc.check(*d.value, d.type));
        }
    }
}

TEST_CASE("whnf idempotence and subject reduction on corpus definitions and proofs") {
    for (const auto& f : corpusFiles()) {
        ScriptResult r = runScript(readFile(f));
        const Environment& env = *r.env;
        LocalContext lctx;
        TypeChecker tc(env, lctx);
        std::vector<Expr> terms;
        for (const auto& n : env.order())
            if (const auto& d = env.get(n); d.value && d.kind == DeclKind::Definition) terms.push_back(*d.value);
        for (const Expr& e : terms) {
            for (Transparency t : {Transparency::Reducible, Transparency::All}) {
                Expr w = tc.whnf(e, t);
                CHECK(tc.whnf(w, t) == w);
            }
            CHECK(tc.isDefEq(tc.infer(e), tc.infer(tc.whnf(e, Transparency::All)), Transparency::All));
        }
    }
}

}  // TEST_SUITE
