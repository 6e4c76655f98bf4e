/*
Copyright (c) 2026 The indtac Authors. All rights reserved.
Released under Apache 2.0 license as described in the file LICENSE.
*/
#include "indtac/qnify.hpp"

#include "indtac/errors.hpp"
#include "indtac/inductive.hpp"

namespace indtac {

std::string toString(const RuleFired& r) {
    using K = RuleFired::Kind;
    switch (r.kind) {
    case K::Substitution: return "substitution";
    case K::Injection: return "injection(" + std::to_string(r.childCount) + ")";
    case K::Conflict: return "conflict";
    case K::Deletion: return "deletion";
    case K::Cycle: return "cycle";
    case K::Homogenisation: return "homogenisation";
    case K::Stuck: return "stuck";
    }
    return "?";
}

namespace {

struct Sides {
    Expr lhsType, lhs, rhsType, rhs;
    bool heterogeneous = false;
};

std::optional<Sides> equationSides(const Expr& type) {
    if (auto v = matchEq(type)) return Sides{v->type, v->lhs, v->type, v->rhs, false};
    if (auto v = matchHeq(type)) return Sides{v->lhsType, v->lhs, v->rhsType, v->rhs, true};
    return std::nullopt;
}

std::string subscript(std::size_t n) {
    static const char* digits[] = {"₀", "₁", "₂", "₃", "₄", "₅", "₆", "₇", "₈", "₉"};
    std::string s;
    for (char c : std::to_string(n)) s += digits[c - '0'];
    return s;
}

/// Constructor application at the head after reducible unfolding, if any.
std::optional<Expr> asCtorApp(TypeChecker& tc, const Expr& e) {
    Expr w = tc.whnf(e, Transparency::Reducible);
    const Expr& f = getAppFn(w);
    if (!f.isConst()) return std::nullopt;
    auto c = tc.env().findConstructor(f.constName());
    if (!c) return std::nullopt;
    const InductiveDecl& d = *c->first;
    if (getAppNumArgs(w) != d.params.size() + d.constructors[c->second].args.size()) return std::nullopt;
    return w;
}

bool mentionedElsewhere(const Goal& g, FVarId h) {
    for (const auto& x : g.lctx.hyps())
        if (x.id != h && occursFVar(x.type, h)) return true;
    return occursFVar(g.target, h);
}

std::optional<Goal> tryDeletion(TacticState& st, const Goal& g, FVarId h, const Sides& s) {
    TypeChecker tc = st.checker(g);
    if (s.heterogeneous && !tc.isDefEq(s.lhsType, s.rhsType, Transparency::All)) return std::nullopt;
    if (!tc.isDefEq(s.lhs, s.rhs, Transparency::All)) return std::nullopt;
    if (mentionedElsewhere(g, h)) return std::nullopt;
    return clear(st, g, h);
}

std::optional<Goal> trySubstitution(TacticState& st, const Goal& g, FVarId h, const Sides& s) {
    if (s.heterogeneous) return std::nullopt;
    auto attempt = [&](const Expr& x, const Expr& t, bool rhs) -> std::optional<Goal> {
        if (!x.isFVar() || !g.lctx.find(x.fvarId()) || occursFVar(t, x.fvarId())) return std::nullopt;
        try {
            return substUsing(st, g, h, rhs);
        } catch (const TacticError& e) {
            if (e.kind() == TacticErrorKind::DependencyError) return std::nullopt;
            throw;
        }
    };
    if (auto r = attempt(s.rhs, s.lhs, true)) return r;
    return attempt(s.lhs, s.rhs, false);
}

}  // namespace

Expr buildCycleProof(TacticState& st, const Goal& g, FVarId eqId) {
    const Hypothesis* hyp = g.lctx.find(eqId);
    if (!hyp) throw TacticError(TacticErrorKind::UnknownHypothesis, "unknown hypothesis %" + std::to_string(eqId.value));
    auto v = matchEq(hyp->type);
    if (!v) throw TacticError(TacticErrorKind::Other, hyp->name + " is not a homogeneous equation");
    TypeChecker tc = st.checker(g);
    const Environment& env = st.env();

    const bool xOnLeft = v->lhs.isFVar() && occursFVar(v->rhs, v->lhs.fvarId());
    const bool xOnRight = !xOnLeft && v->rhs.isFVar() && occursFVar(v->lhs, v->rhs.fvarId());
    if (!xOnLeft && !xOnRight) throw TacticError(TacticErrorKind::Other, "no variable occurs in the other side");
    const Expr x = xOnLeft ? v->lhs : v->rhs;
    const Expr t = xOnLeft ? v->rhs : v->lhs;
    const FVarId xid = x.fvarId();

    // (constructor application, argument position) from the root down to x
    std::vector<std::pair<Expr, std::size_t>> spine;
    std::function<bool(const Expr&)> descend = [&](const Expr& u) -> bool {
        if (u == x) return true;
        auto w = asCtorApp(tc, u);
        if (!w) return false;
        auto c = env.findConstructor(getAppFn(*w).constName());
        const InductiveDecl& d = *c->first;
        const Constructor& ctor = d.constructors[c->second];
        std::vector<Expr> args = getAppArgs(*w);
        for (std::size_t k = 0; k < ctor.args.size(); ++k) {
            const Expr& a = args[d.params.size() + k];
            if (!ctor.args[k].recursive || !occursFVar(a, xid)) continue;
            spine.emplace_back(*w, k);
            if (descend(a)) return true;
            spine.pop_back();
        }
        return false;
    };
    if (!descend(t) || spine.empty())
        throw TacticError(TacticErrorKind::SpineNotRecursive, "the variable does not occur along recursive arguments");

    auto ltSides = [&](const Expr& proof) {
        std::vector<Expr> a = getAppArgs(tc.infer(proof));
        return std::make_pair(a.at(0), a.at(1));
    };
    auto lemma = [&](std::size_t i) {
        const auto& [u, k] = spine[i];
        return mkApp(mkConst(sizeofLtName(getAppFn(u).constName(), k)), getAppArgs(u));
    };
    Expr acc = lemma(spine.size() - 1);
    auto [sx, upper] = ltSides(acc);
    for (std::size_t i = spine.size() - 1; i-- > 0;) {
        Expr l = lemma(i);
        Expr next = ltSides(l).second;
        acc = mkApp(mkConst(prelude::kLtTrans), {sx, upper, next, acc, l});
        upper = next;
    }

    const Expr nat = mkConst(prelude::kNat);
    Expr A = v->type;
    Expr Aw = tc.whnf(A, Transparency::All);
    Expr f = mkApp(mkConst(sizeofName(getAppFn(Aw).constName())), getAppArgs(Aw));
    Expr xEqT = xOnLeft ? mkFVar(eqId) : mkApp(mkConst(prelude::kEqSymm), {A, v->lhs, v->rhs, mkFVar(eqId)});
    Expr fx = mkApp(f, x);
    Expr ft = mkApp(f, t);
    Expr sizes = mkApp(mkConst(prelude::kCongrArg), {A, nat, f, x, t, xEqT});
    Expr motive = mkLambda("b", nat,
                           mkLambda("h", mkEq(nat, fx, mkBVar(0)),
                                    mkArrow(mkApp(mkConst(prelude::kLt), {fx, mkBVar(1)}), mkConst(prelude::kFalse))));
    Expr irrefl = mkApp(mkConst(prelude::kLtIrrefl), {fx});
    Expr refute = mkApp(mkConst(prelude::kEqRec), {nat, fx, motive, irrefl, ft, sizes});
    return mkApp(refute, {acc});
}

QnifyStepResult qnifyStep(TacticState& st, const Goal& g, FVarId h) {
    using K = RuleFired::Kind;
    const Hypothesis* hyp = g.lctx.find(h);
    if (!hyp) throw TacticError(TacticErrorKind::UnknownHypothesis, "unknown hypothesis %" + std::to_string(h.value));
    auto s = equationSides(hyp->type);
    if (!s) return {g, {K::Stuck}, {}};
    const Hypothesis eqHyp = *hyp;

    if (auto r = tryDeletion(st, g, h, *s)) return {std::move(*r), {K::Deletion}, {}};
    if (auto r = trySubstitution(st, g, h, *s)) return {std::move(*r), {K::Substitution}, {}};

    TypeChecker tc = st.checker(g);
    const Environment& env = st.env();
    if (!s->heterogeneous) {
        auto l = asCtorApp(tc, s->lhs);
        auto r = asCtorApp(tc, s->rhs);
        if (l && r) {
            const Name lc = getAppFn(*l).constName();
            const Name rc = getAppFn(*r).constName();
            auto info = env.findConstructor(lc);
            const InductiveDecl& d = *info->first;
            if (lc == rc && env.contains(injArrowName(lc)) && !mentionedElsewhere(g, h)) {
                std::vector<Expr> la = getAppArgs(*l);
                std::vector<Expr> ra = getAppArgs(*r);
                const std::size_t np = d.params.size();
                const std::size_t arity = la.size() - np;
                std::vector<Expr> args(la.begin(), la.begin() + static_cast<std::ptrdiff_t>(np));
                args.push_back(g.target);
                args.insert(args.end(), la.begin() + static_cast<std::ptrdiff_t>(np), la.end());
                args.insert(args.end(), ra.begin() + static_cast<std::ptrdiff_t>(np), ra.end());
                args.push_back(mkFVar(h));
                Expr inj = mkApp(mkConst(injArrowName(lc)), args);
                Expr injType = tc.whnf(tc.infer(inj), Transparency::All);
                LocalContext lctx = g.lctx;
                lctx.erase(h);
                Goal cont = st.newGoal(std::move(lctx), injType.binderType(), g.caseTag);
                st.assign(g, mkApp(inj, TacticState::goalApp(cont)));
                std::vector<FVarId> children;
                for (std::size_t i = 0; i < arity; ++i) {
                    cont = intro(st, cont, eqHyp.name + subscript(i + 1), std::nullopt, eqHyp.temporaryName);
                    children.push_back(cont.lctx.hyps().back().id);
                }
                return {std::move(cont), {K::Injection, arity}, std::move(children)};
            }
            if (lc != rc) {
                Expr Aw = tc.whnf(s->lhsType, Transparency::All);
                std::vector<Expr> tyArgs = getAppArgs(Aw);
                std::vector<Expr> args(tyArgs.begin(), tyArgs.begin() + static_cast<std::ptrdiff_t>(d.params.size()));
                args.push_back(g.target);
                args.insert(args.end(), tyArgs.begin() + static_cast<std::ptrdiff_t>(d.params.size()), tyArgs.end());
                args.push_back(s->lhs);
                args.push_back(s->rhs);
                args.push_back(mkFVar(h));
                exact(st, g, mkApp(mkConst(noConfusionName(d.name)), args));
                return {std::nullopt, {K::Conflict}, {}};
            }
        }
        try {
            Expr bottom = buildCycleProof(st, g, h);
            Expr motive = mkLambda("_", mkConst(prelude::kFalse), liftLooseBVars(g.target, 1));
            exact(st, g, mkApp(mkConst(prelude::kFalseRec), {motive, bottom}));
            return {std::nullopt, {K::Cycle}, {}};
        } catch (const TacticError& e) {
            if (e.kind() != TacticErrorKind::SpineNotRecursive && e.kind() != TacticErrorKind::Other) throw;
        }
    } else if (tc.isDefEq(s->lhsType, s->rhsType, Transparency::All)) {
        Expr homogeneous = mkEq(s->lhsType, s->lhs, s->rhs);
        Expr value = mkApp(mkConst(prelude::kEqOfHeq), {s->lhsType, s->lhs, s->rhs, mkFVar(h)});
        return {replaceHypType(st, g, h, homogeneous, value), {K::Homogenisation}, {h}};
    }
    return {g, {K::Stuck}, {}};
}

QnifyResult qnifyAll(TacticState& st, const Goal& g, std::vector<FVarId> queue) {
    QnifyResult out{g, {}};
    while (!queue.empty()) {
        FVarId h = queue.front();
        queue.erase(queue.begin());
        if (!out.goal->lctx.find(h)) continue;
        QnifyStepResult r = qnifyStep(st, *out.goal, h);
        out.trace.push_back(r.rule);
        out.goal = std::move(r.goal);
        if (!out.goal) return out;
        queue.insert(queue.begin(), r.children.begin(), r.children.end());
    }
    return out;
}

std::pair<std::size_t, std::size_t> qnifyMeasure(const Environment& env, const Goal& g,
                                                 const std::vector<FVarId>& queue) {
    auto isCtor = [&](const Name& n) { return env.isConstructor(n); };
    std::size_t heads = 0;
    std::size_t live = 0;
    for (FVarId id : queue) {
        const Hypothesis* h = g.lctx.find(id);
        if (!h) continue;
        ++live;
        if (auto s = equationSides(h->type)) {
            heads += countHeads(s->lhs, isCtor) + countHeads(s->rhs, isCtor);
            if (s->heterogeneous) ++live;
        }
    }
    return {heads, live};
}

}  // namespace indtac
