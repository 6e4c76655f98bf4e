/*
Copyright (c) 2026 The indtac Authors. All rights reserved.
Released under Apache 2.0 license as described in the file LICENSE.
*/
#include "indtac/proofstate.hpp"

#include <algorithm>

#include "indtac/errors.hpp"
#include "indtac/inductive.hpp"
#include "indtac/printer.hpp"
#include "indtac/unify.hpp"

namespace indtac {

bool operator==(const Goal& a, const Goal& b) {
    return a.meta == b.meta && a.lctx == b.lctx && a.target == b.target && a.caseTag == b.caseTag;
}

namespace {

std::vector<FVarId> inContextOrder(const LocalContext& lctx, const std::vector<FVarId>& ids) {
    std::vector<FVarId> out;
    for (const auto& h : lctx.hyps())
        if (std::find(ids.begin(), ids.end(), h.id) != ids.end()) out.push_back(h.id);
    return out;
}

// A partial unifier result is only trusted when the rigid skeletons agree.
bool sameShape(TypeChecker& tc, const Expr& a, const Expr& b) {
    Expr x = tc.whnf(a, Transparency::All);
    Expr y = tc.whnf(b, Transparency::All);
    const Expr& fx = getAppFn(x);
    const Expr& fy = getAppFn(y);
    if (fx.isMeta() || fy.isMeta()) return true;
    if (x.isPi() || y.isPi()) return x.isPi() && y.isPi();
    if (fx.isConst() && fy.isConst())
        return fx.constName() == fy.constName() && getAppNumArgs(x) == getAppNumArgs(y);
    if (fx.isFVar() && fy.isFVar()) return fx.fvarId() == fy.fvarId() && getAppNumArgs(x) == getAppNumArgs(y);
    return x.kind() == y.kind();
}

}  // namespace

Expr pisOver(const LocalContext& lctx, const std::vector<FVarId>& ids, const Expr& body) {
    Expr r = body;
    std::vector<FVarId> ordered = inContextOrder(lctx, ids);
    for (std::size_t i = ordered.size(); i-- > 0;) {
        const Hypothesis* h = lctx.find(ordered[i]);
        r = mkPi(h->name, h->type, abstract1(r, h->id));
    }
    return r;
}

Expr lambdasOver(const LocalContext& lctx, const std::vector<FVarId>& ids, const Expr& body) {
    Expr r = body;
    std::vector<FVarId> ordered = inContextOrder(lctx, ids);
    for (std::size_t i = ordered.size(); i-- > 0;) {
        const Hypothesis* h = lctx.find(ordered[i]);
        r = mkLambda(h->name, h->type, abstract1(r, h->id));
    }
    return r;
}

Expr pisOver(const LocalContext& lctx, const Expr& body) { return pisOver(lctx, lctx.ids(), body); }
Expr lambdasOver(const LocalContext& lctx, const Expr& body) { return lambdasOver(lctx, lctx.ids(), body); }

std::vector<FVarId> dependencyClosure(const LocalContext& lctx, const std::vector<FVarId>& ids) {
    std::set<FVarId> in(ids.begin(), ids.end());
    std::vector<FVarId> out;
    for (const auto& h : lctx.hyps()) {
        bool dep = in.count(h.id) > 0;
        if (!dep)
            for (FVarId x : collectFVars(h.type))
                if (in.count(x)) {
                    dep = true;
                    break;
                }
        if (dep) {
            in.insert(h.id);
            out.push_back(h.id);
        }
    }
    return out;
}

std::set<FVarId> usedHypotheses(const LocalContext& lctx, const Expr& e) {
    std::set<FVarId> out;
    std::vector<FVarId> todo = collectFVars(e);
    while (!todo.empty()) {
        FVarId id = todo.back();
        todo.pop_back();
        if (!out.insert(id).second) continue;
        if (const Hypothesis* h = lctx.find(id))
            for (FVarId x : collectFVars(h->type)) todo.push_back(x);
    }
    return out;
}

TacticState::TacticState(std::shared_ptr<const Environment> env, Expr statement)
    : env_(std::move(env)), statement_(std::move(statement)) {
    Goal g = newGoal(LocalContext{}, statement_);
    root_ = g.meta;
    goals_.push_back(std::move(g));
}

Goal TacticState::newGoal(LocalContext lctx, Expr target, std::optional<Name> tag) {
    MetaId m = freshMetaId();
    mctx_.declare(m, pisOver(lctx, target));
    return Goal{m, std::move(lctx), std::move(target), std::move(tag)};
}

Expr TacticState::goalApp(const Goal& g) { return mkApp(mkMeta(g.meta), g.lctx.fvars()); }

void TacticState::assign(const Goal& g, const Expr& proofInContext) {
    mctx_.assign(g.meta, lambdasOver(g.lctx, proofInContext));
}

std::optional<std::size_t> TacticState::findGoal(MetaId m) const {
    for (std::size_t i = 0; i < goals_.size(); ++i)
        if (goals_[i].meta == m) return i;
    return std::nullopt;
}

void TacticState::replaceGoal(MetaId m, std::vector<Goal> gs) {
    auto i = findGoal(m);
    if (!i) throw TacticError(TacticErrorKind::NoSuchGoal, "no goal ?" + std::to_string(m.value));
    goals_.erase(goals_.begin() + static_cast<std::ptrdiff_t>(*i));
    goals_.insert(goals_.begin() + static_cast<std::ptrdiff_t>(*i), std::make_move_iterator(gs.begin()),
                  std::make_move_iterator(gs.end()));
}

Expr TacticState::assembledProof() const { return betaNormalize(mctx_.instantiate(mkMeta(root_))); }

void TacticState::checkProof() const {
    Expr proof = assembledProof();
    LocalContext holes;
    std::map<MetaId, Expr> asFVar;
    std::uint64_t next = 1ULL << 59;
    for (MetaId m : collectMetas(proof)) {
        const auto* entry = mctx_.find(m);
        if (!entry || !findGoal(m))
            throw TypeError("proof mentions a metavariable that is not an open goal: ?" + std::to_string(m.value));
        FVarId id{next++};
        holes.push(Hypothesis{id, "goal", entry->type, false});
        asFVar[m] = mkFVar(id);
    }
    Expr closed = instantiateMetas(proof, asFVar);
    TypeChecker tc(*env_, holes);
    tc.check(closed, statement_);
}

Goal intro(TacticState& st, const Goal& g, std::optional<std::string> name, std::optional<FVarId> reuseId,
           bool temporary) {
    Expr t = g.target;
    if (!t.isPi()) {
        TypeChecker tc = st.checker(g);
        t = tc.whnf(t, Transparency::All);
    }
    if (!t.isPi()) throw TacticError(TacticErrorKind::NotAPi, "target is not a function type");
    FVarId id = reuseId ? *reuseId : st.freshId();
    std::string n = name ? *name : (t.binderName().empty() ? "a" : t.binderName());
    LocalContext lctx = g.lctx;
    lctx.push(Hypothesis{id, n, t.binderType(), temporary});
    Goal ng = st.newGoal(std::move(lctx), instantiate1(t.binderBody(), mkFVar(id)), g.caseTag);
    st.assign(g, mkLambda(n, t.binderType(), abstract1(TacticState::goalApp(ng), id)));
    return ng;
}

std::pair<Goal, std::size_t> revert(TacticState& st, const Goal& g, const std::vector<FVarId>& ids) {
    for (FVarId id : ids)
        if (!g.lctx.find(id))
            throw TacticError(TacticErrorKind::UnknownHypothesis, "unknown hypothesis %" + std::to_string(id.value));
    std::vector<FVarId> moved = dependencyClosure(g.lctx, ids);
    LocalContext lctx = g.lctx;
    for (FVarId id : moved) lctx.erase(id);
    Goal ng = st.newGoal(std::move(lctx), pisOver(g.lctx, moved, g.target), g.caseTag);
    std::vector<Expr> args;
    for (FVarId id : moved) args.push_back(mkFVar(id));
    st.assign(g, mkApp(TacticState::goalApp(ng), args));
    return {ng, moved.size()};
}

namespace {

Goal assertAt(TacticState& st, const Goal& g, std::size_t pos, const std::string& name, const Expr& type,
              const Expr& value) {
    TypeChecker tc = st.checker(g);
    try {
        tc.ensureSort(tc.infer(type));
        tc.check(value, type);
    } catch (const KernelError& e) {
        throw TacticError(TacticErrorKind::TypeError, e.what());
    }
    for (FVarId x : collectFVars(type)) {
        auto i = g.lctx.indexOf(x);
        if (!i || *i >= pos)
            throw TacticError(TacticErrorKind::DependencyError, "type mentions a later hypothesis");
    }
    FVarId id = st.freshId();
    LocalContext lctx = g.lctx;
    lctx.insert(pos, Hypothesis{id, name, type, false});
    Goal ng = st.newGoal(std::move(lctx), g.target, g.caseTag);
    st.assign(g, mkApp(mkLambda(name, type, abstract1(TacticState::goalApp(ng), id)), value));
    return ng;
}

}  // namespace

Goal assertAfter(TacticState& st, const Goal& g, FVarId anchor, const std::string& name, const Expr& type,
                 const Expr& value) {
    auto i = g.lctx.indexOf(anchor);
    if (!i)
        throw TacticError(TacticErrorKind::UnknownHypothesis, "unknown hypothesis %" + std::to_string(anchor.value));
    return assertAt(st, g, *i + 1, name, type, value);
}

Goal assertBefore(TacticState& st, const Goal& g, FVarId anchor, const std::string& name, const Expr& type,
                  const Expr& value) {
    auto i = g.lctx.indexOf(anchor);
    if (!i)
        throw TacticError(TacticErrorKind::UnknownHypothesis, "unknown hypothesis %" + std::to_string(anchor.value));
    return assertAt(st, g, *i, name, type, value);
}

void exact(TacticState& st, const Goal& g, const Expr& e) {
    TypeChecker tc = st.checker(g);
    try {
        tc.check(e, g.target);
    } catch (const KernelError& err) {
        throw TacticError(TacticErrorKind::TypeError, err.what());
    }
    st.assign(g, e);
}

std::vector<Goal> applyExpr(TacticState& st, const Goal& g, const Expr& e) {
    TypeChecker tc = st.checker(g);
    Expr type;
    try {
        type = tc.infer(e);
    } catch (const KernelError& err) {
        throw TacticError(TacticErrorKind::TypeError, err.what());
    }
    // try 0, 1, 2, ... arguments until the conclusion matches the target
    std::vector<MetaId> metas;
    std::vector<Expr> metaTypes;
    Expr cur = type;
    while (true) {
        std::set<MetaId> ms(metas.begin(), metas.end());
        UnifyResult r = unify(tc, g.target, cur, ms, Transparency::All);
        if (r.status != UnifyStatus::Failure) {
            Expr inst = instantiateMetas(cur, r.assignment);
            bool matched = inst.hasMeta() ? r.status == UnifyStatus::Solved || sameShape(tc, inst, g.target)
                                          : tc.isDefEq(inst, g.target, Transparency::All);
            if (matched) {
                std::map<MetaId, Expr> sigma = r.assignment;
                std::vector<Goal> out;
                for (std::size_t i = 0; i < metas.size(); ++i) {
                    if (sigma.count(metas[i])) continue;
                    Goal ng = st.newGoal(g.lctx, betaNormalize(instantiateMetas(metaTypes[i], sigma)), g.caseTag);
                    sigma[metas[i]] = TacticState::goalApp(ng);
                    out.push_back(std::move(ng));
                }
                std::vector<Expr> args;
                for (MetaId m : metas) args.push_back(instantiateMetas(mkMeta(m), sigma));
                Expr proof = mkApp(e, args);
                TypeChecker tc2(st.env(), g.lctx, &st.mctx());
                if (!tc2.isDefEq(tc2.infer(proof), g.target, Transparency::All))
                    throw TacticError(TacticErrorKind::UnificationFailure, "cannot apply: conclusion mismatch");
                st.assign(g, proof);
                return out;
            }
        }
        Expr w = cur.isPi() ? cur : tc.whnf(cur, Transparency::All);
        if (!w.isPi()) break;
        MetaId m = st.freshMetaId();
        st.mctx().declare(m, w.binderType());
        metas.push_back(m);
        metaTypes.push_back(w.binderType());
        cur = instantiate1(w.binderBody(), mkMeta(m));
    }
    throw TacticError(TacticErrorKind::UnificationFailure, "cannot apply: conclusion does not match the target");
}

Goal clear(TacticState& st, const Goal& g, FVarId h) {
    if (!g.lctx.find(h))
        throw TacticError(TacticErrorKind::UnknownHypothesis, "unknown hypothesis %" + std::to_string(h.value));
    for (const auto& x : g.lctx.hyps())
        if (x.id != h && occursFVar(x.type, h))
            throw TacticError(TacticErrorKind::DependencyError, "hypothesis " + x.name + " depends on it");
    if (occursFVar(g.target, h)) throw TacticError(TacticErrorKind::DependencyError, "the target depends on it");
    LocalContext lctx = g.lctx;
    lctx.erase(h);
    Goal ng = st.newGoal(std::move(lctx), g.target, g.caseTag);
    st.assign(g, TacticState::goalApp(ng));
    return ng;
}

Goal rename(const Goal& g, FVarId h, const std::string& name) {
    if (!g.lctx.find(h))
        throw TacticError(TacticErrorKind::UnknownHypothesis, "unknown hypothesis %" + std::to_string(h.value));
    Goal ng = g;
    ng.lctx.setName(h, name, false);
    return ng;
}

std::vector<Hypothesis> stableTopoSort(std::vector<Hypothesis> hyps,
                                       const std::function<bool(const Hypothesis&)>& preferred) {
    std::vector<Hypothesis> out;
    std::set<FVarId> placed;
    std::set<FVarId> all;
    for (const auto& h : hyps) all.insert(h.id);
    auto ready = [&](const Hypothesis& h) {
        for (FVarId x : collectFVars(h.type))
            if (all.count(x) && !placed.count(x)) return false;
        return true;
    };
    while (!hyps.empty()) {
        std::optional<std::size_t> pick;
        for (std::size_t i = 0; i < hyps.size() && !pick; ++i)
            if (ready(hyps[i]) && (!preferred || preferred(hyps[i]))) pick = i;
        for (std::size_t i = 0; i < hyps.size() && !pick; ++i)
            if (ready(hyps[i])) pick = i;
        if (!pick) throw TacticError(TacticErrorKind::DependencyError, "cyclic hypothesis dependencies");
        placed.insert(hyps[*pick].id);
        out.push_back(std::move(hyps[*pick]));
        hyps.erase(hyps.begin() + static_cast<std::ptrdiff_t>(*pick));
    }
    return out;
}

Goal substUsing(TacticState& st, const Goal& g, FVarId h, bool eliminateRhs) {
    const Hypothesis* eq = g.lctx.find(h);
    if (!eq) throw TacticError(TacticErrorKind::UnknownHypothesis, "unknown hypothesis %" + std::to_string(h.value));
    auto v = matchEq(eq->type);
    if (!v) throw TacticError(TacticErrorKind::Other, eq->name + " is not an equation");
    Expr x = eliminateRhs ? v->rhs : v->lhs;
    Expr t = eliminateRhs ? v->lhs : v->rhs;
    if (!x.isFVar()) throw TacticError(TacticErrorKind::Other, "the eliminated side is not a hypothesis");
    const FVarId xid = x.fvarId();
    if (occursFVar(t, xid)) throw TacticError(TacticErrorKind::OccursCheck, "variable occurs in its replacement");
    for (const auto& hy : g.lctx.hyps())
        if (hy.id != h && occursFVar(hy.type, h))
            throw TacticError(TacticErrorKind::DependencyError, hy.name + " depends on the equation");
    if (occursFVar(g.target, h)) throw TacticError(TacticErrorKind::DependencyError, "the target depends on the equation");

    std::vector<FVarId> deps;
    for (FVarId d : dependencyClosure(g.lctx, {xid}))
        if (d != xid && d != h) deps.push_back(d);
    std::set<FVarId> depSet(deps.begin(), deps.end());
    for (FVarId u : usedHypotheses(g.lctx, t))
        if (u == xid || depSet.count(u))
            throw TacticError(TacticErrorKind::DependencyError, "the replacement depends on the eliminated variable");

    std::vector<Hypothesis> hyps;
    for (const auto& hy : g.lctx.hyps()) {
        if (hy.id == xid || hy.id == h) continue;
        Hypothesis c = hy;
        if (depSet.count(hy.id)) c.type = betaNormalize(replaceFVar(hy.type, xid, t));
        hyps.push_back(std::move(c));
    }
    LocalContext lctx;
    for (auto& hy : stableTopoSort(std::move(hyps))) lctx.push(std::move(hy));
    Goal ng = st.newGoal(std::move(lctx), betaNormalize(replaceFVar(g.target, xid, t)), g.caseTag);

    const Expr& A = v->type;
    Expr minor = replaceFVar(lambdasOver(g.lctx, deps, TacticState::goalApp(ng)), xid, t);
    Expr body = abstract1(pisOver(g.lctx, deps, g.target), xid);
    Expr motive = mkLambda("b", A, mkLambda("h", mkEq(A, t, mkBVar(0)), liftLooseBVars(body, 1)));
    Expr e = eliminateRhs ? mkFVar(h) : mkApp(mkConst(prelude::kEqSymm), {A, v->lhs, v->rhs, mkFVar(h)});
    Expr proof = mkApp(mkConst(prelude::kEqRec), {A, t, motive, minor, x, e});
    std::vector<Expr> depArgs;
    for (FVarId d : deps) depArgs.push_back(mkFVar(d));
    st.assign(g, mkApp(proof, depArgs));
    return ng;
}

Goal replaceHypType(TacticState& st, const Goal& g, FVarId h, const Expr& newType, const Expr& value) {
    const Hypothesis* hy = g.lctx.find(h);
    if (!hy) throw TacticError(TacticErrorKind::UnknownHypothesis, "unknown hypothesis %" + std::to_string(h.value));
    for (const auto& x : g.lctx.hyps())
        if (x.id != h && occursFVar(x.type, h))
            throw TacticError(TacticErrorKind::DependencyError, x.name + " depends on " + hy->name);
    if (occursFVar(g.target, h)) throw TacticError(TacticErrorKind::DependencyError, "the target depends on " + hy->name);
    {
        TypeChecker tc = st.checker(g);
        try {
            tc.check(value, newType);
        } catch (const KernelError& e) {
            throw TacticError(TacticErrorKind::TypeError, e.what());
        }
    }
    LocalContext lctx = g.lctx;
    lctx.setType(h, newType);
    const std::string name = hy->name;
    Goal ng = st.newGoal(std::move(lctx), g.target, g.caseTag);
    st.assign(g, mkApp(mkLambda(name, newType, abstract1(TacticState::goalApp(ng), h)), value));
    return ng;
}

Goal reorder(TacticState& st, const Goal& g, const std::vector<FVarId>& order) {
    if (order.size() != g.lctx.size()) throw std::logic_error("reorder: not a permutation");
    LocalContext lctx;
    std::set<FVarId> placed;
    for (FVarId id : order) {
        const Hypothesis* h = g.lctx.find(id);
        if (!h) throw std::logic_error("reorder: unknown hypothesis");
        for (FVarId x : collectFVars(h->type))
            if (g.lctx.find(x) && !placed.count(x)) throw std::logic_error("reorder: dependency order violated");
        placed.insert(id);
        lctx.push(*h);
    }
    Goal ng = st.newGoal(std::move(lctx), g.target, g.caseTag);
    st.assign(g, TacticState::goalApp(ng));
    return ng;
}

std::string prettyPrintGoal(const TacticState& st, const Goal& g) { return printGoal(st.env(), g.lctx, g.target); }

}  // namespace indtac
