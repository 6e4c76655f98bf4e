/*
Copyright (c) 2026 The indtac Authors. All rights reserved.
Released under Apache 2.0 license as described in the file LICENSE.
*/
#include "indtac/induction.hpp"

#include <algorithm>

#include "indtac/errors.hpp"
#include "indtac/inductive.hpp"
#include "indtac/unify.hpp"

namespace indtac {

namespace {

const Hypothesis& hypOrThrow(const Goal& g, FVarId id) {
    const Hypothesis* h = g.lctx.find(id);
    if (!h) throw TacticError(TacticErrorKind::UnknownHypothesis, "unknown hypothesis %" + std::to_string(id.value));
    return *h;
}

std::vector<Expr> fvarsOf(const std::vector<FVarId>& ids) {
    std::vector<Expr> out;
    for (FVarId id : ids) out.push_back(mkFVar(id));
    return out;
}

bool sameName(const Name& full, const Name& given) {
    if (full == given) return true;
    return full.size() > given.size() && full.compare(full.size() - given.size(), given.size(), given) == 0 &&
           full[full.size() - given.size() - 1] == '.';
}

}  // namespace

MajorPremiseInfo analyseMajorPremise(TacticState& st, const Goal& g, FVarId major) {
    const Hypothesis& h = hypOrThrow(g, major);
    TypeChecker tc = st.checker(g);
    Expr t = tc.whnf(h.type, Transparency::All);
    const Expr& f = getAppFn(t);
    const InductiveDecl* d = f.isConst() ? st.env().findInductive(f.constName()) : nullptr;
    if (!d) throw TacticError(TacticErrorKind::NotInductive, h.name + " is not of an inductive type");
    std::vector<Expr> args = getAppArgs(t);
    if (args.size() != d->params.size() + d->indices.size())
        throw TacticError(TacticErrorKind::NotInductive, h.name + "'s type is not fully applied");
    MajorPremiseInfo info;
    info.family = d;
    info.paramArgs.assign(args.begin(), args.begin() + static_cast<std::ptrdiff_t>(d->params.size()));
    info.indexArgs.assign(args.begin() + static_cast<std::ptrdiff_t>(d->params.size()), args.end());
    info.dependencies = usedHypotheses(g.lctx, h.type);
    info.dependencies.erase(major);
    return info;
}

std::pair<Goal, std::vector<IndexEquationRecord>> generalizeComplexIndices(TacticState& st, const Goal& g,
                                                                           const InductionConfig& cfg) {
    MajorPremiseInfo info = analyseMajorPremise(st, g, cfg.major);
    const InductiveDecl& d = *info.family;
    const std::vector<Expr>& ks = info.indexArgs;

    std::set<FVarId> indexFVars;
    for (const Expr& k : ks)
        if (k.isFVar()) indexFVars.insert(k.fvarId());
    auto isComplex = [&](std::size_t i) {
        const Expr& k = ks[i];
        if (!k.isFVar()) return true;
        for (std::size_t j = 0; j < i; ++j)
            if (ks[j] == k) return true;
        for (const Expr& p : info.paramArgs)
            if (occursFVar(p, k.fvarId())) return true;
        // reverting k would drag a dependency of the major premise along
        for (FVarId dep : info.dependencies) {
            if (indexFVars.count(dep)) continue;
            if (usedHypotheses(g.lctx, hypOrThrow(g, dep).type).count(k.fvarId())) return true;
        }
        return false;
    };

    std::vector<std::size_t> complexIdx;
    for (std::size_t i = 0; i < ks.size(); ++i)
        if (isComplex(i)) complexIdx.push_back(i);
    if (complexIdx.empty()) return {g, {}};

    LocalContext lctx = g.lctx;
    const std::size_t majorPos = *lctx.indexOf(cfg.major);
    std::vector<Expr> newIdx;
    std::vector<IndexEquationRecord> records;
    std::vector<Expr> eqTypes;
    std::vector<Expr> refls;
    std::vector<Expr> prefix = info.paramArgs;
    for (std::size_t i = 0, inserted = 0; i < ks.size(); ++i) {
        std::vector<Expr> sofar = prefix;
        sofar.insert(sofar.end(), newIdx.begin(), newIdx.end());
        Expr tau = instantiateRev(d.indices[i].type, sofar);
        if (std::find(complexIdx.begin(), complexIdx.end(), i) == complexIdx.end()) {
            newIdx.push_back(ks[i]);
            continue;
        }
        FVarId id = st.freshId();
        const std::string name = d.indices[i].explicitlyNamed ? d.indices[i].name : "index";
        lctx.insert(majorPos + inserted++, Hypothesis{id, name, tau, true});
        TypeChecker tc(st.env(), lctx, &st.mctx());
        Expr kType = tc.infer(ks[i]);
        const bool hetero = !tc.isDefEq(tau, kType, Transparency::Reducible);
        records.push_back({id, ks[i], hetero});
        eqTypes.push_back(hetero ? mkHeq(tau, mkFVar(id), kType, ks[i]) : mkEq(tau, mkFVar(id), ks[i]));
        refls.push_back(hetero ? mkHeqRefl(kType, ks[i]) : mkEqRefl(kType, ks[i]));
        newIdx.push_back(mkFVar(id));
    }

    auto rewrite = [&](Expr e) {
        for (const auto& r : records)
            if (!r.originalTerm.isFVar()) e = replaceTerm(e, r.originalTerm, mkFVar(r.placeholderId));
        return e;
    };
    std::set<FVarId> placeholders;
    for (const auto& r : records) placeholders.insert(r.placeholderId);
    std::vector<Hypothesis> hyps = lctx.hyps();
    for (auto& h : hyps) {
        if (h.id == cfg.major) {
            h.type = mkApp(mkApp(mkConst(d.name), info.paramArgs), newIdx);
        } else if (!placeholders.count(h.id) && !info.dependencies.count(h.id)) {
            h.type = rewrite(h.type);
        }
    }
    LocalContext out;
    for (auto& h : stableTopoSort(std::move(hyps))) out.push(std::move(h));
    Expr target = rewrite(g.target);
    for (std::size_t i = eqTypes.size(); i-- > 0;) target = mkArrow(eqTypes[i], target);

    {
        TypeChecker tc(st.env(), out, &st.mctx());
        try {
            for (const auto& h : out.hyps()) tc.ensureSort(tc.infer(h.type));
            tc.ensureSort(tc.infer(target));
        } catch (const KernelError& e) {
            throw TacticError(TacticErrorKind::RewriteMadeGoalIllTyped, e.what());
        }
    }

    Goal ng = st.newGoal(out, target, g.caseTag);
    std::vector<Expr> args;
    for (const auto& h : ng.lctx.hyps()) {
        auto r = std::find_if(records.begin(), records.end(), [&](const auto& r) { return r.placeholderId == h.id; });
        args.push_back(r == records.end() ? mkFVar(h.id) : r->originalTerm);
    }
    args.insert(args.end(), refls.begin(), refls.end());
    st.assign(g, mkApp(mkMeta(ng.meta), args));
    return {ng, records};
}

Generalized generalizeHypotheses(TacticState& st, const Goal& g, const InductionConfig& cfg,
                                 const MajorPremiseInfo& info) {
    std::set<FVarId> indexFVars;
    for (const Expr& k : info.indexArgs)
        if (k.isFVar()) indexFVars.insert(k.fvarId());

    std::set<FVarId> fixed;
    if (cfg.fixAll) {
        for (const auto& h : g.lctx.hyps()) fixed.insert(h.id);
    } else {
        std::vector<FVarId> mustMove(indexFVars.begin(), indexFVars.end());
        mustMove.push_back(cfg.major);
        std::vector<FVarId> moving = dependencyClosure(g.lctx, mustMove);
        for (FVarId f : cfg.fixed) {
            const Hypothesis& h = hypOrThrow(g, f);
            if (std::find(moving.begin(), moving.end(), f) != moving.end())
                throw TacticError(TacticErrorKind::FixedHypothesisConflict,
                                  h.name + " cannot stay fixed: the induction has to revert it");
            fixed.insert(f);
            for (FVarId x : usedHypotheses(g.lctx, h.type)) fixed.insert(x);
        }
    }

    std::vector<FVarId> revertIds;
    for (const auto& h : g.lctx.hyps()) {
        if (h.id == cfg.major || fixed.count(h.id) || info.dependencies.count(h.id)) continue;
        bool inTarget = occursFVar(g.target, h.id);
        bool related = false;
        for (FVarId x : collectFVars(h.type))
            if (x == cfg.major || info.dependencies.count(x)) related = true;
        if (inTarget || related) revertIds.push_back(h.id);
    }
    if (revertIds.empty()) return {g, {}};
    std::vector<Hypothesis> reverted;
    for (FVarId id : dependencyClosure(g.lctx, revertIds)) reverted.push_back(*g.lctx.find(id));
    auto [ng, count] = revert(st, g, revertIds);
    (void)count;
    return {ng, reverted};
}

std::vector<CaseGoal> applyRecursorWithMotive(TacticState& st, const Goal& g, const InductionConfig& cfg,
                                              const std::vector<Hypothesis>& generalized, std::size_t equationCount) {
    MajorPremiseInfo info = analyseMajorPremise(st, g, cfg.major);
    const InductiveDecl& d = *info.family;
    std::vector<FVarId> ix;
    for (const Expr& k : info.indexArgs) {
        if (!k.isFVar() || std::find(ix.begin(), ix.end(), k.fvarId()) != ix.end())
            throw std::logic_error("index not generalised");
        ix.push_back(k.fvarId());
    }
    std::vector<FVarId> moving = ix;
    moving.push_back(cfg.major);
    std::vector<FVarId> closure = dependencyClosure(g.lctx, moving);
    std::vector<FVarId> rest;
    for (FVarId id : closure)
        if (std::find(moving.begin(), moving.end(), id) == moving.end()) rest.push_back(id);

    Expr motive = pisOver(g.lctx, rest, g.target);
    for (std::size_t j = moving.size(); j-- > 0;) {
        const Hypothesis& h = hypOrThrow(g, moving[j]);
        motive = mkLambda(h.name, h.type, abstract1(motive, h.id));
    }

    LocalContext outer = g.lctx;
    for (FVarId id : closure) outer.erase(id);

    TypeChecker tc = st.checker(g);
    Expr recHead = mkApp(mkApp(mkConst(recursorName(d.name)), info.paramArgs), motive);
    Expr recType = tc.infer(recHead);
    std::vector<Goal> minors;
    std::vector<Expr> minorApps;
    for (const auto& c : d.constructors) {
        Expr w = recType.isPi() ? recType : tc.whnf(recType, Transparency::All);
        Goal mg = st.newGoal(outer, betaNormalize(w.binderType()), c.name);
        minorApps.push_back(TacticState::goalApp(mg));
        minors.push_back(std::move(mg));
        recType = instantiate1(w.binderBody(), minorApps.back());
    }
    std::vector<Expr> tail = info.indexArgs;
    tail.push_back(mkFVar(cfg.major));
    for (FVarId id : rest) tail.push_back(mkFVar(id));
    st.assign(g, mkApp(mkApp(recHead, minorApps), tail));

    std::vector<Hypothesis> reintro;
    for (FVarId id : rest) reintro.push_back(*g.lctx.find(id));
    reintro.insert(reintro.end(), generalized.begin(), generalized.end());

    std::vector<CaseGoal> out;
    for (std::size_t ci = 0; ci < d.constructors.size(); ++ci) {
        const Constructor& c = d.constructors[ci];
        CaseGoal cg{minors[ci], c.name, {}, {}, {}, {}, reintro.size()};
        for (std::size_t i = 0; i < c.args.size(); ++i) {
            cg.goal = intro(st, cg.goal, std::nullopt, std::nullopt, true);
            cg.args.push_back(cg.goal.lctx.hyps().back().id);
        }
        for (std::size_t i = 0; i < c.args.size(); ++i) {
            if (!c.args[i].recursive) continue;
            cg.goal = intro(st, cg.goal, std::nullopt, std::nullopt, true);
            cg.ihs.push_back(cg.goal.lctx.hyps().back().id);
            cg.ihArg.push_back(i);
        }
        for (const auto& h : reintro) cg.goal = intro(st, cg.goal, h.name, h.id, h.temporaryName);
        for (std::size_t i = 0; i < equationCount; ++i) {
            cg.goal = intro(st, cg.goal, "induction_eq", std::nullopt, true);
            cg.equations.push_back(cg.goal.lctx.hyps().back().id);
        }
        out.push_back(std::move(cg));
    }
    return out;
}

Goal simplifyIH(TacticState& st, const Goal& g, FVarId ihId, std::size_t binderCount, std::size_t equationCount) {
    if (equationCount == 0) return g;
    const Hypothesis ih = hypOrThrow(g, ihId);
    TypeChecker tc = st.checker(g);

    // open the binders as metas and the equations as scratch locals
    Expr ty = ih.type;
    std::vector<MetaId> metas;
    std::vector<std::string> names;
    std::vector<Expr> binderTypes;
    for (std::size_t i = 0; i < binderCount; ++i) {
        if (!ty.isPi()) ty = tc.whnf(ty, Transparency::All);
        if (!ty.isPi()) return g;
        metas.push_back(st.freshMetaId());
        names.push_back(ty.binderName());
        binderTypes.push_back(ty.binderType());
        ty = instantiate1(ty.binderBody(), mkMeta(metas.back()));
    }
    std::uint64_t scratch = 1ULL << 58;
    std::vector<FVarId> eqLocals;
    std::vector<Expr> eqTypes;
    for (std::size_t j = 0; j < equationCount; ++j) {
        if (!ty.isPi()) ty = tc.whnf(ty, Transparency::All);
        if (!ty.isPi()) return g;
        eqLocals.push_back(FVarId{scratch++});
        eqTypes.push_back(ty.binderType());
        ty = instantiate1(ty.binderBody(), mkFVar(eqLocals.back()));
    }

    std::set<MetaId> open(metas.begin(), metas.end());
    std::map<MetaId, Expr> sigma;
    for (const Expr& eqT : eqTypes) {
        Expr e = instantiateMetas(eqT, sigma);
        Expr lhs, rhs;
        if (auto v = matchEq(e)) {
            lhs = v->lhs;
            rhs = v->rhs;
        } else if (auto v = matchHeq(e)) {
            lhs = v->lhs;
            rhs = v->rhs;
        } else {
            continue;
        }
        if (lhs.hasMeta()) std::swap(lhs, rhs);
        if (lhs.hasMeta()) continue;
        UnifyResult r = unify(tc, lhs, rhs, open, Transparency::Reducible);
        if (r.status == UnifyStatus::Failure) continue;
        for (auto& [m, v] : r.assignment) {
            sigma[m] = v;
            open.erase(m);
        }
    }

    // a solution may only mention binders kept before it
    std::vector<bool> kept(metas.size());
    for (std::size_t i = 0; i < metas.size(); ++i) kept[i] = !sigma.count(metas[i]);
    for (bool changed = true; changed;) {
        changed = false;
        for (std::size_t i = 0; i < metas.size(); ++i) {
            if (kept[i]) continue;
            Expr v = instantiateMetas(sigma.at(metas[i]), sigma);
            for (std::size_t j = 0; j < metas.size(); ++j)
                if (kept[j] && j >= i && occursMeta(v, metas[j])) {
                    kept[i] = true;
                    sigma.erase(metas[i]);
                    changed = true;
                    break;
                }
        }
    }

    LocalContext ext = g.lctx;
    std::map<MetaId, Expr> subst = sigma;
    std::vector<FVarId> newBinders;
    std::vector<Expr> ihArgs;
    for (std::size_t i = 0; i < metas.size(); ++i) {
        if (kept[i]) {
            FVarId id{scratch++};
            ext.push(Hypothesis{id, names[i], instantiateMetas(binderTypes[i], subst), false});
            subst[metas[i]] = mkFVar(id);
            newBinders.push_back(id);
        }
    }
    for (std::size_t i = 0; i < metas.size(); ++i) ihArgs.push_back(instantiateMetas(mkMeta(metas[i]), subst));
    // binder types must be instantiated with the final substitution
    for (FVarId id : newBinders) ext.setType(id, instantiateMetas(ext.find(id)->type, subst));

    bool dropped = false;
    std::map<FVarId, Expr> eqArg;
    for (std::size_t j = 0; j < eqTypes.size(); ++j) {
        Expr e = instantiateMetas(eqTypes[j], subst);
        for (const auto& [id, v] : eqArg) e = replaceFVar(e, id, v);
        TypeChecker etc(st.env(), ext, &st.mctx());
        std::optional<Expr> refl;
        if (auto v = matchEq(e)) {
            if (etc.isDefEq(v->lhs, v->rhs, Transparency::All)) refl = mkEqRefl(v->type, v->lhs);
        } else if (auto v = matchHeq(e)) {
            if (etc.isDefEq(v->lhsType, v->rhsType, Transparency::All) &&
                etc.isDefEq(v->lhs, v->rhs, Transparency::All))
                refl = mkHeqRefl(v->lhsType, v->lhs);
        }
        if (refl) {
            dropped = true;
            eqArg[eqLocals[j]] = *refl;
        } else {
            ext.push(Hypothesis{eqLocals[j], "induction_eq", e, true});
            eqArg[eqLocals[j]] = mkFVar(eqLocals[j]);
            newBinders.push_back(eqLocals[j]);
        }
    }
    if (!dropped && newBinders.size() == metas.size() + eqTypes.size()) return g;

    Expr restT = instantiateMetas(ty, subst);
    for (const auto& [id, v] : eqArg) restT = replaceFVar(restT, id, v);
    std::vector<Expr> allArgs = ihArgs;
    for (FVarId e : eqLocals) allArgs.push_back(eqArg.at(e));
    Expr newType = pisOver(ext, newBinders, restT);
    Expr value = lambdasOver(ext, newBinders, mkApp(mkFVar(ihId), allArgs));
    if (newType.hasMeta() || value.hasMeta()) return g;
    return replaceHypType(st, g, ihId, betaNormalize(newType), value);
}

namespace {

InductionReport runPipeline(TacticState& st, MetaId goalMeta, const InductionConfig& cfg, bool casesOnly) {
    TacticState work = st;
    auto pos = work.findGoal(goalMeta);
    if (!pos) throw TacticError(TacticErrorKind::NoSuchGoal, "no goal ?" + std::to_string(goalMeta.value));
    const Goal g0 = work.goal(*pos);

    MajorPremiseInfo info0 = analyseMajorPremise(work, g0, cfg.major);
    NamingContext base;
    base.majorName = hypOrThrow(g0, cfg.major).name;
    base.family = info0.family;
    base.indexArgs = info0.indexArgs;
    for (const Expr& k : info0.indexArgs) {
        const Hypothesis* h = k.isFVar() ? g0.lctx.find(k.fvarId()) : nullptr;
        base.indexArgTypes.push_back(h ? std::optional<Expr>(h->type) : std::nullopt);
        base.indexArgNames.push_back(h ? std::optional<std::string>(h->name) : std::nullopt);
    }
    for (const auto& u : cfg.userNames) {
        bool found = false;
        for (const auto& c : info0.family->constructors) found = found || sameName(c.name, u.ctor);
        if (!found) throw TacticError(TacticErrorKind::Other, "no constructor " + u.ctor + " in " + info0.family->name);
    }

    auto [g1, records] = generalizeComplexIndices(work, g0, cfg);
    MajorPremiseInfo info1 = analyseMajorPremise(work, g1, cfg.major);
    Generalized gen = generalizeHypotheses(work, g1, cfg, info1);
    std::vector<CaseGoal> cases = applyRecursorWithMotive(work, gen.goal, cfg, gen.reverted, records.size());

    InductionReport report;
    std::vector<Goal> surviving;
    for (CaseGoal& cg : cases) {
        InductionReport::Case rc;
        rc.ctor = cg.ctor;
        QnifyResult q = qnifyAll(work, cg.goal, cg.equations);
        rc.qnifyTrace = q.trace;
        if (!q.goal) {
            rc.closed = true;
            report.cases.push_back(std::move(rc));
            continue;
        }
        Goal g = std::move(*q.goal);
        for (FVarId ih : cg.ihs)
            if (g.lctx.find(ih)) g = simplifyIH(work, g, ih, cg.ihBinderCount, cg.equations.size());
        if (casesOnly) {
            for (FVarId ih : cg.ihs)
                if (g.lctx.find(ih)) g = clear(work, g, ih);
        }

        TypeChecker tc = work.checker(g);
        std::vector<Hypothesis> sorted =
            stableTopoSort(g.lctx.hyps(), [&](const Hypothesis& h) { return !isPropositionLike(tc, h.type); });
        std::vector<FVarId> order;
        for (const auto& h : sorted) order.push_back(h.id);
        if (order != g.lctx.ids()) g = reorder(work, g, order);

        const Constructor* ctor = nullptr;
        for (const auto& c : info0.family->constructors)
            if (c.name == cg.ctor) ctor = &c;
        NamingContext nc = base;
        nc.ctor = ctor;
        NamingTargets targets;
        for (FVarId a : cg.args)
            targets.args.push_back(g.lctx.find(a) ? std::optional<FVarId>(a) : std::nullopt);
        if (!casesOnly) {
            targets.ihs = cg.ihs;
            targets.ihArg = cg.ihArg;
        }
        for (FVarId e : cg.equations)
            if (g.lctx.find(e)) targets.leftoverEquations.push_back(e);
        for (const auto& u : cfg.userNames)
            if (sameName(cg.ctor, u.ctor)) targets.userNames = u.names;
        rc.names = finalizeNames(work, g, nc, targets);
        // anything still temporary was introduced by qnify
        for (const auto& h : g.lctx.hyps())
            if (h.temporaryName) g.lctx.setName(h.id, freshen(h.name, {}), false);
        g.caseTag = cg.ctor;
        surviving.push_back(std::move(g));
        report.cases.push_back(std::move(rc));
    }
    work.replaceGoal(goalMeta, std::move(surviving));
    st = std::move(work);
    return report;
}

}  // namespace

InductionReport inductionTactic(TacticState& st, MetaId goalMeta, const InductionConfig& cfg) {
    return runPipeline(st, goalMeta, cfg, false);
}

InductionReport casesTactic(TacticState& st, MetaId goalMeta, const InductionConfig& cfg) {
    return runPipeline(st, goalMeta, cfg, true);
}

}  // namespace indtac
