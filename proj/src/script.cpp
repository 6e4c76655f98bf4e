/*
Copyright (c) 2026 The indtac Authors. All rights reserved.
Released under Apache 2.0 license as described in the file LICENSE.
*/
#include "indtac/script.hpp"

#include <sstream>

#include "indtac/declare.hpp"
#include "indtac/elab.hpp"
#include "indtac/errors.hpp"
#include "indtac/inductive.hpp"
#include "indtac/printer.hpp"

namespace indtac {

FVarId resolveHypothesis(const Environment& env, const Goal& g, const std::string& name) {
    Printer p(env, g.lctx);
    const auto& hyps = g.lctx.hyps();
    for (auto it = hyps.rbegin(); it != hyps.rend(); ++it)
        if (p.hypName(it->id) == name) return it->id;
    if (const Hypothesis* h = g.lctx.findByName(name)) return h->id;
    throw TacticError(TacticErrorKind::UnknownHypothesis, "no hypothesis named " + name);
}

namespace {

std::vector<FVarId> resolveAll(const Environment& env, const Goal& g, const std::vector<std::string>& names) {
    std::vector<FVarId> out;
    for (const auto& n : names) out.push_back(resolveHypothesis(env, g, n));
    return out;
}

bool isPiAfterWhnf(TacticState& st, const Goal& g) {
    if (g.target.isPi()) return true;
    TypeChecker tc = st.checker(g);
    return tc.whnf(g.target, Transparency::All).isPi();
}

}  // namespace

TacticOutcome runTactic(ProofSession& ps, const TacticAst& t, std::size_t goalIndex) {
    ProofSession work = ps;
    TacticState& st = work.state;
    if (goalIndex >= st.goals().size()) throw TacticError(TacticErrorKind::NoSuchGoal, "no goals");
    const Goal g = st.goal(goalIndex);
    const Environment& env = st.env();
    TacticOutcome out;
    using K = TacticAst::Kind;
    switch (t.kind) {
    case K::Intro:
    case K::Intros: {
        Goal cur = g;
        if (t.names.empty()) {
            if (t.kind == K::Intro) {
                cur = intro(st, cur);
            } else {
                while (isPiAfterWhnf(st, cur)) cur = intro(st, cur);
            }
        } else {
            for (const auto& n : t.names) cur = intro(st, cur, n == "_" ? std::nullopt : std::optional(n));
        }
        st.replaceGoal(g.meta, {cur});
        break;
    }
    case K::Exact: {
        Elaborator el(env, g.lctx, &st.mctx());
        exact(st, g, el.against(t.term, g.target));
        st.replaceGoal(g.meta, {});
        break;
    }
    case K::Apply: {
        Elaborator el(env, g.lctx, &st.mctx());
        Expr e = el.infer(t.term).first;
        st.replaceGoal(g.meta, applyExpr(st, g, e));
        break;
    }
    case K::Induction:
    case K::Cases: {
        InductionConfig cfg;
        cfg.major = resolveHypothesis(env, g, t.names.at(0));
        cfg.fixAll = t.fixAll;
        cfg.fixed = resolveAll(env, g, t.fixing);
        for (const auto& c : t.cases) cfg.userNames.push_back({c.ctor, c.names});
        out.induction = t.kind == K::Cases ? casesTactic(st, g.meta, cfg) : inductionTactic(st, g.meta, cfg);
        break;
    }
    case K::Clear: {
        std::vector<FVarId> ids = resolveAll(env, g, t.names);
        Goal cur = g;
        for (auto it = ids.rbegin(); it != ids.rend(); ++it) cur = clear(st, cur, *it);
        st.replaceGoal(g.meta, {cur});
        break;
    }
    case K::Revert: {
        auto [ng, n] = revert(st, g, resolveAll(env, g, t.names));
        (void)n;
        st.replaceGoal(g.meta, {ng});
        break;
    }
    case K::Rename: {
        Goal ng = rename(g, resolveHypothesis(env, g, t.names.at(0)), t.names.at(1));
        // rename only touches display names, the goal keeps its meta
        std::vector<Goal> gs = st.goals();
        gs[goalIndex] = ng;
        st.setGoals(std::move(gs));
        break;
    }
    case K::Subst: {
        FVarId h = resolveHypothesis(env, g, t.names.at(0));
        auto e = matchEq(g.lctx.find(h)->type);
        if (!e) throw TacticError(TacticErrorKind::Other, t.names[0] + " is not an equation");
        bool rhs = e->rhs.isFVar() && !occursFVar(e->lhs, e->rhs.fvarId());
        bool lhs = e->lhs.isFVar() && !occursFVar(e->rhs, e->lhs.fvarId());
        if (!rhs && !lhs) throw TacticError(TacticErrorKind::Other, "neither side of " + t.names[0] + " is a variable");
        st.replaceGoal(g.meta, {substUsing(st, g, h, rhs)});
        break;
    }
    case K::Qnify: {
        std::vector<FVarId> queue;
        if (t.names.empty()) {
            for (const auto& h : g.lctx.hyps())
                if (matchEq(h.type) || matchHeq(h.type)) queue.push_back(h.id);
        } else {
            queue = resolveAll(env, g, t.names);
        }
        QnifyResult r = qnifyAll(st, g, queue);
        out.qnifyTrace = r.trace;
        std::vector<Goal> gs;
        if (r.goal) gs.push_back(*r.goal);
        st.replaceGoal(g.meta, std::move(gs));
        break;
    }
    case K::Sorry: {
        work.admitted.push_back(g);
        st.replaceGoal(g.meta, {});
        break;
    }
    }
    ps = std::move(work);
    return out;
}

std::string caseName(const Name& ctor) {
    auto dot = ctor.rfind('.');
    return dot == std::string::npos ? ctor : ctor.substr(dot + 1);
}

std::string printGoals(const TacticState& st) {
    if (st.goals().empty()) return "no goals\n";
    std::ostringstream os;
    bool first = true;
    for (const Goal& g : st.goals()) {
        if (!first) os << "\n";
        first = false;
        if (g.caseTag) os << "case " << caseName(*g.caseTag) << "\n";
        os << prettyPrintGoal(st, g);
        if (os.str().back() != '\n') os << "\n";
    }
    return os.str();
}

const char* toString(LemmaStatus s) {
    switch (s) {
    case LemmaStatus::Proved: return "proved";
    case LemmaStatus::Open: return "open";
    case LemmaStatus::Admitted: return "admitted";
    case LemmaStatus::Failed: return "failed";
    }
    return "?";
}

ProofSession startLemma(std::shared_ptr<const Environment> env, const DeclItem& item) {
    Expr statement = lemmaStatement(*env, item);
    return ProofSession(TacticState(std::move(env), statement));
}

LemmaStatus finishLemma(const ProofSession& ps) {
    TacticState st = ps.state;
    std::vector<Goal> open = st.goals();
    open.insert(open.end(), ps.admitted.begin(), ps.admitted.end());
    st.setGoals(open);
    try {
        st.checkProof();
    } catch (const std::exception&) {
        return LemmaStatus::Failed;
    }
    if (!ps.state.goals().empty()) return LemmaStatus::Open;
    return ps.admitted.empty() ? LemmaStatus::Proved : LemmaStatus::Admitted;
}

std::pair<std::shared_ptr<Environment>, DeclItem> prepareLemma(const std::string& text, const std::string& name) {
    SourceFile file = parseFile(text);
    auto env = std::make_shared<Environment>(preludeEnvironment());
    for (const Item& item : file.items) {
        const auto* d = std::get_if<DeclItem>(&item);
        if (!d || d->kind != DeclItem::Kind::Lemma) {
            declareItem(*env, item);
            continue;
        }
        if (name.empty() || d->name == name) return {env, *d};
        DeclItem ax = *d;
        ax.kind = DeclItem::Kind::Axiom;
        declareItem(*env, ax);
    }
    throw TacticError(TacticErrorKind::Other, name.empty() ? "no lemma in file" : "no lemma named " + name);
}

std::string formatReport(const ScriptResult& r, bool golden) {
    std::ostringstream os;
    for (const auto& l : r.lemmas) {
        if (golden) os << l.transcript << "\n";
        os << l.name << ": " << toString(l.status);
        if (!l.error.empty()) os << " (line " << l.errorLine << ": " << l.error << ")";
        os << "\n";
    }
    return os.str();
}

bool allProved(const ScriptResult& r) {
    for (const auto& l : r.lemmas)
        if (l.status != LemmaStatus::Proved) return false;
    return true;
}

ScriptResult runScript(const std::string& text) {
    SourceFile file = parseFile(text);
    ScriptResult res;
    auto env = std::make_shared<Environment>(preludeEnvironment());
    for (const Item& item : file.items) {
        const auto* d = std::get_if<DeclItem>(&item);
        if (!d || d->kind != DeclItem::Kind::Lemma) {
            declareItem(*env, item);
            continue;
        }
        LemmaResult lr;
        lr.name = d->name;
        std::ostringstream tr;
        tr << "lemma " << d->name << "\n";
        ProofSession ps = startLemma(std::make_shared<const Environment>(*env), *d);
        tr << printGoals(ps.state);
        bool failed = false;
        for (const TacticAst& t : d->tactics) {
            tr << "> " << t.text << "\n";
            try {
                runTactic(ps, t);
            } catch (const std::exception& e) {
                lr.error = e.what();
                lr.errorLine = t.line;
                tr << "error: " << e.what() << "\n";
                failed = true;
                break;
            }
            tr << printGoals(ps.state);
        }
        lr.status = failed ? LemmaStatus::Failed : finishLemma(ps);
        tr << "status: " << toString(lr.status) << "\n";
        lr.transcript = tr.str();
        res.lemmas.push_back(std::move(lr));
        // later lemmas may use this one
        DeclItem ax = *d;
        ax.kind = DeclItem::Kind::Axiom;
        ax.tactics.clear();
        declareItem(*env, ax);
    }
    res.env = env;
    return res;
}

}  // namespace indtac
