/*
Copyright (c) 2026 The indtac Authors. All rights reserved.
Released under Apache 2.0 license as described in the file LICENSE.
*/
#include "indtac/naming.hpp"

#include <algorithm>

#include "indtac/errors.hpp"
#include "indtac/inductive.hpp"

namespace indtac {

const char* toString(NamingRule r) {
    switch (r) {
    case NamingRule::User: return "user";
    case NamingRule::Recursion: return "recursion";
    case NamingRule::IndexAssociation: return "index association";
    case NamingRule::NamedArgument: return "named argument";
    case NamingRule::TypeHint: return "type hint";
    case NamingRule::Fallback: return "fallback";
    case NamingRule::InductionHypothesis: return "induction hypothesis";
    case NamingRule::Leftover: return "leftover";
    }
    return "?";
}

std::string freshen(const std::string& n, const std::set<std::string>& used) {
    if (!used.count(n)) return n;
    for (std::size_t i = 1;; ++i) {
        std::string c = n + "_" + std::to_string(i);
        if (!used.count(c)) return c;
    }
}

namespace {

std::optional<Name> typeHead(TypeChecker& tc, const Expr& type) {
    Expr w = tc.whnf(type, Transparency::Reducible);
    const Expr& f = getAppFn(w);
    if (f.isConst()) return f.constName();
    return std::nullopt;
}

std::string firstUnused(const std::vector<std::string>& names, const std::string& suffix,
                        const std::set<std::string>& used) {
    for (const auto& n : names)
        if (!used.count(n + suffix)) return n + suffix;
    return names.front() + suffix;
}

}  // namespace

std::optional<std::string> lookupHint(const Environment& env, TypeChecker& tc, const Expr& type,
                                      const std::set<std::string>& used) {
    Expr w = tc.whnf(type, Transparency::Reducible);
    auto head = typeHead(tc, w);
    if (!head) return std::nullopt;
    if (const auto* hs = env.hints(*head); hs && !hs->empty()) return firstUnused(*hs, "", used);
    if (env.isContainer(*head) && w.isApp()) {
        std::vector<Expr> args = getAppArgs(w);
        if (auto inner = typeHead(tc, args.front()))
            if (const auto* hs = env.hints(*inner); hs && !hs->empty()) return firstUnused(*hs, "s", used);
    }
    return std::nullopt;
}

bool isPropositionLike(TypeChecker& tc, const Expr& type) {
    Expr t = tc.whnf(type, Transparency::Reducible);
    while (t.isPi()) {
        Expr x = tc.pushLocal(t.binderName(), t.binderType());
        t = tc.whnf(instantiate1(t.binderBody(), x), Transparency::Reducible);
    }
    bool result = false;
    const Expr& f = getAppFn(t);
    if (f.isConst()) {
        const Name& n = f.constName();
        if (n == prelude::kEq || n == prelude::kHeq || n == prelude::kFalse) {
            result = true;
        } else if (const InductiveDecl* d = tc.env().findInductive(n)) {
            result = !d->indices.empty();
        }
    }
    if (!result && t.isApp() && (f.isFVar() || (f.isConst() && !tc.env().findInductive(f.constName())))) {
        // a relation: head whose type ends in a sort
        try {
            Expr ft = tc.whnf(tc.infer(f), Transparency::All);
            std::size_t opened = 0;
            while (ft.isPi()) {
                Expr x = tc.pushLocal(ft.binderName(), ft.binderType());
                ++opened;
                ft = tc.whnf(instantiate1(ft.binderBody(), x), Transparency::All);
            }
            result = ft.isSort();
            while (opened-- > 0) tc.popLocal();
        } catch (const KernelError&) {
        }
    }
    return result;
}

ChosenName nameConstructorArg(TypeChecker& tc, const NamingContext& nc, std::size_t argIdx, const Expr& argType) {
    const Constructor& c = *nc.ctor;
    const ConstructorArg& a = c.args.at(argIdx);
    if (a.recursive) return {nc.majorName, NamingRule::Recursion};

    // index association: a occurs in j_i, and every such k_i is the same hypothesis
    const auto bvar = static_cast<std::uint32_t>(c.args.size() - 1 - argIdx);
    std::optional<std::size_t> first;
    bool consistent = true;
    for (std::size_t i = 0; i < c.indexInstantiations.size(); ++i) {
        if (!hasLooseBVar(c.indexInstantiations[i], bvar)) continue;
        const Expr& k = nc.indexArgs.at(i);
        if (!k.isFVar() || (first && nc.indexArgs[*first].fvarId() != k.fvarId())) {
            consistent = false;
            break;
        }
        if (!first) first = i;
    }
    if (first && consistent && nc.indexArgTypes.at(*first) && nc.indexArgNames.at(*first)) {
        bool sameType = false;
        try {
            sameType = tc.isDefEq(*nc.indexArgTypes[*first], argType, Transparency::Reducible);
        } catch (const KernelError&) {
        }
        if (sameType) return {*nc.indexArgNames[*first], NamingRule::IndexAssociation};
    }

    if (a.explicitlyNamed && !a.name.empty() && a.name != "_") return {a.name, NamingRule::NamedArgument};
    if (auto hint = lookupHint(tc.env(), tc, argType, nc.used)) return {*hint, NamingRule::TypeHint};
    return {isPropositionLike(tc, argType) ? "h" : "x", NamingRule::Fallback};
}

std::string nameIH(const std::string& recursiveArgName, std::size_t totalIHs) {
    return totalIHs == 1 ? "ih" : "ih_" + recursiveArgName;
}

std::vector<NamedHypothesis> finalizeNames(const TacticState& st, Goal& g, NamingContext nc, const NamingTargets& t) {
    const std::size_t positions = t.args.size() + t.ihs.size();
    if (t.userNames && t.userNames->size() > positions)
        throw TacticError(TacticErrorKind::UserNameCountMismatch,
                          "case " + (nc.ctor ? nc.ctor->name : std::string("?")) + " takes at most " +
                              std::to_string(positions) + " names, got " + std::to_string(t.userNames->size()));
    auto user = [&](std::size_t pos) -> std::optional<std::string> {
        if (t.userNames && pos < t.userNames->size() && (*t.userNames)[pos] != "_") return (*t.userNames)[pos];
        return std::nullopt;
    };

    std::set<FVarId> targets;
    for (const auto& a : t.args)
        if (a) targets.insert(*a);
    targets.insert(t.ihs.begin(), t.ihs.end());
    targets.insert(t.leftoverEquations.begin(), t.leftoverEquations.end());
    for (const auto& h : g.lctx.hyps())
        if (!targets.count(h.id)) nc.used.insert(h.name);

    TypeChecker tc = st.checker(g);
    std::vector<NamedHypothesis> out;
    std::vector<std::string> argNames(t.args.size());
    for (std::size_t i = 0; i < t.args.size(); ++i) {
        const Hypothesis* h = t.args[i] ? g.lctx.find(*t.args[i]) : nullptr;
        ChosenName c{"", NamingRule::User};
        if (auto u = user(i)) {
            c.name = *u;
        } else if (!h) {
            // eliminated; the name may still be needed for an IH
            argNames[i] = nc.ctor->args[i].recursive ? nc.majorName : nc.ctor->args[i].name;
            continue;
        } else {
            c = nameConstructorArg(tc, nc, i, h->type);
            c.name = freshen(c.name, nc.used);
        }
        argNames[i] = c.name;
        if (!h) continue;
        nc.used.insert(c.name);
        g.lctx.setName(h->id, c.name, false);
        out.push_back({h->id, c.name, c.rule});
    }
    for (std::size_t j = 0; j < t.ihs.size(); ++j) {
        if (!g.lctx.find(t.ihs[j])) continue;
        std::string n;
        NamingRule rule = NamingRule::InductionHypothesis;
        if (auto u = user(t.args.size() + j)) {
            n = *u;
            rule = NamingRule::User;
        } else {
            n = freshen(nameIH(argNames.at(t.ihArg.at(j)), t.ihs.size()), nc.used);
        }
        nc.used.insert(n);
        g.lctx.setName(t.ihs[j], n, false);
        out.push_back({t.ihs[j], n, rule});
    }
    std::size_t k = 0;
    for (FVarId e : t.leftoverEquations) {
        if (!g.lctx.find(e)) continue;
        std::string n = freshen("induction_eq_" + std::to_string(++k), nc.used);
        nc.used.insert(n);
        g.lctx.setName(e, n, false);
        out.push_back({e, n, NamingRule::Leftover});
    }
    return out;
}

}  // namespace indtac
