/*
Copyright (c) 2026 The indtac Authors. All rights reserved.
Released under Apache 2.0 license as described in the file LICENSE.
*/
#include "indtac/syntax.hpp"

namespace indtac {

namespace {

std::string binders(const std::vector<SurfaceBinder>& bs) {
    std::string out;
    for (std::size_t i = 0; i < bs.size();) {
        if (!bs[i].type) {
            out += " " + bs[i].name;
            ++i;
            continue;
        }
        std::string names = bs[i].name;
        std::size_t j = i + 1;
        // binders written `(x y : T)` share one type node
        while (j < bs.size() && bs[j].type == bs[i].type) names += " " + bs[j++].name;
        out += " (" + names + " : " + printTerm(*bs[i].type) + ")";
        i = j;
    }
    return out;
}

std::string go(const Term& t, int prec) {
    using K = Term::Kind;
    auto paren = [&](std::string s, int p) { return prec > p ? "(" + s + ")" : s; };
    auto bin = [&](const char* op, int p, int lp, int rp) {
        return paren(go(*t.args[0], lp) + " " + op + " " + go(*t.args[1], rp), p);
    };
    switch (t.kind) {
    case K::Ident: return t.ident;
    case K::Num: return std::to_string(t.num);
    case K::Sort: return "Type";
    case K::Hole: return "_";
    case K::Pair: return "(" + go(*t.args[0], 0) + ", " + go(*t.args[1], 0) + ")";
    case K::App: {
        std::string out = go(*t.args[0], 2000);
        for (std::size_t i = 1; i < t.args.size(); ++i) out += " " + go(*t.args[i], 2000);
        return paren(out, 1024);
    }
    case K::Lam:
    case K::Pi:
        return paren(std::string(t.kind == K::Lam ? "λ" : "∀") + binders(t.binders) + ", " + go(*t.args[0], 0), 0);
    case K::Arrow: return bin("→", 25, 26, 0);
    case K::Prod: return bin("×", 35, 36, 35);
    case K::Not: return paren("¬" + go(*t.args[0], 40), 40);
    case K::Eq: return bin("=", 50, 51, 51);
    case K::Heq: return bin("==", 50, 51, 51);
    case K::Lt: return bin("<", 50, 51, 51);
    case K::Gt: return bin(">", 50, 51, 51);
    case K::Add: return bin("+", 65, 65, 66);
    }
    return "_";
}

}  // namespace

std::string printTerm(const Term& t) { return go(t, 0); }

std::string printTactic(const TacticAst& t) {
    using K = TacticAst::Kind;
    auto joined = [](const std::vector<std::string>& ns) {
        std::string out;
        for (const auto& n : ns) out += " " + n;
        return out;
    };
    switch (t.kind) {
    case K::Intro: return "intro" + joined(t.names);
    case K::Intros: return "intros" + joined(t.names);
    case K::Exact: return "exact " + printTerm(*t.term);
    case K::Apply: return "apply " + printTerm(*t.term);
    case K::Induction:
    case K::Cases: {
        std::string out = (t.kind == K::Cases ? "cases' " : "induction' ") + t.names.at(0);
        if (t.fixAll) out += " fixing *";
        if (!t.fixing.empty()) out += " fixing" + joined(t.fixing);
        for (std::size_t i = 0; i < t.cases.size(); ++i)
            out += (i == 0 ? " with case " : " | case ") + t.cases[i].ctor + ":" + joined(t.cases[i].names);
        return out;
    }
    case K::Clear: return "clear" + joined(t.names);
    case K::Revert: return "revert" + joined(t.names);
    case K::Rename: return "rename" + joined(t.names);
    case K::Subst: return "subst" + joined(t.names);
    case K::Qnify: return "qnify" + joined(t.names);
    case K::Sorry: return "sorry";
    }
    return "sorry";
}

std::string printSource(const SourceFile& f) {
    std::string out;
    for (const auto& item : f.items) {
        if (auto* ind = std::get_if<InductiveItem>(&item)) {
            out += "inductive " + ind->name + binders(ind->params);
            if (ind->type) out += " : " + printTerm(*ind->type);
            out += "\n";
            for (const auto& c : ind->ctors) {
                out += "| " + c.name + binders(c.binders);
                if (c.type) out += " : " + printTerm(*c.type);
                out += "\n";
            }
        } else if (auto* d = std::get_if<DeclItem>(&item)) {
            static const char* kw[] = {"axiom", "def", "lemma"};
            out += std::string(d->reducible ? "@[reducible] " : "") + kw[static_cast<int>(d->kind)] + " " + d->name +
                   binders(d->binders) + " : " + printTerm(*d->type);
            if (d->kind == DeclItem::Kind::Def) out += " :=\n  " + printTerm(*d->value);
            if (d->kind == DeclItem::Kind::Lemma) {
                out += " :=\nbegin";
                for (std::size_t i = 0; i < d->tactics.size(); ++i)
                    out += std::string(i == 0 ? "\n  " : ",\n  ") + printTactic(d->tactics[i]);
                out += "\nend";
            }
            out += "\n";
        } else if (auto* h = std::get_if<HintsItem>(&item)) {
            if (h->container) {
                out += "name_hints_container " + h->head + " := pluralize\n";
            } else {
                out += "name_hints " + h->head + " :=";
                for (const auto& n : h->names) out += " " + n;
                out += "\n";
            }
        } else if (auto* o = std::get_if<OpenItem>(&item)) {
            out += "open " + o->ns + "\n";
        }
        out += "\n";
    }
    return out;
}

}  // namespace indtac
