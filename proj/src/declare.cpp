/*
Copyright (c) 2026 The indtac Authors. All rights reserved.
Released under Apache 2.0 license as described in the file LICENSE.
*/
#include "indtac/declare.hpp"

#include "indtac/elab.hpp"
#include "indtac/errors.hpp"
#include "indtac/inductive.hpp"
#include "indtac/prelude_text.hpp"

namespace indtac {

Expr lemmaStatement(const Environment& env, const DeclItem& item) {
    LocalContext empty;
    Elaborator el(env, empty);
    std::vector<Expr> xs = el.pushBinders(item.binders);
    return el.pis(xs, el.type(item.type));
}

void declareItem(Environment& env, const Item& item) {
    if (auto* ind = std::get_if<InductiveItem>(&item)) {
        declareInductive(env, elabInductive(env, *ind));
    } else if (auto* d = std::get_if<DeclItem>(&item)) {
        if (d->kind == DeclItem::Kind::Lemma) return;
        LocalContext empty;
        Elaborator el(env, empty);
        std::vector<Expr> xs = el.pushBinders(d->binders);
        Expr type = el.type(d->type);
        if (d->kind == DeclItem::Kind::Axiom) {
            addAxiom(env, d->name, el.pis(xs, type));
        } else {
            Expr value = el.against(d->value, type);
            addCheckedDefinition(env, d->name, el.pis(xs, type), el.lambdas(xs, value),
                                 d->reducible ? Transparency::Reducible : Transparency::All);
        }
    } else if (auto* h = std::get_if<HintsItem>(&item)) {
        auto heads = env.resolve(h->head);
        if (heads.size() != 1) throw UnknownConstant("unknown constant '" + h->head + "' in name hints");
        if (h->container)
            env.registerContainer(heads[0]);
        else
            env.registerHints(heads[0], h->names);
    } else if (auto* o = std::get_if<OpenItem>(&item)) {
        env.openNamespace(o->ns);
    }
}

const char* preludeSource() { return detail::kPreludeText; }

const Environment& preludeEnvironment() {
    static const Environment env = [] {
        Environment e;
        SourceFile f = parseFile(detail::kPreludeText);
        for (const auto& item : f.items) declareItem(e, item);
        // companions whose prerequisites appear later in the prelude
        std::vector<Name> inductives;
        for (const auto& n : e.order())
            if (e.findInductive(n)) inductives.push_back(n);
        for (const auto& n : inductives) generateAuxiliaries(e, n);
        return e;
    }();
    return env;
}

}  // namespace indtac
