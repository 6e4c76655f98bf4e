/*
Copyright (c) 2026 The indtac Authors. All rights reserved.
Released under Apache 2.0 license as described in the file LICENSE.
*/
#include "indtac/elab.hpp"

#include "indtac/errors.hpp"
#include "indtac/inductive.hpp"
#include "indtac/printer.hpp"

namespace indtac {

Elaborator::Elaborator(const Environment& env, const LocalContext& lctx, const MetaContext* mctx)
    : env_(env), lctx_(lctx), outerSize_(lctx.size()), mctx_(mctx), tc_(env_, lctx_, mctx) {
    Printer p(env, lctx);
    for (const auto& h : lctx.hyps()) daggerNames_[p.hypName(h.id)] = h.id;
}

void Elaborator::fail(const Term& t, const std::string& msg) const {
    throw TypeError(std::to_string(t.line) + ":" + std::to_string(t.column) + ": " + msg);
}

Expr Elaborator::pushLocal(const std::string& name, const Expr& type) {
    FVarId id{next_++};
    lctx_.push(Hypothesis{id, name, type, false});
    return mkFVar(id);
}

std::vector<Expr> Elaborator::pushBinders(const std::vector<SurfaceBinder>& bs) {
    std::vector<Expr> out;
    for (const auto& b : bs) {
        if (!b.type) throw TypeError("binder '" + b.name + "' needs a type");
        out.push_back(pushLocal(b.name, type(b.type)));
    }
    return out;
}

Expr Elaborator::pis(const std::vector<Expr>& fvars, const Expr& body) const {
    Expr r = body;
    for (std::size_t i = fvars.size(); i-- > 0;) {
        const Hypothesis* h = lctx_.find(fvars[i].fvarId());
        r = mkPi(h->name, h->type, abstract1(r, h->id));
    }
    return r;
}

Expr Elaborator::lambdas(const std::vector<Expr>& fvars, const Expr& body) const {
    Expr r = body;
    for (std::size_t i = fvars.size(); i-- > 0;) {
        const Hypothesis* h = lctx_.find(fvars[i].fvarId());
        r = mkLambda(h->name, h->type, abstract1(r, h->id));
    }
    return r;
}

std::pair<Expr, Expr> Elaborator::infer(const TermPtr& t) { return go(t, std::nullopt); }

Expr Elaborator::against(const TermPtr& t, const Expr& expected) { return go(t, expected).first; }

Expr Elaborator::type(const TermPtr& t) {
    auto [e, ty] = go(t, std::nullopt);
    if (!tc_.whnf(ty, Transparency::All).isSort()) fail(*t, "type expected");
    return e;
}

std::pair<Expr, Expr> Elaborator::ident(const Term& t) {
    const std::string& n = t.ident;
    // binders opened during elaboration shadow everything else
    const auto& hs = lctx_.hyps();
    for (std::size_t i = hs.size(); i-- > outerSize_;)
        if (hs[i].name == n) return {mkFVar(hs[i].id), hs[i].type};
    if (auto it = daggerNames_.find(n); it != daggerNames_.end()) {
        Expr x = mkFVar(it->second);
        return {x, lctx_.find(it->second)->type};
    }
    std::string id = n == "ℕ" ? prelude::kNat : n;
    auto cands = env_.resolve(id);
    if (cands.empty()) fail(t, "unknown identifier '" + n + "'");
    if (cands.size() > 1) fail(t, "ambiguous identifier '" + n + "'");
    return {mkConst(cands[0]), env_.get(cands[0]).type};
}

Expr Elaborator::bindersTerm(const Term& t, const std::optional<Expr>& expected, Expr* typeOut) {
    const bool lam = t.kind == Term::Kind::Lam;
    std::vector<Expr> xs;
    std::optional<Expr> exp = expected;
    for (const auto& b : t.binders) {
        Expr ty;
        std::optional<Expr> pi;
        if (lam && exp) {
            Expr w = tc_.whnf(*exp, Transparency::All);
            if (w.isPi()) pi = w;
        }
        if (b.type) {
            ty = type(b.type);
        } else if (pi) {
            ty = pi->binderType();
        } else {
            fail(t, "cannot infer the type of binder '" + b.name + "'");
        }
        Expr x = pushLocal(b.name, ty);
        xs.push_back(x);
        exp = pi ? std::optional<Expr>(instantiate1(pi->binderBody(), x)) : std::nullopt;
    }
    Expr result;
    if (lam) {
        auto [body, bodyType] = go(t.args[0], exp);
        result = lambdas(xs, body);
        *typeOut = pis(xs, bodyType);
    } else {
        Expr body = type(t.args[0]);
        result = pis(xs, body);
        *typeOut = mkSort();
    }
    for (std::size_t i = xs.size(); i-- > 0;) lctx_.erase(xs[i].fvarId());
    return result;
}

std::pair<Expr, Expr> Elaborator::go(const TermPtr& tp, const std::optional<Expr>& expected) {
    const Term& t = *tp;
    using K = Term::Kind;
    const Expr nat = mkConst(prelude::kNat);
    Expr e, ty;
    switch (t.kind) {
    case K::Ident: std::tie(e, ty) = ident(t); break;
    case K::Sort:
        e = mkSort();
        ty = mkSort();
        break;
    case K::Num:
        e = mkNatLit(t.num);
        ty = nat;
        break;
    case K::Hole: fail(t, "holes are not supported");
    case K::App: {
        std::tie(e, ty) = go(t.args[0], std::nullopt);
        for (std::size_t i = 1; i < t.args.size(); ++i) {
            Expr pi = tc_.whnf(ty, Transparency::All);
            if (!pi.isPi()) fail(*t.args[i], "function expected");
            Expr arg = against(t.args[i], pi.binderType());
            e = mkApp(e, arg);
            ty = instantiate1(pi.binderBody(), arg);
        }
        break;
    }
    case K::Lam:
    case K::Pi: e = bindersTerm(t, expected, &ty); break;
    case K::Arrow:
        e = mkArrow(type(t.args[0]), type(t.args[1]));
        ty = mkSort();
        break;
    case K::Not:
        e = mkArrow(type(t.args[0]), mkConst(prelude::kFalse));
        ty = mkSort();
        break;
    case K::Prod:
        e = mkApp(mkConst(prelude::kProd), {type(t.args[0]), type(t.args[1])});
        ty = mkSort();
        break;
    case K::Eq: {
        auto [a, A] = infer(t.args[0]);
        Expr b = against(t.args[1], A);
        e = mkEq(A, a, b);
        ty = mkSort();
        break;
    }
    case K::Heq: {
        auto [a, A] = infer(t.args[0]);
        auto [b, B] = infer(t.args[1]);
        e = mkHeq(A, a, B, b);
        ty = mkSort();
        break;
    }
    case K::Add:
        e = mkApp(mkConst(prelude::kAdd), {against(t.args[0], nat), against(t.args[1], nat)});
        ty = nat;
        break;
    case K::Lt:
    case K::Gt: {
        Expr a = against(t.args[0], nat);
        Expr b = against(t.args[1], nat);
        e = t.kind == K::Lt ? mkApp(mkConst(prelude::kLt), {a, b}) : mkApp(mkConst(prelude::kLt), {b, a});
        ty = mkSort();
        break;
    }
    case K::Pair: {
        std::optional<Expr> A, B;
        if (expected) {
            Expr w = tc_.whnf(*expected, Transparency::All);
            if (isConstApp(w, prelude::kProd, 2)) {
                auto args = getAppArgs(w);
                A = args[0];
                B = args[1];
            }
        }
        Expr a, b;
        if (A) {
            a = against(t.args[0], *A);
            b = against(t.args[1], *B);
        } else {
            std::tie(a, A) = infer(t.args[0]);
            std::tie(b, B) = infer(t.args[1]);
        }
        e = mkApp(mkConst(prelude::kProdMk), {*A, *B, a, b});
        ty = mkApp(mkConst(prelude::kProd), {*A, *B});
        break;
    }
    }
    if (expected && !tc_.isDefEq(ty, *expected, Transparency::All)) {
        Printer p(env_, lctx_);
        fail(t, "type mismatch: '" + p.print(e) + "' has type '" + p.print(ty) + "' but '" + p.print(*expected) +
                    "' was expected");
    }
    return {e, ty};
}

InductiveDecl elabInductive(const Environment& env, const InductiveItem& item) {
    InductiveDecl d;
    d.name = item.name;
    if (env.contains(d.name)) throw KernelError("declaration '" + d.name + "' already exists");

    LocalContext empty;
    std::vector<FVarId> prefix;
    {
        Elaborator el(env, empty);
        std::vector<Expr> params = el.pushBinders(item.params);
        for (const auto& p : params) {
            const Hypothesis* h = el.lctx().find(p.fvarId());
            d.params.push_back({h->name, abstractFVars(h->type, prefix), true});
            prefix.push_back(p.fvarId());
        }
        Expr ty = item.type ? el.type(item.type) : mkSort();
        while (ty.isPi()) {
            std::string name = ty.binderName() == "_" ? "" : ty.binderName();
            Expr x = el.pushLocal(name.empty() ? "i" : name, ty.binderType());
            d.indices.push_back({name, abstractFVars(ty.binderType(), prefix), !name.empty()});
            prefix.push_back(x.fvarId());
            ty = instantiate1(ty.binderBody(), x);
        }
        if (!ty.isSort()) throw TypeError(d.name + ": the type of an inductive must end in Type");
    }

    Environment tmp = env;
    tmp.add(Declaration{d.name, inductiveType(d), std::nullopt, Transparency::All, DeclKind::Inductive});
    const std::size_t np = d.params.size();
    const std::size_t ni = d.indices.size();

    for (const auto& cs : item.ctors) {
        Elaborator el(tmp, empty);
        std::vector<Expr> params = el.pushBinders(item.params);
        Constructor c;
        c.name = d.name + "." + cs.name;
        std::vector<Expr> all = params;
        auto addArg = [&](const std::string& name, const Expr& type, bool named) {
            std::vector<FVarId> ids;
            for (const auto& x : all) ids.push_back(x.fvarId());
            c.args.push_back({named ? name : "a", abstractFVars(type, ids), named, false});
            all.push_back(el.pushLocal(named ? name : "a", type));
        };
        for (const auto& b : cs.binders) {
            if (!b.type) throw TypeError(c.name + ": binder '" + b.name + "' needs a type");
            addArg(b.name, el.type(b.type), b.name != "_");
        }
        Expr result;
        if (!cs.type) {
            result = mkApp(mkConst(d.name), params);
        } else {
            TermPtr cur = cs.type;
            while (true) {
                if (cur->kind == Term::Kind::Pi) {
                    for (const auto& b : cur->binders) {
                        if (!b.type) throw TypeError(c.name + ": binder '" + b.name + "' needs a type");
                        addArg(b.name, el.type(b.type), b.name != "_");
                    }
                    cur = cur->args[0];
                } else if (cur->kind == Term::Kind::Arrow) {
                    addArg("a", el.type(cur->args[0]), false);
                    cur = cur->args[1];
                } else if (cur->kind == Term::Kind::Not) {
                    addArg("a", el.type(cur->args[0]), false);
                    result = mkConst(prelude::kFalse);
                    break;
                } else {
                    result = el.type(cur);
                    break;
                }
            }
        }
        const Expr& head = getAppFn(result);
        std::vector<Expr> rargs = getAppArgs(result);
        if (!head.isConst() || head.constName() != d.name)
            throw ParameterMismatchError(c.name + ": constructor must return '" + d.name + "'");
        if (rargs.size() != np + ni)
            throw ParameterMismatchError(c.name + ": '" + d.name + "' must be fully applied in the return type");
        for (std::size_t i = 0; i < np; ++i)
            if (!(rargs[i] == params[i]))
                throw ParameterMismatchError(c.name + ": parameter " + std::to_string(i) +
                                             " must be passed unchanged in the return type");
        std::vector<FVarId> ids;
        for (const auto& x : all) ids.push_back(x.fvarId());
        for (std::size_t i = np; i < rargs.size(); ++i) c.indexInstantiations.push_back(abstractFVars(rargs[i], ids));
        d.constructors.push_back(std::move(c));
    }
    return d;
}

}  // namespace indtac
