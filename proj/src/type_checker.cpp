/*
Copyright (c) 2026 The indtac Authors. All rights reserved.
Released under Apache 2.0 license as described in the file LICENSE.
*/
#include "indtac/type_checker.hpp"

#include <atomic>
#include <ostream>

#include "indtac/errors.hpp"

namespace indtac {

namespace {
std::atomic<std::ostream*> g_transparencyLog{nullptr};
constexpr std::uint64_t kTemporaryBase = 1ULL << 62;
}  // namespace

void setTransparencyLog(std::ostream* os) { g_transparencyLog.store(os); }

TypeChecker::TypeChecker(const Environment& env, const LocalContext& lctx, const MetaContext* mctx)
    : env_(env), lctx_(lctx), mctx_(mctx), nextLocal_(kTemporaryBase) {}

const Expr* TypeChecker::lookupFVarType(FVarId id) const {
    if (auto it = locals_.find(id); it != locals_.end()) return &it->second;
    if (auto* h = lctx_.find(id)) return &h->type;
    return nullptr;
}

Expr TypeChecker::pushLocal(const std::string&, const Expr& type) {
    FVarId id{nextLocal_++};
    locals_.emplace(id, type);
    localStack_.push_back(id);
    return mkFVar(id);
}

void TypeChecker::popLocal() {
    locals_.erase(localStack_.back());
    localStack_.pop_back();
}

std::optional<Expr> TypeChecker::unfoldDefinition(const Expr& e, Transparency t) const {
    const Expr& fn = getAppFn(e);
    if (!fn.isConst()) return std::nullopt;
    const Declaration* d = env_.find(fn.constName());
    if (!d || !d->value || d->kind != DeclKind::Definition) return std::nullopt;
    if (t == Transparency::Reducible && d->reducibility != Transparency::Reducible) return std::nullopt;
    std::vector<Expr> args = getAppArgs(e);
    return headBeta(mkApp(*d->value, args));
}

std::optional<Expr> TypeChecker::reduceRecursor(const Expr& e, Transparency t) {
    const Expr& fn = getAppFn(e);
    if (!fn.isConst()) return std::nullopt;
    const InductiveDecl* ind = env_.findRecursor(fn.constName());
    if (!ind) return std::nullopt;
    const std::size_t np = ind->params.size();
    const std::size_t nm = ind->constructors.size();
    const std::size_t ni = ind->indices.size();
    const std::size_t majorIdx = np + 1 + nm + ni;
    std::vector<Expr> args = getAppArgs(e);
    if (args.size() <= majorIdx) return std::nullopt;
    Expr major = whnf(args[majorIdx], t);
    const Expr& cfn = getAppFn(major);
    if (!cfn.isConst()) return std::nullopt;
    auto ctorInfo = env_.findConstructor(cfn.constName());
    if (!ctorInfo || ctorInfo->first->name != ind->name) return std::nullopt;
    const Constructor& ctor = ind->constructors[ctorInfo->second];
    std::vector<Expr> cargs = getAppArgs(major);
    if (cargs.size() != np + ctor.args.size()) return std::nullopt;

    std::span<const Expr> params(args.data(), np);
    std::vector<Expr> fields(cargs.begin() + static_cast<std::ptrdiff_t>(np), cargs.end());
    Expr result = args[np + 1 + ctorInfo->second];
    std::vector<Expr> minorArgs = fields;
    // IHs follow all constructor arguments
    std::vector<Expr> prefix(params.begin(), params.end());
    for (std::size_t k = 0; k < ctor.args.size(); ++k) {
        if (ctor.args[k].recursive) {
            Expr argType = instantiateRev(ctor.args[k].type, prefix);
            std::vector<Expr> targs = getAppArgs(argType);
            std::vector<Expr> ih(args.begin(), args.begin() + static_cast<std::ptrdiff_t>(np + 1 + nm));
            for (std::size_t i = np; i < targs.size(); ++i) ih.push_back(targs[i]);
            ih.push_back(fields[k]);
            minorArgs.push_back(mkApp(fn, ih));
        }
        prefix.push_back(fields[k]);
    }
    result = mkApp(result, minorArgs);
    std::span<const Expr> extra(args.data() + majorIdx + 1, args.size() - majorIdx - 1);
    return headBeta(mkApp(result, extra));
}

Expr TypeChecker::whnfCore(const Expr& e, Transparency t) {
    Expr cur = e;
    while (true) {
        if (cur.isApp()) {
            const Expr& fn = getAppFn(cur);
            if (fn.isLambda()) {
                cur = headBeta(cur);
                continue;
            }
            if (fn.isMeta() && mctx_) {
                if (auto a = mctx_->assignment(fn.metaId())) {
                    cur = headBeta(mkApp(*a, getAppArgs(cur)));
                    continue;
                }
            }
            if (auto r = reduceRecursor(cur, t)) {
                cur = *r;
                continue;
            }
        } else if (cur.isMeta() && mctx_) {
            if (auto a = mctx_->assignment(cur.metaId())) {
                cur = *a;
                continue;
            }
        }
        return cur;
    }
}

Expr TypeChecker::whnf(const Expr& e, Transparency t) {
    Expr cur = whnfCore(e, t);
    while (auto u = unfoldDefinition(cur, t)) cur = whnfCore(*u, t);
    return cur;
}

bool TypeChecker::isDefEq(const Expr& a, const Expr& b, Transparency t) {
    if (auto* os = g_transparencyLog.load()) *os << "[defeq " << toString(t) << "]\n";
    return defEq(a, b, t);
}

bool TypeChecker::defEqArgs(const Expr& a, const Expr& b, Transparency t) {
    std::vector<Expr> as = getAppArgs(a);
    std::vector<Expr> bs = getAppArgs(b);
    if (as.size() != bs.size()) return false;
    for (std::size_t i = 0; i < as.size(); ++i)
        if (!defEq(as[i], bs[i], t)) return false;
    return true;
}

bool TypeChecker::defEqBinders(const Expr& a, const Expr& b, Transparency t) {
    if (!defEq(a.binderType(), b.binderType(), t)) return false;
    Expr x = pushLocal(a.binderName(), a.binderType());
    bool r = defEq(instantiate1(a.binderBody(), x), instantiate1(b.binderBody(), x), t);
    popLocal();
    return r;
}

bool TypeChecker::defEq(const Expr& a0, const Expr& b0, Transparency t) {
    if (a0 == b0) return true;
    Expr a = whnfCore(a0, t);
    Expr b = whnfCore(b0, t);
    if (a == b) return true;
    if (a.isSort() && b.isSort()) return true;
    if (a.kind() == b.kind() && a.isBinder()) return defEqBinders(a, b, t);

    // lazy delta: try argument-wise comparison before unfolding a shared head
    while (true) {
        const Expr& fa = getAppFn(a);
        const Expr& fb = getAppFn(b);
        if (fa.isConst() && fb.isConst() && fa.constName() == fb.constName() && defEqArgs(a, b, t)) return true;
        auto ua = unfoldDefinition(a, t);
        auto ub = unfoldDefinition(b, t);
        if (!ua && !ub) break;
        if (ua) a = whnfCore(*ua, t);
        if (ub) b = whnfCore(*ub, t);
        if (a == b) return true;
    }

    if (a.kind() == b.kind()) {
        switch (a.kind()) {
        case ExprKind::Sort: return true;
        case ExprKind::Const: return a.constName() == b.constName();
        case ExprKind::FVar: return a.fvarId() == b.fvarId();
        case ExprKind::Meta: return a.metaId() == b.metaId();
        case ExprKind::Lam:
        case ExprKind::Pi: return defEqBinders(a, b, t);
        case ExprKind::App: {
            const Expr& fa = getAppFn(a);
            const Expr& fb = getAppFn(b);
            if (getAppNumArgs(a) == getAppNumArgs(b) && defEq(fa, fb, t) && defEqArgs(a, b, t)) return true;
            break;
        }
        case ExprKind::BVar: return false;
        }
    }
    // eta
    if (a.isLambda() && !b.isLambda()) {
        Expr x = pushLocal(a.binderName(), a.binderType());
        bool r = defEq(instantiate1(a.binderBody(), x), mkApp(b, x), t);
        popLocal();
        return r;
    }
    if (b.isLambda() && !a.isLambda()) {
        Expr x = pushLocal(b.binderName(), b.binderType());
        bool r = defEq(mkApp(a, x), instantiate1(b.binderBody(), x), t);
        popLocal();
        return r;
    }
    return false;
}

void TypeChecker::ensureSort(const Expr& type) {
    if (!whnf(type, Transparency::All).isSort()) throw TypeError("type expected, got " + debugString(type));
}

Expr TypeChecker::infer(const Expr& e) {
    if (auto it = inferCache_.find(e); it != inferCache_.end()) return it->second;
    Expr r = inferCore(e);
    inferCache_.emplace(e, r);
    return r;
}

Expr TypeChecker::inferCore(const Expr& e) {
    switch (e.kind()) {
    case ExprKind::BVar: throw TypeError("expression is not locally closed");
    case ExprKind::Sort: return mkSort();
    case ExprKind::Const: {
        const Declaration* d = env_.find(e.constName());
        if (!d) throw TypeError("unknown constant '" + e.constName() + "'");
        return d->type;
    }
    case ExprKind::FVar: {
        if (auto* ty = lookupFVarType(e.fvarId())) return *ty;
        throw TypeError("unknown free variable %" + std::to_string(e.fvarId().value));
    }
    case ExprKind::Meta: {
        if (mctx_) {
            if (auto* entry = mctx_->find(e.metaId())) return entry->type;
        }
        throw TypeError("unknown metavariable ?" + std::to_string(e.metaId().value));
    }
    case ExprKind::App: {
        Expr fnType = infer(getAppFn(e));
        for (const Expr& arg : getAppArgs(e)) {
            Expr pi = whnf(fnType, Transparency::All);
            if (!pi.isPi()) throw TypeError("function expected in application " + debugString(e));
            Expr argType = infer(arg);
            if (!defEq(argType, pi.binderType(), Transparency::All))
                throw TypeError("argument type mismatch: " + debugString(arg) + " : " + debugString(argType) +
                                " but expected " + debugString(pi.binderType()));
            fnType = instantiate1(pi.binderBody(), arg);
        }
        return fnType;
    }
    case ExprKind::Lam: {
        ensureSort(infer(e.binderType()));
        Expr x = pushLocal(e.binderName(), e.binderType());
        Expr bodyType = infer(instantiate1(e.binderBody(), x));
        popLocal();
        return mkPi(e.binderName(), e.binderType(), abstract1(bodyType, x.fvarId()));
    }
    case ExprKind::Pi: {
        ensureSort(infer(e.binderType()));
        Expr x = pushLocal(e.binderName(), e.binderType());
        ensureSort(infer(instantiate1(e.binderBody(), x)));
        popLocal();
        return mkSort();
    }
    }
    throw TypeError("unreachable");
}

void TypeChecker::check(const Expr& e, const Expr& expected) {
    Expr ty = infer(e);
    if (!defEq(ty, expected, Transparency::All))
        throw TypeError("type mismatch: term has type " + debugString(ty) + " but is expected to have type " +
                        debugString(expected));
}

}  // namespace indtac
