/*
Copyright (c) 2026 The indtac Authors. All rights reserved.
Released under Apache 2.0 license as described in the file LICENSE.
*/
#include "indtac/expr.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

namespace indtac {

namespace {

std::size_t mixHash(std::size_t h, std::size_t v) {
    return h ^ (v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2));
}

Expr mkNode(ExprNode node) {
    return Expr(std::make_shared<const ExprNode>(std::move(node)));
}

}  // namespace

ExprKind Expr::kind() const { return node_->kind; }
const Name& Expr::constName() const { assert(isConst()); return node_->name; }
std::uint32_t Expr::bvarIdx() const { assert(isBVar()); return static_cast<std::uint32_t>(node_->idx); }
FVarId Expr::fvarId() const { assert(isFVar()); return FVarId{node_->idx}; }
MetaId Expr::metaId() const { assert(isMeta()); return MetaId{node_->idx}; }
const Expr& Expr::appFn() const { assert(isApp()); return node_->a; }
const Expr& Expr::appArg() const { assert(isApp()); return node_->b; }
const std::string& Expr::binderName() const { assert(isBinder()); return node_->name; }
const Expr& Expr::binderType() const { assert(isBinder()); return node_->a; }
const Expr& Expr::binderBody() const { assert(isBinder()); return node_->b; }
std::uint32_t Expr::looseBVarRange() const { return node_->looseRange; }
bool Expr::hasFVar() const { return node_->hasFVar; }
bool Expr::hasMeta() const { return node_->hasMeta; }
std::size_t Expr::hash() const { return node_->hash; }

bool operator==(const Expr& a, const Expr& b) {
    if (a.node_ == b.node_) return true;
    if (!a.node_ || !b.node_) return false;
    if (a.hash() != b.hash() || a.kind() != b.kind()) return false;
    switch (a.kind()) {
    case ExprKind::Sort: return true;
    case ExprKind::Const: return a.constName() == b.constName();
    case ExprKind::BVar:
    case ExprKind::FVar:
    case ExprKind::Meta: return a.node_->idx == b.node_->idx;
    case ExprKind::App: return a.appFn() == b.appFn() && a.appArg() == b.appArg();
    case ExprKind::Lam:
    case ExprKind::Pi: return a.binderType() == b.binderType() && a.binderBody() == b.binderBody();
    }
    return false;
}

Expr mkSort() {
    static const Expr sort = mkNode(ExprNode{.kind = ExprKind::Sort, .hash = 17});
    return sort;
}

Expr mkConst(Name name) {
    std::size_t h = mixHash(31, std::hash<std::string>{}(name));
    return mkNode(ExprNode{.kind = ExprKind::Const, .name = std::move(name), .hash = h});
}

Expr mkBVar(std::uint32_t idx) {
    return mkNode(ExprNode{.kind = ExprKind::BVar, .idx = idx, .looseRange = idx + 1, .hash = mixHash(37, idx)});
}

Expr mkFVar(FVarId id) {
    return mkNode(ExprNode{.kind = ExprKind::FVar, .idx = id.value, .hasFVar = true, .hash = mixHash(41, id.value)});
}

Expr mkMeta(MetaId id) {
    return mkNode(ExprNode{.kind = ExprKind::Meta, .idx = id.value, .hasMeta = true, .hash = mixHash(43, id.value)});
}

Expr mkApp(Expr fn, Expr arg) {
    ExprNode n{.kind = ExprKind::App};
    n.looseRange = std::max(fn.looseBVarRange(), arg.looseBVarRange());
    n.hasFVar = fn.hasFVar() || arg.hasFVar();
    n.hasMeta = fn.hasMeta() || arg.hasMeta();
    n.hash = mixHash(mixHash(47, fn.hash()), arg.hash());
    n.a = std::move(fn);
    n.b = std::move(arg);
    return mkNode(std::move(n));
}

Expr mkApp(Expr fn, std::span<const Expr> args) {
    for (const auto& a : args) fn = mkApp(std::move(fn), a);
    return fn;
}

Expr mkApp(Expr fn, std::initializer_list<Expr> args) {
    return mkApp(std::move(fn), std::span<const Expr>(args.begin(), args.size()));
}

static Expr mkBinder(ExprKind k, std::string hint, Expr type, Expr body) {
    ExprNode n{.kind = k, .name = std::move(hint)};
    std::uint32_t bodyRange = body.looseBVarRange() > 0 ? body.looseBVarRange() - 1 : 0;
    n.looseRange = std::max(type.looseBVarRange(), bodyRange);
    n.hasFVar = type.hasFVar() || body.hasFVar();
    n.hasMeta = type.hasMeta() || body.hasMeta();
    n.hash = mixHash(mixHash(k == ExprKind::Pi ? 53 : 59, type.hash()), body.hash());
    n.a = std::move(type);
    n.b = std::move(body);
    return mkNode(std::move(n));
}

Expr mkLambda(std::string hint, Expr type, Expr body) {
    return mkBinder(ExprKind::Lam, std::move(hint), std::move(type), std::move(body));
}

Expr mkPi(std::string hint, Expr type, Expr body) {
    return mkBinder(ExprKind::Pi, std::move(hint), std::move(type), std::move(body));
}

Expr mkArrow(Expr a, Expr b) {
    return mkPi("", std::move(a), liftLooseBVars(b, 1));
}

const Expr& getAppFn(const Expr& e) {
    const Expr* cur = &e;
    while (cur->isApp()) cur = &cur->appFn();
    return *cur;
}

std::vector<Expr> getAppArgs(const Expr& e) {
    std::vector<Expr> args;
    const Expr* cur = &e;
    while (cur->isApp()) {
        args.push_back(cur->appArg());
        cur = &cur->appFn();
    }
    std::reverse(args.begin(), args.end());
    return args;
}

std::size_t getAppNumArgs(const Expr& e) {
    std::size_t n = 0;
    const Expr* cur = &e;
    while (cur->isApp()) {
        ++n;
        cur = &cur->appFn();
    }
    return n;
}

bool isConstApp(const Expr& e, const Name& head, std::size_t nargs) {
    const Expr& fn = getAppFn(e);
    return fn.isConst() && fn.constName() == head && getAppNumArgs(e) == nargs;
}

namespace {

struct ReplaceCache {
    std::unordered_map<const ExprNode*, std::unordered_map<std::uint32_t, Expr>> map;
};

Expr replaceRec(const Expr& e, std::uint32_t depth,
                const std::function<std::optional<Expr>(const Expr&, std::uint32_t)>& fn,
                ReplaceCache& cache) {
    if (auto r = fn(e, depth)) return *r;
    auto& slot = cache.map[e.raw()];
    if (auto it = slot.find(depth); it != slot.end()) return it->second;
    Expr result;
    switch (e.kind()) {
    case ExprKind::App: {
        Expr f = replaceRec(e.appFn(), depth, fn, cache);
        Expr a = replaceRec(e.appArg(), depth, fn, cache);
        result = (f.raw() == e.appFn().raw() && a.raw() == e.appArg().raw()) ? e : mkApp(f, a);
        break;
    }
    case ExprKind::Lam:
    case ExprKind::Pi: {
        Expr t = replaceRec(e.binderType(), depth, fn, cache);
        Expr b = replaceRec(e.binderBody(), depth + 1, fn, cache);
        if (t.raw() == e.binderType().raw() && b.raw() == e.binderBody().raw())
            result = e;
        else
            result = e.isPi() ? mkPi(e.binderName(), t, b) : mkLambda(e.binderName(), t, b);
        break;
    }
    default: result = e;
    }
    cache.map[e.raw()][depth] = result;
    return result;
}

}  // namespace

Expr replace(const Expr& e, const std::function<std::optional<Expr>(const Expr&, std::uint32_t)>& fn) {
    ReplaceCache cache;
    return replaceRec(e, 0, fn, cache);
}

void forEach(const Expr& e, const std::function<bool(const Expr&, std::uint32_t)>& fn) {
    std::unordered_set<const ExprNode*> seen;
    std::function<void(const Expr&, std::uint32_t)> go = [&](const Expr& x, std::uint32_t depth) {
        if (!x.hasFVar() && !x.hasMeta() && x.looseBVarRange() == 0 && (x.isApp() || x.isBinder())) {
            // closed, constant-only subterms are still visited, but only once
            if (!seen.insert(x.raw()).second) return;
        }
        if (!fn(x, depth)) return;
        switch (x.kind()) {
        case ExprKind::App:
            go(x.appFn(), depth);
            go(x.appArg(), depth);
            break;
        case ExprKind::Lam:
        case ExprKind::Pi:
            go(x.binderType(), depth);
            go(x.binderBody(), depth + 1);
            break;
        default: break;
        }
    };
    go(e, 0);
}

Expr liftLooseBVars(const Expr& e, std::uint32_t amount) {
    if (amount == 0 || e.looseBVarRange() == 0) return e;
    return replace(e, [&](const Expr& x, std::uint32_t depth) -> std::optional<Expr> {
        if (x.looseBVarRange() <= depth) return x;
        if (x.isBVar()) return mkBVar(x.bvarIdx() + amount);
        return std::nullopt;
    });
}

Expr instantiate(const Expr& body, std::span<const Expr> subst) {
    if (subst.empty() || body.looseBVarRange() == 0) return body;
    const auto n = static_cast<std::uint32_t>(subst.size());
    return replace(body, [&](const Expr& x, std::uint32_t depth) -> std::optional<Expr> {
        if (x.looseBVarRange() <= depth) return x;
        if (x.isBVar()) {
            std::uint32_t i = x.bvarIdx();
            if (i < depth) return x;
            if (i - depth < n) return liftLooseBVars(subst[i - depth], depth);
            return mkBVar(i - n);
        }
        return std::nullopt;
    });
}

Expr instantiate1(const Expr& body, const Expr& value) {
    return instantiate(body, std::span<const Expr>(&value, 1));
}

Expr instantiateRev(const Expr& body, std::span<const Expr> subst) {
    std::vector<Expr> rev(subst.rbegin(), subst.rend());
    return instantiate(body, rev);
}

Expr abstractFVars(const Expr& e, std::span<const FVarId> fvars) {
    if (fvars.empty() || !e.hasFVar()) return e;
    const auto n = static_cast<std::uint32_t>(fvars.size());
    return replace(e, [&](const Expr& x, std::uint32_t depth) -> std::optional<Expr> {
        if (!x.hasFVar()) return x;
        if (x.isFVar()) {
            for (std::uint32_t i = n; i-- > 0;) {
                if (fvars[i] == x.fvarId()) return mkBVar(depth + (n - 1 - i));
            }
            return x;
        }
        return std::nullopt;
    });
}

Expr abstract1(const Expr& e, FVarId fvar) {
    return abstractFVars(e, std::span<const FVarId>(&fvar, 1));
}

Expr headBeta(const Expr& e) {
    if (!e.isApp() || !getAppFn(e).isLambda()) return e;
    std::vector<Expr> args = getAppArgs(e);
    Expr fn = getAppFn(e);
    std::size_t i = 0;
    while (fn.isLambda() && i < args.size()) {
        fn = instantiate1(fn.binderBody(), args[i]);
        ++i;
    }
    return headBeta(mkApp(fn, std::span<const Expr>(args).subspan(i)));
}

Expr betaNormalize(const Expr& e) {
    return replace(e, [](const Expr& x, std::uint32_t) -> std::optional<Expr> {
        if (x.isApp() && getAppFn(x).isLambda()) {
            Expr r = headBeta(x);
            return betaNormalize(r);
        }
        return std::nullopt;
    });
}

bool occursFVar(const Expr& e, FVarId id) {
    if (!e.hasFVar()) return false;
    bool found = false;
    forEach(e, [&](const Expr& x, std::uint32_t) {
        if (found || !x.hasFVar()) return false;
        if (x.isFVar() && x.fvarId() == id) found = true;
        return !found;
    });
    return found;
}

bool hasLooseBVar(const Expr& e, std::uint32_t i) {
    if (e.looseBVarRange() <= i) return false;
    switch (e.kind()) {
    case ExprKind::BVar: return e.bvarIdx() == i;
    case ExprKind::App: return hasLooseBVar(e.appFn(), i) || hasLooseBVar(e.appArg(), i);
    case ExprKind::Lam:
    case ExprKind::Pi: return hasLooseBVar(e.binderType(), i) || hasLooseBVar(e.binderBody(), i + 1);
    default: return false;
    }
}

bool occursMeta(const Expr& e, MetaId id) {
    if (!e.hasMeta()) return false;
    bool found = false;
    forEach(e, [&](const Expr& x, std::uint32_t) {
        if (found || !x.hasMeta()) return false;
        if (x.isMeta() && x.metaId() == id) found = true;
        return !found;
    });
    return found;
}

bool occursConst(const Expr& e, const Name& name) {
    bool found = false;
    forEach(e, [&](const Expr& x, std::uint32_t) {
        if (found) return false;
        if (x.isConst() && x.constName() == name) found = true;
        return !found;
    });
    return found;
}

Expr replaceFVar(const Expr& e, FVarId id, const Expr& value) {
    if (!e.hasFVar()) return e;
    return replace(e, [&](const Expr& x, std::uint32_t depth) -> std::optional<Expr> {
        if (!x.hasFVar()) return x;
        if (x.isFVar()) return x.fvarId() == id ? liftLooseBVars(value, depth) : x;
        return std::nullopt;
    });
}

Expr replaceTerm(const Expr& e, const Expr& target, const Expr& value) {
    return replace(e, [&](const Expr& x, std::uint32_t depth) -> std::optional<Expr> {
        if (x.looseBVarRange() == 0 && x == target) return liftLooseBVars(value, depth);
        return std::nullopt;
    });
}

std::vector<FVarId> collectFVars(const Expr& e) {
    std::vector<FVarId> out;
    forEach(e, [&](const Expr& x, std::uint32_t) {
        if (!x.hasFVar()) return false;
        if (x.isFVar() && std::find(out.begin(), out.end(), x.fvarId()) == out.end()) out.push_back(x.fvarId());
        return true;
    });
    return out;
}

std::vector<MetaId> collectMetas(const Expr& e) {
    std::vector<MetaId> out;
    forEach(e, [&](const Expr& x, std::uint32_t) {
        if (!x.hasMeta()) return false;
        if (x.isMeta() && std::find(out.begin(), out.end(), x.metaId()) == out.end()) out.push_back(x.metaId());
        return true;
    });
    return out;
}

std::size_t exprSize(const Expr& e) {
    switch (e.kind()) {
    case ExprKind::App: return 1 + exprSize(e.appFn()) + exprSize(e.appArg());
    case ExprKind::Lam:
    case ExprKind::Pi: return 1 + exprSize(e.binderType()) + exprSize(e.binderBody());
    default: return 1;
    }
}

std::size_t countHeads(const Expr& e, const std::function<bool(const Name&)>& isCtor) {
    std::size_t n = 0;
    const Expr& fn = getAppFn(e);
    if (fn.isConst() && isCtor(fn.constName())) ++n;
    switch (e.kind()) {
    case ExprKind::App:
        // count the head once per spine, then recurse into the arguments
        for (const Expr& a : getAppArgs(e)) n += countHeads(a, isCtor);
        if (!fn.isConst()) n += countHeads(fn, isCtor);
        break;
    case ExprKind::Lam:
    case ExprKind::Pi:
        n += countHeads(e.binderType(), isCtor) + countHeads(e.binderBody(), isCtor);
        break;
    default: break;
    }
    return n;
}

std::string debugString(const Expr& e) {
    if (e.isNull()) return "<null>";
    std::ostringstream os;
    switch (e.kind()) {
    case ExprKind::Sort: os << "Sort"; break;
    case ExprKind::Const: os << e.constName(); break;
    case ExprKind::BVar: os << "#" << e.bvarIdx(); break;
    case ExprKind::FVar: os << "%" << e.fvarId().value; break;
    case ExprKind::Meta: os << "?" << e.metaId().value; break;
    case ExprKind::App: os << "(" << debugString(e.appFn()) << " " << debugString(e.appArg()) << ")"; break;
    case ExprKind::Lam:
        os << "(fun " << e.binderName() << " : " << debugString(e.binderType()) << ", " << debugString(e.binderBody()) << ")";
        break;
    case ExprKind::Pi:
        os << "(Pi " << e.binderName() << " : " << debugString(e.binderType()) << ", " << debugString(e.binderBody()) << ")";
        break;
    }
    return os.str();
}

}  // namespace indtac
