/*
Copyright (c) 2026 The indtac Authors. All rights reserved.
Released under Apache 2.0 license as described in the file LICENSE.
*/
#include "indtac/printer.hpp"

#include "indtac/inductive.hpp"

namespace indtac {

namespace {

constexpr int kMaxPrec = 1024;
constexpr int kArgPrec = kMaxPrec + 1;

std::string paren(std::string s, bool p) { return p ? "(" + s + ")" : s; }

std::optional<unsigned> natLiteral(const Expr& e) {
    unsigned n = 0;
    Expr cur = e;
    while (true) {
        if (cur.isConst() && cur.constName() == prelude::kZero) return n;
        if (!cur.isApp() || !cur.appFn().isConst() || cur.appFn().constName() != prelude::kSucc) return std::nullopt;
        ++n;
        cur = cur.appArg();
    }
}

}  // namespace

Printer::Printer(const Environment& env, const LocalContext& lctx, PrintMode mode)
    : env_(env), lctx_(lctx), mode_(mode) {
    const auto& hs = lctx.hyps();
    for (std::size_t i = 0; i < hs.size(); ++i) {
        int later = 0;
        for (std::size_t j = i + 1; j < hs.size(); ++j)
            if (hs[j].name == hs[i].name) ++later;
        std::string n = hs[i].name;
        if (later == 1) n += "✝";
        if (later > 1) n += "✝" + std::to_string(later - 1);
        names_[hs[i].id] = n;
    }
}

std::string Printer::hypName(FVarId id) const {
    auto it = names_.find(id);
    return it == names_.end() ? "%" + std::to_string(id.value) : it->second;
}

std::string Printer::constName(const Name& n) const { return n == prelude::kNat ? "ℕ" : env_.shortName(n); }

std::string Printer::print(const Expr& e) const {
    std::vector<std::string> bound;
    return go(e, 0, bound);
}

std::string Printer::pickName(const Expr& b, const std::vector<std::string>& bound) const {
    std::string base = b.binderName().empty() ? "x" : b.binderName();
    auto occurs = [&](const std::string& c) {
        bool found = false;
        forEach(b.binderBody(), [&](const Expr& s, std::uint32_t depth) {
            if (found) return false;
            if (s.isFVar() && hypName(s.fvarId()) == c) found = true;
            if (s.isBVar() && s.bvarIdx() > depth) {
                std::size_t outer = s.bvarIdx() - depth - 1;
                if (outer < bound.size() && bound[bound.size() - 1 - outer] == c) found = true;
            }
            return !found;
        });
        return found;
    };
    std::string c = base;
    while (occurs(c)) c += "'";
    return c;
}

std::string Printer::binder(const Expr& e, int prec, std::vector<std::string>& bound) const {
    const bool lam = e.isLambda();
    if (!lam && !hasLooseBVar(e.binderBody(), 0)) {
        std::string dom = go(e.binderType(), 26, bound);
        bound.push_back("_");
        std::string cod = go(e.binderBody(), 0, bound);
        bound.pop_back();
        return paren(dom + " → " + cod, prec > 25);
    }
    std::string out = lam ? "λ" : "∀";
    std::size_t pushed = 0;
    Expr cur = e;
    // group consecutive binders of the same kind (dependent ones, for ∀)
    while (cur.kind() == e.kind() && (lam || hasLooseBVar(cur.binderBody(), 0))) {
        bool used = hasLooseBVar(cur.binderBody(), 0);
        std::string name = (lam && !used) ? "_" : pickName(cur, bound);
        if (mode_ == PrintMode::Full)
            out += " (" + name + " : " + go(cur.binderType(), 0, bound) + ")";
        else
            out += " " + name;
        bound.push_back(name);
        ++pushed;
        cur = cur.binderBody();
    }
    out += ", " + go(cur, 0, bound);
    bound.resize(bound.size() - pushed);
    return paren(out, prec > 0);
}

std::string Printer::app(const Expr& e, int prec, std::vector<std::string>& bound) const {
    if (auto n = natLiteral(e)) return std::to_string(*n);
    const Expr& fn = getAppFn(e);
    std::vector<Expr> args = getAppArgs(e);
    if (fn.isConst()) {
        const Name& h = fn.constName();
        auto infix = [&](const Expr& a, const Expr& b, const char* op, int p, int lp, int rp) {
            return paren(go(a, lp, bound) + " " + op + " " + go(b, rp, bound), prec > p);
        };
        if (h == prelude::kEq && args.size() == 3) return infix(args[1], args[2], "=", 50, 51, 51);
        if (h == prelude::kHeq && args.size() == 4) return infix(args[1], args[3], "==", 50, 51, 51);
        if (h == prelude::kLt && args.size() == 2) return infix(args[0], args[1], "<", 50, 51, 51);
        if (h == prelude::kAdd && args.size() == 2) return infix(args[0], args[1], "+", 65, 65, 66);
        if (h == prelude::kProd && args.size() == 2) return infix(args[0], args[1], "×", 35, 36, 35);
        if (h == prelude::kProdMk && args.size() == 4)
            return "(" + go(args[2], 0, bound) + ", " + go(args[3], 0, bound) + ")";
    }
    std::string out = go(fn, kMaxPrec, bound);
    for (const auto& a : args) out += " " + go(a, kArgPrec, bound);
    return paren(out, prec > kMaxPrec);
}

std::string Printer::go(const Expr& e, int prec, std::vector<std::string>& bound) const {
    switch (e.kind()) {
    case ExprKind::Sort: return "Type";
    case ExprKind::Const:
        if (auto n = natLiteral(e)) return std::to_string(*n);
        return constName(e.constName());
    case ExprKind::BVar: {
        std::uint32_t i = e.bvarIdx();
        return i < bound.size() ? bound[bound.size() - 1 - i] : "#" + std::to_string(i);
    }
    case ExprKind::FVar: return hypName(e.fvarId());
    case ExprKind::Meta: return "?m" + std::to_string(e.metaId().value);
    case ExprKind::App: return app(e, prec, bound);
    case ExprKind::Lam:
    case ExprKind::Pi: return binder(e, prec, bound);
    }
    return "?";
}

std::string printExpr(const Environment& env, const LocalContext& lctx, const Expr& e, PrintMode mode) {
    return Printer(env, lctx, mode).print(e);
}

std::string printGoal(const Environment& env, const LocalContext& lctx, const Expr& target) {
    Printer p(env, lctx);
    std::string out;
    const auto& hs = lctx.hyps();
    for (std::size_t i = 0; i < hs.size();) {
        std::string type = p.print(hs[i].type);
        std::string names = p.hypName(hs[i].id);
        std::size_t j = i + 1;
        while (j < hs.size() && p.print(hs[j].type) == type) names += " " + p.hypName(hs[j++].id);
        out += names + " : " + type + "\n";
        i = j;
    }
    out += "⊢ " + p.print(target) + "\n";
    return out;
}

}  // namespace indtac
