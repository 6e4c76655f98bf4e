/*
Copyright (c) 2026 The indtac Authors. All rights reserved.
Released under Apache 2.0 license as described in the file LICENSE.
*/
#pragma once
#include <iosfwd>
#include <optional>
#include <unordered_map>
#include <vector>

#include "indtac/environment.hpp"
#include "indtac/expr.hpp"
#include "indtac/local_context.hpp"

namespace indtac {

/// Route every public isDefEq call to `os` (nullptr disables).
void setTransparencyLog(std::ostream* os);

/// Reduction, definitional equality and type inference for one local
/// context. Binders are opened with temporary FVars private to the checker.
class TypeChecker {
public:
    TypeChecker(const Environment& env, const LocalContext& lctx, const MetaContext* mctx = nullptr);

    Expr whnf(const Expr& e, Transparency t);
    /// Beta, iota and meta instantiation, no delta at the head.
    Expr whnfCore(const Expr& e, Transparency t);
    bool isDefEq(const Expr& a, const Expr& b, Transparency t);
    Expr infer(const Expr& e);
    /// Throws TypeError unless infer(e) is defeq to `expected` at All.
    void check(const Expr& e, const Expr& expected);
    /// whnf at All; throws TypeError unless the result is a Sort.
    void ensureSort(const Expr& type);

    const Environment& env() const { return env_; }
    const Expr* lookupFVarType(FVarId id) const;

    /// Opens a binder with a fresh FVar; pair with popLocal.
    Expr pushLocal(const std::string& name, const Expr& type);
    void popLocal();

    /// Unfold a constant-headed application one step, if allowed at t.
    std::optional<Expr> unfoldDefinition(const Expr& e, Transparency t) const;
    std::optional<Expr> reduceRecursor(const Expr& e, Transparency t);

private:
    bool defEq(const Expr& a, const Expr& b, Transparency t);
    bool defEqArgs(const Expr& a, const Expr& b, Transparency t);
    bool defEqBinders(const Expr& a, const Expr& b, Transparency t);
    Expr inferCore(const Expr& e);

    const Environment& env_;
    const LocalContext& lctx_;
    const MetaContext* mctx_;
    std::unordered_map<FVarId, Expr> locals_;
    std::vector<FVarId> localStack_;
    std::uint64_t nextLocal_;
    std::unordered_map<Expr, Expr, ExprHash> inferCache_;
};

}  // namespace indtac
