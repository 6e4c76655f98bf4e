/*
Copyright (c) 2026 The indtac Authors. All rights reserved.
Released under Apache 2.0 license as described in the file LICENSE.
*/
#pragma once
#include <optional>
#include <utility>
#include <vector>

#include "indtac/environment.hpp"
#include "indtac/local_context.hpp"
#include "indtac/syntax.hpp"
#include "indtac/type_checker.hpp"

namespace indtac {

/// Bidirectional elaboration of surface terms against a local context.
/// Binders are opened as locals of a private copy of the context.
class Elaborator {
public:
    Elaborator(const Environment& env, const LocalContext& lctx, const MetaContext* mctx = nullptr);

    /// Returns the term and its type.
    std::pair<Expr, Expr> infer(const TermPtr& t);
    Expr against(const TermPtr& t, const Expr& expected);
    Expr type(const TermPtr& t);

    /// Opens typed binders as locals; untyped binders are an error.
    std::vector<Expr> pushBinders(const std::vector<SurfaceBinder>& bs);
    Expr pushLocal(const std::string& name, const Expr& type);
    Expr pis(const std::vector<Expr>& fvars, const Expr& body) const;
    Expr lambdas(const std::vector<Expr>& fvars, const Expr& body) const;

    const LocalContext& lctx() const { return lctx_; }
    TypeChecker& checker() { return tc_; }

private:
    std::pair<Expr, Expr> go(const TermPtr& t, const std::optional<Expr>& expected);
    std::pair<Expr, Expr> ident(const Term& t);
    Expr bindersTerm(const Term& t, const std::optional<Expr>& expected, Expr* typeOut);
    [[noreturn]] void fail(const Term& t, const std::string& msg) const;

    const Environment& env_;
    LocalContext lctx_;
    std::size_t outerSize_;
    std::unordered_map<std::string, FVarId> daggerNames_;
    const MetaContext* mctx_;
    TypeChecker tc_;
    std::uint64_t next_ = 1ULL << 60;
};

/// Builds the kernel declaration of a surface inductive (unvalidated).
InductiveDecl elabInductive(const Environment& env, const InductiveItem& item);

}  // namespace indtac
