/*
Copyright (c) 2026 The indtac Authors. All rights reserved.
Released under Apache 2.0 license as described in the file LICENSE.
*/
#pragma once
#include <string>
#include <unordered_map>
#include <vector>

#include "indtac/environment.hpp"
#include "indtac/expr.hpp"
#include "indtac/local_context.hpp"

namespace indtac {

/// Display mode omits binder types; full mode prints every binder typed so
/// the output re-parses.
enum class PrintMode { Display, Full };

class Printer {
public:
    Printer(const Environment& env, const LocalContext& lctx, PrintMode mode = PrintMode::Display);

    std::string print(const Expr& e) const;
    /// Display name of a hypothesis, with a dagger suffix if shadowed.
    std::string hypName(FVarId id) const;

private:
    std::string go(const Expr& e, int prec, std::vector<std::string>& bound) const;
    std::string app(const Expr& e, int prec, std::vector<std::string>& bound) const;
    std::string binder(const Expr& e, int prec, std::vector<std::string>& bound) const;
    std::string pickName(const Expr& binderExpr, const std::vector<std::string>& bound) const;
    std::string constName(const Name& n) const;

    const Environment& env_;
    const LocalContext& lctx_;
    PrintMode mode_;
    std::unordered_map<FVarId, std::string> names_;
};

std::string printExpr(const Environment& env, const LocalContext& lctx, const Expr& e,
                      PrintMode mode = PrintMode::Display);

/// One line per hypothesis (consecutive equal types grouped), then `⊢ target`.
std::string printGoal(const Environment& env, const LocalContext& lctx, const Expr& target);

}  // namespace indtac
