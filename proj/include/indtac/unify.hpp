/*
Copyright (c) 2026 The indtac Authors. All rights reserved.
Released under Apache 2.0 license as described in the file LICENSE.
*/
#pragma once
#include <map>
#include <set>

#include "indtac/expr.hpp"
#include "indtac/type_checker.hpp"

namespace indtac {

enum class UnifyStatus { Solved, NoUniqueSolution, Failure };

const char* toString(UnifyStatus s);

struct UnifyResult {
    UnifyStatus status;
    /// On NoUniqueSolution this is the partial assignment found so far.
    std::map<MetaId, Expr> assignment;
};

/// First-order unification of `a` (meta-free) with `b`, assigning only
/// `metas`. Constructor clashes fail; any other rigid mismatch, or a meta
/// left unassigned, means there is no unique solution.
UnifyResult unify(TypeChecker& tc, const Expr& a, const Expr& b, const std::set<MetaId>& metas, Transparency t);

/// Substitutes assigned metas, following chains.
Expr instantiateMetas(const Expr& e, const std::map<MetaId, Expr>& assignment);

}  // namespace indtac
