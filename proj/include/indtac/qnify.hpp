/*
Copyright (c) 2026 The indtac Authors. All rights reserved.
Released under Apache 2.0 license as described in the file LICENSE.
*/
#pragma once
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "indtac/proofstate.hpp"

namespace indtac {

struct RuleFired {
    enum class Kind { Substitution, Injection, Conflict, Deletion, Cycle, Homogenisation, Stuck };
    Kind kind = Kind::Stuck;
    std::size_t childCount = 0;

    friend bool operator==(const RuleFired&, const RuleFired&) = default;
};

std::string toString(const RuleFired& r);

struct QnifyStepResult {
    /// Empty when the rule closed the goal.
    std::optional<Goal> goal;
    RuleFired rule;
    /// Equations produced by Injection, in argument order.
    std::vector<FVarId> children;
};

/// One rule attempt on `eq`, in the order Deletion, Substitution, Injection,
/// Conflict, Cycle, Homogenisation. Stuck leaves the goal as it was.
QnifyStepResult qnifyStep(TacticState& st, const Goal& g, FVarId eq);

struct QnifyResult {
    std::optional<Goal> goal;
    std::vector<RuleFired> trace;
};

QnifyResult qnifyAll(TacticState& st, const Goal& g, std::vector<FVarId> queue);

/// Proof of `false` from `eq : x = t` (or `t = x`) where `x` sits under a
/// chain of constructors of `t` along recursive arguments. Throws
/// TacticError(SpineNotRecursive) otherwise.
Expr buildCycleProof(TacticState& st, const Goal& g, FVarId eq);

/// Constructor heads in the queued equations, then the queue length with
/// heterogeneous equations counted twice.
std::pair<std::size_t, std::size_t> qnifyMeasure(const Environment& env, const Goal& g,
                                                 const std::vector<FVarId>& queue);

}  // namespace indtac
