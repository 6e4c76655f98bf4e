/*
Copyright (c) 2026 The indtac Authors. All rights reserved.
Released under Apache 2.0 license as described in the file LICENSE.
*/
#pragma once
#include <functional>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "indtac/environment.hpp"
#include "indtac/local_context.hpp"
#include "indtac/type_checker.hpp"

namespace indtac {

/// One proof obligation. The goal's metavariable has the closed type
/// `Π lctx, target` and stands in the proof as `?m x₁ … xₙ`.
struct Goal {
    MetaId meta;
    LocalContext lctx;
    Expr target;
    std::optional<Name> caseTag;
};

bool operator==(const Goal& a, const Goal& b);

/// Abstract every hypothesis of `lctx` (in order) over `body`.
Expr pisOver(const LocalContext& lctx, const Expr& body);
Expr lambdasOver(const LocalContext& lctx, const Expr& body);
/// Abstract the listed hypotheses of `lctx` (in context order) over `body`.
Expr pisOver(const LocalContext& lctx, const std::vector<FVarId>& ids, const Expr& body);
Expr lambdasOver(const LocalContext& lctx, const std::vector<FVarId>& ids, const Expr& body);

/// Hypotheses of `lctx` that depend on any of `ids`, transitively,
/// including `ids` themselves, in context order.
std::vector<FVarId> dependencyClosure(const LocalContext& lctx, const std::vector<FVarId>& ids);
/// Hypotheses that `e` mentions, closed under the hypotheses their types mention.
std::set<FVarId> usedHypotheses(const LocalContext& lctx, const Expr& e);
/// Keeps the given order except where a hypothesis must wait for one it
/// mentions. Among ready hypotheses, `preferred` ones go first.
std::vector<Hypothesis> stableTopoSort(std::vector<Hypothesis> hyps,
                                       const std::function<bool(const Hypothesis&)>& preferred = nullptr);

class TacticState {
public:
    TacticState(std::shared_ptr<const Environment> env, Expr statement);

    const Environment& env() const { return *env_; }
    std::shared_ptr<const Environment> envPtr() const { return env_; }
    const Expr& statement() const { return statement_; }
    const std::vector<Goal>& goals() const { return goals_; }
    MetaContext& mctx() { return mctx_; }
    const MetaContext& mctx() const { return mctx_; }

    FVarId freshId() { return FVarId{nextId_++}; }
    MetaId freshMetaId() { return MetaId{nextMeta_++}; }

    /// Declares the goal metavariable.
    Goal newGoal(LocalContext lctx, Expr target, std::optional<Name> tag = std::nullopt);
    /// `?m x₁ … xₙ` for the goal's own context.
    static Expr goalApp(const Goal& g);
    /// Solves `g` with a term over its context.
    void assign(const Goal& g, const Expr& proofInContext);

    const Goal& goal(std::size_t i) const { return goals_.at(i); }
    std::optional<std::size_t> findGoal(MetaId m) const;
    /// Replace goal `m` by `gs` at the same position.
    void replaceGoal(MetaId m, std::vector<Goal> gs);
    void setGoals(std::vector<Goal> gs) { goals_ = std::move(gs); }

    Expr assembledProof() const;
    /// Kernel-checks the assembled proof with every open goal abstracted as
    /// a hypothesis of its (closed) type. Throws on failure.
    void checkProof() const;

    TypeChecker checker(const Goal& g) const { return TypeChecker(*env_, g.lctx, &mctx_); }

private:
    std::shared_ptr<const Environment> env_;
    Expr statement_;
    MetaContext mctx_;
    MetaId root_;
    std::vector<Goal> goals_;
    std::uint64_t nextId_ = 1;
    std::uint64_t nextMeta_ = 1;
};

// Primitive tactics. Each returns the replacement goal(s) and records the
// proof of `g` in terms of them; the caller updates the goal list.

Goal intro(TacticState& st, const Goal& g, std::optional<std::string> name = std::nullopt,
           std::optional<FVarId> reuseId = std::nullopt, bool temporary = false);
/// Reverts `ids` and their dependents; returns the goal and the count moved.
std::pair<Goal, std::size_t> revert(TacticState& st, const Goal& g, const std::vector<FVarId>& ids);
Goal assertAfter(TacticState& st, const Goal& g, FVarId anchor, const std::string& name, const Expr& type,
                 const Expr& value);
Goal assertBefore(TacticState& st, const Goal& g, FVarId anchor, const std::string& name, const Expr& type,
                  const Expr& value);
void exact(TacticState& st, const Goal& g, const Expr& e);
std::vector<Goal> applyExpr(TacticState& st, const Goal& g, const Expr& e);
Goal clear(TacticState& st, const Goal& g, FVarId h);
Goal rename(const Goal& g, FVarId h, const std::string& name);
/// `h : lhs = rhs`; eliminates the FVar on the chosen side.
Goal substUsing(TacticState& st, const Goal& g, FVarId h, bool eliminateRhs);
/// Gives `h` a new type, justified by `value : newType` over the old context.
Goal replaceHypType(TacticState& st, const Goal& g, FVarId h, const Expr& newType, const Expr& value);
/// Reorders hypotheses (same ids, same types); `order` must respect dependencies.
Goal reorder(TacticState& st, const Goal& g, const std::vector<FVarId>& order);

std::string prettyPrintGoal(const TacticState& st, const Goal& g);

}  // namespace indtac
