/*
Copyright (c) 2026 The indtac Authors. All rights reserved.
Released under Apache 2.0 license as described in the file LICENSE.
*/
#pragma once
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "indtac/naming.hpp"
#include "indtac/proofstate.hpp"
#include "indtac/qnify.hpp"

namespace indtac {

struct CaseUserNames {
    Name ctor;  // short or full constructor name
    std::vector<std::string> names;
};

struct InductionConfig {
    FVarId major;
    bool fixAll = false;
    std::vector<FVarId> fixed;
    /// Names for the new hypotheses of a case, positionally: constructor
    /// arguments first, then induction hypotheses.
    std::vector<CaseUserNames> userNames;
};

struct MajorPremiseInfo {
    const InductiveDecl* family = nullptr;
    std::vector<Expr> paramArgs;
    std::vector<Expr> indexArgs;
    /// Hypotheses the major premise's type mentions, transitively.
    std::set<FVarId> dependencies;
};

struct IndexEquationRecord {
    FVarId placeholderId;
    Expr originalTerm;
    bool isHeterogeneous = false;
};

MajorPremiseInfo analyseMajorPremise(TacticState& st, const Goal& g, FVarId major);

/// Replaces complex indices of the major premise by placeholders inserted
/// before it and prepends the index equations to the target.
std::pair<Goal, std::vector<IndexEquationRecord>> generalizeComplexIndices(TacticState& st, const Goal& g,
                                                                           const InductionConfig& cfg);

struct Generalized {
    Goal goal;
    /// Reverted hypotheses in context order (now leading Pis of the target).
    std::vector<Hypothesis> reverted;
};

Generalized generalizeHypotheses(TacticState& st, const Goal& g, const InductionConfig& cfg,
                                 const MajorPremiseInfo& info);

/// What one case goal's intros produced, for the later stages.
struct CaseGoal {
    Goal goal;
    Name ctor;
    std::vector<FVarId> args;
    std::vector<FVarId> ihs;
    /// Index of the recursive argument each IH belongs to.
    std::vector<std::size_t> ihArg;
    std::vector<FVarId> equations;
    /// Binders of each IH that precede its equations.
    std::size_t ihBinderCount = 0;
};

/// Applies the recursor with the motive read off the target
/// `Π eqs, T` (after generalisation) and introduces each case.
std::vector<CaseGoal> applyRecursorWithMotive(TacticState& st, const Goal& g, const InductionConfig& cfg,
                                              const std::vector<Hypothesis>& generalized, std::size_t equationCount);

/// `ih : Π xs, Π eqs, T`: instantiates the `binderCount` leading binders
/// by unifying each of the `equationCount` equations, drops the equations
/// that become trivial and keeps binders without a unique solution.
Goal simplifyIH(TacticState& st, const Goal& g, FVarId ih, std::size_t binderCount, std::size_t equationCount);

struct InductionReport {
    struct Case {
        Name ctor;
        std::vector<RuleFired> qnifyTrace;
        bool closed = false;
        std::vector<NamedHypothesis> names;
    };
    std::vector<Case> cases;
};

/// Runs the whole pipeline on the goal with meta `goalMeta`. On error the
/// state is left untouched.
InductionReport inductionTactic(TacticState& st, MetaId goalMeta, const InductionConfig& cfg);
/// Same pipeline; clears the induction hypotheses before naming.
InductionReport casesTactic(TacticState& st, MetaId goalMeta, const InductionConfig& cfg);

}  // namespace indtac
