/*
Copyright (c) 2026 The indtac Authors. All rights reserved.
Released under Apache 2.0 license as described in the file LICENSE.
*/
#pragma once
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "indtac/proofstate.hpp"

namespace indtac {

enum class NamingRule { User, Recursion, IndexAssociation, NamedArgument, TypeHint, Fallback, InductionHypothesis,
                        Leftover };

const char* toString(NamingRule r);

struct NamedHypothesis {
    FVarId id;
    std::string name;
    NamingRule rule;
};

/// What the rules need to know about the induction being named.
struct NamingContext {
    std::string majorName;
    const InductiveDecl* family = nullptr;
    const Constructor* ctor = nullptr;
    /// The major premise's index arguments k_i and, where k_i is a
    /// hypothesis, its type.
    std::vector<Expr> indexArgs;
    std::vector<std::optional<Expr>> indexArgTypes;
    std::vector<std::optional<std::string>> indexArgNames;
    std::set<std::string> used;
};

/// First unused hint for the type's head (or the pluralized hint of a
/// container's element type); the first hint if all are taken.
std::optional<std::string> lookupHint(const Environment& env, TypeChecker& tc, const Expr& type,
                                      const std::set<std::string>& used);

/// Types whose inhabitants read as proofs: eq, heq, false, indexed
/// families, and relations given by a variable or defined constant.
bool isPropositionLike(TypeChecker& tc, const Expr& type);

struct ChosenName {
    std::string name;
    NamingRule rule;
};

/// Rules in order: Recursion, Index association, Named argument, Type
/// hint, Fallback. `argType` is the argument's type in the case goal.
ChosenName nameConstructorArg(TypeChecker& tc, const NamingContext& nc, std::size_t argIdx, const Expr& argType);

std::string nameIH(const std::string& recursiveArgName, std::size_t totalIHs);

/// `n` if unused, else the first free `n_1`, `n_2`, ...
std::string freshen(const std::string& n, const std::set<std::string>& used);

struct NamingTargets {
    /// One entry per constructor argument; empty if the argument was eliminated.
    std::vector<std::optional<FVarId>> args;
    std::vector<FVarId> ihs;
    std::vector<std::size_t> ihArg;
    std::vector<FVarId> leftoverEquations;
    /// Positional: arguments, then IHs.
    std::optional<std::vector<std::string>> userNames;
};

/// Names every target hypothesis of `g` (in place) and returns the choices.
std::vector<NamedHypothesis> finalizeNames(const TacticState& st, Goal& g, NamingContext nc, const NamingTargets& t);

}  // namespace indtac
