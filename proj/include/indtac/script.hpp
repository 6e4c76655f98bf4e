/*
Copyright (c) 2026 The indtac Authors. All rights reserved.
Released under Apache 2.0 license as described in the file LICENSE.
*/
#pragma once
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "indtac/induction.hpp"
#include "indtac/syntax.hpp"

namespace indtac {

/// A proof in progress: the tactic state plus goals closed by `sorry`.
struct ProofSession {
    explicit ProofSession(TacticState s) : state(std::move(s)) {}
    TacticState state;
    std::vector<Goal> admitted;
};

struct TacticOutcome {
    std::optional<InductionReport> induction;
    std::vector<RuleFired> qnifyTrace;
};

/// Resolves a hypothesis as displayed (dagger suffixes included).
FVarId resolveHypothesis(const Environment& env, const Goal& g, const std::string& name);

/// Runs one tactic on the goal at `goalIndex`. Atomic: on error the session
/// is unchanged.
TacticOutcome runTactic(ProofSession& ps, const TacticAst& t, std::size_t goalIndex = 0);

/// Constructor name without its family prefix, as case tags are shown.
std::string caseName(const Name& ctor);

std::string printGoals(const TacticState& st);

enum class LemmaStatus { Proved, Open, Admitted, Failed };
const char* toString(LemmaStatus s);

struct LemmaResult {
    std::string name;
    LemmaStatus status = LemmaStatus::Open;
    std::string error;
    int errorLine = 0;
    /// Golden transcript: the statement's goal, then each tactic and the goals after it.
    std::string transcript;
};

struct ScriptResult {
    std::shared_ptr<Environment> env;
    std::vector<LemmaResult> lemmas;
};

/// Elaborates a whole file on top of the prelude and runs every lemma.
/// Declarations are kernel-checked; a failing declaration throws.
ScriptResult runScript(const std::string& text);

/// Per-lemma status lines; golden mode puts each lemma's transcript first.
std::string formatReport(const ScriptResult& r, bool golden);
/// True iff every lemma is proved.
bool allProved(const ScriptResult& r);

/// Environment in force at lemma `name` (earlier lemmas as axioms) and the
/// lemma itself. An empty name picks the first lemma.
std::pair<std::shared_ptr<Environment>, DeclItem> prepareLemma(const std::string& text, const std::string& name);

/// Starts a session for the statement of `item` in `env`.
ProofSession startLemma(std::shared_ptr<const Environment> env, const DeclItem& item);

/// Drops sorry, checks the assembled proof and reports the status.
LemmaStatus finishLemma(const ProofSession& ps);

}  // namespace indtac
