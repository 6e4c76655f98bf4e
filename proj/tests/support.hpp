/*
Copyright (c) 2026 The indtac Authors. All rights reserved.
Released under Apache 2.0 license as described in the file LICENSE.
*/
#pragma once
#include <algorithm>
#include <filesystem>
#include <fstream>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "indtac/elab.hpp"
#include "indtac/errors.hpp"
#include "indtac/printer.hpp"
#include "indtac/script.hpp"

namespace indtac::test {

inline std::string readFile(const std::filesystem::path& p) {
    std::ifstream in(p);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

inline std::filesystem::path corpusDir() { return INDTAC_CORPUS_DIR; }

inline std::vector<std::filesystem::path> corpusFiles() {
    std::vector<std::filesystem::path> out;
    for (const auto& e : std::filesystem::directory_iterator(corpusDir()))
        if (e.path().extension() == ".ind") out.push_back(e.path());
    std::sort(out.begin(), out.end());
    return out;
}

/// Opens lemma `lemma` of `text` and runs `tactics` on the first goal.
inline ProofSession openLemma(const std::string& text, const std::string& lemma,
                              const std::vector<std::string>& tactics = {}) {
    auto [env, item] = prepareLemma(text, lemma);
    ProofSession ps = startLemma(env, item);
    for (const auto& t : tactics) runTactic(ps, parseTactic(t));
    return ps;
}

inline const Goal& goalForCase(const TacticState& st, const std::string& ctor) {
    for (const Goal& g : st.goals())
        if (g.caseTag && caseName(*g.caseTag) == ctor) return g;
    throw std::runtime_error("no goal for case " + ctor);
}

inline std::string show(const TacticState& st, const Goal& g) { return prettyPrintGoal(st, g); }

inline Expr elabIn(const Environment& env, const LocalContext& lctx, const std::string& text) {
    Elaborator el(env, lctx);
    return el.infer(parseTerm(text)).first;
}

inline std::string printIn(const Environment& env, const LocalContext& lctx, const Expr& e) {
    return printExpr(env, lctx, e);
}

inline FVarId hyp(const TacticState& st, const Goal& g, const std::string& name) {
    return resolveHypothesis(st.env(), g, name);
}

inline std::string hypType(const TacticState& st, const Goal& g, const std::string& name) {
    return printExpr(st.env(), g.lctx, g.lctx.find(hyp(st, g, name))->type);
}

inline std::vector<std::string> hypNames(const TacticState& st, const Goal& g) {
    Printer p(st.env(), g.lctx);
    std::vector<std::string> out;
    for (const auto& h : g.lctx.hyps()) out.push_back(p.hypName(h.id));
    return out;
}

/// A lemma statement with the single goal kept up to date by hand.
struct GoalFx {
    std::shared_ptr<Environment> env;
    TacticState st;
    GoalFx(const std::string& decls, const std::string& stmt)
        : env(runScript(decls).env), st(env, elabIn(*env, LocalContext{}, stmt)) {}

    Goal g() const { return st.goal(0); }
    void set(const Goal& ng) { st.replaceGoal(st.goal(0).meta, {ng}); }
    void close() { st.replaceGoal(st.goal(0).meta, {}); }
    void update(const std::optional<Goal>& ng) { ng ? set(*ng) : close(); }
    Goal intros(const std::vector<std::string>& names) {
        for (const auto& n : names) set(intro(st, g(), n));
        return g();
    }
    Expr term(const std::string& text) const { return elabIn(*env, g().lctx, text); }
    std::string print(const Expr& e) const { return printExpr(*env, g().lctx, e); }
    FVarId id(const std::string& n) const { return g().lctx.findByName(n)->id; }
};

/// doctest cannot print the enum, so compare names
inline std::string kindOf(const std::function<void()>& f) {
    try {
        f();
    } catch (const TacticError& e) {
        return toString(e.kind());
    }
    return "no error";
}

inline std::string name(TacticErrorKind k) { return toString(k); }

/// File declaring the toy language; shared by several suites.
inline const char* kStmtDecls = R"(
inductive stmt : Type
| skip : stmt
| assign : string → (state → nat) → stmt
| seq : stmt → stmt → stmt
| while : (state → Type) → stmt → stmt

open stmt

name_hints stmt := S T
name_hints state := s t u

inductive big_step : stmt × state → state → Type
| skip : ∀ (s : state), big_step (skip, s) s
| while_true : ∀ (b : state → Type) (S : stmt) (s t u : state) (hcond : b s) (hbody : big_step (S, s) t)
    (hrest : big_step (while b S, t) u), big_step (while b S, s) u
| while_false : ∀ (b : state → Type) (S : stmt) (s : state) (hcond : ¬ b s), big_step (while b S, s) s
)";

inline const char* kTcDecl = R"(
inductive tc (α : Type) (r : α → α → Type) : α → α → Type
| base : ∀ (x y : α) (hr : r x y), tc α r x y
| step : ∀ (x y z : α) (hr : r x y) (ht : tc α r y z), tc α r x z
)";

}  // namespace indtac::test
