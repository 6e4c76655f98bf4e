/*
Copyright (c) 2026 The indtac Authors. All rights reserved.
Released under Apache 2.0 license as described in the file LICENSE.
*/
#pragma once
#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace indtac {

struct Term;
using TermPtr = std::shared_ptr<const Term>;

struct SurfaceBinder {
    std::string name;
    TermPtr type;  // null when omitted
};

/// Surface term, before elaboration.
struct Term {
    enum class Kind { Ident, App, Lam, Pi, Arrow, Sort, Num, Eq, Heq, Add, Lt, Gt, Prod, Pair, Not, Hole };
    Kind kind;
    std::string ident;
    unsigned num = 0;
    std::vector<TermPtr> args;  // App: fn then args; binary forms: lhs, rhs; Lam/Pi: body
    std::vector<SurfaceBinder> binders;
    int line = 0;
    int column = 0;
};

bool operator==(const Term& a, const Term& b);

struct CaseNames {
    std::string ctor;
    std::vector<std::string> names;
};

struct TacticAst {
    enum class Kind { Intro, Intros, Exact, Apply, Induction, Cases, Clear, Revert, Rename, Subst, Qnify, Sorry };
    Kind kind;
    std::vector<std::string> names;
    TermPtr term;
    bool fixAll = false;
    std::vector<std::string> fixing;
    std::vector<CaseNames> cases;
    std::string text;  // source spelling, for transcripts
    int line = 0;
};

struct CtorSyntax {
    std::string name;
    std::vector<SurfaceBinder> binders;
    TermPtr type;  // null: the family applied to its parameters
};

struct InductiveItem {
    std::string name;
    std::vector<SurfaceBinder> params;
    TermPtr type;  // null: Type
    std::vector<CtorSyntax> ctors;
    int line = 0;
};

struct DeclItem {
    enum class Kind { Axiom, Def, Lemma };
    Kind kind;
    std::string name;
    std::vector<SurfaceBinder> binders;
    TermPtr type;
    TermPtr value;  // Def
    bool reducible = false;
    std::vector<TacticAst> tactics;  // Lemma
    int line = 0;
};

struct HintsItem {
    std::string head;
    std::vector<std::string> names;
    bool container = false;
};

struct OpenItem {
    std::string ns;
};

using Item = std::variant<InductiveItem, DeclItem, HintsItem, OpenItem>;

struct SourceFile {
    std::vector<Item> items;
};

SourceFile parseFile(const std::string& text);
TermPtr parseTerm(const std::string& text);
/// Parses one tactic (no trailing separator).
TacticAst parseTactic(const std::string& text);

/// Canonical re-parseable rendering of surface syntax.
std::string printTerm(const Term& t);
std::string printTactic(const TacticAst& t);
std::string printSource(const SourceFile& f);

}  // namespace indtac
