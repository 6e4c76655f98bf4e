/*
Copyright (c) 2026 The indtac Authors. All rights reserved.
Released under Apache 2.0 license as described in the file LICENSE.
*/
#pragma once
#include <string>
#include <vector>

#include "indtac/environment.hpp"
#include "indtac/local_context.hpp"
#include "indtac/type_checker.hpp"

namespace indtac {

/// A private local context for building terms over named FVars.
class ScratchContext {
public:
    explicit ScratchContext(std::uint64_t firstId = 1ULL << 61) : next_(firstId) {}

    Expr local(const std::string& name, const Expr& type);
    /// Abstract `fvars` (in order) over `body` as Pi / lambda binders.
    Expr pis(std::span<const Expr> fvars, const Expr& body) const;
    Expr lambdas(std::span<const Expr> fvars, const Expr& body) const;
    Expr typeOf(const Expr& fvar) const;
    const LocalContext& lctx() const { return lctx_; }

private:
    LocalContext lctx_;
    std::uint64_t next_;
};

/// Instantiate a telescope entry-by-entry with fresh locals (after `prefix`).
std::vector<Expr> openTelescope(ScratchContext& sc, const Telescope& tel, std::vector<Expr> prefix,
                                const std::string& defaultName = "x");

/// Check the parameter/index discipline, strict positivity and the
/// no-nested/no-mutual restriction. Returns the declaration with the
/// constructor arguments' recursive flags filled in.
InductiveDecl validateInductive(const Environment& env, InductiveDecl decl);

Expr inductiveType(const InductiveDecl& d);
Expr constructorType(const InductiveDecl& d, std::size_t ctorIdx);
Declaration generateRecursor(const InductiveDecl& d);

/// Validate, then register the type, its constructors, its recursor and
/// whichever companions (sizeof, sizeof_lt, no_confusion) the environment
/// already has the prerequisites for.
void declareInductive(Environment& env, InductiveDecl decl);

/// Generate missing companions for `name`; returns what was added.
std::vector<Name> generateAuxiliaries(Environment& env, const Name& name);

/// Adds a definition after checking its value against its type.
void addCheckedDefinition(Environment& env, const Name& name, const Expr& type, const Expr& value,
                          Transparency reducibility = Transparency::All);
void addAxiom(Environment& env, const Name& name, const Expr& type);

/// Builds the sizeof definition and strictness lemmas (requires nat, nat.add
/// and the nat order lemmas).
void generateSizeof(Environment& env, const InductiveDecl& d);
/// Builds no_confusion_type, no_confusion and per-constructor inj_arrow.
void generateNoConfusion(Environment& env, const InductiveDecl& d);

/// Prelude names the generators rely on.
namespace prelude {
inline const Name kEq = "eq";
inline const Name kEqRefl = "eq.refl";
inline const Name kEqRec = "eq.rec";
inline const Name kEqSymm = "eq.symm";
inline const Name kHeq = "heq";
inline const Name kHeqRefl = "heq.refl";
inline const Name kEqOfHeq = "eq_of_heq";
inline const Name kFalse = "false";
inline const Name kFalseRec = "false.rec";
inline const Name kTrue = "true";
inline const Name kNat = "nat";
inline const Name kZero = "nat.zero";
inline const Name kSucc = "nat.succ";
inline const Name kAdd = "nat.add";
inline const Name kLt = "nat.lt";
inline const Name kLtIrrefl = "nat.lt_irrefl";
inline const Name kLtTrans = "nat.lt_trans";
inline const Name kLtSuccSelf = "nat.lt_succ_self";
inline const Name kLtSuccAddR = "nat.lt_succ_add_r";
inline const Name kLtSuccAddL = "nat.lt_succ_add_l";
inline const Name kCongrArg = "congr_arg";
inline const Name kProd = "prod";
inline const Name kProdMk = "prod.mk";
}  // namespace prelude

Expr mkEq(const Expr& type, const Expr& lhs, const Expr& rhs);
Expr mkHeq(const Expr& lt, const Expr& lhs, const Expr& rt, const Expr& rhs);
Expr mkEqRefl(const Expr& type, const Expr& a);
Expr mkHeqRefl(const Expr& type, const Expr& a);
Expr mkNatLit(unsigned n);

/// Decomposes `eq A a b`.
struct EqView {
    Expr type, lhs, rhs;
};
std::optional<EqView> matchEq(const Expr& e);
/// Decomposes `heq A a B b`.
struct HeqView {
    Expr lhsType, lhs, rhsType, rhs;
};
std::optional<HeqView> matchHeq(const Expr& e);

}  // namespace indtac
