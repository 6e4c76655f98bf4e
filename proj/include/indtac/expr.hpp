/*
Copyright (c) 2026 The indtac Authors. All rights reserved.
Released under Apache 2.0 license as described in the file LICENSE.
*/
#pragma once
#include <compare>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace indtac {

/// Fully qualified constant name, e.g. `nat.succ`.
using Name = std::string;

/// Identity of a free variable / hypothesis. Stable across type rewrites.
struct FVarId {
    std::uint64_t value = 0;
    friend auto operator<=>(FVarId, FVarId) = default;
};

struct MetaId {
    std::uint64_t value = 0;
    friend auto operator<=>(MetaId, MetaId) = default;
};

enum class ExprKind : std::uint8_t { Sort, Const, BVar, FVar, App, Lam, Pi, Meta };

struct ExprNode;

/// Locally nameless term. Bound variables are de Bruijn indices; opened
/// binders become FVars. Values are immutable and cheap to copy.
class Expr {
public:
    Expr() = default;
    explicit Expr(std::shared_ptr<const ExprNode> node) : node_(std::move(node)) {}

    bool isNull() const { return !node_; }
    ExprKind kind() const;
    bool isSort() const { return kind() == ExprKind::Sort; }
    bool isConst() const { return kind() == ExprKind::Const; }
    bool isBVar() const { return kind() == ExprKind::BVar; }
    bool isFVar() const { return kind() == ExprKind::FVar; }
    bool isApp() const { return kind() == ExprKind::App; }
    bool isLambda() const { return kind() == ExprKind::Lam; }
    bool isPi() const { return kind() == ExprKind::Pi; }
    bool isBinder() const { return isLambda() || isPi(); }
    bool isMeta() const { return kind() == ExprKind::Meta; }

    const Name& constName() const;
    std::uint32_t bvarIdx() const;
    FVarId fvarId() const;
    MetaId metaId() const;
    const Expr& appFn() const;
    const Expr& appArg() const;
    const std::string& binderName() const;
    const Expr& binderType() const;
    const Expr& binderBody() const;

    /// One more than the largest loose bound variable index, 0 if closed.
    std::uint32_t looseBVarRange() const;
    bool hasFVar() const;
    bool hasMeta() const;
    std::size_t hash() const;

    const ExprNode* raw() const { return node_.get(); }

    friend bool operator==(const Expr& a, const Expr& b);

private:
    std::shared_ptr<const ExprNode> node_;
};

struct ExprNode {
    ExprKind kind;
    Name name;              // Const name or binder hint
    std::uint64_t idx = 0;  // BVar index, FVar id, Meta id
    Expr a, b;              // App: fn/arg; binders: type/body
    std::uint32_t looseRange = 0;
    bool hasFVar = false;
    bool hasMeta = false;
    std::size_t hash = 0;
};

struct ExprHash {
    std::size_t operator()(const Expr& e) const { return e.hash(); }
};

Expr mkSort();
Expr mkConst(Name name);
Expr mkBVar(std::uint32_t idx);
Expr mkFVar(FVarId id);
Expr mkMeta(MetaId id);
Expr mkApp(Expr fn, Expr arg);
Expr mkApp(Expr fn, std::span<const Expr> args);
Expr mkApp(Expr fn, std::initializer_list<Expr> args);
Expr mkLambda(std::string hint, Expr type, Expr body);
Expr mkPi(std::string hint, Expr type, Expr body);
/// Nondependent function type `a → b`, `b` locally closed.
Expr mkArrow(Expr a, Expr b);

const Expr& getAppFn(const Expr& e);
std::vector<Expr> getAppArgs(const Expr& e);
std::size_t getAppNumArgs(const Expr& e);
bool isConstApp(const Expr& e, const Name& head, std::size_t nargs);

/// Replace loose BVar i (i < subst.size()) by subst[i], shifting the rest.
Expr instantiate(const Expr& body, std::span<const Expr> subst);
Expr instantiate1(const Expr& body, const Expr& value);
/// Replace loose BVar i by subst[n - 1 - i] (the "last argument is #0" convention).
Expr instantiateRev(const Expr& body, std::span<const Expr> subst);
/// Turn FVars into loose BVars: fvars.back() becomes #0.
Expr abstractFVars(const Expr& e, std::span<const FVarId> fvars);
Expr abstract1(const Expr& e, FVarId fvar);
Expr liftLooseBVars(const Expr& e, std::uint32_t amount);

Expr headBeta(const Expr& e);
/// Beta-reduce every redex in `e`.
Expr betaNormalize(const Expr& e);

/// Generic bottom-up rewriting. `fn` gets the subterm and the binder depth
/// and may return a replacement (which is not visited further).
Expr replace(const Expr& e, const std::function<std::optional<Expr>(const Expr&, std::uint32_t)>& fn);
void forEach(const Expr& e, const std::function<bool(const Expr&, std::uint32_t)>& fn);

/// Whether loose BVar `i` occurs in `e`.
bool hasLooseBVar(const Expr& e, std::uint32_t i);
bool occursFVar(const Expr& e, FVarId id);
bool occursMeta(const Expr& e, MetaId id);
bool occursConst(const Expr& e, const Name& name);
/// Replace every occurrence of FVar `id` by `value`.
Expr replaceFVar(const Expr& e, FVarId id, const Expr& value);
/// Replace every subterm structurally equal to `target` by `value`.
Expr replaceTerm(const Expr& e, const Expr& target, const Expr& value);
std::vector<FVarId> collectFVars(const Expr& e);
std::vector<MetaId> collectMetas(const Expr& e);

/// Number of syntactic nodes, used as a termination measure in tests.
std::size_t exprSize(const Expr& e);
/// Count of constructor-headed application nodes, given a predicate.
std::size_t countHeads(const Expr& e, const std::function<bool(const Name&)>& isCtor);

std::string debugString(const Expr& e);

}  // namespace indtac

template <>
struct std::hash<indtac::FVarId> {
    std::size_t operator()(indtac::FVarId id) const noexcept { return std::hash<std::uint64_t>{}(id.value); }
};
template <>
struct std::hash<indtac::MetaId> {
    std::size_t operator()(indtac::MetaId id) const noexcept { return std::hash<std::uint64_t>{}(id.value); }
};
