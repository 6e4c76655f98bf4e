/*
Copyright (c) 2026 The indtac Authors. All rights reserved.
Released under Apache 2.0 license as described in the file LICENSE.
*/
#pragma once
#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "indtac/expr.hpp"

namespace indtac {

/// A hypothesis of a goal. `id` is the stable identity; `name` is only for display.
struct Hypothesis {
    FVarId id;
    std::string name;
    Expr type;
    bool temporaryName = false;
};

/// Ordered hypotheses. Later entries may mention earlier ones.
class LocalContext {
public:
    LocalContext() = default;

    const std::vector<Hypothesis>& hyps() const { return hyps_; }
    std::size_t size() const { return hyps_.size(); }
    bool empty() const { return hyps_.empty(); }

    const Hypothesis* find(FVarId id) const;
    std::optional<std::size_t> indexOf(FVarId id) const;
    /// Last hypothesis with the given display name (shadowing semantics).
    const Hypothesis* findByName(const std::string& name) const;

    void push(Hypothesis h);
    void insert(std::size_t pos, Hypothesis h);
    void erase(FVarId id);
    void setType(FVarId id, Expr type);
    void setName(FVarId id, std::string name, bool temporary = false);

    std::vector<FVarId> ids() const;
    std::vector<Expr> fvars() const;

    friend bool operator==(const LocalContext& a, const LocalContext& b);

private:
    void reindex();
    std::vector<Hypothesis> hyps_;
    std::unordered_map<FVarId, std::size_t> index_;
};

bool operator==(const Hypothesis& a, const Hypothesis& b);

/// Types and assignments of metavariables.
class MetaContext {
public:
    struct Entry {
        Expr type;
        std::optional<Expr> assignment;
    };

    void declare(MetaId id, Expr type);
    void assign(MetaId id, Expr value);
    const Entry* find(MetaId id) const;
    bool isAssigned(MetaId id) const;
    std::optional<Expr> assignment(MetaId id) const;
    const std::map<MetaId, Entry>& entries() const { return entries_; }

    /// Substitute assignments, beta-reducing where an assigned meta is applied.
    Expr instantiate(const Expr& e) const;

private:
    std::map<MetaId, Entry> entries_;
};

}  // namespace indtac
