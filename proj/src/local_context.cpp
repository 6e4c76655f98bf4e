/*
Copyright (c) 2026 The indtac Authors. All rights reserved.
Released under Apache 2.0 license as described in the file LICENSE.
*/
#include "indtac/local_context.hpp"

#include <algorithm>
#include <stdexcept>

#include "indtac/errors.hpp"

namespace indtac {

const char* toString(TacticErrorKind kind) {
    switch (kind) {
    case TacticErrorKind::NotAPi: return "NotAPi";
    case TacticErrorKind::UnknownHypothesis: return "UnknownHypothesis";
    case TacticErrorKind::TypeError: return "TypeError";
    case TacticErrorKind::UnificationFailure: return "UnificationFailure";
    case TacticErrorKind::OccursCheck: return "OccursCheck";
    case TacticErrorKind::DependencyError: return "DependencyError";
    case TacticErrorKind::SpineNotRecursive: return "SpineNotRecursive";
    case TacticErrorKind::RewriteMadeGoalIllTyped: return "RewriteMadeGoalIllTyped";
    case TacticErrorKind::FixedHypothesisConflict: return "FixedHypothesisConflict";
    case TacticErrorKind::UserNameCountMismatch: return "UserNameCountMismatch";
    case TacticErrorKind::NotInductive: return "NotInductive";
    case TacticErrorKind::NoSuchGoal: return "NoSuchGoal";
    case TacticErrorKind::Other: return "TacticError";
    }
    return "TacticError";
}

bool operator==(const Hypothesis& a, const Hypothesis& b) {
    return a.id == b.id && a.name == b.name && a.type == b.type && a.temporaryName == b.temporaryName;
}

bool operator==(const LocalContext& a, const LocalContext& b) { return a.hyps_ == b.hyps_; }

const Hypothesis* LocalContext::find(FVarId id) const {
    auto it = index_.find(id);
    return it == index_.end() ? nullptr : &hyps_[it->second];
}

std::optional<std::size_t> LocalContext::indexOf(FVarId id) const {
    auto it = index_.find(id);
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

const Hypothesis* LocalContext::findByName(const std::string& name) const {
    for (auto it = hyps_.rbegin(); it != hyps_.rend(); ++it)
        if (it->name == name) return &*it;
    return nullptr;
}

void LocalContext::push(Hypothesis h) {
    if (index_.count(h.id)) throw std::logic_error("duplicate hypothesis id");
    index_[h.id] = hyps_.size();
    hyps_.push_back(std::move(h));
}

void LocalContext::insert(std::size_t pos, Hypothesis h) {
    if (index_.count(h.id)) throw std::logic_error("duplicate hypothesis id");
    hyps_.insert(hyps_.begin() + static_cast<std::ptrdiff_t>(std::min(pos, hyps_.size())), std::move(h));
    reindex();
}

void LocalContext::erase(FVarId id) {
    auto it = index_.find(id);
    if (it == index_.end()) return;
    hyps_.erase(hyps_.begin() + static_cast<std::ptrdiff_t>(it->second));
    reindex();
}

void LocalContext::setType(FVarId id, Expr type) {
    auto it = index_.find(id);
    if (it == index_.end()) throw TacticError(TacticErrorKind::UnknownHypothesis, "unknown hypothesis");
    hyps_[it->second].type = std::move(type);
}

void LocalContext::setName(FVarId id, std::string name, bool temporary) {
    auto it = index_.find(id);
    if (it == index_.end()) throw TacticError(TacticErrorKind::UnknownHypothesis, "unknown hypothesis");
    hyps_[it->second].name = std::move(name);
    hyps_[it->second].temporaryName = temporary;
}

std::vector<FVarId> LocalContext::ids() const {
    std::vector<FVarId> out;
    out.reserve(hyps_.size());
    for (const auto& h : hyps_) out.push_back(h.id);
    return out;
}

std::vector<Expr> LocalContext::fvars() const {
    std::vector<Expr> out;
    out.reserve(hyps_.size());
    for (const auto& h : hyps_) out.push_back(mkFVar(h.id));
    return out;
}

void LocalContext::reindex() {
    index_.clear();
    for (std::size_t i = 0; i < hyps_.size(); ++i) index_[hyps_[i].id] = i;
}

void MetaContext::declare(MetaId id, Expr type) { entries_[id] = Entry{std::move(type), std::nullopt}; }

void MetaContext::assign(MetaId id, Expr value) {
    auto it = entries_.find(id);
    if (it == entries_.end()) throw std::logic_error("assigning undeclared metavariable");
    it->second.assignment = std::move(value);
}

const MetaContext::Entry* MetaContext::find(MetaId id) const {
    auto it = entries_.find(id);
    return it == entries_.end() ? nullptr : &it->second;
}

bool MetaContext::isAssigned(MetaId id) const {
    auto* e = find(id);
    return e && e->assignment;
}

std::optional<Expr> MetaContext::assignment(MetaId id) const {
    auto* e = find(id);
    if (!e) return std::nullopt;
    return e->assignment;
}

Expr MetaContext::instantiate(const Expr& e) const {
    if (!e.hasMeta()) return e;
    return replace(e, [&](const Expr& x, std::uint32_t) -> std::optional<Expr> {
        if (!x.hasMeta()) return x;
        const Expr& fn = getAppFn(x);
        if (fn.isMeta()) {
            auto a = assignment(fn.metaId());
            if (!a) {
                if (!x.isApp()) return x;
                std::vector<Expr> args = getAppArgs(x);
                for (auto& arg : args) arg = instantiate(arg);
                return mkApp(fn, args);
            }
            std::vector<Expr> args = getAppArgs(x);
            for (auto& arg : args) arg = instantiate(arg);
            return headBeta(mkApp(instantiate(*a), args));
        }
        return std::nullopt;
    });
}

}  // namespace indtac
