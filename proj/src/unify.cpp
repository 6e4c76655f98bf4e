/*
Copyright (c) 2026 The indtac Authors. All rights reserved.
Released under Apache 2.0 license as described in the file LICENSE.
*/
#include "indtac/unify.hpp"

namespace indtac {

const char* toString(UnifyStatus s) {
    switch (s) {
    case UnifyStatus::Solved: return "solved";
    case UnifyStatus::NoUniqueSolution: return "no unique solution";
    case UnifyStatus::Failure: return "failure";
    }
    return "?";
}

Expr instantiateMetas(const Expr& e, const std::map<MetaId, Expr>& assignment) {
    if (assignment.empty() || !e.hasMeta()) return e;
    return replace(e, [&](const Expr& x, std::uint32_t) -> std::optional<Expr> {
        if (!x.hasMeta()) return x;
        if (x.isMeta()) {
            auto it = assignment.find(x.metaId());
            if (it != assignment.end()) return instantiateMetas(it->second, assignment);
        }
        return std::nullopt;
    });
}

namespace {

class Unifier {
public:
    Unifier(TypeChecker& tc, const std::set<MetaId>& metas, Transparency t) : tc_(tc), metas_(metas), t_(t) {}

    void run(const Expr& a, const Expr& b) { go(a, b); }

    UnifyResult result() const {
        if (failed_) return {UnifyStatus::Failure, assignment_};
        bool complete = true;
        for (MetaId m : metas_)
            if (!assignment_.count(m)) complete = false;
        return {stuck_ || !complete ? UnifyStatus::NoUniqueSolution : UnifyStatus::Solved, assignment_};
    }

private:
    bool isCtorApp(const Expr& e) const {
        const Expr& f = getAppFn(e);
        return f.isConst() && tc_.env().isConstructor(f.constName());
    }

    bool flexible(const Expr& e) const {
        const Expr& f = getAppFn(e);
        return f.isMeta() && metas_.count(f.metaId());
    }

    void go(const Expr& a, const Expr& b0) {
        if (failed_) return;
        Expr b = instantiateMetas(b0, assignment_);
        if (a == b) return;
        if (b.isMeta() && metas_.count(b.metaId())) {
            // solutions mentioning binder-local variables would escape their scope
            if (!locals_.empty())
                for (FVarId id : collectFVars(a))
                    if (locals_.count(id)) {
                        stuck_ = true;
                        return;
                    }
            assignment_[b.metaId()] = a;
            return;
        }
        if (flexible(b)) {
            stuck_ = true;
            return;
        }
        // constructor applications are already in whnf
        const bool both = isCtorApp(a) && isCtorApp(b);
        Expr wa = both ? a : tc_.whnf(a, t_);
        Expr wb = both ? b : tc_.whnf(b, t_);
        if (wa == wb) return;
        if (wb.isMeta() && metas_.count(wb.metaId())) return go(wa, wb);
        if (wa.isSort() && wb.isSort()) return;
        if (wa.isBinder() && wb.kind() == wa.kind()) {
            go(wa.binderType(), wb.binderType());
            Expr x = tc_.pushLocal(wa.binderName(), wa.binderType());
            locals_.insert(x.fvarId());
            go(instantiate1(wa.binderBody(), x), instantiate1(wb.binderBody(), x));
            locals_.erase(x.fvarId());
            tc_.popLocal();
            return;
        }
        const bool ca = both || isCtorApp(wa);
        const bool cb = both || isCtorApp(wb);
        if (ca && cb) {
            if (getAppFn(wa).constName() != getAppFn(wb).constName()) {
                failed_ = true;
                return;
            }
            goArgs(wa, wb);
            return;
        }
        const Expr& fa = getAppFn(wa);
        const Expr& fb = getAppFn(wb);
        if (wa.isApp() && wb.isApp() && getAppNumArgs(wa) == getAppNumArgs(wb) &&
            ((fa.isConst() && fb.isConst() && fa.constName() == fb.constName()) ||
             (fa.isFVar() && fb.isFVar() && fa.fvarId() == fb.fvarId()))) {
            // same rigid head: argument-wise, but a mismatch is not a clash
            Unifier sub(*this);
            sub.goArgs(wa, wb);
            if (!sub.failed_ && !sub.stuck_) {
                assignment_ = sub.assignment_;
                return;
            }
            if (!b.hasMeta() && tc_.isDefEq(wa, wb, t_)) return;
            if (sub.failed_) {
                stuck_ = true;
                return;
            }
            assignment_ = sub.assignment_;
            stuck_ = true;
            return;
        }
        if (!b.hasMeta() && tc_.isDefEq(wa, wb, t_)) return;
        stuck_ = true;
    }

    void goArgs(const Expr& a, const Expr& b) {
        std::vector<Expr> as = getAppArgs(a);
        std::vector<Expr> bs = getAppArgs(b);
        for (std::size_t i = 0; i < as.size() && !failed_; ++i) go(as[i], bs[i]);
    }

    TypeChecker& tc_;
    const std::set<MetaId>& metas_;
    Transparency t_;
    std::map<MetaId, Expr> assignment_;
    std::set<FVarId> locals_;
    bool failed_ = false;
    bool stuck_ = false;
};

}  // namespace

UnifyResult unify(TypeChecker& tc, const Expr& a, const Expr& b, const std::set<MetaId>& metas, Transparency t) {
    Unifier u(tc, metas, t);
    u.run(a, b);
    return u.result();
}

}  // namespace indtac
