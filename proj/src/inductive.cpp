/*
Copyright (c) 2026 The indtac Authors. All rights reserved.
Released under Apache 2.0 license as described in the file LICENSE.
*/
#include "indtac/inductive.hpp"

#include <cctype>

#include "indtac/errors.hpp"

namespace indtac {

Expr ScratchContext::local(const std::string& name, const Expr& type) {
    FVarId id{next_++};
    lctx_.push(Hypothesis{id, name, type, false});
    return mkFVar(id);
}

Expr ScratchContext::typeOf(const Expr& fvar) const {
    const Hypothesis* h = lctx_.find(fvar.fvarId());
    if (!h) throw std::logic_error("unknown scratch local");
    return h->type;
}

Expr ScratchContext::pis(std::span<const Expr> fvars, const Expr& body) const {
    Expr r = body;
    for (std::size_t i = fvars.size(); i-- > 0;) {
        const Hypothesis* h = lctx_.find(fvars[i].fvarId());
        r = mkPi(h->name, h->type, abstract1(r, h->id));
    }
    return r;
}

Expr ScratchContext::lambdas(std::span<const Expr> fvars, const Expr& body) const {
    Expr r = body;
    for (std::size_t i = fvars.size(); i-- > 0;) {
        const Hypothesis* h = lctx_.find(fvars[i].fvarId());
        r = mkLambda(h->name, h->type, abstract1(r, h->id));
    }
    return r;
}

std::vector<Expr> openTelescope(ScratchContext& sc, const Telescope& tel, std::vector<Expr> prefix,
                                const std::string& defaultName) {
    std::vector<Expr> out;
    for (std::size_t i = 0; i < tel.size(); ++i) {
        Expr type = instantiateRev(tel[i].type, prefix);
        std::string name = tel[i].name.empty() ? defaultName + (i == 0 ? "" : "_" + std::to_string(i)) : tel[i].name;
        Expr x = sc.local(name, type);
        prefix.push_back(x);
        out.push_back(x);
    }
    return out;
}

namespace {

std::vector<Expr> openCtorArgs(ScratchContext& sc, const Constructor& c, const std::vector<Expr>& params,
                               const std::string& suffix = "") {
    std::vector<Expr> prefix = params;
    std::vector<Expr> out;
    for (const auto& arg : c.args) {
        Expr x = sc.local(arg.name + suffix, instantiateRev(arg.type, prefix));
        prefix.push_back(x);
        out.push_back(x);
    }
    return out;
}

std::vector<Expr> concat(std::initializer_list<std::span<const Expr>> parts) {
    std::vector<Expr> out;
    for (auto p : parts) out.insert(out.end(), p.begin(), p.end());
    return out;
}

std::vector<Expr> ctorIndices(const Constructor& c, const std::vector<Expr>& params, const std::vector<Expr>& args) {
    std::vector<Expr> prefix = concat({params, args});
    std::vector<Expr> out;
    for (const auto& j : c.indexInstantiations) out.push_back(instantiateRev(j, prefix));
    return out;
}

std::vector<Expr> indicesOfType(const Expr& type, std::size_t np) {
    std::vector<Expr> args = getAppArgs(type);
    return std::vector<Expr>(args.begin() + static_cast<std::ptrdiff_t>(np), args.end());
}

std::string capitalize(std::string s) {
    auto dot = s.rfind('.');
    if (dot != std::string::npos) s = s.substr(dot + 1);
    if (!s.empty() && std::islower(static_cast<unsigned char>(s[0])))
        s[0] = static_cast<char>(std::toupper(static_cast<unsigned char>(s[0])));
    return s;
}

/// Minor premise locals: constructor arguments followed by one IH per recursive argument.
struct MinorLocals {
    std::vector<Expr> args;
    std::vector<Expr> ihs;
};

MinorLocals minorLocals(ScratchContext& sc, const InductiveDecl& d, const Constructor& c,
                        const std::vector<Expr>& params, const Expr& motive) {
    MinorLocals m;
    m.args = openCtorArgs(sc, c, params);
    for (std::size_t k = 0; k < c.args.size(); ++k) {
        if (!c.args[k].recursive) continue;
        Expr argType = sc.typeOf(m.args[k]);
        std::vector<Expr> mArgs = indicesOfType(argType, d.params.size());
        mArgs.push_back(m.args[k]);
        m.ihs.push_back(sc.local("ih_" + c.args[k].name, headBeta(mkApp(motive, mArgs))));
    }
    return m;
}

Expr indApp(const InductiveDecl& d, std::span<const Expr> params, std::span<const Expr> indices) {
    return mkApp(mkApp(mkConst(d.name), params), indices);
}

}  // namespace

Expr mkEq(const Expr& type, const Expr& lhs, const Expr& rhs) { return mkApp(mkConst(prelude::kEq), {type, lhs, rhs}); }
Expr mkHeq(const Expr& lt, const Expr& lhs, const Expr& rt, const Expr& rhs) {
    return mkApp(mkConst(prelude::kHeq), {lt, lhs, rt, rhs});
}
Expr mkEqRefl(const Expr& type, const Expr& a) { return mkApp(mkConst(prelude::kEqRefl), {type, a}); }
Expr mkHeqRefl(const Expr& type, const Expr& a) { return mkApp(mkConst(prelude::kHeqRefl), {type, a}); }

Expr mkNatLit(unsigned n) {
    Expr e = mkConst(prelude::kZero);
    for (unsigned i = 0; i < n; ++i) e = mkApp(mkConst(prelude::kSucc), e);
    return e;
}

std::optional<EqView> matchEq(const Expr& e) {
    if (!isConstApp(e, prelude::kEq, 3)) return std::nullopt;
    auto args = getAppArgs(e);
    return EqView{args[0], args[1], args[2]};
}

std::optional<HeqView> matchHeq(const Expr& e) {
    if (!isConstApp(e, prelude::kHeq, 4)) return std::nullopt;
    auto args = getAppArgs(e);
    return HeqView{args[0], args[1], args[2], args[3]};
}

Expr inductiveType(const InductiveDecl& d) {
    Expr r = mkSort();
    for (std::size_t i = d.indices.size(); i-- > 0;) r = mkPi(d.indices[i].name, d.indices[i].type, r);
    for (std::size_t i = d.params.size(); i-- > 0;) r = mkPi(d.params[i].name, d.params[i].type, r);
    return r;
}

Expr constructorType(const InductiveDecl& d, std::size_t ctorIdx) {
    const Constructor& c = d.constructors.at(ctorIdx);
    const auto np = static_cast<std::uint32_t>(d.params.size());
    const auto na = static_cast<std::uint32_t>(c.args.size());
    Expr r = mkConst(d.name);
    for (std::uint32_t i = 0; i < np; ++i) r = mkApp(r, mkBVar(np + na - 1 - i));
    for (const auto& j : c.indexInstantiations) r = mkApp(r, j);
    for (std::size_t i = c.args.size(); i-- > 0;) r = mkPi(c.args[i].name, c.args[i].type, r);
    for (std::size_t i = d.params.size(); i-- > 0;) r = mkPi(d.params[i].name, d.params[i].type, r);
    return r;
}

InductiveDecl validateInductive(const Environment& env, InductiveDecl d) {
    if (env.contains(d.name)) throw KernelError("declaration '" + d.name + "' already exists");
    Environment tmp = env;
    tmp.add(Declaration{d.name, inductiveType(d), std::nullopt, Transparency::All, DeclKind::Inductive});
    ScratchContext sc;
    TypeChecker tc(tmp, sc.lctx());
    const std::size_t np = d.params.size();
    const std::size_t ni = d.indices.size();

    std::vector<Expr> params;
    for (const auto& p : d.params) {
        Expr type = instantiateRev(p.type, params);
        if (occursConst(type, d.name)) throw NestedOrMutualError(d.name + ": inductive occurs in its own parameters");
        tc.ensureSort(tc.infer(type));
        params.push_back(sc.local(p.name, type));
    }
    std::vector<Expr> prefix = params;
    for (const auto& ix : d.indices) {
        Expr type = instantiateRev(ix.type, prefix);
        if (occursConst(type, d.name)) throw NestedOrMutualError(d.name + ": inductive occurs in its own indices");
        tc.ensureSort(tc.infer(type));
        prefix.push_back(sc.local(ix.name.empty() ? "i" : ix.name, type));
    }

    for (auto& c : d.constructors) {
        if (c.indexInstantiations.size() != ni)
            throw ParameterMismatchError(c.name + ": constructor must instantiate " + std::to_string(ni) + " indices");
        std::vector<Expr> cprefix = params;
        for (auto& arg : c.args) {
            Expr type = instantiateRev(arg.type, cprefix);
            arg.recursive = false;
            if (occursConst(type, d.name)) {
                if (type.isPi()) {
                    Expr cur = type;
                    while (cur.isPi()) {
                        if (occursConst(cur.binderType(), d.name))
                            throw PositivityError(c.name + ": non-positive occurrence of '" + d.name + "' in argument '" +
                                                  arg.name + "'");
                        cur = cur.binderBody();
                    }
                    throw PositivityError(c.name + ": function-typed recursive argument '" + arg.name +
                                          "' is not supported");
                }
                const Expr& head = getAppFn(type);
                if (!head.isConst() || head.constName() != d.name)
                    throw NestedOrMutualError(c.name + ": nested occurrence of '" + d.name + "' in argument '" +
                                              arg.name + "'");
                std::vector<Expr> targs = getAppArgs(type);
                if (targs.size() != np + ni)
                    throw ParameterMismatchError(c.name + ": '" + d.name + "' must be fully applied");
                for (std::size_t i = 0; i < np; ++i)
                    if (!(targs[i] == params[i]))
                        throw ParameterMismatchError(c.name + ": parameter " + std::to_string(i) +
                                                     " varies in a recursive occurrence");
                for (std::size_t i = np; i < targs.size(); ++i)
                    if (occursConst(targs[i], d.name))
                        throw NestedOrMutualError(c.name + ": nested occurrence of '" + d.name + "' in an index");
                arg.recursive = true;
            }
            tc.ensureSort(tc.infer(type));
            cprefix.push_back(sc.local(arg.name, type));
        }
        for (const auto& j : c.indexInstantiations)
            if (occursConst(instantiateRev(j, cprefix), d.name))
                throw NestedOrMutualError(c.name + ": '" + d.name + "' occurs in a return-type index");
    }
    // full constructor types must check, which covers the index instantiations
    for (std::size_t k = 0; k < d.constructors.size(); ++k) tc.ensureSort(tc.infer(constructorType(d, k)));
    return d;
}

Declaration generateRecursor(const InductiveDecl& d) {
    ScratchContext sc;
    std::vector<Expr> params = openTelescope(sc, d.params, {}, "p");
    static const char* kIndexNames[] = {"x", "y", "z", "w"};
    auto indexName = [&](std::size_t i) -> std::string {
        if (!d.indices[i].name.empty()) return d.indices[i].name;
        return i < 4 ? kIndexNames[i] : "x_" + std::to_string(i);
    };
    auto openIndices = [&]() {
        std::vector<Expr> prefix = params;
        std::vector<Expr> out;
        for (std::size_t i = 0; i < d.indices.size(); ++i) {
            Expr x = sc.local(indexName(i), instantiateRev(d.indices[i].type, prefix));
            prefix.push_back(x);
            out.push_back(x);
        }
        return out;
    };

    std::vector<Expr> mIdx = openIndices();
    Expr mMajor = sc.local("e", indApp(d, params, mIdx));
    Expr motive = sc.local("M", sc.pis(concat({mIdx, std::span<const Expr>(&mMajor, 1)}), mkSort()));

    std::vector<Expr> minors;
    for (const auto& c : d.constructors) {
        MinorLocals m = minorLocals(sc, d, c, params, motive);
        std::vector<Expr> concl = ctorIndices(c, params, m.args);
        concl.push_back(mkApp(mkApp(mkConst(c.name), params), m.args));
        Expr body = mkApp(motive, concl);
        minors.push_back(sc.local(capitalize(c.name), sc.pis(concat({m.args, m.ihs}), body)));
    }

    std::vector<Expr> idx = openIndices();
    Expr major = sc.local("e", indApp(d, params, idx));
    std::vector<Expr> conclArgs = idx;
    conclArgs.push_back(major);
    Expr type = sc.pis(concat({params, std::span<const Expr>(&motive, 1), minors, idx, std::span<const Expr>(&major, 1)}),
                       mkApp(motive, conclArgs));
    return Declaration{recursorName(d.name), type, std::nullopt, Transparency::All, DeclKind::Recursor};
}

void addCheckedDefinition(Environment& env, const Name& name, const Expr& type, const Expr& value,
                          Transparency reducibility) {
    LocalContext empty;
    TypeChecker tc(env, empty);
    tc.ensureSort(tc.infer(type));
    tc.check(value, type);
    env.add(Declaration{name, type, value, reducibility, DeclKind::Definition});
}

void addAxiom(Environment& env, const Name& name, const Expr& type) {
    LocalContext empty;
    TypeChecker tc(env, empty);
    tc.ensureSort(tc.infer(type));
    env.add(Declaration{name, type, std::nullopt, Transparency::All, DeclKind::Axiom});
}

void declareInductive(Environment& env, InductiveDecl decl) {
    InductiveDecl d = validateInductive(env, std::move(decl));
    env.add(Declaration{d.name, inductiveType(d), std::nullopt, Transparency::All, DeclKind::Inductive});
    for (std::size_t k = 0; k < d.constructors.size(); ++k)
        env.add(Declaration{d.constructors[k].name, constructorType(d, k), std::nullopt, Transparency::All,
                            DeclKind::Constructor});
    env.add(generateRecursor(d));
    Name n = d.name;
    env.addInductive(std::move(d));
    generateAuxiliaries(env, n);
}

namespace {

bool hasAll(const Environment& env, std::initializer_list<Name> names) {
    for (const auto& n : names)
        if (!env.contains(n)) return false;
    return true;
}

Expr sizeofApp(const InductiveDecl& d, std::span<const Expr> params, std::span<const Expr> indices, const Expr& x) {
    return mkApp(mkApp(mkApp(mkConst(sizeofName(d.name)), params), indices), x);
}

Expr natAdd(const Expr& a, const Expr& b) { return mkApp(mkConst(prelude::kAdd), {a, b}); }

/// ih_p + (ih_{p+1} + ... ih_m), or zero for an empty list.
Expr sumFrom(std::span<const Expr> xs, std::size_t from) {
    if (from >= xs.size()) return mkConst(prelude::kZero);
    if (from + 1 == xs.size()) return xs[from];
    return natAdd(xs[from], sumFrom(xs, from + 1));
}

}  // namespace

void generateSizeof(Environment& env, const InductiveDecl& d) {
    ScratchContext sc;
    const Expr nat = mkConst(prelude::kNat);
    std::vector<Expr> params = openTelescope(sc, d.params, {}, "p");
    std::vector<Expr> mIdx = openTelescope(sc, d.indices, params, "i");
    Expr mMajor = sc.local("e", indApp(d, params, mIdx));
    Expr motive = sc.lambdas(concat({mIdx, std::span<const Expr>(&mMajor, 1)}), nat);

    std::vector<Expr> minors;
    for (const auto& c : d.constructors) {
        MinorLocals m = minorLocals(sc, d, c, params, motive);
        Expr body = natAdd(mkNatLit(1), sumFrom(m.ihs, 0));
        minors.push_back(sc.lambdas(concat({m.args, m.ihs}), body));
    }
    std::vector<Expr> idx = openTelescope(sc, d.indices, params, "i");
    Expr major = sc.local("e", indApp(d, params, idx));
    Expr recApp = mkApp(mkApp(mkApp(mkApp(mkApp(mkConst(recursorName(d.name)), params), motive), minors), idx), major);
    std::vector<Expr> binders = concat({params, idx, std::span<const Expr>(&major, 1)});
    addCheckedDefinition(env, sizeofName(d.name), sc.pis(binders, nat), sc.lambdas(binders, recApp));

    // sizeof a_k < sizeof (C a) for every recursive argument a_k
    for (const auto& c : d.constructors) {
        std::vector<Expr> args = openCtorArgs(sc, c, params);
        std::vector<std::size_t> recPos;
        std::vector<Expr> sizes;
        for (std::size_t k = 0; k < c.args.size(); ++k) {
            if (!c.args[k].recursive) continue;
            recPos.push_back(k);
            sizes.push_back(sizeofApp(d, params, indicesOfType(sc.typeOf(args[k]), d.params.size()), args[k]));
        }
        Expr whole = sizeofApp(d, params, ctorIndices(c, params, args), mkApp(mkApp(mkConst(c.name), params), args));
        for (std::size_t p = 0; p < recPos.size(); ++p) {
            const Expr& sp = sizes[p];
            Expr proof = (p + 1 == sizes.size())
                             ? mkApp(mkConst(prelude::kLtSuccSelf), {sp})
                             : mkApp(mkConst(prelude::kLtSuccAddR), {sp, sumFrom(sizes, p + 1)});
            for (std::size_t q = p; q-- > 0;)
                proof = mkApp(mkConst(prelude::kLtSuccAddL), {sp, sizes[q], sumFrom(sizes, q + 1), proof});
            Expr stmt = mkApp(mkConst(prelude::kLt), {sp, whole});
            std::vector<Expr> bs = concat({params, args});
            addCheckedDefinition(env, sizeofLtName(c.name, recPos[p]), sc.pis(bs, stmt), sc.lambdas(bs, proof));
        }
    }
}

namespace {

/// Equations between corresponding constructor arguments; heterogeneous
/// where the argument type depends on earlier arguments.
std::vector<Expr> argEquations(ScratchContext& sc, const std::vector<Expr>& a, const std::vector<Expr>& b,
                               const std::vector<bool>& heterogeneous) {
    std::vector<Expr> eqs;
    for (std::size_t i = 0; i < a.size(); ++i) {
        Expr ta = sc.typeOf(a[i]);
        Expr tb = sc.typeOf(b[i]);
        Expr t = heterogeneous[i] ? mkHeq(ta, a[i], tb, b[i]) : mkEq(ta, a[i], b[i]);
        eqs.push_back(sc.local("h", t));
    }
    return eqs;
}

std::vector<bool> heterogeneousArgs(const Constructor& c, const std::vector<Expr>& params) {
    ScratchContext sc(1ULL << 60);
    std::vector<Expr> a = openCtorArgs(sc, c, params);
    std::vector<Expr> b = openCtorArgs(sc, c, params);
    std::vector<bool> out;
    for (std::size_t i = 0; i < a.size(); ++i) out.push_back(!(sc.typeOf(a[i]) == sc.typeOf(b[i])));
    return out;
}

}  // namespace

void generateNoConfusion(Environment& env, const InductiveDecl& d) {
    ScratchContext sc;
    const Expr sort = mkSort();
    std::vector<Expr> params = openTelescope(sc, d.params, {}, "p");
    Expr Q = sc.local("Q", sort);
    std::vector<Expr> idx = openTelescope(sc, d.indices, params, "i");
    Expr x = sc.local("x", indApp(d, params, idx));
    Expr y = sc.local("y", indApp(d, params, idx));
    const Expr rec = mkConst(recursorName(d.name));

    std::vector<std::vector<bool>> hetero;
    for (const auto& c : d.constructors) hetero.push_back(heterogeneousArgs(c, params));

    auto sortMotive = [&]() {
        std::vector<Expr> is = openTelescope(sc, d.indices, params, "i");
        Expr e = sc.local("e", indApp(d, params, is));
        return sc.lambdas(concat({is, std::span<const Expr>(&e, 1)}), sort);
    };

    Expr outerMotive = sortMotive();
    std::vector<Expr> outerMinors;
    for (std::size_t k = 0; k < d.constructors.size(); ++k) {
        MinorLocals ma = minorLocals(sc, d, d.constructors[k], params, outerMotive);
        Expr innerMotive = sortMotive();
        std::vector<Expr> innerMinors;
        for (std::size_t l = 0; l < d.constructors.size(); ++l) {
            MinorLocals mb = minorLocals(sc, d, d.constructors[l], params, innerMotive);
            Expr body = Q;
            if (k == l) {
                std::vector<Expr> eqs = argEquations(sc, ma.args, mb.args, hetero[k]);
                body = mkArrow(sc.pis(eqs, Q), Q);
            }
            innerMinors.push_back(sc.lambdas(concat({mb.args, mb.ihs}), body));
        }
        Expr inner = mkApp(mkApp(mkApp(mkApp(mkApp(rec, params), innerMotive), innerMinors), idx), y);
        outerMinors.push_back(sc.lambdas(concat({ma.args, ma.ihs}), inner));
    }
    Expr nctBody = mkApp(mkApp(mkApp(mkApp(mkApp(rec, params), outerMotive), outerMinors), idx), x);
    std::vector<Expr> nctBinders = concat({params, std::span<const Expr>(&Q, 1), idx, std::span<const Expr>(&x, 1),
                                           std::span<const Expr>(&y, 1)});
    const Name nctName = noConfusionTypeName(d.name);
    addCheckedDefinition(env, nctName, sc.pis(nctBinders, sort), sc.lambdas(nctBinders, nctBody));

    auto nct = [&](std::span<const Expr> is, const Expr& a, const Expr& b) {
        return mkApp(mkApp(mkApp(mkApp(mkConst(nctName), params), Q), is), {a, b});
    };

    // diagonal: NCT Q is x x, by recursion on x
    std::vector<Expr> dIs = openTelescope(sc, d.indices, params, "i");
    Expr dX = sc.local("x", indApp(d, params, dIs));
    Expr diagMotive = sc.lambdas(concat({dIs, std::span<const Expr>(&dX, 1)}), nct(dIs, dX, dX));
    std::vector<Expr> diagMinors;
    for (std::size_t k = 0; k < d.constructors.size(); ++k) {
        const Constructor& c = d.constructors[k];
        MinorLocals m = minorLocals(sc, d, c, params, diagMotive);
        std::vector<Expr> eqs = argEquations(sc, m.args, m.args, hetero[k]);
        Expr f = sc.local("f", sc.pis(eqs, Q));
        std::vector<Expr> refls;
        for (std::size_t i = 0; i < m.args.size(); ++i) {
            Expr t = sc.typeOf(m.args[i]);
            refls.push_back(hetero[k][i] ? mkHeqRefl(t, m.args[i]) : mkEqRefl(t, m.args[i]));
        }
        diagMinors.push_back(sc.lambdas(concat({m.args, m.ihs, std::span<const Expr>(&f, 1)}), mkApp(f, refls)));
    }
    Expr diag = mkApp(mkApp(mkApp(mkApp(mkApp(rec, params), diagMotive), diagMinors), idx), x);

    Expr tI = indApp(d, params, idx);
    Expr h = sc.local("h", mkEq(tI, x, y));
    Expr y2 = sc.local("y", tI);
    Expr h2 = sc.local("h", mkEq(tI, x, y2));
    Expr eqMotive = sc.lambdas(std::vector<Expr>{y2, h2}, nct(idx, x, y2));
    Expr ncValue = mkApp(mkConst(prelude::kEqRec), {tI, x, eqMotive, diag, y, h});
    std::vector<Expr> ncBinders = concat({nctBinders, std::span<const Expr>(&h, 1)});
    addCheckedDefinition(env, noConfusionName(d.name), sc.pis(ncBinders, nct(idx, x, y)),
                         sc.lambdas(ncBinders, ncValue));

    if (!d.indices.empty()) return;
    // per-constructor injectivity, for families without indices
    for (std::size_t k = 0; k < d.constructors.size(); ++k) {
        const Constructor& c = d.constructors[k];
        std::vector<Expr> a = openCtorArgs(sc, c, params);
        std::vector<Expr> b = openCtorArgs(sc, c, params, "'");
        Expr ca = mkApp(mkApp(mkConst(c.name), params), a);
        Expr cb = mkApp(mkApp(mkConst(c.name), params), b);
        Expr hc = sc.local("h", mkEq(indApp(d, params, {}), ca, cb));
        std::vector<Expr> eqs = argEquations(sc, a, b, hetero[k]);
        Expr type = mkArrow(sc.pis(eqs, Q), Q);
        Expr value = mkApp(mkApp(mkApp(mkConst(noConfusionName(d.name)), params), Q), {ca, cb, hc});
        std::vector<Expr> bs = concat({params, std::span<const Expr>(&Q, 1), a, b, std::span<const Expr>(&hc, 1)});
        addCheckedDefinition(env, injArrowName(c.name), sc.pis(bs, type), sc.lambdas(bs, value));
    }
}

std::vector<Name> generateAuxiliaries(Environment& env, const Name& name) {
    std::vector<Name> added;
    const InductiveDecl* d = env.findInductive(name);
    if (!d) return added;
    InductiveDecl copy = *d;
    using namespace prelude;
    if (!env.contains(sizeofName(name)) &&
        hasAll(env, {kNat, kZero, kSucc, kAdd, kLt, kLtSuccSelf, kLtSuccAddR, kLtSuccAddL})) {
        generateSizeof(env, copy);
        added.push_back(sizeofName(name));
    }
    if (!env.contains(noConfusionName(name)) && hasAll(env, {kEq, kEqRefl, kEqRec, kHeq, kHeqRefl})) {
        generateNoConfusion(env, copy);
        added.push_back(noConfusionName(name));
    }
    return added;
}

}  // namespace indtac
