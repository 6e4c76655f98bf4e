/*
Copyright (c) 2026 The indtac Authors. All rights reserved.
Released under Apache 2.0 license as described in the file LICENSE.
*/
#include "indtac/environment.hpp"

#include <algorithm>

#include "indtac/errors.hpp"

namespace indtac {

const char* toString(Transparency t) { return t == Transparency::Reducible ? "reducible" : "all"; }

Name recursorName(const Name& inductive) { return inductive + ".rec"; }
Name sizeofName(const Name& inductive) { return inductive + ".sizeof"; }
Name noConfusionTypeName(const Name& inductive) { return inductive + ".no_confusion_type"; }
Name noConfusionName(const Name& inductive) { return inductive + ".no_confusion"; }
Name sizeofLtName(const Name& ctor, std::size_t argIdx) { return ctor + ".sizeof_lt_" + std::to_string(argIdx); }
Name injArrowName(const Name& ctor) { return ctor + ".inj_arrow"; }

void Environment::add(Declaration decl) {
    if (decls_.count(decl.name)) throw KernelError("declaration '" + decl.name + "' already exists");
    order_.push_back(decl.name);
    Name n = decl.name;
    decls_.emplace(std::move(n), std::move(decl));
}

void Environment::addInductive(InductiveDecl decl) {
    for (std::size_t i = 0; i < decl.constructors.size(); ++i) ctors_[decl.constructors[i].name] = {decl.name, i};
    recursors_[recursorName(decl.name)] = decl.name;
    Name n = decl.name;
    inductives_[n] = std::move(decl);
}

const Declaration* Environment::find(const Name& name) const {
    auto it = decls_.find(name);
    return it == decls_.end() ? nullptr : &it->second;
}

const Declaration& Environment::get(const Name& name) const {
    if (auto* d = find(name)) return *d;
    throw UnknownConstant("unknown constant '" + name + "'");
}

const InductiveDecl* Environment::findInductive(const Name& name) const {
    auto it = inductives_.find(name);
    return it == inductives_.end() ? nullptr : &it->second;
}

std::optional<std::pair<const InductiveDecl*, std::size_t>> Environment::findConstructor(const Name& name) const {
    auto it = ctors_.find(name);
    if (it == ctors_.end()) return std::nullopt;
    return std::make_pair(findInductive(it->second.first), it->second.second);
}

const InductiveDecl* Environment::findRecursor(const Name& name) const {
    auto it = recursors_.find(name);
    return it == recursors_.end() ? nullptr : findInductive(it->second);
}

void Environment::registerHints(const Name& head, std::vector<std::string> names) { hints_[head] = std::move(names); }

const std::vector<std::string>* Environment::hints(const Name& head) const {
    auto it = hints_.find(head);
    return it == hints_.end() ? nullptr : &it->second;
}

void Environment::registerContainer(const Name& head) {
    if (!isContainer(head)) containers_.push_back(head);
}

bool Environment::isContainer(const Name& head) const {
    return std::find(containers_.begin(), containers_.end(), head) != containers_.end();
}

void Environment::openNamespace(const Name& ns) {
    if (std::find(opens_.begin(), opens_.end(), ns) == opens_.end()) opens_.push_back(ns);
}

std::vector<Name> Environment::resolve(const std::string& id) const {
    if (contains(id)) return {id};
    std::vector<Name> out;
    for (const auto& ns : opens_) {
        Name candidate = ns + "." + id;
        if (contains(candidate)) out.push_back(candidate);
    }
    return out;
}

std::string Environment::shortName(const Name& name) const {
    auto dot = name.rfind('.');
    while (dot != std::string::npos) {
        std::string suffix = name.substr(dot + 1);
        auto r = resolve(suffix);
        if (r.size() == 1 && r.front() == name) return suffix;
        if (dot == 0) break;
        dot = name.rfind('.', dot - 1);
    }
    return name;
}

}  // namespace indtac
