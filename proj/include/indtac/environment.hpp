/*
Copyright (c) 2026 The indtac Authors. All rights reserved.
Released under Apache 2.0 license as described in the file LICENSE.
*/
#pragma once
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "indtac/expr.hpp"

namespace indtac {

/// Unfolding policy for definitional equality. Reducible < All.
enum class Transparency { Reducible, All };

const char* toString(Transparency t);

enum class DeclKind { Axiom, Definition, Inductive, Constructor, Recursor };

struct Declaration {
    Name name;
    Expr type;
    std::optional<Expr> value;
    /// Lowest transparency at which the body may be unfolded.
    Transparency reducibility = Transparency::All;
    DeclKind kind = DeclKind::Axiom;
};

struct TelescopeEntry {
    std::string name;
    Expr type;
    bool explicitlyNamed = true;
};
using Telescope = std::vector<TelescopeEntry>;

struct ConstructorArg {
    std::string name;
    /// Abstracted over the parameters followed by the earlier arguments.
    Expr type;
    bool explicitlyNamed = true;
    bool recursive = false;
};

struct Constructor {
    Name name;
    std::vector<ConstructorArg> args;
    /// The j_i of the return type, abstracted over parameters and arguments.
    std::vector<Expr> indexInstantiations;
};

/// Parameter types are abstracted over earlier parameters; index types over
/// all parameters and earlier indices.
struct InductiveDecl {
    Name name;
    Telescope params;
    Telescope indices;
    std::vector<Constructor> constructors;
};

/// Names of the generated companion declarations.
Name recursorName(const Name& inductive);
Name sizeofName(const Name& inductive);
Name noConfusionTypeName(const Name& inductive);
Name noConfusionName(const Name& inductive);
Name sizeofLtName(const Name& ctor, std::size_t argIdx);
Name injArrowName(const Name& ctor);

/// Declaration environment. Append-only; shared between sessions as an
/// immutable snapshot (copy to extend).
class Environment {
public:
    void add(Declaration decl);
    void addInductive(InductiveDecl decl);

    const Declaration* find(const Name& name) const;
    const Declaration& get(const Name& name) const;
    bool contains(const Name& name) const { return find(name) != nullptr; }

    const InductiveDecl* findInductive(const Name& name) const;
    /// Inductive and constructor index for a constructor name.
    std::optional<std::pair<const InductiveDecl*, std::size_t>> findConstructor(const Name& name) const;
    const InductiveDecl* findRecursor(const Name& name) const;
    bool isConstructor(const Name& name) const { return ctors_.count(name) != 0; }

    /// Type-head name hints; later registrations shadow earlier ones.
    void registerHints(const Name& head, std::vector<std::string> names);
    const std::vector<std::string>* hints(const Name& head) const;
    void registerContainer(const Name& head);
    bool isContainer(const Name& head) const;

    void openNamespace(const Name& ns);
    const std::vector<Name>& openNamespaces() const { return opens_; }
    /// Candidates for an identifier: exact name first, then opened namespaces.
    std::vector<Name> resolve(const std::string& id) const;
    /// Shortest spelling that resolves uniquely back to `name`.
    std::string shortName(const Name& name) const;

    const std::vector<Name>& order() const { return order_; }

private:
    std::map<Name, Declaration> decls_;
    std::vector<Name> order_;
    std::map<Name, InductiveDecl> inductives_;
    std::map<Name, std::pair<Name, std::size_t>> ctors_;
    std::map<Name, Name> recursors_;
    std::map<Name, std::vector<std::string>> hints_;
    std::vector<Name> containers_;
    std::vector<Name> opens_;
};

}  // namespace indtac
