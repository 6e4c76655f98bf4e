/*
Copyright (c) 2026 The indtac Authors. All rights reserved.
Released under Apache 2.0 license as described in the file LICENSE.
*/
#pragma once
#include <stdexcept>
#include <string>

namespace indtac {

class KernelError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class TypeError : public KernelError {
public:
    using KernelError::KernelError;
};

class UnknownConstant : public KernelError {
public:
    using KernelError::KernelError;
};

class PositivityError : public KernelError {
public:
    using KernelError::KernelError;
};

class ParameterMismatchError : public KernelError {
public:
    using KernelError::KernelError;
};

class NestedOrMutualError : public KernelError {
public:
    using KernelError::KernelError;
};

class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& msg, int line, int column)
        : std::runtime_error(std::to_string(line) + ":" + std::to_string(column) + ": " + msg),
          line_(line), column_(column) {}
    int line() const { return line_; }
    int column() const { return column_; }

private:
    int line_;
    int column_;
};

enum class TacticErrorKind {
    NotAPi,
    UnknownHypothesis,
    TypeError,
    UnificationFailure,
    OccursCheck,
    DependencyError,
    SpineNotRecursive,
    RewriteMadeGoalIllTyped,
    FixedHypothesisConflict,
    UserNameCountMismatch,
    NotInductive,
    NoSuchGoal,
    Other,
};

const char* toString(TacticErrorKind kind);

class TacticError : public std::runtime_error {
public:
    TacticError(TacticErrorKind kind, const std::string& msg)
        : std::runtime_error(std::string(toString(kind)) + ": " + msg), kind_(kind) {}
    TacticErrorKind kind() const { return kind_; }

private:
    TacticErrorKind kind_;
};

}  // namespace indtac
