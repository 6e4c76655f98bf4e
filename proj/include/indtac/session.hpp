/*
Copyright (c) 2026 The indtac Authors. All rights reserved.
Released under Apache 2.0 license as described in the file LICENSE.
*/
#pragma once
#include <iosfwd>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "indtac/script.hpp"

namespace indtac {

/// Line-delimited JSON protocol. Each request
///   {"id": n, "cmd": "load"|"applyTactic"|"getGoals"|"undo"|"info", ...}
/// is answered by exactly one event object carrying the same id, with
/// "event" one of "goals", "closed", "error", "ack". Every event except
/// "error" carries the current goals; "closed" also names the goal that a
/// tactic closed, and "status" appears once no goals remain.
class Session {
public:
    /// One request line in, one event line out (no trailing newline).
    std::string handle(const std::string& requestLine);

private:
    std::shared_ptr<const Environment> env_;
    std::optional<ProofSession> current_;
    std::vector<ProofSession> history_;
    std::string lemma_;
};

/// Reads requests until EOF; returns the number handled.
std::size_t serveSession(std::istream& in, std::ostream& out);

}  // namespace indtac
