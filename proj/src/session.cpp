/*
Copyright (c) 2026 The indtac Authors. All rights reserved.
Released under Apache 2.0 license as described in the file LICENSE.
*/
#include "indtac/session.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>

#include <json.hpp>

#include "indtac/errors.hpp"
#include "indtac/printer.hpp"

namespace indtac {

using nlohmann::json;

namespace {

json goalJson(const TacticState& st, const Goal& g) {
    json j;
    j["id"] = g.meta.value;
    if (g.caseTag) j["case"] = caseName(*g.caseTag);
    Printer p(st.env(), g.lctx);
    json hyps = json::array();
    for (const auto& h : g.lctx.hyps()) hyps.push_back({{"name", p.hypName(h.id)}, {"type", p.print(h.type)}});
    j["hyps"] = hyps;
    j["target"] = p.print(g.target);
    j["text"] = prettyPrintGoal(st, g);
    return j;
}

json traceJson(const std::vector<RuleFired>& trace) {
    json a = json::array();
    for (const auto& r : trace) a.push_back(toString(r));
    return a;
}

}  // namespace

std::string Session::handle(const std::string& line) {
    json reply;
    json req;
    try {
        req = json::parse(line);
    } catch (const json::exception& e) {
        return json{{"id", nullptr}, {"event", "error"}, {"stage", "request"}, {"message", std::string("bad request: ") + e.what()}}
            .dump();
    }
    reply["id"] = req.contains("id") ? req["id"] : json(nullptr);

    auto goalsJson = [&]() {
        const TacticState& st = current_->state;
        json gs = json::array();
        for (const Goal& g : st.goals()) gs.push_back(goalJson(st, g));
        return gs;
    };
    auto goalsEvent = [&](const json* extra) {
        reply["event"] = "goals";
        reply["goals"] = goalsJson();
        if (current_->state.goals().empty()) reply["status"] = toString(finishLemma(*current_));
        if (extra) reply.update(*extra);
    };
    std::string stage = "request";

    try {
        const std::string cmd = req.value("cmd", "");
        if (cmd == "load") {
            std::string text;
            if (req.contains("text")) {
                text = req["text"].get<std::string>();
            } else if (req.contains("file")) {
                std::ifstream in(req["file"].get<std::string>());
                if (!in) throw std::runtime_error("cannot read " + req["file"].get<std::string>());
                std::stringstream ss;
                ss << in.rdbuf();
                text = ss.str();
            } else {
                throw std::runtime_error("load needs 'file' or 'text'");
            }
            stage = "load";
            auto [env, item] = prepareLemma(text, req.value("lemma", ""));
            env_ = env;
            current_.emplace(startLemma(env_, item));
            history_.clear();
            lemma_ = item.name;
            goalsEvent(nullptr);
            reply["event"] = "ack";
            reply["lemma"] = lemma_;
        } else if (cmd == "info") {
            if (!env_) throw std::runtime_error("nothing loaded");
            const std::string name = req.value("name", "");
            auto cands = env_->resolve(name);
            if (cands.empty()) throw UnknownConstant("unknown constant '" + name + "'");
            const Declaration& d = env_->get(cands.front());
            reply["event"] = "ack";
            reply["name"] = d.name;
            reply["type"] = printExpr(*env_, LocalContext{}, d.type);
        } else {
            if (!current_) throw std::runtime_error("no lemma loaded");
            if (cmd == "getGoals") {
                goalsEvent(nullptr);
            } else if (cmd == "undo") {
                if (history_.empty()) throw std::runtime_error("nothing to undo");
                current_.emplace(std::move(history_.back()));
                history_.pop_back();
                goalsEvent(nullptr);
            } else if (cmd == "applyTactic") {
                stage = "parse";
                TacticAst t = parseTactic(req.at("text").get<std::string>());
                std::size_t idx = 0;
                if (req.contains("goalId")) {
                    auto pos = current_->state.findGoal(MetaId{req["goalId"].get<std::uint64_t>()});
                    if (!pos) throw TacticError(TacticErrorKind::NoSuchGoal, "no goal " + req["goalId"].dump());
                    idx = *pos;
                }
                stage = "tactic";
                if (idx >= current_->state.goals().size()) throw TacticError(TacticErrorKind::NoSuchGoal, "no goals");
                ProofSession before = *current_;
                const Goal target = before.state.goal(idx);
                TacticOutcome o = runTactic(*current_, t, idx);
                history_.push_back(std::move(before));
                json extra;
                if (o.induction) {
                    json cases = json::array();
                    for (const auto& c : o.induction->cases) {
                        json names = json::array();
                        for (const auto& n : c.names) names.push_back({{"name", n.name}, {"rule", toString(n.rule)}});
                        cases.push_back({{"ctor", caseName(c.ctor)},
                                         {"qnify", traceJson(c.qnifyTrace)},
                                         {"closed", c.closed},
                                         {"names", names}});
                    }
                    extra["cases"] = cases;
                }
                if (!o.qnifyTrace.empty()) extra["qnify"] = traceJson(o.qnifyTrace);
                goalsEvent(extra.is_null() ? nullptr : &extra);
                const auto& now = current_->state.goals();
                if (now.size() < history_.back().state.goals().size() &&
                    std::none_of(now.begin(), now.end(), [&](const Goal& g) { return g.meta == target.meta; })) {
                    reply["event"] = "closed";
                    reply["goalId"] = target.meta.value;
                    if (target.caseTag) reply["caseTag"] = caseName(*target.caseTag);
                }
            } else {
                throw std::runtime_error("unknown command '" + cmd + "'");
            }
        }
    } catch (const TacticError& e) {
        reply = json{{"id", reply["id"]}};
        reply["event"] = "error";
        reply["stage"] = stage;
        reply["kind"] = toString(e.kind());
        reply["message"] = e.what();
    } catch (const std::exception& e) {
        reply = json{{"id", reply["id"]}};
        reply["event"] = "error";
        reply["stage"] = dynamic_cast<const KernelError*>(&e) && stage == "tactic" ? "kernel" : stage;
        reply["message"] = e.what();
    }
    return reply.dump();
}

std::size_t serveSession(std::istream& in, std::ostream& out) {
    Session s;
    std::size_t n = 0;
    std::string line;
    while (std::getline(in, line)) {
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        out << s.handle(line) << "\n" << std::flush;
        ++n;
    }
    return n;
}

}  // namespace indtac
