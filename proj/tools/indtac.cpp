/*
Copyright (c) 2026 The indtac Authors. All rights reserved.
Released under Apache 2.0 license as described in the file LICENSE.
*/
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "indtac/script.hpp"
#include "indtac/session.hpp"
#include "indtac/type_checker.hpp"

namespace {

int check(const std::string& path, bool golden) {
    std::ifstream in(path);
    if (!in) {
        std::cerr << "indtac: cannot read " << path << "\n";
        return 2;
    }
    std::stringstream ss;
    ss << in.rdbuf();
    indtac::ScriptResult r;
    try {
        r = indtac::runScript(ss.str());
    } catch (const std::exception& e) {
        std::cerr << path << ": " << e.what() << "\n";
        return 1;
    }
    std::cout << indtac::formatReport(r, golden);
    return indtac::allProved(r) ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"indtac: a small proof kernel with an induction tactic"};
    app.require_subcommand(1);
    bool logTransparency = false;
    app.add_flag("--transparency-log", logTransparency, "print the transparency of every defeq check to stderr");

    auto* checkCmd = app.add_subcommand("check", "check a .ind file");
    std::string file;
    bool golden = false;
    checkCmd->add_option("file", file, "source file")->required();
    checkCmd->add_flag("--golden", golden, "dump the goals after every tactic");

    auto* serveCmd = app.add_subcommand("serve", "JSON session protocol on stdin/stdout");

    CLI11_PARSE(app, argc, argv);
    if (logTransparency) indtac::setTransparencyLog(&std::cerr);
    if (*checkCmd) return check(file, golden);
    if (*serveCmd) {
        indtac::serveSession(std::cin, std::cout);
        return 0;
    }
    return 1;
}
