/*
Copyright (c) 2026 The indtac Authors. All rights reserved.
Released under Apache 2.0 license as described in the file LICENSE.
*/
#include <cstring>
#include <set>

#include "indtac/errors.hpp"
#include "indtac/syntax.hpp"

namespace indtac {

bool operator==(const Term& a, const Term& b) {
    if (a.kind != b.kind || a.ident != b.ident || a.num != b.num || a.args.size() != b.args.size() ||
        a.binders.size() != b.binders.size())
        return false;
    for (std::size_t i = 0; i < a.args.size(); ++i)
        if (!(*a.args[i] == *b.args[i])) return false;
    for (std::size_t i = 0; i < a.binders.size(); ++i) {
        const auto& x = a.binders[i];
        const auto& y = b.binders[i];
        if (x.name != y.name || static_cast<bool>(x.type) != static_cast<bool>(y.type)) return false;
        if (x.type && !(*x.type == *y.type)) return false;
    }
    return true;
}

namespace {

enum class Tok { Ident, Num, Sym, End };

struct Token {
    Tok kind;
    std::string text;
    int line, column;
    std::size_t begin, end;  // byte offsets
};

// Multi-byte symbols are matched before identifiers.
const char* const kSymbols[] = {"→", "∀", "λ", "Π", "×", "¬", "⊢", ":=", "->", "==", "@[", "(", ")", ",",
                                ":",  "|", "=", "<", ">", "+", "*", "]", "_"};

bool identStart(unsigned char c) { return std::isalpha(c) || c == '_' || c >= 0x80; }
bool identChar(unsigned char c) { return std::isalnum(c) || c == '_' || c == '\'' || c == '.' || c >= 0x80; }

std::vector<Token> lex(const std::string& src) {
    std::vector<Token> out;
    std::size_t i = 0;
    int line = 1;
    std::size_t lineStart = 0;
    auto col = [&](std::size_t pos) { return static_cast<int>(pos - lineStart) + 1; };
    auto symbolAt = [&](std::size_t pos) -> const char* {
        for (const char* s : kSymbols) {
            std::size_t n = std::strlen(s);
            if (src.compare(pos, n, s) == 0) {
                // a lone underscore that starts an identifier is not the hole symbol
                if (std::strcmp(s, "_") == 0 && pos + 1 < src.size() && identChar(src[pos + 1])) return nullptr;
                return s;
            }
        }
        return nullptr;
    };
    while (i < src.size()) {
        unsigned char c = src[i];
        if (c == '\n') {
            ++i;
            ++line;
            lineStart = i;
            continue;
        }
        if (std::isspace(c)) {
            ++i;
            continue;
        }
        if (src.compare(i, 2, "--") == 0) {
            while (i < src.size() && src[i] != '\n') ++i;
            continue;
        }
        if (std::isdigit(c)) {
            std::size_t b = i;
            while (i < src.size() && std::isdigit(static_cast<unsigned char>(src[i]))) ++i;
            out.push_back({Tok::Num, src.substr(b, i - b), line, col(b), b, i});
            continue;
        }
        if (const char* s = symbolAt(i)) {
            std::size_t n = std::strlen(s);
            out.push_back({Tok::Sym, s, line, col(i), i, i + n});
            i += n;
            continue;
        }
        if (identStart(c)) {
            std::size_t b = i;
            while (i < src.size() && identChar(static_cast<unsigned char>(src[i])) &&
                   (i == b || static_cast<unsigned char>(src[i]) < 0x80 || !symbolAt(i)))
                ++i;
            while (i > b + 1 && src[i - 1] == '.') --i;
            out.push_back({Tok::Ident, src.substr(b, i - b), line, col(b), b, i});
            continue;
        }
        throw ParseError(std::string("unexpected character '") + static_cast<char>(c) + "'", line, col(i));
    }
    out.push_back({Tok::End, "", line, col(i), i, i});
    return out;
}

const std::set<std::string> kStopWords = {"end", "with", "fixing", "case", "inductive", "axiom", "def", "lemma",
                                          "theorem", "name_hints", "name_hints_container", "open", "begin"};
const std::set<std::string> kItemWords = {"inductive", "axiom",      "def",  "lemma", "theorem", "name_hints",
                                          "name_hints_container", "open", "@["};

class Parser {
public:
    explicit Parser(const std::string& src) : src_(src), toks_(lex(src)) {}

    SourceFile file() {
        SourceFile f;
        while (!atEnd()) f.items.push_back(item());
        return f;
    }

    TermPtr termOnly() {
        TermPtr t = term();
        expectEnd();
        return t;
    }

    TacticAst tacticOnly() {
        TacticAst t = tactic();
        expectEnd();
        return t;
    }

private:
    const Token& peek(std::size_t k = 0) const { return toks_[std::min(pos_ + k, toks_.size() - 1)]; }
    bool atEnd() const { return peek().kind == Tok::End; }
    bool isSym(const char* s, std::size_t k = 0) const { return peek(k).kind == Tok::Sym && peek(k).text == s; }
    bool isWord(const char* s) const { return peek().kind == Tok::Ident && peek().text == s; }
    const Token& next() { return toks_[pos_ < toks_.size() - 1 ? pos_++ : pos_]; }

    [[noreturn]] void fail(const std::string& msg) const {
        const Token& t = peek();
        throw ParseError(msg + (t.kind == Tok::End ? " at end of input" : " near '" + t.text + "'"), t.line, t.column);
    }
    void expectSym(const char* s) {
        if (!isSym(s)) fail(std::string("expected '") + s + "'");
        next();
    }
    void expectWord(const char* s) {
        if (!isWord(s)) fail(std::string("expected '") + s + "'");
        next();
    }
    void expectEnd() {
        if (!atEnd()) fail("unexpected trailing input");
    }
    std::string ident() {
        if (peek().kind != Tok::Ident || kStopWords.count(peek().text)) fail("expected identifier");
        return next().text;
    }
    std::string nameOrHole() {
        if (isSym("_")) {
            next();
            return "_";
        }
        return ident();
    }

    TermPtr mk(Term::Kind k, const Token& at) {
        auto t = std::make_shared<Term>();
        t->kind = k;
        t->line = at.line;
        t->column = at.column;
        return t;
    }
    TermPtr mkBin(Term::Kind k, const Token& at, TermPtr a, TermPtr b) {
        auto t = std::const_pointer_cast<Term>(mk(k, at));
        t->args = {std::move(a), std::move(b)};
        return t;
    }

    // ---- terms ----

    std::vector<SurfaceBinder> binderGroup(bool allowBare) {
        std::vector<SurfaceBinder> out;
        while (true) {
            if (isSym("(")) {
                next();
                std::vector<std::string> names;
                while (!isSym(":")) names.push_back(nameOrHole());
                if (names.empty()) fail("expected binder name");
                next();
                TermPtr type = term();
                expectSym(")");
                for (auto& n : names) out.push_back({n, type});
            } else if (allowBare && (isSym("_") || (peek().kind == Tok::Ident && !kStopWords.count(peek().text)))) {
                out.push_back({nameOrHole(), nullptr});
            } else {
                break;
            }
        }
        return out;
    }

    TermPtr term() {
        const Token& t = peek();
        if (isSym("∀") || isSym("Π") || isWord("forall") || isSym("λ") || isWord("fun") || isWord("assume")) {
            bool lam = isSym("λ") || isWord("fun") || isWord("assume");
            next();
            auto r = std::const_pointer_cast<Term>(mk(lam ? Term::Kind::Lam : Term::Kind::Pi, t));
            r->binders = binderGroup(true);
            if (r->binders.empty()) fail("expected binders");
            expectSym(",");
            r->args = {term()};
            return r;
        }
        TermPtr lhs = prodTerm();
        if (isSym("→") || isSym("->")) {
            const Token& op = next();
            return mkBin(Term::Kind::Arrow, op, lhs, term());
        }
        return lhs;
    }

    TermPtr prodTerm() {
        TermPtr lhs = notTerm();
        if (isSym("×")) {
            const Token& op = next();
            return mkBin(Term::Kind::Prod, op, lhs, prodTerm());
        }
        return lhs;
    }

    TermPtr notTerm() {
        if (isSym("¬")) {
            const Token& op = next();
            auto r = std::const_pointer_cast<Term>(mk(Term::Kind::Not, op));
            r->args = {notTerm()};
            return r;
        }
        return cmpTerm();
    }

    TermPtr cmpTerm() {
        TermPtr lhs = addTerm();
        static const std::pair<const char*, Term::Kind> ops[] = {
            {"=", Term::Kind::Eq}, {"==", Term::Kind::Heq}, {"<", Term::Kind::Lt}, {">", Term::Kind::Gt}};
        for (auto [s, k] : ops) {
            if (isSym(s)) {
                const Token& op = next();
                return mkBin(k, op, lhs, addTerm());
            }
        }
        return lhs;
    }

    TermPtr addTerm() {
        TermPtr lhs = appTerm();
        while (isSym("+")) {
            const Token& op = next();
            lhs = mkBin(Term::Kind::Add, op, lhs, appTerm());
        }
        return lhs;
    }

    bool atomStart() const {
        const Token& t = peek();
        if (t.kind == Tok::Num) return true;
        if (t.kind == Tok::Ident) return !kStopWords.count(t.text) && t.text != "forall" && t.text != "fun" &&
                                          t.text != "assume";
        return isSym("(") || isSym("_");
    }

    TermPtr appTerm() {
        const Token& start = peek();
        TermPtr head = atom();
        if (!atomStart()) return head;
        auto r = std::const_pointer_cast<Term>(mk(Term::Kind::App, start));
        r->args.push_back(head);
        while (atomStart()) r->args.push_back(atom());
        return r;
    }

    TermPtr atom() {
        const Token& t = peek();
        if (t.kind == Tok::Num) {
            next();
            auto r = std::const_pointer_cast<Term>(mk(Term::Kind::Num, t));
            r->num = static_cast<unsigned>(std::stoul(t.text));
            return r;
        }
        if (isSym("_")) {
            next();
            return mk(Term::Kind::Hole, t);
        }
        if (isSym("(")) {
            next();
            TermPtr inner = term();
            if (isSym(",")) {
                next();
                TermPtr snd = term();
                expectSym(")");
                return mkBin(Term::Kind::Pair, t, inner, snd);
            }
            expectSym(")");
            return inner;
        }
        if (t.kind == Tok::Ident && (t.text == "Type" || t.text == "Sort")) {
            next();
            return mk(Term::Kind::Sort, t);
        }
        if (t.kind == Tok::Ident && !kStopWords.count(t.text)) {
            next();
            auto r = std::const_pointer_cast<Term>(mk(Term::Kind::Ident, t));
            r->ident = t.text;
            return r;
        }
        fail("expected term");
    }

    // ---- tactics ----

    std::vector<std::string> names() {
        std::vector<std::string> out;
        while (isSym("_") || (peek().kind == Tok::Ident && !kStopWords.count(peek().text))) out.push_back(nameOrHole());
        return out;
    }

    TacticAst tactic() {
        const Token& start = peek();
        TacticAst t;
        t.line = start.line;
        std::string w = ident();
        using K = TacticAst::Kind;
        if (w == "intro") {
            t.kind = K::Intro;
            t.names = names();
        } else if (w == "intros") {
            t.kind = K::Intros;
            t.names = names();
        } else if (w == "exact") {
            t.kind = K::Exact;
            t.term = term();
        } else if (w == "apply") {
            t.kind = K::Apply;
            t.term = term();
        } else if (w == "induction'" || w == "cases'") {
            t.kind = w == "cases'" ? K::Cases : K::Induction;
            t.names = {ident()};
            if (isWord("fixing")) {
                next();
                if (isSym("*")) {
                    next();
                    t.fixAll = true;
                } else {
                    t.fixing = names();
                    if (t.fixing.empty()) fail("expected hypotheses after 'fixing'");
                }
            }
            if (isWord("with")) {
                next();
                do {
                    if (isSym("|")) next();
                    expectWord("case");
                    CaseNames c;
                    c.ctor = ident();
                    expectSym(":");
                    c.names = names();
                    t.cases.push_back(std::move(c));
                } while (isSym("|"));
            }
        } else if (w == "clear" || w == "revert") {
            t.kind = w == "clear" ? K::Clear : K::Revert;
            t.names = names();
            if (t.names.empty()) fail("expected hypothesis names");
        } else if (w == "rename") {
            t.kind = K::Rename;
            t.names = {ident(), ident()};
        } else if (w == "subst") {
            t.kind = K::Subst;
            t.names = {ident()};
        } else if (w == "qnify") {
            t.kind = K::Qnify;
            t.names = names();
        } else if (w == "sorry") {
            t.kind = K::Sorry;
        } else {
            throw ParseError("unknown tactic '" + w + "'", start.line, start.column);
        }
        t.text = src_.substr(start.begin, toks_[pos_ - 1].end - start.begin);
        return t;
    }

    // ---- items ----

    Item item() {
        const Token& start = peek();
        bool reducible = false;
        if (isSym("@[")) {
            next();
            expectWord("reducible");
            expectSym("]");
            reducible = true;
            if (!isWord("def")) fail("expected 'def' after attribute");
        }
        if (isWord("inductive")) {
            next();
            InductiveItem it;
            it.line = start.line;
            it.name = ident();
            it.params = binderGroup(false);
            if (isSym(":")) {
                next();
                it.type = term();
            }
            while (isSym("|")) {
                next();
                CtorSyntax c;
                c.name = ident();
                c.binders = binderGroup(false);
                if (isSym(":")) {
                    next();
                    c.type = term();
                }
                it.ctors.push_back(std::move(c));
            }
            return it;
        }
        if (isWord("axiom") || isWord("def") || isWord("lemma") || isWord("theorem")) {
            std::string w = next().text;
            DeclItem d;
            d.line = start.line;
            d.kind = w == "axiom" ? DeclItem::Kind::Axiom : w == "def" ? DeclItem::Kind::Def : DeclItem::Kind::Lemma;
            d.reducible = reducible;
            d.name = ident();
            d.binders = binderGroup(false);
            expectSym(":");
            d.type = term();
            if (d.kind == DeclItem::Kind::Def) {
                expectSym(":=");
                d.value = term();
            } else if (d.kind == DeclItem::Kind::Lemma) {
                expectSym(":=");
                expectWord("begin");
                if (!isWord("end")) {
                    d.tactics.push_back(tactic());
                    while (isSym(",")) {
                        next();
                        d.tactics.push_back(tactic());
                    }
                }
                expectWord("end");
            }
            return d;
        }
        if (isWord("name_hints") || isWord("name_hints_container")) {
            bool container = next().text == "name_hints_container";
            HintsItem h;
            h.container = container;
            h.head = ident();
            expectSym(":=");
            if (container) {
                expectWord("pluralize");
            } else {
                while (peek().kind == Tok::Ident && !kItemWords.count(peek().text)) h.names.push_back(next().text);
                if (h.names.empty()) fail("expected name hints");
            }
            return h;
        }
        if (isWord("open")) {
            next();
            return OpenItem{ident()};
        }
        fail("expected a declaration");
    }

    const std::string& src_;
    std::vector<Token> toks_;
    std::size_t pos_ = 0;
};

}  // namespace

SourceFile parseFile(const std::string& text) { return Parser(text).file(); }
TermPtr parseTerm(const std::string& text) { return Parser(text).termOnly(); }
TacticAst parseTactic(const std::string& text) { return Parser(text).tacticOnly(); }

}  // namespace indtac
