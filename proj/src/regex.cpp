#include "rpq/regex.hpp"

#include <cctype>

namespace rpq {

RegexPtr RegexAst::sym(std::string s) {
    return RegexPtr(new RegexAst{RegexKind::Symbol, std::move(s), nullptr, nullptr});
}
RegexPtr RegexAst::epsilon() {
    return RegexPtr(new RegexAst{RegexKind::Epsilon, {}, nullptr, nullptr});
}
RegexPtr RegexAst::concat(RegexPtr l, RegexPtr r) {
    return RegexPtr(new RegexAst{RegexKind::Concat, {}, std::move(l), std::move(r)});
}
RegexPtr RegexAst::alt(RegexPtr l, RegexPtr r) {
    return RegexPtr(new RegexAst{RegexKind::Union, {}, std::move(l), std::move(r)});
}
RegexPtr RegexAst::star(RegexPtr c) {
    return RegexPtr(new RegexAst{RegexKind::Star, {}, std::move(c), nullptr});
}
RegexPtr RegexAst::plus(RegexPtr c) {
    return RegexPtr(new RegexAst{RegexKind::Plus, {}, std::move(c), nullptr});
}
RegexPtr RegexAst::optional(RegexPtr c) {
    return RegexPtr(new RegexAst{RegexKind::Optional, {}, std::move(c), nullptr});
}

RegexPtr RegexAst::clone() const {
    auto node = RegexPtr(new RegexAst{kind, symbol, nullptr, nullptr});
    if (left) node->left = left->clone();
    if (right) node->right = right->clone();
    return node;
}

size_t RegexAst::size() const {
    size_t n = 1;
    if (left) n += left->size();
    if (right) n += right->size();
    return n;
}

bool operator==(const RegexAst& a, const RegexAst& b) {
    if (a.kind != b.kind || a.symbol != b.symbol) return false;
    if (static_cast<bool>(a.left) != static_cast<bool>(b.left)) return false;
    if (static_cast<bool>(a.right) != static_cast<bool>(b.right)) return false;
    if (a.left && !(*a.left == *b.left)) return false;
    if (a.right && !(*a.right == *b.right)) return false;
    return true;
}

bool nullable(const RegexAst& ast) {
    switch (ast.kind) {
        case RegexKind::Symbol: return false;
        case RegexKind::Epsilon: return true;
        case RegexKind::Concat: return nullable(*ast.left) && nullable(*ast.right);
        case RegexKind::Union: return nullable(*ast.left) || nullable(*ast.right);
        case RegexKind::Star: return true;
        case RegexKind::Plus: return nullable(*ast.left);
        case RegexKind::Optional: return true;
    }
    return false;
}

namespace {

enum class Tok { Ident, LParen, RParen, Pipe, Star, Plus, Quest, Dot, End };

struct Lexer {
    std::string_view text;
    size_t pos = 0;
    Tok tok = Tok::End;
    std::string ident;
    size_t tok_pos = 0;

    explicit Lexer(std::string_view t) : text(t) { advance(); }

    [[noreturn]] void fail(const std::string& what, size_t at) const {
        throw ParseError("regex: " + what + " at position " + std::to_string(at), at);
    }

    static bool ident_char(char c) {
        return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
    }

    void advance() {
        while (pos < text.size() &&
               (text[pos] == ' ' || text[pos] == '\t' || text[pos] == '\n')) {
            ++pos;
        }
        tok_pos = pos;
        if (pos >= text.size()) {
            tok = Tok::End;
            return;
        }
        char c = text[pos];
        switch (c) {
            case '(': tok = Tok::LParen; ++pos; return;
            case ')': tok = Tok::RParen; ++pos; return;
            case '|': tok = Tok::Pipe; ++pos; return;
            case '*': tok = Tok::Star; ++pos; return;
            case '+': tok = Tok::Plus; ++pos; return;
            case '?': tok = Tok::Quest; ++pos; return;
            case '.': tok = Tok::Dot; ++pos; return;
            case '`': {
                size_t end = text.find('`', pos + 1);
                if (end == std::string_view::npos) fail("unterminated back-quote", pos);
                if (end == pos + 1) fail("empty back-quoted symbol", pos);
                ident.assign(text.substr(pos + 1, end - pos - 1));
                pos = end + 1;
                tok = Tok::Ident;
                return;
            }
            default:
                if (!ident_char(c)) fail(std::string("unexpected character '") + c + "'", pos);
                size_t start = pos;
                while (pos < text.size() && ident_char(text[pos])) ++pos;
                ident.assign(text.substr(start, pos - start));
                tok = Tok::Ident;
                return;
        }
    }
};

struct Parser {
    Lexer lex;

    explicit Parser(std::string_view t) : lex(t) {}

    bool at_atom_start() const {
        return lex.tok == Tok::Ident || lex.tok == Tok::LParen;
    }

    RegexPtr parse_alt() {
        RegexPtr result = parse_cat();
        while (lex.tok == Tok::Pipe) {
            lex.advance();
            result = RegexAst::alt(std::move(result), parse_cat());
        }
        return result;
    }

    RegexPtr parse_cat() {
        if (!at_atom_start()) {
            if (lex.tok == Tok::Star || lex.tok == Tok::Plus || lex.tok == Tok::Quest) {
                lex.fail("dangling postfix operator", lex.tok_pos);
            }
            lex.fail("empty expression or alternation branch", lex.tok_pos);
        }
        RegexPtr result = parse_postfix();
        for (;;) {
            if (lex.tok == Tok::Dot) {
                lex.advance();
                if (!at_atom_start()) lex.fail("expected operand after '.'", lex.tok_pos);
                result = RegexAst::concat(std::move(result), parse_postfix());
            } else if (at_atom_start()) {
                result = RegexAst::concat(std::move(result), parse_postfix());
            } else {
                break;
            }
        }
        return result;
    }

    RegexPtr parse_postfix() {
        RegexPtr result = parse_atom();
        for (;;) {
            switch (lex.tok) {
                case Tok::Star: result = RegexAst::star(std::move(result)); break;
                case Tok::Plus: result = RegexAst::plus(std::move(result)); break;
                case Tok::Quest: result = RegexAst::optional(std::move(result)); break;
                default: return result;
            }
            lex.advance();
        }
    }

    RegexPtr parse_atom() {
        if (lex.tok == Tok::Ident) {
            RegexPtr result = RegexAst::sym(lex.ident);
            lex.advance();
            return result;
        }
        // LParen, checked by caller
        size_t open_pos = lex.tok_pos;
        lex.advance();
        if (lex.tok == Tok::RParen) {
            lex.advance();
            return RegexAst::epsilon();
        }
        RegexPtr inner = parse_alt();
        if (lex.tok != Tok::RParen) lex.fail("unbalanced parenthesis", open_pos);
        lex.advance();
        return inner;
    }
};

bool bare_ident(const std::string& s) {
    if (s.empty()) return false;
    for (char c : s) {
        if (!Lexer::ident_char(c)) return false;
    }
    return true;
}

std::string atomized(const RegexAst& ast) {
    if (ast.kind == RegexKind::Symbol || ast.kind == RegexKind::Epsilon) {
        return to_string(ast);
    }
    return "(" + to_string(ast) + ")";
}

}  // namespace

RegexPtr parse_regex(std::string_view text) {
    Parser parser(text);
    RegexPtr result = parser.parse_alt();
    if (parser.lex.tok != Tok::End) {
        parser.lex.fail("unexpected trailing input", parser.lex.tok_pos);
    }
    return result;
}

std::string to_string(const RegexAst& ast) {
    switch (ast.kind) {
        case RegexKind::Symbol:
            return bare_ident(ast.symbol) ? ast.symbol : "`" + ast.symbol + "`";
        case RegexKind::Epsilon: return "()";
        case RegexKind::Concat: return atomized(*ast.left) + " " + atomized(*ast.right);
        case RegexKind::Union: return atomized(*ast.left) + "|" + atomized(*ast.right);
        case RegexKind::Star: return atomized(*ast.left) + "*";
        case RegexKind::Plus: return atomized(*ast.left) + "+";
        case RegexKind::Optional: return atomized(*ast.left) + "?";
    }
    return {};
}

}  // namespace rpq
