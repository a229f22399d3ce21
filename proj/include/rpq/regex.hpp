#ifndef RPQ_REGEX_HPP
#define RPQ_REGEX_HPP

#include <memory>
#include <string>
#include <string_view>

#include "rpq/graph.hpp"

namespace rpq {

enum class RegexKind { Symbol, Epsilon, Concat, Union, Star, Plus, Optional };

struct RegexAst;
using RegexPtr = std::unique_ptr<RegexAst>;

struct RegexAst {
    RegexKind kind;
    std::string symbol;  // Symbol only
    RegexPtr left;       // Concat/Union left, unary child
    RegexPtr right;      // Concat/Union right

    static RegexPtr sym(std::string s);
    static RegexPtr epsilon();
    static RegexPtr concat(RegexPtr l, RegexPtr r);
    static RegexPtr alt(RegexPtr l, RegexPtr r);
    static RegexPtr star(RegexPtr c);
    static RegexPtr plus(RegexPtr c);
    static RegexPtr optional(RegexPtr c);

    RegexPtr clone() const;
    size_t size() const;  // number of AST nodes
};

bool operator==(const RegexAst& a, const RegexAst& b);

// Grammar: `|` alternation (lowest), concatenation by juxtaposition or `.`,
// postfix `*` `+` `?` (highest), `( )` grouping, `()` is epsilon. Symbols are
// bare identifiers [A-Za-z0-9_]+ or back-quoted arbitrary strings.
RegexPtr parse_regex(std::string_view text);

// True iff the empty word belongs to the language.
bool nullable(const RegexAst& ast);

// Canonical printer; parse_regex(to_string(ast)) reproduces ast.
std::string to_string(const RegexAst& ast);

}  // namespace rpq

#endif
