#pragma once

// Surface syntax for λΠ with pairs and patterns.
//
//   Program ::= (Command ";")*
//   Command ::= "check" Term ":" Term | "compute" Term ":" Term
//   Term    ::= "lam" Pattern "." Term
//             | "fun" "(" Pattern ":" Term ")" "->" Term
//             | Term1
//   Term1   ::= Term1 Term2 | "first" Term2 | "second" Term2 | Term2
//   Term2   ::= VarIdent | "U" | "(" Term ")" | "(" Term "," Term ")"
//   Pattern ::= "_" | VarIdent | "(" Pattern "," Pattern ")"
//
// Comments run from "--" to the end of the line, or between "{-" and "-}"
// (no nesting).

#include <string>
#include <string_view>

#include "scopefoil/error.hpp"
#include "scopefoil/naive.hpp"

namespace scopefoil {

class SyntaxError : public Error {
public:
    SyntaxError(SourcePos pos, std::string expected, std::string found);

    [[nodiscard]] SourcePos pos() const noexcept { return pos_; }
    [[nodiscard]] const std::string& expected() const noexcept { return expected_; }

private:
    SourcePos pos_;
    std::string expected_;
};

[[nodiscard]] Program parse_program(std::string_view text);
/// Parses a single term; the whole input must be consumed.
[[nodiscard]] NaiveTerm parse_term(std::string_view text);
[[nodiscard]] NaivePattern parse_pattern(std::string_view text);

/// Prints with the fewest parentheses that reparse to the same tree.
[[nodiscard]] std::string pretty_term(const NaiveTerm& term);
[[nodiscard]] std::string pretty_pattern(const NaivePattern& pattern);
/// One command per line, each terminated by " ;".
[[nodiscard]] std::string pretty_program(const Program& program);

}  // namespace scopefoil
