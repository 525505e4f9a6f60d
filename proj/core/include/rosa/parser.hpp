#pragma once

// Tokenizer and recursive-descent parser for the ASCII tool syntax.
//
//   program := { line }
//   line    := [ IDENT "=" ] seq
//   seq     := par { ";" seq }                                  right-assoc
//   par     := choice { "||" "{" [ idlist ] "}" choice }        left-assoc
//   choice  := prefix { ("-" | "+" | "*" "{" NUMBER "}") prefix } left-assoc
//   prefix  := atom [ "." prefix ]
//   atom    := "0" | IDENT | "<" IDENT "," (NUMBER | "inf") ">" [ "." prefix ]
//            | "(" seq ")"

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "rosa/ast.hpp"

namespace rosa {

enum class TokenKind {
    Ident,
    Number,
    Inf,
    Zero,
    Dot,
    Semi,
    Minus,
    Plus,
    Star,
    LAngle,
    RAngle,
    Comma,
    LBrace,
    RBrace,
    LParen,
    RParen,
    ParBar,
    Equals,
};

std::string_view to_string(TokenKind kind);

struct Token {
    TokenKind kind;
    std::string lexeme;
    Position position;

    friend bool operator==(const Token&, const Token&) = default;
};

/// Throws LexError at the first character that starts no token.
std::vector<Token> tokenize(std::string_view source);

/// Parses one process expression. Bare identifiers become variables.
Process parse_process(std::span<const Token> tokens);
Process parse_process(std::string_view source);

/// Parses a definition file, one `NAME = PROCESS` or bare `PROCESS` per line.
/// A bare process is bound to `main`. The root is `main` when defined,
/// otherwise the last definition. A lowercase identifier that names no
/// definition is read as the action constant `name.0`; any other unbound
/// name raises UnboundVariable.
DefinitionEnv parse_program(std::string_view source);

inline constexpr std::string_view kMainName = "main";

}  // namespace rosa
