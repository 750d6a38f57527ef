#pragma once

#include <string>
#include <vector>

namespace bsato::tok {

enum class Kind { Plus, Minus, Star, Caret, Number, Name, End };

struct Token {
  Kind kind;
  std::string text;  // Number: "p" or "p/q"; Name: identifier
};

// Shared lexer for the polynomial and operator grammars: identifiers,
// rationals (with embedded '/'), + - * ^, whitespace ignored.
std::vector<Token> lex(const std::string& input);

}  // namespace bsato::tok
