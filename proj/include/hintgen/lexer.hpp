#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace hintgen {

enum class TokenKind { keyword, identifier, number, string, op, punct, comment, newline };

struct Token {
  TokenKind kind;
  std::string text;

  friend bool operator==(const Token&, const Token&) = default;
};

using TokenSeq = std::vector<Token>;

// Lexes Python-style source into a flat token stream. Total: unrecognized
// characters come back as single-char punct tokens, unterminated strings run
// to end of line (or input, for triple quotes). Whitespace separates tokens
// and is never itself a token; each physical newline outside a string yields
// one newline token, except backslash-newline which is a line continuation.
TokenSeq tokenize(std::string_view source);

// Token texts joined with single separators (newline tokens render as '\n').
// tokenize(render_tokens(t)) == t for any t produced by tokenize.
std::string render_tokens(const TokenSeq& tokens);

const char* to_string(TokenKind kind);

}  // namespace hintgen
