#include "hintgen/lexer.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <unordered_set>

namespace hintgen {

namespace {

const std::unordered_set<std::string>& keyword_set() {
  static const std::unordered_set<std::string> kw = {
      "False",  "None",   "True",    "and",      "as",       "assert", "async",
      "await",  "break",  "class",   "continue", "def",      "del",    "elif",
      "else",   "except", "finally", "for",      "from",     "global", "if",
      "import", "in",     "is",      "lambda",   "nonlocal", "not",    "or",
      "pass",   "raise",  "return",  "try",      "while",    "with",   "yield"};
  return kw;
}

// Longest first so maximal munch is a plain linear scan.
constexpr std::array<std::string_view, 24> kMultiOps = {
    "**=", "//=", ">>=", "<<=", "...", "==", "!=", "<=", ">=", "->", ":=", "+=",
    "-=",  "*=",  "/=",  "%=",  "@=",  "&=", "|=", "^=", "**", "//", "<<", ">>"};

constexpr std::string_view kSingleOps = "+-*/%@&|^~<>=!";
constexpr std::string_view kPunct = "()[]{},:.;";

bool is_ident_start(unsigned char c) { return std::isalpha(c) || c == '_' || c >= 0x80; }
bool is_ident_char(unsigned char c) { return std::isalnum(c) || c == '_' || c >= 0x80; }

bool is_string_prefix(std::string_view word) {
  if (word.empty() || word.size() > 2) return false;
  for (char c : word) {
    const char lower = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    if (lower != 'r' && lower != 'b' && lower != 'u' && lower != 'f') return false;
  }
  return true;
}

class Scanner {
 public:
  explicit Scanner(std::string_view src) : src_(src) {}

  TokenSeq run() {
    while (pos_ < src_.size()) {
      const char c = src_[pos_];
      if (c == '\r') {
        pos_ += (pos_ + 1 < src_.size() && src_[pos_ + 1] == '\n') ? 2 : 1;
        push(TokenKind::newline, "\n");
      } else if (c == '\n') {
        ++pos_;
        push(TokenKind::newline, "\n");
      } else if (c == ' ' || c == '\t' || c == '\f' || c == '\v') {
        ++pos_;
      } else if (c == '\\' && is_line_break(pos_ + 1)) {
        skip_line_break(pos_ + 1);  // continuation: no token at all
      } else if (c == '#') {
        lex_comment();
      } else if (c == '\'' || c == '"') {
        lex_string(pos_);
      } else if (std::isdigit(static_cast<unsigned char>(c)) ||
                 (c == '.' && pos_ + 1 < src_.size() &&
                  std::isdigit(static_cast<unsigned char>(src_[pos_ + 1])))) {
        lex_number();
      } else if (is_ident_start(static_cast<unsigned char>(c))) {
        lex_word();
      } else {
        lex_operator();
      }
    }
    return std::move(tokens_);
  }

 private:
  bool is_line_break(std::size_t at) const {
    return at < src_.size() && (src_[at] == '\n' || src_[at] == '\r');
  }

  void skip_line_break(std::size_t at) {
    pos_ = at + ((src_[at] == '\r' && at + 1 < src_.size() && src_[at + 1] == '\n') ? 2 : 1);
  }

  void push(TokenKind kind, std::string text) { tokens_.push_back({kind, std::move(text)}); }

  void lex_comment() {
    const std::size_t start = pos_;
    while (pos_ < src_.size() && src_[pos_] != '\n' && src_[pos_] != '\r') ++pos_;
    push(TokenKind::comment, std::string(src_.substr(start, pos_ - start)));
  }

  // `start` points at the prefix (if any) or the opening quote.
  void lex_string(std::size_t start) {
    const char quote = src_[pos_];
    const bool triple = pos_ + 2 < src_.size() && src_[pos_ + 1] == quote && src_[pos_ + 2] == quote;
    pos_ += triple ? 3 : 1;
    while (pos_ < src_.size()) {
      const char c = src_[pos_];
      if (c == '\\' && pos_ + 1 < src_.size()) {
        pos_ += 2;
        continue;
      }
      if (triple) {
        if (c == quote && pos_ + 2 < src_.size() && src_[pos_ + 1] == quote &&
            src_[pos_ + 2] == quote) {
          pos_ += 3;
          break;
        }
        ++pos_;
      } else {
        if (c == quote) {
          ++pos_;
          break;
        }
        if (c == '\n' || c == '\r') break;  // unterminated: stop at end of line
        ++pos_;
      }
    }
    push(TokenKind::string, std::string(src_.substr(start, pos_ - start)));
  }

  void lex_number() {
    const std::size_t start = pos_;
    auto digits = [&](auto pred) {
      while (pos_ < src_.size() &&
             (pred(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_'))
        ++pos_;
    };
    if (src_[pos_] == '0' && pos_ + 1 < src_.size() &&
        (src_[pos_ + 1] == 'x' || src_[pos_ + 1] == 'X' || src_[pos_ + 1] == 'o' ||
         src_[pos_ + 1] == 'O' || src_[pos_ + 1] == 'b' || src_[pos_ + 1] == 'B')) {
      pos_ += 2;
      digits([](unsigned char c) { return std::isxdigit(c); });
    } else {
      digits([](unsigned char c) { return std::isdigit(c); });
      if (pos_ < src_.size() && src_[pos_] == '.') {
        ++pos_;
        digits([](unsigned char c) { return std::isdigit(c); });
      }
      if (pos_ < src_.size() && (src_[pos_] == 'e' || src_[pos_] == 'E')) {
        std::size_t mark = pos_++;
        if (pos_ < src_.size() && (src_[pos_] == '+' || src_[pos_] == '-')) ++pos_;
        if (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) {
          digits([](unsigned char c) { return std::isdigit(c); });
        } else {
          pos_ = mark;  // bare 'e' belongs to a following identifier
        }
      }
    }
    if (pos_ < src_.size() && (src_[pos_] == 'j' || src_[pos_] == 'J')) ++pos_;
    push(TokenKind::number, std::string(src_.substr(start, pos_ - start)));
  }

  void lex_word() {
    const std::size_t start = pos_;
    while (pos_ < src_.size() && is_ident_char(static_cast<unsigned char>(src_[pos_]))) ++pos_;
    const std::string_view word = src_.substr(start, pos_ - start);
    if (pos_ < src_.size() && (src_[pos_] == '\'' || src_[pos_] == '"') && is_string_prefix(word)) {
      lex_string(start);
      return;
    }
    if (keyword_set().count(std::string(word))) {
      push(TokenKind::keyword, std::string(word));
    } else {
      push(TokenKind::identifier, std::string(word));
    }
  }

  void lex_operator() {
    const std::string_view rest = src_.substr(pos_);
    for (std::string_view op : kMultiOps) {
      if (rest.substr(0, op.size()) == op) {
        pos_ += op.size();
        push(op == "..." ? TokenKind::punct : TokenKind::op, std::string(op));
        return;
      }
    }
    const char c = src_[pos_++];
    if (kSingleOps.find(c) != std::string_view::npos) {
      push(TokenKind::op, std::string(1, c));
    } else {
      // covers kPunct and any character we have no rule for
      push(TokenKind::punct, std::string(1, c));
    }
  }

  std::string_view src_;
  std::size_t pos_ = 0;
  TokenSeq tokens_;
};

}  // namespace

TokenSeq tokenize(std::string_view source) { return Scanner(source).run(); }

std::string render_tokens(const TokenSeq& tokens) {
  std::string out;
  bool need_sep = false;
  for (const Token& tok : tokens) {
    if (tok.kind == TokenKind::newline) {
      out.push_back('\n');
      need_sep = false;
      continue;
    }
    if (need_sep) out.push_back(' ');
    out.append(tok.text);
    need_sep = true;
  }
  return out;
}

const char* to_string(TokenKind kind) {
  switch (kind) {
    case TokenKind::keyword: return "keyword";
    case TokenKind::identifier: return "identifier";
    case TokenKind::number: return "number";
    case TokenKind::string: return "string";
    case TokenKind::op: return "op";
    case TokenKind::punct: return "punct";
    case TokenKind::comment: return "comment";
    case TokenKind::newline: return "newline";
  }
  return "?";
}

}  // namespace hintgen
