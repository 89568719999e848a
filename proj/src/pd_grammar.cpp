#include "pd_grammar.hpp"

#include <cctype>

#include "quandle/error.hpp"

namespace quandle::detail {

namespace {

class Scanner {
 public:
  explicit Scanner(std::string_view text) : text_(text) {}

  bool at_end() {
    skip();
    return pos_ >= text_.size();
  }
  char peek() {
    skip();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }
  void expect(char c) {
    if (peek() != c) fail(std::string("expected '") + c + "'");
    advance();
  }
  char take() {
    skip();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    const char c = text_[pos_];
    advance();
    return c;
  }
  std::string label() {
    skip();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
      advance();
    if (start == pos_) fail("expected a label");
    return std::string(text_.substr(start, pos_ - start));
  }
  int line() const { return line_; }
  int column() const { return col_; }
  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, line_, col_); }

 private:
  void advance() {
    if (text_[pos_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++pos_;
  }
  void skip() {
    while (pos_ < text_.size()) {
      const char c = text_[pos_];
      if (c == '#') {
        while (pos_ < text_.size() && text_[pos_] != '\n') advance();
      } else if (std::isspace(static_cast<unsigned char>(c)) || c == ';' || c == ',') {
        advance();
      } else {
        break;
      }
    }
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  int line_ = 1;
  int col_ = 1;
};

}  // namespace

std::vector<PdEntry> scan_pd_entries(std::string_view text, std::string_view allowed) {
  Scanner s(text);
  std::vector<PdEntry> out;
  while (!s.at_end()) {
    const int line = s.line(), column = s.column();
    const char kind = s.take();
    if (allowed.find(kind) == std::string_view::npos)
      throw ParseError(std::string("unexpected entry kind '") + kind + "'", line, column);
    s.expect('[');
    PdEntry entry{kind, {s.label()}, line, column};
    while (s.peek() != ']') {
      if (s.at_end()) s.fail("unterminated entry");
      entry.labels.push_back(s.label());
    }
    s.expect(']');
    out.push_back(std::move(entry));
  }
  return out;
}

}  // namespace quandle::detail
