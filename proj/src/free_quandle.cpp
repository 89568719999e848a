#include "quandle/free_quandle.hpp"

#include <algorithm>
#include <cctype>

#include "quandle/error.hpp"

namespace quandle {

bool is_valid_symbol(std::string_view name) {
  return !name.empty() && std::all_of(name.begin(), name.end(), [](unsigned char c) {
    return std::isalnum(c) || c == '_';
  });
}

FreeWord::FreeWord(std::vector<Letter> letters) {
  letters_.reserve(letters.size());
  for (auto& l : letters) {
    if (l.exponent != 1 && l.exponent != -1)
      throw DomainError("word letter exponent must be +1 or -1, got " + std::to_string(l.exponent));
    push_back(l);
  }
}

void FreeWord::push_back(const Letter& letter) {
  if (!letters_.empty() && letters_.back().symbol == letter.symbol &&
      letters_.back().exponent == -letter.exponent)
    letters_.pop_back();
  else
    letters_.push_back(letter);
}

FreeWord FreeWord::inverse() const {
  FreeWord w;
  w.letters_.reserve(letters_.size());
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) w.letters_.push_back(it->inverse());
  return w;
}

FreeWord& FreeWord::operator*=(const FreeWord& rhs) {
  for (const auto& l : rhs.letters_) push_back(l);
  return *this;
}

FreeQuandleElement::FreeQuandleElement(std::string generator, FreeWord word)
    : generator_(std::move(generator)), tail_(std::move(word)) {
  // (a, a^k w) ~ (a, w): strip the leading run of a^±1. The word is already
  // reduced, so the run has a single sign.
  const auto& ls = tail_.letters();
  std::size_t k = 0;
  while (k < ls.size() && ls[k].symbol == generator_) ++k;
  if (k > 0) tail_ = FreeWord(std::vector<Letter>(ls.begin() + static_cast<std::ptrdiff_t>(k), ls.end()));
}

FreeQuandleElement normalize(std::string generator, FreeWord word) {
  return FreeQuandleElement(std::move(generator), std::move(word));
}

namespace {

FreeQuandleElement act(const FreeQuandleElement& x, const FreeQuandleElement& y, int exponent) {
  FreeWord w = x.tail();
  w *= y.tail().inverse();
  w.push_back({y.generator(), exponent});
  w *= y.tail();
  return FreeQuandleElement(x.generator(), std::move(w));
}

}  // namespace

FreeQuandleElement rack_op(const FreeQuandleElement& x, const FreeQuandleElement& y) { return act(x, y, 1); }

FreeQuandleElement inv_rack_op(const FreeQuandleElement& x, const FreeQuandleElement& y) {
  return act(x, y, -1);
}

std::set<std::string> symbols(const FreeQuandleElement& x) {
  std::set<std::string> out{x.generator()};
  for (const auto& l : x.tail().letters()) out.insert(l.symbol);
  return out;
}

Element evaluate(const FreeQuandleElement& x, const Assignment& assignment, const FiniteQuandle& target) {
  auto lookup = [&](const std::string& s) {
    const auto it = assignment.find(s);
    if (it == assignment.end()) throw DomainError("unbound generator '" + s + "'");
    if (it->second >= target.size())
      throw DomainError("generator '" + s + "' is assigned an element outside the target");
    return it->second;
  };
  Element v = lookup(x.generator());
  for (const auto& l : x.tail().letters()) {
    const Element b = lookup(l.symbol);
    v = l.exponent > 0 ? target.op(v, b) : target.inv_op(v, b);
  }
  return v;
}

namespace {

struct Scanner {
  std::string_view text;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }
  bool at_end() {
    skip_ws();
    return pos >= text.size();
  }
  std::string name() {
    skip_ws();
    const std::size_t start = pos;
    while (pos < text.size() &&
           (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_'))
      ++pos;
    if (start == pos) fail("expected a generator name");
    return std::string(text.substr(start, pos - start));
  }
  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(msg + " in element '" + std::string(text) + "'", 1, static_cast<int>(pos) + 1);
  }
};

}  // namespace

FreeQuandleElement parse_element(std::string_view text) {
  Scanner s{text};
  std::string base = s.name();
  std::vector<Letter> letters;
  if (!s.at_end()) {
    if (text[s.pos] != '^') s.fail("expected '^'");
    ++s.pos;
    while (!s.at_end()) {
      Letter l{s.name(), 1};
      if (s.pos < text.size() && text[s.pos] == '\'') {
        l.exponent = -1;
        ++s.pos;
      }
      letters.push_back(std::move(l));
    }
    if (letters.empty()) s.fail("expected a word after '^'");
  }
  return normalize(std::move(base), FreeWord(std::move(letters)));
}

std::string to_string(const FreeWord& w) {
  std::string out;
  for (const auto& l : w.letters()) {
    if (!out.empty()) out += ' ';
    out += l.symbol;
    if (l.exponent < 0) out += '\'';
  }
  return out;
}

std::string to_string(const FreeQuandleElement& x) {
  if (x.is_generator()) return x.generator();
  return x.generator() + " ^ " + to_string(x.tail());
}

}  // namespace quandle
