#pragma once

#include <compare>
#include <functional>
#include <map>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "quandle/finite_quandle.hpp"

namespace quandle {

/// Generator names are nonempty strings over [A-Za-z0-9_].
bool is_valid_symbol(std::string_view name);

struct Letter {
  std::string symbol;
  int exponent = 1;  // +1 or -1

  Letter inverse() const { return {symbol, -exponent}; }
  auto operator<=>(const Letter&) const = default;
};

/// A freely reduced word in the free group on generator names.
class FreeWord {
 public:
  FreeWord() = default;
  /// Reduces the given letters; exponents must be ±1.
  explicit FreeWord(std::vector<Letter> letters);

  const std::vector<Letter>& letters() const { return letters_; }
  bool empty() const { return letters_.empty(); }
  std::size_t size() const { return letters_.size(); }

  FreeWord inverse() const;
  /// Appends a letter, cancelling against the last one when possible.
  void push_back(const Letter& letter);
  FreeWord& operator*=(const FreeWord& rhs);
  friend FreeWord operator*(FreeWord lhs, const FreeWord& rhs) { return lhs *= rhs; }

  auto operator<=>(const FreeWord&) const = default;

 private:
  std::vector<Letter> letters_;
};

/// A class of the free quandle, stored as the canonical pair (a, w): w is
/// freely reduced and does not start with a^±1.
class FreeQuandleElement {
 public:
  FreeQuandleElement() = default;
  /// Same as normalize(generator, word).
  FreeQuandleElement(std::string generator, FreeWord word);
  explicit FreeQuandleElement(std::string generator) : generator_(std::move(generator)) {}

  const std::string& generator() const { return generator_; }
  const FreeWord& tail() const { return tail_; }
  bool is_generator() const { return tail_.empty(); }

  auto operator<=>(const FreeQuandleElement&) const = default;

 private:
  std::string generator_;
  FreeWord tail_;
};

FreeQuandleElement normalize(std::string generator, FreeWord word);

/// (a, w) ▷ (b, z) = (a, w z⁻¹ b z)
FreeQuandleElement rack_op(const FreeQuandleElement& x, const FreeQuandleElement& y);
/// (a, w) ◁ (b, z) = (a, w z⁻¹ b⁻¹ z)
FreeQuandleElement inv_rack_op(const FreeQuandleElement& x, const FreeQuandleElement& y);

/// All generator names occurring in the element (base and tail).
std::set<std::string> symbols(const FreeQuandleElement& x);

using Assignment = std::map<std::string, Element, std::less<>>;

/// Image of x under the homomorphism Q_S → target extending the assignment.
/// Throws DomainError naming the first symbol the assignment does not bind.
Element evaluate(const FreeQuandleElement& x, const Assignment& assignment, const FiniteQuandle& target);

/// Textual syntax: `base` or `base ^ l1 l2 ...` where each letter is a
/// generator name optionally followed by `'` for the inverse.
FreeQuandleElement parse_element(std::string_view text);
std::string to_string(const FreeQuandleElement& x);
std::string to_string(const FreeWord& w);

}  // namespace quandle
