#pragma once

#include <chrono>
#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "quandle/finite_quandle.hpp"
#include "quandle/free_quandle.hpp"

namespace quandle {

struct Relation {
  FreeQuandleElement lhs;
  FreeQuandleElement rhs;

  bool is_tautology() const { return lhs == rhs; }
  /// Orientation-insensitive equality.
  bool same_as(const Relation& other) const {
    return (lhs == other.lhs && rhs == other.rhs) || (lhs == other.rhs && rhs == other.lhs);
  }
};

/// ⟨X | R⟩ with X kept in insertion order.
class QuandlePresentation {
 public:
  QuandlePresentation() = default;
  /// Throws DomainError on duplicate or invalid generator names, or when a
  /// relation mentions a symbol outside the generator set.
  QuandlePresentation(std::vector<std::string> generators, std::vector<Relation> relations);

  const std::vector<std::string>& generators() const { return generators_; }
  const std::vector<Relation>& relations() const { return relations_; }
  bool has_generator(const std::string& name) const { return index_.count(name) > 0; }
  std::size_t index_of(const std::string& name) const;

  void add_generator(const std::string& name);
  void add_relation(FreeQuandleElement lhs, FreeQuandleElement rhs);
  /// Disjoint union; throws DomainError when generator names collide.
  void append(const QuandlePresentation& other);

  /// Sum over relations of both tail lengths plus two.
  std::size_t total_relation_length() const;

 private:
  void check_symbols(const FreeQuandleElement& x) const;

  std::vector<std::string> generators_;
  std::map<std::string, std::size_t, std::less<>> index_;
  std::vector<Relation> relations_;
};

struct ColoringOptions {
  static constexpr std::size_t kDefaultKeepCap = 100000;

  bool keep = false;
  std::size_t keep_cap = kDefaultKeepCap;
  std::size_t workers = 1;
  // false selects plain odometer enumeration of every assignment
  bool propagate = true;
};

struct ColoringReport {
  std::string target;
  std::size_t target_size = 0;
  std::uint64_t count = 0;
  // Retained colorings, each indexed like the presentation's generators,
  // sorted lexicographically. Holds the smallest keep_cap when truncated.
  std::vector<std::vector<Element>> colorings;
  bool truncated = false;
  std::chrono::nanoseconds elapsed{0};
};

/// Number of maps X → target under which every relation's sides evaluate
/// equal. The count and retained list do not depend on options.workers.
ColoringReport count_colorings(const QuandlePresentation& pres, const FiniteQuandle& target,
                               const ColoringOptions& options = {});

/// Replaces generator g by value everywhere and drops g from the generator
/// set. Throws DomainError when g is not a generator, when g occurs in value
/// (cyclic substitution), or when value mentions an unknown symbol.
QuandlePresentation substitute(const QuandlePresentation& pres, const std::string& g,
                               const FreeQuandleElement& value);
FreeQuandleElement substitute(const FreeQuandleElement& x, const std::string& g,
                              const FreeQuandleElement& value);

/// Tietze-style reduction: merge generators equated by a relation, eliminate
/// generators defined by a relation, drop tautologies and duplicates.
QuandlePresentation simplify(const QuandlePresentation& pres);

}  // namespace quandle
