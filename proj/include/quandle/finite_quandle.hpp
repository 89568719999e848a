#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace quandle {

using Element = std::uint32_t;
using Table = std::vector<std::vector<std::int64_t>>;

struct AxiomViolation {
  int axiom;  // 1, 2 or 3
  Element x;
  Element y;
  Element z;  // unused for axioms 1 and 2
};

struct AxiomReport {
  static constexpr std::size_t kMaxViolations = 20;

  bool valid = true;
  std::vector<AxiomViolation> violations;
  bool truncated = false;
};

/// Exhaustively checks the three quandle axioms on a square table whose row x,
/// column y entry is x ▷ y. Throws DomainError naming the first cell that is
/// out of range or a row of the wrong length.
AxiomReport verify_axioms(const Table& table);

/// A finite group given by its multiplication table; inverses and the
/// identity are derived and validated at construction.
class FiniteGroup {
 public:
  /// Throws DomainError with a witness when the table is not a group, or when
  /// a supplied inverse table disagrees with the multiplication.
  static FiniteGroup from_table(const Table& mul, const std::optional<Table>& inv = std::nullopt);

  std::size_t size() const { return n_; }
  Element mul(Element a, Element b) const { return mul_[a * n_ + b]; }
  Element inv(Element a) const { return inv_[a]; }
  Element identity() const { return identity_; }

 private:
  FiniteGroup() = default;
  std::size_t n_ = 0;
  std::vector<Element> mul_;
  std::vector<Element> inv_;
  Element identity_ = 0;
};

FiniteGroup cyclic_group(std::size_t n);
FiniteGroup symmetric_group(std::size_t degree);
/// Symmetries of the regular n-gon, order 2n.
FiniteGroup dihedral_group(std::size_t n);

class FiniteQuandle {
 public:
  /// Validates the axioms; throws DomainError carrying the first violation.
  static FiniteQuandle from_table(const Table& table, std::string name = "table");

  std::size_t size() const { return n_; }
  Element op(Element x, Element y) const { return op_[x * n_ + y]; }
  Element inv_op(Element x, Element y) const { return inv_op_[x * n_ + y]; }
  const std::string& name() const { return name_; }
  Table table() const;

  bool operator==(const FiniteQuandle& other) const { return n_ == other.n_ && op_ == other.op_; }

 private:
  friend FiniteQuandle dihedral_quandle(std::size_t n);
  friend FiniteQuandle conjugation_quandle(const FiniteGroup& group, std::string name);

  FiniteQuandle(std::size_t n, std::vector<Element> op, std::string name);

  std::size_t n_ = 0;
  std::vector<Element> op_;
  std::vector<Element> inv_op_;
  std::string name_;
};

/// x ▷ y = 2y − x mod n. Throws DomainError for n = 0.
FiniteQuandle dihedral_quandle(std::size_t n);

/// a ▷ b = b⁻¹ab.
FiniteQuandle conjugation_quandle(const FiniteGroup& group, std::string name = "conj");

/// Dihedral n ∈ {3,4,5,7} followed by conj(S3).
std::vector<FiniteQuandle> standard_battery();

struct QuandleMap {
  const FiniteQuandle* source;
  const FiniteQuandle* target;
  std::vector<Element> values;
};

struct HomomorphismCheck {
  bool is_homomorphism = true;
  // First pair (x, y) in row-major order where ▷ or ◁ is not preserved.
  std::optional<std::pair<Element, Element>> counterexample;
  bool inverse_operation = false;  // true when the counterexample breaks ◁
};

/// Throws DomainError when values has the wrong length or an entry is out of
/// the target's range.
HomomorphismCheck is_homomorphism(const QuandleMap& map);

}  // namespace quandle
