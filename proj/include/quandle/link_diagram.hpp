#pragma once

#include <array>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "quandle/presentation.hpp"

namespace quandle {

/// One `X[a,b,c,d]` entry: edge labels listed counterclockwise starting from
/// the incoming under-edge. Slots 0/2 are the under-strand (in/out), slots 1/3
/// the over-strand.
struct PdCrossing {
  std::array<std::string, 4> edges;
};

/// Crossing in arc terms: the relation at a positive crossing is
/// under_out = under_in ▷ over, at a negative one under_out = under_in ◁ over.
struct Crossing {
  std::string over;
  std::string under_in;
  std::string under_out;
  int sign = 1;
};

/// Orders labels numerically when both are all-digit, otherwise lexically,
/// with numeric labels first.
bool label_less(const std::string& a, const std::string& b);

class LinkDiagram {
 public:
  LinkDiagram() = default;
  /// Validates edge incidence and orientation. Throws StructuralError naming
  /// the offending edge.
  LinkDiagram(std::vector<PdCrossing> crossings, std::vector<std::string> loops);

  const std::vector<PdCrossing>& pd_crossings() const { return pd_; }
  const std::vector<std::string>& loops() const { return loops_; }

  const std::vector<std::string>& arcs() const { return arcs_; }
  const std::vector<Crossing>& crossings() const { return crossings_; }
  /// Arcs of each component in traversal order.
  const std::vector<std::vector<std::string>>& components() const { return components_; }

  bool has_edge(const std::string& edge) const { return edge_arc_.count(edge) > 0; }
  /// Arc containing the given edge label; throws DomainError if unknown.
  const std::string& arc_of(const std::string& edge) const;
  /// Index into components() of the component through the given edge.
  std::size_t component_of(const std::string& edge) const;
  bool is_crossingless_component(std::size_t component) const;

 private:
  std::vector<PdCrossing> pd_;
  std::vector<std::string> loops_;
  std::vector<std::string> arcs_;
  std::vector<Crossing> crossings_;
  std::vector<std::vector<std::string>> components_;
  std::vector<char> component_crossingless_;
  std::map<std::string, std::string> edge_arc_;
  std::map<std::string, std::size_t> edge_component_;
};

/// Grammar (see docs/formats.md): entries `X[a,b,c,d]` and `O[a]` separated
/// by whitespace, commas or semicolons; `#` starts a comment.
/// Throws ParseError with line/column, StructuralError for bad incidence.
LinkDiagram parse_pd(std::string_view text);
std::string to_pd_text(const LinkDiagram& diagram);

/// Reverses every crossing sign by swapping the over-strand slots.
LinkDiagram mirror(const LinkDiagram& diagram);

/// One generator per arc, one crossing relation per crossing.
QuandlePresentation quandle_presentation(const LinkDiagram& diagram);

}  // namespace quandle
