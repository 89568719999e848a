#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "quandle/free_quandle.hpp"
#include "quandle/link_diagram.hpp"
#include "quandle/presentation.hpp"

namespace quandle {

/// σ_i^±1 letters on a fixed number of strands; a letter is the signed
/// index ±i with 1 ≤ i < strands.
class BraidWord {
 public:
  /// Throws DomainError when strands < 1 or an index is out of range.
  BraidWord(int strands, std::vector<int> letters);

  int strands() const { return strands_; }
  const std::vector<int>& letters() const { return letters_; }

 private:
  int strands_;
  std::vector<int> letters_;
};

/// Text form `q: i j -k ...`. Throws ParseError.
BraidWord parse_braid(std::string_view text);
std::string to_string(const BraidWord& braid);

/// Generator name of the j-th strand (1-based): x1, x2, ...
std::string strand_generator(int j);

/// Pushes the free generators x1..xq through the braid: σ_i sends
/// (s_i, s_{i+1}) to (s_{i+1}, s_i ▷ s_{i+1}); σ_i⁻¹ sends it to
/// (s_{i+1} ◁ s_i, s_i).
std::vector<FreeQuandleElement> braid_strand_action(const BraidWord& braid);

/// ⟨x1..xq | x_j = (final tuple)_j⟩.
QuandlePresentation braid_closure_presentation(const BraidWord& braid);

/// Planar diagram of the braid closure; σ_i is drawn as a positive crossing.
LinkDiagram braid_closure_diagram(const BraidWord& braid);

/// (σ1 σ2 ⋯ σ_{q−1})^p on q strands. Requires p > q ≥ 2.
BraidWord torus_knot_braid(int p, int q);

}  // namespace quandle
