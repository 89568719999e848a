#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "quandle/finite_quandle.hpp"
#include "quandle/link_diagram.hpp"
#include "quandle/presentation.hpp"

namespace quandle {

/// A ribbon concordance from K1 down to K0, read bottom-up: the base still
/// shows K0 together with the circles born so far, each band is a saddle
/// between two base arcs, and K1 is the knot left after the bands.
struct RibbonConcordanceDiagram {
  LinkDiagram base;
  std::vector<std::pair<std::string, std::string>> bands;
  LinkDiagram k1;
  // K1 arc (or edge) → element over base generators, witnessing Q(K1) → Q(C).
  std::map<std::string, FreeQuandleElement> k1_map;
  // K0 on its own and its arcs → base elements. When absent, K0 is the base
  // component through `k0_edge` (or the first component), and the birth
  // circles must never pass over it.
  std::optional<LinkDiagram> k0;
  std::map<std::string, FreeQuandleElement> k0_map;
  std::optional<std::string> k0_edge;
};

/// Checks births = bands, that the bands join every birth circle to K0, and
/// that both witness maps cover their knot. Throws StructuralError.
void validate(const RibbonConcordanceDiagram& rc);

/// Base presentation plus one relation a = b per band.
QuandlePresentation concordance_presentation(const RibbonConcordanceDiagram& rc);

/// K0's own diagram and the map of its arcs into the base generators.
std::pair<LinkDiagram, std::map<std::string, FreeQuandleElement>> k0_inclusion(const RibbonConcordanceDiagram& rc);

struct CheckOptions {
  std::size_t workers = 1;
  std::size_t keep_cap = ColoringOptions::kDefaultKeepCap;
};

struct SurjectivityResult {
  std::string target;
  std::uint64_t concordance_colorings = 0;
  std::uint64_t k1_colorings = 0;
  bool inequality_holds = true;      // col_T(C) ≤ col_T(K1)
  bool pushforward_injective = true;  // distinct C-colorings stay distinct on K1
  bool complete = true;              // false when colorings exceeded keep_cap
  std::vector<std::string> violations;
};

/// Throws ViolationError ("witness map ...") when a C-coloring pushed through
/// k1_map breaks a K1 crossing relation.
std::vector<SurjectivityResult> check_surjectivity_consequence(const RibbonConcordanceDiagram& rc,
                                                               const std::vector<FiniteQuandle>& targets,
                                                               const CheckOptions& options = {});

struct InjectivityResult {
  std::string target;
  std::uint64_t concordance_colorings = 0;
  std::uint64_t k0_colorings = 0;
  bool restriction_valid = true;
  std::uint64_t image_size = 0;
  // fiber size → number of K0 colorings in the image with that many preimages
  std::map<std::uint64_t, std::uint64_t> fiber_histogram;
  bool complete = true;
  std::vector<std::string> violations;
};

std::vector<InjectivityResult> check_injectivity_consequence(const RibbonConcordanceDiagram& rc,
                                                             const std::vector<FiniteQuandle>& targets,
                                                             const CheckOptions& options = {});

enum class Verdict { no_obstruction_found, obstructed, inconclusive };
std::string to_string(Verdict v);

struct ObstructionReport {
  Verdict verdict = Verdict::no_obstruction_found;
  std::string reason;
  // For `obstructed`: the target and a non-constant K0 coloring over K0's arcs.
  std::string target;
  std::vector<std::string> k0_arcs;
  std::vector<Element> certificate;
  std::uint64_t colorings_examined = 0;
};

/// Screens for K1 ≥ K0. The only certificate issued is the sound one: when
/// Q(K1) is trivial, Q(C) is trivial, so a non-constant K0 coloring rules the
/// concordance out. Examining more than `budget` colorings yields
/// `inconclusive`; nothing is ever reported obstructed without a certificate.
ObstructionReport obstruct_ribbon_concordance(const LinkDiagram& k1, const LinkDiagram& k0,
                                              const std::vector<FiniteQuandle>& targets, std::uint64_t budget,
                                              std::size_t workers = 1);

}  // namespace quandle
