#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "quandle/link_diagram.hpp"
#include "quandle/presentation.hpp"

namespace quandle {

// Motion picture events. Labels name generators of the presentation built so
// far; labels of the initial still may also be given as any of its PD edges.

/// Index-0 critical point: a fresh crossingless circle.
struct BirthEvent {
  std::string label;
};

/// Index-1 critical point joining arcs a and b. When `split` is set, a and b
/// lie on one component and the band splits off a new circle named `split`.
struct SaddleEvent {
  std::string a;
  std::string b;
  std::optional<std::string> split;
};

/// Index-2 critical point capping a crossingless circle.
struct DeathEvent {
  std::string label;
};

/// A Reidemeister move between stills: the retired arcs leave the still and
/// each introduced arc is defined as an element over the current labels.
struct ReidemeisterEvent {
  std::vector<std::string> retired;
  std::vector<std::pair<std::string, FreeQuandleElement>> introduced;
};

/// A (possibly knotted) boundary component appears, given by its presentation.
struct BoundaryAppearEvent {
  QuandlePresentation presentation;
};

/// The surface ends in the boundary components through the listed arcs.
struct BoundaryCapEvent {
  std::vector<std::string> arcs;
};

using MovieEvent = std::variant<BirthEvent, SaddleEvent, DeathEvent, ReidemeisterEvent, BoundaryAppearEvent,
                                BoundaryCapEvent>;

struct MovieScript {
  LinkDiagram initial;
  std::vector<MovieEvent> events;
  // A closed script must leave no live labels at the end.
  bool closed = false;
};

/// Folds the events over the presentation of the initial still. Throws
/// StructuralError naming the event index and label on any invalid reference.
QuandlePresentation movie_presentation(const MovieScript& script);

/// A marked 4-valent vertex: edge ends in counterclockwise order. With
/// orientation 0 the lower resolution joins (e0,e1) and (e2,e3) and the upper
/// joins (e0,e3) and (e1,e2); orientation 1 swaps the two.
struct Marker {
  std::array<std::string, 4> ends;
  int orientation = 0;
};

class MarkedGraphDiagram {
 public:
  MarkedGraphDiagram() = default;
  /// Throws StructuralError when an edge does not have exactly two ends among
  /// crossings and markers, or an orientation is not 0/1.
  MarkedGraphDiagram(std::vector<PdCrossing> crossings, std::vector<std::string> loops, std::vector<Marker> markers);

  const std::vector<PdCrossing>& crossings() const { return crossings_; }
  const std::vector<std::string>& loops() const { return loops_; }
  const std::vector<Marker>& markers() const { return markers_; }

 private:
  std::vector<PdCrossing> crossings_;
  std::vector<std::string> loops_;
  std::vector<Marker> markers_;
};

/// PD grammar plus `M[a,b,c,d,o]` marker entries with o ∈ {0,1}.
MarkedGraphDiagram parse_marked_graph(std::string_view text);

enum class MarkerSide { lower, upper };

struct Resolution {
  LinkDiagram diagram;
  // Every edge label of the marked graph → edge label in `diagram`.
  std::map<std::string, std::string> edge_map;
  // For each marker, the two resolved edges passing through it.
  std::vector<std::pair<std::string, std::string>> marker_edges;
};

Resolution resolve_markers(const MarkedGraphDiagram& mgd, MarkerSide side);

/// Presentation of the lower resolution plus x_i = y_i for the two arcs
/// meeting at each marker (dropped when they coincide).
QuandlePresentation ch_presentation(const MarkedGraphDiagram& mgd);

/// Motion picture of the hyperbolic splitting: lower resolution as the first
/// still, a saddle per marker, then every remaining component capped.
MovieScript hyperbolic_splitting_movie(const MarkedGraphDiagram& mgd);

}  // namespace quandle
