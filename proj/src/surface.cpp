#include "quandle/surface.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "pd_grammar.hpp"
#include "quandle/error.hpp"

namespace quandle {

namespace {

// Symbolic still: which labels are live and how they group into components.
class MovieState {
 public:
  MovieState(const LinkDiagram& initial, QuandlePresentation& pres) : initial_(initial), pres_(pres) {
    for (const auto& a : initial.arcs()) {
      used_.insert(a);
      live_[a] = static_cast<int>(initial.component_of(a));
    }
    for (std::size_t c = 0; c < initial.components().size(); ++c)
      crossingless_[static_cast<int>(c)] = initial.is_crossingless_component(c);
    next_component_ = static_cast<int>(initial.components().size());
    for (const auto& x : initial.pd_crossings())
      for (const auto& e : x.edges) used_.insert(e);
  }

  void set_event(std::size_t index, const char* kind) {
    event_ = index;
    kind_ = kind;
  }

  [[noreturn]] void fail(const std::string& msg) const {
    throw StructuralError("event " + std::to_string(event_) + " (" + kind_ + "): " + msg);
  }

  std::string resolve(const std::string& label) const {
    if (live_.count(label)) return label;
    if (initial_.has_edge(label)) {
      const auto& arc = initial_.arc_of(label);
      if (live_.count(arc)) return arc;
    }
    fail("label '" + label + "' is not live");
  }

  FreeQuandleElement resolve(const FreeQuandleElement& x) const {
    std::vector<Letter> letters;
    for (const auto& l : x.tail().letters()) letters.push_back({resolve(l.symbol), l.exponent});
    return FreeQuandleElement(resolve(x.generator()), FreeWord(std::move(letters)));
  }

  void require_fresh(const std::string& label) const {
    if (!is_valid_symbol(label)) fail("invalid label '" + label + "'");
    if (used_.count(label)) fail("label '" + label + "' is not fresh");
  }

  void add_live(const std::string& label, int component, bool from_reidemeister) {
    used_.insert(label);
    live_[label] = component;
    if (from_reidemeister) reidemeister_.insert(label);
  }

  int new_component(bool crossingless) {
    crossingless_[next_component_] = crossingless;
    return next_component_++;
  }

  int component(const std::string& label) const { return live_.at(label); }

  void merge(int from, int into) {
    for (auto& [label, c] : live_)
      if (c == from) c = into;
    crossingless_[into] = crossingless_[into] && crossingless_[from];
  }

  bool is_crossingless(int component) const {
    if (!crossingless_.at(component)) return false;
    return std::none_of(live_.begin(), live_.end(), [&](const auto& kv) {
      return kv.second == component && reidemeister_.count(kv.first);
    });
  }

  void retire(const std::string& label) {
    live_.erase(label);
    reidemeister_.erase(label);
  }

  void retire_component(int component) {
    for (auto it = live_.begin(); it != live_.end();) {
      if (it->second == component) {
        reidemeister_.erase(it->first);
        it = live_.erase(it);
      } else {
        ++it;
      }
    }
  }

  bool empty() const { return live_.empty(); }
  std::string any_live() const { return live_.begin()->first; }

 private:
  const LinkDiagram& initial_;
  QuandlePresentation& pres_;
  std::set<std::string> used_;
  std::map<std::string, int> live_;
  std::map<int, bool> crossingless_;
  std::set<std::string> reidemeister_;
  int next_component_ = 0;
  std::size_t event_ = 0;
  const char* kind_ = "";
};

}  // namespace

QuandlePresentation movie_presentation(const MovieScript& script) {
  QuandlePresentation pres = quandle_presentation(script.initial);
  MovieState state(script.initial, pres);

  for (std::size_t i = 0; i < script.events.size(); ++i) {
    std::visit(
        [&](const auto& ev) {
          using T = std::decay_t<decltype(ev)>;
          if constexpr (std::is_same_v<T, BirthEvent>) {
            state.set_event(i, "birth");
            state.require_fresh(ev.label);
            pres.add_generator(ev.label);
            state.add_live(ev.label, state.new_component(true), false);
          } else if constexpr (std::is_same_v<T, SaddleEvent>) {
            state.set_event(i, "saddle");
            const auto a = state.resolve(ev.a);
            const auto b = state.resolve(ev.b);
            pres.add_relation(FreeQuandleElement(a), FreeQuandleElement(b));
            const int ca = state.component(a), cb = state.component(b);
            if (ev.split) {
              if (ca != cb) state.fail("split saddle needs both arcs on one component");
              state.require_fresh(*ev.split);
              pres.add_generator(*ev.split);
              pres.add_relation(FreeQuandleElement(*ev.split), FreeQuandleElement(a));
              state.add_live(*ev.split, state.new_component(state.is_crossingless(ca)), false);
            } else if (ca != cb) {
              state.merge(cb, ca);
            }
          } else if constexpr (std::is_same_v<T, DeathEvent>) {
            state.set_event(i, "death");
            const auto x = state.resolve(ev.label);
            const int c = state.component(x);
            if (!state.is_crossingless(c)) state.fail("component of '" + x + "' is not a crossingless loop");
            state.retire_component(c);
          } else if constexpr (std::is_same_v<T, ReidemeisterEvent>) {
            state.set_event(i, "reidemeister");
            std::vector<std::pair<std::string, FreeQuandleElement>> defs;
            for (const auto& [label, value] : ev.introduced) {
              state.require_fresh(label);
              defs.emplace_back(label, state.resolve(value));
            }
            std::vector<std::string> retired;
            for (const auto& r : ev.retired) retired.push_back(state.resolve(r));
            std::set<std::string> introduced_names;
            for (const auto& [label, value] : defs) {
              if (!introduced_names.insert(label).second) state.fail("label '" + label + "' introduced twice");
              pres.add_generator(label);
              pres.add_relation(FreeQuandleElement(label), value);
            }
            for (const auto& [label, value] : defs)
              state.add_live(label, state.component(value.generator()), true);
            for (const auto& r : retired) state.retire(r);
          } else if constexpr (std::is_same_v<T, BoundaryAppearEvent>) {
            state.set_event(i, "boundary_appear");
            for (const auto& g : ev.presentation.generators()) state.require_fresh(g);
            pres.append(ev.presentation);
            const int c = state.new_component(false);
            for (const auto& g : ev.presentation.generators()) state.add_live(g, c, false);
          } else if constexpr (std::is_same_v<T, BoundaryCapEvent>) {
            state.set_event(i, "boundary_cap");
            std::vector<int> comps;
            for (const auto& a : ev.arcs) comps.push_back(state.component(state.resolve(a)));
            for (int c : comps) state.retire_component(c);
          }
        },
        script.events[i]);
  }
  if (script.closed && !state.empty()) {
    state.set_event(script.events.size(), "end");
    state.fail("closed script ends with live label '" + state.any_live() + "'");
  }
  return pres;
}

// ---------------------------------------------------------------------------
// Marked graph diagrams

MarkedGraphDiagram::MarkedGraphDiagram(std::vector<PdCrossing> crossings, std::vector<std::string> loops,
                                       std::vector<Marker> markers)
    : crossings_(std::move(crossings)), loops_(std::move(loops)), markers_(std::move(markers)) {
  std::map<std::string, int> ends;
  for (const auto& x : crossings_)
    for (const auto& e : x.edges) ++ends[e];
  for (std::size_t i = 0; i < markers_.size(); ++i) {
    if (markers_[i].orientation != 0 && markers_[i].orientation != 1)
      throw StructuralError("marker " + std::to_string(i) + " orientation must be 0 or 1");
    for (const auto& e : markers_[i].ends) ++ends[e];
  }
  for (const auto& [e, n] : ends) {
    if (!is_valid_symbol(e)) throw StructuralError("invalid edge label '" + e + "'");
    if (n != 2) throw StructuralError("edge '" + e + "' has " + std::to_string(n) + " ends, expected 2");
  }
  for (const auto& l : loops_)
    if (ends.count(l)) throw StructuralError("loop '" + l + "' also occurs at a vertex");
}

MarkedGraphDiagram parse_marked_graph(std::string_view text) {
  std::vector<PdCrossing> crossings;
  std::vector<std::string> loops;
  std::vector<Marker> markers;
  for (auto& entry : detail::scan_pd_entries(text, "XOM")) {
    const auto& l = entry.labels;
    if (entry.kind == 'X') {
      if (l.size() != 4) throw ParseError("crossing needs 4 labels", entry.line, entry.column);
      crossings.push_back({{l[0], l[1], l[2], l[3]}});
    } else if (entry.kind == 'O') {
      if (l.size() != 1) throw ParseError("loop needs 1 label", entry.line, entry.column);
      loops.push_back(l[0]);
    } else {
      if (l.size() != 5) throw ParseError("marker needs 4 labels and an orientation", entry.line, entry.column);
      if (l[4] != "0" && l[4] != "1") throw ParseError("marker orientation must be 0 or 1", entry.line, entry.column);
      markers.push_back({{l[0], l[1], l[2], l[3]}, l[4] == "1" ? 1 : 0});
    }
  }
  return MarkedGraphDiagram(std::move(crossings), std::move(loops), std::move(markers));
}

namespace {

std::array<std::pair<int, int>, 2> smoothing(const Marker& m, MarkerSide side) {
  const bool first_pairing = (m.orientation == 0) == (side == MarkerSide::lower);
  if (first_pairing) return {{{0, 1}, {2, 3}}};
  return {{{0, 3}, {1, 2}}};
}

}  // namespace

Resolution resolve_markers(const MarkedGraphDiagram& mgd, MarkerSide side) {
  std::vector<std::string> labels;
  for (const auto& x : mgd.crossings())
    for (const auto& e : x.edges) labels.push_back(e);
  for (const auto& m : mgd.markers())
    for (const auto& e : m.ends) labels.push_back(e);
  std::sort(labels.begin(), labels.end(), label_less);
  labels.erase(std::unique(labels.begin(), labels.end()), labels.end());
  std::map<std::string, std::size_t> index;
  for (std::size_t i = 0; i < labels.size(); ++i) index[labels[i]] = i;

  std::vector<std::size_t> parent(labels.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& m : mgd.markers())
    for (const auto& [i, j] : smoothing(m, side)) {
      // keep the smaller label as the root
      auto a = find(index[m.ends[static_cast<std::size_t>(i)]]);
      auto b = find(index[m.ends[static_cast<std::size_t>(j)]]);
      if (a > b) std::swap(a, b);
      parent[b] = a;
    }

  Resolution out;
  for (const auto& l : labels) out.edge_map[l] = labels[find(index[l])];
  std::set<std::string> at_crossings;
  std::vector<PdCrossing> pd;
  for (const auto& x : mgd.crossings()) {
    PdCrossing y;
    for (std::size_t s = 0; s < 4; ++s) {
      y.edges[s] = out.edge_map[x.edges[s]];
      at_crossings.insert(y.edges[s]);
    }
    pd.push_back(std::move(y));
  }
  std::vector<std::string> loops = mgd.loops();
  std::set<std::string> new_loops;
  for (const auto& [l, rep] : out.edge_map)
    if (!at_crossings.count(rep) && new_loops.insert(rep).second) loops.push_back(rep);
  for (const auto& l : mgd.loops()) out.edge_map[l] = l;
  for (const auto& m : mgd.markers()) {
    const auto pairs = smoothing(m, side);
    out.marker_edges.emplace_back(out.edge_map[m.ends[static_cast<std::size_t>(pairs[0].first)]],
                                  out.edge_map[m.ends[static_cast<std::size_t>(pairs[1].first)]]);
  }
  out.diagram = LinkDiagram(std::move(pd), std::move(loops));
  return out;
}

QuandlePresentation ch_presentation(const MarkedGraphDiagram& mgd) {
  const auto lower = resolve_markers(mgd, MarkerSide::lower);
  QuandlePresentation pres = quandle_presentation(lower.diagram);
  for (const auto& [e1, e2] : lower.marker_edges) {
    const auto& x = lower.diagram.arc_of(e1);
    const auto& y = lower.diagram.arc_of(e2);
    if (x != y) pres.add_relation(FreeQuandleElement(x), FreeQuandleElement(y));
  }
  return pres;
}

MovieScript hyperbolic_splitting_movie(const MarkedGraphDiagram& mgd) {
  auto lower = resolve_markers(mgd, MarkerSide::lower);
  MovieScript script{lower.diagram, {}, true};
  for (const auto& [e1, e2] : lower.marker_edges) script.events.push_back(SaddleEvent{e1, e2, std::nullopt});
  if (!lower.diagram.arcs().empty()) script.events.push_back(BoundaryCapEvent{lower.diagram.arcs()});
  return script;
}

}  // namespace quandle
