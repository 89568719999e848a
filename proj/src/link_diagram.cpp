#include "quandle/link_diagram.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <set>
#include <sstream>

#include "pd_grammar.hpp"
#include "quandle/error.hpp"

namespace quandle {

bool label_less(const std::string& a, const std::string& b) {
  auto numeric = [](const std::string& s) {
    return !s.empty() && s.size() < 19 &&
           std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); });
  };
  const bool na = numeric(a), nb = numeric(b);
  if (na && nb) {
    const auto va = std::stoll(a), vb = std::stoll(b);
    return va != vb ? va < vb : a < b;
  }
  if (na != nb) return na;
  return a < b;
}

namespace {

struct Slot {
  std::size_t crossing;
  int slot;
  bool operator==(const Slot&) const = default;
};

int partner(int slot) { return (slot + 2) % 4; }

class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) { parent_[find(a)] = find(b); }

 private:
  std::vector<std::size_t> parent_;
};

}  // namespace

LinkDiagram::LinkDiagram(std::vector<PdCrossing> crossings, std::vector<std::string> loops)
    : pd_(std::move(crossings)), loops_(std::move(loops)) {
  // Edge incidence: each crossing edge occurs in exactly two slots.
  std::map<std::string, std::vector<Slot>> ends;
  std::vector<std::string> edges;  // first-appearance order
  for (std::size_t c = 0; c < pd_.size(); ++c)
    for (int s = 0; s < 4; ++s) {
      const auto& e = pd_[c].edges[s];
      if (!is_valid_symbol(e)) throw StructuralError("invalid edge label '" + e + "'");
      auto& v = ends[e];
      if (v.empty()) edges.push_back(e);
      v.push_back({c, s});
    }
  for (const auto& [e, v] : ends)
    if (v.size() != 2)
      throw StructuralError("edge '" + e + "' has " + std::to_string(v.size()) + " crossing ends, expected 2");
  std::set<std::string> loop_set;
  for (const auto& l : loops_) {
    if (!is_valid_symbol(l)) throw StructuralError("invalid loop label '" + l + "'");
    if (ends.count(l)) throw StructuralError("loop '" + l + "' also occurs at a crossing");
    if (!loop_set.insert(l).second) throw StructuralError("loop '" + l + "' declared twice");
  }

  // Trace components; orientation comes from under passages.
  std::vector<std::size_t> crossing_sign_entry(pd_.size(), 4);  // actual entry slot of over strand
  std::set<std::string> visited;
  std::vector<std::string> sorted_edges = edges;
  std::sort(sorted_edges.begin(), sorted_edges.end(), label_less);

  struct Passage {
    std::string edge;  // edge entering the crossing
    Slot entry;
  };
  std::vector<std::vector<Passage>> traces;
  for (const auto& start : sorted_edges) {
    if (visited.count(start)) continue;
    std::vector<Passage> trace;
    std::string edge = start;
    Slot entry = ends[start][1];
    while (true) {
      visited.insert(edge);
      trace.push_back({edge, entry});
      const Slot exit{entry.crossing, partner(entry.slot)};
      const std::string& next = pd_[exit.crossing].edges[exit.slot];
      const auto& ne = ends[next];
      const Slot next_entry = ne[0] == exit ? ne[1] : ne[0];
      if (next == start && next_entry == trace.front().entry) break;
      edge = next;
      entry = next_entry;
    }
    traces.push_back(std::move(trace));
  }

  std::vector<int> direction(traces.size(), 0);
  for (std::size_t t = 0; t < traces.size(); ++t) {
    for (const auto& p : traces[t]) {
      if (p.entry.slot % 2 != 0) continue;
      const int d = p.entry.slot == 0 ? 1 : -1;
      if (direction[t] == 0)
        direction[t] = d;
      else if (direction[t] != d)
        throw StructuralError("inconsistent orientation along edge '" + p.edge + "'");
    }
    // A component that never passes under keeps its traversal direction.
    if (direction[t] == 0) direction[t] = 1;
    for (const auto& p : traces[t]) {
      if (p.entry.slot % 2 == 0) continue;
      const int actual_entry = direction[t] > 0 ? p.entry.slot : partner(p.entry.slot);
      crossing_sign_entry[p.entry.crossing] = static_cast<std::size_t>(actual_entry);
    }
  }

  // Arcs: edges glued through over-passes.
  std::map<std::string, std::size_t> edge_index;
  for (std::size_t i = 0; i < sorted_edges.size(); ++i) edge_index[sorted_edges[i]] = i;
  UnionFind uf(sorted_edges.size());
  for (const auto& x : pd_) uf.unite(edge_index[x.edges[1]], edge_index[x.edges[3]]);
  std::map<std::size_t, std::string> root_name;
  for (const auto& e : sorted_edges) {  // sorted, so the first seen is the smallest
    const auto r = uf.find(edge_index[e]);
    if (!root_name.count(r)) root_name[r] = e;
    edge_arc_[e] = root_name[r];
  }
  for (const auto& l : loops_) edge_arc_[l] = l;
  std::set<std::string> arc_set;
  for (const auto& [e, a] : edge_arc_) arc_set.insert(a);
  arcs_.assign(arc_set.begin(), arc_set.end());
  std::sort(arcs_.begin(), arcs_.end(), label_less);

  for (std::size_t c = 0; c < pd_.size(); ++c) {
    const auto& x = pd_[c].edges;
    crossings_.push_back({edge_arc_[x[1]], edge_arc_[x[0]], edge_arc_[x[2]], crossing_sign_entry[c] == 3 ? 1 : -1});
  }

  for (std::size_t t = 0; t < traces.size(); ++t) {
    std::vector<std::string> comp;
    auto trace = traces[t];
    if (direction[t] < 0) std::reverse(trace.begin(), trace.end());
    for (const auto& p : trace) {
      const auto& a = edge_arc_[p.edge];
      if (std::find(comp.begin(), comp.end(), a) == comp.end()) comp.push_back(a);
      edge_component_[p.edge] = components_.size();
    }
    components_.push_back(std::move(comp));
    component_crossingless_.push_back(0);
  }
  for (const auto& l : loops_) {
    edge_component_[l] = components_.size();
    components_.push_back({l});
    component_crossingless_.push_back(1);
  }
}

const std::string& LinkDiagram::arc_of(const std::string& edge) const {
  const auto it = edge_arc_.find(edge);
  if (it == edge_arc_.end()) throw DomainError("unknown edge '" + edge + "'");
  return it->second;
}

std::size_t LinkDiagram::component_of(const std::string& edge) const {
  const auto it = edge_component_.find(edge);
  if (it == edge_component_.end()) throw DomainError("unknown edge '" + edge + "'");
  return it->second;
}

bool LinkDiagram::is_crossingless_component(std::size_t component) const {
  return component_crossingless_.at(component) != 0;
}

LinkDiagram parse_pd(std::string_view text) {
  std::vector<PdCrossing> crossings;
  std::vector<std::string> loops;
  for (auto& entry : detail::scan_pd_entries(text, "XO")) {
    if (entry.kind == 'X') {
      if (entry.labels.size() != 4)
        throw ParseError("crossing needs 4 labels, got " + std::to_string(entry.labels.size()), entry.line,
                         entry.column);
      crossings.push_back({{entry.labels[0], entry.labels[1], entry.labels[2], entry.labels[3]}});
    } else {
      if (entry.labels.size() != 1)
        throw ParseError("loop needs 1 label, got " + std::to_string(entry.labels.size()), entry.line,
                         entry.column);
      loops.push_back(std::move(entry.labels[0]));
    }
  }
  return LinkDiagram(std::move(crossings), std::move(loops));
}

std::string to_pd_text(const LinkDiagram& diagram) {
  std::ostringstream os;
  bool first = true;
  for (const auto& x : diagram.pd_crossings()) {
    os << (first ? "" : " ") << "X[" << x.edges[0] << ',' << x.edges[1] << ',' << x.edges[2] << ','
       << x.edges[3] << ']';
    first = false;
  }
  for (const auto& l : diagram.loops()) {
    os << (first ? "" : " ") << "O[" << l << ']';
    first = false;
  }
  return os.str();
}

LinkDiagram mirror(const LinkDiagram& diagram) {
  auto pd = diagram.pd_crossings();
  for (auto& x : pd) std::swap(x.edges[1], x.edges[3]);
  return LinkDiagram(std::move(pd), diagram.loops());
}

QuandlePresentation quandle_presentation(const LinkDiagram& diagram) {
  QuandlePresentation pres;
  for (const auto& a : diagram.arcs()) pres.add_generator(a);
  for (const auto& c : diagram.crossings()) {
    FreeWord w({{c.over, c.sign}});
    pres.add_relation(FreeQuandleElement(c.under_out), FreeQuandleElement(c.under_in, std::move(w)));
  }
  return pres;
}

}  // namespace quandle
