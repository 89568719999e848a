#include "quandle/concordance.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "quandle/error.hpp"
#include "quandle/surface.hpp"

namespace quandle {

namespace {

// Witness map keyed by arc, covering every arc of `knot`.
std::map<std::string, FreeQuandleElement> normalize_witness(const LinkDiagram& knot,
                                                           const std::map<std::string, FreeQuandleElement>& map,
                                                           const LinkDiagram& base, const char* what) {
  std::map<std::string, FreeQuandleElement> out;
  for (const auto& [key, value] : map) {
    if (!knot.has_edge(key)) throw StructuralError(std::string(what) + " names unknown arc '" + key + "'");
    // Base edges stand for their arcs.
    auto arc_of = [&](const std::string& s) -> const std::string& {
      if (!base.has_edge(s))
        throw StructuralError(std::string(what) + " value " + to_string(value) + " uses '" + s +
                              "', which is not in the base");
      return base.arc_of(s);
    };
    std::vector<Letter> letters;
    for (const auto& l : value.tail().letters()) letters.push_back({arc_of(l.symbol), l.exponent});
    FreeQuandleElement image(arc_of(value.generator()), FreeWord(std::move(letters)));
    const auto& arc = knot.arc_of(key);
    auto [it, inserted] = out.emplace(arc, image);
    if (!inserted && it->second != image)
      throw StructuralError(std::string(what) + " assigns arc '" + arc + "' two different values");
  }
  for (const auto& arc : knot.arcs())
    if (!out.count(arc)) throw StructuralError(std::string(what) + " does not cover arc '" + arc + "'");
  return out;
}

std::size_t k0_component(const RibbonConcordanceDiagram& rc) {
  if (rc.k0_edge) {
    if (!rc.base.has_edge(*rc.k0_edge)) throw StructuralError("k0 edge '" + *rc.k0_edge + "' is not in the base");
    return rc.base.component_of(*rc.k0_edge);
  }
  return 0;
}

std::vector<std::string> sorted_edges_of(const LinkDiagram& d, std::size_t component) {
  std::set<std::string> edges;
  for (const auto& x : d.pd_crossings())
    for (const auto& e : x.edges)
      if (d.component_of(e) == component) edges.insert(e);
  for (const auto& l : d.loops())
    if (d.component_of(l) == component) edges.insert(l);
  std::vector<std::string> out(edges.begin(), edges.end());
  std::sort(out.begin(), out.end(), label_less);
  return out;
}

Assignment assignment_of(const QuandlePresentation& pres, const std::vector<Element>& coloring) {
  Assignment a;
  for (std::size_t i = 0; i < coloring.size(); ++i) a.emplace(pres.generators()[i], coloring[i]);
  return a;
}

std::vector<Element> push_through(const LinkDiagram& knot, const std::map<std::string, FreeQuandleElement>& map,
                                  const Assignment& a, const FiniteQuandle& target) {
  std::vector<Element> out;
  out.reserve(knot.arcs().size());
  for (const auto& arc : knot.arcs()) out.push_back(evaluate(map.at(arc), a, target));
  return out;
}

// First relation of `pres` broken by the coloring, if any.
const Relation* broken_relation(const QuandlePresentation& pres, const std::vector<Element>& coloring,
                                const FiniteQuandle& target) {
  const auto a = assignment_of(pres, coloring);
  for (const auto& r : pres.relations())
    if (evaluate(r.lhs, a, target) != evaluate(r.rhs, a, target)) return &r;
  return nullptr;
}

}  // namespace

void validate(const RibbonConcordanceDiagram& rc) {
  const auto& comps = rc.base.components();
  if (comps.empty()) throw StructuralError("base diagram is empty");
  const std::size_t births = comps.size() - 1;
  if (births != rc.bands.size())
    throw StructuralError("base has " + std::to_string(births) + " birth circles but " +
                          std::to_string(rc.bands.size()) + " bands");

  std::vector<std::size_t> parent(comps.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& [a, b] : rc.bands) {
    for (const auto* e : {&a, &b})
      if (!rc.base.has_edge(*e)) throw StructuralError("band names unknown base arc '" + *e + "'");
    parent[find(rc.base.component_of(a))] = find(rc.base.component_of(b));
  }
  const std::size_t k0 = k0_component(rc);
  for (std::size_t c = 0; c < comps.size(); ++c)
    if (find(c) != find(k0))
      throw StructuralError("birth circle through '" + comps[c].front() + "' is not joined to K0 by the bands");

  normalize_witness(rc.k1, rc.k1_map, rc.base, "k1 map");
  if (rc.k1.components().size() != 1) throw StructuralError("K1 must be a knot");
  k0_inclusion(rc);
}

std::pair<LinkDiagram, std::map<std::string, FreeQuandleElement>> k0_inclusion(const RibbonConcordanceDiagram& rc) {
  if (rc.k0) {
    if (rc.k0->components().size() != 1) throw StructuralError("K0 must be a knot");
    return {*rc.k0, normalize_witness(*rc.k0, rc.k0_map, rc.base, "k0 map")};
  }
  const std::size_t comp = k0_component(rc);
  const auto edges = sorted_edges_of(rc.base, comp);
  std::map<std::string, std::size_t> index;
  for (std::size_t i = 0; i < edges.size(); ++i) index[edges[i]] = i;
  std::vector<std::size_t> parent(edges.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  auto unite = [&](std::size_t a, std::size_t b) {
    a = find(a), b = find(b);
    if (a > b) std::swap(a, b);
    parent[b] = a;
  };

  std::vector<PdCrossing> kept;
  for (std::size_t c = 0; c < rc.base.pd_crossings().size(); ++c) {
    const auto& x = rc.base.pd_crossings()[c];
    const bool under_k0 = rc.base.component_of(x.edges[0]) == comp;
    const bool over_k0 = rc.base.component_of(x.edges[1]) == comp;
    if (under_k0 && !over_k0)
      throw StructuralError("a birth circle passes over K0 at crossing " + std::to_string(c) +
                            "; supply k0 and k0_map explicitly");
    if (under_k0 && over_k0)
      kept.push_back(x);
    else if (over_k0)
      unite(index[x.edges[1]], index[x.edges[3]]);
  }
  auto rep = [&](const std::string& e) { return edges[find(index.at(e))]; };
  for (auto& x : kept)
    for (auto& e : x.edges) e = rep(e);
  std::vector<std::string> loops;
  if (kept.empty()) loops.push_back(edges.front());
  LinkDiagram k0(std::move(kept), std::move(loops));
  std::map<std::string, FreeQuandleElement> map;
  for (const auto& arc : k0.arcs()) map.emplace(arc, FreeQuandleElement(rc.base.arc_of(arc)));
  return {std::move(k0), std::move(map)};
}

QuandlePresentation concordance_presentation(const RibbonConcordanceDiagram& rc) {
  validate(rc);
  MovieScript script{rc.base, {}, false};
  for (const auto& [a, b] : rc.bands) script.events.push_back(SaddleEvent{a, b, std::nullopt});
  return movie_presentation(script);
}

std::vector<SurjectivityResult> check_surjectivity_consequence(const RibbonConcordanceDiagram& rc,
                                                               const std::vector<FiniteQuandle>& targets,
                                                               const CheckOptions& options) {
  const auto pres_c = concordance_presentation(rc);
  const auto pres_k1 = quandle_presentation(rc.k1);
  const auto k1_map = normalize_witness(rc.k1, rc.k1_map, rc.base, "k1 map");

  std::vector<SurjectivityResult> results;
  for (const auto& t : targets) {
    SurjectivityResult r;
    r.target = t.name();
    const auto c = count_colorings(pres_c, t, {true, options.keep_cap, options.workers, true});
    r.concordance_colorings = c.count;
    r.k1_colorings = count_colorings(pres_k1, t, {false, 0, options.workers, true}).count;
    r.complete = !c.truncated;
    r.inequality_holds = r.concordance_colorings <= r.k1_colorings;
    if (!r.inequality_holds)
      r.violations.push_back("col(C) = " + std::to_string(r.concordance_colorings) + " exceeds col(K1) = " +
                             std::to_string(r.k1_colorings));

    std::set<std::vector<Element>> pushed;
    for (std::size_t i = 0; i < c.colorings.size(); ++i) {
      auto image = push_through(rc.k1, k1_map, assignment_of(pres_c, c.colorings[i]), t);
      if (const auto* bad = broken_relation(pres_k1, image, t))
        throw ViolationError("witness map: for target " + t.name() + ", coloring " + std::to_string(i) +
                             " of Q(C) breaks the K1 relation " + to_string(bad->lhs) + " = " + to_string(bad->rhs));
      pushed.insert(std::move(image));
    }
    r.pushforward_injective = pushed.size() == c.colorings.size();
    if (!r.pushforward_injective)
      r.violations.push_back("distinct colorings of Q(C) push forward to the same K1 coloring");
    results.push_back(std::move(r));
  }
  return results;
}

std::vector<InjectivityResult> check_injectivity_consequence(const RibbonConcordanceDiagram& rc,
                                                             const std::vector<FiniteQuandle>& targets,
                                                             const CheckOptions& options) {
  const auto pres_c = concordance_presentation(rc);
  const auto [k0, k0_map] = k0_inclusion(rc);
  const auto pres_k0 = quandle_presentation(k0);

  std::vector<InjectivityResult> results;
  for (const auto& t : targets) {
    InjectivityResult r;
    r.target = t.name();
    const auto c = count_colorings(pres_c, t, {true, options.keep_cap, options.workers, true});
    r.concordance_colorings = c.count;
    r.k0_colorings = count_colorings(pres_k0, t, {false, 0, options.workers, true}).count;
    r.complete = !c.truncated;
    std::map<std::vector<Element>, std::uint64_t> fibers;
    for (const auto& coloring : c.colorings) {
      auto image = push_through(k0, k0_map, assignment_of(pres_c, coloring), t);
      if (const auto* bad = broken_relation(pres_k0, image, t)) {
        if (r.restriction_valid)
          r.violations.push_back("restriction breaks the K0 relation " + to_string(bad->lhs) + " = " +
                                 to_string(bad->rhs));
        r.restriction_valid = false;
      }
      ++fibers[image];
    }
    r.image_size = fibers.size();
    for (const auto& [image, n] : fibers) ++r.fiber_histogram[n];
    results.push_back(std::move(r));
  }
  return results;
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::no_obstruction_found:
      return "no_obstruction_found";
    case Verdict::obstructed:
      return "obstructed";
    case Verdict::inconclusive:
      return "inconclusive";
  }
  return "unknown";
}

ObstructionReport obstruct_ribbon_concordance(const LinkDiagram& k1, const LinkDiagram& k0,
                                              const std::vector<FiniteQuandle>& targets, std::uint64_t budget,
                                              std::size_t workers) {
  ObstructionReport report;
  if (k1.components().size() != 1 || k0.components().size() != 1)
    throw DomainError("obstruction screen expects two knots");
  const auto reduced_k1 = simplify(quandle_presentation(k1));
  if (reduced_k1.generators().size() > 1) {
    report.reason = "Q(K1) is not shown to be trivial; no certified test applies";
    return report;
  }

  // Q(K1) has one element, hence so do its quotient Q(C) and the subquandle Q(K0).
  const auto pres_k0 = quandle_presentation(k0);
  report.k0_arcs = pres_k0.generators();
  for (const auto& t : targets) {
    const std::uint64_t remaining = budget - std::min(budget, report.colorings_examined);
    if (remaining == 0) {
      report.verdict = Verdict::inconclusive;
      report.reason = "coloring budget exhausted before every target was examined";
      return report;
    }
    // The sorted list starts with constant colorings; keep enough to see past them.
    const auto c = count_colorings(pres_k0, t, {true, static_cast<std::size_t>(std::min<std::uint64_t>(remaining, ColoringOptions::kDefaultKeepCap)), workers, true});
    report.colorings_examined += c.colorings.size();
    for (const auto& coloring : c.colorings) {
      const bool constant = std::all_of(coloring.begin(), coloring.end(), [&](Element v) { return v == coloring[0]; });
      if (!constant) {
        report.verdict = Verdict::obstructed;
        report.target = t.name();
        report.certificate = coloring;
        report.reason = "Q(K1) is trivial, so any ribbon concordance has trivial Q(C) and Q(K0); K0 has a "
                        "non-constant coloring";
        return report;
      }
    }
    if (c.truncated) {
      report.verdict = Verdict::inconclusive;
      report.reason = "coloring budget exhausted on target " + t.name();
      return report;
    }
  }
  report.reason = "K0 admits only constant colorings into every target";
  return report;
}

}  // namespace quandle
