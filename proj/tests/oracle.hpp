#pragma once

// Brute-force reference computations. They share no code with the library
// beyond the data types, so agreement is evidence rather than tautology.

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "quandle/finite_quandle.hpp"
#include "quandle/link_diagram.hpp"
#include "quandle/presentation.hpp"

namespace oracle {

using quandle::Element;
using quandle::FiniteQuandle;

inline Element inverse_op(const FiniteQuandle& t, Element x, Element y) {
  for (Element z = 0; z < t.size(); ++z)
    if (t.op(z, y) == x) return z;
  return static_cast<Element>(t.size());  // unreachable for a quandle
}

// Follows the tail letter by letter, starting at the base.
inline Element eval(const quandle::FreeQuandleElement& x, const std::map<std::string, Element>& f,
                    const FiniteQuandle& t) {
  Element v = f.at(x.generator());
  for (const auto& l : x.tail().letters())
    v = l.exponent > 0 ? t.op(v, f.at(l.symbol)) : inverse_op(t, v, f.at(l.symbol));
  return v;
}

// Every map X -> T, checked relation by relation.
inline std::uint64_t colorings(const quandle::QuandlePresentation& p, const FiniteQuandle& t) {
  const auto& gens = p.generators();
  const std::size_t n = gens.size(), m = t.size();
  std::vector<Element> v(n, 0);
  std::uint64_t count = 0;
  while (true) {
    std::map<std::string, Element> f;
    for (std::size_t i = 0; i < n; ++i) f[gens[i]] = v[i];
    bool ok = true;
    for (const auto& r : p.relations())
      if (eval(r.lhs, f, t) != eval(r.rhs, f, t)) {
        ok = false;
        break;
      }
    if (ok) ++count;
    std::size_t i = 0;
    while (i < n && ++v[i] == m) v[i++] = 0;
    if (i == n) break;
  }
  return count;
}

// Colors PD edges directly. Over-edges b and d must agree; the under-strand
// obeys c = a ▷ b when the over-strand enters through slot 3, else c = a ◁ b.
// Orientation is recovered by propagating heads along strands.
inline std::uint64_t pd_colorings(const quandle::LinkDiagram& d, const FiniteQuandle& t) {
  const auto& pd = d.pd_crossings();
  std::map<std::string, std::vector<std::pair<std::size_t, int>>> occ;
  for (std::size_t c = 0; c < pd.size(); ++c)
    for (int s = 0; s < 4; ++s) occ[pd[c].edges[s]].push_back({c, s});
  // head[c][s]: edge at slot s enters crossing c.
  std::vector<std::array<int, 4>> head(pd.size(), {-1, -1, -1, -1});
  auto set = [&](std::size_t c, int s, int h, bool& changed) {
    if (head[c][s] == -1) {
      head[c][s] = h;
      changed = true;
    }
  };
  for (std::size_t c = 0; c < pd.size(); ++c) head[c][0] = 1, head[c][2] = 0;
  bool changed = true;
  while (true) {
    while (changed) {
      changed = false;
      for (const auto& [e, o] : occ) {
        const auto [c0, s0] = o[0];
        const auto [c1, s1] = o[1];
        if (head[c0][s0] != -1) set(c1, s1, 1 - head[c0][s0], changed);
        if (head[c1][s1] != -1) set(c0, s0, 1 - head[c1][s1], changed);
      }
      for (std::size_t c = 0; c < pd.size(); ++c) {
        if (head[c][1] != -1) set(c, 3, 1 - head[c][1], changed);
        if (head[c][3] != -1) set(c, 1, 1 - head[c][3], changed);
      }
    }
    bool seeded = false;
    for (std::size_t c = 0; c < pd.size() && !seeded; ++c)
      if (head[c][1] == -1) {
        set(c, 1, 1, changed);
        seeded = true;
      }
    if (!seeded) break;
  }

  std::vector<std::string> edges;
  for (const auto& [e, o] : occ) edges.push_back(e);
  std::map<std::string, std::size_t> idx;
  for (std::size_t i = 0; i < edges.size(); ++i) idx[edges[i]] = i;
  const std::size_t n = edges.size(), m = t.size();
  std::vector<Element> v(n, 0);
  std::uint64_t count = 0;
  while (n > 0) {
    bool ok = true;
    for (std::size_t c = 0; c < pd.size() && ok; ++c) {
      const auto& x = pd[c].edges;
      const Element a = v[idx[x[0]]], b = v[idx[x[1]]], cc = v[idx[x[2]]], dd = v[idx[x[3]]];
      const bool positive = head[c][3] == 1;
      ok = b == dd && cc == (positive ? t.op(a, b) : inverse_op(t, a, b));
    }
    if (ok) ++count;
    std::size_t i = 0;
    while (i < n && ++v[i] == m) v[i++] = 0;
    if (i == n) break;
  }
  if (n == 0) count = 1;
  for (std::size_t l = 0; l < d.loops().size(); ++l) count *= m;
  return count;
}

inline bool is_quandle(const quandle::Table& t) {
  const std::size_t n = t.size();
  for (std::size_t x = 0; x < n; ++x) {
    if (t[x].size() != n || t[x][x] != static_cast<std::int64_t>(x)) return false;
  }
  for (std::size_t y = 0; y < n; ++y) {
    std::vector<bool> hit(n, false);
    for (std::size_t x = 0; x < n; ++x) {
      const auto v = t[x][y];
      if (v < 0 || v >= static_cast<std::int64_t>(n) || hit[v]) return false;
      hit[v] = true;
    }
  }
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t z = 0; z < n; ++z)
        if (t[t[x][y]][z] != t[t[x][z]][t[y][z]]) return false;
  return true;
}

}  // namespace oracle
