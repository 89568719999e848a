#include "quandle/presentation.hpp"

#include <algorithm>
#include <limits>
#include <queue>
#include <thread>

#include "quandle/error.hpp"

namespace quandle {

QuandlePresentation::QuandlePresentation(std::vector<std::string> generators, std::vector<Relation> relations) {
  for (const auto& g : generators) add_generator(g);
  for (auto& r : relations) add_relation(std::move(r.lhs), std::move(r.rhs));
}

std::size_t QuandlePresentation::index_of(const std::string& name) const {
  const auto it = index_.find(name);
  if (it == index_.end()) throw DomainError("unknown generator '" + name + "'");
  return it->second;
}

void QuandlePresentation::add_generator(const std::string& name) {
  if (!is_valid_symbol(name)) throw DomainError("invalid generator name '" + name + "'");
  if (!index_.emplace(name, generators_.size()).second)
    throw DomainError("duplicate generator '" + name + "'");
  generators_.push_back(name);
}

void QuandlePresentation::check_symbols(const FreeQuandleElement& x) const {
  for (const auto& s : symbols(x))
    if (!has_generator(s)) throw DomainError("relation mentions unknown generator '" + s + "'");
}

void QuandlePresentation::add_relation(FreeQuandleElement lhs, FreeQuandleElement rhs) {
  check_symbols(lhs);
  check_symbols(rhs);
  relations_.push_back({std::move(lhs), std::move(rhs)});
}

void QuandlePresentation::append(const QuandlePresentation& other) {
  for (const auto& g : other.generators_) add_generator(g);
  for (const auto& r : other.relations_) relations_.push_back(r);
}

std::size_t QuandlePresentation::total_relation_length() const {
  std::size_t total = 0;
  for (const auto& r : relations_) total += r.lhs.tail().size() + r.rhs.tail().size() + 2;
  return total;
}

// ---------------------------------------------------------------------------
// Coloring search

namespace {

constexpr std::int32_t kUnassigned = -1;

struct CompiledLetter {
  std::uint32_t gen;
  bool inverse;
};

struct CompiledSide {
  std::uint32_t base;
  std::vector<CompiledLetter> letters;
};

struct CompiledRelation {
  CompiledSide lhs;
  CompiledSide rhs;
  std::vector<std::uint32_t> symbols;  // sorted, unique
};

CompiledSide compile_side(const QuandlePresentation& pres, const FreeQuandleElement& x) {
  CompiledSide side{static_cast<std::uint32_t>(pres.index_of(x.generator())), {}};
  for (const auto& l : x.tail().letters())
    side.letters.push_back({static_cast<std::uint32_t>(pres.index_of(l.symbol)), l.exponent < 0});
  return side;
}

bool side_mentions(const CompiledSide& s, std::uint32_t g, bool include_base) {
  if (include_base && s.base == g) return true;
  return std::any_of(s.letters.begin(), s.letters.end(), [g](const CompiledLetter& l) { return l.gen == g; });
}

class Search {
 public:
  Search(const std::vector<CompiledRelation>& relations, std::vector<std::vector<std::uint32_t>> occurrences,
         std::size_t n_gens, const FiniteQuandle& target, bool keep, std::size_t keep_cap)
      : relations_(relations),
        occurrences_(std::move(occurrences)),
        n_gens_(n_gens),
        target_(target),
        keep_(keep),
        keep_cap_(keep_cap) {}

  std::uint64_t count() const { return count_; }

  std::vector<std::vector<Element>> take_kept() {
    std::vector<std::vector<Element>> out;
    out.reserve(kept_.size());
    while (!kept_.empty()) {
      out.push_back(kept_.top());
      kept_.pop();
    }
    std::reverse(out.begin(), out.end());
    return out;
  }
  bool truncated() const { return truncated_; }

  // Propagates forced values; false on contradiction.
  bool propagate(std::vector<std::int32_t>& values) const {
    bool changed = true;
    while (changed) {
      changed = false;
      for (const auto& r : relations_) {
        std::uint32_t free_gen = 0;
        int n_free = 0;
        for (auto s : r.symbols)
          if (values[s] == kUnassigned) {
            free_gen = s;
            if (++n_free > 1) break;
          }
        if (n_free == 0) {
          if (eval(r.lhs, values) != eval(r.rhs, values)) return false;
        } else if (n_free == 1) {
          const CompiledSide* defined = nullptr;
          const CompiledSide* other = nullptr;
          if (r.lhs.base == free_gen && !side_mentions(r.lhs, free_gen, false) &&
              !side_mentions(r.rhs, free_gen, true)) {
            defined = &r.lhs;
            other = &r.rhs;
          } else if (r.rhs.base == free_gen && !side_mentions(r.rhs, free_gen, false) &&
                     !side_mentions(r.lhs, free_gen, true)) {
            defined = &r.rhs;
            other = &r.lhs;
          }
          if (defined) {
            values[free_gen] = static_cast<std::int32_t>(solve_base(*defined, eval(*other, values), values));
            changed = true;
          }
        }
      }
    }
    return true;
  }

  // Picks the unassigned generator with the fewest consistent values.
  // Returns false when some generator has none; leaves `chosen` unset when
  // every generator is assigned.
  bool choose(std::vector<std::int32_t>& values, std::optional<std::uint32_t>& chosen,
              std::vector<Element>& candidates) const {
    chosen.reset();
    std::size_t best = std::numeric_limits<std::size_t>::max();
    std::size_t best_occ = 0;
    std::vector<Element> scratch;
    for (std::uint32_t g = 0; g < n_gens_; ++g) {
      if (values[g] != kUnassigned) continue;
      scratch.clear();
      // relations in which g is the last unassigned symbol
      std::vector<const CompiledRelation*> closing;
      for (auto ri : occurrences_[g]) {
        const auto& r = relations_[ri];
        const bool only_g = std::all_of(r.symbols.begin(), r.symbols.end(),
                                        [&](std::uint32_t s) { return s == g || values[s] != kUnassigned; });
        if (only_g) closing.push_back(&r);
      }
      for (Element v = 0; v < target_.size(); ++v) {
        values[g] = static_cast<std::int32_t>(v);
        const bool ok = std::all_of(closing.begin(), closing.end(), [&](const CompiledRelation* r) {
          return eval(r->lhs, values) == eval(r->rhs, values);
        });
        if (ok) scratch.push_back(v);
      }
      values[g] = kUnassigned;
      if (scratch.empty()) return false;
      const std::size_t occ = occurrences_[g].size();
      if (scratch.size() < best || (scratch.size() == best && occ > best_occ)) {
        best = scratch.size();
        best_occ = occ;
        chosen = g;
        candidates = scratch;
      }
    }
    return true;
  }

  void run(std::vector<std::int32_t> values) {
    if (!propagate(values)) return;
    std::optional<std::uint32_t> g;
    std::vector<Element> candidates;
    if (!choose(values, g, candidates)) return;
    if (!g) {
      record(values);
      return;
    }
    for (Element v : candidates) {
      auto next = values;
      next[*g] = static_cast<std::int32_t>(v);
      run(std::move(next));
    }
  }

  void record(const std::vector<std::int32_t>& values) {
    ++count_;
    if (!keep_) return;
    std::vector<Element> c(values.begin(), values.end());
    if (kept_.size() < keep_cap_) {
      kept_.push(std::move(c));
    } else {
      truncated_ = true;
      if (keep_cap_ > 0 && c < kept_.top()) {
        kept_.pop();
        kept_.push(std::move(c));
      }
    }
  }

  Element eval(const CompiledSide& s, const std::vector<std::int32_t>& values) const {
    Element v = static_cast<Element>(values[s.base]);
    for (const auto& l : s.letters) {
      const auto b = static_cast<Element>(values[l.gen]);
      v = l.inverse ? target_.inv_op(v, b) : target_.op(v, b);
    }
    return v;
  }

 private:
  // Base value x with x acted on by the side's tail equal to `result`.
  Element solve_base(const CompiledSide& s, Element result, const std::vector<std::int32_t>& values) const {
    Element v = result;
    for (auto it = s.letters.rbegin(); it != s.letters.rend(); ++it) {
      const auto b = static_cast<Element>(values[it->gen]);
      v = it->inverse ? target_.op(v, b) : target_.inv_op(v, b);
    }
    return v;
  }

  const std::vector<CompiledRelation>& relations_;
  std::vector<std::vector<std::uint32_t>> occurrences_;
  std::size_t n_gens_;
  const FiniteQuandle& target_;
  bool keep_;
  std::size_t keep_cap_;
  std::uint64_t count_ = 0;
  std::priority_queue<std::vector<Element>> kept_;  // max-heap of the smallest
  bool truncated_ = false;
};

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
  if (a != 0 && b > std::numeric_limits<std::uint64_t>::max() / a)
    throw DomainError("coloring count exceeds 64-bit range");
  return a * b;
}

void merge_kept(std::vector<std::vector<Element>>& into, std::vector<std::vector<Element>> from,
                std::size_t cap, bool& truncated) {
  into.insert(into.end(), std::make_move_iterator(from.begin()), std::make_move_iterator(from.end()));
  std::sort(into.begin(), into.end());
  if (into.size() > cap) {
    into.resize(cap);
    truncated = true;
  }
}

ColoringReport enumerate_all(const QuandlePresentation& pres, const std::vector<CompiledRelation>& relations,
                             const FiniteQuandle& target, const ColoringOptions& options) {
  ColoringReport report;
  const std::size_t n = pres.generators().size();
  std::vector<std::int32_t> values(n, 0);
  Search checker(relations, std::vector<std::vector<std::uint32_t>>(n), n, target, options.keep,
                 options.keep_cap);
  while (true) {
    const bool ok = std::all_of(relations.begin(), relations.end(), [&](const CompiledRelation& r) {
      return checker.eval(r.lhs, values) == checker.eval(r.rhs, values);
    });
    if (ok) checker.record(values);
    // odometer step; the last digit varies fastest
    std::size_t i = n;
    bool carried_out = true;
    while (i > 0) {
      --i;
      if (static_cast<std::size_t>(++values[i]) < target.size()) {
        carried_out = false;
        break;
      }
      values[i] = 0;
    }
    if (carried_out) break;
  }
  report.count = checker.count();
  report.truncated = checker.truncated();
  report.colorings = checker.take_kept();
  return report;
}

}  // namespace

ColoringReport count_colorings(const QuandlePresentation& pres, const FiniteQuandle& target,
                               const ColoringOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  const std::size_t n = pres.generators().size();

  std::vector<CompiledRelation> relations;
  std::vector<std::vector<std::uint32_t>> occurrences(n);
  std::vector<char> constrained(n, 0);
  for (const auto& r : pres.relations()) {
    if (r.is_tautology()) continue;
    CompiledRelation c{compile_side(pres, r.lhs), compile_side(pres, r.rhs), {}};
    std::set<std::uint32_t> syms;
    for (const auto* side : {&c.lhs, &c.rhs}) {
      syms.insert(side->base);
      for (const auto& l : side->letters) syms.insert(l.gen);
    }
    c.symbols.assign(syms.begin(), syms.end());
    for (auto s : c.symbols) {
      occurrences[s].push_back(static_cast<std::uint32_t>(relations.size()));
      constrained[s] = 1;
    }
    relations.push_back(std::move(c));
  }

  ColoringReport report;
  if (!options.propagate) {
    report = enumerate_all(pres, relations, target, options);
  } else {
    // Generators outside every relation contribute a factor |T| unless the
    // colorings themselves are wanted.
    std::uint64_t free_factor = 1;
    std::vector<std::int32_t> root(n, kUnassigned);
    std::size_t n_search = n;
    if (!options.keep) {
      for (std::size_t g = 0; g < n; ++g)
        if (!constrained[g]) {
          free_factor = checked_mul(free_factor, target.size());
          root[g] = 0;
          --n_search;
        }
    }

    Search root_search(relations, occurrences, n, target, options.keep, options.keep_cap);
    std::optional<std::uint32_t> branch;
    std::vector<Element> candidates;
    bool feasible = root_search.propagate(root) && root_search.choose(root, branch, candidates);
    std::uint64_t count = 0;
    if (feasible && !branch) {
      root_search.record(root);
      count = root_search.count();
      report.colorings = root_search.take_kept();
    } else if (feasible) {
      const std::size_t workers = std::max<std::size_t>(1, std::min(options.workers, candidates.size()));
      std::vector<Search> searches(workers, root_search);
      auto work = [&](std::size_t w) {
        for (std::size_t i = w; i < candidates.size(); i += workers) {
          auto values = root;
          values[*branch] = static_cast<std::int32_t>(candidates[i]);
          searches[w].run(std::move(values));
        }
      };
      if (workers == 1) {
        work(0);
      } else {
        std::vector<std::thread> threads;
        for (std::size_t w = 0; w < workers; ++w) threads.emplace_back(work, w);
        for (auto& t : threads) t.join();
      }
      for (auto& s : searches) {
        count += s.count();
        report.truncated = report.truncated || s.truncated();
        merge_kept(report.colorings, s.take_kept(), options.keep_cap, report.truncated);
      }
    }
    (void)n_search;
    report.count = checked_mul(count, free_factor);
  }

  report.target = target.name();
  report.target_size = target.size();
  report.elapsed = std::chrono::duration_cast<std::chrono::nanoseconds>(std::chrono::steady_clock::now() - start);
  return report;
}

// ---------------------------------------------------------------------------
// Substitution and simplification

FreeQuandleElement substitute(const FreeQuandleElement& x, const std::string& g, const FreeQuandleElement& value) {
  FreeWord tail;
  const FreeWord value_inv = value.tail().inverse();
  for (const auto& l : x.tail().letters()) {
    if (l.symbol == g) {
      // g^±1 acts as the conjugate w⁻¹ b^±1 w of value = (b, w)
      tail *= value_inv;
      tail.push_back({value.generator(), l.exponent});
      tail *= value.tail();
    } else {
      tail.push_back(l);
    }
  }
  if (x.generator() == g) return FreeQuandleElement(value.generator(), value.tail() * tail);
  return FreeQuandleElement(x.generator(), std::move(tail));
}

QuandlePresentation substitute(const QuandlePresentation& pres, const std::string& g,
                               const FreeQuandleElement& value) {
  if (!pres.has_generator(g)) throw DomainError("cannot substitute unknown generator '" + g + "'");
  const auto syms = symbols(value);
  if (syms.count(g)) throw DomainError("cyclic substitution: '" + g + "' occurs in " + to_string(value));
  for (const auto& s : syms)
    if (!pres.has_generator(s)) throw DomainError("substituted value mentions unknown generator '" + s + "'");

  QuandlePresentation out;
  for (const auto& h : pres.generators())
    if (h != g) out.add_generator(h);
  for (const auto& r : pres.relations()) out.add_relation(substitute(r.lhs, g, value), substitute(r.rhs, g, value));
  return out;
}

namespace {

QuandlePresentation drop_redundant(const QuandlePresentation& pres) {
  std::vector<Relation> kept;
  for (const auto& r : pres.relations()) {
    if (r.is_tautology()) continue;
    if (std::any_of(kept.begin(), kept.end(), [&](const Relation& k) { return k.same_as(r); })) continue;
    kept.push_back(r);
  }
  return QuandlePresentation(pres.generators(), std::move(kept));
}

}  // namespace

QuandlePresentation simplify(const QuandlePresentation& pres) {
  QuandlePresentation current = drop_redundant(pres);
  while (true) {
    bool moved = false;
    // merge: (g) = (h)
    for (const auto& r : current.relations()) {
      if (r.lhs.is_generator() && r.rhs.is_generator()) {
        const auto& a = r.lhs.generator();
        const auto& b = r.rhs.generator();
        const bool a_first = current.index_of(a) < current.index_of(b);
        const std::string victim = a_first ? b : a;
        const FreeQuandleElement keep(a_first ? a : b);
        current = drop_redundant(substitute(current, victim, keep));
        moved = true;
        break;
      }
    }
    if (moved) continue;
    // eliminate: (g) = element not mentioning g
    for (const auto& r : current.relations()) {
      const Relation* rel = &r;
      std::optional<std::pair<std::string, FreeQuandleElement>> move;
      if (rel->lhs.is_generator() && !symbols(rel->rhs).count(rel->lhs.generator()))
        move.emplace(rel->lhs.generator(), rel->rhs);
      else if (rel->rhs.is_generator() && !symbols(rel->lhs).count(rel->rhs.generator()))
        move.emplace(rel->rhs.generator(), rel->lhs);
      if (move) {
        current = drop_redundant(substitute(current, move->first, move->second));
        moved = true;
        break;
      }
    }
    if (!moved) return current;
  }
}

}  // namespace quandle
