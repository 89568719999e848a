// quandle: batch front-end for coloring invariants of knots, surfaces and
// ribbon concordances.

#include <cstdlib>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "quandle/braid.hpp"
#include "quandle/concordance.hpp"
#include "quandle/error.hpp"
#include "quandle/io.hpp"
#include "quandle/link_diagram.hpp"
#include "quandle/surface.hpp"

using namespace quandle;
using io::Json;

namespace {

constexpr const char* kWorkersEnv = "QUANDLE_WORKERS";

struct Config {
  std::string format = "tsv";
  std::size_t workers = 1;
  bool keep = false;
  std::uint64_t budget = 1000000;
  std::vector<std::string> targets;
  std::string pd, presentation, movie, ch, braid, word, concordance, k1, k0, table, group;
  int p = 0, q = 0;
};

std::size_t default_workers() {
  if (const char* env = std::getenv(kWorkersEnv)) {
    char* end = nullptr;
    const auto n = std::strtoul(env, &end, 10);
    if (end != env && *end == '\0' && n > 0) return n;
  }
  return 1;
}

std::vector<FiniteQuandle> targets_of(const Config& cfg) {
  if (cfg.targets.empty()) return standard_battery();
  std::vector<FiniteQuandle> out;
  for (const auto& t : cfg.targets) {
    if (t == "battery") {
      for (auto& b : standard_battery()) out.push_back(std::move(b));
    } else {
      out.push_back(io::resolve_target(t));
    }
  }
  return out;
}

std::string join(const std::vector<Element>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s;
}

std::string tsv_bool(bool b) { return b ? "1" : "0"; }

// Coloring table over the targets, shared by most subcommands.
Json coloring_reports(const QuandlePresentation& pres, const std::vector<FiniteQuandle>& targets, const Config& cfg) {
  Json rows = Json::array();
  for (const auto& t : targets) {
    const auto r = count_colorings(pres, t, {cfg.keep, ColoringOptions::kDefaultKeepCap, cfg.workers, true});
    Json row{{"target", t.name()}, {"target_size", t.size()}, {"count", r.count}, {"truncated", r.truncated}};
    if (cfg.keep) row["colorings"] = r.colorings;
    rows.push_back(std::move(row));
  }
  return rows;
}

void print_colorings_tsv(std::ostream& os, const Json& rows, const std::vector<std::string>& generators) {
  os << "target\tsize\tcount\ttruncated\n";
  for (const auto& r : rows)
    os << r["target"].get<std::string>() << '\t' << r["target_size"] << '\t' << r["count"] << '\t'
       << tsv_bool(r["truncated"].get<bool>()) << '\n';
  for (const auto& r : rows) {
    if (!r.contains("colorings")) continue;
    os << "# colorings " << r["target"].get<std::string>() << '\n';
    for (std::size_t i = 0; i < generators.size(); ++i) os << (i ? "\t" : "") << generators[i];
    os << '\n';
    for (const auto& c : r["colorings"]) {
      const auto v = c.get<std::vector<Element>>();
      for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "\t" : "") << v[i];
      os << '\n';
    }
  }
}

void emit_colorings(const Config& cfg, const QuandlePresentation& pres, Json header) {
  const auto rows = coloring_reports(pres, targets_of(cfg), cfg);
  if (cfg.format == "json") {
    header["generators"] = pres.generators();
    header["results"] = rows;
    std::cout << io::canonical(header);
    return;
  }
  for (const auto& [k, v] : header.items()) std::cout << "# " << k << '\t' << (v.is_string() ? v.get<std::string>() : v.dump()) << '\n';
  print_colorings_tsv(std::cout, rows, pres.generators());
}

QuandlePresentation presentation_input(const Config& cfg) {
  if (!cfg.pd.empty() && !cfg.presentation.empty()) throw DomainError("give only one of --pd and --presentation");
  if (!cfg.pd.empty()) return quandle_presentation(parse_pd(io::read_file(cfg.pd)));
  if (!cfg.presentation.empty()) return io::read_presentation(io::read_file(cfg.presentation));
  throw DomainError("an input is required: --pd or --presentation");
}

BraidWord braid_input(const Config& cfg) {
  if (!cfg.word.empty()) return parse_braid(cfg.word);
  if (!cfg.braid.empty()) return parse_braid(io::read_file(cfg.braid));
  throw DomainError("an input is required: --braid or --word");
}

// Profiles of two routes side by side.
int emit_route_pair(const Config& cfg, const QuandlePresentation& a, const QuandlePresentation& b, const char* name_a,
                    const char* name_b, Json header) {
  Json rows = Json::array();
  bool all = true;
  for (const auto& t : targets_of(cfg)) {
    const auto ra = count_colorings(a, t, {false, 0, cfg.workers, true});
    const auto rb = count_colorings(b, t, {false, 0, cfg.workers, true});
    all = all && ra.count == rb.count;
    rows.push_back({{"target", t.name()}, {name_a, ra.count}, {name_b, rb.count}, {"agree", ra.count == rb.count}});
  }
  header["results"] = rows;
  header["agree"] = all;
  if (cfg.format == "json") {
    std::cout << io::canonical(header);
  } else {
    for (const auto& [k, v] : header.items())
      if (k != "results") std::cout << "# " << k << '\t' << (v.is_string() ? v.get<std::string>() : v.dump()) << '\n';
    std::cout << "target\t" << name_a << '\t' << name_b << "\tagree\n";
    for (const auto& r : rows)
      std::cout << r["target"].get<std::string>() << '\t' << r[name_a] << '\t' << r[name_b] << '\t'
                << tsv_bool(r["agree"].get<bool>()) << '\n';
  }
  return all ? 0 : 2;
}

int cmd_colorings(const Config& cfg) {
  emit_colorings(cfg, presentation_input(cfg), Json::object());
  return 0;
}

int cmd_simplify(const Config& cfg) {
  const auto pres = presentation_input(cfg);
  const auto s = simplify(pres);
  if (cfg.format == "json") {
    std::cout << io::canonical({{"before", {{"generators", pres.generators().size()},
                                            {"relations", pres.relations().size()}}},
                                {"after", io::presentation_to_json(s)}});
    return 0;
  }
  std::cout << "# before\t" << pres.generators().size() << " generators\t" << pres.relations().size()
            << " relations\n";
  std::cout << "generators";
  for (const auto& g : s.generators()) std::cout << '\t' << g;
  std::cout << '\n';
  for (const auto& r : s.relations()) std::cout << "relation\t" << to_string(r.lhs) << '\t' << to_string(r.rhs) << '\n';
  return 0;
}

int cmd_movie(const Config& cfg) {
  const auto script = io::read_movie(io::read_file(cfg.movie));
  emit_colorings(cfg, movie_presentation(script), Json::object());
  return 0;
}

int cmd_ch(const Config& cfg) {
  const auto mgd = parse_marked_graph(io::read_file(cfg.ch));
  const auto direct = ch_presentation(mgd);
  const auto movie = movie_presentation(hyperbolic_splitting_movie(mgd));
  return emit_route_pair(cfg, direct, movie, "ch", "movie", {{"markers", mgd.markers().size()}});
}

int cmd_braid(const Config& cfg) {
  const auto b = braid_input(cfg);
  const auto direct = braid_closure_presentation(b);
  const auto pd = quandle_presentation(braid_closure_diagram(b));
  return emit_route_pair(cfg, direct, pd, "braid", "pd", {{"braid", to_string(b)}});
}

int cmd_torus(const Config& cfg) {
  const auto b = torus_knot_braid(cfg.p, cfg.q);
  const auto pres = braid_closure_presentation(b);
  emit_colorings(cfg, pres,
                 {{"braid", to_string(b)}, {"simplified_generators", simplify(pres).generators().size()}});
  return 0;
}

int cmd_concordance(const Config& cfg) {
  const auto rc = io::read_concordance(io::read_file(cfg.concordance));
  const auto targets = targets_of(cfg);
  const CheckOptions opts{cfg.workers, ColoringOptions::kDefaultKeepCap};
  const auto sur = check_surjectivity_consequence(rc, targets, opts);
  const auto inj = check_injectivity_consequence(rc, targets, opts);
  std::size_t violations = 0;
  Json rows = Json::array();
  for (std::size_t i = 0; i < targets.size(); ++i) {
    const auto& s = sur[i];
    const auto& n = inj[i];
    violations += s.violations.size() + n.violations.size();
    Json hist = Json::object();
    for (const auto& [fiber, count] : n.fiber_histogram) hist[std::to_string(fiber)] = count;
    std::vector<std::string> v = s.violations;
    v.insert(v.end(), n.violations.begin(), n.violations.end());
    rows.push_back({{"target", s.target},
                    {"col_c", s.concordance_colorings},
                    {"col_k1", s.k1_colorings},
                    {"col_k0", n.k0_colorings},
                    {"inequality_holds", s.inequality_holds},
                    {"pushforward_injective", s.pushforward_injective},
                    {"restriction_valid", n.restriction_valid},
                    {"image_size", n.image_size},
                    {"fiber_histogram", hist},
                    {"complete", s.complete && n.complete},
                    {"violations", v}});
  }
  if (cfg.format == "json") {
    std::cout << io::canonical({{"results", rows}, {"violations", violations}});
  } else {
    std::cout << "target\tcol_c\tcol_k1\tcol_k0\tinequality\tinjective_pushforward\trestriction_valid\timage_size\t"
                 "fibers\tcomplete\n";
    for (const auto& r : rows) {
      std::string fibers;
      for (const auto& [k, v] : r["fiber_histogram"].items()) fibers += (fibers.empty() ? "" : ",") + k + ":" + v.dump();
      std::cout << r["target"].get<std::string>() << '\t' << r["col_c"] << '\t' << r["col_k1"] << '\t' << r["col_k0"]
                << '\t' << tsv_bool(r["inequality_holds"].get<bool>()) << '\t'
                << tsv_bool(r["pushforward_injective"].get<bool>()) << '\t'
                << tsv_bool(r["restriction_valid"].get<bool>()) << '\t' << r["image_size"] << '\t'
                << (fibers.empty() ? "-" : fibers) << '\t' << tsv_bool(r["complete"].get<bool>()) << '\n';
    }
    for (const auto& r : rows)
      for (const auto& v : r["violations"])
        std::cout << "violation\t" << r["target"].get<std::string>() << '\t' << v.get<std::string>() << '\n';
  }
  if (violations > 0) {
    std::cerr << "quandle: " << violations << " violated check(s)\n";
    return 2;
  }
  return 0;
}

int cmd_obstruct(const Config& cfg) {
  const auto k1 = parse_pd(io::read_file(cfg.k1));
  const auto k0 = parse_pd(io::read_file(cfg.k0));
  const auto r = obstruct_ribbon_concordance(k1, k0, targets_of(cfg), cfg.budget, cfg.workers);
  Json j{{"verdict", to_string(r.verdict)}, {"reason", r.reason}, {"colorings_examined", r.colorings_examined}};
  if (r.verdict == Verdict::obstructed)
    j["certificate"] = {{"target", r.target}, {"arcs", r.k0_arcs}, {"coloring", r.certificate}};
  if (cfg.format == "json") {
    std::cout << io::canonical(j);
  } else {
    std::cout << "verdict\t" << to_string(r.verdict) << "\nreason\t" << r.reason << "\ncolorings_examined\t"
              << r.colorings_examined << '\n';
    if (r.verdict == Verdict::obstructed) {
      std::cout << "certificate_target\t" << r.target << "\ncertificate_arcs";
      for (const auto& a : r.k0_arcs) std::cout << '\t' << a;
      std::cout << "\ncertificate_coloring\t" << join(r.certificate) << '\n';
    }
  }
  return 0;
}

int cmd_verify(const Config& cfg) {
  if (cfg.table.empty() == cfg.group.empty()) throw DomainError("give exactly one of --table and --group");
  Table table;
  if (!cfg.table.empty()) {
    const auto j = io::parse_json(io::read_file(cfg.table));
    if (!j.is_object() || !j.contains("op") || !j.contains("size"))
      throw ParseError("quandle table: needs \"size\" and \"op\"");
    try {
      table = j["op"].get<Table>();
    } catch (const nlohmann::json::exception&) {
      throw ParseError("quandle table: \"op\" must be a matrix of integers");
    }
    if (!j["size"].is_number_unsigned() || j["size"].get<std::size_t>() != table.size())
      throw DomainError("quandle table: \"size\" does not match the number of rows");
  } else {
    table = conjugation_quandle(io::read_group_table(io::read_file(cfg.group))).table();
  }
  const auto r = verify_axioms(table);
  Json v = Json::array();
  for (const auto& x : r.violations) v.push_back({{"axiom", x.axiom}, {"x", x.x}, {"y", x.y}, {"z", x.z}});
  if (cfg.format == "json") {
    std::cout << io::canonical({{"size", table.size()}, {"valid", r.valid}, {"violations", v}, {"truncated", r.truncated}});
  } else {
    std::cout << "size\t" << table.size() << "\nvalid\t" << tsv_bool(r.valid) << '\n';
    for (const auto& x : r.violations)
      std::cout << "violation\taxiom " << x.axiom << '\t' << x.x << '\t' << x.y << '\t' << x.z << '\n';
    if (r.truncated) std::cout << "truncated\t1\n";
  }
  return r.valid ? 0 : 2;
}

int exit_code(ErrorKind k) {
  switch (k) {
    case ErrorKind::parse:
      return 3;
    case ErrorKind::violation:
      return 2;
    default:
      return 1;
  }
}

}  // namespace

int main(int argc, char** argv) {
  Config cfg;
  cfg.workers = default_workers();

  CLI::App app{"Quandle coloring invariants of knots, knotted surfaces and ribbon concordances"};
  app.require_subcommand(1);
  app.add_option("--format", cfg.format, "Report format")->check(CLI::IsMember({"tsv", "json"}));
  app.add_option("--workers", cfg.workers, std::string("Worker threads (default from ") + kWorkersEnv + ")")
      ->check(CLI::Range(std::size_t{1}, std::size_t{256}));

  auto common = [&](CLI::App* sub, bool with_targets = true) {
    sub->add_option("--format", cfg.format, "Report format")->check(CLI::IsMember({"tsv", "json"}));
    sub->add_option("--workers", cfg.workers, "Worker threads")->check(CLI::Range(std::size_t{1}, std::size_t{256}));
    if (with_targets)
      sub->add_option("--target", cfg.targets,
                      "dihedral:n, conj:<group file>, a quandle table file, or battery (default)");
  };
  auto existing = [](CLI::Option* o) { return o->check(CLI::ExistingFile); };

  auto* colorings = app.add_subcommand("colorings", "Count colorings of a diagram or presentation");
  common(colorings);
  existing(colorings->add_option("--pd", cfg.pd, "PD code file"));
  existing(colorings->add_option("--presentation", cfg.presentation, "Presentation JSON file"));
  colorings->add_flag("--keep-colorings", cfg.keep, "List colorings (capped at 100000)");

  auto* simp = app.add_subcommand("simplify", "Simplify a presentation");
  common(simp, false);
  existing(simp->add_option("--pd", cfg.pd, "PD code file"));
  existing(simp->add_option("--presentation", cfg.presentation, "Presentation JSON file"));

  auto* movie = app.add_subcommand("movie", "Colorings of a surface given by a motion picture");
  common(movie);
  existing(movie->add_option("--movie", cfg.movie, "Movie script JSON file")->required());
  movie->add_flag("--keep-colorings", cfg.keep, "List colorings (capped at 100000)");

  auto* ch = app.add_subcommand("ch", "Colorings of a marked graph diagram by both surface routes");
  common(ch);
  existing(ch->add_option("--ch", cfg.ch, "Marked graph diagram file")->required());

  auto* braid = app.add_subcommand("braid", "Colorings of a braid closure by both routes");
  common(braid);
  existing(braid->add_option("--braid", cfg.braid, "Braid word file"));
  braid->add_option("--word", cfg.word, "Braid word, e.g. '2: 1 1 1'");

  auto* torus = app.add_subcommand("torus", "Colorings of the torus knot T(p,q)");
  common(torus);
  torus->add_option("--p", cfg.p, "p > q")->required();
  torus->add_option("--q", cfg.q, "q >= 2")->required();
  torus->add_flag("--keep-colorings", cfg.keep, "List colorings (capped at 100000)");

  auto* conc = app.add_subcommand("concordance-check", "Check coloring consequences of a ribbon concordance");
  common(conc);
  existing(conc->add_option("--concordance", cfg.concordance, "Concordance JSON file")->required());

  auto* obs = app.add_subcommand("obstruct", "Screen K1 >= K0 for a coloring obstruction");
  common(obs);
  existing(obs->add_option("--k1", cfg.k1, "PD file of K1")->required());
  existing(obs->add_option("--k0", cfg.k0, "PD file of K0")->required());
  obs->add_option("--budget", cfg.budget, "Maximum colorings examined");

  auto* verify = app.add_subcommand("verify-quandle", "Check the quandle axioms on a table");
  common(verify, false);
  existing(verify->add_option("--table", cfg.table, "Quandle table JSON file"));
  existing(verify->add_option("--group", cfg.group, "Group table JSON file (checks its conjugation quandle)"));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }

  try {
    const auto* sub = app.get_subcommands().front();
    const std::string name = sub->get_name();
    if (name == "colorings") return cmd_colorings(cfg);
    if (name == "simplify") return cmd_simplify(cfg);
    if (name == "movie") return cmd_movie(cfg);
    if (name == "ch") return cmd_ch(cfg);
    if (name == "braid") return cmd_braid(cfg);
    if (name == "torus") return cmd_torus(cfg);
    if (name == "concordance-check") return cmd_concordance(cfg);
    if (name == "obstruct") return cmd_obstruct(cfg);
    return cmd_verify(cfg);
  } catch (const Error& e) {
    std::cerr << "quandle: " << e.what() << '\n';
    return exit_code(e.kind());
  } catch (const std::exception& e) {
    std::cerr << "quandle: " << e.what() << '\n';
    return 1;
  }
}
