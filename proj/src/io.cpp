#include "quandle/io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "quandle/error.hpp"
#include "quandle/link_diagram.hpp"

namespace quandle::io {

namespace {

std::pair<int, int> position_of(std::string_view text, std::size_t offset) {
  int line = 1, column = 1;
  for (std::size_t i = 0; i < std::min(offset, text.size()); ++i) {
    if (text[i] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  return {line, column};
}

const Json& field(const Json& j, const char* key, const std::string& where) {
  if (!j.is_object()) throw ParseError(where + ": expected an object");
  const auto it = j.find(key);
  if (it == j.end()) throw ParseError(where + ": missing field \"" + key + "\"");
  return *it;
}

std::string as_string(const Json& j, const std::string& where) {
  if (!j.is_string()) throw ParseError(where + ": expected a string");
  return j.get<std::string>();
}

const Json& as_array(const Json& j, const std::string& where) {
  if (!j.is_array()) throw ParseError(where + ": expected an array");
  return j;
}

Table table_from_json(const Json& j, const char* key, const std::string& where) {
  const auto& rows = as_array(field(j, key, where), where + "." + key);
  Table t;
  for (std::size_t r = 0; r < rows.size(); ++r) {
    const auto ctx = where + "." + key + "[" + std::to_string(r) + "]";
    std::vector<std::int64_t> row;
    for (const auto& cell : as_array(rows[r], ctx)) {
      if (!cell.is_number_integer()) throw ParseError(ctx + ": expected integers");
      row.push_back(cell.get<std::int64_t>());
    }
    t.push_back(std::move(row));
  }
  return t;
}

LinkDiagram diagram_field(const Json& j, const char* key) {
  const auto text = as_string(field(j, key, "concordance"), key);
  try {
    return parse_pd(text);
  } catch (const ParseError& e) {
    throw ParseError(std::string(key) + ": " + e.what());
  }
}

std::map<std::string, FreeQuandleElement> element_map(const Json& j, const std::string& where) {
  if (!j.is_object()) throw ParseError(where + ": expected an object");
  std::map<std::string, FreeQuandleElement> out;
  for (const auto& [k, v] : j.items()) out.emplace(k, element_from_json(v));
  return out;
}

std::vector<std::string> string_list(const Json& j, const std::string& where) {
  std::vector<std::string> out;
  for (const auto& s : as_array(j, where)) out.push_back(as_string(s, where));
  return out;
}

}  // namespace

Json parse_json(std::string_view text) {
  try {
    return Json::parse(text.begin(), text.end());
  } catch (const nlohmann::json::parse_error& e) {
    const auto [line, column] = position_of(text, e.byte == 0 ? 0 : e.byte - 1);
    std::string msg = e.what();
    if (const auto p = msg.find("parse error"); p != std::string::npos) msg = msg.substr(p);
    throw ParseError("invalid JSON: " + msg, line, column);
  }
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DomainError("cannot open '" + path + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

FiniteQuandle read_quandle_table(std::string_view text, std::string name) {
  const auto j = parse_json(text);
  const auto& size = field(j, "size", "quandle table");
  if (!size.is_number_unsigned()) throw ParseError("quandle table: \"size\" must be a non-negative integer");
  auto t = table_from_json(j, "op", "quandle table");
  if (t.size() != size.get<std::size_t>())
    throw DomainError("quandle table: size " + std::to_string(size.get<std::size_t>()) + " but " +
                      std::to_string(t.size()) + " rows");
  return FiniteQuandle::from_table(t, std::move(name));
}

FiniteGroup read_group_table(std::string_view text) {
  const auto j = parse_json(text);
  auto mul = table_from_json(j, "mul", "group table");
  std::optional<Table> inv;
  if (j.contains("inv")) {
    const auto& v = as_array(j["inv"], "group table.inv");
    Table t(1);
    for (const auto& cell : v) {
      if (!cell.is_number_integer()) throw ParseError("group table.inv: expected integers");
      t[0].push_back(cell.get<std::int64_t>());
    }
    inv = std::move(t);
  }
  return FiniteGroup::from_table(mul, inv);
}

FreeQuandleElement element_from_json(const Json& j) {
  if (j.is_string()) return parse_element(j.get<std::string>());
  const auto base = as_string(field(j, "base", "element"), "element.base");
  std::vector<Letter> letters;
  if (j.contains("word")) {
    for (const auto& l : as_array(j["word"], "element.word")) {
      if (!l.is_array() || l.size() != 2 || !l[0].is_string() || !l[1].is_number_integer())
        throw ParseError("element.word: each letter is [\"symbol\", 1 or -1]");
      const int e = l[1].get<int>();
      if (e != 1 && e != -1) throw ParseError("element.word: exponent must be 1 or -1");
      const auto s = l[0].get<std::string>();
      if (!is_valid_symbol(s)) throw ParseError("element.word: invalid symbol '" + s + "'");
      letters.push_back({s, e});
    }
  }
  if (!is_valid_symbol(base)) throw ParseError("element.base: invalid symbol '" + base + "'");
  return FreeQuandleElement(base, FreeWord(std::move(letters)));
}

Json element_to_json(const FreeQuandleElement& x) {
  Json word = Json::array();
  for (const auto& l : x.tail().letters()) word.push_back(Json::array({l.symbol, l.exponent}));
  return {{"base", x.generator()}, {"word", word}};
}

QuandlePresentation presentation_from_json(const Json& j) {
  const auto gens = string_list(field(j, "generators", "presentation"), "presentation.generators");
  std::vector<Relation> rels;
  for (const auto& r : as_array(field(j, "relations", "presentation"), "presentation.relations")) {
    if (!r.is_array() || r.size() != 2) throw ParseError("presentation.relations: each relation is [elem, elem]");
    rels.push_back({element_from_json(r[0]), element_from_json(r[1])});
  }
  return QuandlePresentation(gens, std::move(rels));
}

Json presentation_to_json(const QuandlePresentation& pres) {
  Json rels = Json::array();
  for (const auto& r : pres.relations()) rels.push_back(Json::array({element_to_json(r.lhs), element_to_json(r.rhs)}));
  return {{"generators", pres.generators()}, {"relations", rels}};
}

QuandlePresentation read_presentation(std::string_view text) { return presentation_from_json(parse_json(text)); }

MovieScript read_movie(std::string_view text) {
  const auto j = parse_json(text);
  MovieScript script;
  script.initial = parse_pd(as_string(field(j, "initial", "movie"), "movie.initial"));
  if (j.contains("closed")) {
    if (!j["closed"].is_boolean()) throw ParseError("movie.closed: expected a boolean");
    script.closed = j["closed"].get<bool>();
  }
  const auto& events = as_array(field(j, "events", "movie"), "movie.events");
  for (std::size_t i = 0; i < events.size(); ++i) {
    const auto& e = events[i];
    const auto where = "movie.events[" + std::to_string(i) + "]";
    const auto type = as_string(field(e, "type", where), where + ".type");
    auto str = [&](const char* key) { return as_string(field(e, key, where), where + "." + key); };
    if (type == "birth") {
      script.events.push_back(BirthEvent{str("label")});
    } else if (type == "saddle") {
      SaddleEvent s{str("a"), str("b"), std::nullopt};
      if (e.contains("split")) s.split = str("split");
      script.events.push_back(std::move(s));
    } else if (type == "death") {
      script.events.push_back(DeathEvent{str("label")});
    } else if (type == "reidemeister") {
      ReidemeisterEvent r;
      if (e.contains("retire")) r.retired = string_list(e["retire"], where + ".retire");
      if (e.contains("introduce"))
        for (const auto& n : as_array(e["introduce"], where + ".introduce"))
          r.introduced.emplace_back(as_string(field(n, "label", where), where + ".introduce.label"),
                                    element_from_json(field(n, "value", where)));
      script.events.push_back(std::move(r));
    } else if (type == "boundary_appear") {
      script.events.push_back(BoundaryAppearEvent{presentation_from_json(field(e, "presentation", where))});
    } else if (type == "boundary_cap") {
      script.events.push_back(BoundaryCapEvent{string_list(field(e, "arcs", where), where + ".arcs")});
    } else {
      throw ParseError(where + ": unknown event type \"" + type + "\"");
    }
  }
  return script;
}

RibbonConcordanceDiagram read_concordance(std::string_view text) {
  const auto j = parse_json(text);
  RibbonConcordanceDiagram rc;
  rc.base = diagram_field(j, "base");
  for (const auto& b : as_array(field(j, "bands", "concordance"), "concordance.bands")) {
    if (!b.is_array() || b.size() != 2 || !b[0].is_string() || !b[1].is_string())
      throw ParseError("concordance.bands: each band is [\"a\", \"b\"]");
    rc.bands.emplace_back(b[0].get<std::string>(), b[1].get<std::string>());
  }
  rc.k1 = diagram_field(j, "k1");
  rc.k1_map = element_map(field(j, "k1_map", "concordance"), "concordance.k1_map");
  if (j.contains("k0")) {
    rc.k0 = diagram_field(j, "k0");
    rc.k0_map = element_map(field(j, "k0_map", "concordance"), "concordance.k0_map");
  }
  if (j.contains("k0_edge")) rc.k0_edge = as_string(j["k0_edge"], "concordance.k0_edge");
  return rc;
}

FiniteQuandle resolve_target(const std::string& name) {
  if (name.rfind("dihedral:", 0) == 0) {
    const auto n = name.substr(9);
    if (n.empty() || n.size() > 6 || !std::all_of(n.begin(), n.end(), [](unsigned char c) { return std::isdigit(c); }))
      throw DomainError("bad dihedral order in '" + name + "'");
    return dihedral_quandle(std::stoul(n));
  }
  if (name.rfind("conj:", 0) == 0) {
    const auto path = name.substr(5);
    return conjugation_quandle(read_group_table(read_file(path)), name);
  }
  return read_quandle_table(read_file(name), name);
}

std::string canonical(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace quandle::io
