#pragma once

#include <string>
#include <string_view>

#include "json.hpp"

#include "quandle/concordance.hpp"
#include "quandle/finite_quandle.hpp"
#include "quandle/presentation.hpp"
#include "quandle/surface.hpp"

namespace quandle::io {

using Json = nlohmann::json;

// Readers throw ParseError for malformed JSON or a missing/mistyped field,
// and the module's own error for well-formed but invalid content.

Json parse_json(std::string_view text);
std::string read_file(const std::string& path);

FiniteQuandle read_quandle_table(std::string_view text, std::string name = "table");
FiniteGroup read_group_table(std::string_view text);

/// `{"base":"x","word":[["y",1]]}` or the text form `"x ^ y"`.
FreeQuandleElement element_from_json(const Json& j);
Json element_to_json(const FreeQuandleElement& x);

QuandlePresentation presentation_from_json(const Json& j);
Json presentation_to_json(const QuandlePresentation& pres);
QuandlePresentation read_presentation(std::string_view text);

MovieScript read_movie(std::string_view text);
RibbonConcordanceDiagram read_concordance(std::string_view text);

/// `dihedral:n`, `conj:<group file>`, or a quandle table file.
FiniteQuandle resolve_target(const std::string& name);

/// Sorted keys, two-space indent, trailing newline.
std::string canonical(const Json& j);

}  // namespace quandle::io
