#pragma once
#include <string>

#include "qtoric/quasitoric.hpp"

namespace qtoric {

// Input file format: a UTF-8 JSON object
//   {name, m, vertices, facets, lambda, base_facet?}
// with exact integer fields throughout. Parsing throws ParseError on missing
// or mistyped fields, non-integer numbers, ragged lambda rows and
// out-of-range indices; deeper structural checks belong to validate().
QuasitoricData parse_input_json(const std::string& text);
QuasitoricData parse_input_file(const std::string& path);

// Deterministic serialization (fixed key order, 2-space indent).
std::string serialize_input(const QuasitoricData& d);
void write_input_file(const QuasitoricData& d, const std::string& path);

}  // namespace qtoric
