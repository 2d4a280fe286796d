#pragma once

// Text formats for decompositions.
//
//   json           {"schema_version": 1, "m", "case", "triples", "cycles"?, "certificate"}
//   cycles_text    one line per color: "i,j,k" vertices separated by spaces,
//                  starting at 0,0,0
//   arcs_edgelist  one line per arc: "i,j,k d c"

#include <optional>
#include <string>
#include <string_view>

#include "torus/decomposer.hpp"

namespace torus {

enum class ExportFormat { json, cycles_text, arcs_edgelist };

/// Accepts "json", "cycles", "cycles_text", "arcs", "arcs_edgelist".
std::optional<ExportFormat> parse_format(std::string_view name);

std::string export_decomposition(const HamiltonDecomposition& dec, ExportFormat format);
/// Throws UnsupportedFormat for an unknown format name.
std::string export_decomposition(const HamiltonDecomposition& dec, std::string_view format);

/// Reads any of the three formats, detected from the content. Throws
/// ParseError on malformed input and IllFormedTriple on a bad triple.
HamiltonDecomposition import_decomposition(std::string_view text);

}  // namespace torus
