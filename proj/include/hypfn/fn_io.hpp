#pragma once

// Text formats: `fnstruct v1` coordinate tables, `generator v1` specs and `pantsgraph v1` graphs.

#include <istream>
#include <string>
#include <variant>

#include "hypfn/fn_space.hpp"

namespace hypfn::fn {

/// A parsed structure file: either a literal table or a generator spec.
using StructureSource = std::variant<StructureWindow, StructureGenerator>;

/// Dispatches on the header line. Throws ParseError with the offending line number.
StructureSource parse_structure(std::istream& in);
StructureSource read_structure_file(const std::string& path);

/// Materializes a source on `window` curves. A table must have exactly `window` entries
/// unless window is 0, which means "the whole table".
StructureWindow materialize(const StructureSource& src, std::size_t window);

/// Shortest round-trip decimal for a double.
std::string format_real(double v);

std::string format_structure(const StructureWindow& w);
std::string format_generator(const StructureGenerator& g);

PantsGraph parse_pants_graph(std::istream& in);
std::string format_pants_graph(const PantsGraph& g);

/// Writes text to path; throws std::runtime_error naming the path on failure.
void write_text_file(const std::string& path, const std::string& text);

}  // namespace hypfn::fn
