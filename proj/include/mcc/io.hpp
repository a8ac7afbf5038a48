#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "mcc/graph.hpp"

namespace mcc {

enum class Format { dimacs, edgelist };

Format parse_format(std::string_view name);
const char *to_string(Format f);

/// Offset between internal ids and the ids written in a format: DIMACS is
/// 1-based, edgelist 0-based.
int id_offset(Format f);

/**
 * DIMACS: `c` lines are comments, one `p edge <n> <m>` header, then
 * `e <u> <v>` lines with 1-based ids.
 * Edgelist: first line `<n> <m>`, then `<u> <v>` lines with 0-based ids;
 * blank lines and lines starting with `#` are skipped.
 *
 * Duplicate edges collapse. A header edge count that disagrees with the
 * number of edge lines is reported through `warnings`, not rejected. Every
 * other problem throws InputError with the line number.
 */
Graph parse_graph(std::string_view text, Format format,
                  std::vector<std::string> *warnings = nullptr);

std::string write_graph(const Graph &g, Format format);

std::string read_file(const std::string &path);

} // namespace mcc
