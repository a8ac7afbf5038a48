#include "mcc/io.hpp"

#include <cctype>
#include <charconv>
#include <fstream>
#include <sstream>

#include "mcc/errors.hpp"

namespace mcc {

Format parse_format(std::string_view name) {
  if (name == "dimacs")
    return Format::dimacs;
  if (name == "edgelist")
    return Format::edgelist;
  throw InputError("unknown graph format '" + std::string(name) + "'");
}

const char *to_string(Format f) { return f == Format::dimacs ? "dimacs" : "edgelist"; }

int id_offset(Format f) { return f == Format::dimacs ? 1 : 0; }

namespace {

std::vector<std::string_view> tokens(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i])))
      ++i;
    std::size_t j = i;
    while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j])))
      ++j;
    if (j > i)
      out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

long long to_int(std::string_view tok, std::size_t line_no) {
  long long value = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc() || ptr != tok.data() + tok.size())
    throw InputError("line " + std::to_string(line_no) + ": expected an integer, got '" +
                     std::string(tok) + "'");
  return value;
}

[[noreturn]] void fail(std::size_t line_no, const std::string &what) {
  throw InputError("line " + std::to_string(line_no) + ": " + what);
}

} // namespace

Graph parse_graph(std::string_view text, Format format, std::vector<std::string> *warnings) {
  const int offset = id_offset(format);
  bool have_header = false;
  long long n = 0, declared_m = 0;
  std::size_t edge_lines = 0;
  Graph g;

  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    auto end = text.find('\n', start);
    if (end == std::string_view::npos)
      end = text.size();
    auto line = text.substr(start, end - start);
    start = end + 1;
    ++line_no;

    auto tok = tokens(line);
    if (tok.empty())
      continue;

    std::size_t first = 0;
    if (format == Format::dimacs) {
      if (tok[0] == "c")
        continue;
      if (tok[0] == "p") {
        if (have_header)
          fail(line_no, "second 'p' header");
        if (tok.size() != 4 || (tok[1] != "edge" && tok[1] != "col"))
          fail(line_no, "expected 'p edge <n> <m>'");
        n = to_int(tok[2], line_no);
        declared_m = to_int(tok[3], line_no);
        if (n < 0 || n > (1 << 24))
          fail(line_no, "vertex count out of range");
        have_header = true;
        g = Graph(static_cast<int>(n));
        continue;
      }
      if (tok[0] != "e")
        fail(line_no, "unknown line type '" + std::string(tok[0]) + "'");
      if (!have_header)
        fail(line_no, "edge line before the 'p' header");
      if (tok.size() != 3)
        fail(line_no, "expected 'e <u> <v>'");
      first = 1;
    } else {
      if (tok[0].starts_with("#"))
        continue;
      if (!have_header) {
        if (tok.size() != 2)
          fail(line_no, "expected header '<n> <m>'");
        n = to_int(tok[0], line_no);
        declared_m = to_int(tok[1], line_no);
        if (n < 0 || n > (1 << 24))
          fail(line_no, "vertex count out of range");
        have_header = true;
        g = Graph(static_cast<int>(n));
        continue;
      }
      if (tok.size() != 2)
        fail(line_no, "expected '<u> <v>'");
    }

    long long u = to_int(tok[first], line_no) - offset;
    long long v = to_int(tok[first + 1], line_no) - offset;
    if (u < 0 || v < 0 || u >= n || v >= n)
      fail(line_no, "vertex id out of range");
    if (u == v)
      fail(line_no, "self-loop on vertex " + std::string(tok[first]));
    g.add_edge(static_cast<Vertex>(u), static_cast<Vertex>(v));
    ++edge_lines;
  }

  if (!have_header)
    throw InputError(format == Format::dimacs ? "missing 'p edge <n> <m>' header"
                                              : "missing '<n> <m>' header");
  if (warnings && static_cast<long long>(edge_lines) != declared_m)
    warnings->push_back("header declares " + std::to_string(declared_m) + " edges, found " +
                        std::to_string(edge_lines) + " edge lines");
  return g;
}

std::string write_graph(const Graph &g, Format format) {
  std::ostringstream out;
  const auto edges = g.edges();
  if (format == Format::dimacs) {
    out << "p edge " << g.order() << ' ' << edges.size() << '\n';
    for (auto [u, v] : edges)
      out << "e " << u + 1 << ' ' << v + 1 << '\n';
  } else {
    out << g.order() << ' ' << edges.size() << '\n';
    for (auto [u, v] : edges)
      out << u << ' ' << v << '\n';
  }
  return out.str();
}

std::string read_file(const std::string &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw InputError("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

} // namespace mcc
