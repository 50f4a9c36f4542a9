#pragma once

#include <charconv>
#include <fstream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "semicore/digraph.hpp"
#include "semicore/errors.hpp"

namespace semicore {

// Edge-list text format:
//
//   n m
//   u w        (exactly m arc lines, 0-based labels, single-space separated)
//
// Lines starting with '#' and blank lines are ignored anywhere.

namespace detail {

inline std::vector<std::string_view> split_single_spaces(std::string_view line) {
  std::vector<std::string_view> tokens;
  std::size_t start = 0;
  while (true) {
    std::size_t pos = line.find(' ', start);
    tokens.push_back(line.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return tokens;
}

inline bool parse_count(std::string_view token, std::size_t& out) {
  if (token.empty()) return false;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), out);
  return ec == std::errc() && ptr == token.data() + token.size();
}

}  // namespace detail

inline DiGraph parse_digraph(std::string_view text) {
  std::size_t line_no = 0;
  std::size_t n = 0, m = 0;
  bool have_header = false;
  std::size_t header_line = 0;
  std::vector<Arc> arcs;
  std::vector<std::size_t> arc_lines;

  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t eol = text.find('\n', pos);
    std::string_view line = text.substr(pos, eol == std::string_view::npos ? std::string_view::npos : eol - pos);
    pos = eol == std::string_view::npos ? text.size() : eol + 1;
    ++line_no;
    if (line.empty() || line.front() == '#') continue;

    auto tokens = detail::split_single_spaces(line);
    if (tokens.size() != 2)
      throw ParseError(line_no, ErrorKind::ParseError, "expected 2 tokens, got " + std::to_string(tokens.size()));
    std::size_t a = 0, b = 0;
    if (!detail::parse_count(tokens[0], a) || !detail::parse_count(tokens[1], b))
      throw ParseError(line_no, ErrorKind::ParseError, "non-integer token in '" + std::string(line) + "'");

    if (!have_header) {
      if (a == 0) throw ParseError(line_no, ErrorKind::EmptyGraph, "vertex count must be positive");
      n = a;
      m = b;
      have_header = true;
      header_line = line_no;
      continue;
    }
    if (arcs.size() == m) throw ParseError(line_no, ErrorKind::ParseError, "more than " + std::to_string(m) + " arc lines");
    if (a >= n || b >= n) throw ParseError(line_no, ErrorKind::VertexOutOfRange, "vertex out of range for n=" + std::to_string(n));
    if (a == b) throw ParseError(line_no, ErrorKind::LoopArc, "loop at vertex " + std::to_string(a));
    arcs.emplace_back(a, b);
    arc_lines.push_back(line_no);
  }
  if (!have_header) throw ParseError(line_no + 1, ErrorKind::ParseError, "missing 'n m' header");
  if (arcs.size() != m)
    throw ParseError(line_no + 1, ErrorKind::ParseError,
                     "header on line " + std::to_string(header_line) + " promised " + std::to_string(m) +
                         " arcs, found " + std::to_string(arcs.size()));
  if (auto defect = detail::find_arc_defect(n, arcs))
    throw ParseError(arc_lines[defect->index], defect->kind, "duplicate arc " + detail::describe_arc(arcs[defect->index]));
  return DiGraph::build(n, arcs);
}

inline std::string serialize_digraph(const DiGraph& g) {
  std::string out = std::to_string(g.n()) + " " + std::to_string(g.m()) + "\n";
  for (Vertex u = 0; u < g.n(); ++u) {
    for (Vertex w : g.out(u)) {
      out += std::to_string(u);
      out += ' ';
      out += std::to_string(w);
      out += '\n';
    }
  }
  return out;
}

inline std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::IoError, "cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

inline void write_text_file(const std::string& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorKind::IoError, "cannot write '" + path + "'");
  out << text;
  if (!out) throw Error(ErrorKind::IoError, "write failed for '" + path + "'");
}

inline DiGraph load_digraph(const std::string& path) { return parse_digraph(read_text_file(path)); }

}  // namespace semicore
