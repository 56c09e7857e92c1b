#pragma once

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "normlap/error.hpp"
#include "normlap/graph.hpp"

namespace normlap {

// Edge-list text format:
//
//   # optional comment lines, anywhere
//   n m
//   u v        (exactly m lines, 1 <= u < v <= n)
//
// Blank lines are ignored. Line numbers in ParseError are 1-based.
inline Graph parse_edge_list(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  int line_no = 0;
  bool have_header = false;
  long long n = 0;
  long long m = 0;
  std::vector<std::pair<Vertex, Vertex>> pairs;

  auto read_two = [&](const std::string& s, long long& a, long long& b) {
    std::istringstream fields(s);
    std::string extra;
    if (!(fields >> a >> b)) {
      throw ParseError(line_no, "expected two integers, got '" + s + "'");
    }
    if (fields >> extra) {
      throw ParseError(line_no, "unexpected trailing token '" + extra + "'");
    }
  };

  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const auto first = line.find_first_not_of(" \t");
    if (first == std::string::npos) continue;
    if (line[first] == '#') continue;

    long long a = 0;
    long long b = 0;
    read_two(line, a, b);
    if (!have_header) {
      if (a < 2) throw ParseError(line_no, "vertex count must be >= 2");
      if (b < 0) throw ParseError(line_no, "edge count must be >= 0");
      n = a;
      m = b;
      have_header = true;
      continue;
    }
    if (static_cast<long long>(pairs.size()) == m) {
      throw ParseError(line_no, "more edge lines than the header's m=" + std::to_string(m));
    }
    if (a < 1 || a > n || b < 1 || b > n) {
      throw Error(ErrorCode::VertexOutOfRange,
                  "line " + std::to_string(line_no) + ": vertex outside 1.." + std::to_string(n));
    }
    pairs.emplace_back(static_cast<Vertex>(a), static_cast<Vertex>(b));
  }
  if (!have_header) throw ParseError(line_no, "missing 'n m' header");
  if (static_cast<long long>(pairs.size()) != m) {
    throw ParseError(line_no, "header declares m=" + std::to_string(m) + " but " +
                                  std::to_string(pairs.size()) + " edge lines follow");
  }
  return build_graph(static_cast<int>(n), pairs);
}

inline std::string serialize_edge_list(const Graph& g) {
  std::string out = std::to_string(g.order()) + " " + std::to_string(g.size()) + "\n";
  for (const Edge& e : g.edges()) {
    out += std::to_string(e.u);
    out += ' ';
    out += std::to_string(e.v);
    out += '\n';
  }
  return out;
}

inline Graph read_edge_list_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw Error(ErrorCode::IoError, "file not found or unreadable: " + path.string());
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_edge_list(buffer.str());
}

inline void write_edge_list_file(const std::filesystem::path& path, const Graph& g) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::IoError, "cannot open for writing: " + path.string());
  out << serialize_edge_list(g);
  if (!out) throw Error(ErrorCode::IoError, "write failed: " + path.string());
}

}  // namespace normlap
