#pragma once

// Edge-list text format: a header line "<n> <m>", then m lines "<u> <v>"
// with u < v. Lines starting with '#' and blank lines are ignored.

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstddef>
#include <cstdint>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "stochmatch/graph.hpp"

namespace stochmatch {

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

namespace detail {

inline std::vector<std::string_view> split_ws(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    std::size_t j = i;
    while (j < s.size() && !std::isspace(static_cast<unsigned char>(s[j]))) ++j;
    if (j > i) out.push_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

inline std::uint64_t parse_count(std::string_view tok, std::size_t line) {
  std::uint64_t v = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc() || ptr != tok.data() + tok.size()) {
    throw ParseError(line, "expected a nonnegative integer, got '" + std::string(tok) + "'");
  }
  return v;
}

}  // namespace detail

inline Graph read_edge_list(std::istream& in) {
  std::string text;
  std::size_t line_no = 0;
  bool have_header = false;
  std::uint64_t n = 0;
  std::uint64_t m = 0;
  std::vector<std::pair<Vertex, Vertex>> pairs;
  while (std::getline(in, text)) {
    ++line_no;
    auto toks = detail::split_ws(text);
    if (toks.empty() || toks.front().front() == '#') continue;
    if (toks.size() != 2) throw ParseError(line_no, "expected two fields, got " + std::to_string(toks.size()));
    const auto a = detail::parse_count(toks[0], line_no);
    const auto b = detail::parse_count(toks[1], line_no);
    if (!have_header) {
      if (a >= kNoVertex) throw ParseError(line_no, "vertex count too large");
      n = a;
      m = b;
      have_header = true;
      pairs.reserve(static_cast<std::size_t>(std::min<std::uint64_t>(m, 1u << 26)));
      continue;
    }
    if (pairs.size() == m) throw ParseError(line_no, "more edges than the header's m=" + std::to_string(m));
    if (a >= n || b >= n) throw ParseError(line_no, "endpoint out of range for n=" + std::to_string(n));
    if (a == b) throw ParseError(line_no, "self-loop at " + std::to_string(a));
    pairs.emplace_back(static_cast<Vertex>(a), static_cast<Vertex>(b));
  }
  if (!have_header) throw ParseError(line_no, "missing '<n> <m>' header");
  if (pairs.size() != m) {
    throw ParseError(line_no, "header declares m=" + std::to_string(m) + " but found " +
                                  std::to_string(pairs.size()) + " edges");
  }
  try {
    return build_graph(static_cast<std::size_t>(n), pairs);
  } catch (const GraphError& e) {
    throw ParseError(line_no, e.what());
  }
}

inline void write_edge_list(std::ostream& out, const Graph& g) {
  out << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (const auto& e : g.edges()) out << e.u << ' ' << e.v << '\n';
}

/// The edges of s as a graph on s's vertex set, in increasing parent id order.
inline void write_edge_list(std::ostream& out, const EdgeSet& s) {
  out << s.parent().vertex_count() << ' ' << s.size() << '\n';
  for (EdgeId e : s) out << s.parent().edge(e).u << ' ' << s.parent().edge(e).v << '\n';
}

inline Graph load_edge_list(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return read_edge_list(in);
}

template <class G>
void save_edge_list(const G& g, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  write_edge_list(out, g);
  if (!out) throw std::runtime_error("write failed for " + path);
}

}  // namespace stochmatch
