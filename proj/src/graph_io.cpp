#include <charconv>
#include <fstream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "tcover/error.hpp"
#include "tcover/graph.hpp"

namespace tcover {

namespace {

std::vector<std::string_view> split_tokens(std::string_view line) {
  std::vector<std::string_view> tokens;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    const std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
    if (i > start) tokens.push_back(line.substr(start, i - start));
  }
  return tokens;
}

// Iterates lines with 1-based numbering, skipping blanks and comments.
template <typename Fn>
void for_each_line(std::string_view text, Fn&& fn) {
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto nl = text.find('\n', pos);
    const auto line = text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
    ++line_no;
    const auto tokens = split_tokens(line);
    if (!tokens.empty() && tokens[0][0] != '#' && tokens[0] != "c") fn(line_no, tokens);
    if (nl == std::string_view::npos) break;
    pos = nl + 1;
  }
}

std::uint64_t parse_count(std::string_view token, std::size_t line, const char* what) {
  std::uint64_t value = 0;
  const auto* end = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(token.data(), end, value);
  if (ec != std::errc{} || ptr != end || value > 0xFFFFFFFEull) {
    throw SyntaxError(line, std::string("invalid ") + what + " '" + std::string(token) + "'");
  }
  return value;
}

VertexId parse_vertex(std::string_view token, std::size_t line, std::uint32_t n) {
  const auto id = parse_count(token, line, "vertex id");
  if (id == 0 || id > n) {
    throw Error(ErrorCode::VertexOutOfRange, "line " + std::to_string(line) + ": vertex " + std::string(token) +
                                                 " outside [1," + std::to_string(n) + "]");
  }
  return static_cast<VertexId>(id - 1);
}

}  // namespace

Graph parse_graph(std::string_view text) {
  bool have_header = false;
  std::uint32_t n = 0;
  std::uint64_t m = 0;
  std::size_t last_line = 0;
  std::vector<VertexPair> pairs;
  std::set<VertexPair> seen;

  for_each_line(text, [&](std::size_t line, const std::vector<std::string_view>& tok) {
    last_line = line;
    if (tok[0] == "p") {
      if (have_header) throw SyntaxError(line, "duplicate 'p' header");
      if (tok.size() != 4 || tok[1] != "edge") throw SyntaxError(line, "expected 'p edge <n> <m>'");
      n = static_cast<std::uint32_t>(parse_count(tok[2], line, "vertex count"));
      m = parse_count(tok[3], line, "edge count");
      have_header = true;
      pairs.reserve(m);
    } else if (tok[0] == "e") {
      if (!have_header) throw SyntaxError(line, "edge line before 'p edge' header");
      if (tok.size() != 3) throw SyntaxError(line, "expected 'e <u> <v>'");
      if (pairs.size() == m) throw SyntaxError(line, "more edge lines than the header's " + std::to_string(m));
      const auto u = parse_vertex(tok[1], line, n);
      const auto v = parse_vertex(tok[2], line, n);
      if (u == v) throw Error(ErrorCode::SelfLoop, "line " + std::to_string(line) + ": self-loop on vertex " +
                                                       std::string(tok[1]));
      if (!seen.insert({std::min(u, v), std::max(u, v)}).second) {
        throw Error(ErrorCode::DuplicateEdge, "line " + std::to_string(line) + ": duplicate edge " +
                                                  std::string(tok[1]) + " " + std::string(tok[2]));
      }
      pairs.emplace_back(u, v);
    } else {
      throw SyntaxError(line, "unrecognized line type '" + std::string(tok[0]) + "'");
    }
  });

  if (!have_header) throw SyntaxError(last_line + 1, "missing 'p edge <n> <m>' header");
  if (pairs.size() != m) {
    throw SyntaxError(last_line + 1, "header announces " + std::to_string(m) + " edges, found " +
                                         std::to_string(pairs.size()));
  }
  return Graph::build(n, pairs);
}

std::string serialize_graph(const Graph& g) {
  std::ostringstream out;
  out << "p edge " << g.num_vertices() << ' ' << g.num_edges() << '\n';
  for (const auto& e : g.edges()) out << "e " << e.u + 1 << ' ' << e.v + 1 << '\n';
  return out.str();
}

ElementSet parse_cover(std::string_view text, const Graph& g) {
  std::vector<Element> elements;
  std::set<Element> seen;
  for_each_line(text, [&](std::size_t line, const std::vector<std::string_view>& tok) {
    Element x;
    if (tok[0] == "v") {
      if (tok.size() != 2) throw SyntaxError(line, "expected 'v <id>'");
      x = Element::vertex(parse_vertex(tok[1], line, g.num_vertices()));
    } else if (tok[0] == "e") {
      if (tok.size() != 3) throw SyntaxError(line, "expected 'e <u> <v>'");
      const auto u = parse_vertex(tok[1], line, g.num_vertices());
      const auto v = parse_vertex(tok[2], line, g.num_vertices());
      const auto id = g.find_edge(u, v);
      if (!id) {
        throw Error(ErrorCode::UnknownEdge, "line " + std::to_string(line) + ": " + std::string(tok[1]) + " " +
                                                std::string(tok[2]) + " is not an edge of the graph");
      }
      x = Element::edge(*id);
    } else {
      throw SyntaxError(line, "unrecognized line type '" + std::string(tok[0]) + "'");
    }
    if (!seen.insert(x).second) throw SyntaxError(line, "element listed twice");
    elements.push_back(x);
  });
  return ElementSet(g, std::move(elements));
}

std::string serialize_cover(const Graph& g, const ElementSet& d) {
  std::string out;
  for (const auto& x : d) {
    out += format_element(g, x);
    out += '\n';
  }
  return out;
}

std::string format_element(const Graph& g, Element x) {
  if (x.is_vertex()) return "v " + std::to_string(x.index + 1);
  const auto& e = g.edge(x.index);
  return "e " + std::to_string(e.u + 1) + " " + std::to_string(e.v + 1);
}

std::string describe_element(const Graph& g, Element x) {
  if (x.is_vertex()) return "vertex " + std::to_string(x.index + 1);
  const auto& e = g.edge(x.index);
  return "edge (" + std::to_string(e.u + 1) + "," + std::to_string(e.v + 1) + ")";
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::Io, "cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace tcover
