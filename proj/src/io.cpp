#include "kalliance/io.hpp"

#include <cctype>
#include <charconv>
#include <fstream>
#include <istream>
#include <map>
#include <optional>
#include <sstream>
#include <string_view>
#include <vector>

#include "kalliance/errors.hpp"

namespace kalliance {

namespace {

std::vector<std::string_view> tokens(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    const std::size_t start = i;
    while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    if (i > start) out.push_back(line.substr(start, i - start));
  }
  return out;
}

long long number(std::string_view tok, std::size_t line) {
  long long v = 0;
  auto [end, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc{} || end != tok.data() + tok.size()) {
    throw ParseError(line, "expected an integer, got '" + std::string(tok) + "'");
  }
  return v;
}

}  // namespace

Graph parse_graph(std::istream& in) {
  std::optional<std::pair<long long, long long>> header;
  std::size_t header_line = 0;
  std::vector<Edge> edges;
  std::map<Edge, std::size_t> seen;
  std::string raw;
  std::size_t line = 0;

  while (std::getline(in, raw)) {
    ++line;
    const auto toks = tokens(raw);
    if (toks.empty() || toks.front().front() == '#') continue;
    if (toks.size() != 2) throw ParseError(line, "expected two integers, got " + std::to_string(toks.size()) + " fields");
    const long long a = number(toks[0], line);
    const long long b = number(toks[1], line);
    if (!header) {
      if (a < 0 || b < 0) throw ParseError(line, "negative count in header");
      if (a > 1'000'000) throw ParseError(line, "vertex count too large");
      header = {a, b};
      header_line = line;
      continue;
    }
    const long long n = header->first;
    if (a < 0 || b < 0 || a >= n || b >= n) {
      throw ParseError(line, "edge endpoint outside 0.." + std::to_string(n - 1));
    }
    if (a == b) throw ParseError(line, "self-loop at vertex " + std::to_string(a));
    const Edge e{static_cast<Vertex>(std::min(a, b)), static_cast<Vertex>(std::max(a, b))};
    if (auto it = seen.find(e); it != seen.end()) {
      throw ParseError(line, "edge " + std::to_string(e.first) + " " + std::to_string(e.second) +
                                 " repeats line " + std::to_string(it->second));
    }
    if (static_cast<long long>(edges.size()) == header->second) {
      throw ParseError(line, "more edges than the " + std::to_string(header->second) + " declared in the header");
    }
    seen.emplace(e, line);
    edges.push_back(e);
  }
  if (in.bad()) throw InputError("read error");
  if (!header) throw ParseError(line == 0 ? 1 : line, "missing 'n m' header");
  if (static_cast<long long>(edges.size()) != header->second) {
    throw ParseError(header_line, "header declares " + std::to_string(header->second) + " edges but " +
                                      std::to_string(edges.size()) + " follow");
  }
  return Graph(static_cast<int>(header->first), edges);
}

Graph parse_graph_text(const std::string& text) {
  std::istringstream in(text);
  return parse_graph(in);
}

Graph parse_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path + "'");
  return parse_graph(in);
}

void write_graph(std::ostream& out, const Graph& g) {
  out << g.order() << ' ' << g.size() << '\n';
  for (const auto& [u, v] : g.edges()) out << u << ' ' << v << '\n';
}

std::string write_graph_text(const Graph& g) {
  std::ostringstream out;
  write_graph(out, g);
  return out.str();
}

void write_graph_file(const std::string& path, const Graph& g) {
  std::ofstream out(path);
  if (!out) throw InputError("cannot write '" + path + "'");
  write_graph(out, g);
  if (!out) throw InputError("write to '" + path + "' failed");
}

}  // namespace kalliance
