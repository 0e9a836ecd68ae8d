#include <cctype>
#include <charconv>

#include "ccbound/graph.hpp"

namespace ccb {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

int graph6_byte(char ch) {
  const int b = static_cast<unsigned char>(ch) - 63;
  if (b < 0 || b > 63) throw ParseError("graph6: byte outside the printable range 63..126");
  return b;
}

}  // namespace

Graph parse_graph6(std::string_view text) {
  text = trim(text);
  constexpr std::string_view header = ">>graph6<<";
  if (text.starts_with(header)) text.remove_prefix(header.size());
  if (text.empty()) throw ParseError("graph6: empty input");

  std::size_t pos = 0;
  int n = 0;
  if (text[0] == '~') {
    if (text.size() >= 2 && text[1] == '~') throw ParseError("graph6: n out of range");
    if (text.size() < 4) throw ParseError("graph6: truncated size header");
    for (int k = 1; k <= 3; ++k) n = (n << 6) | graph6_byte(text[static_cast<std::size_t>(k)]);
    if (n < 63) throw ParseError("graph6: non-canonical size header");
    pos = 4;
  } else {
    n = graph6_byte(text[0]);
    pos = 1;
  }
  if (n < 1 || n > kMaxVertices) throw ParseError("graph6: n out of range: " + std::to_string(n));

  const Count bits = edge_capacity(n);
  const auto bytes = static_cast<std::size_t>((bits + 5) / 6);
  if (text.size() - pos != bytes) throw ParseError("graph6: wrong body length for n = " + std::to_string(n));

  std::vector<VertexSet> adjacency(static_cast<std::size_t>(n), 0);
  Count bit = 0;
  for (std::size_t i = 0; i < bytes; ++i) {
    const int chunk = graph6_byte(text[pos + i]);
    for (int k = 5; k >= 0; --k, ++bit) {
      const bool set = (chunk >> k) & 1;
      if (bit >= bits) {
        if (set) throw ParseError("graph6: nonzero padding bits");
        continue;
      }
      if (!set) continue;
      // Invert edge_index: bit = v(v-1)/2 + u.
      int v = 1;
      Count u = bit;
      while (u >= v) {
        u -= v;
        ++v;
      }
      adjacency[static_cast<std::size_t>(u)] |= singleton_set(v);
      adjacency[static_cast<std::size_t>(v)] |= singleton_set(static_cast<int>(u));
    }
  }
  return Graph::from_adjacency(n, adjacency);
}

std::string emit_graph6(const Graph& g) {
  const int n = g.order();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(63 + n));
  } else {
    out.push_back('~');
    for (int shift = 12; shift >= 0; shift -= 6) out.push_back(static_cast<char>(63 + ((n >> shift) & 63)));
  }
  int chunk = 0;
  int filled = 0;
  for (int v = 1; v < n; ++v) {
    for (int u = 0; u < v; ++u) {
      chunk = (chunk << 1) | (g.adjacent(u, v) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(63 + chunk));
        chunk = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>(63 + (chunk << (6 - filled))));
  return out;
}

Graph parse_edge_list(std::string_view text) {
  // One integer on the first non-blank line, then exactly two per line.
  std::vector<std::vector<long long>> lines;
  std::size_t line_no = 0;
  while (!text.empty()) {
    const std::size_t eol = text.find('\n');
    std::string_view line = text.substr(0, eol);
    text = eol == std::string_view::npos ? std::string_view{} : text.substr(eol + 1);
    ++line_no;
    line = trim(line);
    if (line.empty()) continue;
    std::vector<long long> values;
    while (!line.empty()) {
      long long value = 0;
      auto [ptr, ec] = std::from_chars(line.data(), line.data() + line.size(), value);
      if (ec != std::errc{}) throw ParseError("edge list: expected an integer on line " + std::to_string(line_no));
      line.remove_prefix(static_cast<std::size_t>(ptr - line.data()));
      if (!line.empty() && !std::isspace(static_cast<unsigned char>(line.front()))) {
        throw ParseError("edge list: malformed number on line " + std::to_string(line_no));
      }
      line = trim(line);
      values.push_back(value);
    }
    const std::size_t expected = lines.empty() ? 1 : 2;
    if (values.size() != expected) {
      throw ParseError("edge list: expected " + std::to_string(expected) + " integer(s) on line " +
                       std::to_string(line_no));
    }
    lines.push_back(std::move(values));
  }
  if (lines.empty()) throw ParseError("edge list: empty input");
  const long long n = lines[0][0];
  if (n < 1 || n > kMaxVertices) throw ParseError("edge list: n out of range: " + std::to_string(n));

  std::vector<Edge> edges;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const long long u = lines[i][0];
    const long long v = lines[i][1];
    if (u < 0 || v < 0 || u >= n || v >= n) throw ParseError("edge list: vertex out of range");
    edges.push_back({static_cast<int>(u), static_cast<int>(v)});
  }
  try {
    return Graph::build(static_cast<int>(n), edges);
  } catch (const ParseError&) {
    throw;
  } catch (const GraphError& e) {
    throw ParseError(std::string("edge list: ") + e.what());
  }
}

std::string emit_edge_list(const Graph& g) {
  std::string out = std::to_string(g.order()) + "\n";
  for (const Edge& e : g.edges()) out += std::to_string(e.u) + " " + std::to_string(e.v) + "\n";
  return out;
}

}  // namespace ccb
