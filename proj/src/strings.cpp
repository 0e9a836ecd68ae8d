#include "ccbound/strings.hpp"

#include <algorithm>
#include <charconv>
#include <set>

namespace ccb {

IndeterminateString::IndeterminateString(std::vector<std::vector<Letter>> positions)
    : positions_(std::move(positions)) {
  std::set<Letter> alphabet;
  for (auto& letters : positions_) {
    if (letters.empty()) throw GraphError("indeterminate string: empty position");
    std::sort(letters.begin(), letters.end());
    letters.erase(std::unique(letters.begin(), letters.end()), letters.end());
    alphabet.insert(letters.begin(), letters.end());
  }
  alphabet_size_ = alphabet.size();
}

std::string IndeterminateString::serialize() const {
  std::string out;
  for (const auto& letters : positions_) {
    for (std::size_t i = 0; i < letters.size(); ++i) {
      if (i) out += ',';
      out += std::to_string(letters[i]);
    }
    out += '\n';
  }
  return out;
}

IndeterminateString IndeterminateString::parse(std::string_view text) {
  std::vector<std::vector<Letter>> positions;
  std::size_t line_no = 0;
  while (!text.empty()) {
    const std::size_t eol = text.find('\n');
    std::string_view line = text.substr(0, eol);
    text = eol == std::string_view::npos ? std::string_view{} : text.substr(eol + 1);
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.empty()) continue;
    std::vector<Letter> letters;
    while (true) {
      Letter value = 0;
      auto [ptr, ec] = std::from_chars(line.data(), line.data() + line.size(), value);
      if (ec != std::errc{}) throw ParseError("string: bad letter on line " + std::to_string(line_no));
      letters.push_back(value);
      line.remove_prefix(static_cast<std::size_t>(ptr - line.data()));
      if (line.empty()) break;
      if (line.front() != ',') throw ParseError("string: expected ',' on line " + std::to_string(line_no));
      line.remove_prefix(1);
    }
    positions.push_back(std::move(letters));
  }
  if (positions.empty()) throw ParseError("string: empty input");
  return IndeterminateString(std::move(positions));
}

std::string IndeterminateString::display() const {
  std::string out;
  for (const auto& letters : positions_) {
    out += '{';
    for (std::size_t i = 0; i < letters.size(); ++i) {
      if (letters[i] >= 26) throw GraphError("display needs letters below 26");
      if (i) out += ',';
      out += static_cast<char>('a' + letters[i]);
    }
    out += '}';
  }
  return out;
}

IndeterminateString encode(const Graph& g, const std::optional<CliqueCover>& cover) {
  const CliqueCover used = cover ? *cover : min_clique_cover(g);
  if (!verify_cover(g, used)) throw GraphError("encode: not a clique cover of the graph");
  std::vector<std::vector<Letter>> positions(static_cast<std::size_t>(g.order()));
  for (std::size_t j = 0; j < used.cliques.size(); ++j) {
    for (int v : members(used.cliques[j])) positions[static_cast<std::size_t>(v)].push_back(static_cast<Letter>(j));
  }
  return IndeterminateString(std::move(positions));
}

Graph match_graph(const IndeterminateString& s) {
  if (s.length() > static_cast<std::size_t>(kMaxVertices)) throw GraphError("match_graph: more than 64 positions");
  const auto& pos = s.positions();
  std::vector<Edge> edges;
  for (std::size_t u = 0; u < pos.size(); ++u) {
    for (std::size_t v = u + 1; v < pos.size(); ++v) {
      // Both letter lists are sorted.
      auto a = pos[u].begin();
      auto b = pos[v].begin();
      bool meet = false;
      while (a != pos[u].end() && b != pos[v].end() && !meet) {
        if (*a == *b) {
          meet = true;
        } else if (*a < *b) {
          ++a;
        } else {
          ++b;
        }
      }
      if (meet) edges.push_back({static_cast<int>(u), static_cast<int>(v)});
    }
  }
  return Graph::build(static_cast<int>(pos.size()), edges);
}

Count min_alphabet_size(const Graph& g) { return theta_of(g); }

}  // namespace ccb
