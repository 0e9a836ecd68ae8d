#pragma once

/// \file strings.hpp
/// \brief Indeterminate strings: sequences of nonempty letter sets in which
/// two positions match iff their sets intersect. The match relation is a
/// graph, and the fewest letters that realise a graph equal its minimum
/// clique cover size.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ccbound/graph.hpp"
#include "ccbound/solver.hpp"

namespace ccb {

using Letter = std::uint32_t;

class IndeterminateString {
 public:
  /// Throws GraphError if any position is empty. Letters within a position
  /// are sorted and deduplicated.
  explicit IndeterminateString(std::vector<std::vector<Letter>> positions);

  const std::vector<std::vector<Letter>>& positions() const { return positions_; }
  std::size_t length() const { return positions_.size(); }
  std::size_t alphabet_size() const { return alphabet_size_; }

  /// One position per line, letters as integers, comma-separated, ascending.
  std::string serialize() const;
  static IndeterminateString parse(std::string_view text);

  /// "{a}{a,b}{b}" style rendering; needs every letter < 26.
  std::string display() const;

  bool operator==(const IndeterminateString&) const = default;

 private:
  std::vector<std::vector<Letter>> positions_;
  std::size_t alphabet_size_ = 0;
};

/// Position v carries letter j iff v is in clique j. Without a cover the
/// minimum one is used. Throws GraphError if the cover does not verify.
IndeterminateString encode(const Graph& g, const std::optional<CliqueCover>& cover = std::nullopt);

/// Vertices are positions; u ~ v iff their letter sets intersect.
Graph match_graph(const IndeterminateString& s);

Count min_alphabet_size(const Graph& g);

}  // namespace ccb
