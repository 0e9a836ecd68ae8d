#pragma once

/// \file oracle.hpp
/// \brief Ground truth for the largest minimum clique cover by enumerating
/// every labeled graph with n vertices and m edges.
///
/// Edge subsets are enumerated as 64-bit masks in colex order (bit j is the
/// j-th pair in graph6 order) and split into fixed-size rank ranges
/// ("chunks"). Chunks can run on several threads and can be journaled so an
/// interrupted run resumes; neither changes the result.

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "ccbound/graph.hpp"
#include "ccbound/theta.hpp"

namespace ccb {

enum class EnumerationMode {
  Full,    ///< solve every graph
  Pruned,  ///< skip graphs that provably cannot maximise the cover size
};

std::string_view to_string(EnumerationMode mode);
EnumerationMode parse_mode(std::string_view text);

struct OracleOptions {
  EnumerationMode mode = EnumerationMode::Pruned;
  int jobs = 1;
  /// Append-only record of finished chunks; existing entries are reused.
  std::optional<std::filesystem::path> journal;
  /// Full mode refuses n = 8 unless this is set.
  bool allow_large = false;
  /// Combinations per chunk. Part of each journal line's chunk id, so entries
  /// written with another size are ignored.
  std::uint64_t chunk_size = std::uint64_t{1} << 16;
};

struct MaxTheta {
  Count value = 0;
  Graph witness;  ///< maximiser with the smallest graph6 string
  std::uint64_t enumerated = 0;
};

/// Max of theta_of over all labeled graphs on n vertices with m edges.
/// Requires 2 <= n <= 8 (Full mode: n <= 7 unless allow_large).
MaxTheta max_theta_over(int n, Count m, const OracleOptions& options = {});

/// Oracle value at every m, all marked ExactProven.
ThetaProfile oracle_profile(int n, const OracleOptions& options = {});

struct OraclePoint {
  Count m = 0;
  Count oracle = 0;
  Count closed_form = 0;                 ///< theta_conjectured
  std::optional<ThetaValue> proven;      ///< theta_proven; absent for n < 4
  bool match = false;                    ///< oracle == closed_form
  std::string witness_graph6;
};

struct OracleReport {
  int n = 0;
  EnumerationMode mode = EnumerationMode::Pruned;
  std::uint64_t graphs_visited = 0;
  std::vector<OraclePoint> points;

  std::size_t matches() const;
  bool all_match() const { return matches() == points.size(); }
  /// Mismatches where the closed form is proven (implementation bugs) or the
  /// proven upper bound is exceeded.
  std::vector<Count> fatal_mismatches() const;
  /// Mismatches where the closed form is only conjectured.
  std::vector<Count> counterexamples() const;
};

/// Oracle vs closed form at every m. Witnesses are re-solved before they are
/// reported; a witness that fails to reproduce its value throws std::logic_error.
OracleReport verify_against_closed_form(int n, const OracleOptions& options = {});

/// JSON document with "schema": 1.
std::string report_json(const OracleReport& report);
/// Columns n,m,oracle,closed_form,status,match,witness_graph6.
std::string report_csv(const OracleReport& report);

namespace detail {
/// Binomial coefficient for the small arguments the oracle needs.
std::uint64_t binomial(int n, int k);
/// The colex rank-th m-subset of {0..63} as a mask.
std::uint64_t unrank_combination(std::uint64_t rank, int m);
}  // namespace detail

}  // namespace ccb
