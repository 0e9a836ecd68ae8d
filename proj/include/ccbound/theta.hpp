#pragma once

/// \file theta.hpp
/// \brief Closed forms for the largest minimum clique cover over all graphs
/// with n vertices and m edges.
///
/// Two independent routes compute the same curve: the piecewise closed form
/// (`theta_conjectured`, `theta_proven`, `curve`) and a step-sequence
/// construction (`curve_from_deltas_gammas`). All arithmetic is exact
/// integer arithmetic; there is no floating point anywhere in this module.

#include <cstdint>
#include <string_view>
#include <vector>

namespace ccb {

using Count = std::int64_t;

inline constexpr int kMaxVertices = 64;

/// floor(sqrt(x)), exact for all 64-bit inputs.
std::uint64_t isqrt(std::uint64_t x);

/// floor(x^2 / 4): the largest edge count of a triangle-free graph on x vertices.
constexpr Count mmax(Count x) { return (x * x) / 4; }

/// n choose 2.
constexpr Count edge_capacity(Count n) { return n * (n - 1) / 2; }

enum class ThetaStatus {
  ExactProven,       ///< value is the true maximum, established by theorem
  ExactConjectured,  ///< value is the conjectured maximum; only an upper bound is proven
  UpperBoundOnly,    ///< value is a proven upper bound that may not be attained
};

/// "exact:proven", "exact:conjectured" or "upper-bound".
std::string_view to_string(ThetaStatus status);

struct ThetaValue {
  Count value = 0;
  ThetaStatus status = ThetaStatus::ExactProven;

  bool operator==(const ThetaValue&) const = default;
};

/// The full curve m -> value for one vertex count; `values` has
/// edge_capacity(n) + 1 entries.
struct ThetaProfile {
  int n = 0;
  std::vector<ThetaValue> values;

  Count peak_edges() const { return mmax(n); }
};

/// Largest t >= 1 with t^2 - t <= k.
Count lovasz_t(Count k);

/// k + lovasz_t(k) where k is the number of missing edges.
/// Throws std::invalid_argument if m is outside [0, n(n-1)/2].
Count lovasz_bound(int n, Count m);

/// The linear-time closed form for every (n, m) with 1 <= n <= 64.
/// (1, 0) returns 1: a lone vertex still needs one clique.
Count theta_conjectured(int n, Count m);

/// The piecewise theorem, unwound, for 4 <= n <= 64. Points the theorem
/// only bounds come back as UpperBoundOnly carrying the bound k + t;
/// whenever the status is ExactProven the value equals theta_conjectured.
ThetaValue theta_proven(int n, Count m);

/// theta_proven at every m, with UpperBoundOnly points replaced by the
/// conjectured value and status ExactConjectured.
ThetaProfile curve(int n);

/// The same curve rebuilt from the anchor points and the delta/gamma step
/// sequences, walking in from both ends toward the peak (mmax(n), mmax(n)).
/// Throws std::logic_error if the walks fail to meet at the peak.
ThetaProfile curve_from_deltas_gammas(int n);

}  // namespace ccb
