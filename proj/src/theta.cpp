#include "ccbound/theta.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace ccb {

namespace {

void check_n(int n, int min_n) {
  if (n < min_n || n > kMaxVertices) {
    throw std::invalid_argument("n out of range: " + std::to_string(n) + " (expected " +
                                std::to_string(min_n) + ".." + std::to_string(kMaxVertices) + ")");
  }
}

void check_m(int n, Count m) {
  if (m < 0 || m > edge_capacity(n)) {
    throw std::invalid_argument("m out of range: " + std::to_string(m) + " (expected 0.." +
                                std::to_string(edge_capacity(n)) + ")");
  }
}

}  // namespace

std::uint64_t isqrt(std::uint64_t x) {
  // The double estimate is within one of the answer for every 64-bit input;
  // the two loops make it exact.
  auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(x)));
  while (r > 0 && r > x / r) --r;
  while ((r + 1) <= x / (r + 1)) ++r;
  return r;
}

std::string_view to_string(ThetaStatus status) {
  switch (status) {
    case ThetaStatus::ExactProven: return "exact:proven";
    case ThetaStatus::ExactConjectured: return "exact:conjectured";
    case ThetaStatus::UpperBoundOnly: return "upper-bound";
  }
  return "unknown";
}

Count lovasz_t(Count k) {
  if (k < 0) throw std::invalid_argument("missing-edge count must be nonnegative");
  // t = floor((1 + sqrt(1 + 4k)) / 2), then nudged onto t^2 - t <= k < t^2 + t.
  auto t = static_cast<Count>((1 + isqrt(static_cast<std::uint64_t>(1 + 4 * k))) / 2);
  while (t > 1 && t * t - t > k) --t;
  while ((t + 1) * (t + 1) - (t + 1) <= k) ++t;
  return t;
}

Count lovasz_bound(int n, Count m) {
  check_n(n, 1);
  check_m(n, m);
  const Count k = edge_capacity(n) - m;
  return k + lovasz_t(k);
}

Count theta_conjectured(int n, Count m) {
  check_n(n, 1);
  check_m(n, m);
  if (n == 1) return 1;

  const Count peak = mmax(n);
  if (m == peak) return m;
  if (m < peak) {
    const auto p = static_cast<Count>(isqrt(static_cast<std::uint64_t>(m)));
    if (p * p == m) return n + p * (p - 2);
    if (m <= p * (p + 1)) return m + n - 2 * p - 1;
    return m + n - 2 * p - 2;
  }
  const Count k = edge_capacity(n) - m;
  const Count p = lovasz_t(k);
  if (k < p * p) return p * p;
  return p * (p + 1);
}

ThetaValue theta_proven(int n, Count m) {
  check_n(n, 4);
  check_m(n, m);

  const Count total = edge_capacity(n);
  if (m <= mmax(n)) return {theta_conjectured(n, m), ThetaStatus::ExactProven};
  if (m <= total - mmax(n - 2)) return {mmax(n - 1), ThetaStatus::ExactProven};
  if (m <= total - mmax(n - 3)) return {mmax(n - 2), ThetaStatus::ExactProven};

  const Count k = total - m;
  const Count t = lovasz_t(k);
  const Count bound = k + t;
  if ((k == t * t || k == t * t - t) && m >= mmax(n)) return {bound, ThetaStatus::ExactProven};

  // Peeling a vertex adjacent to everything keeps the value while the
  // missing edges are too few to touch every vertex.
  if (2 * k <= n - 1 && n - 1 >= 4) {
    const ThetaValue reduced = theta_proven(n - 1, m - (n - 1));
    if (reduced.status == ThetaStatus::ExactProven) return reduced;
  }
  return {bound, ThetaStatus::UpperBoundOnly};
}

ThetaProfile curve(int n) {
  check_n(n, 4);
  ThetaProfile profile{n, {}};
  profile.values.reserve(static_cast<std::size_t>(edge_capacity(n) + 1));
  for (Count m = 0; m <= edge_capacity(n); ++m) {
    ThetaValue v = theta_proven(n, m);
    if (v.status == ThetaStatus::UpperBoundOnly) v = {theta_conjectured(n, m), ThetaStatus::ExactConjectured};
    profile.values.push_back(v);
  }
  return profile;
}

ThetaProfile curve_from_deltas_gammas(int n) {
  check_n(n, 4);
  const Count peak = mmax(n);
  const Count total = edge_capacity(n);
  std::vector<Count> value(static_cast<std::size_t>(total + 1), -1);

  // Left side: anchors (0,n), (1,n-1), (2,n-1), then delta_1, delta_1, delta_2, delta_2, ...
  // where delta_d is one (+1,+0) step followed by d (+1,+1) steps.
  value[0] = n;
  value[1] = n - 1;
  value[2] = n - 1;
  Count m = 2;
  Count y = n - 1;
  for (Count d = 1; m < peak; ++d) {
    for (int rep = 0; rep < 2 && m < peak; ++rep) {
      value[static_cast<std::size_t>(++m)] = y;
      for (Count step = 0; step < d && m < peak; ++step) value[static_cast<std::size_t>(++m)] = ++y;
    }
  }
  if (value[static_cast<std::size_t>(peak)] != peak) throw std::logic_error("left walk missed the peak");

  // Right side: from (total+1, 0) walking left with gamma_1, gamma_1, gamma_2, ...
  // where gamma_d is one (-1,+d) step followed by d-1 (-1,+0) steps; the walk
  // stops as soon as it reaches the peak column.
  m = total + 1;
  y = 0;
  for (Count d = 1; m > peak; ++d) {
    for (int rep = 0; rep < 2 && m > peak; ++rep) {
      y += d;
      --m;
      if (m == peak) {
        if (y != peak) throw std::logic_error("right walk missed the peak");
        break;
      }
      value[static_cast<std::size_t>(m)] = y;
      for (Count step = 1; step < d && m > peak; ++step) {
        --m;
        if (m == peak) {
          if (y != peak) throw std::logic_error("right walk missed the peak");
          break;
        }
        value[static_cast<std::size_t>(m)] = y;
      }
    }
  }

  ThetaProfile profile{n, {}};
  profile.values.reserve(value.size());
  for (Count i = 0; i <= total; ++i) {
    const ThetaStatus status = theta_proven(n, i).status == ThetaStatus::UpperBoundOnly
                                   ? ThetaStatus::ExactConjectured
                                   : ThetaStatus::ExactProven;
    profile.values.push_back({value[static_cast<std::size_t>(i)], status});
  }
  return profile;
}

}  // namespace ccb
