#include "ccbound/oracle.hpp"

#include <algorithm>
#include <atomic>
#include <fstream>
#include <map>
#include <mutex>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "ccbound/solver.hpp"

namespace ccb {

namespace detail {

std::uint64_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  std::uint64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
  return r;
}

std::uint64_t unrank_combination(std::uint64_t rank, int m) {
  // Combinatorial number system: rank = sum C(c_i, i) with c_m > ... > c_1.
  std::uint64_t mask = 0;
  int c = 63;
  for (int i = m; i >= 1; --i) {
    while (binomial(c, i) > rank) --c;
    rank -= binomial(c, i);
    mask |= std::uint64_t{1} << c;
    --c;
  }
  return mask;
}

}  // namespace detail

namespace {

using detail::binomial;

// Next larger integer with the same popcount (colex successor).
std::uint64_t next_combination(std::uint64_t x) {
  const std::uint64_t low = x & (~x + 1);
  const std::uint64_t ripple = x + low;
  return ripple | (((x ^ ripple) >> 2) / low);
}

// Reversing the first `bits` bits turns "smaller graph6 string" into
// "smaller integer", since graph6 lists pair 0 first.
std::uint64_t graph6_key(std::uint64_t mask, int bits) {
  std::uint64_t key = 0;
  for (int j = 0; j < bits; ++j) {
    if ((mask >> j) & 1U) key |= std::uint64_t{1} << (bits - 1 - j);
  }
  return key;
}

struct Best {
  Count value = -1;
  std::uint64_t key = 0;
  std::uint64_t mask = 0;

  void offer(Count v, std::uint64_t k, std::uint64_t msk) {
    if (v > value || (v == value && k < key)) {
      value = v;
      key = k;
      mask = msk;
    }
  }
};

bool skip_in_pruned_mode(const Graph& g, int n, Count m) {
  if (m <= mmax(n) && has_triangle(g)) return true;  // maximisers below the peak are triangle-free
  if (m >= mmax(n)) {
    const Decomposition d = decompose(g);
    if (d.i != 0) return true;                                               // ... and above it have no singletons
    if (m > 1 && m < edge_capacity(n) && d.s == d.c) return true;            // ... nor a complete C(G)
  }
  return false;
}

Best run_chunk(int n, Count m, EnumerationMode mode, std::uint64_t first, std::uint64_t last) {
  const int bits = static_cast<int>(edge_capacity(n));
  Best best;
  std::uint64_t mask = detail::unrank_combination(first, static_cast<int>(m));
  for (std::uint64_t rank = first; rank < last; ++rank) {
    const Graph g = Graph::from_edge_mask(n, mask);
    if (mode == EnumerationMode::Full || !skip_in_pruned_mode(g, n, m)) {
      const Count value = theta_of(g);
      if (value >= best.value) best.offer(value, graph6_key(mask, bits), mask);
    }
    if (m > 0 && rank + 1 < last) mask = next_combination(mask);
  }
  return best;
}

bool valid_graph6(const std::string& text) {
  try {
    parse_graph6(text);
    return true;
  } catch (const ParseError&) {
    return false;
  }
}

class Journal {
 public:
  explicit Journal(const std::optional<std::filesystem::path>& path) {
    if (!path) return;
    path_ = *path;
    std::ifstream in(path_);
    std::string line;
    while (std::getline(in, line)) {
      std::istringstream fields(line);
      std::string id;
      Count value = 0;
      std::string g6;
      // A torn final line from an interrupted run is dropped and recomputed.
      if (!(fields >> id >> value >> g6)) continue;
      if (value < 0 ? g6 != "-" : !valid_graph6(g6)) continue;
      entries_[id] = {value, g6};
    }
    out_.open(path_, std::ios::app);
    if (!out_) throw std::runtime_error("cannot open journal " + path_.string());
  }

  bool enabled() const { return !path_.empty(); }

  std::optional<std::pair<Count, std::string>> find(const std::string& id) const {
    auto it = entries_.find(id);
    if (it == entries_.end()) return std::nullopt;
    return it->second;
  }

  void append(const std::string& id, Count value, const std::string& g6) {
    std::lock_guard lock(mutex_);
    out_ << id << ' ' << value << ' ' << g6 << '\n';
    out_.flush();
  }

 private:
  std::filesystem::path path_;
  std::map<std::string, std::pair<Count, std::string>> entries_;
  std::ofstream out_;
  std::mutex mutex_;
};

void check_limits(int n, Count m, const OracleOptions& options) {
  if (n < 2 || n > 8) throw std::invalid_argument("oracle supports 2 <= n <= 8, got n = " + std::to_string(n));
  if (options.mode == EnumerationMode::Full && n >= 8 && !options.allow_large) {
    throw std::invalid_argument("full enumeration of n = 8 is an overnight job; enable allow_large");
  }
  if (m < 0 || m > edge_capacity(n)) throw std::invalid_argument("m out of range: " + std::to_string(m));
  if (options.jobs < 1) throw std::invalid_argument("jobs must be at least 1");
  if (options.chunk_size < 1) throw std::invalid_argument("chunk_size must be at least 1");
}

MaxTheta max_theta_impl(int n, Count m, const OracleOptions& options, Journal& journal) {
  check_limits(n, m, options);
  const int bits = static_cast<int>(edge_capacity(n));
  const std::uint64_t total = binomial(bits, static_cast<int>(m));
  const std::uint64_t chunks = (total + options.chunk_size - 1) / options.chunk_size;
  const std::string prefix =
      std::string(to_string(options.mode)) + ":" + std::to_string(n) + ":" + std::to_string(m) + ":" +
      std::to_string(options.chunk_size) + ":";

  std::vector<Best> results(chunks);
  std::atomic<std::uint64_t> next{0};
  auto worker = [&] {
    for (std::uint64_t c = next++; c < chunks; c = next++) {
      const std::string id = prefix + std::to_string(c);
      if (auto done = journal.find(id)) {
        Best b;
        if (done->first >= 0) {
          const std::uint64_t mask = parse_graph6(done->second).edge_mask();
          b.offer(done->first, graph6_key(mask, bits), mask);
        }
        results[c] = b;
        continue;
      }
      const std::uint64_t first = c * options.chunk_size;
      const std::uint64_t last = std::min(total, first + options.chunk_size);
      results[c] = run_chunk(n, m, options.mode, first, last);
      if (journal.enabled()) {
        const Best& b = results[c];
        journal.append(id, b.value, b.value >= 0 ? emit_graph6(Graph::from_edge_mask(n, b.mask)) : "-");
      }
    }
  };

  const auto threads = static_cast<std::uint64_t>(options.jobs);
  if (threads <= 1 || chunks <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (std::uint64_t t = 0; t < std::min(threads, chunks); ++t) pool.emplace_back(worker);
  }

  Best merged;
  for (const Best& b : results) {
    if (b.value >= 0) merged.offer(b.value, b.key, b.mask);
  }
  if (merged.value < 0) throw std::logic_error("every graph was pruned; pruning rule violated");
  return {merged.value, Graph::from_edge_mask(n, merged.mask), total};
}

}  // namespace

std::string_view to_string(EnumerationMode mode) { return mode == EnumerationMode::Full ? "full" : "pruned"; }

EnumerationMode parse_mode(std::string_view text) {
  if (text == "full") return EnumerationMode::Full;
  if (text == "pruned") return EnumerationMode::Pruned;
  throw std::invalid_argument("unknown enumeration mode: " + std::string(text));
}

MaxTheta max_theta_over(int n, Count m, const OracleOptions& options) {
  check_limits(n, m, options);
  Journal journal(options.journal);
  return max_theta_impl(n, m, options, journal);
}

ThetaProfile oracle_profile(int n, const OracleOptions& options) {
  check_limits(n, 0, options);
  Journal journal(options.journal);
  ThetaProfile profile{n, {}};
  for (Count m = 0; m <= edge_capacity(n); ++m) {
    profile.values.push_back({max_theta_impl(n, m, options, journal).value, ThetaStatus::ExactProven});
  }
  return profile;
}

std::size_t OracleReport::matches() const {
  return static_cast<std::size_t>(std::count_if(points.begin(), points.end(), [](const OraclePoint& p) { return p.match; }));
}

std::vector<Count> OracleReport::fatal_mismatches() const {
  std::vector<Count> out;
  for (const OraclePoint& p : points) {
    if (!p.proven) continue;
    const bool proven_exact = p.proven->status == ThetaStatus::ExactProven;
    if ((proven_exact && (p.oracle != p.proven->value || !p.match)) || p.oracle > p.proven->value) out.push_back(p.m);
  }
  return out;
}

std::vector<Count> OracleReport::counterexamples() const {
  std::vector<Count> out;
  for (const OraclePoint& p : points) {
    if (!p.match && p.proven && p.proven->status != ThetaStatus::ExactProven) out.push_back(p.m);
  }
  return out;
}

OracleReport verify_against_closed_form(int n, const OracleOptions& options) {
  check_limits(n, 0, options);
  Journal journal(options.journal);
  OracleReport report;
  report.n = n;
  report.mode = options.mode;
  for (Count m = 0; m <= edge_capacity(n); ++m) {
    const MaxTheta best = max_theta_impl(n, m, options, journal);
    if (theta_of(best.witness) != best.value || best.witness.size() != m) {
      throw std::logic_error("oracle witness failed revalidation at m = " + std::to_string(m));
    }
    OraclePoint point;
    point.m = m;
    point.oracle = best.value;
    point.closed_form = theta_conjectured(n, m);
    if (n >= 4) point.proven = theta_proven(n, m);
    point.match = point.oracle == point.closed_form;
    point.witness_graph6 = emit_graph6(best.witness);
    report.graphs_visited += best.enumerated;
    report.points.push_back(std::move(point));
  }
  return report;
}

std::string report_json(const OracleReport& report) {
  nlohmann::ordered_json doc;
  doc["schema"] = 1;
  doc["n"] = report.n;
  doc["mode"] = to_string(report.mode);
  doc["graphs_visited"] = report.graphs_visited;
  doc["matches"] = report.matches();
  doc["points_total"] = report.points.size();
  doc["all_match"] = report.all_match();
  doc["fatal_mismatches"] = report.fatal_mismatches();
  doc["counterexamples"] = report.counterexamples();
  auto& points = doc["points"] = nlohmann::ordered_json::array();
  for (const OraclePoint& p : report.points) {
    nlohmann::ordered_json item;
    item["m"] = p.m;
    item["oracle"] = p.oracle;
    item["closed_form"] = p.closed_form;
    item["status"] = p.proven ? to_string(p.proven->status) : "n/a";
    if (p.proven) {
      item["proven_value"] = p.proven->value;
    } else {
      item["proven_value"] = nullptr;
    }
    item["match"] = p.match;
    item["witness_graph6"] = p.witness_graph6;
    points.push_back(std::move(item));
  }
  return doc.dump(2) + "\n";
}

std::string report_csv(const OracleReport& report) {
  std::string out = "n,m,oracle,closed_form,status,match,witness_graph6\n";
  for (const OraclePoint& p : report.points) {
    out += std::to_string(report.n) + "," + std::to_string(p.m) + "," + std::to_string(p.oracle) + "," +
           std::to_string(p.closed_form) + "," + std::string(p.proven ? to_string(p.proven->status) : "n/a") + "," +
           (p.match ? "true" : "false") + "," + p.witness_graph6 + "\n";
  }
  return out;
}

}  // namespace ccb
