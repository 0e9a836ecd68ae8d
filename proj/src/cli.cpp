#include "ccbound/cli.hpp"

#include <cctype>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "ccbound/extremal.hpp"
#include "ccbound/oracle.hpp"
#include "ccbound/solver.hpp"
#include "ccbound/strings.hpp"
#include "ccbound/theta.hpp"

namespace ccb::cli {

namespace {

// Input or usage problems that map to exit code 2.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_input(const std::string& path, std::istream& in) {
  std::ostringstream buffer;
  if (path == "-") {
    buffer << in.rdbuf();
  } else {
    std::ifstream file(path, std::ios::binary);
    if (!file) throw UsageError("cannot read " + path);
    buffer << file.rdbuf();
  }
  return buffer.str();
}

void write_output(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw UsageError("cannot write " + path);
  file << text;
}

Graph parse_graph_text(const std::string& text, const std::string& format) {
  if (format == "graph6") return parse_graph6(text);
  if (format == "edgelist") return parse_edge_list(text);
  // auto: graph6 bytes are 63..126, so a leading digit means an edge list.
  for (char ch : text) {
    if (std::isspace(static_cast<unsigned char>(ch))) continue;
    return std::isdigit(static_cast<unsigned char>(ch)) ? parse_edge_list(text) : parse_graph6(text);
  }
  throw ParseError("empty input");
}

std::string emit_graph_text(const Graph& g, const std::string& format) {
  if (format == "graph6") return emit_graph6(g) + "\n";
  return emit_edge_list(g);
}

std::string format_clique(VertexSet c) {
  std::string out = "{";
  bool first = true;
  for (int v : members(c)) {
    if (!first) out += ',';
    out += std::to_string(v);
    first = false;
  }
  return out + "}";
}

void check_n(long long n) {
  if (n < 4 || n > kMaxVertices) throw UsageError("n out of range (expected 4..64)");
}

void check_m(long long n, long long m) {
  if (m < 0 || m > edge_capacity(n)) throw UsageError("m out of range (expected 0.." + std::to_string(edge_capacity(n)) + ")");
}

std::string curve_text(const ThetaProfile& p, const std::string& format) {
  std::string out;
  const std::string name = "theta_" + std::to_string(p.n);
  if (format == "csv") {
    out = "m,theta,status\n";
    for (std::size_t m = 0; m < p.values.size(); ++m) {
      out += std::to_string(m) + "," + std::to_string(p.values[m].value) + "," + std::string(to_string(p.values[m].status)) + "\n";
    }
  } else if (format == "json") {
    nlohmann::ordered_json doc;
    doc["schema"] = 1;
    doc["n"] = p.n;
    doc["peak"] = p.peak_edges();
    auto& values = doc["values"] = nlohmann::ordered_json::array();
    for (std::size_t m = 0; m < p.values.size(); ++m) {
      values.push_back({{"m", m}, {"theta", p.values[m].value}, {"status", to_string(p.values[m].status)}});
    }
    out = doc.dump(2) + "\n";
  } else if (format == "gnuplot") {
    // Two data blocks separated by two blank lines: "index 0" is the rising
    // side, "index 1" the falling side; both contain the peak.
    const auto peak = static_cast<std::size_t>(p.peak_edges());
    out += "# " + name + "(m), left side (m <= " + std::to_string(peak) + ")\n# m theta\n";
    for (std::size_t m = 0; m <= peak; ++m) out += std::to_string(m) + " " + std::to_string(p.values[m].value) + "\n";
    out += "\n\n# " + name + "(m), right side (m >= " + std::to_string(peak) + ")\n# m theta\n";
    for (std::size_t m = peak; m < p.values.size(); ++m) out += std::to_string(m) + " " + std::to_string(p.values[m].value) + "\n";
  } else {
    out = name + "(m), peak at m = " + std::to_string(p.peak_edges()) + "\n";
    for (std::size_t m = 0; m < p.values.size(); ++m) {
      out += std::to_string(m) + "\t" + std::to_string(p.values[m].value) + "\t" + std::string(to_string(p.values[m].status)) + "\n";
    }
  }
  return out;
}

std::string verify_text(const OracleReport& r) {
  std::string out = "n = " + std::to_string(r.n) + ", mode = " + std::string(to_string(r.mode)) +
                    ", graphs visited = " + std::to_string(r.graphs_visited) + "\n";
  out += "m\toracle\tclosed\tstatus\tmatch\twitness\n";
  for (const OraclePoint& p : r.points) {
    out += std::to_string(p.m) + "\t" + std::to_string(p.oracle) + "\t" + std::to_string(p.closed_form) + "\t" +
           std::string(p.proven ? to_string(p.proven->status) : "n/a") + "\t" + (p.match ? "yes" : "NO") + "\t" +
           p.witness_graph6 + "\n";
  }
  for (Count m : r.fatal_mismatches()) out += "FATAL: proven value contradicted at m = " + std::to_string(m) + "\n";
  for (Count m : r.counterexamples()) out += "COUNTEREXAMPLE to the conjectured closed form at m = " + std::to_string(m) + "\n";
  out += std::to_string(r.matches()) + "/" + std::to_string(r.points.size()) + " points match\n";
  return out;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Largest minimum clique cover over graphs with n vertices and m edges", "ccbound"};
  app.require_subcommand(1);

  long long n = 0;
  long long m = 0;
  std::string curve_format, verify_format, solve_format, witness_format, encode_format, decode_format;
  std::string out_path;
  std::string input;
  std::string mode = "pruned";
  int jobs = 1;
  std::string journal;
  bool allow_large = false;

  auto* theta = app.add_subcommand("theta", "Print the value and proof status for one (n, m)");
  theta->add_option("n", n, "vertex count")->required();
  theta->add_option("m", m, "edge count")->required();

  auto* curve_cmd = app.add_subcommand("curve", "Write the whole curve for one n");
  curve_cmd->add_option("n", n, "vertex count")->required();
  curve_cmd->add_option("--format", curve_format, "csv, json, gnuplot or text")
      ->check(CLI::IsMember({"csv", "json", "gnuplot", "text"}))
      ->default_val("csv");
  curve_cmd->add_option("--out", out_path, "output file");

  auto* verify = app.add_subcommand("verify", "Compare the closed form with exhaustive enumeration");
  verify->add_option("n", n, "vertex count (2..8)")->required();
  verify->add_option("--mode", mode, "full or pruned")->check(CLI::IsMember({"full", "pruned"}));
  verify->add_option("--jobs", jobs, "worker threads")->check(CLI::PositiveNumber);
  verify->add_option("--journal", journal, "append-only chunk journal for resumable runs");
  verify->add_option("--format", verify_format, "text, json or csv")
      ->check(CLI::IsMember({"text", "json", "csv"}))
      ->default_val("text");
  verify->add_option("--out", out_path, "output file");
  verify->add_flag("--allow-large", allow_large, "permit full enumeration at n = 8");

  auto* solve = app.add_subcommand("solve", "Minimum clique cover of a graph file");
  solve->add_option("input", input, "graph file, or - for stdin")->required();
  solve->add_option("--format", solve_format, "auto, graph6 or edgelist")
      ->check(CLI::IsMember({"auto", "graph6", "edgelist"}))
      ->default_val("auto");

  auto* witness_cmd = app.add_subcommand("witness", "Write a graph attaining the value for (n, m)");
  witness_cmd->add_option("n", n, "vertex count")->required();
  witness_cmd->add_option("m", m, "edge count")->required();
  witness_cmd->add_option("--format", witness_format, "graph6 or edgelist")
      ->check(CLI::IsMember({"graph6", "edgelist"}))
      ->default_val("graph6");
  witness_cmd->add_option("--out", out_path, "output file for the graph");

  auto* encode_cmd = app.add_subcommand("encode", "Graph file to indeterminate string");
  encode_cmd->add_option("input", input, "graph file, or - for stdin")->required();
  encode_cmd->add_option("--format", encode_format, "auto, graph6 or edgelist")
      ->check(CLI::IsMember({"auto", "graph6", "edgelist"}))
      ->default_val("auto");
  encode_cmd->add_option("--out", out_path, "output file");

  auto* decode_cmd = app.add_subcommand("decode", "Indeterminate string to its match graph");
  decode_cmd->add_option("input", input, "string file, or - for stdin")->required();
  decode_cmd->add_option("--format", decode_format, "edgelist or graph6")
      ->check(CLI::IsMember({"edgelist", "graph6"}))
      ->default_val("edgelist");
  decode_cmd->add_option("--out", out_path, "output file");

  std::vector<std::string> reversed(args.rbegin(), args.rend() - 1);
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (*theta) {
      check_n(n);
      check_m(n, m);
      ThetaValue v = theta_proven(static_cast<int>(n), m);
      std::string extra;
      if (v.status == ThetaStatus::UpperBoundOnly) {
        extra = " (proven upper bound " + std::to_string(v.value) + ")";
        v = {theta_conjectured(static_cast<int>(n), m), ThetaStatus::ExactConjectured};
      }
      out << "theta_" << n << "(" << m << ") = " << v.value << " [" << to_string(v.status) << "]" << extra << "\n";
      return kExitOk;
    }
    if (*curve_cmd) {
      check_n(n);
      write_output(out_path, curve_text(curve(static_cast<int>(n)), curve_format), out);
      return kExitOk;
    }
    if (*verify) {
      if (n < 2 || n > 8) throw UsageError("n out of range for exhaustive verification (expected 2..8)");
      OracleOptions options;
      options.mode = parse_mode(mode);
      options.jobs = jobs;
      options.allow_large = allow_large;
      if (!journal.empty()) options.journal = journal;
      err << "verifying n = " << n << " (" << mode << ", " << jobs << " job" << (jobs == 1 ? "" : "s") << ")\n";
      const OracleReport report = verify_against_closed_form(static_cast<int>(n), options);
      std::string text;
      if (verify_format == "json") {
        text = report_json(report);
      } else if (verify_format == "csv") {
        text = report_csv(report);
      } else {
        text = verify_text(report);
      }
      write_output(out_path, text, out);
      if (verify_format != "text") err << report.matches() << "/" << report.points.size() << " points match\n";
      return report.all_match() ? kExitOk : kExitMismatch;
    }
    if (*solve) {
      const Graph g = parse_graph_text(read_input(input, in), solve_format);
      const CliqueCover cover = min_clique_cover(g);
      out << "theta = " << cover.size() << "\n";
      for (VertexSet c : cover.cliques) out << format_clique(c) << "\n";
      return kExitOk;
    }
    if (*witness_cmd) {
      check_n(n);
      check_m(n, m);
      const WitnessResult w = witness(static_cast<int>(n), m);
      write_output(out_path, emit_graph_text(w.graph, witness_format), out);
      out << "theta = " << w.claimed_theta << " (" << to_string(w.guarantee) << ")\n";
      return kExitOk;
    }
    if (*encode_cmd) {
      const Graph g = parse_graph_text(read_input(input, in), encode_format);
      const IndeterminateString s = encode(g);
      write_output(out_path, s.serialize(), out);
      err << "alphabet = " << s.alphabet_size() << "\n";
      return kExitOk;
    }
    if (*decode_cmd) {
      const Graph g = match_graph(IndeterminateString::parse(read_input(input, in)));
      write_output(out_path, emit_graph_text(g, decode_format), out);
      return kExitOk;
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    // GraphError and ParseError derive from invalid_argument.
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace ccb::cli
