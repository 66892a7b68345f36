// tcover: command-line front end over the C API of libtcover.

#include <algorithm>
#include <atomic>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "tcover/tcover.h"

namespace {

enum ExitCode : int {
  kOk = 0,
  kInvalidCover = 1,
  kParseError = 2,
  kInternal = 3,
  kTooLarge = 4,
  kBudget = 5,
};

struct GraphDeleter {
  void operator()(tcover_graph* g) const { tcover_graph_free(g); }
};
struct CoverDeleter {
  void operator()(tcover_cover* c) const { tcover_cover_free(c); }
};
struct ApproxDeleter {
  void operator()(tcover_approx* a) const { tcover_approx_free(a); }
};
struct ExactDeleter {
  void operator()(tcover_exact* x) const { tcover_exact_free(x); }
};
struct StringDeleter {
  void operator()(char* s) const { tcover_string_free(s); }
};

using GraphPtr = std::unique_ptr<tcover_graph, GraphDeleter>;
using CoverPtr = std::unique_ptr<tcover_cover, CoverDeleter>;
using ApproxPtr = std::unique_ptr<tcover_approx, ApproxDeleter>;
using ExactPtr = std::unique_ptr<tcover_exact, ExactDeleter>;

// Error carrying the status of a failed C API call.
struct ApiError {
  tcover_status status;
  std::string message;
};

void check(tcover_status status) {
  if (status != TCOVER_OK) throw ApiError{status, tcover_last_error()};
}

int exit_code_for(tcover_status status) {
  switch (status) {
    case TCOVER_OK: return kOk;
    case TCOVER_ERR_TOO_LARGE: return kTooLarge;
    case TCOVER_ERR_BUDGET_EXCEEDED: return kBudget;
    case TCOVER_ERR_NOT_MAXIMUM:
    case TCOVER_ERR_INTERNAL: return kInternal;
    default: return kParseError;
  }
}

std::string take_string(char* raw) {
  std::unique_ptr<char, StringDeleter> owned(raw);
  return owned ? std::string(owned.get()) : std::string();
}

std::string ratio_text(std::uint64_t num, std::uint64_t den) {
  char* out = nullptr;
  check(tcover_format_ratio(num, den, 4, &out));
  return take_string(out);
}

GraphPtr load_graph(const std::string& path) {
  tcover_graph* g = nullptr;
  check(tcover_graph_load(path.c_str(), &g));
  return GraphPtr(g);
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out || !(out << text)) throw ApiError{TCOVER_ERR_IO, "cannot write '" + path + "'"};
}

std::string serialize(const tcover_graph* g, const tcover_cover* c) {
  char* out = nullptr;
  check(tcover_cover_serialize(g, c, &out));
  return take_string(out);
}

// Re-validates a cover; returns an empty string when valid, else the witness.
std::string invalid_witness(const tcover_graph* g, const tcover_cover* c) {
  int ok = 0;
  tcover_element witness{};
  check(tcover_check_total_cover(g, c, &ok, &witness));
  if (ok) return {};
  char* text = nullptr;
  check(tcover_describe_element(g, witness, &text));
  return take_string(text);
}

tcover_matching_mode matching_mode(const std::string& name) {
  return name == "maximal" ? TCOVER_MATCHING_MAXIMAL : TCOVER_MATCHING_MAXIMUM;
}

// ---------------------------------------------------------------------------

struct SolveOptions {
  std::string graph;
  bool trace = false;
  std::string output;
};

int cmd_solve(const SolveOptions& opt) {
  auto g = load_graph(opt.graph);
  tcover_approx* raw = nullptr;
  check(tcover_approx_solve(g.get(), &raw));
  ApproxPtr a(raw);
  const tcover_cover* cover = tcover_approx_cover(a.get());

  if (const auto w = invalid_witness(g.get(), cover); !w.empty()) {
    std::cerr << "internal error: algorithm output is not a total cover (uncovered " << w << ")\n";
    return kInternal;
  }
  if (opt.trace) {
    for (std::size_t i = 0; i < tcover_approx_trace_length(a.get()); ++i) {
      std::cout << tcover_approx_trace_line(a.get(), i) << '\n';
    }
  }
  std::uint64_t num = 1, den = 1;
  tcover_approx_ratio(a.get(), &num, &den);
  std::cout << "size=" << tcover_cover_size(cover) << " m=" << tcover_approx_m(a.get())
            << " k=" << tcover_approx_k(a.get()) << " t=" << tcover_approx_t(a.get())
            << " lb=" << tcover_approx_lower_bound(a.get()) << " ratio=" << ratio_text(num, den) << '\n';
  if (!opt.output.empty()) write_text(opt.output, serialize(g.get(), cover));
  return kOk;
}

struct ExactOptions {
  std::string graph;
  std::uint32_t max_elements = 32;
  std::uint64_t max_candidates = 100'000'000;
  bool start_at_lower_bound = false;
  std::string output;
};

int cmd_exact(const ExactOptions& opt) {
  auto g = load_graph(opt.graph);
  tcover_search_limits limits;
  tcover_search_limits_default(&limits);
  limits.max_elements = opt.max_elements;
  limits.max_candidates = opt.max_candidates;
  if (opt.start_at_lower_bound) {
    tcover_approx* raw = nullptr;
    check(tcover_approx_solve(g.get(), &raw));
    ApproxPtr a(raw);
    limits.start_size = tcover_approx_lower_bound(a.get());
  }

  tcover_exact* raw = nullptr;
  std::uint32_t reached = 0;
  if (const auto status = tcover_exact_total_cover(g.get(), &limits, &raw, &reached); status != TCOVER_OK) {
    std::cerr << "error: " << tcover_last_error() << '\n';
    if (status == TCOVER_ERR_BUDGET_EXCEEDED) std::cerr << "reached size " << reached << '\n';
    return exit_code_for(status);
  }
  ExactPtr x(raw);
  const tcover_cover* opt_cover = tcover_exact_optimum(x.get());
  if (const auto w = invalid_witness(g.get(), opt_cover); !w.empty()) {
    std::cerr << "internal error: optimum is not a total cover (uncovered " << w << ")\n";
    return kInternal;
  }
  const auto text = serialize(g.get(), opt_cover);
  std::cout << "size=" << tcover_exact_size(x.get()) << " candidates=" << tcover_exact_candidates(x.get()) << '\n'
            << text;
  if (!opt.output.empty()) write_text(opt.output, text);
  return kOk;
}

struct BaselineOptions {
  std::string graph;
  std::string method = "matched-vertices";
  std::string matching = "maximum";
};

int cmd_baseline(const BaselineOptions& opt) {
  auto g = load_graph(opt.graph);
  tcover_cover* raw = nullptr;
  if (opt.method == "greedy-domination") {
    check(tcover_baseline_greedy_domination(g.get(), &raw));
  } else {
    check(tcover_baseline_matched_vertices(g.get(), matching_mode(opt.matching), &raw));
  }
  CoverPtr c(raw);
  if (const auto w = invalid_witness(g.get(), c.get()); !w.empty()) {
    std::cerr << "internal error: baseline output is not a total cover (uncovered " << w << ")\n";
    return kInternal;
  }
  std::cout << "method=" << opt.method;
  if (opt.method != "greedy-domination") std::cout << " matching=" << opt.matching;
  std::cout << " size=" << tcover_cover_size(c.get()) << " valid=yes\n";
  return kOk;
}

struct VerifyOptions {
  std::string graph;
  std::string cover;
};

int cmd_verify(const VerifyOptions& opt) {
  auto g = load_graph(opt.graph);
  tcover_cover* raw = nullptr;
  check(tcover_cover_load(opt.cover.c_str(), g.get(), &raw));
  CoverPtr c(raw);
  if (const auto w = invalid_witness(g.get(), c.get()); !w.empty()) {
    std::cout << "INVALID witness=" << w << '\n';
    return kInvalidCover;
  }
  std::cout << "VALID size=" << tcover_cover_size(c.get()) << '\n';
  return kOk;
}

struct GenOptions {
  std::string family;
  std::uint32_t n = 0;
  double p = 0.5;
  std::uint64_t seed = 0;
  std::uint32_t isolated = 0;
  std::string output;
};

int cmd_gen(const GenOptions& opt) {
  tcover_graph* raw = nullptr;
  const auto& f = opt.family;
  if (f == "figure1") {
    check(tcover_gen_figure1(opt.n, &raw));
  } else if (f == "path") {
    check(tcover_gen_path(opt.n, &raw));
  } else if (f == "cycle") {
    check(tcover_gen_cycle(opt.n, &raw));
  } else if (f == "star") {
    check(tcover_gen_star(opt.n, &raw));
  } else if (f == "complete") {
    check(tcover_gen_complete(opt.n, &raw));
  } else if (f == "petersen") {
    check(tcover_gen_petersen(&raw));
  } else {
    check(tcover_gen_gnp(opt.n, opt.p, opt.seed, &raw));
  }
  GraphPtr g(raw);
  if (opt.isolated > 0) {
    tcover_graph* padded = nullptr;
    check(tcover_graph_add_isolated(g.get(), opt.isolated, &padded));
    g.reset(padded);
  }
  char* text = nullptr;
  check(tcover_graph_serialize(g.get(), &text));
  const auto body = take_string(text);
  std::ostringstream summary;
  summary << "n=" << tcover_graph_num_vertices(g.get()) << " edges=" << tcover_graph_num_edges(g.get()) << '\n';
  if (opt.output.empty()) {
    std::cout << body;
    std::cerr << summary.str();
  } else {
    write_text(opt.output, body);
    std::cout << summary.str();
  }
  return kOk;
}

// ---------------------------------------------------------------------------

struct CompareOptions {
  std::vector<std::string> files;
  std::string dir;
  std::string csv;
  std::uint32_t exact_limit = 32;
  std::uint64_t max_candidates = 100'000'000;
  std::string matching = "maximum";
  unsigned jobs = 1;
};

struct CompareRow {
  std::string instance;
  std::string n, edges, m, k, t, alg_size, lower_bound, exact_size, baseline_size, greedy_size, ratio_vs_lb,
      ratio_vs_exact, error;
  bool invariant_broken = false;
};

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

CompareRow evaluate(const std::string& name, const std::string& path, const CompareOptions& opt) {
  CompareRow row;
  row.instance = name;
  try {
    auto g = load_graph(path);
    const auto n = tcover_graph_num_vertices(g.get());
    const auto e = tcover_graph_num_edges(g.get());
    row.n = std::to_string(n);
    row.edges = std::to_string(e);

    tcover_approx* raw_a = nullptr;
    check(tcover_approx_solve(g.get(), &raw_a));
    ApproxPtr a(raw_a);
    const auto alg = tcover_cover_size(tcover_approx_cover(a.get()));
    const auto m = tcover_approx_m(a.get()), k = tcover_approx_k(a.get()), t = tcover_approx_t(a.get());
    const auto lb = tcover_approx_lower_bound(a.get());
    row.m = std::to_string(m);
    row.k = std::to_string(k);
    row.t = std::to_string(t);
    row.alg_size = std::to_string(alg);
    row.lower_bound = std::to_string(lb);
    std::uint64_t num = 1, den = 1;
    tcover_approx_ratio(a.get(), &num, &den);
    row.ratio_vs_lb = ratio_text(num, den);

    std::vector<std::string> problems;
    if (!invalid_witness(g.get(), tcover_approx_cover(a.get())).empty()) problems.push_back("approx cover invalid");
    if (alg != std::size_t{m} + k + t) problems.push_back("alg_size != m+k+t");
    if (alg > 2 * std::size_t{lb}) problems.push_back("ratio_vs_lb > 2");

    tcover_cover* raw_b = nullptr;
    check(tcover_baseline_matched_vertices(g.get(), matching_mode(opt.matching), &raw_b));
    CoverPtr baseline(raw_b);
    row.baseline_size = std::to_string(tcover_cover_size(baseline.get()));
    if (!invalid_witness(g.get(), baseline.get()).empty()) problems.push_back("baseline cover invalid");

    tcover_cover* raw_gd = nullptr;
    check(tcover_baseline_greedy_domination(g.get(), &raw_gd));
    CoverPtr greedy(raw_gd);
    row.greedy_size = std::to_string(tcover_cover_size(greedy.get()));
    if (!invalid_witness(g.get(), greedy.get()).empty()) problems.push_back("greedy cover invalid");

    if (std::uint64_t{n} + e <= opt.exact_limit) {
      tcover_search_limits limits;
      tcover_search_limits_default(&limits);
      limits.max_elements = opt.exact_limit;
      limits.max_candidates = opt.max_candidates;
      tcover_exact* raw_x = nullptr;
      const auto status = tcover_exact_total_cover(g.get(), &limits, &raw_x, nullptr);
      if (status == TCOVER_OK) {
        ExactPtr x(raw_x);
        const std::size_t exact = tcover_exact_size(x.get());
        row.exact_size = std::to_string(exact);
        row.ratio_vs_exact = exact == 0 ? ratio_text(1, 1) : ratio_text(alg, exact);
        if (!(lb <= exact && exact <= alg && alg <= 2 * exact)) {
          problems.push_back("lower_bound <= exact <= alg <= 2*exact violated");
        }
      } else {
        problems.push_back(std::string("exact: ") + tcover_status_name(status));
      }
    }

    for (const auto& p : problems) {
      if (!row.error.empty()) row.error += "; ";
      row.error += p;
      row.invariant_broken = row.invariant_broken || p.rfind("exact: ", 0) != 0;
    }
  } catch (const ApiError& err) {
    row.error = std::string(tcover_status_name(err.status)) + ": " + err.message;
  }
  return row;
}

int cmd_compare(const CompareOptions& opt) {
  std::vector<std::pair<std::string, std::string>> inputs;  // (name, path)
  if (!opt.dir.empty()) {
    std::vector<std::filesystem::path> listing;
    std::error_code ec;
    for (const auto& entry : std::filesystem::directory_iterator(opt.dir, ec)) {
      if (entry.is_regular_file()) listing.push_back(entry.path());
    }
    if (ec) {
      std::cerr << "error: cannot list '" << opt.dir << "': " << ec.message() << '\n';
      return kParseError;
    }
    std::sort(listing.begin(), listing.end());
    for (const auto& p : listing) inputs.emplace_back(p.filename().string(), p.string());
  }
  for (const auto& f : opt.files) inputs.emplace_back(f, f);

  std::vector<CompareRow> rows(inputs.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < inputs.size(); i = next++) {
      rows[i] = evaluate(inputs[i].first, inputs[i].second, opt);
    }
  };
  {
    std::vector<std::jthread> pool;
    const unsigned jobs = std::max(1u, std::min<unsigned>(opt.jobs, static_cast<unsigned>(inputs.size())));
    for (unsigned j = 1; j < jobs; ++j) pool.emplace_back(worker);
    worker();
  }

  std::ostringstream csv;
  csv << "instance,n,edges,m,k,t,alg_size,lower_bound,exact_size,baseline_size,greedy_size,ratio_vs_lb,"
         "ratio_vs_exact,error\n";
  bool broken = false;
  for (const auto& r : rows) {
    csv << csv_field(r.instance) << ',' << r.n << ',' << r.edges << ',' << r.m << ',' << r.k << ',' << r.t << ','
        << r.alg_size << ',' << r.lower_bound << ',' << r.exact_size << ',' << r.baseline_size << ','
        << r.greedy_size << ',' << r.ratio_vs_lb << ',' << r.ratio_vs_exact << ',' << csv_field(r.error) << '\n';
    broken = broken || r.invariant_broken;
  }
  if (opt.csv.empty() || opt.csv == "-") {
    std::cout << csv.str();
  } else {
    write_text(opt.csv, csv.str());
  }
  return broken ? kInternal : kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Total cover approximation, exact oracles and baselines"};
  app.name("tcover");
  app.require_subcommand(1);

  SolveOptions solve;
  auto* solve_cmd = app.add_subcommand("solve", "Run the factor-2 approximation");
  solve_cmd->add_option("graph", solve.graph, "Graph file")->required();
  solve_cmd->add_flag("--trace", solve.trace, "Print one line per added element");
  solve_cmd->add_option("-o,--output", solve.output, "Write the cover to this file");

  ExactOptions exact;
  auto* exact_cmd = app.add_subcommand("exact", "Minimum total cover by exhaustive search");
  exact_cmd->add_option("graph", exact.graph, "Graph file")->required();
  exact_cmd->add_option("--max-elements", exact.max_elements, "Refuse graphs with more vertices + edges");
  exact_cmd->add_option("--max-candidates", exact.max_candidates, "Subset budget");
  exact_cmd->add_flag("--start-at-lower-bound", exact.start_at_lower_bound,
                      "Start the search at the certified lower bound");
  exact_cmd->add_option("-o,--output", exact.output, "Write the optimum to this file");

  BaselineOptions baseline;
  auto* baseline_cmd = app.add_subcommand("baseline", "Run a baseline heuristic");
  baseline_cmd->add_option("graph", baseline.graph, "Graph file")->required();
  baseline_cmd->add_option("--method", baseline.method)
      ->check(CLI::IsMember({"matched-vertices", "greedy-domination"}));
  baseline_cmd->add_option("--matching", baseline.matching)->check(CLI::IsMember({"maximal", "maximum"}));

  VerifyOptions verify;
  auto* verify_cmd = app.add_subcommand("verify", "Check that a cover file is a total cover");
  verify_cmd->add_option("graph", verify.graph, "Graph file")->required();
  verify_cmd->add_option("--cover", verify.cover, "Cover file")->required();

  GenOptions gen;
  auto* gen_cmd = app.add_subcommand("gen", "Generate a graph file");
  gen_cmd->add_option("family", gen.family)
      ->required()
      ->check(CLI::IsMember({"figure1", "path", "cycle", "star", "complete", "gnp", "petersen"}));
  gen_cmd->add_option("--n", gen.n, "Family size parameter");
  gen_cmd->add_option("--p", gen.p, "Edge probability (gnp)");
  gen_cmd->add_option("--seed", gen.seed, "Seed (gnp)");
  gen_cmd->add_option("--isolated", gen.isolated, "Append this many isolated vertices");
  gen_cmd->add_option("-o,--output", gen.output, "Output file (default stdout)");

  CompareOptions compare;
  auto* compare_cmd = app.add_subcommand("compare", "Tabulate algorithm, baselines and exact sizes as CSV");
  compare_cmd->add_option("files", compare.files, "Graph files");
  compare_cmd->add_option("--dir", compare.dir, "Directory of graph files (sorted by name)");
  compare_cmd->add_option("--csv", compare.csv, "Output CSV (default stdout)");
  compare_cmd->add_option("--exact-limit", compare.exact_limit, "Run the exact oracle up to this many elements");
  compare_cmd->add_option("--max-candidates", compare.max_candidates, "Subset budget for the exact oracle");
  compare_cmd->add_option("--matching", compare.matching, "Matching for the matched-vertices baseline")
      ->check(CLI::IsMember({"maximal", "maximum"}));
  compare_cmd->add_option("-j,--jobs", compare.jobs, "Worker threads");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kOk : kParseError;
  }

  try {
    if (*solve_cmd) return cmd_solve(solve);
    if (*exact_cmd) return cmd_exact(exact);
    if (*baseline_cmd) return cmd_baseline(baseline);
    if (*verify_cmd) return cmd_verify(verify);
    if (*gen_cmd) return cmd_gen(gen);
    if (*compare_cmd) {
      if (compare.files.empty() && compare.dir.empty()) {
        std::cerr << "error: compare needs graph files or --dir\n";
        return kParseError;
      }
      return cmd_compare(compare);
    }
  } catch (const ApiError& err) {
    std::cerr << "error: " << tcover_status_name(err.status) << ": " << err.message << '\n';
    return exit_code_for(err.status);
  }
  return kInternal;
}
