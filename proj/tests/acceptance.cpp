// Acceptance suite: one line per criterion, non-zero exit if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "cli_support.hpp"
#include "tcover/cover_approx.hpp"
#include "tcover/exact.hpp"
#include "tcover/instances.hpp"
#include "tcover/matching.hpp"

using namespace tcover;

namespace {

// Collects failures for one criterion; the first few are reported.
class Check {
 public:
  void expect(bool ok, const std::string& what) {
    ++checks_;
    if (ok) return;
    if (failures_.size() < 5) failures_.push_back(what);
    ++failed_;
  }
  void note(const std::string& s) { notes_ += (notes_.empty() ? "" : "; ") + s; }

  bool ok() const { return failed_ == 0; }
  std::size_t checks() const { return checks_; }
  std::size_t failed() const { return failed_; }
  const std::vector<std::string>& failures() const { return failures_; }
  const std::string& notes() const { return notes_; }

 private:
  std::size_t checks_ = 0;
  std::size_t failed_ = 0;
  std::vector<std::string> failures_;
  std::string notes_;
};

std::string graph_label(const Graph& g) {
  std::ostringstream s;
  s << "n=" << g.num_vertices() << " edges=[";
  for (const auto& e : g.edges()) s << "(" << e.u << "," << e.v << ")";
  return s.str() + "]";
}

// Approx against the exact optimum; shared by the sweeps.
void check_against_exact(Check& c, const Graph& g, const SearchLimits& limits) {
  const auto r = approx_total_cover(g);
  const auto alg = r.cover.size();
  c.expect(is_total_cover(g, r.cover).valid, "approx cover invalid on " + graph_label(g));
  c.expect(alg == r.m + r.k + r.t, "alg_size != m+k+t on " + graph_label(g));
  const auto exact = exact_total_cover(g, limits).size;
  c.expect(r.lower_bound <= exact, "lower bound above optimum on " + graph_label(g));
  c.expect(exact <= alg, "approx below optimum on " + graph_label(g));
  c.expect(alg <= 2 * exact, "approx above twice optimum on " + graph_label(g));
}

void figure1_reproduction(Check& c) {
  SearchLimits limits;
  limits.max_elements = 64;
  for (std::uint32_t n : {4u, 6u, 8u}) {
    const auto g = figure1(n);
    const auto tag = "figure1(" + std::to_string(n) + ")";
    c.expect(maximum_matching(g).size() == n, tag + ": maximum matching size != n");

    std::vector<Element> d{Element::vertex(0)};
    for (EdgeId e : figure1_rungs(n)) d.push_back(Element::edge(e));
    const ElementSet construction(g, d);
    c.expect(construction.size() == n / 2 + 1, tag + ": construction size != n/2+1");
    c.expect(is_total_cover(g, construction).valid, tag + ": construction is not a total cover");

    const auto exact = exact_total_cover(g, limits);
    c.expect(exact.size == n / 2 + 1, tag + ": exact optimum " + std::to_string(exact.size) + " != n/2+1");

    const auto r = approx_total_cover(g);
    c.expect(r.cover.size() == r.m + r.k + r.t, tag + ": approx size != m+k+t");
    c.note(tag + " alg=" + std::to_string(r.cover.size()) + " opt=" + std::to_string(exact.size));
  }
}

void tightness_trends(Check& c) {
  const std::uint32_t n = 100;
  const auto g = figure1(n);
  const std::size_t reference = n / 2 + 1;

  std::vector<Element> d{Element::vertex(0)};
  for (EdgeId e : figure1_rungs(n)) d.push_back(Element::edge(e));
  c.expect(is_total_cover(g, ElementSet(g, d)).valid, "construction invalid at n=100");

  const auto baseline = matched_vertices_cover(g, MatchingMode::Maximum);
  const Rational baseline_ratio(baseline.size(), reference);
  c.expect(baseline.size() == 200, "matched-vertices size " + std::to_string(baseline.size()) + " != 200");
  c.expect(baseline_ratio >= Rational(380, 100), "matched-vertices ratio below 3.80");

  const auto r = approx_total_cover(g);
  const Rational approx_ratio(r.cover.size(), reference);
  c.expect(r.cover.size() == 100, "approx size " + std::to_string(r.cover.size()) + " != 100");
  c.expect(approx_ratio >= Rational(190, 100) && approx_ratio <= Rational(2, 1), "approx ratio outside [1.90, 2.00]");
  c.note("baseline " + std::to_string(baseline.size()) + "/51=" + baseline_ratio.to_fixed(4) + ", approx " +
         std::to_string(r.cover.size()) + "/51=" + approx_ratio.to_fixed(4));
}

void oracle_sweep(Check& c) {
  const SearchLimits limits;
  std::size_t graphs = 0;
  enumerate_graphs(5, [&](const Graph& g) {
    ++graphs;
    check_against_exact(c, g, limits);
  });
  enumerate_graphs(6, [&](const Graph& g) {
    if (!is_connected(g)) return;
    ++graphs;
    check_against_exact(c, g, limits);
  });
  c.note(std::to_string(graphs) + " graphs");
}

void total_graph_identity(Check& c) {
  const SearchLimits limits;
  std::size_t graphs = 0;
  auto cross = [&](const Graph& g) {
    ++graphs;
    const auto r = cross_check_alpha2(g, limits);
    c.expect(r.agree, "alpha2 " + std::to_string(r.alpha2) + " != gamma(T) " + std::to_string(r.gamma_total) +
                          " on " + graph_label(g));
  };
  for (std::uint32_t n = 0; n <= 5; ++n) enumerate_graphs(n, cross);
  for (const auto& g : {path(4), cycle(5), complete(4), star(5), figure1(4)}) cross(g);
  c.note(std::to_string(graphs) + " graphs");
}

void matching_correctness(Check& c) {
  std::size_t graphs = 0;
  auto compare = [&](const Graph& g) {
    ++graphs;
    const auto m = maximum_matching(g);
    c.expect(m.size() == brute_force_maximum_matching(g).size(), "blossom != brute force on " + graph_label(g));
    c.expect(verify_matching(g, m, MatchingCheck::Maximum), "verify_matching(maximum) failed on " + graph_label(g));
  };
  for (std::uint32_t n = 0; n <= 6; ++n) enumerate_graphs(n, compare);
  for (std::uint32_t n = 3; n <= 11; n += 2) compare(cycle(n));
  compare(petersen());
  c.note(std::to_string(graphs) + " graphs");
}

void randomized_robustness(Check& c) {
  const SearchLimits limits;
  const double probabilities[] = {0.1, 0.3, 0.5};
  std::size_t with_exact = 0;
  for (std::uint64_t i = 0; i < 500; ++i) {
    const auto n = static_cast<std::uint32_t>(2 + i % 11);
    const auto g = gnp(n, probabilities[i % 3], 0x5eed0000 + i);
    const auto r = approx_total_cover(g);
    const auto alg = r.cover.size();
    c.expect(is_total_cover(g, r.cover).valid, "approx invalid on " + graph_label(g));
    c.expect(alg == r.m + r.k + r.t, "alg_size != m+k+t on " + graph_label(g));
    c.expect(alg <= 2 * r.lower_bound, "alg_size > 2*lower_bound on " + graph_label(g));
    if (g.num_elements() <= limits.max_elements) {
      ++with_exact;
      c.expect(alg <= 2 * exact_total_cover(g, limits).size, "alg_size > 2*exact on " + graph_label(g));
    }
  }
  c.note("500 instances, " + std::to_string(with_exact) + " with exact");
}

void compare_determinism(Check& c) {
  cli::TempDir dir("tcover-acceptance");
  std::vector<Graph> graphs;
  std::vector<std::string> names;
  for (std::uint32_t n = 4; n <= 12; n += 2) {
    graphs.push_back(figure1(n));
    names.push_back("figure1_" + std::to_string(n));
  }
  for (std::uint64_t seed = 0; seed < 6; ++seed) {
    graphs.push_back(gnp(9, 0.3, seed));
    names.push_back("gnp_" + std::to_string(seed));
  }
  graphs.push_back(petersen());
  names.push_back("petersen");
  graphs.push_back(add_isolated(complete(3), 2));
  names.push_back("k3_isolated");

  std::string files;
  for (std::size_t i = 0; i < graphs.size(); ++i) {
    const auto path = dir / (names[i] + ".txt");
    cli::write(path, serialize_graph(graphs[i]));
    files += " '" + path.string() + "'";
  }
  const auto first = dir / "first.csv";
  const auto second = dir / "second.csv";
  const auto parallel = dir / "parallel.csv";
  c.expect(cli::run("compare --csv '" + first.string() + "'" + files).status == 0, "first compare run failed");
  c.expect(cli::run("compare --csv '" + second.string() + "'" + files).status == 0, "second compare run failed");
  c.expect(cli::run("compare --jobs 4 --csv '" + parallel.string() + "'" + files).status == 0,
           "parallel compare run failed");
  const auto a = cli::slurp(first);
  c.expect(!a.empty() && std::count(a.begin(), a.end(), '\n') == static_cast<long>(graphs.size() + 1),
           "unexpected CSV row count");
  c.expect(a == cli::slurp(second), "CSV differs between identical runs");
  c.expect(a == cli::slurp(parallel), "CSV differs with --jobs 4");
  c.note(std::to_string(graphs.size()) + " instances, " + std::to_string(a.size()) + " bytes");
}

struct Criterion {
  const char* id;
  const char* title;
  double budget_seconds;
  std::function<void(Check&)> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {"AC1", "Figure-1 reproduction (n = 4, 6, 8)", 60.0, figure1_reproduction},
      {"AC2", "tightness trends at n = 100", 1.0, tightness_trends},
      {"AC3", "oracle sweep (all n=5, connected n=6)", 300.0, oracle_sweep},
      {"AC4", "total-graph identity alpha2 = gamma(T(G))", 120.0, total_graph_identity},
      {"AC5", "matching correctness vs brute force", 120.0, matching_correctness},
      {"AC6", "randomized robustness (500 gnp)", 300.0, randomized_robustness},
      {"AC7", "compare CSV determinism", 60.0, compare_determinism},
  };

  int failed = 0;
  for (const auto& criterion : criteria) {
    Check check;
    const auto start = std::chrono::steady_clock::now();
    try {
      criterion.run(check);
    } catch (const std::exception& e) {
      check.expect(false, std::string("exception: ") + e.what());
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    check.expect(seconds < criterion.budget_seconds, "runtime over budget");

    const bool pass = check.ok();
    failed += pass ? 0 : 1;
    std::printf("%s %s: %s  [%zu checks, %.2fs / %.0fs]  %s\n", pass ? "PASS" : "FAIL", criterion.id,
                criterion.title, check.checks(), seconds, criterion.budget_seconds, check.notes().c_str());
    for (const auto& f : check.failures()) std::printf("    - %s\n", f.c_str());
    if (check.failed() > check.failures().size()) {
      std::printf("    ... %zu more\n", check.failed() - check.failures().size());
    }
  }
  std::printf("%d of %zu criteria failed\n", failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
