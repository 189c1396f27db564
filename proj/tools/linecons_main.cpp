// Copyright 2026 The linecons Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Command-line front end: check, line-graph, decompose, fuzz.
//
// Exit codes: 0 line consistent / success, 1 not line consistent,
// 2 input or usage error, 3 internal disagreement between methods.

#include <cstdint>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "linecons/linecons.hpp"

namespace {

using namespace linecons;

constexpr int kConsistent = 0;
constexpr int kInconsistent = 1;
constexpr int kInputError = 2;
constexpr int kDisagreement = 3;

constexpr std::size_t kFuzzMaxVertices = 10;
constexpr std::size_t kFuzzMaxEdges = 16;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write '" + path + "'");
  out << text;
}

std::string describe(const Verdict& v) {
  if (v.line_consistent) return "line consistent";
  std::string s = "not line consistent (";
  s += clause_name(*v.failed_clause);
  if (v.location) s += " at " + *v.location;
  return s + ")";
}

// ---------------------------------------------------------------------------
// check
// ---------------------------------------------------------------------------

struct CheckOptions {
  std::string input;
  std::string method = "all";
  bool witness = false;
  std::size_t circle_limit = EnumerationLimits{}.max_circles;
};

int run_check(const CheckOptions& opt) {
  const SignedGraph g = read_signed_graph(read_file(opt.input));
  const EnumerationLimits limits{opt.circle_limit};

  std::vector<std::pair<std::string, std::function<Verdict()>>> methods{
      {"i", [&] { return check_condition_i(g); }},
      {"ii", [&] { return check_condition_ii(g); }},
      {"iii", [&] { return check_condition_iii(g); }},
      {"thm1", [&] { return check_theorem1_simple(g, limits); }},
      {"structure", [&] { return check_structure(g); }},
      {"oracle", [&] { return line_consistency_oracle(g, limits); }},
  };

  if (opt.method == "thm1" && !g.is_simple()) {
    std::cerr << "error: method thm1 requires a simple graph\n";
    return kInputError;
  }

  std::optional<Verdict> reference;
  bool disagreement = false;
  for (const auto& [name, run] : methods) {
    if (opt.method != "all" && opt.method != name) continue;
    if (name == "thm1" && !g.is_simple()) {
      std::cout << name << ": skipped (requires a simple graph)\n";
      continue;
    }
    Verdict v = run();
    std::cout << name << ": " << describe(v) << '\n';
    if (!reference) {
      reference = v;
    } else if (reference->line_consistent != v.line_consistent) {
      disagreement = true;
    }
  }
  if (opt.method == "all") {
    if (auto c = check_corollary_3(g)) {
      std::cout << "corollary3: " << (*c ? "line consistent" : "not line consistent") << '\n';
      disagreement = disagreement || *c != reference->line_consistent;
    }
  }
  if (disagreement) {
    std::cerr << "internal error: methods disagree on this graph\n";
    return kDisagreement;
  }

  std::cout << "result: " << (reference->line_consistent ? "line consistent" : "not line consistent")
            << '\n';
  if (reference->line_consistent) return kConsistent;
  if (opt.witness) {
    Circle w = reference->witness ? *reference->witness : find_witness(g, *reference, limits);
    std::cout << "witness: " << to_json(w).dump() << '\n';
  }
  return kInconsistent;
}

// ---------------------------------------------------------------------------
// line-graph and decompose
// ---------------------------------------------------------------------------

int run_line_graph(const std::string& input, const std::string& output, const std::string& format) {
  const MarkedGraph line = line_graph(read_signed_graph(read_file(input)));
  write_output(output, format == "dot" ? export_dot(line) : write_marked_graph(line) + "\n");
  return kConsistent;
}

int run_decompose(const std::string& input, const std::string& output, const std::string& format) {
  const SignedGraph g = read_signed_graph(read_file(input));
  const StructureReport report = classify_structure(g);
  write_output(output, format == "dot" ? export_dot(g, &report) : to_json(report).dump(2) + "\n");
  return report.line_consistent ? kConsistent : kInconsistent;
}

// ---------------------------------------------------------------------------
// fuzz
// ---------------------------------------------------------------------------

struct FuzzOptions {
  std::size_t max_n = 7;
  std::size_t max_m = 12;
  std::size_t count = 1000;
  std::uint64_t seed = 42;
  bool exhaustive = false;
  bool generator = false;
  std::string recipe;
  unsigned jobs = 1;
};

std::vector<CrossCheck> evaluate_all(const std::vector<SignedGraph>& graphs, unsigned jobs) {
  std::vector<CrossCheck> results(graphs.size());
  std::vector<std::string> errors(graphs.size());
  auto worker = [&](std::size_t first) {
    for (std::size_t i = first; i < graphs.size(); i += jobs) {
      try {
        results[i] = cross_check(graphs[i]);
      } catch (const std::exception& e) {
        errors[i] = e.what();
      }
    }
  };
  std::vector<std::thread> threads;
  for (unsigned t = 1; t < jobs; ++t) threads.emplace_back(worker, t);
  worker(0);
  for (auto& t : threads) t.join();
  for (std::size_t i = 0; i < errors.size(); ++i) {
    if (!errors[i].empty()) {
      throw std::runtime_error("graph " + std::to_string(i) + ": " + errors[i]);
    }
  }
  return results;
}

int run_fuzz(const FuzzOptions& opt) {
  std::vector<SignedGraph> graphs;
  std::optional<Recipe> fixed_recipe;
  if (!opt.recipe.empty()) fixed_recipe = read_recipe(read_file(opt.recipe));

  if (opt.exhaustive) {
    auto corpus = exhaustive_signed_graphs(opt.max_n, opt.max_m);
    while (auto g = corpus.next()) graphs.push_back(std::move(*g));
    std::cout << "mode: exhaustive (max-n " << opt.max_n << ", max-m " << opt.max_m << ")\n";
  } else if (opt.generator || fixed_recipe) {
    for (std::size_t i = 0; i < opt.count; ++i) {
      const Recipe r = fixed_recipe ? *fixed_recipe : random_recipe(opt.seed + i);
      graphs.push_back(generate_line_consistent(r, opt.seed + i));
    }
    std::cout << "mode: generator (seed " << opt.seed << ")\n";
  } else {
    if (opt.max_n > kFuzzMaxVertices || opt.max_m > kFuzzMaxEdges || opt.max_n < 1) {
      std::cerr << "error: random fuzzing supports 1 <= max-n <= " << kFuzzMaxVertices
                << " and max-m <= " << kFuzzMaxEdges << '\n';
      return kInputError;
    }
    for (std::size_t i = 0; i < opt.count; ++i) {
      graphs.push_back(random_corpus_graph(opt.seed, i, opt.max_n, opt.max_m));
    }
    std::cout << "mode: random (seed " << opt.seed << ", max-n " << opt.max_n << ", max-m "
              << opt.max_m << ")\n";
  }

  const std::vector<CrossCheck> results = evaluate_all(graphs, std::max(1u, opt.jobs));
  std::size_t consistent = 0;
  std::size_t disagreements = 0;
  std::size_t witness_failures = 0;
  std::size_t generator_failures = 0;
  std::optional<std::size_t> first_bad;
  const bool expect_consistent = opt.generator || fixed_recipe.has_value();
  for (std::size_t i = 0; i < results.size(); ++i) {
    const CrossCheck& r = results[i];
    consistent += r.oracle ? 1 : 0;
    bool bad = false;
    if (!r.verdicts_agree()) ++disagreements, bad = true;
    if (!r.witnesses_valid()) ++witness_failures, bad = true;
    if (expect_consistent && !r.oracle) ++generator_failures, bad = true;
    if (bad && !first_bad) first_bad = i;
  }
  std::cout << "graphs: " << graphs.size() << '\n'
            << "line consistent: " << consistent << '\n'
            << "disagreements: " << disagreements << '\n'
            << "witness failures: " << witness_failures << '\n';
  if (expect_consistent) std::cout << "generator failures: " << generator_failures << '\n';
  if (first_bad) {
    const CrossCheck& r = results[*first_bad];
    std::cout << "counterexample: " << write_signed_graph(graphs[*first_bad]) << '\n'
              << "  oracle=" << r.oracle << " i=" << r.condition_i << " ii=" << r.condition_ii
              << " iii=" << r.condition_iii << " structure=" << r.structure << '\n';
    return kDisagreement;
  }
  return kConsistent;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Line consistency of signed multigraphs"};
  app.require_subcommand(1);

  CheckOptions check;
  auto* check_cmd = app.add_subcommand("check", "Decide line consistency of a signed graph");
  check_cmd->add_option("input", check.input, "Signed graph JSON file")->required();
  check_cmd->add_option("--method", check.method, "Decision method")
      ->check(CLI::IsMember({"i", "ii", "iii", "thm1", "structure", "oracle", "all"}));
  check_cmd->add_flag("--witness", check.witness, "Print a negative line-graph circle");
  check_cmd->add_option("--circle-limit", check.circle_limit, "Oracle enumeration cap");

  std::string lg_input, lg_output, lg_format = "json";
  auto* lg_cmd = app.add_subcommand("line-graph", "Write the vertex-signed line graph");
  lg_cmd->add_option("input", lg_input, "Signed graph JSON file")->required();
  lg_cmd->add_option("-o,--output", lg_output, "Output file (default stdout)");
  lg_cmd->add_option("--format", lg_format, "Output format")->check(CLI::IsMember({"json", "dot"}));

  std::string dc_input, dc_output, dc_format = "json";
  auto* dc_cmd = app.add_subcommand("decompose", "Classify the negative-subgraph components");
  dc_cmd->add_option("input", dc_input, "Signed graph JSON file")->required();
  dc_cmd->add_option("-o,--output", dc_output, "Output file (default stdout)");
  dc_cmd->add_option("--format", dc_format, "Output format")->check(CLI::IsMember({"json", "dot"}));

  FuzzOptions fuzz;
  auto* fz_cmd = app.add_subcommand("fuzz", "Cross-check all methods against the oracle");
  fz_cmd->add_option("--max-n", fuzz.max_n, "Maximum vertex count");
  fz_cmd->add_option("--max-m", fuzz.max_m, "Maximum edge count");
  fz_cmd->add_option("--count", fuzz.count, "Number of random or generated graphs");
  fz_cmd->add_option("--seed", fuzz.seed, "Random seed");
  fz_cmd->add_flag("--exhaustive", fuzz.exhaustive, "Enumerate every graph within the bounds");
  fz_cmd->add_flag("--generator", fuzz.generator, "Use line-consistent generator with random recipes");
  fz_cmd->add_option("--recipe", fuzz.recipe, "Generator recipe JSON file");
  fz_cmd->add_option("--jobs", fuzz.jobs, "Worker threads");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kInputError;
  }

  try {
    if (*check_cmd) return run_check(check);
    if (*lg_cmd) return run_line_graph(lg_input, lg_output, lg_format);
    if (*dc_cmd) return run_decompose(dc_input, dc_output, dc_format);
    if (*fz_cmd) return run_fuzz(fuzz);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInputError;
  }
  return kInputError;
}
