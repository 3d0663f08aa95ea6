// beireg: regularity bounds and exact values for binomial edge ideals of trees.

#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "beireg/bounds.hpp"
#include "beireg/examples.hpp"
#include "beireg/hochster.hpp"
#include "beireg/prufer.hpp"
#include "beireg/report.hpp"
#include "beireg/verify.hpp"

namespace {

using namespace beireg;

enum Exit { kOk = 0, kFailures = 1, kParse = 2, kNotTree = 3, kSizeCap = 4 };

int default_max_vars() {
  if (const char* env = std::getenv("BEIREG_MAX_VARS")) {
    try {
      return std::stoi(env);
    } catch (const std::exception&) {
      throw ParseError(std::string("BEIREG_MAX_VARS is not an integer: ") + env);
    }
  }
  return OracleLimits{}.max_vars;
}

OracleLimits make_limits(int max_vars, std::size_t max_lattice) {
  if (max_vars < 2 || max_vars > kMaxRingVars)
    throw ParseError("--max-vars must lie in [2, " + std::to_string(kMaxRingVars) + "]");
  return {max_vars, max_lattice};
}

void write_output(const std::string& text, const std::string& path) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << text;
}

int print_checks(const std::vector<ExampleCheck>& checks) {
  int bad = 0;
  for (const auto& c : checks) {
    std::cout << std::left << std::setw(24) << c.example << std::setw(20) << c.quantity << "expected "
              << std::setw(4) << c.expected << "computed " << std::setw(4) << c.computed << (c.ok() ? "ok" : "MISMATCH")
              << "\n";
    bad += !c.ok();
  }
  return bad;
}

int run_examples(const std::string& which, const FieldSpec& field, const OracleLimits& limits) {
  int bad = 0;
  const bool all = which == "all";
  if (all || which == "fig2") bad += print_checks(fig2_checks());
  if (all || which == "gamma") {
    std::cout << "d   thm_lower  thm_upper  5d-floor((d+1)/3)  5d   gap\n";
    int prev_gap = -1;
    for (const auto& row : gamma_table(3, 6)) {
      const int gap = row.block_bound - row.thm_upper;
      const bool ok = row.thm_upper == row.closed_form && gap >= prev_gap;
      std::cout << std::left << std::setw(4) << row.d << std::setw(11) << row.thm_lower << std::setw(11)
                << row.thm_upper << std::setw(19) << row.closed_form << std::setw(5) << row.block_bound << std::setw(5)
                << gap << (ok ? "ok" : "MISMATCH") << "\n";
      bad += !ok;
      prev_gap = gap;
    }
  }
  if (all || which == "jewel") bad += print_checks(jewel_checks(field, limits));
  if (all || which == "family") bad += print_checks(family_checks(field, limits));
  return bad ? kFailures : kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Regularity of binomial edge ideals of trees"};
  app.require_subcommand(1);

  std::string file, output, which = "all", prufer;
  bool json_out = false, betti = false, formula_only = false, no_gluing = false, no_fields = false;
  unsigned characteristic = FieldSpec::kDefaultPrime, threads = 0;
  int max_vars = -1;
  std::size_t max_lattice = OracleLimits{}.max_lattice;
  VerifyOptions vopts;
  int gen_n = 0;
  std::uint64_t gen_seed = 1;

  auto* analyze_cmd = app.add_subcommand("analyze", "Jewel profile, bounds and estimate for a tree");
  analyze_cmd->add_option("file", file, "Edge-list file")->required();
  analyze_cmd->add_flag("--json", json_out, "Emit JSON");

  auto* oracle = app.add_subcommand("oracle", "Exact reg(S/J_G) from the squarefree initial ideal");
  oracle->add_option("file", file, "Edge-list file")->required();
  oracle->add_option("--char", characteristic, "Field characteristic (prime)");
  oracle->add_option("--max-vars", max_vars, "Ring-variable cap (2n); default 20 or BEIREG_MAX_VARS");
  oracle->add_option("--max-lattice", max_lattice, "lcm-lattice size cap");
  oracle->add_flag("--betti", betti, "Emit the full Betti table as JSON");

  auto* verify = app.add_subcommand("verify", "Check bounds against the oracle on many trees");
  verify->add_option("--random", vopts.random, "Number of random trees");
  verify->add_option("--max-n", vopts.max_n, "Largest random tree");
  verify->add_option("--seed", vopts.seed, "Random seed");
  verify->add_option("--exhaustive-n", vopts.exhaustive_n, "All labelled trees up to this order");
  verify->add_flag("--formula-only", formula_only, "Skip every oracle check");
  verify->add_flag("--no-gluing", no_gluing, "Skip the gluing-identity instances");
  verify->add_flag("--no-field-compare", no_fields, "Skip the GF(2) comparison");
  verify->add_option("--threads", threads, "Worker threads (0: all cores)");
  verify->add_option("--char", characteristic, "Field characteristic (prime)");
  verify->add_option("--max-vars", max_vars, "Ring-variable cap (2n)");
  verify->add_flag("--json", json_out, "Emit JSON");

  auto* examples = app.add_subcommand("examples", "Reproduce the built-in worked examples");
  examples->add_option("--which", which, "fig2, gamma, jewel, family or all")
      ->check(CLI::IsMember({"fig2", "gamma", "jewel", "family", "all"}));

  auto* gen = app.add_subcommand("gen", "Write a tree as an edge list");
  auto* gen_random = gen->add_option("--random", gen_n, "Uniform random tree on n vertices");
  gen->add_option("--seed", gen_seed, "Random seed");
  auto* gen_prufer = gen->add_option("--prufer", prufer, "Prüfer sequence, e.g. \"1 1\"");
  gen_random->excludes(gen_prufer);
  gen->add_option("-o,--output", output, "Output file");

  auto* dot = app.add_subcommand("export-dot", "Graphviz drawing with jewel centers highlighted");
  dot->add_option("file", file, "Edge-list file")->required();
  dot->add_option("-o,--output", output, "Output file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kParse;
  }

  try {
    const FieldSpec field(characteristic);
    const OracleLimits limits = make_limits(max_vars > 0 ? max_vars : default_max_vars(), max_lattice);

    if (*analyze_cmd) {
      const auto report = analyze(Tree(read_graph_file(file)));
      if (json_out)
        std::cout << nlohmann::json(report).dump(2) << "\n";
      else
        std::cout << format_analyze(report);
      return kOk;
    }
    if (*oracle) {
      const auto g = read_graph_file(file);
      const auto ideal = initial_ideal(g, limits);
      if (ideal.is_zero()) {
        if (betti) {
          BettiTable empty;
          empty.num_vars = 2 * g.order();
          empty.entries[{0, 0}] = 1;
          std::cout << betti_to_json(empty, g.order()).dump(2) << "\n";
        } else {
          std::cout << 0 << "\n";
        }
        return kOk;
      }
      const auto result = hochster_regularity(ideal, field, limits, betti);
      if (betti)
        std::cout << betti_to_json(*result.table, g.order()).dump(2) << "\n";
      else
        std::cout << result.regularity << "\n";
      return kOk;
    }
    if (*verify) {
      vopts.formula_only = formula_only;
      vopts.gluing = !no_gluing;
      vopts.compare_fields = !no_fields;
      vopts.threads = threads;
      vopts.field = field;
      vopts.limits = limits;
      const auto report = run_verify(vopts);
      if (json_out)
        std::cout << verify_to_json(report).dump(2) << "\n";
      else
        std::cout << format_verify(report);
      return report.ok() ? kOk : kFailures;
    }
    if (*examples) return run_examples(which, field, limits);
    if (*gen) {
      if (gen_random->count() == 0 && gen_prufer->count() == 0) throw ParseError("gen needs --random or --prufer");
      Tree t = [&] {
        if (gen_random->count()) {
          if (gen_n < 1) throw ParseError("--random needs n >= 1");
          return random_tree(gen_n, gen_seed);
        }
        std::istringstream in(prufer);
        std::vector<Vertex> seq;
        for (std::string tok; in >> tok;) {
          try {
            std::size_t used = 0;
            seq.push_back(std::stoi(tok, &used));
            if (used != tok.size()) throw std::invalid_argument(tok);
          } catch (const std::exception&) {
            throw ParseError("bad Prüfer entry '" + tok + "'");
          }
        }
        return prufer_decode(static_cast<int>(seq.size()) + 2, seq);
      }();
      write_output(format_edge_list(t.graph()), output);
      return kOk;
    }
    if (*dot) {
      write_output(export_dot(Tree(read_graph_file(file))), output);
      return kOk;
    }
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kParse;
  } catch (const NotATreeError& e) {
    std::cerr << "not a tree: " << e.what() << "\n";
    return kNotTree;
  } catch (const SizeCapError& e) {
    std::cerr << "size cap: " << e.what() << "\n";
    return kSizeCap;
  } catch (const GraphError& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return kParse;
  } catch (const std::invalid_argument& e) {
    std::cerr << "invalid argument: " << e.what() << "\n";
    return kParse;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kFailures;
  }
  return kOk;
}
