// Command-line front end. The result payload goes to stdout, everything else
// to stderr; exit codes are the interface scripts should rely on.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "p7c/error.hpp"
#include "p7c/io.hpp"
#include "p7c/oracle.hpp"
#include "p7c/solver.hpp"

namespace {

constexpr int kExitYes = 0;
constexpr int kExitNo = 1;
constexpr int kExitBudget = 2;
constexpr int kExitInput = 3;
constexpr int kExitDisagree = 4;
constexpr int kExitInternal = 5;

void print_coloring(const p7c::GraphFile& file, const p7c::Coloring& c) {
  for (std::size_t v = 0; v < c.size(); ++v)
    std::cout << static_cast<int>(v) + file.id_offset() << ':' << c[v] << '\n';
}

int run_solve(const std::string& path, const p7c::SolveOptions& options, bool quiet) {
  p7c::GraphFile file = p7c::read_graph_file(path);
  p7c::SolveResult r = p7c::solve_with(file.graph, options);
  const auto& s = r.stats;
  if (!quiet) {
    std::cerr << std::fixed << std::setprecision(6) << "normalize " << s.seconds.normalize
              << "s, clean " << s.seconds.clean << "s, reduce " << s.seconds.reduce
              << "s, expand " << s.seconds.expand << "s, solve " << s.seconds.solve << "s\n"
              << "palettes " << s.palettes << ", restrictions " << s.restrictions
              << ", triangle-free fallbacks " << s.triangle_free_fallbacks << '\n';
  }
  switch (r.outcome) {
    case p7c::SolveResult::Outcome::kColorable:
      std::cout << "colorable\n";
      print_coloring(file, r.coloring);
      return kExitYes;
    case p7c::SolveResult::Outcome::kNotColorable:
      std::cout << "not-colorable\n";
      return kExitNo;
    case p7c::SolveResult::Outcome::kBudgetExceeded:
      std::cout << "budget-exceeded\n";
      return kExitBudget;
  }
  return kExitInput;
}

int run_verify(const std::string& graph_path, const std::string& coloring_path) {
  p7c::GraphFile file = p7c::read_graph_file(graph_path);
  std::ifstream in(coloring_path);
  if (!in) throw p7c::InvalidInput("cannot open " + coloring_path);
  p7c::Coloring c = p7c::parse_coloring(in, file.graph.order(), file.id_offset());
  bool ok = p7c::verify_coloring(file.graph, c);
  std::cout << (ok ? "valid" : "invalid") << '\n';
  return ok ? kExitYes : kExitNo;
}

int run_oracle(const std::string& path, int bound) {
  p7c::GraphFile file = p7c::read_graph_file(path);
  auto c = p7c::oracle::brute_color(file.graph, bound);
  if (!c) {
    std::cout << "not-colorable\n";
    return kExitNo;
  }
  std::cout << "colorable\n";
  print_coloring(file, *c);
  return kExitYes;
}

int run_gen(int n, double density, std::uint64_t seed, int count, const std::string& out_dir,
            const std::string& format) {
  std::filesystem::create_directories(out_dir);
  for (int i = 0; i < count; ++i) {
    const std::uint64_t s = seed + static_cast<std::uint64_t>(i);
    p7c::oracle::GeneratedInstance inst = p7c::oracle::gen_instance(n, density, s);
    std::ostringstream name;
    name << "p7free_n" << n << "_d" << std::fixed << std::setprecision(2) << density << "_s" << s
         << (format == "json" ? ".json" : ".dimacs");
    std::filesystem::path path = std::filesystem::path(out_dir) / name.str();
    std::ofstream out(path);
    if (!out) throw p7c::InvalidInput("cannot write " + path.string());
    if (format == "json") {
      out << p7c::to_json(inst.graph);
    } else {
      out << "c seed " << s << " repairs " << inst.repairs << '\n' << p7c::to_dimacs(inst.graph);
    }
    std::cout << path.string() << '\n';
  }
  return kExitYes;
}

int run_check_p7(const std::string& path, int bound) {
  p7c::GraphFile file = p7c::read_graph_file(path);
  bool dfs_free = !p7c::has_induced_path(file.graph, 7);
  bool brute_free = p7c::oracle::brute_p7free(file.graph, bound);
  if (dfs_free != brute_free) {
    std::cout << "disagreement\n";
    std::cerr << "path search says " << (dfs_free ? "free" : "not free")
              << ", subset scan says " << (brute_free ? "free" : "not free") << '\n';
    return kExitDisagree;
  }
  std::cout << (dfs_free ? "p7-free" : "contains-p7") << '\n';
  return dfs_free ? kExitYes : kExitNo;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"3-colouring for P7-free graphs"};
  app.require_subcommand(1);

  std::string graph_path;
  std::string coloring_path;
  p7c::SolveOptions options;
  bool quiet = false;
  auto* solve = app.add_subcommand("solve", "Decide 3-colourability and print a colouring");
  solve->add_option("file", graph_path, "DIMACS or JSON graph")->required();
  solve->add_option("--budget-palettes", options.max_palettes, "Stop after this many palettes");
  solve->add_option("--budget-seconds", options.max_seconds, "Wall-clock budget");
  solve->add_option("--jobs", options.jobs, "Worker threads for restriction batches")
      ->check(CLI::PositiveNumber);
  solve->add_flag("--deterministic,!--no-deterministic", options.deterministic,
                  "Prefer the first success in emission order (default on)");
  solve->add_flag("--quiet", quiet, "No timings on stderr");

  auto* verify = app.add_subcommand("verify", "Check a colouring against a graph");
  verify->add_option("graph", graph_path)->required();
  verify->add_option("coloring", coloring_path)->required();

  int bound = p7c::oracle::kDefaultBound;
  auto* oracle = app.add_subcommand("oracle", "Brute-force 3-colourability");
  oracle->add_option("file", graph_path)->required();
  oracle->add_option("--bound", bound, "Largest accepted vertex count");

  int n = 10;
  double density = 0.35;
  std::uint64_t seed = 1;
  int count = 1;
  std::string out_dir = ".";
  std::string format = "dimacs";
  auto* gen = app.add_subcommand("gen", "Generate P7-free graphs with a triangle");
  gen->add_option("--n", n)->check(CLI::Range(3, p7c::oracle::kDefaultBound));
  gen->add_option("--density", density)->check(CLI::Range(0.0, 1.0));
  auto* seed_opt = gen->add_option("--seed", seed, "Overrides P7COLOR_SEED");
  gen->add_option("--count", count)->check(CLI::NonNegativeNumber);
  gen->add_option("--out-dir", out_dir);
  gen->add_option("--format", format)->check(CLI::IsMember({"dimacs", "json"}));

  auto* check = app.add_subcommand("check-p7", "P7-freeness by two independent methods");
  check->add_option("file", graph_path)->required();
  check->add_option("--bound", bound, "Largest accepted vertex count");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInput;
  }

  try {
    if (*solve) return run_solve(graph_path, options, quiet);
    if (*verify) return run_verify(graph_path, coloring_path);
    if (*oracle) return run_oracle(graph_path, bound);
    if (*gen) {
      if (seed_opt->count() == 0)
        if (const char* env = std::getenv("P7COLOR_SEED")) seed = std::stoull(env);
      return run_gen(n, density, seed, count, out_dir, format);
    }
    if (*check) return run_check_p7(graph_path, bound);
  } catch (const p7c::InvalidInput& e) {
    std::cerr << "input error: " << e.what() << '\n';
    return kExitInput;
  } catch (const p7c::OracleBoundExceeded& e) {
    std::cerr << "input error: " << e.what() << '\n';
    return kExitInput;
  } catch (const p7c::ContractViolation& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kExitInternal;
  } catch (const std::logic_error& e) {
    std::cerr << "input error: " << e.what() << '\n';
    return kExitInput;
  }
  return kExitInput;
}
