#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "lowtail/errors.hpp"
#include "lowtail/generators.hpp"
#include "lowtail/report.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitVerification = 2;
constexpr int kExitTooLarge = 3;

std::string read_input(const std::string& path) {
  if (path == "-") {
    std::ostringstream buf;
    buf << std::cin.rdbuf();
    return buf.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw lowtail::ParseError("cannot open instance file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::vector<double> parse_t_grid(const std::string& csv) {
  std::vector<double> fracs;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      fracs.push_back(std::stod(item));
    } catch (const std::exception&) {
      throw lowtail::ParseError("--t-grid: '" + item + "' is not a number");
    }
    if (!(fracs.back() >= 0.0 && fracs.back() <= 1.0)) {
      throw lowtail::ParseError("--t-grid: fraction " + item + " is outside [0, 1]");
    }
  }
  if (fracs.empty()) throw lowtail::ParseError("--t-grid: expected a comma-separated list of fractions of mu");
  return fracs;
}

std::pair<double, double> parse_range(const std::string& text, const char* flag) {
  const auto comma = text.find(',');
  if (comma == std::string::npos) {
    throw lowtail::ParseError(std::string(flag) + ": expected 'lo,hi'");
  }
  try {
    const double lo = std::stod(text.substr(0, comma));
    const double hi = std::stod(text.substr(comma + 1));
    if (!(lo <= hi)) throw lowtail::ParseError(std::string(flag) + ": lo must not exceed hi");
    return {lo, hi};
  } catch (const lowtail::ParseError&) {
    throw;
  } catch (const std::exception&) {
    throw lowtail::ParseError(std::string(flag) + ": expected 'lo,hi' with numeric bounds");
  }
}

struct CommonFlags {
  std::string file = "-";
  std::string t_grid;
  std::uint64_t mc_samples = 0;
  std::uint64_t seed = 0;
  int max_exact_support = 25;
  double tolerance = 1e-9;
  std::string dependency;
  std::string format = "table";
  bool force = false;
};

void add_common(CLI::App* cmd, CommonFlags& f) {
  cmd->add_option("file", f.file, "instance file ('-' for standard input)");
  cmd->add_option("--t-grid", f.t_grid, "comma-separated t values as fractions of mu (default 0.25,0.5,0.75,1.0)");
  cmd->add_option("--mc-samples", f.mc_samples, "Monte Carlo samples when exact caps are exceeded (0 = disabled)");
  cmd->add_option("--seed", f.seed, "seed for all randomized paths");
  cmd->add_option("--max-exact-support", f.max_exact_support, "support-size cap for exact computation")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--tolerance", f.tolerance, "inequality-check tolerance");
  cmd->add_option("--dependency", f.dependency, "override the instance's dependency mode (support|exact)")
      ->check(CLI::IsMember({"support", "exact"}));
  cmd->add_option("--format", f.format, "output format (table|machine)")->check(CLI::IsMember({"table", "machine"}));
  cmd->add_flag("--force", f.force, "keep computing bounds when relation validation fails");
}

lowtail::RunOptions make_options(const CommonFlags& f) {
  lowtail::RunOptions opts;
  if (!f.t_grid.empty()) opts.t_fracs = parse_t_grid(f.t_grid);
  opts.prob.max_exact_support = f.max_exact_support;
  opts.prob.mc_samples = f.mc_samples;
  opts.prob.seed = f.seed;
  opts.tolerance = f.tolerance;
  opts.force = f.force;
  if (f.dependency == "support") opts.dependency_override = lowtail::DependencyMode::support;
  if (f.dependency == "exact") opts.dependency_override = lowtail::DependencyMode::exact;
  return opts;
}

lowtail::OutputFormat output_format(const CommonFlags& f) {
  return f.format == "machine" ? lowtail::OutputFormat::machine : lowtail::OutputFormat::table;
}

struct GenerateFlags {
  std::string kind;
  std::string graph = "triangle";
  std::size_t n = 0;
  std::size_t k = 1;
  std::size_t r = 3;
  std::size_t m = 0;
  std::string minsets = "1,3";
  std::string size = "1,4";
  double p = 0.5;
  std::string random_p;
  std::string random_weights;
  std::uint64_t seed = 0;
};

int run_generate(const GenerateFlags& g) {
  lowtail::ProbSpec prob;
  prob.fixed = g.p;
  if (!g.random_p.empty()) {
    prob.random = true;
    std::tie(prob.lo, prob.hi) = parse_range(g.random_p, "--random-p");
  }
  lowtail::WeightSpec weights;
  if (!g.random_weights.empty()) {
    weights.random = true;
    std::tie(weights.lo, weights.hi) = parse_range(g.random_weights, "--random-weights");
  }

  lowtail::Instance instance = [&] {
    if (g.kind == "subgraph-count") {
      return lowtail::generate_subgraph_count(g.graph, g.n, prob, weights, g.seed);
    }
    if (g.kind == "threshold") {
      return lowtail::generate_threshold(g.n, g.k, g.r, g.m, prob, weights, g.seed);
    }
    if (g.kind == "random-monotone-dnf") {
      const auto [mlo, mhi] = parse_range(g.minsets, "--minsets");
      const auto [slo, shi] = parse_range(g.size, "--size");
      return lowtail::generate_random_dnf(g.n, g.k, static_cast<std::size_t>(mlo), static_cast<std::size_t>(mhi),
                                          static_cast<std::size_t>(slo), static_cast<std::size_t>(shi), prob,
                                          weights, g.seed);
    }
    throw lowtail::ParseError("unknown family kind '" + g.kind +
                              "' (choose subgraph-count, threshold, or random-monotone-dnf)");
  }();

  std::cout << lowtail::serialize_instance(instance);
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"lowtail: lower-tail bounds for sums of monotone events on product spaces"};
  app.require_subcommand(1);

  CommonFlags compute_flags;
  CLI::App* compute = app.add_subcommand("compute", "parse an instance and report every applicable bound");
  add_common(compute, compute_flags);

  CommonFlags verify_flags;
  CLI::App* verify = app.add_subcommand("verify", "compute bounds and check them against exhaustive enumeration");
  add_common(verify, verify_flags);

  GenerateFlags gen;
  CLI::App* generate = app.add_subcommand("generate", "emit a deterministic instance file");
  generate->add_option("kind", gen.kind, "subgraph-count | threshold | random-monotone-dnf")->required();
  generate->add_option("--graph", gen.graph, "subgraph-count: edge, path2, triangle, c4, or k4");
  generate->add_option("--n", gen.n, "vertices (subgraph-count) or coordinates (threshold, random-monotone-dnf)")
      ->required();
  generate->add_option("--k", gen.k, "event count (threshold, random-monotone-dnf)");
  generate->add_option("--r", gen.r, "threshold: coordinates per event");
  generate->add_option("--m", gen.m, "threshold: required count (default majority)");
  generate->add_option("--minsets", gen.minsets, "random-monotone-dnf: min-set count range 'lo,hi'");
  generate->add_option("--size", gen.size, "random-monotone-dnf: min-set size range 'lo,hi'");
  generate->add_option("--p", gen.p, "success probability for every coordinate");
  generate->add_option("--random-p", gen.random_p, "per-coordinate probabilities drawn from 'lo,hi'");
  generate->add_option("--random-weights", gen.random_weights, "event weights drawn from 'lo,hi'");
  generate->add_option("--seed", gen.seed, "generator seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (generate->parsed()) return run_generate(gen);

    const CommonFlags& flags = compute->parsed() ? compute_flags : verify_flags;
    const lowtail::RunOptions opts = make_options(flags);
    const lowtail::Instance instance = lowtail::parse_instance(read_input(flags.file));

    if (compute->parsed()) {
      const lowtail::Json doc = lowtail::run_compute(instance, opts);
      std::cout << lowtail::render(doc, output_format(flags));
      return doc.contains("aborted") ? kExitVerification : kExitOk;
    }
    const lowtail::Json doc = lowtail::run_verify(instance, opts);
    std::cout << lowtail::render(doc, output_format(flags));
    return doc["pass"].get<bool>() ? kExitOk : kExitVerification;
  } catch (const lowtail::TooLargeForExact& e) {
    std::cerr << "error: " << e.what() << "\n"
              << "hint: pass --mc-samples N to switch to seeded Monte Carlo, or raise --max-exact-support\n";
    return kExitTooLarge;
  } catch (const lowtail::RelationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitVerification;
  } catch (const lowtail::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}
