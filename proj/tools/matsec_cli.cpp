// matsec: matroid secretary experiment harness.
//
// Subcommands:
//   gen    write a generated instance as JSON
//   run    Monte Carlo trials of one algorithm on an instance
//   exact  exhaustive-enumeration accounting on a small instance
//   check  axiom and structural checks; exit 3 on any violation

#include <exception>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "matsec/exact_oracle.hpp"
#include "matsec/experiment.hpp"
#include "matsec/generators.hpp"
#include "matsec/instance.hpp"
#include "matsec/report.hpp"

namespace {

constexpr int kExitValidation = 2;
constexpr int kExitViolation = 3;

struct CommonArgs {
  std::string instance_path;
  std::string algorithm = "free-order";
  std::string output;
  std::string format = "csv";
  std::string phase2_order = "default";
  long long trials = 10000;
  std::uint64_t seed = 1;
  double q = -1.0;
  int threads = 0;
};

int run_command(const CommonArgs& args) {
  const matsec::Instance instance = matsec::load_instance(args.instance_path);
  matsec::ExperimentConfig config;
  config.algorithm = matsec::algorithm_from_string(args.algorithm);
  config.trials = args.trials;
  config.seed = args.seed;
  config.q = args.q;
  config.phase2_order = matsec::phase2_order_from_string(args.phase2_order);
  config.threads = args.threads;
  const matsec::RunStats stats = matsec::run_trials(instance, config);
  matsec::emit_report(stats, matsec::report_format_from_string(args.format), args.output);
  return 0;
}

int exact_command(const CommonArgs& args) {
  const matsec::Instance instance = matsec::load_instance(args.instance_path);
  const auto kind = matsec::algorithm_from_string(args.algorithm);
  matsec::ExactReport report;
  if (kind == matsec::AlgorithmKind::kFreeOrder) {
    report = matsec::exact_free_order(instance, args.threads);
  } else {
    const auto algorithm = kind == matsec::AlgorithmKind::kLaminarSimple
                               ? matsec::LaminarAlgorithm::kSimple
                               : matsec::LaminarAlgorithm::kImproved;
    report = matsec::exact_laminar(instance, algorithm, args.q, args.threads);
  }
  matsec::emit_report(report, matsec::report_format_from_string(args.format), args.output);
  if (!report.violations.empty()) {
    std::cerr << report.violations.size() << " violation(s) detected\n";
    return kExitViolation;
  }
  return 0;
}

int check_command(const CommonArgs& args) {
  const matsec::Instance instance = matsec::load_instance(args.instance_path);
  const int n = instance.n();
  int violations = 0;

  if (n <= 13) {
    const matsec::AxiomCheckResult axioms = matsec::axiom_check(instance.matroid());
    if (axioms.pass) {
      std::cout << "[ok] matroid axioms\n";
    } else {
      std::cout << "[violation] " << axioms.failure << "\n";
      ++violations;
    }
  } else {
    std::cout << "[skip] matroid axioms (n > 13)\n";
  }

  if (n <= 14) {
    const matsec::ExactReport free_order = matsec::exact_free_order(instance, args.threads);
    if (free_order.violations.empty()) {
      std::cout << "[ok] free-order selection guarantee and span-index symmetry\n";
    } else {
      for (const auto& v : free_order.violations) std::cout << "[violation] " << v << "\n";
      violations += static_cast<int>(free_order.violations.size());
    }

    if (instance.matroid().type_name() == "laminar") {
      for (const auto algorithm :
           {matsec::LaminarAlgorithm::kSimple, matsec::LaminarAlgorithm::kImproved}) {
        const matsec::ExactReport report =
            matsec::exact_laminar(instance, algorithm, args.q, args.threads);
        const char* label =
            algorithm == matsec::LaminarAlgorithm::kSimple ? "laminar-simple" : "laminar-improved";
        if (report.violations.empty()) {
          std::cout << "[ok] " << label << " scheme structure and feasibility\n";
        } else {
          for (const auto& v : report.violations) std::cout << "[violation] " << v << "\n";
          violations += static_cast<int>(report.violations.size());
        }
      }
    }
  } else {
    std::cout << "[skip] enumeration checks (n > 14)\n";
  }

  if (violations > 0) {
    std::cerr << violations << " violation(s) detected\n";
    return kExitViolation;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"matroid secretary algorithms: experiments, exact accounting, checks"};
  app.require_subcommand(1);

  CommonArgs args;
  matsec::GeneratorParams gen_params;

  CLI::App* gen = app.add_subcommand("gen", "generate an instance file");
  gen->add_option("--kind", gen_params.kind,
                  "uniform | partition | graphic-random | laminar-random | laminar-clustered")
      ->required();
  gen->add_option("--n", gen_params.n, "ground set size");
  gen->add_option("--seed", gen_params.seed, "generator seed");
  gen->add_option("--rank", gen_params.rank, "uniform matroid rank");
  gen->add_option("--parts", gen_params.parts, "partition part count");
  gen->add_option("--vertices", gen_params.vertices, "graphic vertex count");
  gen->add_option("--depth", gen_params.depth, "laminar nesting depth");
  gen->add_option("--cluster-size", gen_params.cluster_size, "clustered: strong elements");
  gen->add_option("--cluster-cap", gen_params.cluster_capacity, "clustered: cluster capacity");
  gen->add_flag("--integer-weights", gen_params.integer_weights, "small integer weights (ties)");
  gen->add_option("--output", args.output, "output path (default stdout)");

  CLI::App* run = app.add_subcommand("run", "Monte Carlo experiment");
  run->add_option("--instance", args.instance_path, "instance JSON path")->required();
  run->add_option("--algorithm", args.algorithm, "free-order | laminar-simple | laminar-improved");
  run->add_option("--trials", args.trials, "number of trials");
  run->add_option("--seed", args.seed, "master seed");
  run->add_option("--q", args.q, "sampling probability override (laminar-improved)");
  run->add_option("--phase2-order", args.phase2_order,
                  "default | schedule | random | adversarial-id | reversed | opt-last");
  run->add_option("--output", args.output, "output path (default stdout)");
  run->add_option("--format", args.format, "csv | json");
  run->add_option("--threads", args.threads, "worker threads (0 = hardware)");

  CLI::App* exact = app.add_subcommand("exact", "exhaustive enumeration accounting");
  exact->add_option("--instance", args.instance_path, "instance JSON path")->required();
  exact->add_option("--algorithm", args.algorithm,
                    "free-order | laminar-simple | laminar-improved");
  exact->add_option("--q", args.q, "sampling probability override");
  exact->add_option("--output", args.output, "output path (default stdout)");
  exact->add_option("--format", args.format, "csv | json");
  exact->add_option("--threads", args.threads, "worker threads (0 = hardware)");

  CLI::App* check = app.add_subcommand("check", "axiom and structural checks");
  check->add_option("--instance", args.instance_path, "instance JSON path")->required();
  check->add_option("--q", args.q, "sampling probability override");
  check->add_option("--threads", args.threads, "worker threads (0 = hardware)");

  CLI::App* worst = app.add_subcommand(
      "worst-order", "exhaustive adversarial phase-2 order search (n <= 8)");
  worst->add_option("--instance", args.instance_path, "instance JSON path")->required();
  worst->add_option("--algorithm", args.algorithm,
                    "free-order | laminar-simple | laminar-improved");
  worst->add_option("--q", args.q, "sampling probability override");

  CLI11_PARSE(app, argc, argv);

  try {
    if (gen->parsed()) {
      const matsec::Instance instance = matsec::generate_instance(gen_params);
      if (args.output.empty() || args.output == "-") {
        std::cout << matsec::instance_to_json(instance) << "\n";
      } else {
        matsec::save_instance(instance, args.output);
      }
      return 0;
    }
    if (run->parsed()) return run_command(args);
    if (exact->parsed()) return exact_command(args);
    if (check->parsed()) return check_command(args);
    if (worst->parsed()) {
      const matsec::Instance instance = matsec::load_instance(args.instance_path);
      const matsec::WorstOrderReport report = matsec::worst_phase2_order_search(
          instance, matsec::algorithm_from_string(args.algorithm), args.q);
      std::cout << "instance,algorithm,worst_order_expected_w,opt_w,ratio\n"
                << instance.name() << ',' << args.algorithm << ',' << report.expected_weight
                << ',' << report.opt_weight << ',' << report.ratio << "\n";
      return 0;
    }
  } catch (const matsec::ValidationError& e) {
    std::cerr << "validation error: " << e.what() << "\n";
    return kExitValidation;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitValidation;
  }
  return 0;
}
