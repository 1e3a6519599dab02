#include <cstdlib>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "hopfoid/suite.hpp"

using namespace hopfoid;

namespace {

int jobs_from_env() {
  const char* v = std::getenv("HOPFOID_JOBS");
  if (!v || !*v) return 0;
  try {
    return std::stoi(v);
  } catch (const std::exception&) {
    throw ConfigError(std::string("HOPFOID_JOBS is not an integer: ") + v);
  }
}

void emit(const std::string& text, const std::string& path) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ConfigError("cannot write " + path);
  out << text;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Verify finite-dimensional Hopf algebroids built from Hopf algebras and their doubles"};
  app.require_subcommand(1);

  RunConfig cfg;
  std::string strategy = "auto", format = "json", output;
  bool no_timing = false;
  int jobs = 0;
  std::size_t sample = 0;
  std::uint64_t seed = cfg.plan.seed;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--example", cfg.example, "coarse, end, slq2 or heisenberg")->capture_default_str();
    sub->add_option("--d", cfg.d, "root of unity order (slq2) or group order (heisenberg)")->capture_default_str();
    sub->add_option("--q-exponent", cfg.q_exponent, "use q = zeta^e")->capture_default_str();
    sub->add_option("--base-dim", cfg.base_dim, "base algebra for coarse/end: 1 k, 2 k[x]/x^2, 3 upper triangular, 4 M_2")
        ->capture_default_str();
    sub->add_option("--output,-o", output, "output file, stdout when omitted");
    sub->add_option("--jobs,-j", jobs, "worker threads (HOPFOID_JOBS when omitted)");
  };

  CLI::App* verify = app.add_subcommand("verify", "run the verification suite of an example");
  add_common(verify);
  verify->add_option("--strategy", strategy, "direct, structural or auto")->capture_default_str();
  verify->add_option("--direct-dim-bound", cfg.direct_dim_bound, "auto picks direct iff (dim H)^3 <= bound")
      ->capture_default_str();
  verify->add_option("--format", format, "json or text")->capture_default_str();
  verify->add_flag("--no-timing", no_timing, "omit timings so reports are byte-identical across runs");
  verify->add_option("--sample", sample, "check a fixed-seed sample of this many tuples per sweep (0 = all)");
  verify->add_option("--seed", seed, "seed for --sample")->capture_default_str();

  CLI::App* dump = app.add_subcommand("dump", "export structure constants and structure maps as JSON");
  add_common(dump);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (jobs == 0) jobs = jobs_from_env();
    par::set_num_threads(jobs);
    cfg.plan.max_items = sample;
    cfg.plan.seed = seed;

    if (dump->parsed()) {
      emit(dump_example(cfg).dump(1) + "\n", output);
      return 0;
    }

    if (format != "json" && format != "text") throw ConfigError("format must be json or text");
    try {
      cfg.strategy = parse_strategy(strategy);
    } catch (const std::invalid_argument& e) {
      throw ConfigError(e.what());
    }
    const SuiteRun run = run_suite(cfg);
    if (format == "json") {
      Json doc{{"config", config_json(cfg, &run)}};
      const Json body = to_json(run.report, !no_timing);
      for (const auto& [k, v] : body.items()) doc[k] = v;
      emit(doc.dump(1) + "\n", output);
    } else {
      emit(to_text(run.report, !no_timing), output);
    }
    if (!run.report.all_passed()) {
      for (const auto* f : run.report.failures())
        std::cerr << "FAIL " << f->id << (f->witness ? ": " + f->witness->note : "") << "\n";
      return 1;
    }
    return 0;
  } catch (const ConfigError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
