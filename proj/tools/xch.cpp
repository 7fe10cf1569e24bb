// xch: homology of crossed modules of algebras from JSON problem files.

#include <chrono>
#include <cstdlib>
#include <iostream>

#include <CLI11.hpp>

#include "xch/error.hpp"
#include "xch/parallel.hpp"
#include "xch/session.hpp"

namespace {

struct Common {
  std::string file;
  std::string format = "text";
  std::size_t threads = 1;
  std::optional<std::size_t> budget;
  bool timing = false;
};

void add_common(CLI::App* cmd, Common& c, bool engine) {
  cmd->add_option("file", c.file, "problem file (JSON)")->required();
  cmd->add_option("--format", c.format, "text or json")->check(CLI::IsMember({"text", "json"}));
  cmd->add_flag("--timing", c.timing, "append wall-clock time to the report");
  if (engine) {
    cmd->add_option("--threads", c.threads, "worker threads for degree-level parallelism")->check(CLI::Range(1, 256));
    cmd->add_option("--budget", c.budget, "largest allowed chain dimension in one degree");
  }
}

std::size_t budget_from(const Common& c) {
  if (c.budget) return *c.budget;
  if (const char* env = std::getenv("XCH_BUDGET")) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      throw xch::ParseError(std::string("XCH_BUDGET is not a number: ") + env);
    }
  }
  return xch::default_budget;
}

int emit(xch::Report r, const Common& c, std::chrono::steady_clock::time_point start) {
  if (c.timing) r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::cout << (c.format == "json" ? xch::render_json(r) : xch::render_text(r));
  return r.exit_code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hochschild, cyclic and cotriple cyclic homology of crossed modules of algebras"};
  app.require_subcommand(1);

  Common common;
  xch::RunOptions opt;

  auto* validate = app.add_subcommand("validate", "check every algebra, crossed module, morphism and extension");
  add_common(validate, common, false);

  auto* compute = app.add_subcommand("compute", "homology dimensions of one object");
  add_common(compute, common, true);
  compute->add_option("--object", opt.object, "crossed module or algebra name")->required();
  compute->add_option("--what", opt.what, "hh, hc, hbar, hhnaive, xihc or relhc")
      ->required()
      ->check(CLI::IsMember({"hh", "hc", "hbar", "hhnaive", "xihc", "relhc"}));
  compute->add_option("--max-degree", opt.max_degree, "highest degree reported (default 3)");
  compute->add_flag("--bases", opt.bases, "print representative cycles");

  auto* verify = app.add_subcommand("verify", "check an exact sequence or comparison theorem");
  add_common(verify, common, true);
  verify->add_option("--theorem", opt.theorem, "theorem to check")
      ->required()
      ->check(CLI::IsMember(
          {"connes", "five-term", "excision", "relat", "connection", "corollary-corx", "lemma-3.7", "beta-gamma"}));
  verify->add_option("--object", opt.object, "crossed module or extension (default: every applicable one)");
  verify->add_option("--max-degree", opt.max_degree, "window of the check");

  auto* run = app.add_subcommand("run", "execute the task list of the file");
  add_common(run, common, true);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  const auto start = std::chrono::steady_clock::now();
  const std::string command = app.get_subcommands().front()->get_name();
  xch::Problem problem;
  try {
    opt.budget = budget_from(common);
    problem = xch::load_problem(common.file);
  } catch (const xch::ParseError& e) {
    return emit(xch::parse_failure(command, common.file, e), common, start);
  }
  xch::set_thread_count(common.threads);

  xch::Report report;
  if (command == "validate") {
    report = xch::run_validate(problem, common.file);
  } else if (command == "run") {
    report = xch::run_tasks(problem, common.file, opt.budget);
  } else if (command == "compute") {
    report = xch::run_compute(problem, common.file, opt);
  } else {
    report = xch::run_verify(problem, common.file, opt);
  }
  return emit(std::move(report), common, start);
}
