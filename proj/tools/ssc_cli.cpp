#include <CLI11.hpp>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "ssc/analysis.hpp"
#include "ssc/selftest.hpp"

namespace {

ssc::Pattern read_pattern_file(const std::string& path) {
  std::ifstream in(path);
  if (!in)
    throw std::runtime_error(path + ": cannot open file");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  try {
    return ssc::Pattern::parse(buffer.str());
  } catch (const ssc::ParseError& e) {
    throw std::runtime_error(path + ":" + std::to_string(e.line()) + ": " +
                             e.what());
  }
}

struct AnalyzeOptions {
  std::string a_path;
  std::string b_path;
  std::string c_path;
  std::string domain;
  std::string variation;
  std::string direction;
  int horizon = 0;
  bool has_horizon = false;
  std::string output = "json";
  bool verbose = false;
};

int run_analyze(const AnalyzeOptions& opt) {
  const bool observing = opt.direction == "observability";
  if (observing ? opt.c_path.empty() : opt.b_path.empty())
    throw std::runtime_error(observing
                                 ? "observability runs need --c <path>"
                                 : "controllability runs need --b <path>");
  if (observing ? !opt.b_path.empty() : !opt.c_path.empty())
    throw std::runtime_error(observing ? "--b is not used for observability"
                                       : "--c is not used for controllability");

  ssc::Query query;
  query.domain = opt.domain == "discrete" ? ssc::TimeDomain::discrete
                                          : ssc::TimeDomain::continuous;
  query.variation = opt.variation == "lti" ? ssc::Variation::time_invariant
                                           : ssc::Variation::time_varying;
  query.direction = observing ? ssc::Direction::observability
                              : ssc::Direction::controllability;
  if (opt.has_horizon) {
    if (query.domain != ssc::TimeDomain::discrete ||
        query.variation != ssc::Variation::time_varying)
      throw std::runtime_error(
          "--horizon is only meaningful with --domain discrete --variation "
          "tv");
    query.horizon = opt.horizon;
  } else if (query.domain == ssc::TimeDomain::discrete &&
             query.variation == ssc::Variation::time_varying) {
    throw std::runtime_error(
        "discrete time-varying analysis needs --horizon N");
  }

  const ssc::Pattern a = read_pattern_file(opt.a_path);
  if (!a.square())
    throw std::runtime_error(opt.a_path + ": state pattern must be square, "
                             "got " +
                             std::to_string(a.rows()) + "x" +
                             std::to_string(a.cols()));
  const std::string& second_path = observing ? opt.c_path : opt.b_path;
  const ssc::Pattern second = read_pattern_file(second_path);
  if (observing) {
    if (second.cols() != a.rows())
      throw std::runtime_error(second_path + ": output pattern has " +
                               std::to_string(second.cols()) +
                               " columns, state pattern " + opt.a_path +
                               " needs " + std::to_string(a.rows()));
  } else {
    if (second.rows() != a.rows())
      throw std::runtime_error(second_path + ": input pattern has " +
                               std::to_string(second.rows()) +
                               " rows, state pattern " + opt.a_path +
                               " needs " + std::to_string(a.rows()));
  }

  const ssc::Report report =
      observing ? ssc::analyze_observability(a, second, query)
                : ssc::analyze_controllability(a, second, query);

  if (opt.output == "json") {
    std::cout << ssc::report_to_json(report, opt.verbose).dump(2) << "\n";
  } else {
    // Text mode shows the graph the base conditions are decided on (the
    // dualized pair for observability runs).
    const auto [ga, gb] = observing ? ssc::dualize(a, second)
                                    : std::make_pair(a, second);
    std::cout << ssc::report_to_text(report, ssc::SystemGraph(ga, gb));
  }
  return ssc::answer_exit_code(report.answer);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"decides, from a zero/nonzero pattern alone, whether every "
               "linear system of that pattern is controllable or observable"};
  app.require_subcommand(1);

  AnalyzeOptions opt;
  CLI::App* analyze =
      app.add_subcommand("analyze", "analyze a pattern pair from files");
  analyze->add_option("--a", opt.a_path, "state (A) pattern file")->required();
  analyze->add_option("--b", opt.b_path,
                      "input (B) pattern file, for controllability");
  analyze->add_option("--c", opt.c_path,
                      "output (C) pattern file, for observability");
  analyze->add_option("--domain", opt.domain, "discrete or continuous")
      ->required()
      ->check(CLI::IsMember({"discrete", "continuous"}));
  analyze->add_option("--variation", opt.variation, "lti or tv")
      ->required()
      ->check(CLI::IsMember({"lti", "tv"}));
  analyze
      ->add_option("--direction", opt.direction,
                   "controllability or observability")
      ->required()
      ->check(CLI::IsMember({"controllability", "observability"}));
  CLI::Option* horizon_opt =
      analyze->add_option("--horizon", opt.horizon,
                          "window length T (discrete time-varying only)");
  analyze->add_option("--output", opt.output, "json or text")
      ->check(CLI::IsMember({"json", "text"}));
  analyze->add_flag("--verbose", opt.verbose,
                    "include reduction traces in JSON output");

  std::uint64_t seed = 0;
  CLI::App* selftest = app.add_subcommand(
      "selftest", "reproduce the built-in worked examples and oracle runs");
  selftest->add_option("--seed", seed, "seed for the randomized batteries");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }

  try {
    if (*analyze) {
      opt.has_horizon = horizon_opt->count() > 0;
      return run_analyze(opt);
    }
    return ssc::selftest_main(seed, std::cout);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
