// Command-line driver: runs verification suites and prints a report.
#include "surfalg/suites.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

int main(int argc, char** argv) {
  CLI::App app{"Exact verification of surface-group algebra computations"};
  app.set_version_flag("--version", surfalg::kVersion);

  surfalg::RunConfig config;
  std::string out;
  bool list = false;
  app.add_option("--genus", config.genus, "surface genus g (>= 2)")->capture_default_str();
  app.add_option("--max-degree", config.max_degree, "truncation degree K (>= 2)")->capture_default_str();
  app.add_option("--suite", config.suites, "suite to run (repeatable; default all)");
  app.add_option("--report", config.report_format, "json or text")->capture_default_str();
  app.add_option("--seed", config.seed, "random seed")->capture_default_str();
  app.add_option("--trials", config.trials, "random trials per property check")->capture_default_str();
  app.add_option("--out", out, "write the report to this file instead of stdout");
  app.add_flag("--list-suites", list, "print the suite names and exit");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  if (list) {
    for (const auto& s : surfalg::known_suites()) std::cout << s << '\n';
    return 0;
  }
  if (config.suites.empty()) config.suites = surfalg::known_suites();

  surfalg::Report report;
  try {
    report = surfalg::run(config);
  } catch (const surfalg::ConfigError& e) {
    std::cerr << "configuration error: " << e.what() << '\n';
    return 2;
  }

  const std::string body = config.report_format == "json" ? report.to_json().dump(2) + "\n" : report.to_text();
  if (out.empty()) {
    std::cout << body;
  } else {
    std::ofstream f(out);
    if (!f) {
      std::cerr << "cannot write " << out << '\n';
      return 2;
    }
    f << body;
  }
  return report.all_passed() ? 0 : 1;
}
