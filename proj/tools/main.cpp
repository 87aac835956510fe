// Command-line driver: seeded verification campaigns over the loop models,
// with text or byte-reproducible JSON reports.
//
// Exit codes: 0 all identities pass, 1 identity failure, 2 usage error,
// 3 I/O error.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "moufang/report.hpp"
#include "moufang/suites.hpp"
#include "moufang/version.hpp"

namespace {

int run_verify(const moufang::SuiteConfig& cfg, const std::string& format,
               const std::string& out_path) {
  moufang::VerificationReport report;
  try {
    report = moufang::run_suite(cfg);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }

  const auto fmt =
      (format == "json") ? moufang::ReportFormat::json : moufang::ReportFormat::text;
  if (out_path.empty()) {
    moufang::emit_report(report, fmt, std::cout);
  } else {
    std::ofstream out(out_path, std::ios::binary);
    if (!out) {
      std::cerr << "error: cannot open output file: " << out_path << "\n";
      return 3;
    }
    moufang::emit_report(report, fmt, out);
    if (!out.good()) {
      std::cerr << "error: failed writing output file: " << out_path << "\n";
      return 3;
    }
  }
  return report.pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"numerical verification of the differential calculus of Moufang loops"};
  app.set_version_flag("--version", std::string(moufang::kVersion));
  app.require_subcommand(1);

  // verify
  auto* verify = app.add_subcommand("verify", "run a verification suite and emit a report");
  std::string model = "octonion";
  std::string suite = "all";
  int samples = 100;
  std::uint64_t seed = 0;
  std::vector<std::string> tol_args;
  std::string format = "text";
  std::string out_path;
  verify->add_option("--model", model, "model: octonion | quaternion | chein-s3")
      ->default_val("octonion");
  verify->add_option("--suite", suite,
                     "suite: loop-axioms | tangent | birep | associators | minimality | gle | "
                     "maurer-cartan | all")
      ->default_val("all");
  verify->add_option("--samples", samples, "number of sampled points per identity")
      ->default_val(100)
      ->check(CLI::PositiveNumber);
  verify->add_option("--seed", seed, "64-bit seed for the sampling streams")->default_val(0);
  verify->add_option("--tol", tol_args, "tolerance override, repeatable: <identity>=<real>");
  verify->add_option("--format", format, "report format")
      ->default_val("text")
      ->check(CLI::IsMember({"text", "json"}));
  verify->add_option("--out", out_path, "write the report to this path instead of stdout");

  // tangent
  auto* tangent = app.add_subcommand("tangent", "print the structure tensor and Mal'tsev summary");
  std::string tangent_model = "octonion";
  tangent->add_option("--model", tangent_model, "model: octonion | quaternion")
      ->default_val("octonion");

  // models
  auto* models = app.add_subcommand("models", "list available models");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (models->parsed()) {
      for (const auto& name : moufang::model_names()) std::cout << name << "\n";
      return 0;
    }
    if (tangent->parsed()) {
      std::cout << moufang::tangent_summary(tangent_model);
      return 0;
    }
    // verify
    moufang::SuiteConfig cfg;
    cfg.model = model;
    cfg.suite = suite;
    cfg.samples = samples;
    cfg.seed = seed;
    for (const auto& t : tol_args) {
      const auto eq = t.find('=');
      if (eq == std::string::npos || eq == 0 || eq + 1 == t.size()) {
        std::cerr << "error: --tol expects <identity>=<real>, got: " << t << "\n";
        return 2;
      }
      try {
        cfg.tol_overrides[t.substr(0, eq)] = std::stod(t.substr(eq + 1));
      } catch (const std::exception&) {
        std::cerr << "error: bad tolerance value in: " << t << "\n";
        return 2;
      }
    }
    return run_verify(cfg, format, out_path);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::ios_base::failure& e) {
    std::cerr << "i/o error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
