// bqroot: n-th roots of quaternions with complex coefficients.
//
//   bqroot "76,24i,12i,-41i;3"
//   bqroot --format json --check "1,3i,4i,5;4"
//   bqroot --input problem.json
//   bqroot --oracle 1,500 --n 3

#include <cstdint>
#include <iostream>
#include <map>
#include <string>

#include <CLI11.hpp>

#include "cli_app.hpp"

namespace {

std::pair<std::uint64_t, std::size_t> parse_oracle_spec(const std::string& spec) {
  const auto comma = spec.find(',');
  if (comma == std::string::npos) throw CLI::ValidationError("--oracle", "expected <seed>,<count>");
  try {
    std::size_t used = 0;
    const std::uint64_t seed = std::stoull(spec.substr(0, comma), &used);
    if (used != comma) throw std::invalid_argument("seed");
    const std::string count_text = spec.substr(comma + 1);
    const std::size_t count = std::stoull(count_text, &used);
    if (used != count_text.size()) throw std::invalid_argument("count");
    return {seed, count};
  } catch (const std::logic_error&) {
    throw CLI::ValidationError("--oracle", "expected <seed>,<count> as non-negative integers");
  }
}

}  // namespace

int main(int argc, char** argv) {
  using bqroot::cli::CliConfig;
  CLI::App app{"Solve X^n = A for a quaternion A with complex coefficients"};

  CliConfig config;
  std::string inline_input;
  std::string input_path;
  std::string oracle_spec;
  int n = 0;
  std::string branch = "principal";
  std::string format = "text";
  std::string stream = "generic";

  app.add_option("quaternion", inline_input, "Compact input \"a0,a1,a2,a3;n\" or a JSON document");
  app.add_option("--input", input_path, "Read input from a file, or '-' for standard input");
  app.add_option("--n", n, "Root degree (overrides ';n' in the input)")->check(CLI::Range(2, 1 << 20));
  app.add_option("--tol", config.tol, "Classification and residual tolerance")->check(CLI::PositiveNumber);
  app.add_option("--branch", branch, "Square-root branch for sqrt(a^2)")
      ->check(CLI::IsMember({"principal", "negated"}));
  app.add_option("--samples", config.family_samples, "Samples emitted (and checked) per family");
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json", "structured"}));
  app.add_flag("--check", config.check, "Verify every root and family sample by powering");
  app.add_option("--oracle", oracle_spec, "Run the round-trip oracle: <seed>,<count>");
  app.add_option("--stream", stream, "Oracle input stream")
      ->check(CLI::IsMember({"generic", "scalar", "nullcone", "singular", "nilpotent", "insoluble"}));

  try {
    app.parse(argc, argv);
    if (!oracle_spec.empty()) config.oracle = parse_oracle_spec(oracle_spec);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : bqroot::cli::kExitError;
  }

  if (app.count("--n") > 0) config.n = n;
  config.branch = branch == "negated" ? BQR_BRANCH_NEGATED : BQR_BRANCH_PRINCIPAL;
  config.format = format == "text" ? bqroot::cli::OutputFormat::Text : bqroot::cli::OutputFormat::Json;
  static const std::map<std::string, bqr_stream> kStreams = {
      {"generic", BQR_STREAM_GENERIC},     {"scalar", BQR_STREAM_SCALAR},
      {"nullcone", BQR_STREAM_NULL_CONE},  {"singular", BQR_STREAM_SINGULAR},
      {"nilpotent", BQR_STREAM_NILPOTENT}, {"insoluble", BQR_STREAM_INSOLUBLE}};
  config.stream = kStreams.at(stream);

  if (!config.oracle) {
    if (!input_path.empty() && !inline_input.empty()) {
      std::cerr << "error: give either an inline quaternion or --input, not both\n";
      return bqroot::cli::kExitError;
    }
    if (input_path == "-") {
      config.source = bqroot::cli::InputSource::Stdin;
    } else if (!input_path.empty()) {
      config.source = bqroot::cli::InputSource::File;
      config.input = input_path;
    } else if (!inline_input.empty()) {
      config.input = inline_input;
    } else {
      std::cerr << "error: no input; pass a quaternion, --input <file>|- or --oracle\n";
      return bqroot::cli::kExitError;
    }
  }

  return bqroot::cli::run(config, std::cin, std::cout, std::cerr);
}
