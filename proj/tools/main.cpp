#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"

#include "cli.hpp"

using namespace rigidspace;

namespace
{

std::string read_file(const std::string &path)
{
  std::ostringstream os;
  if (path == "-") {
    os << std::cin.rdbuf();
    return os.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw cli::UsageError("cannot open '" + path + "'");
  os << in.rdbuf();
  return os.str();
}

} // namespace

int main(int argc, char **argv)
{
  CLI::App app{"Signed permutation groups, GF(2) quotients and generator-built matrix groups"};
  app.require_subcommand(1);

  RunConfig config;
  std::string format = "text";
  std::string out_path;
  app.add_option("--max-n", config.max_n, "Largest degree for exhaustive double-kind checks")
      ->capture_default_str();
  app.add_option("--tol", config.tolerance, "Tolerance for floating-point checks")
      ->capture_default_str();
  app.add_option("--seed", config.seed, "Seed for sampled checks")->capture_default_str();
  app.add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();
  app.add_option("--out", out_path, "Write output to FILE instead of stdout");
  app.add_flag("--timings", config.timings, "Include per-claim runtime_ms in JSON reports");

  std::string group_spec;
  auto *enumerate = app.add_subcommand("enumerate", "List a finite group in canonical order");
  enumerate->add_option("group", group_spec, "P:n, P+:n, P-:n, Ppm:<sizes> or Q8")->required();

  std::string suite;
  auto *verify = app.add_subcommand("verify", "Run a verification suite");
  verify->add_option("suite", suite, "all, section0, section1, section2 or section3")->required();

  std::string subgroup, vector;
  std::optional<std::string> classes;
  auto *quotient = app.add_subcommand("quotient", "Syndrome of a vector modulo an even subgroup");
  quotient->add_option("subgroup", subgroup, "H-:n, H+:n, Hpm:<sizes> or full:n")->required();
  quotient->add_option("vector", vector, "Bit string such as 1011")->required();
  quotient->add_option("--classes", classes, "Also list the induced classes of d or b");

  std::string matrix_file;
  auto *decompose = app.add_subcommand("decompose", "Givens decomposition of an SO(n) matrix");
  decompose->add_option("matrix", matrix_file, "JSON file with row-major rows, or - for stdin")->required();

  std::string embed_kind;
  int embed_n = 2;
  auto *embed = app.add_subcommand("embed", "Check an embedding into real or signed groups");
  embed->add_option("kind", embed_kind, "su-to-so or quat-to-perm")->required();
  embed->add_option("--n", embed_n, "Complex matrix size")->capture_default_str();

  std::string sample_spec;
  auto *sample = app.add_subcommand("sample", "Print a seeded random SO(n) matrix as JSON");
  sample->add_option("group", sample_spec, "so:n")->required();

  for (auto *sub : {enumerate, verify, quotient, decompose, embed, sample})
    sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp &e) {
    return app.exit(e);
  } catch (const CLI::ParseError &e) {
    app.exit(e);
    return cli::kUsageError;
  }

  cli::CommandResult result;
  try {
    config.format = format == "json" ? OutputFormat::json : OutputFormat::text;
    try {
      config.validate();
    } catch (const std::invalid_argument &e) {
      throw cli::UsageError(e.what());
    }
    if (*enumerate)
      result = cli::cmd_enumerate(group_spec, config);
    else if (*verify)
      result = cli::cmd_verify(suite, config);
    else if (*quotient)
      result = cli::cmd_quotient(subgroup, vector, classes, config);
    else if (*decompose)
      result = cli::cmd_decompose(read_file(matrix_file), config);
    else if (*embed)
      result = cli::cmd_embed(embed_kind, embed_n, config);
    else if (*sample) {
      if (sample_spec.rfind("so:", 0) != 0)
        throw cli::UsageError("sample expects so:n");
      int const n = std::stoi(sample_spec.substr(3));
      if (n < 1 || n > 64)
        throw cli::UsageError("sample size must lie in 1..64");
      result.output = cli::matrix_to_json(random_so(n, config.seed));
    }
  } catch (const cli::UsageError &e) {
    std::cerr << "error: " << e.what() << "\n";
    return cli::kUsageError;
  } catch (const std::invalid_argument &e) {
    std::cerr << "error: " << e.what() << "\n";
    return cli::kUsageError;
  } catch (const std::exception &e) {
    std::cerr << "error: " << e.what() << "\n";
    return cli::kVerificationFailure;
  }

  if (out_path.empty()) {
    std::cout << result.output;
  } else {
    std::ofstream out(out_path, std::ios::binary);
    if (!out) {
      std::cerr << "error: cannot write '" << out_path << "'\n";
      return cli::kUsageError;
    }
    out << result.output;
  }
  return result.exit_code;
}
