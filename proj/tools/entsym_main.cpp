#include "entsym/jobs.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <map>
#include <string>

namespace {

struct FlagSpec {
  const char* name;
  const char* help;
};

// Every flag is forwarded as a string parameter; the job validates and converts.
constexpr FlagSpec kParamFlags[] = {
    {"n", "number of copies (iid) or clone inputs"},
    {"m", "number of clone outputs"},
    {"r", "cloning ratio m/n"},
    {"d", "local dimension (dims)"},
    {"p", "probability vector, decimal or rational, e.g. 0.7,0.3 or 7/10,3/10"},
    {"source", "iid | clone1 | clone2"},
    {"form", "block | flat (spectrum)"},
    {"measure", "b | c"},
    {"view", "flagged | merged (clone2)"},
    {"kind", "pure | sigma (fidelity-curve)"},
    {"epsilon", "error level, or comma-separated list"},
    {"R", "rate"},
    {"R_min", "lower end of a rate grid"},
    {"R_max", "upper end of a rate grid"},
    {"R_step", "rate grid spacing"},
    {"eta", "target exponent (tradeoff)"},
    {"grid", "outer grid resolution for exponent optimization"},
    {"tol", "exponent optimizer tolerance"},
    {"protocol", "dilution | distillation"},
    {"trials", "Monte Carlo trial count"},
    {"seed", "64-bit seed"},
    {"ms", "comma-separated clone sizes (converse-report)"},
    {"scope", "spectra | clone1 | clone2 | exponent | all (oracle-check)"},
    {"max_partitions", "budget: partitions enumerated"},
    {"max_type_entries", "budget: type vectors enumerated"},
    {"dense_cap", "budget: dense Hilbert dimension"},
    {"clone2_max_d", "budget: largest d for clone2"},
};

entsym::Json error_record(const std::string& kind, const std::string& message, int code) {
  return entsym::Json{{"error", {{"kind", kind}, {"message", message}, {"exit_code", code}}}};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite-n entanglement cost and distillation for permutation-symmetric states", "entsym"};
  app.set_version_flag("--version", ENTSYM_VERSION_STRING);

  std::string command;
  std::string config_path;
  std::string output_path;
  std::string format;
  int threads = -1;
  std::map<std::string, std::string> values;

  std::string command_help = "one of:";
  for (const auto& c : entsym::job_commands()) command_help += " " + c;
  app.add_option("command", command, command_help);
  app.add_option("--config", config_path, "JSON job config; flags override its params");
  app.add_option("-o,--output", output_path, "output file (default: $ENTSYM_OUTPUT_DIR/<command>.<ext> or stdout)");
  app.add_option("--format", format, "json | csv")->check(CLI::IsMember({"json", "csv"}));
  app.add_option("--threads", threads, "worker cap (0 = hardware concurrency)")->check(CLI::NonNegativeNumber);
  for (const auto& flag : kParamFlags) {
    app.add_option(std::string("--") + flag.name, values[flag.name], flag.help);
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    std::cerr << error_record("config_parse", e.what(), entsym::kExitInvalid).dump() << '\n';
    return entsym::kExitInvalid;
  }

  entsym::JobConfig config;
  try {
    if (!config_path.empty()) {
      std::ifstream in(config_path);
      if (!in) throw entsym::InvalidArgument("cannot read config file '" + config_path + "'");
      config = entsym::JobConfig::from_json(entsym::Json::parse(in));
    }
  } catch (const std::exception& e) {
    std::cerr << error_record("config_parse", e.what(), entsym::kExitInvalid).dump() << '\n';
    return entsym::kExitInvalid;
  }

  if (!command.empty()) config.command = command;
  if (config.command.empty()) {
    std::cerr << error_record("config_parse", "no command given", entsym::kExitInvalid).dump() << '\n';
    return entsym::kExitInvalid;
  }
  if (!output_path.empty()) config.output_path = output_path;
  if (!format.empty()) config.format = format;
  if (threads >= 0) config.threads = threads;
  for (const auto& flag : kParamFlags) {
    if (app.count(std::string("--") + flag.name) > 0) config.params[flag.name] = values[flag.name];
  }

  const entsym::JobOutcome outcome = entsym::run(config);
  if (!outcome.error.is_null()) {
    entsym::Json record = entsym::Json{{"error", outcome.error}};
    record["error"]["exit_code"] = outcome.exit_code;
    std::cerr << record.dump() << '\n';
    return outcome.exit_code;
  }
  if (outcome.path.empty()) {
    std::cout << outcome.rendered;
  } else {
    std::cerr << "wrote " << outcome.path << '\n';
  }
  for (const auto& line : outcome.messages) std::cerr << line << '\n';
  return outcome.exit_code;
}
