#include "entsym/jobs.hpp"

#include "entsym/cloning.hpp"
#include "entsym/exponents.hpp"
#include "entsym/loccsim.hpp"
#include "entsym/numeric.hpp"
#include "entsym/oracle_check.hpp"
#include "entsym/ratelab.hpp"

#include <chrono>
#include <cmath>
#include <cstdlib>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#ifndef ENTSYM_VERSION_STRING
#define ENTSYM_VERSION_STRING "0.0.0"
#endif

namespace entsym {

int exit_code_for(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::budget_exceeded: return kExitBudget;
    case ErrorKind::infeasible: return kExitInfeasible;
    case ErrorKind::invalid_argument:
    case ErrorKind::missing_data:
    case ErrorKind::unsupported_dimension: return kExitInvalid;
  }
  return kExitInternal;
}

const std::vector<std::string>& job_commands() {
  static const std::vector<std::string> commands = {"dims",     "spectrum", "fidelity-curve",  "rates",       "exponent",
                                                    "tradeoff", "protocol", "converse-report", "oracle-check"};
  return commands;
}

JobConfig JobConfig::from_json(const Json& j) {
  if (!j.is_object()) throw InvalidArgument("config must be a JSON object");
  JobConfig c;
  for (const auto& [key, value] : j.items()) {
    if (key == "command") {
      c.command = value.get<std::string>();
    } else if (key == "params") {
      if (!value.is_object()) throw InvalidArgument("config 'params' must be an object");
      c.params = value;
    } else if (key == "output") {
      if (value.contains("path")) c.output_path = value.at("path").get<std::string>();
      if (value.contains("format")) c.format = value.at("format").get<std::string>();
    } else if (key == "threads") {
      c.threads = value.get<int>();
    } else if (key != "schema_version") {
      throw InvalidArgument("unknown config key '" + key + "'");
    }
  }
  return c;
}

Json JobConfig::to_json() const {
  Json j = Json::object();
  j["command"] = command;
  j["params"] = params;
  j["output"] = Json{{"path", output_path}, {"format", format}};
  j["threads"] = threads;
  return j;
}

namespace {

using Clock = std::chrono::steady_clock;

// --- parameter access -------------------------------------------------------------

class Params {
 public:
  Params(const Json& params, std::set<std::string> allowed) : j_(params) {
    allowed.insert({"max_partitions", "max_type_entries", "dense_cap", "clone2_max_d"});
    for (const auto& [key, value] : params.items()) {
      if (!allowed.contains(key)) throw InvalidArgument("parameter '" + key + "' does not apply to this command");
    }
  }

  bool has(const std::string& key) const { return j_.contains(key) && !j_.at(key).is_null(); }

  int get_int(const std::string& key) const {
    require(key);
    const Json& v = j_.at(key);
    if (v.is_number_integer()) return v.get<int>();
    if (v.is_string()) return parse_int(v.get<std::string>(), key);
    throw InvalidArgument("parameter '" + key + "' must be an integer");
  }
  int get_int(const std::string& key, int fallback) const { return has(key) ? get_int(key) : fallback; }

  std::uint64_t get_u64(const std::string& key, std::uint64_t fallback) const {
    if (!has(key)) return fallback;
    const Json& v = j_.at(key);
    if (v.is_number_unsigned()) return v.get<std::uint64_t>();
    if (v.is_number_integer() && v.get<std::int64_t>() >= 0) return static_cast<std::uint64_t>(v.get<std::int64_t>());
    if (v.is_string()) {
      try {
        return std::stoull(v.get<std::string>());
      } catch (const std::exception&) {
      }
    }
    throw InvalidArgument("parameter '" + key + "' must be a non-negative integer");
  }

  double get_double(const std::string& key) const {
    require(key);
    const Json& v = j_.at(key);
    if (v.is_number()) return v.get<double>();
    if (v.is_string()) return parse_double(v.get<std::string>(), key);
    throw InvalidArgument("parameter '" + key + "' must be a number");
  }
  double get_double(const std::string& key, double fallback) const {
    return has(key) ? get_double(key) : fallback;
  }

  std::string get_string(const std::string& key, const std::string& fallback) const {
    if (!has(key)) return fallback;
    if (!j_.at(key).is_string()) throw InvalidArgument("parameter '" + key + "' must be a string");
    return j_.at(key).get<std::string>();
  }

  /// Array of numbers, a single number, or a comma-separated string.
  std::vector<double> get_list(const std::string& key, std::vector<double> fallback) const {
    if (!has(key)) return fallback;
    const Json& v = j_.at(key);
    std::vector<double> out;
    if (v.is_array()) {
      for (const auto& x : v) out.push_back(x.is_string() ? parse_double(x.get<std::string>(), key) : x.get<double>());
    } else if (v.is_number()) {
      out.push_back(v.get<double>());
    } else if (v.is_string()) {
      std::stringstream ss(v.get<std::string>());
      std::string item;
      while (std::getline(ss, item, ',')) out.push_back(parse_double(item, key));
    } else {
      throw InvalidArgument("parameter '" + key + "' must be a list of numbers");
    }
    if (out.empty()) throw InvalidArgument("parameter '" + key + "' is empty");
    return out;
  }

  ProbVector get_p() const {
    require("p");
    const Json& v = j_.at("p");
    if (v.is_string()) return ProbVector::parse(v.get<std::string>());
    if (v.is_array()) {
      std::string text;
      for (const auto& x : v) {
        if (!text.empty()) text += ',';
        text += x.is_string() ? x.get<std::string>() : format_real(x.get<double>());
      }
      return ProbVector::parse(text);
    }
    throw InvalidArgument("parameter 'p' must be a string or an array");
  }

  Budget budget(int threads) const {
    Budget b;
    if (has("max_partitions")) b.max_partitions = get_int("max_partitions");
    if (has("max_type_entries")) b.max_type_entries = get_int("max_type_entries");
    if (has("dense_cap")) b.dense_cap = get_int("dense_cap");
    if (has("clone2_max_d")) b.clone2_max_d = get_int("clone2_max_d");
    if (b.max_partitions < 1 || b.max_type_entries < 1 || b.dense_cap < 1) {
      throw InvalidArgument("budget caps must be positive");
    }
    b.threads = threads;
    return b;
  }

 private:
  void require(const std::string& key) const {
    if (!has(key)) throw InvalidArgument("missing parameter '" + key + "'");
  }

  static int parse_int(const std::string& text, const std::string& key) {
    try {
      std::size_t used = 0;
      const int v = std::stoi(text, &used);
      if (used == text.size()) return v;
    } catch (const std::exception&) {
    }
    throw InvalidArgument("parameter '" + key + "' must be an integer, got '" + text + "'");
  }

  static double parse_double(const std::string& text, const std::string& key) {
    try {
      std::size_t used = 0;
      const double v = std::stod(text, &used);
      if (used == text.size()) return v;
    } catch (const std::exception&) {
    }
    throw InvalidArgument("parameter '" + key + "' must be a number, got '" + text + "'");
  }

  const Json& j_;
};

const std::set<std::string> kSourceKeys = {"source", "p", "n", "m", "r", "measure", "view"};

std::set<std::string> with_source(std::set<std::string> extra) {
  extra.insert(kSourceKeys.begin(), kSourceKeys.end());
  return extra;
}

// --- spectrum sources -----------------------------------------------------------

struct Source {
  std::string name;
  ProbVector p;
  int copies = 0;
  std::optional<CloneParams> clone;
};

Source make_source(const Params& params) {
  Source s{params.get_string("source", "iid"), params.get_p(), 0, std::nullopt};
  if (s.name == "iid") {
    if (params.has("m") || params.has("r")) throw InvalidArgument("source iid takes n, not m or r");
    s.copies = params.get_int("n");
    if (s.copies < 1) throw InvalidArgument("n must be positive");
    return s;
  }
  if (s.name != "clone1" && s.name != "clone2") {
    throw InvalidArgument("unknown source '" + s.name + "' (expected iid, clone1 or clone2)");
  }
  const int m = params.get_int("m");
  if (params.has("r")) {
    s.clone = CloneParams::from_ratio(m, params.get_double("r"), s.p);
    if (params.has("n") && params.get_int("n") != s.clone->n) throw InvalidArgument("n disagrees with m / r");
  } else {
    s.clone = CloneParams(params.get_int("n"), m, s.p);
  }
  s.copies = m;
  return s;
}

Json clone_echo(const Source& s) {
  if (!s.clone) return nullptr;
  return Json{{"n", s.clone->n}, {"m", s.clone->m}, {"r", s.clone->r}, {"p", s.p.to_string()}};
}

BlockSpectrum block_of(const Source& s, const Budget& budget) {
  if (s.name == "iid") return iid_block_spectrum(s.p, s.copies, budget);
  if (s.name == "clone1") return clone1_block_spectrum(*s.clone, budget);
  throw InvalidArgument("source clone2 has no block form; use the flat spectrum");
}

WeightedSpectrum flat_of(const Source& s, Measure measure, const std::string& view, const Budget& budget) {
  if (s.name == "clone2") {
    if (measure == Measure::b_measure) throw InvalidArgument("source clone2 supports only the c measure");
    const auto spectrum = clone2_spectrum(*s.clone, budget);
    if (view == "flagged") return spectrum.flagged();
    if (view == "merged") return spectrum.merged();
    throw InvalidArgument("unknown clone2 view '" + view + "' (expected flagged or merged)");
  }
  if (measure == Measure::b_measure) return flatten(block_of(s, budget), Measure::b_measure);
  if (s.name == "iid") return iid_type_spectrum(s.p, s.copies, budget);
  return clone1_spectrum(*s.clone, budget);
}

Measure measure_of(const Params& params) { return measure_from_string(params.get_string("measure", "c")); }

// --- job bodies -------------------------------------------------------------------

struct Product {
  Json payload = Json::object();
  CsvTable table;
  std::optional<std::uint64_t> seed;
  std::optional<ProtocolRun> run;
  std::vector<std::string> messages;
  bool failed = false;
};

Product job_dims(const Params& params) {
  const int n = params.get_int("n");
  const int d = params.get_int("d");
  Json blocks = Json::array();
  Product out;
  out.table.columns = {"lambda", "dimU", "dimV"};
  BigInt total = 0;
  for (const auto& lambda : enumerate_partitions(n, d)) {
    const BigInt du = dim_u(lambda, d);
    const BigInt dv = dim_v(lambda);
    total += du * dv;
    blocks.push_back(Json{{"lambda", to_json(lambda)}, {"dimU", to_decimal(du)}, {"dimV", to_decimal(dv)}});
    out.table.rows.push_back({partition_cell(lambda), to_decimal(du), to_decimal(dv)});
  }
  BigInt power = 1;
  for (int i = 0; i < n; ++i) power *= d;
  out.payload = Json{{"schema_version", kSchemaVersion},
                     {"kind", "dims"},
                     {"n", n},
                     {"d", d},
                     {"blocks", std::move(blocks)},
                     {"sum_dimU_dimV", to_decimal(total)},
                     {"d_pow_n", to_decimal(power)},
                     {"complete", total == power}};
  return out;
}

Product job_spectrum(const Params& params, const Budget& budget) {
  const Source src = make_source(params);
  const std::string form = params.get_string("form", src.name == "clone2" ? "flat" : "block");
  Product out;
  if (form == "block") {
    const BlockSpectrum bs = block_of(src, budget);
    out.payload = to_json(bs);
    out.payload["total_mass"] = bs.total_mass();
    out.table.columns = {"lambda", "log2_b", "dimU", "dimV"};
    for (const auto& b : bs.blocks) {
      out.table.rows.push_back({partition_cell(b.lambda), b.log2_b, to_decimal(b.dim_u), to_decimal(b.dim_v)});
    }
  } else if (form == "flat") {
    const WeightedSpectrum ws = flat_of(src, measure_of(params), params.get_string("view", "flagged"), budget);
    out.payload = to_json(ws);
    out.payload["total_mass"] = ws.total_mass();
    out.table.columns = {"log2_value", "log2_multiplicity"};
    for (const auto& e : ws.entries) out.table.rows.push_back({e.log2_value, e.log2_multiplicity});
  } else {
    throw InvalidArgument("unknown spectrum form '" + form + "' (expected block or flat)");
  }
  out.payload["clone_params"] = clone_echo(src);
  return out;
}

Product job_fidelity_curve(const Params& params, const Budget& budget) {
  const Source src = make_source(params);
  const double top = std::log2(src.p.dim());
  const auto rates = rate_grid(params.get_double("R_min", 0.0), params.get_double("R_max", top),
                               params.get_double("R_step", 0.01));
  const std::string kind = params.get_string("kind", "sigma");
  FidelityCurve curve;
  if (kind == "sigma") {
    curve = sigma_fidelity_curve(block_of(src, budget), rates);
  } else if (kind == "pure") {
    curve = pure_fidelity_curve(flat_of(src, measure_of(params), params.get_string("view", "flagged"), budget), rates);
  } else {
    throw InvalidArgument("unknown curve kind '" + kind + "' (expected sigma or pure)");
  }
  Product out;
  out.payload = to_json(curve);
  out.payload["curve_kind"] = kind;
  out.payload["clone_params"] = clone_echo(src);
  out.table.columns = {"n", "R", "fidelity"};
  for (const auto& p : curve.points) out.table.rows.push_back({std::int64_t{curve.n}, p.R, p.fidelity});
  return out;
}

Product job_rates(const Params& params, const Budget& budget) {
  const Source src = make_source(params);
  const auto epsilons = params.get_list("epsilon", {0.01});
  const WeightedSpectrum ws = flat_of(src, measure_of(params), params.get_string("view", "flagged"), budget);
  Product out;
  Json estimates = Json::array();
  out.table.columns = {"n", "epsilon", "Ec", "Ed", "gap"};
  for (double eps : epsilons) {
    const double ec = estimate_Ec(ws, eps).rate;
    const double ed = estimate_Ed(ws, eps).rate;
    estimates.push_back(Json{{"epsilon", eps}, {"Ec", ec}, {"Ed", ed}, {"gap", ec - ed}});
    out.table.rows.push_back({std::int64_t{ws.n}, eps, ec, ed, ec - ed});
  }
  out.payload = Json{{"schema_version", kSchemaVersion},
                     {"kind", "rates"},
                     {"n", ws.n},
                     {"source", src.name},
                     {"measure", to_string(measure_of(params))},
                     {"H_p", entropy(src.p.values())},
                     {"estimates", std::move(estimates)},
                     {"clone_params", clone_echo(src)}};
  return out;
}

Product job_exponent(const Params& params) {
  const ProbVector p = params.get_p();
  const double r = params.get_double("r", 1.0);
  const int grid = params.get_int("grid", 2001);
  const double tol = params.get_double("tol", 1e-6);
  Product out;
  out.table.columns = {"R", "clone_exponent", "iid_exponent_over_r", "iid_exponent"};
  auto row = [&](double R) {
    const ExponentResult res = clone_dilution_exponent({R, r, p, grid, tol});
    const double iid = iid_dilution_exponent(R, p, grid);
    out.table.rows.push_back({R, res.value, iid / r, iid});
    return std::pair{res, iid};
  };
  if (params.has("R")) {
    const double R = params.get_double("R");
    const auto [res, iid] = row(R);
    out.payload = to_json(res);
    out.payload["R"] = R;
    out.payload["r"] = r;
    out.payload["iid_exponent"] = iid;
    out.payload["iid_exponent_over_r"] = iid / r;
    out.payload["H_p"] = entropy(p.values());
    return out;
  }
  const auto rates = rate_grid(params.get_double("R_min", entropy(p.values())),
                               params.get_double("R_max", std::log2(p.dim())), params.get_double("R_step", 0.01));
  Json points = Json::array();
  for (double R : rates) {
    const auto [res, iid] = row(R);
    points.push_back(Json{{"R", R}, {"clone_exponent", res.value}, {"iid_exponent_over_r", iid / r},
                          {"iid_exponent", iid}});
  }
  out.payload = Json{{"schema_version", kSchemaVersion}, {"kind", "exponent_curve"}, {"r", r},
                     {"H_p", entropy(p.values())}, {"points", std::move(points)}};
  return out;
}

Product job_tradeoff(const Params& params) {
  const ProbVector p = params.get_p();
  const double eta = params.get_double("eta");
  const double r = params.get_double("r", 1.0);
  const auto res = rate_exponent_tradeoff(eta, r, p, params.get_int("grid", 2001), params.get_double("tol", 1e-6));
  Product out;
  out.payload = Json{{"schema_version", kSchemaVersion}, {"kind", "tradeoff"},    {"eta", eta},
                     {"r", r},                           {"rate", res.rate},      {"saturated", res.saturated},
                     {"max_exponent", res.max_exponent}, {"H_p", entropy(p.values())}};
  out.table.columns = {"eta", "rate", "saturated", "max_exponent"};
  out.table.rows.push_back({eta, res.rate, std::int64_t{res.saturated ? 1 : 0}, res.max_exponent});
  return out;
}

Product job_protocol(const Params& params, const Budget& budget) {
  const Source src = make_source(params);
  const std::string protocol = params.get_string("protocol", "dilution");
  const std::int64_t trials = params.get_int("trials", 100000);
  const std::uint64_t seed = params.get_u64("seed", 1);
  const BlockSpectrum bs = block_of(src, budget);
  Product out;
  out.seed = seed;
  std::optional<double> exact_mass;
  std::optional<double> bound;
  if (protocol == "dilution") {
    const double R = params.get_double("R");
    out.run = simulate_dilution(bs, R, trials, seed, budget.threads);
    exact_mass = dimension_threshold_mass(bs, R);
    bound = dilution_ebit_bound(bs.n, bs.d, R);
  } else if (protocol == "distillation") {
    if (params.has("R")) throw InvalidArgument("distillation takes no rate R");
    out.run = simulate_distillation(BlockSampler(bs), trials, seed, budget.threads);
  } else {
    throw InvalidArgument("unknown protocol '" + protocol + "' (expected dilution or distillation)");
  }
  const RunSummary s = summarize(*out.run);
  out.table.columns = {"protocol", "n", "R", "trials", "seed", "success_rate", "exact_success_mass",
                       "mean_ebits", "ebit_bound", "mean_yield"};
  std::vector<CsvCell> row = {protocol,
                              std::int64_t{bs.n},
                              out.run->R ? CsvCell(*out.run->R) : CsvCell(std::string("none")),
                              trials,
                              std::to_string(seed),
                              s.success_rate,
                              exact_mass ? CsvCell(*exact_mass) : CsvCell(std::string("none")),
                              s.mean_ebits,
                              bound ? CsvCell(*bound) : CsvCell(std::string("none")),
                              s.mean_yield};
  for (const auto& [level, value] : s.yield_quantiles) {
    out.table.columns.push_back("yield_q" + format_real(level));
    row.push_back(value);
  }
  out.table.rows.push_back(std::move(row));
  return out;
}

Product job_converse(const Params& params, const Budget& budget) {
  const std::string source = params.get_string("source", "clone1");
  const ProbVector p = params.get_p();
  const auto sizes = params.get_list("ms", {50, 100, 200});
  const auto epsilons = params.get_list("epsilon", {0.001, 0.01, 0.05});
  const Measure measure = measure_of(params);
  std::vector<WeightedSpectrum> family;
  for (double size : sizes) {
    Json sub = Json::object();
    sub["source"] = source;
    sub["p"] = p.to_string();
    if (source == "iid") {
      sub["n"] = static_cast<int>(size);
    } else {
      sub["m"] = static_cast<int>(size);
      sub["r"] = params.get_double("r", 2.0);
    }
    const Params sp(sub, kSourceKeys);
    family.push_back(flat_of(make_source(sp), measure, params.get_string("view", "flagged"), budget));
  }
  const ConverseReport report = strong_converse_report(family, epsilons);
  Product out;
  out.payload = to_json(report);
  out.payload["source"] = source;
  out.payload["measure"] = to_string(measure);
  out.table.columns = {"n", "epsilon", "Ec", "Ed", "gap"};
  for (const auto& r : report.rows) out.table.rows.push_back({std::int64_t{r.n}, r.epsilon, r.Ec, r.Ed, r.gap});
  return out;
}

Product job_oracle_check(const Params& params, const Budget& budget) {
  const auto lines = oracle_check(params.get_string("scope", "all"), budget);
  Product out;
  Json checks = Json::array();
  out.table.columns = {"check", "status", "deviation", "tolerance"};
  for (const auto& l : lines) {
    checks.push_back(Json{{"check", l.name}, {"status", to_string(l.status)}, {"deviation", encode_real(l.deviation)},
                          {"tolerance", l.tolerance}, {"detail", l.detail}});
    out.table.rows.push_back({l.name, std::string(to_string(l.status)), l.deviation, l.tolerance});
    std::ostringstream msg;
    msg << to_string(l.status) << "  " << l.name << "  max_dev=" << format_real(l.deviation)
        << " tol=" << format_real(l.tolerance);
    if (!l.detail.empty()) msg << "  (" << l.detail << ")";
    out.messages.push_back(msg.str());
    out.failed = out.failed || l.status == CheckStatus::fail;
  }
  out.payload = Json{{"schema_version", kSchemaVersion}, {"kind", "oracle_check"}, {"checks", std::move(checks)},
                     {"all_passed", !out.failed}};
  return out;
}

Product dispatch(const JobConfig& config) {
  const std::string& c = config.command;
  const Json& j = config.params;
  if (c == "dims") return job_dims(Params(j, {"n", "d"}));
  if (c == "spectrum") {
    const Params p(j, with_source({"form"}));
    return job_spectrum(p, p.budget(config.threads));
  }
  if (c == "fidelity-curve") {
    const Params p(j, with_source({"kind", "R_min", "R_max", "R_step"}));
    return job_fidelity_curve(p, p.budget(config.threads));
  }
  if (c == "rates") {
    const Params p(j, with_source({"epsilon"}));
    return job_rates(p, p.budget(config.threads));
  }
  if (c == "exponent") return job_exponent(Params(j, {"p", "r", "R", "R_min", "R_max", "R_step", "grid", "tol"}));
  if (c == "tradeoff") return job_tradeoff(Params(j, {"p", "r", "eta", "grid", "tol"}));
  if (c == "protocol") {
    const Params p(j, with_source({"protocol", "R", "trials", "seed"}));
    return job_protocol(p, p.budget(config.threads));
  }
  if (c == "converse-report") {
    const Params p(j, {"source", "p", "r", "ms", "epsilon", "measure", "view"});
    return job_converse(p, p.budget(config.threads));
  }
  if (c == "oracle-check") {
    const Params p(j, {"scope"});
    return job_oracle_check(p, p.budget(config.threads));
  }
  throw InvalidArgument("unknown command '" + c + "'");
}

std::string utc_timestamp() {
  const std::time_t now = std::time(nullptr);
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

std::string extension_for(const JobConfig& config) {
  if (config.format == "csv") return "csv";
  return config.command == "protocol" ? "jsonl" : "json";
}

std::string resolve_path(const JobConfig& config) {
  if (!config.output_path.empty()) return config.output_path;
  if (const char* dir = std::getenv(kOutputDirEnv); dir != nullptr && *dir != '\0') {
    return (std::filesystem::path(dir) / (config.command + "." + extension_for(config))).string();
  }
  return {};
}

}  // namespace

JobOutcome run(const JobConfig& config) {
  JobOutcome outcome;
  const auto start = Clock::now();
  try {
    if (config.format != "json" && config.format != "csv") {
      throw InvalidArgument("unknown output format '" + config.format + "' (expected json or csv)");
    }
    if (config.threads < 0) throw InvalidArgument("threads must be >= 0");
    Product product = dispatch(config);

    Meta meta;
    meta.version = ENTSYM_VERSION_STRING;
    meta.command = config.command;
    meta.config = config.to_json();
    meta.seed = product.seed;
    meta.wall_time_s = std::chrono::duration<double>(Clock::now() - start).count();
    meta.timestamp = utc_timestamp();

    if (config.format == "csv") {
      outcome.rendered = render_csv(meta, product.table);
    } else if (product.run) {
      outcome.rendered = render_json_lines(meta, *product.run);
    } else {
      outcome.rendered = render_json({meta, product.payload});
    }
    outcome.messages = std::move(product.messages);
    outcome.exit_code = product.failed ? kExitCheckFailed : kExitOk;

    outcome.path = resolve_path(config);
    if (!outcome.path.empty()) {
      const std::filesystem::path path(outcome.path);
      if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
      std::ofstream file(path, std::ios::binary);
      if (!file) throw InvalidArgument("cannot write output file '" + outcome.path + "'");
      file << outcome.rendered;
      if (!file) throw InvalidArgument("failed writing output file '" + outcome.path + "'");
    }
  } catch (const Error& e) {
    outcome.exit_code = exit_code_for(e.kind());
    outcome.error = Json{{"kind", to_string(e.kind())}, {"message", e.what()}};
  } catch (const nlohmann::json::exception& e) {
    outcome.exit_code = kExitInvalid;
    outcome.error = Json{{"kind", "config_parse"}, {"message", e.what()}};
  } catch (const std::exception& e) {
    outcome.exit_code = kExitInternal;
    outcome.error = Json{{"kind", "internal"}, {"message", e.what()}};
  }
  return outcome;
}

}  // namespace entsym
