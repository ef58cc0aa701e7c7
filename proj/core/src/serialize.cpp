#include "entsym/serialize.hpp"

#include "entsym/error.hpp"
#include "entsym/numeric.hpp"

#include <charconv>
#include <limits>
#include <map>
#include <cmath>
#include <sstream>

namespace entsym {

namespace {

void check_schema(const Json& j) {
  if (!j.contains("schema_version") || j.at("schema_version").get<int>() != kSchemaVersion) {
    throw InvalidArgument("unsupported or missing schema_version");
  }
}

Json versioned(Json body) {
  Json out = Json::object();
  out["schema_version"] = kSchemaVersion;
  for (auto& [k, v] : body.items()) out[k] = std::move(v);
  return out;
}

}  // namespace

Json encode_real(double value) {
  if (!std::isfinite(value)) return nullptr;
  return value;
}

double decode_real(const Json& value) {
  if (value.is_null()) return kNegInf;
  return value.get<double>();
}

Json to_json(const Partition& lambda) {
  return Json(std::vector<int>(lambda.parts().begin(), lambda.parts().end()));
}

Partition partition_from_json(const Json& j) { return Partition(j.get<std::vector<int>>()); }

Json to_json(const BlockSpectrum& bs) {
  Json blocks = Json::array();
  for (const auto& b : bs.blocks) {
    Json jb = Json::object();
    jb["lambda"] = to_json(b.lambda);
    jb["log2_b"] = encode_real(b.log2_b);
    jb["dimU"] = to_decimal(b.dim_u);
    jb["dimV"] = to_decimal(b.dim_v);
    if (b.b_exact) jb["b_exact"] = b.b_exact->str();
    if (b.c_values) {
      Json cs = Json::array();
      for (const auto& c : *b.c_values) {
        cs.push_back(Json{{"log2_value", encode_real(c.log2_value)}, {"multiplicity", to_decimal(c.multiplicity)}});
      }
      jb["c_values"] = std::move(cs);
    }
    blocks.push_back(std::move(jb));
  }
  return versioned(Json{{"kind", "block_spectrum"}, {"n", bs.n}, {"d", bs.d}, {"source", bs.source},
                        {"blocks", std::move(blocks)}});
}

BlockSpectrum block_spectrum_from_json(const Json& j) {
  check_schema(j);
  BlockSpectrum bs;
  bs.n = j.at("n").get<int>();
  bs.d = j.at("d").get<int>();
  bs.source = j.at("source").get<std::string>();
  for (const auto& jb : j.at("blocks")) {
    Block b;
    b.lambda = partition_from_json(jb.at("lambda"));
    b.log2_b = decode_real(jb.at("log2_b"));
    b.dim_u = big_from_decimal(jb.at("dimU").get<std::string>());
    b.dim_v = big_from_decimal(jb.at("dimV").get<std::string>());
    if (jb.contains("b_exact")) b.b_exact = Rational(jb.at("b_exact").get<std::string>());
    if (jb.contains("c_values")) {
      std::vector<CValue> cs;
      for (const auto& jc : jb.at("c_values")) {
        cs.push_back({decode_real(jc.at("log2_value")), big_from_decimal(jc.at("multiplicity").get<std::string>())});
      }
      b.c_values = std::move(cs);
    }
    bs.blocks.push_back(std::move(b));
  }
  return bs;
}

Json to_json(const WeightedSpectrum& ws) {
  Json entries = Json::array();
  for (const auto& e : ws.entries) {
    entries.push_back(Json{{"log2_value", encode_real(e.log2_value)},
                           {"log2_multiplicity", encode_real(e.log2_multiplicity)}});
  }
  return versioned(Json{{"kind", "weighted_spectrum"}, {"n", ws.n}, {"source", ws.source},
                        {"entries", std::move(entries)}});
}

WeightedSpectrum weighted_spectrum_from_json(const Json& j) {
  check_schema(j);
  WeightedSpectrum ws;
  ws.n = j.at("n").get<int>();
  ws.source = j.at("source").get<std::string>();
  for (const auto& e : j.at("entries")) {
    ws.entries.push_back({decode_real(e.at("log2_value")), decode_real(e.at("log2_multiplicity"))});
  }
  return ws;
}

Json to_json(const FidelityCurve& curve) {
  Json points = Json::array();
  for (const auto& p : curve.points) points.push_back(Json{{"R", p.R}, {"fidelity", p.fidelity}});
  return versioned(Json{{"kind", "fidelity_curve"}, {"n", curve.n}, {"points", std::move(points)}});
}

FidelityCurve fidelity_curve_from_json(const Json& j) {
  check_schema(j);
  FidelityCurve curve;
  curve.n = j.at("n").get<int>();
  for (const auto& p : j.at("points")) curve.points.push_back({p.at("R").get<double>(), p.at("fidelity").get<double>()});
  return curve;
}

Json to_json(const ConverseReport& report) {
  Json rows = Json::array();
  for (const auto& r : report.rows) {
    rows.push_back(Json{{"n", r.n}, {"epsilon", r.epsilon}, {"Ec", r.Ec}, {"Ed", r.Ed}, {"gap", r.gap}});
  }
  return versioned(Json{{"kind", "converse_report"},
                        {"rows", std::move(rows)},
                        {"first_gap", report.first_gap},
                        {"last_gap", report.last_gap},
                        {"epsilon_spread", report.epsilon_spread},
                        {"gap_shrinking", report.gap_shrinking},
                        {"epsilon_insensitive", report.epsilon_insensitive},
                        {"strong_converse_consistent", report.consistent}});
}

ConverseReport converse_report_from_json(const Json& j) {
  check_schema(j);
  ConverseReport report;
  for (const auto& r : j.at("rows")) {
    report.rows.push_back({r.at("n").get<int>(), r.at("epsilon").get<double>(), r.at("Ec").get<double>(),
                           r.at("Ed").get<double>(), r.at("gap").get<double>()});
  }
  report.first_gap = j.at("first_gap").get<double>();
  report.last_gap = j.at("last_gap").get<double>();
  report.epsilon_spread = j.at("epsilon_spread").get<double>();
  report.gap_shrinking = j.at("gap_shrinking").get<bool>();
  report.epsilon_insensitive = j.at("epsilon_insensitive").get<bool>();
  report.consistent = j.at("strong_converse_consistent").get<bool>();
  return report;
}

Json to_json(const ExponentResult& result) {
  return versioned(Json{{"kind", "exponent"},
                        {"value", encode_real(result.value)},
                        {"argmin_q", result.argmin_q},
                        {"argmin_qprime", result.argmin_qprime}});
}

ExponentResult exponent_result_from_json(const Json& j) {
  check_schema(j);
  return {decode_real(j.at("value")), j.at("argmin_q").get<std::vector<double>>(),
          j.at("argmin_qprime").get<std::vector<double>>()};
}

Json to_json(const Meta& meta) {
  Json j = Json::object();
  j["tool"] = meta.tool;
  j["version"] = meta.version;
  j["command"] = meta.command;
  j["config"] = meta.config;
  j["seed"] = meta.seed ? Json(*meta.seed) : Json(nullptr);
  j["wall_time_s"] = meta.wall_time_s;
  j["timestamp"] = meta.timestamp;
  return j;
}

Meta meta_from_json(const Json& j) {
  Meta meta;
  meta.tool = j.at("tool").get<std::string>();
  meta.version = j.at("version").get<std::string>();
  meta.command = j.at("command").get<std::string>();
  meta.config = j.at("config");
  if (!j.at("seed").is_null()) meta.seed = j.at("seed").get<std::uint64_t>();
  meta.wall_time_s = j.at("wall_time_s").get<double>();
  meta.timestamp = j.at("timestamp").get<std::string>();
  return meta;
}

std::string render_json(const Document& doc) {
  Json j = Json::object();
  j["schema_version"] = kSchemaVersion;
  j["meta"] = to_json(doc.meta);
  j["payload"] = doc.payload;
  return j.dump(2) + "\n";
}

Document parse_json_document(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw InvalidArgument(std::string("malformed JSON document: ") + e.what());
  }
  check_schema(j);
  return {meta_from_json(j.at("meta")), j.at("payload")};
}

// --- CSV ------------------------------------------------------------------------

std::string format_real(double value) {
  if (std::isnan(value)) return "nan";
  if (std::isinf(value)) return value < 0 ? "-inf" : "inf";
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, value);
  return std::string(buf, res.ptr);
}

namespace {

std::string render_cell(const CsvCell& cell) {
  if (const auto* i = std::get_if<std::int64_t>(&cell)) return std::to_string(*i);
  if (const auto* d = std::get_if<double>(&cell)) return format_real(*d);
  const auto& s = std::get<std::string>(cell);
  if (s.find_first_of(",\n\"") != std::string::npos) throw InvalidArgument("CSV text cell contains a separator");
  return s;
}

CsvCell parse_cell(const std::string& text) {
  std::int64_t i = 0;
  auto [pi, ei] = std::from_chars(text.data(), text.data() + text.size(), i);
  if (pi == text.data() + text.size()) {
    if (ei == std::errc()) return i;
    // Integers beyond 64 bits (dimensions) stay textual.
    if (ei == std::errc::result_out_of_range) return text;
  }
  if (text == "-inf") return kNegInf;
  if (text == "inf") return std::numeric_limits<double>::infinity();
  if (text.find_first_of(".eE") == std::string::npos) return text;
  double d = 0.0;
  auto [pd, ed] = std::from_chars(text.data(), text.data() + text.size(), d);
  if (ed == std::errc() && pd == text.data() + text.size()) return d;
  return text;
}

std::vector<std::string> split(const std::string& line) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream is(line);
  while (std::getline(is, cur, ',')) out.push_back(cur);
  if (!line.empty() && line.back() == ',') out.emplace_back();
  return out;
}

constexpr const char* kSchemaLine = "# schema_version=";
constexpr const char* kMetaLine = "# meta=";

}  // namespace

std::string render_csv(const Meta& meta, const CsvTable& table) {
  std::ostringstream os;
  os << kSchemaLine << kSchemaVersion << '\n';
  os << kMetaLine << to_json(meta).dump() << '\n';
  for (std::size_t i = 0; i < table.columns.size(); ++i) os << (i ? "," : "") << table.columns[i];
  os << '\n';
  for (const auto& row : table.rows) {
    if (row.size() != table.columns.size()) throw InvalidArgument("CSV row width differs from header");
    for (std::size_t i = 0; i < row.size(); ++i) os << (i ? "," : "") << render_cell(row[i]);
    os << '\n';
  }
  return os.str();
}

std::pair<Meta, CsvTable> parse_csv(const std::string& text) {
  std::istringstream is(text);
  std::string line;
  if (!std::getline(is, line) || line.rfind(kSchemaLine, 0) != 0 ||
      std::stoi(line.substr(std::string(kSchemaLine).size())) != kSchemaVersion) {
    throw InvalidArgument("CSV lacks a supported schema_version line");
  }
  if (!std::getline(is, line) || line.rfind(kMetaLine, 0) != 0) throw InvalidArgument("CSV lacks a meta line");
  Meta meta = meta_from_json(Json::parse(line.substr(std::string(kMetaLine).size())));
  CsvTable table;
  if (!std::getline(is, line)) throw InvalidArgument("CSV lacks a header row");
  table.columns = split(line);
  while (std::getline(is, line)) {
    std::vector<CsvCell> row;
    for (const auto& cell : split(line)) row.push_back(parse_cell(cell));
    table.rows.push_back(std::move(row));
  }
  return {std::move(meta), std::move(table)};
}

// --- JSON lines -----------------------------------------------------------------

std::string render_json_lines(const Meta& meta, const ProtocolRun& run) {
  Json header = Json::object();
  header["schema_version"] = kSchemaVersion;
  header["meta"] = to_json(meta);
  Json jr = Json::object();
  jr["protocol"] = run.protocol;
  jr["n"] = run.n;
  jr["d"] = run.d;
  jr["R"] = run.R ? Json(*run.R) : Json(nullptr);
  jr["trials"] = run.trials;
  jr["seed"] = run.seed;
  jr["rng_algorithm"] = run.rng_algorithm;
  jr["chunk_size"] = kTrialsPerChunk;
  jr["chunk_seeds"] = run.chunk_seeds;
  Json outcomes = Json::array();
  for (const auto& l : run.outcomes) outcomes.push_back(to_json(l));
  jr["outcomes"] = std::move(outcomes);
  header["run"] = std::move(jr);

  std::string out = header.dump() + "\n";
  for (std::size_t i = 0; i < run.results.size(); ++i) {
    const auto& t = run.results[i];
    Json line = Json::object();
    line["trial"] = i;
    line["lambda"] = to_json(run.outcomes.at(t.outcome));
    line["success"] = t.success;
    line["ebits"] = t.ebits;
    out += line.dump();
    out += '\n';
  }
  return out;
}

std::pair<Meta, ProtocolRun> parse_json_lines(const std::string& text) {
  std::istringstream is(text);
  std::string line;
  if (!std::getline(is, line)) throw InvalidArgument("empty JSON-lines run");
  const Json header = Json::parse(line);
  check_schema(header);
  Meta meta = meta_from_json(header.at("meta"));
  const Json& jr = header.at("run");
  ProtocolRun run;
  run.protocol = jr.at("protocol").get<std::string>();
  run.n = jr.at("n").get<int>();
  run.d = jr.at("d").get<int>();
  if (!jr.at("R").is_null()) run.R = jr.at("R").get<double>();
  run.trials = jr.at("trials").get<std::int64_t>();
  run.seed = jr.at("seed").get<std::uint64_t>();
  run.rng_algorithm = jr.at("rng_algorithm").get<std::string>();
  run.chunk_seeds = jr.at("chunk_seeds").get<std::vector<std::uint64_t>>();
  for (const auto& l : jr.at("outcomes")) run.outcomes.push_back(partition_from_json(l));

  std::map<Partition, std::uint32_t> index;
  for (std::size_t i = 0; i < run.outcomes.size(); ++i) index.emplace(run.outcomes[i], static_cast<std::uint32_t>(i));
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    const Json t = Json::parse(line);
    run.results.push_back({index.at(partition_from_json(t.at("lambda"))), t.at("success").get<bool>(),
                           t.at("ebits").get<double>()});
  }
  return {std::move(meta), std::move(run)};
}

std::string partition_cell(const Partition& lambda) {
  std::string out;
  for (std::size_t i = 0; i < lambda.parts().size(); ++i) {
    if (i) out += ' ';
    out += std::to_string(lambda.parts()[i]);
  }
  return out;
}

}  // namespace entsym
