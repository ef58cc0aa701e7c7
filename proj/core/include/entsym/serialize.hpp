#pragma once
// Versioned JSON / CSV encodings of every result type, with parsers that
// re-emit byte-identical text.

#include "entsym/exponents.hpp"
#include "entsym/loccsim.hpp"
#include "entsym/ratelab.hpp"
#include "entsym/spectra.hpp"

#include <json.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace entsym {

using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

/// Non-finite reals travel as null and come back as -inf.
Json encode_real(double value);
double decode_real(const Json& value);

Json to_json(const Partition& lambda);
Partition partition_from_json(const Json& j);

Json to_json(const BlockSpectrum& bs);
BlockSpectrum block_spectrum_from_json(const Json& j);

Json to_json(const WeightedSpectrum& ws);
WeightedSpectrum weighted_spectrum_from_json(const Json& j);

Json to_json(const FidelityCurve& curve);
FidelityCurve fidelity_curve_from_json(const Json& j);

Json to_json(const ConverseReport& report);
ConverseReport converse_report_from_json(const Json& j);

Json to_json(const ExponentResult& result);
ExponentResult exponent_result_from_json(const Json& j);

struct Meta {
  std::string tool = "entsym";
  std::string version;
  std::string command;
  Json config = Json::object();
  std::optional<std::uint64_t> seed;
  double wall_time_s = 0.0;
  /// ISO-8601 UTC; the one field allowed to differ between identical runs.
  std::string timestamp;
};

Json to_json(const Meta& meta);
Meta meta_from_json(const Json& j);

struct Document {
  Meta meta;
  Json payload = Json::object();
};

std::string render_json(const Document& doc);
Document parse_json_document(const std::string& text);

using CsvCell = std::variant<std::int64_t, double, std::string>;

struct CsvTable {
  std::vector<std::string> columns;
  std::vector<std::vector<CsvCell>> rows;
};

/// Shortest decimal text that reads back to the same double.
std::string format_real(double value);

/// '#' comment lines (schema version, meta JSON), a header row, then data.
std::string render_csv(const Meta& meta, const CsvTable& table);
std::pair<Meta, CsvTable> parse_csv(const std::string& text);

/// First line: schema version, meta and run header; then one trial per line.
std::string render_json_lines(const Meta& meta, const ProtocolRun& run);
std::pair<Meta, ProtocolRun> parse_json_lines(const std::string& text);

/// Space-separated parts, the CSV cell form of a partition.
std::string partition_cell(const Partition& lambda);

}  // namespace entsym
