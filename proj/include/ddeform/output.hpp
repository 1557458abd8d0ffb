#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include <Eigen/Core>

#include "json.hpp"

namespace ddeform {

inline constexpr const char* kSchemaVersion = "1.0";

/// Tabular data product emitted by the CLI.
///
/// CSV layout: one "# {metadata json}" line, one header line of column names,
/// then one line per row with every value at 17 significant digits.
/// JSON layout: a single object with schema_version, command, parameters,
/// metadata, columns and rows (array of arrays). JSON numbers use the shortest
/// representation that parses back to the identical double.
struct OutputRecord {
    std::string schema_version = kSchemaVersion;
    std::string command;
    nlohmann::ordered_json parameters = nlohmann::ordered_json::object();
    nlohmann::ordered_json metadata = nlohmann::ordered_json::object();
    std::vector<std::string> columns;
    Eigen::MatrixXd rows;
};

/// "%.17g"
std::string format_number(double v);

void write_csv(const OutputRecord& record, std::ostream& os);
void write_json(const OutputRecord& record, std::ostream& os);

/// Parses the JSON layout back. Throws std::runtime_error on schema mismatch.
OutputRecord read_json(const std::string& text);

} // namespace ddeform
