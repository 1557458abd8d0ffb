#include "ddeform/output.hpp"

#include <cstdio>
#include <ostream>
#include <stdexcept>

namespace ddeform {

namespace {

void check_shape(const OutputRecord& record)
{
    if (record.rows.rows() > 0 && record.rows.cols() != static_cast<Eigen::Index>(record.columns.size())) {
        throw std::logic_error("output record: row width differs from column count");
    }
}

nlohmann::ordered_json header(const OutputRecord& record)
{
    nlohmann::ordered_json h;
    h["schema_version"] = record.schema_version;
    h["command"] = record.command;
    h["parameters"] = record.parameters;
    h["metadata"] = record.metadata;
    return h;
}

} // namespace

std::string format_number(double v)
{
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

void write_csv(const OutputRecord& record, std::ostream& os)
{
    check_shape(record);
    os << "# " << header(record).dump() << '\n';
    for (std::size_t c = 0; c < record.columns.size(); ++c) {
        os << (c ? "," : "") << record.columns[c];
    }
    os << '\n';
    for (Eigen::Index r = 0; r < record.rows.rows(); ++r) {
        for (Eigen::Index c = 0; c < record.rows.cols(); ++c) {
            os << (c ? "," : "") << format_number(record.rows(r, c));
        }
        os << '\n';
    }
}

void write_json(const OutputRecord& record, std::ostream& os)
{
    check_shape(record);
    nlohmann::ordered_json j = header(record);
    j["columns"] = record.columns;
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    for (Eigen::Index r = 0; r < record.rows.rows(); ++r) {
        nlohmann::ordered_json row = nlohmann::ordered_json::array();
        for (Eigen::Index c = 0; c < record.rows.cols(); ++c) {
            row.push_back(record.rows(r, c));
        }
        rows.push_back(std::move(row));
    }
    j["rows"] = std::move(rows);
    os << j.dump(1) << '\n';
}

OutputRecord read_json(const std::string& text)
{
    const auto j = nlohmann::ordered_json::parse(text);
    if (!j.contains("schema_version") || !j.contains("columns") || !j.contains("rows")) {
        throw std::runtime_error("read_json: missing schema_version, columns or rows");
    }
    OutputRecord record;
    record.schema_version = j.at("schema_version").get<std::string>();
    if (record.schema_version != kSchemaVersion) {
        throw std::runtime_error("read_json: unsupported schema_version " + record.schema_version);
    }
    record.command = j.value("command", "");
    record.parameters = j.value("parameters", nlohmann::ordered_json::object());
    record.metadata = j.value("metadata", nlohmann::ordered_json::object());
    record.columns = j.at("columns").get<std::vector<std::string>>();
    const auto& rows = j.at("rows");
    record.rows.resize(static_cast<Eigen::Index>(rows.size()), static_cast<Eigen::Index>(record.columns.size()));
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != record.columns.size()) {
            throw std::runtime_error("read_json: row " + std::to_string(r) + " has the wrong width");
        }
        for (std::size_t c = 0; c < rows[r].size(); ++c) {
            record.rows(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = rows[r][c].get<double>();
        }
    }
    return record;
}

} // namespace ddeform
