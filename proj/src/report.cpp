#include "lorasat/report.hpp"

#include <charconv>
#include <stdexcept>
#include <system_error>

namespace lorasat {

std::string format_double(double v) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof(buf), v);
    if (res.ec != std::errc())
        throw std::runtime_error("failed to format numeric value");
    return std::string(buf, res.ptr);
}

CsvWriter::CsvWriter(const std::string& path) : path_(path), out_(path) {
    if (!out_)
        throw std::runtime_error("cannot open output file: " + path);
}

void CsvWriter::header(const std::vector<std::string>& columns) {
    row_mixed(columns);
}

void CsvWriter::row(const std::vector<double>& values) {
    for (size_t i = 0; i < values.size(); ++i) {
        if (i) out_ << ',';
        out_ << format_double(values[i]);
    }
    out_ << '\n';
    if (!out_)
        throw std::runtime_error("write failed: " + path_);
}

void CsvWriter::row_mixed(const std::vector<std::string>& values) {
    for (size_t i = 0; i < values.size(); ++i) {
        if (i) out_ << ',';
        out_ << values[i];
    }
    out_ << '\n';
    if (!out_)
        throw std::runtime_error("write failed: " + path_);
}

void write_sidecar(const std::string& csv_path, const std::string& resolved_json) {
    const std::string path = csv_path + ".json";
    std::ofstream out(path);
    if (!out)
        throw std::runtime_error("cannot open output file: " + path);
    out << resolved_json;
    if (!resolved_json.empty() && resolved_json.back() != '\n') out << '\n';
    if (!out)
        throw std::runtime_error("write failed: " + path);
}

}  // namespace lorasat
