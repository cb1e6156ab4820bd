#pragma once

#include <fstream>
#include <string>
#include <vector>

namespace lorasat {

// Minimal CSV emitter: one header row, then data rows; numbers are written
// with enough digits to round-trip doubles.
class CsvWriter {
  public:
    explicit CsvWriter(const std::string& path);
    void header(const std::vector<std::string>& columns);
    void row(const std::vector<double>& values);
    void row_mixed(const std::vector<std::string>& values);
    const std::string& path() const { return path_; }

  private:
    std::string path_;
    std::ofstream out_;
};

// Writes `<csv_path>.json` next to a CSV with the fully resolved
// configuration that produced it, so any output can be regenerated exactly.
void write_sidecar(const std::string& csv_path, const std::string& resolved_json);

std::string format_double(double v);

}  // namespace lorasat
