#pragma once

#include <string>
#include <vector>

#include "pnr/errors.hpp"

namespace pnr {

struct MetricRow {
  std::string section;
  std::string key;
  std::string value;
};

// Flat section/key/value report. Values are pre-rendered strings (integers
// or fixed-precision decimals) so both output formats carry identical text.
class MetricsReport {
 public:
  void add(std::string section, std::string key, std::string value);
  void add(std::string section, std::string key, std::uint64_t value);

  const std::vector<MetricRow>& rows() const { return rows_; }
  const std::string* find(std::string_view section, std::string_view key) const;

  std::string to_csv() const;
  std::string to_table() const;

  static Outcome<MetricsReport> from_csv(const std::string& text);

 private:
  std::vector<MetricRow> rows_;
};

// format is "csv" or "table".
Outcome<std::string> render_report(const MetricsReport& report,
                                   const std::string& format);

}  // namespace pnr
