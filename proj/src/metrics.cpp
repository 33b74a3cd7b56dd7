#include "pnr/metrics.hpp"

#include <algorithm>
#include <sstream>

namespace pnr {

void MetricsReport::add(std::string section, std::string key,
                        std::string value) {
  rows_.push_back({std::move(section), std::move(key), std::move(value)});
}

void MetricsReport::add(std::string section, std::string key,
                        std::uint64_t value) {
  add(std::move(section), std::move(key), std::to_string(value));
}

const std::string* MetricsReport::find(std::string_view section,
                                       std::string_view key) const {
  for (const MetricRow& row : rows_) {
    if (row.section == section && row.key == key) return &row.value;
  }
  return nullptr;
}

std::string MetricsReport::to_csv() const {
  std::string out = "section,key,value\n";
  for (const MetricRow& row : rows_) {
    out += row.section + "," + row.key + "," + row.value + "\n";
  }
  return out;
}

std::string MetricsReport::to_table() const {
  std::size_t w_section = 7, w_key = 3, w_value = 5;
  for (const MetricRow& row : rows_) {
    w_section = std::max(w_section, row.section.size());
    w_key = std::max(w_key, row.key.size());
    w_value = std::max(w_value, row.value.size());
  }
  auto pad = [](const std::string& s, std::size_t width) {
    return s + std::string(width - s.size(), ' ');
  };
  std::string out;
  out += pad("section", w_section) + "  " + pad("key", w_key) + "  " +
         pad("value", w_value) + "\n";
  out += std::string(w_section, '-') + "  " + std::string(w_key, '-') + "  " +
         std::string(w_value, '-') + "\n";
  for (const MetricRow& row : rows_) {
    out += pad(row.section, w_section) + "  " + pad(row.key, w_key) + "  " +
           pad(row.value, w_value) + "\n";
  }
  return out;
}

Outcome<MetricsReport> MetricsReport::from_csv(const std::string& text) {
  MetricsReport report;
  std::istringstream in(text);
  std::string line;
  bool first = true;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    if (first) {
      first = false;
      if (line != "section,key,value") {
        return Failure{Err::ParseError, static_cast<std::int64_t>(line_no),
                       "expected metrics header"};
      }
      continue;
    }
    auto c1 = line.find(',');
    auto c2 = c1 == std::string::npos ? std::string::npos
                                      : line.find(',', c1 + 1);
    if (c1 == std::string::npos || c2 == std::string::npos) {
      return Failure{Err::ParseError, static_cast<std::int64_t>(line_no),
                     "expected three columns"};
    }
    report.add(line.substr(0, c1), line.substr(c1 + 1, c2 - c1 - 1),
               line.substr(c2 + 1));
  }
  if (first) {
    return Failure{Err::ParseError, 0, "empty metrics document"};
  }
  return report;
}

Outcome<std::string> render_report(const MetricsReport& report,
                                   const std::string& format) {
  if (format == "csv") return report.to_csv();
  if (format == "table") return report.to_table();
  return Failure{Err::UnknownFormat, -1, format};
}

}  // namespace pnr
