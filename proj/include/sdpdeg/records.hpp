#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "sdpdeg/degree.hpp"

namespace sdpdeg {

/// Flat, serializable view of a DegreeResult. delta is kept as decimal text.
struct OutputRecord {
  int m = 0, n = 0, r = 0, k = 0, l = 0;
  std::string delta;
  std::string method;
  double elapsed_ms = 0.0;
  std::optional<std::string> verified_by;

  /// Field-wise equality on the data shared by the CSV and JSON forms.
  bool same_data(const OutputRecord& other) const;
};

OutputRecord to_record(const DegreeResult& result);

inline constexpr std::string_view kCsvHeader = "m,n,r,k,l,delta,method";

std::string to_csv(std::span<const OutputRecord> records);
/// JSON array; delta is a string, elapsed_ms a number.
std::string to_json(std::span<const OutputRecord> records);
/// "m=3 n=4 r=2 k=0 l=4 delta=10 method=closed_form elapsed_ms=0.004"
std::string to_line(const OutputRecord& record);

std::vector<OutputRecord> parse_csv(std::string_view text);
std::vector<OutputRecord> parse_json(std::string_view text);

}  // namespace sdpdeg
