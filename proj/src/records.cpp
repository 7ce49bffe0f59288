#include "sdpdeg/records.hpp"

#include <iomanip>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace sdpdeg {

bool OutputRecord::same_data(const OutputRecord& o) const {
  return m == o.m && n == o.n && r == o.r && k == o.k && l == o.l && delta == o.delta && method == o.method;
}

OutputRecord to_record(const DegreeResult& result) {
  OutputRecord rec;
  rec.m = result.triple.m();
  rec.n = result.triple.n();
  rec.r = result.triple.r();
  rec.k = result.triple.k_script();
  rec.l = result.triple.l_script();
  rec.delta = to_string(result.delta);
  rec.method = std::string(method_name(result.method));
  rec.elapsed_ms = std::chrono::duration<double, std::milli>(result.elapsed).count();
  if (result.verified_by) rec.verified_by = std::string(method_name(*result.verified_by));
  return rec;
}

std::string to_csv(std::span<const OutputRecord> records) {
  std::ostringstream out;
  out << kCsvHeader << '\n';
  for (const auto& r : records) {
    out << r.m << ',' << r.n << ',' << r.r << ',' << r.k << ',' << r.l << ',' << r.delta << ',' << r.method << '\n';
  }
  return out.str();
}

std::string to_json(std::span<const OutputRecord> records) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& r : records) {
    nlohmann::json j = {{"m", r.m},         {"n", r.n},           {"r", r.r},
                        {"k", r.k},         {"l", r.l},           {"delta", r.delta},
                        {"method", r.method}, {"elapsed_ms", r.elapsed_ms}};
    if (r.verified_by) j["verified_by"] = *r.verified_by;
    arr.push_back(std::move(j));
  }
  return arr.dump(2) + "\n";
}

std::string to_line(const OutputRecord& r) {
  std::ostringstream out;
  out << "m=" << r.m << " n=" << r.n << " r=" << r.r << " k=" << r.k << " l=" << r.l << " delta=" << r.delta
      << " method=" << r.method << " elapsed_ms=" << std::fixed << std::setprecision(3) << r.elapsed_ms;
  if (r.verified_by) out << " verified_by=" << *r.verified_by;
  return out.str();
}

std::vector<OutputRecord> parse_csv(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  if (!std::getline(in, line) || line != kCsvHeader) throw std::invalid_argument("missing or wrong CSV header");
  std::vector<OutputRecord> out;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::vector<std::string> fields;
    std::istringstream row(line);
    std::string field;
    while (std::getline(row, field, ',')) fields.push_back(field);
    if (fields.size() != 7) throw std::invalid_argument("CSV row needs 7 fields: " + line);
    OutputRecord rec;
    rec.m = std::stoi(fields[0]);
    rec.n = std::stoi(fields[1]);
    rec.r = std::stoi(fields[2]);
    rec.k = std::stoi(fields[3]);
    rec.l = std::stoi(fields[4]);
    rec.delta = fields[5];
    rec.method = fields[6];
    out.push_back(std::move(rec));
  }
  return out;
}

std::vector<OutputRecord> parse_json(std::string_view text) {
  const auto arr = nlohmann::json::parse(text);
  if (!arr.is_array()) throw std::invalid_argument("expected a JSON array");
  std::vector<OutputRecord> out;
  for (const auto& j : arr) {
    OutputRecord rec;
    rec.m = j.at("m").get<int>();
    rec.n = j.at("n").get<int>();
    rec.r = j.at("r").get<int>();
    rec.k = j.at("k").get<int>();
    rec.l = j.at("l").get<int>();
    rec.delta = j.at("delta").get<std::string>();
    rec.method = j.at("method").get<std::string>();
    rec.elapsed_ms = j.at("elapsed_ms").get<double>();
    if (j.contains("verified_by")) rec.verified_by = j.at("verified_by").get<std::string>();
    out.push_back(std::move(rec));
  }
  return out;
}

}  // namespace sdpdeg
