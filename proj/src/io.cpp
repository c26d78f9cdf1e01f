#include "askey/io.hpp"

#include <sstream>

namespace askey::io {

using nlohmann::ordered_json;

Format parse_format(std::string_view text) {
  if (text == "csv") return Format::Csv;
  if (text == "json") return Format::Json;
  throw ParseError("unknown output format '" + std::string(text) + "' (csv or json)");
}

ordered_json number(double x) {
  if (std::isfinite(x)) return x;
  return number_string(x);
}

ordered_json number(const std::optional<double>& x) {
  if (!x) return nullptr;
  return number(*x);
}

namespace {

std::string cell(const std::optional<double>& x) { return x ? number_string(*x) : ""; }

// Quotes a CSV field when it holds a separator or quote.
std::string quoted(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

}  // namespace

std::string coefficients_csv(const std::vector<CoefficientRow>& rows) {
  std::ostringstream out;
  out << "n,B,C\n";
  for (const auto& r : rows) out << r.n << ',' << number_string(r.b) << ',' << cell(r.c) << '\n';
  return out.str();
}

ordered_json coefficients_json(const std::string& source, const std::vector<CoefficientRow>& rows) {
  ordered_json j;
  j["schema"] = kSchemaVersion;
  j["kind"] = "coefficients";
  j["source"] = source;
  j["n_max"] = rows.empty() ? 0 : rows.back().n;
  ordered_json list = ordered_json::array();
  for (const auto& r : rows) {
    list.push_back({{"n", r.n}, {"B", number(r.b)}, {"C", number(r.c)}});
  }
  j["rows"] = std::move(list);
  return j;
}

std::string theorem_table_csv(const std::vector<RowRecord>& rows, std::size_t n_max) {
  std::ostringstream out;
  out << "row,zero_set,dimension,target,candidate,rho,sigma,reflected,residual,n_max,pass,error\n";
  for (const auto& r : rows) {
    out << quoted(r.row) << ',' << quoted(r.zero_set) << ',' << r.dimension << ',' << r.target
        << ',' << quoted(r.candidate) << ',' << cell(r.rho) << ',' << cell(r.sigma) << ','
        << (r.reflected ? "true" : "false") << ',' << cell(r.residual) << ',' << n_max << ','
        << (r.pass ? "true" : "false") << ',' << quoted(r.error) << '\n';
  }
  return out.str();
}

ordered_json theorem_table_json(const std::vector<RowRecord>& rows, std::size_t n_max,
                                double tolerance, int precision_bits) {
  ordered_json j;
  j["schema"] = kSchemaVersion;
  j["kind"] = "theorem-table";
  j["n_max"] = n_max;
  j["tolerance"] = number(tolerance);
  j["precision_bits"] = precision_bits;
  bool all = !rows.empty();
  ordered_json list = ordered_json::array();
  for (const auto& r : rows) {
    all = all && r.pass;
    ordered_json item;
    item["row"] = r.row;
    item["zero_set"] = r.zero_set;
    item["dimension"] = r.dimension;
    item["target"] = r.target;
    item["candidate"] = r.candidate.empty() ? ordered_json(nullptr) : ordered_json(r.candidate);
    item["rho"] = number(r.rho);
    item["sigma"] = number(r.sigma);
    item["reflected"] = r.reflected;
    item["residual"] = number(r.residual);
    item["pass"] = r.pass;
    if (!r.error.empty()) item["error"] = r.error;
    list.push_back(std::move(item));
  }
  j["all_pass"] = all;
  j["rows"] = std::move(list);
  return j;
}

std::string scan_csv(const std::vector<ScanRecord>& steps) {
  std::ostringstream out;
  out << "t,deviation,b_deviation,c_deviation,order\n";
  for (const auto& s : steps) {
    out << number_string(s.t) << ',' << number_string(s.deviation) << ','
        << number_string(s.b_deviation) << ',' << number_string(s.c_deviation) << ','
        << cell(s.order) << '\n';
  }
  return out.str();
}

ordered_json scan_json(const std::string& preset, const std::string& parameter, std::size_t n_max,
                       const std::vector<ScanRecord>& steps) {
  ordered_json j;
  j["schema"] = kSchemaVersion;
  j["kind"] = "limit-scan";
  j["preset"] = preset;
  j["parameter"] = parameter;
  j["n_max"] = n_max;
  ordered_json list = ordered_json::array();
  for (const auto& s : steps) {
    list.push_back({{"t", number(s.t)},
                    {"deviation", number(s.deviation)},
                    {"b_deviation", number(s.b_deviation)},
                    {"c_deviation", number(s.c_deviation)},
                    {"order", number(s.order)}});
  }
  j["steps"] = std::move(list);
  return j;
}

}  // namespace askey::io
