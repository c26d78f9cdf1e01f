#pragma once

// CSV and JSON renderings of coefficient tables, theorem-table reports and
// convergence scans. JSON documents carry "schema": 1 (see docs/schema.json).

#include "askey/recurrence.hpp"
#include "askey/uniform_limits.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace askey::io {

inline constexpr int kSchemaVersion = 1;

enum class Format { Csv, Json };

Format parse_format(std::string_view text);

struct CoefficientRow {
  std::size_t n;
  double b;
  std::optional<double> c;  // absent at n = 0
};

struct RowRecord {
  std::string row;
  std::string zero_set;  // e.g. "d,nu"; empty for the interior
  int dimension;
  std::string target;
  std::string candidate;  // full family text, empty on error
  std::optional<double> rho, sigma, residual;
  bool reflected = false;
  bool pass = false;
  std::string error;
};

struct ScanRecord {
  double t, deviation, b_deviation, c_deviation;
  std::optional<double> order;
};

template <class Real>
std::vector<CoefficientRow> coefficient_rows(const RecurrenceCoefficients<Real>& coeffs) {
  std::vector<CoefficientRow> rows;
  for (std::size_t n = 0; n <= coeffs.max_degree(); ++n) {
    rows.push_back({n, to_double(coeffs.b(n)),
                    n == 0 ? std::nullopt : std::optional<double>(to_double(coeffs.c(n)))});
  }
  return rows;
}

template <class Real>
std::vector<RowRecord> row_records(const TheoremTableReport<Real>& report) {
  std::vector<RowRecord> out;
  for (const auto& r : report.rows) {
    RowRecord rec;
    rec.row = r.row.name();
    rec.zero_set = r.row.zero_set == 0 ? "" : rec.row.substr(0, rec.row.size() - 4);
    rec.dimension = r.row.dimension();
    rec.target = std::string(family_name(r.row.target));
    if (r.candidate) rec.candidate = format_family(*r.candidate);
    if (r.fit) {
      rec.rho = to_double(r.fit->map.rho());
      rec.sigma = to_double(r.fit->map.sigma());
      rec.residual = to_double(r.fit->residual);
      rec.reflected = r.fit->reflected;
    }
    rec.pass = r.passed();
    rec.error = r.error;
    out.push_back(std::move(rec));
  }
  return out;
}

template <class Real>
std::vector<ScanRecord> scan_records(const std::vector<ScanStep<Real>>& steps) {
  std::vector<ScanRecord> out;
  for (const auto& s : steps) {
    out.push_back({to_double(s.t), to_double(s.deviation), to_double(s.b_deviation),
                   to_double(s.c_deviation),
                   s.order ? std::optional<double>(to_double(*s.order)) : std::nullopt});
  }
  return out;
}

std::string coefficients_csv(const std::vector<CoefficientRow>& rows);
nlohmann::ordered_json coefficients_json(const std::string& source,
                                         const std::vector<CoefficientRow>& rows);

std::string theorem_table_csv(const std::vector<RowRecord>& rows, std::size_t n_max);
nlohmann::ordered_json theorem_table_json(const std::vector<RowRecord>& rows, std::size_t n_max,
                                          double tolerance, int precision_bits);

std::string scan_csv(const std::vector<ScanRecord>& steps);
nlohmann::ordered_json scan_json(const std::string& preset, const std::string& parameter,
                                 std::size_t n_max, const std::vector<ScanRecord>& steps);

/// JSON numbers for finite values, strings for non-finite ones.
nlohmann::ordered_json number(double x);
nlohmann::ordered_json number(const std::optional<double>& x);

}  // namespace askey::io
