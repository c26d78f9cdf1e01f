#include <doctest.h>

#include "askey/io.hpp"

#include <fstream>

using namespace askey;
using nlohmann::json;

namespace {

json schema() {
  std::ifstream in(ASKEY_SCHEMA_PATH);
  REQUIRE(in);
  return json::parse(in);
}

// Required top-level and per-item keys from the schema definition.
void check_required(const json& doc, const std::string& kind) {
  const auto def = schema()["$defs"][kind];
  for (const auto& key : def["required"]) CHECK(doc.contains(key.get<std::string>()));
  CHECK(doc["schema"] == 1);
  CHECK(doc["kind"] == kind);
  for (const auto& [name, prop] : def["properties"].items()) {
    if (prop.value("type", "") != "array" || !prop.contains("items")) continue;
    for (const auto& item : doc[name]) {
      for (const auto& key : prop["items"]["required"]) {
        CHECK(item.contains(key.get<std::string>()));
      }
    }
  }
}

}  // namespace

TEST_CASE("coefficients csv") {
  const auto rows = io::coefficient_rows(hermite_coeffs<double>(3));
  CHECK(io::coefficients_csv(rows) == "n,B,C\n0,0,\n1,0,0.5\n2,0,1\n3,0,1.5\n");
}

TEST_CASE("coefficients json") {
  const auto rows = io::coefficient_rows(jacobi_uniform_coeffs(JacobiInverseParams<>{}, 2));
  const json j = json::parse(io::coefficients_json("jacobi-uniform:0,0", rows).dump());
  check_required(j, "coefficients");
  CHECK(j["rows"][0]["C"].is_null());
  CHECK(j["rows"][2]["C"] == 8.0);
}

TEST_CASE("theorem table renderings") {
  const auto report = theorem_table(8, default_sample_point<double>(), 1e-8);
  const auto records = io::row_records(report);
  REQUIRE(records.size() == 16);
  CHECK(records[5].zero_set == "d,nu");
  CHECK(records[0].zero_set.empty());
  const json j = json::parse(io::theorem_table_json(records, 8, 1e-8, 53).dump());
  check_required(j, "theorem-table");
  CHECK(j["all_pass"] == true);
  const auto csv = io::theorem_table_csv(records, 8);
  CHECK(csv.rfind("row,zero_set,dimension,target,candidate,rho,sigma,reflected,residual,n_max,pass,error\n", 0) == 0);
  CHECK(csv.find("\"d,nu=inf\",\"d,nu\",2,jacobi,") != std::string::npos);
}

TEST_CASE("scan renderings") {
  const auto path = limit_preset<double>("jacobi-uniform-diagonal");
  const auto ts = decade_steps<double>(3);
  const auto records = io::scan_records(convergence_scan(path, std::span<const double>(ts), 4));
  const json j = json::parse(io::scan_json("jacobi-uniform-diagonal", path.parameter, 4, records).dump());
  check_required(j, "limit-scan");
  CHECK(j["steps"][0]["order"].is_null());
  CHECK(j["steps"][1]["order"].is_number());
  const auto csv = io::scan_csv(records);
  CHECK(csv.rfind("t,deviation,b_deviation,c_deviation,order\n0.1,", 0) == 0);
}

TEST_CASE("non-finite numbers become strings") {
  CHECK(io::number(INFINITY) == "inf");
  CHECK(io::number(std::optional<double>{}).is_null());
  CHECK(io::number(0.25) == 0.25);
}

TEST_CASE("format names") {
  CHECK(io::parse_format("csv") == io::Format::Csv);
  CHECK(io::parse_format("json") == io::Format::Json);
  CHECK_THROWS_AS(io::parse_format("xml"), ParseError);
}
