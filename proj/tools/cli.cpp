#include "cli.hpp"

#include "askey/hypergeometric.hpp"
#include "askey/io.hpp"
#include "askey/oracle.hpp"
#include "askey/properties.hpp"
#include "askey/uniform_limits.hpp"

#include <CLI11.hpp>

#include <charconv>
#include <fstream>
#include <ostream>
#include <sstream>

namespace askey::cli {

namespace {

struct RunConfig {
  int precision_bits = kBinary64Bits;
  io::Format format = io::Format::Csv;
  std::optional<std::size_t> n_max;
  std::optional<double> tolerance;
  std::uint64_t seed = 1;
};

std::vector<double> number_list(std::string_view text, std::size_t count, std::string_view what) {
  std::vector<double> out;
  while (true) {
    const auto comma = text.find(',');
    const std::string_view item = text.substr(0, comma);
    double v = 0;
    auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), v);
    if (ec != std::errc{} || ptr != item.data() + item.size()) {
      throw ParseError(std::string(what) + ": cannot parse '" + std::string(item) + "'");
    }
    out.push_back(v);
    if (comma == std::string_view::npos) break;
    text = text.substr(comma + 1);
  }
  if (out.size() != count) {
    throw ParseError(std::string(what) + ": expected " + std::to_string(count) + " values, got " +
                     std::to_string(out.size()));
  }
  return out;
}

InverseParams<double> inverse_point(std::string_view text) {
  const auto v = number_list(text, 4, "inverse parameters (inv_alpha,inv_b,inv_d,inv_nu)");
  InverseParams<double> p{v[0], v[1], v[2], v[3]};
  validate(p);
  return p;
}

template <class Real>
InverseParams<Real> cast_point(const InverseParams<double>& p) {
  return {Real(p.inv_alpha), Real(p.inv_b), Real(p.inv_d), Real(p.inv_nu)};
}

void emit(std::ostream& out, const nlohmann::ordered_json& j) { out << j.dump(2) << '\n'; }

double tolerance_or(const RunConfig& cfg, double fallback) {
  const double tol = cfg.tolerance.value_or(fallback);
  if (!(tol >= 0) || !std::isfinite(tol)) {
    throw DomainError("tolerance must be a finite nonnegative number");
  }
  return tol;
}

// ---------------------------------------------------------------------------

int cmd_coeffs(const RunConfig& cfg, const std::string& spec, std::ostream& out) {
  const std::size_t n_max = cfg.n_max.value_or(8);
  const auto rows = with_precision(Precision{cfg.precision_bits}, [&]<class Real>() {
    if (spec.rfind("jacobi-uniform:", 0) == 0) {
      const auto v = number_list(std::string_view(spec).substr(15), 2,
                                 "jacobi-uniform (inv_alpha,inv_beta)");
      return io::coefficient_rows(
          jacobi_uniform_coeffs(JacobiInverseParams<Real>{Real(v[0]), Real(v[1])}, n_max));
    }
    if (spec.rfind("racah-uniform:", 0) == 0) {
      const auto p = inverse_point(std::string_view(spec).substr(14));
      return io::coefficient_rows(racah_uniform_coeffs(cast_point<Real>(p), n_max));
    }
    return io::coefficient_rows(family_coeffs(cast_family<Real>(parse_family(spec)), n_max));
  });
  if (cfg.format == io::Format::Json) {
    emit(out, io::coefficients_json(spec, rows));
  } else {
    out << io::coefficients_csv(rows);
  }
  return kExitPass;
}

int cmd_theorem_table(const RunConfig& cfg, const std::string& row_filter,
                      const std::string& sample, std::ostream& out) {
  const std::size_t n_max = cfg.n_max.value_or(8);
  const double tol = tolerance_or(cfg, kDefaultIdentificationTolerance);
  std::optional<unsigned> only;
  if (!row_filter.empty()) {
    const auto row = find_row(row_filter);
    if (!row) throw ParseError("unknown row '" + row_filter + "'");
    only = row->zero_set;
  }
  const auto point = sample.empty() ? default_sample_point<double>() : inverse_point(sample);
  const auto records = with_precision(Precision{cfg.precision_bits}, [&]<class Real>() {
    return io::row_records(theorem_table<Real>(n_max, cast_point<Real>(point), Real(tol), only));
  });
  if (cfg.format == io::Format::Json) {
    emit(out, io::theorem_table_json(records, n_max, tol, cfg.precision_bits));
  } else {
    out << io::theorem_table_csv(records, n_max);
  }
  for (const auto& r : records) {
    if (!r.pass) return kExitVerifyFail;
  }
  return kExitPass;
}

int cmd_limit(const RunConfig& cfg, const std::string& preset, std::size_t steps, int first,
              std::ostream& out) {
  const std::size_t n_max = cfg.n_max.value_or(8);
  if (steps < 1) throw DomainError("--steps must be >= 1");
  std::string parameter;
  const auto records = with_precision(Precision{cfg.precision_bits}, [&]<class Real>() {
    const auto path = limit_preset<Real>(preset);
    parameter = path.parameter;
    const auto ts = decade_steps<Real>(steps, first);
    return io::scan_records(convergence_scan(path, std::span<const Real>(ts), n_max));
  });
  if (cfg.format == io::Format::Json) {
    emit(out, io::scan_json(preset, parameter, n_max, records));
  } else {
    out << io::scan_csv(records);
  }
  return kExitPass;
}

// Oracle routes through moments lose digits quickly in binary64, so the
// oracle side never runs below this precision.
constexpr int kOracleBits = 256;

int cmd_oracle_compare(const RunConfig& cfg, const std::string& spec, std::ostream& out) {
  const std::size_t n_max = cfg.n_max.value_or(8);
  const double tol = tolerance_or(cfg, 1e-10);
  const auto family = parse_family(spec);
  if (family_tag(family) == FamilyTag::Racah) {
    throw DomainError(
        "racah has no weight-based oracle; use 'hypergeometric-check " + spec + "' instead");
  }
  const int bits = std::max(cfg.precision_bits, kOracleBits);
  const double deviation = with_precision(Precision{bits}, [&]<class Real>() {
    const auto fam = cast_family<Real>(family);
    const auto oracle = oracle_coeffs(fam, n_max);
    // closed form at the requested working precision
    const auto closed = with_precision(Precision{cfg.precision_bits}, [&]<class W>() {
      return family_coeffs(cast_family<W>(family), n_max).template cast<Real>();
    });
    return to_double(identification_residual(closed, oracle, n_max));
  });
  const bool pass = deviation < tol;
  if (cfg.format == io::Format::Json) {
    nlohmann::ordered_json j;
    j["schema"] = io::kSchemaVersion;
    j["kind"] = "oracle-compare";
    j["family"] = format_family(family);
    j["n_max"] = n_max;
    j["deviation"] = io::number(deviation);
    j["tolerance"] = io::number(tol);
    j["pass"] = pass;
    emit(out, j);
  } else {
    out << "family,n_max,deviation,tolerance,pass\n"
        << '"' << format_family(family) << "\"," << n_max << ',' << number_string(deviation)
        << ',' << number_string(tol) << ',' << (pass ? "true" : "false") << '\n';
  }
  return pass ? kExitPass : kExitVerifyFail;
}

int cmd_hypergeometric_check(const RunConfig& cfg, const std::string& spec, std::ostream& out) {
  const std::size_t n_max = cfg.n_max.value_or(6);
  const double tol = tolerance_or(cfg, 1e-10);
  const auto family = parse_family(spec);
  const double deviation = with_precision(Precision{cfg.precision_bits}, [&]<class Real>() {
    using std::abs;
    using std::max;
    const auto fam = cast_family<Real>(family);
    HypergeometricFamily kind;
    HypergeometricParams<Real> hp;
    if (auto* j = std::get_if<JacobiParams<Real>>(&fam)) {
      kind = HypergeometricFamily::Jacobi;
      hp = {j->alpha, j->beta, Real(0), Real(0)};
    } else if (auto* h = std::get_if<HahnParams<Real>>(&fam)) {
      kind = HypergeometricFamily::Hahn;
      hp = {h->alpha, h->beta, Real(0), h->n_big};
    } else if (auto* r = std::get_if<RacahParams<Real>>(&fam)) {
      kind = HypergeometricFamily::Racah;
      hp = {r->alpha, r->beta, r->delta, r->n_big};
    } else {
      throw DomainError("hypergeometric-check supports jacobi, hahn and racah");
    }
    const auto table = generate_polynomials(family_coeffs(fam, n_max), n_max);
    Real worst(0);
    for (std::size_t n = 0; n <= n_max; ++n) {
      const auto series = monic_from_hypergeometric(kind, hp, n);
      const auto rec = table.poly(n);
      Real scale(0);
      for (const auto& v : rec) scale = max(scale, abs(v));
      for (std::size_t k = 0; k <= n; ++k) worst = max(worst, abs(series[k] - rec[k]) / scale);
    }
    return to_double(worst);
  });
  const bool pass = deviation < tol;
  if (cfg.format == io::Format::Json) {
    nlohmann::ordered_json j;
    j["schema"] = io::kSchemaVersion;
    j["kind"] = "hypergeometric-check";
    j["family"] = format_family(family);
    j["n_max"] = n_max;
    j["deviation"] = io::number(deviation);
    j["tolerance"] = io::number(tol);
    j["pass"] = pass;
    emit(out, j);
  } else {
    out << "family,n_max,deviation,tolerance,pass\n"
        << '"' << format_family(family) << "\"," << n_max << ',' << number_string(deviation)
        << ',' << number_string(tol) << ',' << (pass ? "true" : "false") << '\n';
  }
  return pass ? kExitPass : kExitVerifyFail;
}

int cmd_stieltjes(const RunConfig& cfg, const std::string& path, std::ostream& out) {
  std::ifstream in(path);
  if (!in) throw DomainError("cannot open measure file '" + path + "'");
  const auto mu = read_discrete_measure_csv(in);
  const std::size_t n_max = cfg.n_max.value_or(std::min<std::size_t>(8, mu.size() - 1));
  const auto rows = with_precision(Precision{cfg.precision_bits}, [&]<class Real>() {
    std::vector<Real> pts, wts;
    for (double x : mu.points()) pts.emplace_back(x);
    for (double w : mu.weights()) wts.emplace_back(w);
    return io::coefficient_rows(stieltjes(DiscreteMeasure<Real>(pts, wts), n_max));
  });
  if (cfg.format == io::Format::Json) {
    emit(out, io::coefficients_json("measure:" + path, rows));
  } else {
    out << io::coefficients_csv(rows);
  }
  return kExitPass;
}

int cmd_properties(const RunConfig& cfg, std::size_t cases, std::ostream& out) {
  if (cfg.precision_bits != kBinary64Bits) {
    throw DomainError("properties runs at binary64 only");
  }
  const auto results = run_property_suite(cfg.seed, cases);
  bool all = true;
  if (cfg.format == io::Format::Json) {
    nlohmann::ordered_json j;
    j["schema"] = io::kSchemaVersion;
    j["kind"] = "properties";
    j["seed"] = cfg.seed;
    nlohmann::ordered_json list = nlohmann::ordered_json::array();
    for (const auto& r : results) {
      all = all && r.failures == 0;
      list.push_back({{"property", r.name},
                      {"cases", r.cases},
                      {"failures", r.failures},
                      {"worst_ratio", io::number(r.worst)},
                      {"example", r.example}});
    }
    j["all_pass"] = all;
    j["properties"] = std::move(list);
    emit(out, j);
  } else {
    out << "property,cases,failures,worst_ratio,example\n";
    for (const auto& r : results) {
      all = all && r.failures == 0;
      out << r.name << ',' << r.cases << ',' << r.failures << ',' << number_string(r.worst) << ','
          << r.example << '\n';
    }
  }
  return all ? kExitPass : kExitVerifyFail;
}

int cmd_list(std::ostream& out) {
  out << "rows:\n";
  for (const auto& row : theorem_rows()) {
    out << "  " << row.name() << "  (" << row.dimension() << ", " << family_name(row.target)
        << ")\n";
  }
  out << "presets:\n";
  for (const auto& name : preset_names()) out << "  " << name << '\n';
  return kExitPass;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Uniform limit transitions between Askey-scheme recurrences", "askey-cli"};
  app.require_subcommand(1);
  app.fallthrough();

  int precision_bits = kBinary64Bits;
  std::string format = "csv";
  std::size_t n_max = 0;
  double tol = 0;
  std::uint64_t seed = 1;
  auto* n_opt = app.add_option("--n-max", n_max, "highest degree");
  auto* tol_opt = app.add_option("--tol", tol, "pass/fail tolerance");
  app.add_option("--precision-bits", precision_bits, "working precision (53 = binary64)");
  app.add_option("--format", format, "csv or json");
  app.add_option("--seed", seed, "seed for randomized sweeps");

  std::string spec, row, sample, preset, measure;
  std::size_t steps = 4, cases = 100;
  int first = 1;

  auto* coeffs = app.add_subcommand("coeffs", "recurrence coefficients of a family or point");
  coeffs->add_option("spec", spec,
                     "family (e.g. jacobi:alpha=2,beta=3), jacobi-uniform:a,b or "
                     "racah-uniform:a,b,d,v")
      ->required();
  auto* table = app.add_subcommand("theorem-table", "identify all boundary rows");
  table->add_option("--row", row, "restrict to one row, e.g. d=inf");
  table->add_option("--sample", sample, "interior sample point inv_alpha,inv_b,inv_d,inv_nu");
  auto* limit = app.add_subcommand("limit", "convergence scan along a preset path");
  limit->add_option("--preset", preset, "path name (see 'list')")->required();
  limit->add_option("--steps", steps, "number of decades");
  limit->add_option("--first", first, "first decade exponent: t = 10^-first");
  auto* oracle = app.add_subcommand("oracle-compare", "closed form vs weight-based oracle");
  oracle->add_option("family", spec)->required();
  auto* hyper =
      app.add_subcommand("hypergeometric-check", "series form vs recurrence polynomials");
  hyper->add_option("family", spec)->required();
  auto* stj = app.add_subcommand("stieltjes", "coefficients of a discrete measure");
  stj->add_option("--measure", measure, "CSV file of point,weight lines")->required();
  auto* props = app.add_subcommand("properties", "randomized invariant sweeps");
  props->add_option("--cases", cases, "cases per property");
  auto* list = app.add_subcommand("list", "row and preset names");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitPass;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitPass;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    RunConfig cfg;
    cfg.precision_bits = checked_precision(precision_bits).bits;
    cfg.format = io::parse_format(format);
    if (n_opt->count()) cfg.n_max = n_max;
    if (tol_opt->count()) cfg.tolerance = tol;
    cfg.seed = seed;

    if (*coeffs) return cmd_coeffs(cfg, spec, out);
    if (*table) return cmd_theorem_table(cfg, row, sample, out);
    if (*limit) return cmd_limit(cfg, preset, steps, first, out);
    if (*oracle) return cmd_oracle_compare(cfg, spec, out);
    if (*hyper) return cmd_hypergeometric_check(cfg, spec, out);
    if (*stj) return cmd_stieltjes(cfg, measure, out);
    if (*props) return cmd_properties(cfg, cases, out);
    if (*list) return cmd_list(out);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace askey::cli
