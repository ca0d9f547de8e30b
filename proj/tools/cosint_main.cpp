#include "cosint/families.hpp"
#include "cosint/sawtooth.hpp"
#include "cosint/series.hpp"
#include "cosint/verification.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

namespace {

using nlohmann::ordered_json;

enum class Format { Text, Csv, Json };

struct OutputSpec {
  Format format = Format::Text;
  std::string out_path; // empty means stdout
  int precision = 15;
};

Format parse_format(const std::string& s) {
  if (s == "csv") return Format::Csv;
  if (s == "json") return Format::Json;
  return Format::Text;
}

std::string fmt_double(double v, int precision) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", precision, v);
  return buf;
}

// floats entering json are rounded to the requested precision first so every
// format shows the same digits
double rounded(double v, int precision) {
  return std::strtod(fmt_double(v, precision).c_str(), nullptr);
}

int with_output(const OutputSpec& spec, const std::function<void(std::ostream&)>& body) {
  if (spec.out_path.empty()) {
    body(std::cout);
    return 0;
  }
  std::ofstream file(spec.out_path, std::ios::binary);
  if (!file) {
    std::cerr << "cosint: cannot open " << spec.out_path << " for writing\n";
    return 2;
  }
  body(file);
  return file.good() ? 0 : 2;
}

// rows[0] is the header; text output pads to column widths, csv joins as-is
// (no cell ever contains a comma)
void write_rows(const std::vector<std::vector<std::string>>& rows, Format format,
                std::ostream& os) {
  if (format == Format::Csv) {
    for (const auto& row : rows) {
      for (std::size_t i = 0; i < row.size(); ++i) os << (i ? "," : "") << row[i];
      os << "\n";
    }
    return;
  }
  std::vector<std::size_t> width;
  for (const auto& row : rows) {
    if (width.size() < row.size()) width.resize(row.size(), 0);
    for (std::size_t i = 0; i < row.size(); ++i) width[i] = std::max(width[i], row[i].size());
  }
  for (const auto& row : rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i + 1 == row.size())
        os << row[i];
      else
        os << row[i] << std::string(width[i] - row[i].size() + 2, ' ');
    }
    os << "\n";
  }
}

// exact values stay exact in json: the rendered string plus a map from pi
// exponent to fraction; the float lives in its own dedicated column
ordered_json pi_expr_json(const cosint::PiExpr& e) {
  ordered_json coeffs = ordered_json::object();
  for (int exp = cosint::PiExpr::max_exp; exp >= cosint::PiExpr::min_exp; --exp) {
    if (!e.coeff(exp).is_zero()) coeffs[std::to_string(exp)] = e.coeff(exp).str();
  }
  ordered_json out;
  out["render"] = e.render();
  out["coeffs"] = coeffs;
  return out;
}

int usage_error(const std::string& what) {
  std::cerr << "cosint: " << what << "\n";
  return 2;
}

int cmd_table(const std::string& family, int k_from, int k_to, const OutputSpec& spec) {
  if (k_from > k_to) return usage_error("table: k_from must not exceed k_to");

  std::vector<cosint::Family> families;
  if (family == "all")
    families = {cosint::Family::W, cosint::Family::I, cosint::Family::J};
  else if (family == "W")
    families = {cosint::Family::W};
  else if (family == "I")
    families = {cosint::Family::I};
  else
    families = {cosint::Family::J};

  std::vector<cosint::FamilyValue> values;
  for (auto f : families) {
    for (int k = k_from; k <= k_to; ++k) {
      switch (f) {
        case cosint::Family::W: values.push_back(cosint::wallis_closed(k)); break;
        case cosint::Family::I: values.push_back(cosint::i_recurrence(k)); break;
        case cosint::Family::J: values.push_back(cosint::j_from_relation(k)); break;
      }
    }
  }

  if (spec.format == Format::Json) {
    ordered_json doc = ordered_json::array();
    for (const auto& v : values) {
      ordered_json row;
      row["family"] = cosint::family_name(v.family);
      row["k"] = v.k;
      row["exact"] = pi_expr_json(v.value);
      row["value"] = rounded(v.value.eval(), spec.precision);
      row["route"] = cosint::route_name(v.route);
      doc.push_back(row);
    }
    return with_output(spec, [&](std::ostream& os) { os << doc.dump(2) << "\n"; });
  }

  std::vector<std::vector<std::string>> rows{{"family", "k", "exact", "value", "route"}};
  for (const auto& v : values)
    rows.push_back({cosint::family_name(v.family), std::to_string(v.k), v.value.render(),
                    fmt_double(v.value.eval(), spec.precision), cosint::route_name(v.route)});
  return with_output(spec, [&](std::ostream& os) { write_rows(rows, spec.format, os); });
}

int cmd_coeffs(int k_from, int k_to, const OutputSpec& spec) {
  if (k_from > k_to) return usage_error("coeffs: k_from must not exceed k_to");

  if (spec.format == Format::Json) {
    ordered_json doc = ordered_json::array();
    for (int k = k_from; k <= k_to; ++k) {
      ordered_json row;
      row["k"] = k;
      auto c = cosint::i_coeffs(k);
      if (const auto* even = std::get_if<cosint::EvenCoeffs>(&c)) {
        row["parity"] = "even";
        row["a"] = even->a.str();
        row["b"] = even->b.str();
      } else {
        const auto& odd = std::get<cosint::OddCoeffs>(c);
        row["parity"] = "odd";
        row["c"] = odd.c.str();
        row["d"] = odd.d.str();
      }
      doc.push_back(row);
    }
    return with_output(spec, [&](std::ostream& os) { os << doc.dump(2) << "\n"; });
  }

  std::vector<std::vector<std::string>> rows{{"k", "parity", "a|c", "b|d"}};
  for (int k = k_from; k <= k_to; ++k) {
    auto c = cosint::i_coeffs(k);
    if (const auto* even = std::get_if<cosint::EvenCoeffs>(&c))
      rows.push_back({std::to_string(k), "even", even->a.str(), even->b.str()});
    else {
      const auto& odd = std::get<cosint::OddCoeffs>(c);
      rows.push_back({std::to_string(k), "odd", odd.c.str(), odd.d.str()});
    }
  }
  return with_output(spec, [&](std::ostream& os) { write_rows(rows, spec.format, os); });
}

int cmd_series(const std::string& which, int n_terms, const OutputSpec& spec) {
  std::vector<std::string> rendered;
  std::vector<ordered_json> json_values;
  for (int n = 0; n < n_terms; ++n) {
    if (which == "j_even" || which == "w_even") {
      const cosint::PiExpr e =
          which == "j_even" ? cosint::j_even_from_series(n) : cosint::w_even_from_series(n);
      rendered.push_back(e.render());
      json_values.push_back(pi_expr_json(e));
    } else {
      const cosint::Rational r = which == "inv_sqrt"  ? cosint::inv_sqrt_coeff(n)
                                 : which == "inv_3_2" ? cosint::inv_three_halves_coeff(n)
                                                      : cosint::w_odd_reciprocal_check(n);
      rendered.push_back(r.str());
      json_values.emplace_back(r.str());
    }
  }

  if (spec.format == Format::Json) {
    ordered_json doc = ordered_json::array();
    for (int n = 0; n < n_terms; ++n) {
      ordered_json row;
      row["n"] = n;
      row["value"] = json_values[static_cast<std::size_t>(n)];
      doc.push_back(row);
    }
    return with_output(spec, [&](std::ostream& os) { os << doc.dump(2) << "\n"; });
  }

  std::vector<std::vector<std::string>> rows{{"n", "value"}};
  for (int n = 0; n < n_terms; ++n)
    rows.push_back({std::to_string(n), rendered[static_cast<std::size_t>(n)]});
  return with_output(spec, [&](std::ostream& os) { write_rows(rows, spec.format, os); });
}

int cmd_sawtooth(double angle, int teeth, int avg_upto, bool svg, const OutputSpec& spec) {
  const auto geom = cosint::build_wave(angle, teeth);
  std::ostringstream body;
  cosint::emit_wave(geom, svg ? cosint::WaveFormat::Svg : cosint::WaveFormat::Csv, body);
  std::string text = body.str();

  std::ostringstream avg;
  for (int i = 0; i <= avg_upto; ++i) {
    const cosint::PiExpr a = cosint::average_area_exact(i);
    if (svg)
      avg << "  <!-- avg[" << i << "] = " << a.render() << " = "
          << fmt_double(a.eval(), spec.precision) << " -->\n";
    else
      avg << "# avg[" << i << "] = " << a.render() << " = "
          << fmt_double(a.eval(), spec.precision) << "\n";
  }
  if (svg)
    text.insert(text.rfind("</svg>"), avg.str());
  else
    text += avg.str();

  return with_output(spec, [&](std::ostream& os) { os << text; });
}

int cmd_verify(int k_max, double tol, int route_cap, const OutputSpec& spec) {
  const auto routes = cosint::check_route_equality(std::min(k_max, route_cap));

  std::vector<cosint::VerificationReport> reports;
  for (auto f : {cosint::Family::W, cosint::Family::I, cosint::Family::J}) {
    auto part = cosint::verify_family(f, std::min(k_max, 30), tol);
    reports.insert(reports.end(), part.begin(), part.end());
  }
  auto sector = cosint::verify_sector_avg(std::min(k_max, 4), tol);
  reports.insert(reports.end(), sector.begin(), sector.end());

  bool pass = routes.failures.empty();
  for (const auto& r : reports) pass = pass && r.pass;

  const int rc = with_output(spec, [&](std::ostream& os) {
    if (spec.format == Format::Json) {
      ordered_json doc;
      doc["route_equality"] = {
          {"k_max", routes.k_max}, {"checks", routes.checks}, {"failures", routes.failures}};
      ordered_json rows = ordered_json::array();
      for (const auto& r : reports) {
        ordered_json row;
        row["family"] = cosint::report_family_name(r.family);
        row["k"] = r.k_or_i;
        row["exact"] = rounded(r.exact_float, spec.precision);
        row["quad"] = rounded(r.quad.value, spec.precision);
        row["diff"] = rounded(r.abs_diff, spec.precision);
        row["pass"] = r.pass;
        if (!r.note.empty()) row["note"] = r.note;
        rows.push_back(row);
      }
      doc["oracle"] = rows;
      doc["pass"] = pass;
      os << doc.dump(2) << "\n";
    } else if (spec.format == Format::Csv) {
      os << "# route-equality k=0.." << routes.k_max << " checks=" << routes.checks
         << " failures=" << routes.failures.size() << "\n";
      for (const auto& f : routes.failures) os << "# " << f << "\n";
      cosint::write_reports_csv(reports, os, spec.precision);
    } else {
      os << "route-equality k=0.." << routes.k_max << ": " << routes.checks << " checks, "
         << (routes.failures.empty() ? "all exact" : "FAILURES") << "\n";
      for (const auto& f : routes.failures) os << "  " << f << "\n";
      cosint::write_reports_text(reports, os, spec.precision);
      os << (pass ? "verify: pass" : "verify: FAIL") << "\n";
    }
  });
  if (rc != 0) return rc;
  return pass ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact cosine-power integrals over [0, pi/2] with cross-checked routes"};
  app.name("cosint");
  app.require_subcommand(1);

  std::string format_str = "text";
  OutputSpec spec;
  auto add_output_opts = [&](CLI::App* cmd, bool with_format) {
    if (with_format)
      cmd->add_option("--format", format_str, "output format")
          ->check(CLI::IsMember({"text", "csv", "json"}))
          ->capture_default_str();
    cmd->add_option("--out", spec.out_path, "write to PATH instead of standard output");
    cmd->add_option("--precision", spec.precision, "significant digits for float columns")
        ->check(CLI::Range(1, 17))
        ->capture_default_str();
  };

  std::string family;
  int k_from = 0;
  int k_to = 0;
  auto* table = app.add_subcommand("table", "exact and floating values over a k range");
  table->add_option("family", family, "W, I, J or all")
      ->required()
      ->check(CLI::IsMember({"W", "I", "J", "all"}));
  table->add_option("k_from", k_from, "first k")->required()->check(CLI::NonNegativeNumber);
  table->add_option("k_to", k_to, "last k")->required()->check(CLI::NonNegativeNumber);
  add_output_opts(table, true);

  auto* coeffs =
      app.add_subcommand("coeffs", "coefficients of I_k: a pi^2 + b (even) or c pi + d (odd)");
  coeffs->add_option("k_from", k_from, "first k")->required()->check(CLI::NonNegativeNumber);
  coeffs->add_option("k_to", k_to, "last k")->required()->check(CLI::NonNegativeNumber);
  add_output_opts(coeffs, true);

  std::string which;
  int n_terms = 1;
  auto* series = app.add_subcommand("series", "Maclaurin coefficients and the values they encode");
  series->add_option("which", which, "inv_sqrt, inv_3_2, j_even, w_even or w_odd_recip")
      ->required()
      ->check(CLI::IsMember({"inv_sqrt", "inv_3_2", "j_even", "w_even", "w_odd_recip"}));
  series->add_option("n_terms", n_terms, "number of leading coefficients")
      ->required()
      ->check(CLI::PositiveNumber);
  add_output_opts(series, true);

  double angle = 0.0;
  int teeth = 3;
  int avg_upto = 0;
  bool use_svg = false;
  bool use_csv = false;
  auto* saw = app.add_subcommand("sawtooth", "sawtooth wave geometry and average sector areas");
  saw->add_option("--angle", angle, "angle x in radians, 0 < x < pi/2")->required();
  saw->add_option("--teeth", teeth, "number of teeth")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  saw->add_option("--avg-upto", avg_upto, "emit exact average areas for i = 0..N")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();
  auto* svg_flag = saw->add_flag("--svg", use_svg, "emit an svg document");
  auto* csv_flag = saw->add_flag("--csv", use_csv, "emit csv sample rows (default)");
  svg_flag->excludes(csv_flag);
  add_output_opts(saw, false);

  int kmax = 30;
  int route_kmax = 200;
  double tol = 1e-9;
  auto* verify =
      app.add_subcommand("verify", "route-equality sweep plus quadrature oracle comparisons");
  verify->add_option("kmax,--kmax", kmax, "largest k to verify")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();
  verify->add_option("tol,--tol", tol, "comparison tolerance for the oracle rows")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  verify->add_option("--route-kmax", route_kmax, "cap for the exact route-equality sweep")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();
  add_output_opts(verify, true);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }
  spec.format = parse_format(format_str);

  try {
    if (app.got_subcommand(table)) return cmd_table(family, k_from, k_to, spec);
    if (app.got_subcommand(coeffs)) return cmd_coeffs(k_from, k_to, spec);
    if (app.got_subcommand(series)) return cmd_series(which, n_terms, spec);
    if (app.got_subcommand(saw)) return cmd_sawtooth(angle, teeth, avg_upto, use_svg, spec);
    if (app.got_subcommand(verify)) return cmd_verify(kmax, tol, route_kmax, spec);
  } catch (const std::invalid_argument& e) {
    return usage_error(e.what());
  } catch (const std::exception& e) {
    std::cerr << "cosint: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
