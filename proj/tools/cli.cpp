#include "cli.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <numbers>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "circlebound/bounds.hpp"
#include "circlebound/circle_extrema.hpp"
#include "circlebound/rootfind.hpp"
#include "circlebound/serialization.hpp"
#include "circlebound/verify.hpp"

namespace circlebound::cli {
namespace {

enum class Format { table, json, csv };

class UsageError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string sig9(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.9g", x);
  return buf;
}

std::string sig9(const std::optional<double>& x) { return x ? sig9(*x) : std::string(); }

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string quoted = "\"";
  for (const char c : s) {
    if (c == '"') quoted += '"';
    quoted += c;
  }
  return quoted + "\"";
}

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += sep;
    out += parts[i];
  }
  return out;
}

// Fixed-width text table.
class Table {
 public:
  explicit Table(std::vector<std::string> header) : rows_{std::move(header)} {}
  void add(std::vector<std::string> row) { rows_.push_back(std::move(row)); }

  void print(std::ostream& out) const {
    std::vector<std::size_t> width(rows_.front().size(), 0);
    for (const auto& row : rows_) {
      for (std::size_t i = 0; i < row.size(); ++i) width[i] = std::max(width[i], row[i].size());
    }
    for (const auto& row : rows_) {
      std::string line;
      for (std::size_t i = 0; i < row.size(); ++i) {
        line += row[i];
        if (i + 1 < row.size()) line += std::string(width[i] - row[i].size() + 2, ' ');
      }
      while (!line.empty() && line.back() == ' ') line.pop_back();
      out << line << '\n';
    }
  }

 private:
  std::vector<std::vector<std::string>> rows_;
};

struct PolySource {
  std::string path;
  std::string inline_list;
};

void add_poly_options(CLI::App* cmd, PolySource& src) {
  auto* input = cmd->add_option("-i,--input", src.path, "Polynomial JSON file");
  auto* poly = cmd->add_option("--poly", src.inline_list,
                               "Comma-separated real coefficients, ascending (e.g. 64,0,0,1)");
  input->excludes(poly);
}

Polynomial load_polynomial(const PolySource& src) {
  if (!src.inline_list.empty()) {
    std::vector<double> values;
    std::stringstream ss(src.inline_list);
    std::string item;
    while (std::getline(ss, item, ',')) {
      std::size_t used = 0;
      double v = 0.0;
      try {
        v = std::stod(item, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      while (used < item.size() && std::isspace(static_cast<unsigned char>(item[used]))) ++used;
      if (used == 0 || used != item.size()) throw UsageError("--poly: cannot parse coefficient '" + item + "'");
      values.push_back(v);
    }
    try {
      return Polynomial::from_real(values);
    } catch (const Error& e) {
      throw UsageError(std::string("--poly: ") + e.what());
    }
  }
  if (src.path.empty()) throw UsageError("an input polynomial is required (--input FILE or --poly LIST)");
  std::ifstream in(src.path);
  if (!in) throw UsageError("cannot open " + src.path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  try {
    return parse_polynomial(buffer.str());
  } catch (const Error& e) {
    throw UsageError(src.path + ": " + e.what());
  }
}

void add_format_option(CLI::App* cmd, Format& format) {
  cmd->add_option("-f,--format", format, "Output format")
      ->transform(CLI::CheckedTransformer(
          std::map<std::string, Format>{{"table", Format::table}, {"json", Format::json}, {"csv", Format::csv}},
          CLI::ignore_case));
}

// Writes to --output when given, otherwise to the command's stream.
class Sink {
 public:
  Sink(const std::string& path, std::ostream& fallback) : out_(&fallback) {
    if (!path.empty()) {
      file_.open(path);
      if (!file_) throw UsageError("cannot write " + path);
      out_ = &file_;
    }
  }
  std::ostream& stream() { return *out_; }

 private:
  std::ofstream file_;
  std::ostream* out_;
};

// ---------------------------------------------------------------- analyze

void render_summary(const Polynomial& p, double r, const BestBoundOptions& opts, const BoundSummary& s,
                    Format format, std::ostream& out) {
  if (format == Format::json) {
    out << to_json(s).dump(2) << '\n';
    return;
  }
  if (format == Format::csv) {
    out << "id,applicable,value,factor,reference_max,improvement,m,mu,R,K,reasons\n";
    for (const auto& b : s.bounds) {
      const auto& q = b.params;
      out << to_string(b.id) << ',' << (b.applicable ? "true" : "false") << ',' << sig9(b.value) << ','
          << sig9(q.factor) << ',' << sig9(q.reference_max) << ',' << sig9(q.improvement) << ','
          << sig9(q.m) << ',' << (q.mu ? std::to_string(*q.mu) : "") << ',' << sig9(q.R) << ','
          << sig9(q.K) << ',' << csv_field(join(b.reasons, "; ")) << '\n';
    }
    return;
  }
  out << "degree n = " << p.degree() << ", r = " << sig9(r) << ", R = " << sig9(opts.R.value_or(1.0));
  if (opts.K) out << ", K = " << sig9(*opts.K);
  out << '\n';
  if (s.measured) {
    out << "measured M(p,r) = " << sig9(s.measured->value) << " at angle " << sig9(s.measured->angle) << '\n';
  }
  out << '\n';
  Table table({"bound", "applicable", "value", "factor", "M_ref", "improvement", "gap", "notes"});
  for (const auto& b : s.bounds) {
    std::string gap;
    if (b.applicable && s.measured) gap = sig9(s.measured->value - *b.value);
    table.add({to_string(b.id), b.applicable ? "yes" : "no", sig9(b.value), sig9(b.params.factor),
               sig9(b.params.reference_max), sig9(b.params.improvement), gap, join(b.reasons, "; ")});
  }
  table.print(out);
  out << '\n';
  if (s.best) {
    out << "best: " << to_string(*s.best) << " = " << sig9(s.find(*s.best)->value);
    if (s.gap) out << ", gap = " << sig9(*s.gap);
    out << '\n';
  } else {
    out << "best: none applicable\n";
  }
}

// ---------------------------------------------------------------- reproduce

struct ExampleRow {
  std::string quantity;
  double published;
  double computed;
};

std::vector<ExampleRow> example_rows() {
  const Polynomial p{64.0, 0.0, 0.0, 1.0};
  const double r = 0.1;
  const double R = 0.5;
  const BoundResult govil = govil_two_radius_bound(p, r, R);
  const BoundResult cor24 = cor24_bound(p, r, R);
  const BoundResult rivlin = rivlin_bound(p, r);
  const BoundResult cor26 = cor26_bound(p, r);
  return {
      {"(a) two-radius factor, r=0.1 R=0.5", 0.3943704, *govil.params.factor},
      {"(a) cor24 improvement, r=0.1 R=0.5", 23.117715, *cor24.params.improvement},
      {"(b) rivlin factor, r=0.1 R=1", 0.166375, *rivlin.params.factor},
      {"(b) cor26 improvement, r=0.1 R=1", 18.79891, *cor26.params.improvement},
  };
}

void render_examples(Format format, std::ostream& out) {
  const auto rows = example_rows();
  if (format == Format::json) {
    Json j = Json::array();
    for (const auto& row : rows) {
      j.push_back(Json{{"quantity", row.quantity},
                       {"published", row.published},
                       {"computed", row.computed},
                       {"abs_diff", std::abs(row.computed - row.published)}});
    }
    out << Json{{"polynomial", to_json(Polynomial{64.0, 0.0, 0.0, 1.0})}, {"rows", j}}.dump(2) << '\n';
    return;
  }
  if (format == Format::csv) {
    out << "quantity,published,computed,abs_diff\n";
    for (const auto& row : rows) {
      out << csv_field(row.quantity) << ',' << sig9(row.published) << ',' << sig9(row.computed) << ','
          << sig9(std::abs(row.computed - row.published)) << '\n';
    }
    return;
  }
  out << "p(z) = z^3 + 64\n\n";
  Table table({"quantity", "published", "computed", "abs_diff"});
  for (const auto& row : rows) {
    table.add({row.quantity, sig9(row.published), sig9(row.computed),
               sig9(std::abs(row.computed - row.published))});
  }
  table.print(out);
}

// ---------------------------------------------------------------- curve

void render_curve(const std::vector<ScanRow>& rows, Format format, std::ostream& out) {
  std::vector<std::string> header{"r", "measured"};
  for (const BoundId id : kAllBounds) header.emplace_back(to_string(id));
  if (format == Format::json) {
    Json j = Json::array();
    for (const auto& row : rows) {
      Json entry{{"r", row.r}, {"measured", row.measured}};
      for (const auto& b : row.bounds) entry[to_string(b.id)] = b.value ? Json(*b.value) : Json(nullptr);
      j.push_back(std::move(entry));
    }
    out << j.dump(2) << '\n';
    return;
  }
  if (format == Format::csv) {
    out << join(header, ",") << '\n';
    for (const auto& row : rows) {
      std::vector<std::string> cells{sig9(row.r), sig9(row.measured)};
      for (const auto& b : row.bounds) cells.push_back(sig9(b.value));
      out << join(cells, ",") << '\n';
    }
    return;
  }
  Table table(header);
  for (const auto& row : rows) {
    std::vector<std::string> cells{sig9(row.r), sig9(row.measured)};
    for (const auto& b : row.bounds) cells.push_back(b.value ? sig9(b.value) : "-");
    table.add(std::move(cells));
  }
  table.print(out);
}

// ---------------------------------------------------------------- roots

void render_roots(const ZeroFreeCertificate& cert, Format format, std::ostream& out) {
  if (format == Format::json) {
    Json roots = Json::array();
    for (const auto& z : cert.roots) roots.push_back(Json::array({z.real(), z.imag()}));
    out << Json{{"roots", roots},
                {"certificate",
                 {{"K", cert.K}, {"min_root_modulus", cert.min_root_modulus}, {"margin", cert.margin},
                  {"holds", cert.holds}}}}
               .dump(2)
        << '\n';
    return;
  }
  if (format == Format::csv) {
    out << "re,im,modulus\n";
    for (const auto& z : cert.roots) out << sig9(z.real()) << ',' << sig9(z.imag()) << ',' << sig9(std::abs(z)) << '\n';
    return;
  }
  Table table({"re", "im", "modulus"});
  for (const auto& z : cert.roots) table.add({sig9(z.real()), sig9(z.imag()), sig9(std::abs(z))});
  table.print(out);
  out << "\nzero-free in |z|<" << sig9(cert.K) << ": " << (cert.holds ? "yes" : "no")
      << " (min root modulus " << sig9(cert.min_root_modulus) << ", margin " << sig9(cert.margin) << ")\n";
}

Complex parse_complex_flag(const std::string& flag, const std::string& text) {
  std::stringstream ss(text);
  double re = 0.0;
  double im = 0.0;
  char comma = 0;
  if (!(ss >> re) || !(ss >> comma) || comma != ',' || !(ss >> im) || !(ss >> std::ws).eof()) {
    throw UsageError(flag + " expects RE,IM");
  }
  return {re, im};
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Circle extrema and lower bounds for the maximum modulus of complex polynomials"};
  app.require_subcommand(1);

  // analyze
  PolySource analyze_src;
  double analyze_r = 0.0;
  std::optional<double> analyze_R, analyze_K;
  std::optional<int> analyze_mu;
  Format analyze_format = Format::table;
  std::string analyze_output;
  auto* analyze = app.add_subcommand("analyze", "Evaluate every bound for M(p,r) and compare with the measured value");
  add_poly_options(analyze, analyze_src);
  analyze->add_option("-r,--radius", analyze_r, "Inner radius r, 0<r<1")->required();
  analyze->add_option("-R,--outer-radius", analyze_R, "Second radius R, r<R<=1 (default 1)");
  analyze->add_option("-K,--disk-radius", analyze_K, "Zero-free disk radius K");
  analyze->add_option("--mu", analyze_mu, "Gap index override for the lacunary bounds");
  add_format_option(analyze, analyze_format);
  analyze->add_option("-o,--output", analyze_output, "Write output to a file");

  // roots
  PolySource roots_src;
  double roots_K = 1.0;
  Format roots_format = Format::table;
  auto* roots = app.add_subcommand("roots", "Find all zeros and certify a zero-free disk");
  add_poly_options(roots, roots_src);
  roots->add_option("-K,--disk-radius", roots_K, "Disk radius to certify (default 1)");
  add_format_option(roots, roots_format);

  // curve
  PolySource curve_src;
  double curve_from = 0.05;
  double curve_to = 0.95;
  int curve_steps = 19;
  std::optional<double> curve_R, curve_K;
  std::optional<int> curve_mu;
  Format curve_format = Format::csv;
  std::string curve_output;
  auto* curve = app.add_subcommand("curve", "Tabulate measured M(p,r) and every bound over an r grid");
  add_poly_options(curve, curve_src);
  curve->add_option("--from", curve_from, "First radius (default 0.05)");
  curve->add_option("--to", curve_to, "Last radius (default 0.95)");
  curve->add_option("--steps", curve_steps, "Number of radii, >= 2 (default 19)");
  curve->add_option("-R,--outer-radius", curve_R, "Second radius R (default 1)");
  curve->add_option("-K,--disk-radius", curve_K, "Zero-free disk radius K");
  curve->add_option("--mu", curve_mu, "Gap index override for the lacunary bounds");
  add_format_option(curve, curve_format);
  curve->add_option("-o,--output", curve_output, "Write output to a file");

  // fuzz
  GenConfig fuzz_config;
  std::string fuzz_properties;
  std::string fuzz_report;
  std::string fuzz_alpha, fuzz_beta;
  unsigned fuzz_threads = 0;
  std::optional<int> fuzz_mu;
  auto* fuzz = app.add_subcommand("fuzz", "Run the seeded property suite");
  fuzz->add_option("--seed", fuzz_config.seed, "RNG seed (default 42)");
  fuzz->add_option("--trials", fuzz_config.trials, "Number of trials (default 100)");
  fuzz->add_option("-K,--disk-radius", fuzz_config.K, "Zero-free radius of generated instances (default 1)");
  fuzz->add_option("--degree-min", fuzz_config.degree_min, "Smallest degree (default 2)");
  fuzz->add_option("--degree-max", fuzz_config.degree_max, "Largest degree (default 10)");
  fuzz->add_option("--mu", fuzz_mu, "Generate lacunary instances with this gap index");
  fuzz->add_option("--root-max", fuzz_config.root_modulus_max, "Largest generated root modulus (default 10)");
  fuzz->add_flag("--real", fuzz_config.real_coefficients, "Real-coefficient instances");
  fuzz->add_option("--alpha", fuzz_alpha, "RE,IM of alpha for the ((alpha+beta z)/2)^n family");
  fuzz->add_option("--beta", fuzz_beta, "RE,IM of beta for the ((alpha+beta z)/2)^n family");
  fuzz->add_option("--properties", fuzz_properties, "Comma-separated property ids (default all)");
  fuzz->add_option("--report", fuzz_report, "Write the JSON report to this path");
  fuzz->add_option("--threads", fuzz_threads, "Worker threads (0 = all cores)");

  // reproduce-paper
  Format example_format = Format::table;
  auto* reproduce = app.add_subcommand("reproduce-paper", "Recompute the published z^3+64 example values");
  add_format_option(reproduce, example_format);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kSuccess;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  }

  try {
    if (*analyze) {
      const Polynomial p = load_polynomial(analyze_src);
      if (!(analyze_r > 0.0 && analyze_r < 1.0)) throw UsageError("--radius must satisfy 0 < r < 1");
      BestBoundOptions opts;
      opts.R = analyze_R;
      opts.K = analyze_K;
      opts.mu = analyze_mu;
      const BoundSummary summary = best_lower_bound(p, analyze_r, opts);
      Sink sink(analyze_output, out);
      render_summary(p, analyze_r, opts, summary, analyze_format, sink.stream());
      return kSuccess;
    }
    if (*roots) {
      const Polynomial p = load_polynomial(roots_src);
      if (!(roots_K > 0.0)) throw UsageError("--disk-radius must be positive");
      render_roots(certify_zero_free(p, roots_K), roots_format, out);
      return kSuccess;
    }
    if (*curve) {
      const Polynomial p = load_polynomial(curve_src);
      if (!(curve_from > 0.0 && curve_from < curve_to && curve_to < 1.0)) {
        throw UsageError("curve requires 0 < from < to < 1");
      }
      if (curve_steps < 2) throw UsageError("--steps must be >= 2");
      std::vector<double> grid(static_cast<std::size_t>(curve_steps));
      for (int i = 0; i < curve_steps; ++i) {
        grid[static_cast<std::size_t>(i)] = curve_from + (curve_to - curve_from) * i / (curve_steps - 1);
      }
      grid.back() = curve_to;
      BestBoundOptions opts;
      opts.R = curve_R;
      opts.K = curve_K;
      opts.mu = curve_mu;
      const auto rows = sharpness_scan(p, grid, opts);
      Sink sink(curve_output, out);
      render_curve(rows, curve_format, sink.stream());
      return kSuccess;
    }
    if (*fuzz) {
      fuzz_config.mu = fuzz_mu;
      if (fuzz_alpha.empty() != fuzz_beta.empty()) throw UsageError("--alpha and --beta go together");
      if (!fuzz_alpha.empty()) {
        fuzz_config.alpha_beta = std::pair{parse_complex_flag("--alpha", fuzz_alpha),
                                           parse_complex_flag("--beta", fuzz_beta)};
      }
      try {
        fuzz_config.validate();
      } catch (const Error& e) {
        throw UsageError(e.what());
      }
      std::vector<Property> properties;
      if (fuzz_properties.empty()) {
        properties.assign(kAllProperties.begin(), kAllProperties.end());
      } else {
        std::stringstream ss(fuzz_properties);
        std::string item;
        while (std::getline(ss, item, ',')) {
          const auto prop = property_from_string(item);
          if (!prop) throw UsageError("unknown property '" + item + "'");
          properties.push_back(*prop);
        }
      }
      std::ofstream report_file;
      if (!fuzz_report.empty()) {
        report_file.open(fuzz_report);
        if (!report_file) throw UsageError("cannot write " + fuzz_report);
      }

      const FuzzReport report = run_suite(fuzz_config, properties, fuzz_threads);
      if (report_file.is_open()) {
        report_file << to_json(report).dump(2) << '\n';
        if (!report_file) throw UsageError("failed writing " + fuzz_report);
      }

      std::uint64_t total = 0;
      for (const auto& [key, count] : report.checked) total += count;
      out << "seed " << fuzz_config.seed << ", trials " << fuzz_config.trials << ", K " << sig9(fuzz_config.K)
          << ", degrees " << fuzz_config.degree_min << ".." << fuzz_config.degree_max;
      if (fuzz_config.mu) out << ", mu " << *fuzz_config.mu;
      out << '\n';
      Table table({"property", "checked"});
      for (const auto& [key, count] : report.checked) table.add({key, std::to_string(count)});
      table.print(out);
      out << "checks: " << total << ", violations: " << report.violations.size()
          << ", statement-variant findings: " << report.findings.size()
          << ", incidents: " << report.incidents.size() << '\n';
      for (const auto& v : report.violations) {
        out << "  violation trial " << v.trial << " " << v.property << " " << v.check << ": bound "
            << sig9(v.bound) << " vs " << sig9(v.measured) << '\n';
      }
      if (!report.violations.empty()) return kViolationsFound;
      if (!report.incidents.empty()) return kNumericFailure;
      return kSuccess;
    }
    if (*reproduce) {
      render_examples(example_format, out);
      return kSuccess;
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const Error& e) {
    err << "error (" << to_string(e.kind()) << "): " << e.what() << '\n';
    return e.kind() == ErrorKind::numeric_failure ? kNumericFailure : kUsageError;
  }
  return kUsageError;
}

}  // namespace circlebound::cli
