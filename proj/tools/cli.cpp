#include "cli.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <ctime>
#include <fstream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "config.hpp"
#include "suites.hpp"
#include "zetasphere/errors.hpp"
#include "zetasphere/mero.hpp"
#include "zetasphere/modulus.hpp"
#include "zetasphere/specfun.hpp"
#include "zetasphere/zeros.hpp"
#include "zetasphere/zeta.hpp"

namespace zetasphere::cli {
namespace {

using nlohmann::json;

constexpr double kFirstZero = 14.134725141734694;
constexpr double kPrintedFirstZero = 14.1347;
constexpr double kPrintedAnchor = -0.05438;
constexpr double kPrintedC = 6.8046;

std::string num(double v) {
  if (v == 0.0) v = 0.0;  // drop the sign of zero
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

std::string num(Complex z) {
  const double im = z.imag() == 0.0 ? 0.0 : z.imag();
  return num(z.real()) + (std::signbit(im) ? "-" : "+") + num(std::fabs(im)) + "i";
}

std::string point(const ExtendedPoint& p) { return p.is_infinite() ? "inf" : num(p.value()); }

json complex_json(Complex z) { return {{"re", z.real()}, {"im", z.imag()}}; }

std::string timestamp() {
  std::time_t now = std::time(nullptr);
  if (const char* epoch = std::getenv("SOURCE_DATE_EPOCH"); epoch != nullptr && *epoch != '\0') {
    now = static_cast<std::time_t>(std::strtoll(epoch, nullptr, 10));
  }
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

std::string csv_banner() { return std::string("# zetasphere v") + ZETASPHERE_VERSION + "\n"; }

// Writes to `path`, or to `out` when path is empty or "-".
void emit(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << text;
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw DomainError("cannot write '" + path + "'");
  file << text;
}

int cmd_eval(const std::string& function, const std::string& literal, bool as_json, std::ostream& out) {
  const Complex s = parse_complex(literal);
  Complex value;
  json extra;
  if (function == "zeta") {
    value = zeta::zeta_eval(s);
  } else if (function == "eta") {
    value = zeta::eta_eval(s);
  } else if (function == "completed") {
    value = zeta::completed_zeta(s);
  } else if (function == "f") {
    value = modulus::f_factor(s);
  } else if (function == "f_abs") {
    const auto b = modulus::f_abs_closed(s);
    value = b.product;
    extra = {{"two_pow", b.two_pow}, {"pi_pow", b.pi_pow}, {"sin_abs", b.sin_abs}, {"gamma_abs", b.gamma_abs}};
  } else if (function == "gamma") {
    value = specfun::gamma(s);
  } else {
    value = specfun::digamma(s);
  }
  std::string note;
  if (function == "completed" && s == Complex(0.5, 0.0)) {
    note = "the printed value -0.05438 disagrees with this (discrepancy)";
  }
  if (as_json) {
    json j{{"function", function}, {"s", complex_json(s)}, {"value", complex_json(value)}};
    if (!extra.is_null()) j["breakdown"] = extra;
    if (!note.empty()) j["note"] = note;
    out << j.dump(2) << "\n";
  } else {
    out << num(value) << "\n";
    if (!note.empty()) out << "# note: " << note << "\n";
  }
  return kExitOk;
}

int cmd_zeros(double from, double to, const Config& config, const std::string& path, std::string format,
              std::ostream& out) {
  const auto records = zeros::scan_zeros(from, to, config.scan_step, config.workers);
  if (format.empty()) format = path.size() > 5 && path.ends_with(".json") ? "json" : "csv";
  std::ostringstream text;
  if (format == "json") {
    json rows = json::array();
    for (const auto& r : records) {
      rows.push_back({{"ordinate", r.ordinate},
                      {"bracket", {r.bracket.first, r.bracket.second}},
                      {"residual", r.residual},
                      {"criterion", r.criterion}});
    }
    json j{{"zeros", rows}, {"meta", {{"version", ZETASPHERE_VERSION}, {"from", from}, {"to", to},
                                      {"step", config.scan_step}, {"config_digest", config.digest()}}}};
    text << j.dump(2) << "\n";
  } else {
    text << csv_banner() << "ordinate,residual,criterion\n";
    for (const auto& r : records) text << num(r.ordinate) << "," << num(r.residual) << "," << num(r.criterion) << "\n";
  }
  emit(path, text.str(), out);
  return kExitOk;
}

int cmd_verify(const std::string& suite, const std::string& json_path, const Config& config, std::ostream& out) {
  const VerificationItems items = run_suite(suite, config);
  int passed = 0;
  int failed = 0;
  int flagged = 0;
  char line[512];
  for (const auto& item : items) {
    const Status st = item.status();
    passed += st == Status::kPass;
    failed += st == Status::kFail;
    flagged += st == Status::kDiscrepancy;
    std::snprintf(line, sizeof line, "%-11s %s: computed=%.12g target=%.12g tol=%.3g", to_string(st),
                  item.name.c_str(), item.computed, item.target, item.tolerance);
    out << line;
    if (!item.note.empty() && st != Status::kPass) out << " (" << item.note << ")";
    out << "\n";
  }
  out << items.size() << " items: " << passed << " pass, " << failed << " fail, " << flagged << " discrepancy\n";
  if (!json_path.empty()) {
    json rows = json::array();
    for (const auto& item : items) {
      json row{{"name", item.name},
               {"target", item.target},
               {"computed", item.computed},
               {"tolerance", item.tolerance},
               {"status", to_string(item.status())}};
      if (!item.note.empty()) row["note"] = item.note;
      rows.push_back(std::move(row));
    }
    json j{{"items", rows},
           {"meta", {{"version", ZETASPHERE_VERSION}, {"timestamp", timestamp()}, {"config_digest", config.digest()},
                     {"suite", suite}}}};
    emit(json_path, j.dump(2) + "\n", out);
  }
  return failed == 0 ? kExitOk : kExitVerificationFailed;
}

void describe(const mero::ZetaHat& hat, std::ostream& out) {
  out << "ordinate = " << num(hat.ordinate) << "\n";
  out << "anchor = " << num(hat.anchor) << "\n";
  out << "c = " << num(hat.map.constant) << "\n";
  out << "divisor =";
  const mero::Divisor divisor = mero::principal_divisor(hat.map);
  for (const auto& [q, n] : divisor.entries()) {
    out << " " << (n > 0 ? "+" : "") << n << "[" << point(q) << "]";
  }
  out << "\n";
  out << "degree = " << hat.branch.degree << "\n";
  out << "ramification =";
  for (const auto& [q, e] : hat.branch.ramification) out << " (" << point(q) << ", e=" << e << ")";
  out << "\n";
  out << "b = " << hat.branch.total_b << "\n";
  const auto rh = mero::riemann_hurwitz_check(hat.branch, 2, 2);
  out << "riemann-hurwitz 2 = " << hat.branch.degree << "*2 - " << hat.branch.total_b << ": "
      << (rh.holds ? "holds" : "fails") << (rh.b_even ? "" : " (b odd)") << "\n";
}

int cmd_extend(double ordinate, bool ordinate_given, bool paper_anchor, const std::string& json_path,
               std::ostream& out) {
  const double t0 = ordinate_given ? ordinate : (paper_anchor ? kPrintedFirstZero : kFirstZero);
  const Complex computed_anchor = zeta::completed_zeta(0.5);
  const auto hat = mero::build_zeta_hat(t0, paper_anchor ? Complex(kPrintedAnchor) : computed_anchor);
  describe(hat, out);
  const auto with_printed = mero::build_zeta_hat(t0, kPrintedAnchor);
  const auto with_computed = mero::build_zeta_hat(t0, computed_anchor);
  const VerificationItem flag = claim("c as printed", kPrintedC, with_printed.map.constant.real(), 1e-4);
  out << "variant printed anchor " << num(kPrintedAnchor) << ": c = " << num(with_printed.map.constant.real())
      << " [" << to_string(flag.status()) << " vs printed " << num(kPrintedC) << "]\n";
  out << "variant computed anchor " << num(computed_anchor.real()) << ": c = "
      << num(with_computed.map.constant.real()) << "\n";
  if (!json_path.empty()) {
    json zeros_j = json::array();
    json poles_j = json::array();
    for (const auto& [z, m] : hat.map.zeros) zeros_j.push_back({{"point", complex_json(z)}, {"order", m}});
    for (const auto& [p, k] : hat.map.poles) poles_j.push_back({{"point", complex_json(p)}, {"order", k}});
    json ram = json::array();
    for (const auto& [q, e] : hat.branch.ramification) ram.push_back({{"point", point(q)}, {"index", e}});
    json j{{"ordinate", t0},
           {"anchor", complex_json(hat.anchor)},
           {"constant", complex_json(hat.map.constant)},
           {"zeros", zeros_j},
           {"poles", poles_j},
           {"branch", {{"degree", hat.branch.degree}, {"ramification", ram}, {"b", hat.branch.total_b}}},
           {"variants",
            {{"printed_anchor_c", with_printed.map.constant.real()},
             {"computed_anchor_c", with_computed.map.constant.real()},
             {"printed_c", kPrintedC},
             {"printed_c_status", to_string(flag.status())}}}};
    emit(json_path, j.dump(2) + "\n", out);
  }
  return kExitOk;
}

int cmd_plotdata(const std::string& what, const std::string& range_text, const std::string& yrange_text,
                 const std::string& path, std::ostream& out) {
  std::ostringstream text;
  text << csv_banner();
  if (what == "zline") {
    const Range r = parse_range(range_text.empty() ? "0:50:0.05" : range_text);
    text << "# columns: t,Z(t) = Re completed_zeta(1/2+it)\n";
    for (std::size_t k = 0; k < r.count(); ++k) text << num(r.at(k)) << "," << num(zeros::z_real(r.at(k))) << "\n";
  } else {
    const Range xr = parse_range(range_text.empty() ? "0.05:0.95:0.05" : range_text);
    const Range yr = parse_range(yrange_text.empty() ? "-10:10:0.5" : yrange_text);
    const bool fabs = what == "fabs";
    text << (fabs ? "# columns: x,y,|f(x+iy)|\n" : "# columns: x,y,|zeta(x+iy)|\n");
    for (std::size_t i = 0; i < xr.count(); ++i) {
      for (std::size_t j = 0; j < yr.count(); ++j) {
        const Complex s(xr.at(i), yr.at(j));
        const double v = fabs ? modulus::f_abs_closed(s).product : std::abs(zeta::zeta_eval(s));
        text << num(s.real()) << "," << num(s.imag()) << "," << num(v) << "\n";
      }
    }
  }
  emit(path, text.str(), out);
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Numerical verification toolkit for the Riemann zeta function on the Riemann sphere", "zetasphere"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string("zetasphere ") + ZETASPHERE_VERSION);

  Config config;
  try {
    config = load_config();
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  std::string function;
  std::string literal;
  bool as_json = false;
  auto* eval = app.add_subcommand("eval", "Evaluate a function at a complex point");
  eval->add_option("function", function, "zeta, eta, completed, f, f_abs, gamma or digamma")
      ->required()
      ->check(CLI::IsMember({"zeta", "eta", "completed", "f", "f_abs", "gamma", "digamma"}));
  eval->add_option("s", literal, "Complex literal such as 0.5+14.1i")->required();
  eval->add_flag("--json", as_json, "Print JSON");

  double from = 0.0;
  double to = 50.0;
  std::string out_path;
  std::string format;
  auto* zeros_cmd = app.add_subcommand("zeros", "Scan the critical line for zeros");
  zeros_cmd->add_option("--from", from, "Start ordinate")->capture_default_str();
  zeros_cmd->add_option("--to", to, "End ordinate")->capture_default_str();
  zeros_cmd->add_option("--step", config.scan_step, "Scan step")->capture_default_str();
  zeros_cmd->add_option("--workers", config.workers, "Worker threads")->capture_default_str();
  zeros_cmd->add_option("--out", out_path, "Output file (default stdout)");
  zeros_cmd->add_option("--format", format, "csv or json")->check(CLI::IsMember({"csv", "json"}));

  std::string suite;
  std::string json_path;
  auto* verify = app.add_subcommand("verify", "Run a verification suite");
  verify->add_option("--suite", suite, "Suite name")->required()->check(CLI::IsMember(suite_names()));
  verify->add_option("--json", json_path, "Write the JSON report here");
  verify->add_option("--workers", config.workers, "Worker threads for zero scans")->capture_default_str();

  double ordinate = 0.0;
  bool paper_anchor = false;
  auto* extend = app.add_subcommand("extend", "Build the rational extension of the completed zeta");
  auto* ordinate_opt = extend->add_option("--ordinate", ordinate, "Ordinate t0 of the zero pair");
  extend->add_flag("--paper-anchor", paper_anchor, "Use the printed anchor -0.05438 and ordinate 14.1347");
  extend->add_option("--json", json_path, "Write the JSON summary here");

  std::string what;
  std::string range_text;
  std::string yrange_text;
  auto* plot = app.add_subcommand("plotdata", "Emit CSV data for plots");
  plot->add_option("--what", what, "zline, fabs or strip-surface")
      ->required()
      ->check(CLI::IsMember({"zline", "fabs", "strip-surface"}));
  plot->add_option("--range", range_text, "start:stop:step (t for zline, x otherwise)");
  plot->add_option("--yrange", yrange_text, "start:stop:step for y");
  plot->add_option("--out", out_path, "Output file (default stdout)");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (config.workers < 1 || config.workers > 256) throw DomainError("workers must lie in [1, 256]");
    if (*eval) return cmd_eval(function, literal, as_json, out);
    if (*zeros_cmd) return cmd_zeros(from, to, config, out_path, format, out);
    if (*verify) return cmd_verify(suite, json_path, config, out);
    if (*extend) return cmd_extend(ordinate, ordinate_opt->count() > 0, paper_anchor, json_path, out);
    if (*plot) return cmd_plotdata(what, range_text, yrange_text, out_path, out);
  } catch (const PoleError& e) {
    err << "error: " << e.what() << " (residue " << num(e.residue()) << ")\n";
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace zetasphere::cli
