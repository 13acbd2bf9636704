// hlb: bounds for the complex polynomial Hardy-Littlewood constants.
//
// Exit codes: 0 success, 1 verification failure, 2 domain error,
// 3 input/parse error.

#include <cstdio>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "hlb/acceptance.hpp"
#include "hlb/bounds.hpp"
#include "hlb/errors.hpp"
#include "hlb/exponents.hpp"
#include "hlb/io.hpp"
#include "hlb/search.hpp"
#include "hlb/supnorm.hpp"

namespace {

constexpr int kExitVerifyFailed = 1;
constexpr int kExitDomain = 2;
constexpr int kExitInput = 3;

using hlb::ExtendedExponent;

std::string fixed(double value, int decimals = 6) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", decimals, value);
  return buf;
}

/// p-list token: "inf", a rational ("8", "5/2", "6.5"), or a multiple of m
/// such as "2m", "4m+2", "2m-1".
ExtendedExponent resolve_p_token(const std::string& token, int m) {
  const std::size_t pos = token.find('m');
  if (pos == std::string::npos) return ExtendedExponent::parse(token);
  const hlb::Rational factor = pos == 0 ? hlb::Rational(1) : hlb::Rational::parse(token.substr(0, pos));
  hlb::Rational value = factor * hlb::Rational(m);
  const std::string rest = token.substr(pos + 1);
  if (!rest.empty()) {
    if (rest[0] != '+' && rest[0] != '-') throw hlb::ParseError("malformed p token '" + token + "'");
    const hlb::Rational shift = hlb::Rational::parse(rest.substr(1));
    value = rest[0] == '+' ? value + shift : value - shift;
  }
  return ExtendedExponent::finite(value);
}

struct BoundOptions {
  std::string kind;
  int m = 2;
  std::string p;
  double eps = 1.0;
  double cmult = 1.0;
  std::string format = "text";
};

hlb::BoundReport compute_bound(hlb::BoundMethod method, int m, const ExtendedExponent& p, double eps, double cmult) {
  switch (method) {
    case hlb::BoundMethod::Main:
      return hlb::lower_bound_main(m, p);
    case hlb::BoundMethod::Thm777:
      return hlb::lower_bound_777(m, p, eps);
    case hlb::BoundMethod::UpperFactor:
      return hlb::upper_bound(m, p, cmult);
    case hlb::BoundMethod::Best:
      return hlb::best_lower_bound(m, p);
    case hlb::BoundMethod::Quotient:
      return hlb::certified_quotient(hlb::WitnessFamily::pm(m), p);
    case hlb::BoundMethod::BhReference: {
      if (p.is_finite()) throw hlb::DomainError("the Bohnenblust-Hille reference applies to p = inf only");
      hlb::BoundReport report{m, p, method, hlb::bh_reference_lower(m), true, {}};
      return report;
    }
    case hlb::BoundMethod::RealReference: {
      hlb::BoundReport report{m, p, method, hlb::real_reference_lower(m, p), true, {}};
      report.parameters["real_scalars"] = 1.0;
      return report;
    }
  }
  throw hlb::DomainError("unsupported method");
}

hlb::BoundMethod method_from_cli(const std::string& name) {
  if (name == "upper") return hlb::BoundMethod::UpperFactor;
  return hlb::parse_bound_method(name);
}

int run_exponent(int m, const std::string& p_text) {
  const ExtendedExponent p = ExtendedExponent::parse(p_text);
  const hlb::Rational rho = hlb::exponent_for(m, p);
  std::cout << rho.to_string() << " (" << fixed(rho.to_double()) << ")\n";
  return 0;
}

int run_bound(const BoundOptions& o) {
  const ExtendedExponent p = ExtendedExponent::parse(o.p);
  const hlb::BoundReport report = compute_bound(method_from_cli(o.kind), o.m, p, o.eps, o.cmult);
  std::cout << hlb::format_report(report, hlb::parse_output_format(o.format));
  return 0;
}

struct NormOptions {
  std::string file;
  std::string p;
  hlb::OptimizerConfig config;
  std::string format = "text";
};

int run_norm(const NormOptions& o) {
  const hlb::HomogeneousPolynomial poly = hlb::read_polynomial_file(o.file);
  if (poly.is_zero()) throw hlb::ParseError("polynomial file has no non-zero terms");
  const ExtendedExponent p = ExtendedExponent::parse(o.p);
  const hlb::OutputFormat format = hlb::parse_output_format(o.format);
  const hlb::NormEstimate est = hlb::supnorm_search(poly, p, o.config);

  if (format == hlb::OutputFormat::Json) {
    nlohmann::json doc = {{"p", p.to_string()},
                          {"value", est.value},
                          {"status", hlb::to_string(est.status)},
                          {"starts_used", est.starts_used},
                          {"kind", "lower-estimate"}};
    nlohmann::json point = nlohmann::json::array();
    for (const auto& z : est.maximizer) point.push_back({z.real(), z.imag()});
    doc["maximizer"] = point;
    std::cout << doc.dump(2) << '\n';
  } else if (format == hlb::OutputFormat::Csv) {
    std::cout << "p,value,status,starts_used\n"
              << p.to_string() << ',' << hlb::format_exact(est.value) << ',' << hlb::to_string(est.status) << ','
              << est.starts_used << '\n';
  } else {
    std::cout << "sup-norm lower estimate on l_" << p.to_string() << "^" << poly.dimension() << ": "
              << fixed(est.value, 9) << '\n'
              << "status: " << hlb::to_string(est.status) << " (" << est.starts_used << " starts)\n"
              << "maximizer:";
    for (const auto& z : est.maximizer) std::cout << " (" << hlb::format_exact(z.real()) << ", " << hlb::format_exact(z.imag()) << ")";
    std::cout << '\n';
  }
  return 0;
}

struct TableOptions {
  int m_min = 2;
  int m_max = 5;
  std::vector<std::string> p_tokens{"2m"};
  std::vector<std::string> methods{"main"};
  double eps = 1.0;
  double cmult = 1.0;
  std::string format = "text";
};

int run_table(const TableOptions& o) {
  const hlb::OutputFormat format = hlb::parse_output_format(o.format);
  std::vector<hlb::BoundMethod> methods;
  for (const std::string& name : o.methods) methods.push_back(method_from_cli(name));
  if (o.m_min > o.m_max || o.p_tokens.empty() || methods.empty()) throw hlb::DomainError("empty table grid");

  std::vector<hlb::TableRow> rows;
  for (int m = o.m_min; m <= o.m_max; ++m) {
    for (const std::string& token : o.p_tokens) {
      for (hlb::BoundMethod method : methods) {
        hlb::TableRow row;
        row.m = m;
        row.method = method;
        try {
          row.p = resolve_p_token(token, m);
          row.report = compute_bound(method, m, row.p, o.eps, o.cmult);
        } catch (const hlb::DomainError& e) {
          row.error = e.what();
        }
        rows.push_back(std::move(row));
      }
    }
  }
  std::cout << hlb::format_rows(rows, format);
  return 0;
}

struct SearchOptions {
  std::string mode;
  int n = 2;
  int m = 2;
  std::string p;
  hlb::SearchConfig config;
  std::string start_file;
  std::string witness_out;
  std::string format = "text";
};

int run_search(const SearchOptions& o) {
  const ExtendedExponent p = ExtendedExponent::parse(o.p);
  const hlb::OutputFormat format = hlb::parse_output_format(o.format);
  hlb::SearchResult result;
  if (o.mode == "c") {
    result = hlb::optimize_c(o.m, p, o.config);
  } else {
    std::optional<hlb::HomogeneousPolynomial> start;
    if (!o.start_file.empty()) start = hlb::read_polynomial_file(o.start_file);
    result = hlb::heuristic_witness_search(static_cast<std::size_t>(o.n), o.m, p, o.config, start);
  }
  if (!o.witness_out.empty()) hlb::write_polynomial_file(o.witness_out, result.witness);

  const char* marker = result.certified ? "CERTIFIED lower bound" : "HEURISTIC estimate (NOT certified)";
  if (format == hlb::OutputFormat::Json) {
    nlohmann::json doc = {{"mode", o.mode},
                          {"m", o.m},
                          {"p", p.to_string()},
                          {"value", result.best_value},
                          {"certified", result.certified},
                          {"params", result.parameters},
                          {"witness", nlohmann::json::parse(hlb::format_polynomial(result.witness))}};
    std::cout << doc.dump(2) << '\n';
  } else if (format == hlb::OutputFormat::Csv) {
    std::cout << "mode,m,p,value,certified\n"
              << o.mode << ',' << o.m << ',' << p.to_string() << ',' << hlb::format_exact(result.best_value) << ','
              << (result.certified ? "true" : "false") << '\n';
  } else {
    std::cout << marker << ": " << fixed(result.best_value, 9) << "  (m=" << o.m << ", p=" << p.to_string() << ")\n";
    for (const auto& [key, value] : result.parameters) std::cout << "  " << key << " = " << hlb::format_exact(value) << '\n';
    std::cout << "witness:\n" << hlb::format_polynomial(result.witness);
  }
  return 0;
}

struct VerifyOptions {
  std::vector<std::string> filter;
  std::string inject_fault;
  int property_cases = 200;
  bool quiet = false;
};

int run_verify(const VerifyOptions& o) {
  hlb::acceptance::Options options;
  options.groups = o.filter;
  if (!o.inject_fault.empty()) options.inject_fault = o.inject_fault;
  options.property_cases = o.property_cases;
  const auto results = hlb::acceptance::run(options);
  std::cout << hlb::acceptance::render(results, !o.quiet);
  const bool ok = hlb::acceptance::all_passed(results);
  std::cout << (ok ? "all checks passed\n" : "verification FAILED\n");
  return ok ? 0 : kExitVerifyFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Lower and upper bounds for complex polynomial Hardy-Littlewood constants"};
  app.require_subcommand(1);

  int exp_m = 2;
  std::string exp_p;
  auto* exponent = app.add_subcommand("exponent", "Optimal coefficient exponent for (m, p)");
  exponent->add_option("--m", exp_m, "Degree m >= 2")->required();
  exponent->add_option("--p", exp_p, "l_p index: rational or 'inf'")->required();

  BoundOptions bound_opts;
  auto* bound = app.add_subcommand("bound", "Lower/upper bound on C(m, p)");
  bound->add_option("kind", bound_opts.kind, "main | thm777 | upper | best")
      ->required()
      ->check(CLI::IsMember({"main", "thm777", "upper", "best"}));
  bound->add_option("--m", bound_opts.m, "Degree m >= 2")->required();
  bound->add_option("--p", bound_opts.p, "l_p index: rational or 'inf'")->required();
  bound->add_option("--eps", bound_opts.eps, "Offset above the threshold c (thm777)")->capture_default_str();
  bound->add_option("--cmult", bound_opts.cmult, "Multilinear constant >= 1 (upper)")->capture_default_str();
  bound->add_option("--format", bound_opts.format, "text | csv | json")->capture_default_str();

  NormOptions norm_opts;
  auto* norm = app.add_subcommand("norm", "Numerical sup-norm lower estimate of a polynomial file");
  norm->add_option("file", norm_opts.file, "Polynomial JSON file")->required();
  norm->add_option("--p", norm_opts.p, "l_p index: rational or 'inf'")->required();
  norm->add_option("--starts", norm_opts.config.starts, "Multi-start count")->capture_default_str();
  norm->add_option("--seed", norm_opts.config.seed, "Random seed")->capture_default_str();
  norm->add_option("--tol", norm_opts.config.gradient_tolerance, "Gradient tolerance")->capture_default_str();
  norm->add_option("--max-iter", norm_opts.config.max_iterations, "Iterations per start")->capture_default_str();
  norm->add_option("--format", norm_opts.format, "text | csv | json")->capture_default_str();

  TableOptions table_opts;
  auto* table = app.add_subcommand("table", "Grid of bounds over m and p");
  table->add_option("--m-min", table_opts.m_min)->capture_default_str();
  table->add_option("--m-max", table_opts.m_max)->capture_default_str();
  table->add_option("--p", table_opts.p_tokens, "p values: rational, 'inf', or multiples of m like 2m, 4m+2")
      ->delimiter(',')
      ->capture_default_str();
  table->add_option("--method", table_opts.methods,
                    "main, thm777, upper, best, quotient, bh-reference, real-reference")
      ->delimiter(',')
      ->capture_default_str();
  table->add_option("--eps", table_opts.eps)->capture_default_str();
  table->add_option("--cmult", table_opts.cmult)->capture_default_str();
  table->add_option("--format", table_opts.format, "text | csv | json")->capture_default_str();

  SearchOptions search_opts;
  auto* search = app.add_subcommand("search", "Optimize the Q_m family over c, or heuristic witness search");
  search->add_option("mode", search_opts.mode, "c | heuristic")->required()->check(CLI::IsMember({"c", "heuristic"}));
  search->add_option("--n", search_opts.n, "Dimension (heuristic)")->capture_default_str();
  search->add_option("--m", search_opts.m, "Degree m >= 2")->required();
  search->add_option("--p", search_opts.p, "l_p index")->required();
  search->add_option("--c-min", search_opts.config.c_min)->capture_default_str();
  search->add_option("--c-max", search_opts.config.c_max)->capture_default_str();
  search->add_option("--grid", search_opts.config.grid_points)->capture_default_str();
  search->add_option("--iterations", search_opts.config.refine_iterations,
                     "Golden-section steps (c) or proposals (heuristic)")
      ->capture_default_str();
  search->add_option("--seed", search_opts.config.seed)->capture_default_str();
  search->add_option("--limit", search_opts.config.coefficient_count_limit, "Maximum number of terms")
      ->capture_default_str();
  search->add_option("--start", search_opts.start_file, "Start polynomial file (heuristic)");
  search->add_option("--witness-out", search_opts.witness_out, "Write the best witness polynomial here");
  search->add_option("--format", search_opts.format, "text | csv | json")->capture_default_str();

  VerifyOptions verify_opts;
  auto* verify = app.add_subcommand("verify", "Run the reproduction checks; exit 0 iff all pass");
  verify->add_option("--filter", verify_opts.filter, "Groups to run (comma separated)")->delimiter(',');
  verify->add_option("--inject-fault", verify_opts.inject_fault, "Corrupt one group's values (self-test)");
  verify->add_option("--cases", verify_opts.property_cases, "Randomized cases per property")->capture_default_str();
  verify->add_flag("--quiet", verify_opts.quiet, "Only print the per-criterion summary");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitInput;
  }

  try {
    if (*exponent) return run_exponent(exp_m, exp_p);
    if (*bound) return run_bound(bound_opts);
    if (*norm) return run_norm(norm_opts);
    if (*table) return run_table(table_opts);
    if (*search) return run_search(search_opts);
    if (*verify) return run_verify(verify_opts);
  } catch (const hlb::DegenerateDomainError& e) {
    std::cerr << "degenerate domain: " << e.what() << '\n';
    return kExitDomain;
  } catch (const hlb::DomainError& e) {
    std::cerr << "domain error: " << e.what() << '\n';
    return kExitDomain;
  } catch (const hlb::ParseError& e) {
    std::cerr << "input error: " << e.what() << '\n';
    return kExitInput;
  } catch (const std::overflow_error& e) {
    std::cerr << "domain error: " << e.what() << '\n';
    return kExitDomain;
  }
  return kExitInput;
}
