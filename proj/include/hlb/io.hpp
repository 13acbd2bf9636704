#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hlb/bounds.hpp"
#include "hlb/polynomial.hpp"

namespace hlb {

// Polynomial files are UTF-8 JSON:
//   {"n": 2, "degree": 2, "terms": [{"alpha": [1, 1], "re": 1, "im": 0}]}
// Every alpha has length n and sums to degree; alphas are unique.

/// Throws ParseError on malformed JSON or a term violating the invariants.
HomogeneousPolynomial parse_polynomial(std::string_view json_text);
HomogeneousPolynomial read_polynomial_file(const std::string& path);

/// Canonical layout: terms sorted by alpha, numbers with 17 significant
/// digits, one term per line. Parsing and re-writing a canonical file
/// reproduces it byte for byte.
std::string format_polynomial(const HomogeneousPolynomial& poly);
void write_polynomial_file(const std::string& path, const HomogeneousPolynomial& poly);

enum class OutputFormat { Text, Csv, Json };
OutputFormat parse_output_format(std::string_view name);

/// One cell of a bound table; `report` is empty when (m, p) lies outside the
/// requested method's domain.
struct TableRow {
  int m = 2;
  ExtendedExponent p = ExtendedExponent::infinity();
  BoundMethod method = BoundMethod::Main;
  std::optional<BoundReport> report;
  std::string error;

  friend bool operator==(const TableRow& a, const TableRow& b) {
    return a.m == b.m && a.p == b.p && a.method == b.method && a.report == b.report;
  }
};

inline constexpr std::string_view kCsvHeader = "m,p,method,value,certified,params";

/// Exact decimal rendering (17 significant digits).
std::string format_exact(double value);

std::string format_rows(const std::vector<TableRow>& rows, OutputFormat format);
std::vector<TableRow> parse_rows_csv(std::string_view text);
std::vector<TableRow> parse_rows_json(std::string_view text);

/// Single report rendered like a one-row table.
std::string format_report(const BoundReport& report, OutputFormat format);

}  // namespace hlb
