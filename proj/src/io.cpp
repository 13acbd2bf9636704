#include "hlb/io.hpp"

#include <cerrno>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "hlb/errors.hpp"

namespace hlb {
namespace {

using nlohmann::json;

std::vector<std::string> split(std::string_view text, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = text.find(sep, start);
    out.emplace_back(text.substr(start, pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

double parse_double(const std::string& text) {
  if (text.empty()) throw ParseError("empty number");
  char* end = nullptr;
  errno = 0;
  const double value = std::strtod(text.c_str(), &end);
  if (end != text.c_str() + text.size() || errno == ERANGE) throw ParseError("malformed number '" + text + "'");
  return value;
}

int parse_int(const std::string& text) {
  const double value = parse_double(text);
  if (value != static_cast<int>(value)) throw ParseError("expected an integer, got '" + text + "'");
  return static_cast<int>(value);
}

std::string format_params(const std::map<std::string, double>& params) {
  std::string out;
  for (const auto& [key, value] : params) {
    if (!out.empty()) out += ';';
    out += key + "=" + format_exact(value);
  }
  return out;
}

std::map<std::string, double> parse_params(const std::string& text) {
  std::map<std::string, double> out;
  if (text.empty()) return out;
  for (const std::string& item : split(text, ';')) {
    const std::size_t eq = item.find('=');
    if (eq == std::string::npos) throw ParseError("malformed parameter '" + item + "'");
    out[item.substr(0, eq)] = parse_double(item.substr(eq + 1));
  }
  return out;
}

std::string format_fixed(double value, int decimals) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", decimals, value);
  return buf;
}

}  // namespace

std::string format_exact(double value) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", value);
  return buf;
}

HomogeneousPolynomial parse_polynomial(std::string_view json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("polynomial file is not valid JSON: ") + e.what());
  }
  try {
    const auto n = doc.at("n").get<long long>();
    const auto degree = doc.at("degree").get<long long>();
    if (n < 1 || degree < 1) throw ParseError("polynomial file needs n >= 1 and degree >= 1");
    std::vector<std::pair<MultiIndex, Complex>> terms;
    for (const json& term : doc.at("terms")) {
      MultiIndex alpha;
      for (const json& a : term.at("alpha")) {
        const auto k = a.get<long long>();
        if (k < 0) throw ParseError("negative exponent in alpha");
        alpha.push_back(static_cast<unsigned>(k));
      }
      terms.emplace_back(std::move(alpha), Complex{term.at("re").get<double>(), term.at("im").get<double>()});
    }
    return HomogeneousPolynomial(static_cast<std::size_t>(n), static_cast<unsigned>(degree), terms);
  } catch (const json::exception& e) {
    throw ParseError(std::string("malformed polynomial file: ") + e.what());
  } catch (const DomainError& e) {
    throw ParseError(std::string("invalid polynomial: ") + e.what());
  }
}

HomogeneousPolynomial read_polynomial_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open polynomial file '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_polynomial(buffer.str());
}

std::string format_polynomial(const HomogeneousPolynomial& poly) {
  std::string out = "{\n  \"n\": " + std::to_string(poly.dimension()) + ",\n  \"degree\": " +
                    std::to_string(poly.degree()) + ",\n  \"terms\": [";
  bool first = true;
  for (const auto& [alpha, a] : poly.terms()) {
    out += first ? "\n" : ",\n";
    first = false;
    out += "    {\"alpha\": [";
    for (std::size_t j = 0; j < alpha.size(); ++j) {
      if (j != 0) out += ", ";
      out += std::to_string(alpha[j]);
    }
    out += "], \"re\": " + format_exact(a.real()) + ", \"im\": " + format_exact(a.imag()) + "}";
  }
  out += first ? "]\n}\n" : "\n  ]\n}\n";
  return out;
}

void write_polynomial_file(const std::string& path, const HomogeneousPolynomial& poly) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ParseError("cannot write polynomial file '" + path + "'");
  out << format_polynomial(poly);
}

OutputFormat parse_output_format(std::string_view name) {
  if (name == "text") return OutputFormat::Text;
  if (name == "csv") return OutputFormat::Csv;
  if (name == "json") return OutputFormat::Json;
  throw ParseError("unknown output format '" + std::string(name) + "'");
}

std::string format_rows(const std::vector<TableRow>& rows, OutputFormat format) {
  std::ostringstream out;
  switch (format) {
    case OutputFormat::Csv:
      out << kCsvHeader << '\n';
      for (const TableRow& row : rows) {
        out << row.m << ',' << row.p.to_string() << ',';
        if (row.report) {
          out << to_string(row.report->method) << ',' << format_exact(row.report->value) << ','
              << (row.report->certified ? "true" : "false") << ',' << format_params(row.report->parameters);
        } else {
          out << to_string(row.method) << ",out-of-domain,false,";
        }
        out << '\n';
      }
      break;
    case OutputFormat::Json: {
      json array = json::array();
      for (const TableRow& row : rows) {
        json obj = {{"m", row.m}, {"p", row.p.to_string()}};
        if (row.report) {
          obj["method"] = to_string(row.report->method);
          obj["status"] = "ok";
          obj["value"] = row.report->value;
          obj["certified"] = row.report->certified;
          obj["params"] = row.report->parameters;
        } else {
          obj["method"] = to_string(row.method);
          obj["status"] = "out-of-domain";
          obj["error"] = row.error;
        }
        array.push_back(std::move(obj));
      }
      out << array.dump(2) << '\n';
      break;
    }
    case OutputFormat::Text: {
      char line[160];
      std::snprintf(line, sizeof line, "%4s  %8s  %-14s  %12s  %s\n", "m", "p", "method", "value", "certified");
      out << line;
      for (const TableRow& row : rows) {
        if (row.report) {
          std::snprintf(line, sizeof line, "%4d  %8s  %-14s  %12s  %s", row.m, row.p.to_string().c_str(),
                        to_string(row.report->method).c_str(), format_fixed(row.report->value, 6).c_str(),
                        row.report->certified ? "certified" : "NOT certified");
          out << line;
          if (!row.report->parameters.empty()) out << "  [" << format_params(row.report->parameters) << ']';
        } else {
          std::snprintf(line, sizeof line, "%4d  %8s  %-14s  %12s", row.m, row.p.to_string().c_str(),
                        to_string(row.method).c_str(), "out-of-domain");
          out << line;
        }
        out << '\n';
      }
      break;
    }
  }
  return out.str();
}

std::vector<TableRow> parse_rows_csv(std::string_view text) {
  std::vector<std::string> lines = split(text, '\n');
  while (!lines.empty() && lines.back().empty()) lines.pop_back();
  if (lines.empty() || lines.front() != kCsvHeader) throw ParseError("missing CSV header");
  std::vector<TableRow> rows;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const std::vector<std::string> cells = split(lines[i], ',');
    if (cells.size() != 6) throw ParseError("CSV row " + std::to_string(i) + " does not have 6 columns");
    TableRow row;
    row.m = parse_int(cells[0]);
    row.p = ExtendedExponent::parse(cells[1]);
    row.method = parse_bound_method(cells[2]);
    if (cells[3] != "out-of-domain") {
      BoundReport report;
      report.m = row.m;
      report.p = row.p;
      report.method = row.method;
      report.value = parse_double(cells[3]);
      if (cells[4] != "true" && cells[4] != "false") throw ParseError("certified must be true or false");
      report.certified = cells[4] == "true";
      report.parameters = parse_params(cells[5]);
      row.report = std::move(report);
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

std::vector<TableRow> parse_rows_json(std::string_view text) {
  std::vector<TableRow> rows;
  try {
    for (const json& obj : json::parse(text)) {
      TableRow row;
      row.m = obj.at("m").get<int>();
      row.p = ExtendedExponent::parse(obj.at("p").get<std::string>());
      row.method = parse_bound_method(obj.at("method").get<std::string>());
      if (obj.at("status").get<std::string>() == "ok") {
        BoundReport report;
        report.m = row.m;
        report.p = row.p;
        report.method = row.method;
        report.value = obj.at("value").get<double>();
        report.certified = obj.at("certified").get<bool>();
        report.parameters = obj.at("params").get<std::map<std::string, double>>();
        row.report = std::move(report);
      } else {
        row.error = obj.value("error", "");
      }
      rows.push_back(std::move(row));
    }
  } catch (const json::exception& e) {
    throw ParseError(std::string("malformed report JSON: ") + e.what());
  }
  return rows;
}

std::string format_report(const BoundReport& report, OutputFormat format) {
  TableRow row{report.m, report.p, report.method, report, {}};
  return format_rows({row}, format);
}

}  // namespace hlb
