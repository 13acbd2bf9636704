#include "hlb/acceptance.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <numeric>
#include <sstream>

#include <boost/multiprecision/cpp_dec_float.hpp>

#include "hlb/bounds.hpp"
#include "hlb/errors.hpp"
#include "hlb/exponents.hpp"
#include "hlb/polynomial.hpp"
#include "hlb/random.hpp"
#include "hlb/supnorm.hpp"

namespace hlb::acceptance {
namespace {

using Decimal50 = boost::multiprecision::cpp_dec_float_50;

std::string num(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.10g", x);
  return buf;
}

ExtendedExponent P(long long value) { return ExtendedExponent::finite(Rational(value)); }

/// Collects checks for one criterion; `tamper` corrupts values when the
/// fault-injection hook targets this group.
class Recorder {
public:
  explicit Recorder(bool fault) : fault_(fault) {}

  double tamper(double x) const { return fault_ ? x * 1.01 + 0.01 : x; }
  Rational tamper(const Rational& x) const { return fault_ ? x + Rational(1, 1000) : x; }
  bool faulty() const { return fault_; }

  void near(std::string name, double actual, double expected, double tol) {
    actual = tamper(actual);
    checks.push_back({std::move(name), num(expected), num(actual), tol, std::abs(actual - expected) <= tol});
  }
  void at_most(std::string name, double actual, double bound, double tol) {
    actual = tamper(actual);
    checks.push_back({std::move(name), "<= " + num(bound), num(actual), tol, actual <= bound + tol});
  }
  void exact(std::string name, const Rational& actual, const Rational& expected) {
    const Rational a = tamper(actual);
    checks.push_back({std::move(name), expected.to_string(), a.to_string(), 0.0, a == expected});
  }
  void holds(std::string name, bool ok, std::string expected, std::string actual) {
    if (fault_) ok = false;
    checks.push_back({std::move(name), std::move(expected), std::move(actual), 0.0, ok});
  }

  std::vector<Check> checks;

private:
  bool fault_;
};

void anchor(Recorder& r) {
  r.near("lower_bound_main(2,4) = sqrt(2)", lower_bound_main(2, P(4)).value, std::sqrt(2.0), 1e-12);
  const double cmult = 3.1915 / std::pow(2.0, 1.5);
  r.near("upper_bound(2,4,Cmult=3.1915/2^1.5)", upper_bound(2, P(4), cmult).value, 3.1915, 1e-4);
  const double lo = lower_bound_main(2, P(4)).value;
  const double hi = upper_bound(2, P(4), cmult).value;
  r.holds("sqrt(2) <= C(2,4) <= 3.1915 sandwich ordered", lo <= hi, "lower <= upper", num(lo) + " <= " + num(hi));
}

void exponents(Recorder& r) {
  for (int m = 2; m <= 10; ++m) r.exact("hl_exponent(" + std::to_string(m) + ",2m)", hl_exponent(m, P(2 * m)), 2);
  for (int m = 2; m <= 10; ++m)
    r.exact("hl_exponent(" + std::to_string(m) + ",inf)", hl_exponent(m, ExtendedExponent::infinity()),
            Rational(2 * m, m + 1));
  r.exact("hl_exponent_low(3,5)", hl_exponent_low(3, P(5)), Rational(5, 2));
}

void norms(Recorder& r) {
  const OptimizerConfig defaults;
  for (int p : {4, 8, 16}) {
    const double found = supnorm_search(witness_Pm(2), P(p), defaults).value;
    r.near("supnorm_search(P2, p=" + std::to_string(p) + ") vs 2^{-2/p}", found, std::exp2(-2.0 / p), 1e-6);
  }
  for (double c : {0.0, 1.0, 2.0, 5.0}) {
    const double found = supnorm_search(witness_Q2(c), ExtendedExponent::infinity(), defaults).value;
    r.near("supnorm_search(Q2~(c=" + num(c) + "), inf) vs sqrt(4+c^2)", found, std::sqrt(4.0 + c * c), 1e-6);
  }
}

void soundness(Recorder& r) {
  RandomStream rng(20240607);
  const OptimizerConfig defaults;
  for (int m = 2; m <= 5; ++m) {
    for (int p : {2 * m, 4 * m}) {
      const std::string tag = "m=" + std::to_string(m) + " p=" + std::to_string(p);
      double worst_excess = -1e300;
      for (int k = 0; k < 20; ++k) {
        const double c = rng.uniform(0.0, 10.0);
        const double found = supnorm_search(witness_Qm(m, c), P(p), defaults).value;
        const double bound = closed_form_norm(WitnessFamily::qm(m, c), P(p)).value;
        worst_excess = std::max(worst_excess, found - bound);
      }
      r.at_most("Q_m " + tag + ": max over 20 c of search - closed form", worst_excess, 0.0, 1e-9);

      const double found = supnorm_search(witness_Pm(m), P(p), defaults).value;
      // Lagrange multipliers: max prod r_j on sum r_j^p = 1 is at r_j = m^{-1/p}.
      const double lagrange = std::pow(static_cast<double>(m), -static_cast<double>(m) / p);
      r.near("P_m " + tag + ": search vs m^{-m/p}", found, lagrange, 1e-5);
      r.at_most("P_m " + tag + ": search vs closed-form bound", found,
                closed_form_norm(WitnessFamily::pm(m), P(p)).value, 1e-9);
    }
  }
}

Decimal50 threshold_oracle(int m, int p) {
  using boost::multiprecision::pow;
  using boost::multiprecision::sqrt;
  const int k = m % 2 == 0 ? 4 : 6;
  const Decimal50 two(2), pp(p), mm(m);
  const Decimal50 top = pow(two, (2 * pp + k - 2 * mm) / pp);
  const Decimal50 sub = pow(two, (mm * pp + pp - 2 * mm) / (mm * pp));
  const Decimal50 bottom = 1 - pow(two, -(2 * mm - k) / pp);
  return sqrt((top - sub) / bottom);
}

void thm777(Recorder& r) {
  const struct {
    int m, p;
    double quoted;
  } anchors[] = {{4, 8, 1.681793}, {5, 10, 2.063890}};
  for (const auto& a : anchors) {
    const double oracle = threshold_oracle(a.m, a.p).convert_to<double>();
    const std::string tag = "(" + std::to_string(a.m) + "," + std::to_string(a.p) + ")";
    r.near("threshold_c" + tag + " vs 50-digit oracle", threshold_c(a.m, P(a.p)), oracle, 1e-5);
    r.near("50-digit oracle" + tag + " vs quoted value", oracle, a.quoted, 1e-5);
  }
  double min_margin = 1e300, min_gap = 1e300, worst_limit = 0.0;
  std::string where_margin, where_gap, where_limit;
  for (int m = 4; m <= 7; ++m) {
    for (int p : {2 * m, 2 * m + 4}) {
      const double main = lower_bound_main(m, P(p)).value;
      for (double eps : {0.01, 1.0, 100.0}) {
        const double value = lower_bound_777(m, P(p), eps).value;
        const std::string at = "m=" + std::to_string(m) + " p=" + std::to_string(p) + " eps=" + num(eps);
        if (value - 1.0 < min_margin) {
          min_margin = value - 1.0;
          where_margin = at;
        }
        if (main - value < min_gap) {
          min_gap = main - value;
          where_gap = at;
        }
      }
      const int k = m % 2 == 0 ? m - 2 : m - 3;
      const double limit_error = std::abs(lower_bound_777(m, P(p), 1e9).value - std::exp2(static_cast<double>(k) / p));
      if (limit_error > worst_limit) {
        worst_limit = limit_error;
        where_limit = "m=" + std::to_string(m) + " p=" + std::to_string(p);
      }
    }
  }
  r.holds("lower_bound_777 > 1 on grid", min_margin > 0.0, "min(value - 1) > 0",
          num(min_margin) + " at " + where_margin);
  r.holds("lower_bound_777 < lower_bound_main on grid", min_gap > 0.0, "min(main - 777) > 0",
          num(min_gap) + " at " + where_gap);
  r.at_most("max |777(eps=1e9) - 2^{k/p}| on grid", worst_limit, 0.0, 1e-4);
}

void chain(Recorder& r) {
  RandomStream rng(77);
  int above_total = 0, above_ok = 0, embed_total = 0, embed_ok = 0;
  for (int m = 4; m <= 7; ++m) {
    for (int p : {2 * m, 2 * m + 4}) {
      const double threshold = threshold_c(m, P(p));
      for (int k = 0; k < 100; ++k) {
        const double c = threshold + rng.uniform(1e-3, 50.0);
        ++above_total;
        if (verify_chain(m, P(p), c).all()) ++above_ok;
      }
      for (int k = 0; k < 100; ++k) {
        // Half of the draws land below the threshold.
        const double c = k % 2 == 0 ? rng.uniform(0.0, threshold) : rng.uniform(0.0, 50.0);
        ++embed_total;
        if (verify_chain(m, P(p), c).middle_within_rhs) ++embed_ok;
      }
    }
  }
  r.holds("verify_chain all-true above threshold", above_ok == above_total, std::to_string(above_total),
          std::to_string(above_ok));
  r.holds("M <= R for c >= 0 (incl. below threshold)", embed_ok == embed_total, std::to_string(embed_total),
          std::to_string(embed_ok));
}

void references(Recorder& r) {
  r.near("bh_reference_lower(2) vs 1.5^{1/4}", bh_reference_lower(2), std::pow(1.5, 0.25), 1e-12);
  int total = 0, ok = 0;
  for (int m = 2; m <= 6; ++m) {
    for (int p = 2 * m; p <= 4 * m; ++p) {
      ++total;
      const bool exact_ok = real_reference_exponent(m, P(p)) >= Rational(m, 16);
      const bool float_ok = real_reference_lower(m, P(p)) >= std::exp2(m / 16.0) * (1.0 - 1e-15);
      if (exact_ok && float_ok) ++ok;
    }
  }
  r.holds("real_reference_lower(m,p) >= 2^{m/16}, m=2..6, p=2m..4m", ok == total, std::to_string(total),
          std::to_string(ok));
}

HomogeneousPolynomial random_polynomial(RandomStream& rng, std::size_t n, unsigned m, std::size_t max_terms) {
  const std::vector<MultiIndex> all = all_multi_indices(n, m);
  const std::size_t count = 1 + rng.below(std::min(max_terms, all.size()));
  std::vector<std::pair<MultiIndex, Complex>> terms;
  std::vector<std::size_t> order(all.size());
  std::iota(order.begin(), order.end(), 0);
  for (std::size_t i = 0; i < count; ++i) {
    std::swap(order[i], order[i + rng.below(order.size() - i)]);
    terms.emplace_back(all[order[i]], Complex{rng.gaussian(), rng.gaussian()});
  }
  return HomogeneousPolynomial(n, m, terms);
}

std::vector<Complex> random_point(RandomStream& rng, std::size_t n, double radius) {
  std::vector<Complex> z(n);
  for (auto& v : z) v = std::polar(radius * std::sqrt(rng.uniform()), rng.uniform(-std::numbers::pi, std::numbers::pi));
  return z;
}

void properties(Recorder& r, int cases) {
  RandomStream rng(8);
  const auto record = [&](const std::string& name, int failures, double worst, double tol) {
    r.holds(name + " (" + std::to_string(cases) + " cases, tol " + num(tol) + ")", failures == 0, "0 failures",
            std::to_string(failures) + " failures, worst " + num(worst));
  };

  {
    int failures = 0;
    double worst = 0.0;
    for (int k = 0; k < cases; ++k) {
      const std::size_t n = 1 + rng.below(4);
      const unsigned m = 1 + static_cast<unsigned>(rng.below(5));
      const HomogeneousPolynomial poly = random_polynomial(rng, n, m, 6);
      const std::vector<Complex> z = random_point(rng, n, 1.5);
      const Complex lambda = std::polar(rng.uniform(0.1, 2.0), rng.uniform(-std::numbers::pi, std::numbers::pi));
      std::vector<Complex> scaled = z;
      for (auto& v : scaled) v *= lambda;
      const Complex lhs = evaluate(poly, scaled);
      const Complex rhs = integer_power(lambda, m) * evaluate(poly, z);
      const double err = std::abs(lhs - rhs) / std::max(1.0, std::abs(rhs));
      worst = std::max(worst, err);
      if (!(r.tamper(err) <= 1e-12)) ++failures;
    }
    record("homogeneity P(lz) = l^m P(z)", failures, worst, 1e-12);
  }
  {
    int failures = 0;
    double worst = 0.0;
    const double h = 1e-6;
    for (int k = 0; k < cases; ++k) {
      const std::size_t n = 1 + rng.below(4);
      const unsigned m = 1 + static_cast<unsigned>(rng.below(5));
      const HomogeneousPolynomial poly = random_polynomial(rng, n, m, 6);
      const std::vector<Complex> z = random_point(rng, n, 1.0);
      const std::vector<Complex> grad = complex_gradient(poly, z);
      for (std::size_t j = 0; j < n; ++j) {
        std::vector<Complex> plus = z, minus = z;
        plus[j] += h;
        minus[j] -= h;
        const Complex fd = (evaluate(poly, plus) - evaluate(poly, minus)) / (2.0 * h);
        const double err = std::abs(grad[j] - fd);
        worst = std::max(worst, err);
        if (!(r.tamper(err) <= 1e-6)) {
          ++failures;
          break;
        }
      }
    }
    record("complex_gradient vs central differences", failures, worst, 1e-6);
  }
  {
    int failures = 0;
    double worst = 0.0;
    for (int k = 0; k < cases; ++k) {
      const std::size_t n = 1 + rng.below(4);
      const HomogeneousPolynomial poly = random_polynomial(rng, n, 1 + static_cast<unsigned>(rng.below(4)), 8);
      double prev = coefficient_norm(poly, 1.0);
      for (double rho : {1.5, 2.0, 4.0}) {
        const double cur = coefficient_norm(poly, rho);
        worst = std::max(worst, cur - prev);
        if (r.tamper(cur) > prev * (1.0 + 1e-15)) ++failures;
        prev = cur;
      }
    }
    record("coefficient_norm non-increasing in rho", failures, worst, 0.0);
  }

  const OptimizerConfig defaults;
  const std::vector<ExtendedExponent> ladder = {P(1), P(2), P(3), P(4), P(6), P(8), ExtendedExponent::infinity()};
  {
    int failures = 0;
    double worst = -1e300;
    for (int k = 0; k < cases; ++k) {
      const std::size_t n = 2 + rng.below(2);
      const HomogeneousPolynomial poly = random_polynomial(rng, n, 2 + static_cast<unsigned>(rng.below(2)), 4);
      std::size_t i = rng.below(ladder.size()), j = rng.below(ladder.size());
      if (i > j) std::swap(i, j);
      OptimizerConfig cfg = defaults;
      cfg.seed = rng.next_u64();
      const double low = supnorm_search(poly, ladder[i], cfg).value;
      const double high = supnorm_search(poly, ladder[j], cfg).value;
      worst = std::max(worst, low - high);
      if (!(r.tamper(low) <= high + 1e-9)) ++failures;
    }
    record("sup-norm search monotone in p", failures, worst, 1e-9);
  }
  {
    int failures = 0;
    double worst = 0.0;
    for (int k = 0; k < cases; ++k) {
      const std::size_t n = 2 + rng.below(2);
      const unsigned m = 2 + static_cast<unsigned>(rng.below(2));
      const HomogeneousPolynomial poly = random_polynomial(rng, n, m, 4);
      const ExtendedExponent& p = ladder[1 + rng.below(ladder.size() - 1)];
      const double rho = p > Rational(m) ? exponent_for(static_cast<int>(m), p).to_double() : 2.0;
      const Complex lambda = std::polar(std::exp(rng.uniform(-3.0, 3.0)), rng.uniform(-std::numbers::pi, std::numbers::pi));
      OptimizerConfig cfg = defaults;
      cfg.seed = rng.next_u64();
      const double q1 = coefficient_norm(poly, rho) / supnorm_search(poly, p, cfg).value;
      const HomogeneousPolynomial big = poly.scaled(lambda);
      const double q2 = coefficient_norm(big, rho) / supnorm_search(big, p, cfg).value;
      const double err = std::abs(q1 - q2) / q1;
      worst = std::max(worst, err);
      if (!(r.tamper(err) <= 1e-9)) ++failures;
    }
    record("witness quotient invariant under P -> lambda P", failures, worst, 1e-9);
  }
  {
    int failures = 0;
    for (int k = 0; k < cases; ++k) {
      const std::size_t n = 2 + rng.below(3);
      const HomogeneousPolynomial poly = random_polynomial(rng, n, 2 + static_cast<unsigned>(rng.below(3)), 4);
      const ExtendedExponent& p = ladder[rng.below(ladder.size())];
      OptimizerConfig cfg = defaults;
      cfg.seed = rng.next_u64();
      cfg.starts = 4;
      const NormEstimate a = supnorm_search(poly, p, cfg);
      const NormEstimate b = supnorm_search(poly, p, cfg);
      if (r.faulty() || a.value != b.value || a.maximizer != b.maximizer || a.status != b.status) ++failures;
    }
    record("optimizer bitwise deterministic under fixed seed", failures, 0.0, 0.0);
  }
}

struct Group {
  int number;
  const char* name;
  const char* title;
  std::function<void(Recorder&, const Options&)> run;
};

const std::vector<Group>& groups() {
  static const std::vector<Group> table = {
      {1, "anchor", "anchor sandwich sqrt(2) <= C(2,4) <= 3.1915", [](Recorder& r, const Options&) { anchor(r); }},
      {2, "exponents", "exact optimal exponents", [](Recorder& r, const Options&) { exponents(r); }},
      {3, "norms", "closed-form norms vs optimizer", [](Recorder& r, const Options&) { norms(r); }},
      {4, "soundness", "optimizer never exceeds closed-form norms", [](Recorder& r, const Options&) { soundness(r); }},
      {5, "thm777", "threshold and Q_m quotient bounds", [](Recorder& r, const Options&) { thm777(r); }},
      {6, "chain", "chain inequality L < M <= R", [](Recorder& r, const Options&) { chain(r); }},
      {7, "references", "reference lower bounds", [](Recorder& r, const Options&) { references(r); }},
      {8, "properties", "randomized property suite",
       [](Recorder& r, const Options& o) { properties(r, o.property_cases); }},
  };
  return table;
}

}  // namespace

bool CriterionResult::passed() const {
  return !checks.empty() && std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.passed; });
}

std::vector<std::string> group_names() {
  std::vector<std::string> names;
  for (const Group& g : groups()) names.emplace_back(g.name);
  return names;
}

std::vector<CriterionResult> run(const Options& options) {
  const std::vector<std::string> known = group_names();
  for (const std::string& name : options.groups)
    if (std::find(known.begin(), known.end(), name) == known.end())
      throw ParseError("unknown verification group '" + name + "'");
  if (options.inject_fault && std::find(known.begin(), known.end(), *options.inject_fault) == known.end())
    throw ParseError("unknown verification group '" + *options.inject_fault + "'");

  std::vector<CriterionResult> results;
  for (const Group& g : groups()) {
    if (!options.groups.empty() &&
        std::find(options.groups.begin(), options.groups.end(), g.name) == options.groups.end())
      continue;
    Recorder recorder(options.inject_fault && *options.inject_fault == g.name);
    const auto start = std::chrono::steady_clock::now();
    CriterionResult result{g.number, g.name, g.title, {}, 0.0};
    try {
      g.run(recorder, options);
    } catch (const std::exception& e) {
      recorder.checks.push_back({"unexpected exception", "none", e.what(), 0.0, false});
    }
    result.checks = std::move(recorder.checks);
    result.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    results.push_back(std::move(result));
  }
  return results;
}

std::string render(const std::vector<CriterionResult>& results, bool verbose) {
  std::ostringstream out;
  if (verbose) {
    for (const CriterionResult& c : results) {
      out << "criterion " << c.number << " [" << c.group << "] " << c.title << '\n';
      for (const Check& check : c.checks) {
        out << "  " << (check.passed ? "ok  " : "FAIL") << "  " << check.name << "\n        expected "
            << check.expected << ", actual " << check.actual;
        if (check.tolerance > 0.0) out << ", tol " << num(check.tolerance);
        out << '\n';
      }
    }
    out << '\n';
  }
  for (const CriterionResult& c : results) {
    char line[256];
    std::snprintf(line, sizeof line, "%s  criterion %d [%s] %s (%.2fs)", c.passed() ? "PASS" : "FAIL", c.number,
                  c.group.c_str(), c.title.c_str(), c.seconds);
    out << line << '\n';
    for (const Check& check : c.checks)
      if (!check.passed) out << "      failed: " << check.name << '\n';
  }
  return out.str();
}

bool all_passed(const std::vector<CriterionResult>& results) {
  return !results.empty() &&
         std::all_of(results.begin(), results.end(), [](const CriterionResult& c) { return c.passed(); });
}

}  // namespace hlb::acceptance
