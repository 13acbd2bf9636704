// Acceptance runner: one PASS/FAIL line per criterion.
#include <cstdio>
#include <string>

#include "cli_runner.hpp"
#include "hlb/acceptance.hpp"

int main() {
  const auto results = hlb::acceptance::run();
  std::fputs(hlb::acceptance::render(results, false).c_str(), stdout);
  bool ok = hlb::acceptance::all_passed(results);

  const CliResult cli = run_cli("verify --quiet");
  const bool verify_ok = cli.exit_code == 0;
  std::printf("%s  criterion 9 [cli] verify command exits 0 (exit code %d)\n", verify_ok ? "PASS" : "FAIL",
              cli.exit_code);
  if (!verify_ok) std::fputs(cli.output.c_str(), stdout);
  ok = ok && verify_ok;
  std::printf("%s\n", ok ? "acceptance: all criteria passed" : "acceptance: FAILED");
  return ok ? 0 : 1;
}
