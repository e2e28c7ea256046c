#include <cstdlib>
#include <iostream>
#include <string>

#include "gatecalc/acceptance.hpp"
#include "gatecalc/search.hpp"

// Runs every acceptance criterion, or the ones given as arguments, one line each.
int main(int argc, char **argv)
{
  gatecalc::AcceptanceOptions opts;
  if (char const *mem = std::getenv("GATECALC_MEM"))
    opts.search_budget = gatecalc::parse_byte_count(mem);

  std::vector<gatecalc::CriterionReport> reports;
  if (argc > 1)
    for (int i = 1; i < argc; ++i)
      reports.push_back(gatecalc::run_criterion(static_cast<unsigned>(std::stoul(argv[i])), opts));
  else
    reports = gatecalc::run_acceptance(opts);

  bool ok = true;
  for (auto const &r : reports) {
    ok = ok && r.pass();
    std::cout << "criterion " << r.id << ": " << (r.pass() ? "PASS" : "FAIL") << " (" << r.seconds
              << " s, limit " << r.limit_seconds << " s) " << r.title << "\n    " << r.detail << "\n";
  }
  return ok ? EXIT_SUCCESS : EXIT_FAILURE;
}
