// Compares the serial reference against the OpenMP path on the heavier
// postulate grids and verifies that both produce identical reports.

#include <chrono>
#include <iostream>

#include "revlab/scenario.hpp"

using namespace revlab;

namespace {

double run_timed(const std::string& suite, const std::string& op, CheckConfig cfg,
                 ExecutionMode mode, std::vector<CheckReport>* reports) {
  cfg.mode = mode;
  const auto start = std::chrono::steady_clock::now();
  SuiteResult r = run_suite(suite, op, cfg);
  const auto stop = std::chrono::steady_clock::now();
  *reports = std::move(r.reports);
  return std::chrono::duration<double>(stop - start).count();
}

bool same_reports(const std::vector<CheckReport>& a, const std::vector<CheckReport>& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!(a[i].postulate == b[i].postulate) || a[i].status != b[i].status ||
        a[i].instances_checked != b[i].instances_checked ||
        a[i].domain_skipped != b[i].domain_skipped ||
        a[i].failures_total != b[i].failures_total) {
      return false;
    }
  }
  return true;
}

}  // namespace

int main() {
  const struct {
    const char* suite;
    const char* op;
    std::uint32_t max_rank;
  } cases[] = {
      {"dp", "dp", 3},
      {"dp", "boutilier", 2},
      {"agm", "ranking", 2},
      {"lehmann", "knowledge", 2},
  };

  std::cout << "suite        operator    serial[s]  parallel[s]  speedup  match\n";
  bool all_match = true;
  for (const auto& c : cases) {
    CheckConfig cfg = CheckConfig::exhaustive(Vocabulary({"p", "q"}));
    cfg.max_rank = c.max_rank;
    std::vector<CheckReport> serial_reports;
    std::vector<CheckReport> parallel_reports;
    const double ts = run_timed(c.suite, c.op, cfg, ExecutionMode::Serial, &serial_reports);
    const double tp = run_timed(c.suite, c.op, cfg, ExecutionMode::Parallel, &parallel_reports);
    const bool match = same_reports(serial_reports, parallel_reports);
    all_match = all_match && match;
    std::printf("%-12s %-11s %9.3f %12.3f %8.2f  %s\n", c.suite, c.op, ts, tp,
                ts / (tp > 0 ? tp : 1e-9), match ? "yes" : "NO");
  }
  return all_match ? 0 : 1;
}
