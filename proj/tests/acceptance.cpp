#include <cstdio>

#include "geoforge/pipeline.hpp"

int main() {
  auto report = geoforge::regression_suite();
  const auto& criteria = geoforge::suite_criteria();
  for (std::size_t k = 0; k < report.steps.size(); ++k) {
    const auto& s = report.steps[k];
    std::printf("%s criterion %s (%.0f ms, budget %.0f ms)\n", s.status == geoforge::StepStatus::Pass ? "PASS" : "FAIL",
                s.name.c_str(), s.ms, criteria[k].budget_ms);
    if (!s.witness.is_null()) std::printf("  %s\n", s.witness.dump().c_str());
  }
  std::printf("total %.0f ms\n", report.total_ms.value_or(0));
  return report.passed() ? 0 : 1;
}
