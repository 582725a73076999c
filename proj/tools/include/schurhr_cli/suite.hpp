#pragma once

#include "schurhr/io.hpp"

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace schurhr::cli {

struct SuiteOptions {
  std::uint64_t seed = 42;
  unsigned workers = 1;
  // Keep every per-instance record in the report, not just failures.
  bool all_records = false;
};

struct CriterionResult {
  int id = 0;
  std::string name;
  std::size_t instances = 0;
  std::size_t violations = 0;
  // Failing records (or all of them with SuiteOptions::all_records), in
  // instance order.
  Json records = Json::array();
  // Extra facts worth printing, e.g. how many resamples were needed.
  Json notes = Json::object();

  bool ok() const { return violations == 0; }
  Json to_json() const;
};

// Acceptance criteria 1-11; each is deterministic in options.seed and
// independent of options.workers.
CriterionResult check_paper_example(const SuiteOptions& options);
CriterionResult check_derived_table(const SuiteOptions& options);
CriterionResult check_schur_routes(const SuiteOptions& options);
CriterionResult check_dual_reversal(const SuiteOptions& options);
CriterionResult check_twist_rule(const SuiteOptions& options);
CriterionResult check_fl_positivity(const SuiteOptions& options);
CriterionResult check_hr_suite(const SuiteOptions& options);
CriterionResult check_kt_suite(const SuiteOptions& options);
CriterionResult check_hodge_suite(const SuiteOptions& options);
CriterionResult check_polya_suite(const SuiteOptions& options);
CriterionResult check_lorentzian_suite(const SuiteOptions& options);

struct NamedCriterion {
  int id;
  const char* name;
  std::function<CriterionResult(const SuiteOptions&)> run;
};
const std::vector<NamedCriterion>& criteria();

// The full report: {"seed", "criteria": [...], "violations", "ok"}.
// Contains no timings, so equal seeds give byte-identical output.
// paper_only restricts the run to the hard-coded reproductions (1 and 2).
Json run_verify(const SuiteOptions& options, bool paper_only = false);

} // namespace schurhr::cli
