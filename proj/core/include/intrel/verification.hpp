#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"

namespace intrel {

struct Failure {
  std::string check;
  nlohmann::json counterexample;
};

struct VerificationReport {
  std::string suite;
  std::int64_t checks = 0;
  std::vector<Failure> failures;
  double seconds = 0.0;

  bool passed() const noexcept { return failures.empty(); }
};

/// lattice, hopf, bases, families, projections, subalgebras and all.
const std::vector<std::string>& suite_names();
int default_n_max(const std::string& suite);

/// Runs every check of a suite at sizes up to n_max (each check also has its
/// own ceiling, so large n_max values only widen the cheap sweeps). Checks are
/// spread over `jobs` worker threads; the report lists failures in check
/// order regardless of scheduling. Throws InputError for an unknown suite.
VerificationReport run_suite(const std::string& suite, int n_max, int jobs = 1);

nlohmann::json to_json(const VerificationReport& report);

}  // namespace intrel
