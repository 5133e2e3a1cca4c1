#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace udelta::selftest {

struct SuiteOptions {
  uint64_t seed = 42;
  int samples = 0;   // 0 keeps each suite's own scale
  double tol = 1e-6;
};

struct SuiteResult {
  std::string name;
  bool passed = false;
  int checks = 0;
  int failures = 0;
  std::string detail;
};

using SuiteFn = std::function<SuiteResult(const SuiteOptions&)>;

// Registered acceptance suites, in criterion order.
const std::vector<std::pair<std::string, SuiteFn>>& suites();

// Run one suite by name; throws on unknown names.
SuiteResult run_suite(const std::string& name, const SuiteOptions& opt);

// Deterministic pseudo-random source used by every batch check, so failures
// reproduce from the seed alone.
class Rng {
 public:
  explicit Rng(uint64_t seed) : state_(seed ? seed : 0x9e3779b97f4a7c15ull) {}
  uint64_t next();
  long uniform(long lo, long hi);  // inclusive bounds
  double real01();

 private:
  uint64_t state_;
};

}  // namespace udelta::selftest

#include "udelta/phases.hpp"

namespace udelta::selftest {

// Shared deterministic samplers for property batteries and unit tests.
Rat random_rat(Rng& rng, long max_num = 3, long max_den = 3);
RatMat random_symmetric(Rng& rng, Eigen::Index n, long max_num = 3,
                        long max_den = 3);
RatMat random_symmetric_nondeg(Rng& rng, Eigen::Index n, long max_num = 3,
                               long max_den = 3);
IntMat random_unimodular(Rng& rng, Eigen::Index n);
RatMat random_spd(Rng& rng, Eigen::Index n);
SpElement random_sp(Rng& rng, Eigen::Index n, int factors, bool integral);
SpElement random_sp_u0(Rng& rng, Eigen::Index n, int factors, bool integral);
SiegelPoint random_siegel(Rng& rng, Eigen::Index n);
LiftedLagrangian random_lift(Rng& rng, Eigen::Index n, bool transported = true);

}  // namespace udelta::selftest
