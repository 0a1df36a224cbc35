#ifndef ELLROOK_CLI_VERIFY_HPP_
#define ELLROOK_CLI_VERIFY_HPP_

#include "cli/sampler.hpp"
#include "cli/suites.hpp"

namespace ellrook::cli {

struct CampaignConfig {
  VerifyOptions options;
  SamplerConfig sampler;
  long trials = 50;
  double tol = 1e-9;
  int threads = 1;
};

// Runs the trials (concurrently when threads > 1) and assembles the report
// in trial order. Usage errors surface as exceptions before any trial runs.
Json run_campaign(const CampaignConfig& config);

// Re-evaluates every trial of a report from its recorded parameters.
// The result lists per-trial relerr pairs and whether all match exactly.
Json replay_report(const Json& report);

// ELLROOK_THREADS, or 1.
int thread_count_from_env();

}  // namespace ellrook::cli

#endif  // ELLROOK_CLI_VERIFY_HPP_
