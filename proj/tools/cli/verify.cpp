#include "cli/verify.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <string>
#include <thread>

namespace ellrook::cli {
namespace {

struct TrialResult {
  bool done = false;
  std::string board;
  Json params;
  TwoSided value;
  int resamples = 0;
  std::string failure;
};

TrialResult run_trial(const Suite& suite, const CampaignConfig& c, long index) {
  std::mt19937_64 engine = trial_engine(c.sampler.seed, static_cast<std::uint64_t>(index));
  ParameterSampler sampler(c.sampler, engine);
  Draws draws(sampler);
  TrialResult r;
  for (int attempt = 0; attempt <= c.sampler.resample_budget; ++attempt) {
    draws.reset();
    try {
      r.value = suite.trial(draws, c.options);
      r.done = true;
      r.resamples = attempt;
      break;
    } catch (const PoleError& e) {
      r.failure = e.what();
    }
  }
  if (!r.done) r.resamples = c.sampler.resample_budget;
  r.board = draws.board_text();
  r.params = draws.params();
  return r;
}

void check_options(const Suite& suite, const VerifyOptions& o) {
  if (std::find(suite.families.begin(), suite.families.end(), o.family) == suite.families.end()) {
    throw std::invalid_argument("theorem '" + suite.name + "' does not take family '" + o.family + "'");
  }
  if (o.board && !suite.takes_board) throw std::invalid_argument("theorem '" + suite.name + "' takes no board");
  if (o.n && !suite.takes_n) throw std::invalid_argument("theorem '" + suite.name + "' takes no --n");
  if (o.board) {
    // Surfaces malformed literals and shape mismatches as usage errors.
    SamplerConfig sc;
    std::mt19937_64 engine(0);
    ParameterSampler sampler(sc, engine);
    Draws probe(sampler);
    try {
      suite.trial(probe, o);
    } catch (const PoleError&) {
    }
  }
}

}  // namespace

Json run_campaign(const CampaignConfig& c) {
  const Suite& suite = find_suite(c.options.theorem);
  check_options(suite, c.options);
  if (c.trials < 1) throw std::invalid_argument("--trials must be positive");

  std::vector<TrialResult> results(static_cast<size_t>(c.trials));
  std::atomic<long> next{0};
  auto worker = [&] {
    for (long i = next++; i < c.trials; i = next++) results[static_cast<size_t>(i)] = run_trial(suite, c, i);
  };
  const int threads = std::clamp<int>(c.threads, 1, static_cast<int>(c.trials));
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
  }

  Json report;
  report["theorem"] = suite.name;
  report["board"] = c.options.board.value_or("random");
  report["family"] = c.options.family;
  report["seed"] = c.sampler.seed;
  report["tol"] = c.tol;
  report["z_mode"] = c.sampler.z.to_string();
  report["offset"] = offset_name(c.options.offset);
  Json trials = Json::array();
  Json skipped = Json::array();
  double max_relerr = 0;
  for (long i = 0; i < c.trials; ++i) {
    const TrialResult& r = results[static_cast<size_t>(i)];
    if (!r.done) {
      skipped.push_back({{"index", i}, {"reason", r.failure}, {"resamples", r.resamples}});
      continue;
    }
    const double relerr = static_cast<double>(r.value.relerr());
    max_relerr = std::max(max_relerr, relerr);
    Json t;
    t["index"] = i;
    if (!r.board.empty()) t["board"] = r.board;
    t["params"] = r.params;
    t["lhs"] = complex_json(r.value.lhs);
    t["rhs"] = complex_json(r.value.rhs);
    t["relerr"] = relerr;
    t["resamples"] = r.resamples;
    trials.push_back(std::move(t));
  }
  report["trials"] = std::move(trials);
  report["skipped"] = skipped;
  report["max_relerr"] = max_relerr;
  report["pass"] = skipped.empty() && max_relerr < c.tol;
  return report;
}

Json replay_report(const Json& report) {
  VerifyOptions o;
  o.theorem = report.at("theorem").get<std::string>();
  o.family = report.at("family").get<std::string>();
  if (report.contains("offset")) o.offset = parse_offset(report["offset"].get<std::string>());
  const Suite& suite = find_suite(o.theorem);

  Json out;
  out["theorem"] = o.theorem;
  Json rows = Json::array();
  bool all_match = true;
  for (const Json& t : report.at("trials")) {
    Draws draws(t.at("params"), t.value("board", std::string()));
    const TwoSided v = suite.trial(draws, o);
    const double relerr = static_cast<double>(v.relerr());
    const double recorded = t.at("relerr").get<double>();
    const bool match = relerr == recorded && complex_json(v.lhs) == t.at("lhs") && complex_json(v.rhs) == t.at("rhs");
    all_match = all_match && match;
    rows.push_back({{"index", t.at("index")}, {"relerr", relerr}, {"recorded", recorded}, {"match", match}});
  }
  out["trials"] = std::move(rows);
  out["reproduced"] = all_match;
  return out;
}

int thread_count_from_env() {
  const char* v = std::getenv("ELLROOK_THREADS");
  if (v == nullptr || *v == '\0') return 1;
  try {
    return std::max(1, std::stoi(v));
  } catch (const std::exception&) {
    return 1;
  }
}

}  // namespace ellrook::cli
