#ifndef ELLROOK_CLI_SAMPLER_HPP_
#define ELLROOK_CLI_SAMPLER_HPP_

#include <cstdint>
#include <random>
#include <string>

#include "ellrook/types.hpp"

namespace ellrook::cli {

struct ModulusRange {
  double lo;
  double hi;
};

// How z is drawn: an integer in [lo, hi] or a point of the square
// [lo, hi] x [lo, hi] in the complex plane.
struct ZMode {
  enum class Kind { Integer, ComplexBox };
  Kind kind = Kind::ComplexBox;
  double lo = -2.0;
  double hi = 2.0;

  static ZMode parse(const std::string& text);  // "int:LO:HI" or "box:LO:HI"
  std::string to_string() const;
};

struct SamplerConfig {
  std::uint64_t seed = 0;
  ModulusRange q{0.3, 0.9};
  ModulusRange p{0.05, 0.5};
  ModulusRange ab{0.2, 2.0};
  ZMode z;
  Real pole_threshold = kPoleThreshold;
  int resample_budget = 16;
};

// Independent stream for trial `index`; the same (seed, index) always gives
// the same draws, whatever order trials run in.
std::mt19937_64 trial_engine(std::uint64_t seed, std::uint64_t index);

// Draws are made in double precision so that the recorded report values
// reproduce them exactly.
class ParameterSampler {
 public:
  ParameterSampler(const SamplerConfig& config, std::mt19937_64& engine)
      : config_(config), engine_(engine) {}

  Complex q() { return polar(config_.q); }
  Complex p() { return polar(config_.p); }
  Complex ab() { return polar(config_.ab); }
  Complex z();
  long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(engine_); }

 private:
  Complex polar(ModulusRange r);

  const SamplerConfig& config_;
  std::mt19937_64& engine_;
};

}  // namespace ellrook::cli

#endif  // ELLROOK_CLI_SAMPLER_HPP_
