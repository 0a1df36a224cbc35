#include "cli/sampler.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace ellrook::cli {

ZMode ZMode::parse(const std::string& text) {
  std::vector<std::string> parts;
  std::stringstream ss(text);
  for (std::string item; std::getline(ss, item, ':');) parts.push_back(item);
  if (parts.size() != 3 || (parts[0] != "int" && parts[0] != "box")) {
    throw std::invalid_argument("z mode must look like int:LO:HI or box:LO:HI");
  }
  ZMode m;
  m.kind = parts[0] == "int" ? Kind::Integer : Kind::ComplexBox;
  m.lo = std::stod(parts[1]);
  m.hi = std::stod(parts[2]);
  if (!(m.lo <= m.hi)) throw std::invalid_argument("z mode needs LO <= HI");
  return m;
}

std::string ZMode::to_string() const {
  std::ostringstream os;
  os << (kind == Kind::Integer ? "int:" : "box:") << lo << ':' << hi;
  return os.str();
}

std::mt19937_64 trial_engine(std::uint64_t seed, std::uint64_t index) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32)};
  return std::mt19937_64(seq);
}

Complex ParameterSampler::polar(ModulusRange r) {
  const double mod = std::uniform_real_distribution<double>(r.lo, r.hi)(engine_);
  const double phase = std::uniform_real_distribution<double>(0.0, 2.0 * M_PI)(engine_);
  return {mod * std::cos(phase), mod * std::sin(phase)};
}

Complex ParameterSampler::z() {
  if (config_.z.kind == ZMode::Kind::Integer) {
    return Real(integer(static_cast<long>(std::ceil(config_.z.lo)), static_cast<long>(std::floor(config_.z.hi))));
  }
  std::uniform_real_distribution<double> d(config_.z.lo, config_.z.hi);
  const double re = d(engine_);
  const double im = d(engine_);
  return {re, im};
}

}  // namespace ellrook::cli
