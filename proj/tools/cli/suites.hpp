#ifndef ELLROOK_CLI_SUITES_HPP_
#define ELLROOK_CLI_SUITES_HPP_

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "cli/sampler.hpp"
#include "ellrook/ellrook.hpp"

namespace ellrook::cli {

using Json = nlohmann::ordered_json;

Json complex_json(Complex z);
Complex complex_from_json(const Json& j);

// Parameter source for one trial. In sampling mode every request draws a
// fresh value and records it; in replay mode values come back from a
// recorded "params" object by name.
class Draws {
 public:
  explicit Draws(ParameterSampler& sampler) : sampler_(&sampler) {}
  Draws(Json recorded, std::string board) : recorded_(std::move(recorded)), board_(std::move(board)) {}

  bool replaying() const { return sampler_ == nullptr; }
  ParameterSampler& sampler() { return *sampler_; }

  Complex complex(const std::string& name, const std::function<Complex()>& gen);
  Complex fixed(const std::string& name, Complex value) {
    return complex(name, [value] { return value; });
  }
  long integer(const std::string& name, long lo, long hi);
  long fixed_integer(const std::string& name, long value) { return integer(name, value, value); }

  // Boards travel as their literal rather than as params.
  std::string board(const std::function<std::string()>& gen);

  const Json& params() const { return params_; }
  const std::string& board_text() const { return board_; }
  void reset();

 private:
  ParameterSampler* sampler_ = nullptr;
  Json recorded_;
  Json params_ = Json::object();
  std::string board_;
};

struct VerifyOptions {
  std::string theorem;
  std::optional<std::string> board;   // random per trial when absent
  std::string family = "elliptic";
  std::optional<Complex> alpha;       // drawn from {0, 1, 2, 2.5+0.3i} when absent
  std::optional<long> n;
  RowOffset offset = RowOffset::Cumulative;
};

struct Suite {
  std::string name;
  std::string summary;
  // Families accepted; the first is the default.
  std::vector<std::string> families;
  bool takes_board;
  bool takes_n;
  std::function<TwoSided(Draws&, const VerifyOptions&)> trial;
};

const std::vector<Suite>& suites();
const Suite& find_suite(const std::string& name);  // throws std::invalid_argument

// Draw the family's parameters under the names a, b, q, p.
WeightFamily draw_family(Draws& d, const std::string& family);

std::string random_ferrers(ParameterSampler& s);
std::string random_lshifted(ParameterSampler& s);

RowOffset parse_offset(const std::string& text);
std::string offset_name(RowOffset o);

}  // namespace ellrook::cli

#endif  // ELLROOK_CLI_SUITES_HPP_
