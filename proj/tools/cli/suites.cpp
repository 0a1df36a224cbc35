#include "cli/suites.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>

namespace ellrook::cli {

Json complex_json(Complex z) {
  return Json::array({static_cast<double>(z.real()), static_cast<double>(z.imag())});
}

Complex complex_from_json(const Json& j) {
  if (!j.is_array() || j.size() != 2) throw std::invalid_argument("complex values are [re, im] pairs");
  return {Real(j[0].get<double>()), Real(j[1].get<double>())};
}

Complex Draws::complex(const std::string& name, const std::function<Complex()>& gen) {
  Complex v;
  if (replaying()) {
    if (!recorded_.contains(name)) throw std::invalid_argument("report trial lacks parameter '" + name + "'");
    v = complex_from_json(recorded_[name]);
  } else {
    // Round through double so the recorded pair is exactly the value used.
    const Complex g = gen();
    v = {Real(static_cast<double>(g.real())), Real(static_cast<double>(g.imag()))};
  }
  params_[name] = complex_json(v);
  return v;
}

long Draws::integer(const std::string& name, long lo, long hi) {
  const Complex v = complex(name, [&] { return Complex(Real(sampler_->integer(lo, hi))); });
  return static_cast<long>(v.real());
}

std::string Draws::board(const std::function<std::string()>& gen) {
  if (!replaying()) board_ = gen();
  return board_;
}

void Draws::reset() {
  params_ = Json::object();
  if (!replaying()) board_.clear();
}

namespace {

FerrersBoard ferrers_of(const std::string& text) {
  AnyBoard b = parse_board(text);
  if (!std::holds_alternative<FerrersBoard>(b)) throw InvalidBoard("'" + text + "' is not a Ferrers board");
  return std::get<FerrersBoard>(b);
}

LShiftedBoard lshifted_of(const std::string& text) {
  AnyBoard b = parse_board(text);
  if (!std::holds_alternative<LShiftedBoard>(b)) throw InvalidBoard("'" + text + "' is not an l-shifted board");
  return std::get<LShiftedBoard>(b);
}

Complex draw_z(Draws& d) {
  return d.complex("z", [&] { return d.sampler().z(); });
}

Complex draw_alpha(Draws& d, const VerifyOptions& o) {
  static const std::array<Complex, 4> kChoices{Complex(0), Complex(1), Complex(2), Complex(2.5L, 0.3L)};
  if (o.alpha) return d.fixed("alpha", *o.alpha);
  return d.complex("alpha", [&] { return kChoices[static_cast<size_t>(d.sampler().integer(0, 3))]; });
}

long draw_n(Draws& d, const VerifyOptions& o, long lo, long hi) {
  if (o.n) return d.fixed_integer("n", *o.n);
  return d.integer("n", lo, hi);
}

FerrersBoard trial_ferrers(Draws& d, const VerifyOptions& o) {
  return ferrers_of(d.board([&] { return o.board ? *o.board : random_ferrers(d.sampler()); }));
}

LShiftedBoard trial_lshifted(Draws& d, const VerifyOptions& o) {
  return lshifted_of(d.board([&] { return o.board ? *o.board : random_lshifted(d.sampler()); }));
}

std::vector<Suite> build_suites() {
  const std::vector<std::string> all{"elliptic", "abq", "aq", "q"};
  std::vector<Suite> s;
  s.push_back({"alpha-fact", "product formula for alpha-rook numbers on a Ferrers board", all, true, false,
               [](Draws& d, const VerifyOptions& o) {
                 const FerrersBoard b = trial_ferrers(d, o);
                 const WeightFamily f = draw_family(d, o.family);
                 const Complex alpha = draw_alpha(d, o);
                 return verify_alpha_factorization(f, b, alpha, draw_z(d));
               }});
  s.push_back({"alpha-rec", "last-column recursion against enumeration", all, true, false,
               [](Draws& d, const VerifyOptions& o) {
                 const FerrersBoard b = trial_ferrers(d, o);
                 const WeightFamily f = draw_family(d, o.family);
                 const Complex alpha = draw_alpha(d, o);
                 const long k = d.integer("k", 0, b.columns());
                 return TwoSided{r_alpha(f, b, k, alpha), r_alpha_recursive(f, b, k, alpha)};
               }});
  s.push_back({"q-matching", "q-analogue product formula on an l-shifted board", {"q"}, true, false,
               [](Draws& d, const VerifyOptions& o) {
                 const LShiftedBoard b = trial_lshifted(d, o);
                 const Complex q = d.complex("q", [&] { return d.sampler().q(); });
                 return verify_hr_l(q, b, draw_z(d));
               }});
  s.push_back({"matching", "elliptic matching product formula on an l-shifted board", all, true, false,
               [](Draws& d, const VerifyOptions& o) {
                 const LShiftedBoard b = trial_lshifted(d, o);
                 const WeightFamily f = draw_family(d, o.family);
                 MatchingWeightRule rule;
                 rule.offset = o.offset;
                 return verify_matching_theorem(f, b, draw_z(d), rule);
               }});
  s.push_back({"matching-rec", "top-row recursion for the full board over l", all, true, false,
               [](Draws& d, const VerifyOptions& o) {
                 const LVector lv = trial_lshifted(d, o).lvec();
                 const WeightFamily f = draw_family(d, o.family);
                 const long k = d.integer("k", 0, lv.size());
                 return TwoSided{m_k_elliptic(f, full_lshifted(lv), k, {o.offset}),
                                 m_k_recursive(f, lv, k, o.offset)};
               }});
  s.push_back({"max-matching", "maximal matchings as a product", all, true, false,
               [](Draws& d, const VerifyOptions& o) {
                 const LShiftedBoard b = trial_lshifted(d, o);
                 const WeightFamily f = draw_family(d, o.family);
                 MatchingWeightRule rule;
                 rule.offset = o.offset;
                 return TwoSided{max_matching_closed(f, b, rule), m_k_elliptic(f, b, b.rows(), rule)};
               }});
  s.push_back({"whipple", "terminating balanced 4phi3 summation", {"aq"}, false, true,
               [](Draws& d, const VerifyOptions& o) {
                 const long n = draw_n(d, o, 1, 6);
                 const Complex a = d.complex("a", [&] { return d.sampler().ab(); });
                 const Complex q = d.complex("q", [&] { return d.sampler().q(); });
                 return verify_whipple(a, q, draw_z(d), n);
               }});
  s.push_back({"stirling", "Stirling recursion against truncated staircases", all, false, true,
               [](Draws& d, const VerifyOptions& o) {
                 const long n = draw_n(d, o, 1, 5);
                 const WeightFamily f = draw_family(d, o.family);
                 const long k = d.integer("k", 0, n);
                 const long r = d.integer("r", 1, n);
                 return TwoSided{stirling1_elliptic(f, n, k, r), r_alpha(f, truncated_staircase(n, r), n - k, 1)};
               }});
  s.push_back({"abel", "Abel board closed form", all, false, true,
               [](Draws& d, const VerifyOptions& o) {
                 const long n = draw_n(d, o, 1, 5);
                 const WeightFamily f = draw_family(d, o.family);
                 const long k = d.integer("k", 1, n);
                 const long colors = d.integer("colors", 1, 2);
                 return TwoSided{abel_r_closed(f, n, k, colors), r_alpha(f, abel_board(n, colors), n - k, 1)};
               }});
  s.push_back({"r2-aq", "alpha = 2 staircase closed form for (a;q) weights", {"aq"}, false, true,
               [](Draws& d, const VerifyOptions& o) {
                 const long n = draw_n(d, o, 1, 6);
                 const Complex a = d.complex("a", [&] { return d.sampler().ab(); });
                 const Complex q = d.complex("q", [&] { return d.sampler().q(); });
                 const long k = d.integer("k", 0, n);
                 return TwoSided{r2_aq_closed(a, q, n, k), r_alpha(aq_family(a, q), staircase(n), k, 2)};
               }});
  s.push_back({"perfect", "perfect and maximal matchings of full shifted boards", all, false, true,
               [](Draws& d, const VerifyOptions& o) {
                 // From n = 4 on the enumeration side cancels by 1e12 or more.
                 const long n = draw_n(d, o, 1, 3);
                 const WeightFamily f = draw_family(d, o.family);
                 const bool odd = d.integer("odd", 0, 1) == 1;
                 const LShiftedBoard b = full_lshifted(LVector::ones(2 * n - 1 + (odd ? 1 : 0)));
                 return TwoSided{perfect_matching_closed(f, n, odd), m_k_elliptic(f, b, n)};
               }});
  s.push_back({"mk-aq", "matching numbers of full shifted boards for (a;q) weights", {"aq"}, false, true,
               [](Draws& d, const VerifyOptions& o) {
                 const long n = draw_n(d, o, 1, 4);
                 const Complex a = d.complex("a", [&] { return d.sampler().ab(); });
                 const Complex q = d.complex("q", [&] { return d.sampler().q(); });
                 const long k = d.integer("k", 0, n);
                 const LShiftedBoard b = full_lshifted(LVector::ones(2 * n - 1));
                 return TwoSided{mk_aq_closed(a, q, n, k), m_k_elliptic(aq_family(a, q), b, k)};
               }});
  return s;
}

}  // namespace

const std::vector<Suite>& suites() {
  static const std::vector<Suite> all = build_suites();
  return all;
}

const Suite& find_suite(const std::string& name) {
  for (const Suite& s : suites()) {
    if (s.name == name) return s;
  }
  throw std::invalid_argument("unknown theorem '" + name + "'");
}

WeightFamily draw_family(Draws& d, const std::string& family) {
  auto q = [&] { return d.complex("q", [&] { return d.sampler().q(); }); };
  auto ab = [&](const char* name) { return d.complex(name, [&] { return d.sampler().ab(); }); };
  if (family == "elliptic") {
    const Complex a = ab("a"), b = ab("b"), base = q();
    return elliptic_family(a, b, base, d.complex("p", [&] { return d.sampler().p(); }));
  }
  if (family == "abq") {
    const Complex a = ab("a"), b = ab("b");
    return abq_family(a, b, q());
  }
  if (family == "aq") {
    const Complex a = ab("a");
    return aq_family(a, q());
  }
  if (family == "q") return q_family(q());
  throw std::invalid_argument("unknown family '" + family + "'");
}

std::string random_ferrers(ParameterSampler& s) {
  const long n = s.integer(1, 5);
  std::vector<long> h(static_cast<size_t>(n));
  for (long& x : h) x = s.integer(0, 5);
  std::sort(h.begin(), h.end());
  return FerrersBoard(h).to_string();
}

// Increments up to 3 and at most 10 vertices; rows shrink from the top while
// keeping the gap condition.
std::string random_lshifted(ParameterSampler& s) {
  std::vector<long> l;
  do {
    l.assign(static_cast<size_t>(s.integer(1, 4)), 0);
    for (long& x : l) x = s.integer(1, 3);
  } while (LVector(l).total() > 9);
  const LVector lv(l);
  const long n = lv.size();
  std::vector<long> a(static_cast<size_t>(n), 0);
  a[0] = s.integer(1, lv.total());
  for (long t = 1; t < n; ++t) {
    const long room = a[static_cast<size_t>(t - 1)] - lv.entry(n + 1 - t);
    a[static_cast<size_t>(t)] = room >= 1 ? s.integer(0, room) : 0;
  }
  return LShiftedBoard(lv, a).to_string();
}

RowOffset parse_offset(const std::string& text) {
  if (text == "cumulative") return RowOffset::Cumulative;
  if (text == "increment") return RowOffset::Increment;
  throw std::invalid_argument("offset must be 'cumulative' or 'increment'");
}

std::string offset_name(RowOffset o) { return o == RowOffset::Cumulative ? "cumulative" : "increment"; }

}  // namespace ellrook::cli
