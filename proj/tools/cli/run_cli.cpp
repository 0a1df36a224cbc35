#include "cli/run_cli.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include "cli/verify.hpp"

namespace ellrook::cli {
namespace {

// "re" or "re,im"
Complex parse_complex(const std::string& text) {
  std::size_t used = 0;
  const auto comma = text.find(',');
  try {
    if (comma == std::string::npos) {
      const long double re = std::stold(text, &used);
      if (used == text.size()) return {re, 0};
    } else {
      const std::string rs = text.substr(0, comma), is = text.substr(comma + 1);
      std::size_t used_im = 0;
      const long double re = std::stold(rs, &used);
      const long double im = std::stold(is, &used_im);
      if (used == rs.size() && used_im == is.size()) return {re, im};
    }
  } catch (const std::logic_error&) {
  }
  throw std::invalid_argument("cannot read complex value '" + text + "'");
}

struct FamilyArgs {
  std::string family = "elliptic";
  std::string a, b, q, p;

  void add_to(CLI::App* app) {
    app->add_option("--family", family, "elliptic, abq, aq or q")
        ->check(CLI::IsMember({"elliptic", "abq", "aq", "q"}));
    app->add_option("--a", a, "parameter a (re or re,im)");
    app->add_option("--b", b, "parameter b");
    app->add_option("--q", q, "base q");
    app->add_option("--p", p, "nome p");
  }

  Complex need(const std::string& value, const char* name) const {
    if (value.empty()) throw std::invalid_argument("family '" + family + "' needs --" + name);
    return parse_complex(value);
  }

  WeightFamily build(Json& params) const {
    const Complex qv = need(q, "q");
    if (std::abs(qv - Complex(1)) < kPoleThreshold) throw std::invalid_argument("q = 1 is not allowed");
    params["q"] = complex_json(qv);
    if (family == "q") return q_family(qv);
    const Complex av = need(a, "a");
    params["a"] = complex_json(av);
    if (family == "aq") return aq_family(av, qv);
    const Complex bv = need(b, "b");
    params["b"] = complex_json(bv);
    if (family == "abq") return abq_family(av, bv, qv);
    const Complex pv = need(p, "p");
    params["p"] = complex_json(pv);
    return elliptic_family(av, bv, qv, pv);
  }
};

Json table_row(long k, Complex v) { return {{"k", k}, {"value", complex_json(v)}}; }

Json compute(const std::string& kind, const FamilyArgs& fa, const std::string& board, const std::string& alpha,
             long n, long r, long colors, bool odd) {
  Json doc;
  doc["kind"] = kind;
  doc["family"] = fa.family;
  Json params = Json::object();
  const WeightFamily f = fa.build(params);
  Json rows = Json::array();
  auto need_n = [&] {
    if (n < 1) throw std::invalid_argument(kind + " needs --n >= 1");
  };
  if (kind == "r-alpha") {
    if (board.empty()) throw std::invalid_argument("r-alpha needs --board");
    if (alpha.empty()) throw std::invalid_argument("r-alpha needs --alpha");
    AnyBoard b = parse_board(board);
    if (!std::holds_alternative<FerrersBoard>(b)) throw std::invalid_argument("r-alpha needs a Ferrers board");
    const FerrersBoard& fb = std::get<FerrersBoard>(b);
    const Complex al = parse_complex(alpha);
    params["alpha"] = complex_json(al);
    doc["board"] = fb.to_string();
    for (long k = 0; k <= fb.columns(); ++k) rows.push_back(table_row(k, r_alpha_recursive(f, fb, k, al)));
  } else if (kind == "m-k") {
    if (board.empty()) throw std::invalid_argument("m-k needs --board");
    AnyBoard b = parse_board(board);
    if (!std::holds_alternative<LShiftedBoard>(b)) throw std::invalid_argument("m-k needs an l-shifted board");
    const LShiftedBoard& lb = std::get<LShiftedBoard>(b);
    doc["board"] = lb.to_string();
    const std::vector<Complex> m = m_k_elliptic_all(f, lb);
    for (size_t k = 0; k < m.size(); ++k) rows.push_back(table_row(static_cast<long>(k), m[k]));
  } else if (kind == "stirling") {
    need_n();
    std::optional<long> restrict;
    if (r > 0) restrict = r;
    for (long k = 0; k <= n; ++k) rows.push_back(table_row(k, stirling1_elliptic(f, n, k, restrict)));
  } else if (kind == "abel") {
    need_n();
    for (long k = 1; k <= n; ++k) rows.push_back(table_row(k, abel_r_closed(f, n, k, colors)));
  } else {
    need_n();
    rows.push_back(table_row(n, perfect_matching_closed(f, n, odd)));
  }
  doc["params"] = params;
  doc["rows"] = rows;
  return doc;
}

Json read_json(const std::string& path) {
  if (path == "-") return Json::parse(std::cin);
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open '" + path + "'");
  return Json::parse(in);
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Elliptic rook theory: identity verification, tables and oracles", "ellrook"};
  app.require_subcommand(1);

  // verify
  CampaignConfig vc;
  std::string v_board, v_alpha, v_zmode = "box:-2:2", v_offset = "cumulative";
  long v_n = 0;
  auto* verify = app.add_subcommand("verify", "run a seeded two-side verification campaign");
  std::vector<std::string> theorem_names;
  for (const Suite& s : suites()) theorem_names.push_back(s.name);
  verify->add_option("--theorem", vc.options.theorem, "identity to check")
      ->required()
      ->check(CLI::IsMember(theorem_names));
  verify->add_option("--board", v_board, "board literal; random per trial when omitted");
  verify->add_option("--family", vc.options.family, "weight family (default: the theorem's first)");
  verify->add_option("--alpha", v_alpha, "alpha (re or re,im); drawn from {0,1,2,2.5+0.3i} when omitted");
  verify->add_option("--n", v_n, "size parameter for closed-form suites");
  verify->add_option("--trials", vc.trials, "number of trials")->capture_default_str();
  verify->add_option("--seed", vc.sampler.seed, "sampler seed")->capture_default_str();
  verify->add_option("--tol", vc.tol, "relative tolerance")->capture_default_str();
  verify->add_option("--z-mode", v_zmode, "int:LO:HI or box:LO:HI")->capture_default_str();
  verify->add_option("--offset", v_offset, "matching row offset: cumulative or increment")
      ->check(CLI::IsMember({"cumulative", "increment"}));

  // compute
  std::string c_kind, c_board, c_alpha;
  long c_n = 0, c_r = 0, c_colors = 1;
  bool c_odd = false;
  FamilyArgs c_family;
  auto* comp = app.add_subcommand("compute", "tabulate values at given parameters");
  comp->add_option("kind", c_kind, "r-alpha, m-k, stirling, abel or perfect")
      ->required()
      ->check(CLI::IsMember({"r-alpha", "m-k", "stirling", "abel", "perfect"}));
  comp->add_option("--board", c_board, "board literal");
  comp->add_option("--alpha", c_alpha, "alpha for r-alpha");
  comp->add_option("--n", c_n, "size for stirling, abel and perfect");
  comp->add_option("--r", c_r, "restriction for stirling");
  comp->add_option("--colors", c_colors, "colors for abel")->capture_default_str();
  comp->add_flag("--odd", c_odd, "perfect: maximal matchings on 2n+1 vertices");
  c_family.add_to(comp);

  // oracle
  std::string o_kind, o_board;
  long o_n = -1, o_k = -1;
  FamilyArgs o_family;
  auto* oracle = app.add_subcommand("oracle", "brute-force enumeration oracles");
  oracle->add_option("kind", o_kind, "count-file, count-match or binom-paths")
      ->required()
      ->check(CLI::IsMember({"count-file", "count-match", "binom-paths"}));
  oracle->add_option("--board", o_board, "board literal");
  oracle->add_option("--n", o_n, "binom-paths: n");
  oracle->add_option("--k", o_k, "rooks or k")->required();
  o_family.add_to(oracle);

  // replay
  std::string r_path;
  auto* replay = app.add_subcommand("replay", "re-evaluate a report from its recorded parameters");
  replay->add_option("report", r_path, "report file, or - for standard input")->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::Success& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitUsage;
  }

  try {
    if (verify->parsed()) {
      const Suite& suite = find_suite(vc.options.theorem);
      if (verify->count("--family") == 0) vc.options.family = suite.families.front();
      if (!v_board.empty()) vc.options.board = v_board;
      if (!v_alpha.empty()) vc.options.alpha = parse_complex(v_alpha);
      if (verify->count("--n") > 0) vc.options.n = v_n;
      vc.options.offset = parse_offset(v_offset);
      vc.sampler.z = ZMode::parse(v_zmode);
      vc.threads = thread_count_from_env();
      const Json report = run_campaign(vc);
      out << report.dump(2) << '\n';
      const bool pass = report["pass"].get<bool>();
      char line[160];
      std::snprintf(line, sizeof line, "%s: %zu trials, %zu skipped, max relerr %.3e, %s\n",
                    suite.name.c_str(), report["trials"].size(), report["skipped"].size(),
                    report["max_relerr"].get<double>(), pass ? "PASS" : "FAIL");
      err << line;
      return pass ? kExitPass : kExitFail;
    }
    if (comp->parsed()) {
      out << compute(c_kind, c_family, c_board, c_alpha, c_n, c_r, c_colors, c_odd).dump(2) << '\n';
      return kExitPass;
    }
    if (oracle->parsed()) {
      Json doc;
      doc["kind"] = o_kind;
      doc["k"] = o_k;
      if (o_kind == "binom-paths") {
        if (o_n < 0) throw std::invalid_argument("binom-paths needs --n");
        Json params = Json::object();
        const WeightFamily f = o_family.build(params);
        const Complex paths = ell_binomial_paths_oracle(f, o_n, o_k);
        const Complex direct = ell_binomial(f, o_n, o_k);
        doc["n"] = o_n;
        doc["family"] = o_family.family;
        doc["params"] = params;
        doc["value"] = complex_json(paths);
        doc["ell_binomial"] = complex_json(direct);
        doc["relerr"] = static_cast<double>(relative_error(paths, direct));
      } else {
        if (o_board.empty()) throw std::invalid_argument(o_kind + " needs --board");
        AnyBoard b = parse_board(o_board);
        doc["board"] = format_board(b);
        if (o_kind == "count-file") {
          if (!std::holds_alternative<FerrersBoard>(b)) throw std::invalid_argument("count-file needs a Ferrers board");
          doc["value"] = enumerate_file_placements(std::get<FerrersBoard>(b), o_k).size();
        } else {
          if (!std::holds_alternative<LShiftedBoard>(b)) {
            throw std::invalid_argument("count-match needs an l-shifted board");
          }
          doc["value"] = enumerate_matchings(std::get<LShiftedBoard>(b), o_k).size();
        }
      }
      out << doc.dump(2) << '\n';
      return kExitPass;
    }
    const Json result = replay_report(read_json(r_path));
    out << result.dump(2) << '\n';
    const bool ok = result["reproduced"].get<bool>();
    err << "replay: " << result["trials"].size() << " trials, " << (ok ? "reproduced" : "MISMATCH") << '\n';
    return ok ? kExitPass : kExitFail;
  } catch (const PoleError& e) {
    err << "error: " << e.what() << '\n';
    return kExitFail;
  } catch (const std::logic_error& e) {  // invalid_argument, domain_error, out_of_range
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const nlohmann::json::exception& e) {
    err << "error: malformed report: " << e.what() << '\n';
    return kExitUsage;
  }
}

}  // namespace ellrook::cli
