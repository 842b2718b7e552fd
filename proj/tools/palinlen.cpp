#include <algorithm>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "palinlen/automata.hpp"
#include "palinlen/closed_form.hpp"
#include "palinlen/errors.hpp"
#include "palinlen/pl_oracle.hpp"
#include "palinlen/recursion.hpp"
#include "palinlen/ternary.hpp"
#include "palinlen/verify.hpp"

namespace {

using palinlen::Dfao;
using palinlen::DomainError;
using palinlen::InternalError;
using palinlen::MorphicSystem;
using palinlen::ResourceLimitError;

constexpr int kExitVerifyFailure = 1;
constexpr int kExitLimit = 2;
constexpr int kExitInconsistent = 3;

const std::vector<std::string> kFunctions = {"p",  "q",  "qj", "t",
                                             "dp", "dq", "dt"};
const std::vector<std::string> kRoutes = {"oracle", "recursion", "closed-form",
                                          "automaton", "morphic", "all"};

bool is_difference(const std::string& fn) {
  return fn == "dp" || fn == "dq" || fn == "dt";
}

std::vector<std::string> routes_for(const std::string& fn) {
  if (fn == "qj") return {"oracle", "recursion"};
  return {"oracle", "recursion", "closed-form", "automaton", "morphic"};
}

char glyph(long long value) {
  if (value > 0) return '+';
  if (value < 0) return '-';
  return '0';
}

long long prefix_sum_dfao(const Dfao& a, std::uint64_t n) {
  long long sum = 0;
  for (std::uint64_t i = 0; i < n; ++i) sum += palinlen::dfao_eval(a, i);
  return sum;
}

long long prefix_sum_morphic(const MorphicSystem& m, std::uint64_t n,
                             std::uint64_t horizon) {
  palinlen::FixedPoint fp(m, horizon);
  long long sum = 0;
  for (std::uint64_t i = 0; i < n; ++i) sum += fp.output(i);
  return sum;
}

// True when the letter-level oracle can afford this evaluation: its cost is
// quadratic in the word it has to build.
bool oracle_fits(const std::string& fn, std::uint64_t n, std::uint64_t j,
                 std::size_t oracle_max) {
  const auto q_cost = [](std::uint64_t nn) {
    return palinlen::smallest_pow3_geq(nn) + nn;
  };
  if (fn == "p") return n <= oracle_max;
  if (fn == "q" || fn == "t") return q_cost(n) <= oracle_max;
  if (fn == "qj") return j + n <= oracle_max;
  if (fn == "dp") return n + 1 <= oracle_max;
  return q_cost(n + 1) <= oracle_max;  // dq, dt
}

long long eval_route(const std::string& fn, const std::string& route,
                     std::uint64_t n, std::uint64_t j, std::uint64_t horizon,
                     std::size_t oracle_max) {
  const auto& ref = palinlen::reference_systems();
  palinlen::Recursion rec;
  if (route == "oracle") {
    if (fn == "p") return palinlen::oracle_p(n, oracle_max);
    if (fn == "q") return palinlen::oracle_q(n, oracle_max);
    if (fn == "t") {
      return palinlen::oracle_p(n, oracle_max) -
             palinlen::oracle_q(n, oracle_max);
    }
    if (fn == "qj") return palinlen::oracle_qj(j, n, oracle_max);
    if (fn == "dp") {
      return palinlen::oracle_p(n + 1, oracle_max) -
             palinlen::oracle_p(n, oracle_max);
    }
    if (fn == "dq") {
      return palinlen::oracle_q(n + 1, oracle_max) -
             palinlen::oracle_q(n, oracle_max);
    }
    const auto t_at = [&](std::uint64_t nn) {
      return palinlen::oracle_p(nn, oracle_max) -
             palinlen::oracle_q(nn, oracle_max);
    };
    return t_at(n + 1) - t_at(n);
  }
  if (route == "recursion") {
    if (fn == "p") return rec.p(n);
    if (fn == "q") return rec.q(n);
    if (fn == "t") return rec.t(n);
    if (fn == "qj") return rec.qj(j, n);
    if (fn == "dp") return rec.p(n + 1) - rec.p(n);
    if (fn == "dq") return rec.q(n + 1) - rec.q(n);
    return rec.t(n + 1) - rec.t(n);
  }
  if (route == "closed-form") {
    const std::string x = palinlen::to_ternary(n);
    if (fn == "p") return palinlen::cf_q(x) + palinlen::cf_t(x);
    if (fn == "q") return palinlen::cf_q(x);
    if (fn == "t") return palinlen::cf_t(x);
    if (fn == "dp") return palinlen::cf_dp(n);
    if (fn == "dq") return palinlen::cf_dq(n);
    if (fn == "dt") return palinlen::cf_dt(n);
    throw DomainError("no closed form for q_j");
  }
  if (route == "automaton") {
    if (fn == "p") return prefix_sum_dfao(ref.dp, n);
    if (fn == "q") return prefix_sum_dfao(ref.dq, n);
    if (fn == "t") return prefix_sum_dfao(ref.dt, n);
    if (fn == "dp") return palinlen::dfao_eval(ref.dp, n);
    if (fn == "dq") return palinlen::dfao_eval(ref.dq, n);
    if (fn == "dt") return palinlen::dfao_eval(ref.dt, n);
    throw DomainError("no automaton for q_j");
  }
  if (route == "morphic") {
    if (fn == "p") return prefix_sum_morphic(ref.psi, n, horizon + 1);
    if (fn == "q") return prefix_sum_morphic(ref.delta, n, horizon + 1);
    if (fn == "t") return prefix_sum_morphic(ref.nu, n, horizon + 1);
    if (fn == "dp") return palinlen::morphic_output(ref.psi, n, horizon + 1);
    if (fn == "dq") return palinlen::morphic_output(ref.delta, n, horizon + 1);
    if (fn == "dt") return palinlen::morphic_output(ref.nu, n, horizon + 1);
    throw DomainError("no morphic system for q_j");
  }
  throw DomainError("unknown route \"" + route + "\"");
}

struct EvalSettings {
  std::string fn;
  std::uint64_t n = 0;
  std::uint64_t j = 0;
  std::string route = "all";
  std::string format = "text";
  std::uint64_t horizon = 59049;
  std::size_t oracle_max = palinlen::kDefaultOracleMax;
};

int run_eval(const EvalSettings& s) {
  if (s.n > s.horizon) {
    throw ResourceLimitError("n = " + std::to_string(s.n) +
                             " is beyond the horizon of " +
                             std::to_string(s.horizon) +
                             "; raise --horizon to go further");
  }
  std::vector<std::pair<std::string, long long>> values;
  std::vector<std::string> skipped;
  if (s.route == "all") {
    for (const std::string& route : routes_for(s.fn)) {
      if (route == "oracle" && !oracle_fits(s.fn, s.n, s.j, s.oracle_max)) {
        skipped.push_back("oracle: would need a word longer than " +
                          std::to_string(s.oracle_max) +
                          " letters; raise --oracle-max to include it");
        continue;
      }
      values.emplace_back(route,
                          eval_route(s.fn, route, s.n, s.j, s.horizon,
                                     s.oracle_max));
    }
  } else {
    const auto applicable = routes_for(s.fn);
    if (std::find(applicable.begin(), applicable.end(), s.route) ==
        applicable.end()) {
      throw DomainError("route \"" + s.route + "\" does not apply to " + s.fn);
    }
    values.emplace_back(s.route, eval_route(s.fn, s.route, s.n, s.j, s.horizon,
                                            s.oracle_max));
  }
  const bool agree =
      std::all_of(values.begin(), values.end(), [&](const auto& v) {
        return v.second == values.front().second;
      });
  if (s.format == "json") {
    nlohmann::json doc;
    doc["fn"] = s.fn;
    doc["n"] = s.n;
    if (s.fn == "qj") doc["j"] = s.j;
    nlohmann::json routes = nlohmann::json::object();
    for (const auto& [route, value] : values) routes[route] = value;
    doc["routes"] = routes;
    doc["agree"] = agree;
    if (!skipped.empty()) doc["skipped"] = skipped;
    std::cout << doc.dump(2) << "\n";
  } else {
    std::string head = s.fn;
    if (s.fn == "qj") head += "[j=" + std::to_string(s.j) + "]";
    head += "(" + std::to_string(s.n) + ")";
    if (values.size() == 1 && skipped.empty()) {
      std::cout << values.front().second << "\n";
    } else {
      std::cout << head << ":\n";
      for (const auto& [route, value] : values) {
        std::cout << "  " << route << std::string(12 - route.size(), ' ')
                  << value << "\n";
      }
      for (const std::string& note : skipped) {
        std::cout << "  (skipped " << note << ")\n";
      }
      std::cout << (agree ? "AGREE " : "DISAGREE ") << values.front().second
                << "\n";
    }
  }
  if (!agree) {
    std::cerr << "routes disagree on " << s.fn << "(" << std::to_string(s.n)
              << ")\n";
    return kExitInconsistent;
  }
  return 0;
}

struct DumpSettings {
  std::string fn;
  std::uint64_t from = 0;
  std::uint64_t to = 0;
  std::uint64_t j = 0;
  std::string route;  // empty: pick a default for the function
  std::string format = "text";
  std::uint64_t horizon = 59049;
  std::size_t oracle_max = palinlen::kDefaultOracleMax;
};

int run_dump(const DumpSettings& s) {
  if (s.from > s.to) {
    throw DomainError("empty range: from = " + std::to_string(s.from) +
                      " > to = " + std::to_string(s.to));
  }
  if (s.to > s.horizon) {
    throw ResourceLimitError("to = " + std::to_string(s.to) +
                             " is beyond the horizon of " +
                             std::to_string(s.horizon) +
                             "; raise --horizon to go further");
  }
  std::string route = s.route;
  if (route.empty()) route = is_difference(s.fn) ? "automaton" : "recursion";
  if (route == "all") {
    throw DomainError("dump walks one route; pick it with --route");
  }
  const auto applicable = routes_for(s.fn);
  if (std::find(applicable.begin(), applicable.end(), route) ==
      applicable.end()) {
    throw DomainError("route \"" + route + "\" does not apply to " + s.fn);
  }

  // Evaluate the range with shared state instead of one eval_route per
  // point, so dumps stay linear-ish in the range length.
  std::vector<long long> values;
  values.reserve(s.to - s.from + 1);
  const auto& ref = palinlen::reference_systems();
  palinlen::Recursion rec;
  std::optional<palinlen::FixedPoint> fp;
  if (route == "morphic") {
    const MorphicSystem& m = s.fn == "dq" || s.fn == "q"   ? ref.delta
                             : s.fn == "dt" || s.fn == "t" ? ref.nu
                                                           : ref.psi;
    fp.emplace(m, s.horizon + 1);
  }
  for (std::uint64_t n = s.from; n <= s.to; ++n) {
    if (route == "recursion") {
      if (s.fn == "p") values.push_back(rec.p(n));
      else if (s.fn == "q") values.push_back(rec.q(n));
      else if (s.fn == "t") values.push_back(rec.t(n));
      else if (s.fn == "qj") values.push_back(rec.qj(s.j, n));
      else if (s.fn == "dp") values.push_back(rec.p(n + 1) - rec.p(n));
      else if (s.fn == "dq") values.push_back(rec.q(n + 1) - rec.q(n));
      else values.push_back(rec.t(n + 1) - rec.t(n));
    } else if (route == "morphic" && is_difference(s.fn)) {
      values.push_back(fp->output(n));
    } else {
      values.push_back(eval_route(s.fn, route, n, s.j, s.horizon, s.oracle_max));
    }
  }

  if (s.format == "json") {
    nlohmann::json doc;
    doc["fn"] = s.fn;
    if (s.fn == "qj") doc["j"] = s.j;
    doc["from"] = s.from;
    doc["to"] = s.to;
    doc["route"] = route;
    doc["values"] = values;
    std::cout << doc.dump(2) << "\n";
  } else if (s.format == "csv") {
    std::cout << "n,value\n";
    for (std::size_t i = 0; i < values.size(); ++i) {
      std::cout << s.from + i << "," << values[i] << "\n";
    }
  } else {
    for (std::size_t i = 0; i < values.size(); ++i) {
      std::cout << s.from + i << " " << values[i] << "\n";
    }
    if (is_difference(s.fn)) {
      std::string glyphs;
      for (long long v : values) glyphs += glyph(v);
      std::cout << "glyphs " << glyphs << "\n";
    }
  }
  return 0;
}

struct VerifySettings {
  std::string suite = "all";
  palinlen::VerifyOptions options;
  bool horizon_set = false;
};

int run_verify(const VerifySettings& s) {
  palinlen::VerifyOptions opt = s.options;
  if (s.horizon_set) {
    // An explicit horizon also widens the quadratic oracle comparisons,
    // within reason; they are the whole point of the oracle suite.
    opt.oracle_p_max = std::min<std::uint64_t>(opt.horizon, opt.oracle_limit / 2);
    opt.oracle_q_max = std::min<std::uint64_t>(
        opt.oracle_q_max, opt.oracle_p_max);
  }
  const std::vector<palinlen::PropertyResult> results =
      palinlen::verify_suite(s.suite, opt);
  std::size_t failures = 0;
  for (const palinlen::PropertyResult& r : results) {
    std::cout << (r.pass ? "PASS" : "FAIL") << "  " << r.name << "  ["
              << r.checked << " checks]";
    if (!r.pass) {
      std::cout << "  " << r.detail;
      ++failures;
    }
    std::cout << "\n";
  }
  std::cout << (failures == 0 ? "OK" : "FAILED") << " " << results.size() - failures
            << "/" << results.size() << " properties\n";
  return failures == 0 ? 0 : kExitVerifyFailure;
}

struct ExportSettings {
  std::uint64_t from = 0;
  std::uint64_t to = 0;
  std::string output;
  std::uint64_t horizon = 59049;
};

int run_export(const ExportSettings& s) {
  if (s.from > s.to) {
    throw DomainError("empty range: from = " + std::to_string(s.from) +
                      " > to = " + std::to_string(s.to));
  }
  if (s.to > s.horizon) {
    throw ResourceLimitError("to = " + std::to_string(s.to) +
                             " is beyond the horizon of " +
                             std::to_string(s.horizon) +
                             "; raise --horizon to go further");
  }
  std::ofstream file;
  if (!s.output.empty()) {
    file.open(s.output);
    if (!file) throw DomainError("cannot open \"" + s.output + "\" for writing");
  }
  std::ostream& out = s.output.empty() ? std::cout : file;
  const auto& ref = palinlen::reference_systems();
  palinlen::Recursion rec;
  out << "n,ternary,p,q,t,dp,dq,dt\n";
  for (std::uint64_t n = s.from; n <= s.to; ++n) {
    out << n << "," << palinlen::to_ternary(n) << "," << rec.p(n) << ","
        << rec.q(n) << "," << rec.t(n) << "," << palinlen::dfao_eval(ref.dp, n)
        << "," << palinlen::dfao_eval(ref.dq, n) << ","
        << palinlen::dfao_eval(ref.dt, n) << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "palindromic prefix lengths of the Sierpinski word, computed along "
      "independent routes that check each other"};
  app.require_subcommand(1);

  EvalSettings eval;
  CLI::App* cmd_eval = app.add_subcommand(
      "eval", "evaluate p, q, qj, t, dp, dq or dt at one point");
  cmd_eval->add_option("fn", eval.fn, "function to evaluate")
      ->required()
      ->check(CLI::IsMember(kFunctions));
  cmd_eval->add_option("n", eval.n, "argument")->required();
  cmd_eval->add_option("--j", eval.j, "padding length for qj (default 0)");
  cmd_eval->add_option("--route", eval.route,
                       "oracle, recursion, closed-form, automaton, morphic or "
                       "all (default all)")
      ->check(CLI::IsMember(kRoutes));
  cmd_eval->add_option("--format", eval.format, "text or json")
      ->check(CLI::IsMember({"text", "json"}));
  cmd_eval->add_option("--horizon", eval.horizon,
                       "largest admissible argument (default 59049)");
  cmd_eval->add_option("--oracle-max", eval.oracle_max,
                       "longest word the letter-level oracle may build");

  DumpSettings dump;
  CLI::App* cmd_dump =
      app.add_subcommand("dump", "walk a function over a range of arguments");
  cmd_dump->add_option("fn", dump.fn, "function to walk")
      ->required()
      ->check(CLI::IsMember(kFunctions));
  cmd_dump->add_option("from", dump.from, "first argument")->required();
  cmd_dump->add_option("to", dump.to, "last argument")->required();
  cmd_dump->add_option("--j", dump.j, "padding length for qj (default 0)");
  cmd_dump->add_option("--route", dump.route,
                       "single route to walk (defaults to recursion, or to "
                       "automaton for the difference functions)")
      ->check(CLI::IsMember(kRoutes));
  cmd_dump->add_option("--format", dump.format, "text, csv or json")
      ->check(CLI::IsMember({"text", "csv", "json"}));
  cmd_dump->add_option("--horizon", dump.horizon,
                       "largest admissible argument (default 59049)");
  cmd_dump->add_option("--oracle-max", dump.oracle_max,
                       "longest word the letter-level oracle may build");

  VerifySettings verify;
  CLI::App* cmd_verify = app.add_subcommand(
      "verify", "run a property suite and report PASS/FAIL per property");
  cmd_verify
      ->add_option("suite", verify.suite,
                   "oracle, symmetry, closed-form, automata, product, "
                   "fibonacci or all (default all)")
      ->check(CLI::IsMember({"oracle", "symmetry", "closed-form", "automata",
                             "product", "fibonacci", "all"}));
  CLI::Option* verify_horizon = cmd_verify->add_option(
      "--horizon", verify.options.horizon,
      "sweep bound for the linear-time properties (default 59049)");
  cmd_verify->add_option("--oracle-max", verify.options.oracle_limit,
                         "longest word the letter-level oracle may build");

  ExportSettings exp;
  CLI::App* cmd_export = app.add_subcommand(
      "export", "write n,ternary,p,q,t,dp,dq,dt rows as CSV");
  cmd_export->add_option("from", exp.from, "first argument")->required();
  cmd_export->add_option("to", exp.to, "last argument")->required();
  cmd_export->add_option("-o,--output", exp.output,
                         "output file (default stdout)");
  cmd_export->add_option("--horizon", exp.horizon,
                         "largest admissible argument (default 59049)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (cmd_eval->parsed()) return run_eval(eval);
    if (cmd_dump->parsed()) return run_dump(dump);
    if (cmd_verify->parsed()) {
      verify.horizon_set = verify_horizon->count() > 0;
      return run_verify(verify);
    }
    return run_export(exp);
  } catch (const ResourceLimitError& e) {
    std::cerr << "limit: " << e.what() << "\n";
    return kExitLimit;
  } catch (const DomainError& e) {
    std::cerr << "domain: " << e.what() << "\n";
    return kExitLimit;
  } catch (const InternalError& e) {
    std::cerr << "internal: " << e.what() << "\n";
    return kExitInconsistent;
  }
}
