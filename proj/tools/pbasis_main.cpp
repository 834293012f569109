// Command-line surface for the pbasis library: check predicates on
// vector-set files, generate the built-in families, certify reports, and
// run the direct-search polling demo.
//
// Exit codes: 0 predicate true / success, 1 predicate false, 2 input or
// usage error, 3 internal cross-check disagreement.

#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "pbasis/pbasis.hpp"

namespace {

constexpr int kExitTrue = 0;
constexpr int kExitFalse = 1;
constexpr int kExitInputError = 2;
constexpr int kExitInconsistent = 3;

std::string read_input(const std::string& path) {
  if (path == "-") {
    std::ostringstream buf;
    buf << std::cin.rdbuf();
    return buf.str();
  }
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

int run_check(const std::string& path, const std::string& predicate_name, bool cross_check) {
  const auto predicate = pbasis::predicate_from_string(predicate_name);
  if (!predicate) {
    std::cerr << "pbasis: unknown predicate '" << predicate_name << "'\n";
    return kExitInputError;
  }
  pbasis::VecSet set;
  try {
    set = pbasis::parse_vecset(read_input(path));
  } catch (const std::exception& e) {
    std::cerr << "pbasis: " << e.what() << "\n";
    return kExitInputError;
  }

  bool verdict = false;
  pbasis::CheckReport report;
  switch (*predicate) {
    case pbasis::Predicate::pli:
      std::tie(verdict, report) = pbasis::is_pli(set);
      break;
    case pbasis::Predicate::spanning:
      std::tie(verdict, report) = pbasis::is_positively_spanning(set);
      break;
    case pbasis::Predicate::basis:
      std::tie(verdict, report) = pbasis::is_positive_basis(set);
      break;
  }
  const pbasis::ReportDocument doc{*predicate, std::move(report)};
  std::cout << pbasis::render_report(doc);

  if (cross_check) {
    const pbasis::CertifyResult cc = pbasis::certify_report(doc, /*cross_check=*/true);
    if (cc.cross_check_skips > 0) {
      std::cerr << "pbasis: cross-check skipped " << cc.cross_check_skips
                << " problem(s) beyond the oracle size guards\n";
    }
    if (!cc.consistent) {
      for (const std::string& issue : cc.issues) std::cerr << "pbasis: " << issue << "\n";
      return kExitInconsistent;
    }
  }
  return verdict ? kExitTrue : kExitFalse;
}

int run_generate(const std::string& family, long n, std::optional<long> m,
                 const std::vector<std::string>& params) {
  try {
    pbasis::VecSet set;
    if (family == "minimal") {
      if (n < 1) throw std::runtime_error("minimal family needs -n >= 1");
      set = pbasis::gen_minimal_basis(static_cast<std::size_t>(n));
    } else if (family == "maximal") {
      if (n < 1) throw std::runtime_error("maximal family needs -n >= 1");
      set = pbasis::gen_maximal_basis(static_cast<std::size_t>(n));
    } else if (family == "binomial") {
      if (n < 2) throw std::runtime_error("binomial family needs -n >= 2");
      set = pbasis::gen_binomial(static_cast<std::size_t>(n));
    } else if (family == "circle-lift") {
      if (n < 3) throw std::runtime_error("circle-lift family needs -n >= 3");
      std::vector<pbasis::CircleParam> ps;
      if (!params.empty()) {
        for (const std::string& tok : params) {
          ps.emplace_back(pbasis::parse_rational(tok));
        }
        if (m && static_cast<std::size_t>(*m) != ps.size()) {
          throw std::runtime_error("-m disagrees with the number of --params entries");
        }
      } else {
        if (!m || *m < 1) throw std::runtime_error("circle-lift family needs -m >= 1");
        ps = pbasis::default_circle_params(static_cast<std::size_t>(*m));
      }
      set = pbasis::gen_circle_lift(static_cast<std::size_t>(n), ps);
    } else {
      throw std::runtime_error("unknown family '" + family + "'");
    }
    std::cout << pbasis::serialize_vecset(set);
    return kExitTrue;
  } catch (const std::exception& e) {
    std::cerr << "pbasis: " << e.what() << "\n";
    return kExitInputError;
  }
}

int run_certify(const std::string& path, bool cross_check) {
  pbasis::ReportDocument doc{pbasis::Predicate::basis, pbasis::CheckReport{}, ""};
  try {
    doc = pbasis::parse_report(read_input(path));
  } catch (const std::exception& e) {
    std::cerr << "pbasis: " << e.what() << "\n";
    return kExitInputError;
  }
  const pbasis::CertifyResult result = pbasis::certify_report(doc, cross_check);
  std::cout << "witnesses verified " << result.witnesses_verified << "\n";
  if (cross_check) {
    std::cout << "cross-checks " << result.cross_checks << " skipped "
              << result.cross_check_skips << "\n";
  }
  if (!result.consistent) {
    for (const std::string& issue : result.issues) std::cerr << "pbasis: " << issue << "\n";
    std::cout << "certify inconsistent\n";
    return kExitInconsistent;
  }
  std::cout << "certify ok\n";
  return kExitTrue;
}

int run_poll(const std::string& pattern_path, const std::string& objective_name,
             const std::string& x0_text, double step0, double shrink, double step_min,
             long long budget) {
  pbasis::Objective objective;
  if (objective_name == "sphere") {
    objective = pbasis::objectives::sphere;
  } else if (objective_name == "quadratic") {
    objective = pbasis::objectives::shifted_quadratic;
  } else if (objective_name == "absum") {
    objective = pbasis::objectives::abs_sum;
  } else {
    std::cerr << "pbasis: unknown objective '" << objective_name
              << "' (choices: sphere, quadratic, absum)\n";
    return kExitInputError;
  }

  pbasis::VecSet pattern;
  try {
    pattern = pbasis::parse_vecset(read_input(pattern_path));
  } catch (const std::exception& e) {
    std::cerr << "pbasis: " << e.what() << "\n";
    return kExitInputError;
  }

  std::vector<double> x0;
  if (x0_text.empty()) {
    x0.assign(pattern.dim, 1.0);
  } else {
    std::stringstream ss(x0_text);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
      try {
        x0.push_back(std::stod(tok));
      } catch (const std::exception&) {
        std::cerr << "pbasis: malformed --x0 entry '" << tok << "'\n";
        return kExitInputError;
      }
    }
  }
  if (x0.size() != pattern.dim) {
    std::cerr << "pbasis: --x0 has " << x0.size() << " entries, pattern dim is " << pattern.dim
              << "\n";
    return kExitInputError;
  }
  if (!(step0 > 0) || !(shrink > 0 && shrink < 1) || !(step_min > 0) || !(step_min < step0) ||
      budget < 1) {
    std::cerr << "pbasis: need --step0 > --step-min > 0, --shrink in (0,1), --budget >= 1\n";
    return kExitInputError;
  }

  if (!pbasis::is_positively_spanning(pattern).first) {
    std::cerr << "pbasis: warning: pattern is not positively spanning; "
                 "a descent direction is not guaranteed\n";
  }

  std::cout << std::setprecision(12);
  auto print_point = [](const std::vector<double>& x) {
    for (std::size_t i = 0; i < x.size(); ++i) std::cout << (i ? "," : "") << x[i];
  };

  try {
    pbasis::PollState state{x0, step0, pattern, 0, std::nullopt};
    long long round = 0;
    while (state.step >= step_min && state.evals < budget) {
      pbasis::PollOutcome outcome = pbasis::poll(objective, state, budget - state.evals);
      ++round;
      if (auto* imp = std::get_if<pbasis::Improved>(&outcome)) {
        state.incumbent = imp->new_incumbent;
        state.incumbent_value = imp->value;
        std::cout << "round " << round << " x ";
        print_point(state.incumbent);
        std::cout << " f " << imp->value << " step " << state.step << " improved direction "
                  << imp->direction_index << "\n";
      } else if (std::get<pbasis::NoImprovement>(outcome).exhausted_pattern) {
        state.step *= shrink;
        std::cout << "round " << round << " x ";
        print_point(state.incumbent);
        std::cout << " f " << (state.incumbent_value ? *state.incumbent_value : 0.0) << " step "
                  << state.step << " shrink\n";
      } else {
        break;  // budget exhausted mid-poll
      }
    }
    std::cout << "final x ";
    print_point(state.incumbent);
    std::cout << " f " << (state.incumbent_value ? *state.incumbent_value : objective(state.incumbent))
              << " step " << state.step << " evals " << state.evals << "\n";
    return kExitTrue;
  } catch (const std::exception& e) {
    std::cerr << "pbasis: " << e.what() << "\n";
    return kExitInputError;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"positive spanning set / positive basis toolkit (exact rational arithmetic)"};
  app.require_subcommand(1);

  // check
  std::string check_path;
  std::string predicate = "basis";
  bool check_cross = false;
  CLI::App* check = app.add_subcommand("check", "check a predicate on a vector-set file");
  check->add_option("file", check_path, "vector-set file ('-' for stdin)")->required();
  check->add_option("--predicate", predicate, "pli | spanning | basis (default basis)");
  check->add_flag("--cross-check", check_cross, "also compare against the elimination oracle");

  // generate
  std::string family;
  long gen_n = 0;
  std::optional<long> gen_m;
  std::vector<std::string> gen_params;
  CLI::App* generate = app.add_subcommand("generate", "emit a built-in vector family");
  generate->add_option("--family", family, "minimal | maximal | binomial | circle-lift")
      ->required();
  generate->add_option("-n", gen_n, "ambient dimension")->required();
  generate->add_option("-m", gen_m, "number of circle-lift vectors");
  generate->add_option("--params", gen_params,
                       "explicit circle-lift slope parameters (rationals)");

  // certify
  std::string certify_path;
  bool certify_cross = false;
  CLI::App* certify = app.add_subcommand("certify", "re-verify a report document");
  certify->add_option("file", certify_path, "report file ('-' for stdin)")->required();
  certify->add_flag("--cross-check", certify_cross,
                    "also compare stored verdicts against the elimination oracle");

  // poll
  std::string poll_pattern;
  std::string objective_name = "sphere";
  std::string x0_text;
  double step0 = 1.0;
  double shrink = 0.5;
  double step_min = 1e-6;
  long long budget = 500;
  CLI::App* poll = app.add_subcommand("poll", "run the direct-search polling demo");
  poll->add_option("pattern", poll_pattern, "pattern vector-set file")->required();
  poll->add_option("--objective", objective_name, "sphere | quadratic | absum");
  poll->add_option("--x0", x0_text, "starting point, comma-separated (default all ones)");
  poll->add_option("--step0", step0, "initial step size");
  poll->add_option("--shrink", shrink, "step shrink factor in (0,1)");
  poll->add_option("--step-min", step_min, "stop once the step falls below this");
  poll->add_option("--budget", budget, "objective evaluation budget");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInputError;
  }

  if (check->parsed()) return run_check(check_path, predicate, check_cross);
  if (generate->parsed()) return run_generate(family, gen_n, gen_m, gen_params);
  if (certify->parsed()) return run_certify(certify_path, certify_cross);
  if (poll->parsed()) {
    return run_poll(poll_pattern, objective_name, x0_text, step0, shrink, step_min, budget);
  }
  return kExitInputError;
}
