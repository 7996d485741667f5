// circnorm: spectral norms of circulant matrices built from integer
// recurrence sequences.
//
//   circnorm seq    --id fibonacci --n 10 [--sum]
//   circnorm norm   --id pell --n 8 [--methods sum,dft,power|all] [--rel-tol 1e-8]
//   circnorm verify --id all --n-max 60 [--format json|csv]
//   circnorm bench  --id lucas --n 64,256 --reps 5 [--format json|csv]
//
// Exit codes: 0 success, 1 verification/computation failure, 2 usage error.

#include <CLI11.hpp>

#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "circnorm/cli/commands.hpp"
#include "circnorm/cli/spec_parser.hpp"

namespace {

using namespace circnorm;
using namespace circnorm::cli;

std::string format_double(double x) {
  std::ostringstream out;
  out << x;
  return out.str();
}

std::vector<Method> parse_methods(const std::string& text) {
  std::vector<Method> methods;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item == "all") {
      methods.assign(std::begin(kAllMethods), std::end(kAllMethods));
      continue;
    }
    const Method m = parse_method(item);
    if (std::find(methods.begin(), methods.end(), m) == methods.end()) methods.push_back(m);
  }
  if (methods.empty()) throw Error(ErrorKind::InvalidArgument, "--methods is empty");
  return methods;
}

void emit(const OutputRecord& record, const std::string& format) {
  if (format == "csv") {
    std::cout << to_csv(record);
  } else {
    std::cout << serialize(record) << '\n';
  }
  std::cout.flush();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Spectral norms of circulant matrices from integer recurrence sequences"};
  app.require_subcommand(1);

  std::string id;
  std::optional<std::string> spec;
  std::size_t n = 0;
  std::size_t n_max = 0;
  std::string n_list;
  std::string methods_text = "all";
  double rel_tol = kDefaultRelTol;
  std::size_t reps = 5;
  std::string format = "json";
  bool with_sum = false;

  auto add_sequence = [&](CLI::App* sub, bool allow_all) {
    sub->add_option("--id", id,
                    allow_all ? "fibonacci|lucas|pell|perrin|custom|all"
                              : "fibonacci|lucas|pell|perrin|custom")
        ->required();
    sub->add_option("--spec", spec, "custom recurrence: k=<order>;coef=<a1,..>;init=<t0,..>");
  };
  auto add_rel_tol = [&](CLI::App* sub) {
    sub->add_option("--rel-tol", rel_tol, "agreement tolerance")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
  };
  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", format, "output format")
        ->check(CLI::IsMember({"json", "csv"}))
        ->capture_default_str();
  };

  auto* seq = app.add_subcommand("seq", "print the first n terms of a sequence");
  add_sequence(seq, false);
  seq->add_option("--n", n, "number of terms")->required()->check(CLI::PositiveNumber);
  seq->add_flag("--sum", with_sum, "also print the direct and closed-form sums");

  auto* norm = app.add_subcommand("norm", "spectral norm of circ(x_0, ..., x_{n-1})");
  add_sequence(norm, false);
  norm->add_option("--n", n, "matrix order")->required()->check(CLI::PositiveNumber);
  norm->add_option("--methods", methods_text, "comma list of sum,dft,power or all")
      ->capture_default_str();
  add_rel_tol(norm);

  auto* verify = app.add_subcommand("verify", "audit sum identities and cross-check norms");
  add_sequence(verify, true);
  verify->add_option("--n-max", n_max, "largest n to check")->required()->check(CLI::PositiveNumber);
  add_rel_tol(verify);
  add_format(verify);

  auto* bench = app.add_subcommand("bench", "time the three norm methods");
  add_sequence(bench, false);
  bench->add_option("--n", n_list, "comma list of orders")->required();
  bench->add_option("--reps", reps, "repetitions per method")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  add_rel_tol(bench);
  add_format(bench);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  CLI::App* active = app.get_subcommands().front();
  const std::string command = active->get_name();
  Parameters params{{"id", id}};
  if (spec) params["spec"] = *spec;

  // Flag-level validation: anything wrong here is a usage error.
  std::vector<SequenceId> ids;
  std::vector<Method> methods;
  std::vector<std::size_t> orders;
  try {
    if (command == "verify" && id == "all") {
      if (spec) throw Error(ErrorKind::InvalidArgument, "--spec is only valid with --id custom");
      ids.assign(std::begin(kAllBuiltins), std::end(kAllBuiltins));
    } else {
      ids.push_back(resolve_sequence(id, spec));
    }
    if (command == "norm") methods = parse_methods(methods_text);
    if (command == "bench") orders = parse_count_list(n_list);
  } catch (const Error& e) {
    std::cerr << "circnorm " << command << ": " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    if (command == "seq") {
      params["n"] = std::to_string(n);
      params["sum"] = with_sum ? "true" : "false";
      emit(cmd_seq(ids.front(), n, with_sum, params), "json");
      return kExitOk;
    }
    if (command == "norm") {
      params["n"] = std::to_string(n);
      params["methods"] = methods_text;
      params["rel_tol"] = format_double(rel_tol);
      emit(cmd_norm(ids.front(), n, methods, rel_tol, params), "json");
      return kExitOk;
    }
    if (command == "verify") {
      params["n_max"] = std::to_string(n_max);
      params["rel_tol"] = format_double(rel_tol);
      params["format"] = format;
      auto outcome = cmd_verify(ids, n_max, rel_tol, params);
      emit(outcome.record, format);
      if (outcome.exit_code != kExitOk) std::cerr << "circnorm verify: cross-check failures\n";
      return outcome.exit_code;
    }
    params["n"] = n_list;
    params["reps"] = std::to_string(reps);
    params["rel_tol"] = format_double(rel_tol);
    params["format"] = format;
    emit(cmd_bench(ids.front(), orders, reps, rel_tol, params), format);
    return kExitOk;
  } catch (const Error& e) {
    std::cerr << "circnorm " << command << ": " << to_string(e.kind()) << ": " << e.what() << '\n';
    emit(error_record(command, params, e), "json");
    return kExitFailure;
  }
}
