#pragma once

// Library side of the `circnorm` CLI. Each command returns an OutputRecord;
// the executable only parses flags, prints, and maps outcomes to exit codes.

#include <functional>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "circnorm/cli/output_record.hpp"
#include "circnorm/errors.hpp"
#include "circnorm/sequences.hpp"
#include "circnorm/spectral.hpp"

namespace circnorm::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;

using Parameters = std::map<std::string, std::string>;

OutputRecord cmd_seq(const SequenceId& id, std::size_t n, bool with_sum, Parameters params = {});

OutputRecord cmd_norm(const SequenceId& id, std::size_t n, std::span<const Method> methods,
                      double rel_tol, Parameters params = {});

/// Closed-form sum under test; swapped out by tests to prove that a wrong
/// closed form flips the exit code.
using ClosedFormFn = std::function<BigInt(const SequenceId&, std::size_t)>;

struct VerifyOutcome {
  OutputRecord record;
  int exit_code = kExitOk;
};

/// For every sequence and 1 <= n <= n_max: shipped closed form and the
/// published identity against direct summation, plus the norm cross-check.
/// Exit code is 0 iff every shipped closed form matches and every
/// cross-check agrees. Published-form mismatches are findings, not failures.
VerifyOutcome cmd_verify(std::span<const SequenceId> ids, std::size_t n_max, double rel_tol,
                         Parameters params = {}, const ClosedFormFn& closed_form = closed_form_sum);

OutputRecord cmd_bench(const SequenceId& id, std::span<const std::size_t> n_list,
                       std::size_t repetitions, double rel_tol = kDefaultRelTol,
                       Parameters params = {});

OutputRecord error_record(const std::string& command, Parameters params, const Error& error);

/// Row tables for `--format csv`. Only verify and bench records have one;
/// anything else throws InvalidArgument.
std::string to_csv(const OutputRecord& record);

/// Formula text for reports, e.g. "F_{n+1} - 1".
std::string closed_form_text(Builtin b);
std::string published_form_text(Builtin b);

}  // namespace circnorm::cli
