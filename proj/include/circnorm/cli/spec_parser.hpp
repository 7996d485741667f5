#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "circnorm/sequences.hpp"

namespace circnorm::cli {

/// Parses `k=<order>;coef=<a1,...,ak>;init=<t0,...,tk-1>`. Whitespace is
/// ignored; keys may appear in any order but each exactly once.
/// Throws Error(InvalidArgument) describing the first problem found.
RecurrenceSpec parse_recurrence_spec(std::string_view text);

/// Maps a --id value (case-insensitive) plus optional --spec to a sequence.
/// "custom" requires a spec; builtins reject one.
SequenceId resolve_sequence(std::string_view id, const std::optional<std::string>& spec);

/// "256,1024" -> {256, 1024}; every entry must be a positive integer.
std::vector<std::size_t> parse_count_list(std::string_view text);

}  // namespace circnorm::cli
