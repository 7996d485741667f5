#include "circnorm/cli/spec_parser.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <map>

#include "circnorm/errors.hpp"

namespace circnorm::cli {

namespace {

[[noreturn]] void fail(const std::string& message) {
  throw Error(ErrorKind::InvalidArgument, message);
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = text.find(sep, start);
    parts.push_back(text.substr(start, pos - start));
    if (pos == std::string::npos) break;
    start = pos + 1;
  }
  return parts;
}

std::vector<BigInt> parse_int_list(const std::string& key, const std::string& text) {
  std::vector<BigInt> out;
  for (const auto& item : split(text, ',')) {
    try {
      out.push_back(parse_decimal(item));
    } catch (const Error&) {
      fail("spec key '" + key + "': '" + item + "' is not an integer");
    }
  }
  return out;
}

std::size_t parse_count(const std::string& text, const std::string& what) {
  std::size_t value = 0;
  const auto* first = text.data();
  const auto* last = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (text.empty() || ec != std::errc{} || ptr != last) {
    fail(what + ": '" + text + "' is not a nonnegative integer");
  }
  return value;
}

std::string lower(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return out;
}

}  // namespace

RecurrenceSpec parse_recurrence_spec(std::string_view text) {
  std::string compact;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) compact.push_back(c);
  }
  if (compact.empty()) fail("empty recurrence spec");

  std::map<std::string, std::string> fields;
  for (const auto& part : split(compact, ';')) {
    if (part.empty()) continue;  // tolerate a trailing ';'
    const auto eq = part.find('=');
    if (eq == std::string::npos) fail("spec field '" + part + "' is missing '='");
    std::string key = part.substr(0, eq);
    if (key != "k" && key != "coef" && key != "init") fail("unknown spec key '" + key + "'");
    if (!fields.emplace(key, part.substr(eq + 1)).second) fail("duplicate spec key '" + key + "'");
  }
  for (const char* key : {"k", "coef", "init"}) {
    if (!fields.contains(key)) fail(std::string("spec is missing '") + key + "='");
  }

  const std::size_t k = parse_count(fields["k"], "spec key 'k'");
  if (k == 0) fail("spec key 'k' must be at least 1");
  auto coef = parse_int_list("coef", fields["coef"]);
  auto init = parse_int_list("init", fields["init"]);
  if (coef.size() != k) {
    fail("spec has k=" + std::to_string(k) + " but " + std::to_string(coef.size()) + " coefficients");
  }
  if (init.size() != k) {
    fail("spec has k=" + std::to_string(k) + " but " + std::to_string(init.size()) + " initial terms");
  }
  return RecurrenceSpec(std::move(coef), std::move(init));
}

SequenceId resolve_sequence(std::string_view id, const std::optional<std::string>& spec) {
  const std::string name = lower(id);
  if (name == "custom") {
    if (!spec) fail("--id custom requires --spec");
    return SequenceId::custom(parse_recurrence_spec(*spec));
  }
  for (Builtin b : kAllBuiltins) {
    if (name == to_string(b)) {
      if (spec) fail("--spec is only valid with --id custom");
      return b;
    }
  }
  fail("unknown sequence '" + std::string(id) +
       "' (expected fibonacci, lucas, pell, perrin or custom)");
}

std::vector<std::size_t> parse_count_list(std::string_view text) {
  std::vector<std::size_t> out;
  for (const auto& item : split(std::string(text), ',')) {
    const std::size_t n = parse_count(item, "--n");
    if (n == 0) fail("--n entries must be at least 1");
    out.push_back(n);
  }
  return out;
}

}  // namespace circnorm::cli
