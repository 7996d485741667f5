#include "circnorm/sequences.hpp"

#include <algorithm>

#include "circnorm/errors.hpp"

namespace circnorm {

namespace {

std::vector<BigInt> ints(std::initializer_list<long> xs) {
  std::vector<BigInt> out;
  out.reserve(xs.size());
  for (long x : xs) out.emplace_back(x);
  return out;
}

std::vector<BigInt> generate(const RecurrenceSpec& spec, std::size_t count) {
  const std::size_t k = spec.order();
  std::vector<BigInt> out;
  out.reserve(count);
  for (std::size_t i = 0; i < std::min(count, k); ++i) {
    out.push_back(spec.initial_terms()[i]);
  }
  while (out.size() < count) {
    out.push_back(spec.step(std::span<const BigInt>(out).last(k)));
  }
  return out;
}

void require_positive_count(std::size_t n, const char* what) {
  if (n == 0) {
    throw Error(ErrorKind::InvalidArgument,
                std::string(what) + ": count must be at least 1");
  }
}

Builtin require_builtin(const SequenceId& id, const char* what) {
  auto b = id.builtin();
  if (!b) {
    throw Error(ErrorKind::UnsupportedSequence,
                std::string(what) + ": no closed form for custom sequences");
  }
  return *b;
}

enum class Form { Shipped, Published };

// Largest index each identity reads, for a sum of n terms.
std::size_t highest_index(Builtin b, std::size_t n) {
  switch (b) {
    case Builtin::Fibonacci: return n + 1;
    case Builtin::Lucas: return n + 2;
    case Builtin::Pell: return n;
    case Builtin::Perrin: return n + 4;
  }
  return n;
}

// `own` holds the sequence's terms and `fib` the Fibonacci terms, both long
// enough for highest_index(b, n).
BigInt evaluate_identity(Builtin b, std::size_t n, std::span<const BigInt> own,
                         std::span<const BigInt> fib, Form form,
                         bool& exact_division) {
  exact_division = true;
  switch (b) {
    case Builtin::Fibonacci:
      return fib[n + 1] - 1;
    case Builtin::Lucas:
      return fib[n + 2] + fib[n] - 1;
    case Builtin::Pell: {
      BigInt numerator = own[n] + own[n - 1] - 1;
      exact_division = mpz_even_p(numerator.get_mpz_t()) != 0;
      BigInt half;
      mpz_tdiv_q_2exp(half.get_mpz_t(), numerator.get_mpz_t(), 1);
      return half;
    }
    case Builtin::Perrin:
      return own[n + 4] - (form == Form::Shipped ? 2 : 1);
  }
  return 0;
}

BigInt identity_value(const SequenceId& id, std::size_t n, Form form,
                      const char* what) {
  const Builtin b = require_builtin(id, what);
  require_positive_count(n, what);
  const std::size_t len = highest_index(b, n) + 1;
  const auto own = generate(builtin_spec(b), len);
  const auto fib = b == Builtin::Lucas
                       ? generate(builtin_spec(Builtin::Fibonacci), len)
                       : own;
  bool exact = true;
  return evaluate_identity(b, n, own, fib, form, exact);
}

}  // namespace

RecurrenceSpec::RecurrenceSpec(std::vector<BigInt> coefficients,
                               std::vector<BigInt> initial_terms)
    : coefficients_(std::move(coefficients)),
      initial_terms_(std::move(initial_terms)) {
  if (coefficients_.empty()) {
    throw Error(ErrorKind::InvalidArgument, "recurrence order must be >= 1");
  }
  if (coefficients_.size() != initial_terms_.size()) {
    throw Error(ErrorKind::InvalidArgument,
                "recurrence needs exactly `order` coefficients and initial "
                "terms (got " +
                    std::to_string(coefficients_.size()) + " and " +
                    std::to_string(initial_terms_.size()) + ")");
  }
}

BigInt RecurrenceSpec::step(std::span<const BigInt> window) const {
  const std::size_t k = order();
  if (window.size() != k) {
    throw Error(ErrorKind::DimensionMismatch,
                "recurrence window must hold exactly `order` terms");
  }
  // coefficients_[i] multiplies t_{n-1-i}; window is oldest first.
  BigInt next = 0;
  for (std::size_t i = 0; i < k; ++i) {
    if (sgn(coefficients_[i]) != 0) next += coefficients_[i] * window[k - 1 - i];
  }
  return next;
}

std::string to_string(Builtin b) {
  switch (b) {
    case Builtin::Fibonacci: return "fibonacci";
    case Builtin::Lucas: return "lucas";
    case Builtin::Pell: return "pell";
    case Builtin::Perrin: return "perrin";
  }
  return "unknown";
}

RecurrenceSpec builtin_spec(Builtin b) {
  switch (b) {
    case Builtin::Fibonacci: return {ints({1, 1}), ints({0, 1})};
    case Builtin::Lucas: return {ints({1, 1}), ints({2, 1})};
    case Builtin::Pell: return {ints({2, 1}), ints({0, 1})};
    case Builtin::Perrin: return {ints({0, 1, 1}), ints({3, 0, 2})};
  }
  throw Error(ErrorKind::InvalidArgument, "unknown builtin sequence");
}

std::optional<Builtin> SequenceId::builtin() const noexcept {
  if (const auto* b = std::get_if<Builtin>(&value_)) return *b;
  return std::nullopt;
}

RecurrenceSpec SequenceId::spec() const {
  if (const auto* b = std::get_if<Builtin>(&value_)) return builtin_spec(*b);
  return std::get<RecurrenceSpec>(value_);
}

std::string SequenceId::name() const {
  if (const auto* b = std::get_if<Builtin>(&value_)) return to_string(*b);
  return "custom";
}

BigInt term(const SequenceId& id, std::size_t n) {
  return generate(id.spec(), n + 1).back();
}

std::vector<BigInt> prefix(const SequenceId& id, std::size_t n) {
  require_positive_count(n, "prefix");
  return generate(id.spec(), n);
}

BigInt prefix_sum(const SequenceId& id, std::size_t n) {
  require_positive_count(n, "prefix_sum");
  BigInt total = 0;
  for (const auto& t : generate(id.spec(), n)) total += t;
  return total;
}

BigInt closed_form_sum(const SequenceId& id, std::size_t n) {
  return identity_value(id, n, Form::Shipped, "closed_form_sum");
}

BigInt published_identity(const SequenceId& id, std::size_t n) {
  return identity_value(id, n, Form::Published, "published_identity");
}

std::size_t IdentityAudit::match_count() const {
  return static_cast<std::size_t>(
      std::count_if(rows.begin(), rows.end(), [](const auto& r) { return r.match; }));
}

IdentityAudit audit_published_identity(const SequenceId& id, std::size_t n_max) {
  const Builtin b = require_builtin(id, "audit_published_identity");
  require_positive_count(n_max, "audit_published_identity");

  const std::size_t len = highest_index(b, n_max) + 1;
  const auto own = generate(builtin_spec(b), len);
  const auto fib = b == Builtin::Lucas
                       ? generate(builtin_spec(Builtin::Fibonacci), len)
                       : own;

  IdentityAudit audit;
  audit.sequence = b;
  audit.rows.reserve(n_max);
  BigInt running = 0;
  for (std::size_t n = 1; n <= n_max; ++n) {
    running += own[n - 1];
    IdentityAuditRow row;
    row.n = n;
    row.published = evaluate_identity(b, n, own, fib, Form::Published,
                                      row.exact_division);
    row.direct_sum = running;
    row.match = row.exact_division && row.published == row.direct_sum;
    audit.rows.push_back(std::move(row));
  }
  return audit;
}

}  // namespace circnorm
