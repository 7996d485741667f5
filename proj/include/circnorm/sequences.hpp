#pragma once

// Exact integer linear-recurrence sequences, their partial sums, and the
// closed-form sum identities for the Fibonacci, Lucas, Pell and Perrin
// numbers.
//
// Indexing is zero-based: term(id, 0) is the first initial term.

#include <cstddef>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "circnorm/bigint.hpp"

namespace circnorm {

/// t_n = a_1 t_{n-1} + ... + a_k t_{n-k}, seeded with t_0 ... t_{k-1}.
class RecurrenceSpec {
 public:
  /// Throws InvalidArgument unless order >= 1 and both lists have `order`
  /// elements. Negative coefficients and initial terms are allowed.
  RecurrenceSpec(std::vector<BigInt> coefficients,
                 std::vector<BigInt> initial_terms);

  std::size_t order() const noexcept { return coefficients_.size(); }
  const std::vector<BigInt>& coefficients() const noexcept {
    return coefficients_;
  }
  const std::vector<BigInt>& initial_terms() const noexcept {
    return initial_terms_;
  }

  /// Next term from the last `order()` terms, oldest first.
  BigInt step(std::span<const BigInt> window) const;

  bool operator==(const RecurrenceSpec&) const = default;

 private:
  std::vector<BigInt> coefficients_;
  std::vector<BigInt> initial_terms_;
};

enum class Builtin { Fibonacci, Lucas, Pell, Perrin };

inline constexpr Builtin kAllBuiltins[] = {Builtin::Fibonacci, Builtin::Lucas,
                                           Builtin::Pell, Builtin::Perrin};

std::string to_string(Builtin b);

class SequenceId {
 public:
  SequenceId(Builtin b) : value_(b) {}  // NOLINT: implicit by intent
  explicit SequenceId(RecurrenceSpec spec) : value_(std::move(spec)) {}

  static SequenceId custom(RecurrenceSpec spec) {
    return SequenceId(std::move(spec));
  }

  bool is_builtin() const noexcept {
    return std::holds_alternative<Builtin>(value_);
  }
  /// Empty for custom sequences.
  std::optional<Builtin> builtin() const noexcept;

  /// The defining recurrence; builtins map to their canonical specs.
  RecurrenceSpec spec() const;

  /// "fibonacci", "lucas", "pell", "perrin" or "custom".
  std::string name() const;

 private:
  std::variant<Builtin, RecurrenceSpec> value_;
};

RecurrenceSpec builtin_spec(Builtin b);

/// Exact n-th term.
BigInt term(const SequenceId& id, std::size_t n);

/// [term(id,0), ..., term(id,n-1)] in one linear pass. Throws
/// InvalidArgument when n == 0.
std::vector<BigInt> prefix(const SequenceId& id, std::size_t n);

/// Direct summation of the first n terms.
BigInt prefix_sum(const SequenceId& id, std::size_t n);

/// Shipped closed form for the sum of the first n terms of a builtin:
///   Fibonacci  F_{n+1} - 1
///   Lucas      F_{n+2} + F_n - 1
///   Pell       (P_n + P_{n-1} - 1) / 2
///   Perrin     R_{n+4} - 2
/// Throws UnsupportedSequence for custom sequences.
BigInt closed_form_sum(const SequenceId& id, std::size_t n);

/// The identity as commonly published. Identical to closed_form_sum except
/// for Perrin, where the printed constant is R_{n+4} - 1.
BigInt published_identity(const SequenceId& id, std::size_t n);

struct IdentityAuditRow {
  std::size_t n = 0;
  BigInt published;
  BigInt direct_sum;
  bool match = false;
  /// False when the formula divides and the numerator is not divisible.
  bool exact_division = true;
};

struct IdentityAudit {
  Builtin sequence = Builtin::Fibonacci;
  std::vector<IdentityAuditRow> rows;

  std::size_t match_count() const;
  std::size_t mismatch_count() const { return rows.size() - match_count(); }
};

/// Evaluates published_identity for 1 <= n <= n_max against prefix_sum.
/// Throws UnsupportedSequence for custom sequences, InvalidArgument when
/// n_max == 0.
IdentityAudit audit_published_identity(const SequenceId& id, std::size_t n_max);

}  // namespace circnorm
