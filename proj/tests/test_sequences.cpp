#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "circnorm/errors.hpp"
#include "circnorm/sequences.hpp"
#include "support/helpers.hpp"
#include "support/oracles.hpp"

using namespace circnorm;
using testing_support::big;
using testing_support::bigs;

namespace {

BigInt b(long x) { return BigInt(x); }

}  // namespace

TEST_CASE("builtin specs") {
  CHECK(builtin_spec(Builtin::Fibonacci) == RecurrenceSpec({b(1), b(1)}, {b(0), b(1)}));
  CHECK(builtin_spec(Builtin::Lucas) == RecurrenceSpec({b(1), b(1)}, {b(2), b(1)}));
  CHECK(builtin_spec(Builtin::Pell) == RecurrenceSpec({b(2), b(1)}, {b(0), b(1)}));
  CHECK(builtin_spec(Builtin::Perrin) == RecurrenceSpec({b(0), b(1), b(1)}, {b(3), b(0), b(2)}));
  CHECK(SequenceId(Builtin::Pell).name() == "pell");
  CHECK(SequenceId::custom(builtin_spec(Builtin::Pell)).name() == "custom");
}

TEST_CASE("term") {
  CHECK(term(Builtin::Fibonacci, 0) == 0);
  CHECK(term(Builtin::Perrin, 1) == 0);

  // Frozen from the 128-bit iteration oracle.
  REQUIRE(oracle::fibonacci(11)[10] == 55);
  CHECK(term(Builtin::Fibonacci, 10) == 55);
  REQUIRE(oracle::perrin(6)[5] == 5);
  CHECK(term(Builtin::Perrin, 5) == 5);

  // Well past 64 bits.
  CHECK(term(Builtin::Fibonacci, 150) == big(oracle::fibonacci(151)[150]));
  CHECK(term(Builtin::Fibonacci, 100).get_str() == "354224848179261915075");
}

TEST_CASE("prefix") {
  REQUIRE(oracle::fibonacci(5) == std::vector<oracle::i128>{0, 1, 1, 2, 3});
  CHECK(prefix(Builtin::Fibonacci, 5) == bigs(std::vector<std::int64_t>{0, 1, 1, 2, 3}));
  CHECK(prefix(Builtin::Lucas, 1) == bigs(std::vector<std::int64_t>{2}));
  REQUIRE(oracle::perrin(4) == std::vector<oracle::i128>{3, 0, 2, 3});
  CHECK(prefix(Builtin::Perrin, 4) == bigs(std::vector<std::int64_t>{3, 0, 2, 3}));
  CHECK_THROWS_AS(prefix(Builtin::Fibonacci, 0), Error);
}

TEST_CASE("prefix_sum") {
  REQUIRE(oracle::sum_first(oracle::fibonacci(4), 4) == 4);
  CHECK(prefix_sum(Builtin::Fibonacci, 4) == 4);
  REQUIRE(oracle::sum_first(oracle::lucas(3), 3) == 6);
  CHECK(prefix_sum(Builtin::Lucas, 3) == 6);
  CHECK(prefix_sum(SequenceId::custom(RecurrenceSpec({b(1)}, {b(0)})), 7) == 0);
}

TEST_CASE("closed_form_sum") {
  REQUIRE(oracle::sum_first(oracle::fibonacci(4), 4) == 4);
  CHECK(closed_form_sum(Builtin::Fibonacci, 4) == 4);
  REQUIRE(oracle::sum_first(oracle::pell(3), 3) == 3);
  CHECK(closed_form_sum(Builtin::Pell, 3) == 3);
  REQUIRE(oracle::sum_first(oracle::perrin(3), 3) == 5);
  CHECK(closed_form_sum(Builtin::Perrin, 3) == 5);
  CHECK(published_identity(Builtin::Perrin, 3) == 6);

  const auto custom = SequenceId::custom(builtin_spec(Builtin::Fibonacci));
  try {
    closed_form_sum(custom, 4);
    FAIL("expected UnsupportedSequence");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::UnsupportedSequence);
  }
  CHECK_THROWS_AS(closed_form_sum(Builtin::Lucas, 0), Error);
}

TEST_CASE("audit_published_identity") {
  const auto fib = audit_published_identity(Builtin::Fibonacci, 50);
  CHECK(fib.rows.size() == 50);
  CHECK(fib.match_count() == 50);

  const auto pell = audit_published_identity(Builtin::Pell, 50);
  CHECK(pell.match_count() == 50);
  for (const auto& row : pell.rows) CHECK(row.exact_division);

  const auto perrin = audit_published_identity(Builtin::Perrin, 50);
  CHECK(perrin.match_count() == 0);
  for (const auto& row : perrin.rows) CHECK(row.published - row.direct_sum == 1);

  // n = 1: R_0 = 3 but R_5 - 1 = 4.
  CHECK(perrin.rows[0].direct_sum == 3);
  CHECK(perrin.rows[0].published == 4);

  CHECK_THROWS_AS(audit_published_identity(SequenceId::custom(builtin_spec(Builtin::Pell)), 5), Error);
  CHECK_THROWS_AS(audit_published_identity(Builtin::Pell, 0), Error);
}

TEST_CASE("RecurrenceSpec validation") {
  CHECK_THROWS_AS(RecurrenceSpec({}, {}), Error);
  CHECK_THROWS_AS(RecurrenceSpec({b(1), b(1)}, {b(0)}), Error);
  // Negative values are legal at this layer.
  const RecurrenceSpec alternating({b(-1)}, {b(5)});
  CHECK(term(SequenceId::custom(alternating), 3) == -5);
}

TEST_CASE("property: recurrence consistency") {
  std::mt19937_64 rng(20240601);
  std::vector<SequenceId> ids(std::begin(kAllBuiltins), std::end(kAllBuiltins));
  std::uniform_int_distribution<int> order(1, 4);
  std::uniform_int_distribution<long> coef(-3, 3);
  std::uniform_int_distribution<long> init(-20, 20);
  for (int i = 0; i < 12; ++i) {
    const int k = order(rng);
    std::vector<BigInt> c, t;
    for (int j = 0; j < k; ++j) {
      c.emplace_back(coef(rng));
      t.emplace_back(init(rng));
    }
    ids.push_back(SequenceId::custom(RecurrenceSpec(std::move(c), std::move(t))));
  }

  for (const auto& id : ids) {
    const auto spec = id.spec();
    const std::size_t k = spec.order();
    const auto terms = prefix(id, 501);
    for (std::size_t n = k; n <= 500; ++n) {
      // Regenerate t_n from the window t_{n-k} .. t_{n-1} by hand.
      BigInt next = 0;
      for (std::size_t i = 0; i < k; ++i) next += spec.coefficients()[i] * terms[n - 1 - i];
      REQUIRE(next == terms[n]);
    }
    CHECK(term(id, 500) == terms[500]);
    CHECK(term(id, 123) == terms[123]);
  }
}

TEST_CASE("property: closed forms equal direct sums for n <= 200") {
  for (Builtin s : kAllBuiltins) {
    CAPTURE(to_string(s));
    for (std::size_t n = 1; n <= 200; ++n) {
      REQUIRE(closed_form_sum(s, n) == prefix_sum(s, n));
    }
  }
}

TEST_CASE("property: Lucas sum in Fibonacci form equals L_{n+1} - 1") {
  for (std::size_t n = 1; n <= 200; ++n) {
    REQUIRE(term(Builtin::Fibonacci, n + 2) + term(Builtin::Fibonacci, n) - 1 ==
            term(Builtin::Lucas, n + 1) - 1);
  }
}

TEST_CASE("property: Pell numerator is even") {
  const auto p = prefix(Builtin::Pell, 201);
  for (std::size_t n = 1; n <= 200; ++n) {
    const BigInt numerator = p[n] + p[n - 1] - 1;
    REQUIRE(mpz_even_p(numerator.get_mpz_t()));
  }
}

TEST_CASE("property: prefix extends") {
  for (Builtin s : kAllBuiltins) {
    for (std::size_t n = 1; n <= 100; ++n) {
      const auto shorter = prefix(s, n);
      const auto longer = prefix(s, n + 1);
      REQUIRE(std::equal(shorter.begin(), shorter.end(), longer.begin()));
    }
  }
}

TEST_CASE("bigint helpers") {
  CHECK(parse_decimal("-42") == -42);
  CHECK(parse_decimal("+7") == 7);
  CHECK_THROWS_AS(parse_decimal("4x"), Error);
  CHECK_THROWS_AS(parse_decimal("-"), Error);
  CHECK(fits_below_pow2(BigInt(0), 0));
  CHECK(fits_below_pow2((BigInt(1) << 53) - 1, 53));
  CHECK_FALSE(fits_below_pow2(BigInt(1) << 53, 53));
  // 2^53 + 1 rounds to even (2^53), not truncated.
  CHECK(to_double_rounded((BigInt(1) << 53) + 1) == 9007199254740992.0);
  CHECK(to_double_rounded((BigInt(1) << 60) - 1) == std::ldexp(1.0, 60));
}
