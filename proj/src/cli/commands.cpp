#include "circnorm/cli/commands.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <optional>
#include <sstream>

#include "circnorm/circulant.hpp"

namespace circnorm::cli {

namespace {

using nlohmann::json;

json decimal_list(std::span<const BigInt> xs) {
  json out = json::array();
  for (const auto& x : xs) out.push_back(to_decimal(x));
  return out;
}

// Non-finite doubles have no JSON spelling.
json number_or_null(double x) { return std::isfinite(x) ? json(x) : json(nullptr); }

json method_json(const MethodResult& r) {
  json j{{"method", to_string(r.method)},
         {"computed", r.computed},
         {"value", r.computed ? number_or_null(r.value) : json(nullptr)},
         {"note", r.note}};
  if (r.exact_value) j["exact_value"] = to_decimal(*r.exact_value);
  if (r.power) {
    j["iterations"] = r.power->iterations;
    j["residual"] = number_or_null(r.power->residual);
    j["converged"] = r.power->converged;
  }
  return j;
}

json report_json(const NormReport& report) {
  json methods = json::array();
  for (const auto& r : report.methods) methods.push_back(method_json(r));
  return json{{"order", report.order},
              {"rel_tol", report.rel_tol},
              {"methods", methods},
              {"max_pairwise_relative_gap", number_or_null(report.max_pairwise_relative_gap)},
              {"agrees", report.agrees}};
}

std::string join_methods(const NormReport& report) {
  std::string out;
  for (const auto& r : report.methods) {
    if (!r.computed) continue;
    if (!out.empty()) out += '+';
    out += to_string(r.method);
  }
  return out;
}

std::string csv_cell(const json& j) {
  if (j.is_null()) return "";
  if (j.is_string()) return j.get<std::string>();
  if (j.is_boolean()) return j.get<bool>() ? "true" : "false";
  return j.dump();
}

}  // namespace

std::string closed_form_text(Builtin b) {
  switch (b) {
    case Builtin::Fibonacci: return "F_{n+1} - 1";
    case Builtin::Lucas: return "F_{n+2} + F_n - 1";
    case Builtin::Pell: return "(P_n + P_{n-1} - 1) / 2";
    case Builtin::Perrin: return "R_{n+4} - 2";
  }
  return "";
}

std::string published_form_text(Builtin b) {
  return b == Builtin::Perrin ? "R_{n+4} - 1" : closed_form_text(b);
}

OutputRecord cmd_seq(const SequenceId& id, std::size_t n, bool with_sum, Parameters params) {
  const auto terms = prefix(id, n);
  json results{{"sequence", id.name()}, {"n", n}, {"terms", decimal_list(terms)}};
  if (with_sum) {
    BigInt direct = 0;
    for (const auto& t : terms) direct += t;
    results["prefix_sum"] = to_decimal(direct);
    if (id.is_builtin()) {
      const BigInt closed = closed_form_sum(id, n);
      results["closed_form"] = closed_form_text(*id.builtin());
      results["closed_form_sum"] = to_decimal(closed);
      results["closed_form_matches"] = closed == direct;
    } else {
      results["closed_form"] = nullptr;
      results["closed_form_sum"] = nullptr;
      results["closed_form_matches"] = nullptr;
    }
  }
  return OutputRecord{"seq", std::move(params), std::move(results)};
}

OutputRecord cmd_norm(const SequenceId& id, std::size_t n, std::span<const Method> methods,
                      double rel_tol, Parameters params) {
  const CirculantMatrix c = from_sequence(id, n);
  const NormReport report = compare_methods(c, rel_tol, methods);
  json results = report_json(report);
  results["sequence"] = id.name();
  results["n"] = n;
  return OutputRecord{"norm", std::move(params), std::move(results)};
}

VerifyOutcome cmd_verify(std::span<const SequenceId> ids, std::size_t n_max, double rel_tol,
                         Parameters params, const ClosedFormFn& closed_form) {
  if (n_max == 0) throw Error(ErrorKind::InvalidArgument, "--n-max must be at least 1");
  json sequences = json::array();
  json failures = json::array();

  for (const auto& id : ids) {
    const auto terms = prefix(id, n_max);
    const auto builtin = id.builtin();
    std::optional<IdentityAudit> audit;
    if (builtin) audit = audit_published_identity(id, n_max);

    std::size_t closed_matches = 0;
    std::size_t published_matches = 0;
    std::size_t agreements = 0;
    std::size_t witnesses = 0;
    json rows = json::array();

    for (std::size_t n = 1; n <= n_max; ++n) {
      const CirculantMatrix c(std::vector<BigInt>(terms.begin(), terms.begin() + n));
      const BigInt& direct = c.row_sum();
      json row{{"n", n}, {"direct_sum", to_decimal(direct)}};

      if (builtin) {
        const auto& audit_row = audit->rows[n - 1];
        const BigInt closed = closed_form(id, n);
        const bool closed_ok = closed == direct;
        const bool published_ok = audit_row.match && audit_row.direct_sum == direct;
        closed_matches += closed_ok;
        published_matches += published_ok;
        row["closed_form"] = to_decimal(closed);
        row["published_form"] = to_decimal(audit_row.published);
        row["closed_form_match"] = closed_ok;
        row["published_form_match"] = published_ok;
        if (!closed_ok) {
          failures.push_back(id.name() + " n=" + std::to_string(n) + ": closed form " +
                             to_decimal(closed) + " != direct sum " + to_decimal(direct));
        }
      } else {
        row["closed_form"] = nullptr;
        row["published_form"] = nullptr;
        row["closed_form_match"] = nullptr;
        row["published_form_match"] = nullptr;
      }

      const NormReport report = compare_methods(c, rel_tol);
      agreements += report.agrees;
      witnesses += report.computed_count() >= 2;
      row["methods"] = join_methods(report);
      row["max_pairwise_relative_gap"] = number_or_null(report.max_pairwise_relative_gap);
      row["agrees"] = report.agrees;
      if (!report.agrees) {
        std::ostringstream msg;
        msg << id.name() << " n=" << n << ": norm methods disagree (gap "
            << report.max_pairwise_relative_gap << " > " << rel_tol << ")";
        failures.push_back(msg.str());
      }
      rows.push_back(std::move(row));
    }

    json findings = json::array();
    json identity;
    if (builtin) {
      identity = json{{"applicable", true},
                       {"checked", n_max},
                       {"closed_form", closed_form_text(*builtin)},
                       {"closed_form_matches", closed_matches},
                       {"published_form", published_form_text(*builtin)},
                       {"published_form_matches", published_matches}};
      if (published_matches != n_max) {
        findings.push_back("published identity " + published_form_text(*builtin) + " matched " +
                           std::to_string(published_matches) + " of " + std::to_string(n_max) +
                           " direct sums; shipped closed form " + closed_form_text(*builtin) +
                           " matched " + std::to_string(closed_matches) + " of " +
                           std::to_string(n_max));
      }
    } else {
      identity = json{{"applicable", false}};
    }

    sequences.push_back(json{{"sequence", id.name()},
                             {"n_max", n_max},
                             {"identity", identity},
                             {"norm",
                              {{"checks", n_max},
                               {"agreements", agreements},
                               {"numerical_witnesses", witnesses}}},
                             {"findings", findings},
                             {"rows", rows}});
  }

  const bool passed = failures.empty();
  json results{{"rel_tol", rel_tol},
               {"passed", passed},
               {"failures", failures},
               {"sequences", sequences}};
  return VerifyOutcome{OutputRecord{"verify", std::move(params), std::move(results)},
                       passed ? kExitOk : kExitFailure};
}

OutputRecord cmd_bench(const SequenceId& id, std::span<const std::size_t> n_list,
                       std::size_t repetitions, double rel_tol, Parameters params) {
  if (repetitions == 0) throw Error(ErrorKind::InvalidArgument, "--reps must be at least 1");
  using clock = std::chrono::steady_clock;

  json rows = json::array();
  for (std::size_t n : n_list) {
    const CirculantMatrix c = from_sequence(id, n);
    json methods = json::array();
    std::vector<double> values;

    for (Method m : kAllMethods) {
      const bool fits = m == Method::Sum   ? true
                        : m == Method::Dft ? c.entries_below_pow2(kExactDoubleBits)
                                           : c.entries_below_pow2(kGramEntryBits);
      if (!fits) {
        methods.push_back(json{{"method", to_string(m)},
                               {"status", "skipped"},
                               {"median_seconds", nullptr},
                               {"value", nullptr}});
        continue;
      }
      std::vector<double> seconds;
      double value = 0.0;
      for (std::size_t rep = 0; rep < repetitions; ++rep) {
        const auto start = clock::now();
        switch (m) {
          case Method::Sum: value = to_double_rounded(spectral_norm_sum(c)); break;
          case Method::Dft: value = spectral_norm_dft(c); break;
          case Method::Power: value = spectral_norm_power(c, std::max(rel_tol / 100.0, 1e-14)).value; break;
        }
        seconds.push_back(std::chrono::duration<double>(clock::now() - start).count());
      }
      std::sort(seconds.begin(), seconds.end());
      const std::size_t mid = seconds.size() / 2;
      const double median =
          seconds.size() % 2 ? seconds[mid] : 0.5 * (seconds[mid - 1] + seconds[mid]);
      values.push_back(value);
      methods.push_back(json{{"method", to_string(m)},
                             {"status", "ok"},
                             {"median_seconds", median},
                             {"value", number_or_null(value)}});
    }

    double gap = 0.0;
    for (std::size_t a = 0; a < values.size(); ++a)
      for (std::size_t b = a + 1; b < values.size(); ++b)
        gap = std::max(gap, relative_gap(values[a], values[b]));
    rows.push_back(json{{"n", n},
                        {"methods", methods},
                        {"max_pairwise_relative_gap", gap},
                        {"agrees", gap <= rel_tol}});
  }

  json results{{"sequence", id.name()},
               {"repetitions", repetitions},
               {"rel_tol", rel_tol},
               {"rows", rows}};
  return OutputRecord{"bench", std::move(params), std::move(results)};
}

OutputRecord error_record(const std::string& command, Parameters params, const Error& error) {
  json results{{"error", {{"kind", to_string(error.kind())}, {"message", error.what()}}}};
  return OutputRecord{command, std::move(params), std::move(results)};
}

std::string to_csv(const OutputRecord& record) {
  std::ostringstream out;
  if (record.command == "verify") {
    out << "sequence,n,direct_sum,closed_form,published_form,closed_form_match,"
           "published_form_match,methods,max_pairwise_relative_gap,agrees\n";
    for (const auto& seq : record.results.at("sequences")) {
      for (const auto& row : seq.at("rows")) {
        out << csv_cell(seq.at("sequence")) << ',' << csv_cell(row.at("n")) << ','
            << csv_cell(row.at("direct_sum")) << ',' << csv_cell(row.at("closed_form")) << ','
            << csv_cell(row.at("published_form")) << ','
            << csv_cell(row.at("closed_form_match")) << ','
            << csv_cell(row.at("published_form_match")) << ',' << csv_cell(row.at("methods"))
            << ',' << csv_cell(row.at("max_pairwise_relative_gap")) << ','
            << csv_cell(row.at("agrees")) << '\n';
      }
    }
    return out.str();
  }
  if (record.command == "bench") {
    out << "sequence,n,method,status,median_seconds,value,agrees\n";
    for (const auto& row : record.results.at("rows")) {
      for (const auto& m : row.at("methods")) {
        out << csv_cell(record.results.at("sequence")) << ',' << csv_cell(row.at("n")) << ','
            << csv_cell(m.at("method")) << ',' << csv_cell(m.at("status")) << ','
            << csv_cell(m.at("median_seconds")) << ',' << csv_cell(m.at("value")) << ','
            << csv_cell(row.at("agrees")) << '\n';
      }
    }
    return out.str();
  }
  throw Error(ErrorKind::InvalidArgument, "no CSV table for command '" + record.command + "'");
}

}  // namespace circnorm::cli
