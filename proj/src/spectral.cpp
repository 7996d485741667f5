#include "circnorm/spectral.hpp"

#include <algorithm>
#include <cmath>

#include "circnorm/errors.hpp"
#include "circnorm/kernels.hpp"

namespace circnorm {

namespace {

double dot(std::span<const double> a, std::span<const double> b) {
  double acc = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) acc += a[i] * b[i];
  return acc;
}

double norm2(std::span<const double> a) { return std::sqrt(dot(a, a)); }

std::vector<double> dense_gram(const CirculantMatrix& c) {
  if (!c.entries_below_pow2(kGramEntryBits)) {
    throw Error(ErrorKind::PrecisionLoss,
                "power method needs entries below 2^26 (largest has " +
                    std::to_string(c.max_entry_bits()) + " bits)");
  }
  const std::size_t n = c.order();
  std::vector<std::int64_t> dense(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) dense[i * n + j] = c.entry(i, j).get_si();
  return kernels::gram_tn_rounded(dense, n);
}

}  // namespace

std::string_view to_string(Method m) noexcept {
  switch (m) {
    case Method::Sum: return "sum";
    case Method::Dft: return "dft";
    case Method::Power: return "power";
  }
  return "unknown";
}

Method parse_method(std::string_view name) {
  for (Method m : kAllMethods) {
    if (to_string(m) == name) return m;
  }
  throw Error(ErrorKind::InvalidArgument, "unknown method '" + std::string(name) + "'");
}

std::size_t default_max_iter(std::size_t n) noexcept { return 50 * n + 1000; }

BigInt spectral_norm_sum(const CirculantMatrix& c) {
  BigInt total = 0;
  for (const auto& x : c.first_row()) total += x;
  return total;
}

double spectral_norm_dft(const CirculantMatrix& c) { return eigenvalues_dft(c).max_modulus(); }

double spectral_radius(const CirculantMatrix& c) { return eigenvalues_dft(c).max_modulus(); }

std::vector<double> power_seed(std::size_t n) {
  // Positive, so it overlaps the Perron vector of the nonnegative Gram
  // matrix; non-constant, so it is not already an eigenvector of a circulant.
  std::vector<double> v(n);
  for (std::size_t i = 0; i < n; ++i) {
    const std::uint64_t h = (static_cast<std::uint64_t>(i) + 1) * 0x9E3779B97F4A7C15ull;
    v[i] = 1.0 + static_cast<double>(h >> 54) / 2048.0;
  }
  return v;
}

PowerResult spectral_norm_power(const CirculantMatrix& c, double rel_tol, std::size_t max_iter) {
  if (!(rel_tol > 0.0)) throw Error(ErrorKind::InvalidArgument, "rel_tol must be positive");
  if (max_iter == 0) throw Error(ErrorKind::InvalidArgument, "max_iter must be at least 1");

  const std::vector<double> gram = dense_gram(c);
  std::vector<double> v = power_seed(c.order());
  const double v_norm = norm2(v);
  for (auto& x : v) x /= v_norm;

  PowerResult result;
  double previous = 0.0;
  for (std::size_t it = 1; it <= max_iter; ++it) {
    std::vector<double> w = kernels::matvec(gram, v);
    const double theta = dot(v, w);
    result.iterations = it;
    if (theta <= 0.0) {
      // v > 0 and A >= 0, so v^T A^T A v = 0 only for the zero matrix.
      result.value = 0.0;
      result.residual = 0.0;
      result.converged = true;
      return result;
    }
    std::vector<double> r(w);
    for (std::size_t i = 0; i < r.size(); ++i) r[i] -= theta * v[i];
    result.residual = norm2(r) / theta;
    result.value = std::sqrt(theta);

    const bool stalled = it > 1 && std::abs(theta - previous) <= rel_tol * theta;
    if (stalled && result.residual <= 10.0 * rel_tol) {
      result.converged = true;
      return result;
    }
    previous = theta;
    const double w_norm = norm2(w);
    for (std::size_t i = 0; i < w.size(); ++i) v[i] = w[i] / w_norm;
  }
  return result;
}

PowerResult spectral_norm_power(const CirculantMatrix& c, double rel_tol) {
  return spectral_norm_power(c, rel_tol, default_max_iter(c.order()));
}

double relative_gap(double a, double b) noexcept {
  return std::abs(a - b) / std::max({std::abs(a), std::abs(b), 1.0});
}

const MethodResult* NormReport::find(Method m) const {
  for (const auto& r : methods) {
    if (r.method == m) return &r;
  }
  return nullptr;
}

std::size_t NormReport::computed_count() const {
  return static_cast<std::size_t>(
      std::count_if(methods.begin(), methods.end(), [](const auto& r) { return r.computed; }));
}

NormReport compare_methods(const CirculantMatrix& c, double rel_tol, std::span<const Method> methods) {
  NormReport report;
  report.order = c.order();
  report.rel_tol = rel_tol;

  for (Method m : kAllMethods) {
    if (std::find(methods.begin(), methods.end(), m) == methods.end()) continue;
    MethodResult r;
    r.method = m;
    try {
      switch (m) {
        case Method::Sum: {
          BigInt exact = spectral_norm_sum(c);
          r.value = to_double_rounded(exact);
          r.exact_value = std::move(exact);
          r.computed = true;
          break;
        }
        case Method::Dft:
          if (!c.entries_below_pow2(kExactDoubleBits)) {
            r.note = "skipped: entries exceed 2^53";
            break;
          }
          r.value = spectral_norm_dft(c);
          r.computed = true;
          break;
        case Method::Power: {
          if (!c.entries_below_pow2(kGramEntryBits)) {
            r.note = "skipped: entries exceed 2^26";
            break;
          }
          // Converge well inside the agreement tolerance.
          const double inner_tol = std::max(rel_tol / 100.0, 1e-14);
          PowerResult p = spectral_norm_power(c, inner_tol);
          r.value = p.value;
          r.computed = true;
          if (!p.converged) {
            r.note = "no convergence after " + std::to_string(p.iterations) + " iterations";
          }
          r.power = p;
          break;
        }
      }
    } catch (const Error& e) {
      r.computed = false;
      r.note = std::string(to_string(e.kind())) + ": " + e.what();
    }
    report.methods.push_back(std::move(r));
  }

  double gap = 0.0;
  for (std::size_t a = 0; a < report.methods.size(); ++a) {
    for (std::size_t b = a + 1; b < report.methods.size(); ++b) {
      const auto& x = report.methods[a];
      const auto& y = report.methods[b];
      if (x.computed && y.computed) gap = std::max(gap, relative_gap(x.value, y.value));
    }
  }
  report.max_pairwise_relative_gap = gap;
  report.agrees = gap <= rel_tol;
  return report;
}

}  // namespace circnorm
