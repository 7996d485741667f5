#pragma once

// Spectral norm of a nonnegative circulant by three independent routes:
//
//   sum    exact sum of the first row (the closed-form result),
//   dft    max |lambda_k| of the DFT spectrum (circulants are normal, so the
//          norm equals the spectral radius),
//   power  sqrt of the dominant eigenvalue of the dense Gram matrix A^T A,
//          straight from the definition of the 2-norm.

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "circnorm/circulant.hpp"

namespace circnorm {

enum class Method { Sum, Dft, Power };

inline constexpr Method kAllMethods[] = {Method::Sum, Method::Dft, Method::Power};

std::string_view to_string(Method m) noexcept;
/// Accepts "sum", "dft", "power"; throws InvalidArgument otherwise.
Method parse_method(std::string_view name);

inline constexpr double kDefaultRelTol = 1e-8;

/// 50 n + 1000.
std::size_t default_max_iter(std::size_t n) noexcept;

struct PowerResult {
  double value = 0.0;
  std::size_t iterations = 0;
  /// ||G v - theta v|| / theta at the last iterate.
  double residual = 0.0;
  bool converged = false;
};

/// Exact sum of entries.
BigInt spectral_norm_sum(const CirculantMatrix& c);

/// max_k |lambda_k| from eigenvalues_dft. PrecisionLoss beyond 2^53.
double spectral_norm_dft(const CirculantMatrix& c);

/// Power iteration on G = A^T A from a fixed positive seed. Stops once the
/// Rayleigh quotient's relative change is below rel_tol and the relative
/// residual is below 10 * rel_tol. Hitting max_iter returns the last
/// estimate with converged = false.
/// PrecisionLoss when an entry reaches 2^26; InvalidArgument for
/// rel_tol <= 0 or max_iter == 0.
PowerResult spectral_norm_power(const CirculantMatrix& c, double rel_tol,
                                std::size_t max_iter);
PowerResult spectral_norm_power(const CirculantMatrix& c, double rel_tol = kDefaultRelTol);

/// max_k |lambda_k|; the same number as spectral_norm_dft.
double spectral_radius(const CirculantMatrix& c);

/// Deterministic strictly positive start vector used by spectral_norm_power.
std::vector<double> power_seed(std::size_t n);

struct MethodResult {
  Method method = Method::Sum;
  bool computed = false;
  double value = 0.0;
  std::optional<BigInt> exact_value;   // sum only
  std::optional<PowerResult> power;    // power only
  std::string note;                    // why skipped, or convergence warning
};

struct NormReport {
  std::size_t order = 0;
  double rel_tol = kDefaultRelTol;
  std::vector<MethodResult> methods;
  /// Max over computed pairs of |a - b| / max(|a|, |b|, 1).
  double max_pairwise_relative_gap = 0.0;
  bool agrees = true;

  const MethodResult* find(Method m) const;
  std::size_t computed_count() const;
};

/// Runs the requested methods that fit their entry guards (dft: 2^53,
/// power: 2^26); others are kept in the report with computed = false.
/// Never throws for per-method failures.
NormReport compare_methods(const CirculantMatrix& c, double rel_tol = kDefaultRelTol,
                           std::span<const Method> methods = kAllMethods);

/// Pairwise gap as used by NormReport.
double relative_gap(double a, double b) noexcept;

}  // namespace circnorm
