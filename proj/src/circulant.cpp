#include "circnorm/circulant.hpp"

#include <fftw3.h>

#include <algorithm>
#include <cmath>
#include <memory>
#include <mutex>
#include <string>

#include "circnorm/errors.hpp"
#include "circnorm/kernels.hpp"

namespace circnorm {

namespace {

using Complex = std::complex<double>;

// FFTW's planner is not reentrant; execution of distinct plans is.
std::mutex& planner_mutex() {
  static std::mutex m;
  return m;
}

struct PlanDeleter {
  void operator()(fftw_plan p) const {
    std::lock_guard lock(planner_mutex());
    fftw_destroy_plan(p);
  }
};
using Plan = std::unique_ptr<std::remove_pointer_t<fftw_plan>, PlanDeleter>;

/// In-place unnormalized transform, exponent sign `sign` (+1 or -1).
void transform(std::vector<Complex>& data, int sign) {
  if (data.size() <= 1) return;
  auto* buf = reinterpret_cast<fftw_complex*>(data.data());
  Plan plan;
  {
    std::lock_guard lock(planner_mutex());
    plan.reset(fftw_plan_dft_1d(static_cast<int>(data.size()), buf, buf,
                                sign > 0 ? FFTW_BACKWARD : FFTW_FORWARD, FFTW_ESTIMATE));
  }
  if (!plan) throw Error(ErrorKind::InvalidArgument, "FFT plan creation failed");
  fftw_execute(plan.get());
}

std::vector<Complex> to_complex(std::span<const double> x) {
  return {x.begin(), x.end()};
}

}  // namespace

IntMatrix::IntMatrix(std::size_t n, std::vector<BigInt> data) : n_(n), data_(std::move(data)) {
  if (data_.size() != n_ * n_) {
    throw Error(ErrorKind::DimensionMismatch, "IntMatrix: data size is not n*n");
  }
}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows)
    : n_(rows.size()) {
  data_.reserve(n_ * n_);
  for (const auto& row : rows) {
    if (row.size() != n_) throw Error(ErrorKind::DimensionMismatch, "IntMatrix: ragged rows");
    for (long x : row) data_.emplace_back(x);
  }
}

IntMatrix transpose_times(const IntMatrix& m) {
  return IntMatrix(m.order(), kernels::gram_tn(m.data(), m.order()));
}

IntMatrix times_transpose(const IntMatrix& m) {
  return IntMatrix(m.order(), kernels::gram_nt(m.data(), m.order()));
}

bool is_normal(const IntMatrix& m) { return transpose_times(m) == times_transpose(m); }

CirculantMatrix::CirculantMatrix(std::vector<BigInt> first_row) : row_(std::move(first_row)) {
  if (row_.empty()) throw Error(ErrorKind::InvalidArgument, "circulant order must be >= 1");
  sum_ = 0;
  for (std::size_t j = 0; j < row_.size(); ++j) {
    if (sgn(row_[j]) < 0) {
      throw Error(ErrorKind::NegativeEntry,
                  "circulant entry c_" + std::to_string(j) + " = " + to_decimal(row_[j]) +
                      " is negative");
    }
    sum_ += row_[j];
    if (sgn(row_[j]) != 0) {
      max_bits_ = std::max(max_bits_, mpz_sizeinbase(row_[j].get_mpz_t(), 2));
    }
  }
}

std::vector<double> CirculantMatrix::first_row_as_double() const {
  if (!entries_below_pow2(kExactDoubleBits)) {
    throw Error(ErrorKind::PrecisionLoss,
                "entry of " + std::to_string(max_bits_) +
                    " bits does not convert exactly to double (limit 2^53)");
  }
  std::vector<double> out;
  out.reserve(row_.size());
  for (const auto& c : row_) out.push_back(c.get_d());
  return out;
}

double Spectrum::max_modulus() const {
  double best = 0.0;
  for (const auto& z : values) best = std::max(best, std::abs(z));
  return best;
}

std::vector<std::size_t> Spectrum::argmax_modulus(double rel) const {
  const double best = max_modulus();
  std::vector<std::size_t> ks;
  for (std::size_t k = 0; k < values.size(); ++k) {
    if (std::abs(values[k]) >= best * (1.0 - rel)) ks.push_back(k);
  }
  return ks;
}

CirculantMatrix from_sequence(const SequenceId& id, std::size_t n) {
  return CirculantMatrix(prefix(id, n));
}

IntMatrix to_dense(const CirculantMatrix& c) {
  const std::size_t n = c.order();
  IntMatrix d(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) d(i, j) = c.entry(i, j);
  return d;
}

std::vector<BigInt> matvec_naive(const CirculantMatrix& c, std::span<const BigInt> v) {
  return kernels::circulant_matvec(c.first_row(), v);
}

std::vector<double> matvec_fft(const CirculantMatrix& c, std::span<const double> v) {
  const std::size_t n = c.order();
  if (v.size() != n) {
    throw Error(ErrorKind::DimensionMismatch,
                "matvec_fft: vector length " + std::to_string(v.size()) +
                    " does not match order " + std::to_string(n));
  }
  constexpr double kLimit = 9007199254740992.0;  // 2^53
  for (double x : v) {
    if (!(std::abs(x) < kLimit)) {
      throw Error(ErrorKind::PrecisionLoss, "matvec_fft: vector entry outside (-2^53, 2^53)");
    }
  }
  // (Cv)_i = sum_m c_m v_{i+m}, a cross-correlation: forward(Cv) = lambda .* forward(v).
  std::vector<Complex> lambda = to_complex(c.first_row_as_double());
  transform(lambda, +1);
  std::vector<Complex> vhat = to_complex(v);
  transform(vhat, -1);
  for (std::size_t k = 0; k < n; ++k) vhat[k] *= lambda[k];
  transform(vhat, +1);

  std::vector<double> y(n);
  const double scale = 1.0 / static_cast<double>(n);
  for (std::size_t i = 0; i < n; ++i) y[i] = vhat[i].real() * scale;
  return y;
}

Spectrum eigenvalues_dft(const CirculantMatrix& c) {
  std::vector<Complex> values = to_complex(c.first_row_as_double());
  transform(values, +1);
  return Spectrum{std::move(values)};
}

Spectrum eigenvalues_direct(const CirculantMatrix& c) {
  return Spectrum{kernels::direct_dft(c.first_row_as_double(), +1)};
}

std::vector<double> first_row_from_spectrum(const Spectrum& s) {
  std::vector<Complex> data = s.values;
  transform(data, -1);
  std::vector<double> row(data.size());
  const double scale = 1.0 / static_cast<double>(data.size());
  for (std::size_t j = 0; j < data.size(); ++j) row[j] = data[j].real() * scale;
  return row;
}

std::vector<BigInt> all_ones_eigencheck(const CirculantMatrix& c) {
  const std::vector<BigInt> ones(c.order(), BigInt(1));
  auto residual = matvec_naive(c, ones);
  for (auto& r : residual) r -= c.row_sum();
  return residual;
}

}  // namespace circnorm
